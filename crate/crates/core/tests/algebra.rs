mod common;

use common::suites;

fn check(outcome: suites::Outcome) {
    match outcome {
        Ok(summary) => println!("{summary}"),
        Err(e) => panic!("{e}"),
    }
}

#[test]
fn cancellation_in_simple_semigroups() {
    check(suites::simple_cancellation());
}

#[test]
fn r_dot_is_unique() {
    check(suites::r_dot_uniqueness());
}

#[test]
fn rees_expansion_tracks_factorizations() {
    check(suites::rees_factorizations());
}

#[test]
fn rees_structure_round_trips() {
    let mut r = common::rng(41);
    for _ in 0..100 {
        let sg = common::random_simple_semigroup(&mut r, 54);
        let rees = sg.rees_structure().unwrap();
        let g = rees.group().len();
        for s in 0..sg.size() {
            let (a, x, l) = rees.pi_inv(s);
            assert_eq!(rees.pi(a, x, l), s);
        }
        assert_eq!(rees.r_count() * g * rees.l_count(), sg.size());
    }
}

#[test]
fn non_simple_semigroups_have_no_rees_structure() {
    for sg in common::small_semigroups().iter().filter(|s| !s.is_simple()) {
        assert!(sg.rees_structure().is_err());
    }
}
