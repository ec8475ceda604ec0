//! Turning a weak recognizer into a strong one with split sets, then
//! minimizing it.

use omega_recognition::conversions::split_expansion;
use omega_recognition::{Alphabet, FiniteSemigroup, LinkedPair, Morphism, WeakRecognizer};

pub fn run_example() -> omega_recognition::Result<()> {
    // ℤ/2 with a ↦ 1, b ↦ 0, accepting (1, 0): infinitely many a, or an
    // odd finite number of them
    let sg = FiniteSemigroup::from_fn(2, |x, y| (x + y) % 2)?;
    let h = Morphism::new(Alphabet::from_chars("ab")?, sg, vec![1, 0])?;
    let rec = WeakRecognizer::new(h, [LinkedPair::new(1, 0)])?;

    let ex = split_expansion(&rec)?;
    println!("expansion has {} elements", ex.size());
    let g = ex.image(&[0, 1, 0])?;
    println!("g(aba) = ({}, {:?})", g.value, g.splits);

    let (q, _) = ex.recognizer.syntactic_quotient();
    println!("syntactic quotient {}", q.morphism().target().size());
    let al = rec.alphabet();
    for (u, v) in [("a", "b"), ("a", "ab"), ("b", "aab")] {
        let w = al.parse_up_word(u, v)?;
        assert_eq!(rec.contains(&w), q.contains(&w));
        println!("{} {}", w.display(al), q.contains(&w));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
