//! The full automaton on two states: its transition semigroup, the
//! syntactic semigroup of its finite-word language, and the transfer of
//! that size to every weak recognizer of its Büchi language.

use omega_recognition::bounds::{full_automaton_certificate, prop4_transfer};
use omega_recognition::conversions::{nfa_to_recognizer, transition_semigroup};

pub fn run_example() -> omega_recognition::Result<()> {
    let (full, cert) = full_automaton_certificate(2)?;
    println!("letters {}", full.alphabet().len());
    println!("transition semigroup {}", transition_semigroup(&full, false)?.size());
    let (synt, _) = nfa_to_recognizer(&full)?.syntactic_quotient();
    println!("syntactic semigroup {}", synt.morphism().target().size());

    // the diagonal letter loops on every state and enters F only by a loop
    let diagonal = 0b1001;
    let (holds, bound) = prop4_transfer(&full, diagonal)?;
    println!("transfer via {}: {holds} {bound:?}", full.alphabet().letter(diagonal));

    assert!(cert.verify(&full)?);
    println!("certified {} pairwise distinct letters; first pairs:", cert.claimed_bound);
    for line in cert.to_text(full.alphabet()).lines().take(5) {
        println!("  {line}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
