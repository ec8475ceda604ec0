//! Searching separating contexts for a list of words against any language.

use omega_recognition::bounds::certify_lower_bound;
use omega_recognition::{Alphabet, BuchiAutomaton};

pub fn run_example() -> omega_recognition::Result<()> {
    // finitely many a: 0 -a,b-> 0, 0 -b-> 1, 1 -b-> 1, F = {1}
    let al = Alphabet::from_chars("ab")?;
    let ba = BuchiAutomaton::new(2, al.clone(), [(0, 0, 0), (0, 1, 0), (0, 1, 1), (1, 1, 1)], [0], [1])?;
    let words: Vec<_> = ["a", "b"].iter().map(|w| al.parse_word(w)).collect::<Result<_, _>>()?;
    let cert = certify_lower_bound(&ba, &words, 2)?;
    print!("{}", cert.to_text(&al));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
