//! Membership of ultimately periodic words in a Büchi automaton, its weak
//! recognizer and its strong recognizer.

use omega_recognition::conversions::{ba_to_strong, ba_to_weak};
use omega_recognition::{Alphabet, BuchiAutomaton};

pub fn run_example() -> omega_recognition::Result<()> {
    // infinitely many b: 0 -a-> 0, 0 -b-> 1, 1 -a-> 0, 1 -b-> 1, F = {1}
    let al = Alphabet::from_chars("ab")?;
    let ba = BuchiAutomaton::new(2, al.clone(), [(0, 0, 0), (0, 1, 1), (1, 0, 0), (1, 1, 1)], [0], [1])?;
    let weak = ba_to_weak(&ba)?;
    let strong = ba_to_strong(&ba)?;
    println!("weak recognizer: {} elements", weak.morphism().target().size());
    println!("strong recognizer: {} elements", strong.morphism().target().size());

    for (u, v) in [("-", "ab"), ("bbb", "a"), ("a", "aab"), ("ab", "ba")] {
        let w = al.parse_up_word(u, v)?;
        let (x, y, z) = (ba.accepts_up(&w), weak.contains(&w), strong.contains(&w));
        assert!(x == y && y == z);
        println!("{}  {x}", w.display(&al));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
