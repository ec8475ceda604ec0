//! The 4n+3 element recognizer of ⋃ (b aⁱ b A*)^ω, turned into a Büchi
//! automaton and compared with a hand-built one.

use omega_recognition::bounds::theorem8_recognizer;
use omega_recognition::buchi::thm8_reference_ba;
use omega_recognition::conversions::{ba_to_strong, weak_to_ba, weak_to_strong_general};
use omega_recognition::word::{words_up_to, UpWord};

pub fn run_example() -> omega_recognition::Result<()> {
    let n = 3;
    let rec = theorem8_recognizer(n)?;
    let sg = rec.morphism().target();
    let names: Vec<String> = (0..sg.size()).map(|s| sg.label(s)).collect();
    println!("semigroup {}: {}", sg.size(), names.join(" "));

    let ba = weak_to_ba(&rec);
    let reference = thm8_reference_ba(n)?;
    println!("constructed automaton {} states, reference {}", ba.states(), reference.states());

    // exact check on the recognizers, sampled check on the automata
    let direct = weak_to_strong_general(&rec)?;
    println!("same language: {}", direct.equivalent(&ba_to_strong(&reference)?)?);
    let short = words_up_to(2, 5);
    let mut agree = 0;
    for u in &short {
        for v in short.iter().filter(|v| !v.is_empty()) {
            let w = UpWord::new(u.clone(), v.clone())?;
            assert_eq!(ba.accepts_up(&w), reference.accepts_up(&w));
            agree += 1;
        }
    }
    println!("automata agree on {agree} sampled words");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
