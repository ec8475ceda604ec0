//! Reading and writing the text formats.

use omega_recognition::format::{parse_automaton, parse_recognizer, write_automaton, RecognizerFile};

const AUTOMATON: &str = "\
# infinitely many b
automaton 2
alphabet a b
initial 0
final 1
trans 0 a 0
trans 0 b 1
trans 1 a 0
trans 1 b 1
";

const RECOGNIZER: &str = "\
morphism
alphabet a b
letter a 0
letter b 1
semigroup 2
0 0
1 1
names a b
accept-weak 0 0
accept-weak 1 1
";

pub fn run_example() -> omega_recognition::Result<()> {
    let ba = parse_automaton(AUTOMATON)?;
    print!("{}", write_automaton(&ba));
    let no_refs = |p: &str| Err(omega_recognition::Error::InvalidParameter(format!("no file {p}")));
    if let RecognizerFile::Weak(rec) = parse_recognizer(RECOGNIZER, no_refs)? {
        println!("weak recognizer with {} accepted pairs", rec.accepting().len());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
