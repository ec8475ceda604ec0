//! Complementing "the first letter occurs infinitely often" through the
//! simple-semigroup expansion, and the matching n·2^(n-1) lower bound.

use omega_recognition::bounds::{leftzero_certificate, leftzero_recognizer};
use omega_recognition::conversions::rees_expansion;

pub fn run_example() -> omega_recognition::Result<()> {
    for n in 2..=4 {
        let rec = leftzero_recognizer(n)?;
        let ex = rees_expansion(&rec)?;
        let comp = ex.recognizer.complement();
        let al = rec.alphabet();
        let w = al.parse_up_word("a", "b")?;
        assert!(comp.contains(&w));
        let cert = leftzero_certificate(n, 2)?;
        println!(
            "n={n}: expansion {} (at most {}), lower bound {}",
            ex.size(),
            n << n,
            cert.claimed_bound
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
