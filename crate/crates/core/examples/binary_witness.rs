//! Over {a, b} the weak recognizers of a 5-state automaton still need
//! 2^((n-1)²/4) = 16 elements.

use omega_recognition::bounds::{prop4_transfer, thm6_certificate, Witness};
use omega_recognition::buchi::thm6_exponents;

pub fn run_example() -> omega_recognition::Result<()> {
    let n = 5;
    let (a, cert) = thm6_certificate(n)?;
    for (i, j) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        let (p, q) = thm6_exponents(n, i, j)?;
        println!("u_({i},{j}) = a^{p} b a^{q}");
    }
    println!("words {} pairs {}", cert.claimed_bound, cert.pairs.len());
    if let Witness::Kind1 { x, y, z } = &cert.pairs[0].witness {
        println!("first witness: x=a^{} y=a^{} z={}", x.len(), y.len(), a.alphabet().format_word(z));
    }
    let (holds, bound) = prop4_transfer(&a, 1)?;
    println!("transfer via b: {holds}, syntactic semigroup {}", bound.unwrap());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
