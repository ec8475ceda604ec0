//! Green's relations and Rees coordinates of a small rectangular band
//! extended by a cyclic group.

use omega_recognition::FiniteSemigroup;

pub fn run_example() -> omega_recognition::Result<()> {
    // (i, g, λ) with i, λ ∈ {0, 1} and g ∈ ℤ/3; (i, g, λ)(j, h, μ) = (i, g + h, μ)
    let enc = |i: usize, g: usize, l: usize| (i * 3 + g) * 2 + l;
    let dec = |x: usize| (x / 6, x / 2 % 3, x % 2);
    let sg = FiniteSemigroup::from_fn(12, |x, y| {
        let ((i, g, _), (_, h, m)) = (dec(x), dec(y));
        enc(i, (g + h) % 3, m)
    })?;

    let greens = sg.greens();
    println!("size {}", sg.size());
    println!("R-classes {:?}", greens.r_classes);
    println!("L-classes {:?}", greens.l_classes);
    println!("H-classes {:?}", greens.h_classes);
    println!("simple {}", sg.is_simple());

    let rees = sg.rees_structure()?;
    println!("base idempotent {}, group {:?}", rees.base_idempotent(), rees.group());
    for s in 0..sg.size() {
        let (r, g, l) = rees.pi_inv(s);
        assert_eq!(rees.pi(r, g, l), s);
    }
    // R_t · s keeps the group coordinate of s and moves it into the row of t
    let (t, s) = (enc(1, 0, 0), enc(0, 2, 1));
    println!("R_t·s for t={t}, s={s}: {}", rees.r_dot(t, s));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
