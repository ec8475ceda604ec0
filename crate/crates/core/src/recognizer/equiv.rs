use super::StrongRecognizer;
use crate::error::{Error, Result};
use crate::semigroup::{generate_subsemigroup, DEFAULT_CLOSURE_CAP};
use crate::word::UpWord;

/// Product construction over the paired letter images. Both recognizers are
/// saturated, so membership is constant on every class of a product linked
/// pair and one witness word per class decides equality.
pub(super) fn distinguishing_word(a: &StrongRecognizer, b: &StrongRecognizer) -> Result<Option<UpWord>> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let (ha, hb) = (a.morphism(), b.morphism());
    let (sa, sb) = (ha.target(), hb.target());
    let gens: Vec<(usize, usize)> = (0..a.alphabet().len())
        .map(|l| (ha.letter_image(l), hb.letter_image(l)))
        .collect();
    let product = generate_subsemigroup(
        &gens,
        |x, y| (sa.mul(x.0, y.0), sb.mul(x.1, y.1)),
        DEFAULT_CLOSURE_CAP,
    )?;
    let psg = &product.semigroup;
    for pair in psg.linked_pairs() {
        // generator k is letter k
        let w = UpWord::new(product.witness(pair.s), product.witness(pair.e))?;
        if a.contains(&w) != b.contains(&w) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}
