use std::collections::BTreeSet;
use std::hash::Hash;

use crate::error::Result;
use crate::recognizer::{Morphism, StrongRecognizer, WeakRecognizer};
use crate::semigroup::{
    generate_subsemigroup, Closure, Element, FiniteSemigroup, LinkedPair, ReesStructure,
    DEFAULT_CLOSURE_CAP,
};
use crate::word::Letter;

/// A strong recognizer built on top of a weak one, together with the
/// concrete value of every element of its target.
#[derive(Debug, Clone)]
pub struct Expansion<T> {
    pub recognizer: StrongRecognizer,
    pub elements: Vec<T>,
}

impl<T> Expansion<T> {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    /// `g(w)` for a nonempty word.
    pub fn image(&self, w: &[Letter]) -> Result<&T> {
        Ok(&self.elements[self.recognizer.morphism().apply(w)?])
    }
}

/// `(h(u), {(h(p), h(q)) : u = pq, p, q ∈ A⁺})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SplitElement {
    pub value: Element,
    pub splits: BTreeSet<(Element, Element)>,
}

/// `(h(u), {R_{h(q)} · h(p) : u = pq, p, q ∈ A⁺})` over a simple semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReesElement {
    pub value: Element,
    pub set: BTreeSet<Element>,
}

fn build<T, M, A>(rec: &WeakRecognizer, letter: impl Fn(Element) -> T, mul: M, accept: A) -> Result<Expansion<T>>
where
    T: Clone + Eq + Hash,
    M: Fn(&T, &T) -> T,
    A: Fn(&T, &T) -> bool,
{
    let h = rec.morphism();
    let gens: Vec<T> = h.letter_images().iter().map(|&x| letter(x)).collect();
    let Closure { semigroup, elements, .. } = generate_subsemigroup(&gens, mul, DEFAULT_CLOSURE_CAP)?;
    let index: std::collections::HashMap<&T, Element> = elements.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let images = gens.iter().map(|g| index[g]).collect();
    let g = Morphism::new(h.alphabet().clone(), semigroup, images)?;
    let recognizer = StrongRecognizer::from_fn(g, |p| accept(&elements[p.s], &elements[p.e]));
    Ok(Expansion { recognizer, elements })
}

fn split_mul(sg: &FiniteSemigroup, a: &SplitElement, b: &SplitElement) -> SplitElement {
    let (s, t) = (a.value, b.value);
    let mut splits: BTreeSet<(Element, Element)> = a.splits.iter().map(|&(x1, x2)| (x1, sg.mul(x2, t))).collect();
    splits.insert((s, t));
    splits.extend(b.splits.iter().map(|&(y1, y2)| (sg.mul(s, y1), y2)));
    SplitElement { value: sg.mul(s, t), splits }
}

/// The split-set expansion of a weak recognizer.
///
/// A pair `((s, X), (e, Y))` is accepted when some accepted `(t, f)` and
/// some `(p, q) ∈ Y ∪ {(1, 1)}` give `s·p = t` and `f ∈ {q·e·p, q·p}`:
/// the word is cut after the `p`-part of the first loop and regrouped into
/// blocks `q v p` (or `q p` across consecutive loops).
pub fn split_expansion(rec: &WeakRecognizer) -> Result<Expansion<SplitElement>> {
    let sg = rec.morphism().target();
    let accepted: Vec<LinkedPair> = rec.accepting().iter().copied().collect();
    build(
        rec,
        |x| SplitElement { value: x, splits: BTreeSet::new() },
        |a, b| split_mul(sg, a, b),
        |x, y| {
            let (s, e) = (x.value, y.value);
            accepted.iter().any(|acc| {
                (s == acc.s && e == acc.e)
                    || y.splits.iter().any(|&(p, q)| {
                        sg.mul(s, p) == acc.s
                            && (sg.mul(sg.mul(q, e), p) == acc.e || sg.mul(q, p) == acc.e)
                    })
            })
        },
    )
}

pub fn weak_to_strong_general(rec: &WeakRecognizer) -> Result<StrongRecognizer> {
    Ok(split_expansion(rec)?.recognizer)
}

/// The expansion into `S × 2^S` for a weak recognizer over a simple
/// semigroup. Fails with [`crate::Error::NotSimple`] otherwise.
pub fn rees_expansion(rec: &WeakRecognizer) -> Result<Expansion<ReesElement>> {
    let sg = rec.morphism().target();
    let rees = ReesStructure::new(sg)?;
    let accepted: Vec<LinkedPair> = rec.accepting().iter().copied().collect();
    let n = sg.size();
    build(
        rec,
        |x| ReesElement { value: x, set: BTreeSet::new() },
        |a, b| {
            let (s, t) = (a.value, b.value);
            let mut set = a.set.clone();
            set.insert(rees.r_dot(t, s));
            set.extend(b.set.iter().map(|&y| {
                let g = rees.gamma(sg.mul(s, rees.r_dot(t, y)));
                rees.pi(rees.r_class(y), g, rees.l_class(y))
            }));
            ReesElement { value: sg.mul(s, t), set }
        },
        |x, y| {
            let (s, e) = (x.value, y.value);
            accepted.iter().any(|acc| {
                (0..n).any(|q| {
                    sg.mul(acc.s, q) == s
                        && x.set.contains(&rees.r_dot(q, acc.s))
                        && (0..n).any(|p| {
                            sg.mul(p, q) == e && sg.mul(q, p) == acc.e && y.set.contains(&rees.r_dot(q, p))
                        })
                })
            })
        },
    )
}

pub fn weak_to_strong_simple(rec: &WeakRecognizer) -> Result<StrongRecognizer> {
    Ok(rees_expansion(rec)?.recognizer)
}
