//! Morphisms `h: A⁺ → S` into finite semigroups and the languages they
//! recognize.
//!
//! * [`FiniteWordRecognizer`]: a union of classes `[s]`.
//! * [`WeakRecognizer`]: a union of classes `[s][e]^ω` over chosen linked pairs.
//! * [`StrongRecognizer`]: a yes/no answer for every linked pair of the
//!   image; every class `[s][e]^ω` lies entirely inside or outside the
//!   language, so the morphism also recognizes the complement.

mod equiv;
mod quotient;

use std::collections::{BTreeMap, BTreeSet};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::language::OmegaLanguage;
use crate::semigroup::{Element, FiniteSemigroup, LinkedPair};
use crate::word::{Alphabet, Letter, UpWord};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    alphabet: Alphabet,
    target: FiniteSemigroup,
    images: Vec<Element>,
    image: Vec<Element>,
    in_image: Vec<bool>,
}

impl Morphism {
    pub fn new(alphabet: Alphabet, target: FiniteSemigroup, images: Vec<Element>) -> Result<Self> {
        if images.len() != alphabet.len() {
            return Err(Error::InvalidParameter(format!(
                "{} letter images for {} letters",
                images.len(),
                alphabet.len()
            )));
        }
        if let Some(&bad) = images.iter().find(|&&s| !target.contains(s)) {
            return Err(Error::ElementOutOfRange(bad));
        }
        let image = target.generated_by(&images);
        let mut in_image = vec![false; target.size()];
        for &s in &image {
            in_image[s] = true;
        }
        Ok(Morphism {
            alphabet,
            target,
            images,
            image,
            in_image,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn target(&self) -> &FiniteSemigroup {
        &self.target
    }

    pub fn letter_image(&self, a: Letter) -> Element {
        self.images[a]
    }

    pub fn letter_images(&self) -> &[Element] {
        &self.images
    }

    /// Elements of the form `h(w)`, sorted.
    pub fn image(&self) -> &[Element] {
        &self.image
    }

    pub fn in_image(&self, s: Element) -> bool {
        self.in_image[s]
    }

    pub fn is_surjective(&self) -> bool {
        self.image.len() == self.target.size()
    }

    /// `h(w)` for a nonempty word.
    pub fn apply(&self, w: &[Letter]) -> Result<Element> {
        self.alphabet.check_word(w)?;
        self.fold(w).ok_or(Error::EmptyWord)
    }

    /// `h(w)`, or `None` for the empty word. Letters must be in range.
    pub(crate) fn fold(&self, w: &[Letter]) -> Option<Element> {
        self.target.product(w.iter().map(|&a| self.images[a]))
    }

    pub fn image_linked_pairs(&self) -> Vec<LinkedPair> {
        self.target
            .linked_pairs()
            .into_iter()
            .filter(|p| self.in_image[p.s] && self.in_image[p.e])
            .collect()
    }

    /// Whether `u v^ω ∈ [s][e]^ω`.
    pub fn up_in_class(&self, w: &UpWord, pair: LinkedPair) -> bool {
        self.up_classes(w).contains(pair)
    }

    /// All linked-pair classes containing `w`, computed in one pass.
    pub fn up_classes(&self, w: &UpWord) -> UpClasses {
        UpClasses::compute(self, w)
    }
}

/// The linked pairs `(s, e)` with `u v^ω ∈ [s][e]^ω`.
///
/// By cutting a factorization where it repeats modulo `|v|`, the word lies
/// in `[s][e]^ω` iff `v = v₁v₂` with `v₁ ≠ ε`, `h(u v^k v₁) = s` and
/// `h(v₂ v^ℓ v₁) = e` for some `k ≥ 0` and odd `ℓ`. The sequences of
/// powers involved are eventually periodic with preperiod plus period at
/// most `|S|`, so `k ≤ 2|S|` and `ℓ ≤ 4|S| + 1` cover every value.
#[derive(Debug, Clone)]
pub struct UpClasses {
    /// Per cut position: possible values of `h(u v^k v₁)` and `h(v₂ v^ℓ v₁)`.
    cuts: Vec<(FixedBitSet, FixedBitSet)>,
}

impl UpClasses {
    fn compute(h: &Morphism, w: &UpWord) -> Self {
        let sg = h.target();
        let n = sg.size();
        let period = w.period();
        let hu = h.fold(w.prefix());
        let m = h.fold(period).expect("period is nonempty");

        let mut before: Vec<Option<Element>> = vec![hu];
        let mut x = m;
        for _ in 0..2 * n {
            before.push(sg.mul_opt(hu, Some(x)));
            x = sg.mul(x, m);
        }
        before.sort_unstable();
        before.dedup();

        let m2 = sg.mul(m, m);
        let mut odd = Vec::with_capacity(2 * n + 1);
        let mut x = m;
        for _ in 0..=2 * n {
            odd.push(x);
            x = sg.mul(x, m2);
        }
        odd.sort_unstable();
        odd.dedup();

        let mut suffix = vec![None; period.len() + 1];
        for c in (0..period.len()).rev() {
            suffix[c] = sg.mul_opt(Some(h.images[period[c]]), suffix[c + 1]);
        }

        let mut cuts = Vec::with_capacity(period.len());
        let mut hv1: Option<Element> = None;
        for c in 1..=period.len() {
            hv1 = sg.mul_opt(hv1, Some(h.images[period[c - 1]]));
            let v1 = hv1.unwrap();
            let mut pre = FixedBitSet::with_capacity(n);
            for &b in &before {
                pre.insert(sg.mul_opt(b, Some(v1)).unwrap());
            }
            let mut lp = FixedBitSet::with_capacity(n);
            for &o in &odd {
                let y = sg.mul_opt(suffix[c], Some(o)).unwrap();
                lp.insert(sg.mul(y, v1));
            }
            cuts.push((pre, lp));
        }
        UpClasses { cuts }
    }

    pub fn contains(&self, pair: LinkedPair) -> bool {
        self.cuts
            .iter()
            .any(|(pre, lp)| pre.contains(pair.s) && lp.contains(pair.e))
    }
}

/// `L = ⋃ [sᵢ][eᵢ]^ω` over the accepted linked pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakRecognizer {
    morphism: Morphism,
    accept: BTreeSet<LinkedPair>,
}

impl WeakRecognizer {
    pub fn new<I: IntoIterator<Item = LinkedPair>>(morphism: Morphism, accept: I) -> Result<Self> {
        let accept: BTreeSet<LinkedPair> = accept.into_iter().collect();
        for p in &accept {
            if !morphism.target().is_linked_pair(*p) {
                return Err(Error::NotLinkedPair(p.s, p.e));
            }
        }
        Ok(WeakRecognizer { morphism, accept })
    }

    pub fn morphism(&self) -> &Morphism {
        &self.morphism
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.morphism.alphabet()
    }

    pub fn accepting(&self) -> &BTreeSet<LinkedPair> {
        &self.accept
    }

    /// Membership of `u v^ω`: some accepted class contains it.
    pub fn contains(&self, w: &UpWord) -> bool {
        if self.accept.is_empty() {
            return false;
        }
        let classes = self.morphism.up_classes(w);
        self.accept.iter().any(|&p| classes.contains(p))
    }
}

/// A saturated recognizer: a total acceptance map over the linked pairs of
/// the image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongRecognizer {
    morphism: Morphism,
    accept: BTreeMap<LinkedPair, bool>,
}

impl StrongRecognizer {
    pub fn new(morphism: Morphism, accept: BTreeMap<LinkedPair, bool>) -> Result<Self> {
        let expected = morphism.image_linked_pairs();
        if let Some(p) = expected.iter().find(|p| !accept.contains_key(p)) {
            return Err(Error::IncompleteAcceptance(format!("missing ({}, {})", p.s, p.e)));
        }
        if accept.len() != expected.len() {
            let extra = accept.keys().find(|p| expected.binary_search(p).is_err()).unwrap();
            return Err(Error::IncompleteAcceptance(format!(
                "({}, {}) is not a linked pair of the image",
                extra.s, extra.e
            )));
        }
        Ok(StrongRecognizer { morphism, accept })
    }

    pub fn from_fn(morphism: Morphism, accept: impl Fn(LinkedPair) -> bool) -> Self {
        let accept = morphism
            .image_linked_pairs()
            .into_iter()
            .map(|p| (p, accept(p)))
            .collect();
        StrongRecognizer { morphism, accept }
    }

    pub fn morphism(&self) -> &Morphism {
        &self.morphism
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.morphism.alphabet()
    }

    pub fn acceptance(&self) -> &BTreeMap<LinkedPair, bool> {
        &self.accept
    }

    /// Acceptance of an image linked pair.
    pub fn accepts(&self, pair: LinkedPair) -> bool {
        self.accept[&pair]
    }

    /// Membership of `u v^ω`: with `s = h(u)` and `e` the idempotent power
    /// of `h(v)`, the word lies in the class of the linked pair `(s·e, e)`.
    pub fn contains(&self, w: &UpWord) -> bool {
        let w = w.with_nonempty_prefix();
        let sg = self.morphism.target();
        let s = self.morphism.fold(w.prefix()).unwrap();
        let e = sg.idempotent_power(self.morphism.fold(w.period()).unwrap());
        self.accepts(LinkedPair::new(sg.mul(s, e), e))
    }

    pub fn complement(&self) -> StrongRecognizer {
        StrongRecognizer {
            morphism: self.morphism.clone(),
            accept: self.accept.iter().map(|(&p, &b)| (p, !b)).collect(),
        }
    }

    /// Linked pairs accepted, as a weak recognizer of the same language.
    pub fn to_weak(&self) -> WeakRecognizer {
        WeakRecognizer {
            morphism: self.morphism.clone(),
            accept: self.accept.iter().filter(|(_, &b)| b).map(|(&p, _)| p).collect(),
        }
    }

    /// The quotient by the syntactic congruence of the recognized language,
    /// together with the map from target elements (of the image) to classes.
    pub fn syntactic_quotient(&self) -> (StrongRecognizer, Vec<Option<Element>>) {
        quotient::strong(self)
    }

    pub fn equivalent(&self, other: &StrongRecognizer) -> Result<bool> {
        Ok(self.distinguishing_word(other)?.is_none())
    }

    /// An ultimately periodic word in the symmetric difference, if any.
    pub fn distinguishing_word(&self, other: &StrongRecognizer) -> Result<Option<UpWord>> {
        equiv::distinguishing_word(self, other)
    }
}

/// `L = ⋃ [sᵢ]` over finite nonempty words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteWordRecognizer {
    morphism: Morphism,
    accept: BTreeSet<Element>,
}

impl FiniteWordRecognizer {
    pub fn new<I: IntoIterator<Item = Element>>(morphism: Morphism, accept: I) -> Result<Self> {
        let accept: BTreeSet<Element> = accept.into_iter().collect();
        if let Some(&s) = accept.iter().find(|&&s| !morphism.target().contains(s) || !morphism.in_image(s)) {
            return Err(Error::InvalidParameter(format!("accepted element {s} is not in the image")));
        }
        Ok(FiniteWordRecognizer { morphism, accept })
    }

    pub fn morphism(&self) -> &Morphism {
        &self.morphism
    }

    pub fn accepting(&self) -> &BTreeSet<Element> {
        &self.accept
    }

    /// Membership of a finite word; the empty word is never recognized.
    pub fn contains(&self, w: &[Letter]) -> bool {
        self.morphism.fold(w).is_some_and(|s| self.accept.contains(&s))
    }

    /// Quotient by the two-sided context congruence `∀x,y ∈ S¹: xsy ∈ F ⇔ xty ∈ F`.
    pub fn syntactic_quotient(&self) -> (FiniteWordRecognizer, Vec<Option<Element>>) {
        quotient::finite(self)
    }
}

impl OmegaLanguage for WeakRecognizer {
    fn alphabet(&self) -> &Alphabet {
        self.morphism.alphabet()
    }

    fn contains(&self, w: &UpWord) -> bool {
        WeakRecognizer::contains(self, w)
    }

    fn describe(&self) -> String {
        format!("weak-recognizer(size={})", self.morphism.target().size())
    }
}

impl OmegaLanguage for StrongRecognizer {
    fn alphabet(&self) -> &Alphabet {
        self.morphism.alphabet()
    }

    fn contains(&self, w: &UpWord) -> bool {
        StrongRecognizer::contains(self, w)
    }

    fn describe(&self) -> String {
        format!("strong-recognizer(size={})", self.morphism.target().size())
    }
}
