use super::{Element, FiniteSemigroup, GreensData};
use crate::error::{Error, Result};

/// Rees coordinates `S ≅ (S/R) × G × (S/L)` of a finite simple semigroup.
///
/// The group is the H-class of the least idempotent `e₀`, and the
/// projection onto it is `γ(s) = e₀·s·e₀`, which is a bijection on every
/// H-class. `pi` inverts `s ↦ (R_s, γ(s), L_s)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReesStructure {
    base: Element,
    group: Vec<Element>,
    gamma: Vec<usize>,
    r_class: Vec<usize>,
    l_class: Vec<usize>,
    r_count: usize,
    l_count: usize,
    pi: Vec<Element>,
}

impl ReesStructure {
    pub fn new(s: &FiniteSemigroup) -> Result<Self> {
        let greens = s.greens();
        if greens.j_class_count() != 1 {
            return Err(Error::NotSimple);
        }
        Ok(Self::from_greens(s, &greens))
    }

    fn from_greens(s: &FiniteSemigroup, greens: &GreensData) -> Self {
        let base = s.idempotents()[0];
        let group = greens.h_classes[greens.h_class[base]].clone();
        let mut group_index = vec![usize::MAX; s.size()];
        for (i, &g) in group.iter().enumerate() {
            group_index[g] = i;
        }
        let gamma: Vec<usize> = (0..s.size())
            .map(|x| {
                let y = s.mul(s.mul(base, x), base);
                let i = group_index[y];
                assert!(i != usize::MAX, "e₀·s·e₀ lies outside H(e₀) in a simple semigroup");
                i
            })
            .collect();

        let r_count = greens.r_class_count();
        let l_count = greens.l_class_count();
        let g = group.len();
        let mut pi = vec![usize::MAX; r_count * g * l_count];
        for x in 0..s.size() {
            let slot = (greens.r_class[x] * g + gamma[x]) * l_count + greens.l_class[x];
            assert!(pi[slot] == usize::MAX, "γ is not injective on an H-class");
            pi[slot] = x;
        }
        assert!(pi.iter().all(|&x| x != usize::MAX), "π is not surjective");

        ReesStructure {
            base,
            group,
            gamma,
            r_class: greens.r_class.clone(),
            l_class: greens.l_class.clone(),
            r_count,
            l_count,
            pi,
        }
    }

    pub fn base_idempotent(&self) -> Element {
        self.base
    }

    /// Elements of `H(e₀)`, sorted; group indices refer to this order.
    pub fn group(&self) -> &[Element] {
        &self.group
    }

    pub fn gamma(&self, s: Element) -> usize {
        self.gamma[s]
    }

    pub fn r_class(&self, s: Element) -> usize {
        self.r_class[s]
    }

    pub fn l_class(&self, s: Element) -> usize {
        self.l_class[s]
    }

    pub fn r_count(&self) -> usize {
        self.r_count
    }

    pub fn l_count(&self) -> usize {
        self.l_count
    }

    pub fn pi(&self, r: usize, g: usize, l: usize) -> Element {
        self.pi[(r * self.group.len() + g) * self.l_count + l]
    }

    pub fn pi_inv(&self, s: Element) -> (usize, usize, usize) {
        (self.r_class[s], self.gamma[s], self.l_class[s])
    }

    /// `R_t · s`: the element of `R_t ∩ L_s` with the same group coordinate as `s`.
    pub fn r_dot(&self, t: Element, s: Element) -> Element {
        self.pi(self.r_class[t], self.gamma[s], self.l_class[s])
    }
}
