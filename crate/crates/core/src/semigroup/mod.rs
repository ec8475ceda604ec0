//! Finite semigroups as multiplication tables.
//!
//! Elements are identified by their index `0..size`. Tables coming from the
//! outside world are checked for associativity on construction; tables
//! produced by [`generate_subsemigroup`] inherit associativity from the
//! product they were generated with.

mod closure;
mod green;
mod rees;

pub use closure::{generate_subsemigroup, Closure, DEFAULT_CLOSURE_CAP, MAX_TABLE_SIDE};
pub use green::GreensData;
pub use rees::ReesStructure;

use crate::error::{Error, Result};

pub type Element = usize;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteSemigroup {
    size: usize,
    table: Vec<u32>,
    names: Option<Vec<String>>,
}

/// A pair `(s, e)` with `s·e = s` and `e·e = e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinkedPair {
    pub s: Element,
    pub e: Element,
}

impl LinkedPair {
    pub fn new(s: Element, e: Element) -> Self {
        LinkedPair { s, e }
    }
}

/// Returns `Ok(true)` iff the `size`×`size` row-major table is associative.
pub fn check_associativity(size: usize, table: &[Element]) -> Result<bool> {
    validate_entries(size, table)?;
    Ok(first_nonassociative(size, |s, t| table[s * size + t]).is_none())
}

fn validate_entries(size: usize, table: &[Element]) -> Result<()> {
    if size == 0 {
        return Err(Error::EmptySemigroup);
    }
    if table.len() != size * size {
        return Err(Error::TableShape {
            expected: size * size,
            found: table.len(),
        });
    }
    if let Some(i) = table.iter().position(|&v| v >= size) {
        return Err(Error::EntryOutOfRange {
            row: i / size,
            col: i % size,
            value: table[i],
            size,
        });
    }
    Ok(())
}

fn first_nonassociative(
    size: usize,
    mul: impl Fn(usize, usize) -> usize,
) -> Option<(Element, Element, Element)> {
    for s in 0..size {
        for t in 0..size {
            let st = mul(s, t);
            for u in 0..size {
                if mul(st, u) != mul(s, mul(t, u)) {
                    return Some((s, t, u));
                }
            }
        }
    }
    None
}

impl FiniteSemigroup {
    /// Builds a semigroup from a row-major table (`table[s*size + t] = s·t`).
    pub fn from_table(size: usize, table: Vec<Element>) -> Result<Self> {
        validate_entries(size, &table)?;
        if let Some((s, t, u)) = first_nonassociative(size, |s, t| table[s * size + t]) {
            return Err(Error::NotAssociative(s, t, u));
        }
        Ok(Self::from_table_unchecked(size, table))
    }

    pub fn from_rows(rows: Vec<Vec<Element>>) -> Result<Self> {
        let size = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != size) {
            return Err(Error::TableShape {
                expected: size * size,
                found: size * (size - 1) + bad.len(),
            });
        }
        Self::from_table(size, rows.into_iter().flatten().collect())
    }

    /// Builds a semigroup from a product rule on `0..size`, checking it.
    pub fn from_fn(size: usize, mul: impl Fn(Element, Element) -> Element) -> Result<Self> {
        let mut table = Vec::with_capacity(size * size);
        for s in 0..size {
            for t in 0..size {
                table.push(mul(s, t));
            }
        }
        Self::from_table(size, table)
    }

    pub(crate) fn from_table_unchecked(size: usize, table: Vec<Element>) -> Self {
        debug_assert_eq!(table.len(), size * size);
        FiniteSemigroup {
            size,
            table: table.into_iter().map(|v| v as u32).collect(),
            names: None,
        }
    }

    pub(crate) fn from_u32_table_unchecked(size: usize, table: Vec<u32>) -> Self {
        debug_assert_eq!(table.len(), size * size);
        FiniteSemigroup {
            size,
            table,
            names: None,
        }
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.size {
            return Err(Error::NameCount {
                size: self.size,
                found: names.len(),
            });
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn mul(&self, s: Element, t: Element) -> Element {
        self.table[s * self.size + t] as Element
    }

    /// `s·t` where `None` stands for the adjoined identity.
    #[inline]
    pub fn mul_opt(&self, s: Option<Element>, t: Option<Element>) -> Option<Element> {
        match (s, t) {
            (Some(s), Some(t)) => Some(self.mul(s, t)),
            (x, None) => x,
            (None, y) => y,
        }
    }

    pub fn row(&self, s: Element) -> impl Iterator<Item = Element> + '_ {
        self.table[s * self.size..(s + 1) * self.size]
            .iter()
            .map(|&v| v as Element)
    }

    pub fn table(&self) -> Vec<Element> {
        self.table.iter().map(|&v| v as Element).collect()
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Printable label of an element: its name if present, its id otherwise.
    pub fn label(&self, s: Element) -> String {
        match &self.names {
            Some(n) => n[s].clone(),
            None => s.to_string(),
        }
    }

    pub fn contains(&self, s: Element) -> bool {
        s < self.size
    }

    /// `S¹`: a fresh two-sided identity with id `size` is added, even if
    /// `S` already has an identity.
    pub fn adjoin_identity(&self) -> FiniteSemigroup {
        let n = self.size;
        let m = n + 1;
        let mut table = Vec::with_capacity(m * m);
        for s in 0..m {
            for t in 0..m {
                table.push(if s == n {
                    t
                } else if t == n {
                    s
                } else {
                    self.mul(s, t)
                });
            }
        }
        let mut out = FiniteSemigroup::from_table_unchecked(m, table);
        if let Some(names) = &self.names {
            let mut names = names.clone();
            names.push("1".to_string());
            out.names = Some(names);
        }
        out
    }

    pub fn power(&self, s: Element, k: usize) -> Element {
        assert!(k >= 1, "semigroup powers start at 1");
        let mut x = s;
        for _ in 1..k {
            x = self.mul(x, s);
        }
        x
    }

    pub fn is_idempotent(&self, e: Element) -> bool {
        self.mul(e, e) == e
    }

    pub fn idempotents(&self) -> Vec<Element> {
        (0..self.size).filter(|&e| self.is_idempotent(e)).collect()
    }

    /// The unique idempotent among `s, s², s³, …`.
    pub fn idempotent_power(&self, s: Element) -> Element {
        // The powers s, s², …, s^size contain every value of the cyclic
        // subsemigroup, its idempotent included.
        let mut x = s;
        for _ in 0..self.size {
            if self.is_idempotent(x) {
                return x;
            }
            x = self.mul(x, s);
        }
        unreachable!("a finite cyclic semigroup contains an idempotent")
    }

    pub fn is_linked_pair(&self, p: LinkedPair) -> bool {
        self.contains(p.s) && self.contains(p.e) && self.is_idempotent(p.e) && self.mul(p.s, p.e) == p.s
    }

    /// All linked pairs in `(s, e)` order.
    pub fn linked_pairs(&self) -> Vec<LinkedPair> {
        let idem = self.idempotents();
        let mut out = Vec::new();
        for s in 0..self.size {
            for &e in &idem {
                if self.mul(s, e) == s {
                    out.push(LinkedPair { s, e });
                }
            }
        }
        out
    }

    pub fn greens(&self) -> GreensData {
        GreensData::compute(self)
    }

    pub fn is_simple(&self) -> bool {
        self.greens().j_class_count() == 1
    }

    pub fn is_j_trivial(&self) -> bool {
        self.greens().j_class_count() == self.size
    }

    pub fn rees_structure(&self) -> Result<ReesStructure> {
        ReesStructure::new(self)
    }

    /// Fold of a nonempty sequence of elements; `None` on empty input.
    pub fn product<I: IntoIterator<Item = Element>>(&self, items: I) -> Option<Element> {
        items.into_iter().reduce(|x, y| self.mul(x, y))
    }

    /// Elements reachable as products of `generators`, sorted.
    pub fn generated_by(&self, generators: &[Element]) -> Vec<Element> {
        let mut seen = vec![false; self.size];
        let mut queue: Vec<Element> = Vec::new();
        for &g in generators {
            if !seen[g] {
                seen[g] = true;
                queue.push(g);
            }
        }
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            i += 1;
            for &g in generators {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                }
            }
        }
        (0..self.size).filter(|&s| seen[s]).collect()
    }

    /// Sub-semigroup on `elements` (must be closed), renumbered in the given order.
    pub fn restrict(&self, elements: &[Element]) -> (FiniteSemigroup, Vec<Option<Element>>) {
        let mut index = vec![None; self.size];
        for (i, &s) in elements.iter().enumerate() {
            index[s] = Some(i);
        }
        let m = elements.len();
        let mut table = Vec::with_capacity(m * m);
        for &s in elements {
            for &t in elements {
                table.push(index[self.mul(s, t)].expect("restriction to a closed subset"));
            }
        }
        let mut sub = FiniteSemigroup::from_table_unchecked(m, table);
        if let Some(names) = &self.names {
            sub.names = Some(elements.iter().map(|&s| names[s].clone()).collect());
        }
        (sub, index)
    }
}
