use std::collections::HashMap;
use std::hash::Hash;

use super::{Element, FiniteSemigroup};
use crate::error::{Error, Result};

pub const DEFAULT_CLOSURE_CAP: usize = 1_000_000;

/// Largest closure whose full multiplication table is built (1 GiB of ids).
pub const MAX_TABLE_SIDE: usize = 1 << 14;

/// A subsemigroup generated by concrete values under some associative product.
///
/// Element ids follow discovery order: distinct generators first, then new
/// products `x·g` in breadth-first order, with `x` varying slowest.
#[derive(Debug, Clone)]
pub struct Closure<T> {
    pub semigroup: FiniteSemigroup,
    pub elements: Vec<T>,
    generator_ids: Vec<Element>,
    /// `Some((x, k))` when the element was first found as `x·g_k`;
    /// `None` for generators.
    parent: Vec<Option<(Element, usize)>>,
    /// Index of a generator realizing each generator element.
    origin: Vec<usize>,
    index: HashMap<T, Element>,
}

impl<T: Clone + Eq + Hash> Closure<T> {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn id_of(&self, value: &T) -> Option<Element> {
        self.index.get(value).copied()
    }

    /// Id of the `i`-th generator (in the order passed in).
    pub fn generator_id(&self, i: usize) -> Element {
        self.generator_ids[i]
    }

    pub fn generator_ids(&self) -> &[Element] {
        &self.generator_ids
    }

    /// A sequence of generator indices whose product is `id`.
    pub fn witness(&self, id: Element) -> Vec<usize> {
        let mut rev = Vec::new();
        let mut cur = id;
        loop {
            match self.parent[cur] {
                Some((x, k)) => {
                    rev.push(k);
                    cur = x;
                }
                None => {
                    rev.push(self.origin[cur]);
                    break;
                }
            }
        }
        rev.reverse();
        rev
    }
}

/// Generates the closure of `generators` under `mul`.
///
/// `mul` is trusted to be associative on the generated values. Fails with
/// [`Error::CapacityExceeded`] once more than `cap` elements are found, or
/// when the closure is too large for its multiplication table.
pub fn generate_subsemigroup<T, F>(generators: &[T], mul: F, cap: usize) -> Result<Closure<T>>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let mut elements: Vec<T> = Vec::new();
    let mut index: HashMap<T, Element> = HashMap::new();
    let mut parent = Vec::new();
    let mut origin = Vec::new();
    let mut generator_ids = Vec::with_capacity(generators.len());
    // distinct generators, as (generator index, element id)
    let mut distinct: Vec<(usize, Element)> = Vec::new();

    for (k, g) in generators.iter().enumerate() {
        let id = match index.get(g) {
            Some(&id) => id,
            None => {
                let id = elements.len();
                if id >= cap {
                    return Err(Error::CapacityExceeded(cap));
                }
                elements.push(g.clone());
                index.insert(g.clone(), id);
                parent.push(None);
                origin.push(k);
                distinct.push((k, id));
                id
            }
        };
        generator_ids.push(id);
    }

    // right[x * d + j] = x · (j-th distinct generator)
    let d = distinct.len();
    let mut right: Vec<u32> = Vec::new();
    let mut x = 0;
    while x < elements.len() {
        for &(k, gid) in &distinct {
            let y = mul(&elements[x], &elements[gid]);
            let id = match index.get(&y) {
                Some(&id) => id,
                None => {
                    let id = elements.len();
                    if id >= cap {
                        return Err(Error::CapacityExceeded(cap));
                    }
                    elements.push(y.clone());
                    index.insert(y, id);
                    parent.push(Some((x, k)));
                    origin.push(usize::MAX);
                    id
                }
            };
            right.push(id as u32);
        }
        x += 1;
    }

    // Each element is a generator or parent·g with the parent discovered
    // earlier, so s·t = (s·parent(t))·g is read off the right Cayley graph.
    let n = elements.len();
    if n > MAX_TABLE_SIDE {
        return Err(Error::CapacityExceeded(MAX_TABLE_SIDE));
    }
    let slot_of_generator: HashMap<usize, usize> =
        distinct.iter().enumerate().map(|(j, &(k, _))| (k, j)).collect();
    let mut table = vec![0u32; n * n];
    for t in 0..n {
        match parent[t] {
            None => {
                let j = slot_of_generator[&origin[t]];
                for s in 0..n {
                    table[s * n + t] = right[s * d + j];
                }
            }
            Some((p, k)) => {
                let j = slot_of_generator[&k];
                for s in 0..n {
                    let sp = table[s * n + p] as usize;
                    table[s * n + t] = right[sp * d + j];
                }
            }
        }
    }

    Ok(Closure {
        semigroup: FiniteSemigroup::from_u32_table_unchecked(n, table),
        elements,
        generator_ids,
        parent,
        origin,
        index,
    })
}
