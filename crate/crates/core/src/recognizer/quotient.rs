use std::collections::{BTreeMap, HashMap};

use super::{FiniteWordRecognizer, Morphism, StrongRecognizer};
use crate::semigroup::{Element, FiniteSemigroup, LinkedPair};

/// Largest congruence on `elems` (a subsemigroup generated by `gens`) that
/// refines the initial labelling. Returns class ids numbered by first
/// appearance in `elems`.
fn coarsest_congruence(
    sg: &FiniteSemigroup,
    elems: &[Element],
    gens: &[Element],
    initial: Vec<usize>,
) -> Vec<usize> {
    let mut local = vec![usize::MAX; sg.size()];
    for (i, &s) in elems.iter().enumerate() {
        local[s] = i;
    }
    let mut labels = renumber(&initial);
    let mut count = labels.iter().max().map_or(0, |m| m + 1);
    loop {
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut next = Vec::with_capacity(elems.len());
        for (i, &s) in elems.iter().enumerate() {
            let mut key = Vec::with_capacity(1 + 2 * gens.len());
            key.push(labels[i]);
            for &g in gens {
                key.push(labels[local[sg.mul(s, g)]]);
                key.push(labels[local[sg.mul(g, s)]]);
            }
            let fresh = ids.len();
            next.push(*ids.entry(key).or_insert(fresh));
        }
        let new_count = ids.len();
        labels = next;
        if new_count == count {
            return labels;
        }
        count = new_count;
    }
}

fn renumber(labels: &[usize]) -> Vec<usize> {
    let mut ids = HashMap::new();
    labels
        .iter()
        .map(|&l| {
            let fresh = ids.len();
            *ids.entry(l).or_insert(fresh)
        })
        .collect()
}

struct Quotient {
    morphism: Morphism,
    class_of: Vec<Option<Element>>,
    members: Vec<Vec<Element>>,
}

fn build(h: &Morphism, labels: &[usize]) -> Quotient {
    let sg = h.target();
    let elems = h.image();
    let classes = labels.iter().max().map_or(0, |m| m + 1);
    let mut class_of = vec![None; sg.size()];
    let mut members = vec![Vec::new(); classes];
    for (i, &s) in elems.iter().enumerate() {
        class_of[s] = Some(labels[i]);
        members[labels[i]].push(s);
    }
    let mut table = Vec::with_capacity(classes * classes);
    for c in 0..classes {
        for d in 0..classes {
            table.push(class_of[sg.mul(members[c][0], members[d][0])].unwrap());
        }
    }
    let target = FiniteSemigroup::from_table_unchecked(classes, table);
    let images = h.letter_images().iter().map(|&s| class_of[s].unwrap()).collect();
    let morphism = Morphism::new(h.alphabet().clone(), target, images).expect("quotient morphism");
    Quotient {
        morphism,
        class_of,
        members,
    }
}

fn distinct_letter_images(h: &Morphism) -> Vec<Element> {
    let mut gens = h.letter_images().to_vec();
    gens.sort_unstable();
    gens.dedup();
    gens
}

pub(super) fn strong(rec: &StrongRecognizer) -> (StrongRecognizer, Vec<Option<Element>>) {
    let h = rec.morphism();
    let sg = h.target();
    let elems = h.image();
    let idem: Vec<Element> = (0..sg.size()).map(|s| sg.idempotent_power(s)).collect();
    // membership of x·y^ω, with x = None for the empty prefix
    let member = |x: Option<Element>, y: Element| {
        let e = idem[y];
        let s = sg.mul(x.unwrap_or(y), e);
        rec.accepts(LinkedPair::new(s, e))
    };
    // Contexts w·z^ω and z·w^ω; closing under multiplication by letters
    // turns these into the full two-sided contexts of the congruence.
    let signatures: Vec<Vec<bool>> = elems
        .iter()
        .map(|&w| {
            let mut sig = Vec::with_capacity(2 * elems.len() + 1);
            sig.extend(elems.iter().map(|&z| member(Some(w), z)));
            sig.extend(elems.iter().map(|&z| member(Some(z), w)));
            sig.push(member(None, w));
            sig
        })
        .collect();
    let initial = label_by(&signatures);
    let labels = coarsest_congruence(sg, elems, &distinct_letter_images(h), initial);
    let q = build(h, &labels);

    let qsg = q.morphism.target();
    let accept: BTreeMap<LinkedPair, bool> = q
        .morphism
        .image_linked_pairs()
        .into_iter()
        .map(|p| {
            // the idempotent class p.e contains a genuine idempotent
            let e = idem[q.members[p.e][0]];
            let s = sg.mul(q.members[p.s][0], e);
            debug_assert_eq!(q.class_of[s], Some(qsg.mul(p.s, p.e)));
            (p, rec.accepts(LinkedPair::new(s, e)))
        })
        .collect();
    let out = StrongRecognizer::new(q.morphism, accept).expect("quotient acceptance is total");
    (out, q.class_of)
}

pub(super) fn finite(rec: &FiniteWordRecognizer) -> (FiniteWordRecognizer, Vec<Option<Element>>) {
    let h = rec.morphism();
    let elems = h.image();
    let initial: Vec<usize> = elems.iter().map(|s| rec.accepting().contains(s) as usize).collect();
    let labels = coarsest_congruence(h.target(), elems, &distinct_letter_images(h), initial);
    let q = build(h, &labels);
    let accept: Vec<Element> = (0..q.members.len())
        .filter(|&c| rec.accepting().contains(&q.members[c][0]))
        .collect();
    let out = FiniteWordRecognizer::new(q.morphism, accept).expect("quotient acceptance");
    (out, q.class_of)
}

fn label_by<K: std::hash::Hash + Eq + Clone>(keys: &[K]) -> Vec<usize> {
    let mut ids: HashMap<K, usize> = HashMap::new();
    keys.iter()
        .map(|k| {
            let fresh = ids.len();
            *ids.entry(k.clone()).or_insert(fresh)
        })
        .collect()
}
