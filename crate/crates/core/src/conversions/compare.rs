use std::collections::{HashSet, VecDeque};

use fixedbitset::FixedBitSet;

use crate::buchi::{BuchiAutomaton, TransitionProfile, FINAL_RUN, NO_RUN};
use crate::error::{Error, Result};
use crate::recognizer::WeakRecognizer;
use crate::semigroup::Element;
use crate::word::{UpWord, Word};

/// What `u` contributes to the membership of `u v^ω`: `h(u)` (`None` for
/// the empty word) and the states reachable on `u`.
type PrefixKey = (Option<Element>, FixedBitSet);

/// What `v` contributes: `h(v)`, its extended run profile and the set of
/// `(h(v₁), h(v₂))` over the cuts `v = v₁v₂` with `v₁, v₂ ≠ ε`.
type PeriodKey = (Element, TransitionProfile, FixedBitSet);

/// An ultimately periodic word on which `rec` and `a` disagree, if any.
///
/// Membership of `u v^ω` in the weakly recognized language depends only on
/// `h(u)`, `h(v)` and the cut values of `v`; Büchi acceptance depends only
/// on the states reachable on `u` and the extended profile of `v`. Both
/// kinds of summaries are enumerated letter by letter and every
/// combination is compared, so the answer is exact. No multiplication
/// table is built, which keeps this usable where a strong recognizer of
/// `rec` would be too large.
pub fn weak_ba_distinguishing_word(rec: &WeakRecognizer, a: &BuchiAutomaton) -> Result<Option<UpWord>> {
    let h = rec.morphism();
    if h.alphabet() != a.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let sg = h.target();
    let n = sg.size();
    let letters = h.alphabet().len();
    let q = a.states();

    // prefixes
    let mut start = FixedBitSet::with_capacity(q);
    for &i in a.initial() {
        start.insert(i);
    }
    let mut prefixes: Vec<(PrefixKey, Word)> = Vec::new();
    let mut seen: HashSet<PrefixKey> = HashSet::new();
    let mut queue = VecDeque::from([((None, start), Vec::new())]);
    while let Some((key, word)) = queue.pop_front() {
        if !seen.insert(key.clone()) {
            continue;
        }
        for l in 0..letters {
            let hu = Some(key.0.map_or(h.letter_image(l), |x| sg.mul(x, h.letter_image(l))));
            let mut next = FixedBitSet::with_capacity(q);
            for p in key.1.ones() {
                next.extend(a.successors(p, l).iter().copied());
            }
            let mut w = word.clone();
            w.push(l);
            queue.push_back(((hu, next), w));
        }
        prefixes.push((key, word));
    }

    // periods
    let letter_profiles: Vec<TransitionProfile> = (0..letters).map(|l| a.letter_profile(l, true)).collect();
    let mut seen: HashSet<PeriodKey> = HashSet::new();
    let mut queue: VecDeque<(PeriodKey, Word)> = (0..letters)
        .map(|l| ((h.letter_image(l), letter_profiles[l].clone(), FixedBitSet::with_capacity(n * n)), vec![l]))
        .collect();
    while let Some((key, word)) = queue.pop_front() {
        if seen.contains(&key) {
            continue;
        }
        let by_rec = accepting_prefix_values(rec, &key);
        let by_a = good_states(a, &key.1);
        for ((hu, reach), u) in &prefixes {
            let x = by_rec[hu.unwrap_or(n)];
            let y = reach.intersection(&by_a).next().is_some();
            if x != y {
                return Ok(Some(UpWord::new(u.clone(), word)?));
            }
        }
        for l in 0..letters {
            let g = h.letter_image(l);
            let mut cuts = FixedBitSet::with_capacity(n * n);
            for c in key.2.ones() {
                cuts.insert(c / n * n + sg.mul(c % n, g));
            }
            cuts.insert(key.0 * n + g);
            let next = (sg.mul(key.0, g), key.1.compose(&letter_profiles[l]), cuts);
            if !seen.contains(&next) {
                let mut w = word.clone();
                w.push(l);
                queue.push_back((next, w));
            }
        }
        seen.insert(key);
    }
    Ok(None)
}

/// For each `x ∈ S¹` (the identity has index `|S|`), whether `u v^ω` is
/// accepted when `h(u) = x`: some cut `v = v₁v₂` (`v₂` possibly empty),
/// `k ≥ 0` and odd `ℓ` give an accepted `(h(u v^k v₁), h(v₂ v^ℓ v₁))`.
fn accepting_prefix_values(rec: &WeakRecognizer, key: &PeriodKey) -> Vec<bool> {
    let sg = rec.morphism().target();
    let n = sg.size();
    let (m, _, cuts) = key;
    let mut powers = vec![n]; // m^0, as the identity
    let mut x = *m;
    for _ in 0..2 * n {
        powers.push(x);
        x = sg.mul(x, *m);
    }
    powers.sort_unstable();
    powers.dedup();
    let m2 = sg.mul(*m, *m);
    let mut odd = Vec::new();
    let mut x = *m;
    for _ in 0..=2 * n {
        odd.push(x);
        x = sg.mul(x, m2);
    }
    odd.sort_unstable();
    odd.dedup();
    let mul1 = |x: usize, y: usize| if x == n { y } else if y == n { x } else { sg.mul(x, y) };

    // targets[v₁]: prefix values s with some accepted (s, e) reachable through v₁
    let mut targets = vec![FixedBitSet::with_capacity(n); n];
    let mut add_cut = |v1: usize, v2: usize| {
        for &o in &odd {
            let e = mul1(mul1(v2, o), v1);
            for p in rec.accepting().iter().filter(|p| p.e == e) {
                targets[v1].insert(p.s);
            }
        }
    };
    add_cut(*m, n);
    for c in cuts.ones() {
        add_cut(c / n, c % n);
    }

    let mut out = vec![false; n + 1];
    for (v1, t) in targets.iter().enumerate().filter(|(_, t)| !t.is_clear()) {
        for (x, slot) in out.iter_mut().enumerate() {
            if !*slot {
                *slot = powers.iter().any(|&p| t.contains(mul1(mul1(x, p), v1)));
            }
        }
    }
    out
}

/// States from which some `v^j` reaches a state looping on the idempotent
/// power of `v` through a final state.
fn good_states(a: &BuchiAutomaton, profile: &TransitionProfile) -> FixedBitSet {
    let q = a.states();
    let e = profile.idempotent_power();
    let mut good = FixedBitSet::with_capacity(q);
    for p in 0..q {
        if e.get(p, p) == FINAL_RUN {
            good.insert(p);
        }
    }
    loop {
        let before = good.count_ones(..);
        for p in 0..q {
            if !good.contains(p) && (0..q).any(|r| profile.get(p, r) != NO_RUN && good.contains(r)) {
                good.insert(p);
            }
        }
        if good.count_ones(..) == before {
            return good;
        }
    }
}
