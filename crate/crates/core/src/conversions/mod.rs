//! Conversions between automata and recognizing morphisms.

mod compare;
mod expansion;

pub use compare::weak_ba_distinguishing_word;

pub use expansion::{
    rees_expansion, split_expansion, weak_to_strong_general, weak_to_strong_simple, Expansion,
    ReesElement, SplitElement,
};

use crate::buchi::{BuchiAutomaton, State, TransitionProfile, FINAL_RUN, NO_RUN};
use crate::error::{Error, Result};
use crate::recognizer::{FiniteWordRecognizer, Morphism, StrongRecognizer, WeakRecognizer};
use crate::semigroup::{generate_subsemigroup, Closure, LinkedPair, DEFAULT_CLOSURE_CAP};

/// The semigroup of run profiles generated by the letters, plain or extended.
/// Generator `k` is the profile of letter `k`.
pub fn transition_semigroup(a: &BuchiAutomaton, extended: bool) -> Result<Closure<TransitionProfile>> {
    if a.alphabet().is_empty() {
        return Err(Error::InvalidParameter("automaton has an empty alphabet".into()));
    }
    let letters: Vec<TransitionProfile> = (0..a.alphabet().len())
        .map(|l| a.letter_profile(l, extended))
        .collect();
    generate_subsemigroup(&letters, |x, y| x.compose(y), DEFAULT_CLOSURE_CAP)
}

fn profile_morphism(a: &BuchiAutomaton, closure: &Closure<TransitionProfile>) -> Morphism {
    let images = (0..a.alphabet().len()).map(|l| closure.generator_id(l)).collect();
    Morphism::new(a.alphabet().clone(), closure.semigroup.clone(), images)
        .expect("closure contains every letter profile")
}

fn connects(p: &TransitionProfile, from: &[State], to: &[State]) -> bool {
    from.iter().any(|&i| to.iter().any(|&f| p.get(i, f) != NO_RUN))
}

/// Transition semigroup of `a`, accepting the profiles that connect an
/// initial state to a final one.
pub fn nfa_to_recognizer(a: &BuchiAutomaton) -> Result<FiniteWordRecognizer> {
    let closure = transition_semigroup(a, false)?;
    let accept: Vec<_> = (0..closure.size())
        .filter(|&s| connects(&closure.elements[s], a.initial(), a.finals()))
        .collect();
    FiniteWordRecognizer::new(profile_morphism(a, &closure), accept)
}

/// Weak recognizer over the plain transition semigroup: `(s, e)` is
/// accepted when `s` leads from an initial state to a final state `f` and
/// `e` loops on `f`.
pub fn ba_to_weak(a: &BuchiAutomaton) -> Result<WeakRecognizer> {
    let closure = transition_semigroup(a, false)?;
    let sg = &closure.semigroup;
    let accept: Vec<LinkedPair> = sg
        .linked_pairs()
        .into_iter()
        .filter(|p| {
            let (s, e) = (&closure.elements[p.s], &closure.elements[p.e]);
            a.finals().iter().any(|&f| {
                e.get(f, f) != NO_RUN && a.initial().iter().any(|&i| s.get(i, f) != NO_RUN)
            })
        })
        .collect();
    WeakRecognizer::new(profile_morphism(a, &closure), accept)
}

/// Strong recognizer over the extended transition semigroup: `(s, e)` is
/// accepted when `s` reaches some `q` from an initial state and `e` loops
/// on `q` through a final state.
pub fn ba_to_strong(a: &BuchiAutomaton) -> Result<StrongRecognizer> {
    let closure = transition_semigroup(a, true)?;
    let h = profile_morphism(a, &closure);
    let n = a.states();
    Ok(StrongRecognizer::from_fn(h, |p| {
        let (s, e) = (&closure.elements[p.s], &closure.elements[p.e]);
        (0..n).any(|q| e.get(q, q) == FINAL_RUN && a.initial().iter().any(|&i| s.get(i, q) != NO_RUN))
    }))
}

/// Büchi automaton for a weak recognizer over `S` with `|S| = n`.
///
/// States are a prefix tracker on `S¹` (initial: the identity) and, for
/// each idempotent `e` used by an accepted pair, a loop tracker `(e, x)`
/// with `x ∈ S¹`. After a prefix with value `t` the automaton may start a
/// loop block of any accepted `(t, e)`; a block is closed whenever its
/// value reaches `e`, landing in the final state `(e, 1)`. At most
/// `(n + 1)(|E| + 1)` states.
pub fn weak_to_ba(rec: &WeakRecognizer) -> BuchiAutomaton {
    let h = rec.morphism();
    let sg = h.target();
    let n = sg.size();
    let one = n;
    let mul1 = |x: usize, y: usize| if x == one { y } else { sg.mul(x, y) };

    let mut loops: Vec<usize> = rec.accepting().iter().map(|p| p.e).collect();
    loops.sort_unstable();
    loops.dedup();
    let loop_state = |k: usize, x: usize| (n + 1) * (k + 1) + x;
    let states = (n + 1) * (loops.len() + 1);

    let mut transitions = Vec::new();
    for l in 0..h.alphabet().len() {
        let g = h.letter_image(l);
        for t in 0..=n {
            transitions.push((t, l, mul1(t, g)));
        }
        for p in rec.accepting() {
            let k = loops.binary_search(&p.e).unwrap();
            transitions.push((p.s, l, loop_state(k, g)));
            if g == p.e {
                transitions.push((p.s, l, loop_state(k, one)));
            }
        }
        for (k, &e) in loops.iter().enumerate() {
            for x in 0..=n {
                let y = mul1(x, g);
                transitions.push((loop_state(k, x), l, loop_state(k, y)));
                if y == e {
                    transitions.push((loop_state(k, x), l, loop_state(k, one)));
                }
            }
        }
    }
    let finals: Vec<State> = (0..loops.len()).map(|k| loop_state(k, one)).collect();
    BuchiAutomaton::new(states, h.alphabet().clone(), transitions, [one], finals)
        .expect("states and letters are in range by construction")
}
