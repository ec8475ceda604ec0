//! Nondeterministic automata read with finite-word or Büchi acceptance.

mod families;

pub use families::{
    full_automaton, full_letter_map, full_letter_token, thm6_automaton, thm6_exponents, thm6_word,
    thm6_word_set, thm8_reference_ba, FullLetterMap, MAX_FULL_AUTOMATON_STATES,
};

use crate::error::{Error, Result};
use crate::language::OmegaLanguage;
use crate::word::{Alphabet, Letter, UpWord};

pub type State = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuchiAutomaton {
    states: usize,
    alphabet: Alphabet,
    transitions: Vec<(State, Letter, State)>,
    initial: Vec<State>,
    finals: Vec<State>,
    /// successors of `p` on `a` at `a * states + p`
    succ: Vec<Vec<State>>,
    is_final: Vec<bool>,
}

impl BuchiAutomaton {
    pub fn new(
        states: usize,
        alphabet: Alphabet,
        transitions: impl IntoIterator<Item = (State, Letter, State)>,
        initial: impl IntoIterator<Item = State>,
        finals: impl IntoIterator<Item = State>,
    ) -> Result<Self> {
        let check = |q: State| if q < states { Ok(q) } else { Err(Error::StateOutOfRange(q)) };
        let mut transitions: Vec<_> = transitions.into_iter().collect();
        for &(p, a, q) in &transitions {
            check(p)?;
            check(q)?;
            if a >= alphabet.len() {
                return Err(Error::LetterOutOfRange(a));
            }
        }
        transitions.sort_unstable();
        transitions.dedup();
        let mut initial = initial.into_iter().map(check).collect::<Result<Vec<_>>>()?;
        initial.sort_unstable();
        initial.dedup();
        let mut finals = finals.into_iter().map(check).collect::<Result<Vec<_>>>()?;
        finals.sort_unstable();
        finals.dedup();

        let mut succ = vec![Vec::new(); alphabet.len() * states];
        for &(p, a, q) in &transitions {
            succ[a * states + p].push(q);
        }
        for list in &mut succ {
            list.sort_unstable();
        }
        let mut is_final = vec![false; states];
        for &f in &finals {
            is_final[f] = true;
        }
        Ok(BuchiAutomaton {
            states,
            alphabet,
            transitions,
            initial,
            finals,
            succ,
            is_final,
        })
    }

    pub fn states(&self) -> usize {
        self.states
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn transitions(&self) -> &[(State, Letter, State)] {
        &self.transitions
    }

    pub fn initial(&self) -> &[State] {
        &self.initial
    }

    pub fn finals(&self) -> &[State] {
        &self.finals
    }

    pub fn is_final(&self, q: State) -> bool {
        self.is_final[q]
    }

    pub fn successors(&self, p: State, a: Letter) -> &[State] {
        &self.succ[a * self.states + p]
    }

    pub fn has_transition(&self, p: State, a: Letter, q: State) -> bool {
        self.successors(p, a).binary_search(&q).is_ok()
    }

    fn step(&self, current: &[bool], a: Letter) -> Vec<bool> {
        let mut next = vec![false; self.states];
        for p in (0..self.states).filter(|&p| current[p]) {
            for &q in self.successors(p, a) {
                next[q] = true;
            }
        }
        next
    }

    fn initial_set(&self) -> Vec<bool> {
        let mut set = vec![false; self.states];
        for &q in &self.initial {
            set[q] = true;
        }
        set
    }

    /// Finite-word acceptance: some run from an initial state ends in a
    /// final state. The empty word is accepted iff `I ∩ F ≠ ∅`.
    pub fn nfa_accepts(&self, w: &[Letter]) -> Result<bool> {
        self.alphabet.check_word(w)?;
        let set = w.iter().fold(self.initial_set(), |cur, &a| self.step(&cur, a));
        Ok((0..self.states).any(|q| set[q] && self.is_final[q]))
    }

    pub fn letter_profile(&self, a: Letter, extended: bool) -> TransitionProfile {
        let n = self.states;
        let mut entries = vec![NO_RUN; n * n];
        for p in 0..n {
            for &q in self.successors(p, a) {
                entries[p * n + q] = if extended && self.is_final[q] { FINAL_RUN } else { RUN };
            }
        }
        TransitionProfile { dim: n, entries }
    }

    /// Run profile of a nonempty word. In the extended variant an entry is
    /// `2` when some run visits a final state after its first step.
    pub fn profile(&self, w: &[Letter], extended: bool) -> Result<TransitionProfile> {
        self.alphabet.check_word(w)?;
        let (first, rest) = w.split_first().ok_or(Error::EmptyWord)?;
        Ok(rest.iter().fold(self.letter_profile(*first, extended), |acc, &a| {
            acc.compose(&self.letter_profile(a, extended))
        }))
    }

    /// Büchi acceptance of `u v^ω`.
    ///
    /// Let `e` be the idempotent power of the extended profile of `v`. An
    /// accepting lasso exists iff some state `q` reachable on `u v^j`
    /// (`j ≥ 0`) has `e(q, q) = 2`: a loop on some `v^k` through a final
    /// state gives one on `v^{k·p} = e` as well.
    pub fn accepts_up(&self, w: &UpWord) -> bool {
        let mut reach = w.prefix().iter().fold(self.initial_set(), |cur, &a| self.step(&cur, a));
        let m = self.profile(w.period(), true).expect("period is nonempty and valid");
        let e = m.idempotent_power();
        let mut stack: Vec<State> = (0..self.states).filter(|&q| reach[q]).collect();
        while let Some(p) = stack.pop() {
            for q in 0..self.states {
                if m.get(p, q) != NO_RUN && !reach[q] {
                    reach[q] = true;
                    stack.push(q);
                }
            }
        }
        (0..self.states).any(|q| reach[q] && e.get(q, q) == FINAL_RUN)
    }
}

impl OmegaLanguage for BuchiAutomaton {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn contains(&self, w: &UpWord) -> bool {
        self.accepts_up(w)
    }

    fn describe(&self) -> String {
        format!("buchi(states={})", self.states)
    }
}

pub const NO_RUN: u8 = 0;
pub const RUN: u8 = 1;
pub const FINAL_RUN: u8 = 2;

/// Which pairs of states a word connects, optionally recording whether the
/// connecting run can pass through a final state.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TransitionProfile {
    dim: usize,
    entries: Vec<u8>,
}

impl TransitionProfile {
    pub fn from_entries(dim: usize, entries: Vec<u8>) -> Self {
        assert_eq!(entries.len(), dim * dim);
        assert!(entries.iter().all(|&v| v <= FINAL_RUN));
        TransitionProfile { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, p: State, q: State) -> u8 {
        self.entries[p * self.dim + q]
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn compose(&self, other: &TransitionProfile) -> TransitionProfile {
        let n = self.dim;
        let mut out = vec![NO_RUN; n * n];
        for p in 0..n {
            let row = &mut out[p * n..(p + 1) * n];
            for q in 0..n {
                let x = self.entries[p * n + q];
                if x == NO_RUN {
                    continue;
                }
                for (r, slot) in row.iter_mut().enumerate() {
                    let y = other.entries[q * n + r];
                    if y == NO_RUN {
                        continue;
                    }
                    let v = if x == RUN && y == RUN { RUN } else { FINAL_RUN };
                    if v > *slot {
                        *slot = v;
                    }
                }
            }
        }
        TransitionProfile { dim: n, entries: out }
    }

    pub fn is_idempotent(&self) -> bool {
        self.compose(self) == *self
    }

    pub fn idempotent_power(&self) -> TransitionProfile {
        let mut x = self.clone();
        loop {
            let xx = x.compose(&x);
            if xx == x {
                return x;
            }
            // x ← x·self walks the powers; squaring-based shortcuts would
            // skip the idempotent when the period does not divide them.
            x = x.compose(self);
        }
    }
}
