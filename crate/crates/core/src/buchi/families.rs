//! Concrete automata: full automata and the witness families for the
//! binary-alphabet and quadratic state lower bounds.

use super::{BuchiAutomaton, State};
use crate::error::{Error, Result};
use crate::word::{Alphabet, Letter, Word};

/// Full automata have `2^{n²}` letters; beyond 3 states that is unusable.
pub const MAX_FULL_AUTOMATON_STATES: usize = 3;

/// Token for the letter whose transition relation is `mask`, bit `p·n + q`
/// standing for the pair `(p, q)`.
pub fn full_letter_token(n: usize, mask: u64) -> String {
    let width = (n * n).div_ceil(4).max(1);
    format!("T{mask:0width$x}")
}

/// The automaton over all relations on `n` states: `(p, T, q)` is a
/// transition iff `(p, q) ∈ T`. Letter `T` has index equal to its bitmask.
pub fn full_automaton(n: usize, initial: &[State], finals: &[State]) -> Result<BuchiAutomaton> {
    if n == 0 || n > MAX_FULL_AUTOMATON_STATES {
        return Err(Error::InvalidParameter(format!(
            "full automaton needs 1..={MAX_FULL_AUTOMATON_STATES} states, got {n}"
        )));
    }
    let letters = 1u64 << (n * n);
    let alphabet = Alphabet::new((0..letters).map(|m| full_letter_token(n, m)))?;
    let mut transitions = Vec::new();
    for mask in 0..letters {
        for bit in 0..n * n {
            if mask >> bit & 1 == 1 {
                transitions.push((bit / n, mask as Letter, bit % n));
            }
        }
    }
    BuchiAutomaton::new(n, alphabet, transitions, initial.iter().copied(), finals.iter().copied())
}

/// Letter-wise map `a ↦ {(p, q) : (p, a, q) ∈ δ}` into the full automaton
/// on the same states, initial and final sets.
#[derive(Debug, Clone)]
pub struct FullLetterMap {
    full: BuchiAutomaton,
    map: Vec<Letter>,
}

impl FullLetterMap {
    pub fn full(&self) -> &BuchiAutomaton {
        &self.full
    }

    pub fn letter(&self, a: Letter) -> Letter {
        self.map[a]
    }

    pub fn apply(&self, w: &[Letter]) -> Word {
        w.iter().map(|&a| self.map[a]).collect()
    }
}

pub fn full_letter_map(a: &BuchiAutomaton) -> Result<FullLetterMap> {
    let n = a.states();
    let full = full_automaton(n, a.initial(), a.finals())?;
    let mut map = vec![0; a.alphabet().len()];
    for &(p, l, q) in a.transitions() {
        map[l] |= 1 << (p * n + q);
    }
    Ok(FullLetterMap { full, map })
}

fn thm6_half(n: usize) -> Result<usize> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidParameter(format!("state count must be odd and at least 3, got {n}")));
    }
    Ok((n - 1) / 2)
}

/// Two `a`-cycles, `1 → … → m → 1` and `m+1 → … → n → m+1`, `b`-loops on
/// every state and the single crossing `(m, b, m+1)`; initial state `1`,
/// final state `n`. Letters: `a` = 0, `b` = 1. State `k` has id `k - 1`.
pub fn thm6_automaton(n: usize) -> Result<BuchiAutomaton> {
    let m = thm6_half(n)?;
    let (a, b) = (0, 1);
    let mut transitions = Vec::new();
    for k in 0..m {
        transitions.push((k, a, (k + 1) % m));
    }
    for k in 0..=m {
        transitions.push((m + k, a, m + (k + 1) % (m + 1)));
    }
    for q in 0..n {
        transitions.push((q, b, q));
    }
    transitions.push((m - 1, b, m));
    BuchiAutomaton::new(n, Alphabet::from_chars("ab")?, transitions, [0], [n - 1])
}

/// `(p_{i,j}, q_{i,j}) = ((m+j−i)m − i, (m+i−j+2)m + i)` for `1 ≤ i, j ≤ m`.
pub fn thm6_exponents(n: usize, i: usize, j: usize) -> Result<(usize, usize)> {
    let m = thm6_half(n)?;
    if !(1..=m).contains(&i) || !(1..=m).contains(&j) {
        return Err(Error::InvalidParameter(format!("indices ({i}, {j}) outside 1..={m}")));
    }
    Ok(((m + j - i) * m - i, (m + i + 2 - j) * m + i))
}

/// `u_{i,j} = a^{p_{i,j}} b a^{q_{i,j}}`, which connects state `i` to `m + j`.
pub fn thm6_word(n: usize, i: usize, j: usize) -> Result<Word> {
    let (p, q) = thm6_exponents(n, i, j)?;
    let mut w = vec![0; p];
    w.push(1);
    w.extend(std::iter::repeat_n(0, q));
    Ok(w)
}

/// Concatenation of `u_{i,j}` over `set`, taken in increasing `(i, j)` order.
pub fn thm6_word_set(n: usize, set: &[(usize, usize)]) -> Result<Word> {
    let mut pairs = set.to_vec();
    pairs.sort_unstable();
    pairs.dedup();
    let mut w = Vec::new();
    for (i, j) in pairs {
        w.extend(thm6_word(n, i, j)?);
    }
    Ok(w)
}

/// A deliberately plain Büchi automaton for `⋃_{i=1}^{n} (b aⁱ b A*)^ω`:
/// one component per `i` that reads a block `b aⁱ b`, enters its final
/// state, and then idles on `A*` until it guesses the next block start.
pub fn thm8_reference_ba(n: usize) -> Result<BuchiAutomaton> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let (a, b) = (0, 1);
    let mut transitions = Vec::new();
    let mut initial = Vec::new();
    let mut finals = Vec::new();
    let mut next = 0;
    for i in 1..=n {
        // start, after-b, after a^1..a^i, done, idle
        let start = next;
        let after_b = start + 1;
        let run = |k: usize| after_b + k;
        let done = run(i) + 1;
        let idle = done + 1;
        next = idle + 1;

        transitions.push((start, b, after_b));
        for k in 0..i {
            transitions.push((run(k), a, run(k + 1)));
        }
        transitions.push((run(i), b, done));
        for state in [done, idle] {
            transitions.push((state, a, idle));
            transitions.push((state, b, idle));
            transitions.push((state, b, after_b));
        }
        initial.push(start);
        finals.push(done);
    }
    BuchiAutomaton::new(next, Alphabet::from_chars("ab")?, transitions, initial, finals)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_automaton_shapes() {
        let f1 = full_automaton(1, &[0], &[0]).unwrap();
        assert_eq!(f1.alphabet().letters(), &["T0".to_string(), "T1".to_string()]);
        assert!(f1.nfa_accepts(&[1, 1]).unwrap());
        assert!(!f1.nfa_accepts(&[0]).unwrap());

        let f2 = full_automaton(2, &[0, 1], &[0, 1]).unwrap();
        assert_eq!(f2.alphabet().len(), 16);
        assert_eq!(f2.transitions().len(), 32);
        for mask in 0..16usize {
            for p in 0..2 {
                for q in 0..2 {
                    assert_eq!(f2.has_transition(p, mask, q), mask >> (p * 2 + q) & 1 == 1);
                }
            }
        }
        assert!(full_automaton(4, &[], &[]).is_err());
    }

    #[test]
    fn separating_words_for_full_letters() {
        // P X Q with P = {(p,p)}, Q = {(q,q)} separates X from Y when (p,q) ∈ X \ Y
        let f2 = full_automaton(2, &[0, 1], &[0, 1]).unwrap();
        let diag = |p: usize| 1usize << (p * 2 + p);
        for x in 0..16usize {
            for y in 0..16usize {
                if x == y {
                    continue;
                }
                let sep = (0..4).find(|&bit| x >> bit & 1 == 1 && y >> bit & 1 == 0);
                if let Some(bit) = sep {
                    let (p, q) = (bit / 2, bit % 2);
                    assert!(f2.nfa_accepts(&[diag(p), x, diag(q)]).unwrap());
                    assert!(!f2.nfa_accepts(&[diag(p), y, diag(q)]).unwrap());
                }
            }
        }
    }

    #[test]
    fn full_letter_map_of_an_empty_letter() {
        let a = BuchiAutomaton::new(2, Alphabet::from_chars("ab").unwrap(), [(0, 1, 1)], [0], [1]).unwrap();
        let map = full_letter_map(&a).unwrap();
        assert_eq!(map.letter(0), 0);
        assert_eq!(map.letter(1), 1 << 1);
        assert_eq!(map.full().alphabet().letter(map.letter(1)), "T2");
    }

    #[test]
    fn binary_family_formulas() {
        assert_eq!(thm6_word(5, 1, 1).unwrap(), {
            let mut w = vec![0; 3];
            w.push(1);
            w.extend([0; 9]);
            w
        });
        for n in [3, 5, 7, 9] {
            let m = (n - 1) / 2;
            for i in 1..=m {
                for j in 1..=m {
                    let (p, q) = thm6_exponents(n, i, j).unwrap();
                    assert_eq!(p + q, 2 * m * (m + 1));
                }
            }
        }
        assert!(thm6_automaton(4).is_err());
        assert!(thm6_exponents(5, 3, 1).is_err());
    }

    #[test]
    fn binary_family_final_state_condition() {
        for n in [3, 5, 7] {
            let a = thm6_automaton(n).unwrap();
            for q in 0..n {
                assert_eq!(a.has_transition(q, 1, n - 1), q == n - 1);
            }
        }
    }

    #[test]
    fn block_reference_examples() {
        let ba = thm8_reference_ba(3).unwrap();
        let al = ba.alphabet().clone();
        let up = |u: &str, v: &str| al.parse_up_word(u, v).unwrap();
        assert!(ba.accepts_up(&up("bab", "bab")));
        assert!(ba.accepts_up(&up("-", "bab")));
        assert!(!ba.accepts_up(&up("-", "baaaab")));
        assert!(ba.accepts_up(&up("baab", "baab")));
        // one block followed by a tail without blocks
        assert!(!ba.accepts_up(&up("bab", "a")));
        // other blocks are absorbed by A*
        assert!(ba.accepts_up(&up("-", "babbaab")));
        assert!(ba.accepts_up(&up("-", "babaab")));
        // a block with i = 4 > n never completes
        assert!(!ba.accepts_up(&up("bab", "baaaab")));
    }
}
