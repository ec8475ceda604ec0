//! Witness families for the lower bounds and the machinery that certifies
//! them.

mod certify;
mod table1;

pub use certify::{
    certify_distinct, certify_lower_bound, certify_with, full_automaton_certificate,
    leftzero_certificate, thm6_certificate, LowerBoundCertificate, PairWitness, Witness,
};
pub use table1::{table1_report, Table1Options};

use crate::buchi::{thm6_automaton, thm6_word_set, BuchiAutomaton};
use crate::conversions::nfa_to_recognizer;
use crate::error::{Error, Result};
use crate::recognizer::{Morphism, WeakRecognizer};
use crate::semigroup::{FiniteSemigroup, LinkedPair};
use crate::word::{Alphabet, Letter, Word};

/// `b^ℓ a^i b^r` with `ℓ, r ∈ {0, 1}`: a word that starts with `b` iff `ℓ`,
/// continues with `a^i` and has a further `b` iff `r`. Exponents are capped
/// at `n + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Block {
    l: bool,
    i: usize,
    r: bool,
}

impl Block {
    /// Representative of the class: `b a^{>n}…` joins `bb`, `a^{>n}…` is `0`.
    fn normalize(self, n: usize) -> Block {
        match self {
            Block { l: true, i, .. } if i > n => Block { l: true, i: 0, r: true },
            Block { l: false, i, .. } if i > n => Block { l: false, i: n + 1, r: false },
            x => x,
        }
    }
}

fn block_elements(n: usize) -> Vec<Block> {
    let w = |l, i, r| Block { l, i, r };
    let mut out = Vec::with_capacity(4 * n + 3);
    for (l, r) in [(false, false), (false, true), (true, false), (true, true)] {
        out.extend((1..=n).map(|i| w(l, i, r)));
    }
    out.extend([w(true, 0, false), w(true, 0, true), w(false, n + 1, false)]);
    out
}

fn block_mul(n: usize, x: Block, y: Block) -> Block {
    let out = if x.r || y.l {
        Block { r: true, ..x }
    } else {
        Block { l: x.l, i: (x.i + y.i).min(n + 1), r: y.r }
    };
    out.normalize(n)
}

fn block_name(n: usize, x: Block) -> String {
    if x.i > n {
        return "0".into();
    }
    let a = match x.i {
        0 => String::new(),
        1 => "a".into(),
        i => format!("a{i}"),
    };
    let b = |on: bool| if on { "b" } else { "" };
    format!("{}{a}{}", b(x.l), b(x.r))
}

/// The `4n + 3` element semigroup `{aⁱ, aⁱb, baⁱ, baⁱb} ∪ {b, bb, 0}` with
/// `h(a) = a`, `h(b) = b`, accepting `(baⁱb, baⁱb)` for `1 ≤ i ≤ n`. It
/// weakly recognizes `⋃ (b aⁱ b A*)^ω`.
///
/// Elements are ordered `aⁱ`, `aⁱb`, `baⁱ`, `baⁱb` (each for `i = 1..n`),
/// then `b`, `bb`, `0`. Here `0` stands for the words `a^k…` with `k > n`;
/// it absorbs on the left only, and `b·0 = bb`.
pub fn theorem8_recognizer(n: usize) -> Result<WeakRecognizer> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let elements = block_elements(n);
    let id = |x: Block| elements.iter().position(|&y| y == x).expect("closed under the product");
    let table: Vec<_> = elements
        .iter()
        .flat_map(|&x| elements.iter().map(move |&y| (x, y)))
        .map(|(x, y)| id(block_mul(n, x, y)))
        .collect();
    let sg = FiniteSemigroup::from_table(elements.len(), table)?
        .with_names(elements.iter().map(|&x| block_name(n, x)).collect())?;
    let a = id(Block { l: false, i: 1, r: false });
    let b = id(Block { l: true, i: 0, r: false });
    let h = Morphism::new(Alphabet::from_chars("ab")?, sg, vec![a, b])?;
    let accept = (1..=n).map(|i| {
        let x = id(Block { l: true, i, r: true });
        LinkedPair::new(x, x)
    });
    WeakRecognizer::new(h, accept)
}

/// The left-zero semigroup on `n` letters with `h` the identity and
/// accepting `(aᵢ, aᵢ)`: the words whose first letter occurs infinitely often.
pub fn leftzero_recognizer(n: usize) -> Result<WeakRecognizer> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let alphabet = Alphabet::latin(n);
    let sg = FiniteSemigroup::from_fn(n, |s, _| s)?.with_names(alphabet.letters().to_vec())?;
    let h = Morphism::new(alphabet, sg, (0..n).collect())?;
    WeakRecognizer::new(h, (0..n).map(|i| LinkedPair::new(i, i)))
}

/// `u_{b,B}`: the letter `b` followed by the letters of `B` in increasing
/// order. `set` is a bitmask over the alphabet and must not contain `b`.
pub fn leftzero_word(b: Letter, set: u64) -> Result<Word> {
    if set >> b & 1 == 1 {
        return Err(Error::InvalidParameter(format!("letter {b} lies in its own set")));
    }
    let mut w = vec![b];
    w.extend((0..64).filter(|&a| set >> a & 1 == 1));
    Ok(w)
}

/// All `n·2^{n−1}` words `u_{b,B}`, by `b` and then by the bitmask of `B`.
pub fn leftzero_words(n: usize) -> Result<Vec<Word>> {
    if n == 0 || n > 16 {
        return Err(Error::InvalidParameter(format!("n must be in 1..=16, got {n}")));
    }
    let mut out = Vec::new();
    for b in 0..n {
        for set in 0..1u64 << n {
            if set >> b & 1 == 0 {
                out.push(leftzero_word(b, set)?);
            }
        }
    }
    Ok(out)
}

/// The words `u_X` for all `X ⊆ M × M`, indexed by the bitmask of `X` with
/// `(i, j)` at bit `(i−1)·m + (j−1)`. The empty set has no nonempty word in
/// the family; it is represented by `a^{m(m+1)}`, which fixes every state
/// and never crosses between the cycles.
pub fn thm6_words(n: usize) -> Result<Vec<Word>> {
    // validates n
    thm6_automaton(n)?;
    let m = (n - 1) / 2;
    if m * m > 16 {
        return Err(Error::InvalidParameter(format!("2^{} words is too many", m * m)));
    }
    (0..1u64 << (m * m))
        .map(|mask| {
            if mask == 0 {
                return Ok(vec![0; m * (m + 1)]);
            }
            let set: Vec<_> = (0..m * m)
                .filter(|&k| mask >> k & 1 == 1)
                .map(|k| (k / m + 1, k % m + 1))
                .collect();
            thm6_word_set(n, &set)
        })
        .collect()
}

/// Whether letter `a` satisfies `(q, a, f) ∈ δ ⇔ q = f` for every state `q`
/// and final `f`; if so, the size of the syntactic semigroup of the
/// finite-word language, a lower bound for every weak recognizer of the
/// Büchi language.
pub fn prop4_transfer(a: &BuchiAutomaton, letter: Letter) -> Result<(bool, Option<usize>)> {
    if letter >= a.alphabet().len() {
        return Err(Error::LetterOutOfRange(letter));
    }
    let holds = a
        .finals()
        .iter()
        .all(|&f| (0..a.states()).all(|q| a.has_transition(q, letter, f) == (q == f)));
    if !holds {
        return Ok((false, None));
    }
    let (synt, _) = nfa_to_recognizer(a)?.syntactic_quotient();
    Ok((true, Some(synt.morphism().target().size())))
}
