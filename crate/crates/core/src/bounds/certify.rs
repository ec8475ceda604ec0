use std::fmt::Write as _;

use super::{leftzero_recognizer, leftzero_words, thm6_words};
use crate::buchi::{full_automaton, thm6_automaton, BuchiAutomaton};
use crate::conversions::weak_to_strong_simple;
use crate::error::{Error, Result};
use crate::language::{Complement, OmegaLanguage};
use crate::word::{words_up_to, Alphabet, Letter, UpWord, Word};

/// Contexts separating two finite words for the weak-recognition lower
/// bound. Either orientation of `u` and `v` is accepted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// `x u y z^ω ∈ L` and `x v y z^ω ∉ L`.
    Kind1 { x: Word, y: Word, z: Word },
    /// `x (u y)^ω ∈ L`, `x (u y v y)^ω ∉ L` and `x (v y u y)^ω ∉ L`.
    Kind2 { x: Word, y: Word },
}

impl Witness {
    pub fn kind(&self) -> u8 {
        match self {
            Witness::Kind1 { .. } => 1,
            Witness::Kind2 { .. } => 2,
        }
    }
}

fn cat(parts: &[&[Letter]]) -> Word {
    parts.concat()
}

fn kind1_word(x: &[Letter], u: &[Letter], y: &[Letter], z: &[Letter]) -> UpWord {
    UpWord::new(cat(&[x, u, y]), z.to_vec()).expect("z is nonempty")
}

fn kind2_word(x: &[Letter], loop_parts: &[&[Letter]]) -> UpWord {
    UpWord::new(x.to_vec(), cat(loop_parts)).expect("loop contains a nonempty word")
}

/// Checks a witness against a membership oracle.
pub fn certify_distinct<L: OmegaLanguage + ?Sized>(
    oracle: &L,
    u: &[Letter],
    v: &[Letter],
    witness: &Witness,
) -> Result<bool> {
    if u.is_empty() || v.is_empty() {
        return Err(Error::MalformedWitness("u and v must be nonempty".into()));
    }
    let alphabet = oracle.alphabet();
    for w in [u, v] {
        alphabet.check_word(w)?;
    }
    match witness {
        Witness::Kind1 { x, y, z } => {
            if z.is_empty() {
                return Err(Error::MalformedWitness("z must be nonempty".into()));
            }
            for w in [x, y, z] {
                alphabet.check_word(w)?;
            }
            let with_u = oracle.contains(&kind1_word(x, u, y, z));
            let with_v = oracle.contains(&kind1_word(x, v, y, z));
            Ok(with_u != with_v)
        }
        Witness::Kind2 { x, y } => {
            for w in [x, y] {
                alphabet.check_word(w)?;
            }
            let mixed = oracle.contains(&kind2_word(x, &[u, y, v, y]))
                || oracle.contains(&kind2_word(x, &[v, y, u, y]));
            Ok(!mixed && (oracle.contains(&kind2_word(x, &[u, y])) || oracle.contains(&kind2_word(x, &[v, y]))))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairWitness {
    pub left: usize,
    pub right: usize,
    pub witness: Witness,
}

/// Pairwise-separated words: any morphism weakly recognizing the oracle's
/// language maps them to distinct elements, so it has at least
/// `claimed_bound` elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBoundCertificate {
    pub words: Vec<Word>,
    pub pairs: Vec<PairWitness>,
    pub claimed_bound: usize,
    pub oracle: String,
}

impl LowerBoundCertificate {
    /// Re-checks every stored witness and the pair coverage.
    pub fn verify<L: OmegaLanguage + ?Sized>(&self, oracle: &L) -> Result<bool> {
        let n = self.words.len();
        if self.claimed_bound != n || self.pairs.len() != n * n.saturating_sub(1) / 2 {
            return Ok(false);
        }
        let mut seen = vec![false; n * n];
        for p in &self.pairs {
            if p.left >= p.right || p.right >= n || seen[p.left * n + p.right] {
                return Ok(false);
            }
            seen[p.left * n + p.right] = true;
            if !certify_distinct(oracle, &self.words[p.left], &self.words[p.right], &p.witness)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// One line per pair: `pair <u> <v> kind <k> x <x> y <y> [z <z>]`,
    /// preceded by comment lines naming the oracle and the bound.
    pub fn to_text(&self, alphabet: &Alphabet) -> String {
        let f = |w: &[Letter]| alphabet.format_word(w);
        let mut out = String::new();
        writeln!(out, "# oracle {}", self.oracle).unwrap();
        writeln!(out, "# bound {}", self.claimed_bound).unwrap();
        for p in &self.pairs {
            let (u, v) = (f(&self.words[p.left]), f(&self.words[p.right]));
            match &p.witness {
                Witness::Kind1 { x, y, z } => {
                    writeln!(out, "pair {u} {v} kind 1 x {} y {} z {}", f(x), f(y), f(z)).unwrap()
                }
                Witness::Kind2 { x, y } => writeln!(out, "pair {u} {v} kind 2 x {} y {}", f(x), f(y)).unwrap(),
            }
        }
        out
    }
}

fn check_words(alphabet: &Alphabet, words: &[Word]) -> Result<()> {
    for w in words {
        if w.is_empty() {
            return Err(Error::EmptyWord);
        }
        alphabet.check_word(w)?;
    }
    Ok(())
}

/// Sorts contexts by total length, then lexicographically.
fn by_length(mut v: Vec<Vec<&Word>>) -> Vec<Vec<&Word>> {
    let len = |c: &Vec<&Word>| c.iter().map(|w| w.len()).sum::<usize>();
    v.sort_by(|a, b| len(a).cmp(&len(b)).then_with(|| a.cmp(b)));
    v
}

fn uncertified(alphabet: &Alphabet, u: &[Letter], v: &[Letter]) -> Error {
    Error::Uncertified(alphabet.format_word(u), alphabet.format_word(v))
}

/// Searches a witness for every pair of `words` with `|x|, |y|, |z| ≤ max_len`.
///
/// Kind 1 is tried before kind 2; contexts are ordered by total length and
/// then lexicographically, so the first witness found is deterministic.
pub fn certify_lower_bound<L: OmegaLanguage + ?Sized>(
    oracle: &L,
    words: &[Word],
    max_len: usize,
) -> Result<LowerBoundCertificate> {
    let alphabet = oracle.alphabet();
    check_words(alphabet, words)?;
    let n = words.len();
    let mut found: Vec<Option<Witness>> = vec![None; n * n];
    let mut open: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();

    let short = words_up_to(alphabet.len(), max_len);

    let mut contexts1 = Vec::new();
    for x in &short {
        for y in &short {
            for z in short.iter().filter(|z| !z.is_empty()) {
                contexts1.push(vec![x, y, z]);
            }
        }
    }
    for c in by_length(contexts1) {
        if open.is_empty() {
            break;
        }
        let (x, y, z) = (c[0], c[1], c[2]);
        let member: Vec<bool> = words.iter().map(|u| oracle.contains(&kind1_word(x, u, y, z))).collect();
        open.retain(|&(i, j)| {
            if member[i] != member[j] {
                found[i * n + j] = Some(Witness::Kind1 { x: x.clone(), y: y.clone(), z: z.clone() });
                false
            } else {
                true
            }
        });
    }

    let mut contexts2 = Vec::new();
    for x in &short {
        for y in &short {
            contexts2.push(vec![x, y]);
        }
    }
    for c in by_length(contexts2) {
        if open.is_empty() {
            break;
        }
        let (x, y) = (c[0], c[1]);
        let single: Vec<bool> = words.iter().map(|u| oracle.contains(&kind2_word(x, &[u, y]))).collect();
        open.retain(|&(i, j)| {
            let (u, v) = (&words[i], &words[j]);
            let ok = (single[i] || single[j])
                && !oracle.contains(&kind2_word(x, &[u, y, v, y]))
                && !oracle.contains(&kind2_word(x, &[v, y, u, y]));
            if ok {
                found[i * n + j] = Some(Witness::Kind2 { x: x.clone(), y: y.clone() });
            }
            !ok
        });
    }

    if let Some(&(i, j)) = open.first() {
        return Err(uncertified(alphabet, &words[i], &words[j]));
    }
    let pairs = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| PairWitness {
            left: i,
            right: j,
            witness: found[i * n + j].take().unwrap(),
        })
        .collect();
    Ok(LowerBoundCertificate {
        words: words.to_vec(),
        pairs,
        claimed_bound: n,
        oracle: oracle.describe(),
    })
}

/// Certifies `words` with witnesses proposed by `propose`, checking each.
pub fn certify_with<L, F>(oracle: &L, words: &[Word], propose: F) -> Result<LowerBoundCertificate>
where
    L: OmegaLanguage + ?Sized,
    F: Fn(usize, usize) -> Witness,
{
    let alphabet = oracle.alphabet();
    check_words(alphabet, words)?;
    let n = words.len();
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let witness = propose(i, j);
            if !certify_distinct(oracle, &words[i], &words[j], &witness)? {
                return Err(uncertified(alphabet, &words[i], &words[j]));
            }
            pairs.push(PairWitness { left: i, right: j, witness });
        }
    }
    Ok(LowerBoundCertificate {
        words: words.to_vec(),
        pairs,
        claimed_bound: n,
        oracle: oracle.describe(),
    })
}

/// All letters of the full automaton on `n` states with `I = F = N`,
/// separated by `P X Q (D)^ω` where `P`, `Q` are singleton loops at the
/// ends of a pair in `X Δ Y` and `D` is the diagonal letter.
pub fn full_automaton_certificate(n: usize) -> Result<(BuchiAutomaton, LowerBoundCertificate)> {
    let all: Vec<usize> = (0..n).collect();
    let full = full_automaton(n, &all, &all)?;
    let loop_at = |p: usize| 1usize << (p * n + p);
    let diagonal = (0..n).map(loop_at).fold(0, |a, b| a | b);
    let words: Vec<Word> = (0..full.alphabet().len()).map(|x| vec![x]).collect();
    let cert = certify_with(&full, &words, |x, y| {
        let bit = (x ^ y).trailing_zeros() as usize;
        let (p, q) = (bit / n, bit % n);
        Witness::Kind1 { x: vec![loop_at(p)], y: vec![loop_at(q)], z: vec![diagonal] }
    })?;
    Ok((full, cert))
}

/// The words `u_X` of the binary family on `n` states, separated by
/// `a^{i−1} u a^{m+1−j} b^ω` for the least `(i, j) ∈ X Δ Y`.
pub fn thm6_certificate(n: usize) -> Result<(BuchiAutomaton, LowerBoundCertificate)> {
    let a = thm6_automaton(n)?;
    let m = (n - 1) / 2;
    let words = thm6_words(n)?;
    let cert = certify_with(&a, &words, |x, y| {
        let k = (x ^ y).trailing_zeros() as usize;
        let (i, j) = (k / m + 1, k % m + 1);
        Witness::Kind1 { x: vec![0; i - 1], y: vec![0; m + 1 - j], z: vec![1] }
    })?;
    Ok((a, cert))
}

/// The `n·2^{n−1}` words `u_{b,B}` for the complement of "the first letter
/// occurs infinitely often", checked against the complement of the simple
/// semigroup expansion.
pub fn leftzero_certificate(n: usize, max_len: usize) -> Result<LowerBoundCertificate> {
    let oracle = Complement(weak_to_strong_simple(&leftzero_recognizer(n)?)?);
    certify_lower_bound(&oracle, &leftzero_words(n)?, max_len)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{leftzero_word, thm6_words};
    use crate::recognizer::WeakRecognizer;

    fn lz(n: usize) -> Complement<WeakRecognizer> {
        Complement(leftzero_recognizer(n).unwrap())
    }

    #[test]
    fn kind1_on_distinct_first_letters() {
        // u_{a,∅} = a, u_{b,∅} = b: a b^ω lies in the complement, b b^ω does not
        let w = Witness::Kind1 { x: vec![], y: vec![], z: vec![1] };
        assert!(certify_distinct(&lz(2), &[0], &[1], &w).unwrap());
        assert!(certify_distinct(&lz(2), &[1], &[0], &w).unwrap());
        assert!(certify_distinct(&leftzero_recognizer(2).unwrap(), &[0], &[1], &w).unwrap());
    }

    #[test]
    fn kind2_on_distinct_sets() {
        // b = c = a_1; a ∈ B \ C with B = {a}, C = ∅ over three letters
        let u = leftzero_word(1, 0b001).unwrap();
        let v = leftzero_word(1, 0).unwrap();
        let w = Witness::Kind2 { x: vec![0], y: vec![] };
        assert!(certify_distinct(&lz(3), &u, &v, &w).unwrap());
        assert!(certify_distinct(&lz(3), &v, &u, &w).unwrap());
    }

    #[test]
    fn equal_words_are_never_separated() {
        let w1 = Witness::Kind1 { x: vec![0], y: vec![1], z: vec![0, 1] };
        let w2 = Witness::Kind2 { x: vec![0], y: vec![] };
        for w in [w1, w2] {
            assert!(!certify_distinct(&lz(2), &[0, 1], &[0, 1], &w).unwrap());
        }
    }

    #[test]
    fn malformed_witnesses() {
        let empty_z = Witness::Kind1 { x: vec![], y: vec![], z: vec![] };
        assert!(matches!(certify_distinct(&lz(2), &[0], &[1], &empty_z), Err(Error::MalformedWitness(_))));
        let ok = Witness::Kind2 { x: vec![], y: vec![] };
        assert!(matches!(certify_distinct(&lz(2), &[], &[1], &ok), Err(Error::MalformedWitness(_))));
    }

    #[test]
    fn search_on_small_lists() {
        let single = certify_lower_bound(&lz(2), &[vec![0]], 1).unwrap();
        assert_eq!(single.claimed_bound, 1);
        assert!(single.pairs.is_empty());

        let cert = leftzero_certificate(3, 2).unwrap();
        assert_eq!(cert.claimed_bound, 12);
        assert!(cert.verify(&lz(3)).unwrap());

        let err = certify_lower_bound(&lz(2), &[vec![0, 1], vec![0, 1]], 1).unwrap_err();
        assert_eq!(err, Error::Uncertified("ab".into(), "ab".into()));
    }

    #[test]
    fn literal_binary_witness_does_not_separate() {
        let (a, cert) = thm6_certificate(5).unwrap();
        assert_eq!(cert.claimed_bound, 16);
        let words = thm6_words(5).unwrap();
        let n = 5;
        // X = {(1,1)} against ∅ with the exponent n − j
        let literal = Witness::Kind1 { x: vec![], y: vec![0; n - 1], z: vec![1] };
        assert!(!certify_distinct(&a, &words[1], &words[0], &literal).unwrap());
        let corrected = Witness::Kind1 { x: vec![], y: vec![0; 2], z: vec![1] };
        assert!(certify_distinct(&a, &words[1], &words[0], &corrected).unwrap());
    }

    #[test]
    fn full_automaton_letters() {
        let (full, cert) = full_automaton_certificate(2).unwrap();
        assert_eq!(cert.claimed_bound, 16);
        assert_eq!(cert.pairs.len(), 120);
        assert!(cert.verify(&full).unwrap());
        let text = cert.to_text(full.alphabet());
        assert!(text.lines().any(|l| l == "pair T0 T1 kind 1 x T1 y T1 z T9"));
    }
}
