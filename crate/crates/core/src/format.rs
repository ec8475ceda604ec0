//! Line-based text formats for semigroups, recognizers and automata.
//!
//! Blank lines and `#` comments are ignored everywhere; anything else that
//! does not fit the format is an error carrying its line number.
//!
//! ```text
//! semigroup 2          morphism               automaton 2
//! 0 0                  alphabet a b           alphabet a b
//! 1 1                  letter a 0             initial 0
//! names a b            letter b 1             final 1
//!                      semigroup-ref lz.sg    trans 0 a 1
//!                      accept-weak 0 0        trans 1 b 1
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::buchi::BuchiAutomaton;
use crate::error::{Error, Result};
use crate::recognizer::{FiniteWordRecognizer, Morphism, StrongRecognizer, WeakRecognizer};
use crate::semigroup::{FiniteSemigroup, LinkedPair};
use crate::word::{Alphabet, Word};

/// A parsed morphism file; the variant follows its accept lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecognizerFile {
    Morphism(Morphism),
    Weak(WeakRecognizer),
    Strong(StrongRecognizer),
    Finite(FiniteWordRecognizer),
}

impl RecognizerFile {
    pub fn morphism(&self) -> &Morphism {
        match self {
            RecognizerFile::Morphism(h) => h,
            RecognizerFile::Weak(r) => r.morphism(),
            RecognizerFile::Strong(r) => r.morphism(),
            RecognizerFile::Finite(r) => r.morphism(),
        }
    }
}

struct Lines<'a> {
    inner: std::iter::Peekable<Box<dyn Iterator<Item = (usize, Vec<&'a str>)> + 'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let it: Box<dyn Iterator<Item = (usize, Vec<&'a str>)> + 'a> = Box::new(
            text.lines()
                .enumerate()
                .map(|(i, l)| (i + 1, l.split('#').next().unwrap().split_whitespace().collect::<Vec<_>>()))
                .filter(|(_, toks)| !toks.is_empty()),
        );
        Lines { inner: it.peekable(), last: 0 }
    }

    fn next(&mut self) -> Option<(usize, Vec<&'a str>)> {
        let item = self.inner.next();
        if let Some((n, _)) = &item {
            self.last = *n;
        }
        item
    }

    fn peek_keyword(&mut self) -> Option<&'a str> {
        self.inner.peek().map(|(_, t)| t[0])
    }

    fn expect(&mut self, what: &str) -> Result<(usize, Vec<&'a str>)> {
        self.next().ok_or_else(|| err(self.last + 1, format!("unexpected end of input, expected {what}")))
    }
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn number(line: usize, tok: &str) -> Result<usize> {
    tok.parse().map_err(|_| err(line, format!("expected a number, got `{tok}`")))
}

fn arity(line: usize, toks: &[&str], n: usize) -> Result<()> {
    if toks.len() != n {
        return Err(err(line, format!("`{}` takes {} argument(s), got {}", toks[0], n - 1, toks.len() - 1)));
    }
    Ok(())
}

fn semigroup_block(lines: &mut Lines) -> Result<FiniteSemigroup> {
    let (line, head) = lines.expect("`semigroup <n>`")?;
    if head[0] != "semigroup" {
        return Err(err(line, format!("expected `semigroup`, got `{}`", head[0])));
    }
    arity(line, &head, 2)?;
    let n = number(line, head[1])?;
    let mut table = Vec::with_capacity(n * n);
    for _ in 0..n {
        let (line, row) = lines.expect("a table row")?;
        if row.len() != n {
            return Err(err(line, format!("expected {n} entries, got {}", row.len())));
        }
        for tok in row {
            table.push(number(line, tok)?);
        }
    }
    let sg = FiniteSemigroup::from_table(n, table).map_err(|e| err(line, e.to_string()))?;
    if lines.peek_keyword() == Some("names") {
        let (line, toks) = lines.next().unwrap();
        let names = toks[1..].iter().map(|s| s.to_string()).collect();
        return sg.with_names(names).map_err(|e| err(line, e.to_string()));
    }
    Ok(sg)
}

fn finish(lines: &mut Lines) -> Result<()> {
    match lines.next() {
        Some((line, toks)) => Err(err(line, format!("unexpected `{}`", toks[0]))),
        None => Ok(()),
    }
}

pub fn parse_semigroup(text: &str) -> Result<FiniteSemigroup> {
    let mut lines = Lines::new(text);
    let sg = semigroup_block(&mut lines)?;
    finish(&mut lines)?;
    Ok(sg)
}

pub fn write_semigroup(sg: &FiniteSemigroup) -> String {
    let n = sg.size();
    let mut out = format!("semigroup {n}\n");
    let width = n.saturating_sub(1).to_string().len();
    for s in 0..n {
        let row: Vec<String> = sg.row(s).map(|t| format!("{t:>width$}")).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    if let Some(names) = sg.names() {
        writeln!(out, "names {}", names.join(" ")).unwrap();
    }
    out
}

/// Parses a morphism file. `resolve` loads the text behind a
/// `semigroup-ref <path>` line.
pub fn parse_recognizer(text: &str, resolve: impl Fn(&str) -> Result<String>) -> Result<RecognizerFile> {
    let mut lines = Lines::new(text);
    let (line, head) = lines.expect("`morphism`")?;
    if head != ["morphism"] {
        return Err(err(line, "expected `morphism`"));
    }
    let mut alphabet: Option<Alphabet> = None;
    let mut letters: BTreeMap<usize, usize> = BTreeMap::new();
    let mut sg: Option<FiniteSemigroup> = None;
    let mut weak = Vec::new();
    let mut strong = BTreeMap::new();
    let mut fin = Vec::new();
    let mut kinds = BTreeSet::new();

    while let Some(key) = lines.peek_keyword() {
        if key == "semigroup" {
            if sg.is_some() {
                return Err(err(lines.last + 1, "duplicate semigroup"));
            }
            sg = Some(semigroup_block(&mut lines)?);
            continue;
        }
        let (line, toks) = lines.next().unwrap();
        match toks[0] {
            "alphabet" => {
                if alphabet.is_some() {
                    return Err(err(line, "duplicate alphabet"));
                }
                alphabet = Some(Alphabet::new(toks[1..].iter().copied()).map_err(|e| err(line, e.to_string()))?);
            }
            "letter" => {
                arity(line, &toks, 3)?;
                let al = alphabet.as_ref().ok_or_else(|| err(line, "`letter` before `alphabet`"))?;
                let a = al.index_of(toks[1]).ok_or_else(|| err(line, format!("unknown letter `{}`", toks[1])))?;
                if letters.insert(a, number(line, toks[2])?).is_some() {
                    return Err(err(line, format!("letter `{}` assigned twice", toks[1])));
                }
            }
            "semigroup-ref" => {
                arity(line, &toks, 2)?;
                if sg.is_some() {
                    return Err(err(line, "duplicate semigroup"));
                }
                let text = resolve(toks[1]).map_err(|e| err(line, e.to_string()))?;
                sg = Some(parse_semigroup(&text).map_err(|e| err(line, format!("in {}: {e}", toks[1])))?);
            }
            "accept-weak" => {
                arity(line, &toks, 3)?;
                kinds.insert("weak");
                weak.push(LinkedPair::new(number(line, toks[1])?, number(line, toks[2])?));
            }
            "accept-strong" => {
                arity(line, &toks, 4)?;
                kinds.insert("strong");
                let p = LinkedPair::new(number(line, toks[1])?, number(line, toks[2])?);
                let b = match toks[3] {
                    "0" => false,
                    "1" => true,
                    t => return Err(err(line, format!("expected 0 or 1, got `{t}`"))),
                };
                if strong.insert(p, b).is_some() {
                    return Err(err(line, format!("pair ({}, {}) listed twice", p.s, p.e)));
                }
            }
            "accept-fin" => {
                arity(line, &toks, 2)?;
                kinds.insert("fin");
                fin.push(number(line, toks[1])?);
            }
            other => return Err(err(line, format!("unknown keyword `{other}`"))),
        }
    }
    let end = lines.last;
    let alphabet = alphabet.ok_or_else(|| err(end, "missing `alphabet`"))?;
    let sg = sg.ok_or_else(|| err(end, "missing semigroup"))?;
    if kinds.len() > 1 {
        return Err(err(end, "accept lines of different kinds"));
    }
    let images = (0..alphabet.len())
        .map(|a| letters.get(&a).copied().ok_or_else(|| err(end, format!("no image for letter `{}`", alphabet.letter(a)))))
        .collect::<Result<Vec<_>>>()?;
    let h = Morphism::new(alphabet, sg, images).map_err(|e| err(end, e.to_string()))?;
    let wrap = |e: Error| err(end, e.to_string());
    Ok(match kinds.into_iter().next() {
        None => RecognizerFile::Morphism(h),
        Some("weak") => RecognizerFile::Weak(WeakRecognizer::new(h, weak).map_err(wrap)?),
        Some("strong") => RecognizerFile::Strong(StrongRecognizer::new(h, strong).map_err(wrap)?),
        _ => RecognizerFile::Finite(FiniteWordRecognizer::new(h, fin).map_err(wrap)?),
    })
}

fn morphism_header(h: &Morphism) -> String {
    let al = h.alphabet();
    let mut out = format!("morphism\nalphabet {}\n", al.letters().join(" "));
    for a in 0..al.len() {
        writeln!(out, "letter {} {}", al.letter(a), h.letter_image(a)).unwrap();
    }
    out.push_str(&write_semigroup(h.target()));
    out
}

pub fn write_morphism(h: &Morphism) -> String {
    morphism_header(h)
}

pub fn write_weak(rec: &WeakRecognizer) -> String {
    let mut out = morphism_header(rec.morphism());
    for p in rec.accepting() {
        writeln!(out, "accept-weak {} {}", p.s, p.e).unwrap();
    }
    out
}

pub fn write_strong(rec: &StrongRecognizer) -> String {
    let mut out = morphism_header(rec.morphism());
    for (p, &b) in rec.acceptance() {
        writeln!(out, "accept-strong {} {} {}", p.s, p.e, u8::from(b)).unwrap();
    }
    out
}

pub fn write_finite(rec: &FiniteWordRecognizer) -> String {
    let mut out = morphism_header(rec.morphism());
    for s in rec.accepting() {
        writeln!(out, "accept-fin {s}").unwrap();
    }
    out
}

pub fn write_recognizer(file: &RecognizerFile) -> String {
    match file {
        RecognizerFile::Morphism(h) => write_morphism(h),
        RecognizerFile::Weak(r) => write_weak(r),
        RecognizerFile::Strong(r) => write_strong(r),
        RecognizerFile::Finite(r) => write_finite(r),
    }
}

fn ids(line: usize, toks: &[&str]) -> Result<Vec<usize>> {
    toks.iter().map(|t| number(line, t)).collect()
}

pub fn parse_automaton(text: &str) -> Result<BuchiAutomaton> {
    let mut lines = Lines::new(text);
    let (line, head) = lines.expect("`automaton <n>`")?;
    if head[0] != "automaton" {
        return Err(err(line, "expected `automaton`"));
    }
    arity(line, &head, 2)?;
    let n = number(line, head[1])?;
    let mut alphabet: Option<Alphabet> = None;
    let mut initial: Option<Vec<usize>> = None;
    let mut finals: Option<Vec<usize>> = None;
    let mut transitions = Vec::new();
    while let Some((line, toks)) = lines.next() {
        let once = |slot: bool| if slot { Err(err(line, format!("duplicate `{}`", toks[0]))) } else { Ok(()) };
        match toks[0] {
            "alphabet" => {
                once(alphabet.is_some())?;
                alphabet = Some(Alphabet::new(toks[1..].iter().copied()).map_err(|e| err(line, e.to_string()))?);
            }
            "initial" => {
                once(initial.is_some())?;
                initial = Some(ids(line, &toks[1..])?);
            }
            "final" => {
                once(finals.is_some())?;
                finals = Some(ids(line, &toks[1..])?);
            }
            "trans" => {
                arity(line, &toks, 4)?;
                let al = alphabet.as_ref().ok_or_else(|| err(line, "`trans` before `alphabet`"))?;
                let a = al.index_of(toks[2]).ok_or_else(|| err(line, format!("unknown letter `{}`", toks[2])))?;
                let (p, q) = (number(line, toks[1])?, number(line, toks[3])?);
                for s in [p, q] {
                    if s >= n {
                        return Err(err(line, format!("state {s} out of range")));
                    }
                }
                transitions.push((p, a, q));
            }
            other => return Err(err(line, format!("unknown keyword `{other}`"))),
        }
    }
    let end = lines.last;
    let alphabet = alphabet.ok_or_else(|| err(end, "missing `alphabet`"))?;
    let initial = initial.ok_or_else(|| err(end, "missing `initial`"))?;
    let finals = finals.ok_or_else(|| err(end, "missing `final`"))?;
    BuchiAutomaton::new(n, alphabet, transitions, initial, finals).map_err(|e| err(end, e.to_string()))
}

pub fn write_automaton(a: &BuchiAutomaton) -> String {
    let join = |v: &[usize]| v.iter().map(|x| format!(" {x}")).collect::<String>();
    let mut out = format!(
        "automaton {}\nalphabet {}\ninitial{}\nfinal{}\n",
        a.states(),
        a.alphabet().letters().join(" "),
        join(a.initial()),
        join(a.finals())
    );
    for &(p, l, q) in a.transitions() {
        writeln!(out, "trans {p} {} {q}", a.alphabet().letter(l)).unwrap();
    }
    out
}

/// One nonempty word per line.
pub fn parse_word_list(text: &str, alphabet: &Alphabet) -> Result<Vec<Word>> {
    let mut lines = Lines::new(text);
    let mut out = Vec::new();
    while let Some((line, toks)) = lines.next() {
        if toks.len() != 1 {
            return Err(err(line, "expected one word per line"));
        }
        let w = alphabet.parse_word(toks[0]).map_err(|e| err(line, e.to_string()))?;
        if w.is_empty() {
            return Err(err(line, "words must be nonempty"));
        }
        out.push(w);
    }
    Ok(out)
}
