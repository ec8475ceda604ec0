//! Alphabets, finite words and ultimately periodic infinite words.
//!
//! Letters are stored as indices into an [`Alphabet`]. Words are plain
//! vectors of letter indices; the textual form uses `-` for the empty word,
//! juxtaposed characters when every letter is a single character, and
//! `.`-separated tokens otherwise.

use std::fmt;

use crate::error::{Error, Result};

pub type Letter = usize;
pub type Word = Vec<Letter>;

/// Spelling of the empty word in every text format.
pub const EMPTY_WORD: &str = "-";

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(letters: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let letters: Vec<String> = letters.into_iter().map(Into::into).collect();
        for (i, l) in letters.iter().enumerate() {
            if l.is_empty()
                || l == EMPTY_WORD
                || l.contains('.')
                || l.contains('=')
                || l.chars().any(char::is_whitespace)
            {
                return Err(Error::InvalidLetter(l.clone()));
            }
            if letters[..i].contains(l) {
                return Err(Error::DuplicateLetter(l.clone()));
            }
        }
        Ok(Alphabet { letters })
    }

    /// One letter per character of `chars`.
    pub fn from_chars(chars: &str) -> Result<Self> {
        Self::new(chars.chars().map(String::from))
    }

    /// The first `n` lowercase latin letters (`a`, `b`, ...), continuing
    /// with `x26`, `x27`, ... past `z`.
    pub fn latin(n: usize) -> Self {
        let letters = (0..n).map(|i| {
            if i < 26 {
                char::from(b'a' + i as u8).to_string()
            } else {
                format!("x{i}")
            }
        });
        Self::new(letters).expect("generated letters are valid")
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[String] {
        &self.letters
    }

    pub fn letter(&self, a: Letter) -> &str {
        &self.letters[a]
    }

    pub fn index_of(&self, token: &str) -> Option<Letter> {
        self.letters.iter().position(|l| l == token)
    }

    fn single_chars(&self) -> bool {
        self.letters.iter().all(|l| l.chars().count() == 1)
    }

    pub fn check_word(&self, w: &[Letter]) -> Result<()> {
        match w.iter().find(|&&a| a >= self.len()) {
            Some(&a) => Err(Error::LetterOutOfRange(a)),
            None => Ok(()),
        }
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() || text == EMPTY_WORD {
            return Ok(Vec::new());
        }
        let lookup = |tok: &str| self.index_of(tok).ok_or_else(|| Error::UnknownLetter(tok.to_string()));
        if text.contains('.') {
            text.split('.').map(lookup).collect()
        } else if self.single_chars() {
            let mut buf = [0u8; 4];
            text.chars().map(|c| lookup(c.encode_utf8(&mut buf))).collect()
        } else {
            Ok(vec![lookup(text)?])
        }
    }

    pub fn format_word(&self, w: &[Letter]) -> String {
        if w.is_empty() {
            return EMPTY_WORD.to_string();
        }
        let sep = if self.single_chars() { "" } else { "." };
        w.iter()
            .map(|&a| self.letters[a].as_str())
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Parses the `u=<word> v=<word>` pair used on the command line.
    pub fn parse_up_word(&self, prefix: &str, period: &str) -> Result<UpWord> {
        UpWord::new(self.parse_word(prefix)?, self.parse_word(period)?)
    }
}

/// The infinite word `prefix · period^ω`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UpWord {
    prefix: Word,
    period: Word,
}

impl UpWord {
    pub fn new(prefix: Word, period: Word) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        Ok(UpWord { prefix, period })
    }

    pub fn prefix(&self) -> &[Letter] {
        &self.prefix
    }

    pub fn period(&self) -> &[Letter] {
        &self.period
    }

    /// Letter at position `i` of the infinite word.
    pub fn letter_at(&self, i: usize) -> Letter {
        if i < self.prefix.len() {
            self.prefix[i]
        } else {
            self.period[(i - self.prefix.len()) % self.period.len()]
        }
    }

    /// `prefix · period^k`.
    pub fn unroll(&self, k: usize) -> Word {
        let mut w = self.prefix.clone();
        for _ in 0..k {
            w.extend_from_slice(&self.period);
        }
        w
    }

    /// A representation with nonempty prefix: `(v, v)` for `v^ω`.
    pub fn with_nonempty_prefix(&self) -> UpWord {
        if self.prefix.is_empty() {
            UpWord {
                prefix: self.period.clone(),
                period: self.period.clone(),
            }
        } else {
            self.clone()
        }
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        DisplayUp { w: self, alphabet }
    }
}

struct DisplayUp<'a> {
    w: &'a UpWord,
    alphabet: &'a Alphabet,
}

impl fmt::Display for DisplayUp<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "u={} v={}",
            self.alphabet.format_word(&self.w.prefix),
            self.alphabet.format_word(&self.w.period)
        )
    }
}

/// All words over `letters` letters of length `0..=max_len`, ordered by
/// length and then lexicographically.
pub fn words_up_to(letters: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Word> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * letters);
        for w in &layer {
            for a in 0..letters {
                let mut x = w.clone();
                x.push(a);
                next.push(x);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}
