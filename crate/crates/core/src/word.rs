//! Alphabets, words and their prefix/border structure.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::stringology::{self, Parity};

pub type Symbol = u32;

/// The alphabet `{0, 1, ..., k-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet(u32);

impl Alphabet {
    pub fn new(k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::EmptyAlphabet);
        }
        Ok(Alphabet(k))
    }

    pub fn size(self) -> u32 {
        self.0
    }

    pub fn contains(self, s: Symbol) -> bool {
        s < self.0
    }
}

/// How symbols are written as text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Notation {
    /// `0-9` then `a-z`; needs `k <= 36`.
    Base36,
    /// `a-z` read as `0..=25`; needs `k <= 26`.
    Letters,
    /// Comma-separated decimal integers.
    Integers,
}

const BASE36: &[u8; 36] = b"0123456789abcdefghijklmnopqrstuvwxyz";

impl Notation {
    /// Base-36 for small alphabets, integers otherwise.
    pub fn default_for(k: u32) -> Notation {
        if k <= 36 {
            Notation::Base36
        } else {
            Notation::Integers
        }
    }

    /// Picks a notation for `input`: commas mean integers, an all-lowercase
    /// word over exactly 26 letters is read as `a=0..z=25`, anything else is
    /// base-36.
    pub fn detect(input: &str, k: u32) -> Notation {
        if input.contains(',') || k > 36 {
            Notation::Integers
        } else if k == 26 && !input.is_empty() && input.bytes().all(|b| b.is_ascii_lowercase()) {
            Notation::Letters
        } else {
            Notation::Base36
        }
    }

    fn decode_char(self, c: char) -> Option<Symbol> {
        match self {
            Notation::Base36 => c.to_digit(36),
            Notation::Letters if c.is_ascii_lowercase() => Some(c as u32 - 'a' as u32),
            _ => None,
        }
    }

    fn encode(self, s: Symbol, out: &mut String) {
        match self {
            Notation::Base36 => out.push(BASE36[s as usize] as char),
            Notation::Letters => out.push((b'a' + s as u8) as char),
            Notation::Integers => {
                if !out.is_empty() {
                    out.push(',');
                }
                out.push_str(&s.to_string());
            }
        }
    }

    fn capacity(self) -> u32 {
        match self {
            Notation::Base36 => 36,
            Notation::Letters => 26,
            Notation::Integers => u32::MAX,
        }
    }
}

/// A finite word over an [`Alphabet`]. Positions are 0-based in the API.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    alphabet: Alphabet,
    symbols: Vec<Symbol>,
}

impl Word {
    pub fn new(alphabet: Alphabet, symbols: Vec<Symbol>) -> Result<Self> {
        if let Some((position, &symbol)) = symbols.iter().enumerate().find(|(_, &s)| !alphabet.contains(s)) {
            return Err(Error::SymbolOutOfRange { symbol, position, k: alphabet.size() });
        }
        Ok(Word { alphabet, symbols })
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Word { alphabet, symbols: Vec::new() }
    }

    /// Lowercase ASCII letters over a 26-letter alphabet (`a = 0`).
    pub fn from_letters(text: &str) -> Result<Self> {
        Word::parse_with(text, 26, Notation::Letters)
    }

    /// Parses `text` over `k` symbols using [`Notation::detect`].
    pub fn parse(text: &str, k: u32) -> Result<Self> {
        Word::parse_with(text, k, Notation::detect(text, k))
    }

    pub fn parse_with(text: &str, k: u32, notation: Notation) -> Result<Self> {
        let alphabet = Alphabet::new(k)?;
        let fail = |reason: String| Error::Parse { input: text.to_string(), k, reason };
        let symbols: Vec<Symbol> = match notation {
            Notation::Integers => {
                let trimmed = text.trim();
                if trimmed.is_empty() {
                    Vec::new()
                } else {
                    trimmed
                        .split(',')
                        .map(|t| t.trim().parse::<Symbol>().map_err(|e| fail(format!("{t:?}: {e}"))))
                        .collect::<Result<_>>()?
                }
            }
            _ => {
                if k > notation.capacity() {
                    return Err(fail(format!("{notation:?} notation covers at most {} symbols", notation.capacity())));
                }
                text.chars()
                    .map(|c| notation.decode_char(c).ok_or_else(|| fail(format!("unexpected character {c:?}"))))
                    .collect::<Result<_>>()?
            }
        };
        Word::new(alphabet, symbols)
    }

    pub fn render(&self, notation: Notation) -> String {
        let notation = if self.alphabet.size() > notation.capacity() { Notation::Integers } else { notation };
        let mut out = String::with_capacity(self.len());
        for &s in &self.symbols {
            notation.encode(s, &mut out);
        }
        out
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn k(&self) -> u32 {
        self.alphabet.size()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Same alphabet, symbols taken from `symbols`; the caller guarantees range.
    pub(crate) fn with_symbols(&self, symbols: Vec<Symbol>) -> Word {
        debug_assert!(symbols.iter().all(|&s| self.alphabet.contains(s)));
        Word { alphabet: self.alphabet, symbols }
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        self.same_alphabet(other)?;
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        Ok(self.with_symbols(symbols))
    }

    fn same_alphabet(&self, other: &Word) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch { left: self.k(), right: other.k() });
        }
        Ok(())
    }

    pub fn reverse(&self) -> Word {
        self.with_symbols(self.symbols.iter().rev().copied().collect())
    }

    pub fn is_palindrome(&self) -> bool {
        stringology::is_palindrome(&self.symbols)
    }

    pub fn pal_prefix_orders(&self, parity: Parity) -> BTreeSet<usize> {
        stringology::pal_prefix_orders(&self.symbols, parity).into_iter().collect()
    }

    pub fn border_lengths(&self) -> BTreeSet<usize> {
        stringology::border_lengths(&self.symbols).into_iter().collect()
    }

    pub fn short_border_lengths(&self) -> BTreeSet<usize> {
        stringology::short_border_lengths(&self.symbols).into_iter().collect()
    }

    pub fn is_unbordered(&self) -> bool {
        stringology::is_unbordered(&self.symbols)
    }

    pub fn square_half_lengths(&self) -> BTreeSet<usize> {
        stringology::square_half_lengths(&self.symbols).into_iter().collect()
    }

    pub fn has_nontrivial_pal_prefix(&self) -> bool {
        stringology::has_nontrivial_pal_prefix(&self.symbols)
    }

    pub fn perfect_shuffle(&self, other: &Word) -> Result<Word> {
        self.same_alphabet(other)?;
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { left: self.len(), right: other.len() });
        }
        Ok(self.with_symbols(stringology::shuffle(&self.symbols, &other.symbols)))
    }

    pub fn unshuffle(&self) -> Result<(Word, Word)> {
        if !self.len().is_multiple_of(2) {
            return Err(Error::OddLength(self.len()));
        }
        let (y, z) = stringology::unshuffle(&self.symbols);
        Ok((self.with_symbols(y), self.with_symbols(z)))
    }

    pub fn profile(&self) -> WordProfile {
        WordProfile {
            short_borders: self.short_border_lengths(),
            even_pp_orders: self.pal_prefix_orders(Parity::Even),
            odd_pp_orders: self.pal_prefix_orders(Parity::Odd),
            square_half_lengths: self.square_half_lengths(),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Notation::default_for(self.k())))
    }
}

/// Structural summary of a word. Every set lives in `1..=n/2`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WordProfile {
    pub short_borders: BTreeSet<usize>,
    pub even_pp_orders: BTreeSet<usize>,
    /// Order 0 (a single letter) is never recorded.
    pub odd_pp_orders: BTreeSet<usize>,
    pub square_half_lengths: BTreeSet<usize>,
}
