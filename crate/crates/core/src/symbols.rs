//! Symbols, strings, and the instrumented equality test.
//!
//! [`SymbolId`] deliberately implements `Eq` and `Hash` but not `Ord`: the
//! algorithms may only ask whether two symbols are equal, and they ask
//! through an [`EqCounter`] so that every such question is counted.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// An opaque symbol. Only equality between two ids is meaningful.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(transparent)]
pub struct SymbolId(u32);

impl SymbolId {
    pub const fn new(id: u32) -> Self {
        SymbolId(id)
    }

    /// The raw token, for serialization and renaming.
    pub const fn id(self) -> u32 {
        self.0
    }
}

impl From<u32> for SymbolId {
    fn from(id: u32) -> Self {
        SymbolId(id)
    }
}

impl fmt::Display for SymbolId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Counts symbol equality tests. One counter per algorithm run.
#[derive(Debug, Default, Clone)]
pub struct EqCounter {
    count: u64,
}

impl EqCounter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Tests `a == b`, charging one comparison.
    #[inline(always)]
    pub fn eq(&mut self, a: SymbolId, b: SymbolId) -> bool {
        self.count += 1;
        a == b
    }

    pub fn count(&self) -> u64 {
        self.count
    }
}

/// An immutable string of symbols, addressed with 1-based positions `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SymString {
    symbols: Vec<SymbolId>,
}

impl SymString {
    pub fn new(symbols: Vec<SymbolId>) -> Self {
        SymString { symbols }
    }

    pub fn from_ids<I: IntoIterator<Item = u32>>(ids: I) -> Self {
        SymString::new(ids.into_iter().map(SymbolId).collect())
    }

    /// One symbol per byte; the symbol id is the byte value.
    pub fn from_bytes(data: &[u8]) -> Self {
        SymString::from_ids(data.iter().map(|&b| u32::from(b)))
    }

    /// Parses whitespace-separated decimal ids. Errors name the 1-based
    /// index of the first malformed token.
    pub fn from_tokens(text: &str) -> Result<Self> {
        text.split_whitespace()
            .enumerate()
            .map(|(idx, tok)| {
                tok.parse::<u32>()
                    .map(SymbolId)
                    .map_err(|_| Error::BadToken {
                        index: idx + 1,
                        token: tok.to_string(),
                    })
            })
            .collect::<Result<Vec<_>>>()
            .map(SymString::new)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// The symbol at 1-based position `i`.
    ///
    /// Panics when `i` is outside `1..=n`.
    #[inline(always)]
    pub fn at(&self, i: usize) -> SymbolId {
        assert!(i >= 1, "position 0 is outside 1..={}", self.len());
        self.symbols[i - 1]
    }

    /// The symbol at 1-based position `i`, or `None` outside `1..=n`.
    #[inline]
    pub fn get(&self, i: usize) -> Option<SymbolId> {
        i.checked_sub(1).and_then(|j| self.symbols.get(j).copied())
    }

    /// Zero-based view of the symbols.
    pub fn as_slice(&self) -> &[SymbolId] {
        &self.symbols
    }

    pub fn ids(&self) -> impl Iterator<Item = u32> + '_ {
        self.symbols.iter().map(|s| s.0)
    }

    /// The factor `w[i..=j]` (1-based, inclusive), empty when `i > j`.
    pub fn factor(&self, i: usize, j: usize) -> SymString {
        if i > j {
            return SymString::default();
        }
        SymString::new(self.symbols[i - 1..j].to_vec())
    }

    /// A symbol that does not occur in the string: the largest id plus one.
    pub fn fresh_symbol(&self) -> Result<SymbolId> {
        match self.symbols.iter().map(|s| s.0).max() {
            None => Ok(SymbolId(0)),
            Some(u32::MAX) => Err(Error::Contract(
                "no fresh symbol available above u32::MAX".to_string(),
            )),
            Some(m) => Ok(SymbolId(m + 1)),
        }
    }

    /// Token-mode rendering: ids separated by single spaces.
    pub fn to_tokens(&self) -> String {
        let mut out = String::with_capacity(self.len() * 3);
        for (k, s) in self.symbols.iter().enumerate() {
            if k > 0 {
                out.push(' ');
            }
            out.push_str(&s.0.to_string());
        }
        out
    }

    /// Byte-mode rendering, if every id fits in a byte.
    pub fn to_bytes(&self) -> Option<Vec<u8>> {
        self.symbols
            .iter()
            .map(|s| u8::try_from(s.0).ok())
            .collect()
    }

    /// Relabels every symbol through `sigma`, which must be injective on the
    /// symbols that occur in the string.
    pub fn rename(&self, sigma: &HashMap<SymbolId, SymbolId>) -> Result<SymString> {
        let mut preimage: HashMap<SymbolId, SymbolId> = HashMap::new();
        let mut out = Vec::with_capacity(self.len());
        for &s in &self.symbols {
            let t = *sigma.get(&s).ok_or(Error::MissingImage(s.0))?;
            match preimage.insert(t, s) {
                Some(prev) if prev != s => {
                    return Err(Error::NotInjective {
                        first: prev.0,
                        second: s.0,
                        target: t.0,
                    })
                }
                _ => {}
            }
            out.push(t);
        }
        Ok(SymString::new(out))
    }
}

impl fmt::Debug for SymString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymString[{}]", self.to_tokens())
    }
}

impl From<&str> for SymString {
    fn from(s: &str) -> Self {
        SymString::from_bytes(s.as_bytes())
    }
}
