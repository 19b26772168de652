//! Deterministic input families.
//!
//! The adversarial family is built from
//!
//! ```text
//! a_0 = a      a_{i+1} = a_i $_i a_i
//! b_0 = b      b_{i+1} = b_i a_i $_i a_i b_i
//! w_i = a_i b_i a_i
//! ```
//!
//! with `a`, `b`, `$_0`, `$_1`, ... pairwise distinct, and the level-`i`
//! string is `# w_{i+1} # a_{i+1} #` for a fresh `#`. On these strings the
//! `O(n log n)` scan recomputes the same local periods over and over.
//!
//! Symbol ids: `a = 0`, `b = 1`, `$_j = 2 + j`, and at level `i`,
//! `# = i + 3`.
//!
//! Random strings come from SplitMix64: the state advances by
//! `0x9E3779B97F4A7C15`, the output is mixed with multipliers
//! `0xBF58476D1CE4E5B9` and `0x94D049BB133111EB` (shifts 30, 27, 31), and a
//! 64-bit output `x` maps to the symbol `((x >> 32) * sigma) >> 32`.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::symbols::{SymString, SymbolId};

const SYM_A: u32 = 0;
const SYM_B: u32 = 1;

fn dollar(j: usize) -> SymbolId {
    SymbolId::new(2 + j as u32)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Component {
    A,
    B,
    W,
}

/// Symbol assignment for one level of the adversarial family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdversarialLevel {
    pub level: usize,
}

impl AdversarialLevel {
    pub fn new(level: usize) -> Self {
        AdversarialLevel { level }
    }

    pub fn sym_a(&self) -> SymbolId {
        SymbolId::new(SYM_A)
    }

    pub fn sym_b(&self) -> SymbolId {
        SymbolId::new(SYM_B)
    }

    /// `$_j`, used for `j` in `0..=level`.
    pub fn sym_dollar(&self, j: usize) -> SymbolId {
        dollar(j)
    }

    pub fn sym_hash(&self) -> SymbolId {
        SymbolId::new(self.level as u32 + 3)
    }

    /// `# w_{i+1} # a_{i+1} #`
    pub fn generate(&self) -> SymString {
        let i = self.level;
        let hash = self.sym_hash();
        let mut out = Vec::new();
        out.push(hash);
        push_w(i + 1, &mut out);
        out.push(hash);
        push_a(i + 1, &mut out);
        out.push(hash);
        SymString::new(out)
    }
}

fn push_a(i: usize, out: &mut Vec<SymbolId>) {
    if i == 0 {
        out.push(SymbolId::new(SYM_A));
        return;
    }
    let start = out.len();
    push_a(i - 1, out);
    let end = out.len();
    out.push(dollar(i - 1));
    out.extend_from_within(start..end);
}

fn push_b(i: usize, out: &mut Vec<SymbolId>) {
    if i == 0 {
        out.push(SymbolId::new(SYM_B));
        return;
    }
    let b_start = out.len();
    push_b(i - 1, out);
    let a_start = out.len();
    push_a(i - 1, out);
    let a_end = out.len();
    out.push(dollar(i - 1));
    out.extend_from_within(a_start..a_end);
    out.extend_from_within(b_start..a_start);
}

fn push_w(i: usize, out: &mut Vec<SymbolId>) {
    let start = out.len();
    push_a(i, out);
    let a_end = out.len();
    push_b(i, out);
    out.extend_from_within(start..a_end);
}

/// `a_i`, `b_i`, or `w_i`.
pub fn gen_component(kind: Component, i: usize) -> SymString {
    let mut out = Vec::new();
    match kind {
        Component::A => push_a(i, &mut out),
        Component::B => push_b(i, &mut out),
        Component::W => push_w(i, &mut out),
    }
    SymString::new(out)
}

/// Level `i` of the adversarial family.
pub fn gen_adversarial(i: usize) -> SymString {
    AdversarialLevel::new(i).generate()
}

/// SplitMix64 generator; see the module docs for the exact recurrence.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound` by multiply-shift of the high 32 bits.
    pub fn below(&mut self, bound: u32) -> u32 {
        (((self.next_u64() >> 32) * u64::from(bound)) >> 32) as u32
    }
}

/// `n` symbols uniform over `0..sigma`, reproducible for a fixed seed.
pub fn gen_random(n: usize, sigma: u32, seed: u64) -> Result<SymString> {
    if sigma == 0 {
        return Err(Error::Contract("alphabet size must be at least 1".into()));
    }
    let mut rng = SplitMix64::new(seed);
    Ok(SymString::from_ids((0..n).map(|_| rng.below(sigma))))
}

/// Fibonacci word over bytes `a`/`b`: `F_1 = b`, `F_2 = a`,
/// `F_k = F_{k-1} F_{k-2}`.
pub fn gen_fibonacci(k: usize) -> Result<SymString> {
    if k == 0 {
        return Err(Error::Contract("Fibonacci index starts at 1".into()));
    }
    let (mut older, mut newer) = (vec![b'b'], vec![b'a']);
    if k == 1 {
        return Ok(SymString::from_bytes(&older));
    }
    for _ in 3..=k {
        let mut next = Vec::with_capacity(newer.len() + older.len());
        next.extend_from_slice(&newer);
        next.extend_from_slice(&older);
        older = std::mem::replace(&mut newer, next);
    }
    Ok(SymString::from_bytes(&newer))
}

/// Thue-Morse prefix of length `2^k` over bytes `0`/`1`: the symbol at
/// zero-based index `j` is the parity of the set bits of `j`.
pub fn gen_thue_morse(k: usize) -> Result<SymString> {
    if k == 0 || k > 40 {
        return Err(Error::Contract(format!(
            "Thue-Morse order {k} outside 1..=40"
        )));
    }
    Ok(SymString::from_bytes(
        &(0u64..1 << k)
            .map(|j| b'0' + (j.count_ones() & 1) as u8)
            .collect::<Vec<_>>(),
    ))
}

/// A generator family and its parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Adversarial { level: usize },
    Fibonacci { k: usize },
    ThueMorse { k: usize },
    Random { n: usize, sigma: u32, seed: u64 },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Adversarial { .. } => "adversarial",
            Family::Fibonacci { .. } => "fibonacci",
            Family::ThueMorse { .. } => "thue-morse",
            Family::Random { .. } => "random",
        }
    }

    /// The varying parameter: level, index, or length.
    pub fn param(&self) -> u64 {
        match *self {
            Family::Adversarial { level } => level as u64,
            Family::Fibonacci { k } | Family::ThueMorse { k } => k as u64,
            Family::Random { n, .. } => n as u64,
        }
    }

    pub fn generate(&self) -> Result<SymString> {
        match *self {
            Family::Adversarial { level } => Ok(gen_adversarial(level)),
            Family::Fibonacci { k } => gen_fibonacci(k),
            Family::ThueMorse { k } => gen_thue_morse(k),
            Family::Random { n, sigma, seed } => {
                if n == 0 {
                    return Err(Error::Contract("random length must be at least 1".into()));
                }
                gen_random(n, sigma, seed)
            }
        }
    }
}

/// Family names as accepted on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    Adversarial,
    Fibonacci,
    ThueMorse,
    Random,
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "adversarial" => Ok(FamilyKind::Adversarial),
            "fibonacci" => Ok(FamilyKind::Fibonacci),
            "thue-morse" | "thuemorse" => Ok(FamilyKind::ThueMorse),
            "random" => Ok(FamilyKind::Random),
            other => Err(Error::UnknownName {
                what: "family",
                name: other.to_string(),
            }),
        }
    }
}
