//! Periodicity primitives that use only symbol equality: the border array,
//! the minimal period, prefix-match arrays (matching statistics against a
//! pattern prefix), and the starting offset `k` of the critical-point scan.
//!
//! The `*_raw` functions work on zero-based slices and are shared with the
//! local-period search; the public wrappers speak 1-based positions.

use crate::error::{Error, Result};
use crate::symbols::{EqCounter, SymString, SymbolId};

/// `f[i]` is the length of the longest proper border of `w[1..=i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorderArray {
    f: Vec<usize>,
}

impl BorderArray {
    /// Border length of the prefix of length `i` (1-based).
    pub fn get(&self, i: usize) -> usize {
        self.f[i - 1]
    }

    pub fn len(&self) -> usize {
        self.f.len()
    }

    pub fn is_empty(&self) -> bool {
        self.f.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.f
    }
}

/// `b[j]` is the length of the longest prefix of the pattern that starts at
/// position `j` of the text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixMatchArray {
    b: Vec<usize>,
}

impl PrefixMatchArray {
    /// Match length at 1-based text position `j`.
    pub fn get(&self, j: usize) -> usize {
        self.b[j - 1]
    }

    pub fn len(&self) -> usize {
        self.b.len()
    }

    pub fn is_empty(&self) -> bool {
        self.b.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.b
    }
}

fn require_nonempty(w: &SymString) -> Result<()> {
    if w.is_empty() {
        Err(Error::TooShort { len: 0, min: 1 })
    } else {
        Ok(())
    }
}

pub(crate) fn border_array_raw(w: &[SymbolId], cmp: &mut EqCounter) -> Vec<usize> {
    let mut f = vec![0usize; w.len()];
    let mut b = 0usize;
    for i in 1..w.len() {
        loop {
            if cmp.eq(w[i], w[b]) {
                b += 1;
                break;
            }
            if b == 0 {
                break;
            }
            b = f[b - 1];
        }
        f[i] = b;
    }
    f
}

/// Z-array of `w`: `z[j]` is the longest common prefix of `w[j..]` and `w`,
/// with `z[0] = |w|`.
pub(crate) fn z_array_raw(w: &[SymbolId], cmp: &mut EqCounter) -> Vec<usize> {
    let m = w.len();
    let mut z = vec![0usize; m];
    if m == 0 {
        return z;
    }
    z[0] = m;
    let (mut l, mut r) = (0usize, 0usize);
    for j in 1..m {
        let mut len = 0;
        if j < r {
            let known = z[j - l];
            if known < r - j {
                z[j] = known;
                continue;
            }
            len = r - j;
        }
        while j + len < m && cmp.eq(w[j + len], w[len]) {
            len += 1;
        }
        z[j] = len;
        if j + len > r {
            l = j;
            r = j + len;
        }
    }
    z
}

/// Matching statistics of `text` against the prefixes of `pattern`, given
/// the Z-array of `pattern`.
pub(crate) fn prefix_matches_raw(
    text: &[SymbolId],
    pattern: &[SymbolId],
    z_pattern: &[usize],
    cmp: &mut EqCounter,
) -> Vec<usize> {
    let (n, m) = (text.len(), pattern.len());
    let mut b = vec![0usize; n];
    // text[l..r) == pattern[..r - l]
    let (mut l, mut r) = (0usize, 0usize);
    for j in 0..n {
        let mut len = 0;
        if j < r {
            let known = z_pattern[j - l];
            if known < r - j {
                b[j] = known;
                continue;
            }
            len = r - j;
        }
        while j + len < n && len < m && cmp.eq(text[j + len], pattern[len]) {
            len += 1;
        }
        b[j] = len;
        if j + len > r {
            l = j;
            r = j + len;
        }
    }
    b
}

/// Longest proper border of every prefix of `w`.
pub fn border_array(w: &SymString, cmp: &mut EqCounter) -> Result<BorderArray> {
    require_nonempty(w)?;
    Ok(BorderArray {
        f: border_array_raw(w.as_slice(), cmp),
    })
}

/// Smallest period of a nonempty string, `|w| - f[|w|]`.
pub fn minimal_period(w: &SymString, cmp: &mut EqCounter) -> Result<usize> {
    require_nonempty(w)?;
    let f = border_array_raw(w.as_slice(), cmp);
    Ok(w.len() - f[w.len() - 1])
}

/// For each position `j` of `u`, the length of the longest prefix of `w`
/// occurring at `j`. Uses `O(|u| + |w|)` comparisons.
pub fn prefix_match_array(
    u: &SymString,
    w: &SymString,
    cmp: &mut EqCounter,
) -> Result<PrefixMatchArray> {
    require_nonempty(w)?;
    let z = z_array_raw(w.as_slice(), cmp);
    Ok(PrefixMatchArray {
        b: prefix_matches_raw(u.as_slice(), w.as_slice(), &z, cmp),
    })
}

/// The length of the longest prefix of `w` that reoccurs at some position
/// `j` in `2..=p`, where `p >= 2` is the minimal period of `w`. The leftmost
/// critical point lies strictly after position `k + 1`.
pub fn compute_k(w: &SymString, p: usize, cmp: &mut EqCounter) -> Result<usize> {
    if p < 2 {
        return Err(Error::Contract(format!(
            "compute_k needs period >= 2, got {p}"
        )));
    }
    if p > w.len() {
        return Err(Error::Contract(format!(
            "period {p} exceeds string length {}",
            w.len()
        )));
    }
    let z = z_array_raw(w.as_slice(), cmp);
    Ok(z[1..p].iter().copied().max().unwrap_or(0))
}
