//! Internal local periods by doubling search.
//!
//! The local period at position `i` is the half-length of the smallest square
//! centered at `i`, where the square may overhang either end of the string.
//! When some square centered at `i` fits inside the string, the smallest such
//! square gives the local period and it is found here in `O(mu)` comparisons.
//! When none fits, the local period is external and the search reports
//! `None` after `O(i)` comparisons.

use crate::error::{Error, Result};
use crate::strcore::{prefix_matches_raw, z_array_raw};
use crate::symbols::{EqCounter, SymString};

/// A local period together with its position relative to the string ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LocalPeriod {
    pub mu: usize,
    /// `i - mu < 1`
    pub left_external: bool,
    /// `i + mu - 1 > n`
    pub right_external: bool,
}

impl LocalPeriod {
    /// Classifies local period `mu` at position `i` of a string of length `n`.
    pub fn classify(i: usize, mu: usize, n: usize) -> Self {
        LocalPeriod {
            mu,
            left_external: i < mu + 1,
            right_external: i + mu - 1 > n,
        }
    }

    pub fn is_internal(&self) -> bool {
        !self.left_external && !self.right_external
    }

    pub fn is_external(&self) -> bool {
        !self.is_internal()
    }
}

fn check_position(w: &SymString, i: usize) -> Result<()> {
    if i < 2 || i > w.len() {
        return Err(Error::Contract(format!(
            "local period query at position {i} outside 2..={}",
            w.len()
        )));
    }
    Ok(())
}

/// Looks for the smallest square `w[i-mu..=i+mu-1]` with `mu <= x` lying
/// entirely inside `w`. Uses `O(x)` comparisons.
pub fn bounded_square_search(
    w: &SymString,
    i: usize,
    x: usize,
    cmp: &mut EqCounter,
) -> Result<Option<usize>> {
    check_position(w, i)?;
    if x < 1 || x >= i {
        return Err(Error::Contract(format!(
            "search radius {x} outside 1..{i} at position {i}"
        )));
    }
    Ok(square_search_raw(w, i, x, cmp))
}

fn square_search_raw(w: &SymString, i: usize, x: usize, cmp: &mut EqCounter) -> Option<usize> {
    let s = w.as_slice();
    // 1-based w[i-x..=i-1] and w[i..=min(n, i+x-1)]
    let text = &s[i - 1 - x..i - 1];
    let pattern = &s[i - 1..(i - 1 + x).min(s.len())];
    let z = z_array_raw(pattern, cmp);
    let b = prefix_matches_raw(text, pattern, &z, cmp);
    // Text offset t is position j = i - x + t; a square needs b >= i - j = x - t.
    (0..x).rev().find(|&t| b[t] >= x - t).map(|t| x - t)
}

/// The local period at `i` if it is internal, `None` if it is external.
///
/// Runs [`bounded_square_search`] with radii `1, 2, 4, ..., 2^floor(log2(i-1))`
/// and finally `i - 1`, stopping at the first hit.
pub fn internal_local_period(
    w: &SymString,
    i: usize,
    cmp: &mut EqCounter,
) -> Result<Option<usize>> {
    check_position(w, i)?;
    Ok(internal_local_period_raw(w, i, cmp))
}

pub(crate) fn internal_local_period_raw(
    w: &SymString,
    i: usize,
    cmp: &mut EqCounter,
) -> Option<usize> {
    let limit = i - 1;
    let mut x = 1usize;
    loop {
        if let Some(mu) = square_search_raw(w, i, x, cmp) {
            return Some(mu);
        }
        if x == limit {
            return None;
        }
        x = if x * 2 <= limit { x * 2 } else { limit };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{brute_local_period, enumerate_canonical};

    fn s(x: &str) -> SymString {
        SymString::from(x)
    }

    fn search(w: &str, i: usize, x: usize) -> Option<usize> {
        bounded_square_search(&s(w), i, x, &mut EqCounter::new()).unwrap()
    }

    fn ilp(w: &str, i: usize) -> Option<usize> {
        internal_local_period(&s(w), i, &mut EqCounter::new()).unwrap()
    }

    #[test]
    fn bounded_examples() {
        assert_eq!(search("aabaa", 2, 1), Some(1));
        assert_eq!(search("abab", 3, 2), Some(2));
        assert_eq!(search("abaab", 3, 2), None);
        // square of half 2 centered at 3 would run past the end
        assert_eq!(search("aba", 3, 2), None);
    }

    #[test]
    fn bounded_rejects_bad_arguments() {
        let mut c = EqCounter::new();
        assert!(bounded_square_search(&s("abab"), 1, 1, &mut c).is_err());
        assert!(bounded_square_search(&s("abab"), 5, 1, &mut c).is_err());
        assert!(bounded_square_search(&s("abab"), 3, 0, &mut c).is_err());
        assert!(bounded_square_search(&s("abab"), 3, 3, &mut c).is_err());
    }

    #[test]
    fn doubling_examples() {
        assert_eq!(ilp("aabaa", 2), Some(1));
        assert_eq!(ilp("abbaabba", 3), Some(1));
        assert_eq!(ilp("abbaabba", 4), None);
        assert_eq!(ilp("abaab", 2), None);
        assert!(internal_local_period(&s("ab"), 1, &mut EqCounter::new()).is_err());
    }

    #[test]
    fn classify() {
        let lp = LocalPeriod::classify(2, 2, 2);
        assert!(lp.left_external && lp.right_external);
        assert!(LocalPeriod::classify(3, 1, 4).is_internal());
        assert!(LocalPeriod::classify(4, 2, 4).right_external);
    }

    #[test]
    fn exhaustive_against_oracle() {
        let mut worst = 0f64;
        for (n, sigma) in (1..=12).map(|n| (n, 3)) {
            for w in enumerate_canonical(n, sigma) {
                for i in 2..=n {
                    let mut cmp = EqCounter::new();
                    let got = internal_local_period(&w, i, &mut cmp).unwrap();
                    let truth = brute_local_period(&w, i).unwrap();
                    if truth.is_internal() {
                        assert_eq!(got, Some(truth.mu), "{w:?} at {i}");
                        let mu = truth.mu;
                        for t in 0..mu {
                            assert_eq!(w.at(i - mu + t), w.at(i + t));
                        }
                        worst = worst.max(cmp.count() as f64 / mu as f64);
                    } else {
                        assert_eq!(got, None, "{w:?} at {i}");
                    }
                }
            }
        }
        // O(mu) comparisons when internal.
        assert!(worst <= 16.0, "comparisons per unit of mu reached {worst}");
    }
}
