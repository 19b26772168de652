//! The `O(n log n)` scan.
//!
//! Starting right after the longest prefix that reoccurs within the first
//! period, compute the local period at the current position. An external
//! local period marks the leftmost critical point. An internal one, `mu`,
//! lets the scan jump over every following position whose square of half
//! `mu` still fits in the same periodic run.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::localperiod::internal_local_period_raw;
use crate::strcore::{border_array_raw, compute_k};
use crate::symbols::{EqCounter, SymString};

/// The factorization `w[1..i-1] . w[i..n]` at the leftmost critical point `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CriticalFactorization {
    pub position: usize,
    pub period: usize,
    pub prefix_len: usize,
    pub suffix_len: usize,
}

impl CriticalFactorization {
    pub fn new(position: usize, period: usize, n: usize) -> Self {
        CriticalFactorization {
            position,
            period,
            prefix_len: position - 1,
            suffix_len: n + 1 - position,
        }
    }

    /// `position=<i> period=<p> prefix_len=<i-1> suffix_len=<n-i+1>`
    pub fn result_line(&self) -> String {
        format!(
            "position={} period={} prefix_len={} suffix_len={}",
            self.position, self.period, self.prefix_len, self.suffix_len
        )
    }
}

/// Instrumentation for one solver run.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AlgoStats {
    /// Symbol equality tests, including the period and `k` preprocessing.
    pub eq_comparisons: u64,
    /// Positions whose local period was computed by search and found to be
    /// internal, in increasing order.
    pub computed_positions: Vec<usize>,
    /// Sum of the local periods at `computed_positions`.
    pub mu_sum: u64,
    /// Positions in `k+2..answer` the scan never stopped at.
    pub skipped: u64,
    /// Every value the scan position took, ending with the answer.
    pub visited: Vec<usize>,
    /// Length of the longest prefix reoccurring within the first period.
    pub k: usize,
}

impl AlgoStats {
    pub fn stats_line(&self) -> String {
        format!(
            "eq_comparisons={} computed_positions={} mu_sum={} skipped={}",
            self.eq_comparisons,
            self.computed_positions.len(),
            self.mu_sum,
            self.skipped
        )
    }
}

pub(crate) enum Start {
    /// Minimal period 1: every position from 2 on is critical.
    Unary,
    Scan {
        period: usize,
        k: usize,
    },
}

pub(crate) fn prepare(w: &SymString, cmp: &mut EqCounter) -> Result<Start> {
    let n = w.len();
    if n < 2 {
        return Err(Error::TooShort { len: n, min: 2 });
    }
    let f = border_array_raw(w.as_slice(), cmp);
    let period = n - f[n - 1];
    if period == 1 {
        return Ok(Start::Unary);
    }
    let k = compute_k(w, period, cmp)?;
    Ok(Start::Scan { period, k })
}

pub(crate) fn finish(
    w: &SymString,
    position: usize,
    period: usize,
    mut stats: AlgoStats,
    cmp: &EqCounter,
) -> (CriticalFactorization, AlgoStats) {
    stats.eq_comparisons = cmp.count();
    stats.skipped = (position - stats.k - 1 - stats.visited.len()) as u64;
    (CriticalFactorization::new(position, period, w.len()), stats)
}

pub(crate) fn unary(w: &SymString, cmp: &EqCounter) -> (CriticalFactorization, AlgoStats) {
    let stats = AlgoStats {
        eq_comparisons: cmp.count(),
        visited: vec![2],
        ..AlgoStats::default()
    };
    (CriticalFactorization::new(2, 1, w.len()), stats)
}

pub(crate) fn out_of_window(w: &SymString, i: usize, period: usize) -> Error {
    Error::Invariant(format!(
        "scan reached position {i} beyond the period {period} of {}",
        w.to_tokens()
    ))
}

/// Leftmost critical point in `O(n log n)` comparisons.
///
/// A unary string (period 1) is answered with position 2.
pub fn leftmost_critical_nlogn(w: &SymString) -> Result<(CriticalFactorization, AlgoStats)> {
    let mut cmp = EqCounter::new();
    let (period, k) = match prepare(w, &mut cmp)? {
        Start::Unary => return Ok(unary(w, &cmp)),
        Start::Scan { period, k } => (period, k),
    };
    let n = w.len();
    let mut stats = AlgoStats {
        k,
        ..AlgoStats::default()
    };
    let mut i = k + 2;
    loop {
        if i > period {
            return Err(out_of_window(w, i, period));
        }
        stats.visited.push(i);
        let Some(mu) = internal_local_period_raw(w, i, &mut cmp) else {
            return Ok(finish(w, i, period, stats, &cmp));
        };
        stats.computed_positions.push(i);
        stats.mu_sum += mu as u64;
        // Skip positions whose local period is at most mu.
        while i + mu - 1 <= n && cmp.eq(w.at(i - 1), w.at(i + mu - 1)) {
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{brute_leftmost_critical, brute_local_period, enumerate_canonical};
    use crate::strcore::minimal_period;

    fn run(x: &str) -> CriticalFactorization {
        leftmost_critical_nlogn(&SymString::from(x)).unwrap().0
    }

    #[test]
    fn examples() {
        let cf = run("aaaa");
        assert_eq!((cf.position, cf.period), (2, 1));
        let cf = run("abaab");
        assert_eq!(
            (cf.position, cf.period, cf.prefix_len, cf.suffix_len),
            (3, 3, 2, 3)
        );
        let cf = run("abbaabba");
        assert_eq!(
            (cf.position, cf.period, cf.prefix_len, cf.suffix_len),
            (4, 4, 3, 5)
        );
        let cf = run("ab");
        assert_eq!((cf.position, cf.period), (2, 2));
    }

    #[test]
    fn too_short() {
        assert_eq!(
            leftmost_critical_nlogn(&SymString::from("a")).unwrap_err(),
            Error::TooShort { len: 1, min: 2 }
        );
        assert!(leftmost_critical_nlogn(&SymString::from("")).is_err());
    }

    #[test]
    fn result_line_format() {
        assert_eq!(
            run("abaab").result_line(),
            "position=3 period=3 prefix_len=2 suffix_len=3"
        );
    }

    #[test]
    fn stats_are_consistent() {
        let w = SymString::from("abaabaabbabaab");
        let (cf, st) = leftmost_critical_nlogn(&w).unwrap();
        assert!(st.computed_positions.windows(2).all(|p| p[0] < p[1]));
        let sum: usize = st
            .computed_positions
            .iter()
            .map(|&i| brute_local_period(&w, i).unwrap().mu)
            .sum();
        assert_eq!(st.mu_sum, sum as u64);
        assert_eq!(*st.visited.last().unwrap(), cf.position);
        assert_eq!(
            st.skipped as usize,
            cf.position - (st.k + 2) + 1 - st.visited.len()
        );
    }

    #[test]
    fn exhaustive_small() {
        for (max_n, sigma) in [(10usize, 2u32), (8, 3), (7, 4)] {
            for n in 2..=max_n {
                for w in enumerate_canonical(n, sigma) {
                    let (cf, st) = leftmost_critical_nlogn(&w).unwrap();
                    assert_eq!(cf, brute_leftmost_critical(&w).unwrap(), "{w:?}");
                    if cf.period >= 2 {
                        assert!(cf.position >= st.k + 2);
                        assert!(cf.position <= cf.period);
                        assert_eq!(
                            st.k,
                            crate::strcore::compute_k(
                                &w,
                                minimal_period(&w, &mut EqCounter::new()).unwrap(),
                                &mut EqCounter::new()
                            )
                            .unwrap()
                        );
                    }
                    for j in 2..cf.position {
                        assert!(brute_local_period(&w, j).unwrap().mu < cf.period);
                    }
                }
            }
        }
    }
}
