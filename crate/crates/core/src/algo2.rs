//! The linear-time scan.
//!
//! Visits exactly the positions the `O(n log n)` scan visits, but keeps two
//! arrays: `m[i]`, a known local period at `i`, and `r[i]`, the end (exclusive)
//! of the maximal run starting at `i` with that period. After a local period
//! `mu` is computed at `i` and its run extended to `r[i]`, every known entry
//! whose square and run sit inside `w[i-mu..r[i]-1]` is copied `mu` positions
//! to the right. Positions reached later through such a copy are skipped
//! without any search, so the total search cost is linear.

use crate::algo1::{
    finish, out_of_window, prepare, unary, AlgoStats, CriticalFactorization, Start,
};
use crate::error::{Error, Result};
use crate::localperiod::internal_local_period_raw;
use crate::symbols::{EqCounter, SymString};

/// The `m` and `r` arrays, 1-based, zero meaning unknown.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PeriodMemo {
    m: Vec<u32>,
    r: Vec<u32>,
}

impl PeriodMemo {
    fn zeroed(n: usize) -> Self {
        PeriodMemo {
            m: vec![0; n + 1],
            r: vec![0; n + 1],
        }
    }

    /// Known local period at position `i`.
    pub fn mu(&self, i: usize) -> Option<usize> {
        match self.m.get(i) {
            Some(&0) | None => None,
            Some(&v) => Some(v as usize),
        }
    }

    /// End (exclusive) of the maximal run from `i` with period `mu(i)`.
    pub fn run_end(&self, i: usize) -> Option<usize> {
        match self.r.get(i) {
            Some(&0) | None => None,
            Some(&v) => Some(v as usize),
        }
    }

    /// Positions with a known local period, increasing.
    pub fn known_positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.m
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(i, _)| i)
    }
}

/// Leftmost critical point in `O(n)` comparisons.
pub fn leftmost_critical_linear(w: &SymString) -> Result<(CriticalFactorization, AlgoStats)> {
    leftmost_critical_linear_with_memo(w).map(|(cf, st, _)| (cf, st))
}

/// As [`leftmost_critical_linear`], also returning the memo arrays as they
/// stood when the scan stopped.
pub fn leftmost_critical_linear_with_memo(
    w: &SymString,
) -> Result<(CriticalFactorization, AlgoStats, PeriodMemo)> {
    let n = w.len();
    if n >= u32::MAX as usize {
        return Err(Error::Contract(format!("string of length {n} is too long")));
    }
    let mut cmp = EqCounter::new();
    let (period, k) = match prepare(w, &mut cmp)? {
        Start::Unary => {
            let (cf, st) = unary(w, &cmp);
            return Ok((cf, st, PeriodMemo::default()));
        }
        Start::Scan { period, k } => (period, k),
    };
    let mut stats = AlgoStats {
        k,
        ..AlgoStats::default()
    };
    let mut memo = PeriodMemo::zeroed(n);
    let PeriodMemo { m, r } = &mut memo;

    let mut i = k + 2;
    loop {
        if i > period {
            return Err(out_of_window(w, i, period));
        }
        stats.visited.push(i);
        if m[i] == 0 {
            let Some(mu) = internal_local_period_raw(w, i, &mut cmp) else {
                let (cf, st) = finish(w, i, period, stats, &cmp);
                return Ok((cf, st, memo));
            };
            stats.computed_positions.push(i);
            stats.mu_sum += mu as u64;

            let mut end = i + mu;
            while end <= n && cmp.eq(w.at(end - mu), w.at(end)) {
                end += 1;
            }
            m[i] = mu as u32;
            r[i] = end as u32;

            let lo = i - mu;
            for j in lo..end - mu {
                let mj = m[j] as usize;
                if mj != 0 && j >= lo + mj && r[j] as usize + mu < end {
                    let target = j + mu;
                    if target > end - 1 {
                        return Err(Error::Invariant(format!(
                            "copy target {target} outside run ending at {end}"
                        )));
                    }
                    m[target] = mj as u32;
                    r[target] = r[j] + mu as u32;
                }
            }
        }
        i = r[i] as usize - m[i] as usize + 1;
    }
}
