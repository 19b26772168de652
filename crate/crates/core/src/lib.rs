//! Leftmost critical factorization of strings over an unordered alphabet.
//!
//! Every algorithm in this crate touches symbols only through
//! [`EqCounter::eq`], so the only operation ever applied to two symbols is an
//! equality test and the number of such tests is observable.
//!
//! Two solvers are provided:
//!
//! * [`leftmost_critical_nlogn`] scans from the first candidate position,
//!   computes internal local periods by doubling search, and skips the
//!   positions covered by each periodic run. `O(n log n)` comparisons.
//! * [`leftmost_critical_linear`] visits the same positions but memoizes
//!   local periods and copies them forward inside periodic runs. `O(n)`
//!   comparisons.
//!
//! The [`oracle`] module holds brute-force definitions used as ground truth,
//! [`genstrings`] the input families used for testing and benchmarking, and
//! [`bench`] the comparison-counting harness.

pub mod algo1;
pub mod algo2;
pub mod bench;
mod error;
pub mod genstrings;
pub mod localperiod;
pub mod oracle;
pub mod strcore;
pub mod symbols;

pub use algo1::{leftmost_critical_nlogn, AlgoStats, CriticalFactorization};
pub use algo2::{leftmost_critical_linear, leftmost_critical_linear_with_memo, PeriodMemo};
pub use error::{Error, Result};
pub use localperiod::LocalPeriod;
pub use symbols::{EqCounter, SymString, SymbolId};

/// Which fast solver to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algo {
    /// Skip-loop scan with doubling local-period search.
    Nlogn,
    /// Memoized variant with forward copying of local periods.
    Linear,
}

impl Algo {
    pub const ALL: [Algo; 2] = [Algo::Nlogn, Algo::Linear];

    pub fn name(self) -> &'static str {
        match self {
            Algo::Nlogn => "nlogn",
            Algo::Linear => "linear",
        }
    }

    pub fn run(self, w: &SymString) -> Result<(CriticalFactorization, AlgoStats)> {
        match self {
            Algo::Nlogn => leftmost_critical_nlogn(w),
            Algo::Linear => leftmost_critical_linear(w),
        }
    }
}

impl std::fmt::Display for Algo {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Algo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nlogn" => Ok(Algo::Nlogn),
            "linear" => Ok(Algo::Linear),
            other => Err(Error::UnknownName {
                what: "algorithm",
                name: other.to_string(),
            }),
        }
    }
}
