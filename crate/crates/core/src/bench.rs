//! Comparison-counting benchmark harness.
//!
//! Counters are deterministic functions of the input; wall time is recorded
//! alongside but is only indicative.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genstrings::Family;
use crate::Algo;

/// One solver run on one generated input. Field order is the CSV column
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunRecord {
    pub algo: Algo,
    pub family: String,
    pub param: u64,
    pub n: u64,
    pub eq_comparisons: u64,
    pub mu_sum: u64,
    pub computed_positions: u64,
    pub wall_time_ns: u64,
}

impl RunRecord {
    pub fn mu_per_n(&self) -> f64 {
        self.mu_sum as f64 / self.n as f64
    }

    pub fn comparisons_per_n(&self) -> f64 {
        self.eq_comparisons as f64 / self.n as f64
    }
}

pub const CSV_HEADER: &str =
    "algo,family,param,n,eq_comparisons,mu_sum,computed_positions,wall_time_ns";

/// Runs every algorithm `repetitions` times on every case. Records come out
/// grouped by case, then algorithm, then repetition.
pub fn run_suite(cases: &[Family], algos: &[Algo], repetitions: usize) -> Result<Vec<RunRecord>> {
    let mut out = Vec::with_capacity(cases.len() * algos.len() * repetitions);
    for case in cases {
        let w = case.generate().map_err(|e| {
            Error::Contract(format!("generating {} {}: {e}", case.name(), case.param()))
        })?;
        for &algo in algos {
            for _ in 0..repetitions {
                let start = Instant::now();
                let (_, stats) = algo.run(&w).map_err(|e| {
                    Error::Invariant(format!("{algo} on {} {}: {e}", case.name(), case.param()))
                })?;
                let elapsed = start.elapsed().as_nanos().max(1) as u64;
                out.push(RunRecord {
                    algo,
                    family: case.name().to_string(),
                    param: case.param(),
                    n: w.len() as u64,
                    eq_comparisons: stats.eq_comparisons,
                    mu_sum: stats.mu_sum,
                    computed_positions: stats.computed_positions.len() as u64,
                    wall_time_ns: elapsed,
                });
            }
        }
    }
    Ok(out)
}

/// Writes records as CSV with a header row and LF line endings.
pub fn write_csv<W: Write>(records: &[RunRecord], out: W) -> Result<()> {
    let mut wtr = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    if records.is_empty() {
        wtr.write_record(CSV_HEADER.split(','))?;
    }
    for r in records {
        wtr.serialize(r)?;
    }
    wtr.flush().map_err(|e| Error::Csv(e.to_string()))
}

pub fn read_csv<R: std::io::Read>(input: R) -> Result<Vec<RunRecord>> {
    csv::Reader::from_reader(input)
        .deserialize()
        .map(|r| r.map_err(Error::from))
        .collect()
}

/// Worst ratios for one (algorithm, family) group.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilySummary {
    pub algo: Algo,
    pub family: String,
    pub runs: usize,
    pub max_mu_per_n: f64,
    pub max_comparisons_per_n: f64,
}

/// `mu_sum / n` by adversarial level for the `O(n log n)` scan.
#[derive(Debug, Clone, PartialEq)]
pub struct GrowthTrend {
    pub levels: Vec<u64>,
    pub mu_per_n: Vec<f64>,
    pub differences: Vec<f64>,
}

impl GrowthTrend {
    pub fn strictly_increasing(&self) -> bool {
        self.differences.iter().all(|&d| d > 0.0)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub groups: Vec<FamilySummary>,
    pub adversarial_nlogn: Option<GrowthTrend>,
}

impl Report {
    pub fn group(&self, algo: Algo, family: &str) -> Option<&FamilySummary> {
        self.groups
            .iter()
            .find(|g| g.algo == algo && g.family == family)
    }

    /// Largest `mu_sum / n` over all groups of `algo`.
    pub fn max_mu_per_n(&self, algo: Algo) -> f64 {
        self.groups
            .iter()
            .filter(|g| g.algo == algo)
            .map(|g| g.max_mu_per_n)
            .fold(0.0, f64::max)
    }

    pub fn max_comparisons_per_n(&self, algo: Algo) -> f64 {
        self.groups
            .iter()
            .filter(|g| g.algo == algo)
            .map(|g| g.max_comparisons_per_n)
            .fold(0.0, f64::max)
    }
}

pub fn summarize(records: &[RunRecord]) -> Result<Report> {
    if records.is_empty() {
        return Err(Error::Contract("nothing to summarize".into()));
    }
    let mut groups: BTreeMap<(&str, &str), FamilySummary> = BTreeMap::new();
    for r in records {
        let g = groups
            .entry((r.algo.name(), r.family.as_str()))
            .or_insert_with(|| FamilySummary {
                algo: r.algo,
                family: r.family.clone(),
                runs: 0,
                max_mu_per_n: 0.0,
                max_comparisons_per_n: 0.0,
            });
        g.runs += 1;
        g.max_mu_per_n = g.max_mu_per_n.max(r.mu_per_n());
        g.max_comparisons_per_n = g.max_comparisons_per_n.max(r.comparisons_per_n());
    }

    let mut by_level: BTreeMap<u64, f64> = BTreeMap::new();
    for r in records
        .iter()
        .filter(|r| r.algo == Algo::Nlogn && r.family == "adversarial")
    {
        by_level.insert(r.param, r.mu_per_n());
    }
    let adversarial_nlogn = (!by_level.is_empty()).then(|| {
        let levels: Vec<u64> = by_level.keys().copied().collect();
        let mu_per_n: Vec<f64> = by_level.values().copied().collect();
        let differences = mu_per_n.windows(2).map(|p| p[1] - p[0]).collect();
        GrowthTrend {
            levels,
            mu_per_n,
            differences,
        }
    });

    Ok(Report {
        groups: groups.into_values().collect(),
        adversarial_nlogn,
    })
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "algo    family        runs  max(mu_sum/n)  max(eq/n)")?;
        for g in &self.groups {
            writeln!(
                f,
                "{:<7} {:<12} {:>5}  {:>13.4}  {:>9.4}",
                g.algo.name(),
                g.family,
                g.runs,
                g.max_mu_per_n,
                g.max_comparisons_per_n
            )?;
        }
        if let Some(t) = &self.adversarial_nlogn {
            writeln!(f, "nlogn on adversarial, mu_sum/n by level:")?;
            for (idx, (lvl, v)) in t.levels.iter().zip(&t.mu_per_n).enumerate() {
                match idx.checked_sub(1).map(|d| t.differences[d]) {
                    Some(d) => writeln!(f, "  level {lvl:>3}: {v:.4} (+{d:.4})")?,
                    None => writeln!(f, "  level {lvl:>3}: {v:.4}")?,
                }
            }
        }
        Ok(())
    }
}
