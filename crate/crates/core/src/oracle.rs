//! Brute-force reference definitions.
//!
//! Nothing here is clever. Each function restates a definition and checks it
//! directly, so the results can be trusted as ground truth for the fast
//! solvers. Worst-case costs are cubic; keep inputs small.

use crate::algo1::CriticalFactorization;
use crate::error::{Error, Result};
use crate::localperiod::LocalPeriod;
use crate::symbols::{SymString, SymbolId};

/// Whether `w[lo..=hi]` (1-based) has period `p`. Windows no longer than `p`
/// are trivially periodic. Pairs nearest `center` are tested first.
fn window_has_period(w: &SymString, lo: usize, hi: usize, p: usize, center: usize) -> bool {
    if hi < lo + p {
        return true;
    }
    let last = hi - p;
    let split = center.clamp(lo, last + 1);
    (lo..split)
        .rev()
        .chain(split..=last)
        .all(|j| w.at(j) == w.at(j + p))
}

/// The local period at `i`: the smallest `mu` such that
/// `w[max(1, i-mu)..=min(n, i+mu-1)]` has period `mu`.
pub fn brute_local_period(w: &SymString, i: usize) -> Result<LocalPeriod> {
    let n = w.len();
    if i < 1 || i > n {
        return Err(Error::Contract(format!("position {i} outside 1..={n}")));
    }
    let mu = (1..=n)
        .find(|&mu| {
            let lo = if i > mu { i - mu } else { 1 };
            let hi = (i + mu - 1).min(n);
            window_has_period(w, lo, hi, mu, i)
        })
        .expect("mu = n always qualifies");
    Ok(LocalPeriod::classify(i, mu, n))
}

/// Smallest `p` in `1..=n` with `w[j] = w[j+p]` for every valid `j`.
pub fn brute_minimal_period(w: &SymString) -> Result<usize> {
    let n = w.len();
    if n == 0 {
        return Err(Error::TooShort { len: 0, min: 1 });
    }
    Ok((1..=n)
        .find(|&p| (1..=n - p).all(|j| w.at(j) == w.at(j + p)))
        .expect("p = n always qualifies"))
}

/// Whether `p` is a period of `w` (definition, `0 < p <= |w|`).
pub fn is_period(w: &SymString, p: usize) -> bool {
    p > 0 && p <= w.len() && (1..=w.len() - p).all(|j| w.at(j) == w.at(j + p))
}

/// Leftmost position `i` in `2..=n` whose local period equals the minimal
/// period. Position 1 is never a candidate.
pub fn brute_leftmost_critical(w: &SymString) -> Result<CriticalFactorization> {
    let n = w.len();
    if n < 2 {
        return Err(Error::TooShort { len: n, min: 2 });
    }
    let p = brute_minimal_period(w)?;
    for i in 2..=n {
        if brute_local_period(w, i)?.mu == p {
            return Ok(CriticalFactorization::new(i, p, n));
        }
    }
    Err(Error::Invariant(format!(
        "no critical point in {}",
        w.to_tokens()
    )))
}

/// Every position of `w` whose local period equals the minimal period.
pub fn brute_critical_points(w: &SymString) -> Result<Vec<usize>> {
    let p = brute_minimal_period(w)?;
    let mut out = Vec::new();
    for i in 1..=w.len() {
        if brute_local_period(w, i)?.mu == p {
            out.push(i);
        }
    }
    Ok(out)
}

/// `max{r <= n+1 : w[i..r-1] has period mu}` by direct scan.
pub fn brute_run_end(w: &SymString, i: usize, mu: usize) -> usize {
    let n = w.len();
    let mut j = i;
    while j + mu <= n {
        if w.at(j) != w.at(j + mu) {
            return j + mu;
        }
        j += 1;
    }
    n + 1
}

pub fn is_unbordered(w: &SymString) -> bool {
    let n = w.len();
    (1..n).all(|l| (1..=l).any(|t| w.at(t) != w.at(n - l + t)))
}

pub fn is_primitive(w: &SymString) -> bool {
    let n = w.len();
    n > 0 && !(1..n).any(|d| n.is_multiple_of(d) && is_period(w, d))
}

/// The rotation `w[i..n] w[1..i-1]`.
pub fn conjugate(w: &SymString, i: usize) -> SymString {
    let s = w.as_slice();
    let k = i - 1;
    SymString::new(s[k..].iter().chain(&s[..k]).copied().collect())
}

pub fn has_unbordered_conjugate(w: &SymString) -> bool {
    (1..=w.len()).any(|i| is_unbordered(&conjugate(w, i)))
}

/// Restricted-growth strings: one representative per equality pattern.
/// The first symbol is 0 and each symbol is at most one more than every
/// symbol before it.
pub struct Canonical {
    cur: Vec<u32>,
    sigma_max: u32,
    done: bool,
}

impl Iterator for Canonical {
    type Item = SymString;

    fn next(&mut self) -> Option<SymString> {
        if self.done {
            return None;
        }
        let out = SymString::from_ids(self.cur.iter().copied());
        // Advance to the lexicographic successor.
        let n = self.cur.len();
        let mut prefix_max = Vec::with_capacity(n);
        let mut m = 0u32;
        for &c in &self.cur {
            prefix_max.push(m);
            m = m.max(c);
        }
        self.done = true;
        for k in (1..n).rev() {
            let cap = (prefix_max[k] + 1).min(self.sigma_max - 1);
            if self.cur[k] < cap {
                self.cur[k] += 1;
                for c in &mut self.cur[k + 1..] {
                    *c = 0;
                }
                self.done = false;
                break;
            }
        }
        Some(out)
    }
}

/// All canonical strings of length `n` over at most `sigma_max` symbols.
pub fn enumerate_canonical(n: usize, sigma_max: u32) -> Canonical {
    Canonical {
        cur: vec![0; n],
        sigma_max: sigma_max.max(1),
        done: sigma_max == 0 && n > 0,
    }
}

/// Checks that every run of `p - 1` consecutive positions inside `2..=n`
/// contains a critical point, where `p > 1` is the minimal period.
pub fn check_window_theorem(w: &SymString) -> Result<bool> {
    let p = brute_minimal_period(w)?;
    if p == 1 {
        return Err(Error::Contract("window check needs period > 1".into()));
    }
    let n = w.len();
    let critical: Vec<bool> = (0..=n)
        .map(|i| {
            i >= 1
                && brute_local_period(w, i)
                    .map(|lp| lp.mu == p)
                    .unwrap_or(false)
        })
        .collect();
    // windows [start, start + p - 2] inside [2, n]
    Ok((2..=n + 2 - p).all(|start| (start..=start + p - 2).any(|i| critical[i])))
}

/// Checks that square halves are unbordered wherever the local period does
/// not overhang the corresponding end.
pub fn check_unbordered_halves(w: &SymString) -> Result<bool> {
    for i in 1..=w.len() {
        let lp = brute_local_period(w, i)?;
        let mu = lp.mu;
        if !lp.right_external && !is_unbordered(&w.factor(i, i + mu - 1)) {
            return Ok(false);
        }
        if !lp.left_external && !is_unbordered(&w.factor(i - mu, i - 1)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks that every position whose local period overhangs both ends is a
/// critical point.
pub fn check_double_external_critical(w: &SymString) -> Result<bool> {
    let p = brute_minimal_period(w)?;
    for i in 1..=w.len() {
        let lp = brute_local_period(w, i)?;
        if lp.left_external && lp.right_external && lp.mu != p {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks that `w` is primitive exactly when some conjugate is unbordered.
pub fn check_primitivity_criterion(w: &SymString) -> bool {
    is_primitive(w) == has_unbordered_conjugate(w)
}

/// Renaming used by tests: maps symbol `s` to `perm[s]`.
pub fn rename_with(w: &SymString, perm: &[u32]) -> Result<SymString> {
    let sigma = w
        .ids()
        .map(|s| (SymbolId::new(s), SymbolId::new(perm[s as usize])))
        .collect();
    w.rename(&sigma)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> SymString {
        SymString::from(x)
    }

    #[test]
    fn local_period_examples() {
        let lp = brute_local_period(&s("abbaabba"), 3).unwrap();
        assert_eq!(lp.mu, 1);
        assert!(lp.is_internal());
        let lp = brute_local_period(&s("ab"), 2).unwrap();
        assert_eq!(lp.mu, 2);
        assert!(lp.left_external && lp.right_external);
        let lp = brute_local_period(&s("aaaa"), 3).unwrap();
        assert_eq!(lp.mu, 1);
        assert!(lp.is_internal());
        assert!(brute_local_period(&s("ab"), 0).is_err());
        assert!(brute_local_period(&s("ab"), 3).is_err());
    }

    #[test]
    fn figure_string_local_periods() {
        // abbaabba: internal at 3, left external at 4, right external at 6 and 8
        let w = s("abbaabba");
        let mus: Vec<usize> = (1..=8)
            .map(|i| brute_local_period(&w, i).unwrap().mu)
            .collect();
        assert_eq!(mus, [1, 3, 1, 4, 1, 4, 1, 3]);
        assert!(brute_local_period(&w, 4).unwrap().left_external);
        assert!(brute_local_period(&w, 6).unwrap().right_external);
        assert!(brute_local_period(&w, 8).unwrap().right_external);
    }

    #[test]
    fn period_examples() {
        assert_eq!(brute_minimal_period(&s("abab")).unwrap(), 2);
        assert_eq!(brute_minimal_period(&s("abcd")).unwrap(), 4);
        assert_eq!(brute_minimal_period(&s("aaaa")).unwrap(), 1);
        assert!(brute_minimal_period(&s("")).is_err());
    }

    #[test]
    fn leftmost_examples() {
        assert_eq!(brute_leftmost_critical(&s("abaab")).unwrap().position, 3);
        let cf = brute_leftmost_critical(&s("aabb")).unwrap();
        assert_eq!((cf.position, cf.period), (3, 4));
        let lp = brute_local_period(&s("aabb"), 3).unwrap();
        assert!(lp.left_external && lp.right_external);
        assert_eq!(brute_leftmost_critical(&s("aa")).unwrap().position, 2);
        assert!(brute_leftmost_critical(&s("a")).is_err());
    }

    #[test]
    fn enumeration() {
        let ts = |n, k| -> Vec<String> {
            enumerate_canonical(n, k)
                .map(|w| w.ids().map(|x| x.to_string()).collect())
                .collect()
        };
        assert_eq!(ts(2, 2), ["00", "01"]);
        assert_eq!(ts(3, 2), ["000", "001", "010", "011"]);
        assert_eq!(ts(3, 3), ["000", "001", "010", "011", "012"]);
        assert_eq!(ts(1, 5), ["0"]);
        // Bell numbers when sigma_max >= n
        let bell = [1usize, 1, 2, 5, 15, 52, 203, 877];
        for (n, &b) in bell.iter().enumerate().skip(1) {
            assert_eq!(enumerate_canonical(n, n as u32).count(), b);
        }
        assert_eq!(enumerate_canonical(10, 2).count(), 512);
    }

    #[test]
    fn window_theorem_examples() {
        assert!(check_window_theorem(&s("abaab")).unwrap());
        assert!(check_window_theorem(&s("ab")).unwrap());
        assert!(check_window_theorem(&s("abbaabba")).unwrap());
        assert!(check_window_theorem(&s("aaa")).is_err());
    }

    #[test]
    fn primitivity_helpers() {
        assert!(is_primitive(&s("aab")));
        assert!(!is_primitive(&s("abab")));
        assert!(is_unbordered(&s("aab")));
        assert!(!is_unbordered(&s("aba")));
        assert_eq!(conjugate(&s("abc"), 2), s("bca"));
        assert!(has_unbordered_conjugate(&s("aba")));
        assert!(!has_unbordered_conjugate(&s("abab")));
    }

    #[test]
    fn run_end() {
        // w[2..r-1] with period 2 in "aababb": a b a b | b -> stops at r = 6
        assert_eq!(brute_run_end(&s("aababb"), 2, 2), 6);
        assert_eq!(brute_run_end(&s("aaaa"), 2, 1), 5);
    }
}
