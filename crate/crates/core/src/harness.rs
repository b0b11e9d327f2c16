//! Exhaustive sweeps that check the structural classifier against the
//! brute-force oracle and probe each claimed property at small lengths.
//!
//! Every sweep visits patterns in lexicographic order (shorter first), runs
//! the per-pattern work in parallel and merges in that order, so reports do
//! not depend on the number of worker threads.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle::{
    first_failure_up_to, index_bruteforce_with_cap, AvoidanceGraph, Goodness, DEFAULT_DIMENSION_CAP,
};
use crate::periodicity::{
    build_overlap_graph, closure_implies, gcd, residue_sequence, EquationSystem,
};
use crate::structural::{classify, lift_witness, verify_witness};
use crate::word::Pattern;

/// Longest patterns each sweep accepts.
pub const CROSS_VALIDATE_MAX_LEN: usize = 8;
pub const P_VALUES_MAX_LEN: usize = 8;
pub const CRITICAL_EQUIVALENCE_MAX_LEN: usize = 6;
pub const DOUBLING_MAX_LEN: usize = 8;
pub const INDEX_BOUND_MAX_LEN: usize = 16;
pub const MONOTONICITY_MAX_LEN: usize = 8;
pub const CENSUS_MAX_LEN: usize = 14;
pub const PURE_THREE_MAX_LEN: usize = 12;

/// Patterns up to this length also get oracle scans past `2|f| - 1`.
pub const EXTENDED_SCAN_MAX_LEN: usize = 4;
/// Patterns up to this length have `ff` confirmed by the oracle.
pub const DOUBLING_ORACLE_MAX_LEN: usize = 3;
/// Census rows up to this length are re-checked against the oracle.
pub const CENSUS_ORACLE_MAX_LEN: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub pattern: Pattern,
    pub dimension: Option<usize>,
    pub details: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub range: String,
    pub passed: bool,
    /// Number of individual cases examined.
    pub checked: usize,
    pub counterexample: Option<Counterexample>,
}

impl TheoremReport {
    fn from_outcomes(
        theorem: &str,
        range: String,
        outcomes: Vec<(usize, Option<Counterexample>)>,
    ) -> Self {
        let checked = outcomes.iter().map(|(n, _)| n).sum();
        let counterexample = outcomes.into_iter().find_map(|(_, c)| c);
        TheoremReport {
            theorem: theorem.to_string(),
            range,
            passed: counterexample.is_none(),
            checked,
            counterexample,
        }
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {:<26} {:<28} checked={}",
            self.theorem, self.range, self.checked
        )?;
        if let Some(c) = &self.counterexample {
            write!(f, " counterexample: f={}", c.pattern)?;
            if let Some(d) = c.dimension {
                write!(f, " d={d}")?;
            }
            write!(f, " {}", c.details)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CensusRow {
    pub length: usize,
    pub total: usize,
    pub good_count: usize,
    pub bad_count: usize,
    pub good_fraction: f64,
    pub index_histogram: BTreeMap<usize, usize>,
    /// Smallest `p` among each bad pattern's minimal witnesses.
    pub p_histogram: BTreeMap<usize, usize>,
    /// `None` when the row was not re-checked by brute force.
    pub oracle_confirmed: Option<bool>,
}

impl CensusRow {
    pub const CSV_HEADER: &'static str =
        "length,total,good,bad,good_fraction,index_histogram,p_histogram,oracle_confirmed";

    pub fn to_csv(&self) -> String {
        let hist = |h: &BTreeMap<usize, usize>| {
            h.iter()
                .map(|(k, v)| format!("{k}:{v}"))
                .collect::<Vec<_>>()
                .join(";")
        };
        let confirmed = match self.oracle_confirmed {
            Some(true) => "yes",
            Some(false) => "no",
            None => "unchecked",
        };
        format!(
            "{},{},{},{},{:.6},{},{},{}",
            self.length,
            self.total,
            self.good_count,
            self.bad_count,
            self.good_fraction,
            hist(&self.index_histogram),
            hist(&self.p_histogram),
            confirmed
        )
    }
}

/// Which sweeps to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    PValues,
    IndexBound,
    Doubling,
    Monotonicity,
    CriticalEquivalence,
    CrossValidation,
    OverlapCycle,
}

impl Suite {
    pub fn name(&self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::PValues => "p-values",
            Suite::IndexBound => "index-bound",
            Suite::Doubling => "doubling",
            Suite::Monotonicity => "monotonicity",
            Suite::CriticalEquivalence => "critical-pairs",
            Suite::CrossValidation => "cross",
            Suite::OverlapCycle => "overlap",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Ok(match s {
            "all" => Suite::All,
            "p-values" => Suite::PValues,
            "index-bound" => Suite::IndexBound,
            "doubling" => Suite::Doubling,
            "monotonicity" => Suite::Monotonicity,
            "critical-pairs" | "lemma21" => Suite::CriticalEquivalence,
            "cross" => Suite::CrossValidation,
            "overlap" => Suite::OverlapCycle,
            other => return Err(format!("unknown suite {other:?}")),
        })
    }
}

fn check_len(what: &'static str, value: usize, cap: usize) -> Result<()> {
    if value > cap {
        Err(Error::SweepCap { what, value, cap })
    } else {
        Ok(())
    }
}

fn patterns(max_len: usize) -> Vec<Pattern> {
    Pattern::all_up_to(max_len).collect()
}

/// Runs sweeps with a given oracle dimension cap.
#[derive(Debug, Clone, Copy)]
pub struct Harness {
    pub dimension_cap: usize,
}

impl Default for Harness {
    fn default() -> Self {
        Self {
            dimension_cap: DEFAULT_DIMENSION_CAP,
        }
    }
}

impl Harness {
    pub fn new(dimension_cap: usize) -> Self {
        Self { dimension_cap }
    }

    fn brute(&self, f: &Pattern) -> Result<Goodness> {
        index_bruteforce_with_cap(f, self.dimension_cap)
    }

    fn graph(&self, f: &Pattern, d: usize) -> Result<AvoidanceGraph> {
        AvoidanceGraph::build_with_cap(f, d, self.dimension_cap)
    }

    /// Structural classification against brute force for every pattern of
    /// length `1..=max_len`.
    pub fn cross_validate(&self, max_len: usize) -> Result<TheoremReport> {
        check_len("max length", max_len, CROSS_VALIDATE_MAX_LEN)?;
        self.cross_validate_patterns(&patterns(max_len), format!("|f| <= {max_len}"))
    }

    /// Same comparison over an explicit pattern list.
    pub fn cross_validate_patterns(
        &self,
        patterns: &[Pattern],
        range: String,
    ) -> Result<TheoremReport> {
        let outcomes = patterns
            .par_iter()
            .map(|f| -> Result<_> {
                let brute = self.brute(f)?;
                let structural = classify(f).goodness;
                if brute != structural {
                    return Ok((
                        1,
                        Some(Counterexample {
                            pattern: *f,
                            dimension: brute.index().or(structural.index()),
                            details: format!("oracle {brute:?}, structural {structural:?}"),
                        }),
                    ));
                }
                if f.len() <= EXTENDED_SCAN_MAX_LEN {
                    let extended = first_failure_up_to(f, 2 * f.len() + 2, self.dimension_cap)?;
                    if extended != brute {
                        return Ok((
                            1,
                            Some(Counterexample {
                                pattern: *f,
                                dimension: extended.index(),
                                details: format!(
                                    "first failure past 2|f|-1: {extended:?} vs {brute:?}"
                                ),
                            }),
                        ));
                    }
                }
                Ok((1, None))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TheoremReport::from_outcomes(
            "cross-validation",
            range,
            outcomes,
        ))
    }

    /// At `d = B(f)` the smallest critical `p` is 2 or 3.
    pub fn check_p_values(&self, max_len: usize) -> Result<TheoremReport> {
        check_len("max length", max_len, P_VALUES_MAX_LEN)?;
        let outcomes = patterns(max_len)
            .par_iter()
            .map(|f| -> Result<_> {
                let Goodness::Bad { index } = self.brute(f)? else {
                    return Ok((0, None));
                };
                let p = self.graph(f, index)?.minimal_critical_p();
                let ok = matches!(p, Some(2) | Some(3));
                Ok((
                    1,
                    (!ok).then(|| Counterexample {
                        pattern: *f,
                        dimension: Some(index),
                        details: format!("minimal critical p = {p:?}"),
                    }),
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TheoremReport::from_outcomes(
            "p-values",
            format!("|f| <= {max_len}"),
            outcomes,
        ))
    }

    /// `B(f) <= 2|f| - 1` (and `<= 2|f| - 2` with a two-flip witness) for
    /// every bad pattern; short patterns also get an oracle scan past the
    /// bound.
    pub fn check_index_bound(&self, max_len: usize) -> Result<TheoremReport> {
        check_len("max length", max_len, INDEX_BOUND_MAX_LEN)?;
        let outcomes = patterns(max_len)
            .par_iter()
            .map(|f| -> Result<_> {
                let n = f.len();
                let c = classify(f);
                let mut checked = 0;
                if let Some(index) = c.index() {
                    checked += 1;
                    if index > 2 * n - 1 {
                        return Ok((
                            checked,
                            Some(Counterexample {
                                pattern: *f,
                                dimension: Some(index),
                                details: format!("index exceeds 2|f|-1 = {}", 2 * n - 1),
                            }),
                        ));
                    }
                    if c.witnesses.iter().any(|w| w.p == 2 && index > 2 * n - 2) {
                        return Ok((
                            checked,
                            Some(Counterexample {
                                pattern: *f,
                                dimension: Some(index),
                                details: "two-flip witness above 2|f|-2".into(),
                            }),
                        ));
                    }
                }
                if n <= EXTENDED_SCAN_MAX_LEN {
                    checked += 1;
                    let first = first_failure_up_to(f, 2 * n + 2, self.dimension_cap)?;
                    if let Some(d) = first.index().filter(|&d| d > 2 * n - 1) {
                        return Ok((
                            checked,
                            Some(Counterexample {
                                pattern: *f,
                                dimension: Some(d),
                                details: "oracle first failure past 2|f|-1".into(),
                            }),
                        ));
                    }
                }
                Ok((checked, None))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TheoremReport::from_outcomes(
            "index-bound",
            format!("|f| <= {max_len}"),
            outcomes,
        ))
    }

    /// Good `f` gives good `ff`; isometric `Q_d(f)` gives isometric `Q_d(ff)`.
    pub fn check_doubling(&self, max_len: usize) -> Result<TheoremReport> {
        check_len("max length", max_len, DOUBLING_MAX_LEN)?;
        let outcomes = patterns(max_len)
            .par_iter()
            .map(|f| -> Result<_> {
                let ff = f.doubled()?;
                let fail = |dimension, details: String| {
                    Some(Counterexample {
                        pattern: *f,
                        dimension,
                        details,
                    })
                };
                let c = classify(f);
                let mut checked = 1;
                match c.index() {
                    None => {
                        let cff = classify(&ff);
                        if !cff.is_good() {
                            return Ok((checked, fail(cff.index(), format!("{ff} is bad"))));
                        }
                        if f.len() <= DOUBLING_ORACLE_MAX_LEN {
                            checked += 1;
                            let brute = self.brute(&ff)?;
                            if !brute.is_good() {
                                return Ok((
                                    checked,
                                    fail(brute.index(), format!("oracle: {ff} is bad")),
                                ));
                            }
                        }
                    }
                    Some(index) if f.len() <= DOUBLING_ORACLE_MAX_LEN + 1 => {
                        for d in 1..index {
                            if !self.graph(f, d)?.is_isometric().isometric {
                                continue;
                            }
                            checked += 1;
                            if !self.graph(&ff, d)?.is_isometric().isometric {
                                return Ok((
                                    checked,
                                    fail(Some(d), format!("Q_d({ff}) not isometric")),
                                ));
                            }
                        }
                    }
                    Some(_) => {}
                }
                Ok((checked, None))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TheoremReport::from_outcomes(
            "doubling",
            format!("|f| <= {max_len}"),
            outcomes,
        ))
    }

    /// Non-isometry persists above `B(f)`: lifted witnesses stay valid and
    /// the oracle agrees wherever the graph fits under the cap.
    pub fn check_monotonicity(&self, max_len: usize, extra: usize) -> Result<TheoremReport> {
        check_len("max length", max_len, MONOTONICITY_MAX_LEN)?;
        let outcomes = patterns(max_len)
            .par_iter()
            .map(|f| -> Result<_> {
                let c = classify(f);
                let Some(index) = c.index() else {
                    return Ok((0, None));
                };
                let mut checked = 0;
                for d in (index + 1)..=(index + extra) {
                    for w in &c.witnesses {
                        checked += 1;
                        let lifted = lift_witness(w, d)?;
                        if !verify_witness(&lifted)?.is_valid() {
                            return Ok((
                                checked,
                                Some(Counterexample {
                                    pattern: *f,
                                    dimension: Some(d),
                                    details: format!(
                                        "lifted witness {} / {} rejected",
                                        lifted.alpha, lifted.beta
                                    ),
                                }),
                            ));
                        }
                    }
                    if d <= self.dimension_cap {
                        checked += 1;
                        if self.graph(f, d)?.is_isometric().isometric {
                            return Ok((
                                checked,
                                Some(Counterexample {
                                    pattern: *f,
                                    dimension: Some(d),
                                    details: "oracle finds the graph isometric".into(),
                                }),
                            ));
                        }
                    }
                }
                Ok((checked, None))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TheoremReport::from_outcomes(
            "monotonicity",
            format!("|f| <= {max_len}, +{extra}"),
            outcomes,
        ))
    }

    /// BFS non-isometry coincides with existence of a critical pair, for
    /// `d <= 2|f| - 1` (`d <= 2|f| + 2` for short patterns).
    pub fn check_critical_equivalence(&self, max_len: usize) -> Result<TheoremReport> {
        check_len("max length", max_len, CRITICAL_EQUIVALENCE_MAX_LEN)?;
        self.check_critical_equivalence_dims(max_len, |n| {
            if n <= EXTENDED_SCAN_MAX_LEN {
                2 * n + 2
            } else {
                2 * n - 1
            }
        })
    }

    /// As [`check_critical_equivalence`](Self::check_critical_equivalence)
    /// with an explicit top dimension per pattern length.
    pub fn check_critical_equivalence_dims(
        &self,
        max_len: usize,
        top: impl Fn(usize) -> usize + Sync,
    ) -> Result<TheoremReport> {
        let cases: Vec<(Pattern, usize)> = patterns(max_len)
            .into_iter()
            .flat_map(|f| (1..=top(f.len())).map(move |d| (f, d)))
            .collect();
        let outcomes = cases
            .par_iter()
            .map(|&(f, d)| -> Result<_> {
                let g = self.graph(&f, d)?;
                let bfs_bad = !g.is_isometric().isometric;
                let critical = g.has_critical_pair();
                Ok((
                    1,
                    (bfs_bad != critical).then(|| Counterexample {
                        pattern: f,
                        dimension: Some(d),
                        details: format!("bfs non-isometric={bfs_bad}, critical pair={critical}"),
                    }),
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TheoremReport::from_outcomes(
            "critical-pair-equivalence",
            format!("|f| <= {max_len}"),
            outcomes,
        ))
    }

    /// Overlap graphs for `1 <= r, s <= max_shift` are single cycles of
    /// length `2(k1+k2)`, each equation is forced by the others, and the
    /// residue sequences for coprime `k1 + k2 <= max_sum` are permutations
    /// ending at `k2`.
    pub fn check_overlap_cycles(&self, max_shift: usize, max_sum: usize) -> Result<TheoremReport> {
        let mut outcomes = Vec::new();
        let fail = |details: String| {
            Some(Counterexample {
                pattern: Pattern::new("0".parse().expect("literal")),
                dimension: None,
                details,
            })
        };
        for r in 1..=max_shift {
            for s in 1..=max_shift {
                let g = build_overlap_graph(r, s)?;
                let ok =
                    g.is_two_regular() && g.edges.len() == 2 * (g.k1 + g.k2) && g.is_single_cycle();
                let sys = EquationSystem::new(r, s, 0)?;
                let all = sys.shift_equations();
                let mut forced = true;
                for missing in &all {
                    let rest: Vec<_> = all.iter().copied().filter(|e| e != missing).collect();
                    forced &= closure_implies(r, s, &rest, sys.relative(*missing)?)?;
                }
                outcomes.push((
                    1,
                    (!ok || !forced)
                        .then(|| {
                            fail(format!(
                                "r={r} s={s}: cycle={ok} remaining-equation-forced={forced}"
                            ))
                        })
                        .flatten(),
                ));
            }
        }
        for k1 in 1..max_sum {
            for k2 in 1..=(max_sum - k1) {
                if gcd(k1, k2) != 1 {
                    continue;
                }
                let h = residue_sequence(k1, k2)?;
                let mut sorted = h.clone();
                sorted.sort_unstable();
                let ok = sorted.iter().copied().eq(0..k1 + k2)
                    && h.iter().position(|&x| x == k2) == Some(k1 + k2 - 1);
                outcomes.push((
                    1,
                    (!ok)
                        .then(|| fail(format!("residues k1={k1} k2={k2}: {h:?}")))
                        .flatten(),
                ));
            }
        }
        Ok(TheoremReport::from_outcomes(
            "overlap-cycle",
            format!("r,s <= {max_shift}; k1+k2 <= {max_sum}"),
            outcomes,
        ))
    }

    /// Good/bad counts and index statistics over all `2^n` patterns.
    pub fn census(&self, n: usize) -> Result<CensusRow> {
        check_len("census length", n, CENSUS_MAX_LEN)?;
        if n == 0 {
            return Err(Error::EmptyWord);
        }
        let all: Vec<Pattern> = Pattern::all(n).collect();
        let classes: Vec<_> = all.par_iter().map(classify).collect();
        let mut row = CensusRow {
            length: n,
            total: all.len(),
            good_count: 0,
            bad_count: 0,
            good_fraction: 0.0,
            index_histogram: BTreeMap::new(),
            p_histogram: BTreeMap::new(),
            oracle_confirmed: None,
        };
        for c in &classes {
            match c.index() {
                None => row.good_count += 1,
                Some(index) => {
                    row.bad_count += 1;
                    *row.index_histogram.entry(index).or_default() += 1;
                    let p = c.minimal_p().expect("bad pattern without witness");
                    *row.p_histogram.entry(p).or_default() += 1;
                }
            }
        }
        row.good_fraction = row.good_count as f64 / row.total as f64;
        if n <= CENSUS_ORACLE_MAX_LEN {
            let agree = all
                .par_iter()
                .zip(&classes)
                .map(|(f, c)| self.brute(f).map(|b| b == c.goodness))
                .collect::<Result<Vec<_>>>()?;
            row.oracle_confirmed = Some(agree.into_iter().all(|x| x));
        }
        Ok(row)
    }

    /// Bad patterns whose minimal witnesses all have three flips.
    pub fn find_pure_three_critical(&self, max_len: usize) -> Result<Vec<Pattern>> {
        check_len("max length", max_len, PURE_THREE_MAX_LEN)?;
        Ok(patterns(max_len)
            .par_iter()
            .filter(|f| {
                let c = classify(f);
                !c.is_good() && c.witnesses.iter().all(|w| w.p == 3)
            })
            .copied()
            .collect())
    }

    /// Runs the selected suite(s); `extra` is the lift depth for monotonicity.
    pub fn run_suite(
        &self,
        suite: Suite,
        max_len: usize,
        extra: usize,
    ) -> Result<Vec<TheoremReport>> {
        let one = |s: Suite| -> Result<TheoremReport> {
            match s {
                Suite::PValues => self.check_p_values(max_len),
                Suite::IndexBound => self.check_index_bound(max_len),
                Suite::Doubling => self.check_doubling(max_len),
                Suite::Monotonicity => self.check_monotonicity(max_len, extra),
                Suite::CriticalEquivalence => self.check_critical_equivalence(max_len),
                Suite::CrossValidation => self.cross_validate(max_len),
                Suite::OverlapCycle => self.check_overlap_cycles(20, 40),
                Suite::All => unreachable!(),
            }
        };
        match suite {
            Suite::All => [
                Suite::CrossValidation,
                Suite::PValues,
                Suite::IndexBound,
                Suite::Doubling,
                Suite::Monotonicity,
                Suite::CriticalEquivalence,
                Suite::OverlapCycle,
            ]
            .into_iter()
            .map(one)
            .collect(),
            s => Ok(vec![one(s)?]),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h() -> Harness {
        Harness::default()
    }

    fn p(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    #[test]
    fn cross_validate_small() {
        let r = h().cross_validate(3).unwrap();
        assert!(r.passed);
        assert_eq!(r.checked, 14);
        let r1 = h().cross_validate(1).unwrap();
        assert!(r1.passed);
        assert_eq!(r1.checked, 2);
        assert!(h().cross_validate(9).is_err());
    }

    #[test]
    fn p_values_small() {
        let r = h().check_p_values(3).unwrap();
        assert!(r.passed);
        assert_eq!(r.checked, 2); // 101 and 010
        let r2 = h().check_p_values(2).unwrap();
        assert!(r2.passed);
        assert_eq!(r2.checked, 0);
    }

    #[test]
    fn index_bound_sweep() {
        let r = h().check_index_bound(10).unwrap();
        assert!(r.passed, "{r}");
    }

    #[test]
    fn doubling_small() {
        let r = h().check_doubling(4).unwrap();
        assert!(r.passed, "{r}");
        for f in ["11", "1", "10"] {
            let c = classify(&p(f));
            assert!(c.is_good());
            assert!(classify(&p(f).doubled().unwrap()).is_good());
        }
        assert!(h().brute(&p("1111")).unwrap().is_good());
    }

    #[test]
    fn monotonicity_small() {
        let r = h().check_monotonicity(3, 3).unwrap();
        assert!(r.passed, "{r}");
        let g = h();
        for d in 4..=7 {
            assert!(!g.graph(&p("101"), d).unwrap().is_isometric().isometric);
        }
        let r0 = h().check_monotonicity(6, 0).unwrap();
        assert!(r0.passed && r0.checked == 0);
    }

    #[test]
    fn critical_equivalence_small() {
        let r = h().check_critical_equivalence(4).unwrap();
        assert!(r.passed, "{r}");
        let g4 = h().graph(&p("101"), 4).unwrap();
        assert!(!g4.is_isometric().isometric && g4.has_critical_pair());
        let g3 = h().graph(&p("101"), 3).unwrap();
        assert!(g3.is_isometric().isometric && !g3.has_critical_pair());
        for d in 1..=3 {
            let g = h().graph(&p("11"), d).unwrap();
            assert!(g.is_isometric().isometric && !g.has_critical_pair());
        }
    }

    #[test]
    fn overlap_cycles() {
        let r = h().check_overlap_cycles(8, 12).unwrap();
        assert!(r.passed, "{r}");
        assert!(r.checked > 64);
    }

    #[test]
    fn census_small_rows() {
        let r1 = h().census(1).unwrap();
        assert_eq!((r1.good_count, r1.total), (2, 2));
        assert_eq!(r1.oracle_confirmed, Some(true));
        let r2 = h().census(2).unwrap();
        assert_eq!((r2.good_count, r2.total), (4, 4));
        let r3 = h().census(3).unwrap();
        assert_eq!(r3.good_count + r3.bad_count, 8);
        assert_eq!(r3.index_histogram, BTreeMap::from([(4, 2)]));
        assert_eq!(r3.p_histogram, BTreeMap::from([(2, 2)]));
        assert_eq!(r3.good_count, 6);
        assert_eq!(r3.oracle_confirmed, Some(true));
        assert!(h().census(15).is_err());
    }

    #[test]
    fn census_rows_are_consistent() {
        for n in 1..=9 {
            let row = h().census(n).unwrap();
            assert_eq!(row.good_count + row.bad_count, row.total);
            assert_eq!(row.index_histogram.values().sum::<usize>(), row.bad_count);
            assert_eq!(row.p_histogram.values().sum::<usize>(), row.bad_count);
            // good set is closed under reversal and complement
            let good: Vec<Pattern> = Pattern::all(n).filter(|f| classify(f).is_good()).collect();
            for f in &good {
                assert!(good.contains(&f.reverse()) && good.contains(&f.complement()));
            }
        }
    }

    #[test]
    fn pure_three_probe() {
        assert!(h().find_pure_three_critical(3).unwrap().is_empty());
        assert_eq!(
            h().find_pure_three_critical(4).unwrap(),
            vec![p("0011"), p("1100")]
        );
    }

    #[test]
    fn oracle_minimal_p_matches_structural() {
        for f in Pattern::all_up_to(6) {
            let c = classify(&f);
            if let Some(index) = c.index() {
                let g = h().graph(&f, index).unwrap();
                assert_eq!(g.minimal_critical_p(), c.minimal_p(), "{f}");
            }
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let a = h().run_suite(Suite::All, 3, 2).unwrap();
        let b = h().run_suite(Suite::All, 3, 2).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
        assert_eq!(a.len(), 7);
        assert!(a.iter().all(|r| r.passed));
    }

    #[test]
    fn suite_names_round_trip() {
        for s in [
            Suite::All,
            Suite::PValues,
            Suite::IndexBound,
            Suite::Doubling,
            Suite::Monotonicity,
            Suite::CriticalEquivalence,
            Suite::CrossValidation,
            Suite::OverlapCycle,
        ] {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
