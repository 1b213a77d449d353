//! Exhaustive sweeps over `S_n`: the 132-bound, the `nu = 2` / `eta = 1`
//! characterisation, and agreement of the two Schubert polynomial routes.
//!
//! `nu` always comes from the ladder-move enumeration and `eta` from the
//! triple scan. The simple-path length is computed separately and only
//! compared against `eta`. Permutations are processed in parallel and the
//! records come back sorted by word.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumeration::{nu, schubert_from_pipedreams};
use crate::labeled_path::find_simple_path;
use crate::perm::Permutation;
use crate::poly::SchubertMemo;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermRecord {
    pub word: Permutation,
    pub eta: usize,
    pub nu: usize,
    /// `nu - eta - 1`; negative values violate the bound.
    pub slack: i64,
    /// Steps of the simple-ladder path from `B_w` to `T_w`, if one was found.
    pub path_length: Option<usize>,
}

impl PermRecord {
    pub fn compute(w: &Permutation) -> Self {
        let eta = w.eta();
        let nu = nu(w);
        let path_length = find_simple_path(w).ok().map(|r| r.total);
        PermRecord { word: w.clone(), eta, nu, slack: nu as i64 - eta as i64 - 1, path_length }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub n: usize,
    pub count: usize,
    pub violations: usize,
}

/// Computes a [`PermRecord`] for every permutation of `S_n`.
pub fn sweep(n: usize) -> Vec<PermRecord> {
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let mut records: Vec<PermRecord> = perms.par_iter().map(PermRecord::compute).collect();
    records.sort_by(|a, b| a.word.cmp(&b.word));
    records
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub summary: Summary,
    /// Permutations whose simple path length differs from `eta`.
    pub path_mismatches: usize,
    pub slack_distribution: BTreeMap<i64, usize>,
    pub violations: Vec<PermRecord>,
    pub records: Vec<PermRecord>,
}

impl BoundReport {
    pub fn from_records(n: usize, records: Vec<PermRecord>) -> Self {
        let violations: Vec<PermRecord> = records.iter().filter(|r| r.slack < 0).cloned().collect();
        let path_mismatches = records.iter().filter(|r| r.path_length != Some(r.eta)).count();
        let mut slack_distribution = BTreeMap::new();
        for r in &records {
            *slack_distribution.entry(r.slack).or_insert(0) += 1;
        }
        BoundReport {
            summary: Summary { n, count: records.len(), violations: violations.len() },
            path_mismatches,
            slack_distribution,
            violations,
            records,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.violations == 0 && self.path_mismatches == 0
    }
}

/// Checks `nu(w) >= eta(w) + 1` on all of `S_n`.
pub fn verify_bound(n: usize) -> BoundReport {
    BoundReport::from_records(n, sweep(n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StanleyFailure {
    /// `nu = 2` but `eta != 1`.
    NuTwoEtaNotOne,
    /// `eta = 1` but `nu != 2`.
    EtaOneNuNotTwo,
    /// `nu = 1` but `eta != 0`.
    NuOneEtaNotZero,
    /// `eta = 0` but `nu != 1`.
    EtaZeroNuNotOne,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub word: Permutation,
    pub eta: usize,
    pub nu: usize,
    pub failure: StanleyFailure,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StanleyReport {
    pub summary: Summary,
    pub nu_two: usize,
    pub eta_one: usize,
    pub nu_one: usize,
    pub eta_zero: usize,
    pub counterexamples: Vec<Counterexample>,
    pub records: Vec<PermRecord>,
}

impl StanleyReport {
    pub fn from_records(n: usize, records: Vec<PermRecord>) -> Self {
        let mut counterexamples = Vec::new();
        for r in &records {
            let mut fail = |failure| {
                counterexamples.push(Counterexample { word: r.word.clone(), eta: r.eta, nu: r.nu, failure })
            };
            if r.nu == 2 && r.eta != 1 {
                fail(StanleyFailure::NuTwoEtaNotOne);
            }
            if r.eta == 1 && r.nu != 2 {
                fail(StanleyFailure::EtaOneNuNotTwo);
            }
            if r.nu == 1 && r.eta != 0 {
                fail(StanleyFailure::NuOneEtaNotZero);
            }
            if r.eta == 0 && r.nu != 1 {
                fail(StanleyFailure::EtaZeroNuNotOne);
            }
        }
        let count = |f: fn(&PermRecord) -> bool| records.iter().filter(|r| f(r)).count();
        StanleyReport {
            summary: Summary { n, count: records.len(), violations: counterexamples.len() },
            nu_two: count(|r| r.nu == 2),
            eta_one: count(|r| r.eta == 1),
            nu_one: count(|r| r.nu == 1),
            eta_zero: count(|r| r.eta == 0),
            counterexamples,
            records,
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.violations == 0
    }
}

/// Checks `nu = 2 <=> eta = 1` and `nu = 1 <=> eta = 0` on all of `S_n`.
pub fn verify_stanley(n: usize) -> StanleyReport {
    StanleyReport::from_records(n, sweep(n))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleMismatch {
    pub word: Permutation,
    pub pipedreams: String,
    pub divdiff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub summary: Summary,
    pub mismatches: Vec<OracleMismatch>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.summary.violations == 0
    }
}

/// Compares the pipe-dream sum with the divided-difference recursion for
/// every permutation of `S_n`; also checks `nu(w) = S_w(1, ..., 1)`.
pub fn verify_oracles(n: usize) -> OracleReport {
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let mut memo = SchubertMemo::new();
    let divdiff: Vec<_> = perms.iter().map(|w| memo.get(w)).collect();
    let mut mismatches: Vec<OracleMismatch> = perms
        .par_iter()
        .zip(divdiff.par_iter())
        .filter_map(|(w, dd)| {
            let pd = schubert_from_pipedreams(w);
            let agree = &pd == dd && nu(w) as i64 == dd.evaluate_all_ones();
            (!agree).then(|| OracleMismatch { word: w.clone(), pipedreams: pd.to_text(), divdiff: dd.to_text() })
        })
        .collect();
    mismatches.sort_by(|a, b| a.word.cmp(&b.word));
    OracleReport { summary: Summary { n, count: perms.len(), violations: mismatches.len() }, mismatches }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_group() {
        let r = verify_bound(1);
        assert_eq!(r.summary, Summary { n: 1, count: 1, violations: 0 });
        assert!(r.passed());
        assert!(verify_stanley(1).passed());
        assert!(verify_oracles(1).passed());
    }

    #[test]
    fn slack_examples_in_s4() {
        let r = verify_bound(4);
        assert!(r.passed());
        let find = |w: &str| r.records.iter().find(|x| x.word == p(w)).unwrap().clone();
        let a = find("1432");
        assert_eq!((a.nu, a.eta, a.slack, a.path_length), (5, 3, 1, Some(3)));
        let b = find("2143");
        assert_eq!((b.nu, b.eta, b.slack, b.path_length), (3, 2, 0, Some(2)));
        assert_eq!(r.slack_distribution.values().sum::<usize>(), 24);
        assert!(r.slack_distribution.keys().all(|&s| s >= 0));
    }

    #[test]
    fn stanley_in_s3() {
        let r = verify_stanley(3);
        assert!(r.passed());
        assert_eq!((r.nu_two, r.eta_one, r.nu_one, r.eta_zero), (1, 1, 5, 5));
        let rec = r.records.iter().find(|x| x.word == p("132")).unwrap();
        assert_eq!((rec.eta, rec.nu), (1, 2));
    }

    #[test]
    fn stanley_flags_fabricated_counterexample() {
        let bogus = PermRecord { word: p("12"), eta: 1, nu: 3, slack: 1, path_length: Some(1) };
        let r = StanleyReport::from_records(2, vec![bogus]);
        assert!(!r.passed());
        assert_eq!(r.counterexamples[0].failure, StanleyFailure::EtaOneNuNotTwo);
    }

    #[test]
    fn bound_flags_violation_and_path_mismatch() {
        let bad = PermRecord { word: p("21"), eta: 2, nu: 1, slack: -2, path_length: Some(0) };
        let r = BoundReport::from_records(2, vec![bad]);
        assert_eq!(r.summary.violations, 1);
        assert_eq!(r.path_mismatches, 1);
        assert!(!r.passed());
    }

    #[test]
    fn s6_stanley_sweep() {
        let r = verify_stanley(6);
        assert_eq!(r.summary.count, 720);
        assert!(r.counterexamples.is_empty());
    }

    #[test]
    fn oracles_agree_through_s5() {
        for n in 1..=5 {
            let r = verify_oracles(n);
            assert!(r.passed(), "{:?}", r.mismatches);
        }
    }

    #[test]
    fn reports_round_trip_through_json() {
        let b = verify_bound(4);
        let json = serde_json::to_string(&b).unwrap();
        assert_eq!(serde_json::from_str::<BoundReport>(&json).unwrap(), b);
        let s = verify_stanley(3);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(serde_json::from_str::<StanleyReport>(&json).unwrap(), s);
    }
}
