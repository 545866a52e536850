use rayon::prelude::*;
use serde::Serialize;

use super::report::{check_lemma61, check_thm21, Thm21Report};
use super::{validate, Exclusion, Family, GroupSpec, LieError};
use crate::poly::warm_cyclotomic_cache;
use crate::primes::prime_powers_up_to;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepCheck {
    Thm21,
    Lemma61,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub families: Vec<Family>,
    pub rank_max: u32,
    pub q_max: u64,
    /// Field bound for the exceptional families; `q_max` when absent.
    pub exceptional_q_max: Option<u64>,
    pub check: SweepCheck,
}

impl SweepConfig {
    pub fn new(families: Vec<Family>, rank_max: u32, q_max: u64) -> Self {
        SweepConfig {
            families,
            rank_max,
            q_max,
            exceptional_q_max: None,
            check: SweepCheck::Thm21,
        }
    }

    /// All points of the sweep in `(family, rank, q)` order.
    pub fn points(&self) -> Vec<GroupSpec> {
        let mut families = self.families.clone();
        families.sort();
        families.dedup();
        let classical_q = prime_powers_up_to(self.q_max);
        let exceptional_q = prime_powers_up_to(self.exceptional_q_max.unwrap_or(self.q_max));
        let mut points = Vec::new();
        for family in families {
            if family.is_classical() {
                for rank in 1..=self.rank_max {
                    for q in &classical_q {
                        points.push(GroupSpec {
                            family,
                            rank: Some(rank),
                            q: *q,
                        });
                    }
                }
            } else {
                for q in &exceptional_q {
                    points.push(GroupSpec {
                        family,
                        rank: None,
                        q: *q,
                    });
                }
            }
        }
        points
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExcludedPoint {
    pub group: String,
    pub spec: GroupSpec,
    pub exclusion: Exclusion,
}

#[derive(Debug, Clone, Default)]
pub struct SweepResult {
    pub reports: Vec<Thm21Report>,
    pub excluded: Vec<ExcludedPoint>,
    /// Points where a formula produced an inexact division.
    pub errors: Vec<(GroupSpec, LieError)>,
}

impl SweepResult {
    pub fn failures(&self, check: SweepCheck) -> impl Iterator<Item = &Thm21Report> {
        self.reports.iter().filter(move |r| match check {
            SweepCheck::Thm21 => !r.passed_114,
            SweepCheck::Lemma61 => !r.passed_165,
        })
    }

    pub fn all_passed(&self, check: SweepCheck) -> bool {
        self.errors.is_empty() && self.failures(check).next().is_none()
    }
}

enum Outcome {
    Report(Box<Thm21Report>),
    Excluded(ExcludedPoint),
    Error(GroupSpec, LieError),
}

fn run_point(spec: GroupSpec, check: SweepCheck) -> Outcome {
    if let Err(exclusion) = validate(&spec) {
        return Outcome::Excluded(ExcludedPoint {
            group: spec.label(),
            spec,
            exclusion,
        });
    }
    let result = match check {
        SweepCheck::Thm21 => check_thm21(&spec),
        SweepCheck::Lemma61 => check_lemma61(&spec),
    };
    match result {
        Ok(report) => Outcome::Report(Box::new(report)),
        Err(e) => Outcome::Error(spec, e),
    }
}

fn collect(outcomes: Vec<Outcome>) -> SweepResult {
    let mut result = SweepResult::default();
    for outcome in outcomes {
        match outcome {
            Outcome::Report(r) => result.reports.push(*r),
            Outcome::Excluded(x) => result.excluded.push(x),
            Outcome::Error(s, e) => result.errors.push((s, e)),
        }
    }
    result
}

/// Sequential sweep.
pub fn sweep(config: &SweepConfig) -> SweepResult {
    let outcomes = config
        .points()
        .into_iter()
        .map(|s| run_point(s, config.check))
        .collect();
    collect(outcomes)
}

/// Same output as `sweep`, spread over `workers` threads.
pub fn sweep_parallel(config: &SweepConfig, workers: usize) -> SweepResult {
    if workers <= 1 {
        return sweep(config);
    }
    warm_cyclotomic_cache();
    let points = config.points();
    let check = config.check;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool construction");
    // par_iter().map().collect() preserves input order.
    let outcomes = pool.install(|| {
        points
            .into_par_iter()
            .map(|s| run_point(s, check))
            .collect()
    });
    collect(outcomes)
}
