//! Certification that every alternating group `A_n`, `n >= 7`, has a
//! non-self-conjugate partition whose degree exceeds `(n!)^(1/14) (n-1)`,
//! together with the supporting bounds on hook products.
//!
//! The main inequality `(n!)^(13/14)/(n-1) > H_lambda` is decided exactly as
//! `(n!)^13 > (H_lambda (n-1))^14`. The Stirling-type bounds involve `e` and
//! `pi`; they are checked with rational interval enclosures and may come back
//! inconclusive, which is reported and never treated as a failure of the
//! exact certificate.

use std::cmp::Ordering;

use num_traits::{One, Pow};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::arith::{decimal_digits, factorial, nat, nth_root_floor, Integer, Natural, Rational};
use crate::interval::{const_interval, digits_to_bits, Constant, Decision, RationalInterval};
use crate::partition::{degree_from_hook_product, gamma_of_size, partitions_of, Partition};

/// Smallest `n` covered by the certificate.
pub const MIN_N: usize = 7;
/// Below this size the search is exhaustive over all partitions of `n`.
pub const EXHAUSTIVE_BELOW: usize = 49;
/// Largest `n` for which an exhaustive fallback is attempted.
pub const EXHAUSTIVE_LIMIT: usize = 60;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AltError {
    #[error("n = {n} is below the supported minimum {min}")]
    TooSmall { n: usize, min: usize },
}

/// How a witness was found.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessSource {
    /// One of the two small witnesses named explicitly for n = 7, 8.
    Named,
    /// A member of `Gamma_m` (or the square fix replacing `(m^m)`).
    Gamma,
    /// Exhaustive search over all non-self-conjugate partitions of `n`.
    Exhaustive,
}

/// The two integers compared by the certificate, summarized.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Margin {
    /// Ordering of `(n!)^13` relative to `(H (n-1))^14`.
    #[serde(serialize_with = "ser_ordering")]
    pub ordering: Ordering,
    pub lhs_digits: usize,
    pub rhs_digits: usize,
}

fn ser_ordering<S: serde::Serializer>(o: &Ordering, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(match o {
        Ordering::Less => "less",
        Ordering::Equal => "equal",
        Ordering::Greater => "greater",
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub n: usize,
    pub witness: Partition,
    pub hook_product: Natural,
    pub degree: Natural,
    pub margin: Margin,
    pub source: WitnessSource,
    pub passed: bool,
}

impl WitnessReport {
    /// JSON record with big integers as decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "witness": self.witness.to_string(),
            "hook_product": self.hook_product.to_string(),
            "degree": self.degree.to_string(),
            "margin": self.margin,
            "source": self.source,
            "passed": self.passed,
        })
    }
}

/// `(n!)^13`, shared by all candidates for one `n`.
struct Target {
    n: usize,
    lhs: Natural,
}

impl Target {
    fn new(n: usize) -> Self {
        Target {
            n,
            lhs: Pow::pow(factorial(n as u64), 13u32),
        }
    }

    fn evaluate(&self, lambda: &Partition, source: WitnessSource) -> WitnessReport {
        let hook_product = lambda.hooks().product;
        let rhs = Pow::pow(&hook_product * nat(self.n as u64 - 1), 14u32);
        let ordering = self.lhs.cmp(&rhs);
        let degree = degree_from_hook_product(self.n, &hook_product)
            .expect("hook product of a partition divides n!");
        WitnessReport {
            n: self.n,
            passed: ordering == Ordering::Greater && !lambda.is_self_conjugate(),
            witness: lambda.clone(),
            hook_product,
            degree,
            margin: Margin {
                ordering,
                lhs_digits: decimal_digits(&self.lhs),
                rhs_digits: decimal_digits(&rhs),
            },
            source,
        }
    }
}

/// The unique `m` with `m^2 <= n <= m^2 + 2m`.
pub fn gamma_index(n: usize) -> usize {
    nth_root_floor(&nat(n as u64), 2)
        .expect("k = 2")
        .try_into()
        .expect("fits usize")
}

/// `(m+1, m^(m-2), m-1)`, the non-self-conjugate stand-in for `(m^m)`.
/// `None` for `m < 2`.
pub fn square_fix(m: usize) -> Option<Partition> {
    if m < 2 {
        return None;
    }
    Some(Partition::from_blocks(&[(m + 1, 1), (m, m - 2), (m - 1, 1)]).expect("decreasing"))
}

fn named_witness(n: usize) -> Option<Partition> {
    match n {
        7 => Some(Partition::new(vec![3, 2, 2]).expect("valid")),
        8 => Some(Partition::new(vec![4, 2, 2]).expect("valid")),
        _ => None,
    }
}

/// `Gamma_m` members of size `n`, with `(m^m)` replaced by [`square_fix`].
pub fn gamma_candidates(n: usize) -> Vec<Partition> {
    let m = gamma_index(n);
    gamma_of_size(m, n)
        .into_iter()
        .map(|l| {
            if l.is_self_conjugate() {
                square_fix(m).unwrap_or(l)
            } else {
                l
            }
        })
        .collect()
}

/// Certifies a given partition as a witness for `n`.
pub fn certify_witness(lambda: &Partition) -> WitnessReport {
    let target = Target::new(lambda.size());
    target.evaluate(lambda, WitnessSource::Named)
}

/// Search strategy for [`check_prop42_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SearchMode {
    /// First passing candidate in generation order.
    #[default]
    First,
    /// Passing candidate with the smallest hook product.
    Best,
}

fn pick(
    target: &Target,
    candidates: impl Iterator<Item = Partition>,
    source: WitnessSource,
    mode: SearchMode,
    fallback: &mut Option<WitnessReport>,
) -> Option<WitnessReport> {
    let mut best: Option<WitnessReport> = None;
    for lambda in candidates {
        if lambda.is_self_conjugate() {
            continue;
        }
        let report = target.evaluate(&lambda, source);
        if report.passed {
            match mode {
                SearchMode::First => return Some(report),
                SearchMode::Best => {
                    if best
                        .as_ref()
                        .is_none_or(|b| report.hook_product < b.hook_product)
                    {
                        best = Some(report);
                    }
                }
            }
        } else if fallback
            .as_ref()
            .is_none_or(|b| report.hook_product < b.hook_product)
        {
            *fallback = Some(report);
        }
    }
    best
}

/// Finds and certifies a witness for `n` in the default search order.
pub fn check_prop42(n: usize) -> Result<WitnessReport, AltError> {
    check_prop42_with(n, SearchMode::First)
}

/// Finds and certifies a witness for `n`.
///
/// Order: the named witnesses for 7 and 8, then exhaustive search for
/// `n < 49`, otherwise `Gamma_m` members of size `n` followed by an
/// exhaustive fallback while `n <= 60`. On failure the report carries the
/// candidate with the smallest hook product and `passed = false`.
pub fn check_prop42_with(n: usize, mode: SearchMode) -> Result<WitnessReport, AltError> {
    if n < MIN_N {
        return Err(AltError::TooSmall { n, min: MIN_N });
    }
    let target = Target::new(n);
    let mut closest: Option<WitnessReport> = None;

    if mode == SearchMode::First {
        if let Some(lambda) = named_witness(n) {
            let report = target.evaluate(&lambda, WitnessSource::Named);
            if report.passed {
                return Ok(report);
            }
        }
    }
    if n >= EXHAUSTIVE_BELOW {
        let found = pick(
            &target,
            gamma_candidates(n).into_iter(),
            WitnessSource::Gamma,
            mode,
            &mut closest,
        );
        if let Some(r) = found {
            return Ok(r);
        }
    }
    if n <= EXHAUSTIVE_LIMIT {
        let found = pick(
            &target,
            partitions_of(n),
            WitnessSource::Exhaustive,
            mode,
            &mut closest,
        );
        if let Some(r) = found {
            return Ok(r);
        }
    }
    Ok(closest.unwrap_or_else(|| {
        target.evaluate(
            &Partition::new(vec![n]).expect("valid"),
            WitnessSource::Exhaustive,
        )
    }))
}

/// Runs [`check_prop42`] on `from..=to`, with `workers` threads when given.
/// Output order follows `n`.
pub fn check_prop42_range(
    from: usize,
    to: usize,
    mode: SearchMode,
    workers: Option<usize>,
) -> Result<Vec<WitnessReport>, AltError> {
    if from < MIN_N {
        return Err(AltError::TooSmall {
            n: from,
            min: MIN_N,
        });
    }
    let run = || -> Vec<WitnessReport> {
        (from..=to)
            .into_par_iter()
            .map(|n| check_prop42_with(n, mode).expect("n >= 7"))
            .collect()
    };
    match workers {
        Some(w) if w > 1 => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w)
                .build()
                .expect("thread pool");
            Ok(pool.install(run))
        }
        _ => Ok((from..=to)
            .map(|n| check_prop42_with(n, mode).expect("n >= 7"))
            .collect()),
    }
}

fn int(x: u64) -> Rational {
    Rational::from_integer(Integer::from(x))
}

fn nat_rat(x: Natural) -> Rational {
    Rational::from_integer(Integer::from(x))
}

/// `((2 pi)^13 / e^15)^(1/28) > 1.35`, decided as
/// `(2 pi)^13 * 20^28 > 27^28 * e^15`.
pub fn check_stirling_constant(digits: u32) -> Decision {
    let bits = Some(digits_to_bits(digits));
    let two_pi = const_interval(Constant::TwoPi, digits).expect("digits >= 1");
    let e = const_interval(Constant::E, digits).expect("digits >= 1");
    let lhs = two_pi
        .pow_rounded(13, bits)
        .scale(&nat_rat(Pow::pow(nat(20), 28u32)));
    let rhs = e
        .pow_rounded(15, bits)
        .scale(&nat_rat(Pow::pow(nat(27), 28u32)));
    compare_intervals(&lhs, &rhs)
}

/// `Holds` if `a > b` for all members, `Fails` if `a <= b` for all members.
fn compare_intervals(a: &RationalInterval, b: &RationalInterval) -> Decision {
    if a.lo() > b.hi() {
        Decision::Holds
    } else if a.hi() <= b.lo() {
        Decision::Fails
    } else {
        Decision::Inconclusive
    }
}

/// `(n!)^(13/14)/(n-1) > 1.35 (n/e)^(25n/28)`, raised to the 28th power:
/// `(n!)^26 * 20^28 * e^(25n) > 27^28 * (n-1)^28 * n^(25n)`.
pub fn check_lemma_lower(n: usize, digits: u32) -> Result<Decision, AltError> {
    if n < 15 {
        return Err(AltError::TooSmall { n, min: 15 });
    }
    let n64 = n as u64;
    let exp = u32::try_from(25 * n).expect("exponent fits u32");
    let lhs_exact = Pow::pow(factorial(n64), 26u32) * Pow::pow(nat(20), 28u32);
    let rhs_exact =
        Pow::pow(nat(27), 28u32) * Pow::pow(nat(n64 - 1), 28u32) * Pow::pow(nat(n64), exp);
    let e = const_interval(Constant::E, digits).expect("digits >= 1");
    let e_pow = e.pow_rounded(exp, Some(digits_to_bits(digits)));
    let lhs = e_pow.scale(&nat_rat(lhs_exact));
    Ok(compare_intervals(
        &lhs,
        &RationalInterval::point(nat_rat(rhs_exact)),
    ))
}

/// True iff every member of `Gamma_m` has `H_lambda < (m+1)^((m+1)^2)`.
pub fn check_lemma_upper(m: usize) -> bool {
    let bound = Pow::pow(nat(m as u64 + 1), ((m + 1) * (m + 1)) as u32);
    crate::partition::enumerate_gamma(m).all(|l| l.hooks().product < bound)
}

/// `(81n/64)^(81/128) <= (n/e)^(25/28)`, the n-th root of the final
/// reduction, cleared to `(81n/64)^567 * e^800 <= n^800`.
/// Holds for `n >= 55` and fails for smaller `n`.
pub fn check_lemma46(n: usize, digits: u32) -> Decision {
    let n64 = n as u64;
    let base = Rational::new(Integer::from(81 * n64), Integer::from(64));
    let left_exact = Pow::pow(&base, 567u32);
    let e = const_interval(Constant::E, digits).expect("digits >= 1");
    let lhs = e
        .pow_rounded(800, Some(digits_to_bits(digits)))
        .scale(&left_exact);
    let rhs = Pow::pow(int(n64), 800u32);
    if lhs.hi() <= &rhs {
        Decision::Holds
    } else if lhs.lo() > &rhs {
        Decision::Fails
    } else {
        Decision::Inconclusive
    }
}

/// `floor((n!)^(1/14))` and `(n-1)` times it, plus the same with the floor
/// root bumped by one: the exact bracket
/// `(n-1) r <= (n-1) (n!)^(1/14) < (n-1)(r+1)`.
pub fn degree_threshold_bracket(n: usize) -> (Natural, Natural) {
    let r = nth_root_floor(&factorial(n as u64), 14).expect("k = 14");
    let lo = &r * nat(n as u64 - 1);
    let hi = (r + Natural::one()) * nat(n as u64 - 1);
    (lo, hi)
}
