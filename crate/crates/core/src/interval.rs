//! Rational intervals with outward rounding, and enclosures of e and pi.
//!
//! Every operation returns an interval containing the exact result for any
//! choice of members of the operands.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::arith::{ArithError, Integer, Natural, Rational};

/// Default number of decimal digits for constant enclosures.
pub const DEFAULT_DIGITS: u32 = 50;
/// Precision ceiling for automatic escalation.
pub const MAX_DIGITS: u32 = 400;

/// Extra binary digits carried beyond the requested decimal precision.
const GUARD_BITS: u64 = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalInterval {
    lo: Rational,
    hi: Rational,
}

impl RationalInterval {
    /// Panics if `lo > hi`.
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        RationalInterval { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        RationalInterval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn from_integer(x: impl Into<Integer>) -> Self {
        Self::point(Rational::from_integer(x.into()))
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::new(&self.lo - &other.hi, &self.hi - &other.lo)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let a = &self.lo * k;
        let b = &self.hi * k;
        if a <= b {
            Self::new(a, b)
        } else {
            Self::new(b, a)
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().expect("nonempty").clone();
        let hi = products.iter().max().expect("nonempty").clone();
        Self::new(lo, hi)
    }

    /// Exact power by repeated squaring, no rounding.
    pub fn pow(&self, exp: u32) -> Self {
        self.pow_rounded(exp, None)
    }

    /// Power with outward rounding to `bits` significant bits after every
    /// multiplication. The result still encloses the exact power.
    pub fn pow_rounded(&self, exp: u32, bits: Option<u64>) -> Self {
        let round = |x: Self| match bits {
            Some(b) => x.round_outward(b),
            None => x,
        };
        let mut result = Self::point(Rational::one());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = round(result.mul(&base));
            }
            e >>= 1;
            if e > 0 {
                base = round(base.mul(&base));
            }
        }
        result
    }

    /// Widens the interval so both endpoints are dyadic rationals with about
    /// `bits` significant bits.
    pub fn round_outward(&self, bits: u64) -> Self {
        Self::new(
            round_dyadic(&self.lo, bits, false),
            round_dyadic(&self.hi, bits, true),
        )
    }

    /// Three-way comparison of the interval against a threshold.
    /// `Less`/`Greater` only when the whole interval lies strictly on one
    /// side; `None` when the interval touches or straddles it.
    pub fn compare(&self, threshold: &Rational) -> Option<Ordering> {
        if &self.hi < threshold {
            Some(Ordering::Less)
        } else if &self.lo > threshold {
            Some(Ordering::Greater)
        } else {
            None
        }
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}]",
            to_decimal(&self.lo, 20, false),
            to_decimal(&self.hi, 20, true)
        )
    }
}

fn bit_len(x: &Integer) -> u64 {
    x.magnitude().bits()
}

/// Rounds `x` to a dyadic rational with roughly `bits` significant bits,
/// downward (`up = false`) or upward.
fn round_dyadic(x: &Rational, bits: u64, up: bool) -> Rational {
    if x.is_zero() {
        return x.clone();
    }
    let n = x.numer();
    let d = x.denom();
    let shift = bits as i64 - (bit_len(n) as i64 - bit_len(d) as i64);
    let (scaled_num, scaled_den) = if shift >= 0 {
        (n << (shift as usize), d.clone())
    } else {
        (n.clone(), d << ((-shift) as usize))
    };
    let q = if up {
        scaled_num.div_ceil(&scaled_den)
    } else {
        scaled_num.div_floor(&scaled_den)
    };
    if shift >= 0 {
        Rational::new(q, Integer::one() << (shift as usize))
    } else {
        Rational::from_integer(q << ((-shift) as usize))
    }
}

/// Decimal rendering truncated to `places` digits after the point, rounded
/// outward in the requested direction. Display only.
pub fn to_decimal(x: &Rational, places: u32, up: bool) -> String {
    let scale = num_traits::Pow::pow(Integer::from(10u32), places);
    let scaled = x * Rational::from_integer(scale.clone());
    let v = if up { scaled.ceil() } else { scaled.floor() }.to_integer();
    let negative = v.is_negative();
    let digits = v.abs().to_string();
    let places = places as usize;
    let padded = if digits.len() <= places {
        format!("{}{}", "0".repeat(places + 1 - digits.len()), digits)
    } else {
        digits
    };
    let (int_part, frac_part) = padded.split_at(padded.len() - places);
    let sign = if negative { "-" } else { "" };
    if places == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Constant {
    E,
    Pi,
    TwoPi,
}

impl FromStr for Constant {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "e" => Ok(Constant::E),
            "pi" => Ok(Constant::Pi),
            "two_pi" | "2pi" => Ok(Constant::TwoPi),
            other => Err(ArithError::UnknownConstant(other.to_string())),
        }
    }
}

fn ten_pow_neg(digits: u32) -> Rational {
    Rational::new(
        Integer::one(),
        num_traits::Pow::pow(Integer::from(10u32), digits),
    )
}

pub(crate) fn digits_to_bits(digits: u32) -> u64 {
    // log2(10) < 3.33; round up and add guard bits
    (digits as u64 * 333).div_ceil(100) + GUARD_BITS
}

/// e = sum 1/k!, with tail bound sum_{k>N} 1/k! < 1/(N! N).
fn e_interval(digits: u32) -> RationalInterval {
    let target = ten_pow_neg(digits) / Rational::from_integer(Integer::from(4));
    let mut sum = Rational::one();
    let mut fact = Integer::one();
    let mut k: u64 = 1;
    loop {
        fact *= k;
        sum += Rational::new(Integer::one(), fact.clone());
        let tail = Rational::new(Integer::one(), &fact * k);
        if tail < target {
            let exact = RationalInterval::new(sum.clone(), &sum + tail);
            return exact.round_outward(digits_to_bits(digits));
        }
        k += 1;
    }
}

/// arctan(1/x) for integer x >= 2 via the alternating Taylor series; two
/// consecutive partial sums bracket the value.
fn arctan_inv(x: u64, digits: u32) -> RationalInterval {
    let target = ten_pow_neg(digits) / Rational::from_integer(Integer::from(64));
    let x2 = Integer::from(x) * Integer::from(x);
    let mut power = Integer::from(x); // x^(2k+1)
    let mut sum = Rational::zero();
    let mut k: u64 = 0;
    loop {
        let term = Rational::new(Integer::one(), &power * Integer::from(2 * k + 1));
        let next = if k.is_multiple_of(2) {
            &sum + &term
        } else {
            &sum - &term
        };
        if term < target {
            let (lo, hi) = if sum <= next {
                (sum, next)
            } else {
                (next, sum)
            };
            return RationalInterval::new(lo, hi);
        }
        sum = next;
        power *= &x2;
        k += 1;
    }
}

/// pi = 16 arctan(1/5) - 4 arctan(1/239)
fn pi_interval(digits: u32) -> RationalInterval {
    let a = arctan_inv(5, digits + 2).scale(&Rational::from_integer(Integer::from(16)));
    let b = arctan_inv(239, digits + 2).scale(&Rational::from_integer(Integer::from(4)));
    a.sub(&b).round_outward(digits_to_bits(digits))
}

/// An interval of width below `10^-digits` guaranteed to contain the constant.
pub fn const_interval(name: Constant, digits: u32) -> Result<RationalInterval, ArithError> {
    if digits == 0 {
        return Err(ArithError::ZeroPrecision);
    }
    Ok(match name {
        Constant::E => e_interval(digits),
        Constant::Pi => pi_interval(digits + 1),
        Constant::TwoPi => pi_interval(digits + 1).scale(&Rational::from_integer(Integer::from(2))),
    })
}

/// Three-valued outcome of a check that depends on an interval enclosure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Decision {
    Holds,
    Fails,
    Inconclusive,
}

impl Decision {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Decision::Holds
        } else {
            Decision::Fails
        }
    }
}

/// Runs `check` at `start` digits, doubling the precision while the result
/// is inconclusive, up to [`MAX_DIGITS`]. Returns the decision and the
/// precision that produced it.
pub fn decide_with_escalation(start: u32, check: impl Fn(u32) -> Decision) -> (Decision, u32) {
    let mut digits = start.max(1);
    loop {
        let d = check(digits);
        if d != Decision::Inconclusive || digits >= MAX_DIGITS {
            return (d, digits);
        }
        digits = (digits * 2).min(MAX_DIGITS);
    }
}

/// Integer helper for callers that mix naturals into interval bounds.
pub fn nat_to_rational(n: &Natural) -> Rational {
    Rational::from_integer(Integer::from(n.clone()))
}
