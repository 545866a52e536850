//! Arbitrary-precision naturals and rationals, and the exact comparisons that
//! every verdict in this crate reduces to.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use thiserror::Error;

/// Nonnegative integer of unbounded magnitude.
pub type Natural = BigUint;
/// Signed integer of unbounded magnitude.
pub type Integer = BigInt;
/// Rational in lowest terms with a positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("negative base is not allowed in a power comparison")]
    NegativeBase,
    #[error("0^0 on both sides is undefined")]
    ZeroExponents,
    #[error("root index must be at least 1")]
    ZeroRootIndex,
    #[error("cyclotomic index must be at least 1")]
    ZeroCyclotomicIndex,
    #[error("unknown constant `{0}` (expected e, pi or two_pi)")]
    UnknownConstant(String),
    #[error("precision must be at least 1 digit")]
    ZeroPrecision,
}

/// Compares `a^p` with `b^s` exactly by cross-multiplying numerators and
/// denominators. Never approximates.
pub fn cmp_power(a: &Rational, p: u32, b: &Rational, s: u32) -> Result<Ordering, ArithError> {
    if a.is_negative() || b.is_negative() {
        return Err(ArithError::NegativeBase);
    }
    if p == 0 && s == 0 {
        return Err(ArithError::ZeroExponents);
    }
    // (an/ad)^p vs (bn/bd)^s  <=>  an^p * bd^s vs bn^s * ad^p
    let lhs = Pow::pow(a.numer(), p) * Pow::pow(b.denom(), s);
    let rhs = Pow::pow(b.numer(), s) * Pow::pow(a.denom(), p);
    Ok(lhs.cmp(&rhs))
}

/// Natural-number form of [`cmp_power`].
pub fn cmp_power_nat(a: &Natural, p: u32, b: &Natural, s: u32) -> Ordering {
    Pow::pow(a, p).cmp(&Pow::pow(b, s))
}

/// The unique `r` with `r^k <= x < (r+1)^k`.
pub fn nth_root_floor(x: &Natural, k: u32) -> Result<Natural, ArithError> {
    if k == 0 {
        return Err(ArithError::ZeroRootIndex);
    }
    // BigUint::nth_root is a floor root; the loop below only guards the contract.
    let mut r = x.nth_root(k);
    while Pow::pow(&r, k) > *x {
        r -= 1u32;
    }
    while Pow::pow(&(&r + 1u32), k) <= *x {
        r += 1u32;
    }
    Ok(r)
}

/// Exact `n!`.
pub fn factorial(n: u64) -> Natural {
    let mut acc = Natural::one();
    // multiply in word-sized chunks to keep the big-integer product count down
    let mut chunk: u64 = 1;
    for i in 2..=n {
        match chunk.checked_mul(i) {
            Some(c) => chunk = c,
            None => {
                acc *= chunk;
                chunk = i;
            }
        }
    }
    acc * chunk
}

/// Exact `base^exp` for a natural base.
pub fn pow_nat(base: &Natural, exp: u32) -> Natural {
    Pow::pow(base, exp)
}

pub fn nat(n: u64) -> Natural {
    Natural::from(n)
}

/// `num/den` as a reduced rational. Panics on a zero denominator.
pub fn ratio(num: impl Into<Integer>, den: impl Into<Integer>) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn rational_from_nat(n: &Natural) -> Rational {
    Rational::from_integer(Integer::from(n.clone()))
}

/// Parses "p/q", "p" or a finite decimal like "1.43" into an exact rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if let Some((n, d)) = text.split_once('/') {
        let n: Integer = n.trim().parse().ok()?;
        let d: Integer = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    if let Some((int_part, frac_part)) = text.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = int_part.starts_with('-');
        let int_digits = int_part.trim_start_matches(['-', '+']);
        let digits = format!(
            "{}{}",
            if int_digits.is_empty() {
                "0"
            } else {
                int_digits
            },
            frac_part
        );
        let mut n: Integer = digits.parse().ok()?;
        if negative {
            n = -n;
        }
        let d = Pow::pow(Integer::from(10u32), frac_part.len() as u32);
        return Some(Rational::new(n, d));
    }
    text.parse::<Integer>().ok().map(Rational::from_integer)
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Number of decimal digits of `x` (1 for zero).
pub fn decimal_digits(x: &Natural) -> usize {
    x.to_str_radix(10).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cmp_power_examples() {
        assert_eq!(
            cmp_power(&ratio(3, 2), 2, &ratio(2, 1), 1),
            Ok(Ordering::Greater)
        );
        assert_eq!(
            cmp_power(&ratio(4, 1), 3, &ratio(8, 1), 2),
            Ok(Ordering::Equal)
        );
    }

    #[test]
    fn cmp_power_linear_rank4_field2() {
        // 32/7 = the reduced ratio 64/14; compare (32/7)^14 with 20160
        // against an independent evaluation: 32^14 vs 20160 * 7^14.
        let lhs = pow_nat(&nat(32), 14);
        let rhs = nat(20160) * pow_nat(&nat(7), 14);
        assert!(lhs > rhs);
        assert_eq!(
            cmp_power(&ratio(32, 7), 14, &ratio(20160, 1), 1),
            Ok(Ordering::Greater)
        );
    }

    #[test]
    fn cmp_power_rejects_bad_input() {
        assert_eq!(
            cmp_power(&ratio(-1, 2), 2, &ratio(1, 1), 1),
            Err(ArithError::NegativeBase)
        );
        assert_eq!(
            cmp_power(&ratio(1, 2), 0, &ratio(1, 1), 0),
            Err(ArithError::ZeroExponents)
        );
    }

    #[test]
    fn nth_root_examples() {
        assert_eq!(nth_root_floor(&nat(27), 3).unwrap(), nat(3));
        assert_eq!(nth_root_floor(&nat(28), 3).unwrap(), nat(3));
        assert_eq!(nth_root_floor(&nat(40320), 14).unwrap(), nat(2));
        assert_eq!(nth_root_floor(&nat(5), 0), Err(ArithError::ZeroRootIndex));
    }

    #[test]
    fn factorial_examples() {
        assert_eq!(factorial(0), nat(1));
        assert_eq!(factorial(7), nat(5040));
        let oracle: u64 = (1..=13u64).product();
        assert_eq!(factorial(13), nat(oracle));
        assert_eq!(oracle, 6_227_020_800);
        // chunk boundary: 25! overflows u64 partway through
        let slow = (1..=40u64).fold(Natural::one(), |acc, i| acc * i);
        assert_eq!(factorial(40), slow);
    }

    #[test]
    fn decimals_parse_exactly() {
        assert_eq!(parse_rational("1.43"), Some(ratio(143, 100)));
        assert_eq!(parse_rational("0.259"), Some(ratio(259, 1000)));
        assert_eq!(parse_rational("16/5"), Some(ratio(16, 5)));
        assert_eq!(parse_rational("7"), Some(ratio(7, 1)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn totient_and_divisors() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(12), 4);
        assert_eq!(totient(105), 48);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (0u64..10_000, 1u64..10_000).prop_map(|(n, d)| ratio(n, d))
    }

    proptest! {
        #[test]
        fn cmp_power_antisymmetric(a in small_rational(), b in small_rational(), p in 0u32..20, s in 1u32..20) {
            let fwd = cmp_power(&a, p, &b, s).unwrap();
            let back = cmp_power(&b, s, &a, p).unwrap();
            prop_assert_eq!(fwd, back.reverse());
        }

        #[test]
        fn nth_root_brackets(x in any::<u64>(), k in 1u32..12) {
            let x = nat(x);
            let r = nth_root_floor(&x, k).unwrap();
            prop_assert!(pow_nat(&r, k) <= x);
            prop_assert!(pow_nat(&(&r + 1u32), k) > x);
        }
    }
}
