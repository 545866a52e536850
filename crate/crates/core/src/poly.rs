//! Integer polynomials and cyclotomic polynomials.

use std::fmt;
use std::sync::OnceLock;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::arith::{divisors, ArithError, Integer};

/// Cyclotomic polynomials are cached for indices up to this bound.
pub const CYCLOTOMIC_CACHE_LIMIT: u64 = 200;

/// Univariate polynomial with integer coefficients, constant term first.
/// The leading coefficient is nonzero unless the polynomial is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<Integer>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<Integer>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `x^n - 1`
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![Integer::zero(); n + 1];
        coeffs[0] = Integer::from(-1);
        coeffs[n] += Integer::one();
        Self::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Integer> {
        self.coeffs.last()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Integer::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Exact division. Returns `None` if `divisor` is zero or the division
    /// leaves a remainder or a non-integer quotient coefficient.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dlead = divisor.leading()?.clone();
        let ddeg = divisor.degree()?;
        let mut rem = self.coeffs.clone();
        let Some(ndeg) = self.degree() else {
            return Some(Self::zero());
        };
        if ndeg < ddeg {
            return None;
        }
        let mut quot = vec![Integer::zero(); ndeg - ddeg + 1];
        for k in (0..=ndeg - ddeg).rev() {
            let top = &rem[k + ddeg];
            let (q, r) = top.div_rem(&dlead);
            if !r.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for (j, c) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &q * c;
                }
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(quot))
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, x: &Integer) -> Integer {
        self.coeffs
            .iter()
            .rev()
            .fold(Integer::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Evaluates `p` at `q`.
pub fn eval_poly(p: &IntPolynomial, q: &Integer) -> Integer {
    p.eval(q)
}

fn compute_cyclotomic(k: u64, lookup: &dyn Fn(u64) -> IntPolynomial) -> IntPolynomial {
    let mut denom = IntPolynomial::one();
    for d in divisors(k) {
        if d < k {
            denom = denom.mul(&lookup(d));
        }
    }
    IntPolynomial::x_pow_minus_one(k as usize)
        .div_exact(&denom)
        .expect("x^k - 1 is divisible by the product of its proper cyclotomic factors")
}

fn cache() -> &'static [IntPolynomial] {
    static CACHE: OnceLock<Vec<IntPolynomial>> = OnceLock::new();
    CACHE.get_or_init(|| {
        // index 0 is a placeholder so that cache[k] = Phi_k
        let mut table: Vec<IntPolynomial> = vec![IntPolynomial::zero()];
        for k in 1..=CYCLOTOMIC_CACHE_LIMIT {
            let phi = compute_cyclotomic(k, &|d| table[d as usize].clone());
            table.push(phi);
        }
        table
    })
}

/// Forces construction of the cyclotomic cache, e.g. before a parallel sweep.
pub fn warm_cyclotomic_cache() {
    let _ = cache();
}

/// The `k`-th cyclotomic polynomial, by exact division of `x^k - 1` by the
/// product of `Phi_d` over proper divisors `d` of `k`.
pub fn cyclotomic(k: u64) -> Result<IntPolynomial, ArithError> {
    if k == 0 {
        return Err(ArithError::ZeroCyclotomicIndex);
    }
    if k <= CYCLOTOMIC_CACHE_LIMIT {
        return Ok(cache()[k as usize].clone());
    }
    Ok(compute_cyclotomic(k, &|d| cyclotomic(d).expect("d >= 1")))
}

/// `Phi_k(q)` as an exact integer.
pub fn cyclotomic_value(k: u64, q: &Integer) -> Result<Integer, ArithError> {
    if k == 0 {
        return Err(ArithError::ZeroCyclotomicIndex);
    }
    if k <= CYCLOTOMIC_CACHE_LIMIT {
        return Ok(cache()[k as usize].eval(q));
    }
    Ok(cyclotomic(k)?.eval(q))
}
