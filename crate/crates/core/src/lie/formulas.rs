use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Pow, Signed, Zero};

use super::{validate, Family, GroupSpec, LieError};
use crate::arith::{Integer, Natural};
use crate::poly::cyclotomic_value;

/// The Steinberg degree paired with a small degree of the same group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPair {
    pub alpha_degree: Natural,
    pub beta_degree: Natural,
    pub alpha_label: String,
    pub beta_label: String,
}

/// A unipotent degree of an exceptional group written as
/// `q^monomial * prod Phi_k^mult * root / divisor`, where `root` is
/// `sqrt(q/p)` for the Suzuki and Ree families and 1 otherwise.
#[derive(Debug, Clone, Copy)]
pub struct UnipotentEntry {
    pub family: Family,
    pub label: &'static str,
    pub monomial: u32,
    pub phis: &'static [(u64, u32)],
    pub root_of_q_over_p: bool,
    pub divisor: u64,
    pub steinberg_exponent: u32,
}

pub const EXCEPTIONAL_TABLE: [UnipotentEntry; 10] = [
    UnipotentEntry {
        family: Family::Suzuki2B2,
        label: "2B2[a]",
        monomial: 0,
        phis: &[(1, 1)],
        root_of_q_over_p: true,
        divisor: 1,
        steinberg_exponent: 2,
    },
    UnipotentEntry {
        family: Family::Triality3D4,
        label: "phi'_{1,3}",
        monomial: 1,
        phis: &[(12, 1)],
        root_of_q_over_p: false,
        divisor: 1,
        steinberg_exponent: 12,
    },
    UnipotentEntry {
        family: Family::G2,
        label: "phi_{2,1}",
        monomial: 1,
        phis: &[(2, 2), (3, 1)],
        root_of_q_over_p: false,
        divisor: 6,
        steinberg_exponent: 6,
    },
    UnipotentEntry {
        family: Family::Ree2G2,
        label: "cuspidal 1",
        monomial: 0,
        phis: &[(1, 1), (2, 1)],
        root_of_q_over_p: true,
        divisor: 1,
        steinberg_exponent: 3,
    },
    UnipotentEntry {
        family: Family::F4,
        label: "phi_{4,1}",
        monomial: 1,
        phis: &[(2, 2), (6, 2), (8, 1)],
        root_of_q_over_p: false,
        divisor: 2,
        steinberg_exponent: 24,
    },
    UnipotentEntry {
        family: Family::Ree2F4,
        label: "epsilon'",
        monomial: 1,
        phis: &[(6, 1), (12, 1)],
        root_of_q_over_p: false,
        divisor: 1,
        steinberg_exponent: 12,
    },
    UnipotentEntry {
        family: Family::E6,
        label: "phi_{6,1}",
        monomial: 1,
        phis: &[(8, 1), (9, 1)],
        root_of_q_over_p: false,
        divisor: 1,
        steinberg_exponent: 36,
    },
    UnipotentEntry {
        family: Family::TwistedE6,
        label: "phi'_{2,4}",
        monomial: 1,
        phis: &[(8, 1), (18, 1)],
        root_of_q_over_p: false,
        divisor: 1,
        steinberg_exponent: 36,
    },
    UnipotentEntry {
        family: Family::E7,
        label: "phi_{7,1}",
        monomial: 1,
        phis: &[(7, 1), (12, 1), (14, 1)],
        root_of_q_over_p: false,
        divisor: 1,
        steinberg_exponent: 63,
    },
    UnipotentEntry {
        family: Family::E8,
        label: "phi_{8,1}",
        monomial: 1,
        phis: &[(4, 2), (8, 1), (12, 1), (20, 1), (24, 1)],
        root_of_q_over_p: false,
        divisor: 1,
        steinberg_exponent: 120,
    },
];

fn table_entry(family: Family) -> &'static UnipotentEntry {
    EXCEPTIONAL_TABLE
        .iter()
        .find(|e| e.family == family)
        .expect("every exceptional family has a table row")
}

fn to_natural(x: Integer) -> Natural {
    x.to_biguint()
        .expect("group-theoretic quantity is positive")
}

fn exact_div(
    num: Integer,
    den: Integer,
    spec: &GroupSpec,
    what: &str,
) -> Result<Integer, LieError> {
    let (quot, rem) = num.div_rem(&den);
    if rem.is_zero() {
        Ok(quot)
    } else {
        Err(LieError::Integrality {
            label: spec.label(),
            detail: format!("{what}: {num} is not divisible by {den}"),
        })
    }
}

/// `q^d - sign` with `sign` in {1, -1}.
fn qd(q: &Integer, d: u32, sign: i32) -> Integer {
    q.pow(d) - BigInt::from(sign)
}

fn prod_minus_one(q: &Integer, ds: impl IntoIterator<Item = u32>) -> Integer {
    ds.into_iter()
        .fold(Integer::one(), |acc, d| acc * qd(q, d, 1))
}

fn gcd_int(a: u64, b: &Integer) -> Integer {
    BigInt::from(a).gcd(&b.abs())
}

pub fn steinberg_exponent(spec: &GroupSpec) -> u32 {
    let n = spec.n();
    match spec.family {
        Family::Linear | Family::Unitary => n * (n - 1) / 2,
        Family::Symplectic | Family::OrthOdd => n * n,
        Family::OrthPlus | Family::OrthMinus => n * (n - 1),
        f => table_entry(f).steinberg_exponent,
    }
}

/// `|S|_p`, the degree of the Steinberg character.
pub fn steinberg_degree(spec: &GroupSpec) -> Result<Natural, LieError> {
    validate(spec)?;
    Ok(Natural::from(spec.q.q).pow(steinberg_exponent(spec)))
}

/// Exact order of the simple group.
pub fn order(spec: &GroupSpec) -> Result<Natural, LieError> {
    validate(spec)?;
    let q = Integer::from(spec.q.q);
    let n = spec.n();
    let p_part = Pow::pow(&q, steinberg_exponent(spec));
    let (body, center): (Integer, Integer) = match spec.family {
        Family::Linear => (prod_minus_one(&q, 2..=n), gcd_int(n as u64, &qd(&q, 1, 1))),
        Family::Unitary => {
            let body = (2..=n).fold(Integer::one(), |acc, i| {
                acc * qd(&q, i, if i % 2 == 0 { 1 } else { -1 })
            });
            (body, gcd_int(n as u64, &qd(&q, 1, -1)))
        }
        Family::Symplectic | Family::OrthOdd => (
            prod_minus_one(&q, (1..=n).map(|i| 2 * i)),
            gcd_int(2, &qd(&q, 1, 1)),
        ),
        Family::OrthPlus | Family::OrthMinus => {
            let sign = if spec.family == Family::OrthPlus {
                1
            } else {
                -1
            };
            let top = qd(&q, n, sign);
            let center = gcd_int(4, &top);
            (top * prod_minus_one(&q, (1..n).map(|i| 2 * i)), center)
        }
        Family::Suzuki2B2 => (qd(&q, 2, -1) * qd(&q, 1, 1), Integer::one()),
        Family::Triality3D4 => {
            let t = Pow::pow(&q, 8u32) + Pow::pow(&q, 4u32) + 1;
            (t * qd(&q, 6, 1) * qd(&q, 2, 1), Integer::one())
        }
        Family::G2 => (prod_minus_one(&q, [6, 2]), Integer::one()),
        Family::Ree2G2 => (qd(&q, 3, -1) * qd(&q, 1, 1), Integer::one()),
        Family::F4 => (prod_minus_one(&q, [12, 8, 6, 2]), Integer::one()),
        Family::Ree2F4 => (
            qd(&q, 6, -1) * qd(&q, 4, 1) * qd(&q, 3, -1) * qd(&q, 1, 1),
            Integer::one(),
        ),
        Family::E6 => (
            prod_minus_one(&q, [12, 9, 8, 6, 5, 2]),
            gcd_int(3, &qd(&q, 1, 1)),
        ),
        Family::TwistedE6 => {
            let body = prod_minus_one(&q, [12, 8, 6, 2]) * qd(&q, 9, -1) * qd(&q, 5, -1);
            (body, gcd_int(3, &qd(&q, 1, -1)))
        }
        Family::E7 => (
            prod_minus_one(&q, [18, 14, 12, 10, 8, 6, 2]),
            gcd_int(2, &qd(&q, 1, 1)),
        ),
        Family::E8 => (
            prod_minus_one(&q, [30, 24, 20, 18, 14, 12, 8, 2]),
            Integer::one(),
        ),
    };
    let full = p_part * body;
    Ok(to_natural(exact_div(
        full,
        center,
        spec,
        "center quotient",
    )?))
}

fn classical_beta(spec: &GroupSpec) -> Result<(Integer, String), LieError> {
    let q = Integer::from(spec.q.q);
    let n = spec.n();
    let qn = Pow::pow(&q, n);
    let qn1 = Pow::pow(&q, n - 1);
    let one = Integer::one();
    let (num, den, label) = match spec.family {
        Family::Linear => (&qn - &q, &q - &one, format!("({},1)", n - 1)),
        Family::Unitary => {
            let signed_q = if n.is_multiple_of(2) { q.clone() } else { -q.clone() };
            (&qn + signed_q, &q + &one, format!("({},1)", n - 1))
        }
        Family::Symplectic | Family::OrthOdd => (
            (&qn - &one) * (&qn - &q),
            Integer::from(2) * (&q + &one),
            format!("(0 1 {n} | -)"),
        ),
        // The symbol degree formula gives q^(n-1) in the second factor.
        Family::OrthPlus => (
            (&qn - &one) * (&qn1 + &q),
            &q * &q - &one,
            format!("({} | 1)", n - 1),
        ),
        Family::OrthMinus => (
            (&qn + &one) * (&qn1 - &q),
            &q * &q - &one,
            format!("(1 {} | -)", n - 1),
        ),
        _ => unreachable!("classical families only"),
    };
    Ok((exact_div(num, den, spec, "beta degree")?, label))
}

fn exceptional_beta(spec: &GroupSpec) -> Result<(Integer, String), LieError> {
    let entry = table_entry(spec.family);
    let q = Integer::from(spec.q.q);
    let mut value = Pow::pow(&q, entry.monomial);
    for &(k, mult) in entry.phis {
        let phi = cyclotomic_value(k, &q).expect("k >= 1 in the table");
        value *= phi.pow(mult);
    }
    if entry.root_of_q_over_p {
        // q = p^(2f+1), so sqrt(q/p) = p^f.
        let f = (spec.q.e - 1) / 2;
        value *= Integer::from(spec.q.p).pow(f);
    }
    let value = exact_div(value, Integer::from(entry.divisor), spec, "beta degree")?;
    Ok((value, entry.label.to_string()))
}

/// The Steinberg degree together with the chosen small degree.
pub fn beta_degree(spec: &GroupSpec) -> Result<CharPair, LieError> {
    validate(spec)?;
    let (beta, beta_label) = if spec.family.is_classical() {
        classical_beta(spec)?
    } else {
        exceptional_beta(spec)?
    };
    Ok(CharPair {
        alpha_degree: steinberg_degree(spec)?,
        beta_degree: to_natural(beta),
        alpha_label: "St".to_string(),
        beta_label,
    })
}
