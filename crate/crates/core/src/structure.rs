//! Calculators for the structural inequalities, working on caller-supplied
//! data such as chief factors and indices.

use std::cmp::Ordering;

use num_traits::{One, Pow, Signed};
use serde::Deserialize;
use thiserror::Error;

use crate::arith::{cmp_power, factorial, nat, nth_root_floor, Integer, Natural, Rational};
use crate::degree_data::DegreeTable;
use crate::primes::is_prime;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("d = {0} is below 4")]
    DegreeTooSmall(u64),
    #[error("n must be at least 1")]
    ZeroCount,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("m = {m} must exceed 1 and divide p - 1 = {}", p - 1)]
    BadFrobeniusParameter { p: u64, m: u64 },
    #[error("i must be at least 1")]
    ZeroExponent,
    #[error("chief factor `{label}`: {message}")]
    InvalidFactor { label: String, message: String },
    #[error("invalid chief series: {0}")]
    Json(String),
    #[error("rational must be at least 1, got {0}")]
    RatBelowOne(Rational),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiefFactorDescriptor {
    pub label: String,
    /// `|S|`, so the factor has order `|S|^multiplicity`.
    pub factor_order: Natural,
    pub multiplicity: u32,
    pub is_abelian: bool,
    pub is_psl2: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ChiefSeries {
    pub factors: Vec<ChiefFactorDescriptor>,
}

#[derive(Deserialize)]
struct FactorJson {
    label: String,
    order: String,
    multiplicity: u32,
    #[serde(default)]
    abelian: bool,
    #[serde(default)]
    psl2: bool,
}

#[derive(Deserialize)]
struct SeriesJson {
    factors: Vec<FactorJson>,
}

impl ChiefFactorDescriptor {
    pub fn validate(&self) -> Result<(), StructureError> {
        let fail = |message: &str| {
            Err(StructureError::InvalidFactor {
                label: self.label.clone(),
                message: message.to_string(),
            })
        };
        if self.factor_order < nat(2) {
            return fail("order must be at least 2");
        }
        if self.multiplicity == 0 {
            return fail("multiplicity must be at least 1");
        }
        if self.is_abelian && self.is_psl2 {
            return fail("cannot be both abelian and PSL_2");
        }
        Ok(())
    }
}

impl ChiefSeries {
    /// Reads `{"factors": [{"label", "order", "multiplicity", "abelian", "psl2"}]}`
    /// with `order` as a decimal string.
    pub fn from_json(text: &str) -> Result<Self, StructureError> {
        let raw: SeriesJson =
            serde_json::from_str(text).map_err(|e| StructureError::Json(e.to_string()))?;
        let mut factors = Vec::with_capacity(raw.factors.len());
        for f in raw.factors {
            let factor_order = f.order.trim().parse::<Natural>().map_err(|_| {
                StructureError::Json(format!("order `{}` is not an integer", f.order))
            })?;
            let factor = ChiefFactorDescriptor {
                label: f.label,
                factor_order,
                multiplicity: f.multiplicity,
                is_abelian: f.abelian,
                is_psl2: f.psl2,
            };
            factor.validate()?;
            factors.push(factor);
        }
        Ok(ChiefSeries { factors })
    }

    pub fn concat(&self, other: &ChiefSeries) -> ChiefSeries {
        ChiefSeries {
            factors: self.factors.iter().chain(&other.factors).cloned().collect(),
        }
    }
}

/// Product of `|S|^k` over the nonabelian factors that are not powers of
/// some `PSL_2(q)`; `rat(G)^14` is at least this.
pub fn rat14_lower_bound(series: &ChiefSeries) -> Natural {
    series
        .factors
        .iter()
        .filter(|f| !f.is_abelian && !f.is_psl2)
        .map(|f| Pow::pow(&f.factor_order, f.multiplicity))
        .product()
}

fn at_least_one(r: &Rational) -> Result<(), StructureError> {
    if *r < Rational::one() {
        Err(StructureError::RatBelowOne(r.clone()))
    } else {
        Ok(())
    }
}

/// `rat_g^14 >= rat_gn^14 |N|`.
pub fn prop23_check(
    rat_g: &Rational,
    rat_gn: &Rational,
    order_n: &Natural,
) -> Result<bool, StructureError> {
    at_least_one(rat_g)?;
    at_least_one(rat_gn)?;
    let rhs = Pow::pow(rat_gn, 14i32) * Rational::from_integer(Integer::from(order_n.clone()));
    let ord = cmp_power(rat_g, 14, &rhs, 1).expect("positive bases and exponents");
    Ok(ord != Ordering::Less)
}

/// Largest `B` with `B^(d-1) <= (d!)^(n-1)`.
pub fn maroti_bound(n: u64, d: u64) -> Result<Natural, StructureError> {
    if d < 4 {
        return Err(StructureError::DegreeTooSmall(d));
    }
    if n == 0 {
        return Err(StructureError::ZeroCount);
    }
    let value = Pow::pow(factorial(d), (n - 1) as u32);
    Ok(nth_root_floor(&value, (d - 1) as u32).expect("d - 1 >= 3"))
}

/// Largest `X` with `X^100 <= |N|^143`.
pub fn prop32_bound(order_n: &Natural) -> Natural {
    nth_root_floor(&Pow::pow(order_n, 143u32), 100).expect("root index is positive")
}

/// `index <= rat_g^21`, with the denominator cleared.
#[allow(non_snake_case)]
pub fn thmB_check(rat_g: &Rational, index: &Natural) -> Result<bool, StructureError> {
    at_least_one(rat_g)?;
    let num = rat_g.numer().abs().to_biguint().expect("non-negative");
    let den = rat_g.denom().to_biguint().expect("positive");
    Ok(index * Pow::pow(den, 21u32) <= Pow::pow(num, 21u32))
}

/// Degrees of the Frobenius group `C_p : C_m`: `m` linear characters and
/// `(p-1)/m` of degree `m`.
pub fn frobenius_example(p: u64, m: u64) -> Result<DegreeTable, StructureError> {
    if !is_prime(p) {
        return Err(StructureError::NotPrime(p));
    }
    if m < 2 || !(p - 1).is_multiple_of(m) {
        return Err(StructureError::BadFrobeniusParameter { p, m });
    }
    let mut degrees = vec![nat(1); m as usize];
    degrees.extend(std::iter::repeat_n(nat(m), ((p - 1) / m) as usize));
    let mut table = DegreeTable::new(format!("C{p}:C{m}"), degrees).expect("contains degree 1");
    table.order = Some(nat(p) * nat(m));
    table.fitting_index = Some(nat(m));
    Ok(table)
}

/// Degree support `{1, p^i, p^i + 1}` of the extraspecial construction,
/// with `|G : F(G)| = p^i + 1`. Multiplicities are not determined.
pub fn extraspecial_example(p: u64, i: u32) -> Result<DegreeTable, StructureError> {
    if !is_prime(p) {
        return Err(StructureError::NotPrime(p));
    }
    if i == 0 {
        return Err(StructureError::ZeroExponent);
    }
    let pi = Pow::pow(nat(p), i);
    let next = &pi + 1u32;
    let mut table = DegreeTable::new(
        format!("extraspecial({p},{i})"),
        vec![nat(1), pi, next.clone()],
    )
    .expect("contains degree 1");
    table.fitting_index = Some(next);
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    fn factor(label: &str, order: u64, k: u32, abelian: bool, psl2: bool) -> ChiefFactorDescriptor {
        ChiefFactorDescriptor {
            label: label.into(),
            factor_order: nat(order),
            multiplicity: k,
            is_abelian: abelian,
            is_psl2: psl2,
        }
    }

    #[test]
    fn rat14_examples() {
        let abelian = ChiefSeries {
            factors: vec![factor("C2", 2, 3, true, false)],
        };
        assert_eq!(rat14_lower_bound(&abelian), nat(1));
        let l34 = ChiefSeries {
            factors: vec![factor("L3(4)", 20160, 2, false, false)],
        };
        assert_eq!(rat14_lower_bound(&l34), nat(20160) * nat(20160));
        let mixed = ChiefSeries {
            factors: vec![
                factor("C5", 125, 1, true, false),
                factor("A6", 360, 1, false, true),
                factor("U4(2)", 25920, 1, false, false),
            ],
        };
        assert_eq!(rat14_lower_bound(&mixed), nat(25920));
        assert_eq!(
            rat14_lower_bound(&mixed.concat(&l34)),
            nat(25920) * nat(20160) * nat(20160)
        );
    }

    #[test]
    fn series_json() {
        let s = ChiefSeries::from_json(
            r#"{"factors": [{"label": "L3(4)", "order": "20160", "multiplicity": 2, "abelian": false, "psl2": false}]}"#,
        )
        .unwrap();
        assert_eq!(s.factors[0].factor_order, nat(20160));
        let bad = r#"{"factors": [{"label": "x", "order": "1", "multiplicity": 1}]}"#;
        assert!(matches!(
            ChiefSeries::from_json(bad),
            Err(StructureError::InvalidFactor { .. })
        ));
        let both = r#"{"factors": [{"label": "x", "order": "60", "multiplicity": 1, "abelian": true, "psl2": true}]}"#;
        assert!(ChiefSeries::from_json(both).is_err());
    }

    #[test]
    fn prop23_examples() {
        let one = ratio(1, 1);
        assert!(prop23_check(&ratio(2, 1), &one, &nat(1 << 14)).unwrap());
        assert!(!prop23_check(&ratio(2, 1), &one, &nat((1 << 14) + 1)).unwrap());
        assert!(prop23_check(&ratio(3, 2), &one, &nat(100)).unwrap());
        assert!(prop23_check(&ratio(1, 2), &one, &nat(1)).is_err());
    }

    #[test]
    fn maroti_examples() {
        assert_eq!(maroti_bound(5, 4).unwrap(), nat(69));
        assert_eq!(maroti_bound(1, 4).unwrap(), nat(1));
        assert_eq!(maroti_bound(4, 4).unwrap(), nat(24));
        assert_eq!(maroti_bound(3, 3), Err(StructureError::DegreeTooSmall(3)));
    }

    #[test]
    fn prop32_examples() {
        assert_eq!(prop32_bound(&nat(1)), nat(1));
        assert_eq!(prop32_bound(&nat(60)), nat(348));
        assert_eq!(prop32_bound(&nat(2)), nat(2));
    }

    #[test]
    fn thm_b_examples() {
        assert!(thmB_check(&ratio(1, 1), &nat(1)).unwrap());
        assert!(thmB_check(&ratio(2, 1), &nat(1 << 21)).unwrap());
        assert!(!thmB_check(&ratio(2, 1), &nat((1 << 21) + 1)).unwrap());
        // (16/5)^21 is about 4.06e10
        assert!(thmB_check(&ratio(16, 5), &nat(20_000_000_000)).unwrap());
        assert!(thmB_check(&ratio(16, 5), &nat(40_000_000_000)).unwrap());
        assert!(!thmB_check(&ratio(16, 5), &nat(41_000_000_000)).unwrap());
    }

    #[test]
    fn examples_7() {
        let t = frobenius_example(7, 3).unwrap();
        assert_eq!(t.degrees, [1, 1, 1, 3, 3].map(nat).to_vec());
        assert_eq!(t.rat(), ratio(1, 1));
        assert_eq!(t.fitting_index, Some(nat(3)));
        assert_eq!(t.squares_match_order(), Some(true));
        assert_eq!(
            frobenius_example(13, 4).unwrap().fitting_index,
            Some(nat(4))
        );
        assert_eq!(
            frobenius_example(7, 4),
            Err(StructureError::BadFrobeniusParameter { p: 7, m: 4 })
        );
        let e = extraspecial_example(2, 2).unwrap();
        assert_eq!(e.degrees, [1, 4, 5].map(nat).to_vec());
        assert_eq!(e.rat(), ratio(5, 4));
        assert_eq!(extraspecial_example(3, 1).unwrap().rat(), ratio(4, 3));
        let e = extraspecial_example(2, 10).unwrap();
        assert_eq!(e.rat(), ratio(1025, 1024));
        assert_eq!(e.fitting_index, Some(nat(1025)));
    }
}
