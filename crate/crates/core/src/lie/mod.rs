//! Simple groups of Lie type: parameters, exclusions, exact orders,
//! Steinberg degrees and the chosen small unipotent degrees.

mod formulas;
mod report;
mod sweep;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::primes::PrimePower;

pub use formulas::{
    beta_degree, order, steinberg_degree, steinberg_exponent, CharPair, UnipotentEntry,
    EXCEPTIONAL_TABLE,
};
pub use report::{check_lemma61, check_thm21, Thm21Report};
pub use sweep::{sweep, sweep_parallel, ExcludedPoint, SweepCheck, SweepConfig, SweepResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `PSL_n(q)`, rank parameter `n`.
    Linear,
    /// `PSU_n(q)`, rank parameter `n`.
    Unitary,
    /// `PSp_{2n}(q)`.
    Symplectic,
    /// `Omega_{2n+1}(q)`.
    OrthOdd,
    /// `POmega^+_{2n}(q)`.
    OrthPlus,
    /// `POmega^-_{2n}(q)`.
    OrthMinus,
    Suzuki2B2,
    Triality3D4,
    G2,
    Ree2G2,
    F4,
    Ree2F4,
    E6,
    TwistedE6,
    E7,
    E8,
}

impl Family {
    pub const ALL: [Family; 16] = [
        Family::Linear,
        Family::Unitary,
        Family::Symplectic,
        Family::OrthOdd,
        Family::OrthPlus,
        Family::OrthMinus,
        Family::Suzuki2B2,
        Family::Triality3D4,
        Family::G2,
        Family::Ree2G2,
        Family::F4,
        Family::Ree2F4,
        Family::E6,
        Family::TwistedE6,
        Family::E7,
        Family::E8,
    ];

    pub fn is_classical(self) -> bool {
        matches!(
            self,
            Family::Linear
                | Family::Unitary
                | Family::Symplectic
                | Family::OrthOdd
                | Family::OrthPlus
                | Family::OrthMinus
        )
    }

    pub fn classical() -> impl Iterator<Item = Family> {
        Self::ALL.into_iter().filter(|f| f.is_classical())
    }

    pub fn exceptional() -> impl Iterator<Item = Family> {
        Self::ALL.into_iter().filter(|f| !f.is_classical())
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Linear => "linear",
            Family::Unitary => "unitary",
            Family::Symplectic => "symplectic",
            Family::OrthOdd => "orth_odd",
            Family::OrthPlus => "orth_plus",
            Family::OrthMinus => "orth_minus",
            Family::Suzuki2B2 => "suzuki",
            Family::Triality3D4 => "triality",
            Family::G2 => "g2",
            Family::Ree2G2 => "ree2g2",
            Family::F4 => "f4",
            Family::Ree2F4 => "ree2f4",
            Family::E6 => "e6",
            Family::TwistedE6 => "twisted_e6",
            Family::E7 => "e7",
            Family::E8 => "e8",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = LieError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        let family = match key.as_str() {
            "linear" | "psl" | "a" => Family::Linear,
            "unitary" | "psu" | "2a" => Family::Unitary,
            "symplectic" | "psp" | "c" => Family::Symplectic,
            "orth_odd" | "orthodd" | "b" => Family::OrthOdd,
            "orth_plus" | "orthplus" | "d" => Family::OrthPlus,
            "orth_minus" | "orthminus" | "2d" => Family::OrthMinus,
            "suzuki" | "suzuki2b2" | "2b2" => Family::Suzuki2B2,
            "triality" | "triality3d4" | "3d4" => Family::Triality3D4,
            "g2" => Family::G2,
            "ree2g2" | "2g2" => Family::Ree2G2,
            "f4" => Family::F4,
            "ree2f4" | "2f4" => Family::Ree2F4,
            "e6" => Family::E6,
            "twisted_e6" | "twistede6" | "2e6" => Family::TwistedE6,
            "e7" => Family::E7,
            "e8" => Family::E8,
            _ => return Err(LieError::UnknownFamily(s.to_string())),
        };
        Ok(family)
    }
}

/// A simple group of Lie type: family, rank parameter (classical families
/// only) and the field size `q = p^e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GroupSpec {
    pub family: Family,
    pub rank: Option<u32>,
    pub q: PrimePower,
}

impl GroupSpec {
    /// Exceptional families ignore `rank`; classical ones require it.
    pub fn new(family: Family, rank: Option<u32>, q: u64) -> Result<Self, LieError> {
        let q = PrimePower::factor(q).ok_or(LieError::NotPrimePower(q))?;
        let rank = if family.is_classical() {
            Some(rank.ok_or(LieError::MissingRank(family))?)
        } else {
            None
        };
        Ok(GroupSpec { family, rank, q })
    }

    pub fn classical(family: Family, rank: u32, q: u64) -> Result<Self, LieError> {
        Self::new(family, Some(rank), q)
    }

    pub fn exceptional(family: Family, q: u64) -> Result<Self, LieError> {
        Self::new(family, None, q)
    }

    pub(crate) fn n(&self) -> u32 {
        self.rank.unwrap_or(0)
    }

    /// Conventional name, e.g. `PSL_4(2)`, `2B2(8)`.
    pub fn label(&self) -> String {
        let q = self.q.q;
        let n = self.n();
        match self.family {
            Family::Linear => format!("PSL_{n}({q})"),
            Family::Unitary => format!("PSU_{n}({q})"),
            Family::Symplectic => format!("PSp_{}({q})", 2 * n),
            Family::OrthOdd => format!("Omega_{}({q})", 2 * n + 1),
            Family::OrthPlus => format!("POmega+_{}({q})", 2 * n),
            Family::OrthMinus => format!("POmega-_{}({q})", 2 * n),
            Family::Suzuki2B2 => format!("2B2({q})"),
            Family::Triality3D4 => format!("3D4({q})"),
            Family::G2 => format!("G2({q})"),
            Family::Ree2G2 => format!("2G2({q})"),
            Family::F4 => format!("F4({q})"),
            Family::Ree2F4 => format!("2F4({q})"),
            Family::E6 => format!("E6({q})"),
            Family::TwistedE6 => format!("2E6({q})"),
            Family::E7 => format!("E7({q})"),
            Family::E8 => format!("E8({q})"),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Which exclusion rule fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExclusionRule {
    /// The group is (isomorphic to) some `PSL_2(q)`.
    Psl2,
    /// The parameter point does not give a simple group.
    NotSimple,
    /// Rank below the family's lower bound.
    RankBound,
    /// `q` is not of the form the twisted family requires.
    FieldConstraint,
    /// `2F4(2)'` is handled with the sporadic data.
    TitsGroup,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Error)]
#[error("{reason}")]
pub struct Exclusion {
    pub rule: ExclusionRule,
    pub reason: String,
}

impl Exclusion {
    fn new(rule: ExclusionRule, reason: impl Into<String>) -> Self {
        Exclusion {
            rule,
            reason: reason.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("q = {0} is not a prime power")]
    NotPrimePower(u64),
    #[error("family {0} needs a rank parameter")]
    MissingRank(Family),
    #[error("excluded: {0}")]
    Excluded(#[from] Exclusion),
    #[error("inexact division in {label}: {detail}")]
    Integrality { label: String, detail: String },
}

fn is_odd_power(q: &PrimePower, p: u64) -> bool {
    q.p == p && q.e % 2 == 1
}

/// Accepts the parameter point or names the exclusion rule that fired.
pub fn validate(spec: &GroupSpec) -> Result<(), Exclusion> {
    use ExclusionRule::*;
    let q = spec.q.q;
    let n = spec.n();
    match spec.family {
        Family::Linear => match n {
            2 => Err(Exclusion::new(Psl2, "PSL_2")),
            0 | 1 => Err(Exclusion::new(
                RankBound,
                "rank bound: linear groups need n >= 3",
            )),
            3 if q == 2 => Err(Exclusion::new(Psl2, "PSL_3(2) is isomorphic to PSL_2(7)")),
            _ => Ok(()),
        },
        Family::Unitary => match n {
            2 => Err(Exclusion::new(
                Psl2,
                "PSL_2: PSU_2(q) is isomorphic to PSL_2(q)",
            )),
            0 | 1 => Err(Exclusion::new(
                RankBound,
                "rank bound: unitary groups need n >= 3",
            )),
            3 if q == 2 => Err(Exclusion::new(
                NotSimple,
                "not simple: PSU_3(2) is solvable",
            )),
            _ => Ok(()),
        },
        Family::Symplectic | Family::OrthOdd => match n {
            1 => Err(Exclusion::new(
                Psl2,
                "PSL_2: rank 1 is isomorphic to PSL_2(q)",
            )),
            0 => Err(Exclusion::new(RankBound, "rank bound: n >= 2")),
            2 if q == 2 => Err(Exclusion::new(
                NotSimple,
                "not simple: isomorphic to Sp_4(2), which is S_6",
            )),
            _ => Ok(()),
        },
        Family::OrthPlus | Family::OrthMinus => {
            if n < 4 {
                Err(Exclusion::new(
                    RankBound,
                    "rank bound: even-dimensional orthogonal groups need n >= 4",
                ))
            } else {
                Ok(())
            }
        }
        Family::Suzuki2B2 => {
            if !is_odd_power(&spec.q, 2) {
                Err(Exclusion::new(
                    FieldConstraint,
                    "field constraint: 2B2 needs q = 2^(2f+1)",
                ))
            } else if q == 2 {
                Err(Exclusion::new(NotSimple, "not simple: 2B2(2) is solvable"))
            } else {
                Ok(())
            }
        }
        Family::Ree2F4 => {
            if !is_odd_power(&spec.q, 2) {
                Err(Exclusion::new(
                    FieldConstraint,
                    "field constraint: 2F4 needs q = 2^(2f+1)",
                ))
            } else if q == 2 {
                Err(Exclusion::new(
                    TitsGroup,
                    "2F4(2)' is the Tits group, checked with the sporadic data",
                ))
            } else {
                Ok(())
            }
        }
        Family::Ree2G2 => {
            if !is_odd_power(&spec.q, 3) {
                Err(Exclusion::new(
                    FieldConstraint,
                    "field constraint: 2G2 needs q = 3^(2f+1)",
                ))
            } else if q == 3 {
                Err(Exclusion::new(
                    NotSimple,
                    "not simple: 2G2(3) is isomorphic to PSL_2(8).3",
                ))
            } else {
                Ok(())
            }
        }
        Family::G2 if q == 2 => Err(Exclusion::new(
            NotSimple,
            "not simple: G2(2)' is isomorphic to PSU_3(3)",
        )),
        _ => Ok(()),
    }
}
