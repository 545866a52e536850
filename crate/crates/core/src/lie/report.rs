use num_traits::Pow;

use super::formulas::{beta_degree, order, CharPair};
use super::{Family, GroupSpec, LieError};
use crate::arith::{nat, Natural};

/// Outcome of checking one group against both ratio bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thm21Report {
    pub spec: GroupSpec,
    pub pair: CharPair,
    pub order: Natural,
    /// `alpha^14 > beta^14 |S|`.
    pub passed_114: bool,
    /// `5 alpha >= 16 beta`.
    pub passed_165: bool,
}

impl Thm21Report {
    fn evaluate(spec: GroupSpec, pair: CharPair, order: Natural) -> Self {
        let lhs = Pow::pow(&pair.alpha_degree, 14u32);
        let rhs = Pow::pow(&pair.beta_degree, 14u32) * &order;
        let passed_114 = lhs > rhs;
        let passed_165 = nat(5) * &pair.alpha_degree >= nat(16) * &pair.beta_degree;
        Thm21Report {
            spec,
            pair,
            order,
            passed_114,
            passed_165,
        }
    }

    /// `alpha/beta` as written, not reduced.
    pub fn ratio(&self) -> String {
        format!("{}/{}", self.pair.alpha_degree, self.pair.beta_degree)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "group": self.spec.label(),
            "family": self.spec.family,
            "rank": self.spec.rank,
            "q": self.spec.q.q.to_string(),
            "p": self.spec.q.p.to_string(),
            "e": self.spec.q.e,
            "alpha": self.pair.alpha_degree.to_string(),
            "alpha_label": self.pair.alpha_label,
            "beta": self.pair.beta_degree.to_string(),
            "beta_label": self.pair.beta_label,
            "ratio": self.ratio(),
            "order": self.order.to_string(),
            "passed_114": self.passed_114,
            "passed_165": self.passed_165,
        })
    }

    pub const CSV_HEADER: &'static str =
        "group,family,rank,q,p,e,alpha,alpha_label,beta,beta_label,order,passed_114,passed_165";

    pub fn to_csv(&self) -> String {
        let quote = |s: &str| {
            if s.contains([',', '"']) {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.to_string()
            }
        };
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            quote(&self.spec.label()),
            self.spec.family,
            self.spec.rank.map(|r| r.to_string()).unwrap_or_default(),
            self.spec.q.q,
            self.spec.q.p,
            self.spec.q.e,
            self.pair.alpha_degree,
            quote(&self.pair.alpha_label),
            self.pair.beta_degree,
            quote(&self.pair.beta_label),
            self.order,
            self.passed_114,
            self.passed_165,
        )
    }
}

/// Steinberg degree against the chosen small degree, with `|S|^(1/14)`.
pub fn check_thm21(spec: &GroupSpec) -> Result<Thm21Report, LieError> {
    let pair = beta_degree(spec)?;
    let order = order(spec)?;
    Ok(Thm21Report::evaluate(*spec, pair, order))
}

/// As `check_thm21`, but `PSL_3(3)` uses the degrees 39 and 12, since the
/// Steinberg pair there gives only 27/12 < 16/5.
pub fn check_lemma61(spec: &GroupSpec) -> Result<Thm21Report, LieError> {
    let mut pair = beta_degree(spec)?;
    let order = order(spec)?;
    if spec.family == Family::Linear && spec.rank == Some(3) && spec.q.q == 3 {
        pair = CharPair {
            alpha_degree: nat(39),
            beta_degree: nat(12),
            alpha_label: "degree 39".to_string(),
            beta_label: "degree 12".to_string(),
        };
    }
    Ok(Thm21Report::evaluate(*spec, pair, order))
}
