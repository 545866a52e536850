//! Character degree tables supplied as data, and the checks run on them.
//!
//! TSV layout, one group per line, `#` starts a comment line:
//!
//! ```text
//! name<TAB>order<TAB>degrees<TAB>out_order<TAB>alpha,beta<TAB>fitting_index
//! ```
//!
//! Only `name` and `degrees` are required. Columns past the sixth are ignored.

use std::fmt;
use std::path::Path;

use num_bigint::BigUint;
use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{Natural, Rational};

#[derive(Debug, Error)]
pub enum DataError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: table `{name}` is invalid: {message}")]
    Invalid {
        line: usize,
        name: String,
        message: String,
    },
    #[error("no table found")]
    Empty,
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeTable {
    pub name: String,
    pub order: Option<Natural>,
    /// Sorted, duplicates kept.
    pub degrees: Vec<Natural>,
    pub out_order: Option<Natural>,
    pub extendible_pair: Option<(Natural, Natural)>,
    /// `|G : F(G)|`.
    pub fitting_index: Option<Natural>,
}

impl DegreeTable {
    /// Builds a table and checks its invariants.
    pub fn new(name: impl Into<String>, mut degrees: Vec<Natural>) -> Result<Self, String> {
        degrees.sort();
        let table = DegreeTable {
            name: name.into(),
            order: None,
            degrees,
            out_order: None,
            extendible_pair: None,
            fitting_index: None,
        };
        table.validate()?;
        Ok(table)
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.name.is_empty() {
            return Err("empty name".into());
        }
        if self.degrees.is_empty() {
            return Err("no degrees".into());
        }
        if self.degrees.iter().any(Zero::is_zero) {
            return Err("degree 0".into());
        }
        if !self.degrees.iter().any(One::is_one) {
            return Err("degree 1 is missing".into());
        }
        if let Some((a, b)) = &self.extendible_pair {
            for x in [a, b] {
                if self.degrees.binary_search(x).is_err() {
                    return Err(format!("pair value {x} is not a degree"));
                }
            }
        }
        Ok(())
    }

    /// Largest degree.
    pub fn b(&self) -> Natural {
        self.degrees.last().cloned().unwrap_or_else(Natural::one)
    }

    /// Smallest degree above 1, if any.
    pub fn c(&self) -> Option<Natural> {
        self.degrees.iter().find(|d| !d.is_one()).cloned()
    }

    /// `b/c`, or 1 when every degree is 1.
    pub fn rat(&self) -> Rational {
        match self.c() {
            Some(c) => Rational::new(self.b().into(), c.into()),
            None => Rational::one(),
        }
    }

    pub fn square_sum(&self) -> Natural {
        self.degrees.iter().map(|d| d * d).sum()
    }

    /// `None` without an order, otherwise whether the squares sum to it.
    pub fn squares_match_order(&self) -> Option<bool> {
        self.order.as_ref().map(|o| *o == self.square_sum())
    }

    /// The degrees without repetition.
    pub fn support(&self) -> Vec<Natural> {
        let mut s = self.degrees.clone();
        s.dedup();
        s
    }

    pub fn to_tsv_line(&self) -> String {
        let opt = |x: &Option<Natural>| x.as_ref().map(|v| v.to_string()).unwrap_or_default();
        let degrees: Vec<String> = self.degrees.iter().map(|d| d.to_string()).collect();
        let pair = self
            .extendible_pair
            .as_ref()
            .map(|(a, b)| format!("{a},{b}"))
            .unwrap_or_default();
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.name,
            opt(&self.order),
            degrees.join(","),
            opt(&self.out_order),
            pair,
            opt(&self.fitting_index)
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(TableJson::from(self)).expect("plain strings serialize")
    }

    pub fn from_json(value: serde_json::Value) -> Result<Self, DataError> {
        let raw: TableJson = serde_json::from_value(value)?;
        raw.into_table()
    }
}

impl fmt::Display for DegreeTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_tsv_line())
    }
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    name: String,
    #[serde(default)]
    order: Option<String>,
    degrees: Vec<String>,
    #[serde(default)]
    out_order: Option<String>,
    #[serde(default)]
    extendible_pair: Option<[String; 2]>,
    #[serde(default)]
    fitting_index: Option<String>,
}

impl From<&DegreeTable> for TableJson {
    fn from(t: &DegreeTable) -> Self {
        let s = |x: &Option<Natural>| x.as_ref().map(|v| v.to_string());
        TableJson {
            name: t.name.clone(),
            order: s(&t.order),
            degrees: t.degrees.iter().map(|d| d.to_string()).collect(),
            out_order: s(&t.out_order),
            extendible_pair: t
                .extendible_pair
                .as_ref()
                .map(|(a, b)| [a.to_string(), b.to_string()]),
            fitting_index: s(&t.fitting_index),
        }
    }
}

impl TableJson {
    fn into_table(self) -> Result<DegreeTable, DataError> {
        let num = |field: &str, v: &str| parse_natural(v, 0, field);
        let opt = |field: &str, v: Option<String>| v.map(|v| num(field, &v)).transpose();
        let mut degrees = self
            .degrees
            .iter()
            .map(|d| num("degrees", d))
            .collect::<Result<Vec<_>, _>>()?;
        degrees.sort();
        let extendible_pair = match self.extendible_pair {
            Some([a, b]) => Some((num("extendible_pair", &a)?, num("extendible_pair", &b)?)),
            None => None,
        };
        let table = DegreeTable {
            order: opt("order", self.order)?,
            out_order: opt("out_order", self.out_order)?,
            fitting_index: opt("fitting_index", self.fitting_index)?,
            name: self.name,
            degrees,
            extendible_pair,
        };
        table.validate().map_err(|message| DataError::Invalid {
            line: 0,
            name: table.name.clone(),
            message,
        })?;
        Ok(table)
    }
}

fn parse_natural(s: &str, line: usize, field: &str) -> Result<Natural, DataError> {
    s.trim().parse::<BigUint>().map_err(|_| DataError::Parse {
        line,
        message: format!("{field}: `{}` is not a non-negative integer", s.trim()),
    })
}

fn parse_optional(s: Option<&str>, line: usize, field: &str) -> Result<Option<Natural>, DataError> {
    match s.map(str::trim) {
        None | Some("") => Ok(None),
        Some(v) => parse_natural(v, line, field).map(Some),
    }
}

/// Parses one data line; `line` is 1-based and used in errors.
pub fn parse_line(text: &str, line: usize) -> Result<DegreeTable, DataError> {
    let fields: Vec<&str> = text.split('\t').collect();
    let name = fields[0].trim().to_string();
    if name.is_empty() {
        return Err(DataError::Parse {
            line,
            message: "empty name".into(),
        });
    }
    let degrees_field = fields.get(2).map(|s| s.trim()).unwrap_or("");
    if degrees_field.is_empty() {
        return Err(DataError::Parse {
            line,
            message: "empty degrees field".into(),
        });
    }
    let mut degrees = degrees_field
        .split(',')
        .map(|d| parse_natural(d, line, "degrees"))
        .collect::<Result<Vec<_>, _>>()?;
    degrees.sort();
    let extendible_pair = match fields.get(4).map(|s| s.trim()) {
        None | Some("") => None,
        Some(p) => {
            let (a, b) = p.split_once(',').ok_or_else(|| DataError::Parse {
                line,
                message: format!("pair `{p}` is not of the form alpha,beta"),
            })?;
            Some((
                parse_natural(a, line, "alpha")?,
                parse_natural(b, line, "beta")?,
            ))
        }
    };
    let table = DegreeTable {
        order: parse_optional(fields.get(1).copied(), line, "order")?,
        out_order: parse_optional(fields.get(3).copied(), line, "out_order")?,
        fitting_index: parse_optional(fields.get(5).copied(), line, "fitting_index")?,
        name,
        degrees,
        extendible_pair,
    };
    table.validate().map_err(|message| DataError::Invalid {
        line,
        name: table.name.clone(),
        message,
    })?;
    Ok(table)
}

fn is_skippable(line: &str) -> bool {
    let t = line.trim();
    t.is_empty() || t.starts_with('#') || t.split('\t').next() == Some("name")
}

/// Every table in a TSV document.
pub fn parse_tables(input: &str) -> Result<Vec<DegreeTable>, DataError> {
    input
        .lines()
        .enumerate()
        .filter(|(_, l)| !is_skippable(l))
        .map(|(i, l)| parse_line(l, i + 1))
        .collect()
}

/// The first table in a TSV document.
pub fn parse_table(input: &str) -> Result<DegreeTable, DataError> {
    parse_tables(input)?
        .into_iter()
        .next()
        .ok_or(DataError::Empty)
}

pub fn serialize_tables(tables: &[DegreeTable]) -> String {
    let mut out = String::from("# name\torder\tdegrees\tout_order\talpha,beta\tfitting_index\n");
    for t in tables {
        out.push_str(&t.to_tsv_line());
        out.push('\n');
    }
    out
}

pub fn load_file(path: &Path) -> Result<Vec<DegreeTable>, DataError> {
    let text = std::fs::read_to_string(path).map_err(|source| DataError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_tables(&text)
}

/// `x <= y^(num/den)`, decided as `x^den <= y^num`.
pub fn check_exponent_bound(x: &Natural, y: &Natural, num: u32, den: u32) -> bool {
    assert!(den >= 1, "den must be positive");
    Pow::pow(x, den) <= Pow::pow(y, num)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "reason", rename_all = "snake_case")]
pub enum SporadicStatus {
    Passed,
    Failed,
    /// Order or pair missing from the data.
    Unchecked(String),
    /// The pair cannot witness the bound at all.
    Rejected(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SporadicReport {
    pub name: String,
    pub pair: Option<(Natural, Natural)>,
    pub order: Option<Natural>,
    pub status: SporadicStatus,
}

impl SporadicReport {
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::json!({
            "name": self.name,
            "alpha": self.pair.as_ref().map(|p| p.0.to_string()),
            "beta": self.pair.as_ref().map(|p| p.1.to_string()),
            "order": self.order.as_ref().map(|o| o.to_string()),
            "extendibility": "asserted by data",
        });
        let status = serde_json::to_value(&self.status).expect("enum serializes");
        if let (Some(obj), Some(st)) = (v.as_object_mut(), status.as_object()) {
            for (k, val) in st {
                obj.insert(k.clone(), val.clone());
            }
        }
        v
    }
}

/// `alpha^14 > beta^14 |S|` for the pair recorded in the table.
pub fn check_sporadic_thm21(table: &DegreeTable) -> SporadicReport {
    let status = match (&table.order, &table.extendible_pair) {
        (None, _) => SporadicStatus::Unchecked("order missing".into()),
        (_, None) => SporadicStatus::Unchecked("pair missing".into()),
        (Some(order), Some((alpha, beta))) => {
            let two = Natural::from(2u32);
            if *beta < two || *alpha < two {
                SporadicStatus::Rejected(
                    "pair values must be non-principal degrees (at least 2)".into(),
                )
            } else if table.degrees.binary_search(alpha).is_err()
                || table.degrees.binary_search(beta).is_err()
            {
                SporadicStatus::Rejected("pair values must be degrees of the table".into())
            } else if Pow::pow(alpha, 14u32) > Pow::pow(beta, 14u32) * order {
                SporadicStatus::Passed
            } else {
                SporadicStatus::Failed
            }
        }
    };
    SporadicReport {
        name: table.name.clone(),
        pair: table.extendible_pair.clone(),
        order: table.order.clone(),
        status,
    }
}

/// The outer automorphism bounds used for a simple group `S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OutBoundReport {
    pub name: String,
    /// `|Out(S)| cbrt(24) <= |S|^0.43`, as `(|Out|^3 24)^100 <= |S|^129`.
    pub direct: bool,
    /// `cbrt(24) <= |S|^0.171`, as `24^1000 <= |S|^513`.
    pub cube_root_24: bool,
    /// `|Out(S)| <= |S|^0.259`.
    pub out_0259: bool,
}

impl OutBoundReport {
    /// The stepped form implies the direct one; either suffices.
    pub fn passed(&self) -> bool {
        self.direct || (self.cube_root_24 && self.out_0259)
    }
}

pub fn check_out_bound(name: &str, out_order: &Natural, order: &Natural) -> OutBoundReport {
    let cube_times_24 = Pow::pow(out_order, 3u32) * Natural::from(24u32);
    OutBoundReport {
        name: name.to_string(),
        direct: check_exponent_bound(&cube_times_24, order, 129, 100),
        cube_root_24: check_exponent_bound(&Natural::from(24u32), order, 513, 1000),
        out_0259: check_exponent_bound(out_order, order, 259, 1000),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{nat, ratio};

    const M11: &str = "M11\t7920\t1,10,10,10,11,16,16,44,45,55\t1\t";

    #[test]
    fn parses_m11() {
        let t = parse_table(M11).unwrap();
        assert_eq!(t.b(), nat(55));
        assert_eq!(t.c(), Some(nat(10)));
        assert_eq!(t.squares_match_order(), Some(true));
        assert_eq!(t.out_order, Some(nat(1)));
        assert_eq!(t.extendible_pair, None);
    }

    #[test]
    fn parse_errors() {
        let e = parse_table("# c\nX\t6\t2,3\t\t\t").unwrap_err();
        assert!(matches!(e, DataError::Invalid { line: 2, .. }), "{e}");
        let e = parse_table("X\t6\t\t\t\t").unwrap_err();
        assert!(matches!(e, DataError::Parse { line: 1, .. }), "{e}");
        let e = parse_table("X\tsix\t1,1\t\t\t").unwrap_err();
        assert!(matches!(e, DataError::Parse { line: 1, .. }));
        let e = parse_table("X\t6\t1,2\t\t3,2\t").unwrap_err();
        assert!(matches!(e, DataError::Invalid { .. }));
        assert!(matches!(parse_table("# only\n"), Err(DataError::Empty)));
    }

    #[test]
    fn extra_columns_tolerated() {
        let t = parse_table("X\t2\t1,1\t\t\t\textra\tmore").unwrap();
        assert_eq!(t.rat(), ratio(1, 1));
    }

    #[test]
    fn rat_examples() {
        let t = DegreeTable::new("ab", vec![nat(1); 4]).unwrap();
        assert_eq!(t.rat(), ratio(1, 1));
        let t = DegreeTable::new("pgl", [1, 4, 5, 6].map(nat).to_vec()).unwrap();
        assert_eq!(t.rat(), ratio(3, 2));
        let t = DegreeTable::new("l34", [1, 20, 35, 45, 63, 64].map(nat).to_vec()).unwrap();
        assert_eq!(t.rat(), ratio(16, 5));
    }

    #[test]
    fn round_trips() {
        let mut t = parse_table(M11).unwrap();
        t.extendible_pair = Some((nat(55), nat(10)));
        t.fitting_index = Some(nat(1));
        let back = parse_tables(&serialize_tables(std::slice::from_ref(&t))).unwrap();
        assert_eq!(back, vec![t.clone()]);
        assert_eq!(DegreeTable::from_json(t.to_json()).unwrap(), t);
    }

    #[test]
    fn sporadic_statuses() {
        let mut t = parse_table(M11).unwrap();
        assert!(matches!(
            check_sporadic_thm21(&t).status,
            SporadicStatus::Unchecked(_)
        ));
        t.extendible_pair = Some((nat(55), nat(10)));
        assert_eq!(check_sporadic_thm21(&t).status, SporadicStatus::Passed);
        t.extendible_pair = Some((nat(55), nat(1)));
        assert!(matches!(
            check_sporadic_thm21(&t).status,
            SporadicStatus::Rejected(_)
        ));
        // 4^14 = 2^14 * 2^14, so the strict inequality fails.
        let eq = DegreeTable {
            name: "eq".into(),
            order: Some(nat(1 << 14)),
            degrees: [1, 2, 4].map(nat).to_vec(),
            out_order: None,
            extendible_pair: Some((nat(4), nat(2))),
            fitting_index: None,
        };
        assert_eq!(check_sporadic_thm21(&eq).status, SporadicStatus::Failed);
        let json = check_sporadic_thm21(&eq).to_json();
        assert_eq!(json["status"], "failed");
        assert_eq!(json["extendibility"], "asserted by data");
    }

    #[test]
    fn exponent_bound_examples() {
        assert!(check_exponent_bound(&nat(2), &nat(60), 259, 1000));
        assert!(check_exponent_bound(&nat(1), &nat(7), 3, 11));
        assert!(!check_exponent_bound(&nat(8), &nat(7), 1, 1));
    }

    #[test]
    fn out_bounds_small() {
        for (name, out, order) in [("A5", 2, 60), ("L2(7)", 2, 168), ("A6", 4, 360)] {
            let r = check_out_bound(name, &nat(out), &nat(order));
            assert!(r.direct, "{name}");
            assert!(!r.cube_root_24, "{name} is below 504");
        }
        assert!(check_out_bound("L2(8)", &nat(3), &nat(504)).passed());
    }
}
