//! Orders and chosen degrees against character tables exported from GAP.

use chardeg::arith::Natural;
use chardeg::lie::{beta_degree, order, Family, GroupSpec};

struct Row {
    name: String,
    spec: GroupSpec,
    order: Natural,
    degrees: Vec<Natural>,
}

fn rows() -> Vec<Row> {
    let text = include_str!("fixtures/lie_atlas.tsv");
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let f: Vec<&str> = l.split('\t').collect();
            let family: Family = f[1].parse().unwrap();
            let rank: u32 = f[2].parse().unwrap();
            let q: u64 = f[3].parse().unwrap();
            let spec = if family.is_classical() {
                GroupSpec::classical(family, rank, q).unwrap()
            } else {
                GroupSpec::exceptional(family, q).unwrap()
            };
            Row {
                name: f[0].to_string(),
                spec,
                order: f[4].parse().unwrap(),
                degrees: f[5].split(',').map(|d| d.parse().unwrap()).collect(),
            }
        })
        .collect()
}

#[test]
fn fixture_covers_every_family_present() {
    let rows = rows();
    assert!(rows.len() >= 40);
    for family in [
        Family::Linear,
        Family::Unitary,
        Family::Symplectic,
        Family::OrthPlus,
        Family::OrthMinus,
    ] {
        assert!(rows.iter().any(|r| r.spec.family == family), "{family}");
    }
}

#[test]
fn orders_match_tables() {
    for row in rows() {
        assert_eq!(order(&row.spec).unwrap(), row.order, "{}", row.name);
    }
}

#[test]
fn chosen_degrees_are_character_degrees() {
    for row in rows() {
        let pair = beta_degree(&row.spec).unwrap();
        assert!(
            row.degrees.contains(&pair.alpha_degree),
            "{}: Steinberg {}",
            row.name,
            pair.alpha_degree
        );
        assert!(
            row.degrees.contains(&pair.beta_degree),
            "{}: beta {}",
            row.name,
            pair.beta_degree
        );
    }
}

#[test]
fn steinberg_is_the_largest_p_power_degree() {
    for row in rows() {
        let st = beta_degree(&row.spec).unwrap().alpha_degree;
        let p = Natural::from(row.spec.q.p);
        let (_, rem) = num_integer::Integer::div_rem(&row.order, &st);
        assert_eq!(rem, Natural::from(0u32), "{}", row.name);
        let (_, rem) = num_integer::Integer::div_rem(&(&row.order / &st), &p);
        assert_ne!(
            rem,
            Natural::from(0u32),
            "{}: cofactor divisible by p",
            row.name
        );
    }
}
