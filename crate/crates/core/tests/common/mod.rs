#![allow(dead_code)]

use m0n_core::classes::{CurveClass, FCurve, FCurveExpression, LabelSet, MarkedCount};
use m0n_core::invariant::{dihedral_curve_class, DihedralAction};
use m0n_core::losev_manin::{torus_curve_to_fcurve, ConfigurationFamily, LMCycle, OrderedPartition};
use m0n_core::search::keel_relations_containing;

pub const N9_GENERATORS: [&str; 2] = ["(123)(456)(789)", "(14)(26)(35)(89)"];
pub const N12_GENERATORS: [&str; 2] = ["(123)(456)(789)(abc)", "(14)(26)(35)(89)(bc)"];

pub fn nn(n: usize) -> MarkedCount {
    MarkedCount::new(n).unwrap()
}

pub fn fixture(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

pub fn expr(name: &str, n: usize) -> FCurveExpression {
    FCurveExpression::parse(&fixture(name), nn(n)).unwrap()
}

/// Blank-line separated expressions.
pub fn groups(name: &str, n: usize) -> Vec<FCurveExpression> {
    fixture(name)
        .split("\n\n")
        .filter(|g| !g.trim().is_empty())
        .map(|g| FCurveExpression::parse(g, nn(n)).unwrap())
        .collect()
}

pub fn family(name: &str) -> ConfigurationFamily {
    ConfigurationFamily::from_json(&fixture(name)).unwrap()
}

pub fn dihedral(n: usize, gens: &[&str]) -> CurveClass {
    dihedral_curve_class(&DihedralAction::parse(nn(n), gens).unwrap())
}

/// Parses `"1|23|4 (2), 5|6|7"` into sorted `(type, multiplicity)` pairs.
pub fn listing(s: &str, lights: LabelSet) -> Vec<(OrderedPartition, u64)> {
    let mut v: Vec<_> = s
        .split(',')
        .map(|item| {
            let item = item.trim();
            let (t, m) = match item.split_once('(') {
                Some((t, m)) => (t.trim(), m.trim_end_matches(')').parse().unwrap()),
                None => (item, 1),
            };
            (OrderedPartition::parse(t, lights).unwrap(), m)
        })
        .collect();
    v.sort();
    v
}

/// Intermediate cycles of the nine-point family under `T_1, …, T_6`, one per
/// line. The first three steps also carry their main component.
pub fn n9_steps() -> Vec<String> {
    fixture("n9_steps.txt").lines().filter(|l| !l.trim().is_empty()).map(str::to_string).collect()
}

pub fn pushed_down(cycle: &LMCycle) -> FCurveExpression {
    let mut e = FCurveExpression::zero(cycle.n);
    for c in &cycle.components {
        e.add_term(torus_curve_to_fcurve(&c.partition, cycle.heavy, cycle.n).unwrap(), c.multiplicity as i64);
    }
    e
}

/// A group of four unit terms that is, up to sign, a Keel relation through
/// one of its positive and one of its negative terms.
pub fn is_keel_relation(g: &FCurveExpression) -> bool {
    if g.len() != 4 || g.iter().any(|(_, c)| c.abs() != 1) {
        return false;
    }
    let pos: Vec<FCurve> = g.positive_terms().map(|(f, _)| f).collect();
    let neg: Vec<FCurve> = g.negative_terms().map(|(f, _)| f).collect();
    if pos.is_empty() || neg.is_empty() {
        return false;
    }
    keel_relations_containing(&pos[0], &neg[0])
        .iter()
        .any(|r| &r.expression() == g || &r.expression().scaled(-1) == g)
}
