//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness so the report is always printed.

mod common;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use m0n_core::classes::labels::parse_label_run;
use m0n_core::classes::perm::for_each_permutation;
use m0n_core::classes::{
    all_fcurves, canonical_divisor_rep, expand_in_dual_basis, for_each_keel_relation, nonadjacent_basis,
    BoundaryDivisor, CurveClass, DualBasis, FCurve, FCurveExpression, KeelRelation, LabelSet, MarkedCount,
};
use m0n_core::invariant::{
    balanced_type, cyclic_curve_class, cyclic_effective_expression, k_intersection, psi_intersection,
    stabilizer_order, CyclicAction, StabilizerConfig,
};
use m0n_core::losev_manin::{degenerate, degeneration_steps, lift_with_proper_transform, DegenerationConfig};
use m0n_core::search::{adjacent, keel_relations_containing, refinement, seek_effective_expression, SearchConfig};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn int(k: i64) -> BigRational {
    BigRational::from_integer(k.into())
}

fn div(s: &str, n: MarkedCount) -> BoundaryDivisor {
    let set: LabelSet = parse_label_run(s).unwrap().into_iter().collect();
    canonical_divisor_rep(set, n).unwrap()
}

fn ex(s: &str, n: MarkedCount) -> FCurveExpression {
    FCurveExpression::parse(s, n).unwrap()
}

fn within(t: Instant, limit_secs: u64) -> Outcome {
    let e = t.elapsed();
    if e > Duration::from_secs(limit_secs) {
        Err(format!("took {:.1}s, limit {limit_secs}s", e.as_secs_f64()))
    } else {
        Ok(format!("{:.2}s", e.as_secs_f64()))
    }
}

fn dual_lists() -> Outcome {
    let t = Instant::now();
    let n5 = nn(5);
    let n5_duals = [
        ("13", "F{1|2|3|45}"),
        ("14", "F{1|4|5|23}"),
        ("24", "F{2|3|4|15}"),
        ("25", "F{1|2|5|34}"),
        ("35", "F{3|4|5|12}"),
    ];
    let n6 = nn(6);
    let n6_duals = [
        ("13", "F{1|2|3|456}"),
        ("14", "F{1|4|23|56}"),
        ("15", "F{1|5|6|234}"),
        ("24", "F{2|3|4|156}"),
        ("25", "F{2|5|16|34}"),
        ("26", "F{1|2|6|345}"),
        ("35", "F{3|4|5|126}"),
        ("36", "F{3|6|12|45}"),
        ("46", "F{4|5|6|123}"),
        ("124", "F{3|4|12|56}"),
        ("125", "F{5|6|12|34}"),
        ("134", "F{1|2|34|56}"),
        ("135", "F{5|6|13|24} + F{1|2|3|456} + F{2|3|4|156} - F{2|3|16|45}"),
        ("136", "F{2|3|16|45}"),
        ("145", "F{1|6|23|45}"),
        ("146", "F{4|5|16|23}"),
    ];
    for (n, list) in [(n5, &n5_duals[..]), (n6, &n6_duals[..])] {
        let basis = nonadjacent_basis(n);
        ensure!(basis.len() == list.len(), "n={n}: basis has {} elements", basis.len());
        let mut db = DualBasis::new(n);
        for (d, want) in list {
            let d = div(d, n);
            ensure!(basis.contains(&d), "n={n}: {d} not in the basis");
            let got = db.dual(d).map_err(|e| e.to_string())?;
            let want = ex(&want.replace(" + ", "\n+").replace(" - ", "\n-"), n);
            ensure!(got == want, "n={n}: dual of {d} is {got}, expected {want}");
        }
    }
    let mut sizes = Vec::new();
    for n in 5..=9 {
        let n = nn(n);
        let basis = nonadjacent_basis(n);
        let mut db = DualBasis::new(n);
        for &a in &basis {
            let dual = db.dual(a).map_err(|e| e.to_string())?;
            for &b in &basis {
                let v: i64 = dual.iter().map(|(f, c)| c * f.pair(b)).sum();
                ensure!(v == (a == b) as i64, "n={n}: dual({a}) · {b} = {v}");
            }
        }
        sizes.push(basis.len());
    }
    let time = within(t, 60)?;
    Ok(format!("n=5,6 lists match; identity pairing for bases of size {sizes:?}; {time}"))
}

fn basis_count() -> Outcome {
    for n in 5..=12u32 {
        let want = (1usize << (n - 1)) - (n * (n - 1) / 2) as usize - 1;
        let got = nonadjacent_basis(nn(n as usize)).len();
        ensure!(got == want, "n={n}: {got} != {want}");
    }
    Ok("n=5..12".into())
}

/// Every `σ ∈ S_n` with two equal nontrivial cycles and at most two fixed points.
fn balanced_actions(n: usize) -> Vec<CyclicAction> {
    let mut out = Vec::new();
    for_each_permutation(nn(n), |g| {
        if balanced_type(g).is_some() {
            out.push(CyclicAction::new(g.clone()).unwrap());
        }
    });
    out
}

fn cyclic_classes() -> Outcome {
    let t = Instant::now();
    let mut count = 0;
    for n in 5..=10 {
        for a in balanced_actions(n) {
            let (r, j) = (a.r as i64, a.j as i64);
            let c = cyclic_curve_class(&a);
            let d2 = c.level_sum(2);
            if n == 5 {
                ensure!(d2 == 6, "{}: C·D_2 = {d2}", a.sigma);
            } else {
                ensure!(d2 == r * r, "{}: C·D_2 = {d2}", a.sigma);
                let top = c.level_sum(n / 2);
                ensure!(top == 2, "{}: C·D_{} = {top}", a.sigma, n / 2);
            }
            ensure!(k_intersection(&c) == int(j - 4), "{}: C·K = {}", a.sigma, k_intersection(&c));
            ensure!(psi_intersection(&c) == int(2 * r * r + j), "{}: C·ψ = {}", a.sigma, psi_intersection(&c));
            count += 1;
        }
    }
    let time = within(t, 30)?;
    Ok(format!("{count} permutations; {time}"))
}

fn all_ones_expressions() -> Outcome {
    let t = Instant::now();
    let printed = [
        (6, "(12)(34)", "F{1|2|3|456} + F{1|4|23|56} + F{2|3|4|156} + F{5|6|12|34}"),
        (
            6,
            "(123)(456)",
            "F{1|4|23|56} + F{1|5|6|234} + F{2|3|4|156} + F{2|5|16|34} + F{1|2|6|345} + F{3|4|5|126} + \
             F{3|6|12|45}",
        ),
        (
            7,
            "(123)(456)",
            "F{1|4|23|567} + F{1|5|67|234} + F{1|6|7|2345} + F{2|3|4|1567} + F{2|5|34|167} + F{2|6|17|345} + \
             F{3|4|5|1267} + F{3|6|45|127}",
        ),
    ];
    for (n, sigma, sum) in printed {
        let n = nn(n);
        let got = cyclic_effective_expression(&CyclicAction::parse(n, sigma).unwrap());
        let want = ex(&sum.replace(" + ", "\n"), n);
        ensure!(got == want, "n={n} {sigma}: {got}");
    }
    let mut count = 0;
    for n in 5..=10 {
        for a in balanced_actions(n) {
            let e = cyclic_effective_expression(&a);
            ensure!(e.iter().all(|(_, c)| c == 1), "{}: coefficient other than 1", a.sigma);
            let support = a.r * a.r + a.j - 2;
            ensure!(e.len() == support, "{}: {} terms, expected {support}", a.sigma, e.len());
            ensure!(e.class() == cyclic_curve_class(&a), "{}: class mismatch", a.sigma);
            count += 1;
        }
    }
    let time = within(t, 60)?;
    Ok(format!("three printed sums match; {count} permutations; {time}"))
}

fn class_table(c: &CurveClass) -> BTreeMap<BoundaryDivisor, i64> {
    c.nonzero().into_iter().collect()
}

fn expected_table(n: MarkedCount, entries: &[(&str, i64)]) -> BTreeMap<BoundaryDivisor, i64> {
    entries.iter().map(|&(s, v)| (div(s, n), v)).collect()
}

fn dihedral_classes() -> Outcome {
    let n9 = nn(9);
    let mut e9 = vec![("123", 2), ("456", 2)];
    let pairs: Vec<String> = (1..=3).flat_map(|i| (4..=6).map(move |j| format!("{i}{j}"))).collect();
    e9.extend(pairs.iter().map(|p| (p.as_str(), 1)));
    let triples9 = ["147", "258", "369", "168", "249", "357", "159", "267", "348"];
    e9.extend(triples9.iter().map(|t| (*t, 1)));
    let c9 = dihedral(9, &N9_GENERATORS);
    ensure!(class_table(&c9) == expected_table(n9, &e9), "n=9 table differs: {:?}", c9.nonzero());

    let n12 = nn(12);
    let mut e12 = vec![("123", 2), ("456", 2)];
    let triples12 = [
        "147", "258", "369", "168", "249", "357", "159", "267", "348", "15c", "26a", "34b", "14a", "25b", "36c",
        "16b", "24c", "35a",
    ];
    e12.extend(triples12.iter().map(|t| (*t, 1)));
    let c12 = dihedral(12, &N12_GENERATORS);
    ensure!(class_table(&c12) == expected_table(n12, &e12), "n=12 table differs: {:?}", c12.nonzero());
    ensure!(k_intersection(&c12) == int(10), "n=12: C·K = {}", k_intersection(&c12));

    // The (ac) reflection gives a relabeled curve with the same shape.
    let other = dihedral(12, &["(123)(456)(789)(abc)", "(14)(26)(35)(89)(ac)"]);
    let table = class_table(&other);
    let twos: Vec<_> = table.iter().filter(|(_, v)| **v == 2).map(|(d, _)| *d).collect();
    let ones = table.iter().filter(|(d, v)| d.level() == 3 && **v == 1).count();
    ensure!(
        twos == [div("123", n12), div("456", n12)] && ones == 18 && table.len() == 20,
        "(ac) class has shape {:?}",
        other.nonzero()
    );
    ensure!(k_intersection(&other) == int(10), "(ac): C·K = {}", k_intersection(&other));
    Ok("n=9 and n=12 tables exact; (ac) variant has two 2's and eighteen 1's; C·K = 10".into())
}

fn random_relation(n: MarkedCount, rng: &mut ChaCha8Rng) -> KeelRelation {
    loop {
        let mut parts = [LabelSet::EMPTY; 5];
        for l in n.labels() {
            parts[rng.gen_range(0..5)].insert(l);
        }
        if parts.iter().all(|p| !p.is_empty()) {
            return KeelRelation::new(parts, n).unwrap();
        }
    }
}

/// The distinct term sets of all Keel relations on `[n]`.
fn relation_term_sets(n: MarkedCount) -> BTreeSet<[FCurve; 4]> {
    let mut out = BTreeSet::new();
    for_each_keel_relation(n, |r| {
        let mut terms: Vec<FCurve> = r.expression().iter().map(|(f, _)| f).collect();
        terms.sort();
        out.insert(terms.try_into().unwrap());
    });
    out
}

fn keel_machinery() -> Outcome {
    let t = Instant::now();
    let mut exhaustive = 0;
    for n in 5..=7 {
        let mut bad = None;
        for_each_keel_relation(nn(n), |r| {
            exhaustive += 1;
            if bad.is_none() && !r.expression().class().is_zero() {
                bad = Some(r);
            }
        });
        ensure!(bad.is_none(), "nonzero class for {}", bad.unwrap());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x6b65656c);
    for n in 8..=12 {
        for _ in 0..10_000 {
            let r = random_relation(nn(n), &mut rng);
            ensure!(r.expression().class().is_zero(), "nonzero class for {r}");
        }
    }

    let mut adjacent_pairs = 0;
    for n in [6, 7] {
        let n = nn(n);
        let sets = relation_term_sets(n);
        let mut through: HashMap<(FCurve, FCurve), BTreeSet<[FCurve; 4]>> = HashMap::new();
        for s in &sets {
            for i in 0..4 {
                for j in 0..4 {
                    if i != j {
                        through.entry((s[i], s[j])).or_default().insert(*s);
                    }
                }
            }
        }
        let curves = all_fcurves(n);
        for f in &curves {
            for g in &curves {
                let rels = keel_relations_containing(f, g);
                let brute = through.get(&(*f, *g));
                if !adjacent(f, g) {
                    ensure!(rels.is_empty() && brute.is_none(), "{f}, {g} not adjacent but share a relation");
                    continue;
                }
                adjacent_pairs += 1;
                ensure!(rels.len() == 2, "{f}, {g}: {} relations", rels.len());
                let mut got = BTreeSet::new();
                for r in &rels {
                    let e = r.expression();
                    ensure!(e.coefficient(f) == 1 && e.coefficient(g) != 0, "{r} misses {f} or {g}");
                    let mut terms: Vec<FCurve> = e.iter().map(|(x, _)| x).collect();
                    terms.sort();
                    got.insert(<[FCurve; 4]>::try_from(terms).unwrap());
                }
                ensure!(Some(&got) == brute, "{f}, {g}: relations differ from enumeration");
            }
        }
    }

    let n6 = nn(6);
    let sets = relation_term_sets(n6);
    let curves = all_fcurves(n6);
    let shared = |a: &FCurve, b: &FCurve| refinement(a, b).shared_blocks.len();
    let mut triples = 0;
    for fi in &curves {
        for fj in &curves {
            if !adjacent(fi, fj) || shared(fi, fj) != 2 {
                continue;
            }
            for fk in &curves {
                if !adjacent(fi, fk) || !adjacent(fj, fk) || shared(fi, fk) != 2 || shared(fj, fk) != 1 {
                    continue;
                }
                triples += 1;
                let hits = sets.iter().filter(|s| s.contains(fi) && s.contains(fj) && s.contains(fk)).count();
                ensure!(hits == 1, "{fi}, {fj}, {fk}: {hits} relations contain all three");
            }
        }
    }
    ensure!(triples > 0, "no triples of the required shape at n=6");
    let time = within(t, 120)?;
    Ok(format!(
        "{exhaustive} relations exhaustively, 50000 sampled; {adjacent_pairs} ordered adjacent pairs; \
         {triples} ordered triples; {time}"
    ))
}

fn n9_fixtures() -> Outcome {
    let c = dihedral(9, &N9_GENERATORS);
    let signed = expr("n9_signed.txt", 9);
    ensure!(signed.deficiency() == 7, "deficiency {}", signed.deficiency());
    ensure!(signed.class() == c, "signed expression has the wrong class");
    let rels = groups("n9_relations.txt", 9);
    ensure!(rels.len() == 14, "{} relations", rels.len());
    for r in &rels {
        ensure!(r.class().is_zero() && is_keel_relation(r), "not a Keel relation: {r}");
    }
    let mut total = signed.clone();
    for r in &rels {
        total.add_scaled(r, 1);
    }
    let eff = expr("n9_effective.txt", 9);
    ensure!(eff.len() == 23 && eff.is_effective(), "final expression: {} terms", eff.len());
    ensure!(eff.class() == c, "final expression has the wrong class");
    ensure!(total == eff, "signed plus relations differs from the final expression");
    Ok(format!("{} signed terms, deficiency 7; 14 relations; 23 effective terms", signed.len()))
}

fn n12_fixtures() -> Outcome {
    let c = dihedral(12, &N12_GENERATORS);
    let signed = expr("n12_signed.txt", 12);
    let negatives = signed.negative_terms().count();
    ensure!(negatives == 14, "{negatives} negative terms");
    ensure!(signed.class() == c, "signed expression has the wrong class");
    let eff = expr("n12_effective.txt", 12);
    ensure!(eff.len() == 32 && eff.is_effective(), "final expression: {} terms", eff.len());
    ensure!(eff.class() == c, "final expression has the wrong class");
    Ok(format!("{} positive and 14 negative terms; 32 effective terms", signed.positive_terms().count()))
}

fn search() -> Outcome {
    let t = Instant::now();
    let c9 = dihedral(9, &N9_GENERATORS);
    let start9 = expand_in_dual_basis(&c9);
    let s9 = seek_effective_expression(&start9, &SearchConfig::default()).map_err(|e| format!("n=9: {e}"))?;
    ensure!(s9.expression.is_effective() && s9.expression.class() == c9, "n=9: invalid result");
    let t9 = within(t, 300)?;

    let t = Instant::now();
    let c12 = dihedral(12, &N12_GENERATORS);
    let start12 = expr("n12_signed.txt", 12);
    let cfg = SearchConfig { max_level: 5, ..SearchConfig::default() };
    let s12 = seek_effective_expression(&start12, &cfg).map_err(|e| format!("n=12: {e}"))?;
    ensure!(s12.expression.is_effective() && s12.expression.class() == c12, "n=12: invalid result");
    let t12 = within(t, 1800)?;
    Ok(format!(
        "n=9 from {} terms: {} terms in {t9}; n=12 from the toric start: {} terms in {t12}",
        start9.len(),
        s9.expression.len(),
        s12.expression.len()
    ))
}

fn degeneration() -> Outcome {
    let t = Instant::now();
    let fam = family("n9_family.json");
    let steps = degeneration_steps(&fam, &DegenerationConfig::default()).map_err(|e| e.to_string())?;
    let printed = n9_steps();
    ensure!(steps.len() == printed.len() + 1, "{} steps", steps.len());
    for (k, want) in printed.iter().enumerate() {
        ensure!(steps[k + 1].summary() == listing(want, fam.lights()), "C^{} differs", k + 1);
    }
    let last = &steps[printed.len()];
    ensure!(last.is_torus_fixed(), "final cycle is not torus-fixed");
    ensure!(last.components.len() == 25, "{} final components", last.components.len());
    ensure!(pushed_down(last) == expr("n9_toric.txt", 9), "final list differs");
    let time = within(t, 600)?;
    Ok(format!("C^1..C^6 and the 25-term list match; {time}"))
}

fn round_trip() -> Outcome {
    let mut negatives = Vec::new();
    for (n, gens, family_file, signed) in [
        (9, N9_GENERATORS, "n9_family.json", "n9_signed.txt"),
        (12, N12_GENERATORS, "n12_family.json", "n12_signed.txt"),
    ] {
        let fam = family(family_file);
        let c = dihedral(n, &gens);
        let cycle = degenerate(&fam, &DegenerationConfig::default()).map_err(|e| e.to_string())?;
        let lifted = lift_with_proper_transform(&cycle, fam.heavy, &c).map_err(|e| e.to_string())?;
        ensure!(lifted.class() == c, "n={n}: lifted class differs");
        ensure!(lifted == expr(signed, n), "n={n}: corrections differ from the printed negative terms");
        negatives.push(lifted.negative_terms().count());
    }
    Ok(format!("class equality at n=9 and n=12; negative terms {negatives:?}"))
}

fn stabilizer() -> Outcome {
    let t = Instant::now();
    let n = nn(7);
    let c = cyclic_curve_class(&CyclicAction::parse(n, "(123)(456)").unwrap());
    let cfg = StabilizerConfig { brute_force_max_n: 0, ..StabilizerConfig::default() };
    let searched = stabilizer_order(&c, &cfg).map_err(|e| e.to_string())?;
    let table = class_table(&c);
    let mut brute = 0;
    let mut total = 0;
    for_each_permutation(n, |g| {
        total += 1;
        let moved: BTreeMap<_, _> =
            table.iter().map(|(d, v)| (canonical_divisor_rep(g.apply_set(d.rep()), n).unwrap(), *v)).collect();
        if moved == table {
            brute += 1;
        }
    });
    ensure!(total == 5040, "{total} permutations enumerated");
    ensure!(searched == 72 && brute == 72, "search {searched}, enumeration {brute}");
    let time = within(t, 30)?;
    Ok(format!("order 72 by search and by enumerating 5040 permutations; {time}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("dual basis", dual_lists),
        ("basis cardinality", basis_count),
        ("cyclic classes", cyclic_classes),
        ("all-ones effective expressions", all_ones_expressions),
        ("dihedral classes", dihedral_classes),
        ("Keel machinery", keel_machinery),
        ("n=9 fixtures", n9_fixtures),
        ("n=12 fixtures", n12_fixtures),
        ("search", search),
        ("degeneration", degeneration),
        ("round-trip lift", round_trip),
        ("stabilizer", stabilizer),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
