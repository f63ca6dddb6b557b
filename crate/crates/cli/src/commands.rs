use anyhow::{anyhow, Context, Result};
use serde_json::{json, Value};

use m0n_core::classes::{expand_in_dual_basis, CurveClass, FCurve, FCurveExpression, MarkedCount};
use m0n_core::invariant::{
    cyclic_curve_class, dihedral_curve_class, k_intersection, kollar_bound, psi_intersection, stabilizer_order,
    CyclicAction, DihedralAction, StabilizerConfig,
};
use m0n_core::losev_manin::{degenerate, lift_with_proper_transform, ConfigurationFamily, DegenerationConfig, LMCycle};
use m0n_core::search::{keel_relations_containing, seek_effective_expression, verify_expression, SearchConfig, SeekError};
use m0n_core::Error;

use crate::io::{read_json, read_text};
use crate::{Cli, Command, Kind};

pub struct Outcome {
    pub payload: Value,
    pub code: u8,
    /// Printed to stderr after the payload is written.
    pub note: Option<String>,
}

impl Outcome {
    fn ok(payload: Value) -> Self {
        Outcome { payload, code: 0, note: None }
    }
}

/// 2 for budget and unsupported-input failures, 1 for everything else.
pub fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(
            Error::Timeout(_)
            | Error::UnsupportedFieldExtension(_)
            | Error::GermDepthExceeded(_)
            | Error::UnsupportedExceptionalLocus(_),
        ) => 2,
        _ => 1,
    }
}

fn check_n(cli: &Cli, n: MarkedCount) -> Result<()> {
    match cli.n {
        Some(want) if want != n.get() => Err(Error::MismatchedN(n.get(), want).into()),
        _ => Ok(()),
    }
}

fn required_n(cli: &Cli) -> Result<MarkedCount> {
    let n = cli.n.ok_or_else(|| anyhow!("this command needs -n"))?;
    Ok(MarkedCount::new(n)?)
}

fn with_fields(mut v: Value, extra: Value) -> Value {
    if let (Value::Object(m), Value::Object(e)) = (&mut v, extra) {
        m.extend(e);
    }
    v
}

fn expression_payload(e: &FCurveExpression) -> Result<Value> {
    Ok(with_fields(
        serde_json::to_value(e)?,
        json!({
            "deficiency": e.deficiency(),
            "positive_terms": e.positive_terms().count(),
            "negative_terms": e.negative_terms().count(),
        }),
    ))
}

fn load_class(cli: &Cli, path: &std::path::Path) -> Result<CurveClass> {
    let c: CurveClass = read_json(path)?;
    check_n(cli, c.n())?;
    Ok(c)
}

fn load_expression(cli: &Cli, path: &std::path::Path) -> Result<FCurveExpression> {
    let e: FCurveExpression = read_json(path)?;
    check_n(cli, e.n())?;
    Ok(e)
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Class { kind, generators } => {
            let n = required_n(cli)?;
            let class = match kind {
                Kind::Cyclic => {
                    let [g] = generators.as_slice() else {
                        return Err(anyhow!("a cyclic action takes exactly one generator"));
                    };
                    cyclic_curve_class(&CyclicAction::parse(n, g)?)
                }
                Kind::Dihedral => {
                    let gens: Vec<&str> = generators.iter().map(String::as_str).collect();
                    dihedral_curve_class(&DihedralAction::parse(n, &gens)?)
                }
            };
            Ok(Outcome::ok(with_fields(
                serde_json::to_value(&class)?,
                json!({
                    "scalars": {
                        "k": k_intersection(&class).to_string(),
                        "psi": psi_intersection(&class).to_string(),
                        "kollar_bound": kollar_bound(&class).to_string(),
                    }
                }),
            )))
        }
        Command::Expand { input } => {
            let class = load_class(cli, input)?;
            Ok(Outcome::ok(expression_payload(&expand_in_dual_basis(&class))?))
        }
        Command::SeekEffective { input, max_level, node_budget, no_restart } => {
            let e = load_expression(cli, input)?;
            let cfg = SearchConfig {
                max_level: *max_level,
                node_budget: *node_budget,
                restart_on_improvement: !no_restart,
            };
            match seek_effective_expression(&e, &cfg) {
                Ok(s) => Ok(Outcome::ok(with_fields(
                    expression_payload(&s.expression)?,
                    json!({ "moves": s.moves, "stats": s.stats }),
                ))),
                Err(SeekError::BudgetExhausted { best, moves, stats, reason, deficiency }) => Ok(Outcome {
                    payload: with_fields(expression_payload(&best)?, json!({ "moves": moves, "stats": stats })),
                    code: 2,
                    note: Some(format!("search stopped ({reason}); best deficiency {deficiency} written")),
                }),
            }
        }
        Command::Verify { expr, class } => {
            let e = load_expression(cli, expr)?;
            let c = load_class(cli, class)?;
            let equal = verify_expression(&e, &c);
            Ok(Outcome {
                payload: json!({
                    "class_equal": equal,
                    "effective": e.is_effective(),
                    "deficiency": e.deficiency(),
                }),
                code: if equal { 0 } else { 1 },
                note: (!equal).then(|| "class mismatch".to_string()),
            })
        }
        Command::KeelRelations { first, second } => {
            let n = required_n(cli)?;
            let f = FCurve::parse(first, n)?;
            let g = FCurve::parse(second, n)?;
            let rels: Vec<Value> = keel_relations_containing(&f, &g)
                .iter()
                .map(|r| {
                    Ok(with_fields(
                        serde_json::to_value(r)?,
                        json!({ "terms": serde_json::to_value(r.expression())?["terms"] }),
                    ))
                })
                .collect::<Result<_>>()?;
            Ok(Outcome::ok(json!({ "n": n.get(), "relations": rels })))
        }
        Command::Degenerate { family, max_germ_order } => {
            let fam = ConfigurationFamily::from_json(&read_text(family)?)
                .with_context(|| format!("loading {}", family.display()))?;
            check_n(cli, fam.n)?;
            let cfg = DegenerationConfig { max_germ_order: *max_germ_order };
            let cycle = degenerate(&fam, &cfg)?;
            Ok(Outcome::ok(serde_json::to_value(&cycle)?))
        }
        Command::Lift { cycle, class } => {
            let cyc = LMCycle::from_json(&read_text(cycle)?).with_context(|| format!("loading {}", cycle.display()))?;
            check_n(cli, cyc.n)?;
            let c = load_class(cli, class)?;
            let e = lift_with_proper_transform(&cyc, cyc.heavy, &c)?;
            Ok(Outcome::ok(expression_payload(&e)?))
        }
        Command::Stabilizer { class, node_budget } => {
            let c = load_class(cli, class)?;
            let cfg = StabilizerConfig {
                node_budget: *node_budget,
                ..StabilizerConfig::default()
            };
            let order = stabilizer_order(&c, &cfg)?;
            Ok(Outcome::ok(json!({ "n": c.n().get(), "order": order })))
        }
    }
}
