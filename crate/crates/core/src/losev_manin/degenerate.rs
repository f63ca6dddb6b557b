//! Limits under the one-parameter subgroups `T_i` and the full toric
//! degeneration of a configuration family.

use std::collections::BTreeMap;

use log::{debug, info};
use serde::{Deserialize, Serialize};

use super::family::{group_by_order, ConfigurationFamily};
use super::field::{Cyc, CyclotomicRational, ZPoint};
use super::partition::{HeavyPair, OrderedPartition};
use crate::classes::{LabelSet, MarkedCount};
use crate::error::{Error, Result};

/// The parameterization of a component: light coordinates as functions of
/// its own parameter, read blockwise up to scaling.
#[derive(Clone, Debug)]
pub struct Residual {
    pub coords: BTreeMap<usize, CyclotomicRational>,
    /// Multiplicity carried over from the parent, before the degree of this
    /// parameterization is applied.
    pub weight: u64,
}

/// An irreducible curve of a limit cycle.
#[derive(Clone, Debug, Serialize)]
pub struct LMComponent {
    #[serde(rename = "type")]
    pub partition: OrderedPartition,
    pub multiplicity: u64,
    /// `None` for torus-fixed curves read back from JSON.
    #[serde(skip)]
    pub residual: Option<Residual>,
}

impl LMComponent {
    /// Builds a component from a parameterization; `None` when the map is
    /// constant.
    fn from_residual(partition: OrderedPartition, residual: Residual) -> Result<Option<Self>> {
        let deg = parametrization_degree(&partition, &residual.coords)?;
        if deg == 0 {
            return Ok(None);
        }
        Ok(Some(LMComponent {
            multiplicity: residual.weight * deg as u64,
            partition,
            residual: Some(residual),
        }))
    }
}

/// A formal sum of components on `L̄_n`, listed in construction order.
#[derive(Clone, Debug, Serialize)]
pub struct LMCycle {
    pub n: MarkedCount,
    pub heavy: HeavyPair,
    pub components: Vec<LMComponent>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonComponent {
    #[serde(rename = "type")]
    partition: Vec<LabelSet>,
    multiplicity: u64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonCycle {
    n: usize,
    heavy: [usize; 2],
    components: Vec<JsonComponent>,
}

impl LMCycle {
    pub fn lights(&self) -> LabelSet {
        self.heavy.lights(self.n)
    }

    /// Reads `{"n", "heavy", "components": [{"type", "multiplicity"}]}`.
    /// Components come back without parameterizations.
    pub fn from_json(text: &str) -> Result<Self> {
        let j: JsonCycle = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let n = MarkedCount::new(j.n)?;
        let heavy = HeavyPair::new(j.heavy[0], j.heavy[1], n)?;
        let lights = heavy.lights(n);
        let components = j
            .components
            .into_iter()
            .map(|c| {
                if c.multiplicity == 0 {
                    return Err(Error::Parse("component multiplicity must be positive".into()));
                }
                Ok(LMComponent {
                    partition: OrderedPartition::new(c.partition, lights)?,
                    multiplicity: c.multiplicity,
                    residual: None,
                })
            })
            .collect::<Result<_>>()?;
        Ok(LMCycle { n, heavy, components })
    }

    /// True when every component is a one-dimensional torus orbit closure.
    pub fn is_torus_fixed(&self) -> bool {
        self.components.iter().all(|c| c.partition.doubleton().is_some())
    }

    /// `(type, multiplicity)` pairs, sorted.
    pub fn summary(&self) -> Vec<(OrderedPartition, u64)> {
        let mut v: Vec<_> = self.components.iter().map(|c| (c.partition.clone(), c.multiplicity)).collect();
        v.sort();
        v
    }
}

/// Bounds for the germ search.
#[derive(Clone, Copy, Debug, Default)]
pub struct DegenerationConfig {
    /// Largest germ order tried at a special point; defaults to the number
    /// of light labels plus two.
    pub max_germ_order: Option<usize>,
}

/// Value at `p` in `P^1`, with `None` for `∞`.
fn value_at(x: &CyclotomicRational, p: &ZPoint) -> Option<Cyc> {
    match p {
        ZPoint::Finite(s) => x.eval(s),
        ZPoint::Infinity => {
            let (o, c) = x.order_at(p);
            match o {
                0 => Some(c),
                o if o > 0 => Some(x.field().zero()),
                _ => None,
            }
        }
    }
}

/// Degree of the map from the parameter line to the configurations it
/// describes, each block taken up to scaling. Zero when the map is constant.
pub fn parametrization_degree(t: &OrderedPartition, coords: &BTreeMap<usize, CyclotomicRational>) -> Result<usize> {
    let mut ratios = Vec::new();
    for b in t.blocks() {
        let mut it = b.iter();
        let k0 = it.next().expect("nonempty block");
        for k in it {
            let r = coords[&k].div(&coords[&k0])?;
            if !r.is_constant() {
                ratios.push(r);
            }
        }
    }
    if ratios.is_empty() {
        return Ok(0);
    }
    let field = ratios[0].field().clone();
    let mut best: Option<usize> = None;
    for s in [2, 3, 5, 7, 11, 13, 17] {
        let s1 = field.integer(s);
        let here: Vec<Option<Cyc>> = ratios.iter().map(|r| value_at(r, &ZPoint::Finite(s1.clone()))).collect();
        let at_inf = ratios.iter().map(|r| value_at(r, &ZPoint::Infinity));
        if at_inf.zip(&here).all(|(a, b)| &a == b) {
            continue;
        }
        let mut g: Option<super::field::Poly> = None;
        for r in &ratios {
            let (nv, dv) = (r.numerator().eval(&s1), r.denominator().eval(&s1));
            let f = r.numerator().scale(&dv).sub(&r.denominator().scale(&nv));
            g = Some(match g {
                None => f.monic(),
                Some(g) => g.gcd(&f),
            });
        }
        let d = g.and_then(|g| g.degree()).unwrap_or(0);
        best = Some(best.map_or(d, |b| b.min(d)));
    }
    best.ok_or_else(|| Error::DegenerateFamily("no usable sample point for the degree computation".into()))
}

/// Applies `lim_{t→0} t·(-)` for the subgroup `T_i` scaling the `i`-th
/// coordinate, to every component of `cycle`.
pub fn limit_step(cycle: &LMCycle, i: usize, cfg: &DegenerationConfig) -> Result<LMCycle> {
    if !cycle.lights().contains(i) {
        return Err(Error::LabelOutOfRange { label: i, n: cycle.n.get() });
    }
    let bound = cfg.max_germ_order.unwrap_or(cycle.lights().len() + 2);
    let mut out = Vec::new();
    for comp in &cycle.components {
        out.extend(limit_component(comp, i, bound)?);
    }
    Ok(LMCycle {
        n: cycle.n,
        heavy: cycle.heavy,
        components: out,
    })
}

fn limit_component(comp: &LMComponent, i: usize, bound: usize) -> Result<Vec<LMComponent>> {
    let t = &comp.partition;
    let p = t.block_of(i).expect("label covered by the partition");
    let block = t.blocks()[p];
    let Some(res) = comp.residual.as_ref().filter(|_| block.len() > 1) else {
        return Ok(vec![comp.clone()]);
    };
    let mut out = Vec::new();
    let main = t.split_off(i);
    match LMComponent::from_residual(main.clone(), res.clone())? {
        Some(c) => out.push(c),
        None => debug!("main limit {main} is a point; dropped"),
    }

    let mut cands: Vec<ZPoint> = Vec::new();
    for k in block.iter() {
        cands.extend(res.coords[&k].special_values()?.into_iter().map(ZPoint::Finite));
    }
    cands.push(ZPoint::Infinity);
    cands.sort();
    cands.dedup();

    for s0 in cands {
        let local: BTreeMap<usize, (i64, Cyc)> = res.coords.iter().map(|(&k, x)| (k, x.order_at(&s0))).collect();
        let orders: BTreeMap<usize, i64> = local.iter().map(|(&k, (a, _))| (k, *a)).collect();
        let ai = orders[&i];
        if block.iter().all(|k| orders[&k] == ai) {
            continue;
        }
        let mut ds: Vec<i64> = block.iter().map(|l| orders[&l] - ai).filter(|&d| d > 0).collect();
        ds.sort_unstable();
        ds.dedup();
        for d in ds {
            if d as usize > bound {
                return Err(Error::GermDepthExceeded(d as usize));
            }
            let mut shifted = orders.clone();
            *shifted.get_mut(&i).expect("i is light") += d;
            let mut blocks = Vec::new();
            for (q, b) in t.blocks().iter().enumerate() {
                let key = if q == p { &shifted } else { &orders };
                blocks.extend(group_by_order(*b, key));
            }
            let coords = local
                .iter()
                .map(|(&k, (a, c))| {
                    let x = if block.contains(k) {
                        CyclotomicRational::monomial(c.clone(), *a)
                    } else {
                        CyclotomicRational::constant(c.clone())
                    };
                    (k, x)
                })
                .collect();
            let nt = OrderedPartition::from_blocks_unchecked(blocks);
            let child = Residual { coords, weight: res.weight };
            match LMComponent::from_residual(nt.clone(), child)? {
                Some(c) => {
                    debug!("T_{i} germ at {s0}, order {d}: {nt} ({})", c.multiplicity);
                    out.push(c);
                }
                None => debug!("T_{i} germ at {s0}, order {d}: {nt} is a point; dropped"),
            }
        }
    }
    Ok(out)
}

/// The cycles `C^0, C^1, …`: the family itself, then its limits under
/// `T_i` for the light labels in increasing order, omitting the last.
pub fn degeneration_steps(fam: &ConfigurationFamily, cfg: &DegenerationConfig) -> Result<Vec<LMCycle>> {
    let lights = fam.lights();
    let start = LMComponent::from_residual(
        OrderedPartition::from_blocks_unchecked(vec![lights]),
        Residual {
            coords: fam.coords.clone(),
            weight: 1,
        },
    )?;
    let mut steps = vec![LMCycle {
        n: fam.n,
        heavy: fam.heavy,
        components: start.into_iter().collect(),
    }];
    let order = lights.to_vec();
    for &i in &order[..order.len().saturating_sub(1)] {
        let next = limit_step(steps.last().expect("nonempty"), i, cfg)?;
        info!("after T_{i}: {} components", next.components.len());
        steps.push(next);
    }
    Ok(steps)
}

/// The torus-fixed limit cycle of `fam`.
pub fn degenerate(fam: &ConfigurationFamily, cfg: &DegenerationConfig) -> Result<LMCycle> {
    Ok(degeneration_steps(fam, cfg)?.pop().expect("at least the starting cycle"))
}
