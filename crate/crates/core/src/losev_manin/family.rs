//! One-parameter configuration families `z ↦ (x_i(z))` in `L̄_n` and their
//! special points.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Deserialize;

use super::field::{CyclotomicField, CyclotomicRational, Poly, ZPoint};
use super::partition::{HeavyPair, OrderedPartition};
use crate::classes::{LabelSet, MarkedCount};
use crate::error::{Error, Result};

/// Light coordinates over `Q(ζ_m)(z)`, with the heavy points pinned at `0`
/// and `∞`.
#[derive(Clone, Debug)]
pub struct ConfigurationFamily {
    pub n: MarkedCount,
    pub heavy: HeavyPair,
    pub field: CyclotomicField,
    pub coords: BTreeMap<usize, CyclotomicRational>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum JsonRational {
    Int(i64),
    Text(String),
}

impl JsonRational {
    fn value(&self) -> Result<BigRational> {
        match self {
            JsonRational::Int(k) => Ok(BigRational::from_integer((*k).into())),
            JsonRational::Text(s) => parse_rational(s),
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    let int = |t: &str| t.trim().parse::<BigInt>().map_err(|_| bad());
    match s.split_once('/') {
        Some((p, q)) => {
            let q = int(q)?;
            if q == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(int(p)?, q))
        }
        None => Ok(BigRational::from_integer(int(s)?)),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonCoordinate {
    label: usize,
    numerator: Vec<Vec<JsonRational>>,
    denominator: Vec<Vec<JsonRational>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonFamily {
    n: usize,
    m: u32,
    heavy: [usize; 2],
    coordinates: Vec<JsonCoordinate>,
}

fn poly_from_json(field: &CyclotomicField, c: &[Vec<JsonRational>]) -> Result<Poly> {
    let coeffs = c
        .iter()
        .map(|v| Ok(field.from_power_basis(v.iter().map(JsonRational::value).collect::<Result<_>>()?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(field, coeffs))
}

impl ConfigurationFamily {
    pub fn new(
        n: MarkedCount,
        heavy: HeavyPair,
        field: CyclotomicField,
        coords: BTreeMap<usize, CyclotomicRational>,
    ) -> Result<Self> {
        let fam = ConfigurationFamily { n, heavy, field, coords };
        fam.validate()?;
        Ok(fam)
    }

    /// Reads the JSON family format. Coefficients are listed by increasing
    /// power of `z`; each is a list over `1, ζ, ζ^2, …` of integers or
    /// `"p/q"` strings.
    pub fn from_json(text: &str) -> Result<Self> {
        let j: JsonFamily = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let n = MarkedCount::new(j.n)?;
        let heavy = HeavyPair::new(j.heavy[0], j.heavy[1], n)?;
        let field = CyclotomicField::new(j.m)?;
        let mut coords = BTreeMap::new();
        for c in &j.coordinates {
            let x = CyclotomicRational::new(poly_from_json(&field, &c.numerator)?, poly_from_json(&field, &c.denominator)?)?;
            if coords.insert(c.label, x).is_some() {
                return Err(Error::Parse(format!("label {} listed twice", c.label)));
            }
        }
        ConfigurationFamily::new(n, heavy, field, coords)
    }

    pub fn lights(&self) -> LabelSet {
        self.heavy.lights(self.n)
    }

    fn validate(&self) -> Result<()> {
        let given: LabelSet = self.coords.keys().copied().collect();
        if given != self.lights() {
            return Err(Error::DegenerateFamily(format!(
                "coordinates given for {given}, light labels are {}",
                self.lights()
            )));
        }
        for (&k, x) in &self.coords {
            if x.field() != &self.field {
                return Err(Error::DegenerateFamily(format!("x_{k} lives over a different field")));
            }
            if x.is_zero() {
                return Err(Error::DegenerateFamily(format!("x_{k} is identically 0")));
            }
        }
        let v: Vec<(&usize, &CyclotomicRational)> = self.coords.iter().collect();
        for (a, (k, x)) in v.iter().enumerate() {
            for (l, y) in &v[a + 1..] {
                if x.sub(y).is_zero() {
                    return Err(Error::DegenerateFamily(format!("x_{k} and x_{l} coincide identically")));
                }
            }
        }
        Ok(())
    }

    /// Boundary points of the curve: every zero or pole of a coordinate and
    /// `∞`, kept when the limit type has more than one block.
    pub fn special_points(&self) -> Result<Vec<(ZPoint, OrderedPartition)>> {
        let mut cands: Vec<ZPoint> = Vec::new();
        for x in self.coords.values() {
            cands.extend(x.special_values()?.into_iter().map(ZPoint::Finite));
        }
        cands.push(ZPoint::Infinity);
        cands.sort();
        cands.dedup();
        let mut out = Vec::new();
        for p in cands {
            let orders: BTreeMap<usize, i64> = self.coords.iter().map(|(&k, x)| (k, x.order_at(&p).0)).collect();
            let blocks = group_by_order(self.lights(), &orders);
            if blocks.len() > 1 {
                out.push((p, OrderedPartition::from_blocks_unchecked(blocks)));
            }
        }
        Ok(out)
    }
}

/// Splits `set` by `orders`, highest order (nearest `0`) first.
pub(crate) fn group_by_order(set: LabelSet, orders: &BTreeMap<usize, i64>) -> Vec<LabelSet> {
    let mut by: BTreeMap<std::cmp::Reverse<i64>, LabelSet> = BTreeMap::new();
    for k in set.iter() {
        by.entry(std::cmp::Reverse(orders[&k])).or_default().insert(k);
    }
    by.into_values().collect()
}
