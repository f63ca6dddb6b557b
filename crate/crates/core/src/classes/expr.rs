//! Integer combinations of F-curves.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::class::CurveClass;
use super::fcurve::FCurve;
use super::labels::MarkedCount;
use crate::error::{Error, Result};

/// A finite formal sum `Σ c_F F` with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FCurveExpression {
    n: MarkedCount,
    terms: BTreeMap<FCurve, i64>,
}

impl FCurveExpression {
    pub fn zero(n: MarkedCount) -> Self {
        FCurveExpression {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn single(f: FCurve) -> Self {
        let mut e = Self::zero(f.n());
        e.add_term(f, 1);
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (FCurve, i64)>>(n: MarkedCount, terms: I) -> Result<Self> {
        let mut e = Self::zero(n);
        for (f, c) in terms {
            if f.n() != n {
                return Err(Error::MismatchedN(f.n().get(), n.get()));
            }
            e.add_term(f, c);
        }
        Ok(e)
    }

    #[inline]
    pub fn n(&self) -> MarkedCount {
        self.n
    }

    pub fn add_term(&mut self, f: FCurve, c: i64) {
        debug_assert_eq!(f.n(), self.n);
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(f).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&f);
        }
    }

    pub fn add_scaled(&mut self, other: &FCurveExpression, k: i64) {
        for (&f, &c) in &other.terms {
            self.add_term(f, k * c);
        }
    }

    pub fn scaled(&self, k: i64) -> FCurveExpression {
        let mut e = Self::zero(self.n);
        e.add_scaled(self, k);
        e
    }

    pub fn coefficient(&self, f: &FCurve) -> i64 {
        self.terms.get(f).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> &BTreeMap<FCurve, i64> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (FCurve, i64)> + '_ {
        self.terms.iter().map(|(&f, &c)| (f, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn positive_terms(&self) -> impl Iterator<Item = (FCurve, i64)> + '_ {
        self.iter().filter(|&(_, c)| c > 0)
    }

    pub fn negative_terms(&self) -> impl Iterator<Item = (FCurve, i64)> + '_ {
        self.iter().filter(|&(_, c)| c < 0)
    }

    /// `m(E)`: the sum of the absolute values of the negative coefficients.
    pub fn deficiency(&self) -> u64 {
        self.negative_terms().map(|(_, c)| c.unsigned_abs()).sum()
    }

    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    /// The numerical class `D ↦ Σ c_F (D · F)`.
    pub fn class(&self) -> CurveClass {
        class_of_expression(self)
    }

    /// Parses signed lines such as `+2 F{1,2|3|4|5,6}`. Blank lines and lines
    /// starting with `#` are skipped; a missing coefficient means 1.
    pub fn parse(s: &str, n: MarkedCount) -> Result<Self> {
        let mut e = Self::zero(n);
        for line in s.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let pos = line
                .find(['F', '{'])
                .ok_or_else(|| Error::Parse(format!("no F-curve on line {line:?}")))?;
            let coeff = parse_coefficient(line[..pos].trim())?;
            e.add_term(FCurve::parse(&line[pos..], n)?, coeff);
        }
        Ok(e)
    }
}

fn parse_coefficient(s: &str) -> Result<i64> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
    match compact.as_str() {
        "" | "+" => Ok(1),
        "-" => Ok(-1),
        t => t
            .trim_start_matches('+')
            .parse::<i64>()
            .map_err(|_| Error::Parse(format!("bad coefficient {s:?}"))),
    }
}

/// `class_of(E)`: pairs `E` with every canonical boundary divisor.
pub fn class_of_expression(e: &FCurveExpression) -> CurveClass {
    let mut cls = CurveClass::zero(e.n);
    for (f, c) in e.iter() {
        for u in f.positive_divisors() {
            cls.add_at_subset(u, c);
        }
        for b in f.negative_divisors() {
            cls.add_at_subset(b, -c);
        }
    }
    cls
}

impl fmt::Display for FCurveExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (fc, c) in self.iter() {
            writeln!(f, "{c:+} {fc}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FCurveExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(fc, c)| format!("{c:+} {fc}")).collect();
        write!(f, "[n={}] {}", self.n, parts.join(" "))
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    coefficient: i64,
    fcurve: FCurve,
}

#[derive(Serialize, Deserialize)]
struct ExprRepr {
    n: MarkedCount,
    terms: Vec<TermRepr>,
}

impl Serialize for FCurveExpression {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ExprRepr {
            n: self.n,
            terms: self
                .iter()
                .map(|(fcurve, coefficient)| TermRepr { coefficient, fcurve })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FCurveExpression {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = ExprRepr::deserialize(d)?;
        FCurveExpression::from_terms(r.n, r.terms.into_iter().map(|t| (t.fcurve, t.coefficient)))
            .map_err(serde::de::Error::custom)
    }
}
