//! Numerical curve classes and rational divisor classes.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::divisor::{all_divisors, canonical_divisor_rep, BoundaryDivisor};
use super::labels::{parse_label_run, LabelSet, MarkedCount};
use crate::error::{Error, Result};

/// The intersection numbers `C · D_I` for every canonical boundary divisor.
///
/// Stored densely, indexed by the bitmask of the canonical representative.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CurveClass {
    n: MarkedCount,
    values: Vec<i64>,
}

impl CurveClass {
    pub fn zero(n: MarkedCount) -> Self {
        CurveClass {
            n,
            values: vec![0; 1 << (n.get() - 1)],
        }
    }

    #[inline]
    pub fn n(&self) -> MarkedCount {
        self.n
    }

    #[inline]
    pub fn get(&self, d: BoundaryDivisor) -> i64 {
        self.values[d.index()]
    }

    pub fn set(&mut self, d: BoundaryDivisor, v: i64) {
        self.values[d.index()] = v;
    }

    /// Value at `D_I` for any representative `I`.
    pub fn value_of(&self, i: LabelSet) -> Result<i64> {
        Ok(self.get(canonical_divisor_rep(i, self.n)?))
    }

    #[inline]
    fn rep_index(&self, s: LabelSet) -> usize {
        let rep = if s.contains(self.n.get()) { s.complement(self.n) } else { s };
        rep.bits() as usize
    }

    /// Value at `D_s` for a subset of valid size, without canonicalizing.
    #[inline]
    pub(crate) fn at_subset(&self, s: LabelSet) -> i64 {
        self.values[self.rep_index(s)]
    }

    /// Adds `c` at `D_s`; `s` must have a valid size.
    #[inline]
    pub(crate) fn add_at_subset(&mut self, s: LabelSet, c: i64) {
        let i = self.rep_index(s);
        self.values[i] += c;
    }

    pub(crate) fn set_at_subset(&mut self, s: LabelSet, v: i64) {
        let i = self.rep_index(s);
        self.values[i] = v;
    }

    /// `(D, C · D)` over all divisors in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (BoundaryDivisor, i64)> + '_ {
        all_divisors(self.n).into_iter().map(|d| (d, self.get(d)))
    }

    pub fn nonzero(&self) -> Vec<(BoundaryDivisor, i64)> {
        self.iter().filter(|&(_, v)| v != 0).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// `C · D_k`, summing over divisors of level `k`.
    pub fn level_sum(&self, k: usize) -> i64 {
        self.iter().filter(|(d, _)| d.level() == k).map(|(_, v)| v).sum()
    }

    /// The pairing with a rational divisor class.
    pub fn pair(&self, dc: &DivisorClass) -> BigRational {
        assert_eq!(dc.n, self.n, "classes on different moduli spaces");
        dc.coeffs
            .iter()
            .map(|(&d, q)| q * BigRational::from_integer(self.get(d).into()))
            .fold(BigRational::zero(), |a, b| a + b)
    }

    pub fn add(&self, other: &CurveClass) -> CurveClass {
        assert_eq!(self.n, other.n, "classes on different moduli spaces");
        CurveClass {
            n: self.n,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scaled(&self, k: i64) -> CurveClass {
        CurveClass {
            n: self.n,
            values: self.values.iter().map(|v| v * k).collect(),
        }
    }

    /// Parses lines of the form `{1,3} 1` or `13 1`.
    pub fn parse(s: &str, n: MarkedCount) -> Result<Self> {
        let mut c = CurveClass::zero(n);
        for line in s.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (set_part, val_part) = match line.rfind('}') {
                Some(p) => (&line[..=p], &line[p + 1..]),
                None => line
                    .split_once(char::is_whitespace)
                    .ok_or_else(|| Error::Parse(format!("bad class line {line:?}")))?,
            };
            let labels = parse_label_run(set_part.trim().trim_start_matches('D').trim_matches(|c| c == '{' || c == '}'))?;
            let d = canonical_divisor_rep(LabelSet::from_labels(labels, n)?, n)?;
            let v = val_part
                .trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad value on line {line:?}")))?;
            c.set(d, v);
        }
        Ok(c)
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, v) in self.nonzero() {
            writeln!(f, "{} {v}", d.rep())?;
        }
        Ok(())
    }
}

impl fmt::Debug for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .nonzero()
            .iter()
            .map(|(d, v)| format!("{}:{v}", d.rep()))
            .collect();
        write!(f, "CurveClass[n={}]({})", self.n, parts.join(" "))
    }
}

#[derive(Serialize, Deserialize)]
struct PairingRepr {
    divisor: LabelSet,
    value: i64,
}

#[derive(Serialize, Deserialize)]
struct ClassRepr {
    n: MarkedCount,
    pairings: Vec<PairingRepr>,
}

/// Only nonzero pairings are written; missing entries read back as zero.
impl Serialize for CurveClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ClassRepr {
            n: self.n,
            pairings: self
                .nonzero()
                .into_iter()
                .map(|(d, value)| PairingRepr { divisor: d.rep(), value })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CurveClass {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = ClassRepr::deserialize(d)?;
        let mut c = CurveClass::zero(r.n);
        let mut seen = std::collections::HashSet::new();
        for p in r.pairings {
            let dv = canonical_divisor_rep(p.divisor, r.n).map_err(D::Error::custom)?;
            if !seen.insert(dv) {
                return Err(D::Error::custom(format!("divisor {dv} listed twice")));
            }
            c.set(dv, p.value);
        }
        Ok(c)
    }
}

/// A rational combination of boundary divisors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DivisorClass {
    n: MarkedCount,
    coeffs: BTreeMap<BoundaryDivisor, BigRational>,
}

impl DivisorClass {
    pub fn zero(n: MarkedCount) -> Self {
        DivisorClass {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> MarkedCount {
        self.n
    }

    pub fn coefficient(&self, d: BoundaryDivisor) -> BigRational {
        self.coeffs.get(&d).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, d: BoundaryDivisor, q: BigRational) {
        let slot = self.coeffs.entry(d).or_insert_with(BigRational::zero);
        *slot += q;
        if slot.is_zero() {
            self.coeffs.remove(&d);
        }
    }

    pub fn add_scaled(&mut self, other: &DivisorClass, k: &BigRational) {
        for (&d, q) in &other.coeffs {
            self.add_term(d, q * k);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (BoundaryDivisor, &BigRational)> {
        self.coeffs.iter().map(|(&d, q)| (d, q))
    }
}

/// `D_k`: the sum of all boundary divisors of level `k`, each once.
pub fn level_divisor(n: MarkedCount, k: usize) -> DivisorClass {
    let mut dc = DivisorClass::zero(n);
    for d in all_divisors(n).into_iter().filter(|d| d.level() == k) {
        dc.add_term(d, BigRational::one());
    }
    dc
}

/// The total boundary `D = Σ_I D_I`.
pub fn total_boundary(n: MarkedCount) -> DivisorClass {
    let mut dc = DivisorClass::zero(n);
    for d in all_divisors(n) {
        dc.add_term(d, BigRational::one());
    }
    dc
}

/// `K = Σ_k (-2 + k(n-k)/(n-1)) D_k`.
pub fn canonical_divisor(n: MarkedCount) -> DivisorClass {
    let nn = n.get() as i64;
    let mut dc = DivisorClass::zero(n);
    for d in all_divisors(n) {
        let k = d.level() as i64;
        let q = BigRational::new((k * (nn - k) - 2 * (nn - 1)).into(), (nn - 1).into());
        dc.add_term(d, q);
    }
    dc
}

/// `ψ = K + 2D`.
pub fn psi_divisor(n: MarkedCount) -> DivisorClass {
    let mut dc = canonical_divisor(n);
    dc.add_scaled(&total_boundary(n), &BigRational::from_integer(2.into()));
    dc
}
