//! Keel relations: numerically trivial four-term F-curve sums.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::act::Act;
use super::expr::FCurveExpression;
use super::fcurve::FCurve;
use super::labels::{LabelSet, MarkedCount};
use super::perm::Permutation;
use crate::error::{Error, Result};

/// An ordered 5-block partition `(I1, I2, I3, I4, I5)` of `[n]`.
///
/// Its expression is
/// `F(I1,I2,I3,I4∪I5) + F(I1∪I2,I3,I4,I5) - F(I1,I4,I3,I2∪I5) - F(I1∪I4,I3,I2,I5)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KeelRelation {
    parts: [LabelSet; 5],
    n: MarkedCount,
}

impl KeelRelation {
    pub fn new(parts: [LabelSet; 5], n: MarkedCount) -> Result<Self> {
        let mut seen = LabelSet::EMPTY;
        for p in parts {
            if p.is_empty() {
                return Err(Error::InvalidPartition("empty part in Keel relation".into()));
            }
            if !p.is_disjoint(seen) {
                return Err(Error::InvalidPartition(format!("part {p} overlaps another")));
            }
            seen = seen.union(p);
        }
        if seen != n.full() {
            return Err(Error::InvalidPartition(format!("parts cover {seen}, expected 1..={n}")));
        }
        Ok(KeelRelation { parts, n })
    }

    pub(crate) fn from_parts_unchecked(parts: [LabelSet; 5], n: MarkedCount) -> Self {
        KeelRelation { parts, n }
    }

    pub fn parts(&self) -> &[LabelSet; 5] {
        &self.parts
    }

    pub fn n(&self) -> MarkedCount {
        self.n
    }

    /// The positive and negative F-curves, in displayed order.
    pub fn terms(&self) -> ([FCurve; 2], [FCurve; 2]) {
        let [i1, i2, i3, i4, i5] = self.parts;
        let f = |b: [LabelSet; 4]| FCurve::from_blocks_unchecked(b, self.n);
        (
            [f([i1, i2, i3, i4.union(i5)]), f([i1.union(i2), i3, i4, i5])],
            [f([i1, i4, i3, i2.union(i5)]), f([i1.union(i4), i3, i2, i5])],
        )
    }

    /// The same relation with the opposite sign.
    pub fn negated(&self) -> KeelRelation {
        let [i1, i2, i3, i4, i5] = self.parts;
        KeelRelation {
            parts: [i1, i4, i3, i2, i5],
            n: self.n,
        }
    }

    pub fn expression(&self) -> FCurveExpression {
        let (pos, neg) = self.terms();
        let mut e = FCurveExpression::zero(self.n);
        for f in pos {
            e.add_term(f, 1);
        }
        for f in neg {
            e.add_term(f, -1);
        }
        e
    }

    /// Parses five `|`-separated label runs, e.g. `1|3|2|8|45679`.
    pub fn parse(s: &str, n: MarkedCount) -> Result<Self> {
        let t = s.trim().trim_start_matches('R').trim_matches(|c| c == '(' || c == ')');
        let parts: Vec<&str> = t.split('|').collect();
        if parts.len() != 5 {
            return Err(Error::Parse(format!("Keel relation {s:?} needs five parts")));
        }
        let mut out = [LabelSet::EMPTY; 5];
        for (k, p) in parts.iter().enumerate() {
            out[k] = LabelSet::from_labels(super::labels::parse_label_run(p)?, n)?;
        }
        KeelRelation::new(out, n)
    }
}

pub fn keel_relation_expression(r: &KeelRelation) -> FCurveExpression {
    r.expression()
}

impl Act for KeelRelation {
    fn act(&self, g: &Permutation) -> Self {
        KeelRelation {
            parts: self.parts.map(|p| g.apply_set(p)),
            n: self.n,
        }
    }
}

impl fmt::Display for KeelRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("R(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str("|")?;
            }
            let labels: Vec<String> = p.iter().map(|l| l.to_string()).collect();
            f.write_str(&labels.join(","))?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for KeelRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct KeelRepr {
    n: MarkedCount,
    parts: [LabelSet; 5],
}

impl Serialize for KeelRelation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        KeelRepr {
            n: self.n,
            parts: self.parts,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for KeelRelation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = KeelRepr::deserialize(d)?;
        KeelRelation::new(r.parts, r.n).map_err(serde::de::Error::custom)
    }
}

/// Calls `f` on every ordered 5-block partition of `[n]`.
pub fn for_each_keel_relation<F: FnMut(KeelRelation)>(n: MarkedCount, mut f: F) {
    let nn = n.get();
    let mut assign = vec![0usize; nn];
    loop {
        let mut parts = [LabelSet::EMPTY; 5];
        for (i, &a) in assign.iter().enumerate() {
            parts[a].insert(i + 1);
        }
        if parts.iter().all(|p| !p.is_empty()) {
            f(KeelRelation { parts, n });
        }
        let mut k = 0;
        loop {
            if k == nn {
                return;
            }
            assign[k] += 1;
            if assign[k] < 5 {
                break;
            }
            assign[k] = 0;
            k += 1;
        }
    }
}
