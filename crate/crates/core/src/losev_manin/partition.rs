//! Ordered partitions of the light labels and the dictionary between
//! one-dimensional torus orbits of `L̄_n` and F-curves upstairs.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classes::labels::{label_str, parse_label_run};
use crate::classes::{FCurve, LabelSet, MarkedCount};
use crate::error::{Error, Result};

/// The two weight-one points: `zero` sits at `0`, `infinity` at `∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "[usize; 2]", into = "[usize; 2]")]
pub struct HeavyPair {
    pub zero: usize,
    pub infinity: usize,
}

impl HeavyPair {
    pub fn new(zero: usize, infinity: usize, n: MarkedCount) -> Result<Self> {
        for l in [zero, infinity] {
            if l == 0 || l > n.get() {
                return Err(Error::LabelOutOfRange { label: l, n: n.get() });
            }
        }
        if zero == infinity {
            return Err(Error::InvalidPartition(format!("heavy labels must differ, got {zero} twice")));
        }
        Ok(HeavyPair { zero, infinity })
    }

    pub fn labels(self) -> LabelSet {
        LabelSet::from_iter([self.zero, self.infinity])
    }

    pub fn lights(self, n: MarkedCount) -> LabelSet {
        n.full().difference(self.labels())
    }
}

impl TryFrom<[usize; 2]> for HeavyPair {
    type Error = String;
    fn try_from(v: [usize; 2]) -> std::result::Result<Self, String> {
        if v[0] == v[1] || v[0] == 0 || v[1] == 0 {
            return Err(format!("invalid heavy pair {v:?}"));
        }
        Ok(HeavyPair { zero: v[0], infinity: v[1] })
    }
}

impl From<HeavyPair> for [usize; 2] {
    fn from(h: HeavyPair) -> Self {
        [h.zero, h.infinity]
    }
}

/// Blocks listed from the `0` end of the chain to the `∞` end.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OrderedPartition {
    blocks: Vec<LabelSet>,
}

impl OrderedPartition {
    /// Checks that `blocks` are nonempty, disjoint and cover `lights`.
    pub fn new(blocks: Vec<LabelSet>, lights: LabelSet) -> Result<Self> {
        let mut seen = LabelSet::EMPTY;
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            if !b.is_disjoint(seen) {
                return Err(Error::InvalidPartition(format!("block {b} overlaps an earlier block")));
            }
            seen = seen.union(*b);
        }
        if seen != lights {
            return Err(Error::InvalidPartition(format!("blocks cover {seen}, expected {lights}")));
        }
        Ok(OrderedPartition { blocks })
    }

    pub(crate) fn from_blocks_unchecked(blocks: Vec<LabelSet>) -> Self {
        OrderedPartition { blocks }
    }

    /// Parses `2|15|4|7|3|6`; `a`, `b`, `c` stand for 10, 11, 12.
    pub fn parse(s: &str, lights: LabelSet) -> Result<Self> {
        let blocks = s
            .trim()
            .split('|')
            .map(|b| parse_label_run(b).map(|v| v.into_iter().collect()))
            .collect::<Result<Vec<LabelSet>>>()?;
        OrderedPartition::new(blocks, lights)
    }

    pub fn blocks(&self) -> &[LabelSet] {
        &self.blocks
    }

    pub fn labels(&self) -> LabelSet {
        self.blocks.iter().fold(LabelSet::EMPTY, |a, b| a.union(*b))
    }

    /// Index of the block holding `label`.
    pub fn block_of(&self, label: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(label))
    }

    /// Dimension of the torus orbit: `Σ (|B| - 1)`.
    pub fn dimension(&self) -> usize {
        self.blocks.iter().map(|b| b.len() - 1).sum()
    }

    /// The unique doubleton when every other block is a singleton.
    pub fn doubleton(&self) -> Option<(usize, LabelSet)> {
        if self.dimension() != 1 {
            return None;
        }
        self.blocks.iter().position(|b| b.len() == 2).map(|p| (p, self.blocks[p]))
    }

    /// Splits `label` off its block, on the `0` side.
    pub fn split_off(&self, label: usize) -> OrderedPartition {
        let Some(p) = self.block_of(label) else { return self.clone() };
        let b = self.blocks[p];
        if b.len() == 1 {
            return self.clone();
        }
        let mut blocks = self.blocks.clone();
        blocks.splice(p..=p, [LabelSet::singleton(label), b.difference(LabelSet::singleton(label))]);
        OrderedPartition { blocks }
    }
}

impl fmt::Display for OrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.labels().max_label().is_some_and(|m| m >= 10) && self.labels().max_label() <= Some(12);
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|l| label_str(l, compact)).collect::<String>())
            .collect();
        f.write_str(&parts.join("|"))
    }
}

impl fmt::Debug for OrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The F-curve whose image in `L̄_n` is the torus curve of type `t`.
pub fn torus_curve_to_fcurve(t: &OrderedPartition, h: HeavyPair, n: MarkedCount) -> Result<FCurve> {
    let (p, pair) = t.doubleton().ok_or_else(|| Error::NotOneDimensional(t.to_string()))?;
    let v = pair.to_vec();
    let before = t.blocks[..p].iter().fold(LabelSet::singleton(h.zero), |a, b| a.union(*b));
    let after = t.blocks[p + 1..].iter().fold(LabelSet::singleton(h.infinity), |a, b| a.union(*b));
    FCurve::new([before, LabelSet::singleton(v[0]), LabelSet::singleton(v[1]), after], n)
}

/// Image of an F-curve under the reduction to `L̄_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pushforward {
    TorusCurve(OrderedPartition),
    Contracted,
    NonToric,
}

/// Classifies the image of `f`. For a torus curve the singletons on each
/// side of the doubleton are listed in increasing label order.
pub fn pushforward_fcurve(f: &FCurve, h: HeavyPair) -> Pushforward {
    let b = f.blocks();
    let iz = f.block_of(h.zero);
    let ii = f.block_of(h.infinity);
    if iz == ii {
        return Pushforward::Contracted;
    }
    let others: Vec<usize> = (0..4).filter(|&k| k != iz && k != ii).collect();
    if others.iter().any(|&k| b[k].len() != 1) {
        return Pushforward::NonToric;
    }
    let pair = b[others[0]].union(b[others[1]]);
    let mut blocks: Vec<LabelSet> = b[iz]
        .difference(LabelSet::singleton(h.zero))
        .iter()
        .map(LabelSet::singleton)
        .collect();
    blocks.push(pair);
    blocks.extend(b[ii].difference(LabelSet::singleton(h.infinity)).iter().map(LabelSet::singleton));
    Pushforward::TorusCurve(OrderedPartition { blocks })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nn(n: usize) -> MarkedCount {
        MarkedCount::new(n).unwrap()
    }

    fn h89() -> HeavyPair {
        HeavyPair::new(8, 9, nn(9)).unwrap()
    }

    fn lights9() -> LabelSet {
        h89().lights(nn(9))
    }

    #[test]
    fn dictionary_examples() {
        let t = OrderedPartition::parse("2|15|4|7|3|6", lights9()).unwrap();
        let f = torus_curve_to_fcurve(&t, h89(), nn(9)).unwrap();
        assert_eq!(f, FCurve::parse("F{82|1|5|34679}", nn(9)).unwrap());
        let t = OrderedPartition::parse("1|2|5|4|37|6", lights9()).unwrap();
        let f = torus_curve_to_fcurve(&t, h89(), nn(9)).unwrap();
        assert_eq!(f, FCurve::parse("F{81245|3|7|69}", nn(9)).unwrap());
        let t = OrderedPartition::parse("12|34|5|6|7", lights9()).unwrap();
        assert!(matches!(torus_curve_to_fcurve(&t, h89(), nn(9)), Err(Error::NotOneDimensional(_))));
    }

    #[test]
    fn pushforward_cases() {
        let f = FCurve::parse("F{82|1|5|34679}", nn(9)).unwrap();
        let t = OrderedPartition::parse("2|15|3|4|6|7", lights9()).unwrap();
        assert_eq!(pushforward_fcurve(&f, h89()), Pushforward::TorusCurve(t.clone()));
        assert_eq!(torus_curve_to_fcurve(&t, h89(), nn(9)).unwrap(), f);
        let f = FCurve::parse("F{8912|3|4|567}", nn(9)).unwrap();
        assert_eq!(pushforward_fcurve(&f, h89()), Pushforward::Contracted);
        let f = FCurve::parse("F{8|12|34|5679}", nn(9)).unwrap();
        assert_eq!(pushforward_fcurve(&f, h89()), Pushforward::NonToric);
    }

    #[test]
    fn partition_checks() {
        assert!(OrderedPartition::parse("12|34|5|6", lights9()).is_err());
        assert!(OrderedPartition::parse("12|23|4|5|6|7", lights9()).is_err());
        let t = OrderedPartition::parse("1234567", lights9()).unwrap();
        assert_eq!(t.split_off(3).to_string(), "3|124567");
        assert_eq!(t.split_off(3).split_off(3), t.split_off(3));
        let lights12 = HeavyPair::new(8, 9, nn(12)).unwrap().lights(nn(12));
        let t = OrderedPartition::parse("12|3|4|5|6|7|a|b|c", lights12).unwrap();
        assert_eq!(t.to_string(), "12|3|4|5|6|7|a|b|c");
        assert_eq!(serde_json::to_string(&t).unwrap().len(), "[[1,2],[3],[4],[5],[6],[7],[10],[11],[12]]".len());
    }
}
