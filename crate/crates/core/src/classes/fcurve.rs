//! F-curves: one-dimensional boundary strata indexed by 4-block partitions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::divisor::BoundaryDivisor;
use super::labels::{parse_label_run, LabelSet, MarkedCount};
use crate::error::{Error, Result};

/// An unordered partition of `[n]` into four nonempty blocks, stored sorted by
/// least element.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FCurve {
    blocks: [LabelSet; 4],
    n: MarkedCount,
}

impl FCurve {
    pub fn new(blocks: [LabelSet; 4], n: MarkedCount) -> Result<Self> {
        let mut seen = LabelSet::EMPTY;
        for b in blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            if !b.is_disjoint(seen) {
                return Err(Error::InvalidPartition(format!("block {b} overlaps another")));
            }
            seen = seen.union(b);
        }
        if seen != n.full() {
            return Err(Error::InvalidPartition(format!(
                "blocks cover {seen}, expected 1..={n}"
            )));
        }
        Ok(Self::from_blocks_unchecked(blocks, n))
    }

    /// Sorts the blocks; the caller guarantees they partition `[n]`.
    pub(crate) fn from_blocks_unchecked(mut blocks: [LabelSet; 4], n: MarkedCount) -> Self {
        blocks.sort_unstable_by_key(|b| b.bits().trailing_zeros());
        FCurve { blocks, n }
    }

    #[inline]
    pub fn blocks(&self) -> &[LabelSet; 4] {
        &self.blocks
    }

    #[inline]
    pub fn n(&self) -> MarkedCount {
        self.n
    }

    /// The intersection number `D · F`.
    pub fn pair(&self, d: BoundaryDivisor) -> i64 {
        if self.blocks.iter().any(|&x| d.matches(x)) {
            -1
        } else if self.positive_divisors().iter().any(|&u| d.matches(u)) {
            1
        } else {
            0
        }
    }

    /// Divisors meeting `F` positively: the three 2+2 block unions.
    pub fn positive_divisors(&self) -> [LabelSet; 3] {
        let b = &self.blocks;
        [b[0].union(b[1]), b[0].union(b[2]), b[0].union(b[3])]
    }

    /// Divisors meeting `F` negatively: the blocks with at least two labels.
    pub fn negative_divisors(&self) -> impl Iterator<Item = LabelSet> + '_ {
        self.blocks.iter().copied().filter(|b| b.len() >= 2)
    }

    /// Degree of `F` under the forgetful map to `M_{0,S}`, `|S| = 4`.
    pub fn forgetful_degree(&self, s: LabelSet) -> Result<i64> {
        if s.len() != 4 {
            return Err(Error::BadSize(s.len()));
        }
        let separated = self.blocks.iter().all(|b| b.intersection(s).len() == 1);
        Ok(separated as i64)
    }

    pub fn block_of(&self, label: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.contains(label))
            .expect("label belongs to a block")
    }

    /// Parses `F{1,2|3|4|5,6}`. The `F`, braces, and commas are optional, so
    /// `12|3|4|56` is accepted too.
    pub fn parse(s: &str, n: MarkedCount) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix('F').unwrap_or(t);
        let t = t.strip_prefix('_').unwrap_or(t);
        let t = t
            .strip_prefix('{')
            .and_then(|x| x.strip_suffix('}'))
            .unwrap_or(t);
        let parts: Vec<&str> = t.split('|').collect();
        if parts.len() != 4 {
            return Err(Error::Parse(format!("F-curve {s:?} needs four blocks")));
        }
        let mut blocks = [LabelSet::EMPTY; 4];
        for (k, p) in parts.iter().enumerate() {
            let labels = parse_label_run(p)?;
            let set = LabelSet::from_labels(labels.iter().copied(), n)?;
            if set.len() != labels.len() {
                return Err(Error::InvalidPartition(format!("repeated label in {p:?}")));
            }
            blocks[k] = set;
        }
        FCurve::new(blocks, n)
    }
}

impl fmt::Display for FCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("F{")?;
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                f.write_str("|")?;
            }
            let labels: Vec<String> = b.iter().map(|l| l.to_string()).collect();
            f.write_str(&labels.join(","))?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for FCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses with `n` inferred as the largest label.
impl FromStr for FCurve {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let guess = s
            .split(|c: char| !c.is_ascii_alphanumeric())
            .filter(|t| !t.is_empty() && *t != "F")
            .flat_map(|t| parse_label_run(t).unwrap_or_default())
            .max()
            .unwrap_or(0);
        FCurve::parse(s, MarkedCount::new(guess)?)
    }
}

impl Serialize for FCurve {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.blocks.serialize(s)
    }
}

/// Deserializes a block list; `n` is the number of labels covered.
impl<'de> Deserialize<'de> for FCurve {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let blocks = <[LabelSet; 4]>::deserialize(d)?;
        let total: usize = blocks.iter().map(|b| b.len()).sum();
        let n = MarkedCount::new(total).map_err(serde::de::Error::custom)?;
        FCurve::new(blocks, n).map_err(serde::de::Error::custom)
    }
}

/// Every F-curve on `M_{0,n}`, sorted.
pub fn all_fcurves(n: MarkedCount) -> Vec<FCurve> {
    let nn = n.get();
    let mut out = Vec::new();
    // Restricted growth strings with exactly four values.
    let mut assign = vec![0u8; nn];
    fn rec(pos: usize, used: u8, assign: &mut Vec<u8>, n: MarkedCount, out: &mut Vec<FCurve>) {
        let nn = n.get();
        if nn - pos < (4 - used) as usize {
            return;
        }
        if pos == nn {
            let mut blocks = [LabelSet::EMPTY; 4];
            for (i, &a) in assign.iter().enumerate() {
                blocks[a as usize].insert(i + 1);
            }
            out.push(FCurve::from_blocks_unchecked(blocks, n));
            return;
        }
        for a in 0..used.min(4) {
            assign[pos] = a;
            rec(pos + 1, used, assign, n, out);
        }
        if used < 4 {
            assign[pos] = used;
            rec(pos + 1, used + 1, assign, n, out);
        }
    }
    rec(0, 0, &mut assign, n, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::divisor::{all_divisors, canonical_divisor_rep};

    fn nn(n: usize) -> MarkedCount {
        MarkedCount::new(n).unwrap()
    }

    fn set(v: &[usize]) -> LabelSet {
        v.iter().copied().collect()
    }

    fn d(v: &[usize], n: usize) -> BoundaryDivisor {
        canonical_divisor_rep(set(v), nn(n)).unwrap()
    }

    #[test]
    fn parse_and_display_roundtrip() {
        let f = FCurve::parse("F{5,6|1,3|2,4|7}", nn(7)).unwrap();
        assert_eq!(f.to_string(), "F{1,3|2,4|5,6|7}");
        assert_eq!(FCurve::parse("13|24|56|7", nn(7)).unwrap(), f);
        assert_eq!("F{1,3|2,4|5,6|7}".parse::<FCurve>().unwrap(), f);
        assert!(FCurve::parse("F{1|2|3}", nn(5)).is_err());
        assert!(FCurve::parse("F{1|2|3|4}", nn(5)).is_err());
    }

    #[test]
    fn pairing_examples() {
        let f = FCurve::parse("1|2|3|45", nn(5)).unwrap();
        assert_eq!(f.pair(d(&[1, 3], 5)), 1);
        assert_eq!(f.pair(d(&[4, 5], 5)), -1);
        assert_eq!(f.pair(d(&[2, 4], 5)), 0);
    }

    #[test]
    fn pairing_counts_follow_block_sizes() {
        let n = nn(7);
        for f in all_fcurves(n) {
            let vals: Vec<i64> = all_divisors(n).iter().map(|&dv| f.pair(dv)).collect();
            assert_eq!(vals.iter().filter(|&&v| v == 1).count(), 3);
            let big = f.blocks().iter().filter(|b| b.len() >= 2).count();
            assert_eq!(vals.iter().filter(|&&v| v == -1).count(), big);
        }
    }

    #[test]
    fn fcurve_count_is_stirling() {
        // S(n, 4)
        assert_eq!(all_fcurves(nn(5)).len(), 10);
        assert_eq!(all_fcurves(nn(6)).len(), 65);
        assert_eq!(all_fcurves(nn(7)).len(), 350);
    }

    #[test]
    fn forgetful_degrees() {
        let f = FCurve::parse("1|2|3|456", nn(6)).unwrap();
        assert_eq!(f.forgetful_degree(set(&[1, 2, 3, 4])), Ok(1));
        assert_eq!(f.forgetful_degree(set(&[1, 4, 5, 6])), Ok(0));
        assert_eq!(f.forgetful_degree(set(&[1, 4, 5])), Err(Error::BadSize(3)));
    }
}
