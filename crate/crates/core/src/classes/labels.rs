//! Marked-point labels and subsets of `[n] = {1, ..., n}`.
//!
//! Subsets are bitmasks: bit `i - 1` stands for label `i`. Their total order
//! is lexicographic on the sorted member lists, which is the order used for
//! every canonical listing in the crate.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_MARKED: usize = 20;

/// Number of marked points. Always at least 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "usize", into = "usize")]
pub struct MarkedCount(u8);

impl MarkedCount {
    pub fn new(n: usize) -> Result<Self> {
        if (4..=MAX_MARKED).contains(&n) {
            Ok(MarkedCount(n as u8))
        } else {
            Err(Error::InvalidMarkedCount(n))
        }
    }

    #[inline]
    pub fn get(self) -> usize {
        self.0 as usize
    }

    /// The full label set `[n]`.
    #[inline]
    pub fn full(self) -> LabelSet {
        LabelSet((1u32 << self.0) - 1)
    }

    pub fn labels(self) -> impl Iterator<Item = usize> {
        1..=self.get()
    }
}

impl TryFrom<usize> for MarkedCount {
    type Error = Error;
    fn try_from(n: usize) -> Result<Self> {
        MarkedCount::new(n)
    }
}

impl From<MarkedCount> for usize {
    fn from(n: MarkedCount) -> usize {
        n.get()
    }
}

impl fmt::Display for MarkedCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A set of labels drawn from `1..=MAX_MARKED`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct LabelSet(u32);

impl LabelSet {
    pub const EMPTY: LabelSet = LabelSet(0);

    #[inline]
    pub const fn from_bits(bits: u32) -> Self {
        LabelSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u32 {
        self.0
    }

    pub fn singleton(label: usize) -> Self {
        debug_assert!((1..=MAX_MARKED).contains(&label));
        LabelSet(1 << (label - 1))
    }

    /// Builds a set from labels, checking each against `n`.
    pub fn from_labels<I: IntoIterator<Item = usize>>(labels: I, n: MarkedCount) -> Result<Self> {
        let mut bits = 0u32;
        for l in labels {
            if l == 0 || l > n.get() {
                return Err(Error::LabelOutOfRange { label: l, n: n.get() });
            }
            bits |= 1 << (l - 1);
        }
        Ok(LabelSet(bits))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, label: usize) -> bool {
        (1..=MAX_MARKED).contains(&label) && self.0 & (1 << (label - 1)) != 0
    }

    #[inline]
    pub fn union(self, other: LabelSet) -> LabelSet {
        LabelSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: LabelSet) -> LabelSet {
        LabelSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: LabelSet) -> LabelSet {
        LabelSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: LabelSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: LabelSet) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub fn complement(self, n: MarkedCount) -> LabelSet {
        LabelSet(n.full().0 & !self.0)
    }

    /// Smallest label, if any.
    #[inline]
    pub fn min_label(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    #[inline]
    pub fn max_label(self) -> Option<usize> {
        (self.0 != 0).then(|| 32 - self.0.leading_zeros() as usize)
    }

    pub fn insert(&mut self, label: usize) {
        self.0 |= 1 << (label - 1);
    }

    pub fn remove(&mut self, label: usize) {
        self.0 &= !(1 << (label - 1));
    }

    pub fn iter(self) -> Labels {
        Labels(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Ascending iterator over the members of a [`LabelSet`].
pub struct Labels(u32);

impl Iterator for Labels {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let l = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(l)
    }
}

impl IntoIterator for LabelSet {
    type Item = usize;
    type IntoIter = Labels;
    fn into_iter(self) -> Labels {
        self.iter()
    }
}

impl FromIterator<usize> for LabelSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = LabelSet::EMPTY;
        for l in iter {
            s.insert(l);
        }
        s
    }
}

impl Ord for LabelSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff & diff.wrapping_neg();
        // Both sets agree below `low`; exactly one of them contains it.
        let (other_bits, ord) = if self.0 & low != 0 {
            (other.0, Ordering::Less)
        } else {
            (self.0, Ordering::Greater)
        };
        if other_bits & !(low | (low - 1)) != 0 {
            ord
        } else {
            ord.reverse()
        }
    }
}

impl PartialOrd for LabelSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Formats a label, using `a`, `b`, `c` for 10, 11, 12 when `compact` is set.
pub fn label_str(label: usize, compact: bool) -> String {
    match (compact, label) {
        (true, 10) => "a".into(),
        (true, 11) => "b".into(),
        (true, 12) => "c".into(),
        _ => label.to_string(),
    }
}

/// Parses a single label token. `a`, `b`, `c` are aliases for 10, 11, 12.
pub fn parse_label(tok: &str) -> Result<usize> {
    match tok {
        "a" | "A" => Ok(10),
        "b" | "B" => Ok(11),
        "c" | "C" => Ok(12),
        _ => tok
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad label {tok:?}"))),
    }
}

/// Splits a run of labels. Runs containing separators (whitespace or commas)
/// are tokenised on them; otherwise every character is one label, so `"13a"`
/// is `{1, 3, 10}`.
pub fn parse_label_run(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if s.contains(|c: char| c.is_whitespace() || c == ',') {
        s.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(parse_label)
            .collect()
    } else {
        s.chars().map(|c| parse_label(&c.to_string())).collect()
    }
}

impl fmt::Debug for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, l) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for LabelSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for LabelSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        let mut s = LabelSet::EMPTY;
        for l in v {
            if l == 0 || l > MAX_MARKED {
                return Err(serde::de::Error::custom(format!("label {l} out of range")));
            }
            if s.contains(l) {
                return Err(serde::de::Error::custom(format!("label {l} repeated")));
            }
            s.insert(l);
        }
        Ok(s)
    }
}

/// Enumerates every subset of `universe` (including the empty set) in
/// increasing bitmask order.
pub fn subsets_of(universe: LabelSet) -> impl Iterator<Item = LabelSet> {
    let u = universe.bits();
    let mut cur: Option<u32> = Some(0);
    std::iter::from_fn(move || {
        let s = cur?;
        cur = if s == u { None } else { Some(s.wrapping_sub(u) & u) };
        Some(LabelSet(s))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> LabelSet {
        v.iter().copied().collect()
    }

    #[test]
    fn lexicographic_order() {
        assert!(set(&[1, 2, 4]) < set(&[1, 3]));
        assert!(set(&[1, 3]) < set(&[1, 3, 5]));
        assert!(set(&[1, 3, 5]) < set(&[1, 4]));
        assert!(set(&[2]) > set(&[1, 5, 6]));
        assert_eq!(set(&[2, 4]).cmp(&set(&[2, 4])), Ordering::Equal);
    }

    #[test]
    fn order_matches_vec_order() {
        let all: Vec<LabelSet> = subsets_of(set(&[1, 2, 3, 4, 5])).collect();
        for a in &all {
            for b in &all {
                assert_eq!(a.cmp(b), a.to_vec().cmp(&b.to_vec()), "{a} vs {b}");
            }
        }
    }

    #[test]
    fn subsets_enumeration_count() {
        assert_eq!(subsets_of(set(&[2, 5, 7])).count(), 8);
        assert_eq!(subsets_of(LabelSet::EMPTY).count(), 1);
    }

    #[test]
    fn label_runs() {
        assert_eq!(parse_label_run("13a").unwrap(), vec![1, 3, 10]);
        assert_eq!(parse_label_run("1 2 10").unwrap(), vec![1, 2, 10]);
        assert_eq!(parse_label_run("4,5,c").unwrap(), vec![4, 5, 12]);
        assert!(parse_label_run("1x").is_err());
    }

    #[test]
    fn marked_count_bounds() {
        assert!(MarkedCount::new(3).is_err());
        assert_eq!(MarkedCount::new(6).unwrap().full(), set(&[1, 2, 3, 4, 5, 6]));
    }
}
