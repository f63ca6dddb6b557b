//! Boundary divisors `D_I = D_{I^c}` and their circular structure.

use std::fmt;

use serde::Serialize;

use super::labels::{LabelSet, MarkedCount};
use crate::error::{Error, Result};

/// A boundary divisor, stored by the representative of `{I, I^c}` that does
/// not contain the label `n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoundaryDivisor {
    rep: LabelSet,
    n: MarkedCount,
}

/// Canonicalizes `I` to the boundary divisor `D_I`.
pub fn canonical_divisor_rep(i: LabelSet, n: MarkedCount) -> Result<BoundaryDivisor> {
    if !i.is_subset(n.full()) {
        let bad = i.difference(n.full()).min_label().unwrap_or(0);
        return Err(Error::LabelOutOfRange { label: bad, n: n.get() });
    }
    let size = i.len();
    if size < 2 || size + 2 > n.get() {
        return Err(Error::SizeOutOfRange { size, n: n.get() });
    }
    let rep = if i.contains(n.get()) { i.complement(n) } else { i };
    Ok(BoundaryDivisor { rep, n })
}

impl BoundaryDivisor {
    pub fn new(i: LabelSet, n: MarkedCount) -> Result<Self> {
        canonical_divisor_rep(i, n)
    }

    /// Builds a divisor from a bitmask index that is already canonical.
    #[inline]
    pub(crate) fn from_rep_unchecked(rep: LabelSet, n: MarkedCount) -> Self {
        debug_assert!(!rep.contains(n.get()));
        BoundaryDivisor { rep, n }
    }

    #[inline]
    pub fn rep(self) -> LabelSet {
        self.rep
    }

    #[inline]
    pub fn n(self) -> MarkedCount {
        self.n
    }

    #[inline]
    pub fn complement(self) -> LabelSet {
        self.rep.complement(self.n)
    }

    /// Dense index: the bitmask of the representative, below `2^(n-1)`.
    #[inline]
    pub fn index(self) -> usize {
        self.rep.bits() as usize
    }

    /// The level `k = min(|I|, |I^c|)`, so that `D_I` is a summand of `D_k`.
    #[inline]
    pub fn level(self) -> usize {
        let s = self.rep.len();
        s.min(self.n.get() - s)
    }

    /// True when `{I, I^c}` is `{s, s^c}`.
    #[inline]
    pub fn matches(self, s: LabelSet) -> bool {
        s == self.rep || s == self.complement()
    }

    pub fn cyclic_components(self) -> usize {
        arc_count(self.rep, self.n)
    }

    pub fn is_adjacent(self) -> bool {
        self.cyclic_components() == 1
    }
}

impl fmt::Display for BoundaryDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D{}", self.rep)
    }
}

impl fmt::Debug for BoundaryDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for BoundaryDivisor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rep.serialize(s)
    }
}

/// Number of arcs of `i` on the cycle `1 - 2 - ... - n - 1`, for nonempty `i`.
fn arc_count(i: LabelSet, n: MarkedCount) -> usize {
    let n = n.get();
    i.iter().filter(|&x| !i.contains(x % n + 1)).count()
}

/// `t(I)`: the number of connected components of `I` on the cyclic graph.
pub fn cyclic_component_count(i: LabelSet, n: MarkedCount) -> Result<usize> {
    if i.is_empty() || i == n.full() {
        return Err(Error::EmptyOrFull);
    }
    if !i.is_subset(n.full()) {
        let bad = i.difference(n.full()).min_label().unwrap_or(0);
        return Err(Error::LabelOutOfRange { label: bad, n: n.get() });
    }
    Ok(arc_count(i, n))
}

/// Splits `I` and `I^c` into arcs, returned as `(I_1, ..., I_t)` and
/// `(J_1, ..., J_t)` in the circular order `I_1, J_1, I_2, J_2, ...`, where
/// `I_1` contains the least element of `I`.
pub fn circular_components(i: LabelSet, n: MarkedCount) -> (Vec<LabelSet>, Vec<LabelSet>) {
    let nn = n.get();
    let succ = |x: usize| x % nn + 1;
    let pred = |x: usize| if x == 1 { nn } else { x - 1 };
    let mut start = i.min_label().expect("nonempty subset");
    while i.contains(pred(start)) {
        start = pred(start);
    }
    let mut is = Vec::new();
    let mut js = Vec::new();
    let mut x = start;
    for _ in 0..nn {
        let inside = i.contains(x);
        let list = if inside { &mut is } else { &mut js };
        let fresh = x == start || i.contains(pred(x)) != inside;
        if fresh {
            list.push(LabelSet::EMPTY);
        }
        list.last_mut().expect("open arc").insert(x);
        x = succ(x);
    }
    (is, js)
}

/// All canonical boundary divisors in lexicographic order of representatives.
pub fn all_divisors(n: MarkedCount) -> Vec<BoundaryDivisor> {
    let nn = n.get();
    let mut out: Vec<BoundaryDivisor> = (0u32..1 << (nn - 1))
        .map(LabelSet::from_bits)
        .filter(|s| s.len() >= 2 && s.len() + 2 <= nn)
        .map(|rep| BoundaryDivisor { rep, n })
        .collect();
    out.sort();
    out
}

/// Divisors `D_I` with `t(I) >= 2`, in lexicographic order of representatives.
pub fn nonadjacent_basis(n: MarkedCount) -> Vec<BoundaryDivisor> {
    all_divisors(n)
        .into_iter()
        .filter(|d| !d.is_adjacent())
        .collect()
}

/// `2^(n-1) - n - 1`, the number of boundary divisors.
pub fn divisor_count(n: MarkedCount) -> usize {
    (1usize << (n.get() - 1)) - n.get() - 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nn(n: usize) -> MarkedCount {
        MarkedCount::new(n).unwrap()
    }

    fn set(v: &[usize]) -> LabelSet {
        v.iter().copied().collect()
    }

    #[test]
    fn canonical_reps() {
        assert_eq!(canonical_divisor_rep(set(&[4, 5, 6]), nn(6)).unwrap().rep(), set(&[1, 2, 3]));
        assert_eq!(canonical_divisor_rep(set(&[1, 3]), nn(6)).unwrap().rep(), set(&[1, 3]));
        assert_eq!(
            canonical_divisor_rep(set(&[1]), nn(5)),
            Err(Error::SizeOutOfRange { size: 1, n: 5 })
        );
    }

    #[test]
    fn component_counts() {
        assert_eq!(cyclic_component_count(set(&[1, 3]), nn(6)), Ok(2));
        assert_eq!(cyclic_component_count(set(&[1, 2]), nn(6)), Ok(1));
        assert_eq!(cyclic_component_count(set(&[1, 3, 5]), nn(6)), Ok(3));
        assert_eq!(cyclic_component_count(set(&[1, 6]), nn(6)), Ok(1));
        assert_eq!(cyclic_component_count(LabelSet::EMPTY, nn(6)), Err(Error::EmptyOrFull));
    }

    #[test]
    fn circular_order_anchor() {
        let (is, js) = circular_components(set(&[1, 3, 6]), nn(6));
        assert_eq!(is, vec![set(&[6, 1]), set(&[3])]);
        assert_eq!(js, vec![set(&[2]), set(&[4, 5])]);
        let (is, js) = circular_components(set(&[2, 4, 5, 7]), nn(8));
        assert_eq!(is, vec![set(&[2]), set(&[4, 5]), set(&[7])]);
        assert_eq!(js, vec![set(&[3]), set(&[6]), set(&[8, 1])]);
    }

    #[test]
    fn small_bases() {
        let b5: Vec<Vec<usize>> = nonadjacent_basis(nn(5)).iter().map(|d| d.rep().to_vec()).collect();
        // {2,5} and {3,5} are stored by their complements.
        assert_eq!(b5, vec![vec![1, 2, 4], vec![1, 3], vec![1, 3, 4], vec![1, 4], vec![2, 4]]);
        assert_eq!(nonadjacent_basis(nn(6)).len(), 16);
        assert_eq!(all_divisors(nn(7)).len(), divisor_count(nn(7)));
    }
}
