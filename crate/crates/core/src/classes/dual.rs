//! Curves dual to the nonadjacent basis.

use std::collections::HashMap;

use super::class::CurveClass;
use super::divisor::{circular_components, cyclic_component_count, nonadjacent_basis, BoundaryDivisor};
use super::expr::FCurveExpression;
use super::fcurve::FCurve;
use super::labels::{LabelSet, MarkedCount};
use crate::error::{Error, Result};

/// Memoized dual elements `E_I` for one value of `n`.
pub struct DualBasis {
    n: MarkedCount,
    memo: HashMap<LabelSet, FCurveExpression>,
}

impl DualBasis {
    pub fn new(n: MarkedCount) -> Self {
        DualBasis {
            n,
            memo: HashMap::new(),
        }
    }

    pub fn n(&self) -> MarkedCount {
        self.n
    }

    /// The curve `E` with `D' · E = δ_{D,D'}` on the nonadjacent basis.
    pub fn dual(&mut self, d: BoundaryDivisor) -> Result<FCurveExpression> {
        if d.n() != self.n {
            return Err(Error::MismatchedN(d.n().get(), self.n.get()));
        }
        if d.is_adjacent() {
            return Err(Error::AdjacentDivisor(d.to_string()));
        }
        Ok(self.dual_of(d.rep()))
    }

    /// `E_X`, taken to be zero when `X` is a single arc.
    fn dual_of(&mut self, x: LabelSet) -> FCurveExpression {
        let n = self.n;
        let rep = if x.contains(n.get()) { x.complement(n) } else { x };
        if rep.is_empty() || cyclic_component_count(rep, n).unwrap_or(1) < 2 {
            return FCurveExpression::zero(n);
        }
        if let Some(e) = self.memo.get(&rep) {
            return e.clone();
        }
        let (is, js) = circular_components(rep, n);
        let e = if is.len() == 2 {
            FCurveExpression::single(FCurve::from_blocks_unchecked([is[0], is[1], js[0], js[1]], n))
        } else {
            let union = |v: &[LabelSet]| v.iter().fold(LabelSet::EMPTY, |a, &b| a.union(b));
            let i12 = is[0].union(is[1]);
            let j12 = js[0].union(js[1]);
            let i_rest = union(&is[2..]);
            let j_rest = union(&js[2..]);
            let mut e = FCurveExpression::single(FCurve::from_blocks_unchecked([i12, j12, i_rest, j_rest], n));
            let back = self.dual_of(i12.union(j_rest));
            e.add_scaled(&back, -1);
            for part in [i12, j12, i_rest, j_rest] {
                let sub = self.dual_of(part);
                e.add_scaled(&sub, 1);
            }
            e
        };
        self.memo.insert(rep, e.clone());
        e
    }

    /// `Σ_{D nonadjacent} (C · D) E_D`, an expression of class `C`.
    pub fn expand(&mut self, c: &CurveClass) -> FCurveExpression {
        let mut out = FCurveExpression::zero(self.n);
        for d in nonadjacent_basis(self.n) {
            let v = c.get(d);
            if v != 0 {
                let e = self.dual_of(d.rep());
                out.add_scaled(&e, v);
            }
        }
        out
    }
}

pub fn dual_curve(d: BoundaryDivisor) -> Result<FCurveExpression> {
    DualBasis::new(d.n()).dual(d)
}

pub fn expand_in_dual_basis(c: &CurveClass) -> FCurveExpression {
    DualBasis::new(c.n()).expand(c)
}
