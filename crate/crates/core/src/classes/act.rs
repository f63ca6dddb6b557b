//! The `S_n` action by relabeling marked points.

use super::class::CurveClass;
use super::divisor::{all_divisors, BoundaryDivisor};
use super::expr::FCurveExpression;
use super::fcurve::FCurve;
use super::labels::LabelSet;
use super::perm::Permutation;

/// Relabels every `i` as `g(i)` and re-canonicalizes.
pub trait Act: Sized {
    fn act(&self, g: &Permutation) -> Self;
}

impl Act for LabelSet {
    fn act(&self, g: &Permutation) -> Self {
        g.apply_set(*self)
    }
}

impl Act for BoundaryDivisor {
    fn act(&self, g: &Permutation) -> Self {
        let n = self.n();
        let img = g.apply_set(self.rep());
        let rep = if img.contains(n.get()) { img.complement(n) } else { img };
        BoundaryDivisor::from_rep_unchecked(rep, n)
    }
}

impl Act for FCurve {
    fn act(&self, g: &Permutation) -> Self {
        let b = self.blocks();
        FCurve::from_blocks_unchecked(
            [g.apply_set(b[0]), g.apply_set(b[1]), g.apply_set(b[2]), g.apply_set(b[3])],
            self.n(),
        )
    }
}

impl Act for FCurveExpression {
    fn act(&self, g: &Permutation) -> Self {
        let mut e = FCurveExpression::zero(self.n());
        for (f, c) in self.iter() {
            e.add_term(f.act(g), c);
        }
        e
    }
}

/// `(g·C)(g·D) = C(D)`.
impl Act for CurveClass {
    fn act(&self, g: &Permutation) -> Self {
        let mut out = CurveClass::zero(self.n());
        for d in all_divisors(self.n()) {
            out.set(d.act(g), self.get(d));
        }
        out
    }
}

/// Convenience wrapper mirroring the trait.
pub fn act<T: Act>(g: &Permutation, x: &T) -> T {
    x.act(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::divisor::canonical_divisor_rep;
    use crate::classes::labels::MarkedCount;

    #[test]
    fn transposition_moves_divisor() {
        let n = MarkedCount::new(5).unwrap();
        let g = Permutation::parse(n, "(12)").unwrap();
        let d = canonical_divisor_rep([1, 3].into_iter().collect(), n).unwrap();
        let e = canonical_divisor_rep([2, 3].into_iter().collect(), n).unwrap();
        assert_eq!(d.act(&g), e);
        assert_eq!(d.act(&Permutation::identity(n)), d);
    }

    #[test]
    fn equivariance_on_single_fcurve() {
        let n = MarkedCount::new(7).unwrap();
        let g = Permutation::parse(n, "(1 5 7)(2 3)").unwrap();
        let e = FCurveExpression::parse("+2 F{1|2,3|4|5,6,7}\n-1 F{1,7|2|3|4,5,6}", n).unwrap();
        assert_eq!(e.act(&g).class(), e.class().act(&g));
    }
}
