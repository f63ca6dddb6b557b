//! Fixed curves `C^σ` of balanced permutations with two nontrivial cycles.

use serde::Serialize;

use crate::classes::{
    nonadjacent_basis, Act, CurveClass, DualBasis, FCurveExpression, LabelSet, MarkedCount, Permutation,
};
use crate::error::{Error, Result};

/// A balanced `σ = σ1 σ2` of type `(j, r)`: two `r`-cycles and `j <= 2`
/// fixed labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicAction {
    pub sigma: Permutation,
    pub n: MarkedCount,
    pub j: usize,
    pub r: usize,
    /// `σ1` (the cycle holding the least moved label) then `σ2`, each listed
    /// from its least label in cycle order.
    pub cycles: [Vec<usize>; 2],
    pub fixed: LabelSet,
}

/// `(j, r)` when `σ` is balanced with exactly two nontrivial cycles.
pub fn balanced_type(sigma: &Permutation) -> Option<(usize, usize)> {
    let cycles = sigma.cycles();
    if cycles.len() != 2 || cycles[0].len() != cycles[1].len() {
        return None;
    }
    let r = cycles[0].len();
    let j = sigma.n() - 2 * r;
    (j <= 2).then_some((j, r))
}

impl CyclicAction {
    pub fn new(sigma: Permutation) -> Result<Self> {
        let n = MarkedCount::new(sigma.n())?;
        if n.get() < 5 {
            return Err(Error::NotACurve(format!("fixed locus of {sigma} on n = {n} is not a curve")));
        }
        let (j, r) = balanced_type(&sigma).ok_or_else(|| {
            Error::NotACurve(format!("{sigma} is not balanced with two nontrivial cycles"))
        })?;
        let mut cycles = sigma.cycles();
        let s2 = cycles.pop().expect("two cycles");
        let s1 = cycles.pop().expect("two cycles");
        let fixed = sigma.fixed_points();
        Ok(CyclicAction {
            sigma,
            n,
            j,
            r,
            cycles: [s1, s2],
            fixed,
        })
    }

    pub fn parse(n: MarkedCount, s: &str) -> Result<Self> {
        CyclicAction::new(Permutation::parse(n, s)?)
    }

    pub fn sigma_sets(&self) -> [LabelSet; 2] {
        [
            self.cycles[0].iter().copied().collect(),
            self.cycles[1].iter().copied().collect(),
        ]
    }

    /// The relabeling `g` with `g σ g⁻¹ = (1 .. r)(r+1 .. 2r)`.
    pub fn standardizer(&self) -> Permutation {
        let mut images = vec![0usize; self.n.get()];
        let mut next = 1;
        for cyc in &self.cycles {
            for &l in cyc {
                images[l - 1] = next;
                next += 1;
            }
        }
        for l in self.fixed.iter() {
            images[l - 1] = next;
            next += 1;
        }
        Permutation::from_images(images).expect("relabeling is a bijection")
    }
}

/// The intersection numbers of `C^σ` with every boundary divisor.
///
/// Values are assigned rather than accumulated, so two descriptions of the
/// same divisor give it a single value.
pub fn cyclic_curve_class(a: &CyclicAction) -> CurveClass {
    let mut c = CurveClass::zero(a.n);
    let [s1, s2] = a.sigma_sets();
    for h in s1.iter() {
        for i in s2.iter() {
            c.set_at_subset(LabelSet::from_iter([h, i]), 1);
        }
    }
    let fixed = a.fixed.to_vec();
    match fixed.as_slice() {
        [] => c.set_at_subset(s1, 2),
        [p] => {
            for s in [s1, s2] {
                c.set_at_subset(s, 1);
                c.set_at_subset(s.union(LabelSet::singleton(*p)), 1);
            }
        }
        [p, _] => {
            for s in [s1, s2] {
                c.set_at_subset(s.union(LabelSet::singleton(*p)), 1);
            }
        }
        _ => unreachable!("balanced type has at most two fixed labels"),
    }
    c
}

/// An all-ones effective F-curve expression for `C^σ`, built from dual curves
/// in the standard labeling and moved back.
pub fn cyclic_effective_expression(a: &CyclicAction) -> FCurveExpression {
    let g = a.standardizer();
    let standard = CyclicAction::new(g.compose(&a.sigma).compose(&g.inverse()))
        .expect("conjugate of a balanced permutation is balanced");
    let class = cyclic_curve_class(&standard);
    let mut duals = DualBasis::new(a.n);
    let mut e = FCurveExpression::zero(a.n);
    for d in nonadjacent_basis(a.n) {
        let v = class.get(d);
        if v != 0 {
            let dual = duals.dual(d).expect("basis divisor is nonadjacent");
            e.add_scaled(&dual, v);
        }
    }
    e.act(&g.inverse())
}
