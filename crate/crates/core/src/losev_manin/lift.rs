//! Lifting a torus-fixed cycle on `L̄_n` back to an F-curve expression
//! upstairs.

use super::degenerate::LMCycle;
use super::partition::{torus_curve_to_fcurve, HeavyPair};
use crate::classes::labels::subsets_of;
use crate::classes::{CurveClass, FCurve, FCurveExpression, LabelSet};
use crate::error::{Error, Result};

/// `Σ m · F(type)` minus `(C · D_I) F{i|j|k|rest}` for every light triple
/// `I`, where `C` is the class upstairs.
///
/// Light subsets of four or more labels are contracted to loci that are not
/// F-curves, so a nonzero pairing there is refused.
pub fn lift_with_proper_transform(cycle: &LMCycle, h: HeavyPair, upstairs: &CurveClass) -> Result<FCurveExpression> {
    let n = cycle.n;
    if upstairs.n() != n {
        return Err(Error::MismatchedN(upstairs.n().get(), n.get()));
    }
    if h != cycle.heavy {
        return Err(Error::InvalidPartition(format!(
            "heavy pair {:?} does not match the cycle's {:?}",
            <[usize; 2]>::from(h),
            <[usize; 2]>::from(cycle.heavy)
        )));
    }
    let mut e = FCurveExpression::zero(n);
    for c in &cycle.components {
        e.add_term(torus_curve_to_fcurve(&c.partition, h, n)?, c.multiplicity as i64);
    }
    let lights = h.lights(n);
    for i in subsets_of(lights).filter(|s| s.len() >= 3) {
        let v = upstairs.value_of(i)?;
        if v == 0 {
            continue;
        }
        if i.len() > 3 {
            return Err(Error::UnsupportedExceptionalLocus(i.to_string()));
        }
        let l = i.to_vec();
        let rest = n.full().difference(i);
        let f = FCurve::new([LabelSet::singleton(l[0]), LabelSet::singleton(l[1]), LabelSet::singleton(l[2]), rest], n)?;
        e.add_term(f, -v);
    }
    Ok(e)
}
