//! Canonical-class and ψ-class degrees of curve classes.

use num_rational::BigRational;

use crate::classes::CurveClass;

/// `Σ_I (k(n-k) - 2(n-1) + extra·(n-1)) · C·D_I / (n-1)`, with `k` the level of `I`.
fn level_weighted(c: &CurveClass, extra: i64) -> BigRational {
    let n = c.n().get() as i64;
    let num: i64 = c
        .iter()
        .filter(|&(_, v)| v != 0)
        .map(|(d, v)| {
            let k = d.level() as i64;
            (k * (n - k) - 2 * (n - 1) + extra * (n - 1)) * v
        })
        .sum();
    BigRational::new(num.into(), (n - 1).into())
}

/// `C · K`.
pub fn k_intersection(c: &CurveClass) -> BigRational {
    level_weighted(c, 0)
}

/// `C · ψ`, where `ψ = K + 2D`.
pub fn psi_intersection(c: &CurveClass) -> BigRational {
    level_weighted(c, 2)
}

/// The deformation lower bound `-(C · K) + (n - 3)`.
pub fn kollar_bound(c: &CurveClass) -> BigRational {
    let dim = BigRational::from_integer((c.n().get() as i64 - 3).into());
    dim - k_intersection(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::MarkedCount;
    use num_traits::Zero;

    #[test]
    fn zero_class() {
        let c = CurveClass::zero(MarkedCount::new(7).unwrap());
        assert!(k_intersection(&c).is_zero());
        assert!(psi_intersection(&c).is_zero());
        assert_eq!(kollar_bound(&c), BigRational::from_integer(4.into()));
    }

    #[test]
    fn agrees_with_divisor_pairing() {
        use crate::classes::{all_divisors, canonical_divisor, psi_divisor};
        for n in 5..=8 {
            let n = MarkedCount::new(n).unwrap();
            let mut c = CurveClass::zero(n);
            for (i, d) in all_divisors(n).into_iter().enumerate() {
                c.set(d, (i as i64 * 7919) % 11 - 5);
            }
            assert_eq!(k_intersection(&c), c.pair(&canonical_divisor(n)));
            assert_eq!(psi_intersection(&c), c.pair(&psi_divisor(n)));
        }
    }
}
