//! Divisor and curve classes on the moduli space of stable pointed rational
//! curves: subsets, F-curves, the intersection pairing, the nonadjacent basis
//! and its dual, Keel relations and the symmetric-group action.

pub mod act;
pub mod class;
pub mod divisor;
pub mod dual;
pub mod expr;
pub mod fcurve;
pub mod keel;
pub mod labels;
pub mod perm;

pub use act::{act, Act};
pub use class::{canonical_divisor, level_divisor, psi_divisor, total_boundary, CurveClass, DivisorClass};
pub use divisor::{
    all_divisors, canonical_divisor_rep, circular_components, cyclic_component_count, divisor_count,
    nonadjacent_basis, BoundaryDivisor,
};
pub use dual::{dual_curve, expand_in_dual_basis, DualBasis};
pub use expr::{class_of_expression, FCurveExpression};
pub use fcurve::{all_fcurves, FCurve};
pub use keel::{for_each_keel_relation, keel_relation_expression, KeelRelation};
pub use labels::{LabelSet, MarkedCount};
pub use perm::Permutation;
