//! Losev–Manin spaces `L̄_n`: ordered partitions, the torus-curve dictionary,
//! and toric degenerations of one-parameter configuration families.

pub mod degenerate;
pub mod family;
pub mod field;
pub mod lift;
pub mod partition;

pub use degenerate::{
    degenerate, degeneration_steps, limit_step, parametrization_degree, DegenerationConfig, LMComponent, LMCycle,
    Residual,
};
pub use family::ConfigurationFamily;
pub use field::{cyclotomic_polynomial, Cyc, CyclotomicField, CyclotomicRational, Poly, ZPoint};
pub use lift::lift_with_proper_transform;
pub use partition::{pushforward_fcurve, torus_curve_to_fcurve, HeavyPair, OrderedPartition, Pushforward};
