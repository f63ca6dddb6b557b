//! Classes of curves fixed by cyclic and dihedral subgroups of `S_n`, with
//! derived degrees and stabilizers.

pub mod cyclic;
pub mod dihedral;
pub mod scalars;
pub mod stabilizer;

pub use cyclic::{balanced_type, cyclic_curve_class, cyclic_effective_expression, CyclicAction};
pub use dihedral::{dihedral_curve_class, generate_group, DihedralAction};
pub use scalars::{k_intersection, kollar_bound, psi_intersection};
pub use stabilizer::{stabilizer_order, stabilizer_order_brute_force, StabilizerConfig};
