//! Simplicial complexes and their Stanley–Reisner invariants.

mod balanced;
mod betti;
mod complex;
mod homology;
mod reisner;

pub use balanced::{check_balanced, BalanceCheck, Coloring};
pub use betti::{
    betti_numbers, depth_and_pd, hochster_betti, projective_dimension, BettiTable,
    DepthPd,
    DEFAULT_VARIABLE_BUDGET,
};
pub use complex::{h_from_f, h_polynomial, ComplexSpec, Graph, GraphSpec, SimplicialComplex};
pub use homology::{reduced_homology_ranks, ReducedHomology};
pub use reisner::{first_cm_failure, is_cohen_macaulay, CmCertificate, LinkFailure};
