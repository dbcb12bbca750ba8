//! Lie algebras from structure constants, quaternionic gradings and
//! hyper-Kähler symmetric triples.

pub mod algebra;
pub mod grading;
pub mod lambda;
pub mod triple;

pub use algebra::{format_combination, LieAlgebra, LowerCentralSeries};
pub use grading::{block_diag, check_proper, verify_grading, QuatGrading, UNIT_NAMES};
pub use lambda::lambda_so3;
pub use triple::{
    cotangent_algebra, dual_labels, fresh_tag, tangent_triple, verify_triple, Holonomy, HyperKahlerTriple,
    MetricLieAlgebra, TripleCheck, TripleVerdict,
};
