//! Exact computations with Lie-Yamaguti algebras, their representations,
//! weight-1 relative Rota-Baxter operators, post-Lie-Yamaguti algebras,
//! the induced Yamaguti cohomology, and order-n deformations.

pub mod algebra;
pub mod catalog;
pub mod deformation;
pub mod cohomology;
pub mod error;
pub mod io;
pub mod linalg;
pub mod post;
pub mod rational;
pub mod rep;
pub mod rrb;
pub mod report;
pub mod tensor;

pub use error::{LyaError, Result};
pub use linalg::{Matrix, Subspace, Vector};
pub use rational::{q, qi, Rational};
pub use algebra::{check_homomorphism, LinearMap, LyAlgebra};
pub use report::{CheckOptions, Report, Verdict, Violation};
pub use rep::{adjoint_rep, RepAction};
pub use rrb::{check_nijenhuis, check_rrb_homomorphism, projection_operator, HomPair, RrbOperator};
pub use post::{check_post_homomorphism, induced_post_from_rrb, PostLyAlgebra, PostReading};
pub use cohomology::{induced_rep, pushforward_cochain, yamaguti_coboundary, Cochain, CohomologyDims, TComplex};
pub use deformation::{
    check_equivalence, check_linear_deformation, difference_class, DifferenceClass, Extension,
    ObstructionClass, OrderNDeformation,
};
