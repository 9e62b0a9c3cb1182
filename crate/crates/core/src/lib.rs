//! Exact computation of the Hochschild cohomology of the algebras
//! A_T(q0,q1,q2,q3) from an explicit minimal projective bimodule resolution.
//!
//! Layout:
//! - [`scalars`]: the coefficient fields Q and F_p(t), the parameters q_i and
//!   the running products S_{u,v};
//! - [`algebra`]: normal forms and multiplication in A;
//! - [`resolution`]: generators g^n_{i,j} and the bimodule differentials;
//! - [`cohomology`]: the Hom complex, ranks, dimensions and closed forms;
//! - [`linalg`]: exact Gaussian elimination.

pub mod algebra;
pub mod cohomology;
pub mod linalg;
pub mod resolution;
pub mod scalars;

pub use algebra::{AlgebraElement, AlgebraParams, BasisPath, VertexId, Word};
pub use scalars::{Backend, FieldSpec, Scalar, ScalarError};
