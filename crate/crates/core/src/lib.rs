//! Exact computation with nilpotent Leibniz superalgebras over `Q(i)`.
//!
//! Structure constants, identity checks and invariants live in [`algebra`];
//! the two one-parameter-table families and their classification live in
//! [`families`] and [`iso`].

pub mod algebra;
pub mod error;
pub mod families;
pub mod iso;
pub mod json;
pub mod lattice;
pub mod linalg;
pub mod random;
pub mod scalar;

pub use algebra::{BaseChange, CharSequence, Parity, Subspace, SuperAlgebra};
pub use error::{Error, Result};
pub use scalar::{GaussianRational, Rational};
