//! Exact computation with n-ary Lie structures.
//!
//! The crate builds and validates Lie algebras, generalized (even-arity) Lie
//! algebras, Filippov n-Lie algebras and Leibniz algebras from their
//! structure constants. It computes their cohomology by exact rank and checks
//! generalized and Nambu–Poisson conditions on polynomial multivector fields.
//! All arithmetic is over the rationals or the Gaussian rationals.
//!
//! Indices are 0-based throughout the Rust API; the text file format and
//! the reports produced by the command-line front-end use 1-based indices.

pub mod combinatorics;
pub mod filippov;
pub mod gla;
pub mod lie;
pub mod lie_cohomology;
pub mod linalg;
pub mod nary_cohomology;
pub mod poisson;
pub mod poly;
pub mod scalar;
pub mod structure;
pub mod tensor;

pub use filippov::FilippovAlgebra;
pub use gla::GLAlgebra;
pub use lie::{LieAlgebra, Representation, SymInvariantPoly};
pub use lie_cohomology::{CoboundaryMatrix, Cochain, CohomologyReport};
pub use linalg::Matrix;
pub use nary_cohomology::{LeibnizAlgebra, NCochain};
pub use poisson::{NPReport, PolyMultivector};
pub use poly::Poly;
pub use scalar::{q, qf, Gauss, Scalar, Q};
pub use structure::{Bracket, Violation};
pub use tensor::{AntisymTensor, Array};
