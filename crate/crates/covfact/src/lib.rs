//! Exact computer algebra for coverings of projective space presented by
//! weighted-homogeneous equations: matrix factorizations of `t^d - b`,
//! certified branch-divisor decompositions, and the closed-form cohomology
//! of the associated rank-2 bundles.

pub mod field;
pub mod linalg;
pub mod parse;
pub mod poly;

pub use field::{FieldSpec, Fp, PrimeField, Rationals, Scalar};
pub use linalg::ExactMatrix;
pub use parse::parse_polynomial;
pub use poly::{Homogeneity, Monomial, Polynomial, RingCtx};

use num_rational::BigRational;

/// Polynomial over the rationals.
pub type QPoly = Polynomial<BigRational>;
/// Polynomial over a prime field.
pub type FpPoly = Polynomial<Fp>;
/// Scalar matrix over the rationals.
pub type QMatrix = ExactMatrix<BigRational>;
/// Scalar matrix over a prime field.
pub type FpMatrix = ExactMatrix<Fp>;
