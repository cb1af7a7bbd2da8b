//! Exact arithmetic for the realization counter: coefficient fields, sparse multivariate
//! polynomials, Buchberger's algorithm, and small dense linear algebra.

pub mod f4;
pub mod field;
pub mod groebner;
pub mod linear;
pub mod poly;
pub mod univariate;

pub use field::{Field, Fp, FpA, FpB, GaussianRational, Rational};
pub use groebner::{buchberger, Budget, GroebnerBasis};
pub use poly::{Exp, Monomial, MonomialOrder, Poly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("groebner budget exceeded: {0}")]
    Budget(String),
    #[error("empty generator list")]
    EmptyInput,
    #[error("generators live in different rings")]
    RingMismatch,
    #[error("parse error: {0}")]
    Parse(String),
}
