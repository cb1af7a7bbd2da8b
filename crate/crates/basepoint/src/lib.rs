//! Base points of coupler-curve series and the operator calculus on edge polynomials.

pub mod centric;
pub mod family;
pub mod ops;
pub mod points;
pub mod ring;
pub mod spaces;
pub mod table;

use rigid_algebra::{GaussianRational, Poly};

pub type GPoly = Poly<GaussianRational>;

pub use centric::{check_centric, pseudo_class_small, CentricVerdict, Certificate, ConditionReport};
pub use family::{BasePointRecord, Chart, Family, PointKind};
pub use points::Point;
pub use ring::EdgeRing;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BasepointError {
    #[error("groebner budget exceeded: {0}")]
    Budget(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("expected a single eliminant, found {0}")]
    NotUnique(usize),
    #[error("non-exact division: {0}")]
    Division(String),
    #[error("not homogeneous: {0}")]
    Inhomogeneous(String),
    #[error("{0}")]
    Input(String),
}

impl From<rigid_algebra::AlgebraError> for BasepointError {
    fn from(e: rigid_algebra::AlgebraError) -> Self {
        match e {
            rigid_algebra::AlgebraError::Budget(m) => BasepointError::Budget(m),
            other => BasepointError::Input(other.to_string()),
        }
    }
}
