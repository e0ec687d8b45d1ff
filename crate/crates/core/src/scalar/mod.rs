//! Exact arithmetic in Q(i)(q).
//!
//! `q` is a free symbol, so it is never a root of unity. Concrete values of
//! `q` enter only through [`Scalar::specialize`].

mod field;
mod gaussian;
mod poly;

pub(crate) use field::check_specialization_point;
pub use field::{ConjugationMode, Scalar};
pub use gaussian::GaussianRational;
pub use poly::QPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot specialize q to {0}: zero and roots of unity are excluded")]
    InvalidSpecialization(String),
    #[error("scalar has a pole at q = {0}")]
    PoleAtSpecialization(String),
}
