//! Exact arithmetic: prime fields, monomials, sparse polynomials, gradings
//! and the textual polynomial syntax.

mod field;
mod grading;
mod monomial;
mod poly;
mod text;

pub use field::{Coeff, FieldElement, FieldOp, PrimeField, DEFAULT_PRIME};
pub use grading::Bigrading;
pub use monomial::{Exponent, Monomial, MonomialOrder};
pub(crate) use monomial::degrevlex_slices;
pub use poly::{PolyRing, Polynomial};
pub use text::ParseError;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("modulus {0} is not prime")]
    NotPrime(u32),
    #[error("modulus {0} does not fit in 31 bits")]
    ModulusTooLarge(u32),
    #[error("zero has no multiplicative inverse")]
    InverseOfZero,
    #[error("variable count mismatch: {0} vs {1}")]
    VariableCountMismatch(usize, usize),
    #[error("variable weights must be positive")]
    NonPositiveWeight,
}
