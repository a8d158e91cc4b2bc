//! Exact arithmetic in cyclotomic fields.
//!
//! Elements live in Q(ζ_m) in the power basis modulo the m-th cyclotomic
//! polynomial, so equality is coefficient equality. Mixed conductors are
//! coerced up to their lcm.

mod cyclotomic;
mod poly;
mod root;

pub use cyclotomic::{euler_phi, Cyclotomic};
pub use root::RootOfUnity;

/// Arbitrary-precision rational, always reduced with positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse field element from {0:?}")]
    Parse(String),
}
