//! Exact scalars: big integers, rationals, and the Euclidean ring ℚ[q].

mod poly;
mod scalar;
mod text;

pub use poly::PolyQ;
pub use scalar::{RingTag, Scalar};
pub use text::{format_rational, parse_rational};

/// Arbitrary-precision rationals, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;
pub use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("zero divisor")]
    ZeroDivisor,
    #[error("malformed scalar {text:?}: {reason}")]
    Parse { text: String, reason: String },
    #[error("value {0} is not an element of {1}")]
    NotInRing(String, &'static str),
}

/// Parse a rational string such as `9/10`, `-3` or `3/4`.
pub fn rational(text: &str) -> Result<Rational, ArithError> {
    parse_rational(text)
}
