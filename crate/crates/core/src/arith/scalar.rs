use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{text, ArithError, PolyQ, Rational};

/// Which coefficient ring a matrix or relation lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RingTag {
    #[serde(rename = "Z")]
    Int,
    #[serde(rename = "Q")]
    Rat,
    #[serde(rename = "Q[q]")]
    Poly,
}

impl RingTag {
    pub fn as_str(self) -> &'static str {
        match self {
            RingTag::Int => "Z",
            RingTag::Rat => "Q",
            RingTag::Poly => "Q[q]",
        }
    }
}

impl Display for RingTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RingTag {
    type Err = ArithError;
    fn from_str(s: &str) -> Result<Self, ArithError> {
        match s {
            "Z" => Ok(RingTag::Int),
            "Q" => Ok(RingTag::Rat),
            "Q[q]" => Ok(RingTag::Poly),
            _ => Err(ArithError::Parse { text: s.into(), reason: "unknown ring tag".into() }),
        }
    }
}

/// An element of a Euclidean domain with a canonical choice of associate
/// and of remainder, which is exactly what a canonical Hermite normal form
/// needs.
///
/// Implemented for `BigInt` (ℤ), `Rational` (ℚ, a field) and `PolyQ` (ℚ[q]).
pub trait Scalar:
    Clone + PartialEq + Eq + Debug + Display + Send + Sync + Zero + One + 'static
{
    const RING: RingTag;

    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    /// Euclidean norm: `|n|` over ℤ, degree over ℚ[q], 0 for nonzero
    /// rationals. Undefined (returned as 0) for zero.
    fn norm(&self) -> BigUint;

    /// Division with the canonical remainder: in `[0, |d|)` over ℤ, of degree
    /// below `deg d` over ℚ[q], always zero over ℚ.
    fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), ArithError>;

    /// `(g, s, t)` with `s*a + t*b = g` and `g` the normalized gcd.
    fn xgcd(a: &Self, b: &Self) -> (Self, Self, Self);

    /// The unit `u` such that `u * self` is the normalized associate
    /// (positive over ℤ, monic over ℚ[q], one over ℚ). One for zero.
    fn normalizing_unit(&self) -> Self;

    fn is_unit(&self) -> bool;

    fn parse(text: &str) -> Result<Self, ArithError>;

    fn from_i64(n: i64) -> Self;

    /// The same value as an element of ℚ[q].
    fn to_poly(&self) -> PolyQ;

    /// Whether a rendered term should carry a leading minus sign.
    fn is_negative_sign(&self) -> bool;

    /// A fixed total order, used only for deterministic tie-breaks.
    fn cmp_canonical(&self, other: &Self) -> std::cmp::Ordering;

    /// True for polynomials of positive degree.
    fn involves_q(&self) -> bool {
        false
    }

    fn is_normalized(&self) -> bool {
        self.is_zero() || self.normalizing_unit().is_one()
    }

    fn divides(&self, other: &Self) -> bool {
        match other.div_rem(self) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => other.is_zero(),
        }
    }
}

impl Scalar for BigInt {
    const RING: RingTag = RingTag::Int;

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn norm(&self) -> BigUint {
        self.magnitude().clone()
    }
    fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), ArithError> {
        if divisor.is_zero() {
            return Err(ArithError::ZeroDivisor);
        }
        // floor division by |d| keeps the remainder in [0, |d|)
        let d_abs = divisor.abs();
        let (quo, rem) = self.div_mod_floor(&d_abs);
        let quo = if divisor.is_negative() { -quo } else { quo };
        Ok((quo, rem))
    }
    fn xgcd(a: &Self, b: &Self) -> (Self, Self, Self) {
        let e = a.extended_gcd(b);
        let (g, s, t) = (e.gcd, e.x, e.y);
        if g.is_negative() {
            (-g, -s, -t)
        } else {
            (g, s, t)
        }
    }
    fn normalizing_unit(&self) -> Self {
        if self.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn parse(text: &str) -> Result<Self, ArithError> {
        text::parse_integer(text)
    }
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
    fn to_poly(&self) -> PolyQ {
        PolyQ::from_int(self.clone())
    }
    fn is_negative_sign(&self) -> bool {
        self.is_negative()
    }
    fn cmp_canonical(&self, other: &Self) -> std::cmp::Ordering {
        self.cmp(other)
    }
}

impl Scalar for Rational {
    const RING: RingTag = RingTag::Rat;

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn norm(&self) -> BigUint {
        BigUint::zero()
    }
    fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), ArithError> {
        if divisor.is_zero() {
            return Err(ArithError::ZeroDivisor);
        }
        Ok((self / divisor, Rational::zero()))
    }
    fn xgcd(a: &Self, b: &Self) -> (Self, Self, Self) {
        if !a.is_zero() {
            (Rational::one(), a.recip(), Rational::zero())
        } else if !b.is_zero() {
            (Rational::one(), Rational::zero(), b.recip())
        } else {
            (Rational::zero(), Rational::zero(), Rational::zero())
        }
    }
    fn normalizing_unit(&self) -> Self {
        if self.is_zero() {
            Rational::one()
        } else {
            self.recip()
        }
    }
    fn is_unit(&self) -> bool {
        !self.is_zero()
    }
    fn parse(text: &str) -> Result<Self, ArithError> {
        text::parse_rational(text)
    }
    fn from_i64(n: i64) -> Self {
        Rational::from_integer(n.into())
    }
    fn to_poly(&self) -> PolyQ {
        PolyQ::constant(self.clone())
    }
    fn is_negative_sign(&self) -> bool {
        self.is_negative()
    }
    fn cmp_canonical(&self, other: &Self) -> std::cmp::Ordering {
        self.cmp(other)
    }
}

impl Scalar for PolyQ {
    const RING: RingTag = RingTag::Poly;

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn norm(&self) -> BigUint {
        BigUint::from(self.degree().unwrap_or(0))
    }
    fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), ArithError> {
        PolyQ::div_rem(self, divisor)
    }
    fn xgcd(a: &Self, b: &Self) -> (Self, Self, Self) {
        PolyQ::xgcd(a, b)
    }
    fn normalizing_unit(&self) -> Self {
        match self.leading_coeff() {
            None => PolyQ::one(),
            Some(lc) => PolyQ::constant(lc.recip()),
        }
    }
    fn is_unit(&self) -> bool {
        self.degree() == Some(0)
    }
    fn parse(text: &str) -> Result<Self, ArithError> {
        text::parse_poly(text)
    }
    fn from_i64(n: i64) -> Self {
        PolyQ::from_int(n)
    }
    fn to_poly(&self) -> PolyQ {
        self.clone()
    }
    fn is_negative_sign(&self) -> bool {
        self.is_negative_leading()
    }
    fn cmp_canonical(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.coeffs().iter().rev().cmp(other.coeffs().iter().rev()))
    }
    fn involves_q(&self) -> bool {
        self.degree().is_some_and(|d| d > 0)
    }
}
