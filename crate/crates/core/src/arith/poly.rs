//! Dense univariate polynomials in `q` with rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{ArithError, Rational};

/// A polynomial in `q` over the rationals.
///
/// `coeffs[i]` is the coefficient of `q^i`. The vector never ends in a zero
/// coefficient, so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyQ {
    coeffs: Vec<Rational>,
}

impl PolyQ {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolyQ { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        PolyQ::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn constant(c: Rational) -> Self {
        PolyQ::new(vec![c])
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        PolyQ::constant(Rational::from_integer(n.into()))
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        PolyQ::from_ints(&[0, 1])
    }

    /// `q + c`.
    pub fn q_plus(c: i64) -> Self {
        PolyQ::from_ints(&[c, 1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `q^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// The constant value, if this polynomial has degree ≤ 0.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &Rational) -> PolyQ {
        if c.is_zero() {
            return PolyQ::zero();
        }
        PolyQ { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Divide by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> PolyQ {
        match self.leading_coeff() {
            None => PolyQ::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Horner evaluation at `q0`.
    pub fn eval(&self, q0: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * q0 + c)
    }

    /// Euclidean division: `self = divisor * quotient + remainder` with
    /// `remainder = 0` or `deg remainder < deg divisor`.
    pub fn div_rem(&self, divisor: &PolyQ) -> Result<(PolyQ, PolyQ), ArithError> {
        let dd = divisor.degree().ok_or(ArithError::ZeroDivisor)?;
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((PolyQ::zero(), PolyQ::zero()));
        };
        if nd < dd {
            return Ok((PolyQ::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((PolyQ::new(quot), PolyQ::new(rem)))
    }

    /// Extended gcd: `(g, s, t)` with `s*f + t*g' = g`, `g` monic or zero.
    pub fn xgcd(f: &PolyQ, g: &PolyQ) -> (PolyQ, PolyQ, PolyQ) {
        let (mut r0, mut r1) = (f.clone(), g.clone());
        let (mut s0, mut s1) = (PolyQ::one(), PolyQ::zero());
        let (mut t0, mut t1) = (PolyQ::zero(), PolyQ::one());
        while !r1.is_zero() {
            let (quo, rem) = r0.div_rem(&r1).expect("nonzero divisor");
            let s2 = &s0 - &(&quo * &s1);
            let t2 = &t0 - &(&quo * &t1);
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.leading_coeff().cloned() {
            None => (PolyQ::zero(), PolyQ::zero(), PolyQ::zero()),
            Some(lc) => {
                let inv = lc.recip();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    /// True when every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Nonzero terms from highest degree down.
    pub fn terms_descending(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
    }

    pub fn is_negative_leading(&self) -> bool {
        self.leading_coeff().is_some_and(Signed::is_negative)
    }
}

impl Zero for PolyQ {
    fn zero() -> Self {
        PolyQ { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for PolyQ {
    fn one() -> Self {
        PolyQ::from_ints(&[1])
    }
}

impl<'a> Add<&'a PolyQ> for &'a PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyQ::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a PolyQ> for &'a PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyQ::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a PolyQ> for &'a PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: &PolyQ) -> PolyQ {
        if self.is_zero() || rhs.is_zero() {
            return PolyQ::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyQ::new(out)
    }
}

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! by_value {
    ($tr:ident, $m:ident) => {
        impl $tr for PolyQ {
            type Output = PolyQ;
            fn $m(self, rhs: PolyQ) -> PolyQ {
                (&self).$m(&rhs)
            }
        }
    };
}
by_value!(Add, add);
by_value!(Sub, sub);
by_value!(Mul, mul);

impl Neg for PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        -&self
    }
}

impl fmt::Debug for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyQ({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn divrem_examples() {
        let (quo, rem) = PolyQ::from_ints(&[0, 3, 1]).div_rem(&PolyQ::q_plus(3)).unwrap();
        assert_eq!(quo, PolyQ::q());
        assert!(rem.is_zero());

        let (quo, rem) = PolyQ::q_plus(-1).div_rem(&PolyQ::q_plus(3)).unwrap();
        assert_eq!(quo, PolyQ::one());
        assert_eq!(rem, PolyQ::from_int(-4));

        let (quo, rem) = PolyQ::q_plus(3).div_rem(&PolyQ::from_int(2)).unwrap();
        assert_eq!(quo, PolyQ::new(vec![r(3, 2), r(1, 2)]));
        assert!(rem.is_zero());
    }

    #[test]
    fn divide_by_zero_polynomial() {
        assert_eq!(PolyQ::q().div_rem(&PolyQ::zero()), Err(ArithError::ZeroDivisor));
    }

    #[test]
    fn xgcd_examples() {
        let (g, s, t) = PolyQ::xgcd(&PolyQ::q_plus(3), &PolyQ::q_plus(-1));
        assert_eq!(g, PolyQ::one());
        assert_eq!(s, PolyQ::constant(r(1, 4)));
        assert_eq!(t, PolyQ::constant(r(-1, 4)));

        let q2 = PolyQ::from_ints(&[0, 0, 1]);
        let (g, s, t) = PolyQ::xgcd(&q2, &PolyQ::q());
        assert_eq!((g, s, t), (PolyQ::q(), PolyQ::zero(), PolyQ::one()));

        let (g, s, t) = PolyQ::xgcd(&PolyQ::zero(), &PolyQ::q_plus(-1));
        assert_eq!((g, s, t), (PolyQ::q_plus(-1), PolyQ::zero(), PolyQ::one()));

        let z = PolyQ::zero();
        assert_eq!(PolyQ::xgcd(&z, &z), (z.clone(), z.clone(), z));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(PolyQ::q_plus(3).eval(&r(1, 1)), r(4, 1));
        assert_eq!(PolyQ::q_plus(-1).eval(&r(1, 1)), r(0, 1));
        let big = PolyQ::from_ints(&[13361, 5018, -16850, -14894, 5184, 5230, 2386, 550, 15]);
        // oracle: at q = 1 the value is the plain sum of the coefficients
        let sum: i64 = [15, 550, 2386, 5230, 5184, -14894, -16850, 5018, 13361].iter().sum();
        assert_eq!(sum, 0);
        assert_eq!(big.eval(&r(1, 1)), r(sum, 1));
    }
}
