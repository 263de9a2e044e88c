use num_bigint::BigInt;
use num_traits::Zero;

use super::hnf::{hnf, hnf_with_transform};
use super::Matrix;
use crate::arith::{PolyQ, Rational, Scalar};
use crate::error::{Error, Result};

/// Rank over the fraction field of the scalar ring.
pub fn rank<S: Scalar>(m: &Matrix<S>) -> usize {
    hnf(m).rank
}

/// Basis of the left kernel-style null space `{v : m · vᵀ = 0}`.
///
/// Takes the last `n - r` rows of a transform `u` with `u · mᵀ` in Hermite
/// form, so over ℤ the rows generate the full kernel lattice and over ℚ[q]
/// the full kernel module.
pub fn nullspace_basis<S: Scalar>(m: &Matrix<S>) -> Matrix<S> {
    let res = hnf_with_transform(&m.transpose());
    res.u.select_rows(res.rank..m.ncols())
}

/// ℤ-basis of the saturation of the row lattice of `m`: every integer vector
/// in its rational row space. Computed as the null space of the null space.
pub fn rowspace_saturation_basis<S: Scalar>(m: &Matrix<S>) -> Result<Matrix<S>> {
    if S::RING != crate::arith::RingTag::Int {
        return Err(Error::SaturationRing);
    }
    Ok(nullspace_basis(&nullspace_basis(m)))
}

/// Reduces `v` against the rows of `h` (which must be in Hermite normal
/// form). The result is zero exactly when `v` lies in the row module of `h`
/// over the scalar ring.
pub fn membership_reduce<S: Scalar>(h: &Matrix<S>, v: &[S]) -> Result<Vec<S>> {
    if v.len() != h.ncols() {
        return Err(Error::Shape(format!("row of width {} against {} columns", v.len(), h.ncols())));
    }
    let mut rem = v.to_vec();
    for row in h.rows() {
        let Some(c) = row.iter().position(|x| !x.is_zero()) else { break };
        if rem[c].is_zero() {
            continue;
        }
        let (quo, _) = rem[c].div_rem(&row[c])?;
        if quo.is_zero() {
            continue;
        }
        for (x, y) in rem.iter_mut().zip(row) {
            if !y.is_zero() {
                *x = x.sub_ref(&quo.mul_ref(y));
            }
        }
    }
    Ok(rem)
}

pub fn is_member<S: Scalar>(h: &Matrix<S>, v: &[S]) -> Result<bool> {
    Ok(membership_reduce(h, v)?.iter().all(Zero::is_zero))
}

/// Evaluates every entry at `q = q0`.
pub fn specialize_matrix(m: &Matrix<PolyQ>, q0: &Rational) -> Matrix<Rational> {
    m.map(|p| p.eval(q0))
}

/// Fraction-free (Bareiss) determinant; needs exact division in the ring.
pub fn determinant<S: Scalar>(m: &Matrix<S>) -> Result<S> {
    let n = m.nrows();
    if n != m.ncols() {
        return Err(Error::Shape(format!("determinant of a {}x{} matrix", n, m.ncols())));
    }
    if n == 0 {
        return Ok(S::one());
    }
    let mut a = m.clone();
    let mut sign = false;
    let mut prev = S::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                return Ok(S::zero());
            };
            a.swap_rows(k, p);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[(i, j)].mul_ref(&a[(k, k)]).sub_ref(&a[(i, k)].mul_ref(&a[(k, j)]));
                let (quo, rem) = num.div_rem(&prev)?;
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                a[(i, j)] = quo;
            }
            a[(i, k)] = S::zero();
        }
        prev = a[(k, k)].clone();
    }
    let d = a[(n - 1, n - 1)].clone();
    Ok(if sign { d.neg_ref() } else { d })
}

/// Converts a polynomial matrix with integer constant entries back to ℤ.
pub fn poly_to_int(m: &Matrix<PolyQ>) -> Result<Matrix<BigInt>> {
    m.try_map(|p| match p.as_constant() {
        Some(c) if c.is_integer() => Ok(c.to_integer()),
        _ => Err(crate::arith::ArithError::NotInRing(p.to_string(), "Z").into()),
    })
}

/// Converts a rational matrix with integer entries to ℤ.
pub fn rat_to_int(m: &Matrix<Rational>) -> Result<Matrix<BigInt>> {
    m.try_map(|c| {
        if c.is_integer() {
            Ok(c.to_integer())
        } else {
            Err(crate::arith::ArithError::NotInRing(c.to_string(), "Z").into())
        }
    })
}

pub fn to_poly<S: Scalar>(m: &Matrix<S>) -> Matrix<PolyQ> {
    m.map(Scalar::to_poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::linalg::hnf::hnf_with_transform;

    fn z(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_i64_rows(rows)
    }

    #[test]
    fn rank_of_zero_and_identity() {
        assert_eq!(rank(&Matrix::<BigInt>::zeros(3, 4)), 0);
        assert_eq!(rank(&Matrix::<PolyQ>::identity(4)), 4);
    }

    #[test]
    fn invertible_matrix_has_empty_kernel() {
        let n = nullspace_basis(&z(&[&[2, 1], &[1, 1]]));
        assert_eq!(n.nrows(), 0);
    }

    #[test]
    fn kernel_of_all_ones_row() {
        let n = nullspace_basis(&z(&[&[1, 1, 1]]));
        assert_eq!(n.nrows(), 2);
        let h = hnf(&n).basis();
        // brute force: every kernel vector with entries in [-2, 2] is in the lattice
        for a in -2..=2i64 {
            for b in -2..=2i64 {
                for c in -2..=2i64 {
                    let v: Vec<BigInt> = [a, b, c].iter().map(|&x| x.into()).collect();
                    let in_kernel = a + b + c == 0;
                    assert_eq!(is_member(&h, &v).unwrap(), in_kernel, "{a} {b} {c}");
                }
            }
        }
        let expected = hnf(&z(&[&[1, -1, 0], &[0, 1, -1]])).h;
        assert_eq!(hnf(&n).h, expected);
    }

    #[test]
    fn saturation_examples() {
        let s = rowspace_saturation_basis(&z(&[&[2, 0], &[0, 1]])).unwrap();
        assert_eq!(hnf(&s).h, Matrix::identity(2));

        let s = rowspace_saturation_basis(&z(&[&[1, 1, 0], &[0, 2, 2]])).unwrap();
        let h = hnf(&s).basis();
        let target: Vec<BigInt> = [0, 1, 1].iter().map(|&x| BigInt::from(x)).collect();
        assert!(is_member(&h, &target).unwrap());
        let h_orig = hnf(&z(&[&[1, 1, 0], &[0, 2, 2]])).basis();
        assert!(!is_member(&h_orig, &target).unwrap());
    }

    #[test]
    fn saturation_rejects_polynomials() {
        let m = Matrix::<PolyQ>::identity(2);
        assert!(matches!(rowspace_saturation_basis(&m), Err(Error::SaturationRing)));
    }

    #[test]
    fn membership_rejects_wrong_width() {
        let h = Matrix::<BigInt>::identity(2);
        assert!(membership_reduce(&h, &[BigInt::from(1)]).is_err());
    }

    #[test]
    fn unit_vector_not_in_q_pivot_module() {
        let q = PolyQ::q();
        let m = Matrix::from_rows(vec![vec![q.clone(), PolyQ::one()]], 2).unwrap();
        let h = hnf_with_transform(&m).h;
        assert!(!is_member(&h, &[PolyQ::one(), PolyQ::zero()]).unwrap());
        assert!(is_member(&h, &[&q * &q, q.clone()]).unwrap());
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let m = z(&[&[2, -1, 0], &[1, 3, 4], &[0, 5, -2]]);
        // 2*(3*-2 - 4*5) - (-1)*(1*-2 - 0) + 0 = -52 - 2
        assert_eq!(determinant(&m).unwrap(), BigInt::from(-54));
    }

    #[test]
    fn specialization_of_identity() {
        let id = Matrix::<PolyQ>::identity(3);
        let s = specialize_matrix(&id, &Rational::from_integer(7.into()));
        assert_eq!(s, Matrix::identity(3));
    }
}
