//! LLL lattice basis reduction with exact rational Gram–Schmidt.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::linalg::{hnf, Matrix};

/// Rows of `vectors` are the basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBasis {
    pub vectors: Matrix<BigInt>,
    pub delta: Rational,
}

impl LatticeBasis {
    pub fn new(vectors: Matrix<BigInt>, delta: Rational) -> Result<Self> {
        check_delta(&delta)?;
        Ok(LatticeBasis { vectors, delta })
    }
}

pub fn check_delta(delta: &Rational) -> Result<()> {
    let quarter = Rational::new(1.into(), 4.into());
    if *delta <= quarter || *delta > Rational::one() {
        return Err(Error::BadDelta(crate::arith::format_rational(delta)));
    }
    Ok(())
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).fold(Rational::zero(), |s, t| s + t)
}

/// Gram–Schmidt data: `mu[i][j]` for `j < i` and squared norms `b_star[i]`.
#[derive(Clone, Debug)]
pub struct GramSchmidt {
    pub mu: Vec<Vec<Rational>>,
    pub b_star: Vec<Rational>,
}

pub fn gram_schmidt(basis: &Matrix<BigInt>) -> GramSchmidt {
    let n = basis.nrows();
    let rows: Vec<Vec<Rational>> = basis
        .rows()
        .map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect())
        .collect();
    let mut star: Vec<Vec<Rational>> = Vec::with_capacity(n);
    let mut mu = vec![vec![Rational::zero(); n]; n];
    let mut b_star = Vec::with_capacity(n);
    for i in 0..n {
        let mut v = rows[i].clone();
        for j in 0..i {
            if b_star[j] == Rational::zero() {
                continue;
            }
            let m = dot(&rows[i], &star[j]) / &b_star[j];
            for (x, y) in v.iter_mut().zip(&star[j]) {
                *x -= &m * y;
            }
            mu[i][j] = m;
        }
        b_star.push(dot(&v, &v));
        star.push(v);
    }
    GramSchmidt { mu, b_star }
}

fn round_half_up(r: &Rational) -> BigInt {
    let half = Rational::new(1.into(), 2.into());
    (r + half).floor().to_integer()
}

/// LLL-reduces the rows of `basis.vectors` at parameter `basis.delta`.
///
/// Swaps are taken lowest index first, so the output is deterministic.
pub fn lll_reduce(basis: &LatticeBasis) -> Result<Matrix<BigInt>> {
    check_delta(&basis.delta)?;
    let mut b = basis.vectors.clone();
    let n = b.nrows();
    let mut gs = gram_schmidt(&b);
    if gs.b_star.iter().any(Zero::is_zero) {
        return Err(Error::DependentRows);
    }
    let mut k = 1;
    while k < n {
        for j in (0..k).rev() {
            let r = round_half_up(&gs.mu[k][j]);
            if r.is_zero() {
                continue;
            }
            b.sub_row_multiple(k, j, &r);
            let rr = Rational::from_integer(r);
            for l in 0..j {
                let t = &rr * &gs.mu[j][l];
                gs.mu[k][l] -= t;
            }
            gs.mu[k][j] -= &rr;
        }
        let lhs = gs.b_star[k].clone();
        let rhs = (&basis.delta - &gs.mu[k][k - 1] * &gs.mu[k][k - 1]) * &gs.b_star[k - 1];
        if lhs >= rhs {
            k += 1;
        } else {
            b.swap_rows(k, k - 1);
            gs = gram_schmidt(&b);
            k = (k - 1).max(1);
        }
    }
    Ok(b)
}

/// Exact check of size reduction (`|mu| <= 1/2`) and the Lovász condition.
pub fn is_lll_reduced(b: &Matrix<BigInt>, delta: &Rational) -> bool {
    let gs = gram_schmidt(b);
    let half = Rational::new(1.into(), 2.into());
    let n = b.nrows();
    for i in 0..n {
        for j in 0..i {
            if gs.mu[i][j].abs() > half {
                return false;
            }
        }
    }
    (1..n).all(|k| {
        gs.b_star[k] >= (delta - &gs.mu[k][k - 1] * &gs.mu[k][k - 1]) * &gs.b_star[k - 1]
    })
}

/// True iff the row lattices of `a` and `b` coincide (canonical HNF
/// comparison).
pub fn lattice_equal(a: &Matrix<BigInt>, b: &Matrix<BigInt>) -> Result<bool> {
    if a.ncols() != b.ncols() {
        return Err(Error::Shape(format!("lattices in dimensions {} and {}", a.ncols(), b.ncols())));
    }
    Ok(hnf(a).basis() == hnf(b).basis())
}

pub fn squared_lengths(b: &Matrix<BigInt>) -> Vec<BigInt> {
    b.rows().map(|r| r.iter().map(|x| x * x).sum()).collect()
}

/// Orders reduced rows into the staircase shape used for display: each row
/// is negated if its leading entry is negative, then rows are sorted by
/// leading column and, within a column, by descending entries. Row
/// operations are limited to sign changes and reordering, so lengths are
/// preserved.
pub fn staircase_order(b: &Matrix<BigInt>) -> Matrix<BigInt> {
    let mut rows: Vec<Vec<BigInt>> = b
        .rows()
        .map(|r| {
            let lead_neg = r.iter().find(|x| !x.is_zero()).is_some_and(Signed::is_negative);
            if lead_neg {
                r.iter().map(|x| -x).collect()
            } else {
                r.to_vec()
            }
        })
        .collect();
    rows.sort_by(|x, y| {
        let lx = x.iter().position(|v| !v.is_zero()).unwrap_or(usize::MAX);
        let ly = y.iter().position(|v| !v.is_zero()).unwrap_or(usize::MAX);
        lx.cmp(&ly).then_with(|| y.cmp(x))
    });
    Matrix::from_rows(rows, b.ncols()).expect("same width")
}

/// Greatest common divisor of all entries of a row (zero for a zero row).
pub fn content(row: &[BigInt]) -> BigInt {
    row.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_i64_rows(rows)
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn orthogonal_basis_is_unchanged() {
        let b = z(&[&[2, 0], &[0, 3]]);
        let out = lll_reduce(&LatticeBasis::new(b.clone(), r(3, 4)).unwrap()).unwrap();
        assert_eq!(out, b);
    }

    #[test]
    fn skewed_plane_basis() {
        let b = z(&[&[1, 0], &[4, 1]]);
        let out = lll_reduce(&LatticeBasis::new(b.clone(), r(3, 4)).unwrap()).unwrap();
        assert!(lattice_equal(&b, &out).unwrap());
        // the shortest nonzero vector of Z^2 has squared length 1 (box search)
        let mut shortest = i64::MAX;
        for x in -5i64..=5 {
            for y in -5i64..=5 {
                if (x, y) != (0, 0) {
                    shortest = shortest.min(x * x + y * y);
                }
            }
        }
        let lens = squared_lengths(&out);
        assert_eq!(lens.iter().min().unwrap(), &BigInt::from(shortest));
        assert!(lens.iter().all(|l| *l <= BigInt::from(2)));
        assert!(is_lll_reduced(&out, &r(3, 4)));
    }

    #[test]
    fn dependent_rows_rejected() {
        let b = z(&[&[1, 2], &[2, 4]]);
        let basis = LatticeBasis { vectors: b, delta: r(3, 4) };
        assert!(matches!(lll_reduce(&basis), Err(Error::DependentRows)));
    }

    #[test]
    fn delta_range() {
        assert!(check_delta(&r(1, 4)).is_err());
        assert!(check_delta(&r(11, 10)).is_err());
        assert!(check_delta(&r(1, 1)).is_ok());
        assert!(check_delta(&r(9, 10)).is_ok());
    }

    #[test]
    fn lattice_equality_examples() {
        assert!(!lattice_equal(&z(&[&[1, 0]]), &z(&[&[2, 0]])).unwrap());
        assert!(lattice_equal(&z(&[&[1, 2], &[0, 1]]), &z(&[&[1, 0], &[1, 1]])).unwrap());
        assert!(lattice_equal(&z(&[&[1, 0]]), &z(&[&[1, 0, 0]])).is_err());
    }
}
