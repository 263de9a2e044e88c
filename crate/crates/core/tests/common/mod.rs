//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use operadlab::arith::{PolyQ, Rational};
use operadlab::linalg::Matrix;
use proptest::prelude::*;

pub mod props;

pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

pub fn int_matrix(rows: &[Vec<i64>], cols: usize) -> Matrix<BigInt> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| big(x)).collect()).collect(), cols)
        .unwrap()
}

/// Small integer matrices with `1..=max_rows` rows and `1..=max_cols` columns.
pub fn small_int_matrix(max_rows: usize, max_cols: usize, bound: i64) -> impl Strategy<Value = Matrix<BigInt>> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(proptest::collection::vec(-bound..=bound, c), r)
            .prop_map(move |rows| int_matrix(&rows, c))
    })
}

/// Polynomials of degree at most 2 with small integer coefficients.
pub fn small_poly() -> impl Strategy<Value = PolyQ> {
    proptest::collection::vec(-2i64..=2, 0..=3).prop_map(|c| PolyQ::from_ints(&c))
}

pub fn small_poly_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix<PolyQ>> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(small_poly(), c), r)
            .prop_map(move |rows| Matrix::from_rows(rows, c).unwrap())
    })
}

pub fn word() -> impl Strategy<Value = Vec<(usize, usize, i64)>> {
    proptest::collection::vec((0usize..8, 0usize..8, -2i64..=2), 0..12)
}

/// Solves `x · basis = v` over ℚ by Gaussian elimination on the transposed
/// system. Returns `None` when inconsistent; the rows of `basis` must be
/// linearly independent.
pub fn solve_left(basis: &[Vec<Rational>], v: &[Rational]) -> Option<Vec<Rational>> {
    let k = basis.len();
    let n = v.len();
    // Augmented matrix with n equations in k unknowns.
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|j| {
            let mut row: Vec<Rational> = basis.iter().map(|b| b[j].clone()).collect();
            row.push(v[j].clone());
            row
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..n).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = Rational::one() / a[r][c].clone();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..n {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let src = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(src) {
                    *x = &*x - &f * y;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    if a[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); k];
    for (i, &c) in pivot_cols.iter().enumerate() {
        x[c] = a[i][k].clone();
    }
    Some(x)
}

pub fn to_rat_rows(m: &Matrix<BigInt>) -> Vec<Vec<Rational>> {
    m.rows().map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect()).collect()
}

/// Is `v` an integer combination of the (independent) rows of `basis`?
pub fn in_integer_span(basis: &Matrix<BigInt>, v: &[BigInt]) -> bool {
    if v.iter().all(Zero::is_zero) {
        return true;
    }
    if basis.nrows() == 0 {
        return false;
    }
    let rv: Vec<Rational> = v.iter().map(|x| Rational::from_integer(x.clone())).collect();
    match solve_left(&to_rat_rows(basis), &rv) {
        Some(x) => x.iter().all(|c| c.is_integer()),
        None => false,
    }
}

/// Textbook Gram–Schmidt over ℚ, written independently of the library.
pub fn gso(rows: &[Vec<Rational>]) -> (Vec<Vec<Rational>>, Vec<Rational>) {
    let dot = |a: &[Rational], b: &[Rational]| -> Rational {
        a.iter().zip(b).fold(Rational::zero(), |s, (x, y)| s + x * y)
    };
    let n = rows.len();
    let mut stars: Vec<Vec<Rational>> = Vec::new();
    let mut norms: Vec<Rational> = Vec::new();
    let mut mu = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        let mut v = rows[i].clone();
        for j in 0..i {
            mu[i][j] = dot(&rows[i], &stars[j]) / norms[j].clone();
            for (x, y) in v.iter_mut().zip(&stars[j]) {
                *x = &*x - &mu[i][j] * y;
            }
        }
        norms.push(dot(&v, &v));
        stars.push(v);
    }
    (mu, norms)
}

/// Size reduction `|mu_ij| <= 1/2` and the Lovász condition at `delta`.
pub fn lll_certificate(m: &Matrix<BigInt>, delta: &Rational) -> bool {
    let rows = to_rat_rows(m);
    let (mu, b) = gso(&rows);
    let half = Rational::new(big(1), big(2));
    for i in 0..rows.len() {
        if mu[i][..i].iter().any(|m| m.abs() > half) {
            return false;
        }
        if i > 0 {
            let lhs = &b[i];
            let rhs = (delta - &mu[i][i - 1] * &mu[i][i - 1]) * &b[i - 1];
            if *lhs < rhs {
                return false;
            }
        }
    }
    true
}

/// `m · v` with machine integers.
pub fn apply_i64(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter().map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

/// All vectors in `{-1, 0, 1}^n`.
pub fn unit_box(n: usize) -> impl Iterator<Item = Vec<i64>> {
    (0..3usize.pow(n as u32)).map(move |mut k| {
        (0..n)
            .map(|_| {
                let d = (k % 3) as i64 - 1;
                k /= 3;
                d
            })
            .collect()
    })
}

pub fn to_i64_rows(m: &Matrix<BigInt>) -> Vec<Vec<i64>> {
    m.rows().map(|r| r.iter().map(|x| i64::try_from(x).unwrap()).collect()).collect()
}
