//! Randomized property suites, runnable with an explicit case count.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use operadlab::arith::{PolyQ, Rational, Scalar};
use operadlab::lattice::{lattice_equal, lll_reduce, LatticeBasis};
use operadlab::linalg::{
    determinant, hnf, hnf_with_transform, is_member, nullspace_basis, rank, Matrix,
};
use operadlab::morphisms::{expand_polarized, polarize};
use operadlab::operad::{perm_act, Monomial, Perm3, Relation, Space};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRng, TestRunner};

use super::*;

pub fn run_cases<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    let rng = TestRng::deterministic_rng(config.rng_algorithm);
    let mut runner = TestRunner::new_with_rng(config, rng);
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

fn mix<S: Scalar>(m: &Matrix<S>, word: &[(usize, usize, i64)], mult: impl Fn(i64) -> S) -> Matrix<S> {
    let n = m.nrows();
    let mut out = m.clone();
    for &(a, b, k) in word {
        let (a, b) = (a % n, b % n);
        if a == b {
            out.scale_row(a, &S::one().neg_ref());
        } else if k == 0 {
            out.swap_rows(a, b);
        } else {
            out.sub_row_multiple(a, b, &mult(k));
        }
    }
    out
}

/// The Hermite form is unchanged by unimodular row mixing, over ℤ and ℚ[q].
pub fn hnf_canonicity(cases: u32) -> Result<(), String> {
    run_cases(cases, (small_int_matrix(6, 8, 3), word()), |(m, w)| {
        let mixed = mix(&m, &w, BigInt::from);
        prop_assert_eq!(hnf(&mixed).h, hnf(&m).h);
        Ok(())
    })?;
    run_cases(cases, (small_poly_matrix(4, 5), word()), |(m, w)| {
        let mixed = mix(&m, &w, |k| PolyQ::from_ints(&[k, 1, k]));
        prop_assert_eq!(hnf(&mixed).h, hnf(&m).h);
        Ok(())
    })
}

/// `H = U·M` with `|det U| = 1` over ℤ and `det U` a nonzero constant over ℚ[q].
pub fn hnf_transform(cases: u32) -> Result<(), String> {
    run_cases(cases, small_int_matrix(6, 8, 4), |m| {
        let res = hnf_with_transform(&m);
        prop_assert_eq!(res.u.mul(&m).unwrap(), res.h.clone());
        let det = determinant(&res.u).unwrap();
        prop_assert!(det.abs().is_one(), "det U = {}", det);
        prop_assert_eq!(det, res.det_u);
        Ok(())
    })?;
    run_cases(cases, small_poly_matrix(4, 5), |m| {
        let res = hnf_with_transform(&m);
        prop_assert_eq!(res.u.mul(&m).unwrap(), res.h.clone());
        let det = determinant(&res.u).unwrap();
        prop_assert!(det.is_constant() && !det.is_zero(), "det U = {}", det);
        prop_assert_eq!(det, res.det_u);
        Ok(())
    })
}

fn delta_strategy() -> impl Strategy<Value = Rational> {
    (26i64..=100).prop_map(|k| Rational::new(BigInt::from(k), BigInt::from(100)))
}

/// LLL keeps the lattice and produces exact size-reduction and Lovász
/// certificates checked by an independent Gram–Schmidt.
pub fn lll_properties(cases: u32) -> Result<(), String> {
    run_cases(cases, (small_int_matrix(5, 7, 6), delta_strategy()), |(m, delta)| {
        if rank(&m) < m.nrows() {
            return Ok(());
        }
        let out = lll_reduce(&LatticeBasis::new(m.clone(), delta.clone()).unwrap()).unwrap();
        prop_assert_eq!(out.nrows(), m.nrows());
        prop_assert!(lattice_equal(&out, &m).unwrap());
        prop_assert!(lll_certificate(&out, &delta));
        Ok(())
    })
}

fn any_monomial() -> impl Strategy<Value = Monomial> {
    prop_oneof![Just(Space::So1Plain), Just(Space::So1Polar), Just(Space::So2)]
        .prop_flat_map(|s| (0..s.dim()).prop_map(move |i| Monomial::from_index(s, i)))
}

fn any_perm() -> impl Strategy<Value = Perm3> {
    (0usize..6).prop_map(Perm3::from_index)
}

/// `(σ∘τ)·m = σ·(τ·m)` with signs multiplying, and the identity acts trivially.
pub fn s3_composition(cases: u32) -> Result<(), String> {
    run_cases(cases, (any_monomial(), any_perm(), any_perm()), |(m, s, t)| {
        let lhs = perm_act(s.compose(t), &m).unwrap();
        let inner = perm_act(t, &m).unwrap();
        let outer = perm_act(s, &inner.monomial).unwrap();
        prop_assert_eq!(lhs.monomial, outer.monomial);
        prop_assert_eq!(lhs.sign, inner.sign * outer.sign);
        let id = perm_act(Perm3::IDENTITY, &m).unwrap();
        prop_assert_eq!((id.sign, id.monomial), (1, m));
        Ok(())
    })
}

/// Expanding a polarized relation with the doubled convention returns four
/// times the original plain relation.
pub fn polarize_round_trip(cases: u32) -> Result<(), String> {
    run_cases(cases, proptest::collection::vec(-5i64..=5, 12), |c| {
        let r: Relation<BigInt> = Relation::from_i64(Space::So1Plain, &c).unwrap();
        let back = expand_polarized(&polarize(&r).unwrap()).unwrap();
        prop_assert_eq!(back, r.scale(&BigInt::from(4)));
        Ok(())
    })
}

/// The computed kernel agrees with exhaustive search over `{-1,0,1}^n`, and
/// membership by reduction agrees with solving over ℚ.
pub fn kernel_and_membership(cases: u32) -> Result<(), String> {
    run_cases(cases, small_int_matrix(6, 8, 2), |m| {
        let b = nullspace_basis(&m);
        let r = rank(&m);
        prop_assert_eq!(b.nrows(), m.ncols() - r);
        prop_assert!(m.mul(&b.transpose()).unwrap().is_zero());
        let mi = to_i64_rows(&m);
        for v in unit_box(m.ncols()) {
            if apply_i64(&mi, &v).iter().all(|x| *x == 0) {
                let bv: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
                prop_assert!(in_integer_span(&b, &bv), "kernel vector {:?} missing", v);
            }
        }
        Ok(())
    })?;
    let strat = (small_int_matrix(6, 8, 3), proptest::collection::vec(-2i64..=2, 14));
    run_cases(cases, strat, |(m, mix)| {
        let h = hnf(&m).basis();
        let n = m.ncols();
        // Alternate between module members and arbitrary vectors.
        let member_like = mix[0] >= 0;
        let v: Vec<BigInt> = if member_like {
            (0..n)
                .map(|j| (0..m.nrows()).fold(BigInt::zero(), |s, i| s + &m[(i, j)] * mix[(i + 1) % mix.len()]))
                .collect()
        } else {
            (0..n).map(|j| BigInt::from(mix[(j + 3) % mix.len()])).collect()
        };
        let expected = in_integer_span(&h, &v);
        if member_like {
            prop_assert!(expected);
        }
        prop_assert_eq!(is_member(&h, &v).unwrap(), expected);
        Ok(())
    })
}

pub type Suite = fn(u32) -> Result<(), String>;

pub const SUITES: [(&str, Suite); 6] = [
    ("hnf canonicity under unimodular mixing", hnf_canonicity),
    ("hnf transform and determinant", hnf_transform),
    ("lll lattice preservation and certificates", lll_properties),
    ("s3 action composition law", s3_composition),
    ("polarize round trip", polarize_round_trip),
    ("kernel and membership against brute force", kernel_and_membership),
];
