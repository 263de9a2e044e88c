//! Row-style Hermite normal form with a tracked transform.
//!
//! Normalization: nonzero rows first, pivot columns strictly increasing,
//! pivots positive (ℤ) / monic (ℚ[q]) / one (ℚ), and every entry above a
//! pivot reduced modulo it with the ring's canonical remainder.

use super::Matrix;
use crate::arith::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HnfResult<S: Scalar> {
    /// The Hermite normal form, same shape as the input.
    pub h: Matrix<S>,
    /// Square transform with `h = u * input`.
    pub u: Matrix<S>,
    /// Number of nonzero rows of `h`.
    pub rank: usize,
    /// Pivot column of each nonzero row.
    pub pivots: Vec<usize>,
    /// Determinant of `u`, accumulated from the elementary steps.
    pub det_u: S,
    /// `u⁻¹`, when requested.
    pub u_inv: Option<Matrix<S>>,
}

impl<S: Scalar> HnfResult<S> {
    /// The nonzero rows of `h`.
    pub fn basis(&self) -> Matrix<S> {
        self.h.select_rows(0..self.rank)
    }
}

/// Hermite normal form of `m` together with a unimodular transform.
pub fn hnf_with_transform<S: Scalar>(m: &Matrix<S>) -> HnfResult<S> {
    hnf_impl(m, true, false)
}

/// Like [`hnf_with_transform`], additionally tracking `u⁻¹` so invertibility
/// can be certified by checking `u * u⁻¹ = 1`.
pub fn hnf_with_inverse<S: Scalar>(m: &Matrix<S>) -> HnfResult<S> {
    hnf_impl(m, true, true)
}

/// Hermite normal form without the transform.
pub fn hnf<S: Scalar>(m: &Matrix<S>) -> HnfResult<S> {
    hnf_impl(m, false, false)
}

fn hnf_impl<S: Scalar>(m: &Matrix<S>, track_u: bool, track_inv: bool) -> HnfResult<S> {
    let (nr, nc) = (m.nrows(), m.ncols());
    let mut h = m.clone();
    let mut u = if track_u { Matrix::identity(nr) } else { Matrix::zeros(0, nr) };
    let mut inv = track_inv.then(|| Matrix::<S>::identity(nr));
    let mut det = S::one();
    let mut pivots = Vec::new();
    let mut r = 0;

    for col in 0..nc {
        if r == nr {
            break;
        }
        loop {
            // smallest-norm entry at or below r becomes the working pivot
            let best = (r..nr)
                .filter(|&i| !h[(i, col)].is_zero())
                .min_by(|&a, &b| h[(a, col)].norm().cmp(&h[(b, col)].norm()));
            let Some(best) = best else { break };
            if best != r {
                h.swap_rows(r, best);
                if track_u {
                    u.swap_rows(r, best);
                }
                if let Some(v) = inv.as_mut() {
                    swap_cols(v, r, best);
                }
                det = det.neg_ref();
            }
            let mut clean = true;
            for i in r + 1..nr {
                let b = h[(i, col)].clone();
                if b.is_zero() {
                    continue;
                }
                let a = h[(r, col)].clone();
                let (quo, rem) = b.div_rem(&a).expect("pivot is nonzero");
                if rem.is_zero() {
                    h.sub_row_multiple(i, r, &quo);
                    if track_u {
                        u.sub_row_multiple(i, r, &quo);
                    }
                    if let Some(v) = inv.as_mut() {
                        add_col_multiple(v, r, i, &quo);
                    }
                } else {
                    let (g, s, t) = S::xgcd(&a, &b);
                    let (a_g, _) = a.div_rem(&g).expect("gcd is nonzero");
                    let (b_g, _) = b.div_rem(&g).expect("gcd is nonzero");
                    let coeffs = [&s, &t, &b_g.neg_ref(), &a_g];
                    h.combine_rows(r, i, coeffs);
                    if track_u {
                        u.combine_rows(r, i, coeffs);
                    }
                    if let Some(v) = inv.as_mut() {
                        // inverse of [[s, t], [-b/g, a/g]] is [[a/g, -t], [b/g, s]]
                        combine_cols(v, r, i, [&a_g, &b_g, &t.neg_ref(), &s]);
                    }
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if h[(r, col)].is_zero() {
            continue;
        }
        let unit = h[(r, col)].normalizing_unit();
        if !unit.is_one() {
            h.scale_row(r, &unit);
            if track_u {
                u.scale_row(r, &unit);
            }
            if let Some(v) = inv.as_mut() {
                let back = S::one().div_rem(&unit).expect("unit").0;
                scale_col(v, r, &back);
            }
            det = det.mul_ref(&unit);
        }
        let pivot = h[(r, col)].clone();
        for i in 0..r {
            let (quo, _) = h[(i, col)].div_rem(&pivot).expect("pivot is nonzero");
            if !quo.is_zero() {
                h.sub_row_multiple(i, r, &quo);
                if track_u {
                    u.sub_row_multiple(i, r, &quo);
                }
                if let Some(v) = inv.as_mut() {
                    add_col_multiple(v, r, i, &quo);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }

    HnfResult { h, u, rank: r, pivots, det_u: det, u_inv: inv }
}

fn swap_cols<S: Scalar>(v: &mut Matrix<S>, a: usize, b: usize) {
    for i in 0..v.nrows() {
        let x = v[(i, a)].clone();
        v[(i, a)] = v[(i, b)].clone();
        v[(i, b)] = x;
    }
}

fn scale_col<S: Scalar>(v: &mut Matrix<S>, c: usize, by: &S) {
    for i in 0..v.nrows() {
        v[(i, c)] = v[(i, c)].mul_ref(by);
    }
}

/// `col[dst] += c * col[src]`: the inverse-side image of `row[src] -= c * row[dst]`.
fn add_col_multiple<S: Scalar>(v: &mut Matrix<S>, dst: usize, src: usize, c: &S) {
    for i in 0..v.nrows() {
        let s = &v[(i, src)];
        if !s.is_zero() {
            v[(i, dst)] = v[(i, dst)].add_ref(&c.mul_ref(s));
        }
    }
}

/// Columns `a`, `b` become `(x·ca + y·cb, z·ca + w·cb)`.
fn combine_cols<S: Scalar>(v: &mut Matrix<S>, a: usize, b: usize, [x, y, z, w]: [&S; 4]) {
    for i in 0..v.nrows() {
        let ca = v[(i, a)].clone();
        let cb = v[(i, b)].clone();
        v[(i, a)] = x.mul_ref(&ca).add_ref(&y.mul_ref(&cb));
        v[(i, b)] = z.mul_ref(&ca).add_ref(&w.mul_ref(&cb));
    }
}

/// Checks the normalization invariants of a Hermite normal form.
pub fn is_hnf<S: Scalar>(h: &Matrix<S>) -> bool {
    let mut last_pivot: Option<usize> = None;
    let mut seen_zero = false;
    for i in 0..h.nrows() {
        let lead = h.row(i).iter().position(|x| !x.is_zero());
        match lead {
            None => seen_zero = true,
            Some(c) => {
                if seen_zero || last_pivot.is_some_and(|p| c <= p) {
                    return false;
                }
                let p = &h[(i, c)];
                if !p.is_normalized() {
                    return false;
                }
                for k in 0..i {
                    let (_, rem) = h[(k, c)].div_rem(p).expect("pivot nonzero");
                    if rem != h[(k, c)] {
                        return false;
                    }
                }
                for k in i + 1..h.nrows() {
                    if !h[(k, c)].is_zero() {
                        return false;
                    }
                }
                last_pivot = Some(c);
            }
        }
    }
    true
}
