//! S3-submodules generated by relations: closure, canonical bases,
//! membership, and minimal generating sets.

use std::cmp::Ordering;

use super::monomial::Space;
use super::perm::Perm3;
use super::relation::Relation;
use crate::arith::Scalar;
use crate::error::{Error, Result};
use crate::linalg::{hnf, is_member, rank, HnfResult, Matrix};

/// Whether membership is decided over the coefficient ring itself or over
/// its fraction field.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Membership {
    /// Divisibility at pivots: ℤ-lattices, ℚ[q]-modules.
    #[default]
    Ring,
    /// Linear span over ℚ or ℚ(q).
    Field,
}

impl Membership {
    pub fn as_str(self) -> &'static str {
        match self {
            Membership::Ring => "ring",
            Membership::Field => "field",
        }
    }
}

fn common_space<S: Scalar>(rels: &[Relation<S>]) -> Result<Option<Space>> {
    let Some(first) = rels.first() else { return Ok(None) };
    for r in rels {
        r.check_space(first.space)?;
    }
    if !first.space.is_symmetric() {
        return Err(Error::NoSymmetricAction(first.space.name()));
    }
    Ok(Some(first.space))
}

/// All six permutation images of each generator, generator by generator,
/// permutations in lex order.
pub fn s3_closure<S: Scalar>(gens: &[Relation<S>]) -> Result<Matrix<S>> {
    let Some(space) = common_space(gens)? else {
        return Ok(Matrix::zeros(0, 0));
    };
    let mut rows = Vec::with_capacity(gens.len() * 6);
    for g in gens {
        for sigma in Perm3::all() {
            rows.push(g.act(sigma)?.coeffs);
        }
    }
    Matrix::from_rows(rows, space.dim())
}

/// The closure matrix and the Hermite normal form of its row module.
pub fn s3_module_hnf<S: Scalar>(gens: &[Relation<S>]) -> Result<(Matrix<S>, HnfResult<S>)> {
    let closure = s3_closure(gens)?;
    let h = hnf(&closure);
    Ok((closure, h))
}

/// Canonical basis (nonzero HNF rows) of the generated S3-module.
pub fn module_basis<S: Scalar>(gens: &[Relation<S>], width: usize) -> Result<Matrix<S>> {
    if gens.is_empty() {
        return Ok(Matrix::zeros(0, width));
    }
    Ok(s3_module_hnf(gens)?.1.basis())
}

fn contains<S: Scalar>(
    basis: &Matrix<S>,
    v: &[S],
    mode: Membership,
) -> Result<bool> {
    if v.iter().all(S::is_zero) {
        return Ok(true);
    }
    if basis.nrows() == 0 {
        return Ok(false);
    }
    match mode {
        Membership::Ring => is_member(basis, v),
        Membership::Field => {
            let extended = basis.vstack(&Matrix::from_rows(vec![v.to_vec()], v.len())?)?;
            Ok(rank(&extended) == basis.nrows())
        }
    }
}

/// Does `r` lie in the S3-module generated by `gens`?
pub fn in_module<S: Scalar>(gens: &[Relation<S>], r: &Relation<S>, mode: Membership) -> Result<bool> {
    if let Some(g) = gens.first() {
        r.check_space(g.space)?;
    }
    let basis = module_basis(gens, r.space.dim())?;
    contains(&basis, &r.coeffs, mode)
}

/// True iff both sets generate the same S3-module.
pub fn module_equal<S: Scalar>(a: &[Relation<S>], b: &[Relation<S>], mode: Membership) -> Result<bool> {
    let space = match (a.first(), b.first()) {
        (Some(x), Some(y)) => {
            y.check_space(x.space)?;
            x.space
        }
        (Some(x), None) | (None, Some(x)) => x.space,
        (None, None) => return Ok(true),
    };
    let ba = module_basis(a, space.dim())?;
    let bb = module_basis(b, space.dim())?;
    match mode {
        Membership::Ring => Ok(ba == bb),
        Membership::Field => {
            let ra = ba.nrows();
            Ok(ra == bb.nrows() && rank(&ba.vstack(&bb)?) == ra)
        }
    }
}

/// Result of generator extraction, as indices into the input list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extraction {
    /// Rows kept by the forward pass.
    pub forward: Vec<usize>,
    /// Rows remaining after the minimizing pass (equal to `forward` when
    /// minimization was not requested).
    pub minimal: Vec<usize>,
}

/// Keeps each row that is not in the S3-module generated by the rows kept
/// before it; with `minimize`, then drops every kept row whose removal
/// leaves the generated module unchanged.
pub fn extract_generators<S: Scalar>(
    rows: &[Relation<S>],
    minimize: bool,
    mode: Membership,
) -> Result<Extraction> {
    let Some(space) = common_space(rows)? else {
        return Ok(Extraction { forward: vec![], minimal: vec![] });
    };
    let width = space.dim();
    let mut forward: Vec<usize> = Vec::new();
    let mut basis = Matrix::zeros(0, width);
    for (i, r) in rows.iter().enumerate() {
        if !contains(&basis, &r.coeffs, mode)? {
            forward.push(i);
            let kept: Vec<Relation<S>> = forward.iter().map(|&k| rows[k].clone()).collect();
            basis = module_basis(&kept, width)?;
        }
    }
    let mut minimal = forward.clone();
    if minimize {
        let full: Vec<Relation<S>> = forward.iter().map(|&k| rows[k].clone()).collect();
        let full_basis = module_basis(&full, width)?;
        for &candidate in &forward {
            let rest: Vec<Relation<S>> = minimal
                .iter()
                .filter(|&&k| k != candidate)
                .map(|&k| rows[k].clone())
                .collect();
            let rest_basis = module_basis(&rest, width)?;
            let same = match mode {
                Membership::Ring => rest_basis == full_basis,
                Membership::Field => rest_basis.nrows() == full_basis.nrows(),
            };
            if same {
                minimal.retain(|&k| k != candidate);
            }
        }
    }
    Ok(Extraction { forward, minimal })
}

/// The permutation image of `r` whose leading monomial comes earliest in the
/// basis order, with the sign chosen to make the leading coefficient
/// positive. Generates the same S3-module as `r`.
pub fn orbit_representative<S: Scalar>(r: &Relation<S>) -> Result<Relation<S>> {
    if r.is_zero() {
        return Ok(r.clone());
    }
    let lead = |x: &Relation<S>| x.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(usize::MAX);
    let mut best: Option<Relation<S>> = None;
    for sigma in Perm3::all() {
        let mut image = r.act(sigma)?;
        if image.coeffs[lead(&image)].is_negative_sign() {
            image = image.scale(&S::one().neg_ref());
        }
        let better = match &best {
            None => true,
            Some(b) => lead(&image)
                .cmp(&lead(b))
                .then_with(|| {
                    image
                        .coeffs
                        .iter()
                        .zip(&b.coeffs)
                        .map(|(x, y)| x.cmp_canonical(y))
                        .find(|o| *o != Ordering::Equal)
                        .unwrap_or(Ordering::Equal)
                })
                .is_lt(),
        };
        if better {
            best = Some(image);
        }
    }
    Ok(best.expect("six images"))
}

/// Sort key: rows involving `q` first, then fewer nonzero entries, then
/// earlier leading column, then the canonical entry order. Returns the
/// permutation applied (`order[i]` is the source row of output row `i`).
pub fn sort_rows_published_order<S: Scalar>(m: &Matrix<S>) -> (Matrix<S>, Vec<usize>) {
    let mut order: Vec<usize> = (0..m.nrows()).collect();
    let key = |i: usize| {
        let r = m.row(i);
        let has_q = r.iter().any(S::involves_q);
        let weight = r.iter().filter(|x| !x.is_zero()).count();
        let lead = r.iter().position(|x| !x.is_zero()).unwrap_or(usize::MAX);
        (!has_q, weight, lead)
    };
    order.sort_by(|&a, &b| {
        key(a).cmp(&key(b)).then_with(|| {
            m.row(a)
                .iter()
                .zip(m.row(b))
                .map(|(x, y)| x.cmp_canonical(y))
                .find(|o| *o != Ordering::Equal)
                .unwrap_or(Ordering::Equal)
        })
    });
    (m.select_rows(order.iter().copied()), order)
}
