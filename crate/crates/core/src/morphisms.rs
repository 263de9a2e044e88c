//! Structural maps between the arity-3 spaces.

use crate::arith::Scalar;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::operad::{canonicalize_polar, Monomial, Op, Relation, Space, Tree};

/// Association types grouped by the dendriform splitting of the associator,
/// 0-based: `{1,5,6}`, `{2,4,8}`, `{3,7}` in the usual 1-based numbering.
pub const DENDRIFORM_BLOCKS: [&[usize]; 3] = [&[0, 4, 5], &[1, 3, 7], &[2, 6]];

/// `a b ↦ a<b + a>b` at both nodes: plain type 1 goes to types 1–4 and plain
/// type 2 to types 5–8, keeping the argument arrangement.
pub fn split_expand<S: Scalar>(r: &Relation<S>) -> Result<Relation<S>> {
    let target = match r.space {
        Space::O1 => Space::O2,
        Space::So1Plain => Space::So2,
        other => {
            return Err(Error::WrongSpace { expected: "O1 or SO1_PLAIN".into(), found: other.name() })
        }
    };
    let mut terms = Vec::new();
    for (c, m) in r.terms() {
        for k in 0..4 {
            terms.push((c.clone(), Monomial::new(target, m.ty * 4 + k, m.args)?));
        }
    }
    Relation::from_terms(target, terms)
}

/// Rewrites every product as `[x,y] + x o y` and normalizes by
/// (anti)commutativity. With the half-scaled bracket and Jordan product the
/// substitution is exact.
pub fn polarize<S: Scalar>(r: &Relation<S>) -> Result<Relation<S>> {
    if !matches!(r.space, Space::O1 | Space::So1Plain) {
        return Err(Error::WrongSpace { expected: "O1 or SO1_PLAIN".into(), found: r.space.name() });
    }
    let mut out: Relation<S> = Relation::zero(Space::So1Polar);
    for (c, m) in r.terms() {
        let Tree::Node(_, l, rt) = m.to_tree() else { unreachable!() };
        let left_nested = matches!(*l, Tree::Node(..));
        let (compound, single) = if left_nested { (*l, *rt) } else { (*rt, *l) };
        let Tree::Node(_, x, y) = compound else { unreachable!() };
        for inner in [Op::Lie, Op::Jordan] {
            for outer in [Op::Lie, Op::Jordan] {
                let pair = Tree::node(inner, (*x).clone(), (*y).clone());
                let t = if left_nested {
                    Tree::node(outer, pair, single.clone())
                } else {
                    Tree::node(outer, single.clone(), pair)
                };
                let sm = canonicalize_polar(&t)?;
                let i = sm.monomial.index();
                let term = if sm.sign < 0 { c.neg_ref() } else { c.clone() };
                out.coeffs[i] = out.coeffs[i].add_ref(&term);
            }
        }
    }
    Ok(out)
}

/// Expands `[x,y] ↦ xy − yx` and `x o y ↦ xy + yx` (the doubled convention,
/// four times the half-scaled expansion) into the plain symmetric basis.
pub fn expand_polarized<S: Scalar>(r: &Relation<S>) -> Result<Relation<S>> {
    r.check_space(Space::So1Polar)?;
    let mut out: Relation<S> = Relation::zero(Space::So1Plain);
    for (c, m) in r.terms() {
        let [x, y, z] = m.args.arrangement();
        let inner_lie = m.ty == 0 || m.ty == 2;
        let outer_lie = m.ty == 0 || m.ty == 1;
        let s1 = if inner_lie { -1 } else { 1 };
        let s2 = if outer_lie { -1 } else { 1 };
        let plain = |ty: usize, a: [u8; 3]| {
            Monomial::new(Space::So1Plain, ty, crate::operad::Perm3::new(a).unwrap())
        };
        // (xy)z + s1 (yx)z + s2 z(xy) + s1 s2 z(yx)
        for (sign, mono) in [
            (1, plain(0, [x, y, z])?),
            (s1, plain(0, [y, x, z])?),
            (s2, plain(1, [z, x, y])?),
            (s1 * s2, plain(1, [z, y, x])?),
        ] {
            let i = mono.index();
            let term = if sign < 0 { c.neg_ref() } else { c.clone() };
            out.coeffs[i] = out.coeffs[i].add_ref(&term);
        }
    }
    Ok(out)
}

/// A column reordering with both directions: `forward[new] = old`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnPermutation {
    pub forward: Vec<usize>,
    pub inverse: Vec<usize>,
}

impl ColumnPermutation {
    pub fn new(forward: Vec<usize>) -> Result<Self> {
        let n = forward.len();
        let mut inverse = vec![usize::MAX; n];
        for (new, &old) in forward.iter().enumerate() {
            if old >= n || inverse[old] != usize::MAX {
                return Err(Error::Shape("not a bijection".into()));
            }
            inverse[old] = new;
        }
        Ok(ColumnPermutation { forward, inverse })
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    /// Reorders columns from the original order into the permuted order.
    pub fn apply<S: Scalar>(&self, m: &Matrix<S>) -> Matrix<S> {
        m.select_cols(&self.forward)
    }

    /// Undoes [`apply`](Self::apply).
    pub fn undo<S: Scalar>(&self, m: &Matrix<S>) -> Matrix<S> {
        m.select_cols(&self.inverse)
    }
}

/// The dendriform column reordering for `O2` (8 columns) or `SO2` (48).
pub fn dendriform_xi(width: usize) -> Result<ColumnPermutation> {
    let group = match width {
        8 => 1,
        48 => 6,
        w => return Err(Error::Shape(format!("dendriform partition needs 8 or 48 columns, got {w}"))),
    };
    let forward = DENDRIFORM_BLOCKS
        .iter()
        .flat_map(|types| types.iter().flat_map(move |&t| t * group..(t + 1) * group))
        .collect();
    ColumnPermutation::new(forward)
}

/// Splits the columns of `m` into the three dendriform blocks.
pub fn dendriform_partition<S: Scalar>(m: &Matrix<S>) -> Result<(Vec<Matrix<S>>, ColumnPermutation)> {
    let xi = dendriform_xi(m.ncols())?;
    let permuted = xi.apply(m);
    let mut blocks = Vec::with_capacity(3);
    let mut start = 0;
    let group = m.ncols() / 8;
    for types in DENDRIFORM_BLOCKS {
        let w = types.len() * group;
        blocks.push(permuted.select_cols(&(start..start + w).collect::<Vec<_>>()));
        start += w;
    }
    Ok((blocks, xi))
}

/// Block-diagonal assembly.
pub fn block_diagonal<S: Scalar>(blocks: &[Matrix<S>]) -> Matrix<S> {
    let rows: usize = blocks.iter().map(Matrix::nrows).sum();
    let cols: usize = blocks.iter().map(Matrix::ncols).sum();
    let mut out = Matrix::zeros(rows, cols);
    let (mut r0, mut c0) = (0, 0);
    for b in blocks {
        for i in 0..b.nrows() {
            for j in 0..b.ncols() {
                out[(r0 + i, c0 + j)] = b[(i, j)].clone();
            }
        }
        r0 += b.nrows();
        c0 += b.ncols();
    }
    out
}

/// Column scale factors of the Koszul sign twist.
pub fn koszul_signs(width: usize) -> Result<Vec<i64>> {
    match width {
        8 => Ok((0..8).map(|t| if t < 4 { 1 } else { -1 }).collect()),
        48 => Ok(Space::So2
            .basis()
            .map(|m| m.args.sign() * if m.ty < 4 { 1 } else { -1 })
            .collect()),
        w => Err(Error::Shape(format!("sign twist needs 8 or 48 columns, got {w}"))),
    }
}

/// Nonsymmetric (8 columns): negate the second-parenthesization columns.
/// Symmetric (48 columns): also scale each column by the sign of its
/// argument permutation.
pub fn koszul_sign_twist<S: Scalar>(m: &Matrix<S>, symmetric: bool) -> Result<Matrix<S>> {
    let expected = if symmetric { 48 } else { 8 };
    if m.ncols() != expected {
        return Err(Error::Shape(format!("sign twist expects {expected} columns, got {}", m.ncols())));
    }
    let signs = koszul_signs(expected)?;
    let mut out = m.clone();
    for i in 0..m.nrows() {
        for (j, &s) in signs.iter().enumerate() {
            if s < 0 {
                out[(i, j)] = out[(i, j)].neg_ref();
            }
        }
    }
    Ok(out)
}
