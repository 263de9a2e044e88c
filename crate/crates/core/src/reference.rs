//! Published matrices and relations that the pipelines are checked against.

use crate::arith::{BigInt, PolyQ, Scalar};
use crate::error::Result;
use crate::linalg::Matrix;
use crate::operad::{Relation, Space};

/// Coefficients of the three dendriform relations over the eight
/// two-operation monomials.
pub const DEND: [[i64; 8]; 3] = [
    [1, 0, 0, 0, -1, -1, 0, 0],
    [0, 1, 0, 1, 0, 0, 0, -1],
    [0, 0, 1, 0, 0, 0, -1, 0],
];

/// The dendriform matrix after negating the second-parenthesization columns.
pub const DEND_TWISTED: [[i64; 8]; 3] = [
    [1, 0, 0, 0, 1, 1, 0, 0],
    [0, 1, 0, 1, 0, 0, 0, 1],
    [0, 0, 1, 0, 0, 0, 1, 0],
];

/// Short kernel basis of the twisted dendriform matrix: the diassociative
/// relations.
pub const DIAS_N: [[i64; 8]; 5] = [
    [1, 0, 0, 0, -1, 0, 0, 0],
    [1, 0, 0, 0, 0, -1, 0, 0],
    [0, 1, 0, -1, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, -1],
    [0, 0, 1, 0, 0, 0, -1, 0],
];

/// Chains of equal monomials in the diassociative relations (0-based
/// indices into the eight-monomial basis): left associativity with the left
/// bar identity, right associativity with the right bar identity, inner
/// associativity.
pub const DIAS_CHAINS: [&[usize]; 3] = [&[0, 4, 5], &[1, 3, 7], &[2, 6]];

pub const P: [[i64; 12]; 6] = [
    [1, 0, 1, 1, 0, 1, 1, 0, -1, 1, 0, -1],
    [0, 1, -1, 0, 1, 1, 0, 1, 1, 0, 1, -1],
    [-1, 1, 0, 1, 1, 0, -1, -1, 0, 1, -1, 0],
    [0, -1, 1, 0, 1, 1, 0, 1, 1, 0, -1, 1],
    [1, -1, 0, 1, 1, 0, -1, -1, 0, -1, 1, 0],
    [-1, 0, -1, 1, 0, 1, 1, 0, -1, -1, 0, 1],
];

pub const N2: [[i64; 12]; 6] = [
    [-1, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, -1, -1, 0, 1, 1, 0, 0, 0, 0],
    [0, 0, 0, -1, 0, 0, 0, 1, 1, 0, 0, 0],
    [0, 0, 0, -1, -1, -1, 0, 0, 0, 0, 0, 0],
    [0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 1, 0],
    [0, -1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 1],
];

pub const N2_SQUARED_LENGTHS: [i64; 6] = [3, 4, 3, 3, 3, 3];

pub const N3: [[i64; 12]; 6] = [
    [1, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1],
    [0, 0, 1, 0, 0, 0, 0, 0, 0, 1, -1, 0],
    [0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, -1, -1, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, -1, 0, 1, 0, 0, 0],
];

/// The six relations read off the rows of `N3`, as printed.
pub const N3_RELATIONS: [&str; 6] = [
    "[[a,b],c] - [[a,c],b] + [[b,c],a]",
    "[[a,c],b] + (a o b) o c - (b o c) o a",
    "[[b,c],a] + (a o b) o c - (a o c) o b",
    "[a o b,c] + [a o c,b] + [b o c,a]",
    "[a o b,c] - [a,c] o b - [b,c] o a",
    "[a o c,b] - [a,b] o c + [b,c] o a",
];

/// Rows (1-based) kept by the forward pass and by minimization.
pub const N3_FORWARD_ROWS: [usize; 4] = [1, 2, 4, 5];
pub const N3_MINIMAL_ROWS: [usize; 2] = [2, 5];

pub const ASSOCIATOR_RELATION: &str = "[[a,c],b] + (a o b) o c - (b o c) o a";
pub const DERIVATION_RELATION: &str = "[a o b,c] - [a,c] o b - [b,c] o a";

/// The deformed polarized relations over ℚ[q]: Jacobi, the deformed
/// associator relation, the derivation relation.
pub const DEFORMED_POLAR: [&str; 3] = [
    "[[a,b],c] - [[a,c],b] + [[b,c],a]",
    "q*[[a,c],b] + (a o b) o c - (b o c) o a",
    "[a o b,c] - [a,c] o b - [b,c] o a",
];

/// Hermite normal form of the S3-module generated by the last two deformed
/// relations, entries as scalar strings.
pub const DEFORMED_HNF: [[&str; 12]; 6] = [
    ["q", "0", "0", "0", "0", "0", "0", "0", "0", "0", "1", "-1"],
    ["0", "q", "0", "0", "0", "0", "0", "0", "0", "1", "0", "-1"],
    ["0", "0", "q", "0", "0", "0", "0", "0", "0", "1", "-1", "0"],
    ["0", "0", "0", "1", "0", "0", "0", "-1", "-1", "0", "0", "0"],
    ["0", "0", "0", "0", "1", "0", "-1", "0", "1", "0", "0", "0"],
    ["0", "0", "0", "0", "0", "1", "1", "1", "0", "0", "0", "0"],
];

/// Poisson relations, written as displayed (not yet normalized).
pub const POISSON: [&str; 3] = [
    "[[a,b],c] + [[b,c],a] + [[c,a],b]",
    "(a o b) o c - (b o c) o a",
    "[a o b,c] - [a,c] o b - a o [b,c]",
];

/// Split expansions of the three deformed relations as 4×12 arrays
/// (component `k = 12 i + j`).
pub const SPLIT_DEFORMED: [[[&str; 12]; 4]; 3] = [
    [
        ["1", "-1", "-1", "1", "1", "-1", "1", "-1", "-1", "1", "1", "-1"],
        ["1", "-1", "-1", "1", "1", "-1", "1", "-1", "-1", "1", "1", "-1"],
        ["-1", "1", "1", "-1", "-1", "1", "-1", "1", "1", "-1", "-1", "1"],
        ["-1", "1", "1", "-1", "-1", "1", "-1", "1", "1", "-1", "-1", "1"],
    ],
    [
        ["1", "q", "1", "-1", "-q", "-1", "1", "q", "1", "-1", "-q", "-1"],
        ["1", "q", "1", "-1", "-q", "-1", "1", "q", "1", "-1", "-q", "-1"],
        ["-1", "-1", "-q", "q", "1", "1", "-1", "-1", "-q", "q", "1", "1"],
        ["-1", "-1", "-q", "q", "1", "1", "-1", "-1", "-q", "q", "1", "1"],
    ],
    [
        ["1", "-1", "1", "-1", "1", "1", "1", "-1", "1", "-1", "1", "1"],
        ["1", "-1", "1", "-1", "1", "1", "1", "-1", "1", "-1", "1", "1"],
        ["-1", "1", "-1", "1", "-1", "-1", "-1", "1", "-1", "1", "-1", "-1"],
        ["-1", "1", "-1", "1", "-1", "-1", "-1", "1", "-1", "1", "-1", "-1"],
    ],
];

const QP3: &str = "q + 3";
const QM1: &str = "q - 1";
const MQP1: &str = "-q + 1";
const MQM3: &str = "-q - 3";

/// Block Hermite normal forms of the split deformed relations, zero rows
/// removed. `"."` marks a zero entry.
pub const BLOCK_HNF_1: [[&str; 18]; 6] = [
    ["1", ".", ".", ".", ".", "1", "-1", ".", ".", ".", ".", "-1", "-1", ".", ".", ".", ".", "-1"],
    [".", "1", ".", ".", "-1", "1", ".", "-1", ".", ".", "1", "-1", ".", "-1", ".", ".", "1", "-1"],
    [".", ".", "1", ".", "1", ".", ".", ".", "-1", ".", "-1", ".", ".", ".", "-1", ".", "-1", "."],
    [".", ".", ".", "1", "1", "-1", ".", ".", ".", "-1", "-1", "1", ".", ".", ".", "-1", "-1", "1"],
    [".", ".", ".", ".", QP3, ".", QM1, MQP1, ".", MQP1, MQM3, QM1, QM1, MQP1, ".", MQP1, MQM3, QM1],
    [".", ".", ".", ".", ".", QP3, ".", MQP1, QM1, MQP1, QM1, MQM3, ".", MQP1, QM1, MQP1, QM1, MQM3],
];

pub const BLOCK_HNF_2: [[&str; 18]; 6] = [
    ["1", ".", ".", ".", ".", "1", "1", ".", ".", ".", ".", "1", "-1", ".", ".", ".", ".", "-1"],
    [".", "1", ".", ".", "-1", "1", ".", "1", ".", ".", "-1", "1", ".", "-1", ".", ".", "1", "-1"],
    [".", ".", "1", ".", "1", ".", ".", ".", "1", ".", "1", ".", ".", ".", "-1", ".", "-1", "."],
    [".", ".", ".", "1", "1", "-1", ".", ".", ".", "1", "1", "-1", ".", ".", ".", "-1", "-1", "1"],
    [".", ".", ".", ".", QP3, ".", ".", ".", ".", ".", QP3, ".", QM1, MQP1, ".", MQP1, MQM3, QM1],
    [".", ".", ".", ".", ".", QP3, ".", ".", ".", ".", ".", QP3, ".", MQP1, QM1, MQP1, QM1, MQM3],
];

pub const BLOCK_HNF_3: [[&str; 12]; 6] = [
    ["1", ".", ".", ".", ".", "1", "-1", ".", ".", ".", ".", "-1"],
    [".", "1", ".", ".", "-1", "1", ".", "-1", ".", ".", "1", "-1"],
    [".", ".", "1", ".", "1", ".", ".", ".", "-1", ".", "-1", "."],
    [".", ".", ".", "1", "1", "-1", ".", ".", ".", "-1", "-1", "1"],
    [".", ".", ".", ".", QP3, ".", QM1, MQP1, ".", MQP1, MQM3, QM1],
    [".", ".", ".", ".", ".", QP3, ".", MQP1, QM1, MQP1, QM1, MQM3],
];

/// The three relations of the deformed dendriform operad.
pub const DEND_DEFORMED: [&str; 3] = [
    "(q + 3)*((a>b)<c) - (q + 3)*(a>(b<c)) \
     + (q - 1)*(a>(c<b)) - (q - 1)*(b>(a<c)) + (q - 1)*(b>(c<a)) - (q - 1)*(c>(a<b))",
    "(q + 3)*((a<b)>c) + (q + 3)*((a>b)>c) - (q + 3)*(a>(b>c)) \
     + (q - 1)*(a>(c>b)) - (q - 1)*(b>(a>c)) + (q - 1)*(b>(c>a)) - (q - 1)*(c>(a>b))",
    "(q + 3)*((a<b)<c) - (q + 3)*(a<(b<c)) - (q + 3)*(a<(b>c)) \
     + (q - 1)*(a<(c<b)) - (q - 1)*(b<(a<c)) + (q - 1)*(b<(c<a)) - (q - 1)*(c<(a<b)) \
     + (q - 1)*(a<(c>b)) - (q - 1)*(b<(a>c)) + (q - 1)*(b<(c>a)) - (q - 1)*(c<(a>b))",
];

/// The five relations of the deformed diassociative operad; the last two
/// are the undeformed bar identities.
pub const DIAS_DEFORMED: [&str; 5] = [
    "(q + 3)*((a>b)<c) - (q + 3)*(a>(b<c)) \
     + (q - 1)*(a>(c<b)) - (q - 1)*(b>(a<c)) + (q - 1)*(b>(c<a)) - (q - 1)*(c>(a<b))",
    "(q + 3)*((a>b)>c) - (q + 3)*(a>(b>c)) \
     + (q - 1)*(a>(c>b)) - (q - 1)*(b>(a>c)) + (q - 1)*(b>(c>a)) - (q - 1)*(c>(a>b))",
    "(q + 3)*((a<b)<c) - (q + 3)*(a<(b>c)) \
     + (q - 1)*(a<(c>b)) - (q - 1)*(b<(a>c)) + (q - 1)*(b<(c>a)) - (q - 1)*(c<(a>b))",
    "((a<b)>c) - ((a>b)>c)",
    "(a<(b<c)) - (a<(b>c))",
];

pub fn int_matrix<const C: usize>(rows: &[[i64; C]]) -> Matrix<BigInt> {
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    Matrix::from_i64_rows(&refs)
}

pub fn poly_matrix<const C: usize>(rows: &[[&str; C]]) -> Result<Matrix<PolyQ>> {
    let rows = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|s| PolyQ::parse(if *s == "." { "0" } else { s }))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Matrix::from_rows(rows, C)
}

/// Flattens a 4×12 display into the 48-component relation.
pub fn split_relation(display: &[[&str; 12]; 4]) -> Result<Relation<PolyQ>> {
    let coeffs = display
        .iter()
        .flatten()
        .map(|s| PolyQ::parse(s))
        .collect::<Result<Vec<_>, _>>()?;
    Relation::new(Space::So2, coeffs)
}

pub fn parse_relations<S: Scalar>(space: Space, texts: &[&str]) -> Result<Vec<Relation<S>>> {
    texts.iter().map(|t| Relation::parse(space, t)).collect()
}

/// Embeds a nonsymmetric two-operation relation into `SO2` with the
/// identity argument order.
pub fn embed_o2<S: Scalar>(r: &Relation<S>) -> Result<Relation<S>> {
    r.check_space(Space::O2)?;
    let mut out = Relation::zero(Space::So2);
    for (t, c) in r.coeffs.iter().enumerate() {
        out.coeffs[t * 6] = c.clone();
    }
    Ok(out)
}
