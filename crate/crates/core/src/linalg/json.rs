//! Matrix interchange: `{"ring":"Z"|"Q"|"Q[q]","rows":m,"cols":n,"entries":[[...]]}`
//! with entries in the scalar text grammar, plus a CSV export.

use serde::{Deserialize, Serialize};

use super::Matrix;
use crate::arith::{BigInt, PolyQ, Rational, RingTag, Scalar};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDoc {
    pub ring: RingTag,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

/// A matrix whose ring is only known at run time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DynMatrix {
    Int(Matrix<BigInt>),
    Rat(Matrix<Rational>),
    Poly(Matrix<PolyQ>),
}

/// Scalars that can be boxed into a [`DynMatrix`].
pub trait DynScalar: Scalar {
    fn wrap(m: Matrix<Self>) -> DynMatrix;
    fn unwrap_dyn(m: DynMatrix) -> Result<Matrix<Self>>;
}

macro_rules! dyn_scalar {
    ($t:ty, $v:ident) => {
        impl DynScalar for $t {
            fn wrap(m: Matrix<Self>) -> DynMatrix {
                DynMatrix::$v(m)
            }
            fn unwrap_dyn(m: DynMatrix) -> Result<Matrix<Self>> {
                match m {
                    DynMatrix::$v(m) => Ok(m),
                    other => Err(Error::RingMismatch {
                        expected: <$t as Scalar>::RING.as_str(),
                        found: other.ring().as_str(),
                    }),
                }
            }
        }
    };
}
dyn_scalar!(BigInt, Int);
dyn_scalar!(Rational, Rat);
dyn_scalar!(PolyQ, Poly);

impl<S: DynScalar> From<Matrix<S>> for DynMatrix {
    fn from(m: Matrix<S>) -> Self {
        S::wrap(m)
    }
}

impl DynMatrix {
    pub fn ring(&self) -> RingTag {
        match self {
            DynMatrix::Int(_) => RingTag::Int,
            DynMatrix::Rat(_) => RingTag::Rat,
            DynMatrix::Poly(_) => RingTag::Poly,
        }
    }

    pub fn to_doc(&self) -> MatrixDoc {
        match self {
            DynMatrix::Int(m) => doc_of(m),
            DynMatrix::Rat(m) => doc_of(m),
            DynMatrix::Poly(m) => doc_of(m),
        }
    }

    pub fn from_doc(doc: &MatrixDoc) -> Result<Self> {
        Ok(match doc.ring {
            RingTag::Int => DynMatrix::Int(parse_doc(doc)?),
            RingTag::Rat => DynMatrix::Rat(parse_doc(doc)?),
            RingTag::Poly => DynMatrix::Poly(parse_doc(doc)?),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_doc()).expect("matrix docs always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: MatrixDoc = serde_json::from_str(text)?;
        Self::from_doc(&doc)
    }

    pub fn to_csv(&self) -> String {
        match self {
            DynMatrix::Int(m) => to_csv(m),
            DynMatrix::Rat(m) => to_csv(m),
            DynMatrix::Poly(m) => to_csv(m),
        }
    }

    pub fn shape(&self) -> (usize, usize) {
        match self {
            DynMatrix::Int(m) => (m.nrows(), m.ncols()),
            DynMatrix::Rat(m) => (m.nrows(), m.ncols()),
            DynMatrix::Poly(m) => (m.nrows(), m.ncols()),
        }
    }
}

fn doc_of<S: Scalar>(m: &Matrix<S>) -> MatrixDoc {
    MatrixDoc {
        ring: S::RING,
        rows: m.nrows(),
        cols: m.ncols(),
        entries: m.rows().map(|r| r.iter().map(ToString::to_string).collect()).collect(),
    }
}

fn parse_doc<S: Scalar>(doc: &MatrixDoc) -> Result<Matrix<S>> {
    if doc.entries.len() != doc.rows {
        return Err(Error::Format(format!(
            "declared {} rows but found {}",
            doc.rows,
            doc.entries.len()
        )));
    }
    let mut rows = Vec::with_capacity(doc.rows);
    for (i, r) in doc.entries.iter().enumerate() {
        if r.len() != doc.cols {
            return Err(Error::Format(format!(
                "row {i} has {} entries, declared {} columns",
                r.len(),
                doc.cols
            )));
        }
        rows.push(r.iter().map(|s| S::parse(s)).collect::<Result<Vec<S>, _>>()?);
    }
    Matrix::from_rows(rows, doc.cols)
}

pub fn to_csv<S: Scalar>(m: &Matrix<S>) -> String {
    let mut out = String::new();
    for r in m.rows() {
        let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}
