//! Exact computation of one-parameter deformations of the dendriform and
//! diassociative operads in arity three.
//!
//! The crate is layered bottom-up: [`arith`] (ℤ, ℚ, ℚ[q]), [`linalg`]
//! (Hermite normal forms, kernels, saturation), [`lattice`] (exact LLL),
//! [`operad`] (monomial bases, the S3 action, module closure and generator
//! extraction), [`morphisms`] (splitting, polarization, Koszul sign twists)
//! and [`pipelines`], which chains them into reproducible reports.

pub mod arith;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod morphisms;
pub mod operad;
pub mod pipelines;
pub mod reference;

pub use error::{Error, Result};
