//! Exact dense linear algebra over ℤ, ℚ and ℚ[q].

mod hnf;
mod json;
mod matrix;
mod ops;

pub use hnf::{hnf, hnf_with_inverse, hnf_with_transform, is_hnf, HnfResult};
pub use json::{to_csv, DynMatrix, DynScalar, MatrixDoc};
pub use matrix::Matrix;
pub use ops::{
    determinant, is_member, membership_reduce, nullspace_basis, poly_to_int, rank, rat_to_int,
    rowspace_saturation_basis, specialize_matrix, to_poly,
};
