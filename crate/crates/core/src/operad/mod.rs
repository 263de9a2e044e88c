//! Arity-3 monomial bases, the signed S3 action, relations, and S3-module
//! computations.

mod module;
mod monomial;
mod perm;
mod relation;

pub use module::{
    extract_generators, in_module, module_basis, module_equal, orbit_representative, s3_closure,
    s3_module_hnf,
    sort_rows_published_order, Extraction, Membership,
};
pub use monomial::{
    canonicalize_polar, parse_tree, perm_act, Monomial, Op, RenderOptions, SignedMonomial, Space,
    Tree,
};
pub use perm::{Perm3, PERMS};
pub use relation::{matrix_to_relations, relations_to_matrix, Relation, RelationDoc};
