//! Sparse integer matrices, Smith normal form, and homology of bigraded
//! complexes.

mod complex;
mod int;
mod matrix;
mod snf;
mod table;

use thiserror::Error;

pub use complex::{graded_homology, graded_homology_with, GradedComplex, Mode};
pub use matrix::SparseIntMatrix;
pub use snf::{rank_mod_prime, smith_normal_form, SmithForm};
pub use table::{Group, HomologyTable};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("d∘d is nonzero starting at (i, j) = ({i}, {j})")]
    DSquaredNonzero { i: i64, j: i64 },
}
