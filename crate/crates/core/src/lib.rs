//! Exact construction and verification of fooling-set matrices over prime
//! fields.
//!
//! The matrices come from the order-`r` linear recurring sequence
//! `f(k+r) = -f(k) - f(k+1)`, `f(0) = 1`, `f(1) = ... = f(r-1) = 0` over F_p,
//! arranged as `M[k][l] = f(k - l)`. With `r = p^t + 1` and
//! `n = r(r-1) + 1` the `n x n` matrix is a fooling-set matrix of rank `r`,
//! so `n / rank^2` tends to 1.
//!
//! Modules:
//! - [`field`]: residues mod p
//! - [`lrs`]: sequences on all of Z, periods and the zero-block / cross-symmetry checks
//! - [`matrix`], [`format`]: dense matrices, exact rank, FSM/CSV text formats
//! - [`foolmat`]: the construction and its verifiers
//! - [`search`]: maximum fooling-set submatrices of arbitrary patterns
//! - [`tensor`]: Kronecker products and tensor powers

pub mod error;
pub mod field;
pub mod foolmat;
pub mod format;
pub mod lrs;
pub mod matrix;
pub mod search;
pub mod tensor;

pub use error::{Error, Result};
pub use field::{FpElement, PrimeField};
pub use foolmat::{
    construct, construct_with_limit, matrix_from_sequence, ratio_report, row_recurrence_check,
    verify_fooling, FoolingBundle, FoolingWitness, RatioRow, RowRecurrenceReport,
    DEFAULT_SIZE_LIMIT,
};
pub use lrs::{
    cross_symmetry_check, zero_blocks_check, CrossSymmetryReport, Lrs, ZeroBlockReport,
    DEFAULT_PERIOD_CAP,
};
pub use matrix::{rank_mod_p, Matrix};
pub use num_rational::Ratio;
pub use search::{
    brute_force_fooling, compatibility_graph, cross_free_check, is_fooling_submatrix,
    max_fooling_submatrix, CompatibilityGraph, PatternMatrix, SearchResult, DEFAULT_NODE_BUDGET,
};
pub use tensor::{exponent_estimate, kron, tensor_power, ExponentEstimate};
