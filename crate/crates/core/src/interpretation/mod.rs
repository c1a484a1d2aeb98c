//! Interpretations as points of an affine line, certain (δ-function)
//! interpretations, the permutations relating them, and the finite-order
//! argument showing no displacement-indexed permutation rule can reach a
//! non-identical interpretation.

mod affine;
mod certain;
mod permutation;
mod theorem1;

pub use affine::{InterpretationPoint, ThetaInterval};
pub use certain::{apply_permutation, certain, CertainInterpretation};
pub use permutation::{permutation_power, Permutation};
pub use theorem1::{
    exhaustive_algorithm_search, factorial, step_displacement, theorem1_contradiction_witness,
    AlgorithmSearch, ContradictionWitness, MAX_SEARCH_SIZE,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InterpretationError {
    #[error("index {index} outside 1..={size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("interpretation space needs at least 2 statements, got {0}")]
    TooFewStatements(usize),
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("images {0:?} do not form a bijection on 1..=N")]
    NotABijection(Vec<usize>),
    #[error("exhaustive search supports 2 <= N <= {max}, got {0}", max = MAX_SEARCH_SIZE)]
    SearchSize(usize),
    #[error("interval bounds must be finite with min <= max")]
    InvalidInterval,
}
