//! Statement matrices on a periodic lattice of `L` sites.
//!
//! Integrals over the coordinate become sums over sites and Dirac deltas
//! become Kronecker deltas. A momentum statement is the circulant projector
//! `(1/L)·exp(2πi·k·(q′ − q)/L)`; a position statement is the single-site
//! diagonal matrix `K·δ_{q q₀}δ_{q′ q₀}`.

mod matrix;
mod statements;

pub use matrix::ComplexMatrix;
pub use statements::{
    build_momentum_statement, build_position_statement, commutator_norm, eigenvector_check,
    joint_probability, mode_overlap, plane_wave, verify_idempotent, EigenReport, LatticeConfig,
    MomentumStatement, PositionStatement, StatementMatrix,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LatticeError {
    #[error("lattice needs at least 2 sites, got {0}")]
    TooFewSites(usize),
    #[error("constant K must be finite and positive, got {0}")]
    NonPositiveK(f64),
    #[error("mode {mode} outside 0..{sites}")]
    ModeOutOfRange { mode: usize, sites: usize },
    #[error("site {site} outside 0..{sites}")]
    SiteOutOfRange { site: usize, sites: usize },
    #[error("statements live on different lattices")]
    ConfigMismatch,
}
