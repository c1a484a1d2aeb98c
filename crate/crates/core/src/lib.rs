//! Quantum-type coherence without a quantum of action, made executable.
//!
//! * [`logic`]: propositional formulas and their minterm expansion.
//! * [`interpretation`]: certain interpretations, permutations, and the
//!   finite-order argument against displacement-indexed truth maps.
//! * [`probability`]: `p(θ) = cos²(aθ)`, classical composition and the
//!   interference term.
//! * [`lattice`]: idempotent momentum statements and single-site position
//!   statements on a periodic lattice.
//! * [`mc`]: seeded Monte Carlo chains estimating the interference term.
//! * [`cli`]: the `coherence-lab` command line.
//!
//! The numeric modules are generic over [`Real`] (`f32` or `f64`); the
//! aliases below fix the scalar to `f64`.

pub mod cli;
pub mod interpretation;
pub mod lattice;
pub mod logic;
pub mod mc;
pub mod probability;
mod scalar;

pub use scalar::Real;

pub type CoherenceModel64 = probability::CoherenceModel<f64>;
pub type AnswerProbability64 = probability::AnswerProbability<f64>;
pub type InterpretationPoint64 = interpretation::InterpretationPoint<f64>;
pub type ThetaInterval64 = interpretation::ThetaInterval<f64>;
pub type LatticeConfig64 = lattice::LatticeConfig<f64>;
pub type MomentumStatement64 = lattice::MomentumStatement<f64>;
pub type PositionStatement64 = lattice::PositionStatement<f64>;
pub type ComplexMatrix64 = lattice::ComplexMatrix<f64>;
pub type TrialPlan64 = mc::TrialPlan<f64>;
pub type TrialReport64 = mc::TrialReport<f64>;

pub type CoherenceModel32 = probability::CoherenceModel<f32>;
pub type LatticeConfig32 = lattice::LatticeConfig<f32>;
pub type MomentumStatement32 = lattice::MomentumStatement<f32>;
