//! Monte Carlo chains of yes/no questions across interpretation
//! displacements.
//!
//! Each trial draws three uniforms from a ChaCha20 stream:
//! one for the direct question across `θ + ϑ`, and two for the chained
//! path `0 → θ → θ + ϑ`. A "no" at the intermediate interpretation means the
//! complementary statement holds there, so the second leg answers "yes"
//! with probability `1 − p(ϑ)`.
//!
//! Trials are split into fixed batches of [`BATCH_TRIALS`]; batch `b` uses
//! stream `b` of the generator seeded with `seed`. Batches only contribute
//! integer counts, so the merged result does not depend on how batches are
//! scheduled.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::probability::CoherenceModel;
use crate::scalar::Real;

/// Generator used for every run; recorded in each report.
pub const RNG_ALGORITHM: &str = "ChaCha20 (rand_chacha 0.9), seed_from_u64, stream = batch index";

pub const BATCH_TRIALS: u64 = 1 << 16;

pub const DEFAULT_TRIALS: u64 = 1_000_000;

pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimulationError {
    #[error("trial count must be at least 1")]
    NoTrials,
    #[error("displacement grid is empty")]
    EmptyGrid,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialPlan<T> {
    pub model: CoherenceModel<T>,
    pub theta: T,
    pub vartheta: T,
    pub trials: u64,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialReport<T> {
    pub a: T,
    pub theta: T,
    pub vartheta: T,
    pub trials: u64,
    pub seed: u64,
    pub p_direct_hat: f64,
    pub p_chained_hat: f64,
    /// `p_direct_hat − p_chained_hat`.
    pub interference_hat: f64,
    pub analytic_interference: T,
    /// Standard error of `interference_hat` at the observed rates; the two
    /// estimates use disjoint draws, so their binomial variances add.
    pub std_error: f64,
    pub rng_algorithm: &'static str,
}

impl<T: Real> TrialReport<T> {
    /// `|interference_hat − analytic| ≤ sigmas·std_error`.
    pub fn within(&self, sigmas: f64) -> bool {
        let analytic = self.analytic_interference.to_f64().unwrap_or(f64::NAN);
        (self.interference_hat - analytic).abs() <= sigmas * self.std_error
    }
}

/// Draws one answer with probability `p` of "yes".
fn draw<R: Rng + ?Sized>(p: f64, rng: &mut R) -> bool {
    rng.random::<f64>() < p
}

/// One "yes"/"no" answer to the question "is the statement true across a
/// displacement `θ`, given it is true here".
pub fn sample_answer<T: Real, R: Rng + ?Sized>(
    model: &CoherenceModel<T>,
    theta: T,
    rng: &mut R,
) -> bool {
    draw(model.p(theta).value().to_f64().unwrap(), rng)
}

/// Generator for batch `batch` of a run seeded with `seed`.
pub fn batch_rng(seed: u64, batch: u64) -> ChaCha20Rng {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(batch);
    rng
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct Counts {
    direct: u64,
    chained: u64,
}

fn run_batch(
    seed: u64,
    batch: u64,
    trials: u64,
    p_direct: f64,
    p_first: f64,
    p_second: f64,
) -> Counts {
    let mut rng = batch_rng(seed, batch);
    let mut counts = Counts::default();
    for _ in 0..trials {
        counts.direct += u64::from(draw(p_direct, &mut rng));
        let intermediate = draw(p_first, &mut rng);
        let second = draw(p_second, &mut rng);
        // After a "no" the complement is true at the intermediate point.
        counts.chained += u64::from(intermediate == second);
    }
    counts
}

pub fn run_chained<T: Real>(plan: &TrialPlan<T>) -> Result<TrialReport<T>, SimulationError> {
    if plan.trials == 0 {
        return Err(SimulationError::NoTrials);
    }
    let model = &plan.model;
    let p = |t: T| model.p(t).value().to_f64().unwrap();
    let (p_direct, p_first, p_second) = (
        p(plan.theta + plan.vartheta),
        p(plan.theta),
        p(plan.vartheta),
    );

    let batches = plan.trials.div_ceil(BATCH_TRIALS);
    let totals = (0..batches)
        .into_par_iter()
        .map(|b| {
            let size = BATCH_TRIALS.min(plan.trials - b * BATCH_TRIALS);
            run_batch(plan.seed, b, size, p_direct, p_first, p_second)
        })
        .reduce(Counts::default, |x, y| Counts {
            direct: x.direct + y.direct,
            chained: x.chained + y.chained,
        });

    let n = plan.trials as f64;
    let p_direct_hat = totals.direct as f64 / n;
    let p_chained_hat = totals.chained as f64 / n;
    let variance =
        p_direct_hat * (1.0 - p_direct_hat) / n + p_chained_hat * (1.0 - p_chained_hat) / n;
    Ok(TrialReport {
        a: model.a(),
        theta: plan.theta,
        vartheta: plan.vartheta,
        trials: plan.trials,
        seed: plan.seed,
        p_direct_hat,
        p_chained_hat,
        interference_hat: p_direct_hat - p_chained_hat,
        analytic_interference: model.interference_term(plan.theta, plan.vartheta),
        std_error: variance.sqrt(),
        rng_algorithm: RNG_ALGORITHM,
    })
}

/// One report per `θ` in `grid`, all with the same `ϑ`, trial count and seed.
pub fn sweep<T: Real>(
    model: &CoherenceModel<T>,
    grid: &[T],
    vartheta: T,
    trials: u64,
    seed: u64,
) -> Result<Vec<TrialReport<T>>, SimulationError> {
    if grid.is_empty() {
        return Err(SimulationError::EmptyGrid);
    }
    grid.iter()
        .map(|&theta| {
            run_chained(&TrialPlan {
                model: *model,
                theta,
                vartheta,
                trials,
                seed,
            })
        })
        .collect()
}
