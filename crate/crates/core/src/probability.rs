//! The interpretation-displacement probability law `p(θ) = cos²(aθ)`, the
//! classical two-path composition rule and the interference term that
//! reconciles them.

use num_traits::{Num, ToPrimitive};
use thiserror::Error;

use crate::scalar::Real;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ProbabilityError {
    #[error("probability {0} outside [0, 1]")]
    Domain(f64),
    #[error("computed probability {0} strays outside [0, 1] beyond tolerance")]
    OutOfRange(f64),
    #[error("coupling a must be finite, got {0}")]
    NonFinite(f64),
    #[error("a = 0 makes every interpretation identical; no violation exists")]
    ZeroCoupling,
    #[error("grid needs at least one nonzero displacement")]
    DegenerateGrid,
}

/// A probability in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct AnswerProbability<T>(T);

impl<T: Real> AnswerProbability<T> {
    /// Accepts `raw` within `identity_tol` of `[0, 1]` and clamps it there.
    /// Larger excursions are errors.
    pub fn new(raw: T) -> Result<Self, ProbabilityError> {
        let tol = T::identity_tol();
        if raw.is_nan() || raw < -tol || raw > T::one() + tol {
            return Err(ProbabilityError::OutOfRange(
                raw.to_f64().unwrap_or(f64::NAN),
            ));
        }
        Ok(AnswerProbability(raw.max(T::zero()).min(T::one())))
    }

    pub fn value(self) -> T {
        self.0
    }

    pub fn complement(self) -> Self {
        AnswerProbability(T::one() - self.0)
    }
}

/// `(p(s,r), p(s,r̄), p(s̄,r), p(s̄,r̄))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplementRelations<T> {
    pub yes_yes: T,
    pub yes_no: T,
    pub no_yes: T,
    pub no_no: T,
}

/// Classical total-probability composition through an intermediate
/// interpretation: `pθ·pϑ + (1 − pθ)(1 − pϑ)`.
///
/// Only ring operations are involved, so exact rationals work too.
pub fn classical_compose<T>(p_theta: T, p_vartheta: T) -> Result<T, ProbabilityError>
where
    T: Num + PartialOrd + Copy + ToPrimitive,
{
    for p in [p_theta, p_vartheta] {
        if !(T::zero() <= p && p <= T::one()) {
            return Err(ProbabilityError::Domain(p.to_f64().unwrap_or(f64::NAN)));
        }
    }
    Ok(p_theta * p_vartheta + (T::one() - p_theta) * (T::one() - p_vartheta))
}

/// The coherence law with coupling `a`: `f(θ) = aθ`, `p(θ) = cos² f(θ)`.
///
/// `p(θ) = p(−θ)` (answer probabilities are symmetric in the two
/// interpretations) is built in through the evenness of `cos²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherenceModel<T> {
    a: T,
}

impl<T: Real> Default for CoherenceModel<T> {
    /// `a = 1/2`, the planar spin-1/2 case.
    fn default() -> Self {
        CoherenceModel { a: T::lit(0.5) }
    }
}

impl<T: Real> CoherenceModel<T> {
    pub fn new(a: T) -> Result<Self, ProbabilityError> {
        if !a.is_finite() {
            return Err(ProbabilityError::NonFinite(a.to_f64().unwrap_or(f64::NAN)));
        }
        Ok(CoherenceModel { a })
    }

    pub fn a(&self) -> T {
        self.a
    }

    pub fn phase(&self, theta: T) -> T {
        self.a * theta
    }

    /// Probability of "yes" across a displacement `θ`.
    pub fn p(&self, theta: T) -> AnswerProbability<T> {
        let c = self.phase(theta).cos();
        AnswerProbability::new(c * c).expect("cos² lies in [0, 1]")
    }

    pub fn complement_relations(&self, theta: T) -> ComplementRelations<T> {
        let p = self.p(theta).value();
        let q = T::one() - p;
        ComplementRelations {
            yes_yes: p,
            yes_no: q,
            no_yes: q,
            no_no: p,
        }
    }

    /// `−2 sin aθ sin aϑ cos aθ cos aϑ`.
    pub fn interference_term(&self, theta: T, vartheta: T) -> T {
        phase_interference(self.phase(theta), self.phase(vartheta))
    }

    /// Classical composition plus interference; equals `p(θ + ϑ)`.
    pub fn compose(&self, theta: T, vartheta: T) -> T {
        composed_from_phases(self.phase(theta), self.phase(vartheta))
    }

    /// The exact answer `cos²(a(θ + ϑ))`.
    pub fn direct(&self, theta: T, vartheta: T) -> T {
        self.p(theta + vartheta).value()
    }

    /// Evaluates the classical rule at `aθ = aϑ = π/4`, where the two
    /// interpretations are orthogonal and the true probability is zero.
    pub fn classical_violation_witness(&self) -> Result<ViolationWitness<T>, ProbabilityError> {
        if self.a.is_zero() {
            return Err(ProbabilityError::ZeroCoupling);
        }
        let theta = T::FRAC_PI_4() / self.a;
        let p = self.p(theta).value();
        let classical = classical_compose(p, p)?;
        let required = self.direct(theta, theta);
        Ok(ViolationWitness {
            theta,
            p,
            classical,
            required,
            interference: self.interference_term(theta, theta),
            gap: classical - required,
            // p² + (1 − p)² = 1/2 + 2(p − 1/2)²
            classical_floor: T::lit(0.5),
            classical_floor_at: T::lit(0.5),
        })
    }

    /// Checks the linear phase law against both constraint cases on the
    /// grid, and checks that `f(θ) = aθ + 0.1θ²` breaks at least one.
    pub fn verify_f_linear(&self, grid: &[T]) -> Result<PhaseLawComparison<T>, ProbabilityError> {
        let a = self.a;
        let eps = T::lit(DEVIATION_EPSILON);
        let linear = check_phase_law(|t| a * t, a, grid)?;
        let deviation = check_phase_law(|t| a * t + eps * t * t, a, grid)?;
        Ok(PhaseLawComparison { linear, deviation })
    }
}

/// Curvature of the deviating phase law `aθ + εθ²`.
pub const DEVIATION_EPSILON: f64 = 0.1;

fn phase_interference<T: Real>(x: T, y: T) -> T {
    -T::lit(2.0) * x.sin() * y.sin() * x.cos() * y.cos()
}

fn composed_from_phases<T: Real>(x: T, y: T) -> T {
    let (cx, cy) = (x.cos(), y.cos());
    let (px, py) = (cx * cx, cy * cy);
    px * py + (T::one() - px) * (T::one() - py) + phase_interference(x, y)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ViolationWitness<T> {
    /// Displacement with `aθ = π/4`; used for both legs.
    pub theta: T,
    /// `p(θ) = 1/2`.
    pub p: T,
    /// `p² + (1 − p)²`.
    pub classical: T,
    /// `p(2θ)`.
    pub required: T,
    pub interference: T,
    /// `classical − required`.
    pub gap: T,
    /// Infimum of `p² + (1 − p)²` over `[0, 1]`.
    pub classical_floor: T,
    /// Where the infimum is attained.
    pub classical_floor_at: T,
}

/// How a phase law `f` fares when plugged into the composition rule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseLawCheck<T> {
    /// `max |compose_f(θ, −θ) − 1|` over the grid.
    pub opposite_max_error: T,
    /// The quarter point `θ*` with `aθ* = π/4`.
    pub quarter: T,
    /// `compose_f(θ*, θ*)`; must be 0.
    pub quarter_total: T,
    /// `max |compose_f(θ, ϑ) − cos² f(θ + ϑ)|` over grid pairs.
    pub composition_max_error: T,
    pub opposite_passes: bool,
    pub quarter_passes: bool,
}

impl<T> PhaseLawCheck<T> {
    pub fn passes_constraints(&self) -> bool {
        self.opposite_passes && self.quarter_passes
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseLawComparison<T> {
    pub linear: PhaseLawCheck<T>,
    pub deviation: PhaseLawCheck<T>,
}

/// Plugs an arbitrary phase law `f` into `p = cos² f` and tests the two
/// constraint cases: `ϑ = −θ` must total 1, and `θ = ϑ = θ*` (with
/// `a θ* = π/4`) must total 0.
pub fn check_phase_law<T: Real>(
    f: impl Fn(T) -> T,
    a: T,
    grid: &[T],
) -> Result<PhaseLawCheck<T>, ProbabilityError> {
    if a.is_zero() {
        return Err(ProbabilityError::ZeroCoupling);
    }
    if !grid.iter().any(|t| !t.is_zero() && t.is_finite()) {
        return Err(ProbabilityError::DegenerateGrid);
    }
    let tol = T::grid_tol();
    let compose = |t: T, v: T| composed_from_phases(f(t), f(v));

    let opposite_max_error = grid
        .iter()
        .map(|&t| (compose(t, -t) - T::one()).abs())
        .fold(T::zero(), T::max);

    let quarter = T::FRAC_PI_4() / a;
    let quarter_total = compose(quarter, quarter);

    let composition_max_error = grid
        .iter()
        .flat_map(|&t| grid.iter().map(move |&v| (t, v)))
        .map(|(t, v)| {
            let c = f(t + v).cos();
            (compose(t, v) - c * c).abs()
        })
        .fold(T::zero(), T::max);

    Ok(PhaseLawCheck {
        opposite_max_error,
        quarter,
        quarter_total,
        composition_max_error,
        opposite_passes: opposite_max_error <= tol,
        quarter_passes: quarter_total.abs() <= tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use num_rational::Ratio;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    fn half() -> CoherenceModel<f64> {
        CoherenceModel::default()
    }

    #[test]
    fn special_values() {
        let m = half();
        assert_eq!(m.p(0.0).value(), 1.0);
        assert_abs_diff_eq!(m.p(PI).value(), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(m.p(FRAC_PI_2).value(), 0.5, epsilon = 1e-12);
    }

    #[test]
    fn complements() {
        let m = half();
        let r = m.complement_relations(0.0);
        assert_eq!(
            (r.yes_yes, r.yes_no, r.no_yes, r.no_no),
            (1.0, 0.0, 0.0, 1.0)
        );
        let r = m.complement_relations(FRAC_PI_2);
        for v in [r.yes_yes, r.yes_no, r.no_yes, r.no_no] {
            assert_abs_diff_eq!(v, 0.5, epsilon = 1e-12);
        }
    }

    #[test]
    fn classical_rule() {
        assert_eq!(classical_compose(1.0, 1.0).unwrap(), 1.0);
        assert_eq!(classical_compose(0.5, 0.5).unwrap(), 0.5);
        assert!(matches!(
            classical_compose(1.5, 0.5),
            Err(ProbabilityError::Domain(_))
        ));
        assert!(matches!(
            classical_compose(0.5, -0.1),
            Err(ProbabilityError::Domain(_))
        ));
        assert!(classical_compose(f64::NAN, 0.5).is_err());
    }

    #[test]
    fn classical_rule_exact() {
        let p = Ratio::new(1i64, 3);
        let q = Ratio::new(3i64, 4);
        // 1/3·3/4 + 2/3·1/4 = 1/4 + 1/6 = 5/12
        assert_eq!(classical_compose(p, q).unwrap(), Ratio::new(5, 12));
        assert_eq!(
            classical_compose(Ratio::new(1i64, 2), Ratio::new(1, 2)).unwrap(),
            Ratio::new(1, 2)
        );
        assert!(classical_compose(Ratio::new(3i64, 2), Ratio::new(1, 2)).is_err());
    }

    #[test]
    fn interference_values() {
        let m = half();
        assert_eq!(m.interference_term(0.0, 1.3), 0.0);
        assert_abs_diff_eq!(
            m.interference_term(FRAC_PI_2, FRAC_PI_2),
            -0.5,
            epsilon = 1e-12
        );
        let t = 0.9;
        let x = m.phase(t);
        let expected = 2.0 * x.sin().powi(2) * x.cos().powi(2);
        assert_abs_diff_eq!(m.interference_term(t, -t), expected, epsilon = 1e-12);
        assert_abs_diff_eq!(m.compose(t, -t), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn orthogonal_composition() {
        let m = half();
        assert_abs_diff_eq!(m.compose(FRAC_PI_2, FRAC_PI_2), 0.0, epsilon = 1e-12);
        for v in [-2.0, 0.3, 4.0] {
            assert_abs_diff_eq!(m.compose(0.0, v), m.p(v).value(), epsilon = 1e-12);
        }
    }

    #[test]
    fn violation() {
        let w = half().classical_violation_witness().unwrap();
        assert_abs_diff_eq!(w.theta, FRAC_PI_2, epsilon = 1e-15);
        assert_abs_diff_eq!(w.classical, 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(w.required, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(w.gap, 0.5, epsilon = 1e-12);

        let w = CoherenceModel::new(1.0)
            .unwrap()
            .classical_violation_witness()
            .unwrap();
        assert_abs_diff_eq!(w.theta, FRAC_PI_4, epsilon = 1e-15);
        assert_abs_diff_eq!(w.gap, 0.5, epsilon = 1e-12);

        assert_eq!(
            CoherenceModel::new(0.0)
                .unwrap()
                .classical_violation_witness(),
            Err(ProbabilityError::ZeroCoupling)
        );
    }

    #[test]
    fn classical_floor_by_grid() {
        let (argmin, min) = (0..=10_000)
            .map(|i| {
                let p = i as f64 / 10_000.0;
                (p, classical_compose(p, p).unwrap())
            })
            .fold((f64::NAN, f64::INFINITY), |best, cur| {
                if cur.1 < best.1 {
                    cur
                } else {
                    best
                }
            });
        let w = half().classical_violation_witness().unwrap();
        assert_abs_diff_eq!(min, w.classical_floor, epsilon = 1e-9);
        assert_abs_diff_eq!(argmin, w.classical_floor_at, epsilon = 1e-9);
    }

    #[test]
    fn phase_laws() {
        let grid: Vec<f64> = (-8..=8).map(|i| i as f64 * PI / 8.0).collect();
        for a in [0.5, 2.0] {
            let r = CoherenceModel::new(a)
                .unwrap()
                .verify_f_linear(&grid)
                .unwrap();
            assert!(r.linear.passes_constraints(), "a={a}: {:?}", r.linear);
            assert!(r.linear.composition_max_error < 1e-12);
            assert!(
                !r.deviation.passes_constraints(),
                "a={a}: {:?}",
                r.deviation
            );
        }
        // f = aθ² at a = 1/2, probed at θ = ϑ = π/2
        let sq = check_phase_law(|t: f64| 0.5 * t * t, 0.5, &[FRAC_PI_2]).unwrap();
        assert_abs_diff_eq!(sq.quarter, FRAC_PI_2, epsilon = 1e-15);
        assert!(!sq.quarter_passes);
    }

    #[test]
    fn phase_law_errors() {
        let m = half();
        assert_eq!(
            m.verify_f_linear(&[]),
            Err(ProbabilityError::DegenerateGrid)
        );
        assert_eq!(
            m.verify_f_linear(&[0.0]),
            Err(ProbabilityError::DegenerateGrid)
        );
        assert!(CoherenceModel::new(f64::INFINITY).is_err());
    }

    #[test]
    fn answer_probability_clamps_only_within_tolerance() {
        assert_eq!(AnswerProbability::new(1.0 + 1e-13).unwrap().value(), 1.0);
        assert_eq!(AnswerProbability::new(-1e-13).unwrap().value(), 0.0);
        assert!(AnswerProbability::new(1.0 + 1e-9).is_err());
        assert!(AnswerProbability::new(f64::NAN).is_err());
        assert_eq!(
            AnswerProbability::new(0.25).unwrap().complement().value(),
            0.75
        );
    }

    #[test]
    fn single_precision() {
        let m = CoherenceModel::<f32>::default();
        let tol = f32::identity_tol();
        assert!((m.compose(1.1, 0.4) - m.direct(1.1, 0.4)).abs() < tol);
        assert!((m.p(std::f32::consts::FRAC_PI_2).value() - 0.5).abs() < tol);
    }

    proptest! {
        #[test]
        fn central_identity(a in -5.0f64..5.0, t in -10.0f64..10.0, v in -10.0f64..10.0) {
            let m = CoherenceModel::new(a).unwrap();
            prop_assert!((m.compose(t, v) - m.direct(t, v)).abs() < 1e-12);
        }

        #[test]
        fn even_and_normalized(a in -5.0f64..5.0, t in -10.0f64..10.0) {
            let m = CoherenceModel::new(a).unwrap();
            prop_assert_eq!(m.p(t), m.p(-t));
            let r = m.complement_relations(t);
            prop_assert!((r.yes_yes + r.yes_no - 1.0).abs() < 1e-15);
        }

        #[test]
        fn spin_half_overlap(t in -10.0f64..10.0) {
            let m = CoherenceModel::new(0.5).unwrap();
            prop_assert!((m.p(t).value() - (t / 2.0).cos().powi(2)).abs() < 1e-15);
        }

        #[test]
        fn interference_bounded(a in -5.0f64..5.0, t in -10.0f64..10.0, v in -10.0f64..10.0) {
            let i = CoherenceModel::new(a).unwrap().interference_term(t, v);
            prop_assert!((-0.5 - 1e-15..=0.5 + 1e-15).contains(&i));
        }

        #[test]
        fn complementary_pair(p in 0.0f64..=1.0) {
            let expanded = p * (1.0 - p) + (1.0 - p) * p;
            prop_assert!((classical_compose(p, 1.0 - p).unwrap() - expanded).abs() < 1e-15);
            prop_assert!((expanded - 2.0 * p * (1.0 - p)).abs() < 1e-15);
        }

        #[test]
        fn interference_vanishes_at_alignments(a in 0.1f64..5.0, j in -6i32..6, v in -10.0f64..10.0) {
            let m = CoherenceModel::new(a).unwrap();
            let t = j as f64 * FRAC_PI_2 / a;
            prop_assert!(m.interference_term(t, v).abs() < 1e-12);
        }
    }
}
