//! Cross-module properties that need more than one module or large samples.

use std::f64::consts::PI;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use coherence_lab::interpretation::{
    apply_permutation, certain, InterpretationPoint, Permutation, ThetaInterval,
};
use coherence_lab::lattice::{build_momentum_statement, verify_idempotent, LatticeConfig};
use coherence_lab::logic::{enumerate_minterms, mutually_exclusive};
use coherence_lab::mc::{run_chained, TrialPlan};
use coherence_lab::probability::{classical_compose, CoherenceModel};
use coherence_lab::CoherenceModel64;

#[test]
fn chained_estimator_matches_classical_rule() {
    let model = CoherenceModel64::new(0.8).unwrap();
    let (t, v) = (0.6, 1.7);
    let r = run_chained(&TrialPlan {
        model,
        theta: t,
        vartheta: v,
        trials: 1_000_000,
        seed: 5,
    })
    .unwrap();
    let classical = classical_compose(model.p(t).value(), model.p(v).value()).unwrap();
    let sigma = (classical * (1.0 - classical) / 1e6).sqrt();
    assert!(
        (r.p_chained_hat - classical).abs() < 4.0 * sigma,
        "{} vs {classical}",
        r.p_chained_hat
    );
    let direct = model.direct(t, v);
    let sigma = (direct * (1.0 - direct) / 1e6).sqrt();
    assert!((r.p_direct_hat - direct).abs() < 4.0 * sigma);
}

#[test]
fn random_displacements_track_interference() {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let model = CoherenceModel64::default();
    let inside = (0..20)
        .filter(|i| {
            let t = rng.random_range(-PI..PI);
            let v = rng.random_range(-PI..PI);
            let r = run_chained(&TrialPlan {
                model,
                theta: t,
                vartheta: v,
                trials: 200_000,
                seed: *i,
            })
            .unwrap();
            r.within(4.0)
        })
        .count();
    assert!(inside >= 19, "{inside}/20");
}

#[test]
fn independent_minterms_exclude_each_other() {
    for n in 1..=4 {
        let set = enumerate_minterms(n).unwrap();
        for a in set.iter() {
            for b in set.iter() {
                let shared = (0..1u32 << n).any(|bits| {
                    let x: Vec<bool> = (0..n).map(|i| bits >> i & 1 == 1).collect();
                    a.is_satisfied_by(&x) && b.is_satisfied_by(&x)
                });
                assert_eq!(mutually_exclusive(a, b).unwrap(), !shared);
            }
        }
    }
}

#[test]
fn probabilities_depend_only_on_displacement() {
    let model = CoherenceModel64::new(1.3).unwrap();
    let a = InterpretationPoint::new(0.25, 2).unwrap();
    let b = InterpretationPoint::new(1.5, 2).unwrap();
    let theta = a.displacement(&b).unwrap();
    for shift in [-7.0, -0.5, 3.0, 100.0] {
        let shifted = a
            .translate(shift)
            .displacement(&b.translate(shift))
            .unwrap();
        assert!((model.p(shifted).value() - model.p(theta).value()).abs() < 1e-12);
    }
    assert!(ThetaInterval::default().contains(theta));
}

#[test]
fn large_lattice_sample() {
    let config = LatticeConfig::<f64>::with_sites(128).unwrap();
    for mode in [0, 1, 63, 64, 127] {
        assert!(verify_idempotent(&build_momentum_statement(config, mode).unwrap()) < 1e-10);
    }
}

fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(&v).unwrap())
}

proptest! {
    #[test]
    fn permutations_keep_a_single_true_statement(
        (n, l, p) in (2usize..=8).prop_flat_map(|n| (Just(n), 1..=n, arb_perm(n)))
    ) {
        let moved = apply_permutation(&certain(l, n).unwrap(), &p).unwrap();
        prop_assert_eq!(moved.truth_values().iter().filter(|&&v| v == 1).count(), 1);
        prop_assert_eq!(moved.true_index(), p.apply(l).unwrap());
    }

    #[test]
    fn composition_identity_single_precision(a in -5.0f32..5.0, t in -3.0f32..3.0, v in -3.0f32..3.0) {
        let m = CoherenceModel::new(a).unwrap();
        prop_assert!((m.compose(t, v) - m.direct(t, v)).abs() < 1e-5);
    }
}
