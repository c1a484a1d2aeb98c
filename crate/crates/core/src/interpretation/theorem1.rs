//! Finite-order contradiction: if equal displacement steps induced equal
//! permutations of truth values, then `N!` steps of size `θ/N!` would apply
//! some `g^{N!}`, which is always the identity in `S_N`, and could never
//! reach an interpretation that differs from the starting one.

use crate::scalar::Real;

use super::{InterpretationError, Permutation};

/// Largest `N` for which the exhaustive search over `S_N × S_N` is run.
pub const MAX_SEARCH_SIZE: usize = 5;

/// `n!`, or `None` on overflow.
pub fn factorial(n: usize) -> Option<u64> {
    (1..=n as u64).try_fold(1u64, |acc, k| acc.checked_mul(k))
}

/// `n! mod m`, without forming `n!`.
fn factorial_mod(n: usize, m: u64) -> u64 {
    (1..=n as u64).fold(1 % m, |acc, k| {
        ((acc as u128 * k as u128) % m as u128) as u64
    })
}

/// The per-step displacement `δθ = θ / N!`.
pub fn step_displacement<T: Real>(theta: T, n: usize) -> Option<T> {
    factorial(n).and_then(T::from_u64).map(|f| theta / f)
}

/// `g^{N!}` for `g ∈ S_N`, exponent reduced modulo the order of `g`.
fn factorial_power(g: &Permutation) -> Permutation {
    g.pow(factorial_mod(g.len(), g.order()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContradictionWitness {
    pub size: usize,
    /// Candidate permutation attached to one step `δθ`.
    pub step: Permutation,
    /// `step^{N!}`: what `N!` consecutive steps actually do.
    pub accumulated: Permutation,
    /// Permutation relating the starting interpretation to the target one.
    pub target: Permutation,
    /// `accumulated == target`.
    pub consistent: bool,
    /// Target differs from the identity yet is not reached.
    pub contradiction: bool,
}

pub fn theorem1_contradiction_witness(
    n: usize,
    step: &Permutation,
    target: &Permutation,
) -> Result<ContradictionWitness, InterpretationError> {
    for len in [step.len(), target.len()] {
        if len != n {
            return Err(InterpretationError::SizeMismatch {
                left: n,
                right: len,
            });
        }
    }
    if n < 2 {
        return Err(InterpretationError::TooFewStatements(n));
    }
    let accumulated = factorial_power(step);
    let consistent = accumulated == *target;
    Ok(ContradictionWitness {
        size: n,
        step: step.clone(),
        contradiction: !target.is_identity() && !consistent,
        accumulated,
        target: target.clone(),
        consistent,
    })
}

/// Outcome of trying every `g ∈ S_N` as the step permutation against every
/// non-identity target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgorithmSearch {
    pub size: usize,
    /// `|S_N|`.
    pub candidates: usize,
    /// `|S_N| − 1`.
    pub non_identity_targets: usize,
    /// `(g, target)` pairs with `g^{N!} = target`.
    pub consistent_pairs: usize,
    /// Distinct `g` consistent with at least one non-identity target.
    pub consistent_candidates: usize,
}

impl AlgorithmSearch {
    pub fn summary(&self) -> String {
        format!(
            "{} of {} candidates consistent with a non-identity target",
            self.consistent_candidates, self.candidates
        )
    }
}

pub fn exhaustive_algorithm_search(n: usize) -> Result<AlgorithmSearch, InterpretationError> {
    if !(2..=MAX_SEARCH_SIZE).contains(&n) {
        return Err(InterpretationError::SearchSize(n));
    }
    let group = Permutation::all(n);
    let targets: Vec<&Permutation> = group.iter().filter(|p| !p.is_identity()).collect();
    let mut consistent_pairs = 0;
    let mut consistent_candidates = 0;
    for g in &group {
        let mut hit = false;
        for target in &targets {
            if theorem1_contradiction_witness(n, g, target)?.consistent {
                consistent_pairs += 1;
                hit = true;
            }
        }
        consistent_candidates += usize::from(hit);
    }
    Ok(AlgorithmSearch {
        size: n,
        candidates: group.len(),
        non_identity_targets: targets.len(),
        consistent_pairs,
        consistent_candidates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), Some(1));
        assert_eq!(factorial(5), Some(120));
        assert_eq!(factorial(20), Some(2_432_902_008_176_640_000));
        assert_eq!(factorial(21), None);
        assert_eq!(factorial_mod(5, 7), 120 % 7);
        assert_eq!(factorial_mod(30, 12), 0);
    }

    #[test]
    fn steps_recompose_to_theta() {
        let theta = 1.25f64;
        for n in 2..=5 {
            let step = step_displacement(theta, n).unwrap();
            let f = factorial(n).unwrap();
            assert!((step * f as f64 - theta).abs() < 1e-15);
            let walked = (0..f).fold(0.0, |acc, _| acc + step);
            assert!((walked - theta).abs() < 1e-12);
        }
    }

    #[test]
    fn swap_cannot_reach_swap() {
        let swap = Permutation::transposition(2, 1, 2).unwrap();
        let w = theorem1_contradiction_witness(2, &swap, &swap).unwrap();
        assert!(w.accumulated.is_identity());
        assert!(!w.consistent);
        assert!(w.contradiction);
    }

    #[test]
    fn identity_target_is_consistent() {
        let id = Permutation::identity(3);
        for g in Permutation::all(3) {
            let w = theorem1_contradiction_witness(3, &g, &id).unwrap();
            assert!(w.consistent);
            assert!(!w.contradiction);
        }
    }

    #[test]
    fn every_pair_in_s3_contradicts() {
        let group = Permutation::all(3);
        let mut checked = 0;
        for g in &group {
            for t in group.iter().filter(|t| !t.is_identity()) {
                assert!(
                    theorem1_contradiction_witness(3, g, t)
                        .unwrap()
                        .contradiction
                );
                checked += 1;
            }
        }
        assert_eq!(checked, 30);
    }

    #[test]
    fn search_counts() {
        for (n, count) in [(2, 2), (3, 6), (4, 24), (5, 120)] {
            let r = exhaustive_algorithm_search(n).unwrap();
            assert_eq!(r.candidates, count);
            assert_eq!(r.non_identity_targets, count - 1);
            assert_eq!(r.consistent_pairs, 0);
            assert_eq!(r.consistent_candidates, 0);
        }
        assert_eq!(
            exhaustive_algorithm_search(2).unwrap().summary(),
            "0 of 2 candidates consistent with a non-identity target"
        );
    }

    #[test]
    fn search_range() {
        assert_eq!(
            exhaustive_algorithm_search(1),
            Err(InterpretationError::SearchSize(1))
        );
        assert_eq!(
            exhaustive_algorithm_search(6),
            Err(InterpretationError::SearchSize(6))
        );
    }

    #[test]
    fn witness_size_mismatch() {
        let p = Permutation::identity(3);
        let q = Permutation::identity(4);
        assert!(theorem1_contradiction_witness(3, &p, &q).is_err());
    }
}
