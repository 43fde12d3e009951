//! Statistical behaviour of the seeded estimators: interval calibration
//! against an exactly known truth, reproducibility, and the coarse
//! monotone trends the estimates are meant to expose.

use census_core::counting::count_avoiding_permutations;
use census_core::montecarlo::{estimate_avoidance, estimate_q_membership, Population};
use num_traits::ToPrimitive;

#[test]
fn intervals_are_calibrated_against_the_exact_s6_fraction() {
    // 631/720 of S_6 avoids everywhere; a 95% interval over 200 independent
    // seeded runs should cover the truth in the vast majority of them.
    let exact = count_avoiding_permutations(6)
        .unwrap()
        .value
        .to_u64()
        .unwrap() as f64
        / 720.0;
    let mut covered = 0usize;
    for seed in 0..200u64 {
        let est = estimate_avoidance(6, Population::Permutations, 2000, seed, 1).unwrap();
        let (lo, hi) = est.ci95;
        assert!(lo < hi && (0.0..=1.0).contains(&lo) && (0.0..=1.0).contains(&hi));
        assert!(est.p_hat >= lo && est.p_hat <= hi);
        if exact >= lo && exact <= hi {
            covered += 1;
        }
    }
    assert!(covered >= 180, "only {covered}/200 intervals covered the truth");
}

#[test]
fn avoidance_estimates_fall_as_the_degree_grows() {
    let mut previous = f64::INFINITY;
    for n in [8usize, 16, 32, 64] {
        let est = estimate_avoidance(n, Population::Permutations, 100_000, 17, 1).unwrap();
        assert!(
            est.p_hat < previous - 0.01,
            "n={n}: {} vs {previous}",
            est.p_hat
        );
        previous = est.p_hat;
    }
}

#[test]
fn involution_avoidance_also_falls() {
    let mut previous = f64::INFINITY;
    for n in [8usize, 24, 72] {
        let est = estimate_avoidance(n, Population::Involutions, 60_000, 29, 1).unwrap();
        assert!(
            est.p_hat < previous - 0.01,
            "n={n}: {} vs {previous}",
            est.p_hat
        );
        previous = est.p_hat;
    }
}

#[test]
fn q_membership_grows_with_the_tail() {
    // For fixed k the early blocks get ever more room to pair into the
    // tail, so membership in Q_n rises with n.
    let small = estimate_q_membership(32, 2, 50_000, 11, 1).unwrap();
    let large = estimate_q_membership(200, 2, 50_000, 11, 1).unwrap();
    assert!(
        large.p_hat > small.p_hat + 0.05,
        "n=32: {} vs n=200: {}",
        small.p_hat,
        large.p_hat
    );
    assert!(large.p_hat < 1.0);
}

#[test]
fn estimates_are_reproducible_per_seed_and_worker_count() {
    let a = estimate_avoidance(12, Population::Involutions, 10_000, 99, 4).unwrap();
    let b = estimate_avoidance(12, Population::Involutions, 10_000, 99, 4).unwrap();
    assert_eq!(a.successes, b.successes);
    assert_eq!(a.p_hat, b.p_hat);
    assert_eq!(a.ci95, b.ci95);
    let c = estimate_avoidance(12, Population::Involutions, 10_000, 100, 4).unwrap();
    assert_ne!(a.successes, c.successes);
}

#[test]
fn worker_split_covers_every_trial() {
    // Trials must be partitioned exactly, also when the worker count does
    // not divide them; the estimate then never loses or double-counts.
    for workers in [1u32, 3, 7, 16] {
        let est = estimate_avoidance(4, Population::Permutations, 10_001, 5, workers).unwrap();
        assert_eq!(est.trials, 10_001);
        assert!(est.successes <= est.trials);
        assert_eq!(est.workers, workers);
        // At n=4 the exact fraction is 23/24; a gross split bug would push
        // the estimate far outside any plausible band.
        assert!((est.p_hat - 23.0 / 24.0).abs() < 0.02, "workers={workers}");
    }
}
