//! Large-n behaviour of the exact big-integer sequences: convergence of the
//! normalised involution ratio and monotonicity of the crossing bound along
//! the regime diagonal n = 4k³.

use census_core::asymptotics::{
    asymptotic_ratio, asymptotic_ratio_of, involution_numbers_up_to, lemma6_bound,
    motzkin_numbers_up_to, regime_k,
};
use census_core::perm::enumerate_involutions;
use num_traits::ToPrimitive;

#[test]
fn involution_numbers_match_exhaustive_enumeration() {
    let table = involution_numbers_up_to(12);
    for (n, value) in table.iter().enumerate() {
        let enumerated = if n == 0 {
            1
        } else {
            enumerate_involutions(n).unwrap().count() as u64
        };
        assert_eq!(value.to_u64().unwrap(), enumerated, "n={n}");
    }
}

#[test]
fn motzkin_recurrence_agrees_with_the_catalan_sum() {
    // M_n = Σ_k C(n, 2k) · Catalan(k), an independent route to the table.
    let table = motzkin_numbers_up_to(20);
    let mut catalan = [1u128; 11];
    for k in 1..=10usize {
        catalan[k] = catalan[k - 1] * 2 * (2 * k as u128 - 1) / (k as u128 + 1);
    }
    let binom = |n: usize, r: usize| -> u128 {
        if r > n {
            return 0;
        }
        let mut value = 1u128;
        for i in 0..r {
            value = value * (n - i) as u128 / (i + 1) as u128;
        }
        value
    };
    for (n, value) in table.iter().enumerate() {
        let direct: u128 = (0..=n / 2).map(|k| binom(n, 2 * k) * catalan[k]).sum();
        assert_eq!(value.to_u128().unwrap(), direct, "n={n}");
    }
}

#[test]
fn ratio_stabilises_with_shrinking_increments() {
    let table = involution_numbers_up_to(4000);
    let r = |n: usize| asymptotic_ratio_of(&table[n], n);
    let mut previous_gap = f64::INFINITY;
    for m in [250usize, 500, 1000, 2000] {
        let gap = (r(2 * m) - r(m)).abs() / r(m);
        assert!(gap < previous_gap, "m={m}: gap {gap} vs {previous_gap}");
        previous_gap = gap;
    }
    // Final doubling is already inside the acceptance tolerance.
    assert!(previous_gap < 0.01, "gap {previous_gap}");
    // And the one-shot convenience wrapper agrees with the table route.
    assert!((asymptotic_ratio(2000).unwrap() - r(2000)).abs() < 1e-15);
}

#[test]
fn ratio_reference_points_hold_to_ten_digits() {
    let expected = [
        (250usize, 0.5606239847451413),
        (500, 0.5577638262033357),
        (1000, 0.5557173557190548),
        (2000, 0.5542583212347959),
        (4000, 0.5532206701851507),
    ];
    let table = involution_numbers_up_to(4000);
    for (n, reference) in expected {
        let got = asymptotic_ratio_of(&table[n], n);
        assert!(
            (got - reference).abs() < 1e-10,
            "n={n}: got {got}, want {reference}"
        );
    }
}

#[test]
fn crossing_bound_decreases_along_the_regime_diagonal() {
    let mut previous = f64::INFINITY;
    for k in 2..=6u64 {
        let n = 4 * (k * k * k) as usize;
        assert_eq!(regime_k(n), k, "n={n}");
        assert_eq!(regime_k(n + 1), k, "n={n}");
        let bound = lemma6_bound(n, k).unwrap();
        assert!(bound < previous, "k={k}: {bound} vs {previous}");
        assert!(bound > 0.0 && bound < 1.0, "k={k}");
        previous = bound;
    }
}

#[test]
fn regime_boundaries_are_exact() {
    assert_eq!(regime_k(3), 0);
    assert_eq!(regime_k(4), 1);
    assert_eq!(regime_k(31), 1);
    assert_eq!(regime_k(32), 2);
    assert_eq!(regime_k(107), 2);
    assert_eq!(regime_k(108), 3);
    assert_eq!(regime_k(4 * 125), 5);
    assert_eq!(regime_k(4 * 125 - 1), 4);
}
