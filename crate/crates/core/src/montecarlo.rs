//! Seeded statistical estimators for the densities that outgrow the exact
//! engines. Trials are dealt to logical workers in fixed contiguous blocks
//! and each worker draws from its own ChaCha stream (seed, stream = worker
//! index), so results depend on (inputs, seed, workers) and never on thread
//! scheduling. Aggregation is an exact integer sum of successes.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::patterns::avoids_consecutive_2143;
use crate::perm::{in_q, sample_permutation, InvolutionSampler};

/// 97.5% normal quantile, for the two-sided 95% Wilson interval.
const Z95: f64 = 1.959963984540054;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    PermAvoidFraction,
    InvAvoidFraction,
    QMembershipFraction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Population {
    Permutations,
    Involutions,
}

/// A finished estimate, carrying everything needed to replay it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Estimate {
    pub quantity: Quantity,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub trials: u64,
    pub seed: u64,
    pub workers: u32,
    pub successes: u64,
    pub p_hat: f64,
    pub ci95: (f64, f64),
}

/// Wilson score interval; chosen over the normal approximation because the
/// avoidance fractions under study sit near 1, where the normal interval
/// degenerates.
pub fn wilson_interval(successes: u64, trials: u64) -> (f64, f64) {
    assert!(trials >= 1 && successes <= trials);
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = Z95 * Z95;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = Z95 * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    ((center - half).max(0.0), (center + half).min(1.0))
}

/// Runs `trials` Bernoulli trials split over `workers` fixed blocks; block
/// i gets ⌈(trials - i)/workers⌉ trials and stream i of the seed.
fn run_trials<F>(trials: u64, seed: u64, workers: u32, trial: F) -> u64
where
    F: Fn(&mut ChaCha8Rng) -> bool + Sync,
{
    let workers = workers.max(1) as u64;
    (0..workers)
        .into_par_iter()
        .map(|stream| {
            let len = trials / workers + u64::from(stream < trials % workers);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(stream);
            let mut hits = 0u64;
            for _ in 0..len {
                if trial(&mut rng) {
                    hits += 1;
                }
            }
            hits
        })
        .sum()
}

fn finish(
    quantity: Quantity,
    n: usize,
    k: Option<usize>,
    trials: u64,
    seed: u64,
    workers: u32,
    successes: u64,
) -> Estimate {
    Estimate {
        quantity,
        n,
        k,
        trials,
        seed,
        workers,
        successes,
        p_hat: successes as f64 / trials as f64,
        ci95: wilson_interval(successes, trials),
    }
}

/// Estimated fraction of the population avoiding consecutive 2143.
pub fn estimate_avoidance(
    n: usize,
    population: Population,
    trials: u64,
    seed: u64,
    workers: u32,
) -> Result<Estimate> {
    if n < 1 {
        return Err(Error::DegreeTooSmall { n, required: 1 });
    }
    if trials == 0 {
        return Err(Error::ZeroTrials);
    }
    let successes = match population {
        Population::Permutations => run_trials(trials, seed, workers, |rng| {
            avoids_consecutive_2143(&sample_permutation(n, rng))
        }),
        Population::Involutions => {
            let sampler = InvolutionSampler::new(n);
            run_trials(trials, seed, workers, |rng| {
                avoids_consecutive_2143(sampler.sample(rng).permutation())
            })
        }
    };
    let quantity = match population {
        Population::Permutations => Quantity::PermAvoidFraction,
        Population::Involutions => Quantity::InvAvoidFraction,
    };
    Ok(finish(quantity, n, None, trials, seed, workers, successes))
}

/// Estimated |Q_n|/i_n by uniform involution draws.
pub fn estimate_q_membership(
    n: usize,
    k: usize,
    trials: u64,
    seed: u64,
    workers: u32,
) -> Result<Estimate> {
    if n < 4 * k {
        return Err(Error::DegreeTooSmall { n, required: 4 * k });
    }
    if trials == 0 {
        return Err(Error::ZeroTrials);
    }
    let sampler = InvolutionSampler::new(n);
    let successes = run_trials(trials, seed, workers, |rng| {
        in_q(&sampler.sample(rng), k).expect("degree checked above")
    });
    Ok(finish(
        Quantity::QMembershipFraction,
        n,
        Some(k),
        trials,
        seed,
        workers,
        successes,
    ))
}
