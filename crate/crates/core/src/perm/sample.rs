use num_bigint::{BigUint, RandBigInt};
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::asymptotics::involution_numbers_up_to;
use crate::perm::{Involution, Permutation};

/// Uniform sample from S_n (Fisher-Yates).
pub fn sample_permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Permutation {
    let mut values: Vec<u32> = (1..=n as u32).collect();
    values.shuffle(rng);
    Permutation::from_values_unchecked(values)
}

/// Exactly uniform sampler over involutions of S_n.
///
/// Let m be the number of still-unplaced positions and p the largest of
/// them. Of the i_m involutions on those positions, i_{m-1} fix p and
/// i_{m-2} pair p with each of the other m-1 positions. Drawing one integer
/// X uniform in [0, i_m) and decoding it against that split keeps every branch
/// weighted by its exact count, so the walk lands on each involution with
/// probability 1/i_n. No floating point is involved.
#[derive(Debug, Clone)]
pub struct InvolutionSampler {
    counts: Vec<BigUint>,
}

impl InvolutionSampler {
    /// Precomputes i_0..=i_n; n = 0 is allowed and yields the empty involution.
    pub fn new(n: usize) -> Self {
        InvolutionSampler {
            counts: involution_numbers_up_to(n),
        }
    }

    pub fn degree(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Involution {
        let n = self.degree();
        let mut values = vec![0u32; n];
        let mut remaining: Vec<u32> = (1..=n as u32).collect();
        while let Some(&p) = remaining.last() {
            let m = remaining.len();
            if m == 1 {
                values[p as usize - 1] = p;
                remaining.pop();
                continue;
            }
            let x = rng.gen_biguint_below(&self.counts[m]);
            if x < self.counts[m - 1] {
                values[p as usize - 1] = p;
                remaining.pop();
            } else {
                // Branch weights are i_{m-2} per partner, in partner order.
                let idx = ((x - &self.counts[m - 1]) / &self.counts[m - 2])
                    .to_usize()
                    .expect("partner index fits usize");
                let q = remaining[idx];
                values[p as usize - 1] = q;
                values[q as usize - 1] = p;
                remaining.pop();
                remaining.remove(idx);
            }
        }
        Involution::from_values_unchecked(values)
    }
}

/// One-shot uniform involution draw; builds the count table each call, so
/// prefer [`InvolutionSampler`] in loops.
pub fn sample_involution<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Involution {
    InvolutionSampler::new(n).sample(rng)
}
