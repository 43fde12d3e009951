//! Exact statistics over Q_n: the restricted involution family where no
//! earlier block sends a value into a later block. Everything here is
//! integer tallies turned into exact rationals at the end; floating point
//! never enters, because the independence claims under test are equalities
//! of rationals.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{enumerate_involutions, in_q, Block};
use crate::patterns::window_event;
use crate::serde_util;

/// Exact event statistics over Q_n for blocks 1..=k.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QStats {
    pub n: usize,
    pub k: usize,
    #[serde(with = "serde_util::biguint_decimal")]
    pub q_size: BigUint,
    #[serde(serialize_with = "serde_util::bigrational_vec_string::serialize")]
    pub p_event: Vec<BigRational>,
    #[serde(serialize_with = "serde_util::bigrational_string::serialize")]
    pub p_joint: BigRational,
}

fn ratio(hits: u64, population: u64) -> BigRational {
    BigRational::new(BigInt::from(hits), BigInt::from(population))
}

pub fn q_statistics(n: usize, k: usize) -> Result<QStats> {
    if n < 4 * k {
        return Err(Error::DegreeTooSmall { n, required: 4 * k });
    }
    let mut q_size = 0u64;
    let mut event_hits = vec![0u64; k];
    let mut joint_hits = 0u64;
    for w in enumerate_involutions(n)? {
        if !in_q(&w, k)? {
            continue;
        }
        q_size += 1;
        let mut all = true;
        for b in 1..=k {
            if window_event(w.permutation(), b)? {
                event_hits[b - 1] += 1;
            } else {
                all = false;
            }
        }
        if all {
            joint_hits += 1;
        }
    }
    // Q_n is never empty: the identity always belongs.
    Ok(QStats {
        n,
        k,
        q_size: BigUint::from(q_size),
        p_event: event_hits.iter().map(|&h| ratio(h, q_size)).collect(),
        p_joint: ratio(joint_hits, q_size),
    })
}

/// Conditional window statistics for one block over Q_n, split by the
/// intersection size s = |A_b ∩ w(A_b)|. Entries are ordered by decreasing
/// s, so index c-1 is the family of case c when populated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WindowConditional {
    pub intersection: usize,
    pub members: u64,
    pub avoiders: u64,
}

impl WindowConditional {
    pub fn probability(&self) -> BigRational {
        ratio(self.avoiders, self.members)
    }
}

pub fn window_conditionals(n: usize, k: usize, block: usize) -> Result<Vec<WindowConditional>> {
    if n < 4 * k {
        return Err(Error::DegreeTooSmall { n, required: 4 * k });
    }
    if block < 1 || block > k {
        return Err(Error::BlockOutOfRange {
            block,
            n,
            max: k,
        });
    }
    let positions = Block(block).positions();
    let mut members = [0u64; 5];
    let mut avoiders = [0u64; 5];
    for w in enumerate_involutions(n)? {
        if !in_q(&w, k)? {
            continue;
        }
        let s = positions
            .iter()
            .filter(|&&p| {
                let image = w.image(p) as usize;
                positions.contains(&image)
            })
            .count();
        members[s] += 1;
        if window_event(w.permutation(), block)? {
            avoiders[s] += 1;
        }
    }
    Ok((0..=4)
        .rev()
        .filter(|&s| members[s] > 0)
        .map(|s| WindowConditional {
            intersection: s,
            members: members[s],
            avoiders: avoiders[s],
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn rational(p: u64, q: u64) -> BigRational {
        ratio(p, q)
    }

    #[test]
    fn q8_is_a_product_world() {
        // With n = 4k there is no tail: Q_8 = i_4 × i_4 = 100 and both
        // events are the case-1 law 9/10, independent exactly.
        let stats = q_statistics(8, 2).unwrap();
        assert_eq!(stats.q_size.to_u64().unwrap(), 100);
        assert_eq!(stats.p_event, vec![rational(9, 10), rational(9, 10)]);
        assert_eq!(stats.p_joint, rational(81, 100));
        assert_eq!(stats.p_joint, &stats.p_event[0] * &stats.p_event[1]);
    }

    #[test]
    fn q10_exact_values() {
        let stats = q_statistics(10, 2).unwrap();
        assert_eq!(stats.q_size.to_u64().unwrap(), 1832);
        assert_eq!(stats.p_event, vec![rational(847, 916), rational(847, 916)]);
        assert_eq!(stats.p_joint, rational(783, 916));
    }

    #[test]
    fn q12_exact_values() {
        let stats = q_statistics(12, 2).unwrap();
        assert_eq!(stats.q_size.to_u64().unwrap(), 36168);
        assert_eq!(
            stats.p_event,
            vec![rational(5651, 6028), rational(5651, 6028)]
        );
        assert_eq!(stats.p_joint, rational(5297, 6028));
    }

    #[test]
    fn joint_is_dominated() {
        use crate::asymptotics::theorem3_bound;
        for n in [8usize, 10, 12] {
            let stats = q_statistics(n, 2).unwrap();
            let product = &stats.p_event[0] * &stats.p_event[1];
            assert!(stats.p_joint <= product, "n={n}");
            assert!(stats.p_joint <= theorem3_bound(2), "n={n}");
            assert!(stats.p_event.iter().all(|p| *p <= theorem3_bound(1)));
        }
    }

    #[test]
    fn conditionals_are_the_three_case_laws() {
        let allowed = [
            rational(9, 10),
            rational(15, 16),
            rational(23, 24),
        ];
        for n in [8usize, 10, 12] {
            for block in [1usize, 2] {
                let rows = window_conditionals(n, 2, block).unwrap();
                assert!(!rows.is_empty());
                for row in &rows {
                    assert!(
                        allowed.contains(&row.probability()),
                        "n={n} block={block} s={} got {}",
                        row.intersection,
                        row.probability()
                    );
                }
            }
        }
    }

    #[test]
    fn preconditions() {
        assert!(matches!(
            q_statistics(7, 2),
            Err(Error::DegreeTooSmall { n: 7, required: 8 })
        ));
        assert!(matches!(
            q_statistics(17, 2),
            Err(Error::DegreeTooLarge { .. })
        ));
        assert!(matches!(
            window_conditionals(8, 2, 3),
            Err(Error::BlockOutOfRange { .. })
        ));
    }
}
