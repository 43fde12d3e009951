//! Exact integer sequences (involution and Motzkin numbers) and the floating
//! diagnostics built on them: the growth-rate ratio r(n) and the union bound
//! 16·C(k,2)·i_{n-2}/i_n that controls the Q_n correction term.
//!
//! The sequences are exact `BigUint` tables; logs of big integers go through
//! the bit length plus a 53-bit mantissa correction, so r(n) stays accurate
//! far beyond f64 overflow territory (i_4000 has about 21k bits).

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::serde_util;

/// i_0..=i_n with i_n = i_{n-1} + (n-1)·i_{n-2}.
pub fn involution_numbers_up_to(n: usize) -> Vec<BigUint> {
    let mut table = Vec::with_capacity(n + 1);
    table.push(BigUint::one());
    if n == 0 {
        return table;
    }
    table.push(BigUint::one());
    for m in 2..=n {
        let next = &table[m - 1] + &table[m - 2] * BigUint::from(m - 1);
        table.push(next);
    }
    table
}

pub fn involution_number(n: usize) -> BigUint {
    involution_numbers_up_to(n).pop().unwrap()
}

/// M_0..=M_n with (n+2)·M_n = (2n+1)·M_{n-1} + 3(n-1)·M_{n-2}; the division
/// is exact at every step and asserted to stay so.
pub fn motzkin_numbers_up_to(n: usize) -> Vec<BigUint> {
    let mut table = Vec::with_capacity(n + 1);
    table.push(BigUint::one());
    if n == 0 {
        return table;
    }
    table.push(BigUint::one());
    for m in 2..=n {
        let numer =
            &table[m - 1] * BigUint::from(2 * m + 1) + &table[m - 2] * BigUint::from(3 * (m - 1));
        let (q, r) = numer.div_rem(&BigUint::from(m + 2));
        assert!(r.is_zero(), "Motzkin recurrence division must be exact");
        table.push(q);
    }
    table
}

pub fn motzkin_number(n: usize) -> BigUint {
    motzkin_numbers_up_to(n).pop().unwrap()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SequenceName {
    InvolutionNumbers,
    MotzkinNumbers,
}

impl std::fmt::Display for SequenceName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SequenceName::InvolutionNumbers => write!(f, "involution_numbers"),
            SequenceName::MotzkinNumbers => write!(f, "motzkin_numbers"),
        }
    }
}

/// A prefix of a named integer sequence, indexed by n starting at 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceTable {
    pub name: SequenceName,
    values: Vec<BigUint>,
}

impl SequenceTable {
    pub fn involutions(max_n: usize) -> Self {
        SequenceTable {
            name: SequenceName::InvolutionNumbers,
            values: involution_numbers_up_to(max_n),
        }
    }

    pub fn motzkin(max_n: usize) -> Self {
        SequenceTable {
            name: SequenceName::MotzkinNumbers,
            values: motzkin_numbers_up_to(max_n),
        }
    }

    pub fn max_n(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> Option<&BigUint> {
        self.values.get(n)
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }
}

/// Natural log of a positive big integer.
///
/// Writes x = m·2^(b-53) with m the top 53 bits, so ln x = ln m + (b-53)·ln 2
/// with m exactly representable in f64. Error is one ulp-scale term, which is
/// far below the 1e-9 tolerances used downstream.
pub fn ln_biguint(x: &BigUint) -> f64 {
    assert!(!x.is_zero(), "ln of zero");
    let bits = x.bits();
    if bits <= 53 {
        return x.to_f64().unwrap().ln();
    }
    let shift = bits - 53;
    let top = (x >> shift).to_f64().unwrap();
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Exact-integer-backed quotient a/b as f64, usable when both sides overflow
/// f64 on their own.
pub fn big_ratio_to_f64(numer: &BigUint, denom: &BigUint) -> f64 {
    assert!(!denom.is_zero(), "division by zero");
    if numer.is_zero() {
        return 0.0;
    }
    (ln_biguint(numer) - ln_biguint(denom)).exp()
}

/// r(n) = exp(ln i_n - (n/2)·ln n + n/2 - sqrt(n)), the distance between i_n
/// and its first-order asymptotic; r(n) drifts slowly toward
/// 2^(-1/2)·e^(-1/4) ≈ 0.5507.
pub fn asymptotic_ratio(n: usize) -> Result<f64> {
    if n < 1 {
        return Err(Error::DegreeTooSmall { n, required: 1 });
    }
    Ok(asymptotic_ratio_of(&involution_number(n), n))
}

/// Same as [`asymptotic_ratio`] but reusing an already computed i_n.
pub fn asymptotic_ratio_of(i_n: &BigUint, n: usize) -> f64 {
    assert!(n >= 1);
    let nf = n as f64;
    (ln_biguint(i_n) - 0.5 * nf * nf.ln() + 0.5 * nf - nf.sqrt()).exp()
}

/// (23/24)^k as an exact rational.
pub fn theorem3_bound(k: u32) -> num_rational::BigRational {
    let numer = num_bigint::BigInt::from(23u32).pow(k);
    let denom = num_bigint::BigInt::from(24u32).pow(k);
    num_rational::BigRational::new(numer, denom)
}

/// 16·C(k,2)·i_{n-2}/i_n, the union bound on the Q_n deficit.
pub fn lemma6_bound(n: usize, k: u64) -> Result<f64> {
    if n < 2 {
        return Err(Error::DegreeTooSmall { n, required: 2 });
    }
    let table = involution_numbers_up_to(n);
    Ok(lemma6_bound_of(&table[n - 2], &table[n], k))
}

pub fn lemma6_bound_of(i_n_minus_2: &BigUint, i_n: &BigUint, k: u64) -> f64 {
    let pairs = BigUint::from(k) * BigUint::from(k.saturating_sub(1)) / BigUint::from(2u32);
    let numer = BigUint::from(16u32) * pairs * i_n_minus_2;
    big_ratio_to_f64(&numer, i_n)
}

/// Largest k with 4k³ ≤ n (0 when even k = 1 does not fit).
pub fn regime_k(n: usize) -> u64 {
    let mut k = 0u64;
    while 4 * (k + 1).pow(3) <= n as u64 {
        k += 1;
    }
    k
}

/// One row of the diagnostic table emitted by the `asymptotics` command.
/// `r_n` is None for n = 0; `lemma6_bound` uses the regime value
/// k(n) = max{k : 4k³ ≤ n} and is None when n < 2 or k(n) = 0.
#[derive(Debug, Clone, Serialize)]
pub struct AsymptoticsRow {
    pub n: usize,
    #[serde(with = "serde_util::biguint_decimal")]
    pub involutions: BigUint,
    #[serde(with = "serde_util::biguint_decimal")]
    pub motzkin: BigUint,
    pub r_n: Option<f64>,
    pub regime_k: u64,
    pub lemma6_bound: Option<f64>,
}

pub fn asymptotics_rows(max_n: usize) -> Vec<AsymptoticsRow> {
    let inv = involution_numbers_up_to(max_n);
    let motzkin = motzkin_numbers_up_to(max_n);
    (0..=max_n)
        .map(|n| {
            let k = regime_k(n);
            AsymptoticsRow {
                n,
                involutions: inv[n].clone(),
                motzkin: motzkin[n].clone(),
                r_n: (n >= 1).then(|| asymptotic_ratio_of(&inv[n], n)),
                regime_k: k,
                lemma6_bound: (n >= 2 && k >= 1)
                    .then(|| lemma6_bound_of(&inv[n - 2], &inv[n], k)),
            }
        })
        .collect()
}
