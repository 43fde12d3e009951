//! Permutations of {1, ..., n} in one-line notation, involutions, and the
//! 4-position blocks A_b = {4b-3, 4b-2, 4b-1, 4b} that the window counts
//! and the Q_n construction are built on.

mod enumerate;
mod sample;

pub use enumerate::{
    enumerate_involutions, enumerate_involutions_with_cap, enumerate_permutations,
    enumerate_permutations_with_cap, Involutions, Permutations, INV_ENUM_CAP, PERM_ENUM_CAP,
};
pub use sample::{sample_involution, sample_permutation, InvolutionSampler};

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation of {1, ..., n}, stored in one-line notation.
///
/// `values[i]` is w(i+1); all positions and values are 1-based in the public
/// API to match the written convention. Degree 0 is representable (the empty
/// word) but the validating constructor rejects it, so it only appears from
/// internal builders such as the degree-0 involution sampler.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    /// Validating constructor from one-line notation.
    pub fn from_one_line(values: Vec<u32>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyInput);
        }
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v as usize > n {
                return Err(Error::NotABijection(format!(
                    "value {v} out of range 1..={n}"
                )));
            }
            if seen[v as usize] {
                return Err(Error::NotABijection(format!("value {v} repeats")));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { values })
    }

    /// Construction from values already known to be a permutation.
    pub(crate) fn from_values_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(Permutation::from_one_line(values.clone()).is_ok() || values.is_empty());
        Permutation { values }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n as u32).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.values.len()
    }

    /// w(i) for a 1-based position i.
    pub fn image(&self, i: usize) -> u32 {
        self.values[i - 1]
    }

    pub fn one_line(&self) -> &[u32] {
        &self.values
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.values.len()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v as usize - 1] = (i + 1) as u32;
        }
        Permutation { values: inv }
    }

    /// Composition acting as (self ∘ other)(i) = self(other(i)).
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::NotABijection(format!(
                "degree mismatch: {} vs {}",
                self.degree(),
                other.degree()
            )));
        }
        let values = other
            .values
            .iter()
            .map(|&v| self.values[v as usize - 1])
            .collect();
        Ok(Permutation { values })
    }

    pub fn is_involution(&self) -> bool {
        self.values
            .iter()
            .enumerate()
            .all(|(i, &v)| self.values[v as usize - 1] == (i + 1) as u32)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.values {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(Error::EmptyInput);
        }
        let values = trimmed
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad token {tok:?}: {e}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Permutation::from_one_line(values)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// An involution of {1, ..., n}: a permutation with w² = id, kept together
/// with its 2-cycles and fixed points.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Involution {
    perm: Permutation,
    pairs: Vec<(u32, u32)>,
    fixed: Vec<u32>,
}

impl Involution {
    pub fn from_permutation(perm: Permutation) -> Result<Self> {
        for (i, &v) in perm.values.iter().enumerate() {
            if perm.values[v as usize - 1] != (i + 1) as u32 {
                return Err(Error::NotAnInvolution { position: i + 1 });
            }
        }
        Ok(Involution::from_values_unchecked(perm.values))
    }

    pub(crate) fn from_values_unchecked(values: Vec<u32>) -> Self {
        let mut pairs = Vec::new();
        let mut fixed = Vec::new();
        for (i, &v) in values.iter().enumerate() {
            let i = (i + 1) as u32;
            match v.cmp(&i) {
                std::cmp::Ordering::Greater => pairs.push((i, v)),
                std::cmp::Ordering::Equal => fixed.push(i),
                std::cmp::Ordering::Less => {}
            }
        }
        Involution {
            perm: Permutation::from_values_unchecked(values),
            pairs,
            fixed,
        }
    }

    pub fn identity(n: usize) -> Self {
        Involution::from_values_unchecked((1..=n as u32).collect())
    }

    pub fn degree(&self) -> usize {
        self.perm.degree()
    }

    pub fn image(&self, i: usize) -> u32 {
        self.perm.image(i)
    }

    pub fn permutation(&self) -> &Permutation {
        &self.perm
    }

    pub fn into_permutation(self) -> Permutation {
        self.perm
    }

    /// 2-cycles (a, b) with a < b, ordered by a.
    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn fixed_points(&self) -> &[u32] {
        &self.fixed
    }

    /// Cycle notation with fixed points omitted, e.g. "(1 3)(2 5)"; the
    /// identity renders as "()".
    pub fn cycle_string(&self) -> String {
        if self.pairs.is_empty() {
            return "()".to_string();
        }
        let mut out = String::new();
        for &(a, b) in &self.pairs {
            out.push_str(&format!("({a} {b})"));
        }
        out
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.perm.fmt(f)
    }
}

impl Serialize for Involution {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.perm.serialize(serializer)
    }
}

/// The b-th block of four consecutive positions, A_b = {4b-3, ..., 4b}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Block(pub usize);

impl Block {
    pub fn index(self) -> usize {
        self.0
    }

    pub fn positions(self) -> [usize; 4] {
        assert!(self.0 >= 1, "blocks are 1-based");
        let end = 4 * self.0;
        [end - 3, end - 2, end - 1, end]
    }

    pub fn start(self) -> usize {
        4 * self.0 - 3
    }

    pub fn end(self) -> usize {
        4 * self.0
    }

    /// Checks 4·b ≤ n.
    pub fn fits(self, n: usize) -> bool {
        self.0 >= 1 && self.end() <= n
    }
}

/// Membership in Q_n: no value from block A_i may land in a later block A_j,
/// i.e. w(A_i) ∩ A_j = ∅ for all 1 ≤ i < j ≤ k.
///
/// Because w is an involution, w(a) ∈ A_j with a ∈ A_i also forces
/// w(A_j) ∩ A_i ≠ ∅, so the one-sided scan below covers both directions.
pub fn in_q(w: &Involution, k: usize) -> Result<bool> {
    let n = w.degree();
    if n < 4 * k {
        return Err(Error::DegreeTooSmall { n, required: 4 * k });
    }
    for i in 1..=k {
        for p in Block(i).positions() {
            let v = w.image(p) as usize;
            // v sits in a block iff v ≤ 4k; its block index is ceil(v/4).
            if v <= 4 * k {
                let j = v.div_ceil(4);
                if j > i {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
