//! Exact counting engines: avoider counts over S_n and over involutions,
//! window-event intersections, the five pinned-block case families, and the
//! Q_n statistics, all in exact integer/rational arithmetic.
//!
//! The permutation engines backtrack over one-line prefixes and kill a
//! prefix of length m ≥ 4 as soon as its last completed window (positions
//! m-3..m) violates; earlier windows were checked when they completed, so
//! each window is inspected exactly once per path.

mod cache;
mod cases;
mod qstats;

pub use cache::{CacheOutcome, CountCache};
pub use cases::{verify_case, CaseReport};
pub use qstats::{q_statistics, window_conditionals, QStats, WindowConditional};

use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::patterns::window_violates;
use crate::perm::{INV_ENUM_CAP, PERM_ENUM_CAP};
use crate::serde_util;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CountKind {
    PermAvoiders,
    InvAvoiders,
    WindowAvoiders,
    QSize,
    CaseTotal,
    CaseViolators,
}

impl fmt::Display for CountKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CountKind::PermAvoiders => "perm_avoiders",
            CountKind::InvAvoiders => "inv_avoiders",
            CountKind::WindowAvoiders => "window_avoiders",
            CountKind::QSize => "q_size",
            CountKind::CaseTotal => "case_total",
            CountKind::CaseViolators => "case_violators",
        };
        f.write_str(s)
    }
}

/// Kind-specific parameters; serializes flat, so a record with no extra
/// parameters carries an empty object.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CountParams {
    Blocks { blocks: Vec<usize> },
    K { k: usize },
    Case { case: u8 },
    None {},
}

impl CountParams {
    fn key_fragment(&self) -> String {
        match self {
            CountParams::Blocks { blocks } => {
                let list = blocks
                    .iter()
                    .map(|b| b.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                format!(":blocks={list}")
            }
            CountParams::K { k } => format!(":k={k}"),
            CountParams::Case { case } => format!(":case={case}"),
            CountParams::None {} => String::new(),
        }
    }
}

/// One exact counting result, the unit stored in the on-disk cache.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactCount {
    pub kind: CountKind,
    pub n: usize,
    pub params: CountParams,
    #[serde(with = "serde_util::biguint_decimal")]
    pub value: BigUint,
}

impl ExactCount {
    /// Stable cache key, e.g. "window_avoiders:n=8:blocks=1,2".
    pub fn cache_key(&self) -> String {
        format!("{}:n={}{}", self.kind, self.n, self.params.key_fragment())
    }
}

/// Backtracking count of permutations surviving `prune`. The predicate sees
/// the prefix and the 1-based length it just reached, and returns true to
/// kill the branch. Work splits over 2-element prefixes; order of summation
/// does not affect the exact total.
fn count_permutations_pruned<F>(n: usize, prune: &F) -> u64
where
    F: Fn(&[u32], usize) -> bool + Sync,
{
    fn dfs<F: Fn(&[u32], usize) -> bool>(
        values: &mut Vec<u32>,
        used: &mut [bool],
        n: usize,
        prune: &F,
    ) -> u64 {
        let m = values.len();
        if m == n {
            return 1;
        }
        let mut total = 0;
        for v in 1..=n as u32 {
            if used[v as usize] {
                continue;
            }
            values.push(v);
            used[v as usize] = true;
            if !prune(values, m + 1) {
                total += dfs(values, used, n, prune);
            }
            values.pop();
            used[v as usize] = false;
        }
        total
    }

    if n < 2 {
        return 1;
    }
    let mut tasks = Vec::with_capacity(n * (n - 1));
    for a in 1..=n as u32 {
        for b in 1..=n as u32 {
            if a != b {
                tasks.push((a, b));
            }
        }
    }
    tasks
        .into_par_iter()
        .map(|(a, b)| {
            let mut values = vec![a, b];
            let mut used = vec![false; n + 1];
            used[a as usize] = true;
            used[b as usize] = true;
            // No window fits in a 2-prefix, so nothing to prune yet.
            dfs(&mut values, &mut used, n, prune)
        })
        .sum()
}

/// Involution analogue. Positions are filled smallest-first (fix or pair
/// upward); whenever the contiguous assigned prefix advances, the windows
/// that just became complete are checked once.
fn count_involutions_pruned<F>(n: usize, prune: &F) -> u64
where
    F: Fn(&[u32], usize) -> bool + Sync,
{
    /// Grows the contiguous prefix past `old_prefix`, checking each newly
    /// completed 1-based position; None means a check pruned the branch.
    fn advance<F: Fn(&[u32], usize) -> bool>(
        values: &[u32],
        old_prefix: usize,
        prune: &F,
    ) -> Option<usize> {
        let n = values.len();
        let mut new_prefix = old_prefix;
        while new_prefix < n && values[new_prefix] != 0 {
            new_prefix += 1;
        }
        for m in old_prefix + 1..=new_prefix {
            if prune(values, m) {
                return None;
            }
        }
        Some(new_prefix)
    }

    fn rec<F: Fn(&[u32], usize) -> bool>(values: &mut [u32], prefix: usize, prune: &F) -> u64 {
        let n = values.len();
        if prefix == n {
            return 1;
        }
        // The smallest unassigned index is the prefix length itself.
        let p = prefix;
        let mut total = 0;
        values[p] = (p + 1) as u32;
        if let Some(next) = advance(values, prefix, prune) {
            total += rec(values, next, prune);
        }
        values[p] = 0;
        for q in p + 1..n {
            if values[q] != 0 {
                continue;
            }
            values[p] = (q + 1) as u32;
            values[q] = (p + 1) as u32;
            if let Some(next) = advance(values, prefix, prune) {
                total += rec(values, next, prune);
            }
            values[p] = 0;
            values[q] = 0;
        }
        total
    }

    if n == 0 {
        return 1;
    }
    // Split over the choice at position 1: fixed, or paired with q.
    (0..n)
        .into_par_iter()
        .map(|choice| {
            let mut values = vec![0u32; n];
            if choice == 0 {
                values[0] = 1;
            } else {
                values[0] = (choice + 1) as u32;
                values[choice] = 1;
            }
            match advance(&values, 0, prune) {
                Some(next) => rec(&mut values, next, prune),
                None => 0,
            }
        })
        .sum()
}

pub fn count_avoiding_permutations(n: usize) -> Result<ExactCount> {
    count_avoiding_permutations_with_cap(n, PERM_ENUM_CAP)
}

pub fn count_avoiding_permutations_with_cap(n: usize, cap: usize) -> Result<ExactCount> {
    if n < 1 {
        return Err(Error::DegreeTooSmall { n, required: 1 });
    }
    if n > cap {
        return Err(Error::DegreeTooLarge { n, cap });
    }
    let prune = |values: &[u32], m: usize| m >= 4 && window_violates(values, m - 4);
    let value = count_permutations_pruned(n, &prune);
    Ok(ExactCount {
        kind: CountKind::PermAvoiders,
        n,
        params: CountParams::None {},
        value: BigUint::from(value),
    })
}

pub fn count_avoiding_involutions(n: usize) -> Result<ExactCount> {
    count_avoiding_involutions_with_cap(n, INV_ENUM_CAP)
}

pub fn count_avoiding_involutions_with_cap(n: usize, cap: usize) -> Result<ExactCount> {
    if n < 1 {
        return Err(Error::DegreeTooSmall { n, required: 1 });
    }
    if n > cap {
        return Err(Error::DegreeTooLarge { n, cap });
    }
    let prune = |values: &[u32], m: usize| m >= 4 && window_violates(values, m - 4);
    let value = count_involutions_pruned(n, &prune);
    Ok(ExactCount {
        kind: CountKind::InvAvoiders,
        n,
        params: CountParams::None {},
        value: BigUint::from(value),
    })
}

/// Count of w ∈ S_n whose window event holds at every listed block. Blocks
/// are deduplicated; for k distinct disjoint windows the result satisfies
/// count·24^k = 23^k·n! exactly.
pub fn count_window_avoiders(n: usize, blocks: &[usize]) -> Result<ExactCount> {
    count_window_avoiders_with_cap(n, blocks, PERM_ENUM_CAP)
}

pub fn count_window_avoiders_with_cap(n: usize, blocks: &[usize], cap: usize) -> Result<ExactCount> {
    if n < 1 {
        return Err(Error::DegreeTooSmall { n, required: 1 });
    }
    if n > cap {
        return Err(Error::DegreeTooLarge { n, cap });
    }
    let mut sorted: Vec<usize> = blocks.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for &b in &sorted {
        if b < 1 || 4 * b > n {
            return Err(Error::BlockOutOfRange {
                block: b,
                n,
                max: n / 4,
            });
        }
    }
    // check_at[m] is true when some listed window ends at position m.
    let mut check_at = vec![false; n + 1];
    for &b in &sorted {
        check_at[4 * b] = true;
    }
    let prune = |values: &[u32], m: usize| check_at[m] && window_violates(values, m - 4);
    let value = count_permutations_pruned(n, &prune);
    Ok(ExactCount {
        kind: CountKind::WindowAvoiders,
        n,
        params: CountParams::Blocks { blocks: sorted },
        value: BigUint::from(value),
    })
}
