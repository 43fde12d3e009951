//! The 2143 pattern in both senses: consecutive (four adjacent positions
//! ordered as w(i+1) < w(i) < w(i+3) < w(i+2)) and classical (any four
//! positions p1 < p2 < p3 < p4 with w(p2) < w(p1) < w(p4) < w(p3)).
//!
//! A consecutive occurrence starting at position 4b-3 is exactly the failure
//! of the block event X_b, so the window predicate lives here too.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OccurrenceKind {
    Consecutive,
    Classical,
}

/// A witnessed occurrence of 2143. `start` is the 1-based first position;
/// `witness` lists the four positions (consecutive ones are start..start+3).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Occurrence {
    pub start: usize,
    pub kind: OccurrenceKind,
    pub witness: [usize; 4],
}

/// True when values[i0..i0+4] is a 2143 word, i.e. the window pattern
/// v1 < v0 < v3 < v2 at 0-based start i0. Callers guarantee the slice
/// is long enough and fully assigned.
#[inline]
pub(crate) fn window_violates(values: &[u32], i0: usize) -> bool {
    let w = &values[i0..i0 + 4];
    w[1] < w[0] && w[0] < w[3] && w[3] < w[2]
}

/// All consecutive occurrences, in increasing start order.
pub fn consecutive_occurrences(w: &Permutation) -> Vec<Occurrence> {
    let values = w.one_line();
    let n = values.len();
    let mut out = Vec::new();
    for i0 in 0..n.saturating_sub(3) {
        if window_violates(values, i0) {
            let start = i0 + 1;
            out.push(Occurrence {
                start,
                kind: OccurrenceKind::Consecutive,
                witness: [start, start + 1, start + 2, start + 3],
            });
        }
    }
    out
}

pub fn first_consecutive_occurrence(w: &Permutation) -> Option<Occurrence> {
    let values = w.one_line();
    let n = values.len();
    (0..n.saturating_sub(3)).find_map(|i0| {
        window_violates(values, i0).then(|| {
            let start = i0 + 1;
            Occurrence {
                start,
                kind: OccurrenceKind::Consecutive,
                witness: [start, start + 1, start + 2, start + 3],
            }
        })
    })
}

pub fn avoids_consecutive_2143(w: &Permutation) -> bool {
    first_consecutive_occurrence(w).is_none()
}

/// The block event X_b: w has no consecutive 2143 starting at position 4b-3.
pub fn window_event(w: &Permutation, block: usize) -> Result<bool> {
    let n = w.degree();
    if block < 1 || 4 * block > n {
        return Err(Error::BlockOutOfRange {
            block,
            n,
            max: n / 4,
        });
    }
    Ok(!window_violates(w.one_line(), 4 * block - 4))
}

/// First classical occurrence in lexicographic (p1, p2, p3, p4) order, if
/// any. O(n^4) by direct scan, which is fine at the degrees the exhaustive
/// engines reach; the Monte Carlo paths only use the consecutive predicate.
pub fn first_classical_occurrence(w: &Permutation) -> Option<Occurrence> {
    let v = w.one_line();
    let n = v.len();
    for p1 in 0..n {
        for p2 in p1 + 1..n {
            if v[p2] >= v[p1] {
                continue;
            }
            for p3 in p2 + 1..n {
                if v[p3] <= v[p1] {
                    continue;
                }
                for p4 in p3 + 1..n {
                    if v[p1] < v[p4] && v[p4] < v[p3] {
                        return Some(Occurrence {
                            start: p1 + 1,
                            kind: OccurrenceKind::Classical,
                            witness: [p1 + 1, p2 + 1, p3 + 1, p4 + 1],
                        });
                    }
                }
            }
        }
    }
    None
}

pub fn contains_classical_2143(w: &Permutation) -> bool {
    first_classical_occurrence(w).is_some()
}
