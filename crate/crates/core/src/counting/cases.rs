//! The five case families behind the conditional window probabilities.
//!
//! Fix the block A = {1,2,3,4} and condition on s = |A ∩ w(A)|. Case c
//! (c = 1..5) pins s = 5 - c: the s positions mapped within A carry an
//! arbitrary involution of the chosen s-subset, and the remaining 4 - s
//! positions are paired into canonical tail partners placed immediately
//! above 4, assigned in every possible order. Exactly one member of each
//! family violates the window.

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::patterns::window_violates;
use crate::perm::Involution;

/// Audit result for one case family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseReport {
    pub case_id: u8,
    pub total: u64,
    pub violators: u64,
    pub violator_list: Vec<Involution>,
}

/// All involutions of a point set, as complete (point, image) maps.
fn involutions_on(points: &[u32]) -> Vec<Vec<(u32, u32)>> {
    if points.is_empty() {
        return vec![vec![]];
    }
    let p = points[0];
    let rest = &points[1..];
    let mut out = Vec::new();
    for mut sub in involutions_on(rest) {
        sub.push((p, p));
        out.push(sub);
    }
    for (i, &q) in rest.iter().enumerate() {
        let remaining: Vec<u32> = rest
            .iter()
            .enumerate()
            .filter_map(|(j, &x)| (j != i).then_some(x))
            .collect();
        for mut sub in involutions_on(&remaining) {
            sub.push((p, q));
            sub.push((q, p));
            out.push(sub);
        }
    }
    out
}

pub fn verify_case(case_id: u8) -> Result<CaseReport> {
    if !(1..=5).contains(&case_id) {
        return Err(Error::InvalidCaseId(case_id));
    }
    let inside = 5 - case_id as usize; // s = |A ∩ w(A)|
    let outside = 4 - inside;
    let n = 4 + outside;
    let tail: Vec<u32> = (5..=n as u32).collect();

    let mut total = 0u64;
    let mut violator_list = Vec::new();
    for subset in (1u32..=4).combinations(inside) {
        let complement: Vec<u32> = (1..=4).filter(|v| !subset.contains(v)).collect();
        for inner in involutions_on(&subset) {
            // Tail partners in every order over the escaping positions.
            for assignment in tail.iter().permutations(outside) {
                let mut values = vec![0u32; n];
                for &(p, q) in &inner {
                    values[p as usize - 1] = q;
                }
                for (&a, &t) in complement.iter().zip(assignment.iter().copied()) {
                    values[a as usize - 1] = t;
                    values[t as usize - 1] = a;
                }
                total += 1;
                if window_violates(&values, 0) {
                    violator_list.push(Involution::from_values_unchecked(values));
                }
            }
        }
    }
    violator_list.sort();
    Ok(CaseReport {
        case_id,
        total,
        violators: violator_list.len() as u64,
        violator_list,
    })
}
