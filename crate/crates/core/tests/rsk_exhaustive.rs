//! Exhaustive RSK and left-cell checks over whole symmetric groups: the
//! correspondence round-trips, involutions are exactly the P = Q fiber,
//! cells partition the group, and the negativity verdict is a cell
//! invariant.

use std::collections::{HashMap, HashSet};

use census_core::cells::{
    cell_involution, cell_members, classify_kostant, hook_length_count, inverse_rsk, rsk,
    standard_tableaux_of_shape, ClassifyMode, KostantVerdict,
};
use census_core::perm::enumerate_permutations;
use census_core::BigUint;
use num_traits::ToPrimitive;

#[test]
fn rsk_round_trips_all_of_s7() {
    for w in enumerate_permutations(7).unwrap() {
        let (p, q) = rsk(&w);
        assert_eq!(p.shape(), q.shape(), "w={w}");
        assert_eq!(inverse_rsk(&p, &q).unwrap(), w, "w={w}");
    }
}

#[test]
fn involutions_are_exactly_the_symmetric_fiber_in_s7() {
    for w in enumerate_permutations(7).unwrap() {
        let (p, q) = rsk(&w);
        assert_eq!(p == q, w.is_involution(), "w={w}");
    }
}

#[test]
fn cells_partition_s4_and_carry_one_involution_each() {
    let mut seen: HashSet<String> = HashSet::new();
    let mut covered = 0usize;
    for w in enumerate_permutations(4).unwrap() {
        let (_, q) = rsk(&w);
        let key = format!("{:?}", q.rows());
        if !seen.insert(key) {
            continue;
        }
        let members: Vec<_> = cell_members(&w).unwrap().collect();
        covered += members.len();
        let involutions = members
            .iter()
            .filter(|m| m.is_involution())
            .count();
        assert_eq!(involutions, 1, "cell of {w}");
        let anchor = cell_involution(&w);
        assert!(members.contains(anchor.permutation()), "cell of {w}");
        // Every member shares the recording tableau.
        for m in &members {
            let (_, mq) = rsk(m);
            assert_eq!(mq, q, "member {m} of cell of {w}");
        }
    }
    assert_eq!(covered, 24);
}

#[test]
fn verdict_is_constant_on_every_cell_of_s6() {
    let mut verdict_by_q: HashMap<String, bool> = HashMap::new();
    for w in enumerate_permutations(6).unwrap() {
        let (_, q) = rsk(&w);
        let key = format!("{:?}", q.rows());
        let negative = classify_kostant(&w, ClassifyMode::Cell)
            .unwrap()
            .is_negative();
        match verdict_by_q.get(&key) {
            Some(&prev) => assert_eq!(prev, negative, "w={w}"),
            None => {
                verdict_by_q.insert(key, negative);
            }
        }
    }
}

#[test]
fn quick_negative_implies_cell_negative_on_s6() {
    for w in enumerate_permutations(6).unwrap() {
        let quick = classify_kostant(&w, ClassifyMode::Quick).unwrap();
        if let KostantVerdict::Negative { .. } = quick {
            let cell = classify_kostant(&w, ClassifyMode::Cell).unwrap();
            assert!(cell.is_negative(), "w={w}");
        }
    }
}

#[test]
fn hook_lengths_agree_with_direct_enumeration_up_to_8() {
    let mut partitions: Vec<Vec<usize>> = Vec::new();
    fn extend(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            prefix.push(part);
            extend(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    for n in 1..=8 {
        extend(n, n, &mut Vec::new(), &mut partitions);
    }
    for shape in &partitions {
        let enumerated = standard_tableaux_of_shape(shape).len() as u64;
        let formula = hook_length_count(shape).to_u64().unwrap();
        assert_eq!(enumerated, formula, "shape={shape:?}");
    }
}

#[test]
fn squared_tableau_counts_sum_to_the_group_order() {
    // Σ_λ f_λ² = n!, the RSK bijection in aggregate.
    fn extend(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            prefix.push(part);
            extend(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    for n in 1..=8usize {
        let mut partitions = Vec::new();
        extend(n, n, &mut Vec::new(), &mut partitions);
        let total: BigUint = partitions
            .iter()
            .map(|shape| {
                let f = hook_length_count(shape);
                &f * &f
            })
            .sum();
        let factorial: BigUint = (1..=n as u64).map(BigUint::from).product();
        assert_eq!(total, factorial, "n={n}");
    }
}

#[test]
fn cell_sizes_match_their_shape_counts_in_s5() {
    for w in enumerate_permutations(5).unwrap() {
        let (_, q) = rsk(&w);
        let members = cell_members(&w).unwrap();
        assert_eq!(
            members.len() as u64,
            hook_length_count(&q.shape()).to_u64().unwrap(),
            "w={w}"
        );
    }
}
