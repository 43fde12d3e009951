use crate::error::{Error, Result};
use crate::perm::{Involution, Permutation};

/// Default cap for full S_n sweeps (12! ≈ 4.8e8 is where exhaustion stops
/// being an interactive operation).
pub const PERM_ENUM_CAP: usize = 12;

/// Default cap for involution sweeps; i_16 = 46 206 736.
pub const INV_ENUM_CAP: usize = 16;

/// All of S_n in lexicographic one-line order.
pub fn enumerate_permutations(n: usize) -> Result<Permutations> {
    enumerate_permutations_with_cap(n, PERM_ENUM_CAP)
}

pub fn enumerate_permutations_with_cap(n: usize, cap: usize) -> Result<Permutations> {
    if n < 1 {
        return Err(Error::DegreeTooSmall { n, required: 1 });
    }
    if n > cap {
        return Err(Error::DegreeTooLarge { n, cap });
    }
    Ok(Permutations {
        next: Some((1..=n as u32).collect()),
    })
}

pub struct Permutations {
    next: Option<Vec<u32>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut following = current.clone();
        if next_permutation(&mut following) {
            self.next = Some(following);
        }
        Some(Permutation::from_values_unchecked(current))
    }
}

/// In-place step to the lexicographic successor; false once the word is the
/// last (descending) arrangement.
fn next_permutation(values: &mut [u32]) -> bool {
    if values.len() < 2 {
        return false;
    }
    let mut i = values.len() - 1;
    while i > 0 && values[i - 1] >= values[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = values.len() - 1;
    while values[j] <= values[i - 1] {
        j -= 1;
    }
    values.swap(i - 1, j);
    values[i..].reverse();
    true
}

/// All involutions of S_n in lexicographic one-line order.
pub fn enumerate_involutions(n: usize) -> Result<Involutions> {
    enumerate_involutions_with_cap(n, INV_ENUM_CAP)
}

pub fn enumerate_involutions_with_cap(n: usize, cap: usize) -> Result<Involutions> {
    if n < 1 {
        return Err(Error::DegreeTooSmall { n, required: 1 });
    }
    if n > cap {
        return Err(Error::DegreeTooLarge { n, cap });
    }
    Ok(Involutions {
        values: vec![0; n],
        stack: Vec::with_capacity(n),
        started: false,
        done: false,
    })
}

/// Depth-first generator over involutions. Positions are consumed smallest
/// first; at each free position p the choices are, in lexicographic order of
/// the resulting word, "fix p" then "pair p with q" for free q > p. The
/// explicit stack records one (p, partner) choice per level so the iterator
/// can resume without recursion.
pub struct Involutions {
    /// One-line word under construction; 0 marks a free position. Indices
    /// are 0-based, stored values 1-based.
    values: Vec<u32>,
    /// (p, q) with q == p meaning "p fixed", q > p meaning the pair (p, q).
    stack: Vec<(usize, usize)>,
    started: bool,
    done: bool,
}

impl Involutions {
    /// Fix every remaining free position; this is the lexicographically
    /// smallest completion from the current partial word.
    fn descend_first(&mut self) {
        let n = self.values.len();
        for p in 0..n {
            if self.values[p] == 0 {
                self.values[p] = (p + 1) as u32;
                self.stack.push((p, p));
            }
        }
    }

    /// Undo the top choice and try the next partner for its position;
    /// true once a new complete word is in place.
    fn advance(&mut self) -> bool {
        let n = self.values.len();
        while let Some((p, q)) = self.stack.pop() {
            self.values[p] = 0;
            if q > p {
                self.values[q] = 0;
            }
            let next_q = if q == p { p + 1 } else { q + 1 };
            if let Some(q2) = (next_q..n).find(|&r| self.values[r] == 0) {
                self.values[p] = (q2 + 1) as u32;
                self.values[q2] = (p + 1) as u32;
                self.stack.push((p, q2));
                self.descend_first();
                return true;
            }
        }
        false
    }
}

impl Iterator for Involutions {
    type Item = Involution;

    fn next(&mut self) -> Option<Involution> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            self.descend_first();
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        Some(Involution::from_values_unchecked(self.values.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations_of_three() {
        let all: Vec<_> = enumerate_permutations(3)
            .unwrap()
            .map(|w| w.one_line().to_vec())
            .collect();
        assert_eq!(
            all,
            vec![
                vec![1, 2, 3],
                vec![1, 3, 2],
                vec![2, 1, 3],
                vec![2, 3, 1],
                vec![3, 1, 2],
                vec![3, 2, 1],
            ]
        );
    }

    #[test]
    fn permutation_counts_match_factorials() {
        let mut expected = 1usize;
        for n in 1..=7 {
            expected *= n;
            assert_eq!(enumerate_permutations(n).unwrap().count(), expected);
        }
    }

    #[test]
    fn involutions_of_three_in_lex_order() {
        let all: Vec<_> = enumerate_involutions(3)
            .unwrap()
            .map(|w| w.permutation().one_line().to_vec())
            .collect();
        assert_eq!(
            all,
            vec![vec![1, 2, 3], vec![1, 3, 2], vec![2, 1, 3], vec![3, 2, 1]]
        );
    }

    #[test]
    fn involution_counters_match_recurrence() {
        // i_n = i_{n-1} + (n-1) i_{n-2}
        let expected = [1usize, 2, 4, 10, 26, 76, 232, 764, 2620];
        for (i, &count) in expected.iter().enumerate() {
            let n = i + 1;
            let got: Vec<_> = enumerate_involutions(n).unwrap().collect();
            assert_eq!(got.len(), count, "n={n}");
            for w in &got {
                assert!(w.permutation().is_involution());
            }
            // Lexicographic and duplicate-free.
            for pair in got.windows(2) {
                assert!(pair[0] < pair[1]);
            }
        }
    }

    #[test]
    fn caps_enforced() {
        assert!(matches!(
            enumerate_permutations(13),
            Err(Error::DegreeTooLarge { n: 13, cap: 12 })
        ));
        assert!(matches!(
            enumerate_involutions(17),
            Err(Error::DegreeTooLarge { n: 17, cap: 16 })
        ));
        assert!(matches!(
            enumerate_permutations(0),
            Err(Error::DegreeTooSmall { .. })
        ));
        assert!(enumerate_permutations_with_cap(13, 13).is_ok());
    }
}
