//! RSK machinery: row insertion, the inverse correspondence, and the
//! reduction of Kostant-negativity certification to the unique involution
//! in a permutation's left cell.
//!
//! Cells here are the fibers of the recording tableau: w and w' share a cell
//! iff rsk(w).1 == rsk(w').1. Each cell contains exactly one involution,
//! namely inverse_rsk(Q, Q), because involutions are exactly the words with
//! P = Q. Negativity is a cell invariant, so finding a consecutive 2143 in
//! any member certifies the whole cell.

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::patterns::{first_consecutive_occurrence, Occurrence};
use crate::perm::{Involution, Permutation};

/// Cap for whole-cell sweeps; shapes of size 9 already reach f^λ = 768
/// members and the classify-by-cell path is only a cross-check.
pub const CELL_ENUM_CAP: usize = 9;

/// A standard Young tableau with entries 1..=n, rows and columns strictly
/// increasing, row lengths weakly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct StandardTableau {
    rows: Vec<Vec<u32>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let n: usize = rows.iter().map(|r| r.len()).sum();
        let mut seen = vec![false; n + 1];
        for (i, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::NotStandard(format!("row {} is empty", i + 1)));
            }
            if i > 0 && row.len() > rows[i - 1].len() {
                return Err(Error::NotStandard(format!(
                    "row {} longer than row {}",
                    i + 1,
                    i
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v == 0 || v as usize > n || seen[v as usize] {
                    return Err(Error::NotStandard(format!(
                        "entries must be a permutation of 1..={n}, saw {v} twice or out of range"
                    )));
                }
                seen[v as usize] = true;
                if j > 0 && row[j - 1] >= v {
                    return Err(Error::NotStandard(format!("row {} not increasing", i + 1)));
                }
                if i > 0 && rows[i - 1][j] >= v {
                    return Err(Error::NotStandard(format!("column {} not increasing", j + 1)));
                }
            }
        }
        Ok(StandardTableau { rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        StandardTableau { rows }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.len()).collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }
}

/// Row-insertion RSK: returns (P, Q) with P the insertion and Q the
/// recording tableau.
pub fn rsk(w: &Permutation) -> (StandardTableau, StandardTableau) {
    let mut p: Vec<Vec<u32>> = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for (step, &value) in w.one_line().iter().enumerate() {
        let mut carry = value;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![carry]);
                q.push(vec![(step + 1) as u32]);
                break;
            }
            // First entry strictly larger than the carry gets bumped.
            let idx = p[row].partition_point(|&x| x < carry);
            if idx == p[row].len() {
                p[row].push(carry);
                q[row].push((step + 1) as u32);
                break;
            }
            std::mem::swap(&mut carry, &mut p[row][idx]);
            row += 1;
        }
    }
    (
        StandardTableau::from_rows_unchecked(p),
        StandardTableau::from_rows_unchecked(q),
    )
}

/// Inverse RSK: reconstructs the unique w with rsk(w) = (p, q).
pub fn inverse_rsk(p: &StandardTableau, q: &StandardTableau) -> Result<Permutation> {
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch(p.shape(), q.shape()));
    }
    let n = p.size();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    // Position of each recording entry; entry m is removed at step m.
    let mut where_in_q = vec![(0usize, 0usize); n + 1];
    for (i, row) in q.rows().iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            where_in_q[v as usize] = (i, j);
        }
    }
    let mut rows: Vec<Vec<u32>> = p.rows().to_vec();
    let mut values = vec![0u32; n];
    for m in (1..=n).rev() {
        let (r, c) = where_in_q[m];
        debug_assert_eq!(c, rows[r].len() - 1, "recording entry must be a row end");
        let mut carry = rows[r].pop().expect("non-empty row");
        for upper in (0..r).rev() {
            // Largest entry below the carry takes its place.
            let idx = rows[upper].partition_point(|&x| x < carry) - 1;
            std::mem::swap(&mut carry, &mut rows[upper][idx]);
        }
        values[m - 1] = carry;
    }
    Permutation::from_one_line(values)
}

/// The one involution in w's cell: inverse_rsk(Q, Q).
pub fn cell_involution(w: &Permutation) -> Involution {
    let (_, q) = rsk(w);
    let u = inverse_rsk(&q, &q).expect("Q matches itself");
    Involution::from_permutation(u).expect("P = Q forces an involution")
}

/// All standard tableaux of the given shape, in a fixed depth-first order
/// (each entry placed in the topmost admissible row).
pub fn standard_tableaux_of_shape(shape: &[usize]) -> Vec<StandardTableau> {
    let n: usize = shape.iter().sum();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut fill: Vec<usize> = vec![0; shape.len()];
    let mut rows: Vec<Vec<u32>> = shape.iter().map(|&len| Vec::with_capacity(len)).collect();
    fn place(
        v: u32,
        n: usize,
        shape: &[usize],
        fill: &mut Vec<usize>,
        rows: &mut Vec<Vec<u32>>,
        out: &mut Vec<StandardTableau>,
    ) {
        if v as usize > n {
            out.push(StandardTableau::from_rows_unchecked(rows.clone()));
            return;
        }
        for r in 0..shape.len() {
            let admissible = fill[r] < shape[r] && (r == 0 || fill[r] < fill[r - 1]);
            if admissible {
                rows[r].push(v);
                fill[r] += 1;
                place(v + 1, n, shape, fill, rows, out);
                fill[r] -= 1;
                rows[r].pop();
            }
        }
    }
    place(1, n, shape, &mut fill, &mut rows, &mut out);
    out
}

/// Number of standard tableaux of a shape by the hook length formula,
/// n! / prod(hooks); independent of the enumeration above, so the two can
/// audit each other.
pub fn hook_length_count(shape: &[usize]) -> BigUint {
    let n: usize = shape.iter().sum();
    let mut numer = BigUint::one();
    for i in 2..=n {
        numer *= BigUint::from(i);
    }
    let mut denom = BigUint::one();
    for (i, &len) in shape.iter().enumerate() {
        for j in 0..len {
            let arm = len - j - 1;
            let leg = shape[i + 1..].iter().take_while(|&&l| l > j).count();
            denom *= BigUint::from(arm + leg + 1);
        }
    }
    numer / denom
}

/// Iterator over every member of w's cell: all words with the same recording
/// tableau, i.e. inverse_rsk(P', Q) over all P' of the right shape.
pub fn cell_members(w: &Permutation) -> Result<CellMembers> {
    cell_members_with_cap(w, CELL_ENUM_CAP)
}

pub fn cell_members_with_cap(w: &Permutation, cap: usize) -> Result<CellMembers> {
    let n = w.degree();
    if n > cap {
        return Err(Error::DegreeTooLarge { n, cap });
    }
    let (_, q) = rsk(w);
    let tableaux = standard_tableaux_of_shape(&q.shape());
    Ok(CellMembers {
        q,
        inner: tableaux.into_iter(),
    })
}

pub struct CellMembers {
    q: StandardTableau,
    inner: std::vec::IntoIter<StandardTableau>,
}

impl CellMembers {
    pub fn recording_tableau(&self) -> &StandardTableau {
        &self.q
    }
}

impl Iterator for CellMembers {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let p = self.inner.next()?;
        Some(inverse_rsk(&p, &self.q).expect("same shape by construction"))
    }
}

impl ExactSizeIterator for CellMembers {
    fn len(&self) -> usize {
        self.inner.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassifyMode {
    /// Check w itself, then the cell involution. Sound for negativity by
    /// cell invariance and complete on involutions.
    Quick,
    /// Sweep every member of the cell; subject to [`CELL_ENUM_CAP`].
    Cell,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NegativityWitness {
    pub member: Permutation,
    pub occurrence: Occurrence,
}

/// Outcome of the Kostant-negativity certificate search. `NoCertificate`
/// means no member examined contains a consecutive 2143; it is not a
/// positivity proof.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "tag", rename_all = "kebab-case")]
pub enum KostantVerdict {
    Negative { witness: NegativityWitness },
    NoCertificate,
}

impl KostantVerdict {
    pub fn is_negative(&self) -> bool {
        matches!(self, KostantVerdict::Negative { .. })
    }
}

pub fn classify_kostant(w: &Permutation, mode: ClassifyMode) -> Result<KostantVerdict> {
    classify_kostant_with_cap(w, mode, CELL_ENUM_CAP)
}

pub fn classify_kostant_with_cap(
    w: &Permutation,
    mode: ClassifyMode,
    cap: usize,
) -> Result<KostantVerdict> {
    match mode {
        ClassifyMode::Quick => {
            if let Some(occurrence) = first_consecutive_occurrence(w) {
                return Ok(KostantVerdict::Negative {
                    witness: NegativityWitness {
                        member: w.clone(),
                        occurrence,
                    },
                });
            }
            let u = cell_involution(w);
            if let Some(occurrence) = first_consecutive_occurrence(u.permutation()) {
                return Ok(KostantVerdict::Negative {
                    witness: NegativityWitness {
                        member: u.into_permutation(),
                        occurrence,
                    },
                });
            }
            Ok(KostantVerdict::NoCertificate)
        }
        ClassifyMode::Cell => {
            for member in cell_members_with_cap(w, cap)? {
                if let Some(occurrence) = first_consecutive_occurrence(&member) {
                    return Ok(KostantVerdict::Negative {
                        witness: NegativityWitness { member, occurrence },
                    });
                }
            }
            Ok(KostantVerdict::NoCertificate)
        }
    }
}
