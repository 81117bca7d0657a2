use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{IntMatrix, IntVector};
use crate::error::Result;

/// `left * A * right = diag(diagonal)` with unimodular `left`, `right`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    /// Invariant factors `d_1 | d_2 | ...`, length `min(rows, cols)`.
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
    pub left: IntMatrix,
    pub right: IntMatrix,
    right_inverse: IntMatrix,
}

impl SmithDecomposition {
    /// Inverse of `right`, maintained alongside it during the reduction.
    pub fn right_inverse(&self) -> &IntMatrix {
        &self.right_inverse
    }

    /// The diagonal form as a full matrix of the input's shape.
    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.left.rows(), self.right.cols());
        for (i, x) in self.diagonal.iter().enumerate() {
            d[(i, i)] = x.clone();
        }
        d
    }

    /// Nonzero invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal
            .iter()
            .filter(|d| **d > BigInt::one())
            .cloned()
            .collect()
    }
}

struct Reduction {
    a: IntMatrix,
    left: IntMatrix,
    right: IntMatrix,
    right_inv: IntMatrix,
}

impl Reduction {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.left.swap_rows(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.right.swap_cols(i, j);
        self.right_inv.swap_rows(i, j);
    }

    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.a.add_row_multiple(dst, src, k);
        self.left.add_row_multiple(dst, src, k);
    }

    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.a.add_col_multiple(dst, src, k);
        self.right.add_col_multiple(dst, src, k);
        self.right_inv.add_row_multiple(src, dst, &-k);
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        self.left.negate_row(i);
    }

    /// Smallest nonzero |entry| in the trailing block, first in row-major order.
    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                let ax = x.abs();
                if best.as_ref().is_none_or(|(_, _, b)| ax < *b) {
                    best = Some((i, j, ax));
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }
}

/// Smith normal form with minimal-absolute-value pivoting (ties broken in
/// row-major order), so the transforms are deterministic.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (a.rows(), a.cols());
    let mut red = Reduction {
        a: a.clone(),
        left: IntMatrix::identity(rows),
        right: IntMatrix::identity(cols),
        right_inv: IntMatrix::identity(cols),
    };
    let n = rows.min(cols);
    let mut rank = 0;
    'outer: for t in 0..n {
        loop {
            let Some((pi, pj)) = red.pivot(t) else {
                break 'outer;
            };
            red.swap_rows(t, pi);
            red.swap_cols(t, pj);
            let p = red.a[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..rows {
                if red.a[(i, t)].is_zero() {
                    continue;
                }
                let q = red.a[(i, t)].div_floor(&p);
                red.add_row(i, t, &-q);
                clean &= red.a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if red.a[(t, j)].is_zero() {
                    continue;
                }
                let q = red.a[(t, j)].div_floor(&p);
                red.add_col(j, t, &-q);
                clean &= red.a[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // Enforce p | every remaining entry.
            let bad =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !red.a[(i, j)].is_multiple_of(&p)));
            if let Some(i) = bad {
                red.add_row(t, i, &BigInt::one());
                continue;
            }
            if p.is_negative() {
                red.negate_row(t);
            }
            rank += 1;
            break;
        }
    }
    let diagonal = (0..n).map(|i| red.a[(i, i)].clone()).collect();
    SmithDecomposition {
        diagonal,
        rank,
        left: red.left,
        right: red.right,
        right_inverse: red.right_inv,
    }
}

/// Row-style Hermite normal form of the lattice spanned by `vectors`:
/// echelon rows with positive pivots and entries above each pivot reduced
/// into `[0, pivot)`. Zero rows are dropped.
pub fn hermite_normal_form(rank: usize, vectors: &[IntVector]) -> Vec<IntVector> {
    let mut m = IntMatrix::from_rows(rank, vectors);
    let mut r = 0;
    for c in 0..rank {
        if r == m.rows() {
            break;
        }
        loop {
            let piv = (r..m.rows())
                .filter(|&i| !m[(i, c)].is_zero())
                .min_by(|&i, &j| m[(i, c)].abs().cmp(&m[(j, c)].abs()).then(i.cmp(&j)));
            let Some(p) = piv else { break };
            m.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..m.rows() {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let q = m[(i, c)].div_floor(&m[(r, c)]);
                m.add_row_multiple(i, r, &-q);
                done &= m[(i, c)].is_zero();
            }
            if done {
                break;
            }
        }
        if m[(r, c)].is_zero() {
            continue;
        }
        if m[(r, c)].is_negative() {
            m.negate_row(r);
        }
        for i in 0..r {
            let q = m[(i, c)].div_floor(&m[(r, c)]);
            m.add_row_multiple(i, r, &-q);
        }
        r += 1;
    }
    (0..r).map(|i| m.row(i)).collect()
}

/// Basis (in Hermite normal form) of the saturation `span_Q(vectors) ∩ Z^n`.
pub fn saturated_span(rank: usize, vectors: &[IntVector]) -> Result<Vec<IntVector>> {
    for v in vectors {
        v.check_rank(rank)?;
    }
    if vectors.is_empty() {
        return Ok(Vec::new());
    }
    let snf = smith_normal_form(&IntMatrix::from_rows(rank, vectors));
    let inv = snf.right_inverse();
    let rows: Vec<IntVector> = (0..snf.rank).map(|i| inv.row(i)).collect();
    Ok(hermite_normal_form(rank, &rows))
}

/// Extends a saturated basis to a basis of `Z^n`; returns the added vectors.
pub fn complete_basis(rank: usize, saturated: &[IntVector]) -> Vec<IntVector> {
    if saturated.is_empty() {
        return (0..rank).map(|i| IntVector::unit(rank, i)).collect();
    }
    let snf = smith_normal_form(&IntMatrix::from_rows(rank, saturated));
    debug_assert!(
        snf.diagonal.iter().all(|d| d.is_one()),
        "input not saturated"
    );
    let inv = snf.right_inverse();
    (snf.rank..rank).map(|i| inv.row(i)).collect()
}

/// `rank N / N'` for a sublattice given by an independent basis.
pub fn quotient_rank(ambient_rank: usize, sublattice_basis: &[IntVector]) -> usize {
    ambient_rank - sublattice_basis.len()
}
