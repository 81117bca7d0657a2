use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::IntVector;

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix whose rows are the given vectors. `cols` is needed
    /// to shape an empty row list.
    pub fn from_rows(cols: usize, rows: &[IntVector]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.rank(), cols, "row of wrong length");
            data.extend(r.entries().iter().cloned());
        }
        IntMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let vs: Vec<IntVector> = rows.iter().map(|r| IntVector::from_i64s(r)).collect();
        Self::from_rows(cols, &vs)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn row(&self, i: usize) -> IntVector {
        IntVector::new(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn row_vectors(&self) -> Vec<IntVector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += k * row[src]
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let delta = &self.data[src * self.cols + j] * k;
            self.data[dst * self.cols + j] += delta;
        }
    }

    /// col[dst] += k * col[src]
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let delta = &self.data[i * self.cols + src] * k;
            self.data[i * self.cols + dst] += delta;
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let x = &mut self.data[i * self.cols + j];
            *x = -std::mem::take(x);
        }
    }

    /// Rank over Q.
    pub fn rank(&self) -> usize {
        RationalEchelon::new(self).pivots.len()
    }

    /// Determinant of a square matrix (fraction-free Bareiss elimination).
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                    a[(i, j)] = v;
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * &a[(n - 1, n - 1)]
    }

    /// Inverse over Q; `None` if singular.
    pub fn rational_inverse(&self) -> Option<Vec<Vec<BigRational>>> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                let mut row: Vec<BigRational> = (0..n)
                    .map(|j| BigRational::from_integer(self[(i, j)].clone()))
                    .collect();
                row.extend((0..n).map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                }));
                row
            })
            .collect();
        let pivots = rref(&mut aug, n);
        if pivots.len() < n {
            return None;
        }
        Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "incompatible matrix shapes");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * &rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.row(i))?;
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form in place over the first `ncols` columns;
/// returns the pivot columns.
pub(crate) fn rref(a: &mut [Vec<BigRational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let (head, tail) = a.split_at_mut(i.max(r));
                let (dst, src) = if i < r {
                    (&mut head[i], &tail[0])
                } else {
                    (&mut tail[0], &head[r])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    *d -= &f * s;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

struct RationalEchelon {
    rows: Vec<Vec<BigRational>>,
    pivots: Vec<usize>,
}

impl RationalEchelon {
    fn new(m: &IntMatrix) -> Self {
        let mut rows: Vec<Vec<BigRational>> = (0..m.rows)
            .map(|i| {
                (0..m.cols)
                    .map(|j| BigRational::from_integer(m[(i, j)].clone()))
                    .collect()
            })
            .collect();
        let pivots = rref(&mut rows, m.cols);
        RationalEchelon { rows, pivots }
    }
}

/// Rank over Q of a list of vectors of the given rank.
pub fn rank_of(rank: usize, vectors: &[IntVector]) -> usize {
    IntMatrix::from_rows(rank, vectors).rank()
}

/// Scales a rational vector to a primitive integer vector.
pub(crate) fn clear_denominators(v: &[BigRational]) -> IntVector {
    use num_integer::Integer;
    let lcm = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    IntVector::new(v.iter().map(|x| (x * &lcm).to_integer()).collect()).primitive()
}

/// A Q-basis of `{x : <row, x> = 0 for every row}` as primitive integer
/// vectors (not necessarily a lattice basis of the kernel).
pub(crate) fn rational_kernel(rank: usize, rows: &[IntVector]) -> Vec<IntVector> {
    let m = IntMatrix::from_rows(rank, rows);
    let ech = RationalEchelon::new(&m);
    let free: Vec<usize> = (0..rank).filter(|c| !ech.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![BigRational::zero(); rank];
            x[f] = BigRational::one();
            for (r, &p) in ech.pivots.iter().enumerate() {
                x[p] = -ech.rows[r][f].clone();
            }
            clear_denominators(&x)
        })
        .collect()
}

/// Solves `coords * basis = v` for rational coordinates, given linearly
/// independent basis rows. `None` when `v` is outside their span.
pub(crate) fn rational_coordinates(
    rank: usize,
    basis: &[IntVector],
    v: &IntVector,
) -> Option<Vec<BigRational>> {
    // Columns of the system are the basis vectors; augment with v.
    let k = basis.len();
    let mut sys: Vec<Vec<BigRational>> = (0..rank)
        .map(|i| {
            let mut row: Vec<BigRational> = basis
                .iter()
                .map(|b| BigRational::from_integer(b.entries()[i].clone()))
                .collect();
            row.push(BigRational::from_integer(v.entries()[i].clone()));
            row
        })
        .collect();
    let pivots = rref(&mut sys, k + 1);
    if pivots.contains(&k) || pivots.len() < k {
        return None;
    }
    Some((0..k).map(|j| sys[j][k].clone()).collect())
}

/// Integer coordinates of `v` in the given (independent) basis, if they exist.
pub fn coordinates_in_basis(rank: usize, basis: &[IntVector], v: &IntVector) -> Option<IntVector> {
    let q = rational_coordinates(rank, basis, v)?;
    if q.iter().all(|x| x.is_integer()) {
        Some(IntVector::new(
            q.into_iter().map(|x| x.to_integer()).collect(),
        ))
    } else {
        None
    }
}

/// `sum_i coeffs[i] * basis[i]`.
pub fn combine(rank: usize, coeffs: &[BigInt], basis: &[IntVector]) -> IntVector {
    let mut out = vec![BigInt::zero(); rank];
    for (c, b) in coeffs.iter().zip(basis) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(b.entries()) {
            *o += c * x;
        }
    }
    IntVector::new(out)
}
