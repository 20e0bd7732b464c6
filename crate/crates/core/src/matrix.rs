//! Dense matrices over exact rationals.
//!
//! Reduction is plain Gauss–Jordan with the first-nonzero pivot rule, so the
//! reduced row-echelon form (zero rows dropped, pivots 1, pivot columns
//! cleared) is a canonical representative: two row spaces are equal iff their
//! reduced forms are equal as data.  Everything downstream leans on that.

use crate::rat::{format_rat, int, Rat};
use num::traits::{One, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>, // row-major
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    /// Build from explicit rows.  Panics on ragged input; callers that accept
    /// untrusted data must check rectangularity first.
    pub fn from_rows(rows: Vec<Vec<Rat>>, cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix row");
            data.extend(r);
        }
        Matrix {
            rows: nrows,
            cols,
            data,
        }
    }

    /// Convenience for tests: integer literals.
    pub fn from_int_rows(rows: &[&[i64]], cols: usize) -> Self {
        Matrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&k| int(k)).collect()).collect(),
            cols,
        )
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut m = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let add = a * rhs.at(k, j);
                    if !add.is_zero() {
                        out.set(i, j, out.at(i, j) + add);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Rat::zero(), |acc, (a, x)| acc + a * x)
            })
            .collect()
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape");
        Matrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j) + rhs.at(i, j))
    }

    pub fn scale(&self, c: &Rat) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j) * c)
    }

    /// Stack vertically.  All operands must agree on the column count.
    pub fn vstack(parts: &[&Matrix]) -> Matrix {
        let cols = parts.first().map_or(0, |m| m.cols);
        let mut rows = Vec::new();
        for m in parts {
            assert_eq!(m.cols, cols, "vstack shape");
            rows.extend(m.row_vecs());
        }
        Matrix::from_rows(rows, cols)
    }

    pub fn block_diag(parts: &[&Matrix]) -> Matrix {
        let rows: usize = parts.iter().map(|m| m.rows).sum();
        let cols: usize = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for m in parts {
            for i in 0..m.rows {
                for j in 0..m.cols {
                    out.set(r0 + i, c0 + j, m.at(i, j).clone());
                }
            }
            r0 += m.rows;
            c0 += m.cols;
        }
        out
    }

    /// Canonical reduced row-echelon form: pivots 1, pivot columns cleared,
    /// zero rows dropped, rows ordered by pivot column.
    pub fn rref(&self) -> Rref {
        let mut rows = self.row_vecs();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.cols {
            // find a pivot at or below row r
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = rows[r][col].recip();
            for x in rows[r].iter_mut() {
                *x = &*x * &inv;
            }
            for i in 0..rows.len() {
                if i != r && !rows[i][col].is_zero() {
                    let f = rows[i][col].clone();
                    for j in 0..self.cols {
                        let sub = &f * &rows[r][j];
                        rows[i][j] = &rows[i][j] - sub;
                    }
                }
            }
            pivots.push(col);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        Rref {
            mat: Matrix::from_rows(rows, self.cols),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis rows of `{x : self * x = 0}` via the free columns of the reduced
    /// form.  Not yet canonicalized; `Subspace::span` does that.
    pub fn kernel_rows(&self) -> Vec<Vec<Rat>> {
        let Rref { mat, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -mat.at(r, free).clone();
            }
            out.push(v);
        }
        out
    }

    pub fn is_epimorphism(&self) -> bool {
        self.rank() == self.rows
    }

    pub fn is_isomorphism(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Exact inverse, `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, n + i, Rat::one());
        }
        let red = aug.rref();
        if red.pivots.len() < n || red.pivots[n - 1] >= n {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| red.mat.at(i, n + j).clone()))
    }

    /// Canonical solution of `self * x = b` (free variables pinned to zero),
    /// `None` when inconsistent.
    pub fn solve_canonical(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(b.len(), self.rows, "solve shape");
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let red = aug.rref();
        if red.pivots.last().is_some_and(|&p| p == self.cols) {
            return None; // pivot in the augmented column
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (r, &p) in red.pivots.iter().enumerate() {
            x[p] = red.mat.at(r, self.cols).clone();
        }
        Some(x)
    }

    /// Canonical right inverse of an epimorphism: columns are the canonical
    /// solutions for the standard basis.  `None` when not surjective.
    pub fn right_inverse(&self) -> Option<Matrix> {
        let mut cols = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut e = vec![Rat::zero(); self.rows];
            e[i] = Rat::one();
            cols.push(self.solve_canonical(&e)?);
        }
        let mut out = Matrix::zeros(self.cols, self.rows);
        for (j, c) in cols.iter().enumerate() {
            for i in 0..self.cols {
                out.set(i, j, c[i].clone());
            }
        }
        Some(out)
    }
}

pub struct Rref {
    pub mat: Matrix,
    pub pivots: Vec<usize>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(format_rat).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]{}x{}", self.rows, self.cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn rref_is_canonical_and_idempotent() {
        let m = Matrix::from_int_rows(&[&[2, 4, 6], &[1, 2, 3], &[0, 0, 5]], 3);
        let r = m.rref();
        assert_eq!(r.mat, Matrix::from_int_rows(&[&[1, 2, 0], &[0, 0, 1]], 3));
        assert_eq!(r.pivots, vec![0, 2]);
        assert_eq!(r.mat.rref().mat, r.mat);
    }

    #[test]
    fn kernel_of_projection() {
        let m = Matrix::from_int_rows(&[&[1, 0]], 2);
        assert_eq!(m.kernel_rows(), vec![vec![rat(0, 1), rat(1, 1)]]);
    }

    #[test]
    fn rank_and_epi() {
        let m = Matrix::from_int_rows(&[&[1, 0], &[0, 1], &[1, 1]], 2);
        assert_eq!(m.rank(), 2);
        assert!(!m.is_epimorphism());
        assert!(m.transpose().is_epimorphism());
        assert!(Matrix::identity(3).is_isomorphism());
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_int_rows(&[&[2, 1], &[1, 1]], 2);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert_eq!(inv.mul(&m), Matrix::identity(2));
        assert!(Matrix::from_int_rows(&[&[1, 2], &[2, 4]], 2).inverse().is_none());
    }

    #[test]
    fn canonical_solve_pins_free_variables() {
        let m = Matrix::from_int_rows(&[&[1, 1, 0]], 3);
        let x = m.solve_canonical(&[rat(5, 1)]).unwrap();
        assert_eq!(x, vec![rat(5, 1), rat(0, 1), rat(0, 1)]);
        let bad = Matrix::from_int_rows(&[&[1, 0], &[1, 0]], 2);
        assert!(bad.solve_canonical(&[rat(0, 1), rat(1, 1)]).is_none());
    }

    #[test]
    fn right_inverse_of_epi() {
        let m = Matrix::from_int_rows(&[&[1, 2, 0], &[0, 0, 1]], 3);
        let r = m.right_inverse().unwrap();
        assert_eq!(m.mul(&r), Matrix::identity(2));
    }
}
