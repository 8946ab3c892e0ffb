use std::fmt;

use crate::error::{Error, Result};
use crate::exactlin::field::{format_scalar, Field};

/// Dense row-major matrix over an exact field.
///
/// Linear maps act on row vectors from the right: row `i` of the matrix of
/// a map is the image of the `i`-th basis vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<F>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: nrows,
            cols,
            data,
        })
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| F::from_i64(v)).collect())
            .collect();
        Self::from_rows(cols, rows).expect("ragged integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: rhs.rows * rhs.cols,
            });
        }
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, s: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * s.clone()).collect(),
        }
    }

    /// Row vector times matrix.
    pub fn apply(&self, v: &[F]) -> Result<Vec<F>> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: v.len(),
            });
        }
        let mut out = vec![F::zero(); self.cols];
        for (i, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(self.row(i)) {
                if !b.is_zero() {
                    *o = o.clone() + a.clone() * b.clone();
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    /// `trace(self * rhs)` without forming the product.
    pub fn trace_of_product(&self, rhs: &Self) -> F {
        let mut acc = F::zero();
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if !a.is_zero() && k < rhs.rows && i < rhs.cols {
                    acc = acc + a.clone() * rhs[(k, i)].clone();
                }
            }
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Nilpotency by powering: `M^n = 0` for an `n x n` matrix. Valid over
    /// any field.
    pub fn is_nilpotent(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let mut acc = self.clone();
        for _ in 1..self.rows.max(1) {
            if acc.is_zero() {
                return true;
            }
            acc = acc.mul(self).expect("square");
        }
        acc.is_zero()
    }

    /// `trace(M^k) = 0` for `k = 1..=n`. Equivalent to nilpotency in
    /// characteristic zero (Newton's identities force the characteristic
    /// polynomial to be `t^n`); not a nilpotency test in characteristic p.
    pub fn trace_powers_vanish(&self) -> bool {
        let mut acc = self.clone();
        for _ in 0..self.rows {
            if !acc.trace().is_zero() {
                return false;
            }
            acc = acc.mul(self).expect("square");
        }
        true
    }

    /// Reduced row echelon form with zero rows dropped, and the pivot columns.
    pub fn rref_with_pivots(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inverse().expect("nonzero pivot");
            for j in c..m.cols {
                m[(r, j)] = m[(r, j)].clone() * inv.clone();
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    if !m[(r, j)].is_zero() {
                        m[(i, j)] = m[(i, j)].clone() - f.clone() * m[(r, j)].clone();
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.data.truncate(r * m.cols);
        m.rows = r;
        (m, pivots)
    }

    pub fn rref(&self) -> Self {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// Basis of the right null space `{x : M x^T = 0}`, one vector per free
    /// column, in ascending free-column order.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref_with_pivots();
        let mut out = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[(row, free)].clone();
            }
            out.push(v);
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<F> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Field> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_vector(self.row(i)))?;
        }
        write!(f, "]")
    }
}

pub fn format_vector<F: Field>(v: &[F]) -> String {
    let parts: Vec<String> = v.iter().map(format_scalar).collect();
    format!("[{}]", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Fp;
    use num_rational::BigRational;

    type Q = BigRational;

    #[test]
    fn rref_collapses_dependent_rows() {
        let m = Matrix::<Q>::from_i64(&[&[0, 1], &[0, 2]]);
        assert_eq!(m.rref(), Matrix::from_i64(&[&[0, 1]]));
    }

    #[test]
    fn rref_of_identity() {
        let id = Matrix::<Q>::identity(3);
        assert_eq!(id.rref(), id);
    }

    #[test]
    fn rref_normalizes_pivot() {
        let m = Matrix::<Q>::from_i64(&[&[2, 4]]);
        assert_eq!(m.rref(), Matrix::from_i64(&[&[1, 2]]));
    }

    #[test]
    fn rref_of_zero_matrix_is_empty() {
        let m = Matrix::<Q>::zeros(3, 2);
        let (r, p) = m.rref_with_pivots();
        assert_eq!(r.rows(), 0);
        assert!(p.is_empty());
    }

    #[test]
    fn kernel_is_annihilated() {
        let m = Matrix::<Q>::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        let t = m.transpose();
        assert!(t.apply(&k[0]).unwrap().iter().all(num_traits::Zero::is_zero));
    }

    #[test]
    fn nilpotency_tests_agree_in_char_zero() {
        let strict = Matrix::<Q>::from_i64(&[&[0, 1, 5], &[0, 0, 2], &[0, 0, 0]]);
        assert!(strict.is_nilpotent());
        assert!(strict.trace_powers_vanish());
        let rot = Matrix::<Q>::from_i64(&[&[0, 1], &[-1, 0]]);
        assert!(!rot.is_nilpotent());
        assert!(!rot.trace_powers_vanish());
    }

    #[test]
    fn trace_test_fails_in_char_p() {
        // identity on F_2^2 has trace 0 and trace of every power 0
        let id = Matrix::<Fp<2>>::identity(2);
        assert!(id.trace_powers_vanish());
        assert!(!id.is_nilpotent());
    }

    #[test]
    fn trace_of_product_matches_product() {
        let a = Matrix::<Q>::from_i64(&[&[1, 2], &[3, 4]]);
        let b = Matrix::<Q>::from_i64(&[&[0, 1], &[5, -2]]);
        assert_eq!(a.trace_of_product(&b), a.mul(&b).unwrap().trace());
    }
}
