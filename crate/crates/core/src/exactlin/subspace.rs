use std::fmt;

use crate::error::{Error, Result};
use crate::exactlin::field::Field;
use crate::exactlin::matrix::{format_vector, Matrix};

/// A subspace of `F^n`, stored as its canonical reduced row echelon basis.
///
/// Two subspaces are equal exactly when their canonical bases are equal, so
/// the derived `PartialEq` is subspace equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace<F> {
    ambient_dim: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn span(ambient_dim: usize, vectors: Vec<Vec<F>>) -> Result<Self> {
        let m = Matrix::from_rows(ambient_dim, vectors)?;
        Ok(Self::row_space(&m))
    }

    pub fn row_space(m: &Matrix<F>) -> Self {
        let (basis, pivots) = m.rref_with_pivots();
        Subspace {
            ambient_dim: m.cols(),
            basis,
            pivots,
        }
    }

    /// Span of the listed standard basis vectors.
    pub fn coordinate(ambient_dim: usize, indices: &[usize]) -> Self {
        let vectors = indices.iter().map(|&i| unit(ambient_dim, i)).collect();
        Self::span(ambient_dim, vectors).expect("unit vectors have ambient length")
    }

    pub fn from_i64(ambient_dim: usize, rows: &[&[i64]]) -> Self {
        let vectors = rows
            .iter()
            .map(|r| r.iter().map(|&v| F::from_i64(v)).collect())
            .collect();
        Self::span(ambient_dim, vectors).expect("row length must equal ambient_dim")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<F>> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check(&self, other: &Self) -> Result<()> {
        Error::ambient(self.ambient_dim, other.ambient_dim)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut vectors = self.basis_vectors();
        vectors.extend(other.basis_vectors());
        Self::span(self.ambient_dim, vectors)
    }

    /// Intersection via the left kernel of the stacked bases: every
    /// `(l, m)` with `l A = m B` contributes `l A`.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ambient_dim));
        }
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        let stacked = Matrix::from_rows(self.ambient_dim, rows)?;
        let d = self.dim();
        let vectors = stacked
            .transpose()
            .kernel()
            .into_iter()
            .map(|coeffs| combine(&self.basis, &coeffs[..d]))
            .collect();
        Self::span(self.ambient_dim, vectors)
    }

    pub fn contains(&self, v: &[F]) -> Result<bool> {
        if v.len() != self.ambient_dim {
            return Err(Error::AmbientMismatch {
                left: self.ambient_dim,
                right: v.len(),
            });
        }
        Ok(self.reduce(v).iter().all(|x| x.is_zero()))
    }

    /// `self ⊆ other`.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        for i in 0..self.dim() {
            if !other.contains(self.basis.row(i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Remainder of `v` after clearing the pivot columns; zero iff `v` lies
    /// in the subspace.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = out[p].clone();
            if c.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(self.basis.row(r)) {
                if !b.is_zero() {
                    *o = o.clone() - c.clone() * b.clone();
                }
            }
        }
        out
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[F]) -> Result<Option<Vec<F>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    /// Standard basis vectors completing the canonical basis to a basis of
    /// the ambient space: exactly the non-pivot columns, ascending.
    pub fn complement_basis(&self) -> Vec<Vec<F>> {
        self.non_pivots()
            .into_iter()
            .map(|c| unit(self.ambient_dim, c))
            .collect()
    }

    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient_dim).filter(|&c| !is_pivot[c]).collect()
    }

    /// `{w : v·w = 0 for all v in self}` under the standard dot product.
    pub fn annihilator(&self) -> Self {
        let k = self.basis.kernel();
        Self::span(self.ambient_dim, k).expect("kernel vectors have ambient length")
    }

    /// `{x in self : f·x = 0 for every functional f}`.
    pub fn cut_by_functionals(&self, functionals: &[Vec<F>]) -> Result<Self> {
        if functionals.is_empty() || self.is_zero() {
            return Ok(self.clone());
        }
        let mut rows = Vec::with_capacity(functionals.len());
        for f in functionals {
            if f.len() != self.ambient_dim {
                return Err(Error::AmbientMismatch {
                    left: self.ambient_dim,
                    right: f.len(),
                });
            }
            rows.push((0..self.dim()).map(|r| dot(f, self.basis.row(r))).collect());
        }
        let system = Matrix::from_rows(self.dim(), rows)?;
        let vectors = system
            .kernel()
            .into_iter()
            .map(|coeffs| combine(&self.basis, &coeffs))
            .collect();
        Self::span(self.ambient_dim, vectors)
    }
}

impl<F: Field> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace({}; {})", self.ambient_dim, self.basis)
    }
}

impl<F: Field> fmt::Display for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.basis_vectors().iter().map(|r| format_vector(r)).collect();
        write!(f, "span{{{}}}", rows.join(", "))
    }
}

pub fn unit<F: Field>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}

pub fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(F::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// `Σ coeffs[r] * row_r(m)`.
pub fn combine<F: Field>(m: &Matrix<F>, coeffs: &[F]) -> Vec<F> {
    let mut out = vec![F::zero(); m.cols()];
    for (r, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (o, b) in out.iter_mut().zip(m.row(r)) {
            *o = o.clone() + c.clone() * b.clone();
        }
    }
    out
}

pub fn add_vectors<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub fn sub_vectors<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub fn scale_vector<F: Field>(s: &F, v: &[F]) -> Vec<F> {
    v.iter().map(|x| s.clone() * x.clone()).collect()
}

pub fn is_zero_vector<F: Field>(v: &[F]) -> bool {
    v.iter().all(|x| x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;
    type S = Subspace<Q>;

    #[test]
    fn sum_examples() {
        let e1 = S::coordinate(2, &[0]);
        let e2 = S::coordinate(2, &[1]);
        assert!(e1.sum(&e2).unwrap().is_full());
        assert_eq!(e1.sum(&e1).unwrap(), e1);
        let diag = S::from_i64(2, &[&[1, 1]]);
        assert!(e1.sum(&diag).unwrap().is_full());
    }

    #[test]
    fn intersect_examples() {
        let a = S::coordinate(3, &[0, 1]);
        let b = S::coordinate(3, &[1, 2]);
        assert_eq!(a.intersect(&b).unwrap(), S::coordinate(3, &[1]));
        assert!(a.intersect(&S::zero(3)).unwrap().is_zero());
    }

    #[test]
    fn intersect_non_coordinate() {
        let a = S::from_i64(3, &[&[1, 1, 0], &[0, 0, 1]]);
        let b = S::from_i64(3, &[&[1, 0, 0], &[0, 1, 1]]);
        // x(1,1,0)+y(0,0,1) = u(1,0,0)+v(0,1,1) → x=u, x=v, y=v → (1,1,1)
        assert_eq!(a.intersect(&b).unwrap(), S::from_i64(3, &[&[1, 1, 1]]));
    }

    #[test]
    fn containment() {
        let a = S::coordinate(3, &[0, 1]);
        assert!(a.contains(&[Q::from_i64(1), Q::from_i64(1), Q::from_i64(0)]).unwrap());
        assert!(!a.contains(&unit(3, 2)).unwrap());
        assert!(S::zero(3).leq(&a).unwrap());
        assert!(S::zero(3).leq(&S::zero(3)).unwrap());
    }

    #[test]
    fn mismatched_ambient_is_an_error() {
        let a = S::zero(2);
        let b = S::zero(3);
        assert!(matches!(a.sum(&b), Err(Error::AmbientMismatch { .. })));
        assert!(a.intersect(&b).is_err());
        assert!(a.leq(&b).is_err());
        assert!(a.contains(&unit(3, 0)).is_err());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(S::coordinate(2, &[0]).complement_basis(), vec![unit::<Q>(2, 1)]);
        assert!(S::full(2).complement_basis().is_empty());
        assert_eq!(S::from_i64(2, &[&[1, 1]]).complement_basis(), vec![unit::<Q>(2, 1)]);
    }

    #[test]
    fn coordinates_read_pivots() {
        let a = S::from_i64(3, &[&[1, 0, 2], &[0, 1, -1]]);
        let v = vec![Q::from_i64(3), Q::from_i64(4), Q::from_i64(2)];
        assert_eq!(
            a.coordinates(&v).unwrap(),
            Some(vec![Q::from_i64(3), Q::from_i64(4)])
        );
        assert_eq!(a.coordinates(&unit(3, 2)).unwrap(), None);
    }

    #[test]
    fn annihilator_dimension() {
        let a = S::from_i64(4, &[&[1, 2, 0, 1], &[0, 0, 1, 1]]);
        let ann = a.annihilator();
        assert_eq!(ann.dim(), 2);
        for w in ann.basis_vectors() {
            for v in a.basis_vectors() {
                assert!(num_traits::Zero::is_zero(&dot(&v, &w)));
            }
        }
    }

    #[test]
    fn cut_by_functionals_restricts() {
        let a = S::full(3);
        let f = vec![Q::from_i64(1), Q::from_i64(-1), Q::from_i64(0)];
        let cut = a.cut_by_functionals(&[f]).unwrap();
        assert_eq!(cut, S::from_i64(3, &[&[1, 1, 0], &[0, 0, 1]]));
    }
}
