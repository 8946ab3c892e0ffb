//! Leibniz algebras given by structure constants.
//!
//! All algebras are *right* Leibniz algebras: every right multiplication
//! `R_x : y ↦ [y, x]` is a derivation, i.e.
//!
//! ```text
//! [x, [y, z]] = [[x, y], z] - [[x, z], y]
//! ```
//!
//! Left Leibniz input can be handled by transposing the table (the opposite
//! algebra).

mod ideals;
mod quotient;
mod series;

pub use quotient::{QuotientPresentation, SubalgebraPresentation};

use crate::error::{Error, Result};
use crate::exactlin::{format_vector, is_zero_vector, sub_vectors, Field, FieldDesc, Matrix, Subspace};
use crate::report::VerificationReport;

/// `(i, j, [(k, c), ...])`: `[e_i, e_j] = Σ c·e_k` with integer `c`.
pub type Product<'a> = (usize, usize, &'a [(usize, i64)]);

/// A finite-dimensional Leibniz algebra: `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LeibnizAlgebra<F> {
    labels: Vec<String>,
    // flat n*n*n tensor, index (i*n + j)*n + k
    table: Vec<F>,
}

/// A basis triple `(x, y, z)` where the Leibniz identity fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityFailure<F> {
    pub triple: (usize, usize, usize),
    /// `[x, [y, z]]`
    pub lhs: Vec<F>,
    /// `[[x, y], z] - [[x, z], y]`
    pub rhs: Vec<F>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeibnizCheck<F> {
    pub failures: Vec<IdentityFailure<F>>,
}

impl<F: Field> LeibnizCheck<F> {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_report(&self, labels: &[String]) -> VerificationReport {
        let mut r = VerificationReport::new::<F>("leibniz-identity");
        r.verdict("identity_holds_on_basis_triples", self.passed());
        for f in &self.failures {
            let (x, y, z) = f.triple;
            r.witness(format!(
                "({}, {}, {}): lhs {} rhs {}",
                labels[x],
                labels[y],
                labels[z],
                format_vector(&f.lhs),
                format_vector(&f.rhs)
            ));
        }
        r.finish()
    }
}

impl<F: Field> LeibnizAlgebra<F> {
    /// Builds an algebra and checks the Leibniz identity.
    pub fn new(labels: Vec<String>, table: Vec<F>) -> Result<Self> {
        let alg = Self::new_unchecked(labels, table)?;
        let check = alg.check_leibniz();
        if check.passed() {
            Ok(alg)
        } else {
            Err(Error::NotLeibniz {
                failures: check.failures.len(),
            })
        }
    }

    /// Builds a structure table without checking the identity. Only the
    /// tensor shape is validated.
    pub fn new_unchecked(labels: Vec<String>, table: Vec<F>) -> Result<Self> {
        let n = labels.len();
        if table.len() != n * n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n * n,
                found: table.len(),
            });
        }
        Ok(LeibnizAlgebra { labels, table })
    }

    /// Builds from a sparse product list `(i, j, [(k, c)])`, checking the
    /// identity.
    pub fn from_products(labels: &[&str], products: &[Product<'_>]) -> Result<Self> {
        let alg = Self::from_products_unchecked(labels, products)?;
        Self::new(alg.labels, alg.table)
    }

    pub fn from_products_unchecked(
        labels: &[&str],
        products: &[Product<'_>],
    ) -> Result<Self> {
        let n = labels.len();
        let mut table = vec![F::zero(); n * n * n];
        for &(i, j, terms) in products {
            for &(k, c) in terms {
                if i >= n || j >= n || k >= n {
                    return Err(Error::InvalidParameter(format!(
                        "product index ({i}, {j}, {k}) out of range for dimension {n}"
                    )));
                }
                table[(i * n + j) * n + k] = F::from_i64(c);
            }
        }
        Self::new_unchecked(labels.iter().map(|s| s.to_string()).collect(), table)
    }

    /// Abelian algebra with the given labels.
    pub fn abelian(labels: Vec<String>) -> Self {
        let n = labels.len();
        LeibnizAlgebra {
            labels,
            table: vec![F::zero(); n * n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn field(&self) -> FieldDesc {
        F::descriptor()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &F {
        let n = self.dim();
        &self.table[(i * n + j) * n + k]
    }

    /// Returns a copy with one structure constant overwritten. The identity
    /// is not re-checked, so the result may not be a Leibniz algebra.
    pub fn with_structure_constant(&self, i: usize, j: usize, k: usize, value: F) -> Self {
        let n = self.dim();
        let mut out = self.clone();
        out.table[(i * n + j) * n + k] = value;
        out
    }

    /// `[e_i, e_j]` as a coordinate slice.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[F] {
        let n = self.dim();
        &self.table[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn bracket(&self, x: &[F], y: &[F]) -> Result<Vec<F>> {
        let n = self.dim();
        self.check_vector(x)?;
        self.check_vector(y)?;
        let mut out = vec![F::zero(); n];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.clone() * b.clone();
                for (o, c) in out.iter_mut().zip(self.basis_bracket(i, j)) {
                    if !c.is_zero() {
                        *o = o.clone() + ab.clone() * c.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    pub(crate) fn check_vector(&self, v: &[F]) -> Result<()> {
        if v.len() == self.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            })
        }
    }

    pub(crate) fn check_subspace(&self, s: &Subspace<F>) -> Result<()> {
        Error::ambient(self.dim(), s.ambient_dim())
    }

    /// Matrix of `R_x : y ↦ [y, x]`; row `i` is `[e_i, x]`.
    pub fn right_mult(&self, x: &[F]) -> Result<Matrix<F>> {
        self.check_vector(x)?;
        let n = self.dim();
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let mut e = vec![F::zero(); n];
            e[i] = F::one();
            rows.push(self.bracket(&e, x)?);
        }
        Matrix::from_rows(n, rows)
    }

    /// Matrix of `L_x : y ↦ [x, y]`; row `i` is `[x, e_i]`.
    pub fn left_mult(&self, x: &[F]) -> Result<Matrix<F>> {
        self.check_vector(x)?;
        let n = self.dim();
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let mut e = vec![F::zero(); n];
            e[i] = F::one();
            rows.push(self.bracket(x, &e)?);
        }
        Matrix::from_rows(n, rows)
    }

    /// `R_{e_i}` for every basis vector.
    pub fn right_mult_basis(&self) -> Vec<Matrix<F>> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                let mut e = vec![F::zero(); n];
                e[i] = F::one();
                self.right_mult(&e).expect("basis vector")
            })
            .collect()
    }

    fn left_mult_basis(&self) -> Vec<Matrix<F>> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                let mut e = vec![F::zero(); n];
                e[i] = F::one();
                self.left_mult(&e).expect("basis vector")
            })
            .collect()
    }

    /// Checks the identity on all `n³` basis triples and records every
    /// failure. Trilinearity makes basis triples sufficient.
    pub fn check_leibniz(&self) -> LeibnizCheck<F> {
        let n = self.dim();
        let mut failures = Vec::new();
        for x in 0..n {
            for y in 0..n {
                let xy = self.basis_bracket(x, y).to_vec();
                for z in 0..n {
                    let yz = self.basis_bracket(y, z);
                    let ex = crate::exactlin::unit(n, x);
                    let lhs = self.bracket(&ex, yz).expect("square table");
                    let xz = self.basis_bracket(x, z).to_vec();
                    let ez = crate::exactlin::unit(n, z);
                    let ey = crate::exactlin::unit(n, y);
                    let rhs = sub_vectors(
                        &self.bracket(&xy, &ez).expect("square table"),
                        &self.bracket(&xz, &ey).expect("square table"),
                    );
                    if lhs != rhs {
                        failures.push(IdentityFailure {
                            triple: (x, y, z),
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }
        LeibnizCheck { failures }
    }

    /// `[e_i, e_i] = 0` and `[e_i, e_j] = -[e_j, e_i]` on the table, which by
    /// polarization is `[x, x] = 0` for all `x`.
    pub fn is_lie(&self) -> bool {
        let n = self.dim();
        for i in 0..n {
            if !is_zero_vector(self.basis_bracket(i, i)) {
                return false;
            }
            for j in i + 1..n {
                let a = self.basis_bracket(i, j);
                let b = self.basis_bracket(j, i);
                if a.iter().zip(b).any(|(x, y)| !(x.clone() + y.clone()).is_zero()) {
                    return false;
                }
            }
        }
        true
    }

    /// `{x : [x, L] = [L, x] = 0}`.
    pub fn center(&self) -> Subspace<F> {
        let n = self.dim();
        // x is central iff x·L_{e_j} = 0 and x·R_{e_j} = 0 for every j, i.e.
        // x is orthogonal to every column of those matrices.
        let mut functionals = Vec::new();
        for m in self.right_mult_basis().into_iter().chain(self.left_mult_basis()) {
            let t = m.transpose();
            functionals.extend(t.row_vectors());
        }
        Subspace::full(n)
            .cut_by_functionals(&functionals)
            .expect("functionals have ambient length")
    }

    /// Block-diagonal direct sum; all cross products vanish.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (a, b) = (self.dim(), other.dim());
        let n = a + b;
        let mut table = vec![F::zero(); n * n * n];
        for i in 0..a {
            for j in 0..a {
                for k in 0..a {
                    table[(i * n + j) * n + k] = self.structure_constant(i, j, k).clone();
                }
            }
        }
        for i in 0..b {
            for j in 0..b {
                for k in 0..b {
                    table[((a + i) * n + a + j) * n + a + k] = other.structure_constant(i, j, k).clone();
                }
            }
        }
        let mut labels = self.labels.clone();
        for l in &other.labels {
            let mut l = l.clone();
            while labels.contains(&l) {
                l.push('\'');
            }
            labels.push(l);
        }
        LeibnizAlgebra { labels, table }
    }

    /// Reinterprets the structure constants in another field. Fails when a
    /// denominator is not a unit there or the identity breaks after
    /// reduction.
    pub fn reduce_into<G: Field>(&self) -> Result<LeibnizAlgebra<G>> {
        let mut table = Vec::with_capacity(self.table.len());
        for c in &self.table {
            let (num, den) = c.to_ratio();
            let v = G::from_ratio(&num, &den).ok_or_else(|| {
                Error::Reduction(format!(
                    "denominator {den} is not a unit in {}",
                    G::descriptor()
                ))
            })?;
            table.push(v);
        }
        let alg = LeibnizAlgebra::new_unchecked(self.labels.clone(), table)?;
        let check = alg.check_leibniz();
        if !check.passed() {
            return Err(Error::Reduction(format!(
                "identity fails on {} triple(s) after reduction to {}",
                check.failures.len(),
                G::descriptor()
            )));
        }
        Ok(alg)
    }

    /// Pads every basis vector of `s` with `offset` zeros in front and
    /// `pad` zeros behind, e.g. to place it in one summand of a direct sum.
    pub fn embed_block(s: &Subspace<F>, offset: usize, pad: usize) -> Subspace<F> {
        let n = offset + s.ambient_dim() + pad;
        let vectors = s
            .basis_vectors()
            .into_iter()
            .map(|v| {
                let mut w = vec![F::zero(); offset];
                w.extend(v);
                w.extend(std::iter::repeat_n(F::zero(), pad));
                w
            })
            .collect();
        Subspace::span(n, vectors).expect("padded length")
    }
}

impl<F: Field> std::fmt::Debug for LeibnizAlgebra<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LeibnizAlgebra<{}>({:?}", F::descriptor(), self.labels)?;
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let v = self.basis_bracket(i, j);
                if !is_zero_vector(v) {
                    write!(f, ", [{},{}]={}", self.labels[i], self.labels[j], format_vector(v))?;
                }
            }
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::unit;
    use num_rational::BigRational;

    type Q = BigRational;

    fn example1() -> LeibnizAlgebra<Q> {
        LeibnizAlgebra::from_products(&["x", "x2"], &[(0, 0, &[(1, 1)]), (1, 0, &[(1, 1)])]).unwrap()
    }

    fn q(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| Q::from_i64(x)).collect()
    }

    #[test]
    fn example1_satisfies_identity() {
        assert!(example1().check_leibniz().passed());
    }

    #[test]
    fn abelian_satisfies_identity() {
        let a = LeibnizAlgebra::<Q>::abelian(vec!["a".into(), "b".into(), "c".into()]);
        assert!(a.check_leibniz().passed());
        assert!(a.is_lie());
    }

    #[test]
    fn broken_table_fails_at_first_triple() {
        let bad = LeibnizAlgebra::<Q>::from_products_unchecked(
            &["e1", "e2"],
            &[(0, 0, &[(1, 1)]), (0, 1, &[(0, 1)])],
        )
        .unwrap();
        let check = bad.check_leibniz();
        assert!(!check.passed());
        let first = &check.failures[0];
        assert_eq!(first.triple, (0, 0, 0));
        assert_eq!(first.lhs, q(&[1, 0]));
        assert_eq!(first.rhs, q(&[0, 0]));
        assert!(matches!(
            LeibnizAlgebra::new(bad.labels().to_vec(), bad.table.clone()),
            Err(Error::NotLeibniz { .. })
        ));
    }

    #[test]
    fn right_mult_example1() {
        let l = example1();
        // R_x: e1 ↦ e2, e2 ↦ e2
        assert_eq!(l.right_mult(&unit(2, 0)).unwrap(), Matrix::from_i64(&[&[0, 1], &[0, 1]]));
        assert!(l.right_mult(&unit(2, 1)).unwrap().is_zero());
        assert!(l.right_mult(&q(&[0, 0])).unwrap().is_zero());
        assert!(l.right_mult(&q(&[0])).is_err());
    }

    #[test]
    fn right_mult_is_linear() {
        let l = example1();
        let x = q(&[2, -3]);
        let lhs = l.right_mult(&x).unwrap();
        let rhs = l
            .right_mult(&unit(2, 0))
            .unwrap()
            .scale(&Q::from_i64(2))
            .add(&l.right_mult(&unit(2, 1)).unwrap().scale(&Q::from_i64(-3)))
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn left_mult_example1() {
        let l = example1();
        // L_x: e1 ↦ [x,x] = e2, e2 ↦ [x,x2] = 0
        assert_eq!(l.left_mult(&unit(2, 0)).unwrap(), Matrix::from_i64(&[&[0, 1], &[0, 0]]));
    }

    #[test]
    fn is_lie_examples() {
        assert!(!example1().is_lie());
    }

    #[test]
    fn center_example1_is_zero() {
        assert!(example1().center().is_zero());
    }

    #[test]
    fn heisenberg_center() {
        let h = LeibnizAlgebra::<Q>::from_products(
            &["e1", "e2", "e3"],
            &[(0, 1, &[(2, 1)]), (1, 0, &[(2, -1)])],
        )
        .unwrap();
        assert_eq!(h.center(), Subspace::coordinate(3, &[2]));
    }

    #[test]
    fn direct_sum_with_zero() {
        let l = example1();
        let z = LeibnizAlgebra::<Q>::abelian(vec![]);
        assert_eq!(l.direct_sum(&z), l);
    }

    #[test]
    fn reduction_rejects_non_unit_denominators() {
        let l = LeibnizAlgebra::<Q>::new_unchecked(
            vec!["a".into()],
            vec![Q::new(1.into(), 2.into())],
        )
        .unwrap();
        assert!(l.reduce_into::<crate::exactlin::Fp<2>>().is_err());
    }
}
