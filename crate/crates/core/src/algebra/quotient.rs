use super::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{combine, sub_vectors, Field, Matrix, Subspace};

/// `L / J` together with the maps relating it to `L`.
///
/// Coset representatives are the standard basis vectors at the non-pivot
/// columns of `J`'s canonical basis, ascending, so the presentation is
/// deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientPresentation<F: Field> {
    pub parent: LeibnizAlgebra<F>,
    pub ideal: Subspace<F>,
    pub quotient: LeibnizAlgebra<F>,
    /// `n x m`; a row vector `v` of `L` maps to `v * projection`.
    pub projection: Matrix<F>,
    /// Coset representatives, one per quotient basis vector.
    pub section: Vec<Vec<F>>,
}

impl<F: Field> QuotientPresentation<F> {
    pub fn project(&self, v: &[F]) -> Result<Vec<F>> {
        self.projection.apply(v)
    }

    /// Image of a subspace of `L` in `L / J`.
    pub fn project_subspace(&self, s: &Subspace<F>) -> Result<Subspace<F>> {
        self.parent.check_subspace(s)?;
        let vectors = s
            .basis_vectors()
            .iter()
            .map(|v| self.project(v))
            .collect::<Result<Vec<_>>>()?;
        Subspace::span(self.quotient.dim(), vectors)
    }

    /// Lift of quotient coordinates through the section.
    pub fn lift(&self, coords: &[F]) -> Result<Vec<F>> {
        if coords.len() != self.section.len() {
            return Err(Error::DimensionMismatch {
                expected: self.section.len(),
                found: coords.len(),
            });
        }
        let m = Matrix::from_rows(self.parent.dim(), self.section.clone())?;
        Ok(combine(&m, coords))
    }

    /// Full preimage `J + lift(S)` of a subspace of the quotient.
    pub fn preimage(&self, s: &Subspace<F>) -> Result<Subspace<F>> {
        Error::ambient(self.quotient.dim(), s.ambient_dim())?;
        let mut vectors = self.ideal.basis_vectors();
        for v in s.basis_vectors() {
            vectors.push(self.lift(&v)?);
        }
        Subspace::span(self.parent.dim(), vectors)
    }

    /// Quotient table recomputed from arbitrary representatives of the
    /// section cosets. Agrees with `quotient` whenever each `reps[a]` is
    /// congruent to `section[a]` modulo the ideal.
    pub fn table_from_representatives(&self, reps: &[Vec<F>]) -> Result<LeibnizAlgebra<F>> {
        if reps.len() != self.section.len() {
            return Err(Error::DimensionMismatch {
                expected: self.section.len(),
                found: reps.len(),
            });
        }
        for (r, s) in reps.iter().zip(&self.section) {
            if !self.ideal.contains(&sub_vectors(r, s))? {
                return Err(Error::InvalidParameter(
                    "representative is not in the expected coset".into(),
                ));
            }
        }
        quotient_table(&self.parent, self.quotient.labels().to_vec(), reps, &self.projection)
    }
}

fn quotient_table<F: Field>(
    parent: &LeibnizAlgebra<F>,
    labels: Vec<String>,
    reps: &[Vec<F>],
    projection: &Matrix<F>,
) -> Result<LeibnizAlgebra<F>> {
    let m = reps.len();
    let mut table = Vec::with_capacity(m * m * m);
    for a in reps {
        for b in reps {
            table.extend(projection.apply(&parent.bracket(a, b)?)?);
        }
    }
    LeibnizAlgebra::new_unchecked(labels, table)
}

/// A subalgebra `A ⊆ L` as an algebra in its own right, in the coordinates
/// of `A`'s canonical basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubalgebraPresentation<F: Field> {
    pub subalgebra: Subspace<F>,
    pub algebra: LeibnizAlgebra<F>,
    /// `d x n`; row `i` is the `i`-th basis vector of `A` inside `L`.
    pub embedding: Matrix<F>,
}

impl<F: Field> SubalgebraPresentation<F> {
    pub fn embed(&self, coords: &[F]) -> Result<Vec<F>> {
        self.embedding.apply(coords)
    }

    pub fn embed_subspace(&self, s: &Subspace<F>) -> Result<Subspace<F>> {
        Error::ambient(self.algebra.dim(), s.ambient_dim())?;
        let vectors = s
            .basis_vectors()
            .iter()
            .map(|v| self.embed(v))
            .collect::<Result<Vec<_>>>()?;
        Subspace::span(self.embedding.cols(), vectors)
    }

    /// Coordinates of an ambient vector in `A`'s basis.
    pub fn coordinates(&self, v: &[F]) -> Result<Option<Vec<F>>> {
        self.subalgebra.coordinates(v)
    }

    /// Subspace of `A`'s coordinates corresponding to an ambient subspace
    /// contained in `A`.
    pub fn pull_subspace(&self, s: &Subspace<F>) -> Result<Subspace<F>> {
        let mut vectors = Vec::with_capacity(s.dim());
        for v in s.basis_vectors() {
            vectors.push(self.coordinates(&v)?.ok_or_else(|| {
                Error::InvalidParameter("subspace is not contained in the subalgebra".into())
            })?);
        }
        Subspace::span(self.algebra.dim(), vectors)
    }
}

impl<F: Field> LeibnizAlgebra<F> {
    pub fn quotient(&self, ideal: &Subspace<F>) -> Result<QuotientPresentation<F>> {
        self.check_subspace(ideal)?;
        if !self.is_ideal(ideal)? {
            return Err(Error::NotAnIdeal);
        }
        let n = self.dim();
        let cols = ideal.non_pivots();
        let section = ideal.complement_basis();
        let mut proj_rows = Vec::with_capacity(n);
        for i in 0..n {
            let r = ideal.reduce(&crate::exactlin::unit(n, i));
            proj_rows.push(cols.iter().map(|&c| r[c].clone()).collect());
        }
        let projection = Matrix::from_rows(cols.len(), proj_rows)?;
        let labels = cols.iter().map(|&c| self.labels()[c].clone()).collect();
        let quotient = quotient_table(self, labels, &section, &projection)?;
        Ok(QuotientPresentation {
            parent: self.clone(),
            ideal: ideal.clone(),
            quotient,
            projection,
            section,
        })
    }

    /// `L / I` for the Leibniz kernel `I`.
    pub fn liesation(&self) -> QuotientPresentation<F> {
        self.quotient(&self.leibniz_kernel())
            .expect("the Leibniz kernel of a Leibniz algebra is an ideal")
    }

    /// Like [`liesation`](Self::liesation) but reports a non-ideal kernel
    /// (possible only when the table violates the identity) as an error.
    pub fn try_liesation(&self) -> Result<QuotientPresentation<F>> {
        self.quotient(&self.leibniz_kernel())
    }

    pub fn restrict(&self, a: &Subspace<F>) -> Result<SubalgebraPresentation<F>> {
        self.check_subspace(a)?;
        if !self.is_subalgebra(a)? {
            return Err(Error::NotASubalgebra);
        }
        let basis = a.basis_vectors();
        let d = basis.len();
        let mut table = Vec::with_capacity(d * d * d);
        for x in &basis {
            for y in &basis {
                let xy = self.bracket(x, y)?;
                table.extend(a.coordinates(&xy)?.expect("closed under bracket"));
            }
        }
        let labels = basis
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let nonzero: Vec<usize> = (0..v.len()).filter(|&k| !v[k].is_zero()).collect();
                match nonzero.as_slice() {
                    [k] if v[*k].is_one() => self.labels()[*k].clone(),
                    _ => format!("b{}", i + 1),
                }
            })
            .collect();
        Ok(SubalgebraPresentation {
            subalgebra: a.clone(),
            algebra: LeibnizAlgebra::new_unchecked(labels, table)?,
            embedding: a.basis().clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{add_vectors, scale_vector, unit};
    use num_rational::BigRational;
    use num_traits::Zero;

    type Q = BigRational;
    type S = Subspace<Q>;

    fn example1() -> LeibnizAlgebra<Q> {
        LeibnizAlgebra::from_products(&["x", "x2"], &[(0, 0, &[(1, 1)]), (1, 0, &[(1, 1)])]).unwrap()
    }

    fn sl2() -> LeibnizAlgebra<Q> {
        LeibnizAlgebra::from_products(
            &["e", "f", "h"],
            &[
                (0, 1, &[(2, 1)]),
                (1, 0, &[(2, -1)]),
                (2, 0, &[(0, 2)]),
                (0, 2, &[(0, -2)]),
                (2, 1, &[(1, -2)]),
                (1, 2, &[(1, 2)]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn example1_liesation_is_one_dim_abelian() {
        let q = example1().liesation();
        assert_eq!(q.quotient.dim(), 1);
        assert!(q.quotient.basis_bracket(0, 0)[0].is_zero());
        assert!(q.quotient.is_lie());
        assert_eq!(q.section, vec![unit::<Q>(2, 0)]);
    }

    #[test]
    fn trivial_quotients() {
        let l = example1();
        let q0 = l.quotient(&S::zero(2)).unwrap();
        assert_eq!(q0.quotient, l);
        let qfull = l.quotient(&S::full(2)).unwrap();
        assert_eq!(qfull.quotient.dim(), 0);
    }

    #[test]
    fn quotient_by_non_ideal_fails() {
        let l = example1();
        assert!(matches!(l.quotient(&S::coordinate(2, &[0])), Err(Error::NotAnIdeal)));
    }

    #[test]
    fn projection_composed_with_section_is_identity() {
        let l = sl2().direct_sum(&example1());
        let q = l.liesation();
        for (a, s) in q.section.iter().enumerate() {
            assert_eq!(q.project(s).unwrap(), unit(q.quotient.dim(), a));
        }
        for v in q.ideal.basis_vectors() {
            assert!(q.project(&v).unwrap().iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn shifted_representatives_give_same_table() {
        let l = sl2().direct_sum(&example1());
        let q = l.liesation();
        let shift = q.ideal.basis_vectors()[0].clone();
        let reps: Vec<Vec<Q>> = q
            .section
            .iter()
            .enumerate()
            .map(|(i, s)| add_vectors(s, &scale_vector(&Q::from_i64(i as i64 - 2), &shift)))
            .collect();
        assert_eq!(q.table_from_representatives(&reps).unwrap(), q.quotient);
    }

    #[test]
    fn preimage_of_projection_contains_ideal() {
        let l = example1();
        let q = l.liesation();
        let pre = q.preimage(&S::full(1)).unwrap();
        assert!(pre.is_full());
        assert_eq!(q.preimage(&S::zero(1)).unwrap(), q.ideal);
    }

    #[test]
    fn restrict_examples() {
        let l = example1();
        let b = l.restrict(&S::from_i64(2, &[&[1, -1]])).unwrap();
        assert_eq!(b.algebra.dim(), 1);
        assert!(b.algebra.basis_bracket(0, 0)[0].is_zero());

        let whole = l.restrict(&S::full(2)).unwrap();
        assert_eq!(whole.algebra, l);

        let s = sl2();
        let eh = s.restrict(&S::coordinate(3, &[0, 2])).unwrap();
        assert!(eh.algebra.is_solvable());
        assert!(!eh.algebra.is_nilpotent());
        assert!(eh.algebra.check_leibniz().passed());

        assert!(matches!(
            l.restrict(&S::coordinate(2, &[0])),
            Err(Error::NotASubalgebra)
        ));
    }

    #[test]
    fn restricted_subspaces_round_trip() {
        let s = sl2();
        let eh = s.restrict(&S::coordinate(3, &[0, 2])).unwrap();
        let e_in_b = S::coordinate(2, &[0]);
        let e_in_l = eh.embed_subspace(&e_in_b).unwrap();
        assert_eq!(e_in_l, S::coordinate(3, &[0]));
        assert_eq!(eh.pull_subspace(&e_in_l).unwrap(), e_in_b);
    }
}
