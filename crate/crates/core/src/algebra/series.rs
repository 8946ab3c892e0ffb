use super::LeibnizAlgebra;
use crate::error::Result;
use crate::exactlin::{Field, Subspace};

/// Runs `next` from `start`, stopping after a term that is zero or has the
/// same dimension as its predecessor.
fn run_series<F: Field>(
    start: Subspace<F>,
    mut next: impl FnMut(&Subspace<F>) -> Result<Subspace<F>>,
) -> Result<Vec<Subspace<F>>> {
    let mut out = vec![start];
    loop {
        let last = out.last().expect("nonempty");
        if last.is_zero() {
            return Ok(out);
        }
        let t = next(last)?;
        let stable = t.dim() == last.dim();
        out.push(t);
        if stable {
            return Ok(out);
        }
    }
}

impl<F: Field> LeibnizAlgebra<F> {
    /// `L^1 = L`, `L^{k+1} = [L^k, L]`.
    pub fn lower_central_series(&self) -> Vec<Subspace<F>> {
        self.lower_central_series_of(&self.full_space()).expect("ambient subspace")
    }

    /// `L^(1) = L`, `L^(k+1) = [L^(k), L^(k)]`.
    pub fn derived_series(&self) -> Vec<Subspace<F>> {
        self.derived_series_of(&self.full_space()).expect("ambient subspace")
    }

    /// Lower central series of a subalgebra `A`, computed in ambient
    /// coordinates: `A^{k+1} = [A^k, A]`.
    pub fn lower_central_series_of(&self, a: &Subspace<F>) -> Result<Vec<Subspace<F>>> {
        self.check_subspace(a)?;
        run_series(a.clone(), |t| self.bracket_span(t, a))
    }

    pub fn derived_series_of(&self, a: &Subspace<F>) -> Result<Vec<Subspace<F>>> {
        self.check_subspace(a)?;
        run_series(a.clone(), |t| self.bracket_span(t, t))
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().expect("nonempty").is_zero()
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().expect("nonempty").is_zero()
    }

    /// Nilpotency of the subalgebra `A` as an algebra in its own right.
    pub fn is_nilpotent_subalgebra(&self, a: &Subspace<F>) -> Result<bool> {
        Ok(self.lower_central_series_of(a)?.last().expect("nonempty").is_zero())
    }

    pub fn is_solvable_subalgebra(&self, a: &Subspace<F>) -> Result<bool> {
        Ok(self.derived_series_of(a)?.last().expect("nonempty").is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;
    type S = Subspace<Q>;

    fn example1() -> LeibnizAlgebra<Q> {
        LeibnizAlgebra::from_products(&["x", "x2"], &[(0, 0, &[(1, 1)]), (1, 0, &[(1, 1)])]).unwrap()
    }

    #[test]
    fn example1_series() {
        let l = example1();
        let e2 = S::coordinate(2, &[1]);
        assert_eq!(l.lower_central_series(), vec![S::full(2), e2.clone(), e2.clone()]);
        assert_eq!(l.derived_series(), vec![S::full(2), e2, S::zero(2)]);
        assert!(!l.is_nilpotent());
        assert!(l.is_solvable());
    }

    #[test]
    fn abelian_series() {
        let a = LeibnizAlgebra::<Q>::abelian(vec!["a".into(), "b".into()]);
        assert_eq!(a.lower_central_series(), vec![S::full(2), S::zero(2)]);
        assert_eq!(a.derived_series(), vec![S::full(2), S::zero(2)]);
    }

    #[test]
    fn heisenberg_nilpotent() {
        let h = LeibnizAlgebra::<Q>::from_products(
            &["e1", "e2", "e3"],
            &[(0, 1, &[(2, 1)]), (1, 0, &[(2, -1)])],
        )
        .unwrap();
        assert!(h.is_nilpotent());
        assert_eq!(h.lower_central_series().len(), 3);
    }

    #[test]
    fn zero_dimensional_algebra() {
        let z = LeibnizAlgebra::<Q>::abelian(vec![]);
        assert!(z.is_nilpotent());
        assert!(z.is_solvable());
        assert_eq!(z.lower_central_series().len(), 1);
    }

    #[test]
    fn subalgebra_nilpotency_matches_restriction() {
        let l = example1();
        let b = S::from_i64(2, &[&[1, -1]]);
        assert!(l.is_nilpotent_subalgebra(&b).unwrap());
        assert!(l.restrict(&b).unwrap().algebra.is_nilpotent());
        let full = S::full(2);
        assert!(!l.is_nilpotent_subalgebra(&full).unwrap());
    }
}
