//! Machine checks of the statements relating `N(L/I)`, `N(L)` and `R(L)`.

use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Subspace};
use crate::oracle::Budget;
use crate::radicals::complement::{check_complement, proper_supplement};
use crate::radicals::frattini::frattini_ideal_with;
use crate::radicals::{nilradical_with, radical_with};
use crate::report::VerificationReport;

/// Outcome of checking `N(L/I) = (I + N(B))/I` for a given `B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem2Report<F: Field> {
    pub b: Subspace<F>,
    pub kernel: Subspace<F>,
    pub b_is_subalgebra: bool,
    pub spans: bool,
    pub intersection_in_frattini: bool,
    /// `N(B)` in ambient coordinates.
    pub nilradical_of_b: Subspace<F>,
    /// `N(L/I)`, computed directly on the liesation.
    pub lhs: Subspace<F>,
    /// `(I + N(B)) / I`.
    pub rhs: Subspace<F>,
    /// `N(L) / I`.
    pub projected_nilradical: Subspace<F>,
    pub formula_equal: bool,
    /// `R_n|_I` nilpotent for every canonical basis vector `n` of `N(B)`.
    pub nilpotency_condition: bool,
    /// `N(L/I) = N(L)/I`.
    pub kernel_quotient_equal: bool,
    pub witnesses: Vec<String>,
}

impl<F: Field> Theorem2Report<F> {
    pub fn premises_ok(&self) -> bool {
        self.b_is_subalgebra && self.spans && self.intersection_in_frattini
    }

    pub fn to_report(&self) -> VerificationReport {
        let mut r = VerificationReport::new::<F>("theorem2");
        r.premise("b_is_subalgebra", self.b_is_subalgebra)
            .premise("l_equals_i_plus_b", self.spans)
            .premise("i_cap_b_in_frattini_of_b", self.intersection_in_frattini)
            .verdict("formula_equal", self.formula_equal);
        if F::characteristic() == 0 {
            r.verdict(
                "condition_iff_kernel_quotient_equal",
                self.nilpotency_condition == self.kernel_quotient_equal,
            );
        } else {
            r.notice(
                "nilpotency condition checked on basis vectors of N(B) only; \
                 basis-level sufficiency is not established outside characteristic zero",
            );
        }
        r.fact("nilpotency_condition", self.nilpotency_condition)
            .fact("kernel_quotient_equal", self.kernel_quotient_equal)
            .subspace("kernel", &self.kernel)
            .subspace("b", &self.b)
            .subspace("nilradical_of_b", &self.nilradical_of_b)
            .subspace("lhs", &self.lhs)
            .subspace("rhs", &self.rhs)
            .subspace("projected_nilradical", &self.projected_nilradical);
        for w in &self.witnesses {
            r.witness(w.clone());
        }
        r.finish()
    }
}

pub fn verify_theorem2<F: Field>(l: &LeibnizAlgebra<F>, b: &Subspace<F>) -> Result<Theorem2Report<F>> {
    verify_theorem2_with(l, b, &Budget::default())
}

pub fn verify_theorem2_with<F: Field>(
    l: &LeibnizAlgebra<F>,
    b: &Subspace<F>,
    budget: &Budget,
) -> Result<Theorem2Report<F>> {
    let kernel = l.leibniz_kernel();
    let check = check_complement(l, &kernel, b, budget)?;
    if !check.is_subalgebra {
        return Err(Error::PremiseViolation {
            premise: "B is a subalgebra".into(),
        });
    }
    if !check.spans {
        return Err(Error::PremiseViolation {
            premise: "L = I + B".into(),
        });
    }
    match check.in_frattini {
        Some(true) => {}
        Some(false) => {
            return Err(Error::PremiseViolation {
                premise: "I ∩ B ⊆ φ(B)".into(),
            })
        }
        None => {
            return Err(Error::Unsupported(
                "cannot compute φ(B) to check I ∩ B ⊆ φ(B)".into(),
            ))
        }
    }

    let lie = l.liesation();
    let lhs = nilradical_with(&lie.quotient, budget)?.subspace;

    let pres = l.restrict(b)?;
    let nb = pres.embed_subspace(&nilradical_with(&pres.algebra, budget)?.subspace)?;
    let rhs = lie.project_subspace(&kernel.sum(&nb)?)?;

    let mut witnesses = Vec::new();
    let mut nilpotency_condition = true;
    for v in nb.basis_vectors() {
        let m = restricted_right_mult(l, &kernel, &v)?;
        if !m.is_nilpotent() {
            nilpotency_condition = false;
            witnesses.push(format!(
                "R_n restricted to I is not nilpotent for n = {}",
                crate::exactlin::format_vector(&v)
            ));
        }
    }

    let projected_nilradical = lie.project_subspace(&nilradical_with(l, budget)?.subspace)?;
    let formula_equal = lhs == rhs;
    let kernel_quotient_equal = lhs == projected_nilradical;
    if !formula_equal {
        witnesses.push(format!("N(L/I) = {lhs} but (I + N(B))/I = {rhs}"));
    }
    if !kernel_quotient_equal {
        witnesses.push(format!("N(L/I) = {lhs} but N(L)/I = {projected_nilradical}"));
    }
    Ok(Theorem2Report {
        b: b.clone(),
        kernel,
        b_is_subalgebra: true,
        spans: true,
        intersection_in_frattini: true,
        nilradical_of_b: nb,
        lhs,
        rhs,
        projected_nilradical,
        formula_equal,
        nilpotency_condition,
        kernel_quotient_equal,
        witnesses,
    })
}

/// Matrix of `y ↦ [y, v]` on the invariant subspace `I`, in `I`'s basis.
fn restricted_right_mult<F: Field>(l: &LeibnizAlgebra<F>, kernel: &Subspace<F>, v: &[F]) -> Result<Matrix<F>> {
    let mut rows = Vec::with_capacity(kernel.dim());
    for y in kernel.basis_vectors() {
        let img = l.bracket(&y, v)?;
        rows.push(kernel.coordinates(&img)?.ok_or_else(|| {
            Error::InternalInconsistency("Leibniz kernel is not invariant under right multiplication".into())
        })?);
    }
    Matrix::from_rows(kernel.dim(), rows)
}

pub fn verify_lemma1<F: Field>(l: &LeibnizAlgebra<F>) -> Result<VerificationReport> {
    verify_lemma1_with(l, &Budget::default())
}

/// If `I ⊆ φ(L)`, checks `N(L/I) = N(L)/I`; otherwise reports the instance
/// as not applicable.
pub fn verify_lemma1_with<F: Field>(l: &LeibnizAlgebra<F>, budget: &Budget) -> Result<VerificationReport> {
    let kernel = l.leibniz_kernel();
    let mut r = VerificationReport::new::<F>("lemma1");
    r.subspace("kernel", &kernel);
    match frattini_ideal_with(l, None, budget) {
        Ok((phi, method)) => {
            r.subspace("frattini", &phi)
                .notice(format!("Frattini ideal via {method:?}"));
            let inside = kernel.leq(&phi)?;
            r.premise("kernel_in_frattini", inside);
            if !inside {
                return Ok(r.finish());
            }
        }
        Err(e @ (Error::Unsupported(_) | Error::UnsupportedField { .. } | Error::BudgetExceeded { .. })) => {
            match proper_supplement(l, &kernel, budget)? {
                Some(b) => {
                    r.premise("kernel_in_frattini", false)
                        .subspace("proper_supplement", &b)
                        .witness(format!(
                            "proper subalgebra {b} with I + B = L shows I is not inside φ(L)"
                        ));
                    return Ok(r.finish());
                }
                None => return Err(e),
            }
        }
        Err(e) => return Err(e),
    }
    let lie = l.liesation();
    let lhs = nilradical_with(&lie.quotient, budget)?.subspace;
    let rhs = lie.project_subspace(&nilradical_with(l, budget)?.subspace)?;
    r.verdict("nilradical_commutes_with_liesation", lhs == rhs)
        .subspace("lhs", &lhs)
        .subspace("rhs", &rhs);
    Ok(r.finish())
}

fn char0_only<F: Field>(operation: &'static str) -> Result<()> {
    if F::characteristic() == 0 {
        Ok(())
    } else {
        Err(Error::UnsupportedField {
            operation,
            field: F::descriptor(),
            alternatives: "Q",
        })
    }
}

/// `[L, R] ⊆ N` in both the two-sided and the one-sided reading.
pub fn verify_prop3<F: Field>(l: &LeibnizAlgebra<F>) -> Result<VerificationReport> {
    char0_only::<F>("verify_prop3")?;
    let rad = radical_with(l, &Budget::default())?.subspace;
    let nil = nilradical_with(l, &Budget::default())?.subspace;
    let full = l.full_space();
    let two_sided = l.two_sided_span(&full, &rad)?;
    let one_sided = l.bracket_span(&full, &rad)?;
    let mut r = VerificationReport::new::<F>("prop3");
    r.verdict("two_sided_l_r_in_nilradical", two_sided.leq(&nil)?)
        .verdict("one_sided_l_r_in_nilradical", one_sided.leq(&nil)?)
        .subspace("radical", &rad)
        .subspace("nilradical", &nil)
        .subspace("two_sided_l_r", &two_sided)
        .subspace("one_sided_l_r", &one_sided);
    Ok(r.finish())
}

/// `[R, R] ⊆ N`, `[R, R]` nilpotent, and `L` solvable iff `[L, L]` nilpotent.
pub fn verify_corollary<F: Field>(l: &LeibnizAlgebra<F>) -> Result<VerificationReport> {
    char0_only::<F>("verify_corollary")?;
    let rad = radical_with(l, &Budget::default())?.subspace;
    let nil = nilradical_with(l, &Budget::default())?.subspace;
    let full = l.full_space();
    let rr = l.bracket_span(&rad, &rad)?;
    let ll = l.bracket_span(&full, &full)?;
    let solvable = l.is_solvable();
    let ll_nilpotent = l.is_nilpotent_subalgebra(&ll)?;
    let mut r = VerificationReport::new::<F>("corollary");
    r.verdict("r_r_in_nilradical", rr.leq(&nil)?)
        .verdict("r_r_nilpotent", l.is_nilpotent_subalgebra(&rr)?)
        .verdict("solvable_iff_derived_nilpotent", solvable == ll_nilpotent)
        .fact("solvable", solvable)
        .fact("derived_algebra_nilpotent", ll_nilpotent)
        .subspace("r_r", &rr)
        .subspace("l_l", &ll)
        .subspace("nilradical", &nil);
    Ok(r.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::report::Status;
    use crate::{F3, Q};

    type S = Subspace<Q>;

    #[test]
    fn theorem2_example1() {
        let l = corpus::example1().algebra;
        let b = S::from_i64(2, &[&[1, -1]]);
        let t = verify_theorem2(&l, &b).unwrap();
        assert!(t.formula_equal);
        assert_eq!(t.lhs, S::full(1));
        assert!(!t.nilpotency_condition);
        assert!(!t.kernel_quotient_equal);
        assert!(t.to_report().passed());
    }

    #[test]
    fn theorem2_example2() {
        let l = corpus::example2(2, 1).unwrap().algebra;
        let b = S::coordinate(3, &[0, 2]);
        let t = verify_theorem2(&l, &b).unwrap();
        assert!(t.formula_equal);
        assert!(t.lhs.is_full());
        assert!(!t.nilpotency_condition);
        assert!(!t.kernel_quotient_equal);
    }

    #[test]
    fn theorem2_lie_algebra() {
        let l = corpus::heisenberg().algebra;
        let t = verify_theorem2(&l, &S::full(3)).unwrap();
        assert!(t.formula_equal && t.nilpotency_condition && t.kernel_quotient_equal);
        assert_eq!(t.lhs, t.projected_nilradical);
    }

    #[test]
    fn theorem2_rejects_bad_b() {
        let l = corpus::example1().algebra;
        let err = verify_theorem2(&l, &S::coordinate(2, &[0])).unwrap_err();
        assert!(matches!(err, Error::PremiseViolation { .. }));
        let err = verify_theorem2(&l, &S::coordinate(2, &[1])).unwrap_err();
        assert!(matches!(err, Error::PremiseViolation { .. }));
    }

    #[test]
    fn lemma1_instances() {
        let r = verify_lemma1(&corpus::nilcyclic2().algebra).unwrap();
        assert_eq!(r.status, Status::Pass);
        let r = verify_lemma1(&corpus::example1().algebra).unwrap();
        assert_eq!(r.status, Status::NotApplicable);
        let r = verify_lemma1(&corpus::abelian(2).algebra).unwrap();
        assert_eq!(r.status, Status::Pass);
        let l3 = corpus::example1().algebra.reduce_into::<F3>().unwrap();
        assert_eq!(verify_lemma1(&l3).unwrap().status, Status::NotApplicable);
    }

    #[test]
    fn prop3_and_corollary_examples() {
        for entry in [corpus::example2(2, 1).unwrap(), corpus::sl2(), corpus::with_simple_summand(&corpus::example1())] {
            assert!(verify_prop3(&entry.algebra).unwrap().passed(), "{}", entry.name);
            assert!(verify_corollary(&entry.algebra).unwrap().passed(), "{}", entry.name);
        }
    }

    #[test]
    fn prop3_is_char0_only() {
        let l = corpus::example1().algebra.reduce_into::<F3>().unwrap();
        assert!(matches!(verify_prop3(&l), Err(Error::UnsupportedField { .. })));
    }
}
