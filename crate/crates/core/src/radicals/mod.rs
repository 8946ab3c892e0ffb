//! Solvable radical, nilradical and Frattini ideal, plus the checks that
//! relate the nilradical of the liesation to the nilradical of the algebra.
//!
//! In characteristic zero the radical is pulled back from the liesation
//! `Λ = L / I`: since `I` is an abelian ideal, `R(L) / I = R(Λ)`, and the
//! radical of the Lie algebra `Λ` is the Killing-orthogonal complement of
//! `[Λ, Λ]`.
//!
//! The nilradical is then `{x ∈ R(L) : R_x nilpotent}`. Writing the right
//! multiplications of `R(L)` in triangular form over the algebraic closure,
//! each `R_x` has eigenvalues `λ(x)` for linear weights `λ`, so this set is
//! the common kernel of the weights. It is found with exact linear algebra:
//! start from the trace-form candidate
//! `{x ∈ R : tr R_x = 0, tr(R_x R_y) = 0 ∀ y ∈ R}`, which contains every
//! element with vanishing weights, and while some canonical basis vector `v`
//! of the candidate has a non-nilpotent `R_v`, cut by
//! `tr(R_x R_v^k) = 0` for `k = 1..=n`. The cut keeps every weight-zero
//! element and removes `v` (it forces `Σ m_λ λ(v)^{k+1} = 0` for all `k`),
//! so the loop ends, and it ends exactly when every basis vector, hence by
//! linearity every element, has vanishing weights.
//!
//! Every result is certified before it is returned; a failing certificate
//! is reported as [`Error::InternalInconsistency`], never as a value.
//!
//! Over finite fields both radicals come from the exhaustive oracle.

mod complement;
mod frattini;
mod verify;

pub use complement::{check_complement, find_complement_b, find_complement_b_with, ComplementCheck, ComplementSearch};
pub use frattini::{frattini_ideal, frattini_ideal_with, FrattiniMethod};
pub use verify::{
    verify_corollary, verify_lemma1, verify_lemma1_with, verify_prop3, verify_theorem2,
    verify_theorem2_with, Theorem2Report,
};

use serde::{Deserialize, Serialize};

use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Subspace};
use crate::oracle::{self, Budget};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RadicalMethod {
    CartanPullback,
    OracleExhaustive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NilradicalMethod {
    TraceFormChar0,
    OracleExhaustive,
}

/// A machine-checked property of a computed result.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

impl Certificate {
    fn new(name: &str, holds: bool, detail: impl Into<String>) -> Self {
        Certificate {
            name: name.to_string(),
            holds,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalResult<F: Field> {
    pub subspace: Subspace<F>,
    pub method: RadicalMethod,
    pub certificates: Vec<Certificate>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NilradicalResult<F: Field> {
    pub subspace: Subspace<F>,
    pub method: NilradicalMethod,
    pub certificates: Vec<Certificate>,
}

fn all_hold(certs: &[Certificate], what: &str) -> Result<()> {
    let failed: Vec<&str> = certs.iter().filter(|c| !c.holds).map(|c| c.name.as_str()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Error::InternalInconsistency(format!(
            "{what} certificate(s) failed: {}",
            failed.join(", ")
        )))
    }
}

fn dims(series: &[Subspace<impl Field>]) -> String {
    let d: Vec<String> = series.iter().map(|s| s.dim().to_string()).collect();
    d.join(" > ")
}

fn identity_certificate<F: Field>(l: &LeibnizAlgebra<F>) -> Certificate {
    let check = l.check_leibniz();
    Certificate::new(
        "leibniz-identity",
        check.passed(),
        format!("{} failing basis triple(s)", check.failures.len()),
    )
}

/// Killing-type form `κ(x, y) = tr(R_x R_y)` on the basis.
fn trace_form<F: Field>(l: &LeibnizAlgebra<F>) -> Matrix<F> {
    let rm = l.right_mult_basis();
    let n = l.dim();
    let mut k = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            k[(i, j)] = rm[i].trace_of_product(&rm[j]);
        }
    }
    k
}

/// Checks a claimed radical and attaches certificates.
pub fn certify_radical<F: Field>(
    l: &LeibnizAlgebra<F>,
    subspace: Subspace<F>,
    method: RadicalMethod,
) -> Result<RadicalResult<F>> {
    let mut certs = vec![identity_certificate(l)];
    certs.push(Certificate::new("is-ideal", l.is_ideal(&subspace)?, ""));
    let series = l.derived_series_of(&subspace)?;
    certs.push(Certificate::new(
        "solvable",
        series.last().expect("nonempty").is_zero(),
        format!("derived series dims {}", dims(&series)),
    ));
    certs.push(Certificate::new(
        "contains-kernel",
        l.leibniz_kernel().leq(&subspace)?,
        "",
    ));
    if F::characteristic() == 0 && l.is_ideal(&subspace)? {
        let q = l.quotient(&subspace)?;
        let k = trace_form(&q.quotient);
        certs.push(Certificate::new(
            "quotient-semisimple",
            k.rank() == q.quotient.dim(),
            format!("trace form of L/R has rank {} of {}", k.rank(), q.quotient.dim()),
        ));
    }
    all_hold(&certs, "radical")?;
    Ok(RadicalResult {
        subspace,
        method,
        certificates: certs,
    })
}

/// Checks a claimed nilradical and attaches certificates.
pub fn certify_nilradical<F: Field>(
    l: &LeibnizAlgebra<F>,
    subspace: Subspace<F>,
    method: NilradicalMethod,
) -> Result<NilradicalResult<F>> {
    let mut certs = vec![identity_certificate(l)];
    certs.push(Certificate::new("is-ideal", l.is_ideal(&subspace)?, ""));
    let series = l.lower_central_series_of(&subspace)?;
    certs.push(Certificate::new(
        "nilpotent",
        series.last().expect("nonempty").is_zero(),
        format!("lower central series dims {}", dims(&series)),
    ));
    for (i, v) in subspace.basis_vectors().iter().enumerate() {
        certs.push(Certificate::new(
            &format!("right-mult-nilpotent-{i}"),
            l.right_mult(v)?.is_nilpotent(),
            "",
        ));
    }
    certs.push(Certificate::new(
        "contains-kernel",
        l.leibniz_kernel().leq(&subspace)?,
        "",
    ));
    all_hold(&certs, "nilradical")?;
    Ok(NilradicalResult {
        subspace,
        method,
        certificates: certs,
    })
}

fn inconsistent(e: Error) -> Error {
    match e {
        Error::NotAnIdeal | Error::NotASubalgebra => {
            Error::InternalInconsistency(format!("structural step failed: {e}"))
        }
        other => other,
    }
}

pub fn radical<F: Field>(l: &LeibnizAlgebra<F>) -> Result<RadicalResult<F>> {
    radical_with(l, &Budget::default())
}

pub fn radical_with<F: Field>(l: &LeibnizAlgebra<F>, budget: &Budget) -> Result<RadicalResult<F>> {
    if F::characteristic() == 0 {
        let r = cartan_radical(l).map_err(inconsistent)?;
        certify_radical(l, r, RadicalMethod::CartanPullback)
    } else {
        let r = oracle::radical_oracle(l, budget)?;
        certify_radical(l, r, RadicalMethod::OracleExhaustive)
    }
}

fn cartan_radical<F: Field>(l: &LeibnizAlgebra<F>) -> Result<Subspace<F>> {
    let lie = l.try_liesation()?;
    let lam = &lie.quotient;
    let full = lam.full_space();
    let derived = lam.bracket_span(&full, &full)?;
    let rm = lam.right_mult_basis();
    let mut functionals = Vec::with_capacity(derived.dim());
    for d in derived.basis_vectors() {
        let rd = lam.right_mult(&d)?;
        functionals.push(rm.iter().map(|r| r.trace_of_product(&rd)).collect());
    }
    let rad = full.cut_by_functionals(&functionals)?;
    lie.preimage(&rad)
}

pub fn nilradical<F: Field>(l: &LeibnizAlgebra<F>) -> Result<NilradicalResult<F>> {
    nilradical_with(l, &Budget::default())
}

pub fn nilradical_with<F: Field>(l: &LeibnizAlgebra<F>, budget: &Budget) -> Result<NilradicalResult<F>> {
    if F::characteristic() == 0 {
        let n = trace_form_nilradical(l).map_err(inconsistent)?;
        certify_nilradical(l, n, NilradicalMethod::TraceFormChar0)
    } else {
        let n = oracle::nilradical_oracle(l, budget)?;
        certify_nilradical(l, n, NilradicalMethod::OracleExhaustive)
    }
}

fn trace_form_nilradical<F: Field>(l: &LeibnizAlgebra<F>) -> Result<Subspace<F>> {
    let n = l.dim();
    let radical = cartan_radical(l)?;
    let rm = l.right_mult_basis();
    // x ↦ tr(R_x M) as a functional on coordinates
    let functional = |m: &Matrix<F>| -> Vec<F> { rm.iter().map(|r| r.trace_of_product(m)).collect() };

    let mut constraints = vec![functional(&Matrix::identity(n))];
    for y in radical.basis_vectors() {
        constraints.push(functional(&l.right_mult(&y)?));
    }
    let mut candidate = radical.cut_by_functionals(&constraints)?;

    loop {
        let mut offender = None;
        for v in candidate.basis_vectors() {
            let rv = l.right_mult(&v)?;
            if !rv.trace_powers_vanish() {
                offender = Some((v, rv));
                break;
            }
        }
        let Some((v, rv)) = offender else {
            return Ok(candidate);
        };
        let mut power = rv.clone();
        let mut cuts = Vec::with_capacity(n);
        for _ in 0..n {
            cuts.push(functional(&power));
            power = power.mul(&rv)?;
        }
        let next = candidate.cut_by_functionals(&cuts)?;
        if next.contains(&v)? {
            return Err(Error::InternalInconsistency(
                "refinement step did not remove a non-nilpotent element".into(),
            ));
        }
        candidate = next;
    }
}
