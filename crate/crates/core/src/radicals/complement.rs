//! Search for a subalgebra `B` with `L = I + B` and `I ∩ B ⊆ φ(B)`.
//!
//! Such a `B` always exists (take `B = L` when `I ⊆ φ(L)`). Over a small
//! prime field the search is exhaustive. Over Q it is a bounded heuristic,
//! so `NotFound` there means the candidate family ran out, not that no `B`
//! exists.

use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{add_vectors, scale_vector, Field, Subspace};
use crate::oracle::{self, Budget};
use crate::radicals::frattini::frattini_ideal_with;

/// The three conditions on a candidate `B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementCheck<F: Field> {
    pub is_subalgebra: bool,
    /// `I + B = L`
    pub spans: bool,
    pub intersection: Subspace<F>,
    /// `φ(B)` in ambient coordinates, when it was needed and computable.
    pub frattini_of_b: Option<Subspace<F>>,
    /// `I ∩ B ⊆ φ(B)`; `None` when `φ(B)` could not be computed.
    pub in_frattini: Option<bool>,
}

impl<F: Field> ComplementCheck<F> {
    pub fn holds(&self) -> Option<bool> {
        if !self.is_subalgebra || !self.spans {
            return Some(false);
        }
        self.in_frattini
    }
}

pub fn check_complement<F: Field>(
    l: &LeibnizAlgebra<F>,
    kernel: &Subspace<F>,
    b: &Subspace<F>,
    budget: &Budget,
) -> Result<ComplementCheck<F>> {
    let is_subalgebra = l.is_subalgebra(b)?;
    let spans = kernel.sum(b)?.is_full();
    let intersection = kernel.intersect(b)?;
    let (frattini_of_b, in_frattini) = if !is_subalgebra {
        (None, None)
    } else if intersection.is_zero() {
        (None, Some(true))
    } else {
        let pres = l.restrict(b)?;
        match frattini_ideal_with(&pres.algebra, None, budget) {
            Ok((phi, _)) => {
                let phi = pres.embed_subspace(&phi)?;
                let ok = intersection.leq(&phi)?;
                (Some(phi), Some(ok))
            }
            Err(Error::Unsupported(_) | Error::UnsupportedField { .. } | Error::BudgetExceeded { .. }) => {
                (None, None)
            }
            Err(e) => return Err(e),
        }
    };
    Ok(ComplementCheck {
        is_subalgebra,
        spans,
        intersection,
        frattini_of_b,
        in_frattini,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementSearch<F: Field> {
    pub found: Option<Subspace<F>>,
    pub exhaustive: bool,
    pub candidates_tried: usize,
    pub notices: Vec<String>,
}

pub fn find_complement_b<F: Field>(l: &LeibnizAlgebra<F>) -> Result<ComplementSearch<F>> {
    find_complement_b_with(l, &Budget::default())
}

pub fn find_complement_b_with<F: Field>(l: &LeibnizAlgebra<F>, budget: &Budget) -> Result<ComplementSearch<F>> {
    let kernel = l.leibniz_kernel();
    let exhaustive = F::elements().is_some() && budget.admit(l.dim(), F::characteristic()).is_ok();
    let candidates = if exhaustive {
        exhaustive_candidates(l, &kernel, budget)?
    } else {
        heuristic_candidates(l, &kernel)?
    };
    let mut notices = Vec::new();
    if !exhaustive {
        notices.push(
            "heuristic search: a negative result does not mean no complement exists".to_string(),
        );
    }
    let mut tried = 0;
    for b in candidates {
        tried += 1;
        let check = check_complement(l, &kernel, &b, budget)?;
        match check.holds() {
            Some(true) => {
                return Ok(ComplementSearch {
                    found: Some(b),
                    exhaustive,
                    candidates_tried: tried,
                    notices,
                })
            }
            Some(false) => {}
            None => notices.push(format!("skipped candidate {b}: Frattini ideal not computable")),
        }
    }
    Ok(ComplementSearch {
        found: None,
        exhaustive,
        candidates_tried: tried,
        notices,
    })
}

/// All subalgebras `B` with `I + B = L`, smallest dimension first.
fn exhaustive_candidates<F: Field>(
    l: &LeibnizAlgebra<F>,
    kernel: &Subspace<F>,
    budget: &Budget,
) -> Result<Vec<Subspace<F>>> {
    let mut out = Vec::new();
    for s in oracle::enumerate_subspaces::<F>(l.dim(), budget)? {
        if s.dim() + kernel.dim() >= l.dim() && kernel.sum(&s)?.is_full() && l.is_subalgebra(&s)? {
            out.push(s);
        }
    }
    out.sort_by_key(|s| s.dim());
    Ok(out)
}

/// Subalgebras generated by a deterministic family of complements of `I`:
/// the standard complement, then each complement vector shifted by `±g`
/// for each kernel basis vector `g`, then every complement vector shifted
/// by the same `±g`. Duplicates are dropped; order is preserved.
pub(crate) fn heuristic_candidates<F: Field>(
    l: &LeibnizAlgebra<F>,
    kernel: &Subspace<F>,
) -> Result<Vec<Subspace<F>>> {
    let n = l.dim();
    let base = kernel.complement_basis();
    let gens = kernel.basis_vectors();
    let signs = [F::one(), -F::one()];

    let mut families = vec![base.clone()];
    for t in 0..base.len() {
        for g in &gens {
            for s in &signs {
                let mut c = base.clone();
                c[t] = add_vectors(&c[t], &scale_vector(s, g));
                families.push(c);
            }
        }
    }
    if base.len() > 1 {
        for g in &gens {
            for s in &signs {
                families.push(base.iter().map(|v| add_vectors(v, &scale_vector(s, g))).collect());
            }
        }
    }

    let mut out: Vec<Subspace<F>> = Vec::new();
    for vectors in families {
        let b = l.generated_subalgebra(&Subspace::span(n, vectors)?)?;
        if !out.contains(&b) {
            out.push(b);
        }
    }
    Ok(out)
}

/// A proper subalgebra `B` with `I + B = L`, if the candidate family (or an
/// exhaustive scan over a small field) contains one. Its existence shows
/// `I ⊄ φ(L)`: `B` lies in some maximal subalgebra `M`, and `I ⊆ M` would
/// force `L = I + B ⊆ M`.
pub(crate) fn proper_supplement<F: Field>(
    l: &LeibnizAlgebra<F>,
    kernel: &Subspace<F>,
    budget: &Budget,
) -> Result<Option<Subspace<F>>> {
    let candidates = if F::elements().is_some() && budget.admit(l.dim(), F::characteristic()).is_ok() {
        exhaustive_candidates(l, kernel, budget)?
    } else {
        heuristic_candidates(l, kernel)?
    };
    Ok(candidates
        .into_iter()
        .find(|b| !b.is_full() && kernel.sum(b).map(|s| s.is_full()).unwrap_or(false)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::{F3, Q};

    type S = Subspace<Q>;

    #[test]
    fn example1_complement() {
        let l = corpus::example1().algebra;
        let found = find_complement_b(&l).unwrap().found.unwrap();
        assert_eq!(found, S::from_i64(2, &[&[1, -1]]));
    }

    #[test]
    fn example2_complement() {
        let l = corpus::example2(2, 1).unwrap().algebra;
        let found = find_complement_b(&l).unwrap().found.unwrap();
        assert_eq!(found, S::coordinate(3, &[0, 2]));
    }

    #[test]
    fn lie_algebra_complement_is_everything() {
        let l = corpus::sl2().algebra;
        assert!(find_complement_b(&l).unwrap().found.unwrap().is_full());
    }

    #[test]
    fn exhaustive_search_over_f3() {
        let l = corpus::example1().algebra.reduce_into::<F3>().unwrap();
        let search = find_complement_b(&l).unwrap();
        assert!(search.exhaustive);
        let b = search.found.unwrap();
        assert_eq!(b.dim(), 1);
        assert!(check_complement(&l, &l.leibniz_kernel(), &b, &Budget::default())
            .unwrap()
            .holds()
            .unwrap());
    }

    #[test]
    fn nilcyclic_needs_the_whole_algebra() {
        let l = corpus::nilcyclic2().algebra;
        let found = find_complement_b(&l).unwrap().found.unwrap();
        assert!(found.is_full());
    }
}
