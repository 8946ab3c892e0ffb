//! Exhaustive lattice scans over small prime fields.
//!
//! Every subspace of `F_p^n` is visited exactly once through its RREF
//! canonical form, enumerated by pivot-column pattern. From the scan we read
//! off the ideals, the nilpotent and solvable ideals, and the maximal
//! subalgebras, which gives brute-force nilradicals, radicals and Frattini
//! ideals with no structure theory involved.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Subspace};

pub const DEFAULT_MAX_SUBSPACES: u64 = 1_000_000;

/// Hard cap on the number of subspaces a scan may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_subspaces: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_subspaces: DEFAULT_MAX_SUBSPACES,
        }
    }
}

impl Budget {
    /// Fails with `BudgetExceeded` when `F_q^n` has more subspaces than the
    /// cap allows.
    pub fn admit(&self, n: usize, q: u64) -> Result<()> {
        let total = subspace_count(n, q);
        if total > BigUint::from(self.max_subspaces) {
            return Err(Error::BudgetExceeded {
                required: total.to_u128().unwrap_or(u128::MAX),
                cap: self.max_subspaces,
            });
        }
        Ok(())
    }
}

/// Number of `k`-dimensional subspaces of `F_q^n` from the product formula
/// `∏_{i<k} (q^n - q^i) / (q^k - q^i)`.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= q.pow(n as u32) - q.pow(i as u32);
        den *= q.pow(k as u32) - q.pow(i as u32);
    }
    num / den
}

/// Total number of subspaces of `F_q^n`.
pub fn subspace_count(n: usize, q: u64) -> BigUint {
    (0..=n).map(|k| gaussian_binomial(n, k, q)).sum()
}

fn pivot_patterns(n: usize) -> Vec<Vec<usize>> {
    fn extend(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for c in start..n {
            cur.push(c);
            extend(n, k, c + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for k in 0..=n {
        extend(n, k, 0, &mut Vec::new(), &mut out);
    }
    out
}

/// All subspaces with a fixed pivot pattern, in odometer order of the free
/// entries.
fn subspaces_with_pattern<F: Field>(n: usize, pivots: &[usize], elements: &[F]) -> Vec<Subspace<F>> {
    let free: Vec<(usize, usize)> = pivots
        .iter()
        .enumerate()
        .flat_map(|(r, &p)| {
            (p + 1..n)
                .filter(|c| !pivots.contains(c))
                .map(move |c| (r, c))
        })
        .collect();
    let q = elements.len();
    let mut digits = vec![0usize; free.len()];
    let mut out = Vec::new();
    loop {
        let mut m = Matrix::zeros(pivots.len(), n);
        for (r, &p) in pivots.iter().enumerate() {
            m[(r, p)] = F::one();
        }
        for (&(r, c), &d) in free.iter().zip(&digits) {
            m[(r, c)] = elements[d].clone();
        }
        out.push(Subspace::row_space(&m));
        let mut i = 0;
        loop {
            if i == digits.len() {
                return out;
            }
            digits[i] += 1;
            if digits[i] < q {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

fn elements_of<F: Field>(operation: &'static str) -> Result<Vec<F>> {
    F::elements().ok_or(Error::UnsupportedField {
        operation,
        field: F::descriptor(),
        alternatives: "finite prime fields F2, F3, F5, F7, F11, F13",
    })
}

/// Every subspace of `F^n` exactly once, in pivot-pattern order.
pub fn enumerate_subspaces<F: Field>(n: usize, budget: &Budget) -> Result<impl Iterator<Item = Subspace<F>>> {
    let elements = elements_of::<F>("subspace enumeration")?;
    budget.admit(n, elements.len() as u64)?;
    Ok(pivot_patterns(n)
        .into_iter()
        .flat_map(move |p| subspaces_with_pattern(n, &p, &elements)))
}

/// Result of an exhaustive scan of the subspace lattice of an algebra.
#[derive(Debug, Clone)]
pub struct LatticeScan<F: Field> {
    pub algebra: LeibnizAlgebra<F>,
    /// Number of subspaces visited.
    pub subspaces: u64,
    pub subalgebras: Vec<Subspace<F>>,
    pub ideals: Vec<Subspace<F>>,
    pub nilpotent_ideals: Vec<Subspace<F>>,
    pub solvable_ideals: Vec<Subspace<F>>,
    pub maximal_subalgebras: Vec<Subspace<F>>,
}

struct Classified<F> {
    subspace: Subspace<F>,
    ideal: bool,
    nilpotent: bool,
    solvable: bool,
}

pub fn scan<F: Field>(algebra: &LeibnizAlgebra<F>, budget: &Budget) -> Result<LatticeScan<F>> {
    let elements = elements_of::<F>("lattice scan")?;
    let n = algebra.dim();
    budget.admit(n, elements.len() as u64)?;
    let patterns = pivot_patterns(n);
    let per_pattern: Vec<(u64, Vec<Classified<F>>)> = patterns
        .par_iter()
        .map(|p| {
            let subs = subspaces_with_pattern(n, p, &elements);
            let count = subs.len() as u64;
            let kept = subs
                .into_iter()
                .filter(|s| algebra.is_subalgebra(s).expect("ambient"))
                .map(|s| {
                    let ideal = algebra.is_ideal(&s).expect("ambient");
                    let (nilpotent, solvable) = if ideal {
                        (
                            algebra.is_nilpotent_subalgebra(&s).expect("ambient"),
                            algebra.is_solvable_subalgebra(&s).expect("ambient"),
                        )
                    } else {
                        (false, false)
                    };
                    Classified {
                        subspace: s,
                        ideal,
                        nilpotent,
                        solvable,
                    }
                })
                .collect();
            (count, kept)
        })
        .collect();

    let mut out = LatticeScan {
        algebra: algebra.clone(),
        subspaces: 0,
        subalgebras: Vec::new(),
        ideals: Vec::new(),
        nilpotent_ideals: Vec::new(),
        solvable_ideals: Vec::new(),
        maximal_subalgebras: Vec::new(),
    };
    for (count, kept) in per_pattern {
        out.subspaces += count;
        for c in kept {
            if c.ideal {
                out.ideals.push(c.subspace.clone());
                if c.nilpotent {
                    out.nilpotent_ideals.push(c.subspace.clone());
                }
                if c.solvable {
                    out.solvable_ideals.push(c.subspace.clone());
                }
            }
            out.subalgebras.push(c.subspace);
        }
    }
    out.maximal_subalgebras = maximal_proper(&out.subalgebras, n);
    Ok(out)
}

/// Inclusion-maximal elements among the proper members of `family`.
fn maximal_proper<F: Field>(family: &[Subspace<F>], n: usize) -> Vec<Subspace<F>> {
    let proper: Vec<&Subspace<F>> = family.iter().filter(|s| s.dim() < n).collect();
    proper
        .iter()
        .filter(|m| {
            !proper
                .iter()
                .any(|o| o.dim() > m.dim() && m.leq(o).expect("ambient"))
        })
        .map(|m| (*m).clone())
        .collect()
}

fn sum_all<F: Field>(n: usize, family: &[Subspace<F>]) -> Subspace<F> {
    family
        .iter()
        .fold(Subspace::zero(n), |acc, s| acc.sum(s).expect("ambient"))
}

impl<F: Field> LatticeScan<F> {
    /// Sum of all nilpotent ideals. Fails with `TheoremViolation` unless the
    /// sum is itself a nilpotent ideal appearing in the scan.
    pub fn nilradical(&self) -> Result<Subspace<F>> {
        let n = self.algebra.dim();
        let sum = sum_all(n, &self.nilpotent_ideals);
        if !self.algebra.is_ideal(&sum)? || !self.algebra.is_nilpotent_subalgebra(&sum)? {
            return Err(Error::TheoremViolation(format!(
                "sum of nilpotent ideals {sum} is not a nilpotent ideal"
            )));
        }
        if !self.nilpotent_ideals.contains(&sum) {
            return Err(Error::TheoremViolation(format!(
                "sum of nilpotent ideals {sum} missing from the scan"
            )));
        }
        Ok(sum)
    }

    /// Sum of all solvable ideals, asserted solvable.
    pub fn radical(&self) -> Result<Subspace<F>> {
        let n = self.algebra.dim();
        let sum = sum_all(n, &self.solvable_ideals);
        if !self.algebra.is_ideal(&sum)? || !self.algebra.is_solvable_subalgebra(&sum)? {
            return Err(Error::TheoremViolation(format!(
                "sum of solvable ideals {sum} is not a solvable ideal"
            )));
        }
        Ok(sum)
    }

    /// Largest ideal inside the intersection of all maximal subalgebras.
    pub fn frattini(&self) -> Result<Subspace<F>> {
        let n = self.algebra.dim();
        let meet = self
            .maximal_subalgebras
            .iter()
            .try_fold(Subspace::full(n), |acc, m| acc.intersect(m))?;
        let meet = if n == 0 { Subspace::zero(0) } else { meet };
        self.algebra.largest_ideal_in(&meet)
    }

    /// Checks that every pairwise sum of nilpotent ideals is nilpotent.
    /// Returns the number of pairs checked.
    pub fn check_pairwise_nilpotent_sums(&self) -> Result<usize> {
        let mut pairs = 0;
        for (i, a) in self.nilpotent_ideals.iter().enumerate() {
            for b in &self.nilpotent_ideals[i..] {
                let s = a.sum(b)?;
                if !self.algebra.is_nilpotent_subalgebra(&s)? {
                    return Err(Error::TheoremViolation(format!(
                        "{a} + {b} is not nilpotent"
                    )));
                }
                pairs += 1;
            }
        }
        Ok(pairs)
    }

    /// Whether the nilpotent ideals have a unique inclusion-maximal element.
    pub fn nilpotent_maximum_is_unique(&self) -> bool {
        let maxima: Vec<_> = self
            .nilpotent_ideals
            .iter()
            .filter(|m| {
                !self
                    .nilpotent_ideals
                    .iter()
                    .any(|o| o.dim() > m.dim() && m.leq(o).expect("ambient"))
            })
            .collect();
        maxima.len() == 1
    }
}

pub fn nilradical_oracle<F: Field>(algebra: &LeibnizAlgebra<F>, budget: &Budget) -> Result<Subspace<F>> {
    scan(algebra, budget)?.nilradical()
}

pub fn radical_oracle<F: Field>(algebra: &LeibnizAlgebra<F>, budget: &Budget) -> Result<Subspace<F>> {
    scan(algebra, budget)?.radical()
}

pub fn frattini_oracle<F: Field>(algebra: &LeibnizAlgebra<F>, budget: &Budget) -> Result<Subspace<F>> {
    scan(algebra, budget)?.frattini()
}
