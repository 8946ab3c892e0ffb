use serde::{Deserialize, Serialize};

use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{Field, Subspace};
use crate::oracle::{self, Budget};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FrattiniMethod {
    /// `φ(L) = L²` for nilpotent `L`: every maximal subalgebra of a
    /// nilpotent Leibniz algebra is an ideal of codimension one and so
    /// contains `L²`, and `L / L²` is abelian with zero Frattini ideal.
    NilpotentSquare,
    /// Intersection of all maximal subalgebras found by exhaustive scan,
    /// then the largest ideal inside it.
    OracleExhaustive,
}

/// Frattini ideal of `L`: the nilpotent shortcut when `L` is nilpotent,
/// otherwise the oracle over a finite field.
pub fn frattini_ideal<F: Field>(l: &LeibnizAlgebra<F>) -> Result<Subspace<F>> {
    frattini_ideal_with(l, None, &Budget::default()).map(|(s, _)| s)
}

/// Frattini ideal with an explicit method, or the automatic choice when
/// `method` is `None`. Returns the method used.
pub fn frattini_ideal_with<F: Field>(
    l: &LeibnizAlgebra<F>,
    method: Option<FrattiniMethod>,
    budget: &Budget,
) -> Result<(Subspace<F>, FrattiniMethod)> {
    let method = match method {
        Some(m) => m,
        None if l.is_nilpotent() => FrattiniMethod::NilpotentSquare,
        None if F::elements().is_some() => FrattiniMethod::OracleExhaustive,
        None => {
            return Err(Error::Unsupported(format!(
                "Frattini ideal of a non-nilpotent algebra over {} (supported: nilpotent algebras, or small prime fields)",
                F::descriptor()
            )))
        }
    };
    let s = match method {
        FrattiniMethod::NilpotentSquare => {
            if !l.is_nilpotent() {
                return Err(Error::Unsupported(
                    "nilpotent-square Frattini method on a non-nilpotent algebra".into(),
                ));
            }
            let full = l.full_space();
            l.bracket_span(&full, &full)?
        }
        FrattiniMethod::OracleExhaustive => oracle::frattini_oracle(l, budget)?,
    };
    Ok((s, method))
}
