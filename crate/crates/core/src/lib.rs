//! Exact computation with finite-dimensional (right) Leibniz algebras given
//! by structure constants.
//!
//! The library is generic over the scalar field through [`Field`], with
//! implementations for the rationals ([`Q`]) and prime fields ([`Fp`]).
//! It covers the Leibniz kernel and liesation, lower central and derived
//! series, quotients and subalgebras, the solvable radical, the nilradical,
//! the Frattini ideal, exhaustive lattice oracles over small prime fields,
//! and checks relating the nilradical of the liesation to the nilradical of
//! the algebra.

pub mod algebra;
pub mod corpus;
pub mod error;
pub mod exactlin;
pub mod format;
pub mod oracle;
pub mod radicals;
pub mod report;

pub use algebra::{LeibnizAlgebra, QuotientPresentation, SubalgebraPresentation};
pub use error::{Error, Result};
pub use exactlin::{Field, FieldDesc, Fp, Matrix, Subspace};
pub use report::{Status, VerificationReport};

/// Arbitrary-precision rationals.
pub type Q = num_rational::BigRational;
pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
pub type F7 = Fp<7>;
pub type F11 = Fp<11>;
pub type F13 = Fp<13>;

pub type RationalAlgebra = LeibnizAlgebra<Q>;
pub type RationalSubspace = Subspace<Q>;

/// Prime moduli for which a field type is instantiated (see
/// [`dispatch_field!`]).
pub const SUPPORTED_PRIMES: &[u64] = &[2, 3, 5, 7, 11, 13];

/// Runs a generic body with the scalar type chosen at runtime from a
/// [`FieldDesc`]. Evaluates to `Err(desc)` for primes without an
/// instantiated field type.
///
/// ```
/// use leibniz::{dispatch_field, Field, FieldDesc};
/// fn characteristic<F: Field>() -> u64 { F::characteristic() }
/// let c = dispatch_field!(FieldDesc::PrimeField(5), F => characteristic::<F>());
/// assert_eq!(c, Ok(5));
/// ```
#[macro_export]
macro_rules! dispatch_field {
    ($desc:expr, $f:ident => $body:expr) => {{
        match $desc {
            $crate::FieldDesc::Rationals => {
                type $f = $crate::Q;
                Ok($body)
            }
            $crate::FieldDesc::PrimeField(2) => {
                type $f = $crate::F2;
                Ok($body)
            }
            $crate::FieldDesc::PrimeField(3) => {
                type $f = $crate::F3;
                Ok($body)
            }
            $crate::FieldDesc::PrimeField(5) => {
                type $f = $crate::F5;
                Ok($body)
            }
            $crate::FieldDesc::PrimeField(7) => {
                type $f = $crate::F7;
                Ok($body)
            }
            $crate::FieldDesc::PrimeField(11) => {
                type $f = $crate::F11;
                Ok($body)
            }
            $crate::FieldDesc::PrimeField(13) => {
                type $f = $crate::F13;
                Ok($body)
            }
            other => Err(other),
        }
    }};
}
