//! Exact linear algebra over Q and F_p.

mod field;
mod matrix;
mod subspace;

pub use field::{format_scalar, is_prime, parse_scalar, Field, FieldDesc, Fp};
pub use matrix::{format_vector, Matrix};
pub use subspace::{
    add_vectors, combine, dot, is_zero_vector, scale_vector, sub_vectors, unit, Subspace,
};
