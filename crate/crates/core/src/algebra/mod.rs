//! Polynomial and multivector calculus on `R^3`.

pub mod multivector;
pub mod polynomial;
pub mod schouten;

pub use multivector::{MultiVector, RationalPoint};
pub use polynomial::{Monomial, Polynomial, Var};
pub use schouten::{
    divergence, hamiltonian_vector_field, lie_derivative, modular_vector_field, schouten, try_schouten,
};

/// Exact coefficient field.
pub type Rational = num_rational::BigRational;

/// Parses `p/q`, `-p/q` or an integer.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: num_bigint::BigInt = num.parse().ok()?;
    let den: num_bigint::BigInt = den.parse().ok()?;
    if num_traits::Zero::is_zero(&den) {
        return None;
    }
    Some(Rational::new(num, den))
}

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
