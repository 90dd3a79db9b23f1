//! Schouten–Nijenhuis bracket, divergence and the modular vector field.
//!
//! The bracket is computed in odd coordinates `ξ_i = ∂_i`:
//!
//! ```text
//! [P, Q] = Σ_i  (∂P/∂ξ_i)_r ∧ ∂Q/∂x_i  −  (−1)^{(p−1)(q−1)} (∂Q/∂ξ_i)_r ∧ ∂P/∂x_i
//! ```
//!
//! with `( )_r` the right derivative. This makes `[X, f] = X(f)`,
//! `[X, Y]` the Lie bracket of vector fields and, for `π = X ∧ ∂z`,
//! `[π, g] = (∂z g) X − X(g) ∂z`.

use super::multivector::{wedge_sign, MultiVector};
use super::polynomial::{Polynomial, Var};
use crate::error::{Error, Result};

/// Removes generator `i` from blade `mask` by moving it to the right end.
fn right_derivative(mask: u8, i: usize) -> Option<(u8, bool)> {
    let bit = 1u8 << i;
    if mask & bit == 0 {
        return None;
    }
    let above = (mask >> (i + 1)).count_ones();
    Some((mask & !bit, above % 2 == 1))
}

fn accumulate(out: &mut MultiVector, left: &MultiVector, right: &MultiVector, negate: bool) {
    for (ml, cl) in left.blades() {
        for i in 0..3 {
            let Some((rest, flip)) = right_derivative(ml, i) else {
                continue;
            };
            let v = Var::from_index(i);
            for (mr, cr) in right.blades() {
                if rest & mr != 0 {
                    continue;
                }
                let dcr = cr.partial(v);
                if dcr.is_zero() {
                    continue;
                }
                let mut coeff = &cl * &dcr;
                let negative = flip ^ (wedge_sign(rest, mr) < 0) ^ negate;
                if negative {
                    coeff = -coeff;
                }
                out.add_blade(rest | mr, &coeff);
            }
        }
    }
}

/// Schouten–Nijenhuis bracket `[a, b]`, of degree `deg a + deg b − 1`.
///
/// Panics if both arguments are functions; see [`try_schouten`].
pub fn schouten(a: &MultiVector, b: &MultiVector) -> MultiVector {
    try_schouten(a, b).expect("Schouten bracket of two functions")
}

pub fn try_schouten(a: &MultiVector, b: &MultiVector) -> Result<MultiVector> {
    let (p, q) = (a.degree(), b.degree());
    if p + q == 0 {
        return Err(Error::Contract(
            "Schouten bracket needs total degree at least 1".into(),
        ));
    }
    let mut out = MultiVector::zero(p + q - 1);
    if p + q - 1 > 3 {
        return Ok(out);
    }
    accumulate(&mut out, a, b, false);
    let sign_odd = (p + 1) * (q + 1) % 2 == 1; // (p-1)(q-1) has the parity of (p+1)(q+1)
    accumulate(&mut out, b, a, !sign_odd);
    Ok(out)
}

/// Lie derivative `L_X V = [X, V]` along a vector field.
pub fn lie_derivative(x: &MultiVector, v: &MultiVector) -> Result<MultiVector> {
    if x.degree() != 1 {
        return Err(Error::Contract(format!(
            "Lie derivative along a degree-{} field",
            x.degree()
        )));
    }
    try_schouten(x, v)
}

/// Divergence with respect to `dx ∧ dy ∧ dz`.
pub fn divergence(x: &MultiVector) -> Result<Polynomial> {
    if x.degree() != 1 {
        return Err(Error::Contract(format!(
            "divergence of a degree-{} multivector",
            x.degree()
        )));
    }
    let mut out = Polynomial::zero();
    for v in Var::ALL {
        out += &x.component(v.index()).partial(v);
    }
    Ok(out)
}

/// `X_g = ι_{dg} π`, which equals `−[π, g]` under this bracket convention.
pub fn hamiltonian_vector_field(pi: &MultiVector, g: &Polynomial) -> Result<MultiVector> {
    if pi.degree() != 2 {
        return Err(Error::Contract(format!(
            "Hamiltonian field of a degree-{} multivector",
            pi.degree()
        )));
    }
    Ok(-schouten(pi, &MultiVector::function(g.clone())))
}

/// Modular vector field of `π` for the volume `dx ∧ dy ∧ dz`: the
/// derivation `g ↦ div(X_g)`, read off on the coordinate functions.
pub fn modular_vector_field(pi: &MultiVector) -> Result<MultiVector> {
    if pi.degree() != 2 {
        return Err(Error::Contract(format!(
            "modular vector field of a degree-{} multivector",
            pi.degree()
        )));
    }
    let mut comps = Vec::with_capacity(3);
    for v in Var::ALL {
        let xg = hamiltonian_vector_field(pi, &Polynomial::var(v))?;
        comps.push(divergence(&xg)?);
    }
    Ok(MultiVector::from_components(1, comps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;

    fn heisenberg() -> MultiVector {
        MultiVector::blade(0b011, Polynomial::z())
    }

    #[test]
    fn heisenberg_is_poisson() {
        let pi = heisenberg();
        assert!(schouten(&pi, &pi).is_zero());
    }

    #[test]
    fn heisenberg_differential_of_x() {
        let got = schouten(&heisenberg(), &MultiVector::function(Polynomial::x()));
        let expected = MultiVector::vector(Polynomial::zero(), -Polynomial::z(), Polynomial::zero());
        assert_eq!(got, expected);
    }

    #[test]
    fn vector_field_on_function_is_derivative() {
        let x = MultiVector::vector(Polynomial::y(), Polynomial::zero(), Polynomial::x());
        let f = Polynomial::x() * Polynomial::z();
        let got = schouten(&x, &MultiVector::function(f));
        // y * z + x * x
        let expected = Polynomial::y() * Polynomial::z() + Polynomial::x().pow(2);
        assert_eq!(got, MultiVector::function(expected));
    }

    #[test]
    fn functions_have_no_bracket() {
        let f = MultiVector::function(Polynomial::x());
        assert!(try_schouten(&f, &f).is_err());
    }

    #[test]
    fn divergence_examples() {
        let xdx = MultiVector::vector(Polynomial::x(), Polynomial::zero(), Polynomial::zero());
        assert_eq!(divergence(&xdx).unwrap(), Polynomial::one());
        assert!(divergence(&MultiVector::rotation()).unwrap().is_zero());
        assert_eq!(divergence(&MultiVector::euler()).unwrap(), Polynomial::integer(3));
        assert!(divergence(&heisenberg()).is_err());
    }

    #[test]
    fn modular_fields() {
        assert!(modular_vector_field(&heisenberg()).unwrap().is_zero());
        let aff = MultiVector::blade(0b011, Polynomial::x());
        assert_eq!(modular_vector_field(&aff).unwrap(), -MultiVector::d(Var::Y));
        let tau = Rational::new(2.into(), 7.into());
        let book = MultiVector::euler_weighted(&tau).wedge(&MultiVector::d(Var::Z));
        let one_plus = Rational::from_integer(1.into()) + &tau;
        assert_eq!(
            modular_vector_field(&book).unwrap(),
            MultiVector::d(Var::Z).scale(&-one_plus)
        );
        assert!(modular_vector_field(&MultiVector::rotation()).is_err());
    }
}
