#![allow(dead_code)]

use proptest::prelude::*;

use poisson3::{Monomial, MultiVector, Polynomial, Rational};

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

/// Sparse polynomial with up to `terms` terms of degree at most `max_deg`.
pub fn polynomial(max_deg: u32, terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(
        (0..=max_deg, 0..=max_deg, 0..=max_deg, small_rational()),
        0..=terms,
    )
    .prop_map(move |ts| {
        Polynomial::from_terms(
            ts.into_iter()
                .filter(|(i, j, k, _)| i + j + k <= max_deg)
                .map(|(i, j, k, c)| (Monomial::new(i, j, k), c)),
        )
    })
}

pub fn homogeneous_polynomial(d: u32, terms: usize) -> impl Strategy<Value = Polynomial> {
    let monos = Monomial::of_degree(d);
    prop::collection::vec((0..monos.len(), small_rational()), 0..=terms)
        .prop_map(move |ts| Polynomial::from_terms(ts.into_iter().map(|(i, c)| (monos[i], c))))
}

pub fn multivector_of(q: usize, max_deg: u32, terms: usize) -> BoxedStrategy<MultiVector> {
    let n = [1, 3, 3, 1][q];
    prop::collection::vec(polynomial(max_deg, terms), n)
        .prop_map(move |comps| MultiVector::from_components(q, comps))
        .boxed()
}

pub fn multivector(max_deg: u32, terms: usize) -> BoxedStrategy<MultiVector> {
    (0usize..=3)
        .prop_flat_map(move |q| multivector_of(q, max_deg, terms))
        .boxed()
}

pub fn sign(k: usize) -> Rational {
    Rational::from_integer(if k.is_multiple_of(2) { 1 } else { -1 }.into())
}
