//! Jacobi identity by brute force over basis triples, against `[π, π] = 0`.

use proptest::prelude::*;

use poisson3::{AlgebraKind, Rational, StructureConstants};

fn add(a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
    std::array::from_fn(|k| &a[k] + &b[k])
}

/// `[u, e_k]` for `u` given in coordinates.
fn bracket_with(sc: &StructureConstants, u: &[Rational; 3], k: usize) -> [Rational; 3] {
    let mut out: [Rational; 3] = Default::default();
    for (i, ui) in u.iter().enumerate() {
        let b = sc.bracket(i + 1, k);
        out = add(&out, &std::array::from_fn(|m| ui * &b[m]));
    }
    out
}

fn jacobiator_vanishes(sc: &StructureConstants) -> bool {
    let (i, j, k) = (1, 2, 3);
    let t1 = bracket_with(sc, &sc.bracket(i, j), k);
    let t2 = bracket_with(sc, &sc.bracket(j, k), i);
    let t3 = bracket_with(sc, &sc.bracket(k, i), j);
    add(&add(&t1, &t2), &t3).iter().all(|c| c == &Rational::default())
}

#[test]
fn registry_satisfies_jacobi() {
    for kind in AlgebraKind::samples() {
        let sc = kind.structure_constants();
        assert!(jacobiator_vanishes(&sc), "{kind}");
        assert!(sc.jacobi_defect().is_zero(), "{kind}");
    }
}

#[test]
fn failing_example() {
    let one = Rational::from_integer(1.into());
    let mut sc = StructureConstants::zero();
    sc.set(1, 2, 3, one.clone());
    sc.set(1, 3, 1, one);
    assert!(!jacobiator_vanishes(&sc));
    assert!(!sc.jacobi_defect().is_zero());
}

proptest! {
    #[test]
    fn defect_agrees_with_oracle(entries in prop::collection::vec(-2i64..=2, 9)) {
        let mut sc = StructureConstants::zero();
        for (n, (i, j)) in [(1, 2), (1, 3), (2, 3)].into_iter().enumerate() {
            for k in 1..=3 {
                sc.set(i, j, k, Rational::from_integer(entries[3 * n + k - 1].into()));
            }
        }
        prop_assert_eq!(jacobiator_vanishes(&sc), sc.jacobi_defect().is_zero());
    }
}
