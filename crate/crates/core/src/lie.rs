//! The fixed table of 3-dimensional real Lie algebras and their linear
//! Poisson structures on `g^* = R^3`.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::polynomial::format_rational;
use crate::algebra::{parse_rational, schouten, MultiVector, Polynomial, Rational, Var};
use crate::error::{Error, Result};

/// Parameter of the book family `[e1,e3] = e1`, `[e2,e3] = tau e2`.
///
/// For negative `tau = -p/q` (the hyperbolic range) the reduced pair is
/// kept alongside, with `p <= q` and `gcd(p, q) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BookParameter {
    tau: Rational,
    hyperbolic: Option<(u64, u64)>,
}

impl BookParameter {
    pub fn new(tau: Rational) -> Result<Self> {
        if tau.is_zero() || tau.abs() > Rational::one() {
            return Err(Error::InvalidParameter(format!(
                "book parameter must satisfy 0 < |tau| <= 1, got {}",
                format_rational(&tau)
            )));
        }
        let hyperbolic = if tau.is_negative() {
            let p = (-tau.numer()).to_u64();
            let q = tau.denom().to_u64();
            match (p, q) {
                (Some(p), Some(q)) => {
                    debug_assert_eq!(p.gcd(&q), 1);
                    Some((p, q))
                }
                _ => return Err(Error::InvalidParameter("hyperbolic parameter too large".into())),
            }
        } else {
            None
        };
        Ok(BookParameter { tau, hyperbolic })
    }

    pub fn tau(&self) -> &Rational {
        &self.tau
    }

    /// `(p, q)` with `tau = -p/q`, for the hyperbolic range.
    pub fn hyperbolic(&self) -> Option<(u64, u64)> {
        self.hyperbolic
    }
}

/// One entry of the classification table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    Abelian,
    Heisenberg,
    /// `aff(1, R) x R`.
    AffXR,
    /// `e(2)`.
    Euclidean,
    /// Open book (`0 < tau <= 1`) and hyperbolic (`-1 <= tau < 0`) types.
    Book(BookParameter),
    SemiOpenBook,
    /// Spiral type, `tau > 0`.
    Spiral(Rational),
    Sl2,
    So3,
}

impl AlgebraKind {
    pub const NAMES: [&'static str; 9] = [
        "abelian",
        "heisenberg",
        "aff_x_r",
        "euclidean",
        "book",
        "semi_open_book",
        "spiral",
        "sl2",
        "so3",
    ];

    pub fn book(tau: Rational) -> Result<Self> {
        Ok(AlgebraKind::Book(BookParameter::new(tau)?))
    }

    pub fn spiral(tau: Rational) -> Result<Self> {
        if !tau.is_positive() {
            return Err(Error::InvalidParameter(format!(
                "spiral parameter must be positive, got {}",
                format_rational(&tau)
            )));
        }
        Ok(AlgebraKind::Spiral(tau))
    }

    /// Looks up a kind by name; `tau` is required exactly for `book` and `spiral`.
    pub fn from_name(name: &str, tau: Option<&str>) -> Result<Self> {
        let tau =
            match tau {
                Some(t) => Some(parse_rational(t).ok_or_else(|| {
                    Error::InvalidParameter(format!("cannot read `{t}` as a rational number"))
                })?),
                None => None,
            };
        let kind = match (name, tau) {
            ("book", Some(t)) => return AlgebraKind::book(t),
            ("spiral", Some(t)) => return AlgebraKind::spiral(t),
            ("book" | "spiral", None) => {
                return Err(Error::InvalidParameter(format!("`{name}` needs --tau")))
            }
            (_, Some(_)) if AlgebraKind::NAMES.contains(&name) => {
                return Err(Error::InvalidParameter(format!("`{name}` takes no tau")))
            }
            ("abelian", None) => AlgebraKind::Abelian,
            ("heisenberg", None) => AlgebraKind::Heisenberg,
            ("aff_x_r", None) => AlgebraKind::AffXR,
            ("euclidean", None) => AlgebraKind::Euclidean,
            ("semi_open_book", None) => AlgebraKind::SemiOpenBook,
            ("sl2", None) => AlgebraKind::Sl2,
            ("so3", None) => AlgebraKind::So3,
            _ => return Err(Error::UnknownAlgebra(name.to_string())),
        };
        Ok(kind)
    }

    pub fn name(&self) -> &'static str {
        match self {
            AlgebraKind::Abelian => "abelian",
            AlgebraKind::Heisenberg => "heisenberg",
            AlgebraKind::AffXR => "aff_x_r",
            AlgebraKind::Euclidean => "euclidean",
            AlgebraKind::Book(_) => "book",
            AlgebraKind::SemiOpenBook => "semi_open_book",
            AlgebraKind::Spiral(_) => "spiral",
            AlgebraKind::Sl2 => "sl2",
            AlgebraKind::So3 => "so3",
        }
    }

    pub fn tau(&self) -> Option<&Rational> {
        match self {
            AlgebraKind::Book(b) => Some(b.tau()),
            AlgebraKind::Spiral(t) => Some(t),
            _ => None,
        }
    }

    /// Every kind with a representative parameter, used by the identity suites.
    pub fn samples() -> Vec<AlgebraKind> {
        let r = |n: i64, d: i64| Rational::new(n.into(), d.into());
        vec![
            AlgebraKind::Abelian,
            AlgebraKind::Heisenberg,
            AlgebraKind::AffXR,
            AlgebraKind::Euclidean,
            AlgebraKind::book(r(1, 2)).unwrap(),
            AlgebraKind::SemiOpenBook,
            AlgebraKind::spiral(r(1, 1)).unwrap(),
            AlgebraKind::Sl2,
            AlgebraKind::So3,
        ]
    }

    /// True for the kinds whose bivector has the shape `X ∧ ∂z` with `X` planar.
    pub fn is_planar_times_dz(&self) -> bool {
        matches!(
            self,
            AlgebraKind::Euclidean
                | AlgebraKind::Book(_)
                | AlgebraKind::SemiOpenBook
                | AlgebraKind::Spiral(_)
        )
    }

    pub fn structure_constants(&self) -> StructureConstants {
        let mut sc = StructureConstants::zero();
        let one = Rational::one;
        match self {
            AlgebraKind::Abelian => {}
            AlgebraKind::Heisenberg => sc.set(1, 2, 3, one()),
            AlgebraKind::AffXR => sc.set(1, 2, 1, one()),
            AlgebraKind::Euclidean => {
                sc.set(1, 3, 2, -one());
                sc.set(2, 3, 1, one());
            }
            AlgebraKind::Book(b) => {
                sc.set(1, 3, 1, one());
                sc.set(2, 3, 2, b.tau().clone());
            }
            AlgebraKind::SemiOpenBook => {
                sc.set(1, 3, 1, one());
                sc.set(2, 3, 1, one());
                sc.set(2, 3, 2, one());
            }
            AlgebraKind::Spiral(tau) => {
                sc.set(1, 3, 1, tau.clone());
                sc.set(1, 3, 2, -one());
                sc.set(2, 3, 1, one());
                sc.set(2, 3, 2, tau.clone());
            }
            AlgebraKind::Sl2 => {
                // e1 = h, e2 = e, e3 = f
                sc.set(1, 2, 2, Rational::from_integer(2.into()));
                sc.set(1, 3, 3, Rational::from_integer((-2).into()));
                sc.set(2, 3, 1, one());
            }
            AlgebraKind::So3 => {
                sc.set(1, 2, 3, one());
                sc.set(1, 3, 2, -one());
                sc.set(2, 3, 1, one());
            }
        }
        sc
    }

    pub fn poisson_bivector(&self) -> MultiVector {
        self.structure_constants().linear_poisson()
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tau() {
            Some(t) => write!(f, "{}(tau={})", self.name(), format_rational(t)),
            None => write!(f, "{}", self.name()),
        }
    }
}

const PAIRS: [(usize, usize); 3] = [(1, 2), (1, 3), (2, 3)];

fn pair_index(i: usize, j: usize) -> usize {
    match (i, j) {
        (1, 2) => 0,
        (1, 3) => 1,
        (2, 3) => 2,
        _ => panic!("pair ({i}, {j}) is not 1 <= i < j <= 3"),
    }
}

/// `[e_i, e_j] = Σ_k c^k_{ij} e_k` stored for `i < j` (1-based indices).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StructureConstants {
    c: [[Rational; 3]; 3],
}

impl StructureConstants {
    pub fn zero() -> Self {
        StructureConstants {
            c: std::array::from_fn(|_| std::array::from_fn(|_| Rational::zero())),
        }
    }

    /// Sets `c^k_{ij}` for `1 <= i < j <= 3`, `1 <= k <= 3`.
    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Rational) {
        assert!((1..=3).contains(&k), "k out of range");
        self.c[pair_index(i, j)][k - 1] = value;
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[pair_index(i, j)][k - 1]
    }

    /// Coefficients of `[e_i, e_j]` for any `i, j` in `1..=3`.
    pub fn bracket(&self, i: usize, j: usize) -> [Rational; 3] {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => std::array::from_fn(|_| Rational::zero()),
            std::cmp::Ordering::Less => self.c[pair_index(i, j)].clone(),
            std::cmp::Ordering::Greater => {
                let c = &self.c[pair_index(j, i)];
                std::array::from_fn(|k| -c[k].clone())
            }
        }
    }

    /// `π = Σ_{i<j} (Σ_k c^k_{ij} x_k) ∂_i ∧ ∂_j` with `(x_1, x_2, x_3) = (x, y, z)`.
    pub fn linear_poisson(&self) -> MultiVector {
        let mut pi = MultiVector::zero(2);
        for (i, j) in PAIRS {
            let mut coeff = Polynomial::zero();
            for (k, v) in Var::ALL.iter().enumerate() {
                coeff += &Polynomial::var(*v).scale(&self.c[pair_index(i, j)][k]);
            }
            let mask = (1u8 << (i - 1)) | (1u8 << (j - 1));
            pi.add_blade(mask, &coeff);
        }
        pi
    }

    /// `[π, π]`; vanishes exactly when the Jacobi identity holds.
    pub fn jacobi_defect(&self) -> MultiVector {
        let pi = self.linear_poisson();
        schouten(&pi, &pi)
    }
}

impl fmt::Display for StructureConstants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, j) in PAIRS {
            let terms: Vec<String> = (1..=3)
                .filter(|&k| !self.get(i, j, k).is_zero())
                .map(|k| format!("{}*e{k}", format_rational(self.get(i, j, k))))
                .collect();
            if terms.is_empty() {
                continue;
            }
            if !first {
                writeln!(f)?;
            }
            first = false;
            write!(f, "[e{i}, e{j}] = {}", terms.join(" + "))?;
        }
        if first {
            write!(f, "all brackets vanish")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational;
    use crate::expr::parse_multivector;

    #[test]
    fn heisenberg_constants_and_bivector() {
        let sc = AlgebraKind::Heisenberg.structure_constants();
        for (i, j) in PAIRS {
            for k in 1..=3 {
                let expected = if (i, j, k) == (1, 2, 3) {
                    Rational::one()
                } else {
                    Rational::zero()
                };
                assert_eq!(sc.get(i, j, k), &expected);
            }
        }
        assert_eq!(sc.linear_poisson(), parse_multivector("z*dx^dy").unwrap());
    }

    #[test]
    fn abelian_is_zero() {
        assert_eq!(
            AlgebraKind::Abelian.structure_constants(),
            StructureConstants::zero()
        );
        assert!(AlgebraKind::Abelian.poisson_bivector().is_zero());
    }

    #[test]
    fn spiral_constants() {
        let tau = rational(3, 2);
        let sc = AlgebraKind::spiral(tau.clone()).unwrap().structure_constants();
        assert_eq!(sc.get(1, 3, 1), &tau);
        assert_eq!(sc.get(1, 3, 2), &rational(-1, 1));
        assert_eq!(sc.get(2, 3, 1), &rational(1, 1));
        assert_eq!(sc.get(2, 3, 2), &tau);
    }

    #[test]
    fn named_bivectors() {
        let dz = MultiVector::d(Var::Z);
        assert_eq!(
            AlgebraKind::Euclidean.poisson_bivector(),
            MultiVector::rotation().wedge(&dz)
        );
        let tau = rational(2, 5);
        let spiral_x = &MultiVector::euler_planar().scale(&tau) + &MultiVector::rotation();
        assert_eq!(
            AlgebraKind::spiral(tau).unwrap().poisson_bivector(),
            spiral_x.wedge(&dz)
        );
        let tau = rational(-1, 3);
        assert_eq!(
            AlgebraKind::book(tau.clone()).unwrap().poisson_bivector(),
            MultiVector::euler_weighted(&tau).wedge(&dz)
        );
        let semi = &MultiVector::euler_planar() + &parse_multivector("x*dy").unwrap();
        assert_eq!(AlgebraKind::SemiOpenBook.poisson_bivector(), semi.wedge(&dz));
        assert_eq!(
            AlgebraKind::AffXR.poisson_bivector(),
            parse_multivector("x*dx^dy").unwrap()
        );
    }

    #[test]
    fn parameter_validation() {
        assert!(AlgebraKind::book(rational(0, 1)).is_err());
        assert!(AlgebraKind::book(rational(3, 2)).is_err());
        assert!(AlgebraKind::book(rational(-1, 1)).is_ok());
        assert!(AlgebraKind::spiral(rational(-1, 2)).is_err());
        assert!(AlgebraKind::from_name("book", None).is_err());
        assert!(AlgebraKind::from_name("heisenberg", Some("1")).is_err());
        assert!(matches!(
            AlgebraKind::from_name("g2", None),
            Err(Error::UnknownAlgebra(_))
        ));
        assert!(AlgebraKind::from_name("spiral", Some("abc")).is_err());
    }

    #[test]
    fn hyperbolic_pair_is_reduced() {
        let b = BookParameter::new(rational(-4, 6)).unwrap();
        assert_eq!(b.hyperbolic(), Some((2, 3)));
        assert_eq!(BookParameter::new(rational(1, 3)).unwrap().hyperbolic(), None);
    }

    #[test]
    fn registry_satisfies_jacobi() {
        for kind in AlgebraKind::samples() {
            assert!(kind.structure_constants().jacobi_defect().is_zero(), "{kind}");
        }
    }

    #[test]
    fn planar_kinds_have_no_dx_dy_part() {
        for kind in AlgebraKind::samples()
            .into_iter()
            .filter(AlgebraKind::is_planar_times_dz)
        {
            assert!(kind.poisson_bivector().component(2).is_zero(), "{kind}");
        }
    }
}
