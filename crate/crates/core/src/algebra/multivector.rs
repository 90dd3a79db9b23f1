//! Homogeneous-in-cochain-degree multivector fields on `R^3`.
//!
//! Components are stored in the cyclic basis
//!
//! | degree | components |
//! |--------|------------|
//! | 0 | `f` |
//! | 1 | `(X^x, X^y, X^z)` on `(dx, dy, dz)` |
//! | 2 | `(W^x, W^y, W^z)` on `(dy^dz, dz^dx, dx^dy)` |
//! | 3 | `f` on `dx^dy^dz` |
//!
//! Here `dx` means the coordinate vector field `∂x`. Internally the bracket
//! and the wedge product work on *blades*: bitmasks of generators taken in
//! ascending order (`x = 1`, `y = 2`, `z = 4`), so `dz^dx` is the blade
//! `0b101` with sign `-1`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use super::polynomial::{Polynomial, Var};
use super::Rational;

pub const fn binomial3(k: usize) -> usize {
    match k {
        0 | 3 => 1,
        1 | 2 => 3,
        _ => 0,
    }
}

/// Blade mask and orientation sign of component `idx` in cochain degree `degree`.
pub fn blade_of(degree: usize, idx: usize) -> (u8, i8) {
    match (degree, idx) {
        (0, 0) => (0, 1),
        (1, i) if i < 3 => (1 << i, 1),
        (2, 0) => (0b110, 1),
        (2, 1) => (0b101, -1),
        (2, 2) => (0b011, 1),
        (3, 0) => (0b111, 1),
        _ => panic!("no component {idx} in degree {degree}"),
    }
}

/// Inverse of [`blade_of`]: `(degree, idx, sign)`.
pub fn component_of(mask: u8) -> (usize, usize, i8) {
    match mask {
        0 => (0, 0, 1),
        0b001 => (1, 0, 1),
        0b010 => (1, 1, 1),
        0b100 => (1, 2, 1),
        0b110 => (2, 0, 1),
        0b101 => (2, 1, -1),
        0b011 => (2, 2, 1),
        0b111 => (3, 0, 1),
        _ => panic!("invalid blade mask {mask:#b}"),
    }
}

/// Sign of `d_I ^ d_J = sign * d_{I ∪ J}` for disjoint ascending blades.
pub(crate) fn wedge_sign(a: u8, b: u8) -> i8 {
    debug_assert_eq!(a & b, 0);
    let mut inversions = 0;
    for i in 0..3 {
        if a & (1 << i) != 0 {
            // generators of b below i must hop over this one
            inversions += (b & ((1 << i) - 1)).count_ones();
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Blade name in ascending generator order, e.g. `dx^dz`.
pub fn blade_name(mask: u8) -> String {
    if mask == 0 {
        return String::new();
    }
    Var::ALL
        .iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .map(|(_, v)| format!("d{}", v.name()))
        .collect::<Vec<_>>()
        .join("^")
}

/// Blades of degree `q` in printing order.
pub(crate) fn blades_of_degree(q: usize) -> &'static [u8] {
    match q {
        0 => &[0],
        1 => &[0b001, 0b010, 0b100],
        2 => &[0b011, 0b101, 0b110],
        3 => &[0b111],
        _ => &[],
    }
}

/// A multivector field of fixed cochain degree with polynomial coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiVector {
    degree: usize,
    comps: Vec<Polynomial>,
}

impl MultiVector {
    /// Zero of cochain degree `degree`. Degrees above 3 are allowed and have
    /// no components, which keeps wedge and bracket total.
    pub fn zero(degree: usize) -> Self {
        MultiVector {
            degree,
            comps: vec![Polynomial::zero(); binomial3(degree)],
        }
    }

    /// Builds from components in the cyclic basis; panics if the count is wrong.
    pub fn from_components(degree: usize, comps: Vec<Polynomial>) -> Self {
        assert_eq!(comps.len(), binomial3(degree), "wrong component count");
        MultiVector { degree, comps }
    }

    pub fn function(f: Polynomial) -> Self {
        MultiVector::from_components(0, vec![f])
    }

    pub fn vector(x: Polynomial, y: Polynomial, z: Polynomial) -> Self {
        MultiVector::from_components(1, vec![x, y, z])
    }

    /// `wx dy^dz + wy dz^dx + wz dx^dy`.
    pub fn bivector(wx: Polynomial, wy: Polynomial, wz: Polynomial) -> Self {
        MultiVector::from_components(2, vec![wx, wy, wz])
    }

    pub fn trivector(f: Polynomial) -> Self {
        MultiVector::from_components(3, vec![f])
    }

    /// `coeff * d_mask` with the blade in ascending orientation.
    pub fn blade(mask: u8, coeff: Polynomial) -> Self {
        let (degree, idx, sign) = component_of(mask);
        let mut out = MultiVector::zero(degree);
        out.comps[idx] = if sign < 0 { -coeff } else { coeff };
        out
    }

    pub fn d(v: Var) -> Self {
        MultiVector::blade(1 << v.index(), Polynomial::one())
    }

    /// `E = x dx + y dy`.
    pub fn euler_planar() -> Self {
        MultiVector::vector(Polynomial::x(), Polynomial::y(), Polynomial::zero())
    }

    /// `E_tau = x dx + tau y dy`.
    pub fn euler_weighted(tau: &Rational) -> Self {
        MultiVector::vector(Polynomial::x(), Polynomial::y().scale(tau), Polynomial::zero())
    }

    /// `E^3 = x dx + y dy + z dz`.
    pub fn euler() -> Self {
        MultiVector::vector(Polynomial::x(), Polynomial::y(), Polynomial::z())
    }

    /// `T = -y dx + x dy`.
    pub fn rotation() -> Self {
        MultiVector::vector(-Polynomial::y(), Polynomial::x(), Polynomial::zero())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.comps
    }

    pub fn component(&self, idx: usize) -> &Polynomial {
        &self.comps[idx]
    }

    pub fn component_mut(&mut self, idx: usize) -> &mut Polynomial {
        &mut self.comps[idx]
    }

    pub fn into_components(self) -> Vec<Polynomial> {
        self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Polynomial::is_zero)
    }

    /// Coefficient of the ascending blade `mask` (sign folded in).
    pub fn blade_coeff(&self, mask: u8) -> Polynomial {
        let (degree, idx, sign) = component_of(mask);
        assert_eq!(degree, self.degree, "blade of the wrong degree");
        if sign < 0 {
            -&self.comps[idx]
        } else {
            self.comps[idx].clone()
        }
    }

    /// Nonzero `(mask, coefficient)` pairs with ascending blade orientation.
    pub fn blades(&self) -> Vec<(u8, Polynomial)> {
        (0..self.comps.len())
            .filter(|&i| !self.comps[i].is_zero())
            .map(|i| {
                let (mask, sign) = blade_of(self.degree, i);
                let c = if sign < 0 {
                    -&self.comps[i]
                } else {
                    self.comps[i].clone()
                };
                (mask, c)
            })
            .collect()
    }

    /// Adds `coeff * d_mask`; the blade must have this multivector's degree.
    pub fn add_blade(&mut self, mask: u8, coeff: &Polynomial) {
        let (degree, idx, sign) = component_of(mask);
        assert_eq!(degree, self.degree, "blade of the wrong degree");
        if sign < 0 {
            self.comps[idx] -= coeff;
        } else {
            self.comps[idx] += coeff;
        }
    }

    /// Common total degree of all coefficients; `None` for zero or inhomogeneous input.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut deg = None;
        for c in &self.comps {
            if c.is_zero() {
                continue;
            }
            let d = c.homogeneous_degree()?;
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        deg
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.comps.iter().all(|c| c.is_homogeneous_of(d))
    }

    pub fn max_coeff_degree(&self) -> Option<u32> {
        self.comps.iter().filter_map(Polynomial::degree).max()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|p| p.scale(c))
    }

    /// Multiply every coefficient by `f` (the wedge with a function).
    pub fn mul_function(&self, f: &Polynomial) -> Self {
        self.map(|p| p * f)
    }

    pub fn partial(&self, v: Var) -> Self {
        self.map(|p| p.partial(v))
    }

    pub fn map<F: Fn(&Polynomial) -> Polynomial>(&self, f: F) -> Self {
        MultiVector {
            degree: self.degree,
            comps: self.comps.iter().map(f).collect(),
        }
    }

    /// Wedge product. Degrees adding up past 3 give the (componentless) zero
    /// of that degree.
    pub fn wedge(&self, other: &MultiVector) -> MultiVector {
        let degree = self.degree + other.degree;
        let mut out = MultiVector::zero(degree);
        for (ma, ca) in self.blades() {
            for (mb, cb) in other.blades() {
                if ma & mb != 0 {
                    continue;
                }
                let mut coeff = &ca * &cb;
                if wedge_sign(ma, mb) < 0 {
                    coeff = -coeff;
                }
                out.add_blade(ma | mb, &coeff);
            }
        }
        out
    }

    /// Evaluates each component at `pt`, in the cyclic component order.
    pub fn evaluate(&self, pt: &RationalPoint) -> Vec<Rational> {
        self.comps.iter().map(|c| c.evaluate(&pt.coords)).collect()
    }
}

impl Add<&MultiVector> for &MultiVector {
    type Output = MultiVector;
    fn add(self, rhs: &MultiVector) -> MultiVector {
        assert_eq!(self.degree, rhs.degree, "adding multivectors of different degree");
        MultiVector {
            degree: self.degree,
            comps: self.comps.iter().zip(&rhs.comps).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Add for MultiVector {
    type Output = MultiVector;
    fn add(self, rhs: MultiVector) -> MultiVector {
        &self + &rhs
    }
}

impl Sub<&MultiVector> for &MultiVector {
    type Output = MultiVector;
    fn sub(self, rhs: &MultiVector) -> MultiVector {
        assert_eq!(
            self.degree, rhs.degree,
            "subtracting multivectors of different degree"
        );
        MultiVector {
            degree: self.degree,
            comps: self.comps.iter().zip(&rhs.comps).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Sub for MultiVector {
    type Output = MultiVector;
    fn sub(self, rhs: MultiVector) -> MultiVector {
        &self - &rhs
    }
}

impl Neg for &MultiVector {
    type Output = MultiVector;
    fn neg(self) -> MultiVector {
        self.map(|p| -p)
    }
}

impl Neg for MultiVector {
    type Output = MultiVector;
    fn neg(self) -> MultiVector {
        -&self
    }
}

impl fmt::Display for MultiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::expr::format_multivector(self))
    }
}

/// A point of `R^3` with rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPoint {
    pub coords: [Rational; 3],
}

impl RationalPoint {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        RationalPoint { coords: [x, y, z] }
    }

    pub fn from_integers(x: i64, y: i64, z: i64) -> Self {
        let r = |v: i64| Rational::from_integer(v.into());
        RationalPoint::new(r(x), r(y), r(z))
    }

    pub fn origin() -> Self {
        RationalPoint::new(Rational::zero(), Rational::zero(), Rational::zero())
    }
}
