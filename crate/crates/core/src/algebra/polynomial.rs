//! Exact polynomials in the coordinates `x`, `y`, `z` of the dual space.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// A coordinate of `R^3 = g^*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Var {
        Var::ALL[i]
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
        }
    }
}

/// `x^i y^j z^k`.
///
/// Ordering: ascending total degree, and inside one degree the exponent
/// vector in descending lexicographic order, so degree 2 reads
/// `x^2, xy, xz, y^2, yz, z^2`. This order drives basis enumeration,
/// pivoting and canonical printing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pub exps: [u32; 3],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0, 0, 0] };

    pub fn new(i: u32, j: u32, k: u32) -> Self {
        Monomial { exps: [i, j, k] }
    }

    pub fn var(v: Var) -> Self {
        let mut exps = [0; 3];
        exps[v.index()] = 1;
        Monomial { exps }
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.exps[v.index()]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: [
                self.exps[0] + other.exps[0],
                self.exps[1] + other.exps[1],
                self.exps[2] + other.exps[2],
            ],
        }
    }

    /// All monomials of total degree `d`, in monomial order.
    pub fn of_degree(d: u32) -> Vec<Monomial> {
        let mut out = Vec::with_capacity(((d + 1) * (d + 2) / 2) as usize);
        for i in (0..=d).rev() {
            for j in (0..=d - i).rev() {
                out.push(Monomial::new(i, j, d - i - j));
            }
        }
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Monomial::ONE {
            return write!(f, "1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v.name())?;
            } else {
                write!(f, "{}^{}", v.name(), e)?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial with rational coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::term(c, Monomial::ONE)
    }

    pub fn integer(c: i64) -> Self {
        Polynomial::constant(Rational::from_integer(BigInt::from(c)))
    }

    pub fn var(v: Var) -> Self {
        Polynomial::term(Rational::one(), Monomial::var(v))
    }

    pub fn x() -> Self {
        Polynomial::var(Var::X)
    }

    pub fn y() -> Self {
        Polynomial::var(Var::Y)
    }

    pub fn z() -> Self {
        Polynomial::var(Var::Z)
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(iter: I) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Highest total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Degree if every term has the same total degree. Zero is homogeneous of any degree
    /// and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    /// True if `v` does not occur.
    pub fn is_free_of(&self, v: Var) -> bool {
        self.terms.keys().all(|m| m.exp(v) == 0)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn partial(&self, v: Var) -> Polynomial {
        let i = v.index();
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exps[i];
            if e == 0 {
                continue;
            }
            let mut dm = *m;
            dm.exps[i] -= 1;
            out.add_term(dm, c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn evaluate(&self, pt: &[Rational; 3]) -> Rational {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (k, e) in m.exps.iter().enumerate() {
                for _ in 0..*e {
                    t *= &pt[k];
                }
            }
            total += t;
        }
        total
    }

    /// Substitute polynomials for `x`, `y`, `z`.
    pub fn compose(&self, subs: &[Polynomial; 3]) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(c.clone());
            for (k, e) in m.exps.iter().enumerate() {
                t = &t * &subs[k].pow(*e);
            }
            out += &t;
        }
        out
    }

    /// Part of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Terms in printing order (ascending degree, then descending lex).
    pub(crate) fn sorted_terms(&self) -> Vec<(Monomial, Rational)> {
        self.terms.iter().map(|(m, c)| (*m, c.clone())).collect()
    }
}

impl From<Monomial> for Polynomial {
    fn from(m: Monomial) -> Self {
        Polynomial::term(Rational::one(), m)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(mut self, rhs: Polynomial) -> Polynomial {
        self -= &rhs;
        self
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Writes `c` in the `p/q` form used by the expression grammar.
pub fn format_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Writes a coefficient-times-monomial product without a sign for positive
/// unit coefficients (`x*y`, `3/2*x^2`, `-1*z`, `1`).
pub(crate) fn format_scaled(c: &Rational, body: Option<&str>) -> String {
    match body {
        None => format_rational(c),
        Some(b) if c.is_one() => b.to_string(),
        Some(b) => format!("{}*{}", format_rational(c), b),
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().enumerate() {
            let body = (*m != Monomial::ONE).then(|| m.to_string());
            if n == 0 {
                write!(f, "{}", format_scaled(c, body.as_deref()))?;
            } else if c.is_negative() {
                write!(f, " - {}", format_scaled(&-c.clone(), body.as_deref()))?;
            } else {
                write!(f, " + {}", format_scaled(c, body.as_deref()))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn add_cancels() {
        let p = Polynomial::x() + Polynomial::y();
        let q = Polynomial::x() - Polynomial::y();
        assert_eq!(&p + &q, Polynomial::x().scale(&r(2, 1)));
    }

    #[test]
    fn difference_of_squares() {
        let p = Polynomial::x() + Polynomial::y();
        let q = Polynomial::x() - Polynomial::y();
        let expected = Polynomial::x().pow(2) - Polynomial::y().pow(2);
        assert_eq!(&p * &q, expected);
    }

    #[test]
    fn multiply_by_zero() {
        let p = Polynomial::x().pow(3) + Polynomial::integer(5);
        assert!((&p * &Polynomial::zero()).is_zero());
    }

    #[test]
    fn partial_derivatives() {
        let x2y = Polynomial::from(Monomial::new(2, 1, 0));
        assert_eq!(
            x2y.partial(Var::X),
            Polynomial::from(Monomial::new(1, 1, 0)).scale(&r(2, 1))
        );
        assert!(Polynomial::x().partial(Var::Z).is_zero());
        let x2y3 = Polynomial::from(Monomial::new(2, 3, 0));
        assert_eq!(
            x2y3.partial(Var::Y),
            Polynomial::from(Monomial::new(2, 2, 0)).scale(&r(3, 1))
        );
    }

    #[test]
    fn monomial_order_within_degree() {
        let names: Vec<String> = Monomial::of_degree(2).iter().map(|m| m.to_string()).collect();
        assert_eq!(names, ["x^2", "x*y", "x*z", "y^2", "y*z", "z^2"]);
        let mut sorted = Monomial::of_degree(2);
        sorted.sort();
        assert_eq!(sorted, Monomial::of_degree(2));
        assert!(Monomial::new(0, 0, 5) > Monomial::new(1, 0, 0));
    }

    #[test]
    fn rational_normalisation() {
        let c = r(6, -4);
        assert_eq!(format_rational(&c), "-3/2");
        assert!(c.denom() > &BigInt::from(0));
        assert_eq!(format_rational(&r(0, 7)), "0");
    }

    #[test]
    fn compose_substitutes() {
        // u -> x^2 + y^2 applied to u^2 + u
        let f = Polynomial::x().pow(2) + Polynomial::x();
        let u = Polynomial::x().pow(2) + Polynomial::y().pow(2);
        let got = f.compose(&[u.clone(), Polynomial::y(), Polynomial::z()]);
        assert_eq!(got, &u.pow(2) + &u);
    }
}
