//! The Poisson complex `(X^•, d_π = [π, ·])` split into finite pieces by
//! total polynomial degree.
//!
//! For a linear `π` the differential maps coefficients of degree `d` to
//! coefficients of degree `d`, so each `(q, d)` piece is finite and the
//! complex is the direct sum of the complexes `C^0_d → C^1_d → C^2_d → C^3_d`.

use std::collections::HashMap;

use crate::algebra::multivector::binomial3;
use crate::algebra::{lie_derivative, schouten, Monomial, MultiVector, Polynomial, Var};
use crate::error::{Error, Result};
use crate::linalg::{rank_kernel, SparseMatrix, SparseVec};

/// `d_π V = [π, V]`.
pub fn poisson_differential(pi: &MultiVector, v: &MultiVector) -> MultiVector {
    schouten(pi, v)
}

/// Reads `π = X ∧ ∂z` back into `X`; fails when `π` has a `∂x∧∂y` part or
/// `X` depends on `z`.
pub fn planar_field(pi: &MultiVector) -> Result<MultiVector> {
    if pi.degree() != 2 {
        return Err(Error::Contract("expected a bivector".into()));
    }
    if !pi.component(2).is_zero() {
        return Err(Error::Contract("bivector has a dx^dy component".into()));
    }
    let x = MultiVector::vector(pi.blade_coeff(0b101), pi.blade_coeff(0b110), Polynomial::zero());
    if x.components().iter().any(|c| !c.is_free_of(Var::Z)) {
        return Err(Error::Contract("planar field depends on z".into()));
    }
    Ok(x)
}

fn apply(x: &MultiVector, f: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero();
    for v in Var::ALL {
        out += &(x.component(v.index()) * &f.partial(v));
    }
    out
}

/// The Poisson differential of `π = X ∧ ∂z` (with `X = X^x ∂x + X^y ∂y`
/// independent of `z`) written out componentwise, without the bracket.
pub fn closed_form_differential(x_pi: &MultiVector, v: &MultiVector) -> Result<MultiVector> {
    if x_pi.degree() != 1
        || !x_pi.component(2).is_zero()
        || x_pi.components().iter().any(|c| !c.is_free_of(Var::Z))
    {
        return Err(Error::Contract(
            "expected a z-independent planar vector field".into(),
        ));
    }
    let (px, py) = (x_pi.component(0), x_pi.component(1));
    let dz = |p: &Polynomial| p.partial(Var::Z);
    let out = match v.degree() {
        0 => {
            let g = v.component(0);
            let mut out = x_pi.mul_function(&dz(g));
            *out.component_mut(2) -= &apply(x_pi, g);
            out
        }
        1 => {
            let (xx, xy, xz) = (v.component(0), v.component(1), v.component(2));
            let wx = apply(x_pi, xy) - xx * &py.partial(Var::X) - xy * &py.partial(Var::Y) + py * &dz(xz);
            let wy = -apply(x_pi, xx) + xx * &px.partial(Var::X) + xy * &px.partial(Var::Y) - px * &dz(xz);
            let wz = px * &dz(xy) - py * &dz(xx);
            MultiVector::bivector(wx, wy, wz)
        }
        2 => {
            let (wx, wy, wz) = (v.component(0), v.component(1), v.component(2));
            let div = px.partial(Var::X) + py.partial(Var::Y);
            let f = px * &dz(wx) + py * &dz(wy) + &div * wz - apply(x_pi, wz);
            MultiVector::trivector(f)
        }
        q => MultiVector::zero(q + 1),
    };
    Ok(out)
}

/// Ordered basis of the `(q, d)` piece: pairs `(component index, monomial)`
/// sorted by monomial, then component index in the cyclic basis.
#[derive(Debug, Clone)]
pub struct GradedBasis {
    q: usize,
    d: u32,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl GradedBasis {
    pub fn new(q: usize, d: u32) -> Self {
        let monomials = Monomial::of_degree(d);
        let index = monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        GradedBasis {
            q,
            d,
            monomials,
            index,
        }
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn len(&self) -> usize {
        binomial3(self.q) * self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The `(component index, monomial)` pair at position `i`.
    pub fn element(&self, i: usize) -> (usize, Monomial) {
        let k = binomial3(self.q);
        (i % k, self.monomials[i / k])
    }

    pub fn elements(&self) -> impl Iterator<Item = (usize, Monomial)> + '_ {
        (0..self.len()).map(|i| self.element(i))
    }

    pub fn multivector(&self, i: usize) -> MultiVector {
        let (c, m) = self.element(i);
        let mut v = MultiVector::zero(self.q);
        *v.component_mut(c) = Polynomial::from(m);
        v
    }

    /// Coordinates of `v`; `None` if `v` has the wrong cochain degree or a
    /// coefficient outside degree `d`.
    pub fn coords(&self, v: &MultiVector) -> Option<SparseVec> {
        if v.degree() != self.q {
            return None;
        }
        let k = binomial3(self.q);
        let mut pairs = Vec::new();
        for (c, poly) in v.components().iter().enumerate() {
            for (m, coeff) in poly.terms() {
                let pos = self.index.get(m)?;
                pairs.push((pos * k + c, coeff.clone()));
            }
        }
        Some(SparseVec::from_pairs(pairs))
    }

    pub fn from_coords(&self, coords: &SparseVec) -> MultiVector {
        let mut v = MultiVector::zero(self.q);
        for (i, c) in coords.entries() {
            let (comp, m) = self.element(*i);
            v.component_mut(comp).add_term(m, c.clone());
        }
        v
    }
}

/// Deterministic ordered basis of the `(q, d)` piece.
pub fn homogeneous_basis(q: usize, d: u32) -> GradedBasis {
    GradedBasis::new(q, d)
}

/// Matrix of a degree-preserving operator from the `(q_from, d)` piece to
/// the `(q_to, d)` piece.
fn operator_matrix<F>(q_from: usize, q_to: usize, d: u32, op: F) -> Result<SparseMatrix>
where
    F: Fn(&MultiVector) -> MultiVector,
{
    let src = GradedBasis::new(q_from, d);
    let dst = GradedBasis::new(q_to, d);
    let mut cols = Vec::with_capacity(src.len());
    for i in 0..src.len() {
        let image = op(&src.multivector(i));
        let coords = dst.coords(&image).ok_or(Error::DegreeViolation {
            q: q_from,
            d: d as usize,
        })?;
        cols.push(coords);
    }
    Ok(SparseMatrix::from_columns(dst.len(), cols))
}

/// `d_π` restricted to the `(q, d)` piece.
#[derive(Debug, Clone)]
pub struct DifferentialCell {
    pub q: usize,
    pub d: u32,
    /// Rows indexed by `GradedBasis(q + 1, d)`, columns by `GradedBasis(q, d)`.
    pub matrix: SparseMatrix,
}

pub fn differential_matrix(pi: &MultiVector, q: usize, d: u32) -> Result<DifferentialCell> {
    if pi.degree() != 2 {
        return Err(Error::Contract(
            "the Poisson differential needs a bivector".into(),
        ));
    }
    let matrix = operator_matrix(q, q + 1, d, |v| poisson_differential(pi, v))?;
    Ok(DifferentialCell { q, d, matrix })
}

/// Matrix of `L_T` on the `(q, d)` piece.
pub fn rotation_matrix(q: usize, d: u32) -> SparseMatrix {
    let t = MultiVector::rotation();
    operator_matrix(q, q, d, |v| lie_derivative(&t, v).expect("T is a vector field"))
        .expect("L_T preserves the degree")
}

/// Basis (in `GradedBasis(q, d)` coordinates) of `{V : L_T V = 0}`.
///
/// Each vector has a distinguished coordinate where it is 1 and every other
/// basis vector is 0, so kernel elements can be expanded by reading those
/// coordinates off.
pub fn invariant_basis(q: usize, d: u32) -> Vec<SparseVec> {
    rank_kernel(&rotation_matrix(q, d)).1
}

pub fn invariant_multivectors(q: usize, d: u32) -> Vec<MultiVector> {
    let basis = GradedBasis::new(q, d);
    invariant_basis(q, d)
        .iter()
        .map(|v| basis.from_coords(v))
        .collect()
}
