//! Cohomology dimensions and canonical representatives per `(q, d)`.
//!
//! Representatives are chosen deterministically: every kernel vector is
//! reduced modulo the echelon form of the image (so it vanishes at the image
//! pivots), and the reduced vectors are put in reduced row echelon form.
//! Pivots are the smallest basis index, i.e. monomial order first, then the
//! cyclic component index.

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::algebra::{lie_derivative, MultiVector, Rational};
use crate::complex::{differential_matrix, invariant_basis, GradedBasis};
use crate::error::{Error, Result};
use crate::lie::AlgebraKind;
use crate::linalg::{rank_kernel, rank_kernel_with_free, solve, Echelon, SparseMatrix, SparseVec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyCell {
    pub q: usize,
    pub d: u32,
    pub dim_cochains: usize,
    pub rank_in: usize,
    pub rank_out: usize,
    pub dim_h: usize,
    pub representatives: Vec<MultiVector>,
}

/// Rank of the incoming map, rank of the outgoing map and canonical
/// complement of the image inside the kernel, all in local coordinates.
fn local_cohomology(
    incoming: Option<&SparseMatrix>,
    outgoing: &SparseMatrix,
) -> (usize, usize, Vec<SparseVec>) {
    let (rank_out, kernel) = rank_kernel(outgoing);
    let mut image = Echelon::new();
    if let Some(m) = incoming {
        for c in m.columns() {
            image.insert(c.clone());
        }
    }
    let mut complement = Echelon::new();
    for k in &kernel {
        complement.insert(image.reduce(k));
    }
    let reps = complement.rref();
    debug_assert_eq!(reps.len() + image.rank(), kernel.len());
    (image.rank(), rank_out, reps)
}

fn build_cell(q: usize, d: u32, incoming: Option<&SparseMatrix>, outgoing: &SparseMatrix) -> CohomologyCell {
    let basis = GradedBasis::new(q, d);
    let (rank_in, rank_out, reps) = local_cohomology(incoming, outgoing);
    CohomologyCell {
        q,
        d,
        dim_cochains: basis.len(),
        rank_in,
        rank_out,
        dim_h: reps.len(),
        representatives: reps.iter().map(|r| basis.from_coords(r)).collect(),
    }
}

/// The four differentials `C^q_d → C^{q+1}_d`, `q = 0..=3`.
fn differentials(pi: &MultiVector, d: u32) -> Result<Vec<SparseMatrix>> {
    (0..=3)
        .map(|q| Ok(differential_matrix(pi, q, d)?.matrix))
        .collect()
}

/// Cohomology of `(C^•_d, d_π)` at cochain degree `q`.
pub fn cohomology_cell(pi: &MultiVector, q: usize, d: u32) -> Result<CohomologyCell> {
    if q > 3 {
        return Err(Error::Contract(format!("cochain degree {q} out of range")));
    }
    let outgoing = differential_matrix(pi, q, d)?.matrix;
    let incoming = match q {
        0 => None,
        _ => Some(differential_matrix(pi, q - 1, d)?.matrix),
    };
    Ok(build_cell(q, d, incoming.as_ref(), &outgoing))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyTable {
    pub kind: Option<AlgebraKind>,
    pub dmax: u32,
    /// Ordered by `q`, then `d`.
    pub cells: Vec<CohomologyCell>,
    pub totals: [usize; 4],
    /// True when the three highest degrees contribute nothing.
    pub stable: bool,
}

impl CohomologyTable {
    pub fn cell(&self, q: usize, d: u32) -> &CohomologyCell {
        assert!(q <= 3 && d <= self.dmax, "cell ({q}, {d}) outside the table");
        &self.cells[q * (self.dmax as usize + 1) + d as usize]
    }

    /// `dim H^q_d` for `d = 0..=dmax`.
    pub fn dims(&self, q: usize) -> Vec<usize> {
        (0..=self.dmax).map(|d| self.cell(q, d).dim_h).collect()
    }

    fn assemble(kind: Option<AlgebraKind>, dmax: u32, mut by_degree: Vec<Vec<CohomologyCell>>) -> Self {
        let mut cells = Vec::with_capacity(4 * by_degree.len());
        for q in 0..=3 {
            for row in by_degree.iter_mut() {
                cells.push(std::mem::replace(
                    &mut row[q],
                    CohomologyCell {
                        q,
                        d: 0,
                        dim_cochains: 0,
                        rank_in: 0,
                        rank_out: 0,
                        dim_h: 0,
                        representatives: Vec::new(),
                    },
                ));
            }
        }
        let mut totals = [0; 4];
        for c in &cells {
            totals[c.q] += c.dim_h;
        }
        let top = dmax.saturating_sub(2);
        let stable = cells.iter().filter(|c| c.d >= top).all(|c| c.dim_h == 0);
        CohomologyTable {
            kind,
            dmax,
            cells,
            totals,
            stable,
        }
    }
}

/// All cells `q = 0..=3`, `d = 0..=dmax`. Degrees are computed in parallel.
pub fn cohomology_table(pi: &MultiVector, dmax: u32) -> Result<CohomologyTable> {
    let by_degree = (0..=dmax)
        .into_par_iter()
        .map(|d| {
            let ds = differentials(pi, d)?;
            Ok((0..=3)
                .map(|q| build_cell(q, d, q.checked_sub(1).map(|p| &ds[p]), &ds[q]))
                .collect())
        })
        .collect::<Result<Vec<Vec<CohomologyCell>>>>()?;
    Ok(CohomologyTable::assemble(None, dmax, by_degree))
}

/// [`cohomology_table`] for a registry entry, labelled with the kind.
pub fn algebra_table(kind: &AlgebraKind, dmax: u32) -> Result<CohomologyTable> {
    let mut t = cohomology_table(&kind.poisson_bivector(), dmax)?;
    t.kind = Some(kind.clone());
    Ok(t)
}

/// Matrix of `d_π` from the invariant part of `(q, d)` to the invariant part
/// of `(q + 1, d)`, in invariant-basis coordinates.
fn restricted(full: &SparseMatrix, src: &[(usize, SparseVec)], dst: &[(usize, SparseVec)]) -> SparseMatrix {
    let cols = src
        .iter()
        .map(|(_, v)| {
            let image = full.mul_vec(v);
            SparseVec::from_pairs(dst.iter().enumerate().map(|(k, (f, _))| (k, image.get(*f))))
        })
        .collect();
    SparseMatrix::from_columns(dst.len(), cols)
}

/// Cohomology of the subcomplex of `T`-invariant multivector fields,
/// `T = -y ∂x + x ∂y`.
pub fn invariant_cohomology(pi: &MultiVector, q: usize, d: u32) -> Result<CohomologyCell> {
    if q > 3 {
        return Err(Error::Contract(format!("cochain degree {q} out of range")));
    }
    if !lie_derivative(&MultiVector::rotation(), pi)?.is_zero() {
        return Err(Error::NotInvariant);
    }
    let inv = |r: usize| -> Vec<(usize, SparseVec)> {
        let m = crate::complex::rotation_matrix(r, d);
        rank_kernel_with_free(&m).1
    };
    let here = inv(q);
    debug_assert_eq!(here.len(), invariant_basis(q, d).len());
    let outgoing = if q == 3 {
        SparseMatrix::zeros(0, here.len())
    } else {
        let full = differential_matrix(pi, q, d)?.matrix;
        restricted(&full, &here, &inv(q + 1))
    };
    let incoming = match q {
        0 => None,
        _ => {
            let full = differential_matrix(pi, q - 1, d)?.matrix;
            Some(restricted(&full, &inv(q - 1), &here))
        }
    };
    let (rank_in, rank_out, reps) = local_cohomology(incoming.as_ref(), &outgoing);
    let basis = GradedBasis::new(q, d);
    let to_full = |local: &SparseVec| {
        let mut acc = SparseVec::new();
        for (k, c) in local.entries() {
            acc = acc.axpy(c, &here[*k].1);
        }
        basis.from_coords(&acc)
    };
    Ok(CohomologyCell {
        q,
        d,
        dim_cochains: here.len(),
        rank_in,
        rank_out,
        dim_h: reps.len(),
        representatives: reps.iter().map(to_full).collect(),
    })
}

/// Some `V` with `d_π V = target`, or `None` when `target` is not exact.
/// `target` must be homogeneous of cochain degree at least 1.
pub fn coboundary_witness(pi: &MultiVector, target: &MultiVector) -> Result<Option<MultiVector>> {
    let q = target.degree();
    if q == 0 || q > 3 {
        return Err(Error::Contract(
            "witness search needs cochain degree 1..=3".into(),
        ));
    }
    let d = target.homogeneous_degree().unwrap_or(0);
    let coords = GradedBasis::new(q, d)
        .coords(target)
        .ok_or_else(|| Error::Contract("target is not homogeneous".into()))?;
    let m = differential_matrix(pi, q - 1, d)?.matrix;
    Ok(solve(&m, &coords).map(|x| GradedBasis::new(q - 1, d).from_coords(&x)))
}

/// A solution `(i, j)` of `i + tau * j = c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Resonance {
    pub i: u64,
    pub j: u64,
}

/// All `(i, j)` with `0 <= i, j < dmax` and `i + tau * j = c`, by increasing `j`.
pub fn resonances(tau: &Rational, c: &Rational, dmax: u64) -> Vec<Resonance> {
    let mut out = Vec::new();
    for j in 0..dmax {
        let i = c - tau * Rational::from_integer(j.into());
        if !i.is_integer() || i.is_negative() {
            continue;
        }
        if let Some(i) = i.to_integer().to_u64() {
            if i < dmax {
                out.push(Resonance { i, j });
            }
        }
    }
    out.sort_by_key(|r| (r.j, r.i));
    out
}

/// Closed form of the resonance set of `i + tau * j = 1` (the case analysis
/// used to cross-check [`resonances`]).
pub fn unit_resonances_by_cases(tau: &Rational, dmax: u64) -> Vec<Resonance> {
    let mut out = vec![Resonance { i: 1, j: 0 }];
    let (n, q) = (tau.numer(), tau.denom());
    if tau.is_positive() {
        // tau = 1/m gives the extra solution (0, m)
        if n == &1.into() {
            if let Some(m) = q.to_u64() {
                if m < dmax {
                    out.push(Resonance { i: 0, j: m });
                }
            }
        }
    } else if !tau.is_zero() {
        // tau = -p/q: (1 + k p, k q) for every k
        let p = (-n).to_u64().unwrap_or(u64::MAX);
        let q = q.to_u64().unwrap_or(u64::MAX);
        debug_assert_eq!(p.gcd(&q), 1);
        let mut k = 1u64;
        while k.saturating_mul(q) < dmax && 1 + k.saturating_mul(p) < dmax {
            out.push(Resonance {
                i: 1 + k * p,
                j: k * q,
            });
            k += 1;
        }
    }
    out.retain(|r| r.i < dmax && r.j < dmax);
    out.sort_by_key(|r| (r.j, r.i));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational;
    use crate::expr::parse_multivector;

    fn mv(s: &str) -> MultiVector {
        parse_multivector(s).unwrap()
    }

    fn pairs(rs: &[Resonance]) -> Vec<(u64, u64)> {
        rs.iter().map(|r| (r.i, r.j)).collect()
    }

    #[test]
    fn heisenberg_casimir() {
        let pi = AlgebraKind::Heisenberg.poisson_bivector();
        let cell = cohomology_cell(&pi, 0, 1).unwrap();
        assert_eq!(cell.dim_h, 1);
        assert_eq!(cell.representatives, [mv("z")]);
    }

    #[test]
    fn book_tau_one_degree_one_vectors() {
        let pi = AlgebraKind::book(rational(1, 1)).unwrap().poisson_bivector();
        let cell = cohomology_cell(&pi, 1, 1).unwrap();
        assert_eq!(cell.dim_h, 3);
        assert_eq!(cell.representatives, [mv("x*dy"), mv("y*dx"), mv("y*dy")]);
    }

    #[test]
    fn so3_first_cohomology_vanishes() {
        let pi = AlgebraKind::So3.poisson_bivector();
        for d in 0..=4 {
            assert_eq!(cohomology_cell(&pi, 1, d).unwrap().dim_h, 0);
        }
    }

    #[test]
    fn abelian_everything_survives() {
        let t = cohomology_table(&AlgebraKind::Abelian.poisson_bivector(), 2).unwrap();
        for c in &t.cells {
            assert_eq!(c.dim_h, c.dim_cochains);
        }
        assert!(!t.stable);
    }

    #[test]
    fn table_layout() {
        let t = algebra_table(&AlgebraKind::spiral(rational(1, 1)).unwrap(), 4).unwrap();
        assert_eq!(t.cells.len(), 20);
        for q in 0..=3 {
            for d in 0..=4 {
                assert_eq!((t.cell(q, d).q, t.cell(q, d).d), (q, d));
            }
        }
        assert_eq!(t.totals, [1, 2, 1, 0]);
        assert!(t.stable);
    }

    #[test]
    fn invariant_cells() {
        let pi = AlgebraKind::Euclidean.poisson_bivector();
        let c = invariant_cohomology(&pi, 0, 2).unwrap();
        assert_eq!(c.representatives, [mv("x^2 + y^2")]);
        let c = invariant_cohomology(&pi, 1, 1).unwrap();
        assert_eq!(c.representatives, [mv("x*dx + y*dy")]);
        let aff = AlgebraKind::AffXR.poisson_bivector();
        assert_eq!(invariant_cohomology(&aff, 0, 1), Err(Error::NotInvariant));
    }

    #[test]
    fn euler_bivector_is_exact_for_tau_one() {
        let pi = AlgebraKind::book(rational(1, 1)).unwrap().poisson_bivector();
        let target = mv("x*dx^dz + y*dy^dz");
        let w = coboundary_witness(&pi, &target).unwrap().expect("exact");
        assert_eq!(crate::complex::poisson_differential(&pi, &w), target);
        assert!(coboundary_witness(&pi, &mv("y*dx^dz")).unwrap().is_none());
    }

    #[test]
    fn resonance_examples() {
        let r = |t: Rational, d| pairs(&resonances(&t, &rational(1, 1), d));
        assert_eq!(r(rational(1, 2), 10), [(1, 0), (0, 2)]);
        assert_eq!(r(rational(3, 5), 10), [(1, 0)]);
        assert_eq!(r(rational(-2, 3), 12), [(1, 0), (3, 3), (5, 6), (7, 9)]);
    }

    #[test]
    fn resonances_match_case_analysis() {
        for (n, d) in [(1, 1), (1, 2), (1, 5), (3, 5), (-1, 1), (-2, 3), (-1, 4)] {
            let tau = rational(n, d);
            assert_eq!(
                resonances(&tau, &rational(1, 1), 20),
                unit_resonances_by_cases(&tau, 20),
                "tau = {n}/{d}"
            );
        }
    }
}
