//! Exact sparse linear algebra over the rationals.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::Rational;

/// Sparse vector: strictly increasing indices, no stored zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Rational)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec::default()
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    /// Builds from unordered `(index, value)` pairs, summing duplicates.
    pub fn from_pairs<I: IntoIterator<Item = (usize, Rational)>>(pairs: I) -> Self {
        let mut map: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, v) in pairs {
            *map.entry(i).or_insert_with(Rational::zero) += v;
        }
        SparseVec {
            entries: map.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    pub fn unit(i: usize) -> Self {
        SparseVec {
            entries: vec![(i, Rational::one())],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> Rational {
        match self.entries.binary_search_by_key(&i, |(k, _)| *k) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn leading(&self) -> Option<(usize, &Rational)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn to_dense(&self, len: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &Rational, other: &SparseVec) -> SparseVec {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, u)), Some((j, w))) => {
                    if i < j {
                        out.push((*i, u.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, w * c));
                        b.next();
                    } else {
                        let s = u + w * c;
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, u)), None) => {
                    out.push((*i, u.clone()));
                    a.next();
                }
                (None, Some((j, w))) => {
                    out.push((*j, w * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    pub fn dot(&self, other: &SparseVec) -> Rational {
        let mut acc = Rational::zero();
        let (mut a, mut b) = (0, 0);
        while a < self.entries.len() && b < other.entries.len() {
            let (i, u) = &self.entries[a];
            let (j, w) = &other.entries[b];
            match i.cmp(j) {
                std::cmp::Ordering::Less => a += 1,
                std::cmp::Ordering::Greater => b += 1,
                std::cmp::Ordering::Equal => {
                    acc += u * w;
                    a += 1;
                    b += 1;
                }
            }
        }
        acc
    }
}

/// Column-major sparse matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    cols: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            nrows,
            cols: vec![SparseVec::new(); ncols],
        }
    }

    pub fn from_columns(nrows: usize, cols: Vec<SparseVec>) -> Self {
        debug_assert!(cols
            .iter()
            .all(|c| c.entries.last().is_none_or(|(i, _)| *i < nrows)));
        SparseMatrix { nrows, cols }
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let cols = (0..ncols)
            .map(|j| SparseVec::from_pairs((0..nrows).map(|i| (i, rows[i][j].clone()))))
            .collect();
        SparseMatrix { nrows, cols }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.cols[j].get(i)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SparseVec::is_zero)
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.nrows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in &col.entries {
                rows[*i].push((j, v.clone()));
            }
        }
        SparseMatrix {
            nrows: self.cols.len(),
            cols: rows.into_iter().map(|entries| SparseVec { entries }).collect(),
        }
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (j, c) in &v.entries {
            out = out.axpy(c, &self.cols[*j]);
        }
        out
    }

    /// `self * other`; panics on a shape mismatch.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols(), other.nrows, "shape mismatch");
        SparseMatrix {
            nrows: self.nrows,
            cols: other.cols.iter().map(|c| self.mul_vec(c)).collect(),
        }
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(
            (self.nrows, self.ncols()),
            (other.nrows, other.ncols()),
            "shape mismatch"
        );
        let minus = -Rational::one();
        SparseMatrix {
            nrows: self.nrows,
            cols: self
                .cols
                .iter()
                .zip(&other.cols)
                .map(|(a, b)| a.axpy(&minus, b))
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new();
        for c in &self.cols {
            ech.insert(c.clone());
        }
        ech.rank()
    }
}

/// Row echelon form built one vector at a time. Each stored vector has
/// leading coefficient 1 at its pivot, and pivots are distinct.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn is_pivot(&self, i: usize) -> bool {
        self.rows.contains_key(&i)
    }

    /// The unique vector of `v + span` vanishing at every pivot.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        let mut from = 0usize;
        loop {
            let hit = v.entries[from..]
                .iter()
                .position(|(i, _)| self.rows.contains_key(i))
                .map(|p| p + from);
            let Some(pos) = hit else {
                return v;
            };
            let (p, c) = v.entries[pos].clone();
            v = v.axpy(&-c, &self.rows[&p]);
            // entries before position `pos` are untouched by the update
            from = pos;
            debug_assert!(v.entries.get(pos).is_none_or(|(i, _)| *i > p));
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns false if it was already there.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let r = self.reduce(&v);
        match r.leading() {
            None => false,
            Some((p, lead)) => {
                let inv = lead.recip();
                let r = r.scale(&inv);
                self.rows.insert(p, r);
                true
            }
        }
    }

    /// Reduced row echelon basis, ordered by pivot.
    pub fn rref(&self) -> Vec<SparseVec> {
        let pivots: Vec<usize> = self.rows.keys().copied().collect();
        let mut done: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for &p in pivots.iter().rev() {
            let mut row = self.rows[&p].clone();
            for (&q, other) in done.iter() {
                let c = row.get(q);
                if !c.is_zero() {
                    row = row.axpy(&-c, other);
                }
            }
            done.insert(p, row);
        }
        done.into_values().collect()
    }
}

/// Rank and a kernel basis of `m`. The kernel basis is the canonical one
/// read off the reduced row echelon form: one vector per free column `f`,
/// equal to `e_f` minus the pivot-column combination.
pub fn rank_kernel(m: &SparseMatrix) -> (usize, Vec<SparseVec>) {
    let (rank, kernel) = rank_kernel_with_free(m);
    (rank, kernel.into_iter().map(|(_, v)| v).collect())
}

/// Like [`rank_kernel`], also returning the free column of each kernel
/// vector. A kernel element `w` equals `Σ w[f] * v_f`.
pub fn rank_kernel_with_free(m: &SparseMatrix) -> (usize, Vec<(usize, SparseVec)>) {
    let rows = m.transpose();
    let mut ech = Echelon::new();
    for r in rows.columns() {
        ech.insert(r.clone());
    }
    let rref = ech.rref();
    let pivots: Vec<usize> = rref.iter().map(|r| r.leading().unwrap().0).collect();
    let mut kernel = Vec::new();
    for f in 0..m.ncols() {
        if pivots.binary_search(&f).is_ok() {
            continue;
        }
        let mut pairs = vec![(f, Rational::one())];
        for (row, &p) in rref.iter().zip(&pivots) {
            let c = row.get(f);
            if !c.is_zero() {
                pairs.push((p, -c));
            }
        }
        kernel.push((f, SparseVec::from_pairs(pairs)));
    }
    (rref.len(), kernel)
}

/// A solution of `m x = b` (free variables set to zero), or `None`.
pub fn solve(m: &SparseMatrix, b: &SparseVec) -> Option<SparseVec> {
    let n = m.ncols();
    let mut rows: Vec<Vec<(usize, Rational)>> = m
        .transpose()
        .columns()
        .iter()
        .map(|r| r.entries().to_vec())
        .collect();
    for (i, v) in b.entries() {
        if *i >= rows.len() {
            return None;
        }
        rows[*i].push((n, v.clone()));
    }
    let mut ech = Echelon::new();
    for r in rows {
        ech.insert(SparseVec { entries: r });
    }
    let mut x = Vec::new();
    for row in ech.rref() {
        let (p, _) = row.leading().unwrap();
        if p == n {
            return None;
        }
        let v = row.get(n);
        if !v.is_zero() {
            x.push((p, v));
        }
    }
    Some(SparseVec { entries: x })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational;

    fn dense(rows: &[&[i64]]) -> SparseMatrix {
        let rows: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| rational(v, 1)).collect())
            .collect();
        SparseMatrix::from_dense(&rows)
    }

    #[test]
    fn identity_has_full_rank() {
        let (rank, kernel) = rank_kernel(&dense(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]));
        assert_eq!(rank, 3);
        assert!(kernel.is_empty());
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let (rank, kernel) = rank_kernel(&SparseMatrix::zeros(4, 5));
        assert_eq!(rank, 0);
        assert_eq!(kernel.len(), 5);
    }

    #[test]
    fn rank_one_two_by_two() {
        let m = dense(&[&[1, 2], &[2, 4]]);
        let (rank, kernel) = rank_kernel(&m);
        assert_eq!(rank, 1);
        assert_eq!(kernel.len(), 1);
        // the kernel is spanned by (2, -1)
        let k = &kernel[0];
        assert_eq!(k.get(0) * rational(-1, 1), k.get(1) * rational(2, 1));
        assert!(m.mul_vec(k).is_zero());
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = dense(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let (rank, kernel) = rank_kernel(&m);
        assert_eq!(rank + kernel.len(), 4);
        for k in &kernel {
            assert!(m.mul_vec(k).is_zero());
        }
    }

    #[test]
    fn reduce_is_independent_of_insertion_order() {
        let a = SparseVec::from_dense(&[rational(1, 1), rational(1, 1), rational(0, 1)]);
        let b = SparseVec::from_dense(&[rational(1, 1), rational(0, 1), rational(1, 1)]);
        let v = SparseVec::from_dense(&[rational(3, 1), rational(5, 2), rational(7, 1)]);
        let mut e1 = Echelon::new();
        e1.insert(a.clone());
        e1.insert(b.clone());
        let mut e2 = Echelon::new();
        e2.insert(b);
        e2.insert(a);
        assert_eq!(e1.reduce(&v), e2.reduce(&v));
        assert_eq!(e1.rref(), e2.rref());
    }

    #[test]
    fn solves_consistent_systems() {
        let m = dense(&[&[1, 2, 0], &[0, 1, 1]]);
        let b = SparseVec::from_dense(&[rational(3, 1), rational(2, 1)]);
        let x = solve(&m, &b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
        let m = dense(&[&[1, 1], &[2, 2]]);
        let b = SparseVec::from_dense(&[rational(1, 1), rational(3, 1)]);
        assert!(solve(&m, &b).is_none());
    }

    #[test]
    fn product_and_transpose() {
        let a = dense(&[&[1, 2], &[0, 1]]);
        let b = dense(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b), dense(&[&[2, 1], &[1, 0]]));
        assert_eq!(a.transpose(), dense(&[&[1, 0], &[2, 1]]));
        assert!(a.sub(&a).is_zero());
    }
}
