//! Exact elimination: reduced row echelon spans, kernels and solving.
//!
//! A reduced row echelon basis of a row space is unique, so every subspace
//! computed here has a canonical basis: sorted by pivot column, each pivot
//! entry 1, and every other basis vector zero in that column.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::vector::{zeros, SparseVec, Vector};
use crate::scalar::{Field, Scalar};

/// Incrementally maintained, fully reduced echelon basis with sparse rows.
#[derive(Debug, Clone)]
pub struct SpanBuilder {
    field: Field,
    ncols: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl SpanBuilder {
    pub fn new(field: Field, ncols: usize) -> Self {
        SpanBuilder { field, ncols, rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Reduces `v` against the current basis. Returns the coordinates of
    /// the projection (one per pivot, in pivot order) and the residual.
    fn reduce(&self, v: &SparseVec) -> (Vec<Scalar>, SparseVec) {
        let mut dense = v.to_dense(self.field, self.ncols);
        let mut coords = Vec::with_capacity(self.rows.len());
        for (p, row) in &self.rows {
            let c = v.get(*p).cloned().unwrap_or_else(|| self.field.zero());
            if !c.is_zero() {
                row.add_scaled_into(&-c.clone(), &mut dense);
            }
            coords.push(c);
        }
        (coords, SparseVec::from_dense(&dense))
    }

    /// Adds `v` to the span; returns `true` when the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let (_, residual) = self.reduce(v);
        let Some((pivot, lead)) = residual.entries().first().cloned() else {
            return false;
        };
        let row = residual.scaled(&lead.inverse().expect("nonzero"));
        for other in self.rows.values_mut() {
            if let Some(c) = other.get(pivot).cloned() {
                *other = other.plus_scaled(&-c, &row);
            }
        }
        self.rows.insert(pivot, row);
        true
    }

    pub fn insert_dense(&mut self, v: &[Scalar]) -> bool {
        self.insert(&SparseVec::from_dense(v))
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).1.is_zero()
    }

    /// Coordinates in the echelon basis, or `None` outside the span.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Scalar>> {
        let (c, r) = self.reduce(v);
        r.is_zero().then_some(c)
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.keys().copied().collect()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.values()
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace { field: self.field, ambient: self.ncols, span: self }
    }
}

/// A subspace of `field^ambient` with its canonical echelon basis.
#[derive(Debug, Clone)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    span: SpanBuilder,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        SpanBuilder::new(field, ambient).into_subspace()
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Self::span_of(field, ambient, (0..ambient).map(|i| SparseVec::single(i, field.one())))
    }

    pub fn span_of<I>(field: Field, ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = SparseVec>,
    {
        let mut b = SpanBuilder::new(field, ambient);
        for v in vectors {
            b.insert(&v);
        }
        b.into_subspace()
    }

    pub fn span_of_dense(field: Field, ambient: usize, vectors: &[Vector]) -> Self {
        Self::span_of(field, ambient, vectors.iter().map(|v| SparseVec::from_dense(v)))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.span.rank()
    }

    pub fn basis(&self) -> Vec<SparseVec> {
        self.span.rows().cloned().collect()
    }

    pub fn basis_dense(&self) -> Vec<Vector> {
        self.span.rows().map(|r| r.to_dense(self.field, self.ambient)).collect()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.span.pivots()
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.span.contains(v)
    }

    pub fn contains_dense(&self, v: &[Scalar]) -> bool {
        self.contains(&SparseVec::from_dense(v))
    }

    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Scalar>> {
        self.span.coordinates(v)
    }

    pub fn coordinates_dense(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.coordinates(&SparseVec::from_dense(v))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.span.rows().all(|r| self.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut b = self.span.clone();
        for r in other.span.rows() {
            b.insert(r);
        }
        b.into_subspace()
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // Solve Σ a_i u_i = Σ b_j w_j through the kernel of [U; -W].
        let us = self.basis();
        let ws = other.basis();
        let mut cols: Vec<SparseVec> = us.clone();
        cols.extend(ws.iter().map(|w| w.scaled(&-self.field.one())));
        let kernel = kernel_of_columns(self.field, self.ambient, &cols);
        let vectors = kernel.into_iter().map(|k| {
            let mut acc = zeros(self.field, self.ambient);
            for (i, u) in us.iter().enumerate() {
                u.add_scaled_into(&k[i], &mut acc);
            }
            SparseVec::from_dense(&acc)
        });
        Subspace::span_of(self.field, self.ambient, vectors)
    }

    pub fn equals(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.contains_subspace(other)
    }
}

/// Kernel of the matrix whose columns are `cols` (each of length `nrows`):
/// all `x` with `Σ x_i cols_i = 0`, as a canonical echelon basis.
pub fn kernel_of_columns(field: Field, nrows: usize, cols: &[SparseVec]) -> Vec<Vector> {
    let n = cols.len();
    let mut rows: Vec<Vector> = vec![zeros(field, n); nrows];
    for (c, col) in cols.iter().enumerate() {
        for (r, v) in col.iter() {
            rows[*r][c] = v.clone();
        }
    }
    nullspace(field, &rows, n)
}

/// Row reduction of dense rows; returns (reduced nonzero rows, pivots).
pub fn rref(field: Field, rows: &[Vector], ncols: usize) -> (Vec<Vector>, Vec<usize>) {
    let mut m: Vec<Vector> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        // Leftmost column first; among candidate rows the first one wins.
        let Some(found) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, found);
        let inv = m[r][c].inverse().expect("nonzero pivot");
        for x in m[r].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x -= &(&f * p);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    let _ = field;
    (m, pivots)
}

/// `{x : M x = 0}` for the matrix with the given rows.
pub fn nullspace(field: Field, rows: &[Vector], ncols: usize) -> Vec<Vector> {
    let (r, pivots) = rref(field, rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let basis: Vec<Vector> = (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut x = zeros(field, ncols);
            x[free] = field.one();
            for (row, &p) in r.iter().zip(&pivots) {
                x[p] = -row[free].clone();
            }
            x
        })
        .collect();
    // Canonical echelon form of the kernel.
    rref(field, &basis, ncols).0
}

/// Result of [`solve_exact`].
#[derive(Debug, Clone)]
pub struct Solution {
    pub rank: usize,
    /// Reduced row echelon basis of the row space.
    pub row_space: Vec<Vector>,
    pub pivots: Vec<usize>,
    /// A solution of `M x = target`, when a target was given.
    pub particular: Option<Vector>,
    /// Basis of `{x : M x = 0}`.
    pub kernel: Vec<Vector>,
}

/// Reduces the matrix with rows `rows`; with a target, also solves
/// `M x = target`. An inconsistent system is reported as
/// [`Error::Inconsistent`], never as an empty solution.
pub fn solve_exact(field: Field, rows: &[Vector], target: Option<&[Scalar]>) -> Result<Solution> {
    let ncols = rows.first().map_or(0, Vec::len);
    for r in rows {
        if r.len() != ncols {
            return Err(Error::Dimension { expected: ncols, got: r.len() });
        }
    }
    let (row_space, pivots) = rref(field, rows, ncols);
    let kernel = nullspace(field, rows, ncols);
    let particular = match target {
        None => None,
        Some(b) => {
            if b.len() != rows.len() {
                return Err(Error::Dimension { expected: rows.len(), got: b.len() });
            }
            let aug: Vec<Vector> = rows
                .iter()
                .zip(b)
                .map(|(r, bi)| {
                    let mut v = r.clone();
                    v.push(bi.clone());
                    v
                })
                .collect();
            let (red, piv) = rref(field, &aug, ncols + 1);
            if piv.last() == Some(&ncols) {
                return Err(Error::Inconsistent);
            }
            let mut x = zeros(field, ncols);
            for (row, &p) in red.iter().zip(&piv) {
                x[p] = row[ncols].clone();
            }
            Some(x)
        }
    };
    Ok(Solution { rank: row_space.len(), row_space, pivots, particular, kernel })
}

/// Eigenspace `{v : M v = λ v}` of a square operator.
pub fn eigenspace(op: &crate::linalg::maps::LinearMap, lambda: &Scalar) -> Subspace {
    let f = op.field();
    let n = op.domain();
    let mut rows = op.to_rows();
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] -= lambda;
    }
    let k = nullspace(f, &rows, n);
    Subspace::span_of_dense(f, n, &k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(f: Field, xs: &[i64]) -> Vector {
        xs.iter().map(|&x| f.int(x)).collect()
    }

    #[test]
    fn identity_has_full_rank() {
        let f = Field::Rational;
        let s = solve_exact(f, &[v(f, &[1, 0]), v(f, &[0, 1])], None).unwrap();
        assert_eq!(s.rank, 2);
        assert!(s.kernel.is_empty());
    }

    #[test]
    fn dependent_rows_rank_one() {
        let f = Field::Rational;
        let s = solve_exact(f, &[v(f, &[2, 4]), v(f, &[1, 2])], None).unwrap();
        assert_eq!(s.rank, 1);
        assert_eq!(s.row_space, vec![v(f, &[1, 2])]);
        assert_eq!(s.kernel, vec![vec![f.one(), f.ratio(-1, 2)]]);
    }

    #[test]
    fn inconsistent_is_distinct() {
        let f = Field::Rational;
        let rows = [v(f, &[1, 1]), v(f, &[2, 2])];
        assert!(matches!(
            solve_exact(f, &rows, Some(&v(f, &[1, 3]))),
            Err(Error::Inconsistent)
        ));
        let s = solve_exact(f, &rows, Some(&v(f, &[1, 2]))).unwrap();
        assert_eq!(s.particular.unwrap(), v(f, &[1, 0]));
    }

    #[test]
    fn span_builder_matches_dense_rref() {
        let f = Field::Rational;
        let rows = [v(f, &[0, 2, 4, 1]), v(f, &[1, 1, 0, 0]), v(f, &[1, 2, 2, 0]), v(f, &[0, 0, 0, 3])];
        let (dense, piv) = rref(f, &rows, 4);
        let sub = Subspace::span_of_dense(f, 4, &rows);
        assert_eq!(sub.basis_dense(), dense);
        assert_eq!(sub.pivots(), piv);
        let c = sub.coordinates_dense(&v(f, &[1, 3, 4, 1])).unwrap();
        let mut back = zeros(f, 4);
        for (ci, b) in c.iter().zip(sub.basis_dense()) {
            crate::linalg::vector::axpy(&mut back, ci, &b);
        }
        assert_eq!(back, v(f, &[1, 3, 4, 1]));
    }

    #[test]
    fn intersection_of_planes() {
        let f = Field::Rational;
        let a = Subspace::span_of_dense(f, 3, &[v(f, &[1, 0, 0]), v(f, &[0, 1, 0])]);
        let b = Subspace::span_of_dense(f, 3, &[v(f, &[0, 1, 0]), v(f, &[0, 0, 1])]);
        let i = a.intersection(&b);
        assert_eq!(i.basis_dense(), vec![v(f, &[0, 1, 0])]);
        assert_eq!(a.sum(&b).dim(), 3);
    }

    #[test]
    fn works_over_prime_field() {
        let f = Field::Prime(5);
        // (1,2) and (3,1): 3*(1,2) = (3,6) = (3,1) mod 5.
        let s = solve_exact(f, &[v(f, &[1, 2]), v(f, &[3, 1])], None).unwrap();
        assert_eq!(s.rank, 1);
    }
}
