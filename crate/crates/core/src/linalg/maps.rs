//! Linear, bilinear and trilinear maps stored as sparse structure constants.
//!
//! Each map keeps, for every tuple of basis indices, the sparse image of that
//! tuple in the codomain basis. Zero images store nothing.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::vector::{zeros, SparseVec, Vector};
use crate::scalar::{Field, Scalar};

fn check_len(v: &[Scalar], expected: usize) -> Result<()> {
    if v.len() != expected {
        return Err(Error::Dimension { expected, got: v.len() });
    }
    Ok(())
}

fn check_index(index: usize, dim: usize) -> Result<()> {
    if index >= dim {
        return Err(Error::IndexOutOfRange { index, dim });
    }
    Ok(())
}

/// Linear map; `columns[i]` is the image of the i-th domain basis vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    field: Field,
    domain: usize,
    codomain: usize,
    columns: Vec<SparseVec>,
}

impl LinearMap {
    pub fn zero(field: Field, domain: usize, codomain: usize) -> Self {
        LinearMap { field, domain, codomain, columns: vec![SparseVec::new(); domain] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        LinearMap {
            field,
            domain: n,
            codomain: n,
            columns: (0..n).map(|i| SparseVec::single(i, field.one())).collect(),
        }
    }

    pub fn from_columns(field: Field, codomain: usize, columns: Vec<SparseVec>) -> Result<Self> {
        for c in &columns {
            if let Some(m) = c.max_index() {
                check_index(m, codomain)?;
            }
        }
        Ok(LinearMap { field, domain: columns.len(), codomain, columns })
    }

    /// Builds from dense images of the basis vectors.
    pub fn from_dense_columns(field: Field, codomain: usize, cols: &[Vector]) -> Result<Self> {
        let columns = cols
            .iter()
            .map(|c| check_len(c, codomain).map(|_| SparseVec::from_dense(c)))
            .collect::<Result<Vec<_>>>()?;
        Ok(LinearMap { field, domain: cols.len(), codomain, columns })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn domain(&self) -> usize {
        self.domain
    }

    pub fn codomain(&self) -> usize {
        self.codomain
    }

    pub fn column(&self, i: usize) -> &SparseVec {
        &self.columns[i]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vector> {
        check_len(v, self.domain)?;
        let mut out = zeros(self.field, self.codomain);
        for (i, c) in v.iter().enumerate() {
            self.columns[i].add_scaled_into(c, &mut out);
        }
        Ok(out)
    }

    /// Entry in row `r`, column `c`.
    pub fn entry(&self, r: usize, c: usize) -> Scalar {
        self.columns[c].get(r).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        if other.codomain != self.domain {
            return Err(Error::Dimension { expected: self.domain, got: other.codomain });
        }
        let columns = other
            .columns
            .iter()
            .map(|col| {
                let mut acc = zeros(self.field, self.codomain);
                for (k, c) in col.iter() {
                    self.columns[*k].add_scaled_into(c, &mut acc);
                }
                SparseVec::from_dense(&acc)
            })
            .collect();
        Ok(LinearMap { field: self.field, domain: other.domain, codomain: self.codomain, columns })
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        self.plus_scaled(&self.field.one(), other)
    }

    pub fn plus_scaled(&self, a: &Scalar, other: &LinearMap) -> LinearMap {
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(x, y)| x.plus_scaled(a, y))
            .collect();
        LinearMap { field: self.field, domain: self.domain, codomain: self.codomain, columns }
    }

    pub fn scaled(&self, a: &Scalar) -> LinearMap {
        LinearMap {
            field: self.field,
            domain: self.domain,
            codomain: self.codomain,
            columns: self.columns.iter().map(|c| c.scaled(a)).collect(),
        }
    }

    /// `self ∘ other − other ∘ self`
    pub fn commutator(&self, other: &LinearMap) -> Result<LinearMap> {
        let ab = self.compose(other)?;
        let ba = other.compose(self)?;
        Ok(ab.plus_scaled(&-self.field.one(), &ba))
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(SparseVec::is_zero)
    }

    pub fn trace(&self) -> Scalar {
        let mut t = self.field.zero();
        for i in 0..self.domain.min(self.codomain) {
            if let Some(c) = self.columns[i].get(i) {
                t += c;
            }
        }
        t
    }

    /// Column-major flattening (index `col * codomain + row`), used when
    /// spans of operators are computed.
    pub fn flatten(&self) -> SparseVec {
        let n = self.codomain;
        SparseVec::from_entries(
            self.columns
                .iter()
                .enumerate()
                .flat_map(|(c, col)| col.iter().map(move |(r, v)| (c * n + r, v.clone())))
                .collect(),
        )
    }

    pub fn unflatten(field: Field, domain: usize, codomain: usize, v: &SparseVec) -> LinearMap {
        let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); domain];
        for (k, c) in v.iter() {
            cols[k / codomain].push((k % codomain, c.clone()));
        }
        LinearMap {
            field,
            domain,
            codomain,
            columns: cols.into_iter().map(SparseVec::from_entries).collect(),
        }
    }

    /// Dense row-major matrix.
    pub fn to_rows(&self) -> Vec<Vector> {
        let mut rows = vec![zeros(self.field, self.domain); self.codomain];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col.iter() {
                rows[*r][c] = v.clone();
            }
        }
        rows
    }
}

/// Bilinear map `U × V → W`; `table[i * dim V + j]` holds the image of
/// `(u_i, v_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearMap {
    field: Field,
    left: usize,
    right: usize,
    out: usize,
    table: Vec<SparseVec>,
}

impl BilinearMap {
    pub fn zero(field: Field, left: usize, right: usize, out: usize) -> Self {
        BilinearMap { field, left, right, out, table: vec![SparseVec::new(); left * right] }
    }

    /// Builds the table from the image of each basis pair.
    pub fn from_fn<F>(field: Field, left: usize, right: usize, out: usize, f: F) -> Self
    where
        F: Fn(usize, usize) -> SparseVec + Sync,
    {
        let table: Vec<SparseVec> = (0..left * right)
            .into_par_iter()
            .map(|ij| {
                let v = f(ij / right, ij % right);
                debug_assert!(v.max_index().is_none_or(|m| m < out));
                v
            })
            .collect();
        BilinearMap { field, left, right, out, table }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.left, self.right, self.out)
    }

    pub fn set(&mut self, i: usize, j: usize, value: SparseVec) -> Result<()> {
        check_index(i, self.left)?;
        check_index(j, self.right)?;
        if let Some(m) = value.max_index() {
            check_index(m, self.out)?;
        }
        self.table[i * self.right + j] = value;
        Ok(())
    }

    /// Adds `c · w_k` to the image of `(u_i, v_j)`.
    pub fn add_entry(&mut self, i: usize, j: usize, k: usize, c: Scalar) -> Result<()> {
        check_index(i, self.left)?;
        check_index(j, self.right)?;
        check_index(k, self.out)?;
        let slot = &mut self.table[i * self.right + j];
        *slot = slot.plus_scaled(&self.field.one(), &SparseVec::single(k, c));
        Ok(())
    }

    pub fn get(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.right + j]
    }

    pub fn apply(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vector> {
        check_len(u, self.left)?;
        check_len(v, self.right)?;
        let mut out = zeros(self.field, self.out);
        let vs: Vec<(usize, &Scalar)> = v.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for &(j, vj) in &vs {
                self.get(i, j).add_scaled_into(&(ui * vj), &mut out);
            }
        }
        Ok(out)
    }

    /// Image of `(u_i, v)` for a sparse `v`.
    pub fn apply_basis_left(&self, i: usize, v: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (j, c) in v.iter() {
            acc = acc.plus_scaled(c, self.get(i, *j));
        }
        acc
    }

    /// Image of `(u, v_j)` for a sparse `u`.
    pub fn apply_basis_right(&self, u: &SparseVec, j: usize) -> SparseVec {
        let mut acc = SparseVec::new();
        for (i, c) in u.iter() {
            acc = acc.plus_scaled(c, self.get(*i, j));
        }
        acc
    }

    pub fn apply_sparse(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (i, a) in u.iter() {
            for (j, b) in v.iter() {
                acc = acc.plus_scaled(&(a * b), self.get(*i, *j));
            }
        }
        acc
    }

    /// The linear map `v ↦ B(u, v)`.
    pub fn left_operator(&self, u: &[Scalar]) -> Result<LinearMap> {
        check_len(u, self.left)?;
        let su = SparseVec::from_dense(u);
        let cols = (0..self.right).map(|j| self.apply_basis_right(&su, j)).collect();
        LinearMap::from_columns(self.field, self.out, cols)
    }

    /// The linear map `u ↦ B(u, v)`.
    pub fn right_operator(&self, v: &[Scalar]) -> Result<LinearMap> {
        check_len(v, self.right)?;
        let sv = SparseVec::from_dense(v);
        let cols = (0..self.left).map(|i| self.apply_basis_left(i, &sv)).collect();
        LinearMap::from_columns(self.field, self.out, cols)
    }

    pub fn nnz(&self) -> usize {
        self.table.iter().map(SparseVec::nnz).sum()
    }

    /// Iterates `(i, j, k, c)` over stored coefficients in index order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> + '_ {
        self.table.iter().enumerate().flat_map(move |(ij, v)| {
            let (i, j) = (ij / self.right, ij % self.right);
            v.iter().map(move |(k, c)| (i, j, *k, c))
        })
    }
}

/// Trilinear map `U × V × W → X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrilinearMap {
    field: Field,
    dims: [usize; 3],
    out: usize,
    table: Vec<SparseVec>,
}

impl TrilinearMap {
    pub fn zero(field: Field, a: usize, b: usize, c: usize, out: usize) -> Self {
        TrilinearMap { field, dims: [a, b, c], out, table: vec![SparseVec::new(); a * b * c] }
    }

    /// Builds the table from the image of each basis triple.
    pub fn from_fn<F>(field: Field, dims: [usize; 3], out: usize, f: F) -> Self
    where
        F: Fn(usize, usize, usize) -> SparseVec + Sync,
    {
        let [a, b, c] = dims;
        let table: Vec<SparseVec> = (0..a * b * c)
            .into_par_iter()
            .map(|s| {
                let v = f(s / (b * c), (s / c) % b, s % c);
                debug_assert!(v.max_index().is_none_or(|m| m < out));
                v
            })
            .collect();
        TrilinearMap { field, dims, out, table }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> ([usize; 3], usize) {
        (self.dims, self.out)
    }

    fn slot(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dims[1] + j) * self.dims[2] + k
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: SparseVec) -> Result<()> {
        check_index(i, self.dims[0])?;
        check_index(j, self.dims[1])?;
        check_index(k, self.dims[2])?;
        if let Some(m) = value.max_index() {
            check_index(m, self.out)?;
        }
        let s = self.slot(i, j, k);
        self.table[s] = value;
        Ok(())
    }

    pub fn add_entry(&mut self, i: usize, j: usize, k: usize, l: usize, c: Scalar) -> Result<()> {
        check_index(i, self.dims[0])?;
        check_index(j, self.dims[1])?;
        check_index(k, self.dims[2])?;
        check_index(l, self.out)?;
        let s = self.slot(i, j, k);
        self.table[s] = self.table[s].plus_scaled(&self.field.one(), &SparseVec::single(l, c));
        Ok(())
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &SparseVec {
        &self.table[self.slot(i, j, k)]
    }

    pub fn apply(&self, u: &[Scalar], v: &[Scalar], w: &[Scalar]) -> Result<Vector> {
        check_len(u, self.dims[0])?;
        check_len(v, self.dims[1])?;
        check_len(w, self.dims[2])?;
        let mut out = zeros(self.field, self.out);
        for (i, a) in u.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in v.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (k, c) in w.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    self.get(i, j, k).add_scaled_into(&(&ab * c), &mut out);
                }
            }
        }
        Ok(out)
    }

    pub fn apply_sparse(&self, u: &SparseVec, v: &SparseVec, w: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (i, a) in u.iter() {
            for (j, b) in v.iter() {
                let ab = a * b;
                for (k, c) in w.iter() {
                    acc = acc.plus_scaled(&(&ab * c), self.get(*i, *j, *k));
                }
            }
        }
        acc
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, usize, &Scalar)> + '_ {
        let [_, b, c] = self.dims;
        self.table.iter().enumerate().flat_map(move |(s, v)| {
            let (i, j, k) = (s / (b * c), (s / c) % b, s % c);
            v.iter().map(move |(l, x)| (i, j, k, *l, x))
        })
    }
}

/// Evaluates `B(u, v)`; the free-function form used by callers that only
/// hold vectors.
pub fn apply_bilinear(b: &BilinearMap, u: &[Scalar], v: &[Scalar]) -> Result<Vector> {
    b.apply(u, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::vector::unit;

    /// 2×2 matrix units E11, E12, E21, E22 with associative product.
    fn matrix_units(f: Field) -> BilinearMap {
        let mut b = BilinearMap::zero(f, 4, 4, 4);
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    // E_ij E_jk = E_ik
                    b.add_entry(i * 2 + j, j * 2 + k, i * 2 + k, f.one()).unwrap();
                }
            }
        }
        b
    }

    #[test]
    fn matrix_unit_product() {
        let f = Field::Rational;
        let b = matrix_units(f);
        // E12 · E21 = E11
        assert_eq!(apply_bilinear(&b, &unit(f, 4, 1), &unit(f, 4, 2)).unwrap(), unit(f, 4, 0));
    }

    #[test]
    fn zero_argument_gives_zero() {
        let f = Field::Rational;
        let b = matrix_units(f);
        let out = apply_bilinear(&b, &zeros(f, 4), &unit(f, 4, 3)).unwrap();
        assert!(crate::linalg::vector::is_zero(&out));
    }

    #[test]
    fn gamma_map_on_symplectic_plane() {
        // γ_{u,v}(w) = (u|w)v + (v|w)u on V = <p,q>, (p|q) = 1, stored as a
        // bilinear map V × V → End(V) (flattened column-major 2×2).
        let f = Field::Rational;
        let form = |a: usize, b: usize| -> i64 {
            match (a, b) {
                (0, 1) => 1,
                (1, 0) => -1,
                _ => 0,
            }
        };
        let mut gamma = BilinearMap::zero(f, 2, 2, 4);
        for u in 0..2 {
            for v in 0..2 {
                for w in 0..2 {
                    // column w of γ_{u,v}: (u|w) e_v + (v|w) e_u
                    let c1 = form(u, w);
                    let c2 = form(v, w);
                    if c1 != 0 {
                        gamma.add_entry(u, v, w * 2 + v, f.int(c1)).unwrap();
                    }
                    if c2 != 0 {
                        gamma.add_entry(u, v, w * 2 + u, f.int(c2)).unwrap();
                    }
                }
            }
        }
        let g = gamma.apply(&unit(f, 2, 0), &unit(f, 2, 0)).unwrap();
        let op = LinearMap::unflatten(f, 2, 2, &SparseVec::from_dense(&g));
        // γ_{p,p}(q) = 2p, so ½γ_{p,p} is E with E(q) = p.
        assert_eq!(op.apply(&unit(f, 2, 1)).unwrap(), vec![f.int(2), f.zero()]);
        assert!(crate::linalg::vector::is_zero(&op.apply(&unit(f, 2, 0)).unwrap()));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let f = Field::Rational;
        let b = matrix_units(f);
        assert!(matches!(
            b.apply(&zeros(f, 3), &zeros(f, 4)),
            Err(Error::Dimension { expected: 4, got: 3 })
        ));
    }

    #[test]
    fn flatten_roundtrip() {
        let f = Field::Rational;
        let m = LinearMap::from_dense_columns(
            f,
            2,
            &[vec![f.int(1), f.int(2)], vec![f.zero(), f.int(-1)], vec![f.int(3), f.zero()]],
        )
        .unwrap();
        assert_eq!(LinearMap::unflatten(f, 3, 2, &m.flatten()), m);
    }
}
