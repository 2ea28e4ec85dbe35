//! Finite-dimensional algebras given by structure constants.

use crate::error::{Error, Result};
use crate::linalg::{BilinearMap, LinearMap, Space, SparseVec, Subspace, Vector};
use crate::report::{Check, VerificationReport};
use crate::scalar::{Field, Scalar};

/// An algebra with a labelled basis and a sparse multiplication table.
#[derive(Debug, Clone)]
pub struct StructureAlgebra {
    space: Space,
    product: BilinearMap,
}

impl StructureAlgebra {
    pub fn new(space: Space, product: BilinearMap) -> Result<Self> {
        let n = space.dim();
        let (l, r, o) = product.dims();
        for d in [l, r, o] {
            if d != n {
                return Err(Error::Dimension { expected: n, got: d });
            }
        }
        Ok(StructureAlgebra { space, product })
    }

    /// `n × n` matrices over `field` with basis `E{i}{j}` in row-major order.
    pub fn matrix(field: Field, n: usize) -> Self {
        let labels: Vec<String> =
            (0..n).flat_map(|i| (0..n).map(move |j| format!("E{}{}", i + 1, j + 1))).collect();
        let product = BilinearMap::from_fn(field, n * n, n * n, n * n, |a, b| {
            let (i, j) = (a / n, a % n);
            let (k, l) = (b / n, b % n);
            if j == k {
                SparseVec::single(i * n + l, field.one())
            } else {
                SparseVec::new()
            }
        });
        StructureAlgebra { space: Space::new(labels).expect("distinct labels"), product }
    }

    pub fn field(&self) -> Field {
        self.product.field()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn product(&self) -> &BilinearMap {
        &self.product
    }

    pub fn label(&self, i: usize) -> &str {
        self.space.label(i)
    }

    pub fn basis(&self, i: usize) -> Vector {
        crate::linalg::vector::unit(self.field(), self.dim(), i)
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        self.product.apply(a, b).expect("element of the algebra")
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        self.product.get(i, j)
    }

    /// `x ↦ a x`
    pub fn left_mult(&self, a: &[Scalar]) -> LinearMap {
        self.product.left_operator(a).expect("element of the algebra")
    }

    /// `x ↦ x a`
    pub fn right_mult(&self, a: &[Scalar]) -> LinearMap {
        self.product.right_operator(a).expect("element of the algebra")
    }

    /// Two-sided unit, if one exists.
    pub fn find_unit(&self) -> Option<Vector> {
        // Solve e·x_j = x_j and x_j·e = x_j for all basis x_j, linear in e.
        let f = self.field();
        let n = self.dim();
        let mut rows = Vec::with_capacity(2 * n * n);
        let mut rhs = Vec::with_capacity(2 * n * n);
        for j in 0..n {
            for k in 0..n {
                let left: Vector = (0..n)
                    .map(|i| self.product.get(i, j).get(k).cloned().unwrap_or_else(|| f.zero()))
                    .collect();
                let right: Vector = (0..n)
                    .map(|i| self.product.get(j, i).get(k).cloned().unwrap_or_else(|| f.zero()))
                    .collect();
                let target = if j == k { f.one() } else { f.zero() };
                rows.push(left);
                rhs.push(target.clone());
                rows.push(right);
                rhs.push(target);
            }
        }
        crate::linalg::solve_exact(f, &rows, Some(&rhs)).ok().and_then(|s| s.particular)
    }

    pub fn check_associative(&self) -> VerificationReport {
        let n = self.dim();
        let mut c = Check::new("associativity");
        for i in 0..n {
            for j in 0..n {
                let ij = self.product.get(i, j);
                for k in 0..n {
                    let lhs = self.product.apply_basis_right(ij, k);
                    let rhs = self.product.apply_basis_left(i, self.product.get(j, k));
                    c.record(lhs == rhs, || self.triple_label(i, j, k));
                }
            }
        }
        let mut r = VerificationReport::new("associativity").with_dim("algebra", n);
        r.push(c);
        r
    }

    pub fn check_commutative(&self) -> Check {
        let n = self.dim();
        let mut c = Check::new("commutativity");
        for i in 0..n {
            for j in i + 1..n {
                c.record(self.product.get(i, j) == self.product.get(j, i), || {
                    format!("({},{})", self.label(i), self.label(j))
                });
            }
        }
        c
    }

    fn triple_label(&self, i: usize, j: usize, k: usize) -> String {
        format!("({},{},{})", self.label(i), self.label(j), self.label(k))
    }

    /// Subalgebra-style restriction: the product of `self` read in the
    /// coordinates of `basis` (which must be closed under the product).
    pub fn restrict(&self, sub: &Subspace, labels: Vec<String>) -> Result<StructureAlgebra> {
        let basis = sub.basis_dense();
        let m = basis.len();
        let f = self.field();
        let mut product = BilinearMap::zero(f, m, m, m);
        for i in 0..m {
            for j in 0..m {
                let p = self.mul(&basis[i], &basis[j]);
                let c = sub
                    .coordinates_dense(&p)
                    .ok_or_else(|| Error::NotClosed(format!("{} * {}", labels[i], labels[j])))?;
                product.set(i, j, SparseVec::from_dense(&c))?;
            }
        }
        StructureAlgebra::new(Space::new(labels)?, product)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_algebra_is_associative_with_unit() {
        let f = Field::Rational;
        let m = StructureAlgebra::matrix(f, 2);
        assert!(m.check_associative().passed());
        let e = m.find_unit().unwrap();
        assert_eq!(e, vec![f.one(), f.zero(), f.zero(), f.one()]);
        assert!(!m.check_commutative().passed());
    }
}
