//! Split composition algebras by Cayley–Dickson doubling.

use crate::algebra::StructureAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{BilinearMap, LinearMap, Space, SparseVec, Vector};
use crate::report::{Check, VerificationReport};
use crate::scalar::{Field, Scalar};

/// A composition algebra on an orthogonal basis `prefix0, prefix1, …`
/// with `prefix0 = 1`; the norm is diagonal in this basis.
#[derive(Debug, Clone)]
pub struct CompositionAlgebra {
    algebra: StructureAlgebra,
    conj: LinearMap,
    norm: Vec<Scalar>,
    prefix: String,
}

impl CompositionAlgebra {
    /// The ground field as a one-dimensional composition algebra.
    pub fn ground(field: Field, prefix: &str) -> Self {
        let mut product = BilinearMap::zero(field, 1, 1, 1);
        product.set(0, 0, SparseVec::single(0, field.one())).expect("in range");
        let algebra = StructureAlgebra::new(Space::new([format!("{prefix}0")]).expect("label"), product).expect("dims");
        CompositionAlgebra {
            algebra,
            conj: LinearMap::identity(field, 1),
            norm: vec![field.one()],
            prefix: prefix.to_string(),
        }
    }

    /// Split composition algebra of dimension 1, 2, 4 or 8 (doubling with
    /// `μ = 1` each time).
    pub fn split(field: Field, dim: usize, prefix: &str) -> Result<Self> {
        let mut c = Self::ground(field, prefix);
        match dim {
            1 | 2 | 4 | 8 => {}
            _ => return Err(Error::Parameters(format!("composition algebras have dimension 1, 2, 4 or 8 (got {dim})"))),
        }
        while c.dim() < dim {
            c = cayley_dickson(&c, &field.one())?;
        }
        Ok(c)
    }

    pub fn algebra(&self) -> &StructureAlgebra {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn prefix(&self) -> &str {
        &self.prefix
    }

    pub fn conjugation(&self) -> &LinearMap {
        &self.conj
    }

    pub fn conj(&self, x: &[Scalar]) -> Vector {
        self.conj.apply(x).expect("element of C")
    }

    /// Norms of the basis vectors.
    pub fn norm_diagonal(&self) -> &[Scalar] {
        &self.norm
    }

    /// `ν(x) = Σ ν(eᵢ) xᵢ²`
    pub fn norm(&self, x: &[Scalar]) -> Scalar {
        let mut acc = self.field().zero();
        for (n, c) in self.norm.iter().zip(x) {
            acc += &(n * &(c * c));
        }
        acc
    }

    /// `ν(x,y) = ν(x+y) − ν(x) − ν(y)`
    pub fn polar(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let mut acc = self.field().zero();
        for ((n, a), b) in self.norm.iter().zip(x).zip(y) {
            acc += &(&self.field().int(2) * &(n * &(a * b)));
        }
        acc
    }

    /// Trace-zero subspace basis indices (`e₁, …`).
    pub fn trace_zero_indices(&self) -> std::ops::Range<usize> {
        1..self.dim()
    }

    /// `x x̄ = ν(x)1`, `x̄ x = ν(x)1`, conjugation an involutive
    /// anti-automorphism, and the linearized composition law
    /// `ν(xy, zw) + ν(xw, zy) = ν(x,z) ν(y,w)` on all basis tuples.
    pub fn check(&self) -> VerificationReport {
        let n = self.dim();
        let a = &self.algebra;
        let mut r = VerificationReport::new("composition").with_dim("C", n);
        let basis = |i: usize| a.basis(i);
        let one = basis(0);
        let mut c = Check::new("x_conj_x_is_norm");
        for i in 0..n {
            for j in i..n {
                // x ȳ + y x̄ = ν(x,y) 1
                let (x, y) = (basis(i), basis(j));
                let lhs = crate::linalg::vector::add(&a.mul(&x, &self.conj(&y)), &a.mul(&y, &self.conj(&x)));
                let rhs = crate::linalg::vector::scale(&self.polar(&x, &y), &one);
                let lhs2 = crate::linalg::vector::add(&a.mul(&self.conj(&y), &x), &a.mul(&self.conj(&x), &y));
                c.record(lhs == rhs && lhs2 == rhs, || format!("({},{})", a.label(i), a.label(j)));
            }
        }
        r.push(c);
        let mut c = Check::new("conjugation_anti_automorphism");
        for i in 0..n {
            let x = basis(i);
            c.record(self.conj(&self.conj(&x)) == x, || a.label(i).to_string());
            for j in 0..n {
                let y = basis(j);
                let lhs = self.conj(&a.mul(&x, &y));
                let rhs = a.mul(&self.conj(&y), &self.conj(&x));
                c.record(lhs == rhs, || format!("({},{})", a.label(i), a.label(j)));
            }
        }
        r.push(c);
        let mut c = Check::new("norm_multiplicative");
        let prods: Vec<Vec<Vector>> = (0..n).map(|i| (0..n).map(|j| a.mul(&basis(i), &basis(j))).collect()).collect();
        let nu = |x: usize, y: usize| self.polar(&basis(x), &basis(y));
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    for w in 0..n {
                        let lhs = &self.polar(&prods[x][y], &prods[z][w]) + &self.polar(&prods[x][w], &prods[z][y]);
                        let rhs = &nu(x, z) * &nu(y, w);
                        c.record(lhs == rhs, || {
                            format!("({},{},{},{})", a.label(x), a.label(y), a.label(z), a.label(w))
                        });
                    }
                }
            }
        }
        r.push(c);
        r
    }
}

/// `(a,b)(c,d) = (ac + μ d̄ b, da + b c̄)`, conjugation `(ā, −b)`, norm
/// `ν(a) − μ ν(b)`.
pub fn cayley_dickson(c: &CompositionAlgebra, mu: &Scalar) -> Result<CompositionAlgebra> {
    let f = c.field();
    let n = c.dim();
    if n >= 8 {
        return Err(Error::Parameters("doubling an octonion algebra is not a composition algebra".into()));
    }
    if mu.is_zero() {
        return Err(Error::Parameters("doubling parameter must be nonzero".into()));
    }
    let a = c.algebra();
    let m = 2 * n;
    let conj_basis: Vec<Vector> = (0..n).map(|i| c.conj(&a.basis(i))).collect();
    let shift = |v: &SparseVec, off: usize, s: &Scalar| -> Vec<(usize, Scalar)> {
        v.iter().map(|(k, x)| (k + off, s * x)).collect()
    };
    let one = f.one();
    let product = BilinearMap::from_fn(f, m, m, m, |x, y| {
        let (xi, xh) = (x % n, x / n);
        let (yi, yh) = (y % n, y / n);
        let sp = |u: &[Scalar], v: &[Scalar]| SparseVec::from_dense(&a.mul(u, v));
        let mut out = Vec::new();
        match (xh, yh) {
            // (a,0)(c,0) = (ac, 0)
            (0, 0) => out.extend(shift(a.mul_basis(xi, yi), 0, &one)),
            // (a,0)(0,d) = (0, da)
            (0, 1) => out.extend(shift(a.mul_basis(yi, xi), n, &one)),
            // (0,b)(c,0) = (0, b c̄)
            (1, 0) => out.extend(shift(&sp(&a.basis(xi), &conj_basis[yi]), n, &one)),
            // (0,b)(0,d) = (μ d̄ b, 0)
            _ => out.extend(shift(&sp(&conj_basis[yi], &a.basis(xi)), 0, mu)),
        }
        SparseVec::from_entries(out)
    });
    let labels: Vec<String> = (0..m).map(|i| format!("{}{i}", c.prefix)).collect();
    let algebra = StructureAlgebra::new(Space::new(labels)?, product)?;
    let conj = LinearMap::from_columns(
        f,
        m,
        (0..m)
            .map(|i| {
                if i < n {
                    SparseVec::from_dense(&conj_basis[i])
                } else {
                    SparseVec::single(i, -f.one())
                }
            })
            .collect(),
    )?;
    let mut norm = c.norm.clone();
    norm.extend(c.norm.iter().map(|v| -(mu * v)));
    Ok(CompositionAlgebra { algebra, conj, norm, prefix: c.prefix.clone() })
}
