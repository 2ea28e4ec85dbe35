//! Jordan algebras: identity checks, idempotents, Peirce decomposition and
//! inner derivations.

use crate::algebra::StructureAlgebra;
use crate::error::{Error, Result};
use crate::linalg::vector::{is_zero, sub, zeros};
use crate::linalg::{eigenspace, BilinearMap, LinearMap, Space, SparseVec, Subspace, Vector};
use crate::report::{Check, VerificationReport};
use crate::scalar::{Field, Scalar};

/// A commutative algebra with unit, intended to satisfy the Jordan identity.
#[derive(Debug, Clone)]
pub struct JordanAlgebra {
    space: Space,
    product: BilinearMap,
    unit: Vector,
}

/// Outcome of [`JordanAlgebra::is_idempotent`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentStatus {
    pub idempotent: bool,
    pub proper: bool,
    /// `1 − e`
    pub complement: Vector,
}

/// `J = J₁ ⊕ J_½ ⊕ J₀`, the eigenspaces of `L_e` for `1, ½, 0`.
#[derive(Debug, Clone)]
pub struct PeirceDecomposition {
    pub e: Vector,
    pub one: Subspace,
    pub half: Subspace,
    pub zero: Subspace,
}

impl PeirceDecomposition {
    pub fn dims(&self) -> (usize, usize, usize) {
        (self.one.dim(), self.half.dim(), self.zero.dim())
    }
}

impl JordanAlgebra {
    pub fn new(space: Space, product: BilinearMap, unit: Vector) -> Result<Self> {
        let n = space.dim();
        let (l, r, o) = product.dims();
        for d in [l, r, o, unit.len()] {
            if d != n {
                return Err(Error::Dimension { expected: n, got: d });
            }
        }
        Ok(JordanAlgebra { space, product, unit })
    }

    /// `A⁺`: the symmetrized product `½(xy + yx)` of an algebra with unit.
    pub fn special(a: &StructureAlgebra) -> Result<Self> {
        let unit = a
            .find_unit()
            .ok_or_else(|| Error::Precondition("algebra has no unit".into()))?;
        let f = a.field();
        let half = f.ratio(1, 2);
        let n = a.dim();
        let product = BilinearMap::from_fn(f, n, n, n, |i, j| {
            a.mul_basis(i, j).plus_scaled(&f.one(), a.mul_basis(j, i)).scaled(&half)
        });
        JordanAlgebra::new(a.space().clone(), product, unit)
    }

    /// The field 𝔽 as a one-dimensional Jordan algebra.
    pub fn ground(field: Field) -> Self {
        let mut product = BilinearMap::zero(field, 1, 1, 1);
        product.set(0, 0, SparseVec::single(0, field.one())).expect("in range");
        JordanAlgebra { space: Space::new(["1"]).expect("one label"), product, unit: vec![field.one()] }
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

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    pub fn label(&self, i: usize) -> &str {
        self.space.label(i)
    }

    pub fn basis(&self, i: usize) -> Vector {
        crate::linalg::vector::unit(self.field(), self.dim(), i)
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        self.product.apply(a, b).expect("element of J")
    }

    /// `L_a : c ↦ a·c`
    pub fn left_mult(&self, a: &[Scalar]) -> LinearMap {
        self.product.left_operator(a).expect("element of J")
    }

    /// Commutativity, unit and the linearized Jordan identity
    /// `((xy)b)z + ((yz)b)x + ((zx)b)y − (xy)(bz) − (yz)(bx) − (zx)(by) = 0`
    /// on all basis tuples with `x ≤ y ≤ z`.
    pub fn check_jordan(&self) -> VerificationReport {
        let n = self.dim();
        let f = self.field();
        let mut report = VerificationReport::new("jordan").with_dim("J", n);

        let mut comm = Check::new("commutativity");
        for i in 0..n {
            for j in i..n {
                comm.record(self.product.get(i, j) == self.product.get(j, i), || {
                    format!("({},{})", self.label(i), self.label(j))
                });
            }
        }
        report.push(comm);

        let mut unit = Check::new("unit");
        let one = SparseVec::from_dense(&self.unit);
        for i in 0..n {
            let e = SparseVec::single(i, f.one());
            let l = self.product.apply_sparse(&one, &e);
            let r = self.product.apply_sparse(&e, &one);
            unit.record(l == e && r == e, || self.label(i).to_string());
        }
        report.push(unit);

        let mut jordan = Check::new("linearized_jordan_identity");
        let p = &self.product;
        let basis: Vec<SparseVec> = (0..n).map(|i| SparseVec::single(i, f.one())).collect();
        for x in 0..n {
            for y in x..n {
                let xy = p.get(x, y);
                for z in y..n {
                    let yz = p.get(y, z);
                    let zx = p.get(z, x);
                    for b in 0..n {
                        let mut acc = zeros(f, n);
                        let add = |acc: &mut Vector, s: &Scalar, v: SparseVec| v.add_scaled_into(s, acc);
                        let one = f.one();
                        let neg = -f.one();
                        add(&mut acc, &one, p.apply_sparse(&p.apply_basis_right(xy, b), &basis[z]));
                        add(&mut acc, &one, p.apply_sparse(&p.apply_basis_right(yz, b), &basis[x]));
                        add(&mut acc, &one, p.apply_sparse(&p.apply_basis_right(zx, b), &basis[y]));
                        add(&mut acc, &neg, p.apply_sparse(xy, p.get(b, z)));
                        add(&mut acc, &neg, p.apply_sparse(yz, p.get(b, x)));
                        add(&mut acc, &neg, p.apply_sparse(zx, p.get(b, y)));
                        jordan.record(is_zero(&acc), || {
                            format!(
                                "(x,y,z,b)=({},{},{},{})",
                                self.label(x),
                                self.label(y),
                                self.label(z),
                                self.label(b)
                            )
                        });
                    }
                }
            }
        }
        report.push(jordan);
        report
    }

    pub fn is_idempotent(&self, e: &[Scalar]) -> IdempotentStatus {
        let idempotent = self.mul(e, e) == e;
        let proper = !is_zero(e) && e != self.unit.as_slice();
        IdempotentStatus { idempotent, proper, complement: sub(&self.unit, e) }
    }

    pub fn peirce_decompose(&self, e: &[Scalar]) -> Result<PeirceDecomposition> {
        if !self.is_idempotent(e).idempotent {
            return Err(Error::NotIdempotent);
        }
        let f = self.field();
        let le = self.left_mult(e);
        let one = eigenspace(&le, &f.one());
        let half = eigenspace(&le, &f.ratio(1, 2));
        let zero = eigenspace(&le, &f.zero());
        let found = one.dim() + half.dim() + zero.dim();
        if found != self.dim() || one.sum(&half).sum(&zero).dim() != self.dim() {
            return Err(Error::NotExhaustive { found, dim: self.dim() });
        }
        Ok(PeirceDecomposition { e: e.to_vec(), one, half, zero })
    }

    /// `D_{a,b}(c) = a·(b·c) − b·(a·c)`
    pub fn inner_derivation(&self, a: &[Scalar], b: &[Scalar]) -> LinearMap {
        let la = self.left_mult(a);
        let lb = self.left_mult(b);
        la.commutator(&lb).expect("square operators")
    }

    /// Cyclic identity `D_{a·b,c} + D_{b·c,a} + D_{c·a,b} = 0` and the
    /// derivation property `D(x·y) = D(x)·y + x·D(y)` for every `D_{a,b}`.
    pub fn check_inner_derivations(&self) -> VerificationReport {
        let n = self.dim();
        let mut report = VerificationReport::new("inner_derivations").with_dim("J", n);
        let basis: Vec<Vector> = (0..n).map(|i| self.basis(i)).collect();
        let ops: Vec<LinearMap> = basis.iter().map(|a| self.left_mult(a)).collect();
        let d = |a: &[Scalar], b: &[Scalar]| self.inner_derivation(a, b);

        let mut cyclic = Check::new("cyclic_D_sum");
        for a in 0..n {
            for b in a..n {
                for c in b..n {
                    let ab = self.mul(&basis[a], &basis[b]);
                    let bc = self.mul(&basis[b], &basis[c]);
                    let ca = self.mul(&basis[c], &basis[a]);
                    let s = d(&ab, &basis[c]).add(&d(&bc, &basis[a])).add(&d(&ca, &basis[b]));
                    cyclic.record(s.is_zero(), || {
                        format!("({},{},{})", self.label(a), self.label(b), self.label(c))
                    });
                }
            }
        }
        report.push(cyclic);

        let mut deriv = Check::new("D_is_derivation");
        for a in 0..n {
            for b in a + 1..n {
                let dab = ops[a].commutator(&ops[b]).expect("square");
                for x in 0..n {
                    for y in x..n {
                        let lhs = dab.apply(&self.mul(&basis[x], &basis[y])).expect("dim");
                        let dx = dab.apply(&basis[x]).expect("dim");
                        let dy = dab.apply(&basis[y]).expect("dim");
                        let rhs = crate::linalg::vector::add(
                            &self.mul(&dx, &basis[y]),
                            &self.mul(&basis[x], &dy),
                        );
                        deriv.record(lhs == rhs, || {
                            format!(
                                "D_({},{}) on ({},{})",
                                self.label(a),
                                self.label(b),
                                self.label(x),
                                self.label(y)
                            )
                        });
                    }
                }
            }
        }
        report.push(deriv);
        report
    }

    /// Peirce multiplication rules and the derivation vanishing that they
    /// force: `J₁·J₀ = 0`, `D_{J₁,J₀} = 0`, `D_{e,J₁} = 0`, plus
    /// `J_i·J_i ⊆ J_i` and `J_½·J_½ ⊆ J₁ + J₀`.
    pub fn check_peirce_rules(&self, p: &PeirceDecomposition) -> VerificationReport {
        let mut report = VerificationReport::new("peirce_rules");
        let (d1, dh, d0) = p.dims();
        report.dim("J1", d1);
        report.dim("J_half", dh);
        report.dim("J0", d0);
        let b1 = p.one.basis_dense();
        let bh = p.half.basis_dense();
        let b0 = p.zero.basis_dense();

        let mut prod10 = Check::new("J1_times_J0_zero");
        let mut d10 = Check::new("D_J1_J0_zero");
        for (i, a) in b1.iter().enumerate() {
            for (j, b) in b0.iter().enumerate() {
                prod10.record(is_zero(&self.mul(a, b)), || format!("J1[{i}]·J0[{j}]"));
                d10.record(self.inner_derivation(a, b).is_zero(), || format!("D(J1[{i}],J0[{j}])"));
            }
        }
        report.push(prod10);
        report.push(d10);

        let mut de1 = Check::new("D_e_J1_zero");
        for (i, a) in b1.iter().enumerate() {
            de1.record(self.inner_derivation(&p.e, a).is_zero(), || format!("D(e,J1[{i}])"));
        }
        report.push(de1);

        let mut closed = Check::new("J_i_subalgebras");
        for (name, basis, space) in [("J1", &b1, &p.one), ("J0", &b0, &p.zero)] {
            for (i, a) in basis.iter().enumerate() {
                for (j, b) in basis.iter().enumerate().skip(i) {
                    closed.record(space.contains_dense(&self.mul(a, b)), || {
                        format!("{name}[{i}]·{name}[{j}]")
                    });
                }
            }
        }
        report.push(closed);

        let mut halfhalf = Check::new("J_half_squared_in_J1_plus_J0");
        let outer = p.one.sum(&p.zero);
        for (i, a) in bh.iter().enumerate() {
            for (j, b) in bh.iter().enumerate().skip(i) {
                halfhalf.record(outer.contains_dense(&self.mul(a, b)), || format!("J½[{i}]·J½[{j}]"));
            }
        }
        report.push(halfhalf);
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat2() -> JordanAlgebra {
        JordanAlgebra::special(&StructureAlgebra::matrix(Field::Rational, 2)).unwrap()
    }

    #[test]
    fn one_dimensional_algebra_is_jordan() {
        assert!(JordanAlgebra::ground(Field::Rational).check_jordan().passed());
    }

    #[test]
    fn unit_is_not_proper() {
        let j = mat2();
        let s = j.is_idempotent(&j.unit().clone());
        assert!(s.idempotent && !s.proper);
        assert!(is_zero(&s.complement));
    }

    #[test]
    fn d_with_unit_vanishes() {
        let j = mat2();
        for i in 0..4 {
            assert!(j.inner_derivation(j.unit(), &j.basis(i)).is_zero());
            assert!(j.inner_derivation(&j.basis(i), &j.basis(i)).is_zero());
        }
    }
}
