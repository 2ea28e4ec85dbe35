//! Lie algebras by structure constants: Jacobi sweeps, invariants, the
//! assembly of `L(J,T)`, 5-gradings and short SL₂ decompositions.

mod assemble;
mod decompose;
mod grading;
pub mod jacobi;
pub mod sl2;

pub use assemble::{assemble_l, assemble_l_unchecked, AssembledL};
pub use decompose::{short_sl2_decompose, short_sl2sl2_decompose, IsotypicComponent, IsotypicDecomposition};
pub use grading::{five_grading, jternary_from_5grading, Grading};

use std::time::Instant;

use crate::error::{Error, Result};
use crate::linalg::vector::{unit, zeros};
use crate::linalg::{nullspace, BilinearMap, LinearMap, Space, SpanBuilder, SparseVec, Subspace, Vector};
use crate::report::{Check, VerificationReport};
use crate::scalar::{Field, Scalar};
use crate::sweep::{sweep, SweepMode};

#[derive(Debug, Clone)]
pub struct LieAlgebra {
    space: Space,
    bracket: BilinearMap,
    /// Summand tag of each basis vector, when the algebra was assembled.
    components: Option<Vec<String>>,
}

/// `(E, H, F)` with `[E,F] = H`, `[H,E] = 2E`, `[H,F] = −2F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2Triple {
    pub e: Vector,
    pub h: Vector,
    pub f: Vector,
}

impl LieAlgebra {
    pub fn new(space: Space, bracket: BilinearMap) -> Result<Self> {
        let n = space.dim();
        let (l, r, o) = bracket.dims();
        for d in [l, r, o] {
            if d != n {
                return Err(Error::Dimension { expected: n, got: d });
            }
        }
        Ok(LieAlgebra { space, bracket, components: None })
    }

    pub fn with_components(mut self, tags: Vec<String>) -> Result<Self> {
        if tags.len() != self.dim() {
            return Err(Error::Dimension { expected: self.dim(), got: tags.len() });
        }
        self.components = Some(tags);
        Ok(self)
    }

    /// The standard `sl₂` with basis `E, H, F`.
    pub fn sl2(field: Field) -> Self {
        let mut b = BilinearMap::zero(field, 3, 3, 3);
        let mut put = |i: usize, j: usize, k: usize, c: i64| {
            b.set(i, j, SparseVec::single(k, field.int(c))).expect("in range");
            b.set(j, i, SparseVec::single(k, field.int(-c))).expect("in range");
        };
        put(1, 0, 0, 2);
        put(1, 2, 2, -2);
        put(0, 2, 1, 1);
        LieAlgebra::new(Space::new(["E", "H", "F"]).expect("labels"), b).expect("dims")
    }

    pub fn field(&self) -> Field {
        self.bracket.field()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn bracket_map(&self) -> &BilinearMap {
        &self.bracket
    }

    pub fn components(&self) -> Option<&[String]> {
        self.components.as_deref()
    }

    pub fn basis(&self, i: usize) -> Vector {
        unit(self.field(), self.dim(), i)
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.bracket.apply(x, y).expect("elements of L")
    }

    /// `ad x = [x, ·]`
    pub fn ad(&self, x: &[Scalar]) -> LinearMap {
        self.bracket.left_operator(x).expect("element of L")
    }

    pub fn check_antisymmetry(&self) -> Check {
        let n = self.dim();
        let minus = -self.field().one();
        let mut c = Check::new("antisymmetry");
        for i in 0..n {
            for j in i..n {
                let ok = *self.bracket.get(i, j) == self.bracket.get(j, i).scaled(&minus);
                c.record(ok, || format!("({},{})", self.space.label(i), self.space.label(j)));
            }
        }
        c
    }

    /// Antisymmetry on all basis pairs and Jacobi on all triples `i < j < k`.
    pub fn check_jacobi(&self) -> VerificationReport {
        self.check_jacobi_with(SweepMode::Exhaustive)
    }

    /// As [`check_jacobi`](Self::check_jacobi); a sampled mode keeps the
    /// antisymmetry check exhaustive and draws Jacobi triples from the seed.
    pub fn check_jacobi_with(&self, mode: SweepMode) -> VerificationReport {
        if mode.is_exhaustive() {
            return self.check_jacobi_exhaustive();
        }
        let start = Instant::now();
        let n = self.dim();
        let mut report = VerificationReport::new("jacobi").with_dim("L", n);
        let anti = self.check_antisymmetry();
        let anti_ok = anti.passed();
        report.push(anti);
        if anti_ok {
            let b = &self.bracket;
            let eval = |t: &[usize]| {
                let cyc = [(t[0], t[1], t[2]), (t[1], t[2], t[0]), (t[2], t[0], t[1])];
                let mut sum = SparseVec::new();
                for (i, j, k) in cyc {
                    sum = sum.plus_scaled(&self.field().one(), &b.apply_basis_right(b.get(i, j), k));
                }
                Some(sum.is_zero())
            };
            let label = |t: &[usize]| {
                format!("({},{},{})", self.space.label(t[0]), self.space.label(t[1]), self.space.label(t[2]))
            };
            report.push(sweep("jacobi", &[n, n, n], mode, &mut None, eval, label));
        } else {
            report.note("Jacobi sweep skipped: bracket is not antisymmetric");
        }
        report.millis = Some(start.elapsed().as_millis() as u64);
        report
    }

    fn check_jacobi_exhaustive(&self) -> VerificationReport {
        let start = Instant::now();
        let mut report = VerificationReport::new("jacobi").with_dim("L", self.dim());
        let anti = self.check_antisymmetry();
        let anti_ok = anti.passed();
        report.push(anti);
        if anti_ok {
            report.push(jacobi::jacobi_check(&self.bracket, &self.space));
        } else {
            report.note("Jacobi sweep skipped: bracket is not antisymmetric");
        }
        report.millis = Some(start.elapsed().as_millis() as u64);
        report
    }

    /// Gram matrix of `κ(x,y) = tr(ad x ∘ ad y)` on the basis.
    pub fn killing_matrix(&self) -> Vec<Vector> {
        let n = self.dim();
        let f = self.field();
        // κ(i,j) = Σ_{k,l} c_{jk}^l c_{il}^k
        let mut m = vec![zeros(f, n); n];
        for i in 0..n {
            for j in i..n {
                let mut acc = f.zero();
                for k in 0..n {
                    for (l, c) in self.bracket.get(j, k).iter() {
                        if let Some(d) = self.bracket.get(i, *l).get(k) {
                            acc += &(c * d);
                        }
                    }
                }
                m[i][j] = acc.clone();
                m[j][i] = acc;
            }
        }
        m
    }

    pub fn killing_form(&self) -> BilinearMap {
        let n = self.dim();
        let m = self.killing_matrix();
        BilinearMap::from_fn(self.field(), n, n, 1, |i, j| SparseVec::single(0, m[i][j].clone()))
    }

    pub fn killing_rank(&self) -> usize {
        let m = self.killing_matrix();
        crate::linalg::rref(self.field(), &m, self.dim()).0.len()
    }

    /// `{x : [x, L] = 0}`
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let f = self.field();
        // Row (j,k): Σ_i x_i c_{ij}^k = 0.
        let mut rows = SpanBuilder::new(f, n);
        for j in 0..n {
            let mut per_k: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n];
            for i in 0..n {
                for (k, c) in self.bracket.get(i, j).iter() {
                    per_k[*k].push((i, c.clone()));
                }
            }
            for entries in per_k {
                if !entries.is_empty() {
                    rows.insert(&SparseVec::from_entries(entries));
                    if rows.rank() == n {
                        return Subspace::zero(f, n);
                    }
                }
            }
        }
        let dense: Vec<Vector> = rows.rows().map(|r| r.to_dense(f, n)).collect();
        Subspace::span_of_dense(f, n, &nullspace(f, &dense, n))
    }

    /// `[L, L]`
    pub fn derived_subalgebra(&self) -> Subspace {
        let n = self.dim();
        let mut b = SpanBuilder::new(self.field(), n);
        for i in 0..n {
            for j in i + 1..n {
                b.insert(self.bracket.get(i, j));
                if b.rank() == n {
                    return b.into_subspace();
                }
            }
        }
        b.into_subspace()
    }

    /// Killing rank, center and derived algebra in one report.
    pub fn invariants_report(&self) -> VerificationReport {
        let n = self.dim();
        let mut r = VerificationReport::new("invariants").with_dim("L", n);
        let rank = self.killing_rank();
        let center = self.center().dim();
        let derived = self.derived_subalgebra().dim();
        r.dim("killing_rank", rank);
        r.dim("center", center);
        r.dim("derived", derived);
        r.assert("killing_nondegenerate", rank == n, || format!("rank {rank} of {n}"));
        r.assert("center_zero", center == 0, || format!("dim center {center}"));
        r.assert("perfect", derived == n, || format!("dim [L,L] {derived}"));
        r
    }

    pub fn check_sl2_triple(&self, t: &Sl2Triple) -> Result<()> {
        let f = self.field();
        let ef = self.bracket(&t.e, &t.f);
        let he = self.bracket(&t.h, &t.e);
        let hf = self.bracket(&t.h, &t.f);
        if ef != t.h {
            return Err(Error::NotSl2Triple("[E,F] ≠ H".into()));
        }
        if he != crate::linalg::vector::scale(&f.int(2), &t.e) {
            return Err(Error::NotSl2Triple("[H,E] ≠ 2E".into()));
        }
        if hf != crate::linalg::vector::scale(&f.int(-2), &t.f) {
            return Err(Error::NotSl2Triple("[H,F] ≠ −2F".into()));
        }
        if crate::linalg::vector::is_zero(&t.e) {
            return Err(Error::NotSl2Triple("E = 0".into()));
        }
        Ok(())
    }

    /// The subalgebra spanned by `basis` (closed under the bracket), with
    /// coordinates in that basis.
    pub fn restrict(&self, sub: &Subspace, labels: Vec<String>) -> Result<LieAlgebra> {
        let basis = sub.basis_dense();
        let m = basis.len();
        let mut b = BilinearMap::zero(self.field(), m, m, m);
        for i in 0..m {
            for j in 0..m {
                let v = self.bracket(&basis[i], &basis[j]);
                let c = sub
                    .coordinates_dense(&v)
                    .ok_or_else(|| Error::NotClosed(format!("[{},{}]", labels[i], labels[j])))?;
                b.set(i, j, SparseVec::from_dense(&c))?;
            }
        }
        LieAlgebra::new(Space::new(labels)?, b)
    }
}

/// Bracket-closure of a set of subspaces acting on each other: every
/// `[x, y]` with `x ∈ actors`, `y ∈ target` lies in `target`.
pub(crate) fn closed_under(l: &LieAlgebra, actors: &[Vector], target: &Subspace) -> bool {
    let basis = target.basis_dense();
    actors.iter().all(|a| {
        let ad = l.ad(a);
        basis.iter().all(|v| target.contains_dense(&ad.apply(v).expect("dim")))
    })
}
