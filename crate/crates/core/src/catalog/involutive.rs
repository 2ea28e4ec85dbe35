//! Algebras with involution, hermitian modules and the prototypical
//! J-ternary algebra `(H(A,*), T)`.

use crate::algebra::StructureAlgebra;
use crate::error::{Error, Result};
use crate::jordan::JordanAlgebra;
use crate::jternary::{EvenOperator, JTernaryAlgebra};
use crate::linalg::{
    eigenspace, BilinearMap, LinearMap, Space, SpanBuilder, SparseVec, Subspace, TrilinearMap,
    Vector,
};
use crate::report::{Check, VerificationReport};
use crate::scalar::{Field, Scalar};

use super::combo_label;

/// An algebra with an involution and its symmetric and skew parts.
#[derive(Debug, Clone)]
pub struct InvolutiveAlgebra {
    algebra: StructureAlgebra,
    involution: LinearMap,
    sym: Subspace,
    skew: Subspace,
}

impl InvolutiveAlgebra {
    /// Validates that `involution` is an anti-automorphism of period 2.
    pub fn new(algebra: StructureAlgebra, involution: LinearMap) -> Result<Self> {
        let n = algebra.dim();
        if involution.domain() != n || involution.codomain() != n {
            return Err(Error::Dimension { expected: n, got: involution.domain() });
        }
        let star = |v: &SparseVec| -> SparseVec {
            let mut out = SparseVec::new();
            for (i, c) in v.iter() {
                out = out.plus_scaled(c, involution.column(*i));
            }
            out
        };
        for i in 0..n {
            for j in 0..n {
                let lhs = star(algebra.mul_basis(i, j));
                let rhs = algebra.product().apply_sparse(involution.column(j), involution.column(i));
                if lhs != rhs {
                    return Err(Error::Precondition(format!(
                        "involution is not an anti-automorphism at ({},{})",
                        algebra.label(i),
                        algebra.label(j)
                    )));
                }
            }
        }
        Self::with_period_two_map(algebra, involution)
    }

    /// Accepts any linear map of period 2, without requiring it to reverse
    /// products. Used to probe identities on maps that are not
    /// involutions, such as the identity map of a non-commutative algebra.
    pub fn with_period_two_map(algebra: StructureAlgebra, map: LinearMap) -> Result<Self> {
        let n = algebra.dim();
        let f = algebra.field();
        if map.domain() != n || map.codomain() != n {
            return Err(Error::Dimension { expected: n, got: map.domain() });
        }
        if !map.compose(&map)?.plus_scaled(&-f.one(), &LinearMap::identity(f, n)).is_zero() {
            return Err(Error::Precondition("map does not have period 2".into()));
        }
        let sym = eigenspace(&map, &f.one());
        let skew = eigenspace(&map, &-f.one());
        if sym.dim() + skew.dim() != n {
            return Err(Error::NotExhaustive { found: sym.dim() + skew.dim(), dim: n });
        }
        Ok(InvolutiveAlgebra { algebra, involution: map, sym, skew })
    }

    pub fn algebra(&self) -> &StructureAlgebra {
        &self.algebra
    }

    pub fn involution(&self) -> &LinearMap {
        &self.involution
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `H(A,*)`
    pub fn symmetric(&self) -> &Subspace {
        &self.sym
    }

    /// `Skew(A,*)`
    pub fn skew(&self) -> &Subspace {
        &self.skew
    }

    pub fn star(&self, a: &[Scalar]) -> Vector {
        self.involution.apply(a).expect("element of A")
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        self.algebra.mul(a, b)
    }

    /// Labels for the canonical basis of a subspace of `A`.
    pub fn labels_of(&self, sub: &Subspace) -> Vec<String> {
        sub.basis().iter().map(|v| combo_label(self.algebra.space(), v)).collect()
    }
}

/// A left `A`-module `T` with a skew-hermitian form `h : T × T → A`:
/// `h(ax, y) = a h(x,y)` and `h(y,x) = −h(x,y)*`.
#[derive(Debug, Clone)]
pub struct HermitianModule {
    a: InvolutiveAlgebra,
    t: Space,
    action: BilinearMap,
    h: BilinearMap,
}

impl HermitianModule {
    pub fn new(a: InvolutiveAlgebra, t: Space, action: BilinearMap, h: BilinearMap) -> Result<Self> {
        let (na, nt) = (a.dim(), t.dim());
        if action.dims() != (na, nt, nt) {
            return Err(Error::Precondition(format!("action shape {:?}, expected {:?}", action.dims(), (na, nt, nt))));
        }
        if h.dims() != (nt, nt, na) {
            return Err(Error::Precondition(format!("form shape {:?}, expected {:?}", h.dims(), (nt, nt, na))));
        }
        let m = HermitianModule { a, t, action, h };
        let r = m.check();
        if !r.passed() {
            return Err(Error::Precondition(format!(
                "not a skew-hermitian module: {}",
                r.witness.unwrap_or_default()
            )));
        }
        Ok(m)
    }

    /// Module axioms, `A`-linearity of `h` in the first slot and the
    /// skew-hermitian symmetry, on all basis tuples.
    pub fn check(&self) -> VerificationReport {
        let f = self.field();
        let (na, nt) = (self.a.dim(), self.t.dim());
        let alg = self.a.algebra();
        let mut r = VerificationReport::new("hermitian_module").with_dim("A", na).with_dim("T", nt);
        let mut module = Check::new("module_associativity");
        for i in 0..na {
            for j in 0..na {
                for x in 0..nt {
                    let lhs = self.action.apply_sparse(alg.mul_basis(i, j), &SparseVec::single(x, f.one()));
                    let rhs = self.action.apply_basis_left(i, self.action.get(j, x));
                    module.record(lhs == rhs, || format!("({},{},{})", alg.label(i), alg.label(j), self.t.label(x)));
                }
            }
        }
        r.push(module);
        let mut unital = Check::new("unit_acts_as_identity");
        match alg.find_unit() {
            Some(one) => {
                let one = SparseVec::from_dense(&one);
                for x in 0..nt {
                    let v = self.action.apply_sparse(&one, &SparseVec::single(x, f.one()));
                    unital.record(v == SparseVec::single(x, f.one()), || self.t.label(x).to_string());
                }
            }
            None => unital.record(false, || "A has no unit".into()),
        }
        r.push(unital);
        let mut linear = Check::new("h_left_linear");
        for i in 0..na {
            for x in 0..nt {
                for y in 0..nt {
                    let lhs = self.h.apply_sparse(self.action.get(i, x), &SparseVec::single(y, f.one()));
                    let rhs = alg.product().apply_basis_left(i, self.h.get(x, y));
                    linear.record(lhs == rhs, || format!("({},{},{})", alg.label(i), self.t.label(x), self.t.label(y)));
                }
            }
        }
        r.push(linear);
        let mut skew = Check::new("h_skew_hermitian");
        for x in 0..nt {
            for y in 0..nt {
                let hyx = self.h.get(y, x).to_dense(f, na);
                let lhs = self.h.get(x, y).to_dense(f, na);
                let rhs: Vector = self.a.star(&hyx).iter().map(|c| -c.clone()).collect();
                skew.record(lhs == rhs, || format!("({},{})", self.t.label(x), self.t.label(y)));
            }
        }
        r.push(skew);
        r
    }

    pub fn field(&self) -> Field {
        self.a.field()
    }

    pub fn algebra(&self) -> &InvolutiveAlgebra {
        &self.a
    }

    pub fn t_space(&self) -> &Space {
        &self.t
    }

    pub fn dim_t(&self) -> usize {
        self.t.dim()
    }

    pub fn action(&self) -> &BilinearMap {
        &self.action
    }

    pub fn form(&self) -> &BilinearMap {
        &self.h
    }

    pub fn h(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.h.apply(x, y).expect("elements of T")
    }

    pub fn act(&self, a: &[Scalar], x: &[Scalar]) -> Vector {
        self.action.apply(a, x).expect("element of A and T")
    }

    /// `φ_{x,y} : z ↦ h(z,x)y + h(z,y)x`
    pub fn phi(&self, x: &[Scalar], y: &[Scalar]) -> LinearMap {
        let f = self.field();
        let nt = self.dim_t();
        let cols: Vec<Vector> = (0..nt)
            .map(|z| {
                let zv = crate::linalg::vector::unit(f, nt, z);
                let a = self.act(&self.h(&zv, x), y);
                let b = self.act(&self.h(&zv, y), x);
                crate::linalg::vector::add(&a, &b)
            })
            .collect();
        LinearMap::from_dense_columns(f, nt, &cols).expect("square")
    }

    /// The module `W = (V⊗A) ⊕ T` with `h(u⊗a, v⊗b) = 2(u|v)ab*` on `V⊗A`,
    /// `V⊗A ⊥ T`, and `V = ⟨p,q⟩`, `(p|q) = 1`.
    pub fn extend_with_plane(&self) -> Result<HermitianModule> {
        let f = self.field();
        let (na, nt) = (self.a.dim(), self.dim_t());
        let alg = self.a.algebra();
        let mut labels = Vec::with_capacity(2 * na + nt);
        for u in crate::lieforge::sl2::V_LABELS {
            for i in 0..na {
                labels.push(format!("{u}⊗{}", alg.label(i)));
            }
        }
        labels.extend(self.t.labels().iter().cloned());
        let nw = 2 * na + nt;
        let action = BilinearMap::from_fn(f, na, nw, nw, |i, w| {
            if w < 2 * na {
                let (u, b) = (w / na, w % na);
                SparseVec::from_entries(alg.mul_basis(i, b).iter().map(|(k, c)| (u * na + k, c.clone())).collect())
            } else {
                SparseVec::from_entries(
                    self.action.get(i, w - 2 * na).iter().map(|(k, c)| (2 * na + k, c.clone())).collect(),
                )
            }
        });
        let h = BilinearMap::from_fn(f, nw, nw, na, |x, y| {
            if x < 2 * na && y < 2 * na {
                let (u, a) = (x / na, x % na);
                let (v, b) = (y / na, y % na);
                let s = crate::lieforge::sl2::form(u, v);
                if s == 0 {
                    return SparseVec::new();
                }
                let bstar = self.a.star(&crate::linalg::vector::unit(f, na, b));
                let ab = alg.mul(&crate::linalg::vector::unit(f, na, a), &bstar);
                SparseVec::from_dense(&ab).scaled(&f.int(2 * s))
            } else if x >= 2 * na && y >= 2 * na {
                self.h.get(x - 2 * na, y - 2 * na).clone()
            } else {
                SparseVec::new()
            }
        });
        HermitianModule::new(self.a.clone(), Space::new(labels)?, action, h)
    }

    /// `Skew(End_A(T), τ)`: `A`-linear maps `g` with `h(gx,y) + h(x,gy) = 0`.
    pub fn skew_endomorphisms(&self) -> Vec<LinearMap> {
        let f = self.field();
        let (na, nt) = (self.a.dim(), self.dim_t());
        // Unknown g has entries g[r][c] at flat index c*nt + r.
        let n = nt * nt;
        let mut rows = SpanBuilder::new(f, n);
        for i in 0..na {
            for x in 0..nt {
                // g(a x) − a g(x) = 0, coordinatewise in T.
                let mut per: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); nt];
                for (c, v) in self.action.get(i, x).iter() {
                    for r in 0..nt {
                        per[r].push((c * nt + r, v.clone()));
                    }
                }
                for r in 0..nt {
                    for (k, v) in self.action.get(i, r).iter() {
                        per[*k].push((x * nt + r, -v.clone()));
                    }
                }
                for e in per {
                    rows.insert(&SparseVec::from_entries(e));
                }
            }
        }
        for x in 0..nt {
            for y in x..nt {
                // Σ_r g[r][x] h(r,y) + Σ_r g[r][y] h(x,r) = 0, coordinatewise in A.
                let mut per: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); na];
                for r in 0..nt {
                    for (k, v) in self.h.get(r, y).iter() {
                        per[*k].push((x * nt + r, v.clone()));
                    }
                    for (k, v) in self.h.get(x, r).iter() {
                        per[*k].push((y * nt + r, v.clone()));
                    }
                }
                for e in per {
                    rows.insert(&SparseVec::from_entries(e));
                }
            }
        }
        let dense: Vec<Vector> = rows.rows().map(|r| r.to_dense(f, n)).collect();
        crate::linalg::nullspace(f, &dense, n)
            .into_iter()
            .map(|v| LinearMap::unflatten(f, nt, nt, &SparseVec::from_dense(&v)))
            .collect()
    }

    /// `[g, φ_{x,y}] = φ_{g(x),y} + φ_{x,g(y)}` for `g` in a basis of
    /// `Skew(End_A(T), τ)` and all basis pairs.
    pub fn check_phi_equivariance(&self) -> Check {
        let f = self.field();
        let nt = self.dim_t();
        let gs = self.skew_endomorphisms();
        let mut c = Check::new("phi_equivariance");
        for (k, g) in gs.iter().enumerate() {
            for x in 0..nt {
                for y in x..nt {
                    let (xv, yv) = (crate::linalg::vector::unit(f, nt, x), crate::linalg::vector::unit(f, nt, y));
                    let lhs = g.commutator(&self.phi(&xv, &yv)).expect("square");
                    let gx = g.apply(&xv).expect("dim");
                    let gy = g.apply(&yv).expect("dim");
                    let rhs = self.phi(&gx, &yv).add(&self.phi(&xv, &gy));
                    c.record(lhs.plus_scaled(&-f.one(), &rhs).is_zero(), || {
                        format!("g{k} ({},{})", self.t.label(x), self.t.label(y))
                    });
                }
            }
        }
        c
    }
}

/// `(J, T) = (H(A,*), T)` with `a·b = ½(ab+ba)`, `a•x = ax`,
/// `⟨x|y⟩ = h(x,y) − h(y,x)` and `⟨x,y,z⟩ = h(x,y)z + h(z,x)y + h(z,y)x`.
pub fn prototypical(m: &HermitianModule) -> Result<JTernaryAlgebra> {
    let a = m.algebra();
    let alg = a.algebra();
    let assoc = alg.check_associative();
    if !assoc.passed() {
        return Err(Error::Precondition(format!(
            "A is not associative at {}",
            assoc.witness.unwrap_or_default()
        )));
    }
    let f = a.field();
    let half = f.ratio(1, 2);
    let (na, nt) = (a.dim(), m.dim_t());
    let sym = a.symmetric();
    let hb = sym.basis_dense();
    let nj = hb.len();
    let in_h = |v: &[Scalar]| -> Result<SparseVec> {
        sym.coordinates_dense(v)
            .map(|c| SparseVec::from_dense(&c))
            .ok_or_else(|| Error::NotInSpan("value is not symmetric".into()))
    };
    let mut product = BilinearMap::zero(f, nj, nj, nj);
    for i in 0..nj {
        for j in 0..nj {
            let ab = a.mul(&hb[i], &hb[j]);
            let ba = a.mul(&hb[j], &hb[i]);
            let s: Vector = ab.iter().zip(&ba).map(|(x, y)| &half * &(x + y)).collect();
            product.set(i, j, in_h(&s)?)?;
        }
    }
    let one = alg.find_unit().ok_or_else(|| Error::Precondition("A has no unit".into()))?;
    let unit = sym
        .coordinates_dense(&one)
        .ok_or_else(|| Error::NotInSpan("unit of A is not symmetric".into()))?;
    let jordan = JordanAlgebra::new(Space::new(a.labels_of(sym))?, product, unit)?;
    let hs: Vec<SparseVec> = hb.iter().map(|v| SparseVec::from_dense(v)).collect();
    let bullet = BilinearMap::from_fn(f, nj, nt, nt, |i, x| {
        m.action().apply_sparse(&hs[i], &SparseVec::single(x, f.one()))
    });
    let mut skew = BilinearMap::zero(f, nt, nt, nj);
    for x in 0..nt {
        for y in 0..nt {
            let v = m.form().get(x, y).plus_scaled(&-f.one(), m.form().get(y, x));
            skew.set(x, y, in_h(&v.to_dense(f, na))?)?;
        }
    }
    let hf = m.form();
    let act = m.action();
    let triple = TrilinearMap::from_fn(f, [nt, nt, nt], nt, |x, y, z| {
        let t1 = act.apply_basis_right(hf.get(x, y), z);
        let t2 = act.apply_basis_right(hf.get(z, x), y);
        let t3 = act.apply_basis_right(hf.get(z, y), x);
        t1.plus_scaled(&f.one(), &t2).plus_scaled(&f.one(), &t3)
    });
    JTernaryAlgebra::new(jordan, m.t_space().clone(), bullet, skew, triple)
}

/// Operators of the derivation algebra `(id⊗Skew(A,*)) ⊕ Skew(End_A(T),τ)`
/// acting on `J ⊕ T`, and its abstract dimension.
#[derive(Debug, Clone)]
pub struct OuterDerivations {
    /// `dim Skew(A,*)`
    pub skew_a: usize,
    /// `dim Skew(End_A(T), τ)`
    pub skew_end_t: usize,
    /// Span of the induced even operators (flattened).
    pub image: Subspace,
}

impl OuterDerivations {
    pub fn abstract_dim(&self) -> usize {
        self.skew_a + self.skew_end_t
    }
}

/// `id⊗s` acts on `J` by `a ↦ as − sa` and on `T` by `z ↦ −sz`; `g` in
/// `Skew(End_A(T),τ)` acts on `T` only.
pub fn outer_derivations(m: &HermitianModule, jt: &JTernaryAlgebra) -> OuterDerivations {
    let a = m.algebra();
    let f = a.field();
    let (nj, nt) = (jt.dim_j(), jt.dim_t());
    let hb = a.symmetric().basis_dense();
    let mut image = SpanBuilder::new(f, EvenOperator::flat_len(nj, nt));
    let skew_basis = a.skew().basis_dense();
    for s in &skew_basis {
        let on_j: Vec<Vector> = hb
            .iter()
            .map(|h| {
                let v = crate::linalg::vector::sub(&a.mul(h, s), &a.mul(s, h));
                a.symmetric().coordinates_dense(&v).expect("commutator with skew stays symmetric")
            })
            .collect();
        let on_t: Vec<Vector> = (0..nt)
            .map(|z| {
                let v = m.act(s, &crate::linalg::vector::unit(f, nt, z));
                v.iter().map(|c| -c.clone()).collect()
            })
            .collect();
        let op = EvenOperator {
            on_j: LinearMap::from_dense_columns(f, nj, &on_j).expect("square"),
            on_t: LinearMap::from_dense_columns(f, nt, &on_t).expect("square"),
        };
        image.insert(&op.flatten());
    }
    let ends = m.skew_endomorphisms();
    for g in &ends {
        let op = EvenOperator { on_j: LinearMap::zero(f, nj, nj), on_t: g.clone() };
        image.insert(&op.flatten());
    }
    OuterDerivations { skew_a: skew_basis.len(), skew_end_t: ends.len(), image: image.into_subspace() }
}

/// `d_{x,y} = −2φ_{x,y} + id⊗(h(x,y) + h(y,x))` on all basis pairs.
pub fn check_prototypical_d(m: &HermitianModule, jt: &JTernaryAlgebra) -> Check {
    let a = m.algebra();
    let f = a.field();
    let nt = jt.dim_t();
    let hb = a.symmetric().basis_dense();
    let mut c = Check::new("d_is_minus_2phi_plus_id_tensor_s");
    for x in 0..nt {
        for y in 0..nt {
            let (xv, yv) = (jt.t_element(x), jt.t_element(y));
            let d = jt.derived_d(&xv, &yv);
            let s = crate::linalg::vector::add(&m.h(&xv, &yv), &m.h(&yv, &xv));
            let phi = m.phi(&xv, &yv);
            let mut ok = true;
            for (i, h) in hb.iter().enumerate() {
                let v = crate::linalg::vector::sub(&a.mul(h, &s), &a.mul(&s, h));
                let expect = a.symmetric().coordinates_dense(&v);
                let got = d.on_j.apply(&jt.j_element(i)).expect("dim");
                ok &= expect.as_deref() == Some(&got[..]);
            }
            for z in 0..nt {
                let zv = jt.t_element(z);
                let sz = m.act(&s, &zv);
                let pz = phi.apply(&zv).expect("dim");
                let expect: Vector = pz.iter().zip(&sz).map(|(p, q)| &(&f.int(-2) * p) - q).collect();
                ok &= d.on_t.apply(&zv).expect("dim") == expect;
            }
            c.record(ok, || format!("({},{})", jt.t_space().label(x), jt.t_space().label(y)));
        }
    }
    c
}

/// `⟨x|y⟩` is symmetric: `h(x,y) − h(y,x) = h(x,y) + h(x,y)*`.
pub fn check_skew_form_symmetric(m: &HermitianModule) -> Check {
    let a = m.algebra();
    let f = a.field();
    let nt = m.dim_t();
    let mut c = Check::new("skew_form_lands_in_H");
    for x in 0..nt {
        for y in 0..nt {
            let (xv, yv) = (crate::linalg::vector::unit(f, nt, x), crate::linalg::vector::unit(f, nt, y));
            let hxy = m.h(&xv, &yv);
            let lhs = crate::linalg::vector::sub(&hxy, &m.h(&yv, &xv));
            let rhs = crate::linalg::vector::add(&hxy, &a.star(&hxy));
            c.record(lhs == rhs && a.symmetric().contains_dense(&lhs), || {
                format!("({},{})", m.t_space().label(x), m.t_space().label(y))
            });
        }
    }
    c
}
