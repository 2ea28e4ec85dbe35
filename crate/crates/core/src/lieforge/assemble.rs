//! `L(J,T) = (sl(V)⊗J) ⊕ (V⊗T) ⊕ D` with `D` spanned by the inner maps
//! `D_{a,b}` and `d_{x,y}`.
//!
//! Basis order: `E⊗J, H⊗J, F⊗J, p⊗T, q⊗T`, then the reduced echelon basis
//! of `D` inside `End(J) ⊕ End(T)`.

use crate::error::{Error, Result};
use crate::jternary::{EvenOperator, JTernaryAlgebra};
use crate::linalg::vector::zeros;
use crate::linalg::{BilinearMap, Space, SpanBuilder, SparseVec, Vector};
use crate::scalar::Scalar;

use super::sl2;
use super::{LieAlgebra, Sl2Triple};

#[derive(Debug, Clone)]
pub struct AssembledL {
    pub lie: LieAlgebra,
    /// `(E⊗1, H⊗1, F⊗1)`
    pub triple: Sl2Triple,
    jt: JTernaryAlgebra,
    d_basis: Vec<EvenOperator>,
    d_span: SpanBuilder,
}

/// Certifies `jt` (Jordan identity, special module, the six axioms) and
/// assembles `L(J,T)`.
pub fn assemble_l(jt: &JTernaryAlgebra) -> Result<AssembledL> {
    let certs = [jt.jordan().check_jordan(), jt.check_special_module(), jt.check_jt_axioms()];
    for r in certs {
        if !r.passed() {
            return Err(Error::Precondition(format!(
                "input is not a J-ternary algebra ({}: {})",
                r.task,
                r.witness.unwrap_or_default()
            )));
        }
    }
    assemble_l_unchecked(jt)
}

/// Assembles without certifying the input; the bracket is still checked
/// for closure of `D`.
pub fn assemble_l_unchecked(jt: &JTernaryAlgebra) -> Result<AssembledL> {
    let f = jt.field();
    let (nj, nt) = (jt.dim_j(), jt.dim_t());
    let flat = EvenOperator::flat_len(nj, nt);

    let jb = |i: usize| jt.j_element(i);
    let tb = |i: usize| jt.t_element(i);
    let mut span = SpanBuilder::new(f, flat);
    for a in 0..nj {
        for b in a + 1..nj {
            span.insert(&jt.derived_big_d(&jb(a), &jb(b)).flatten());
        }
    }
    for x in 0..nt {
        for y in x..nt {
            span.insert(&jt.derived_d(&tb(x), &tb(y)).flatten());
        }
    }
    let d_basis: Vec<EvenOperator> =
        span.rows().map(|r| EvenOperator::unflatten(f, nj, nt, r)).collect();
    let m = d_basis.len();
    let n = 3 * nj + 2 * nt + m;
    let sl = |g: usize, a: usize| g * nj + a;
    let vv = |u: usize, x: usize| 3 * nj + u * nt + x;
    let dd = |k: usize| 3 * nj + 2 * nt + k;

    let coords = |op: &EvenOperator| -> Result<Vec<Scalar>> {
        span.coordinates(&op.flatten())
            .ok_or_else(|| Error::NotClosed("operator outside the span of D".into()))
    };
    let mut big_d = vec![vec![Vec::new(); nj]; nj];
    for a in 0..nj {
        for b in 0..nj {
            big_d[a][b] = coords(&jt.derived_big_d(&jb(a), &jb(b)))?;
        }
    }
    let mut small_d = vec![vec![Vec::new(); nt]; nt];
    for x in 0..nt {
        for y in 0..nt {
            small_d[x][y] = coords(&jt.derived_d(&tb(x), &tb(y)))?;
        }
    }
    let mut dd_coords = vec![Vec::new(); m * m];
    for k in 0..m {
        for l in 0..m {
            dd_coords[k * m + l] = coords(&d_basis[k].commutator(&d_basis[l]))
                .map_err(|_| Error::NotClosed(format!("[D{k},D{l}] outside D")))?;
        }
    }

    let int = |c: i64| f.int(c);
    let jp = jt.jordan().product();
    let bullet = jt.bullet_map();
    let skew = jt.skew_map();

    // Kind of each basis index: 0 = sl(V)⊗J, 1 = V⊗T, 2 = D.
    let kind = |i: usize| {
        if i < 3 * nj {
            (0, i / nj.max(1), i % nj.max(1))
        } else if i < 3 * nj + 2 * nt {
            let r = i - 3 * nj;
            (1, r / nt.max(1), r % nt.max(1))
        } else {
            (2, 0, i - 3 * nj - 2 * nt)
        }
    };
    let value = |i: usize, j: usize| -> SparseVec {
        let mut out: Vec<(usize, Scalar)> = Vec::new();
        let (ki, gi, ai) = kind(i);
        let (kj, gj, aj) = kind(j);
        match (ki, kj) {
            (0, 0) => {
                let br = sl2::bracket(gi, gj);
                for (g, c) in br.iter().enumerate().filter(|(_, c)| **c != 0) {
                    for (k, v) in jp.get(ai, aj).iter() {
                        out.push((sl(g, *k), &int(*c) * v));
                    }
                }
                let t = sl2::trace_form(gi, gj);
                if t != 0 {
                    for (k, v) in big_d[ai][aj].iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                        out.push((dd(k), &int(2 * t) * v));
                    }
                }
            }
            (0, 1) | (1, 0) => {
                let (g, a, u, x, sign) =
                    if ki == 0 { (gi, ai, gj, aj, 1) } else { (gj, aj, gi, ai, -1) };
                let fu = sl2::act(g, u);
                for (w, c) in fu.iter().enumerate().filter(|(_, c)| **c != 0) {
                    for (k, v) in bullet.get(a, x).iter() {
                        out.push((vv(w, *k), &int(sign * c) * v));
                    }
                }
            }
            (1, 1) => {
                let gm = sl2::gamma(gi, gj);
                for (g, c) in gm.iter().enumerate().filter(|(_, c)| **c != 0) {
                    for (k, v) in skew.get(ai, aj).iter() {
                        out.push((sl(g, *k), &int(*c) * v));
                    }
                }
                let s = sl2::form(gi, gj);
                if s != 0 {
                    for (k, v) in small_d[ai][aj].iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                        out.push((dd(k), &int(s) * v));
                    }
                }
            }
            (2, 0) | (0, 2) => {
                let (k, g, a, sign) = if ki == 2 { (ai, gj, aj, 1) } else { (aj, gi, ai, -1) };
                for (c, v) in d_basis[k].on_j.column(a).iter() {
                    out.push((sl(g, *c), &int(sign) * v));
                }
            }
            (2, 1) | (1, 2) => {
                let (k, u, x, sign) = if ki == 2 { (ai, gj, aj, 1) } else { (aj, gi, ai, -1) };
                for (c, v) in d_basis[k].on_t.column(x).iter() {
                    out.push((vv(u, *c), &int(sign) * v));
                }
            }
            (2, 2) => {
                for (l, v) in dd_coords[ai * m + aj].iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                    out.push((dd(l), v.clone()));
                }
            }
            _ => unreachable!(),
        }
        SparseVec::from_entries(out)
    };
    let bracket = BilinearMap::from_fn(f, n, n, n, value);

    let jl = jt.jordan().space().labels();
    let tl = jt.t_space().labels();
    let mut labels = Vec::with_capacity(n);
    let mut tags = Vec::with_capacity(n);
    for g in sl2::LABELS {
        for a in jl {
            labels.push(format!("{g}⊗{a}"));
            tags.push("sl(V)⊗J".to_string());
        }
    }
    for u in sl2::V_LABELS {
        for x in tl {
            labels.push(format!("{u}⊗{x}"));
            tags.push("V⊗T".to_string());
        }
    }
    for k in 0..m {
        labels.push(format!("D{k}"));
        tags.push("D".to_string());
    }
    let lie = LieAlgebra::new(Space::new(labels)?, bracket)?.with_components(tags)?;

    let one = jt.jordan().unit();
    let tensor = |g: usize| {
        let mut v = zeros(f, n);
        for (a, c) in one.iter().enumerate() {
            v[sl(g, a)] = c.clone();
        }
        v
    };
    let triple = Sl2Triple { e: tensor(0), h: tensor(1), f: tensor(2) };
    Ok(AssembledL { lie, triple, jt: jt.clone(), d_basis, d_span: span })
}

impl AssembledL {
    pub fn jt(&self) -> &JTernaryAlgebra {
        &self.jt
    }

    pub fn dim_d(&self) -> usize {
        self.d_basis.len()
    }

    pub fn d_basis(&self) -> &[EvenOperator] {
        &self.d_basis
    }

    /// `(dim sl(V)⊗J, dim V⊗T, dim D)`
    pub fn component_dims(&self) -> (usize, usize, usize) {
        (3 * self.jt.dim_j(), 2 * self.jt.dim_t(), self.dim_d())
    }

    /// `g⊗a` for `g ∈ {E, H, F}` (index 0, 1, 2).
    pub fn sl_element(&self, g: usize, a: &[Scalar]) -> Vector {
        let nj = self.jt.dim_j();
        let mut v = zeros(self.jt.field(), self.lie.dim());
        for (i, c) in a.iter().enumerate() {
            v[g * nj + i] = c.clone();
        }
        v
    }

    /// `u⊗x` for `u ∈ {p, q}` (index 0, 1).
    pub fn v_element(&self, u: usize, x: &[Scalar]) -> Vector {
        let (nj, nt) = (self.jt.dim_j(), self.jt.dim_t());
        let mut v = zeros(self.jt.field(), self.lie.dim());
        for (i, c) in x.iter().enumerate() {
            v[3 * nj + u * nt + i] = c.clone();
        }
        v
    }

    /// Coordinates of an even operator lying in `D`.
    pub fn d_element(&self, op: &EvenOperator) -> Result<Vector> {
        let c = self
            .d_span
            .coordinates(&op.flatten())
            .ok_or_else(|| Error::NotInSpan("operator is not in D".into()))?;
        let off = 3 * self.jt.dim_j() + 2 * self.jt.dim_t();
        let mut v = zeros(self.jt.field(), self.lie.dim());
        for (k, x) in c.into_iter().enumerate() {
            v[off + k] = x;
        }
        Ok(v)
    }

    /// The element `D_{a,b}` of `L`.
    pub fn big_d_element(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        self.d_element(&self.jt.derived_big_d(a, b)).expect("D_{a,b} lies in D")
    }

    /// The `D`-component of an element of `L` as an even operator.
    pub fn d_part(&self, v: &[Scalar]) -> EvenOperator {
        let (nj, nt) = (self.jt.dim_j(), self.jt.dim_t());
        let off = 3 * nj + 2 * nt;
        let mut acc = EvenOperator::zero(self.jt.field(), nj, nt);
        for (k, op) in self.d_basis.iter().enumerate() {
            if !v[off + k].is_zero() {
                acc = acc.plus_scaled(&v[off + k], op);
            }
        }
        acc
    }
}
