//! The Kantor construction `K(A,−) = S~ ⊕ A~ ⊕ Instrl ⊕ A ⊕ S`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::lieforge::{Grading, LieAlgebra, Sl2Triple};
use crate::linalg::vector::{add, zeros};
use crate::linalg::{BilinearMap, LinearMap, Space, SparseVec, Subspace, Vector};
use crate::scalar::Scalar;

use super::structurable::{epsilon, inverse_skew, Instrl, StructurableAlgebra};

/// `K(A,−)` with its grading by weights `−2, …, 2`. Basis order: `S~`,
/// `A~`, `Instrl`, `A`, `S`.
#[derive(Debug, Clone)]
pub struct KantorAlgebra {
    pub lie: LieAlgebra,
    pub instrl: Instrl,
    /// `(dim S, dim A, dim Instrl)`
    pub dims: (usize, usize, usize),
    s_basis: Vec<Vector>,
    s_space: Subspace,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Kind {
    St,
    At,
    I,
    Ax,
    Sx,
}

impl KantorAlgebra {
    fn offsets(&self) -> [usize; 5] {
        let (ns, n, m) = self.dims;
        [0, ns, ns + n, ns + n + m, ns + 2 * n + m]
    }

    pub fn dim(&self) -> usize {
        self.lie.dim()
    }

    fn place(&self, block: usize, coords: &[Scalar]) -> Vector {
        let mut v = zeros(self.lie.field(), self.dim());
        let off = self.offsets()[block];
        for (i, c) in coords.iter().enumerate() {
            v[off + i] = c.clone();
        }
        v
    }

    fn s_coords(&self, s: &[Scalar]) -> Result<Vec<Scalar>> {
        self.s_space.coordinates_dense(s).ok_or_else(|| Error::NotInSpan("element is not skew".into()))
    }

    /// `s~` for `s ∈ S` (weight −2).
    pub fn s_tilde(&self, s: &[Scalar]) -> Result<Vector> {
        Ok(self.place(0, &self.s_coords(s)?))
    }

    /// `x~` for `x ∈ A` (weight −1).
    pub fn a_tilde(&self, x: &[Scalar]) -> Vector {
        self.place(1, x)
    }

    /// An element of `Instrl` given by its operator.
    pub fn instrl_element(&self, t: &LinearMap) -> Result<Vector> {
        let c = self.instrl.coordinates(t).ok_or_else(|| Error::NotInSpan("operator is not in Instrl".into()))?;
        Ok(self.place(2, &c))
    }

    /// `x ∈ A` (weight 1).
    pub fn a_element(&self, x: &[Scalar]) -> Vector {
        self.place(3, x)
    }

    /// `s ∈ S` (weight 2).
    pub fn s_element(&self, s: &[Scalar]) -> Result<Vector> {
        Ok(self.place(4, &self.s_coords(s)?))
    }

    /// `(E, H, F) = (s', id, s~)` with `L_{s'} = L_s⁻¹`.
    pub fn sl2_triple(&self, a: &StructurableAlgebra, s: &[Scalar]) -> Result<Sl2Triple> {
        let sp = inverse_skew(a, s)?;
        let e = self.s_element(&sp)?;
        let f = self.s_tilde(s)?;
        let h = self.lie.bracket(&e, &f);
        let id = self.instrl_element(&LinearMap::identity(a.field(), a.dim()))?;
        if h != id {
            return Err(Error::NotSl2Triple("[s', s~] ≠ id".into()));
        }
        let t = Sl2Triple { e, h, f };
        self.lie.check_sl2_triple(&t)?;
        Ok(t)
    }

    /// The five summands as a grading.
    pub fn grading(&self) -> Grading {
        let f = self.lie.field();
        let n = self.dim();
        let o = self.offsets();
        let mut pieces = BTreeMap::new();
        for (k, w) in (-2..=2).enumerate() {
            let end = if k == 4 { n } else { o[k + 1] };
            pieces.insert(w, Subspace::span_of(f, n, (o[k]..end).map(|i| SparseVec::single(i, f.one()))));
        }
        Grading { pieces }
    }

    pub fn s_basis(&self) -> &[Vector] {
        &self.s_basis
    }
}

/// Builds `K(A,−)` with the bracket table
/// `[T,x] = T(x)`, `[T,x~] = (T^ε x)~`, `[T,s] = T(s) + s·conj(T(1))`,
/// `[T,s~] = (T^ε s + s·conj(T^ε(1)))~`, `[x,y] = 2(xȳ − yx̄)`,
/// `[x~,y~] = 2(xȳ − yx̄)~`, `[x,y~] = 2V_{x,y}`, `[s,t~] = L_s L_t`,
/// `[x,s~] = −(sx)~`, `[x~,s] = −sx`.
pub fn kantor(a: &StructurableAlgebra) -> Result<KantorAlgebra> {
    let f = a.field();
    let n = a.dim();
    let instrl = a.instrl()?;
    let m = instrl.dim();
    let s_space = a.skew().clone();
    let s_basis = s_space.basis_dense();
    let ns = s_basis.len();
    let total = 2 * ns + 2 * n + m;
    let o = [0, ns, ns + n, ns + n + m, ns + 2 * n + m];
    let two = f.int(2);
    let minus = -f.one();

    let in_s = |v: &[Scalar]| -> Result<SparseVec> {
        s_space
            .coordinates_dense(v)
            .map(|c| SparseVec::from_dense(&c))
            .ok_or_else(|| Error::NotClosed("value expected in S".into()))
    };
    let in_i = |t: &LinearMap| -> Result<SparseVec> {
        instrl
            .coordinates(t)
            .map(|c| SparseVec::from_dense(&c))
            .ok_or_else(|| Error::NotClosed("operator expected in Instrl".into()))
    };

    // Per-basis data of Instrl.
    let tb = instrl.basis();
    let eps: Vec<LinearMap> = tb.iter().map(|t| epsilon(a, t)).collect();
    let conj_t1: Vec<Vector> = tb.iter().map(|t| a.conj(&t.apply(a.unit()).expect("dim"))).collect();
    let conj_e1: Vec<Vector> = eps.iter().map(|t| a.conj(&t.apply(a.unit()).expect("dim"))).collect();
    let mut ii = vec![SparseVec::new(); m * m];
    for i in 0..m {
        for j in i + 1..m {
            let c = in_i(&tb[i].commutator(&tb[j])?)?;
            ii[j * m + i] = c.scaled(&minus);
            ii[i * m + j] = c;
        }
    }
    // [T, s] and [T, s~] in S coordinates.
    let mut is = vec![SparseVec::new(); m * ns];
    let mut ist = vec![SparseVec::new(); m * ns];
    for k in 0..m {
        for (j, s) in s_basis.iter().enumerate() {
            let v = add(&tb[k].apply(s)?, &a.mul(s, &conj_t1[k]));
            is[k * ns + j] = in_s(&v)?;
            let w = add(&eps[k].apply(s)?, &a.mul(s, &conj_e1[k]));
            ist[k * ns + j] = in_s(&w)?;
        }
    }
    // [x, y] = 2(xȳ − yx̄) in S coordinates.
    let mut aa = vec![SparseVec::new(); n * n];
    let conj: Vec<Vector> = (0..n).map(|i| a.conj(&a.algebra().basis(i))).collect();
    for x in 0..n {
        for y in 0..n {
            let xv = a.algebra().basis(x);
            let yv = a.algebra().basis(y);
            let d = crate::linalg::vector::sub(&a.mul(&xv, &conj[y]), &a.mul(&yv, &conj[x]));
            aa[x * n + y] = in_s(&d)?.scaled(&two);
        }
    }
    // [x, y~] = 2V_{x,y} in Instrl coordinates.
    let mut av = vec![SparseVec::new(); n * n];
    for x in 0..n {
        for y in 0..n {
            let cols: Vec<SparseVec> = (0..n).map(|u| a.v_table().get(x, y, u).clone()).collect();
            av[x * n + y] = in_i(&LinearMap::from_columns(f, n, cols)?)?.scaled(&two);
        }
    }
    // [s, t~] = L_s L_t in Instrl coordinates.
    let ls: Vec<LinearMap> = s_basis.iter().map(|s| a.left_mult(s)).collect();
    let mut sst = vec![SparseVec::new(); ns * ns];
    for i in 0..ns {
        for j in 0..ns {
            sst[i * ns + j] = in_i(&ls[i].compose(&ls[j])?)?;
        }
    }
    let sbs: Vec<SparseVec> = s_basis.iter().map(|s| SparseVec::from_dense(s)).collect();
    let prod = a.algebra().product();

    let kind = |i: usize| -> (Kind, usize) {
        if i < o[1] {
            (Kind::St, i)
        } else if i < o[2] {
            (Kind::At, i - o[1])
        } else if i < o[3] {
            (Kind::I, i - o[2])
        } else if i < o[4] {
            (Kind::Ax, i - o[3])
        } else {
            (Kind::Sx, i - o[4])
        }
    };
    let shift = |v: &SparseVec, off: usize| -> SparseVec {
        SparseVec::from_entries(v.iter().map(|(k, c)| (k + off, c.clone())).collect())
    };
    let oriented = |(ki, i): (Kind, usize), (kj, j): (Kind, usize)| -> Option<SparseVec> {
        use Kind::*;
        Some(match (ki, kj) {
            (I, I) => shift(&ii[i * m + j], o[2]),
            (I, Ax) => shift(tb[i].column(j), o[3]),
            (I, At) => shift(eps[i].column(j), o[1]),
            (I, Sx) => shift(&is[i * ns + j], o[4]),
            (I, St) => shift(&ist[i * ns + j], o[0]),
            (Ax, Ax) => shift(&aa[i * n + j], o[4]),
            (At, At) => shift(&aa[i * n + j], o[0]),
            (Ax, At) => shift(&av[i * n + j], o[2]),
            (Sx, St) => shift(&sst[i * ns + j], o[2]),
            // [x, s~] = −(s x)~
            (Ax, St) => shift(&prod.apply_sparse(&sbs[j], &SparseVec::single(i, f.one())).scaled(&minus), o[1]),
            // [x~, s] = −s x
            (At, Sx) => shift(&prod.apply_sparse(&sbs[j], &SparseVec::single(i, f.one())).scaled(&minus), o[3]),
            (Ax, Sx) | (Sx, Sx) | (At, St) | (St, St) => SparseVec::new(),
            _ => return None,
        })
    };
    let bracket = BilinearMap::from_fn(f, total, total, total, |i, j| {
        let (x, y) = (kind(i), kind(j));
        match oriented(x, y) {
            Some(v) => v,
            None => oriented(y, x).expect("one orientation is tabulated").scaled(&minus),
        }
    });

    let al = a.algebra().space();
    let s_labels: Vec<String> =
        s_space.basis().iter().map(|v| super::combo_label(al, v)).collect();
    let mut labels = Vec::with_capacity(total);
    let mut tags = Vec::with_capacity(total);
    for l in &s_labels {
        labels.push(format!("~S:{l}"));
        tags.push("S~".to_string());
    }
    for l in al.labels() {
        labels.push(format!("~A:{l}"));
        tags.push("A~".to_string());
    }
    for k in 0..m {
        labels.push(format!("T{k}"));
        tags.push("Instrl".to_string());
    }
    for l in al.labels() {
        labels.push(format!("A:{l}"));
        tags.push("A".to_string());
    }
    for l in &s_labels {
        labels.push(format!("S:{l}"));
        tags.push("S".to_string());
    }
    let lie = LieAlgebra::new(Space::new(labels)?, bracket)?.with_components(tags)?;
    Ok(KantorAlgebra { lie, instrl, dims: (ns, n, m), s_basis, s_space })
}
