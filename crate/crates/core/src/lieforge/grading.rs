//! 5-gradings from sl₂-triples and the J-ternary algebra on `(L₂, L₁)`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::jordan::JordanAlgebra;
use crate::jternary::JTernaryAlgebra;
use crate::linalg::vector::is_zero;
use crate::linalg::{eigenspace, BilinearMap, Space, SparseVec, Subspace, TrilinearMap, Vector};
use crate::report::{Check, VerificationReport};

use super::{LieAlgebra, Sl2Triple};

/// Eigenspaces `L_i = {X : [H,X] = iX}`, exhaustive.
#[derive(Debug, Clone)]
pub struct Grading {
    pub pieces: BTreeMap<i32, Subspace>,
}

impl Grading {
    pub fn piece(&self, i: i32) -> Option<&Subspace> {
        self.pieces.get(&i)
    }

    pub fn dims(&self) -> Vec<(i32, usize)> {
        self.pieces.iter().map(|(k, s)| (*k, s.dim())).collect()
    }

    /// `[L_i, L_j] ⊆ L_{i+j}` on all pairs of basis vectors.
    pub fn check_compatibility(&self, l: &LieAlgebra) -> VerificationReport {
        let mut r = VerificationReport::new("grading_compatibility").with_dim("L", l.dim());
        let mut c = Check::new("bracket_adds_weights");
        let bases: BTreeMap<i32, Vec<Vector>> =
            self.pieces.iter().map(|(k, s)| (*k, s.basis_dense())).collect();
        for (i, bi) in &bases {
            r.dim(format!("L{i}"), bi.len());
            for (j, bj) in &bases {
                let target = self.pieces.get(&(i + j));
                for (a, x) in bi.iter().enumerate() {
                    let ad = l.ad(x);
                    for (b, y) in bj.iter().enumerate() {
                        let v = ad.apply(y).expect("dim");
                        let ok = match target {
                            Some(t) => t.contains_dense(&v),
                            None => is_zero(&v),
                        };
                        c.record(ok, || format!("[L{i}[{a}], L{j}[{b}]]"));
                    }
                }
            }
        }
        r.push(c);
        r
    }
}

/// Grading by `ad H`, `H = [E,F]`, with weights `−2..2`. Fails if the
/// eigenspaces do not exhaust `L`.
pub fn five_grading(l: &LieAlgebra, e: &[crate::scalar::Scalar], f: &[crate::scalar::Scalar]) -> Result<Grading> {
    let h = l.bracket(e, f);
    l.check_sl2_triple(&Sl2Triple { e: e.to_vec(), h: h.clone(), f: f.to_vec() })?;
    let field = l.field();
    let adh = l.ad(&h);
    let mut pieces = BTreeMap::new();
    let mut total = Subspace::zero(field, l.dim());
    for i in -2..=2 {
        let s = eigenspace(&adh, &field.int(i as i64));
        total = total.sum(&s);
        pieces.insert(i, s);
    }
    if total.dim() != l.dim() {
        return Err(Error::NotShort(format!(
            "ad H eigenspaces for weights −2..2 span {} of {}",
            total.dim(),
            l.dim()
        )));
    }
    Ok(Grading { pieces })
}

fn labels_for(l: &LieAlgebra, sub: &Subspace, prefix: &str) -> Vec<String> {
    sub.basis()
        .iter()
        .enumerate()
        .map(|(i, v)| match v.entries() {
            [(k, c)] if c.is_one() => l.space().label(*k).to_string(),
            _ => format!("{prefix}[{i}]"),
        })
        .collect()
}

/// `(J, T) = (L₂, L₁)` with `A·B = ½[[A,F],B]`, `A•X = [[A,F],X]`,
/// `⟨X|Y⟩ = ½[X,Y]`, `⟨X,Y,Z⟩ = ½[[X,[Y,F]],Z]`; the unit of `J` is `E`.
pub fn jternary_from_5grading(
    l: &LieAlgebra,
    e: &[crate::scalar::Scalar],
    f: &[crate::scalar::Scalar],
) -> Result<JTernaryAlgebra> {
    let g = five_grading(l, e, f)?;
    let field = l.field();
    let half = field.ratio(1, 2);
    let l2 = g.piece(2).expect("weight 2").clone();
    let l1 = g.piece(1).expect("weight 1").clone();
    let jb = l2.basis();
    let tb = l1.basis();
    let (nj, nt) = (jb.len(), tb.len());
    let br = |x: &SparseVec, y: &SparseVec| l.bracket_map().apply_sparse(x, y);
    let in_j = |v: SparseVec| -> SparseVec {
        SparseVec::from_dense(&l2.coordinates(&v.scaled(&half)).expect("bracket lands in L2"))
    };
    let in_t = |v: SparseVec, s: &crate::scalar::Scalar| -> SparseVec {
        SparseVec::from_dense(&l1.coordinates(&v.scaled(s)).expect("bracket lands in L1"))
    };
    let fs = SparseVec::from_dense(f);
    let adf: Vec<SparseVec> = jb.iter().map(|a| br(a, &fs)).collect();
    let product = BilinearMap::from_fn(field, nj, nj, nj, |a, b| in_j(br(&adf[a], &jb[b])));
    let unit = l2
        .coordinates_dense(e)
        .ok_or_else(|| Error::NotInSpan("E is not in L2".into()))?;
    let jordan = JordanAlgebra::new(Space::new(labels_for(l, &l2, "L2"))?, product, unit)?;
    let one = field.one();
    let bullet = BilinearMap::from_fn(field, nj, nt, nt, |a, x| in_t(br(&adf[a], &tb[x]), &one));
    let skew = BilinearMap::from_fn(field, nt, nt, nj, |x, y| in_j(br(&tb[x], &tb[y])));
    let yf: Vec<SparseVec> = tb.iter().map(|y| br(y, &fs)).collect();
    let inner: Vec<SparseVec> = (0..nt * nt).map(|xy| br(&tb[xy / nt], &yf[xy % nt])).collect();
    let triple = TrilinearMap::from_fn(field, [nt, nt, nt], nt, |x, y, z| {
        in_t(br(&inner[x * nt + y], &tb[z]), &half)
    });
    JTernaryAlgebra::new(jordan, Space::new(labels_for(l, &l1, "L1"))?, bullet, skew, triple)
}
