//! Structurable algebras, their `V`-operators and inner structure algebra,
//! and the J-ternary algebra `(S, A)` attached to a skew element.

use crate::algebra::StructureAlgebra;
use crate::error::{Error, Result};
use crate::jordan::JordanAlgebra;
use crate::jternary::JTernaryAlgebra;
use crate::linalg::vector::{is_zero, unit};
use crate::linalg::{BilinearMap, LinearMap, Space, SpanBuilder, SparseVec, Subspace, TrilinearMap, Vector};
use crate::report::{Check, VerificationReport};
use crate::scalar::{Field, Scalar};
use crate::sweep::{sweep, SweepMode, TupleSampler};

use super::composition::CompositionAlgebra;
use super::involutive::InvolutiveAlgebra;

/// A unital algebra with involution and the table of
/// `V_{x,y}(z) = (xȳ)z + (zȳ)x − (zx̄)y` on basis triples.
#[derive(Debug, Clone)]
pub struct StructurableAlgebra {
    inv: InvolutiveAlgebra,
    unit: Vector,
    v: TrilinearMap,
    factors: Option<(CompositionAlgebra, CompositionAlgebra)>,
}

impl StructurableAlgebra {
    /// Wraps a unital algebra with involution. Whether the structurable
    /// identity holds is reported by [`StructurableAlgebra::check`].
    pub fn new(inv: InvolutiveAlgebra) -> Result<Self> {
        let unit = inv
            .algebra()
            .find_unit()
            .ok_or_else(|| Error::Precondition("algebra has no unit".into()))?;
        let f = inv.field();
        let n = inv.dim();
        let alg = inv.algebra();
        let conj: Vec<&SparseVec> = (0..n).map(|i| inv.involution().column(i)).collect();
        let prod = alg.product();
        let one = f.one();
        let v = TrilinearMap::from_fn(f, [n, n, n], n, |x, y, z| {
            let xyb = prod.apply_basis_left(x, conj[y]);
            let zyb = prod.apply_basis_left(z, conj[y]);
            let zxb = prod.apply_basis_left(z, conj[x]);
            prod.apply_basis_right(&xyb, z)
                .plus_scaled(&one, &prod.apply_basis_right(&zyb, x))
                .plus_scaled(&-one.clone(), &prod.apply_basis_right(&zxb, y))
        });
        Ok(StructurableAlgebra { inv, unit, v, factors: None })
    }

    pub fn involutive(&self) -> &InvolutiveAlgebra {
        &self.inv
    }

    pub fn algebra(&self) -> &StructureAlgebra {
        self.inv.algebra()
    }

    pub fn field(&self) -> Field {
        self.inv.field()
    }

    pub fn dim(&self) -> usize {
        self.inv.dim()
    }

    pub fn unit(&self) -> &Vector {
        &self.unit
    }

    /// `S`, the skew elements.
    pub fn skew(&self) -> &Subspace {
        self.inv.skew()
    }

    /// `(C₁, C₂)` when built by [`tensor_structurable`].
    pub fn factors(&self) -> Option<&(CompositionAlgebra, CompositionAlgebra)> {
        self.factors.as_ref()
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        self.inv.mul(a, b)
    }

    pub fn conj(&self, a: &[Scalar]) -> Vector {
        self.inv.star(a)
    }

    pub fn v_table(&self) -> &TrilinearMap {
        &self.v
    }

    /// `V_{x,y}(z)`
    pub fn v_apply(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
        self.v.apply(x, y, z).expect("elements of A")
    }

    pub fn v_operator(&self, x: &[Scalar], y: &[Scalar]) -> LinearMap {
        let (xs, ys) = (SparseVec::from_dense(x), SparseVec::from_dense(y));
        self.v_operator_sparse(&xs, &ys)
    }

    pub fn v_operator_sparse(&self, x: &SparseVec, y: &SparseVec) -> LinearMap {
        let f = self.field();
        let n = self.dim();
        let cols = (0..n).map(|u| self.v.apply_sparse(x, y, &SparseVec::single(u, f.one()))).collect();
        LinearMap::from_columns(f, n, cols).expect("square")
    }

    /// `L_a : x ↦ ax`
    pub fn left_mult(&self, a: &[Scalar]) -> LinearMap {
        self.algebra().left_mult(a)
    }

    /// `[V_{x,y}, V_{z,w}] = V_{V_{x,y}(z),w} − V_{z,V_{y,x}(w)}` applied to
    /// every basis vector, over basis quadruples `(x,y,z,w)`.
    pub fn check(&self) -> VerificationReport {
        self.check_with(SweepMode::Exhaustive)
    }

    pub fn check_with(&self, mode: SweepMode) -> VerificationReport {
        let f = self.field();
        let n = self.dim();
        let e = |i: usize| SparseVec::single(i, f.one());
        let minus = -f.one();
        let mut sampler: Option<TupleSampler> = None;
        let v = &self.v;
        let c = sweep(
            "structurable_identity",
            &[n, n, n, n],
            mode,
            &mut sampler,
            |t| {
                let (x, y, z, w) = (t[0], t[1], t[2], t[3]);
                let p = v.get(x, y, z);
                let q = v.get(y, x, w);
                let ok = (0..n).all(|u| {
                    let lhs = v
                        .apply_sparse(&e(x), &e(y), v.get(z, w, u))
                        .plus_scaled(&minus, &v.apply_sparse(&e(z), &e(w), v.get(x, y, u)));
                    let rhs = v
                        .apply_sparse(p, &e(w), &e(u))
                        .plus_scaled(&minus, &v.apply_sparse(&e(z), q, &e(u)));
                    lhs == rhs
                });
                Some(ok)
            },
            |t| {
                let l = |i: usize| self.algebra().label(t[i]).to_string();
                format!("({},{},{},{})", l(0), l(1), l(2), l(3))
            },
        );
        let mut r = VerificationReport::new("structurable").with_dim("A", n).with_dim("S", self.skew().dim());
        r.push(c);
        r
    }

    /// `Instrl(A,−)`: the span of all `V_{x,y}`, with its bracket closure
    /// verified.
    pub fn instrl(&self) -> Result<Instrl> {
        let f = self.field();
        let n = self.dim();
        let mut span = SpanBuilder::new(f, n * n);
        for x in 0..n {
            for y in 0..n {
                let cols: Vec<SparseVec> = (0..n).map(|u| self.v.get(x, y, u).clone()).collect();
                span.insert(&LinearMap::from_columns(f, n, cols)?.flatten());
            }
        }
        let basis: Vec<LinearMap> = span.rows().map(|r| LinearMap::unflatten(f, n, n, r)).collect();
        let ins = Instrl { field: f, n, basis, span };
        let m = ins.dim();
        for i in 0..m {
            for j in i + 1..m {
                let c = ins.basis[i].commutator(&ins.basis[j])?;
                if ins.coordinates(&c).is_none() {
                    return Err(Error::NotClosed(format!("[T{i}, T{j}] outside Instrl")));
                }
            }
        }
        Ok(ins)
    }
}

/// The inner structure algebra with its reduced echelon basis.
#[derive(Debug, Clone)]
pub struct Instrl {
    field: Field,
    n: usize,
    basis: Vec<LinearMap>,
    span: SpanBuilder,
}

impl Instrl {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[LinearMap] {
        &self.basis
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn coordinates(&self, op: &LinearMap) -> Option<Vec<Scalar>> {
        self.span.coordinates(&op.flatten())
    }

    pub fn contains(&self, op: &LinearMap) -> bool {
        self.span.contains(&op.flatten())
    }
}

/// `A = C₁ ⊗ C₂` with `(a⊗b)(c⊗d) = ac ⊗ bd` and involution `ā ⊗ b̄`.
pub fn tensor_structurable(c1: &CompositionAlgebra, c2: &CompositionAlgebra) -> Result<StructurableAlgebra> {
    if c1.dim() != 8 {
        return Err(Error::Parameters(format!("first factor must be an octonion algebra (got dim {})", c1.dim())));
    }
    let f = c1.field();
    let (n1, n2) = (c1.dim(), c2.dim());
    let n = n1 * n2;
    let (a1, a2) = (c1.algebra(), c2.algebra());
    let mut labels = Vec::with_capacity(n);
    for i in 0..n1 {
        for j in 0..n2 {
            labels.push(format!("{}⊗{}", a1.label(i), a2.label(j)));
        }
    }
    let product = BilinearMap::from_fn(f, n, n, n, |x, y| {
        let (i, j) = (x / n2, x % n2);
        let (k, l) = (y / n2, y % n2);
        let mut out = Vec::new();
        for (p, c) in a1.mul_basis(i, k).iter() {
            for (q, d) in a2.mul_basis(j, l).iter() {
                out.push((p * n2 + q, c * d));
            }
        }
        SparseVec::from_entries(out)
    });
    let alg = StructureAlgebra::new(Space::new(labels)?, product)?;
    let conj_cols: Vec<SparseVec> = (0..n)
        .map(|x| {
            let (i, j) = (x / n2, x % n2);
            let mut out = Vec::new();
            for (p, c) in c1.conjugation().column(i).iter() {
                for (q, d) in c2.conjugation().column(j).iter() {
                    out.push((p * n2 + q, c * d));
                }
            }
            SparseVec::from_entries(out)
        })
        .collect();
    let inv = InvolutiveAlgebra::new(alg, LinearMap::from_columns(f, n, conj_cols)?)?;
    let mut a = StructurableAlgebra::new(inv)?;
    a.factors = Some((c1.clone(), c2.clone()));
    Ok(a)
}

/// `(S, A)` with `a·b = ½(a(sb) + b(sa))`, `a•x = a(sx)`,
/// `⟨x|y⟩ = xȳ − yx̄` and `⟨x,y,z⟩ = −V_{x,sy}(z)`. The unit of `S` is the
/// element `s'` with `L_{s'} = L_s⁻¹`.
pub fn jternary_from_structurable(a: &StructurableAlgebra, s: &[Scalar]) -> Result<JTernaryAlgebra> {
    let f = a.field();
    let n = a.dim();
    let sk = a.skew();
    if !sk.contains_dense(s) {
        return Err(Error::Precondition("s is not skew".into()));
    }
    let s_prime = inverse_skew(a, s)?;
    let sb = sk.basis_dense();
    let nj = sb.len();
    let half = f.ratio(1, 2);
    let in_s = |v: &[Scalar]| -> Result<SparseVec> {
        sk.coordinates_dense(v)
            .map(|c| SparseVec::from_dense(&c))
            .ok_or_else(|| Error::NotInSpan("value is not skew".into()))
    };
    let sa: Vec<Vector> = sb.iter().map(|b| a.mul(s, b)).collect();
    let mut product = BilinearMap::zero(f, nj, nj, nj);
    for i in 0..nj {
        for j in 0..nj {
            let v: Vector = a
                .mul(&sb[i], &sa[j])
                .iter()
                .zip(a.mul(&sb[j], &sa[i]))
                .map(|(x, y)| &half * &(x + &y))
                .collect();
            product.set(i, j, in_s(&v)?)?;
        }
    }
    let unit_coords = sk.coordinates_dense(&s_prime).expect("s' is skew");
    let labels: Vec<String> = sk.basis().iter().map(|v| super::combo_label(a.algebra().space(), v)).collect();
    let jordan = JordanAlgebra::new(Space::new(labels)?, product, unit_coords)?;
    let ls = a.left_mult(s);
    let sx: Vec<SparseVec> = (0..n).map(|x| ls.column(x).clone()).collect();
    let sbs: Vec<SparseVec> = sb.iter().map(|v| SparseVec::from_dense(v)).collect();
    let prod = a.algebra().product();
    let bullet = BilinearMap::from_fn(f, nj, n, n, |i, x| prod.apply_sparse(&sbs[i], &sx[x]));
    let conj: Vec<&SparseVec> = (0..n).map(|i| a.involutive().involution().column(i)).collect();
    let mut skew = BilinearMap::zero(f, n, n, nj);
    for x in 0..n {
        for y in 0..n {
            let v = prod
                .apply_basis_left(x, conj[y])
                .plus_scaled(&-f.one(), &prod.apply_basis_left(y, conj[x]));
            skew.set(x, y, in_s(&v.to_dense(f, n))?)?;
        }
    }
    let minus = -f.one();
    let v = a.v_table();
    let triple = TrilinearMap::from_fn(f, [n, n, n], n, |x, y, z| {
        v.apply_sparse(&SparseVec::single(x, f.one()), &sx[y], &SparseVec::single(z, f.one())).scaled(&minus)
    });
    JTernaryAlgebra::new(jordan, a.algebra().space().clone(), bullet, skew, triple)
}

/// `s'` with `L_{s'} = L_s⁻¹`, required to be skew.
pub fn inverse_skew(a: &StructurableAlgebra, s: &[Scalar]) -> Result<Vector> {
    let f = a.field();
    let n = a.dim();
    let ls = a.left_mult(s);
    let rows = ls.to_rows();
    let sol = crate::linalg::solve_exact(f, &rows, Some(a.unit())).map_err(|_| {
        Error::Precondition("L_s is singular".into())
    })?;
    if sol.rank < n {
        return Err(Error::Precondition("L_s is singular".into()));
    }
    let t = sol.particular.expect("consistent");
    let lt = a.left_mult(&t);
    let id = LinearMap::identity(f, n);
    if !lt.compose(&ls)?.plus_scaled(&-f.one(), &id).is_zero() {
        return Err(Error::Precondition("L_s⁻¹ is not a left multiplication".into()));
    }
    if !a.skew().contains_dense(&t) {
        return Err(Error::Precondition("the inverse of s is not skew".into()));
    }
    Ok(t)
}

/// `c·a = a` for every basis element `a` of `S`, with `c = s'`.
pub fn check_unit_of_s(jt: &JTernaryAlgebra) -> Check {
    let mut c = Check::new("c_is_unit_of_S");
    let u = jt.jordan().unit();
    for i in 0..jt.dim_j() {
        let a = jt.j_element(i);
        c.record(jt.jordan().mul(u, &a) == a, || jt.jordan().label(i).to_string());
    }
    c
}

/// `V_{x,y}^ε = −V_{y,x}` with `T^ε = T − L_{T(1) + conj(T(1))}`, on basis
/// pairs.
pub fn check_epsilon_convention(a: &StructurableAlgebra) -> Check {
    let f = a.field();
    let n = a.dim();
    let mut c = Check::new("V_epsilon_is_minus_V_swapped");
    for x in 0..n {
        for y in 0..n {
            let (xv, yv) = (unit(f, n, x), unit(f, n, y));
            let t = a.v_operator(&xv, &yv);
            let eps = epsilon(a, &t);
            let expect = a.v_operator(&yv, &xv).scaled(&-f.one());
            c.record(eps == expect, || format!("({},{})", a.algebra().label(x), a.algebra().label(y)));
        }
    }
    c
}

/// `T^ε = T − L_{T(1) + conj(T(1))}`
pub fn epsilon(a: &StructurableAlgebra, t: &LinearMap) -> LinearMap {
    let t1 = t.apply(a.unit()).expect("dim");
    let w = crate::linalg::vector::add(&t1, &a.conj(&t1));
    if is_zero(&w) {
        return t.clone();
    }
    t.plus_scaled(&-a.field().one(), &a.left_mult(&w))
}
