//! The Albert form on `S = S₁ ⊕ S₂` of `C₁ ⊗ C₂` and the quadratic-factor
//! description of the Jordan algebra `(S, ·)`.

use crate::error::{Error, Result};
use crate::jternary::JTernaryAlgebra;
use crate::linalg::vector::{add, is_zero, scale, sub};
use crate::linalg::{Subspace, Vector};
use crate::report::{Check, VerificationReport};
use crate::scalar::{Field, Scalar};

use super::structurable::StructurableAlgebra;

/// `Q(s₁+s₂) = (ν₁(s₁) − ν₂(s₂))/ν₁(s)`, `(s₁+s₂)♯ = ν₁(s)(s₁ − s₂)`,
/// `c = −s/ν₁(s)` and `Q̃ = ν₁(s)² Q`. Elements of `S` are given in `A`
/// coordinates.
#[derive(Debug, Clone)]
pub struct AlbertData {
    pub s: Vector,
    pub nu_s: Scalar,
    pub c: Vector,
    field: Field,
    n2: usize,
    nu1: Vec<Scalar>,
    nu2: Vec<Scalar>,
}

impl AlbertData {
    /// `(s₁, s₂)` of an element of `S` written in `A` coordinates.
    pub fn split(&self, a: &[Scalar]) -> (Vector, Vector) {
        let n1 = self.nu1.len();
        let s1 = (0..n1).map(|i| if i > 0 { a[i * self.n2].clone() } else { self.field.zero() }).collect();
        let s2 = (0..self.n2).map(|j| if j > 0 { a[j].clone() } else { self.field.zero() }).collect();
        (s1, s2)
    }

    fn diag_norm(d: &[Scalar], x: &[Scalar], f: Field) -> Scalar {
        let mut acc = f.zero();
        for (n, c) in d.iter().zip(x) {
            acc += &(n * &(c * c));
        }
        acc
    }

    /// `Q(a)`
    pub fn q(&self, a: &[Scalar]) -> Scalar {
        let (s1, s2) = self.split(a);
        let v = &Self::diag_norm(&self.nu1, &s1, self.field) - &Self::diag_norm(&self.nu2, &s2, self.field);
        &v * &self.nu_s.inverse().expect("ν₁(s) ≠ 0")
    }

    /// `Q̃(a) = ν₁(s)² Q(a)`
    pub fn q_tilde(&self, a: &[Scalar]) -> Scalar {
        &(&self.nu_s * &self.nu_s) * &self.q(a)
    }

    /// `Q̃(a,b) = Q̃(a+b) − Q̃(a) − Q̃(b)`
    pub fn q_tilde_polar(&self, a: &[Scalar], b: &[Scalar]) -> Scalar {
        &(&self.q_tilde(&add(a, b)) - &self.q_tilde(a)) - &self.q_tilde(b)
    }

    /// `(s₁+s₂)♯ = ν₁(s)(s₁ − s₂)`, in `A` coordinates.
    pub fn sharp(&self, a: &[Scalar]) -> Vector {
        let (s1, s2) = self.split(a);
        let n1 = self.nu1.len();
        let mut out = vec![self.field.zero(); n1 * self.n2];
        for i in 1..n1 {
            out[i * self.n2] = &self.nu_s * &s1[i];
        }
        for j in 1..self.n2 {
            out[j] = &out[j] - &(&self.nu_s * &s2[j]);
        }
        out
    }
}

/// Albert data for `A = C₁ ⊗ C₂` and `s ∈ S₁` with `ν₁(s) ≠ 0`.
pub fn albert_data(a: &StructurableAlgebra, s: &[Scalar]) -> Result<AlbertData> {
    let (c1, c2) = a
        .factors()
        .ok_or_else(|| Error::Precondition("Albert data needs a tensor product of composition algebras".into()))?;
    let f = a.field();
    let n2 = c2.dim();
    let s1: Vector = (0..c1.dim()).map(|i| s[i * n2].clone()).collect();
    let in_s1 = s.iter().enumerate().all(|(k, x)| x.is_zero() || (k % n2 == 0 && k >= n2));
    if !in_s1 {
        return Err(Error::Precondition("reference element must lie in S₁⊗1".into()));
    }
    let nu_s = c1.norm(&s1);
    let inv = nu_s.inverse().ok_or_else(|| Error::Precondition("ν₁(s) = 0".into()))?;
    let c = scale(&-inv, s);
    Ok(AlbertData {
        s: s.to_vec(),
        nu_s,
        c,
        field: f,
        n2,
        nu1: c1.norm_diagonal().to_vec(),
        nu2: c2.norm_diagonal().to_vec(),
    })
}

/// Checks, on the basis of `S` (pairs for the polarized forms):
/// `a·a = Q̃(a,c)a − Q̃(a)c`, `Q̃(c) = 1`, `c` the unit, `Q` nondegenerate,
/// `♯` additive, and `a•(a•x) = −Q̃(a)x` for `a ⊥ c`, `x` in a basis of `A`.
/// `jt` must be the `(S, A)` algebra built from the same `s`.
pub fn verify_quadratic_factor(d: &AlbertData, a: &StructurableAlgebra, jt: &JTernaryAlgebra) -> VerificationReport {
    let f = d.field;
    let sk = a.skew();
    let basis = sk.basis_dense();
    let ns = basis.len();
    let n = a.dim();
    let mut r = VerificationReport::new("albert_form").with_dim("S", ns).with_dim("A", n);
    r.note(format!("normalization Q̃ = ν₁(s)²·Q with ν₁(s) = {}", d.nu_s));
    let to_j = |v: &[Scalar]| sk.coordinates_dense(v).expect("element of S");
    let from_j = |v: &[Scalar]| -> Vector {
        let mut out = vec![f.zero(); n];
        for (c, b) in v.iter().zip(&basis) {
            crate::linalg::vector::axpy(&mut out, c, b);
        }
        out
    };
    let cj = to_j(&d.c);
    r.assert("Q_tilde_of_c_is_one", d.q_tilde(&d.c).is_one(), || format!("Q̃(c) = {}", d.q_tilde(&d.c)));
    let mut unit = Check::new("c_is_unit");
    unit.record(jt.jordan().unit() == &cj, || "unit of (S,·) ≠ c".into());
    r.push(unit);

    let gram: Vec<Vector> =
        basis.iter().map(|x| basis.iter().map(|y| d.q_tilde_polar(x, y)).collect()).collect();
    let rank = crate::linalg::rref(f, &gram, ns).0.len();
    r.assert("Q_nondegenerate", rank == ns, || format!("rank {rank} of {ns}"));

    let mut law = Check::new("quadratic_factor_law");
    let mut printed = Check::new("quadratic_factor_law_as_printed").informational();
    for i in 0..ns {
        for j in i..ns {
            let (x, y) = (&basis[i], &basis[j]);
            let (xj, yj) = (to_j(x), to_j(y));
            // 2 x·y = Q̃(x,c)y + Q̃(y,c)x − Q̃(x,y)c
            let lhs = scale(&f.int(2), &jt.jordan().mul(&xj, &yj));
            let rhs = sub(
                &add(&scale(&d.q_tilde_polar(x, &d.c), &yj), &scale(&d.q_tilde_polar(y, &d.c), &xj)),
                &scale(&d.q_tilde_polar(x, y), &cj),
            );
            law.record(lhs == rhs, || format!("({},{})", jt.jordan().label(i), jt.jordan().label(j)));
            if i == j {
                // a·a = Q(a,c)c − Q(a)c
                let p = sub(&scale(&d.q_tilde_polar(x, &d.c), &cj), &scale(&d.q_tilde(x), &cj));
                printed.record(jt.jordan().mul(&xj, &xj) == p, || jt.jordan().label(i).to_string());
            }
        }
    }
    r.push(law);
    r.push(printed);

    let mut sharp = Check::new("sharp_additive");
    for i in 0..ns {
        for j in i..ns {
            let lhs = d.sharp(&add(&basis[i], &basis[j]));
            let rhs = add(&d.sharp(&basis[i]), &d.sharp(&basis[j]));
            sharp.record(lhs == rhs && sk.contains_dense(&lhs), || format!("({i},{j})"));
        }
    }
    r.push(sharp);

    // c^⊥ in S, then the Clifford relation on its basis (polarized on pairs).
    let perp_cols: Vec<crate::linalg::SparseVec> = basis
        .iter()
        .map(|x| crate::linalg::SparseVec::from_dense(&[d.q_tilde_polar(x, &d.c)]))
        .collect();
    let perp: Vec<Vector> =
        crate::linalg::kernel_of_columns(f, 1, &perp_cols).iter().map(|k| from_j(k)).collect();
    let perp_space = Subspace::span_of_dense(f, n, &perp);
    let pb = perp_space.basis_dense();
    r.dim("c_perp", pb.len());
    let mut cl = Check::new("clifford_action");
    for i in 0..pb.len() {
        let ai = to_j(&pb[i]);
        for j in i..pb.len() {
            let aj = to_j(&pb[j]);
            let q = d.q_tilde_polar(&pb[i], &pb[j]);
            let ok = (0..n).all(|x| {
                let xv = crate::linalg::vector::unit(f, n, x);
                let lhs = add(
                    &jt.bullet(&ai, &jt.bullet(&aj, &xv)),
                    &jt.bullet(&aj, &jt.bullet(&ai, &xv)),
                );
                is_zero(&add(&lhs, &scale(&q, &xv)))
            });
            cl.record(ok, || format!("(c⊥[{i}], c⊥[{j}])"));
        }
    }
    r.push(cl);
    r
}
