//! The prototypical examples whose Lie algebras are `gl`, `so` and `sp`
//! of `(V⊗W) ⊕ Z`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::StructureAlgebra;
use crate::error::{Error, Result};
use crate::jternary::JTernaryAlgebra;
use crate::linalg::{BilinearMap, LinearMap, Space, SparseVec, Vector};
use crate::scalar::{Field, Scalar};

use super::involutive::{prototypical, HermitianModule, InvolutiveAlgebra};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassicalFamily {
    Gl,
    So,
    Sp,
}

impl fmt::Display for ClassicalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassicalFamily::Gl => "gl",
            ClassicalFamily::So => "so",
            ClassicalFamily::Sp => "sp",
        })
    }
}

#[derive(Debug, Clone)]
pub struct ClassicalExample {
    pub family: ClassicalFamily,
    pub w: usize,
    pub z: usize,
    pub module: HermitianModule,
    pub jt: JTernaryAlgebra,
}

impl ClassicalExample {
    pub fn name(&self) -> String {
        format!("{}({},{})", self.family, self.w, self.z)
    }

    /// Dimension of `gl`, `so` or `sp` of the `(2w + z)`-dimensional space.
    pub fn reference_dim(&self) -> usize {
        let n = 2 * self.w + self.z;
        match self.family {
            ClassicalFamily::Gl => n * n,
            ClassicalFamily::So => n * (n - 1) / 2,
            ClassicalFamily::Sp => n * (n + 1) / 2,
        }
    }

    /// The catalog idempotent of `J`, in `J` coordinates: `(E11, E11)` for
    /// `gl`, `E11` for `sp`, and the projection onto the first symplectic
    /// pair of `W` for `so`.
    pub fn idempotent(&self) -> Result<Vector> {
        let a = self.module.algebra();
        let f = a.field();
        let w = self.w;
        let mut v = vec![f.zero(); a.dim()];
        let proper = match self.family {
            ClassicalFamily::Gl => {
                v[0] = f.one();
                v[w * w] = f.one();
                w >= 2
            }
            ClassicalFamily::Sp => {
                v[0] = f.one();
                w >= 2
            }
            ClassicalFamily::So => {
                v[0] = f.one();
                if w >= 2 {
                    v[w + 1] = f.one();
                }
                w >= 4
            }
        };
        if !proper {
            return Err(Error::NoProperIdempotent(format!("{} has no proper catalog idempotent", self.name())));
        }
        a.symmetric()
            .coordinates_dense(&v)
            .ok_or_else(|| Error::NotInSpan("catalog idempotent is not symmetric".into()))
    }
}

fn matrix_labels(w: usize, suffix: &str) -> Vec<String> {
    (0..w).flat_map(|i| (0..w).map(move |j| format!("E{}{}{suffix}", i + 1, j + 1))).collect()
}

/// `A = End W ⊕ (End W)^op` with the exchange involution;
/// `T = (W⊗Z*) ⊕ (W*⊗Z)` with `h(w_i⊗ζ_k, ω_j⊗z_l) = δ_kl (E_ij, 0)`.
pub fn gl_example(field: Field, w: usize, z: usize) -> Result<ClassicalExample> {
    if w == 0 {
        return Err(Error::Parameters("gl example needs dim W ≥ 1".into()));
    }
    let f = field;
    let m = w * w;
    let mut labels = matrix_labels(w, "");
    labels.extend(matrix_labels(w, "'"));
    let product = BilinearMap::from_fn(f, 2 * m, 2 * m, 2 * m, |x, y| {
        let (bx, by) = (x / m, y / m);
        if bx != by {
            return SparseVec::new();
        }
        // (a,b)(c,d) = (ac, db)
        let (p, q) = if bx == 0 { (x % m, y % m) } else { (y % m, x % m) };
        let (i, j, k, l) = (p / w, p % w, q / w, q % w);
        if j == k {
            SparseVec::single(bx * m + i * w + l, f.one())
        } else {
            SparseVec::new()
        }
    });
    let alg = StructureAlgebra::new(Space::new(labels)?, product)?;
    let swap = LinearMap::from_columns(
        f,
        2 * m,
        (0..2 * m).map(|x| SparseVec::single((x + m) % (2 * m), f.one())).collect(),
    )?;
    let a = InvolutiveAlgebra::new(alg, swap)?;
    let wz = w * z;
    let mut tl = Vec::with_capacity(2 * wz);
    for i in 0..w {
        for k in 0..z {
            tl.push(format!("w{}⊗ζ{}", i + 1, k + 1));
        }
    }
    for j in 0..w {
        for l in 0..z {
            tl.push(format!("ω{}⊗z{}", j + 1, l + 1));
        }
    }
    let nt = 2 * wz;
    let action = BilinearMap::from_fn(f, 2 * m, nt, nt, |x, t| {
        let (part, p) = (x / m, x % m);
        let (r, c) = (p / w, p % w);
        match (part, t < wz) {
            // (E_rc, 0) w_i⊗ζ_k = δ_ci w_r⊗ζ_k
            (0, true) if t / z == c => SparseVec::single(r * z + t % z, f.one()),
            // (0, E_rc) ω_j⊗z_l = ω_j∘E_rc ⊗ z_l = δ_jr ω_c⊗z_l
            (1, false) if (t - wz) / z == r => SparseVec::single(wz + c * z + (t - wz) % z, f.one()),
            _ => SparseVec::new(),
        }
    });
    let h = BilinearMap::from_fn(f, nt, nt, 2 * m, |x, y| match (x < wz, y < wz) {
        (true, false) => {
            let (i, k) = (x / z, x % z);
            let (j, l) = ((y - wz) / z, (y - wz) % z);
            if k == l {
                SparseVec::single(i * w + j, f.one())
            } else {
                SparseVec::new()
            }
        }
        (false, true) => {
            let (j, l) = ((x - wz) / z, (x - wz) % z);
            let (i, k) = (y / z, y % z);
            if k == l {
                SparseVec::single(m + i * w + j, -f.one())
            } else {
                SparseVec::new()
            }
        }
        _ => SparseVec::new(),
    });
    let module = HermitianModule::new(a, Space::new(tl)?, action, h)?;
    let jt = prototypical(&module)?;
    Ok(ClassicalExample { family: ClassicalFamily::Gl, w, z, module, jt })
}

/// Gram matrix of the standard symplectic form on `n` (even) coordinates.
fn symplectic_gram(f: Field, n: usize) -> Vec<Vec<Scalar>> {
    let mut g = vec![vec![f.zero(); n]; n];
    for k in 0..n / 2 {
        g[2 * k][2 * k + 1] = f.one();
        g[2 * k + 1][2 * k] = -f.one();
    }
    g
}

fn identity_gram(f: Field, n: usize) -> Vec<Vec<Scalar>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { f.one() } else { f.zero() }).collect()).collect()
}

/// `A = End W` with the involution of `b_W`, `T = W ⊗ Z` and
/// `h(w₁⊗z₁, w₂⊗z₂) = b_Z(z₁,z₂) w₁ b_W(w₂, ·)`.
fn form_example(
    family: ClassicalFamily,
    f: Field,
    w: usize,
    z: usize,
    gw: Vec<Vec<Scalar>>,
    gz: Vec<Vec<Scalar>>,
) -> Result<ClassicalExample> {
    let m = w * w;
    let alg = StructureAlgebra::matrix(f, w);
    // b(Mx, y) = b(x, M*y) gives M* = G⁻¹ Mᵀ G.
    let ginv = invert(f, &gw)?;
    let star_cols: Vec<SparseVec> = (0..m)
        .map(|p| {
            let (i, j) = (p / w, p % w);
            // Eᵢⱼᵀ = Eⱼᵢ; G⁻¹ Eⱼᵢ G has entry (r,c) = G⁻¹[r][j] G[i][c].
            let mut entries = Vec::new();
            for r in 0..w {
                for c in 0..w {
                    let v = &ginv[r][j] * &gw[i][c];
                    if !v.is_zero() {
                        entries.push((r * w + c, v));
                    }
                }
            }
            SparseVec::from_entries(entries)
        })
        .collect();
    let a = InvolutiveAlgebra::new(alg, LinearMap::from_columns(f, m, star_cols)?)?;
    let nt = w * z;
    let tl: Vec<String> =
        (0..w).flat_map(|i| (0..z).map(move |k| format!("w{}⊗z{}", i + 1, k + 1))).collect();
    let action = BilinearMap::from_fn(f, m, nt, nt, |p, t| {
        let (r, c) = (p / w, p % w);
        if t / z == c {
            SparseVec::single(r * z + t % z, f.one())
        } else {
            SparseVec::new()
        }
    });
    let h = BilinearMap::from_fn(f, nt, nt, m, |x, y| {
        let (i, k) = (x / z, x % z);
        let (j, l) = (y / z, y % z);
        let bz = &gz[k][l];
        if bz.is_zero() {
            return SparseVec::new();
        }
        SparseVec::from_entries((0..w).map(|c| (i * w + c, bz * &gw[j][c])).collect())
    });
    let module = HermitianModule::new(a, Space::new(tl)?, action, h)?;
    let jt = prototypical(&module)?;
    Ok(ClassicalExample { family, w, z, module, jt })
}

fn invert(f: Field, g: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>> {
    let n = g.len();
    let mut cols = Vec::with_capacity(n);
    for c in 0..n {
        let target: Vector = (0..n).map(|r| if r == c { f.one() } else { f.zero() }).collect();
        let sol = crate::linalg::solve_exact(f, g, Some(&target))?;
        cols.push(sol.particular.ok_or(Error::Inconsistent)?);
    }
    Ok((0..n).map(|r| (0..n).map(|c| cols[c][r].clone()).collect()).collect())
}

/// `b_W` symplectic (so `w` is even), `b_Z` the identity form.
pub fn so_example(field: Field, w: usize, z: usize) -> Result<ClassicalExample> {
    if w == 0 || !w.is_multiple_of(2) {
        return Err(Error::Parameters(format!("so example needs even dim W ≥ 2 (got {w})")));
    }
    form_example(ClassicalFamily::So, field, w, z, symplectic_gram(field, w), identity_gram(field, z))
}

/// `b_W` the identity form, `b_Z` symplectic (so `z` is even).
pub fn sp_example(field: Field, w: usize, z: usize) -> Result<ClassicalExample> {
    if w == 0 || !z.is_multiple_of(2) {
        return Err(Error::Parameters(format!("sp example needs dim W ≥ 1 and even dim Z (got {w}, {z})")));
    }
    form_example(ClassicalFamily::Sp, field, w, z, identity_gram(field, w), symplectic_gram(field, z))
}

pub fn classical_example(family: ClassicalFamily, field: Field, w: usize, z: usize) -> Result<ClassicalExample> {
    match family {
        ClassicalFamily::Gl => gl_example(field, w, z),
        ClassicalFamily::So => so_example(field, w, z),
        ClassicalFamily::Sp => sp_example(field, w, z),
    }
}
