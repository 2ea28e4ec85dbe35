//! The exceptional series from `C₁ ⊗ C₂` with `C₁` split octonions and
//! `C₂` split of dimension 1, 2, 4 or 8.

use crate::error::{Error, Result};
use crate::jternary::JTernaryAlgebra;
use crate::linalg::vector::{add, scale, unit};
use crate::linalg::Vector;
use crate::scalar::Field;

use super::albert::{albert_data, AlbertData};
use super::composition::CompositionAlgebra;
use super::kantor::{kantor, KantorAlgebra};
use super::structurable::{jternary_from_structurable, tensor_structurable, StructurableAlgebra};

/// `A = C₁ ⊗ C₂`, the J-ternary algebra `(S, A)` for `s = e3⊗f0`, its
/// Albert data, an element `u ∈ S₁ ⊥ c` with `Q̃(u) = −1` and the
/// idempotent `e = ½(c + u)` of `S` (in `J` coordinates).
#[derive(Debug, Clone)]
pub struct ExceptionalModel {
    pub c2_dim: usize,
    pub structurable: StructurableAlgebra,
    pub jt: JTernaryAlgebra,
    pub albert: AlbertData,
    pub s: Vector,
    pub u: Vector,
    pub idempotent: Vector,
}

impl ExceptionalModel {
    /// Conventional name of the Lie algebra `K(A,−)`.
    pub fn lie_name(&self) -> &'static str {
        match self.c2_dim {
            1 => "f4",
            2 => "e6",
            4 => "e7",
            _ => "e8",
        }
    }

    /// Dimension of `K(A,−)`: 52, 78, 133 or 248.
    pub fn reference_dim(&self) -> usize {
        match self.c2_dim {
            1 => 52,
            2 => 78,
            4 => 133,
            _ => 248,
        }
    }

    /// Builds `K(A,−)`; this is the expensive step for large `C₂`.
    pub fn kantor(&self) -> Result<KantorAlgebra> {
        kantor(&self.structurable)
    }
}

pub fn exceptional_series(field: Field, c2_dim: usize) -> Result<ExceptionalModel> {
    let c1 = CompositionAlgebra::split(field, 8, "e")?;
    let c2 = CompositionAlgebra::split(field, c2_dim, "f")?;
    let a = tensor_structurable(&c1, &c2)?;
    let n = a.dim();
    let n2 = c2.dim();
    let s = unit(field, n, 3 * n2);
    let jt = jternary_from_structurable(&a, &s)?;
    let albert = albert_data(&a, &s)?;
    // u = e_i ⊗ f0 with i ∉ {0, 3} and Q̃(u) = ν₁(s)ν₁(e_i) = −1.
    let minus = -field.one();
    let u = (1..8)
        .filter(|&i| i != 3)
        .map(|i| unit(field, n, i * n2))
        .find(|u| albert.q_tilde(u) == minus && albert.q_tilde_polar(u, &albert.c).is_zero())
        .ok_or_else(|| Error::NoProperIdempotent("no trace-zero u with Q̃(u) = −1".into()))?;
    let half = field.ratio(1, 2);
    let e = scale(&half, &add(&albert.c, &u));
    let idempotent = a
        .skew()
        .coordinates_dense(&e)
        .ok_or_else(|| Error::NotInSpan("idempotent is not skew".into()))?;
    Ok(ExceptionalModel { c2_dim, structurable: a, jt, albert, s, u, idempotent })
}
