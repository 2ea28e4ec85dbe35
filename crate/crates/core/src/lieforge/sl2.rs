//! The two-dimensional space `V = ⟨p, q⟩` with `(p|q) = 1`, and `sl(V)`
//! with basis `E, H, F` given by `E(q) = p`, `H(p) = p`, `H(q) = −q`,
//! `F(p) = q`.

/// 2×2 integer matrix; `m[r][c]` is the `r`-coordinate of the image of
/// basis vector `c`.
pub type Mat2 = [[i64; 2]; 2];

pub const LABELS: [&str; 3] = ["E", "H", "F"];
pub const V_LABELS: [&str; 2] = ["p", "q"];

pub fn matrix(f: usize) -> Mat2 {
    match f {
        0 => [[0, 1], [0, 0]],
        1 => [[1, 0], [0, -1]],
        2 => [[0, 0], [1, 0]],
        _ => panic!("sl(V) basis index {f}"),
    }
}

pub fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut m = [[0; 2]; 2];
    for r in 0..2 {
        for c in 0..2 {
            m[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
        }
    }
    m
}

pub fn mat_add(a: &Mat2, b: &Mat2, s: i64) -> Mat2 {
    [[a[0][0] + s * b[0][0], a[0][1] + s * b[0][1]], [a[1][0] + s * b[1][0], a[1][1] + s * b[1][1]]]
}

pub fn trace(a: &Mat2) -> i64 {
    a[0][0] + a[1][1]
}

/// Coordinates `(E, H, F)` of a traceless matrix.
pub fn coords(m: &Mat2) -> [i64; 3] {
    debug_assert_eq!(trace(m), 0);
    [m[0][1], m[0][0], m[1][0]]
}

/// `[f, g]` in `E, H, F` coordinates.
pub fn bracket(f: usize, g: usize) -> [i64; 3] {
    let (a, b) = (matrix(f), matrix(g));
    coords(&mat_add(&mat_mul(&a, &b), &mat_mul(&b, &a), -1))
}

/// `tr(fg)`
pub fn trace_form(f: usize, g: usize) -> i64 {
    trace(&mat_mul(&matrix(f), &matrix(g)))
}

/// `f(u)` in `p, q` coordinates.
pub fn act(f: usize, u: usize) -> [i64; 2] {
    let m = matrix(f);
    [m[0][u], m[1][u]]
}

/// The symplectic form `(u|v)`.
pub fn form(u: usize, v: usize) -> i64 {
    match (u, v) {
        (0, 1) => 1,
        (1, 0) => -1,
        _ => 0,
    }
}

/// `γ_{u,v}(w) = (u|w)v + (v|w)u`, in `E, H, F` coordinates.
pub fn gamma(u: usize, v: usize) -> [i64; 3] {
    let mut m = [[0; 2]; 2];
    for w in 0..2 {
        m[v][w] += form(u, w);
        m[u][w] += form(v, w);
    }
    coords(&m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutation_relations() {
        assert_eq!(bracket(0, 1), [-2, 0, 0]);
        assert_eq!(bracket(0, 2), [0, 1, 0]);
        assert_eq!(bracket(1, 2), [0, 0, -2]);
    }

    #[test]
    fn gamma_values() {
        assert_eq!(gamma(0, 0), [2, 0, 0]);
        assert_eq!(gamma(0, 1), [0, -1, 0]);
        assert_eq!(gamma(1, 0), [0, -1, 0]);
        assert_eq!(gamma(1, 1), [0, 0, -2]);
    }

    #[test]
    fn anticommutator_is_trace() {
        // fg + gf = tr(fg) id on the 2×2 kernel.
        for f in 0..3 {
            for g in 0..3 {
                let (a, b) = (matrix(f), matrix(g));
                let s = mat_add(&mat_mul(&a, &b), &mat_mul(&b, &a), 1);
                let t = trace_form(f, g);
                assert_eq!(s, [[t, 0], [0, t]], "f={f} g={g}");
            }
        }
    }
}
