//! Isotypic decompositions under a short sl₂ and under the pair of
//! commuting sl₂ copies defined by an idempotent.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::vector::{add, is_zero, scale};
use crate::linalg::{eigenspace, LinearMap, Subspace, Vector};
use crate::report::{Check, VerificationReport};
use crate::scalar::Scalar;

use super::sl2;
use super::{closed_under, AssembledL, LieAlgebra, Sl2Triple};

#[derive(Debug, Clone)]
pub struct IsotypicComponent {
    /// Name of the multiplicity space (`J`, `T`, `D`, or `J1`, `J_half`,
    /// `J0`, `T1`, `T0`, `S`).
    pub name: String,
    /// Module type of one copy, e.g. `adjoint`, `natural⊗natural`.
    pub module: String,
    /// Highest weight(s) of one copy.
    pub highest_weight: Vec<i32>,
    pub multiplicity: usize,
    /// Highest weight vectors.
    pub highest: Subspace,
    /// The whole isotypic component.
    pub subspace: Subspace,
}

#[derive(Debug, Clone)]
pub struct IsotypicDecomposition {
    pub components: Vec<IsotypicComponent>,
    pub report: VerificationReport,
}

impl IsotypicDecomposition {
    pub fn component(&self, name: &str) -> Option<&IsotypicComponent> {
        self.components.iter().find(|c| c.name == name)
    }
}

fn kernel_in(op: &LinearMap, within: &Subspace) -> Subspace {
    // {v ∈ within : op v = 0}, via the kernel of op restricted to a basis.
    let f = within.field();
    let basis = within.basis_dense();
    let images: Vec<crate::linalg::SparseVec> = basis
        .iter()
        .map(|b| crate::linalg::SparseVec::from_dense(&op.apply(b).expect("dim")))
        .collect();
    let k = crate::linalg::kernel_of_columns(f, op.codomain(), &images);
    let vectors: Vec<Vector> = k
        .iter()
        .map(|c| {
            let mut v = crate::linalg::vector::zeros(f, within.ambient());
            for (ci, b) in c.iter().zip(&basis) {
                crate::linalg::vector::axpy(&mut v, ci, b);
            }
            v
        })
        .collect();
    Subspace::span_of_dense(f, within.ambient(), &vectors)
}

/// Span of `lowering^k(v)` for `v` in `hw`, `k = 0..=depth`, for each
/// lowering operator applied in every order up to the given depths.
fn generate(hw: &Subspace, lowering: &[(&LinearMap, usize)]) -> Subspace {
    let f = hw.field();
    let mut vectors = hw.basis_dense();
    for (op, depth) in lowering {
        let mut next = vectors.clone();
        let mut frontier = vectors.clone();
        for _ in 0..*depth {
            frontier = frontier.iter().map(|v| op.apply(v).expect("dim")).collect();
            next.extend(frontier.iter().cloned());
        }
        vectors = next;
    }
    Subspace::span_of_dense(f, hw.ambient(), &vectors)
}

/// Decomposition `L = (sl₂⊗J) ⊕ (V⊗T) ⊕ D` under a short sl₂-triple.
pub fn short_sl2_decompose(l: &LieAlgebra, t: &Sl2Triple) -> Result<IsotypicDecomposition> {
    l.check_sl2_triple(t)?;
    let f = l.field();
    let n = l.dim();
    let (ade, adh, adf) = (l.ad(&t.e), l.ad(&t.h), l.ad(&t.f));
    let mut weights = BTreeMap::new();
    let mut total = 0;
    for i in -2..=2 {
        let s = eigenspace(&adh, &f.int(i));
        total += s.dim();
        weights.insert(i, s);
    }
    if total != n {
        return Err(Error::NotShort(format!("weights −2..2 cover {total} of {n} dimensions")));
    }
    let w = |i: i64| &weights[&i];
    let hw_j = kernel_in(&ade, w(2));
    let hw_t = kernel_in(&ade, w(1));
    let hw_d = kernel_in(&ade, w(0));
    let mut report = VerificationReport::new("short_sl2_decomposition").with_dim("L", n);
    let (dj, dt, dd) = (hw_j.dim(), hw_t.dim(), hw_d.dim());
    report.dim("J", dj);
    report.dim("T", dt);
    report.dim("D", dd);
    report.assert("no_negative_highest_weights", kernel_in(&ade, w(-1)).dim() == 0 && kernel_in(&ade, w(-2)).dim() == 0, || {
        "ad E has kernel in negative weight".into()
    });
    report.assert("trivial_copies_killed_by_F", kernel_in(&adf, w(0)).equals(&hw_d), || {
        "ker ad E ∩ L0 ≠ ker ad F ∩ L0".into()
    });
    report.assert("weight_dimensions", w(-2).dim() == dj && w(-1).dim() == dt && w(0).dim() == dj + dd, || {
        format!("weights (−2,−1,0) dims ({},{},{})", w(-2).dim(), w(-1).dim(), w(0).dim())
    });
    report.assert("shape_3J_plus_2T_plus_D", 3 * dj + 2 * dt + dd == n, || {
        format!("3·{dj} + 2·{dt} + {dd} ≠ {n}")
    });
    let adjoint = generate(&hw_j, &[(&adf, 2)]);
    let natural = generate(&hw_t, &[(&adf, 1)]);
    let trivial = hw_d.clone();
    report.assert("direct_sum_exhaustive", adjoint.sum(&natural).sum(&trivial).dim() == n
        && adjoint.dim() + natural.dim() + trivial.dim() == n, || "components do not form a direct sum of L".into());
    let actors = [t.e.clone(), t.h.clone(), t.f.clone()];
    let mut closed = Check::new("components_closed_under_sl2");
    for (name, s) in [("adjoint", &adjoint), ("natural", &natural), ("trivial", &trivial)] {
        closed.record(closed_under(l, &actors, s), || name.to_string());
    }
    report.push(closed);
    if !report.passed() {
        return Err(Error::NotShort(report.witness.clone().unwrap_or_default()));
    }
    let comp = |name: &str, module: &str, hw: i32, h: Subspace, s: Subspace| IsotypicComponent {
        name: name.into(),
        module: module.into(),
        highest_weight: vec![hw],
        multiplicity: h.dim(),
        highest: h,
        subspace: s,
    };
    Ok(IsotypicDecomposition {
        components: vec![
            comp("J", "adjoint", 2, hw_j, adjoint),
            comp("T", "natural", 1, hw_t, natural),
            comp("D", "trivial", 0, hw_d, trivial),
        ],
        report,
    })
}

const PATTERNS: [((i64, i64), &str, &str); 6] = [
    ((2, 0), "J1", "adjoint⊗trivial"),
    ((0, 2), "J0", "trivial⊗adjoint"),
    ((1, 1), "J_half", "natural⊗natural"),
    ((1, 0), "T1", "natural⊗trivial"),
    ((0, 1), "T0", "trivial⊗natural"),
    ((0, 0), "S", "trivial⊗trivial"),
];

/// The six-component decomposition under `sl(V)⊗e` and `sl(V)⊗(1−e)`,
/// cross-checked against the Peirce data of `e` on the J-ternary side.
pub fn short_sl2sl2_decompose(asm: &AssembledL, e: &[Scalar]) -> Result<IsotypicDecomposition> {
    let jt = asm.jt();
    let l = &asm.lie;
    let f = l.field();
    let n = l.dim();
    let status = jt.jordan().is_idempotent(e);
    if !status.idempotent {
        return Err(Error::NotIdempotent);
    }
    if !status.proper {
        return Err(Error::NotProper);
    }
    let ce = status.complement.clone();
    let copy = |a: &[Scalar]| Sl2Triple {
        e: asm.sl_element(0, a),
        h: asm.sl_element(1, a),
        f: asm.sl_element(2, a),
    };
    let (c1, c2) = (copy(e), copy(&ce));
    l.check_sl2_triple(&c1)?;
    l.check_sl2_triple(&c2)?;
    let mut report = VerificationReport::new("short_sl2xsl2_decomposition").with_dim("L", n);

    let mut commute = Check::new("copies_commute");
    for (i, x) in [&c1.e, &c1.h, &c1.f].into_iter().enumerate() {
        for (j, y) in [&c2.e, &c2.h, &c2.f].into_iter().enumerate() {
            commute.record(is_zero(&l.bracket(x, y)), || format!("[{}⊗e, {}⊗(1−e)]", sl2::LABELS[i], sl2::LABELS[j]));
        }
    }
    let commute_ok = commute.passed();
    report.push(commute);
    if !commute_ok {
        return Err(Error::Precondition("the two sl2 copies do not commute".into()));
    }

    let (ade1, adh1, adf1) = (l.ad(&c1.e), l.ad(&c1.h), l.ad(&c1.f));
    let (ade2, adh2, adf2) = (l.ad(&c2.e), l.ad(&c2.h), l.ad(&c2.f));
    let eig1: BTreeMap<i64, Subspace> = (-2..=2).map(|i| (i, eigenspace(&adh1, &f.int(i)))).collect();
    let eig2: BTreeMap<i64, Subspace> = (-2..=2).map(|i| (i, eigenspace(&adh2, &f.int(i)))).collect();
    let mut joint = BTreeMap::new();
    let mut covered = 0;
    for i in -2..=2i64 {
        for j in -2..=2i64 {
            let s = eig1[&i].intersection(&eig2[&j]);
            if s.dim() > 0 {
                let allowed = PATTERNS.iter().any(|((a, b), _, _)| {
                    (a.abs() == i.abs() && b.abs() == j.abs()) && (*a, *b) != (0, 0) || (i, j) == (0, 0)
                });
                if !allowed {
                    return Err(Error::NotShort(format!("joint weight ({i},{j}) occurs")));
                }
                covered += s.dim();
                joint.insert((i, j), s);
            }
        }
    }
    if covered != n {
        return Err(Error::NotShort(format!("joint weights cover {covered} of {n} dimensions")));
    }
    let zero = Subspace::zero(f, n);
    let both_e_kernel = |w: &Subspace| kernel_in(&ade2, &kernel_in(&ade1, w));
    let mut components = Vec::new();
    for ((i, j), s) in &joint {
        let hw = both_e_kernel(s);
        if hw.dim() > 0 && !PATTERNS.iter().any(|(w, _, _)| *w == (*i, *j)) {
            return Err(Error::NotShort(format!("highest weight ({i},{j}) is not one of the six types")));
        }
    }
    for ((i, j), name, module) in PATTERNS {
        let hw = joint.get(&(i, j)).map(both_e_kernel).unwrap_or_else(|| zero.clone());
        let sub = generate(&hw, &[(&adf1, i as usize), (&adf2, j as usize)]);
        components.push(IsotypicComponent {
            name: name.into(),
            module: module.into(),
            highest_weight: vec![i as i32, j as i32],
            multiplicity: hw.dim(),
            highest: hw,
            subspace: sub,
        });
    }
    let get = |name: &str| components.iter().find(|c| c.name == name).expect("component");
    let m = |name: &str| get(name).multiplicity;
    for c in &components {
        report.dim(c.name.clone(), c.multiplicity);
    }
    let shape = 3 * m("J1") + 3 * m("J0") + 4 * m("J_half") + 2 * m("T1") + 2 * m("T0") + m("S");
    report.assert("shape_matches_dimension", shape == n, || format!("3J1+3J0+4J½+2T1+2T0+S = {shape} ≠ {n}"));
    let mut sum = Subspace::zero(f, n);
    let mut dims = 0;
    for c in &components {
        sum = sum.sum(&c.subspace);
        dims += c.subspace.dim();
    }
    report.assert("direct_sum_exhaustive", sum.dim() == n && dims == n, || {
        format!("components span {} with total dimension {dims} of {n}", sum.dim())
    });

    let actors = [c1.e.clone(), c1.h.clone(), c1.f.clone(), c2.e.clone(), c2.h.clone(), c2.f.clone()];
    let mut closed = Check::new("components_closed_under_both_copies");
    for c in &components {
        closed.record(closed_under(l, &actors, &c.subspace), || c.name.clone());
    }
    report.push(closed);

    // J-ternary side: Peirce spaces of e and the splitting of T.
    let peirce = jt.jordan().peirce_decompose(e)?;
    let split = jt.split_t(e)?;
    let expected = [
        ("J1", peirce.one.dim()),
        ("J0", peirce.zero.dim()),
        ("J_half", peirce.half.dim()),
        ("T1", split.one.dim()),
        ("T0", split.zero.dim()),
    ];
    let mut mult = Check::new("multiplicities_match_peirce");
    for (name, d) in expected {
        mult.record(m(name) == d, || format!("{name}: {} vs {d}", m(name)));
    }
    report.push(mult);

    let span = |vs: Vec<Vector>| Subspace::span_of_dense(f, n, &vs);
    let sl_of = |basis: &[Vector]| span(basis.iter().flat_map(|a| (0..3).map(move |g| asm.sl_element(g, a))).collect());
    let v_of = |basis: &[Vector]| span(basis.iter().flat_map(|x| (0..2).map(move |u| asm.v_element(u, x))).collect());
    let half_basis = peirce.half.basis_dense();
    let de: Vec<Vector> = half_basis.iter().map(|a| asm.big_d_element(e, a)).collect();

    // S = {D ∈ D : D(e) = 0}.
    let d_ops = asm.d_basis();
    let off = 3 * jt.dim_j() + 2 * jt.dim_t();
    let images: Vec<crate::linalg::SparseVec> = d_ops
        .iter()
        .map(|op| crate::linalg::SparseVec::from_dense(&op.on_j.apply(e).expect("dim")))
        .collect();
    let s_coords = crate::linalg::kernel_of_columns(f, jt.dim_j(), &images);
    let s_space = span(
        s_coords
            .iter()
            .map(|c| {
                let mut v = crate::linalg::vector::zeros(f, n);
                for (k, x) in c.iter().enumerate() {
                    v[off + k] = x.clone();
                }
                v
            })
            .collect(),
    );
    let de_space = span(de.clone());
    let d_space = span((0..d_ops.len()).map(|k| crate::linalg::vector::unit(f, n, off + k)).collect());
    report.assert("D_is_S_plus_D_e_Jhalf", s_space.dim() + de_space.dim() == d_ops.len()
        && s_space.sum(&de_space).equals(&d_space), || {
        format!("dim S {} + dim D_e,J½ {} vs dim D {}", s_space.dim(), de_space.dim(), d_ops.len())
    });

    let jt_side = [
        ("J1", sl_of(&peirce.one.basis_dense())),
        ("J0", sl_of(&peirce.zero.basis_dense())),
        ("J_half", sl_of(&half_basis).sum(&de_space)),
        ("T1", v_of(&split.one.basis_dense())),
        ("T0", v_of(&split.zero.basis_dense())),
        ("S", s_space.clone()),
    ];
    let mut agree = Check::new("components_match_jternary_side");
    for (name, s) in &jt_side {
        agree.record(get(name).subspace.equals(s), || name.to_string());
    }
    report.push(agree);

    // D_{e,a}(e) = −¼a on J_½.
    let quarter = f.ratio(1, 4);
    let mut dee = Check::new("D_e_a_of_e_is_minus_quarter_a");
    for (i, a) in half_basis.iter().enumerate() {
        let d = jt.derived_big_d(e, a);
        dee.record(d.on_j.apply(e).expect("dim") == scale(&-quarter.clone(), a), || format!("J½[{i}]"));
    }
    report.push(dee);

    // Bracket coefficients and the isomorphism with V⊗V ≅ gl(V):
    // f⊗a ↦ f, D_{e,a} ↦ ¼ id, intertwining (f₁, f₂)·g = f₁g − gf₂.
    let mut coeff = Check::new("mixed_bracket_coefficients");
    let mut equiv = Check::new("four_dim_components_are_V_tensor_V");
    for (i, a) in half_basis.iter().enumerate() {
        let pieces: Vec<Vector> = (0..3).map(|g| asm.sl_element(g, a)).chain([de[i].clone()]).collect();
        let four = span(pieces.clone());
        if four.dim() != 4 {
            equiv.record(false, || format!("J½[{i}]: component has dimension {}", four.dim()));
            continue;
        }
        // ψ of an element given by coordinates in `pieces`.
        let psi = |v: &Vector| -> Option<sl2::Mat2> {
            let sol = crate::linalg::solve_exact(f, &transpose(&pieces, n), Some(v)).ok()?;
            let x = sol.particular?;
            let to_i = |s: &Scalar| -> Option<i64> { integer_of(&(s * &f.int(4))) };
            let mut acc = [[0i64; 2]; 2];
            for g in 0..3 {
                let c = to_i(&x[g])?;
                acc = sl2::mat_add(&acc, &sl2::matrix(g), c);
            }
            let c = to_i(&x[3])?;
            acc = sl2::mat_add(&acc, &[[1, 0], [0, 1]], c / 4);
            if c % 4 != 0 {
                return None;
            }
            Some(acc)
        };
        for g in 0..3 {
            for f1 in 0..3 {
                for f2 in 0..3 {
                    // [f₁⊗e + f₂⊗(1−e), g⊗a] = ½[f₁+f₂, g]⊗a + 2tr((f₁−f₂)g) D_{e,a}
                    let act = add(&asm.sl_element(f1, e), &asm.sl_element(f2, &ce));
                    let lhs = l.bracket(&act, &pieces[g]);
                    let br1 = sl2::bracket(f1, g);
                    let br2 = sl2::bracket(f2, g);
                    let mut rhs = crate::linalg::vector::zeros(f, n);
                    for k in 0..3 {
                        let c = f.ratio(br1[k] + br2[k], 2);
                        crate::linalg::vector::axpy(&mut rhs, &c, &pieces[k]);
                    }
                    let tr = sl2::trace_form(f1, g) - sl2::trace_form(f2, g);
                    crate::linalg::vector::axpy(&mut rhs, &f.int(2 * tr), &de[i]);
                    coeff.record(lhs == rhs, || format!("J½[{i}] f1={} f2={} g={}", sl2::LABELS[f1], sl2::LABELS[f2], sl2::LABELS[g]));
                }
            }
        }
        for (x_idx, x) in pieces.iter().enumerate() {
            let Some(px) = psi(x) else {
                equiv.record(false, || format!("J½[{i}] ψ undefined on piece {x_idx}"));
                continue;
            };
            for h in 0..3 {
                for side in 0..2 {
                    let actor = if side == 0 { asm.sl_element(h, e) } else { asm.sl_element(h, &ce) };
                    let image = l.bracket(&actor, x);
                    let expect = if side == 0 {
                        sl2::mat_mul(&sl2::matrix(h), &px)
                    } else {
                        let m = sl2::mat_mul(&px, &sl2::matrix(h));
                        [[-m[0][0], -m[0][1]], [-m[1][0], -m[1][1]]]
                    };
                    let ok = four.contains_dense(&image) && psi(&image) == Some(expect);
                    equiv.record(ok, || format!("J½[{i}] piece {x_idx} acted on by {}⊗{}", sl2::LABELS[h], if side == 0 { "e" } else { "(1−e)" }));
                }
            }
        }
    }
    report.push(coeff);
    report.push(equiv);

    // Restriction to the diagonal copy E⊗1, H⊗1, F⊗1.
    let diag = short_sl2_decompose(l, &asm.triple)?;
    let dget = |name: &str| &diag.component(name).expect("component").subspace;
    let mut restrict = Check::new("diagonal_restriction");
    let adj = get("J1").subspace.sum(&get("J0").subspace).sum(&sl_of(&half_basis));
    restrict.record(dget("J").equals(&adj), || "adjoint part".into());
    restrict.record(dget("T").equals(&get("T1").subspace.sum(&get("T0").subspace)), || "natural part".into());
    restrict.record(dget("D").equals(&s_space.sum(&de_space)), || "trivial part".into());
    restrict.record(
        diag.component("J").unwrap().multiplicity == m("J1") + m("J_half") + m("J0"),
        || "dim J ≠ dim J1 + dim J½ + dim J0".into(),
    );
    report.push(restrict);
    report.note(
        "mixed bracket checked as [f₁⊗e+f₂⊗(1−e), g⊗a] = ½[f₁+f₂,g]⊗a + 2tr((f₁−f₂)g)D_{e,a}, \
         matching f₁g − gf₂ = ½([f₁+f₂,g] + tr((f₁−f₂)g)id) under ψ",
    );
    Ok(IsotypicDecomposition { components, report })
}

fn transpose(cols: &[Vector], n: usize) -> Vec<Vector> {
    (0..n).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect()
}

fn integer_of(s: &Scalar) -> Option<i64> {
    let r = s.as_rational()?;
    let (num, den) = r.small_parts()?;
    (den == 1).then_some(num)
}
