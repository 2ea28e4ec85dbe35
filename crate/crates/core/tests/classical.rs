use std::time::{Duration, Instant};

use isotype_core::catalog::{
    check_prototypical_d, check_skew_form_symmetric, classical_example, gl_example, outer_derivations, so_example,
    sp_example, ClassicalExample, ClassicalFamily,
};
use isotype_core::lieforge::{assemble_l, jternary_from_5grading, short_sl2_decompose, short_sl2sl2_decompose};
use isotype_core::{Error, Field};

const Q: Field = Field::Rational;

/// Every catalog example with dim W ≤ 3 and dim Z ≤ 2 that the family admits.
fn small_examples() -> Vec<ClassicalExample> {
    let mut out = Vec::new();
    for family in [ClassicalFamily::Gl, ClassicalFamily::So, ClassicalFamily::Sp] {
        for w in 0..=3 {
            for z in 0..=2 {
                if let Ok(ex) = classical_example(family, Q, w, z) {
                    out.push(ex);
                }
            }
        }
    }
    out
}

#[test]
fn catalog_covers_expected_instances() {
    let names: Vec<String> = small_examples().iter().map(ClassicalExample::name).collect();
    for n in ["gl(1,1)", "gl(3,2)", "so(2,0)", "so(2,2)", "sp(1,2)", "sp(3,0)"] {
        assert!(names.iter().any(|x| x == n), "missing {n}");
    }
    assert!(so_example(Q, 3, 1).is_err());
    assert!(sp_example(Q, 2, 1).is_err());
    assert!(gl_example(Q, 0, 1).is_err());
}

#[test]
fn hermitian_modules_and_prototypical_d() {
    for ex in small_examples() {
        assert!(ex.module.check().passed(), "{}", ex.name());
        assert!(ex.module.check_phi_equivariance().passed(), "{}", ex.name());
        assert!(check_skew_form_symmetric(&ex.module).passed(), "{}", ex.name());
        assert!(check_prototypical_d(&ex.module, &ex.jt).passed(), "{}", ex.name());
        let plane = ex.module.extend_with_plane().unwrap();
        assert!(plane.check().passed(), "{} with plane", ex.name());
    }
}

#[test]
fn jt_axioms_and_identities_hold_exhaustively() {
    for ex in small_examples() {
        let start = Instant::now();
        assert!(ex.jt.jordan().check_jordan().passed(), "{}", ex.name());
        assert!(ex.jt.check_special_module().passed(), "{}", ex.name());
        let jt = ex.jt.check_jt_axioms();
        assert!(jt.passed(), "{}: {jt:?}", ex.name());
        let th = ex.jt.check_sl2_identities();
        assert!(th.passed(), "{}: {th:?}", ex.name());
        assert!(th.check("d_antisymmetrization_corrected").unwrap().passed());
        assert!(start.elapsed() < Duration::from_secs(30), "{} took {:?}", ex.name(), start.elapsed());
    }
}

#[test]
fn printed_d_antisymmetrization_fails_only_with_nonzero_t() {
    for ex in small_examples() {
        let th = ex.jt.check_sl2_identities();
        let printed = th.check("d_antisymmetrization_as_printed").unwrap();
        if ex.jt.dim_t() == 0 {
            assert!(printed.passed(), "{}", ex.name());
        }
    }
    let th = gl_example(Q, 1, 1).unwrap().jt.check_sl2_identities();
    assert!(!th.check("d_antisymmetrization_as_printed").unwrap().passed());
}

#[test]
fn assembled_dimensions_and_jacobi() {
    for ex in small_examples() {
        let asm = assemble_l(&ex.jt).unwrap();
        assert!(asm.lie.check_antisymmetry().passed(), "{}", ex.name());
        assert!(asm.lie.check_jacobi().passed(), "{}", ex.name());
        let outer = outer_derivations(&ex.module, &ex.jt);
        let full = 3 * ex.jt.dim_j() + 2 * ex.jt.dim_t() + outer.abstract_dim();
        assert_eq!(full, ex.reference_dim(), "{}", ex.name());
        for op in asm.d_basis() {
            assert!(outer.image.contains(&op.flatten()), "{}", ex.name());
        }
    }
}

#[test]
fn reference_dimensions_of_named_examples() {
    let gl = gl_example(Q, 1, 1).unwrap();
    let asm = assemble_l(&gl.jt).unwrap();
    // Inner part is sl(3); the outer identity on Z completes gl(3).
    assert_eq!(asm.lie.dim(), 8);
    assert_eq!(gl.reference_dim(), 9);
    let so = so_example(Q, 2, 3).unwrap();
    assert_eq!(assemble_l(&so.jt).unwrap().lie.dim(), 21);
    let sp = sp_example(Q, 1, 2).unwrap();
    assert_eq!(assemble_l(&sp.jt).unwrap().lie.dim(), 10);
}

#[test]
fn grading_round_trip_for_small_catalog() {
    for ex in small_examples() {
        if ex.jt.dim_j() + ex.jt.dim_t() > 30 {
            continue;
        }
        let asm = assemble_l(&ex.jt).unwrap();
        let back = jternary_from_5grading(&asm.lie, &asm.triple.e, &asm.triple.f).unwrap();
        let r = ex.jt.compare(&back);
        assert!(r.passed(), "{}: {r:?}", ex.name());
    }
}

#[test]
fn diagonal_sl2_decomposition_recovers_j_t_d() {
    let ex = sp_example(Q, 1, 2).unwrap();
    let asm = assemble_l(&ex.jt).unwrap();
    let dec = short_sl2_decompose(&asm.lie, &asm.triple).unwrap();
    let m = |n: &str| dec.component(n).unwrap().multiplicity;
    assert_eq!((m("J"), m("T"), m("D")), (ex.jt.dim_j(), ex.jt.dim_t(), asm.dim_d()));
}

fn six_components(ex: &ClassicalExample, expect: [usize; 6]) {
    let e = ex.idempotent().unwrap();
    let asm = assemble_l(&ex.jt).unwrap();
    let dec = short_sl2sl2_decompose(&asm, &e).unwrap();
    assert_eq!(dec.components.len(), 6);
    assert!(dec.report.passed(), "{}: {:?}", ex.name(), dec.report);
    let m = |n: &str| dec.component(n).unwrap().multiplicity;
    assert_eq!([m("J1"), m("J_half"), m("J0"), m("T1"), m("T0"), m("S")], expect, "{}", ex.name());
    assert!(dec.report.check("D_e_a_of_e_is_minus_quarter_a").unwrap().passed());
    let p = ex.jt.jordan().peirce_decompose(&e).unwrap();
    let split = ex.jt.split_t(&e).unwrap();
    let r = ex.jt.check_peirce_compatibility(&p, &split);
    assert!(r.passed(), "{}: {r:?}", ex.name());
}

/// Multiplicities [J1, J½, J0, T1, T0, S] from decomposing the natural
/// module U = V⊗W₁ ⊕ V⊗W₀ ⊕ Z, with W₁ = eW, under the two sl(V) copies.
fn expected_multiplicities(ex: &ClassicalExample) -> [usize; 6] {
    let (w, z) = (ex.w, ex.z);
    let choose2 = |n: usize| n * n.saturating_sub(1) / 2;
    match ex.family {
        // U⊗U*, with the identity of U removed from the inner algebra.
        ClassicalFamily::Gl => {
            let w0 = w - 1;
            [1, 2 * w0, w0 * w0, 2 * z, 2 * w0 * z, 1 + w0 * w0 + z * z - 1]
        }
        // Λ²U with W symplectic, W₁ a hyperbolic plane.
        ClassicalFamily::So => {
            let w0 = w - 2;
            [1, 2 * w0, choose2(w0), 2 * z, w0 * z, 3 + (w0 * (w0 + 1) / 2) + choose2(z)]
        }
        // S²U with W orthogonal, W₁ a line.
        ClassicalFamily::Sp => {
            let w0 = w - 1;
            [1, w0, w0 * (w0 + 1) / 2, z, w0 * z, choose2(w0) + z * (z + 1) / 2]
        }
    }
}

#[test]
fn gl_six_components() {
    let ex = gl_example(Q, 2, 1).unwrap();
    six_components(&ex, expected_multiplicities(&ex));
}

#[test]
fn sp_six_components() {
    let ex = sp_example(Q, 2, 2).unwrap();
    six_components(&ex, expected_multiplicities(&ex));
}

#[test]
fn so_six_components() {
    let ex = so_example(Q, 4, 3).unwrap();
    six_components(&ex, expected_multiplicities(&ex));
}

#[test]
fn so_with_two_dimensional_w_has_no_proper_idempotent() {
    let ex = so_example(Q, 2, 3).unwrap();
    assert!(matches!(ex.idempotent(), Err(Error::NoProperIdempotent(_))));
}
