use isotype_core::catalog::{exceptional_series, jternary_from_structurable};
use isotype_core::linalg::LinearMap;
use isotype_core::lieforge::{assemble_l_unchecked, jternary_from_5grading, short_sl2sl2_decompose};
use isotype_core::Field;

const Q: Field = Field::Rational;

/// dim K(C1⊗C2) = 2 dim S + 2 dim A + dim Instrl, with reference values
/// from the magic square.
#[test]
fn kantor_dimensions_match_magic_square() {
    for (d, dims, total) in [(1, (7, 8, 22), 52), (2, (8, 16, 30), 78), (4, (10, 32, 49), 133), (8, (14, 64, 92), 248)] {
        let m = exceptional_series(Q, d).unwrap();
        let k = m.kantor().unwrap();
        assert_eq!(k.dims, dims, "dim C2 = {d}");
        assert_eq!(k.dim(), total);
        assert_eq!(k.dim(), m.reference_dim());
        // S = S1 ⊕ S2 has dimension 7 + (dim C2 − 1).
        assert_eq!(k.dims.0, 7 + d - 1);
        assert_eq!(k.dims.1, 8 * d);
    }
}

#[test]
fn f4_and_e6_are_lie_and_semisimple() {
    for d in [1, 2] {
        let k = exceptional_series(Q, d).unwrap().kantor().unwrap();
        assert!(k.lie.check_antisymmetry().passed());
        let j = k.lie.check_jacobi();
        assert!(j.passed(), "dim C2 = {d}: {j:?}");
        assert_eq!(k.lie.killing_rank(), k.dim());
        assert_eq!(k.lie.center().dim(), 0);
        assert!(k.grading().check_compatibility(&k.lie).passed());
    }
}

#[test]
fn unit_bracket_and_sl2_triple() {
    let m = exceptional_series(Q, 1).unwrap();
    let k = m.kantor().unwrap();
    let one = m.structurable.unit().clone();
    let br = k.lie.bracket(&k.a_element(&one), &k.a_tilde(&one));
    let two_id = LinearMap::identity(Q, m.structurable.dim()).scaled(&Q.int(2));
    let expect = k.instrl_element(&two_id).unwrap();
    assert!(br == expect, "[1, 1~] ≠ 2 id");
    let t = k.sl2_triple(&m.structurable, &m.s).unwrap();
    assert!(k.lie.check_sl2_triple(&t).is_ok());
}

#[test]
fn grading_round_trip_recovers_structurable_jternary() {
    for d in [1, 2] {
        let m = exceptional_series(Q, d).unwrap();
        let k = m.kantor().unwrap();
        let t = k.sl2_triple(&m.structurable, &m.s).unwrap();
        let rebuilt = jternary_from_5grading(&k.lie, &t.e, &t.f).unwrap();
        let direct = jternary_from_structurable(&m.structurable, &m.s).unwrap();
        let r = direct.compare(&rebuilt);
        assert!(r.passed(), "dim C2 = {d}: {r:?}");
    }
}

#[test]
fn assembled_exceptional_dimensions() {
    for (d, comps) in [(1, (21, 16, 15)), (2, (24, 32, 22))] {
        let m = exceptional_series(Q, d).unwrap();
        let asm = assemble_l_unchecked(&m.jt).unwrap();
        assert_eq!(asm.component_dims(), comps);
        assert_eq!(asm.lie.dim(), m.reference_dim());
        assert!(asm.lie.check_jacobi().passed());
    }
}

#[test]
fn exceptional_idempotent_peirce_and_six_components() {
    for d in [1, 2] {
        let m = exceptional_series(Q, d).unwrap();
        let ns = m.jt.dim_j();
        let p = m.jt.jordan().peirce_decompose(&m.idempotent).unwrap();
        assert_eq!(p.dims(), (1, ns - 2, 1), "dim C2 = {d}");
        let split = m.jt.split_t(&m.idempotent).unwrap();
        assert_eq!(split.one.dim(), m.jt.dim_t() / 2);
        assert_eq!(split.zero.dim(), m.jt.dim_t() / 2);
        let r = m.jt.check_peirce_compatibility(&p, &split);
        assert!(r.passed(), "{r:?}");
        let asm = assemble_l_unchecked(&m.jt).unwrap();
        let dec = short_sl2sl2_decompose(&asm, &m.idempotent).unwrap();
        assert_eq!(dec.components.len(), 6);
        assert!(dec.report.passed(), "{:?}", dec.report);
    }
}

#[test]
fn f4_sl2xsl2_multiplicities() {
    let m = exceptional_series(Q, 1).unwrap();
    let asm = assemble_l_unchecked(&m.jt).unwrap();
    let dec = short_sl2sl2_decompose(&asm, &m.idempotent).unwrap();
    let mult = |n: &str| dec.component(n).unwrap().multiplicity;
    assert_eq!([mult("J1"), mult("J0"), mult("J_half"), mult("T1"), mult("T0"), mult("S")], [1, 1, 5, 4, 4, 10]);
}
