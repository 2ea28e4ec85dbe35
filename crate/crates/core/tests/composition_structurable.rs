use isotype_core::catalog::{
    albert_data, cayley_dickson, check_epsilon_convention, check_unit_of_s, exceptional_series, inverse_skew,
    jternary_from_structurable, tensor_structurable, verify_quadratic_factor, CompositionAlgebra, InvolutiveAlgebra,
    StructurableAlgebra,
};
use isotype_core::linalg::vector::{scale, sub, unit};
use isotype_core::linalg::LinearMap;
use isotype_core::{Field, Scalar};

const Q: Field = Field::Rational;

fn ints(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| Q.int(x)).collect()
}

#[test]
fn split_octonion_norm_signature() {
    let o = CompositionAlgebra::split(Q, 8, "e").unwrap();
    assert_eq!(o.norm_diagonal(), ints(&[1, -1, -1, 1, -1, 1, 1, -1]).as_slice());
}

#[test]
fn split_composition_algebras_pass_their_checks() {
    for d in [1, 2, 4, 8] {
        let c = CompositionAlgebra::split(Q, d, "e").unwrap();
        let r = c.check();
        assert!(r.passed(), "dim {d}: {r:?}");
        assert_eq!(c.dim(), d);
    }
}

#[test]
fn binarion_norm_is_hyperbolic() {
    let b = CompositionAlgebra::split(Q, 2, "e").unwrap();
    for (a, c) in [(3, 2), (1, 1), (-5, 7)] {
        assert_eq!(b.norm(&ints(&[a, c])), Q.int(a * a - c * c));
    }
}

#[test]
fn octonions_are_not_associative() {
    let o = CompositionAlgebra::split(Q, 8, "e").unwrap();
    let a = o.algebra();
    let (x, y, z) = (a.basis(1), a.basis(2), a.basis(4));
    let assoc = sub(&a.mul(&a.mul(&x, &y), &z), &a.mul(&x, &a.mul(&y, &z)));
    assert!(assoc.iter().any(|c| !c.is_zero()));
}

#[test]
fn cayley_dickson_rejects_bad_parameters() {
    let o = CompositionAlgebra::split(Q, 8, "e").unwrap();
    assert!(cayley_dickson(&o, &Q.one()).is_err());
    let h = CompositionAlgebra::split(Q, 4, "e").unwrap();
    assert!(cayley_dickson(&h, &Q.zero()).is_err());
}

#[test]
fn tensor_products_are_structurable() {
    let c1 = CompositionAlgebra::split(Q, 8, "e").unwrap();
    for d in [1, 2] {
        let c2 = CompositionAlgebra::split(Q, d, "f").unwrap();
        let a = tensor_structurable(&c1, &c2).unwrap();
        let r = a.check();
        assert!(r.passed(), "C1⊗C2 with dim C2 = {d}: {r:?}");
    }
}

#[test]
fn octonions_with_identity_map_are_not_structurable() {
    let o = CompositionAlgebra::split(Q, 8, "e").unwrap();
    let id = LinearMap::identity(Q, 8);
    let inv = InvolutiveAlgebra::with_period_two_map(o.algebra().clone(), id).unwrap();
    match StructurableAlgebra::new(inv) {
        Err(_) => {}
        Ok(a) => assert!(!a.check().passed()),
    }
}

#[test]
fn epsilon_convention_and_instrl_dimensions() {
    let c1 = CompositionAlgebra::split(Q, 8, "e").unwrap();
    for (d, expect) in [(1, 22), (2, 30)] {
        let c2 = CompositionAlgebra::split(Q, d, "f").unwrap();
        let a = tensor_structurable(&c1, &c2).unwrap();
        assert!(check_epsilon_convention(&a).passed());
        assert_eq!(a.instrl().unwrap().dim(), expect);
    }
}

#[test]
fn reference_element_inverse_and_unit() {
    let m = exceptional_series(Q, 1).unwrap();
    // s' = -s for the catalog s, whose C1 norm is 1.
    let inv = inverse_skew(&m.structurable, &m.s).unwrap();
    assert_eq!(inv, scale(&-Q.one(), &m.s));
    assert!(check_unit_of_s(&m.jt).passed());
    assert_eq!(m.albert.c, scale(&-Q.one(), &m.s));
}

#[test]
fn albert_form_for_every_c2() {
    for d in [1, 2, 4, 8] {
        let m = exceptional_series(Q, d).unwrap();
        let r = verify_quadratic_factor(&m.albert, &m.structurable, &m.jt);
        assert!(r.passed(), "dim C2 = {d}: {r:?}");
        assert!(m.albert.q_tilde(&m.albert.c).is_one());
        assert!(m.albert.q(&m.s).is_one());
        // Printed form of the square law is recorded, and fails.
        assert!(!r.check("quadratic_factor_law_as_printed").unwrap().passed());
    }
}

#[test]
fn albert_form_with_nonunit_reference_norm() {
    let c1 = CompositionAlgebra::split(Q, 8, "e").unwrap();
    let c2 = CompositionAlgebra::split(Q, 1, "f").unwrap();
    let a = tensor_structurable(&c1, &c2).unwrap();
    let s = scale(&Q.int(2), &unit(Q, a.dim(), 3));
    let d = albert_data(&a, &s).unwrap();
    assert_eq!(d.nu_s, Q.int(4));
    let jt = jternary_from_structurable(&a, &s).unwrap();
    let r = verify_quadratic_factor(&d, &a, &jt);
    assert!(r.passed(), "{r:?}");
}

#[test]
fn albert_data_rejects_null_reference() {
    let c1 = CompositionAlgebra::split(Q, 8, "e").unwrap();
    let c2 = CompositionAlgebra::split(Q, 1, "f").unwrap();
    let a = tensor_structurable(&c1, &c2).unwrap();
    // e1 + e3 has norm -1 + 1 = 0.
    let mut s = unit(Q, 8, 1);
    s[3] = Q.one();
    assert!(albert_data(&a, &s).is_err());
}
