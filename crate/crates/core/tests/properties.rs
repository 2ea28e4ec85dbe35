use proptest::prelude::*;

use isotype_core::linalg::vector::{add, scale};
use isotype_core::linalg::{rref, solve_exact, BilinearMap, SparseVec, Subspace, Vector};
use isotype_core::{parse_scalar, Field, Scalar};

fn rational() -> impl Strategy<Value = Scalar> {
    (-40i64..40, 1i64..12).prop_map(|(n, d)| Field::Rational.ratio(n, d))
}

fn residue(p: u64) -> impl Strategy<Value = Scalar> {
    (0..p as i64).prop_map(move |n| Field::prime(p).unwrap().int(n))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vector>> {
    prop::collection::vec(prop::collection::vec(rational(), cols), rows)
}

fn mat_vec(m: &[Vector], x: &[Scalar]) -> Vector {
    m.iter()
        .map(|row| row.iter().zip(x).fold(Field::Rational.zero(), |acc, (a, b)| &acc + &(a * b)))
        .collect()
}

proptest! {
    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Field::Rational.zero());
        if let Some(inv) = a.inverse() {
            prop_assert!((&a * &inv).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn prime_field_axioms(a in residue(101), b in residue(101), c in residue(101)) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &(-&a), Field::prime(101).unwrap().zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn scalar_text_round_trips(a in rational()) {
        prop_assert_eq!(parse_scalar(&a.to_text(), Field::Rational).unwrap(), a);
    }

    #[test]
    fn rref_is_idempotent(m in matrix(4, 5)) {
        let (r, pivots) = rref(Field::Rational, &m, 5);
        let (r2, pivots2) = rref(Field::Rational, &r, 5);
        prop_assert_eq!(&r, &r2);
        prop_assert_eq!(pivots, pivots2);
    }

    #[test]
    fn solutions_solve_and_kernel_vanishes(m in matrix(3, 5), x in prop::collection::vec(rational(), 5)) {
        let target = mat_vec(&m, &x);
        let sol = solve_exact(Field::Rational, &m, Some(&target)).unwrap();
        let p = sol.particular.clone().expect("consistent by construction");
        prop_assert_eq!(mat_vec(&m, &p), target);
        prop_assert_eq!(sol.rank + sol.kernel.len(), 5);
        for k in &sol.kernel {
            prop_assert!(mat_vec(&m, k).iter().all(Scalar::is_zero));
        }
        // Solving again from the reduced rows gives the same answer.
        let again = solve_exact(Field::Rational, &sol.row_space, Some(&mat_vec(&sol.row_space, &p))).unwrap();
        prop_assert_eq!(again.rank, sol.rank);
    }

    #[test]
    fn subspace_coordinates_reconstruct(vs in matrix(3, 4), cs in prop::collection::vec(rational(), 3)) {
        let s = Subspace::span_of_dense(Field::Rational, 4, &vs);
        let mut v = vec![Field::Rational.zero(); 4];
        for (c, row) in cs.iter().zip(&vs) {
            v = add(&v, &scale(c, row));
        }
        let coords = s.coordinates_dense(&v).expect("in span");
        let mut back = vec![Field::Rational.zero(); 4];
        for (c, b) in coords.iter().zip(s.basis_dense()) {
            back = add(&back, &scale(c, &b));
        }
        prop_assert_eq!(back, v);
    }

    #[test]
    fn bilinear_maps_are_bilinear(
        consts in prop::collection::vec((0usize..3, 0usize..3, 0usize..3, rational()), 0..12),
        u in prop::collection::vec(rational(), 3),
        u2 in prop::collection::vec(rational(), 3),
        v in prop::collection::vec(rational(), 3),
        a in rational(),
    ) {
        let f = Field::Rational;
        let mut b = BilinearMap::zero(f, 3, 3, 3);
        for (i, j, k, c) in consts {
            b.add_entry(i, j, k, c).unwrap();
        }
        let lhs = b.apply(&add(&scale(&a, &u), &u2), &v).unwrap();
        let rhs = add(&scale(&a, &b.apply(&u, &v).unwrap()), &b.apply(&u2, &v).unwrap());
        prop_assert_eq!(&lhs, &rhs);
        let sparse = b.apply_sparse(&SparseVec::from_dense(&u), &SparseVec::from_dense(&v));
        prop_assert_eq!(sparse.to_dense(f, 3), b.apply(&u, &v).unwrap());
    }
}
