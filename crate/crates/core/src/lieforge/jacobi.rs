//! Exhaustive Jacobi sweep over integer-scaled structure constants.
//!
//! Rational constants are multiplied by the least common denominator so the
//! sweep runs on machine integers; each Jacobi sum is then an exact integer
//! multiple of `1/denominator²` and vanishes iff the integer sum does.
//! Prime-field constants are swept as residues.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::linalg::{BilinearMap, Space, SparseVec};
use crate::report::Check;
use crate::scalar::{Field, Scalar};

/// Largest scaled numerator admitted by the integer kernel; with at most
/// `n²` products per Jacobi sum the accumulators stay inside `i128`.
const NUMERATOR_BOUND: i64 = 1 << 40;

enum Table {
    Int(Vec<Vec<(u32, i64)>>),
    Mod(Vec<Vec<(u32, u64)>>, u64),
}

fn scaled_table(bracket: &BilinearMap) -> Option<Table> {
    let (n, _, _) = bracket.dims();
    match bracket.field() {
        Field::Prime(p) => {
            let table = (0..n * n)
                .map(|ij| {
                    bracket
                        .get(ij / n, ij % n)
                        .iter()
                        .map(|(k, c)| match c {
                            Scalar::Modular { value, .. } => (*k as u32, *value),
                            Scalar::Rational(_) => unreachable!("field checked"),
                        })
                        .collect()
                })
                .collect();
            Some(Table::Mod(table, p))
        }
        Field::Rational => {
            let mut denom = BigInt::one();
            for (_, _, _, c) in bracket.entries() {
                let r = c.as_rational().expect("rational field").to_big();
                denom = denom.lcm(r.denom());
            }
            let mut table = Vec::with_capacity(n * n);
            for ij in 0..n * n {
                let mut row = Vec::new();
                for (k, c) in bracket.get(ij / n, ij % n).iter() {
                    let r = c.as_rational().expect("rational field").to_big();
                    let scaled = r.numer() * (&denom / r.denom());
                    if scaled.abs() > BigInt::from(NUMERATOR_BOUND) {
                        return None;
                    }
                    row.push((*k as u32, scaled.to_i64()?));
                }
                table.push(row);
            }
            if denom.is_zero() {
                return None;
            }
            Some(Table::Int(table))
        }
    }
}

/// `[[x_i,x_j],x_k] + [[x_j,x_k],x_i] + [[x_k,x_i],x_j]` over all `i < j < k`.
/// The witness is the lexicographically smallest failing triple.
pub fn jacobi_check(bracket: &BilinearMap, space: &Space) -> Check {
    let (n, _, _) = bracket.dims();
    let label = |t: (usize, usize, usize)| format!("({},{},{})", space.label(t.0), space.label(t.1), space.label(t.2));
    let mut check = Check::new("jacobi");
    let parts: Vec<Partial> = match scaled_table(bracket) {
        Some(Table::Int(t)) => (0..n).into_par_iter().map(|i| sweep_int(&t, n, i)).collect(),
        Some(Table::Mod(t, p)) => (0..n).into_par_iter().map(|i| sweep_mod(&t, n, p, i)).collect(),
        None => (0..n).into_par_iter().map(|i| sweep_exact(bracket, n, i)).collect(),
    };
    for (checked, bad, first) in parts {
        check.checked += checked;
        check.violations += bad;
        if check.witness.is_none() {
            check.witness = first.map(label);
        }
    }
    check
}

type Partial = (u64, u64, Option<(usize, usize, usize)>);

fn sweep_int(t: &[Vec<(u32, i64)>], n: usize, i: usize) -> Partial {
    let mut acc = vec![0i128; n];
    let mut touched: Vec<usize> = Vec::with_capacity(n);
    let (mut checked, mut bad, mut first) = (0u64, 0u64, None);
    let term = |acc: &mut Vec<i128>, touched: &mut Vec<usize>, a: usize, b: usize, c: usize| {
        for &(l, x) in &t[a * n + b] {
            for &(m, y) in &t[l as usize * n + c] {
                let m = m as usize;
                if acc[m] == 0 {
                    touched.push(m);
                }
                acc[m] += x as i128 * y as i128;
            }
        }
    };
    for j in i + 1..n {
        for k in j + 1..n {
            term(&mut acc, &mut touched, i, j, k);
            term(&mut acc, &mut touched, j, k, i);
            term(&mut acc, &mut touched, k, i, j);
            let mut ok = true;
            for &m in &touched {
                if acc[m] != 0 {
                    ok = false;
                    acc[m] = 0;
                }
            }
            touched.clear();
            checked += 1;
            if !ok {
                bad += 1;
                first.get_or_insert((i, j, k));
            }
        }
    }
    (checked, bad, first)
}

fn sweep_mod(t: &[Vec<(u32, u64)>], n: usize, p: u64, i: usize) -> Partial {
    let mut acc = vec![0u64; n];
    let mut touched: Vec<usize> = Vec::with_capacity(n);
    let mut mark = vec![false; n];
    let (mut checked, mut bad, mut first) = (0u64, 0u64, None);
    for j in i + 1..n {
        for k in j + 1..n {
            for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                for &(l, x) in &t[a * n + b] {
                    for &(m, y) in &t[l as usize * n + c] {
                        let m = m as usize;
                        if !mark[m] {
                            mark[m] = true;
                            touched.push(m);
                        }
                        acc[m] = ((acc[m] as u128 + x as u128 * y as u128) % p as u128) as u64;
                    }
                }
            }
            let mut ok = true;
            for &m in &touched {
                if acc[m] != 0 {
                    ok = false;
                }
                acc[m] = 0;
                mark[m] = false;
            }
            touched.clear();
            checked += 1;
            if !ok {
                bad += 1;
                first.get_or_insert((i, j, k));
            }
        }
    }
    (checked, bad, first)
}

/// Fallback on exact scalars when the constants do not scale into `i64`.
fn sweep_exact(bracket: &BilinearMap, n: usize, i: usize) -> Partial {
    let (mut checked, mut bad, mut first) = (0u64, 0u64, None);
    let one = bracket.field().one();
    for j in i + 1..n {
        for k in j + 1..n {
            let mut acc = SparseVec::new();
            for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                acc = acc.plus_scaled(&one, &bracket.apply_basis_right(bracket.get(a, b), c));
            }
            checked += 1;
            if !acc.is_zero() {
                bad += 1;
                first.get_or_insert((i, j, k));
            }
        }
    }
    (checked, bad, first)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl2(f: Field, flip: bool) -> BilinearMap {
        // E=0, H=1, F=2 with [H,E]=2E, [H,F]=-2F, [E,F]=H.
        let mut b = BilinearMap::zero(f, 3, 3, 3);
        let mut put = |i: usize, j: usize, k: usize, c: i64| {
            b.set(i, j, SparseVec::single(k, f.int(c))).unwrap();
            b.set(j, i, SparseVec::single(k, f.int(-c))).unwrap();
        };
        put(1, 0, 0, if flip { -2 } else { 2 });
        put(1, 2, 2, -2);
        put(0, 2, 1, 1);
        b
    }

    #[test]
    fn sl2_passes_with_one_triple() {
        let s = Space::new(["E", "H", "F"]).unwrap();
        let c = jacobi_check(&sl2(Field::Rational, false), &s);
        assert_eq!((c.checked, c.violations), (1, 0));
        let c = jacobi_check(&sl2(Field::Prime(7), false), &s);
        assert_eq!((c.checked, c.violations), (1, 0));
    }

    #[test]
    fn negated_constant_fails_at_ehf() {
        let s = Space::new(["E", "H", "F"]).unwrap();
        let c = jacobi_check(&sl2(Field::Rational, true), &s);
        assert_eq!(c.violations, 1);
        assert_eq!(c.witness.as_deref(), Some("(E,H,F)"));
    }
}
