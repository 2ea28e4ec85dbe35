//! Dense element vectors and sparse coefficient vectors.

use crate::scalar::{Field, Scalar};

/// Dense coordinates of an element in some basis.
pub type Vector = Vec<Scalar>;

pub fn zeros(field: Field, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit(field: Field, n: usize, i: usize) -> Vector {
    let mut v = zeros(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `y += a * x`
pub fn axpy(y: &mut [Scalar], a: &Scalar, x: &[Scalar]) {
    debug_assert_eq!(y.len(), x.len());
    if a.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += &(a * xi);
        }
    }
}

pub fn scale(a: &Scalar, x: &[Scalar]) -> Vector {
    x.iter().map(|xi| a * xi).collect()
}

pub fn add(x: &[Scalar], y: &[Scalar]) -> Vector {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn sub(x: &[Scalar], y: &[Scalar]) -> Vector {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

/// Linear combination `Σ c_i v_i` of equally sized vectors.
pub fn combine(field: Field, n: usize, terms: &[(Scalar, &[Scalar])]) -> Vector {
    let mut out = zeros(field, n);
    for (c, v) in terms {
        axpy(&mut out, c, v);
    }
    out
}

/// Sorted list of `(index, nonzero coefficient)` pairs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn from_dense(v: &[Scalar]) -> Self {
        SparseVec {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect(),
        }
    }

    /// Accepts unsorted entries with repeats; sums them and drops zeros.
    pub fn from_entries(mut entries: Vec<(usize, Scalar)>) -> Self {
        entries.sort_by_key(|(i, _)| *i);
        let mut out: Vec<(usize, Scalar)> = Vec::with_capacity(entries.len());
        for (i, c) in entries {
            match out.last_mut() {
                Some((j, acc)) if *j == i => *acc += &c,
                _ => out.push((i, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        SparseVec { entries: out }
    }

    pub fn single(i: usize, c: Scalar) -> Self {
        if c.is_zero() {
            SparseVec::new()
        } else {
            SparseVec { entries: vec![(i, c)] }
        }
    }

    pub fn to_dense(&self, field: Field, n: usize) -> Vector {
        let mut v = zeros(field, n);
        for (i, c) in &self.entries {
            v[*i] = c.clone();
        }
        v
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Scalar)> {
        self.entries.iter()
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&i, |(j, _)| *j)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    /// `dense += a * self`
    pub fn add_scaled_into(&self, a: &Scalar, dense: &mut [Scalar]) {
        if a.is_zero() {
            return;
        }
        for (i, c) in &self.entries {
            dense[*i] += &(a * c);
        }
    }

    pub fn scaled(&self, a: &Scalar) -> SparseVec {
        if a.is_zero() {
            return SparseVec::new();
        }
        SparseVec { entries: self.entries.iter().map(|(i, c)| (*i, a * c)).collect() }
    }

    /// `self + a * other`, merging sorted supports.
    pub fn plus_scaled(&self, a: &Scalar, other: &SparseVec) -> SparseVec {
        if a.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut p, mut q) = (0, 0);
        let (x, y) = (&self.entries, &other.entries);
        while p < x.len() || q < y.len() {
            let take_x = q >= y.len() || (p < x.len() && x[p].0 < y[q].0);
            let take_y = p >= x.len() || (q < y.len() && y[q].0 < x[p].0);
            if take_x {
                out.push(x[p].clone());
                p += 1;
            } else if take_y {
                out.push((y[q].0, a * &y[q].1));
                q += 1;
            } else {
                let s = &x[p].1 + &(a * &y[q].1);
                if !s.is_zero() {
                    out.push((x[p].0, s));
                }
                p += 1;
                q += 1;
            }
        }
        SparseVec { entries: out }
    }

    pub fn dot_dense(&self, dense: &[Scalar], field: Field) -> Scalar {
        let mut acc = field.zero();
        for (i, c) in &self.entries {
            if !dense[*i].is_zero() {
                acc += &(c * &dense[*i]);
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_entries_merges_and_drops_zeros() {
        let f = Field::Rational;
        let v = SparseVec::from_entries(vec![(3, f.int(1)), (1, f.int(2)), (3, f.int(-1))]);
        assert_eq!(v.entries(), &[(1, f.int(2))]);
    }

    #[test]
    fn plus_scaled_matches_dense() {
        let f = Field::Rational;
        let a = SparseVec::from_entries(vec![(0, f.int(1)), (2, f.int(3))]);
        let b = SparseVec::from_entries(vec![(2, f.int(1)), (4, f.int(5))]);
        let c = a.plus_scaled(&f.int(-3), &b);
        let mut d = a.to_dense(f, 5);
        b.add_scaled_into(&f.int(-3), &mut d);
        assert_eq!(c.to_dense(f, 5), d);
        assert!(c.get(2).is_none());
    }
}
