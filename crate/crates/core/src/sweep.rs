//! Exhaustive and sampled sweeps over basis-index tuples.
//!
//! Sampled sweeps draw every tuple from one SplitMix64 stream: for a tuple
//! with slot dimensions `(n₁, …, n_k)` the indices are `next_u64() % n₁`,
//! …, `next_u64() % n_k`, in slot order. Checks that run several sampled
//! sweeps share the stream in the order the sweeps are listed, so a port
//! using the same generator and seed reproduces every sample.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::report::Check;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SweepMode {
    Exhaustive,
    Sampled { samples: u64, seed: u64 },
}

impl SweepMode {
    pub fn is_exhaustive(&self) -> bool {
        matches!(self, SweepMode::Exhaustive)
    }
}

/// Deterministic source of sampled index tuples.
pub struct TupleSampler {
    rng: SplitMix64,
}

impl TupleSampler {
    pub fn new(seed: u64) -> Self {
        TupleSampler { rng: SplitMix64::seed_from_u64(seed) }
    }

    pub fn index(&mut self, n: usize) -> usize {
        (self.rng.next_u64() % n as u64) as usize
    }

    pub fn tuple(&mut self, dims: &[usize]) -> Vec<usize> {
        dims.iter().map(|&n| self.index(n)).collect()
    }
}

/// Runs `eval` over index tuples. `eval` returns `None` for tuples that are
/// skipped (for example by a symmetry restriction), otherwise whether the
/// identity held. Exhaustive sweeps visit tuples in lexicographic order, so
/// the reported witness is the smallest failing tuple.
pub fn sweep<E, L>(
    name: &str,
    dims: &[usize],
    mode: SweepMode,
    sampler: &mut Option<TupleSampler>,
    eval: E,
    label: L,
) -> Check
where
    E: Fn(&[usize]) -> Option<bool> + Sync,
    L: Fn(&[usize]) -> String,
{
    let mut check = Check::new(name);
    if dims.contains(&0) {
        return check;
    }
    match mode {
        SweepMode::Exhaustive => {
            let lead = dims[0];
            let rest = &dims[1..];
            let parts: Vec<(u64, u64, Option<Vec<usize>>)> = (0..lead)
                .into_par_iter()
                .map(|i| {
                    let mut checked = 0;
                    let mut bad = 0;
                    let mut first = None;
                    let mut t = vec![0usize; dims.len()];
                    t[0] = i;
                    loop {
                        if let Some(ok) = eval(&t) {
                            checked += 1;
                            if !ok {
                                bad += 1;
                                if first.is_none() {
                                    first = Some(t.clone());
                                }
                            }
                        }
                        if !advance(&mut t[1..], rest) {
                            break;
                        }
                    }
                    (checked, bad, first)
                })
                .collect();
            for (checked, bad, first) in parts {
                check.checked += checked;
                check.violations += bad;
                if check.witness.is_none() {
                    check.witness = first.map(|t| label(&t));
                }
            }
        }
        SweepMode::Sampled { samples, .. } => {
            let s = sampler.get_or_insert_with(|| TupleSampler::new(seed_of(mode)));
            let tuples: Vec<Vec<usize>> = (0..samples).map(|_| s.tuple(dims)).collect();
            let results: Vec<Option<bool>> = tuples.par_iter().map(|t| eval(t)).collect();
            for (t, r) in tuples.iter().zip(results) {
                if let Some(ok) = r {
                    check.record(ok, || label(t));
                }
            }
        }
    }
    check
}

fn seed_of(mode: SweepMode) -> u64 {
    match mode {
        SweepMode::Sampled { seed, .. } => seed,
        SweepMode::Exhaustive => 0,
    }
}

/// Odometer increment; returns `false` after the last tuple.
fn advance(t: &mut [usize], dims: &[usize]) -> bool {
    for k in (0..t.len()).rev() {
        t[k] += 1;
        if t[k] < dims[k] {
            return true;
        }
        t[k] = 0;
    }
    false
}

/// `C(n, k)` for small arguments.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_counts_and_witness() {
        let mut s = None;
        let c = sweep(
            "t",
            &[3, 3],
            SweepMode::Exhaustive,
            &mut s,
            |t| (t[0] <= t[1]).then_some(t[0] + t[1] != 3),
            |t| format!("{t:?}"),
        );
        assert_eq!(c.checked, 6);
        assert_eq!(c.violations, 1);
        assert_eq!(c.witness.as_deref(), Some("[1, 2]"));
    }

    #[test]
    fn sampling_is_reproducible() {
        let mut a = TupleSampler::new(7);
        let mut b = TupleSampler::new(7);
        let ta: Vec<_> = (0..10).map(|_| a.tuple(&[64, 64, 64])).collect();
        let tb: Vec<_> = (0..10).map(|_| b.tuple(&[64, 64, 64])).collect();
        assert_eq!(ta, tb);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(52, 3), 22100);
        assert_eq!(binomial(3, 3), 1);
    }
}
