//! J-ternary algebras `(J, T)`: the four products, the axiom sweeps, the
//! derivations `D_{a,b}` and `d_{x,y}`, and idempotent splittings of `T`.

use crate::error::{Error, Result};
use crate::jordan::{JordanAlgebra, PeirceDecomposition};
use crate::linalg::vector::{unit, zeros};
use crate::linalg::{eigenspace, BilinearMap, LinearMap, Space, SparseVec, Subspace, Vector};
use crate::report::{Check, VerificationReport};
use crate::scalar::{Field, Scalar};
use crate::sweep::{sweep, SweepMode, TupleSampler};

/// An even endomorphism of `J ⊕ T`, stored blockwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenOperator {
    pub on_j: LinearMap,
    pub on_t: LinearMap,
}

impl EvenOperator {
    pub fn zero(field: Field, nj: usize, nt: usize) -> Self {
        EvenOperator { on_j: LinearMap::zero(field, nj, nj), on_t: LinearMap::zero(field, nt, nt) }
    }

    pub fn nj(&self) -> usize {
        self.on_j.domain()
    }

    pub fn nt(&self) -> usize {
        self.on_t.domain()
    }

    pub fn is_zero(&self) -> bool {
        self.on_j.is_zero() && self.on_t.is_zero()
    }

    pub fn add(&self, other: &EvenOperator) -> EvenOperator {
        EvenOperator { on_j: self.on_j.add(&other.on_j), on_t: self.on_t.add(&other.on_t) }
    }

    pub fn plus_scaled(&self, a: &Scalar, other: &EvenOperator) -> EvenOperator {
        EvenOperator {
            on_j: self.on_j.plus_scaled(a, &other.on_j),
            on_t: self.on_t.plus_scaled(a, &other.on_t),
        }
    }

    pub fn scaled(&self, a: &Scalar) -> EvenOperator {
        EvenOperator { on_j: self.on_j.scaled(a), on_t: self.on_t.scaled(a) }
    }

    pub fn commutator(&self, other: &EvenOperator) -> EvenOperator {
        EvenOperator {
            on_j: self.on_j.commutator(&other.on_j).expect("square"),
            on_t: self.on_t.commutator(&other.on_t).expect("square"),
        }
    }

    /// Coordinates in `End(J) ⊕ End(T)`, each block flattened column-major.
    pub fn flatten(&self) -> SparseVec {
        let offset = self.nj() * self.nj();
        let mut entries: Vec<(usize, Scalar)> = self.on_j.flatten().iter().cloned().collect();
        entries.extend(self.on_t.flatten().iter().map(|(i, c)| (i + offset, c.clone())));
        SparseVec::from_entries(entries)
    }

    pub fn flat_len(nj: usize, nt: usize) -> usize {
        nj * nj + nt * nt
    }

    pub fn unflatten(field: Field, nj: usize, nt: usize, v: &SparseVec) -> EvenOperator {
        let offset = nj * nj;
        let (mut a, mut b) = (Vec::new(), Vec::new());
        for (i, c) in v.iter() {
            if *i < offset {
                a.push((*i, c.clone()));
            } else {
                b.push((*i - offset, c.clone()));
            }
        }
        EvenOperator {
            on_j: LinearMap::unflatten(field, nj, nj, &SparseVec::from_entries(a)),
            on_t: LinearMap::unflatten(field, nt, nt, &SparseVec::from_entries(b)),
        }
    }

    /// Applies to a sparse element of `J ⊕ T` (indices `< nj` lie in `J`).
    pub fn apply_sparse(&self, v: &SparseVec) -> SparseVec {
        let nj = self.nj();
        let mut entries = Vec::new();
        for (i, c) in v.iter() {
            if *i < nj {
                entries.extend(self.on_j.column(*i).iter().map(|(k, x)| (*k, c * x)));
            } else {
                entries.extend(self.on_t.column(*i - nj).iter().map(|(k, x)| (*k + nj, c * x)));
            }
        }
        SparseVec::from_entries(entries)
    }

    /// Block-diagonal matrix on `J ⊕ T`.
    pub fn to_linear_map(&self) -> LinearMap {
        let nj = self.nj();
        let n = nj + self.nt();
        let mut cols: Vec<SparseVec> = self.on_j.columns().to_vec();
        cols.extend(self.on_t.columns().iter().map(|c| {
            SparseVec::from_entries(c.iter().map(|(k, x)| (*k + nj, x.clone())).collect())
        }));
        LinearMap::from_columns(self.on_j.field(), n, cols).expect("indices in range")
    }
}

/// The pair `(J, T)` with `a·b`, `a•x`, `⟨x|y⟩` and `⟨x,y,z⟩`.
#[derive(Debug, Clone)]
pub struct JTernaryAlgebra {
    jordan: JordanAlgebra,
    t: Space,
    bullet: BilinearMap,
    skew: BilinearMap,
    triple: crate::linalg::TrilinearMap,
}

/// `T = T₁ ⊕ T₀` for a proper idempotent `e`.
#[derive(Debug, Clone)]
pub struct SplitT {
    pub e: Vector,
    pub one: Subspace,
    pub zero: Subspace,
}

fn lin(terms: Vec<(Scalar, SparseVec)>) -> SparseVec {
    SparseVec::from_entries(
        terms
            .into_iter()
            .flat_map(|(s, v)| v.iter().map(|(i, c)| (*i, &s * c)).collect::<Vec<_>>())
            .collect(),
    )
}

impl JTernaryAlgebra {
    pub fn new(
        jordan: JordanAlgebra,
        t: Space,
        bullet: BilinearMap,
        skew: BilinearMap,
        triple: crate::linalg::TrilinearMap,
    ) -> Result<Self> {
        let (nj, nt) = (jordan.dim(), t.dim());
        let expect = |got: (usize, usize, usize), want: (usize, usize, usize)| {
            if got != want {
                Err(Error::Precondition(format!("map shape {got:?}, expected {want:?}")))
            } else {
                Ok(())
            }
        };
        expect(bullet.dims(), (nj, nt, nt))?;
        expect(skew.dims(), (nt, nt, nj))?;
        let (d, o) = triple.dims();
        expect((d[0], d[1], d[2]), (nt, nt, nt))?;
        expect((o, o, o), (nt, nt, nt))?;
        for x in 0..nt {
            if !skew.get(x, x).is_zero() {
                return Err(Error::Precondition(format!("⟨x|x⟩ ≠ 0 at {}", t.label(x))));
            }
            for y in x + 1..nt {
                if *skew.get(x, y) != skew.get(y, x).scaled(&-jordan.field().one()) {
                    return Err(Error::Precondition(format!(
                        "skew form not alternating at ({},{})",
                        t.label(x),
                        t.label(y)
                    )));
                }
            }
        }
        Ok(JTernaryAlgebra { jordan, t, bullet, skew, triple })
    }

    pub fn field(&self) -> Field {
        self.jordan.field()
    }

    pub fn jordan(&self) -> &JordanAlgebra {
        &self.jordan
    }

    pub fn t_space(&self) -> &Space {
        &self.t
    }

    pub fn dim_j(&self) -> usize {
        self.jordan.dim()
    }

    pub fn dim_t(&self) -> usize {
        self.t.dim()
    }

    pub fn bullet_map(&self) -> &BilinearMap {
        &self.bullet
    }

    pub fn skew_map(&self) -> &BilinearMap {
        &self.skew
    }

    pub fn triple_map(&self) -> &crate::linalg::TrilinearMap {
        &self.triple
    }

    pub fn bullet(&self, a: &[Scalar], x: &[Scalar]) -> Vector {
        self.bullet.apply(a, x).expect("a ∈ J, x ∈ T")
    }

    pub fn skew(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.skew.apply(x, y).expect("x, y ∈ T")
    }

    pub fn triple(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
        self.triple.apply(x, y, z).expect("x, y, z ∈ T")
    }

    /// `x ↦ a•x`
    pub fn bullet_op(&self, a: &[Scalar]) -> LinearMap {
        self.bullet.left_operator(a).expect("a ∈ J")
    }

    fn ej(&self, i: usize) -> SparseVec {
        SparseVec::single(i, self.field().one())
    }

    fn jmul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        self.jordan.product().apply_sparse(a, b)
    }

    fn bul(&self, a: &SparseVec, x: &SparseVec) -> SparseVec {
        self.bullet.apply_sparse(a, x)
    }

    fn sk(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        self.skew.apply_sparse(x, y)
    }

    fn tri(&self, x: &SparseVec, y: &SparseVec, z: &SparseVec) -> SparseVec {
        self.triple.apply_sparse(x, y, z)
    }

    /// `D_{a,b}`: `c ↦ a·(b·c) − b·(a·c)` on `J` and
    /// `x ↦ ¼(a•(b•x) − b•(a•x))` on `T`.
    pub fn derived_big_d(&self, a: &[Scalar], b: &[Scalar]) -> EvenOperator {
        self.big_d_sparse(&SparseVec::from_dense(a), &SparseVec::from_dense(b))
    }

    fn big_d_sparse(&self, a: &SparseVec, b: &SparseVec) -> EvenOperator {
        let f = self.field();
        let one = f.one();
        let on_j = (0..self.dim_j())
            .map(|c| {
                let c = self.ej(c);
                lin(vec![
                    (one.clone(), self.jmul(a, &self.jmul(b, &c))),
                    (-one.clone(), self.jmul(b, &self.jmul(a, &c))),
                ])
            })
            .collect();
        let quarter = f.ratio(1, 4);
        let on_t = (0..self.dim_t())
            .map(|x| {
                let x = self.ej(x);
                lin(vec![
                    (quarter.clone(), self.bul(a, &self.bul(b, &x))),
                    (-quarter.clone(), self.bul(b, &self.bul(a, &x))),
                ])
            })
            .collect();
        EvenOperator {
            on_j: LinearMap::from_columns(f, self.dim_j(), on_j).expect("in range"),
            on_t: LinearMap::from_columns(f, self.dim_t(), on_t).expect("in range"),
        }
    }

    /// `d_{x,y}`: `a ↦ ⟨a•x|y⟩ − ⟨x|a•y⟩` on `J` and
    /// `z ↦ ⟨x|y⟩•z − 2⟨x,y,z⟩` on `T`.
    pub fn derived_d(&self, x: &[Scalar], y: &[Scalar]) -> EvenOperator {
        self.small_d_sparse(&SparseVec::from_dense(x), &SparseVec::from_dense(y))
    }

    fn small_d_sparse(&self, x: &SparseVec, y: &SparseVec) -> EvenOperator {
        let f = self.field();
        let one = f.one();
        let on_j = (0..self.dim_j())
            .map(|a| {
                let a = self.ej(a);
                lin(vec![
                    (one.clone(), self.sk(&self.bul(&a, x), y)),
                    (-one.clone(), self.sk(x, &self.bul(&a, y))),
                ])
            })
            .collect();
        let xy = self.sk(x, y);
        let on_t = (0..self.dim_t())
            .map(|z| {
                let z = self.ej(z);
                lin(vec![(one.clone(), self.bul(&xy, &z)), (f.int(-2), self.tri(x, y, &z))])
            })
            .collect();
        EvenOperator {
            on_j: LinearMap::from_columns(f, self.dim_j(), on_j).expect("in range"),
            on_t: LinearMap::from_columns(f, self.dim_t(), on_t).expect("in range"),
        }
    }

    /// `(a+x)⋄(b+y) = (a·b + ⟨x|y⟩) + (a•y + b•x)` on sparse elements of
    /// `J ⊕ T`.
    pub fn diamond(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        let nj = self.dim_j();
        let split = |w: &SparseVec| {
            let (mut a, mut x) = (Vec::new(), Vec::new());
            for (i, c) in w.iter() {
                if *i < nj {
                    a.push((*i, c.clone()));
                } else {
                    x.push((*i - nj, c.clone()));
                }
            }
            (SparseVec::from_entries(a), SparseVec::from_entries(x))
        };
        let (a, x) = split(u);
        let (b, y) = split(v);
        let jpart = lin(vec![(self.field().one(), self.jmul(&a, &b)), (self.field().one(), self.sk(&x, &y))]);
        let tpart = lin(vec![(self.field().one(), self.bul(&a, &y)), (self.field().one(), self.bul(&b, &x))]);
        let mut entries: Vec<(usize, Scalar)> = jpart.iter().cloned().collect();
        entries.extend(tpart.iter().map(|(i, c)| (*i + nj, c.clone())));
        SparseVec::from_entries(entries)
    }

    fn jl(&self, i: usize) -> &str {
        self.jordan.label(i)
    }

    fn tl(&self, i: usize) -> &str {
        self.t.label(i)
    }

    fn tuple_label(&self, kinds: &str, t: &[usize]) -> String {
        let parts: Vec<&str> = kinds
            .chars()
            .zip(t)
            .map(|(k, &i)| if k == 'j' { self.jl(i) } else { self.tl(i) })
            .collect();
        format!("({})", parts.join(","))
    }

    /// `(a·b)•x = ½(a•(b•x) + b•(a•x))` and `1•x = x`.
    pub fn check_special_module(&self) -> VerificationReport {
        let (nj, nt) = (self.dim_j(), self.dim_t());
        let mut report = VerificationReport::new("special_module").with_dim("J", nj).with_dim("T", nt);
        report.push(self.special_action_check(SweepMode::Exhaustive, &mut None));
        let one = SparseVec::from_dense(self.jordan.unit());
        let mut unit = Check::new("unit_acts_as_identity");
        for x in 0..nt {
            unit.record(self.bul(&one, &self.ej(x)) == self.ej(x), || format!("(1,{})", self.tl(x)));
        }
        report.push(unit);
        report
    }

    fn special_action_check(&self, mode: SweepMode, sampler: &mut Option<TupleSampler>) -> Check {
        let (nj, nt) = (self.dim_j(), self.dim_t());
        let half = self.field().ratio(1, 2);
        sweep(
            "jordan_special_action",
            &[nj, nj, nt],
            mode,
            sampler,
            |t| {
                if mode.is_exhaustive() && t[0] > t[1] {
                    return None;
                }
                let (a, b, x) = (self.ej(t[0]), self.ej(t[1]), self.ej(t[2]));
                let lhs = self.bul(&self.jmul(&a, &b), &x);
                let rhs = lin(vec![
                    (half.clone(), self.bul(&a, &self.bul(&b, &x))),
                    (half.clone(), self.bul(&b, &self.bul(&a, &x))),
                ]);
                Some(lhs == rhs)
            },
            |t| self.tuple_label("jjt", t),
        )
    }

    pub fn check_jt_axioms(&self) -> VerificationReport {
        self.check_jt_axioms_with(SweepMode::Exhaustive)
    }

    /// The six axioms. The sixth is checked in the form
    /// `⟨x,y,⟨z,w,v⟩⟩ = ⟨⟨x,y,z⟩,w,v⟩ + ⟨z,⟨y,x,w⟩,v⟩ + ⟨z,w,⟨x,y,v⟩⟩`;
    /// the variant whose last term reads `⟨z,w,⟨x,y,w⟩⟩` is recorded as an
    /// informational check.
    pub fn check_jt_axioms_with(&self, mode: SweepMode) -> VerificationReport {
        let (nj, nt) = (self.dim_j(), self.dim_t());
        let f = self.field();
        let one = f.one();
        let neg = -f.one();
        let half = f.ratio(1, 2);
        let mut report = VerificationReport::new("jt_axioms").with_dim("J", nj).with_dim("T", nt);
        if let SweepMode::Sampled { samples, seed } = mode {
            report.note(format!("sampled sweep: {samples} tuples per axiom, SplitMix64 seed {seed}"));
        }
        let mut sampler = None;
        let s = &mut sampler;

        report.push(sweep(
            "JT1",
            &[nj, nt, nt],
            mode,
            s,
            |t| {
                let (a, x, y) = (self.ej(t[0]), self.ej(t[1]), self.ej(t[2]));
                let lhs = self.jmul(&a, &self.sk(&x, &y));
                let rhs = lin(vec![
                    (half.clone(), self.sk(&self.bul(&a, &x), &y)),
                    (half.clone(), self.sk(&x, &self.bul(&a, &y))),
                ]);
                Some(lhs == rhs)
            },
            |t| self.tuple_label("jtt", t),
        ));

        report.push(sweep(
            "JT2",
            &[nj, nt, nt, nt],
            mode,
            s,
            |t| {
                let (a, x, y, z) = (self.ej(t[0]), self.ej(t[1]), self.ej(t[2]), self.ej(t[3]));
                let lhs = self.bul(&a, &self.tri(&x, &y, &z));
                let rhs = lin(vec![
                    (one.clone(), self.tri(&self.bul(&a, &x), &y, &z)),
                    (neg.clone(), self.tri(&x, &self.bul(&a, &y), &z)),
                    (one.clone(), self.tri(&x, &y, &self.bul(&a, &z))),
                ]);
                Some(lhs == rhs)
            },
            |t| self.tuple_label("jttt", t),
        ));

        report.push(sweep(
            "JT3",
            &[nt, nt, nt],
            mode,
            s,
            |t| {
                let (x, y, z) = (self.ej(t[0]), self.ej(t[1]), self.ej(t[2]));
                let lhs = self.tri(&x, &y, &z);
                let rhs = lin(vec![
                    (one.clone(), self.tri(&z, &y, &x)),
                    (neg.clone(), self.bul(&self.sk(&x, &z), &y)),
                ]);
                Some(lhs == rhs)
            },
            |t| self.tuple_label("ttt", t),
        ));

        report.push(sweep(
            "JT4",
            &[nt, nt, nt],
            mode,
            s,
            |t| {
                let (x, y, z) = (self.ej(t[0]), self.ej(t[1]), self.ej(t[2]));
                let lhs = self.tri(&x, &y, &z);
                let rhs = lin(vec![
                    (one.clone(), self.tri(&y, &x, &z)),
                    (one.clone(), self.bul(&self.sk(&x, &y), &z)),
                ]);
                Some(lhs == rhs)
            },
            |t| self.tuple_label("ttt", t),
        ));

        report.push(sweep(
            "JT5",
            &[nt, nt, nt, nt],
            mode,
            s,
            |t| {
                let (x, y, z, w) = (self.ej(t[0]), self.ej(t[1]), self.ej(t[2]), self.ej(t[3]));
                let lhs = lin(vec![
                    (one.clone(), self.sk(&self.tri(&x, &y, &z), &w)),
                    (one.clone(), self.sk(&z, &self.tri(&x, &y, &w))),
                ]);
                let rhs = self.sk(&x, &self.bul(&self.sk(&z, &w), &y));
                Some(lhs == rhs)
            },
            |t| self.tuple_label("tttt", t),
        ));

        let jt6 = |printed: bool| {
            move |t: &[usize]| {
                let (x, y, z, w, v) =
                    (self.ej(t[0]), self.ej(t[1]), self.ej(t[2]), self.ej(t[3]), self.ej(t[4]));
                let lhs = self.tri(&x, &y, &self.tri(&z, &w, &v));
                let last = if printed { &w } else { &v };
                let rhs = lin(vec![
                    (self.field().one(), self.tri(&self.tri(&x, &y, &z), &w, &v)),
                    (self.field().one(), self.tri(&z, &self.tri(&y, &x, &w), &v)),
                    (self.field().one(), self.tri(&z, &w, &self.tri(&x, &y, last))),
                ]);
                Some(lhs == rhs)
            }
        };
        report.push(sweep("JT6", &[nt, nt, nt, nt, nt], mode, s, jt6(false), |t| {
            self.tuple_label("ttttt", t)
        }));
        report.push(
            sweep("JT6_last_term_as_printed", &[nt, nt, nt, nt, nt], mode, s, jt6(true), |t| {
                self.tuple_label("ttttt", t)
            })
            .informational(),
        );
        report
    }

    pub fn check_sl2_identities(&self) -> VerificationReport {
        self.check_sl2_identities_with(SweepMode::Exhaustive)
    }

    /// The identities relating `·`, `•`, `⟨|⟩`, `D` and `d` that hold in
    /// any Lie algebra with an inner short SL₂-structure, plus the even
    /// derivation property of `D_{a,b}` and `d_{x,y}` for `⋄`.
    pub fn check_sl2_identities_with(&self, mode: SweepMode) -> VerificationReport {
        let (nj, nt) = (self.dim_j(), self.dim_t());
        let f = self.field();
        let one = f.one();
        let neg = -f.one();
        let mut report = VerificationReport::new("short_sl2_identities").with_dim("J", nj).with_dim("T", nt);
        if let SweepMode::Sampled { samples, seed } = mode {
            report.note(format!("sampled sweep: {samples} tuples per identity, SplitMix64 seed {seed}"));
        }
        report.absorb("jordan", self.jordan.check_jordan());
        let mut sampler = None;
        let s = &mut sampler;
        report.push(self.special_action_check(mode, s));

        report.push(sweep(
            "D_on_J_formula",
            &[nj, nj, nj],
            mode,
            s,
            |t| {
                let (a, b, c) = (self.ej(t[0]), self.ej(t[1]), self.ej(t[2]));
                let d = self.big_d_sparse(&a, &b);
                let direct = lin(vec![
                    (one.clone(), self.jmul(&a, &self.jmul(&b, &c))),
                    (neg.clone(), self.jmul(&b, &self.jmul(&a, &c))),
                ]);
                Some(d.apply_sparse(&c) == direct)
            },
            |t| self.tuple_label("jjj", t),
        ));

        report.push(sweep(
            "D_cyclic_sum",
            &[nj, nj, nj],
            mode,
            s,
            |t| {
                if mode.is_exhaustive() && !(t[0] <= t[1] && t[1] <= t[2]) {
                    return None;
                }
                let (a, b, c) = (self.ej(t[0]), self.ej(t[1]), self.ej(t[2]));
                let sum = self
                    .big_d_sparse(&self.jmul(&a, &b), &c)
                    .add(&self.big_d_sparse(&self.jmul(&b, &c), &a))
                    .add(&self.big_d_sparse(&self.jmul(&c, &a), &b));
                Some(sum.is_zero())
            },
            |t| self.tuple_label("jjj", t),
        ));

        report.push(sweep(
            "D_on_T_formula",
            &[nj, nj, nt],
            mode,
            s,
            |t| {
                let (a, b, x) = (self.ej(t[0]), self.ej(t[1]), self.ej(t[2]));
                let d = self.big_d_sparse(&a, &b);
                let lhs = d.on_t.column(t[2]).scaled(&f.int(4));
                let rhs = lin(vec![
                    (one.clone(), self.bul(&a, &self.bul(&b, &x))),
                    (neg.clone(), self.bul(&b, &self.bul(&a, &x))),
                ]);
                Some(lhs == rhs)
            },
            |t| self.tuple_label("jjt", t),
        ));

        report.push(sweep(
            "D_of_skew_form",
            &[nj, nt, nt],
            mode,
            s,
            |t| {
                if mode.is_exhaustive() && t[1] >= t[2] {
                    return None;
                }
                let (a, x, y) = (self.ej(t[0]), self.ej(t[1]), self.ej(t[2]));
                let lhs = self.big_d_sparse(&a, &self.sk(&x, &y)).scaled(&f.int(4));
                let rhs = self
                    .small_d_sparse(&x, &self.bul(&a, &y))
                    .plus_scaled(&neg, &self.small_d_sparse(&self.bul(&a, &x), &y));
                Some(lhs == rhs)
            },
            |t| self.tuple_label("jtt", t),
        ));

        report.push(sweep(
            "J_product_with_skew_form",
            &[nj, nt, nt],
            mode,
            s,
            |t| {
                let (a, x, y) = (self.ej(t[0]), self.ej(t[1]), self.ej(t[2]));
                let lhs = self.jmul(&a, &self.sk(&x, &y)).scaled(&f.int(2));
                let rhs = lin(vec![
                    (one.clone(), self.sk(&self.bul(&a, &x), &y)),
                    (one.clone(), self.sk(&x, &self.bul(&a, &y))),
                ]);
                Some(lhs == rhs)
            },
            |t| self.tuple_label("jtt", t),
        ));

        report.push(sweep(
            "d_on_J_formula",
            &[nt, nt, nj],
            mode,
            s,
            |t| {
                let (x, y, a) = (self.ej(t[0]), self.ej(t[1]), self.ej(t[2]));
                let d = self.small_d_sparse(&x, &y);
                let direct = lin(vec![
                    (one.clone(), self.sk(&self.bul(&a, &x), &y)),
                    (neg.clone(), self.sk(&x, &self.bul(&a, &y))),
                ]);
                Some(d.on_j.column(t[2]) == &direct)
            },
            |t| self.tuple_label("ttj", t),
        ));

        let antisym = |printed: bool| {
            move |t: &[usize]| {
                let (x, y, z) = (self.ej(t[0]), self.ej(t[1]), self.ej(t[2]));
                let lhs = lin(vec![
                    (self.field().one(), self.small_d_sparse(&x, &y).on_t.column(t[2]).clone()),
                    (-self.field().one(), self.small_d_sparse(&z, &y).on_t.column(t[0]).clone()),
                ]);
                let last = if printed {
                    self.bul(&self.sk(&x, &y), &z)
                } else {
                    self.bul(&self.sk(&x, &z), &y)
                };
                let rhs = lin(vec![
                    (self.field().one(), self.bul(&self.sk(&x, &y), &z)),
                    (-self.field().one(), self.bul(&self.sk(&z, &y), &x)),
                    (self.field().int(2), last),
                ]);
                Some(lhs == rhs)
            }
        };
        report.push(
            sweep("d_antisymmetrization_as_printed", &[nt, nt, nt], mode, s, antisym(true), |t| {
                self.tuple_label("ttt", t)
            })
            .informational(),
        );
        report.push(sweep(
            "d_antisymmetrization_corrected",
            &[nt, nt, nt],
            mode,
            s,
            antisym(false),
            |t| self.tuple_label("ttt", t),
        ));

        // Generators: D_{a,b} for a < b, then d_{x,y} for x ≤ y.
        let mut gens: Vec<(String, EvenOperator)> = Vec::new();
        for a in 0..nj {
            for b in a + 1..nj {
                gens.push((format!("D({},{})", self.jl(a), self.jl(b)), self.big_d_sparse(&self.ej(a), &self.ej(b))));
            }
        }
        for x in 0..nt {
            for y in x..nt {
                gens.push((format!("d({},{})", self.tl(x), self.tl(y)), self.small_d_sparse(&self.ej(x), &self.ej(y))));
            }
        }
        let n = nj + nt;
        let label_of = |i: usize| if i < nj { self.jl(i).to_string() } else { self.tl(i - nj).to_string() };
        report.push(sweep(
            "even_derivation_property",
            &[gens.len().max(1), n, n],
            mode,
            s,
            |t| {
                let (_, d) = gens.get(t[0])?;
                let u = self.ej(t[1]);
                let v = self.ej(t[2]);
                let lhs = d.apply_sparse(&self.diamond(&u, &v));
                let rhs = lin(vec![
                    (self.field().one(), self.diamond(&d.apply_sparse(&u), &v)),
                    (self.field().one(), self.diamond(&u, &d.apply_sparse(&v))),
                ]);
                Some(lhs == rhs)
            },
            |t| format!("{} on ({},{})", gens[t[0]].0, label_of(t[1]), label_of(t[2])),
        ));

        let half = f.ratio(1, 2);
        report.push(sweep(
            "triple_from_d",
            &[nt, nt, nt],
            mode,
            s,
            |t| {
                let (x, y, z) = (self.ej(t[0]), self.ej(t[1]), self.ej(t[2]));
                let d = self.small_d_sparse(&x, &y);
                let rec = lin(vec![
                    (-half.clone(), d.on_t.column(t[2]).clone()),
                    (half.clone(), self.bul(&self.sk(&x, &y), &z)),
                ]);
                Some(rec == self.tri(&x, &y, &z))
            },
            |t| self.tuple_label("ttt", t),
        ));

        report.push(sweep(
            "triple_alternating_corollary",
            &[nt, nt, nt],
            mode,
            s,
            |t| {
                let (x, y, z) = (self.ej(t[0]), self.ej(t[1]), self.ej(t[2]));
                let lhs = lin(vec![
                    (one.clone(), self.tri(&x, &y, &z)),
                    (neg.clone(), self.tri(&y, &x, &z)),
                    (neg.clone(), self.tri(&z, &y, &x)),
                    (one.clone(), self.tri(&z, &x, &y)),
                ]);
                let rhs = lin(vec![
                    (one.clone(), self.bul(&self.sk(&z, &x), &y)),
                    (neg.clone(), self.bul(&self.sk(&z, &y), &x)),
                ]);
                Some(lhs == rhs)
            },
            |t| self.tuple_label("ttt", t),
        ));

        let printed = report.check("d_antisymmetrization_as_printed").map(|c| c.passed()).unwrap_or(false);
        let corrected = report.check("d_antisymmetrization_corrected").map(|c| c.passed()).unwrap_or(false);
        report.note(format!(
            "d antisymmetrization: form with last term 2⟨x|y⟩•z {}; form with last term 2⟨x|z⟩•y {}",
            if printed { "holds" } else { "fails" },
            if corrected { "holds" } else { "fails" }
        ));
        report
    }

    /// `T₁ = {x : e•x = x}`, `T₀ = {x : e•x = 0}` for a proper idempotent.
    pub fn split_t(&self, e: &[Scalar]) -> Result<SplitT> {
        let status = self.jordan.is_idempotent(e);
        if !status.idempotent {
            return Err(Error::NotIdempotent);
        }
        if !status.proper {
            return Err(Error::NotProper);
        }
        let f = self.field();
        let op = self.bullet_op(e);
        let one = eigenspace(&op, &f.one());
        let zero = eigenspace(&op, &f.zero());
        let found = one.dim() + zero.dim();
        if found != self.dim_t() {
            return Err(Error::NotExhaustive { found, dim: self.dim_t() });
        }
        Ok(SplitT { e: e.to_vec(), one, zero })
    }

    /// Consequences of the Peirce splitting for `⟨|⟩`, `D` and `d`:
    /// `⟨T_i|T_i⟩ ⊆ J_i`, `⟨T₁|T₀⟩ ⊆ J_½`, `d_{x,y} = 4D_{e,⟨x|y⟩}` for
    /// `x ∈ T₀, y ∈ T₁`, and `D_{J₁,J₀} = 0 = D_{e,J₁}` on `J ⊕ T`.
    pub fn check_peirce_compatibility(&self, p: &PeirceDecomposition, split: &SplitT) -> VerificationReport {
        let mut report = VerificationReport::new("peirce_compatibility");
        report.absorb("jordan", self.jordan.check_peirce_rules(p));
        report.dim("T1", split.one.dim());
        report.dim("T0", split.zero.dim());
        let t1: Vec<SparseVec> = split.one.basis();
        let t0: Vec<SparseVec> = split.zero.basis();
        let j1: Vec<SparseVec> = p.one.basis();
        let j0: Vec<SparseVec> = p.zero.basis();
        let e = SparseVec::from_dense(&p.e);

        let mut contain = |name: &str, xs: &[SparseVec], ys: &[SparseVec], target: &Subspace, same: bool| {
            let mut c = Check::new(name);
            for (i, x) in xs.iter().enumerate() {
                for (j, y) in ys.iter().enumerate() {
                    if same && j < i {
                        continue;
                    }
                    c.record(target.contains(&self.sk(x, y)), || format!("({i},{j})"));
                }
            }
            report.push(c);
        };
        contain("skew_T1_T1_in_J1", &t1, &t1, &p.one, true);
        contain("skew_T0_T0_in_J0", &t0, &t0, &p.zero, true);
        contain("skew_T1_T0_in_J_half", &t1, &t0, &p.half, false);

        let mut dd = Check::new("d_T0_T1_equals_4D_e_skew");
        for (i, x) in t0.iter().enumerate() {
            for (j, y) in t1.iter().enumerate() {
                let lhs = self.small_d_sparse(x, y);
                let rhs = self.big_d_sparse(&e, &self.sk(x, y)).scaled(&self.field().int(4));
                dd.record(lhs == rhs, || format!("(T0[{i}],T1[{j}])"));
            }
        }
        report.push(dd);

        let mut d10 = Check::new("D_J1_J0_zero_on_J_plus_T");
        for (i, a) in j1.iter().enumerate() {
            for (j, b) in j0.iter().enumerate() {
                d10.record(self.big_d_sparse(a, b).is_zero(), || format!("(J1[{i}],J0[{j}])"));
            }
        }
        report.push(d10);
        let mut de = Check::new("D_e_J1_zero_on_J_plus_T");
        for (i, a) in j1.iter().enumerate() {
            de.record(self.big_d_sparse(&e, a).is_zero(), || format!("J1[{i}]"));
        }
        report.push(de);
        report
    }

    /// Exact comparison of all four products with another J-ternary
    /// algebra on the same bases.
    pub fn compare(&self, other: &JTernaryAlgebra) -> VerificationReport {
        let mut report = VerificationReport::new("product_comparison");
        if self.dim_j() != other.dim_j() || self.dim_t() != other.dim_t() {
            report.assert("dimensions", false, || {
                format!("({}, {}) vs ({}, {})", self.dim_j(), self.dim_t(), other.dim_j(), other.dim_t())
            });
            return report;
        }
        let (nj, nt) = (self.dim_j(), self.dim_t());
        let mut c = Check::new("jordan_product");
        for a in 0..nj {
            for b in 0..nj {
                c.record(self.jordan.product().get(a, b) == other.jordan.product().get(a, b), || {
                    self.tuple_label("jj", &[a, b])
                });
            }
        }
        report.push(c);
        let mut c = Check::new("unit");
        c.record(self.jordan.unit() == other.jordan.unit(), || "unit".into());
        report.push(c);
        let mut c = Check::new("bullet");
        for a in 0..nj {
            for x in 0..nt {
                c.record(self.bullet.get(a, x) == other.bullet.get(a, x), || self.tuple_label("jt", &[a, x]));
            }
        }
        report.push(c);
        let mut c = Check::new("skew_form");
        for x in 0..nt {
            for y in 0..nt {
                c.record(self.skew.get(x, y) == other.skew.get(x, y), || self.tuple_label("tt", &[x, y]));
            }
        }
        report.push(c);
        let mut c = Check::new("triple");
        for x in 0..nt {
            for y in 0..nt {
                for z in 0..nt {
                    c.record(self.triple.get(x, y, z) == other.triple.get(x, y, z), || {
                        self.tuple_label("ttt", &[x, y, z])
                    });
                }
            }
        }
        report.push(c);
        report
    }

    /// Element of `J` from coordinates, for callers building test inputs.
    pub fn j_element(&self, i: usize) -> Vector {
        unit(self.field(), self.dim_j(), i)
    }

    pub fn t_element(&self, i: usize) -> Vector {
        unit(self.field(), self.dim_t(), i)
    }

    pub fn zero_t(&self) -> Vector {
        zeros(self.field(), self.dim_t())
    }
}
