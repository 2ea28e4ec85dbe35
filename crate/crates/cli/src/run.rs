//! Resolves spec objects and runs tasks, one report per task.

use std::collections::BTreeMap;
use std::rc::Rc;

use isotype_core::algebra::StructureAlgebra;
use isotype_core::catalog::{
    self, check_prototypical_d, check_skew_form_symmetric, classical_example, exceptional_series, kantor,
    outer_derivations, tensor_structurable, verify_quadratic_factor, ClassicalExample, ClassicalFamily,
    CompositionAlgebra, ExceptionalModel, InvolutiveAlgebra, KantorAlgebra, StructurableAlgebra,
};
use isotype_core::jordan::JordanAlgebra;
use isotype_core::jternary::JTernaryAlgebra;
use isotype_core::lieforge::{
    assemble_l, assemble_l_unchecked, jternary_from_5grading, short_sl2_decompose, short_sl2sl2_decompose,
    AssembledL, IsotypicDecomposition, LieAlgebra, Sl2Triple,
};
use isotype_core::linalg::{BilinearMap, LinearMap, Space, SparseVec, TrilinearMap, Vector};
use isotype_core::report::VerificationReport;
use isotype_core::sweep::SweepMode;
use isotype_core::{parse_scalar, Error, Field, Result};

use crate::spec::{AlgSpec, Coefficient, Command, ElementSpec, MapSpec, ObjectSpec, SampleSpec, TaskSpec};

/// Where a J-ternary object came from; catalog sources carry extra data
/// used by some targets.
pub enum Source {
    Explicit,
    Classical(Box<ClassicalExample>),
    Exceptional(Box<ExceptionalModel>),
}

pub enum Object {
    Lie(LieAlgebra),
    Jordan(JordanAlgebra),
    JTernary { jt: JTernaryAlgebra, source: Source },
    Structurable(StructurableAlgebra),
    Composition(CompositionAlgebra),
    Assembled { asm: Box<AssembledL>, source: Rc<Object> },
    Kantor { k: Box<KantorAlgebra>, alg: StructurableAlgebra, s: Option<Vector> },
}

impl Object {
    fn kind(&self) -> &'static str {
        match self {
            Object::Lie(_) => "lie",
            Object::Jordan(_) => "jordan",
            Object::JTernary { .. } => "jternary",
            Object::Structurable(_) => "structurable",
            Object::Composition(_) => "composition",
            Object::Assembled { .. } => "assembled",
            Object::Kantor { .. } => "kantor",
        }
    }

    fn lie(&self) -> Option<&LieAlgebra> {
        match self {
            Object::Lie(l) => Some(l),
            Object::Assembled { asm, .. } => Some(&asm.lie),
            Object::Kantor { k, .. } => Some(&k.lie),
            _ => None,
        }
    }

    fn jt(&self) -> Option<&JTernaryAlgebra> {
        match self {
            Object::JTernary { jt, .. } => Some(jt),
            Object::Assembled { asm, .. } => Some(asm.jt()),
            _ => None,
        }
    }

    fn source(&self) -> Option<&Source> {
        match self {
            Object::JTernary { source, .. } => Some(source),
            Object::Assembled { source, .. } => source.source(),
            _ => None,
        }
    }

    fn structurable(&self) -> Option<(&StructurableAlgebra, Option<&Vector>)> {
        match self {
            Object::Structurable(a) => Some((a, None)),
            Object::JTernary { source: Source::Exceptional(m), .. } => Some((&m.structurable, Some(&m.s))),
            Object::Kantor { alg, s, .. } => Some((alg, s.as_ref())),
            _ => None,
        }
    }
}

pub struct Session<'a> {
    spec: &'a AlgSpec,
    field: Field,
    cache: BTreeMap<String, Rc<Object>>,
}

impl<'a> Session<'a> {
    pub fn new(spec: &'a AlgSpec) -> Result<Self> {
        Ok(Session { spec, field: spec.field.parse()?, cache: BTreeMap::new() })
    }

    fn scalars(&self, cs: &[Coefficient]) -> Result<Vector> {
        cs.iter().map(|c| parse_scalar(&c.0, self.field)).collect()
    }

    fn space(&self, name: &str) -> Result<Space> {
        Space::new(self.spec.spaces[name].iter().cloned())
    }

    fn map_spec(&self, name: &str) -> &MapSpec {
        &self.spec.maps[name]
    }

    fn dim(&self, space: &str) -> usize {
        self.spec.spaces[space].len()
    }

    fn linear(&self, name: &str) -> Result<LinearMap> {
        let m = self.map_spec(name);
        let (n, out) = (self.dim(&m.domain[0]), self.dim(&m.codomain));
        let mut cols: Vec<Vec<(usize, isotype_core::Scalar)>> = vec![Vec::new(); n];
        for c in &m.constants {
            cols[c.i].push((c.k, parse_scalar(&c.c.0, self.field)?));
        }
        LinearMap::from_columns(self.field, out, cols.into_iter().map(SparseVec::from_entries).collect())
    }

    fn bilinear(&self, name: &str) -> Result<BilinearMap> {
        let m = self.map_spec(name);
        let mut b =
            BilinearMap::zero(self.field, self.dim(&m.domain[0]), self.dim(&m.domain[1]), self.dim(&m.codomain));
        for c in &m.constants {
            b.add_entry(c.i, c.j.expect("validated"), c.k, parse_scalar(&c.c.0, self.field)?)?;
        }
        Ok(b)
    }

    fn trilinear(&self, name: &str) -> Result<TrilinearMap> {
        let m = self.map_spec(name);
        let d = |i: usize| self.dim(&m.domain[i]);
        let mut t = TrilinearMap::zero(self.field, d(0), d(1), d(2), self.dim(&m.codomain));
        for c in &m.constants {
            t.add_entry(c.i, c.j.expect("validated"), c.k, c.l.expect("validated"), parse_scalar(&c.c.0, self.field)?)?;
        }
        Ok(t)
    }

    pub fn object(&mut self, name: &str) -> Result<Rc<Object>> {
        if let Some(o) = self.cache.get(name) {
            return Ok(o.clone());
        }
        let spec = self.spec.objects.get(name).ok_or_else(|| Error::Precondition(format!("unknown object `{name}`")))?;
        let obj = Rc::new(self.build(spec)?);
        self.cache.insert(name.to_string(), obj.clone());
        Ok(obj)
    }

    fn build(&mut self, spec: &ObjectSpec) -> Result<Object> {
        let f = self.field;
        Ok(match spec {
            ObjectSpec::Lie { space, bracket } => Object::Lie(LieAlgebra::new(self.space(space)?, self.bilinear(bracket)?)?),
            ObjectSpec::Jordan { space, product, unit } => {
                Object::Jordan(JordanAlgebra::new(self.space(space)?, self.bilinear(product)?, self.scalars(unit)?)?)
            }
            ObjectSpec::Jternary { jordan, t, bullet, skew, triple } => {
                let j = match &*self.object(jordan)? {
                    Object::Jordan(j) => j.clone(),
                    o => return Err(Error::Precondition(format!("`{jordan}` is a {} object, not jordan", o.kind()))),
                };
                let jt = JTernaryAlgebra::new(
                    j,
                    self.space(t)?,
                    self.bilinear(bullet)?,
                    self.bilinear(skew)?,
                    self.trilinear(triple)?,
                )?;
                Object::JTernary { jt, source: Source::Explicit }
            }
            ObjectSpec::Structurable { space, product, involution } => {
                let alg = StructureAlgebra::new(self.space(space)?, self.bilinear(product)?)?;
                Object::Structurable(StructurableAlgebra::new(InvolutiveAlgebra::new(alg, self.linear(involution)?)?)?)
            }
            ObjectSpec::Catalog { family, params } => catalog_object(f, family, params)?,
            ObjectSpec::Assemble { from } => {
                let src = self.object(from)?;
                let jt = src
                    .jt()
                    .ok_or_else(|| Error::Precondition(format!("`{from}` has no J-ternary algebra to assemble")))?;
                // Large catalog inputs are certified by their own tasks.
                let asm = if jt.dim_t() > 32 { assemble_l_unchecked(jt)? } else { assemble_l(jt)? };
                Object::Assembled { asm: Box::new(asm), source: src }
            }
            ObjectSpec::Kantor { from, s } => {
                let src = self.object(from)?;
                let (alg, default_s) = src
                    .structurable()
                    .ok_or_else(|| Error::Precondition(format!("`{from}` is not a structurable algebra")))?;
                let s = match s {
                    Some(cs) => Some(self.scalars(cs)?),
                    None => default_s.cloned(),
                };
                let k = kantor(alg)?;
                Object::Kantor { k: Box::new(k), alg: alg.clone(), s }
            }
        })
    }

    /// Coordinates in `J` of a named element.
    pub fn element(&mut self, name: &str) -> Result<Vector> {
        let e: &ElementSpec = self
            .spec
            .elements
            .get(name)
            .ok_or_else(|| Error::Precondition(format!("unknown element `{name}`")))?;
        if let Some(cs) = &e.coords {
            return self.scalars(cs);
        }
        let obj = self.object(&e.of)?;
        catalog_idempotent(&obj)
    }
}

fn catalog_idempotent(obj: &Object) -> Result<Vector> {
    match obj.source() {
        Some(Source::Classical(ex)) => ex.idempotent(),
        Some(Source::Exceptional(m)) => Ok(m.idempotent.clone()),
        _ => Err(Error::NoProperIdempotent(format!("a {} object has no catalog idempotent", obj.kind()))),
    }
}

fn param(params: &BTreeMap<String, i64>, key: &str) -> Result<usize> {
    let v = params.get(key).ok_or_else(|| Error::Parameters(format!("missing parameter `{key}`")))?;
    usize::try_from(*v).map_err(|_| Error::Parameters(format!("parameter `{key}` must be non-negative")))
}

pub fn catalog_object(f: Field, family: &str, params: &BTreeMap<String, i64>) -> Result<Object> {
    Ok(match family {
        "gl" | "so" | "sp" => {
            let fam = match family {
                "gl" => ClassicalFamily::Gl,
                "so" => ClassicalFamily::So,
                _ => ClassicalFamily::Sp,
            };
            let ex = classical_example(fam, f, param(params, "w")?, param(params, "z")?)?;
            Object::JTernary { jt: ex.jt.clone(), source: Source::Classical(Box::new(ex)) }
        }
        "exceptional" => {
            let m = exceptional_series(f, param(params, "c2_dim")?)?;
            Object::JTernary { jt: m.jt.clone(), source: Source::Exceptional(Box::new(m)) }
        }
        "octonion_tensor" => {
            let c1 = CompositionAlgebra::split(f, 8, "e")?;
            let c2 = CompositionAlgebra::split(f, param(params, "c2_dim")?, "f")?;
            Object::Structurable(tensor_structurable(&c1, &c2)?)
        }
        "composition" => Object::Composition(CompositionAlgebra::split(f, param(params, "dim")?, "e")?),
        _ => return Err(Error::Parameters(format!("unknown catalog family `{family}`"))),
    })
}

/// Command-line overrides applied to every task.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub sample: Option<SampleSpec>,
}

fn mode(task: &TaskSpec, o: &Overrides) -> SweepMode {
    match o.sample.or(task.sample) {
        Some(s) => SweepMode::Sampled { samples: s.samples, seed: s.seed },
        None => SweepMode::Exhaustive,
    }
}

/// Runs one task; failures to build or apply become error reports.
pub fn run_task(session: &mut Session<'_>, task: &TaskSpec, o: &Overrides) -> VerificationReport {
    let mut report = match dispatch(session, task, o) {
        Ok(r) => r,
        Err(e) => VerificationReport::error(task.target.clone(), e.to_string()),
    };
    report.task = format!("{}:{}", task.id, report.task);
    report
}

fn unsupported(task: &TaskSpec, obj: &Object) -> Error {
    Error::Precondition(format!("{} target `{}` does not apply to a {} object", task.command, task.target, obj.kind()))
}

fn dispatch(session: &mut Session<'_>, task: &TaskSpec, o: &Overrides) -> Result<VerificationReport> {
    let obj = session.object(&task.on)?;
    let mode = mode(task, o);
    match task.command {
        Command::Verify => verify(session, task, &obj, mode),
        Command::Build => build(task, &obj),
        Command::Decompose => decompose(session, task, &obj),
        Command::Catalog => Ok(catalog_summary(&obj)),
    }
}

fn verify(session: &mut Session<'_>, task: &TaskSpec, obj: &Object, mode: SweepMode) -> Result<VerificationReport> {
    let t = task.target.as_str();
    match t {
        "jacobi" => obj.lie().map(|l| l.check_jacobi_with(mode)).ok_or_else(|| unsupported(task, obj)),
        "invariants" => obj.lie().map(LieAlgebra::invariants_report).ok_or_else(|| unsupported(task, obj)),
        "jordan" => match obj {
            Object::Jordan(j) => Ok(j.check_jordan()),
            _ => obj.jt().map(|jt| jt.jordan().check_jordan()).ok_or_else(|| unsupported(task, obj)),
        },
        "special_module" => obj.jt().map(JTernaryAlgebra::check_special_module).ok_or_else(|| unsupported(task, obj)),
        "jt" | "jternary" => obj.jt().map(|jt| jt.check_jt_axioms_with(mode)).ok_or_else(|| unsupported(task, obj)),
        "sl2_identities" => obj.jt().map(|jt| jt.check_sl2_identities_with(mode)).ok_or_else(|| unsupported(task, obj)),
        "structurable" => match obj {
            Object::Composition(c) => Ok(c.check()),
            _ => obj.structurable().map(|(a, _)| a.check_with(mode)).ok_or_else(|| unsupported(task, obj)),
        },
        "albert" => match obj.source() {
            Some(Source::Exceptional(m)) => Ok(verify_quadratic_factor(&m.albert, &m.structurable, &m.jt)),
            _ => Err(unsupported(task, obj)),
        },
        "hermitian" => match obj.source() {
            Some(Source::Classical(ex)) => Ok(hermitian_report(ex)),
            _ => Err(unsupported(task, obj)),
        },
        "peirce" => {
            let jt = obj.jt().ok_or_else(|| unsupported(task, obj))?;
            let e = idempotent(session, task, obj)?;
            let p = jt.jordan().peirce_decompose(&e)?;
            let split = jt.split_t(&e)?;
            let mut r = jt.check_peirce_compatibility(&p, &split);
            let (d1, dh, d0) = p.dims();
            r.dim("J1", d1);
            r.dim("J_half", dh);
            r.dim("J0", d0);
            Ok(r)
        }
        "roundtrip" => roundtrip(task, obj),
        "grading" => match obj {
            Object::Kantor { k, .. } => Ok(k.grading().check_compatibility(&k.lie)),
            _ => Err(unsupported(task, obj)),
        },
        _ => Err(Error::Precondition(format!("unknown verify target `{t}`"))),
    }
}

fn idempotent(session: &mut Session<'_>, task: &TaskSpec, obj: &Object) -> Result<Vector> {
    match &task.idempotent {
        Some(name) => session.element(name),
        None => catalog_idempotent(obj),
    }
}

fn hermitian_report(ex: &ClassicalExample) -> VerificationReport {
    let mut r = VerificationReport::new("hermitian");
    r.absorb("module", ex.module.check());
    r.push(check_skew_form_symmetric(&ex.module));
    r.push(check_prototypical_d(&ex.module, &ex.jt));
    r.push(ex.module.check_phi_equivariance());
    r
}

/// `J`, `T` recovered from the 5-grading of the assembled (or Kantor)
/// Lie algebra and compared product by product.
fn roundtrip(task: &TaskSpec, obj: &Object) -> Result<VerificationReport> {
    let (jt, rebuilt) = match obj {
        Object::Kantor { k, alg, s } => {
            let s = s.as_ref().ok_or_else(|| Error::Precondition("kantor object has no reference element s".into()))?;
            let t = k.sl2_triple(alg, s)?;
            (catalog::jternary_from_structurable(alg, s)?, jternary_from_5grading(&k.lie, &t.e, &t.f)?)
        }
        Object::Assembled { asm, .. } => {
            let t = &asm.triple;
            (asm.jt().clone(), jternary_from_5grading(&asm.lie, &t.e, &t.f)?)
        }
        Object::JTernary { jt, .. } => {
            let asm = assemble_l_unchecked(jt)?;
            let t = &asm.triple;
            (jt.clone(), jternary_from_5grading(&asm.lie, &t.e, &t.f)?)
        }
        _ => return Err(unsupported(task, obj)),
    };
    let mut r = jt.compare(&rebuilt);
    r.task = "roundtrip".into();
    r.dim("J", jt.dim_j());
    r.dim("T", jt.dim_t());
    Ok(r)
}

fn build(task: &TaskSpec, obj: &Object) -> Result<VerificationReport> {
    match task.target.as_str() {
        "assemble" => {
            let owned;
            let asm: &AssembledL = match obj {
                Object::Assembled { asm, .. } => asm,
                _ => {
                    let jt = obj.jt().ok_or_else(|| unsupported(task, obj))?;
                    owned = if jt.dim_t() > 32 { assemble_l_unchecked(jt)? } else { assemble_l(jt)? };
                    &owned
                }
            };
            Ok(assemble_report(asm, obj.source()))
        }
        "kantor" => {
            let owned;
            let (k, alg, s): (&KantorAlgebra, &StructurableAlgebra, Option<&Vector>) = match obj {
                Object::Kantor { k, alg, s } => (k, alg, s.as_ref()),
                _ => {
                    let (alg, s) = obj.structurable().ok_or_else(|| unsupported(task, obj))?;
                    owned = kantor(alg)?;
                    (&owned, alg, s)
                }
            };
            Ok(kantor_report(k, alg, s, obj.source()))
        }
        "prototype" => match obj.source() {
            Some(Source::Classical(ex)) => {
                let mut r = hermitian_report(ex);
                r.task = "prototype".into();
                r.dim("A", ex.module.algebra().dim());
                r.dim("J", ex.jt.dim_j());
                r.dim("T", ex.jt.dim_t());
                Ok(r)
            }
            _ => Err(unsupported(task, obj)),
        },
        t => Err(Error::Precondition(format!("unknown build target `{t}`"))),
    }
}

fn assemble_report(asm: &AssembledL, source: Option<&Source>) -> VerificationReport {
    let jt = asm.jt();
    let mut r = VerificationReport::new("assemble").with_dim("J", jt.dim_j()).with_dim("T", jt.dim_t());
    r.dim("D", asm.dim_d());
    r.dim("L", asm.lie.dim());
    r.push(asm.lie.check_antisymmetry());
    r.assert("sl2_triple", asm.lie.check_sl2_triple(&asm.triple).is_ok(), || "E⊗1, H⊗1, F⊗1".into());
    match source {
        Some(Source::Classical(ex)) => {
            let outer = outer_derivations(&ex.module, &ex.jt);
            let full = 3 * jt.dim_j() + 2 * jt.dim_t() + outer.abstract_dim();
            r.dim("reference", ex.reference_dim());
            r.dim("D_full", outer.abstract_dim());
            r.dim("L_full", full);
            r.assert("full_dimension_matches_reference", full == ex.reference_dim(), || {
                format!("{full} vs {}", ex.reference_dim())
            });
            // The inner derivations D_{J,J} + d_{T,T} lie in the full derivation algebra.
            let mut inside = isotype_core::report::Check::new("inner_D_in_full_D");
            for (k, op) in asm.d_basis().iter().enumerate() {
                inside.record(outer.image.contains(&op.flatten()), || format!("D[{k}]"));
            }
            r.push(inside);
        }
        Some(Source::Exceptional(m)) => {
            r.dim("reference", m.reference_dim());
            r.assert("dimension_matches_reference", asm.lie.dim() == m.reference_dim(), || {
                format!("{} vs {}", asm.lie.dim(), m.reference_dim())
            });
        }
        _ => {}
    }
    r
}

fn kantor_report(
    k: &KantorAlgebra,
    alg: &StructurableAlgebra,
    s: Option<&Vector>,
    source: Option<&Source>,
) -> VerificationReport {
    let (ns, n, m) = k.dims;
    let mut r = VerificationReport::new("kantor").with_dim("S", ns).with_dim("A", n).with_dim("Instrl", m);
    r.dim("L", k.dim());
    r.push(k.lie.check_antisymmetry());
    if let Some(s) = s {
        r.assert("sl2_triple_s_prime_id_s_tilde", k.sl2_triple(alg, s).is_ok(), || "[s', s~] ≠ id".into());
    }
    if let Some(Source::Exceptional(model)) = source {
        r.dim("reference", model.reference_dim());
        r.assert("dimension_matches_reference", k.dim() == model.reference_dim(), || {
            format!("{} vs {}", k.dim(), model.reference_dim())
        });
    }
    r
}

fn decompose(session: &mut Session<'_>, task: &TaskSpec, obj: &Object) -> Result<VerificationReport> {
    let dec: IsotypicDecomposition = match task.target.as_str() {
        "sl2" => {
            let (lie, triple): (&LieAlgebra, Sl2Triple) = match obj {
                Object::Assembled { asm, .. } => (&asm.lie, asm.triple.clone()),
                Object::Kantor { k, alg, s } => {
                    let s = s.as_ref().ok_or_else(|| Error::Precondition("kantor object has no reference element s".into()))?;
                    (&k.lie, k.sl2_triple(alg, s)?)
                }
                _ => return Err(unsupported(task, obj)),
            };
            short_sl2_decompose(lie, &triple)?
        }
        "sl2xsl2" => {
            let e = idempotent(session, task, obj)?;
            match obj {
                Object::Assembled { asm, .. } => short_sl2sl2_decompose(asm, &e)?,
                _ => {
                    let jt = obj.jt().ok_or_else(|| unsupported(task, obj))?;
                    short_sl2sl2_decompose(&assemble_l_unchecked(jt)?, &e)?
                }
            }
        }
        t => return Err(Error::Precondition(format!("unknown decomposition `{t}` (expected sl2 or sl2xsl2)"))),
    };
    let mut r = dec.report;
    for c in &dec.components {
        r.dim(format!("{}.copy_dim", c.name), c.subspace.dim().checked_div(c.multiplicity).unwrap_or(0));
    }
    Ok(r)
}

/// Dimensions and certificates of a catalog object.
pub fn catalog_summary(obj: &Object) -> VerificationReport {
    let mut r = VerificationReport::new("catalog");
    match obj {
        Object::JTernary { jt, source } => {
            r.dim("J", jt.dim_j());
            r.dim("T", jt.dim_t());
            r.absorb("special_module", jt.check_special_module());
            match source {
                Source::Classical(ex) => {
                    r.note(ex.name());
                    r.absorb("hermitian", hermitian_report(ex));
                    match assemble_l(jt) {
                        Ok(asm) => r.absorb("assemble", assemble_report(&asm, Some(source))),
                        Err(e) => {
                            r.note(e.to_string());
                            r.status = isotype_core::report::Status::Error;
                        }
                    }
                }
                Source::Exceptional(m) => {
                    r.note(format!("{} from split octonions ⊗ split composition algebra of dim {}", m.lie_name(), m.c2_dim));
                    r.dim("A", m.structurable.dim());
                    r.absorb("albert", verify_quadratic_factor(&m.albert, &m.structurable, &m.jt));
                    match m.kantor() {
                        Ok(k) => r.absorb("kantor", kantor_report(&k, &m.structurable, Some(&m.s), Some(source))),
                        Err(e) => {
                            r.note(e.to_string());
                            r.status = isotype_core::report::Status::Error;
                        }
                    }
                }
                Source::Explicit => {}
            }
        }
        Object::Structurable(a) => {
            r.dim("A", a.dim());
            r.dim("S", a.skew().dim());
            r.absorb("structurable", a.check());
        }
        Object::Composition(c) => {
            r.dim("C", c.dim());
            r.absorb("composition", c.check());
        }
        o => {
            r.note(format!("{} object", o.kind()));
            if let Some(l) = o.lie() {
                r.dim("L", l.dim());
            }
        }
    }
    r
}
