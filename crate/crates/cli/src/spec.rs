//! The `.alg.json` spec format: a field, named spaces and sparse maps,
//! named objects (explicit algebras or catalog constructions), named
//! elements and a task list.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use isotype_core::scalar::parse_rational_text;

use crate::error::CliError;

/// A coefficient written as a rational string such as `"-3/4"`. The text
/// is validated while parsing so malformed values carry a location.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coefficient(pub String);

impl Serialize for Coefficient {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Coefficient {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational_text(&text).map_err(serde::de::Error::custom)?;
        Ok(Coefficient(text))
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// One structure constant. Linear maps use `i → k`, bilinear maps
/// `(i, j) → k`, trilinear maps `(i, j, k) → l`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Constant {
    pub i: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<usize>,
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    pub c: Coefficient,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapSpec {
    /// Names of the input spaces; the arity is its length (1, 2 or 3).
    pub domain: Vec<String>,
    pub codomain: String,
    #[serde(default)]
    pub constants: Vec<Constant>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ObjectSpec {
    /// A Lie algebra given by its bracket.
    Lie { space: String, bracket: String },
    /// A Jordan algebra with its unit in basis coordinates.
    Jordan { space: String, product: String, unit: Vec<Coefficient> },
    /// A J-ternary algebra from a Jordan object and three maps on `T`.
    Jternary { jordan: String, t: String, bullet: String, skew: String, triple: String },
    /// A unital algebra with involution.
    Structurable { space: String, product: String, involution: String },
    /// A catalog constructor: `gl`, `so`, `sp` (`w`, `z`), `exceptional`
    /// (`c2_dim`), `composition` (`dim`) or `octonion_tensor` (`c2_dim`).
    Catalog { family: String, #[serde(default)] params: BTreeMap<String, i64> },
    /// `L(J,T)` of a J-ternary object.
    Assemble { from: String },
    /// `K(A,−)` of a structurable or exceptional object; `s` (coordinates
    /// in `A`) selects the sl2-triple `(s', id, s~)`.
    Kantor {
        from: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        s: Option<Vec<Coefficient>>,
    },
}

/// An element of the Jordan algebra of an object, by coordinates or as
/// the catalog idempotent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementSpec {
    pub of: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coords: Option<Vec<Coefficient>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub catalog: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SampleSpec {
    pub samples: u64,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Build,
    Verify,
    Decompose,
    Catalog,
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Command::Build => "build",
            Command::Verify => "verify",
            Command::Decompose => "decompose",
            Command::Catalog => "catalog",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TaskSpec {
    pub id: String,
    pub command: Command,
    /// Verify/build target, or `sl2` / `sl2xsl2` for decompositions.
    pub target: String,
    pub on: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub idempotent: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sample: Option<SampleSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgSpec {
    pub field: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub spaces: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub maps: BTreeMap<String, MapSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub objects: BTreeMap<String, ObjectSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub elements: BTreeMap<String, ElementSpec>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tasks: Vec<TaskSpec>,
}

pub fn parse_spec(path: &Path) -> Result<AlgSpec, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse_spec_str(&text, &path.display().to_string())
}

/// Parses and validates; `origin` names the source in diagnostics.
pub fn parse_spec_str(text: &str, origin: &str) -> Result<AlgSpec, CliError> {
    let spec: AlgSpec = serde_json::from_str(text).map_err(|e| CliError::Parse {
        origin: origin.to_string(),
        line: e.line(),
        column: e.column(),
        message: strip_position(&e.to_string()),
    })?;
    spec.validate().map_err(|m| CliError::Invalid { origin: origin.to_string(), message: m })?;
    Ok(spec)
}

fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(p) => msg[..p].to_string(),
        None => msg.to_string(),
    }
}

impl AlgSpec {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serializes")
    }

    /// Every reference resolves, every index is in range and every scalar
    /// is valid in the declared field.
    pub fn validate(&self) -> Result<(), String> {
        let field: isotype_core::Field = self.field.parse().map_err(|e| format!("field: {e}"))?;
        let check_scalar = |path: &str, c: &Coefficient| -> Result<(), String> {
            isotype_core::parse_scalar(&c.0, field).map(|_| ()).map_err(|e| format!("{path}: {e}"))
        };
        for (name, labels) in &self.spaces {
            let mut seen = std::collections::BTreeSet::new();
            for l in labels {
                if !seen.insert(l) {
                    return Err(format!("spaces.{name}: duplicate label `{l}`"));
                }
            }
        }
        let dim = |path: &str, space: &str| -> Result<usize, String> {
            self.spaces.get(space).map(Vec::len).ok_or_else(|| format!("{path}: unknown space `{space}`"))
        };
        for (name, m) in &self.maps {
            let path = format!("maps.{name}");
            if !(1..=3).contains(&m.domain.len()) {
                return Err(format!("{path}: domain must list 1, 2 or 3 spaces"));
            }
            let dims: Vec<usize> = m.domain.iter().map(|s| dim(&path, s)).collect::<Result<_, _>>()?;
            let out = dim(&path, &m.codomain)?;
            for (n, c) in m.constants.iter().enumerate() {
                let cp = format!("{path}.constants[{n}]");
                let (inputs, output): (Vec<Option<usize>>, usize) = match dims.len() {
                    1 => {
                        if c.j.is_some() || c.l.is_some() {
                            return Err(format!("{cp}: a linear map takes fields i and k only"));
                        }
                        (vec![Some(c.i)], c.k)
                    }
                    2 => {
                        if c.l.is_some() {
                            return Err(format!("{cp}: a bilinear map takes fields i, j and k only"));
                        }
                        (vec![Some(c.i), c.j], c.k)
                    }
                    _ => (vec![Some(c.i), c.j, Some(c.k)], c.l.ok_or_else(|| format!("{cp}: missing output index l"))?),
                };
                for (slot, (idx, d)) in inputs.iter().zip(&dims).enumerate() {
                    let idx = idx.ok_or_else(|| format!("{cp}: missing index j"))?;
                    if idx >= *d {
                        return Err(format!("{cp}: input {slot} index {idx} out of range for dimension {d}"));
                    }
                }
                if output >= out {
                    return Err(format!("{cp}: output index {output} out of range for dimension {out}"));
                }
                check_scalar(&cp, &c.c)?;
            }
        }
        let map = |path: &str, name: &str, shape: &[&str], out: &str| -> Result<(), String> {
            let m = self.maps.get(name).ok_or_else(|| format!("{path}: unknown map `{name}`"))?;
            if m.domain.iter().map(String::as_str).ne(shape.iter().copied()) || m.codomain != out {
                return Err(format!(
                    "{path}: map `{name}` has shape {:?} → {}, expected {shape:?} → {out}",
                    m.domain, m.codomain
                ));
            }
            Ok(())
        };
        for (name, o) in &self.objects {
            let path = format!("objects.{name}");
            let object = |n: &str| -> Result<&ObjectSpec, String> {
                if n == name {
                    return Err(format!("{path}: refers to itself"));
                }
                self.objects.get(n).ok_or_else(|| format!("{path}: unknown object `{n}`"))
            };
            match o {
                ObjectSpec::Lie { space, bracket } => {
                    dim(&path, space)?;
                    map(&path, bracket, &[space, space], space)?;
                }
                ObjectSpec::Jordan { space, product, unit } => {
                    let n = dim(&path, space)?;
                    map(&path, product, &[space, space], space)?;
                    if unit.len() != n {
                        return Err(format!("{path}: unit has {} coordinates, expected {n}", unit.len()));
                    }
                    for c in unit {
                        check_scalar(&path, c)?;
                    }
                }
                ObjectSpec::Jternary { jordan, t, bullet, skew, triple } => {
                    let j = match object(jordan)? {
                        ObjectSpec::Jordan { space, .. } => space.clone(),
                        _ => return Err(format!("{path}: `{jordan}` is not a jordan object")),
                    };
                    dim(&path, t)?;
                    map(&path, bullet, &[&j, t], t)?;
                    map(&path, skew, &[t, t], &j)?;
                    map(&path, triple, &[t, t, t], t)?;
                }
                ObjectSpec::Structurable { space, product, involution } => {
                    dim(&path, space)?;
                    map(&path, product, &[space, space], space)?;
                    map(&path, involution, &[space], space)?;
                }
                ObjectSpec::Catalog { family, params } => validate_catalog(&path, family, params)?,
                ObjectSpec::Assemble { from } => {
                    object(from)?;
                }
                ObjectSpec::Kantor { from, s } => {
                    object(from)?;
                    for c in s.iter().flatten() {
                        check_scalar(&path, c)?;
                    }
                }
            }
        }
        for (name, e) in &self.elements {
            let path = format!("elements.{name}");
            if !self.objects.contains_key(&e.of) {
                return Err(format!("{path}: unknown object `{}`", e.of));
            }
            match (&e.coords, &e.catalog) {
                (Some(cs), None) => {
                    for c in cs {
                        check_scalar(&path, c)?;
                    }
                }
                (None, Some(k)) if k == "idempotent" => {}
                (None, Some(k)) => return Err(format!("{path}: unknown catalog element `{k}`")),
                _ => return Err(format!("{path}: give exactly one of coords and catalog")),
            }
        }
        let mut ids = std::collections::BTreeSet::new();
        for (n, t) in self.tasks.iter().enumerate() {
            let path = format!("tasks[{n}]");
            if !ids.insert(&t.id) {
                return Err(format!("{path}: duplicate task id `{}`", t.id));
            }
            if !self.objects.contains_key(&t.on) {
                return Err(format!("{path}: unknown object `{}`", t.on));
            }
            if let Some(e) = &t.idempotent {
                if !self.elements.contains_key(e) {
                    return Err(format!("{path}: unknown element `{e}`"));
                }
            }
            if let Some(s) = t.sample {
                if s.samples == 0 {
                    return Err(format!("{path}: sample count must be positive"));
                }
            }
        }
        Ok(())
    }
}

/// Catalog families and their required parameters.
pub fn validate_catalog(path: &str, family: &str, params: &BTreeMap<String, i64>) -> Result<(), String> {
    let required: &[&str] = match family {
        "gl" | "so" | "sp" => &["w", "z"],
        "exceptional" | "octonion_tensor" => &["c2_dim"],
        "composition" => &["dim"],
        _ => return Err(format!("{path}: unknown catalog family `{family}`")),
    };
    for key in params.keys() {
        if !required.contains(&key.as_str()) {
            return Err(format!("{path}: unknown parameter `{key}` for `{family}`"));
        }
    }
    for key in required {
        match params.get(*key) {
            None => return Err(format!("{path}: missing parameter `{key}` for `{family}`")),
            Some(v) if *v < 0 => return Err(format!("{path}: parameter `{key}` must be non-negative")),
            _ => {}
        }
    }
    Ok(())
}
