//! Command-line driver: spec parsing, task dispatch and report output.

pub mod emit;
pub mod error;
pub mod run;
pub mod spec;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use clap::{ArgGroup, Parser};

use emit::{emit_report, exit_code, Format};
use error::CliError;
use isotype_core::report::VerificationReport;
use run::{Overrides, Session};
use spec::{AlgSpec, Command, ObjectSpec, SampleSpec, TaskSpec};

#[derive(Debug, Parser)]
#[command(name = "isotype", version, about = "Exact verification of Jordan, J-ternary, structurable and Lie algebras")]
#[command(group(ArgGroup::new("decomposition").args(["sl2", "sl2xsl2"])))]
pub struct Cli {
    #[arg(value_enum)]
    pub command: Command,
    /// Algebra spec (`.alg.json`).
    #[arg(long)]
    pub spec: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Sampled sweeps with this many tuples per identity.
    #[arg(long, requires = "seed")]
    pub sample: Option<u64>,
    #[arg(long, requires = "sample")]
    pub seed: Option<u64>,
    /// Worker threads for parallel sweeps (default: ISOTYPE_THREADS, then all cores).
    #[arg(long)]
    pub threads: Option<usize>,
    /// Verify or build target; selects spec tasks or, with --on, applies
    /// the target to the named objects.
    #[arg(long)]
    pub target: Option<String>,
    /// Objects to run the target on.
    #[arg(long)]
    pub on: Vec<String>,
    /// Decompose under the object's short sl2-triple.
    #[arg(long)]
    pub sl2: bool,
    /// Decompose under the two sl2 copies of an idempotent.
    #[arg(long, requires = "idempotent")]
    pub sl2xsl2: bool,
    /// Named element of the spec, or `catalog` for the catalog idempotent.
    #[arg(long)]
    pub idempotent: Option<String>,
    /// Catalog family: gl, so, sp, exceptional, octonion_tensor, composition.
    #[arg(long)]
    pub family: Option<String>,
    /// Catalog parameter `key=value` (repeatable).
    #[arg(long = "param", value_parser = parse_param)]
    pub params: Vec<(String, i64)>,
    /// Include wall-clock milliseconds in reports.
    #[arg(long)]
    pub timing: bool,
}

fn parse_param(s: &str) -> Result<(String, i64), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected key=value, got `{s}`"))?;
    let v: i64 = v.trim().parse().map_err(|_| format!("parameter `{k}` needs an integer value"))?;
    Ok((k.trim().to_string(), v))
}

/// Thread count from the flag, then `ISOTYPE_THREADS`.
pub fn thread_count(flag: Option<usize>) -> Result<Option<usize>, CliError> {
    if let Some(n) = flag {
        return Ok(Some(n));
    }
    match std::env::var("ISOTYPE_THREADS") {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| CliError::Usage(format!("ISOTYPE_THREADS must be a positive integer, got `{v}`"))),
        Err(_) => Ok(None),
    }
}

/// The spec and task list a command line selects.
pub fn plan(cli: &Cli) -> Result<(AlgSpec, Vec<TaskSpec>), CliError> {
    let mut spec = match &cli.spec {
        Some(p) => spec::parse_spec(p)?,
        None if cli.command == Command::Catalog => AlgSpec {
            field: "Q".into(),
            spaces: BTreeMap::new(),
            maps: BTreeMap::new(),
            objects: BTreeMap::new(),
            elements: BTreeMap::new(),
            tasks: Vec::new(),
        },
        None => return Err(CliError::Usage(format!("`{}` needs --spec FILE", cli.command))),
    };
    let target = match cli.command {
        Command::Decompose if cli.sl2 => Some("sl2".to_string()),
        Command::Decompose if cli.sl2xsl2 => Some("sl2xsl2".to_string()),
        Command::Decompose => cli.target.clone(),
        Command::Catalog => Some("summary".to_string()),
        _ => cli.target.clone(),
    };
    let mut on = cli.on.clone();
    if let Some(family) = &cli.family {
        if cli.command != Command::Catalog {
            return Err(CliError::Usage("--family is only valid with the catalog command".into()));
        }
        let params: BTreeMap<String, i64> = cli.params.iter().cloned().collect();
        spec::validate_catalog("--family", family, &params).map_err(CliError::Usage)?;
        let name = if params.is_empty() {
            family.clone()
        } else {
            let ps: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            format!("{family}({})", ps.join(","))
        };
        spec.objects.insert(name.clone(), ObjectSpec::Catalog { family: family.clone(), params });
        on = vec![name];
    } else if !cli.params.is_empty() {
        return Err(CliError::Usage("--param needs --family".into()));
    }
    let tasks: Vec<TaskSpec> = if on.is_empty() {
        spec.tasks
            .iter()
            .filter(|t| t.command == cli.command)
            .filter(|t| cli.command == Command::Catalog || target.as_ref().is_none_or(|x| *x == t.target))
            .cloned()
            .collect()
    } else {
        let target = target.ok_or_else(|| CliError::Usage("--on needs --target (or --sl2/--sl2xsl2)".into()))?;
        on.iter()
            .map(|name| {
                if !spec.objects.contains_key(name) {
                    return Err(CliError::Usage(format!("unknown object `{name}`")));
                }
                Ok(TaskSpec {
                    id: name.clone(),
                    command: cli.command,
                    target: target.clone(),
                    on: name.clone(),
                    idempotent: None,
                    sample: None,
                })
            })
            .collect::<Result<_, _>>()?
    };
    let mut tasks = tasks;
    if let Some(e) = &cli.idempotent {
        if e != "catalog" && !spec.elements.contains_key(e) {
            return Err(CliError::Usage(format!("unknown element `{e}`")));
        }
        for t in &mut tasks {
            t.idempotent = (e != "catalog").then(|| e.clone());
        }
    }
    Ok((spec, tasks))
}

pub fn execute(spec: &AlgSpec, tasks: &[TaskSpec], sample: Option<SampleSpec>, timing: bool) -> Vec<VerificationReport> {
    let overrides = Overrides { sample };
    let mut session = match Session::new(spec) {
        Ok(s) => s,
        Err(e) => return vec![VerificationReport::error("spec", e.to_string())],
    };
    tasks
        .iter()
        .map(|t| {
            let start = Instant::now();
            let mut r = run::run_task(&mut session, t, &overrides);
            r.millis = timing.then(|| start.elapsed().as_millis() as u64);
            r
        })
        .collect()
}

/// Runs a parsed command line, returning the output and the exit code.
pub fn run_cli(cli: &Cli) -> Result<(String, i32), CliError> {
    let (spec, tasks) = plan(cli)?;
    if let Some(n) = thread_count(cli.threads)? {
        if n == 0 {
            return Err(CliError::Usage("thread count must be positive".into()));
        }
        // A second initialization in the same process keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let sample = cli.sample.zip(cli.seed).map(|(samples, seed)| SampleSpec { samples, seed });
    if sample.is_some_and(|s| s.samples == 0) {
        return Err(CliError::Usage("--sample must be positive".into()));
    }
    let reports = execute(&spec, &tasks, sample, cli.timing);
    Ok((emit_report(&reports, cli.format), exit_code(&reports)))
}
