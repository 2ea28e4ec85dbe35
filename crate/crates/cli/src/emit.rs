//! Report serialization: JSON with stable key order or aligned text.

use isotype_core::report::{Status, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

pub fn emit_report(reports: &[VerificationReport], format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Text => text(reports),
    }
}

fn status(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Error => "ERROR",
    }
}

fn text(reports: &[VerificationReport]) -> String {
    if reports.is_empty() {
        return "no tasks\n".into();
    }
    let width = reports.iter().map(|r| r.task.chars().count()).max().unwrap_or(4).max(4);
    let mut out = format!("{:<width$}  {:<6}  {:>12}  {:>10}  witness\n", "task", "status", "checked", "violations");
    for r in reports {
        out.push_str(&format!(
            "{:<width$}  {:<6}  {:>12}  {:>10}  {}\n",
            r.task,
            status(r.status),
            r.checked,
            r.violations,
            r.witness.as_deref().unwrap_or("-")
        ));
        if !r.dims.is_empty() {
            let dims: Vec<String> = r.dims.iter().map(|(k, v)| format!("{k}={v}")).collect();
            out.push_str(&format!("{:<width$}  dims: {}\n", "", dims.join(" ")));
        }
        for c in r.details.iter().filter(|c| !c.passed()) {
            let tag = if c.informational { "info" } else { "fail" };
            out.push_str(&format!(
                "{:<width$}  {tag}: {} ({} of {}) {}\n",
                "",
                c.name,
                c.violations,
                c.checked,
                c.witness.as_deref().unwrap_or("")
            ));
        }
        for n in &r.notes {
            out.push_str(&format!("{:<width$}  note: {n}\n", ""));
        }
        if let Some(ms) = r.millis {
            out.push_str(&format!("{:<width$}  time: {ms} ms\n", ""));
        }
    }
    out
}

/// 0 when every report passes, 1 otherwise.
pub fn exit_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().all(VerificationReport::passed) {
        0
    } else {
        1
    }
}
