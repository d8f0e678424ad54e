mod expand;
mod graph;
mod scan;
mod tables;
mod verify;

use anyhow::{bail, Result};
use qalcove_core::render;
use qalcove_core::ring::DemazureCombo;
use serde_json::{json, Value};

use crate::cli::{Command, ExpandCommand, Format};
use crate::config::Settings;

pub use expand::{chevalley_report, identity_report};
pub use graph::graph_report;
pub use scan::{scan, scan_report};
pub use tables::{example_tables, tables_report, ExampleTable};
pub use verify::{execute, plan, verify_report, Plan, DEFAULT_SPECIALIZE};

pub fn dispatch(cmd: &Command, s: &Settings) -> Result<bool> {
    let (text, ok) = match cmd {
        Command::Verify(a) => verify_report(a, s)?,
        Command::ScanConjecture(a) => scan_report(a, s)?,
        Command::Tables(a) => (tables_report(a, s)?, true),
        Command::Qbg => (graph_report(s)?, true),
        Command::Expand(ExpandCommand::Chevalley(a)) => (chevalley_report(a, s)?, true),
        Command::Expand(ExpandCommand::Identity(a)) => (identity_report(a, s)?, true),
    };
    s.emit(&text)?;
    Ok(ok)
}

fn no_dot(s: &Settings) -> Result<()> {
    if s.format == Format::Dot {
        bail!("--format dot is only available for `qbg`");
    }
    Ok(())
}

/// A combination as JSON, sorted by key, with a LaTeX rendering alongside.
fn combo_json(c: &DemazureCombo) -> Value {
    let terms: Vec<Value> = c
        .iter()
        .map(|(k, v)| json!({ "key": k.to_string(), "coefficient": v.to_string() }))
        .collect();
    json!({ "terms": terms, "latex": render::combo_latex(c) })
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn indent(text: &str, pad: &str) -> String {
    text.lines().map(|l| format!("{pad}{l}\n")).collect()
}
