use std::fmt::Write;

use anyhow::{bail, Result};
use qalcove_core::qbg::{EdgeKind, Qbg};
use qalcove_core::render;
use qalcove_core::WeylElt;
use serde_json::json;

use super::pretty;
use crate::cli::Format;
use crate::config::Settings;

fn kind(k: EdgeKind) -> &'static str {
    match k {
        EdgeKind::Bruhat => "bruhat",
        EdgeKind::Quantum => "quantum",
    }
}

/// Vertices in index order, edges sorted by source index then label.
pub fn graph_report(s: &Settings) -> Result<String> {
    let n = s.rank;
    if n == 0 || n > s.max_rank {
        bail!("rank {n} is outside 1..={} for a full export", s.max_rank);
    }
    let g = Qbg::new(n)?;
    let vertices = WeylElt::all(n);
    let mut edges = Vec::new();
    for v in &vertices {
        let mut out = g.edges_from(v);
        out.sort_by_key(|e| e.label);
        edges.extend(out);
    }
    let name = |w: &WeylElt| render::word(w);
    Ok(match s.format {
        Format::Json => pretty(&json!({
            "rank": n,
            "vertices": vertices.iter().map(|w| json!({
                "w": name(w),
                "window": w.window(),
                "length": w.length(),
            })).collect::<Vec<_>>(),
            "edges": edges.iter().map(|e| json!({
                "source": name(&e.source),
                "target": name(&e.target),
                "label": e.label.to_string(),
                "kind": kind(e.kind),
                "weight": render::coroot(&e.weight_contribution()),
            })).collect::<Vec<_>>(),
        })),
        Format::Dot => {
            let mut t = format!("digraph qbg_c{n} {{\n  rankdir=BT;\n");
            for w in &vertices {
                let _ = writeln!(t, "  \"{}\";", name(w));
            }
            for e in &edges {
                let style = if e.kind == EdgeKind::Quantum { ", style=dashed" } else { "" };
                let _ = writeln!(t, "  \"{}\" -> \"{}\" [label=\"{}\"{style}];", name(&e.source), name(&e.target), e.label);
            }
            t.push_str("}\n");
            t
        }
        Format::Latex => {
            let mut t = String::from("\\begin{longtable}{|l|l|l|c|} \\hline\nsource & label & target & kind \\\\ \\hline\n");
            for e in &edges {
                let _ = writeln!(
                    t,
                    "${}$ & \\verb|{}| & ${}$ & {} \\\\",
                    render::word_latex(&e.source),
                    e.label,
                    render::word_latex(&e.target),
                    kind(e.kind)
                );
            }
            t.push_str("\\hline\n\\end{longtable}\n");
            t
        }
        Format::Text => {
            let mut t = format!("qbg n={n} vertices={} edges={}\n", vertices.len(), edges.len());
            for e in &edges {
                let _ = writeln!(t, "{}\t{}\t{}\t{}", name(&e.source), e.label, name(&e.target), kind(e.kind));
            }
            t
        }
    })
}
