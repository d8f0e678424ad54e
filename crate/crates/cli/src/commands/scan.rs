use std::fmt::Write;

use anyhow::{bail, Result};
use qalcove_core::chevalley::Engine;
use qalcove_core::qbg::Qbg;
use qalcove_core::render;
use qalcove_core::verify::{scan_instance, ConjectureScanResult, ScanEntry};
use qalcove_core::WeylElt;
use serde_json::{json, Value};

use super::{no_dot, pretty};
use crate::cli::{Format, ScanArgs};
use crate::config::Settings;
use crate::{parse, pool};

/// Runs the scan over the selected `(w, m)` on `jobs` workers.
pub fn scan(n: usize, ws: &[WeylElt], ms: &[usize], jobs: usize) -> Result<ConjectureScanResult> {
    let g = Qbg::new(n)?;
    let pairs: Vec<(WeylElt, usize)> = ws.iter().flat_map(|w| ms.iter().map(move |&m| (*w, m))).collect();
    let entries = pool::run(&pairs, jobs, || Engine::new(&g), |eng, (w, m)| scan_instance(eng, w, *m));
    Ok(ConjectureScanResult { n, entries: entries.into_iter().collect::<Result<_, _>>()? })
}

fn window(w: &WeylElt) -> String {
    let v: Vec<String> = w.window().iter().map(|x| x.to_string()).collect();
    format!("[{}]", v.join(","))
}

fn entry_json(e: &ScanEntry) -> Value {
    json!({
        "w": render::word(&e.w),
        "window": window(&e.w),
        "m": e.m,
        "ls": e.ls(),
        "certified": e.working.iter().map(|&(_, c)| c).collect::<Vec<_>>(),
        "hits_m_or_n": e.hits_extremes(),
    })
}

pub fn scan_report(a: &ScanArgs, s: &Settings) -> Result<(String, bool)> {
    no_dot(s)?;
    let n = s.rank;
    let spot = a.w.is_some() && a.m.is_some();
    let bound = if spot { s.max_rank.max(crate::config::SPOT_MAX_RANK) } else { s.max_rank };
    if n == 0 || n > bound {
        bail!("rank {n} is outside 1..={bound} for this scan");
    }
    let ws = match &a.w {
        Some(w) => vec![parse::weyl(n, w)?],
        None => WeylElt::all(n),
    };
    let ms: Vec<usize> = match a.m {
        Some(m) if (1..=n).contains(&m) => vec![m],
        Some(m) => bail!("m = {m} is outside 1..={n}"),
        None => (1..=n).collect(),
    };
    let r = scan(n, &ws, &ms, s.jobs)?;
    let bad: Vec<&ScanEntry> = r.counterexamples().collect();
    let ok = bad.is_empty() && r.all_certified();
    let text = match s.format {
        Format::Json => pretty(&json!({
            "rank": n,
            "instances": r.entries.len(),
            "counterexamples": bad.iter().map(|e| entry_json(e)).collect::<Vec<_>>(),
            "hits_m_or_n": r.extreme_hits(),
            "all_certified": r.all_certified(),
            "entries": r.entries.iter().map(entry_json).collect::<Vec<_>>(),
        })),
        Format::Latex => {
            let mut t = String::from("\\begin{longtable}{|l|c|c|} \\hline\n$w$ & $m$ & working $l$ \\\\ \\hline\n");
            for e in &r.entries {
                let ls: Vec<String> = e.ls().iter().map(|l| l.to_string()).collect();
                let _ = writeln!(t, "${}$ & {} & $\\{{{}\\}}$ \\\\", render::word_latex(&e.w), e.m, ls.join(", "));
            }
            t.push_str("\\hline\n\\end{longtable}\n");
            t
        }
        _ => {
            let mut t = format!(
                "scan n={n} instances={} counterexamples={} hits_m_or_n={}/{} certified={}\n",
                r.entries.len(),
                bad.len(),
                r.extreme_hits(),
                r.entries.len(),
                r.all_certified()
            );
            for e in &r.entries {
                let ls: Vec<String> = e.ls().iter().map(|l| l.to_string()).collect();
                let mark = match (e.is_counterexample(), e.hits_extremes()) {
                    (true, _) => "  COUNTEREXAMPLE",
                    (false, false) => "  outside {m,n}",
                    _ => "",
                };
                let _ = writeln!(t, "{} {} m={} l={{{}}}{mark}", render::word(&e.w), window(&e.w), e.m, ls.join(","));
            }
            if !bad.is_empty() {
                t.push_str("counterexamples (json):\n");
                t.push_str(&pretty(&Value::Array(bad.iter().map(|e| entry_json(e)).collect())));
            }
            t
        }
    };
    Ok((text, ok))
}
