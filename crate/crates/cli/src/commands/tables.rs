use std::fmt::Write;

use anyhow::{bail, Result};
use qalcove_core::chevalley::{filtered_table, Engine, TableRow};
use qalcove_core::qbg::Qbg;
use qalcove_core::render;
use qalcove_core::{Letter, WeylElt};
use serde_json::{json, Value};

use super::{no_dot, pretty};
use crate::cli::{Format, TablesArgs};
use crate::config::Settings;
use crate::parse;

/// A start point whose table is printed by default at rank 3.
#[derive(Clone, Copy, Debug)]
pub struct ExampleTable {
    pub word: &'static str,
    pub from: Letter,
}

/// The first-half example and the two second-half examples.
pub fn example_tables() -> [ExampleTable; 3] {
    [
        ExampleTable { word: "s1s2s1", from: Letter::plain(3) },
        ExampleTable { word: "s3s2", from: Letter::barred(2) },
        ExampleTable { word: "s1s2s3s2s1", from: Letter::barred(1) },
    ]
}

fn row_json(r: &TableRow) -> Value {
    json!({
        "label": format!("A{}", r.label),
        "set": r.positions,
        "w": render::word(&r.base),
        "from": r.from.to_string(),
        "to": r.to.to_string(),
        "ed": render::word(&r.ed),
        "down": render::coroot(&r.down),
    })
}

pub fn tables_report(a: &TablesArgs, s: &Settings) -> Result<String> {
    no_dot(s)?;
    let n = s.rank;
    let starts: Vec<(WeylElt, Letter)> = match (&a.w, &a.from) {
        (Some(w), Some(c)) => vec![(parse::weyl(n, w)?, parse::letter(n, c)?)],
        (None, None) if n == 3 => example_tables()
            .iter()
            .map(|t| Ok((parse::weyl(n, t.word)?, t.from)))
            .collect::<Result<_>>()?,
        (None, None) => bail!("the built-in tables are at rank 3; give --w and --from for rank {n}"),
        _ => bail!("--w and --from go together"),
    };
    let g = Qbg::new(n)?;
    let mut eng = Engine::new(&g);
    let mut tables = Vec::new();
    for (w, c) in &starts {
        tables.push((*w, *c, filtered_table(&mut eng, w, *c)?));
    }
    Ok(match s.format {
        Format::Json => pretty(&Value::Array(
            tables
                .iter()
                .map(|(w, c, rows)| {
                    json!({ "w": render::word(w), "from": c.to_string(), "rows": rows.iter().map(row_json).collect::<Vec<_>>() })
                })
                .collect(),
        )),
        Format::Latex => tables
            .iter()
            .map(|(w, c, rows)| format!("% w={} from={c}\n{}", render::word(w), render::table_latex(rows)))
            .collect::<Vec<_>>()
            .join("\n"),
        _ => {
            let mut t = String::new();
            for (i, (w, c, rows)) in tables.iter().enumerate() {
                if i > 0 {
                    t.push('\n');
                }
                let _ = writeln!(t, "# table {}: w={} from={c}", i + 1, render::word(w));
                t.push_str(&render::table_text(rows));
            }
            t
        }
    })
}
