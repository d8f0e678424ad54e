use anyhow::Result;
use qalcove_core::chevalley::{filtered_table, Direction, Engine, IdentitySpec, Sign};
use qalcove_core::qbg::Qbg;
use qalcove_core::render;
use qalcove_core::{AffineElt, Coroot};
use serde_json::json;

use super::{combo_json, no_dot, pretty};
use crate::cli::{ChevalleyArgs, Format, Half, IdentityArgs, SignArg};
use crate::config::Settings;
use crate::parse;

pub fn chevalley_report(a: &ChevalleyArgs, s: &Settings) -> Result<String> {
    no_dot(s)?;
    let n = s.rank;
    let w = parse::weyl(n, &a.w)?;
    let g = Qbg::new(n)?;
    let mut eng = Engine::new(&g);
    let sign = match a.sign {
        SignArg::Plus => Sign::Plus,
        SignArg::Minus => Sign::Minus,
    };
    let e = eng.expansion(&w, sign, a.k)?;
    let pm = if sign == Sign::Plus { '+' } else { '-' };
    let lhs = format!("V[{}](λ{pm}ε{})", render::word(&w), a.k);
    Ok(match s.format {
        Format::Json => pretty(&json!({
            "expand": lhs,
            "denominator": e.atoms.to_string(),
            "numerator": combo_json(&e.numerator),
        })),
        Format::Latex => format!(
            "% {lhs} times {}\n\\begin{{align*}}\n{}\n\\end{{align*}}\n",
            e.atoms,
            render::combo_latex(&e.numerator)
        ),
        _ => format!("{lhs} = 1/[{}] * (\n{}\n)\n", e.atoms, render::combo_text(&e.numerator)),
    })
}

pub fn identity_report(a: &IdentityArgs, s: &Settings) -> Result<String> {
    no_dot(s)?;
    let n = s.rank;
    let w = parse::weyl(n, &a.w)?;
    let xi = match &a.xi {
        Some(t) => parse::coroot(n, t)?,
        None => Coroot::zero(n),
    };
    let dir = match a.half {
        Half::First => Direction::Plus,
        Half::Second => Direction::Minus,
    };
    let spec = IdentitySpec::new(AffineElt::new(w, xi), a.m, dir, parse::variant(&a.variant)?)?;
    let g = Qbg::new(n)?;
    let mut eng = Engine::new(&g);
    let rhs = eng.build(&spec)?;
    let blocks = if a.raw { rhs.blocks.clone() } else { rhs.surviving_blocks() };
    let rows = filtered_table(&mut eng, &w, spec.letter())?;
    Ok(match s.format {
        Format::Json => {
            let bs: Vec<_> = blocks
                .iter()
                .map(|b| {
                    let labels = render::history_labels(&rows, &w, spec.letter(), &b.history);
                    json!({
                        "sign": b.sign,
                        "letter": b.letter.to_string(),
                        "start": render::word(&b.start),
                        "shift": render::coroot(&(b.shift + xi)),
                        "labels": labels.iter().map(|l| l.map(|v| format!("A{v}"))).collect::<Vec<_>>(),
                        "display": render::block_text(b, &xi),
                    })
                })
                .collect();
            pretty(&json!({
                "identity": spec.to_string(),
                "lhs": render::spec_title(&spec),
                "blocks": bs,
                "terms": rhs.terms.len(),
                "combo": combo_json(&rhs.combo()),
            }))
        }
        Format::Latex => render::rhs_latex(&rhs, &blocks),
        _ => render::rhs_text(&rhs, &blocks, Some(&rows)),
    })
}
