use std::fmt::Write;
use std::time::Instant;

use anyhow::{bail, Result};
use qalcove_core::chevalley::{Direction, Engine, IdentitySpec, Variant};
use qalcove_core::qbg::Qbg;
use qalcove_core::render;
use qalcove_core::{AffineElt, Coroot, WeylElt};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};

use super::{combo_json, indent, no_dot, pretty};
use crate::checks::{self, Check, Outcome};
use crate::cli::{CheckKind, Format, VerifyArgs};
use crate::config::{Settings, SPOT_MAX_RANK};
use crate::{parse, pool};

/// Specializations per identity unless `--specialize` says otherwise.
pub const DEFAULT_SPECIALIZE: usize = 3;

/// The checks of a sweep, in report order.
#[derive(Clone, Debug)]
pub struct Plan {
    pub n: usize,
    pub pairs: Vec<(WeylElt, usize)>,
    pub checks: Vec<Check>,
    pub lams: Vec<Vec<i32>>,
}

/// Expands the arguments into checks. Everything random comes from `seed`.
pub fn plan(a: &VerifyArgs, s: &Settings) -> Result<Plan> {
    let n = s.rank;
    let spot = a.w.is_some() && a.m.is_some();
    let bound = if spot || a.sample.is_some() { SPOT_MAX_RANK.max(s.max_rank) } else { s.max_rank };
    if n == 0 || n > bound {
        bail!("rank {n} is outside 1..={bound} for this sweep (see --max-rank, --sample)");
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
    let mut pairs: Vec<(WeylElt, usize)> = ws.iter().flat_map(|w| ms.iter().map(move |&m| (*w, m))).collect();
    let mut rng = StdRng::seed_from_u64(s.seed);
    if let Some(k) = a.sample {
        if k < pairs.len() {
            let mut idx = rand::seq::index::sample(&mut rng, pairs.len(), k).into_vec();
            idx.sort_unstable();
            pairs = idx.into_iter().map(|i| pairs[i]).collect();
        }
    }
    let lams: Vec<Vec<i32>> = (0..a.specialize.unwrap_or(DEFAULT_SPECIALIZE))
        .map(|_| (0..n).map(|_| rng.gen_range(0..=4)).collect())
        .collect();
    let mut kinds = a.check.clone();
    if kinds.is_empty() {
        kinds = vec![CheckKind::First, CheckKind::Second, CheckKind::Key, CheckKind::CancelFree];
    }
    kinds.sort();
    kinds.dedup();
    let mut checks = Vec::new();
    for &(w, m) in &pairs {
        let mut xs = vec![AffineElt::finite(w)];
        if a.translate {
            let xi: Vec<i32> = (0..n).map(|_| rng.gen_range(-2..=2)).collect();
            xs.push(AffineElt::new(w, Coroot::from_alpha_coords(&xi)));
        }
        for kind in &kinds {
            match kind {
                CheckKind::Key => checks.push(Check::Key { w, k: m }),
                CheckKind::First | CheckKind::Second => {
                    let dir = if *kind == CheckKind::First { Direction::Plus } else { Direction::Minus };
                    for x in &xs {
                        checks.push(Check::Identity(IdentitySpec::new(*x, m, dir, Variant::Full)?));
                    }
                }
                CheckKind::CancelFree => {
                    for x in &xs {
                        checks.push(Check::CancelFree { x: *x, m });
                    }
                }
            }
        }
    }
    Ok(Plan { n, pairs, checks, lams })
}

/// Runs a plan on `jobs` workers; outcomes come back in plan order.
pub fn execute(p: &Plan, jobs: usize) -> Result<Vec<Outcome>> {
    let g = Qbg::new(p.n)?;
    let results = pool::run(&p.checks, jobs, || Engine::new(&g), |eng, c| checks::run(eng, c, &p.lams));
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

pub fn verify_report(a: &VerifyArgs, s: &Settings) -> Result<(String, bool)> {
    no_dot(s)?;
    let p = plan(a, s)?;
    let start = Instant::now();
    let outcomes = execute(&p, s.jobs)?;
    let wall = start.elapsed().as_secs_f64();
    let passed = outcomes.iter().filter(|o| o.passed).count();
    let ok = passed == outcomes.len();
    let text = match s.format {
        Format::Json => json_report(&p, &outcomes, s, wall),
        Format::Latex => latex_report(&p, &outcomes),
        _ => text_report(&p, &outcomes, s, wall),
    };
    Ok((text, ok))
}

fn text_report(p: &Plan, outcomes: &[Outcome], s: &Settings, wall: f64) -> String {
    let mut t = format!(
        "verify n={} instances={} checks={} specializations={} seed={}\n",
        p.n,
        p.pairs.len(),
        outcomes.len(),
        p.lams.len(),
        s.seed
    );
    for o in outcomes {
        let _ = write!(
            t,
            "{:<4} {}  lhs={} rhs={} den={}",
            if o.passed { "ok" } else { "FAIL" },
            o.label,
            o.lhs_terms,
            o.rhs_terms,
            o.denominator
        );
        if o.specialized > 0 {
            let _ = write!(t, " specialized={}", o.specialized);
        }
        if let Some(c) = o.certificate {
            let _ = write!(t, " certificate={c}");
        }
        if s.timing {
            let _ = write!(t, " {:.3}s", o.seconds);
        }
        t.push('\n');
        if let Some(r) = &o.residual {
            t.push_str("  residual:\n");
            t.push_str(&indent(&render::combo_text(r), "    "));
            t.push_str("  residual (LaTeX):\n");
            t.push_str(&indent(&render::combo_latex(r), "    "));
        }
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    let _ = write!(t, "passed {passed}/{}", outcomes.len());
    if s.timing {
        let _ = write!(t, " in {wall:.2}s with {} jobs", s.jobs);
    }
    t.push('\n');
    t
}

fn json_report(p: &Plan, outcomes: &[Outcome], s: &Settings, wall: f64) -> String {
    let results: Vec<Value> = outcomes
        .iter()
        .map(|o| {
            let mut v = json!({
                "instance": o.label,
                "status": if o.passed { "verified" } else { "failed" },
                "lhs_terms": o.lhs_terms,
                "rhs_terms": o.rhs_terms,
                "denominator": o.denominator,
                "specialized": o.specialized,
            });
            if let Some(c) = o.certificate {
                v["certificate"] = json!(c);
            }
            if let Some(r) = &o.residual {
                v["residual"] = combo_json(r);
            }
            if s.timing {
                v["seconds"] = json!(o.seconds);
            }
            v
        })
        .collect();
    let passed = outcomes.iter().filter(|o| o.passed).count();
    let mut summary = json!({ "checks": outcomes.len(), "passed": passed, "failed": outcomes.len() - passed });
    if s.timing {
        summary["seconds"] = json!(wall);
        summary["jobs"] = json!(s.jobs);
    }
    pretty(&json!({
        "rank": p.n,
        "seed": s.seed,
        "instances": p.pairs.len(),
        "lambdas": p.lams,
        "results": results,
        "summary": summary,
    }))
}

fn latex_report(p: &Plan, outcomes: &[Outcome]) -> String {
    let mut t = format!("% verify n={}\n\\begin{{longtable}}{{|l|c|r|r|}} \\hline\ninstance & status & LHS & RHS \\\\ \\hline\n", p.n);
    for o in outcomes {
        let _ = writeln!(
            t,
            "\\verb|{}| & {} & {} & {} \\\\",
            o.label,
            if o.passed { "verified" } else { "\\textbf{failed}" },
            o.lhs_terms,
            o.rhs_terms
        );
    }
    t.push_str("\\hline\n\\end{longtable}\n");
    for o in outcomes {
        if let Some(r) = &o.residual {
            let _ = write!(t, "\n% residual of {}\n\\begin{{align*}}\n{}\n\\end{{align*}}\n", o.label, render::combo_latex(r));
        }
    }
    t
}
