//! The units of work of a verification sweep.

use std::time::Instant;

use anyhow::Result;
use qalcove_core::chevalley::{Direction, Engine, IdentitySpec, Variant};
use qalcove_core::ring::DemazureCombo;
use qalcove_core::verify::{cancellation_certificate, specializations_agree, verify_identity, verify_key_props};
use qalcove_core::{AffineElt, WeylElt};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Check {
    Identity(IdentitySpec),
    /// The key propositions for `(w, k)`.
    Key { w: WeylElt, k: usize },
    /// The cancellation-free first half against the full one, plus the
    /// certificate on its term stream.
    CancelFree { x: AffineElt, m: usize },
}

/// Result of one check.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub label: String,
    pub passed: bool,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    pub denominator: String,
    /// Set on failure: `RHS − LHS` over the common denominator.
    pub residual: Option<DemazureCombo>,
    /// Concrete `λ` at which the check also passed after specializing.
    pub specialized: usize,
    pub certificate: Option<bool>,
    pub seconds: f64,
}

fn outcome(label: String, passed: bool, counts: (usize, usize), denominator: String, residual: DemazureCombo) -> Outcome {
    Outcome {
        label,
        passed,
        lhs_terms: counts.0,
        rhs_terms: counts.1,
        denominator,
        residual: (!residual.is_empty()).then_some(residual),
        specialized: 0,
        certificate: None,
        seconds: 0.0,
    }
}

/// Runs `check`; identities are also specialized at every `λ` in `lams`.
pub fn run(engine: &mut Engine<'_>, check: &Check, lams: &[Vec<i32>]) -> Result<Vec<Outcome>> {
    let start = Instant::now();
    let mut out = match check {
        Check::Identity(spec) => {
            let r = verify_identity(engine, spec)?;
            let mut o = outcome(
                r.instance.to_string(),
                r.is_verified(),
                (r.lhs_terms, r.rhs_terms),
                r.denominator.to_string(),
                r.residual,
            );
            if o.passed && !lams.is_empty() {
                if specializations_agree(engine, spec, lams)? {
                    o.specialized = lams.len();
                } else {
                    o.passed = false;
                    o.label.push_str(" (specialization)");
                }
            }
            vec![o]
        }
        Check::Key { w, k } => verify_key_props(engine, w, *k)?
            .into_iter()
            .map(|r| {
                outcome(
                    r.instance.to_string(),
                    r.is_verified(),
                    (r.lhs_terms, r.rhs_terms),
                    r.denominator.to_string(),
                    r.residual,
                )
            })
            .collect(),
        Check::CancelFree { x, m } => {
            let full = engine.build(&IdentitySpec::new(*x, *m, Direction::Plus, Variant::Full)?)?;
            let spec = IdentitySpec::new(*x, *m, Direction::Plus, Variant::CancelFree)?;
            let cf = engine.build(&spec)?;
            let residual = cf.combo().sub(&full.combo());
            let cert = cancellation_certificate(&cf.terms);
            let mut o = outcome(
                format!("{spec} vs full"),
                residual.is_empty() && cert,
                (full.terms.len(), cf.terms.len()),
                "1".into(),
                residual,
            );
            o.certificate = Some(cert);
            vec![o]
        }
    };
    let secs = start.elapsed().as_secs_f64() / out.len() as f64;
    for o in &mut out {
        o.seconds = secs;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use qalcove_core::qbg::Qbg;

    #[test]
    fn each_kind_passes_on_a_small_case() {
        let g = Qbg::new(2).unwrap();
        let mut eng = Engine::new(&g);
        let w = WeylElt::parse(2, "s1 s2").unwrap();
        let lams = vec![vec![1, 2]];
        let checks = [
            Check::Identity(IdentitySpec::first(w, 2).unwrap()),
            Check::Identity(IdentitySpec::second(w, 1).unwrap()),
            Check::Key { w, k: 2 },
            Check::CancelFree { x: AffineElt::finite(w), m: 2 },
        ];
        let mut n = 0;
        for c in &checks {
            for o in run(&mut eng, c, &lams).unwrap() {
                assert!(o.passed && o.residual.is_none(), "{}", o.label);
                n += 1;
            }
        }
        assert_eq!(n, 6);
    }
}
