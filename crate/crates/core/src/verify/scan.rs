//! The experiment over the truncation index `l` of the conjectural
//! second-half form.

use alloc::vec::Vec;

use super::cancellation_certificate;
use crate::chevalley::{Direction, Engine, IdentitySpec, Variant};
use crate::weyl::{AffineElt, WeylElt};
use crate::Result;

/// The working `l` for one `(w, m)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScanEntry {
    pub w: WeylElt,
    pub m: usize,
    /// Every `l ∈ [m, n]` whose conjectural form equals the second-half
    /// right-hand side, with its cancellation certificate.
    pub working: Vec<(usize, bool)>,
}

impl ScanEntry {
    pub fn ls(&self) -> Vec<usize> {
        self.working.iter().map(|&(l, _)| l).collect()
    }

    pub fn is_counterexample(&self) -> bool {
        self.working.is_empty()
    }

    /// Whether some working `l` is `m` or `n`.
    pub fn hits_extremes(&self) -> bool {
        let n = self.w.rank();
        self.working.iter().any(|&(l, _)| l == self.m || l == n)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConjectureScanResult {
    pub n: usize,
    pub entries: Vec<ScanEntry>,
}

impl ConjectureScanResult {
    pub fn counterexamples(&self) -> impl Iterator<Item = &ScanEntry> {
        self.entries.iter().filter(|e| e.is_counterexample())
    }

    /// Number of instances where `{m, n}` meets the working set.
    pub fn extreme_hits(&self) -> usize {
        self.entries.iter().filter(|e| e.hits_extremes()).count()
    }

    /// Whether every working `l` came with a certificate.
    pub fn all_certified(&self) -> bool {
        self.entries.iter().all(|e| e.working.iter().all(|&(_, c)| c))
    }
}

/// Tries every `l ∈ [m, n]` for `(w, m)`.
pub fn scan_instance(engine: &mut Engine<'_>, w: &WeylElt, m: usize) -> Result<ScanEntry> {
    let n = engine.rank();
    let x = AffineElt::finite(*w);
    let full = engine.build(&IdentitySpec::new(x, m, Direction::Minus, Variant::Full)?)?.combo();
    let mut working = Vec::new();
    for l in m..=n {
        let conj = engine.build(&IdentitySpec::new(x, m, Direction::Minus, Variant::Conjecture(l))?)?;
        if conj.combo() == full {
            working.push((l, cancellation_certificate(&conj.terms)));
        }
    }
    Ok(ScanEntry { w: *w, m, working })
}

/// Scans every `(w, m)` at rank `n`, in index order of `w`.
pub fn conjecture_scan(engine: &mut Engine<'_>) -> Result<ConjectureScanResult> {
    let n = engine.rank();
    let mut entries = Vec::new();
    for w in WeylElt::all(n) {
        for m in 1..=n {
            entries.push(scan_instance(engine, &w, m)?);
        }
    }
    Ok(ConjectureScanResult { n, entries })
}
