//! Formal verification of the inverse Chevalley identities and of the
//! combinatorics used in their proofs.
//!
//! An identity `L = R` between combinations of `V_y^-(λ + μ)` with
//! `μ ∈ {0, ±ε_j}` is checked by rewriting every `μ ≠ 0` key through the
//! Chevalley expansion, bringing both sides over one product of atoms and
//! comparing numerators exactly. Equality of formal combinations is the
//! notion certified.

mod collapse;
mod involution;
mod scan;

use alloc::collections::BTreeMap;
use core::fmt;

use crate::alcove::ChainKind;
use crate::chevalley::{lhs_combo, Block, Engine, IdentitySpec, Term};
use crate::ring::{Atoms, Coeff, DemazureCombo, Key, Monomial, Specialized};
use crate::root::{Coroot, Letter, Weight};
use crate::weyl::{AffineElt, WeylElt};
use crate::Result;

pub use collapse::{collapse_check, collapse_sum, GroupAlgebraElt};
pub use involution::{check_involution, pair_involution, Involution, InvolutionReport};
pub use scan::{conjecture_scan, scan_instance, ConjectureScanResult, ScanEntry};

/// What a report certifies.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Instance {
    Identity(IdentitySpec),
    /// `Σ_{Γ_k(k)} (−1)^{|B|} V(λ+ε_k) = e^{wε_k} Σ_{Θ_k} (−1)^{|A|} V(λ)`.
    KeyFirst { w: WeylElt, k: usize },
    /// The second key identity with `λ` rebased to `λ' + ε_k`.
    KeySecond { w: WeylElt, k: usize },
    /// The second key identity with `V(λ − ε_k)` expanded directly.
    KeySecondDirect { w: WeylElt, k: usize },
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (name, w, k) = match self {
            Instance::Identity(s) => return write!(f, "{s}"),
            Instance::KeyFirst { w, k } => ("key-first", w, k),
            Instance::KeySecond { w, k } => ("key-second", w, k),
            Instance::KeySecondDirect { w, k } => ("key-second-direct", w, k),
        };
        write!(f, "{name} n={} w={} k={k}", w.rank(), crate::render::word(w))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Verified,
    Failed,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub instance: Instance,
    pub status: Status,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    /// The common denominator both sides were brought over.
    pub denominator: Atoms,
    /// `numerator(RHS) − numerator(LHS)`; empty iff verified.
    pub residual: DemazureCombo,
}

impl VerificationReport {
    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }
}

/// Both sides over a common denominator, with every key at `μ = 0`.
pub struct Cleared {
    pub lhs: DemazureCombo,
    pub rhs: DemazureCombo,
    pub denominator: Atoms,
}

fn merge(groups: &BTreeMap<Atoms, DemazureCombo>, den: &Atoms, n: usize) -> DemazureCombo {
    let mut out = DemazureCombo::new(n);
    for (g, c) in groups {
        out = out.add(&c.scale_coeff(&den.minus(g).product()));
    }
    out
}

/// Rewrites both sides in terms of `V_y^-(λ)` and clears denominators.
pub fn clear(engine: &mut Engine<'_>, lhs: &DemazureCombo, rhs: &DemazureCombo) -> Result<Cleared> {
    let n = engine.rank();
    let gl = engine.lower(lhs)?;
    let gr = engine.lower(rhs)?;
    let den = gl.keys().chain(gr.keys()).fold(Atoms::none(n), |a, b| a.lcm(b));
    Ok(Cleared {
        lhs: merge(&gl, &den, n),
        rhs: merge(&gr, &den, n),
        denominator: den,
    })
}

fn compare(engine: &mut Engine<'_>, instance: Instance, lhs: &DemazureCombo, rhs: &DemazureCombo, counts: (usize, usize)) -> Result<VerificationReport> {
    let c = clear(engine, lhs, rhs)?;
    let residual = c.rhs.sub(&c.lhs);
    Ok(VerificationReport {
        instance,
        status: if residual.is_empty() { Status::Verified } else { Status::Failed },
        lhs_terms: counts.0,
        rhs_terms: counts.1,
        denominator: c.denominator,
        residual,
    })
}

/// Checks the identity `spec` against its left-hand side.
pub fn verify_identity(engine: &mut Engine<'_>, spec: &IdentitySpec) -> Result<VerificationReport> {
    let rhs = engine.build(spec)?;
    let lhs = lhs_combo(spec);
    compare(engine, Instance::Identity(*spec), &lhs, &rhs.combo(), (lhs.len(), rhs.terms.len()))
}

pub fn verify_first_half(engine: &mut Engine<'_>, w: &WeylElt, m: usize) -> Result<VerificationReport> {
    verify_identity(engine, &IdentitySpec::first(*w, m)?)
}

pub fn verify_second_half(engine: &mut Engine<'_>, w: &WeylElt, m: usize) -> Result<VerificationReport> {
    verify_identity(engine, &IdentitySpec::second(*w, m)?)
}

/// `Σ_{A ∈ A(w, chain)} (−1)^{|A|} V_{ed(A) t_{down(A)}}^-(λ + μ)`.
fn signed_sum(engine: &mut Engine<'_>, w: &WeylElt, kind: ChainKind, mu: &Weight) -> Result<(DemazureCombo, usize)> {
    let n = engine.rank();
    let mut c = DemazureCombo::new(n);
    let subsets = engine.subsets(w, kind)?;
    for a in subsets {
        let sign = if a.len() % 2 == 0 { 1 } else { -1 };
        c.add_symbol(&AffineElt::new(a.end(), a.down), mu, &Coeff::term(Monomial::one(n), sign));
    }
    Ok((c, subsets.len()))
}

fn times_exp(c: &DemazureCombo, nu: &Weight) -> DemazureCombo {
    c.scale_coeff(&Coeff::term(Monomial::exp(nu), 1))
}

/// The three key-identity checks for `(w, k)`: the first, the second with
/// `λ` rebased, and the second with `V(λ − ε_k)` expanded directly.
pub fn verify_key_props(engine: &mut Engine<'_>, w: &WeylElt, k: usize) -> Result<[VerificationReport; 3]> {
    let n = engine.rank();
    crate::root::Letter::plain(k).check(n)?;
    let eps = Weight::unit(n, k);
    let we = w.act(&eps);
    let zero = Weight::zero(n);

    let (gamma_up, lg) = signed_sum(engine, w, ChainKind::Gamma(k), &eps)?;
    let (theta_0, lt) = signed_sum(engine, w, ChainKind::Theta(k), &zero)?;
    let first = compare(engine, Instance::KeyFirst { w: *w, k }, &gamma_up, &times_exp(&theta_0, &we), (lg, lt))?;
    let second = compare(engine, Instance::KeySecond { w: *w, k }, &theta_0, &times_exp(&gamma_up, &-we), (lt, lg))?;

    let (theta_down, _) = signed_sum(engine, w, ChainKind::Theta(k), &-eps)?;
    let (gamma_0, _) = signed_sum(engine, w, ChainKind::Gamma(k), &zero)?;
    let direct = compare(engine, Instance::KeySecondDirect { w: *w, k }, &theta_down, &times_exp(&gamma_0, &-we), (lt, lg))?;
    Ok([first, second, direct])
}

/// Checks that the cleared sides of `spec` also agree once `x_i = q^{λ_i}`
/// for the concrete `λ` (given in simple-coroot pairings).
pub fn specialization_agrees(engine: &mut Engine<'_>, spec: &IdentitySpec, lam: &[i32]) -> Result<bool> {
    specializations_agree(engine, spec, &[lam])
}

/// [`specialization_agrees`] at several `λ`, clearing denominators once.
pub fn specializations_agree<L: AsRef<[i32]>>(engine: &mut Engine<'_>, spec: &IdentitySpec, lams: &[L]) -> Result<bool> {
    let rhs = engine.build(spec)?.combo();
    let c = clear(engine, &lhs_combo(spec), &rhs)?;
    for lam in lams {
        let l: BTreeMap<Key, Specialized> = c.lhs.specialize(lam.as_ref())?;
        let r: BTreeMap<Key, Specialized> = c.rhs.specialize(lam.as_ref())?;
        if l != r {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff no two streamed terms carry the same key with opposite signs.
pub fn cancellation_certificate(terms: &[Term]) -> bool {
    let mut seen: BTreeMap<Key, i64> = BTreeMap::new();
    for t in terms {
        let s = t.sign.signum();
        if *seen.entry(t.key).or_insert(s) != s {
            return false;
        }
    }
    true
}

/// The distinct block shapes of `blocks`, as a multiset with signs.
pub fn block_multiset(blocks: &[Block]) -> BTreeMap<(Letter, WeylElt, Coroot), i64> {
    let mut out = BTreeMap::new();
    for b in blocks {
        *out.entry(b.shape()).or_insert(0) += b.sign;
    }
    out.retain(|_, v| *v != 0);
    out
}

#[cfg(test)]
mod tests;
