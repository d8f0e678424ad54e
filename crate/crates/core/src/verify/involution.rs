//! The sign-reversing involution on pairs `(B, A1)` with
//! `B ∈ A(w, Γ_k(k))` and `A1 ∈ A(ed(B), Γ*_k(k))`.
//!
//! Both chains are indexed by rank in `Γ*_k(k)`: position `p` of `Γ_k(k)`
//! carries the root at rank `L − 1 − p`, so `max B` in `Γ_k(k)` order is the
//! least rank of `B`. Rank 0 is the simple root `α_k`.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use crate::alcove::{make_chain, AdmissibleSubset, ChainKind};
use crate::chevalley::Engine;
use crate::weyl::WeylElt;
use crate::{Error, Result};

/// `ι(B, A1) = (B', A1')` with the case `1..=6` that applied. Positions are
/// 0-based, `b` in `Γ_k(k)` and `a1` in `Γ*_k(k)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Involution {
    pub b: Vec<usize>,
    pub a1: Vec<usize>,
    pub case: u8,
}

enum Move {
    BToA(usize),
    AToB(usize),
}

/// Cases 1 and 2 of the involution on rank sets.
fn rule(b: &BTreeSet<usize>, a: &BTreeSet<usize>) -> Option<Move> {
    match (b.first(), a.first()) {
        (Some(&x), Some(&y)) if x < y => Some(Move::BToA(x)),
        (Some(&x), None) => Some(Move::BToA(x)),
        (Some(&x), Some(&y)) if x > y => Some(Move::AToB(y)),
        (None, Some(&y)) => Some(Move::AToB(y)),
        _ => None,
    }
}

fn find<'a>(set: &'a [AdmissibleSubset], positions: &[usize]) -> Option<&'a AdmissibleSubset> {
    set.iter().find(|a| a.positions == positions)
}

/// Applies `ι` to `(B, A1)`.
///
/// Errors if the input is not in the pair set, if the ranks tie anywhere
/// other than at `α_k`, or if the image falls outside the pair set.
pub fn pair_involution(engine: &mut Engine<'_>, w: &WeylElt, k: usize, b: &[usize], a1: &[usize]) -> Result<Involution> {
    let len = make_chain(ChainKind::GammaStar(k), engine.rank())?.len();
    let bs = engine.subsets(w, ChainKind::Gamma(k))?;
    let b_sub = find(bs, b).ok_or_else(|| Error::Precondition(alloc::format!("B = {b:?} is not admissible")))?;
    let mid = b_sub.end();
    if find(engine.subsets(&mid, ChainKind::GammaStar(k))?, a1).is_none() {
        return Err(Error::Precondition(alloc::format!("A1 = {a1:?} is not admissible")));
    }
    let mut br: BTreeSet<usize> = b.iter().map(|p| len - 1 - p).collect();
    let mut ar: BTreeSet<usize> = a1.iter().copied().collect();

    let tie = |x: Option<&usize>| Error::Precondition(alloc::format!("ranks tie at {x:?} outside alpha_k"));
    let (mv, case) = match rule(&br, &ar) {
        Some(Move::BToA(x)) => (Some(Move::BToA(x)), 1),
        Some(Move::AToB(y)) => (Some(Move::AToB(y)), 2),
        None if br.is_empty() => (None, 6),
        None if br.first() != Some(&0) => return Err(tie(br.first())),
        None => {
            let b0: BTreeSet<usize> = br.iter().copied().filter(|&r| r != 0).collect();
            let a0: BTreeSet<usize> = ar.iter().copied().filter(|&r| r != 0).collect();
            match rule(&b0, &a0) {
                Some(Move::BToA(x)) => (Some(Move::BToA(x)), 3),
                Some(Move::AToB(y)) => (Some(Move::AToB(y)), 4),
                None if b0.is_empty() => (None, 5),
                None => return Err(tie(b0.first())),
            }
        }
    };
    match mv {
        Some(Move::BToA(x)) => {
            br.remove(&x);
            ar.insert(x);
        }
        Some(Move::AToB(y)) => {
            ar.remove(&y);
            br.insert(y);
        }
        None => {}
    }
    let mut nb: Vec<usize> = br.iter().map(|r| len - 1 - r).collect();
    nb.sort_unstable();
    let na: Vec<usize> = ar.into_iter().collect();

    let bs = engine.subsets(w, ChainKind::Gamma(k))?;
    let nb_sub = find(bs, &nb).ok_or_else(|| Error::Precondition(alloc::format!("image B' = {nb:?} is not admissible")))?;
    let nmid = nb_sub.end();
    if find(engine.subsets(&nmid, ChainKind::GammaStar(k))?, &na).is_none() {
        return Err(Error::Precondition(alloc::format!("image A1' = {na:?} is not admissible")));
    }
    Ok(Involution { b: nb, a1: na, case })
}

/// Outcome of running the involution over the whole pair set for `(w, k)`.
#[derive(Clone, Debug, Default)]
pub struct InvolutionReport {
    pub pairs: usize,
    /// How many pairs fell in each of the cases 1 to 6.
    pub cases: [usize; 6],
    pub failures: Vec<String>,
}

impl InvolutionReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty() && self.cases.iter().sum::<usize>() == self.pairs
    }
}

/// Checks that `ι` is an involution on the pair set that preserves
/// `down(B) + down(A1)` and `ed(A1)`, changes `|B|` by one in cases 1 to 4
/// and fixes exactly the pairs of cases 5 and 6.
pub fn check_involution(engine: &mut Engine<'_>, w: &WeylElt, k: usize) -> Result<InvolutionReport> {
    let mut report = InvolutionReport::default();
    let bs: Vec<AdmissibleSubset> = engine.subsets(w, ChainKind::Gamma(k))?.to_vec();
    for b in &bs {
        let a1s: Vec<AdmissibleSubset> = engine.subsets(&b.end(), ChainKind::GammaStar(k))?.to_vec();
        for a in &a1s {
            report.pairs += 1;
            let tag = alloc::format!("w={w} k={k} B={:?} A1={:?}", b.positions, a.positions);
            let img = match pair_involution(engine, w, k, &b.positions, &a.positions) {
                Ok(i) => i,
                Err(e) => {
                    report.failures.push(alloc::format!("{tag}: {e}"));
                    continue;
                }
            };
            report.cases[img.case as usize - 1] += 1;
            let nb = find(engine.subsets(w, ChainKind::Gamma(k))?, &img.b).cloned().expect("checked by pair_involution");
            let na = find(engine.subsets(&nb.end(), ChainKind::GammaStar(k))?, &img.a1)
                .cloned()
                .expect("checked by pair_involution");
            let fixed = img.b == b.positions && img.a1 == a.positions;
            let ok = match img.case {
                1 | 3 => nb.len() + 1 == b.len(),
                2 | 4 => nb.len() == b.len() + 1,
                _ => fixed,
            } && nb.down + na.down == b.down + a.down
                && na.end() == a.end();
            if !ok {
                report.failures.push(alloc::format!("{tag}: case {} invariants fail", img.case));
                continue;
            }
            match pair_involution(engine, w, k, &img.b, &img.a1) {
                Ok(back) if back.b == b.positions && back.a1 == a.positions => {}
                _ => report.failures.push(alloc::format!("{tag}: not an involution")),
            }
        }
    }
    Ok(report)
}
