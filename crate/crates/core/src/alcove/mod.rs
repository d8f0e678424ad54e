//! Chains of roots, alcove walks and admissible subsets.

mod admissible;
mod walk;

use alloc::vec::Vec;
use core::fmt;

use crate::root::{check_rank, Root, Weight};
use crate::{Error, Result};

pub use admissible::{admissible_subsets, filtered_a, split_stats, AdmissibleSubset, Split};
pub use walk::{alcove_walk, alcove_walk_from, reducedness_check, separating_count, AlcovePoint, AlcoveWalk};

/// The named chains; `k` is the index `1..=n`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ChainKind {
    /// `Γ_k(k)`.
    Gamma(usize),
    /// `Γ*_k(k)`.
    GammaStar(usize),
    /// `Θ_k`.
    Theta(usize),
    /// `Θ*_k`.
    ThetaStar(usize),
    /// `Γ_{k−1,k} = Γ*_k(k) ∗ Θ_k`, an `ε_k`-chain.
    Pair(usize),
    /// `Γ*_{k−1,k} = Θ*_k ∗ Γ_k(k)`, a `(−ε_k)`-chain.
    PairStar(usize),
    Custom,
}

impl ChainKind {
    pub fn index(&self) -> Option<usize> {
        match *self {
            ChainKind::Gamma(k)
            | ChainKind::GammaStar(k)
            | ChainKind::Theta(k)
            | ChainKind::ThetaStar(k)
            | ChainKind::Pair(k)
            | ChainKind::PairStar(k) => Some(k),
            ChainKind::Custom => None,
        }
    }

    /// The six named kinds for a given `k`.
    pub fn all(k: usize) -> [ChainKind; 6] {
        [
            ChainKind::Gamma(k),
            ChainKind::GammaStar(k),
            ChainKind::Theta(k),
            ChainKind::ThetaStar(k),
            ChainKind::Pair(k),
            ChainKind::PairStar(k),
        ]
    }
}

impl fmt::Display for ChainKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ChainKind::Gamma(k) => write!(f, "Gamma_{k}({k})"),
            ChainKind::GammaStar(k) => write!(f, "Gamma*_{k}({k})"),
            ChainKind::Theta(k) => write!(f, "Theta_{k}"),
            ChainKind::ThetaStar(k) => write!(f, "Theta*_{k}"),
            ChainKind::Pair(k) => write!(f, "Gamma_{{{},{k}}}", k - 1),
            ChainKind::PairStar(k) => write!(f, "Gamma*_{{{},{k}}}", k - 1),
            ChainKind::Custom => f.write_str("custom"),
        }
    }
}

/// A sequence of signed roots.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootChain {
    n: usize,
    kind: ChainKind,
    entries: Vec<Root>,
    mu: Option<Weight>,
}

fn gamma_star(n: usize, k: usize) -> Vec<Root> {
    let mut v = Vec::with_capacity(2 * n - k);
    v.extend((k + 1..=n).map(|j| Root::diff(k, j)));
    v.push(Root::long(k));
    v.extend((k + 1..=n).rev().map(|j| Root::sum(k, j)));
    v.extend((1..k).rev().map(|i| Root::sum(i, k)));
    v
}

fn theta_star(k: usize) -> Vec<Root> {
    (1..k).rev().map(|i| Root::diff(i, k)).collect()
}

fn reverse_negate(v: Vec<Root>) -> Vec<Root> {
    v.into_iter().rev().map(|r| -r).collect()
}

/// Builds one of the named chains.
pub fn make_chain(kind: ChainKind, n: usize) -> Result<RootChain> {
    check_rank(n)?;
    let k = kind
        .index()
        .ok_or_else(|| Error::Precondition("custom chains are built with RootChain::custom".into()))?;
    if k == 0 || k > n {
        return Err(Error::IndexOutOfRange {
            index: k as i32,
            rank: n,
        });
    }
    let (entries, mu) = match kind {
        ChainKind::GammaStar(_) => (gamma_star(n, k), None),
        ChainKind::Gamma(_) => (reverse_negate(gamma_star(n, k)), None),
        ChainKind::ThetaStar(_) => (theta_star(k), None),
        ChainKind::Theta(_) => (reverse_negate(theta_star(k)), None),
        ChainKind::Pair(_) => {
            let mut v = gamma_star(n, k);
            v.extend(reverse_negate(theta_star(k)));
            (v, Some(Weight::unit(n, k)))
        }
        ChainKind::PairStar(_) => {
            let mut v = theta_star(k);
            v.extend(reverse_negate(gamma_star(n, k)));
            (v, Some(-Weight::unit(n, k)))
        }
        ChainKind::Custom => unreachable!(),
    };
    Ok(RootChain { n, kind, entries, mu })
}

impl RootChain {
    /// A user-supplied chain; `mu` marks it as a `μ`-chain.
    pub fn custom(n: usize, entries: Vec<Root>, mu: Option<Weight>) -> Result<Self> {
        check_rank(n)?;
        if let Some(m) = &mu {
            if m.rank() != n {
                return Err(Error::RankMismatch {
                    expected: n,
                    found: m.rank(),
                });
            }
        }
        Ok(RootChain {
            n,
            kind: ChainKind::Custom,
            entries,
            mu,
        })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> ChainKind {
        self.kind
    }

    pub fn entries(&self) -> &[Root] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The chain weight `μ` for `μ`-chains.
    pub fn mu(&self) -> Option<Weight> {
        self.mu
    }

    /// The chain that the named one follows inside `Γ_{k−1,k}` or
    /// `Γ*_{k−1,k}`: `Γ*_k(k)` before `Θ_k`, `Θ*_k` before `Γ_k(k)`.
    pub fn prefix(&self) -> Option<RootChain> {
        match self.kind {
            ChainKind::Theta(k) => make_chain(ChainKind::GammaStar(k), self.n).ok(),
            ChainKind::Gamma(k) => make_chain(ChainKind::ThetaStar(k), self.n).ok(),
            _ => None,
        }
    }

    /// `self ∗ other`, untagged.
    pub fn concat(&self, other: &RootChain) -> RootChain {
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        RootChain {
            n: self.n,
            kind: ChainKind::Custom,
            entries,
            mu: None,
        }
    }
}
