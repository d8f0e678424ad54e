//! Alcove walks by exact geometry.
//!
//! An alcove is tracked through one interior point stored as an integer
//! weight `X`, standing for the real point `X / 2n`. The fundamental alcove
//! contains `ρ / 2n`, since `0 < ⟨ρ, α^∨⟩ ≤ 2n − 1` for every positive root.
//! Affine reflections keep `X` integral and generic, so the alcove containing
//! the point is determined by the floors `⌊⟨X, α^∨⟩ / 2n⌋`.

use alloc::vec::Vec;

use super::RootChain;
use crate::root::{pair, Root, Weight};
use crate::{Error, Result};

/// An alcove, represented by a scaled interior point.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlcovePoint {
    n: usize,
    x: Weight,
}

impl AlcovePoint {
    /// The fundamental alcove `A_∘`.
    pub fn fundamental(n: usize) -> Self {
        AlcovePoint {
            n,
            x: Weight::rho(n),
        }
    }

    fn scale(&self) -> i32 {
        2 * self.n as i32
    }

    /// `A + ν`.
    pub fn translate(&self, nu: &Weight) -> Self {
        AlcovePoint {
            n: self.n,
            x: self.x + self.scale() * *nu,
        }
    }

    /// `⌊⟨x, α^∨⟩⌋` for a positive root `α`.
    pub fn floor(&self, alpha: &Root) -> i32 {
        pair(&self.x, &alpha.coroot(self.n)).div_euclid(self.scale())
    }

    /// Floors over all positive roots; two alcoves are equal iff these agree.
    pub fn floors(&self) -> Vec<i32> {
        Root::positive_roots(self.n)
            .iter()
            .map(|a| self.floor(a))
            .collect()
    }

    /// Reflection in `H_{α,c}` for a positive root `α`.
    fn reflect(&self, alpha: &Root, c: i32) -> Self {
        let v = pair(&self.x, &alpha.coroot(self.n)) - self.scale() * c;
        AlcovePoint {
            n: self.n,
            x: self.x - v * alpha.weight(self.n),
        }
    }

    /// The weight `ν` with `self = A_∘ + ν`, if this alcove is such a translate.
    pub fn translate_of_fundamental(&self) -> Option<Weight> {
        let coords: Vec<i32> = (1..=self.n)
            .map(|i| self.floor(&Root::long(i)))
            .collect();
        let nu = Weight::from_coords(&coords);
        (AlcovePoint::fundamental(self.n).translate(&nu).floors() == self.floors()).then_some(nu)
    }
}

/// Number of affine hyperplanes separating two alcoves.
pub fn separating_count(a: &AlcovePoint, b: &AlcovePoint) -> usize {
    a.floors()
        .iter()
        .zip(b.floors())
        .map(|(x, y)| x.abs_diff(y) as usize)
        .sum()
}

/// The walk of a chain: visited alcoves and the level of every crossed wall.
#[derive(Clone, Debug)]
pub struct AlcoveWalk {
    /// `l_t` with the wall of step `t` inside `H_{γ_t, −l_t}`.
    pub levels: Vec<i32>,
    /// `A_0, A_1, ..., A_r`.
    pub alcoves: Vec<AlcovePoint>,
}

impl AlcoveWalk {
    pub fn start(&self) -> &AlcovePoint {
        &self.alcoves[0]
    }

    pub fn end(&self) -> &AlcovePoint {
        self.alcoves.last().expect("walk has a start alcove")
    }
}

/// Walks `chain` from `start`, crossing the wall orthogonal to `γ_t` in the
/// direction of `−γ_t` at step `t`.
pub fn alcove_walk_from(chain: &RootChain, start: AlcovePoint) -> Result<AlcoveWalk> {
    let mut alcoves = Vec::with_capacity(chain.len() + 1);
    let mut levels = Vec::with_capacity(chain.len());
    let mut cur = start;
    for (t, gamma) in chain.entries().iter().enumerate() {
        let alpha = gamma.abs();
        let f = cur.floor(&alpha);
        let c = if gamma.is_positive() { f } else { f + 1 };
        let next = cur.reflect(&alpha, c);
        let adjacent = Root::positive_roots(chain.rank()).iter().all(|b| {
            let (x, y) = (cur.floor(b), next.floor(b));
            if *b == alpha {
                y == x - gamma.sign()
            } else {
                x == y
            }
        });
        if !adjacent {
            return Err(Error::NotAWall { step: t + 1 });
        }
        levels.push(-gamma.sign() * c);
        alcoves.push(cur);
        cur = next;
    }
    alcoves.push(cur);
    Ok(AlcoveWalk { levels, alcoves })
}

fn natural_start(chain: &RootChain) -> Result<AlcovePoint> {
    let a0 = AlcovePoint::fundamental(chain.rank());
    match chain.prefix() {
        Some(p) => Ok(alcove_walk_from(&p, a0)?.end().clone()),
        None => Ok(a0),
    }
}

/// Walks a chain from `A_∘`, or for `Θ_k` and `Γ_k(k)` from the end of the
/// segment they follow. For `μ`-chains the endpoint is checked to be `A_{−μ}`.
pub fn alcove_walk(chain: &RootChain) -> Result<AlcoveWalk> {
    let walk = alcove_walk_from(chain, natural_start(chain)?)?;
    if let Some(mu) = chain.mu() {
        let target = AlcovePoint::fundamental(chain.rank()).translate(&-mu);
        if walk.end().floors() != target.floors() {
            return Err(Error::EndpointMismatch);
        }
    }
    Ok(walk)
}

/// Whether the chain is a valid walk whose length equals the number of
/// hyperplanes separating its endpoints.
pub fn reducedness_check(chain: &RootChain) -> bool {
    match alcove_walk(chain) {
        Ok(w) => separating_count(w.start(), w.end()) == chain.len(),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alcove::{make_chain, ChainKind};

    #[test]
    fn pair_chain_walks() {
        let c = make_chain(ChainKind::Pair(1), 2).unwrap();
        let w = alcove_walk(&c).unwrap();
        assert_eq!(w.end().translate_of_fundamental(), Some(-Weight::unit(2, 1)));
        assert!(reducedness_check(&c));
        assert_eq!(c.len(), 3);

        let c = make_chain(ChainKind::Pair(3), 3).unwrap();
        let w = alcove_walk(&c).unwrap();
        assert_eq!(w.levels, [0, 0, 0, 1, 1]);
        assert!(reducedness_check(&c));
        assert_eq!(c.len(), 5);

        let c = make_chain(ChainKind::PairStar(3), 3).unwrap();
        let w = alcove_walk(&c).unwrap();
        assert_eq!(w.end().translate_of_fundamental(), Some(Weight::unit(3, 3)));
    }

    #[test]
    fn levels_follow_the_segments() {
        for n in 1..=5 {
            for k in 1..=n {
                let c = make_chain(ChainKind::Pair(k), n).unwrap();
                let w = alcove_walk(&c).unwrap();
                let split = 2 * n - k;
                assert!(w.levels[..split].iter().all(|&l| l == 0));
                assert!(w.levels[split..].iter().all(|&l| l == 1));
            }
        }
    }

    #[test]
    fn padded_chain_is_not_reduced() {
        let c = make_chain(ChainKind::Pair(2), 3).unwrap();
        let mut e = c.entries().to_vec();
        e.push(Root::diff(1, 2));
        e.push(-Root::diff(1, 2));
        let padded = RootChain::custom(3, e, c.mu()).unwrap();
        assert!(!reducedness_check(&padded));
    }

    #[test]
    fn non_wall_step_is_rejected() {
        let c = RootChain::custom(3, alloc::vec![Root::diff(1, 3)], None).unwrap();
        assert_eq!(
            alcove_walk(&c).unwrap_err(),
            Error::NotAWall { step: 1 }
        );
    }

    #[test]
    fn wrong_weight_is_an_endpoint_mismatch() {
        let c = make_chain(ChainKind::Pair(2), 3).unwrap();
        let bad = RootChain::custom(3, c.entries().to_vec(), Some(Weight::unit(3, 1))).unwrap();
        assert_eq!(alcove_walk(&bad).unwrap_err(), Error::EndpointMismatch);
    }

    #[test]
    fn all_named_chains_are_reduced() {
        for n in 1..=4 {
            for k in 1..=n {
                for kind in ChainKind::all(k) {
                    let c = make_chain(kind, n).unwrap();
                    assert!(reducedness_check(&c), "{kind} n={n}");
                }
            }
        }
    }
}
