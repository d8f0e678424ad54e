//! Chevalley expansions for `μ = ±ε_k` and the inverse Chevalley builders.
//!
//! Every right-hand side is a list of blocks. A block `(c, y, D, sign)`
//! stands for
//!
//! `sign · q^{⟨ε_c, D+ξ⟩} Σ_B (−1)^{|B|} V_{ed(B) t_{down(B)+D+ξ}}^-(λ + ε_c)`
//!
//! with `B` running over `A(y, Γ_c(c))` for unbarred `c` and over
//! `A(y, Θ_{|c|})` for barred `c` (where `ε_{j̄} = −ε_j`). Blocks are
//! streamed into normalized terms, which are kept for the cancellation
//! certificate and summed into a [`DemazureCombo`].

mod expand;
mod sequences;
mod table;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::alcove::ChainKind;
use crate::qbg::{p_path, Qbg};
use crate::ring::{normalize, Coeff, DemazureCombo, Key, Monomial};
use crate::root::{pair, Coroot, Letter, Weight};
use crate::weyl::{AffineElt, WeylElt};
use crate::{Error, Result};

pub use expand::{chevalley_expand, ChevalleyExpansion, Engine, Sign};
pub use sequences::enumerate_s;
pub use table::{filtered_table, TableRow};

/// Which character `e^{±wε_m}` multiplies on the left.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Direction {
    /// `e^{wε_m}`.
    Plus,
    /// `e^{−wε_m}`.
    Minus,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Variant {
    /// The identity with chained sums, cancellations included.
    Full,
    /// The cancellation-free first-half form.
    CancelFree,
    /// The conjectural second-half form truncated at `l`.
    Conjecture(usize),
}

/// One inverse Chevalley identity for `x = w t_ξ`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IdentitySpec {
    pub n: usize,
    pub x: AffineElt,
    pub m: usize,
    pub direction: Direction,
    pub variant: Variant,
}

impl IdentitySpec {
    pub fn new(x: AffineElt, m: usize, direction: Direction, variant: Variant) -> Result<Self> {
        let n = x.w.rank();
        if m == 0 || m > n {
            return Err(Error::IndexOutOfRange { index: m as i32, rank: n });
        }
        match (direction, variant) {
            (_, Variant::Full) | (Direction::Plus, Variant::CancelFree) => {}
            (Direction::Minus, Variant::Conjecture(l)) if (m..=n).contains(&l) => {}
            (Direction::Minus, Variant::Conjecture(l)) => {
                return Err(Error::Precondition(alloc::format!("conjecture needs {m} <= l = {l} <= {n}")))
            }
            _ => return Err(Error::Precondition("variant does not match direction".into())),
        }
        Ok(IdentitySpec {
            n,
            x,
            m,
            direction,
            variant,
        })
    }

    pub fn first(w: WeylElt, m: usize) -> Result<Self> {
        IdentitySpec::new(AffineElt::finite(w), m, Direction::Plus, Variant::Full)
    }

    pub fn second(w: WeylElt, m: usize) -> Result<Self> {
        IdentitySpec::new(AffineElt::finite(w), m, Direction::Minus, Variant::Full)
    }

    /// The letter `m` or `m̄` whose `ε` multiplies the left-hand side.
    pub fn letter(&self) -> Letter {
        match self.direction {
            Direction::Plus => Letter::plain(self.m),
            Direction::Minus => Letter::barred(self.m),
        }
    }
}

impl fmt::Display for IdentitySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let half = match self.direction {
            Direction::Plus => "first",
            Direction::Minus => "second",
        };
        write!(f, "{half} n={} w={} m={}", self.n, crate::render::word(&self.x.w), self.m)?;
        if !self.x.xi.is_zero() {
            write!(f, " xi={}", crate::render::coroot(&self.x.xi))?;
        }
        match self.variant {
            Variant::Full => Ok(()),
            Variant::CancelFree => f.write_str(" cancel-free"),
            Variant::Conjecture(l) => write!(f, " l={l}"),
        }
    }
}

/// One chained set `A_i` in a block's history: its target letter and its
/// 1-based positions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Step {
    pub to: Letter,
    pub positions: Vec<usize>,
}

/// `sign · q^{⟨ε_c, D+ξ⟩} Σ_B (−1)^{|B|} V_{ed(B) t_{down(B)+D+ξ}}^-(λ + ε_c)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Block {
    pub sign: i64,
    pub letter: Letter,
    pub start: WeylElt,
    /// `D`, not including `ξ`.
    pub shift: Coroot,
    pub history: Vec<Step>,
}

impl Block {
    /// The chain summed over inside the block.
    pub fn chain(&self) -> ChainKind {
        let j = self.letter.index();
        if self.letter.is_barred() {
            ChainKind::Theta(j)
        } else {
            ChainKind::Gamma(j)
        }
    }

    /// `ε_c`.
    pub fn mu(&self) -> Weight {
        Weight::eps(self.start.rank(), self.letter)
    }

    /// Identity up to sign: blocks with equal shape and opposite signs cancel.
    pub fn shape(&self) -> (Letter, WeylElt, Coroot) {
        (self.letter, self.start, self.shift)
    }
}

/// A single normalized summand `sign · monomial · V_key`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Term {
    pub block: usize,
    pub sign: i64,
    pub key: Key,
    pub monomial: Monomial,
}

/// Sums terms into a combination.
pub fn terms_combo(n: usize, terms: &[Term]) -> DemazureCombo {
    let mut c = DemazureCombo::new(n);
    for t in terms {
        c.add_poly(t.key, Coeff::term(t.monomial, t.sign));
    }
    c
}

/// A built right-hand side: its blocks and the streamed terms.
#[derive(Clone, Debug)]
pub struct Rhs {
    pub spec: IdentitySpec,
    pub blocks: Vec<Block>,
    pub terms: Vec<Term>,
}

impl Rhs {
    pub fn combo(&self) -> DemazureCombo {
        terms_combo(self.spec.n, &self.terms)
    }

    /// Blocks left after cancelling equal shapes with opposite signs, in
    /// stream order. A surviving shape is represented by a block of the net
    /// sign, preferring one whose chained sets are all singletons, so that
    /// its history is a path in the quantum Bruhat graph.
    pub fn surviving_blocks(&self) -> Vec<Block> {
        let mut net: BTreeMap<(Letter, WeylElt, Coroot), i64> = BTreeMap::new();
        for b in &self.blocks {
            *net.entry(b.shape()).or_insert(0) += b.sign;
        }
        let mut pick: BTreeMap<(Letter, WeylElt, Coroot), (bool, usize)> = BTreeMap::new();
        for (i, b) in self.blocks.iter().enumerate() {
            let s = net[&b.shape()];
            if s == 0 || b.sign.signum() != s.signum() {
                continue;
            }
            let path = b.history.iter().all(|st| st.positions.len() == 1);
            let e = pick.entry(b.shape()).or_insert((path, i));
            if path && !e.0 {
                *e = (true, i);
            }
        }
        let mut chosen: Vec<usize> = pick.values().map(|&(_, i)| i).collect();
        chosen.sort_unstable();
        chosen
            .into_iter()
            .map(|i| {
                let b = &self.blocks[i];
                Block { sign: net[&b.shape()], ..b.clone() }
            })
            .collect()
    }
}

/// `e^{±wε_m} gch V_x^-(λ)`, normalized.
pub fn lhs_combo(spec: &IdentitySpec) -> DemazureCombo {
    let n = spec.n;
    let nu = spec.x.w.act(&Weight::eps(n, spec.letter()));
    let mut c = DemazureCombo::new(n);
    c.add_symbol(&spec.x, &Weight::zero(n), &Coeff::term(Monomial::exp(&nu), 1));
    c
}

impl Engine<'_> {
    /// Builds the right-hand side described by `spec`.
    pub fn build(&mut self, spec: &IdentitySpec) -> Result<Rhs> {
        if spec.n != self.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), found: spec.n });
        }
        let n = spec.n;
        let w = spec.x.w;
        let main = Block {
            sign: 1,
            letter: spec.letter(),
            start: w,
            shift: Coroot::zero(n),
            history: Vec::new(),
        };
        let mut blocks = alloc::vec![main];
        match (spec.direction, spec.variant) {
            (Direction::Plus, Variant::Full) => {
                let targets: Vec<Letter> = (1..spec.m).rev().map(Letter::plain).collect();
                self.chained_blocks(&w, spec.letter(), &targets, &mut blocks)?;
            }
            (Direction::Minus, Variant::Full) => {
                let mut targets: Vec<Letter> = (spec.m + 1..=n).map(Letter::barred).collect();
                targets.extend((1..=n).rev().map(Letter::plain));
                self.chained_blocks(&w, spec.letter(), &targets, &mut blocks)?;
            }
            (Direction::Plus, Variant::CancelFree) => {
                let targets: Vec<Letter> = (1..spec.m).rev().map(Letter::plain).collect();
                self.path_blocks(&w, spec.letter(), &targets, &mut blocks)?;
            }
            (Direction::Minus, Variant::Conjecture(l)) => {
                let mut targets: Vec<Letter> = (spec.m + 1..=n).map(Letter::barred).collect();
                targets.extend((1..=l).rev().map(Letter::plain));
                self.path_blocks(&w, spec.letter(), &targets, &mut blocks)?;
            }
            _ => return Err(Error::Precondition("variant does not match direction".into())),
        }
        let mut terms = Vec::new();
        for (i, b) in blocks.iter().enumerate() {
            self.stream_block(i, b, &spec.x.xi, &mut terms)?;
        }
        Ok(Rhs {
            spec: *spec,
            blocks,
            terms,
        })
    }

    /// The chained sums `A_1 ∈ A^{from,j_1}_w, …, A_r ∈ A^{j_{r−1},to}_{ed(A_{r−1})}`
    /// over all of `S_{from,to}`, each as a block with sign
    /// `(−1)^{Σ|A_i|−r}`, start `ed(A_r)` and shift `Σ down(A_i)`.
    pub fn chains(&mut self, w: &WeylElt, from: Letter, to: Letter) -> Result<Vec<Block>> {
        let mut out = Vec::new();
        self.chained_blocks(w, from, &[to], &mut out)?;
        Ok(out)
    }

    /// One block per target `j` and per chain `A_1, …, A_r` over `S_{from,j}`.
    fn chained_blocks(&mut self, w: &WeylElt, from: Letter, targets: &[Letter], out: &mut Vec<Block>) -> Result<()> {
        let n = self.rank();
        for &j in targets {
            for seq in enumerate_s(n, from, j)? {
                let mut history = Vec::new();
                self.chain_dfs(w, from, &seq, 1, Coroot::zero(n), &mut history, out)?;
            }
        }
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    fn chain_dfs(
        &mut self,
        y: &WeylElt,
        prev: Letter,
        seq: &[Letter],
        sign: i64,
        shift: Coroot,
        history: &mut Vec<Step>,
        out: &mut Vec<Block>,
    ) -> Result<()> {
        let Some((&next, rest)) = seq.split_first() else {
            out.push(Block {
                sign,
                letter: prev,
                start: *y,
                shift,
                history: history.clone(),
            });
            return Ok(());
        };
        for a in self.filtered(y, prev, next)? {
            let s = if (a.len() - 1) % 2 == 0 { sign } else { -sign };
            history.push(Step {
                to: next,
                positions: a.one_based(),
            });
            self.chain_dfs(&a.end(), next, rest, s, shift + a.down, history, out)?;
            history.pop();
        }
        Ok(())
    }

    /// One block per target `j` along the canonical path from `from` to `j`.
    fn path_blocks(&mut self, w: &WeylElt, from: Letter, targets: &[Letter], out: &mut Vec<Block>) -> Result<()> {
        for &j in targets {
            let p = p_path(self.graph(), w, from, j)?;
            out.push(Block {
                sign: 1,
                letter: j,
                start: p.end(),
                shift: p.weight()?,
                history: Vec::new(),
            });
        }
        Ok(())
    }

    /// The normalized terms of a single block for `x = y t_ξ`.
    pub fn block_terms(&mut self, b: &Block, xi: &Coroot) -> Result<Vec<Term>> {
        let mut out = Vec::new();
        self.stream_block(0, b, xi, &mut out)?;
        Ok(out)
    }

    fn stream_block(&mut self, idx: usize, b: &Block, xi: &Coroot, out: &mut Vec<Term>) -> Result<()> {
        let n = self.rank();
        let mu = b.mu();
        let total = b.shift + *xi;
        let pre = Monomial::q_pow(n, pair(&mu, &total));
        for a in self.subsets(&b.start, b.chain())? {
            let (key, m) = normalize(&AffineElt::new(a.end(), a.down + total), &mu);
            let (mono, _) = m.as_term().expect("normalization yields a monomial");
            let sign = if a.len() % 2 == 0 { b.sign } else { -b.sign };
            out.push(Term {
                block: idx,
                sign,
                key,
                monomial: mono.mul(&pre),
            });
        }
        Ok(())
    }
}

/// The first-half right-hand side with chained sums.
pub fn ic_rhs_first(g: &Qbg, x: &AffineElt, m: usize) -> Result<Rhs> {
    Engine::new(g).build(&IdentitySpec::new(*x, m, Direction::Plus, Variant::Full)?)
}

/// The second-half right-hand side with chained sums.
pub fn ic_rhs_second(g: &Qbg, x: &AffineElt, m: usize) -> Result<Rhs> {
    Engine::new(g).build(&IdentitySpec::new(*x, m, Direction::Minus, Variant::Full)?)
}

/// The cancellation-free first-half right-hand side.
pub fn ic_rhs_cancel_free_first(g: &Qbg, x: &AffineElt, m: usize) -> Result<Rhs> {
    Engine::new(g).build(&IdentitySpec::new(*x, m, Direction::Plus, Variant::CancelFree)?)
}

/// The conjectural cancellation-free second-half right-hand side.
pub fn ic_rhs_conjecture_second(g: &Qbg, x: &AffineElt, m: usize, l: usize) -> Result<Rhs> {
    Engine::new(g).build(&IdentitySpec::new(*x, m, Direction::Minus, Variant::Conjecture(l))?)
}

#[cfg(test)]
mod tests;
