//! Admissible subsets and their statistics.

use alloc::vec::Vec;

use super::{alcove_walk, make_chain, ChainKind, RootChain};
use crate::qbg::{EdgeKind, Qbg, QbgPath};
use crate::root::{pair, Coroot, Letter, Weight};
use crate::weyl::WeylElt;
use crate::{Error, Result};

/// A `w`-admissible subset of a chain. Positions are 0-based.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AdmissibleSubset {
    pub positions: Vec<usize>,
    /// The induced path `w = w_0 → w_1 → ... → w_s`.
    pub path: QbgPath,
    pub down: Coroot,
    /// Number of negative chain entries among the positions.
    pub neg: usize,
    /// Positions whose step is a quantum edge.
    pub quantum: Vec<usize>,
    pub wt: Option<Weight>,
    pub height: Option<i32>,
}

impl AdmissibleSubset {
    pub fn base(&self) -> WeylElt {
        self.path.start
    }

    /// `ed(A)`.
    pub fn end(&self) -> WeylElt {
        self.path.end()
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// Positions as 1-based indices.
    pub fn one_based(&self) -> Vec<usize> {
        self.positions.iter().map(|p| p + 1).collect()
    }
}

struct Ctx<'a> {
    g: &'a Qbg,
    chain: &'a RootChain,
    out: Vec<AdmissibleSubset>,
}

fn dfs(ctx: &mut Ctx<'_>, from: usize, cur: &mut AdmissibleSubset) {
    ctx.out.push(cur.clone());
    let here = cur.end();
    for p in from..ctx.chain.len() {
        let gamma = ctx.chain.entries()[p];
        let Some(edge) = ctx.g.step(&here, &gamma) else {
            continue;
        };
        let saved_down = cur.down;
        cur.positions.push(p);
        cur.path.edges.push(edge);
        if !gamma.is_positive() {
            cur.neg += 1;
        }
        let quantum = edge.kind == EdgeKind::Quantum;
        if quantum {
            cur.down += edge.label.coroot(ctx.chain.rank());
            cur.quantum.push(p);
        }
        dfs(ctx, p + 1, cur);
        if quantum {
            cur.quantum.pop();
        }
        if !gamma.is_positive() {
            cur.neg -= 1;
        }
        cur.down = saved_down;
        cur.path.edges.pop();
        cur.positions.pop();
    }
}

/// All `w`-admissible subsets of `chain`, in lexicographic order of their
/// position sequences (so `∅` comes first). `wt` and `height` are filled in
/// for `μ`-chains.
pub fn admissible_subsets(g: &Qbg, w: &WeylElt, chain: &RootChain) -> Result<Vec<AdmissibleSubset>> {
    let n = chain.rank();
    if g.rank() != n || w.rank() != n {
        return Err(Error::RankMismatch {
            expected: n,
            found: if g.rank() != n { g.rank() } else { w.rank() },
        });
    }
    if chain.len() > 64 {
        return Err(Error::ChainTooLong(chain.len()));
    }
    let mut ctx = Ctx {
        g,
        chain,
        out: Vec::new(),
    };
    let mut cur = AdmissibleSubset {
        positions: Vec::new(),
        path: QbgPath::empty(*w),
        down: Coroot::zero(n),
        neg: 0,
        quantum: Vec::new(),
        wt: None,
        height: None,
    };
    dfs(&mut ctx, 0, &mut cur);
    let mut out = ctx.out;
    if let Some(mu) = chain.mu() {
        let levels = alcove_walk(chain)?.levels;
        for a in out.iter_mut() {
            let mut v = -mu;
            for &p in a.positions.iter().rev() {
                let gamma = chain.entries()[p];
                let c = pair(&v, &gamma.coroot(n)) + levels[p];
                v -= c * gamma.weight(n);
            }
            a.wt = Some(-w.act(&v));
            a.height = Some(
                a.quantum
                    .iter()
                    .map(|&p| {
                        let gamma = chain.entries()[p];
                        gamma.sign() * (pair(&mu, &gamma.coroot(n)) - levels[p])
                    })
                    .sum(),
            );
        }
    }
    Ok(out)
}

/// `A^{k,l}_w` for unbarred `k` (over `Θ_k`) or `A^{k̄,l}_w` for barred `k`
/// (over `Γ_k(k)`): nonempty admissible `A` with `ed(A)^{-1} w ε_k = ε_l`.
pub fn filtered_a(g: &Qbg, w: &WeylElt, k: Letter, l: Letter) -> Result<Vec<AdmissibleSubset>> {
    let n = w.rank();
    k.check(n)?;
    l.check(n)?;
    let kind = if k.is_barred() {
        ChainKind::Gamma(k.index())
    } else {
        ChainKind::Theta(k.index())
    };
    let chain = make_chain(kind, n)?;
    let target = w.image(k);
    Ok(admissible_subsets(g, w, &chain)?
        .into_iter()
        .filter(|a| !a.is_empty() && a.end().inverse().image(target) == l)
        .collect())
}

/// The split of `A` over `Γ_{k−1,k} = Γ*_k(k) ∗ Θ_k` into its two segments.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Split {
    /// Positions in the `Γ*_k(k)` segment.
    pub a1: Vec<usize>,
    /// Positions in the `Θ_k` segment, 0-based within that segment.
    pub a2: Vec<usize>,
    /// `ed(A^{(1)})`.
    pub ed1: WeylElt,
    /// `down(A^{(1)})`.
    pub down1: Coroot,
    /// `height(A) = ⟨ε_k, down(A^{(1)})⟩`.
    pub height_ok: bool,
    /// `wt(A) = ed(A^{(1)}) ε_k`.
    pub wt_ok: bool,
    /// `n(A) = |A^{(2)}|`.
    pub n_ok: bool,
}

impl Split {
    pub fn holds(&self) -> bool {
        self.height_ok && self.wt_ok && self.n_ok
    }
}

/// Splits an admissible subset of `Γ_{k−1,k}` and evaluates the three
/// segment identities.
pub fn split_stats(chain: &RootChain, a: &AdmissibleSubset) -> Result<Split> {
    let ChainKind::Pair(k) = chain.kind() else {
        return Err(Error::Precondition("split_stats needs a Gamma_{k-1,k} chain".into()));
    };
    let n = chain.rank();
    let cut = 2 * n - k;
    let s1 = a.positions.iter().take_while(|&&p| p < cut).count();
    let a1 = a.positions[..s1].to_vec();
    let a2: Vec<usize> = a.positions[s1..].iter().map(|p| p - cut).collect();
    let ed1 = a.path.edges[..s1].last().map_or(a.base(), |e| e.target);
    let mut down1 = Coroot::zero(n);
    for e in &a.path.edges[..s1] {
        down1 += e.weight_contribution();
    }
    let eps = Weight::unit(n, k);
    Ok(Split {
        height_ok: a.height == Some(pair(&eps, &down1)),
        wt_ok: a.wt == Some(ed1.act(&eps)),
        n_ok: a.neg == a2.len(),
        a1,
        a2,
        ed1,
        down1,
    })
}
