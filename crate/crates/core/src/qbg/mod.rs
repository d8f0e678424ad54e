//! The quantum Bruhat graph `QBG(W)` in type C_n.
//!
//! [`edge_kind`] classifies `w → w s_α` by the two length conditions and is
//! the source of truth. [`Qbg`] caches the classification for every
//! `(w, α)` at small rank so exhaustive sweeps do not recompute lengths.

mod lemmas;
mod paths;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::root::{check_rank, pair, Coroot, Letter, Root, Weight, MAX_RANK};
use crate::weyl::WeylElt;
use crate::{Error, Result};

pub use lemmas::{
    check_existence, check_exchange, check_exchange2, check_minimum, criterion_edge, cyclic_chain,
    edge_indices,
};
pub use paths::{gamma_label, p_path};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum EdgeKind {
    Bruhat,
    Quantum,
}

/// Classifies `w → w s_α` for a positive root `α`.
pub fn edge_kind(w: &WeylElt, alpha: &Root) -> Option<EdgeKind> {
    debug_assert!(alpha.is_positive());
    let n = w.rank();
    let y = w.mul(&WeylElt::reflection(n, alpha));
    let (lx, ly) = (w.length() as i32, y.length() as i32);
    if ly == lx + 1 {
        Some(EdgeKind::Bruhat)
    } else if ly == lx - 2 * pair(&Weight::rho(n), &alpha.coroot(n)) + 1 {
        Some(EdgeKind::Quantum)
    } else {
        None
    }
}

/// Largest rank for which [`Qbg::new`] materializes the full edge table.
pub const MATERIALIZE_MAX_RANK: usize = 6;

/// Edge oracle for a fixed rank, with a dense table at small rank.
#[derive(Clone, Debug)]
pub struct Qbg {
    n: usize,
    roots: Vec<Root>,
    root_slot: [[u8; 2 * MAX_RANK + 1]; MAX_RANK + 1],
    table: Option<Vec<u8>>,
}

impl Qbg {
    pub fn new(n: usize) -> Result<Self> {
        check_rank(n)?;
        let roots = Root::positive_roots(n);
        let mut root_slot = [[u8::MAX; 2 * MAX_RANK + 1]; MAX_RANK + 1];
        for (idx, r) in roots.iter().enumerate() {
            let (i, b) = r.letters();
            root_slot[i][(b.value() as i32 + MAX_RANK as i32) as usize] = idx as u8;
        }
        let mut g = Qbg {
            n,
            roots,
            root_slot,
            table: None,
        };
        if n <= MATERIALIZE_MAX_RANK {
            g.materialize();
        }
        Ok(g)
    }

    fn materialize(&mut self) {
        let nr = self.roots.len();
        let mut table = vec![0u8; WeylElt::order(self.n) * nr];
        for (wi, w) in WeylElt::all(self.n).iter().enumerate() {
            for (ri, r) in self.roots.iter().enumerate() {
                table[wi * nr + ri] = match edge_kind(w, r) {
                    None => 0,
                    Some(EdgeKind::Bruhat) => 1,
                    Some(EdgeKind::Quantum) => 2,
                };
            }
        }
        self.table = Some(table);
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Positive roots in the fixed enumeration order of [`Root::positive_roots`].
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn is_materialized(&self) -> bool {
        self.table.is_some()
    }

    fn slot(&self, alpha: &Root) -> usize {
        let (i, b) = alpha.letters();
        self.root_slot[i][(b.value() as i32 + MAX_RANK as i32) as usize] as usize
    }

    /// Same as [`edge_kind`], served from the table when available.
    pub fn edge(&self, w: &WeylElt, alpha: &Root) -> Option<EdgeKind> {
        match &self.table {
            Some(t) => match t[w.index() * self.roots.len() + self.slot(&alpha.abs())] {
                0 => None,
                1 => Some(EdgeKind::Bruhat),
                _ => Some(EdgeKind::Quantum),
            },
            None => edge_kind(w, &alpha.abs()),
        }
    }

    pub fn is_edge(&self, w: &WeylElt, alpha: &Root) -> bool {
        self.edge(w, alpha).is_some()
    }

    /// The edge `w → w s_α`, if present.
    pub fn step(&self, w: &WeylElt, alpha: &Root) -> Option<QbgEdge> {
        let label = alpha.abs();
        self.edge(w, &label).map(|kind| QbgEdge {
            source: *w,
            label,
            target: w.mul(&WeylElt::reflection(self.n, &label)),
            kind,
        })
    }

    /// All edges out of `w`, in root order.
    pub fn edges_from(&self, w: &WeylElt) -> Vec<QbgEdge> {
        self.roots.iter().filter_map(|r| self.step(w, r)).collect()
    }

    /// Every edge of the graph, sources in index order.
    pub fn all_edges(&self) -> Vec<QbgEdge> {
        WeylElt::all(self.n)
            .iter()
            .flat_map(|w| self.edges_from(w))
            .collect()
    }

    /// BFS distance from `u` to `v` together with the set of weights of all
    /// shortest directed paths from `u` to `v`.
    pub fn shortest_paths(&self, u: &WeylElt, v: &WeylElt) -> (usize, BTreeSet<Coroot>) {
        let mut dist: BTreeMap<WeylElt, usize> = BTreeMap::new();
        let mut weights: BTreeMap<WeylElt, BTreeSet<Coroot>> = BTreeMap::new();
        dist.insert(*u, 0);
        weights.insert(*u, BTreeSet::from([Coroot::zero(self.n)]));
        let mut layer = vec![*u];
        let mut d = 0;
        while !dist.contains_key(v) || dist[v] > d {
            if layer.is_empty() {
                break;
            }
            let mut next: BTreeSet<WeylElt> = BTreeSet::new();
            for x in &layer {
                let wx = weights[x].clone();
                for e in self.edges_from(x) {
                    match dist.get(&e.target) {
                        Some(&dt) if dt <= d => continue,
                        _ => {}
                    }
                    dist.insert(e.target, d + 1);
                    next.insert(e.target);
                    let extra = e.weight_contribution();
                    let set = weights.entry(e.target).or_default();
                    for c in &wx {
                        set.insert(*c + extra);
                    }
                }
            }
            layer = next.into_iter().collect();
            d += 1;
        }
        (dist.get(v).copied().unwrap_or(usize::MAX), weights.remove(v).unwrap_or_default())
    }
}

/// A labeled edge `source → source · s_label`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct QbgEdge {
    pub source: WeylElt,
    pub label: Root,
    pub target: WeylElt,
    pub kind: EdgeKind,
}

impl QbgEdge {
    /// `label^∨` for a quantum edge, zero otherwise.
    pub fn weight_contribution(&self) -> Coroot {
        let n = self.source.rank();
        match self.kind {
            EdgeKind::Quantum => self.label.coroot(n),
            EdgeKind::Bruhat => Coroot::zero(n),
        }
    }
}

/// A directed path in the quantum Bruhat graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QbgPath {
    pub start: WeylElt,
    pub edges: Vec<QbgEdge>,
}

impl QbgPath {
    pub fn empty(start: WeylElt) -> Self {
        QbgPath {
            start,
            edges: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// The final vertex, `ed(p)`.
    pub fn end(&self) -> WeylElt {
        self.edges.last().map_or(self.start, |e| e.target)
    }

    pub fn labels(&self) -> Vec<Root> {
        self.edges.iter().map(|e| e.label).collect()
    }

    /// Checks that consecutive endpoints match and every step is an edge of
    /// the stated kind.
    pub fn validate(&self, g: &Qbg) -> Result<()> {
        let mut cur = self.start;
        for (t, e) in self.edges.iter().enumerate() {
            let expected = g.step(&cur, &e.label);
            if e.source != cur || expected != Some(*e) {
                return Err(Error::MalformedPath(alloc::format!("step {} from {}", t + 1, cur)));
            }
            cur = e.target;
        }
        Ok(())
    }

    /// `wt(p)`: the sum of label coroots over quantum edges.
    pub fn weight(&self) -> Result<Coroot> {
        let n = self.start.rank();
        let mut cur = self.start;
        let mut acc = Coroot::zero(n);
        for (t, e) in self.edges.iter().enumerate() {
            if e.source != cur || e.target != cur.mul(&WeylElt::reflection(n, &e.label)) {
                return Err(Error::MalformedPath(alloc::format!("endpoint mismatch at step {}", t + 1)));
            }
            acc += e.weight_contribution();
            cur = e.target;
        }
        Ok(acc)
    }
}

/// `wt(p)`.
pub fn path_weight(p: &QbgPath) -> Result<Coroot> {
    p.weight()
}

/// `d(a, b)` on `[n̄]`.
pub fn distance(n: usize, a: Letter, b: Letter) -> Result<usize> {
    a.check(n)?;
    b.check(n)?;
    Ok(crate::root::distance(n, a, b))
}
