//! Combinatorial edge criterion and the exchange/existence lemmas, each as a
//! checkable predicate over one instance.

use alloc::vec::Vec;

use super::Qbg;
use crate::root::{Letter, Root};
use crate::weyl::WeylElt;

/// `a_1 ≺ a_2 ≺ ... ≺ a_r`, i.e. strictly increasing in the cyclic order
/// `≺_{a_1}` that starts at `a_1` and follows the total order.
pub fn cyclic_chain(n: usize, letters: &[Letter]) -> bool {
    let Some(first) = letters.first() else {
        return true;
    };
    let m = 2 * n;
    let base = first.pos(n);
    let rank = |x: &Letter| (x.pos(n) + m - base) % m;
    letters.windows(2).all(|p| rank(&p[0]) < rank(&p[1]))
}

/// Letters strictly between `a` and `b` in the total order.
fn between(n: usize, a: Letter, b: Letter) -> impl Iterator<Item = Letter> {
    (a.pos(n) + 1..b.pos(n)).map(move |p| Letter::from_pos(n, p))
}

/// The combinatorial criterion for `w → w s_α` to be an edge.
pub fn criterion_edge(w: &WeylElt, alpha: &Root) -> bool {
    let n = w.rank();
    let (k, b) = alpha.letters();
    let kk = Letter::plain(k);
    let wk = w.image(kk);
    let wb = w.image(b);
    if b.is_barred() && b.index() != k {
        wk < wb
            && wk.sign() == wb.sign()
            && !between(n, kk, b).any(|j| {
                let wj = w.image(j);
                wk < wj && wj < wb
            })
    } else {
        !between(n, kk, b).any(|j| cyclic_chain(n, &[wk, w.image(j), wb]))
    }
}

fn edge(g: &Qbg, w: &WeylElt, a: Root) -> Option<WeylElt> {
    g.step(w, &a).map(|e| e.target)
}

fn path(g: &Qbg, w: &WeylElt, labels: &[Root]) -> bool {
    let mut cur = *w;
    for a in labels {
        match edge(g, &cur, *a) {
            Some(t) => cur = t,
            None => return false,
        }
    }
    true
}

/// Exchange lemma for `k < l < m`: the three edge conditions are equivalent.
pub fn check_exchange(g: &Qbg, w: &WeylElt, k: usize, l: usize, m: usize) -> bool {
    let (km, lm, kl) = (Root::diff(k, m), Root::diff(l, m), Root::diff(k, l));
    let c1 = g.is_edge(w, &km) && path(g, w, &[lm, kl]);
    let c2 = g.is_edge(w, &km) && g.is_edge(w, &lm);
    let c3 = path(g, w, &[km, lm]);
    c1 == c2 && c2 == c3
}

/// Second exchange lemma for disjoint pairs: the two orders of the two
/// edges exist together or not at all.
pub fn check_exchange2(g: &Qbg, w: &WeylElt, p1: (usize, usize), p2: (usize, usize)) -> bool {
    let a = Root::diff(p1.0, p1.1);
    let b = Root::diff(p2.0, p2.1);
    path(g, w, &[a, b]) == path(g, w, &[b, a])
}

/// `{k ∈ [1, m−1] : w → w s_{(k,m)}}` in increasing order.
pub fn edge_indices(g: &Qbg, w: &WeylElt, m: usize) -> Vec<usize> {
    (1..m).filter(|&k| g.is_edge(w, &Root::diff(k, m))).collect()
}

/// Existence lemma for one choice of `a_1 < ... < a_s` among the edge
/// indices of `(w, m)`.
///
/// For every `c < a_1` with `y_s → y_s s_{(c,a_1)}` an edge and
/// `w → w s_{(c,m)}` not an edge, every `p < a_1` with `w → w s_{(p,m)}` an
/// edge satisfies `p < c`. Returns `false` if the `y` path itself is missing.
pub fn check_existence(g: &Qbg, w: &WeylElt, m: usize, a: &[usize]) -> bool {
    let Some(&a1) = a.first() else {
        return true;
    };
    let mut y = *w;
    for &ai in a {
        match edge(g, &y, Root::diff(ai, m)) {
            Some(t) => y = t,
            None => return false,
        }
    }
    for c in 1..a1 {
        if g.is_edge(&y, &Root::diff(c, a1)) && !g.is_edge(w, &Root::diff(c, m)) {
            let ok = (1..a1)
                .filter(|&p| g.is_edge(w, &Root::diff(p, m)))
                .all(|p| p < c);
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Minimum corollary for `(w, m)` and a choice `2 = b_1 < ... < b_u ≤ s`
/// (1-based positions into the edge indices `a_1 < ... < a_s`).
///
/// Returns `None` when the instance does not apply (`s < 2` or a bad
/// choice of `b`), otherwise whether `a_1` is the minimal `c < a_{b_1}`
/// with `z_u → z_u s_{(c, a_{b_1})}` an edge.
pub fn check_minimum(g: &Qbg, w: &WeylElt, m: usize, b: &[usize]) -> Option<bool> {
    let a = edge_indices(g, w, m);
    if a.len() < 2 || b.first() != Some(&2) || b.iter().any(|&x| x > a.len()) {
        return None;
    }
    if b.windows(2).any(|p| p[0] >= p[1]) {
        return None;
    }
    let mut z = *w;
    for &bi in b {
        z = edge(g, &z, Root::diff(a[bi - 1], m))?;
    }
    let top = a[b[0] - 1];
    let c = (1..top).find(|&c| g.is_edge(&z, &Root::diff(c, top)));
    Some(c == Some(a[0]))
}
