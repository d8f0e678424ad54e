//! The canonical paths `p_{l,m}(w)` and `p_{l̄,m}(w)`.

use alloc::format;

use super::{Qbg, QbgPath};
use crate::root::{Letter, Root};
use crate::weyl::WeylElt;
use crate::{Error, Result};

/// `γ_{l̄,k}` for `1 ≤ l ≤ n` and `k < l̄`.
pub fn gamma_label(n: usize, l: usize, k: Letter) -> Result<Root> {
    if l == 0 || l > n {
        return Err(Error::IndexOutOfRange {
            index: l as i32,
            rank: n,
        });
    }
    k.check(n)?;
    if k >= Letter::barred(l) {
        return Err(Error::Precondition(format!("gamma label needs k < {}", Letter::barred(l))));
    }
    let p = k.index();
    Ok(if !k.is_barred() && p <= l {
        Root::sum(p, l)
    } else if !k.is_barred() {
        Root::sum(l, p)
    } else {
        Root::diff(l, p)
    })
}

/// The letter immediately before `l̄` in the total order, with `\overline{n+1} = n`.
fn predecessor_of_bar(n: usize, l: usize) -> Letter {
    if l == n {
        Letter::plain(n)
    } else {
        Letter::barred(l + 1)
    }
}

/// The canonical path from `w` indexed by `from > to` in the total order.
///
/// `from` is either unbarred (then `to` must be unbarred) or a barred `l̄`
/// (then `to ≤ \overline{l+1}`). `from == to` gives the empty path, which is
/// the base of both recursions.
pub fn p_path(g: &Qbg, w: &WeylElt, from: Letter, to: Letter) -> Result<QbgPath> {
    let n = g.rank();
    from.check(n)?;
    to.check(n)?;
    let mut path = QbgPath::empty(*w);
    let mut cur = *w;
    let mut head = from;
    while head != to {
        let (label, next) = if head.is_barred() {
            let l = head.index();
            let last = predecessor_of_bar(n, l);
            if to > last {
                return Err(Error::Precondition(format!("p path {from} -> {to}: target above {last}")));
            }
            let mut pick = None;
            for pos in to.pos(n)..=last.pos(n) {
                let k = Letter::from_pos(n, pos);
                let gamma = gamma_label(n, l, k)?;
                if g.is_edge(&cur, &gamma) {
                    pick = Some((gamma, k));
                    break;
                }
            }
            pick.expect("the last candidate is a simple root")
        } else {
            if to.is_barred() || to > head {
                return Err(Error::Precondition(format!("p path {from} -> {to}: target not below source")));
            }
            let l = head.index();
            let k = (to.index()..l)
                .find(|&k| g.is_edge(&cur, &Root::diff(k, l)))
                .expect("(l-1, l) is a simple root");
            (Root::diff(k, l), Letter::plain(k))
        };
        let e = g.step(&cur, &label).expect("edge checked above");
        path.edges.push(e);
        cur = e.target;
        head = next;
    }
    Ok(path)
}
