//! The filtered sets met while unfolding the chained sums of one identity,
//! labelled `A_1, A_2, …` in the order they are reached.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::Engine;
use crate::root::{Coroot, Letter};
use crate::weyl::WeylElt;
use crate::Result;

/// One labelled member of `A^{from,to}_base`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TableRow {
    pub label: usize,
    pub base: WeylElt,
    pub from: Letter,
    pub to: Letter,
    /// 1-based positions.
    pub positions: Vec<usize>,
    pub ed: WeylElt,
    pub down: Coroot,
}

/// Unfolds the chained sums from `(w, from)`.
///
/// A node `(y, c)` lists `A^{c,t}_y` for every `t < c` in increasing order,
/// each by size and then lexicographically, and every member reaches the node `(ed(A), t)`. Nodes are expanded by
/// decreasing letter and, within a letter, most recently reached first.
/// Nodes at letter `1` have nothing below them.
pub fn filtered_table(engine: &mut Engine<'_>, w: &WeylElt, from: Letter) -> Result<Vec<TableRow>> {
    let n = engine.rank();
    from.check(n)?;
    let mut rows: Vec<TableRow> = Vec::new();
    // letter -> node -> last label that reached it
    let mut pending: BTreeMap<Letter, BTreeMap<WeylElt, usize>> = BTreeMap::new();
    pending.entry(from).or_default().insert(*w, 0);
    while let Some(mut layer) = pending.last_entry() {
        let c = *layer.key();
        let nodes = layer.get_mut();
        let y = *nodes.iter().max_by_key(|(_, &stamp)| stamp).expect("layers are never empty").0;
        nodes.remove(&y);
        if nodes.is_empty() {
            layer.remove();
        }
        for pos in 1..c.pos(n) {
            let t = Letter::from_pos(n, pos);
            let mut members = engine.filtered(&y, c, t)?;
            members.sort_by_key(|a| (a.len(), a.one_based()));
            for a in members {
                let label = rows.len() + 1;
                rows.push(TableRow {
                    label,
                    base: y,
                    from: c,
                    to: t,
                    positions: a.one_based(),
                    ed: a.end(),
                    down: a.down,
                });
                pending.entry(t).or_default().insert(a.end(), label);
            }
        }
    }
    Ok(rows)
}
