//! The collapse of chained sums onto a single canonical path.

use alloc::collections::BTreeMap;

use crate::chevalley::Engine;
use crate::qbg::p_path;
use crate::ring::{Coeff, Monomial};
use crate::root::{Coroot, Letter};
use crate::weyl::WeylElt;
use crate::{Error, Result};

/// An element of `Z[x^{±1}][W]`, with `x^{−ξ}` standing for `q^{−⟨λ,ξ⟩}`.
pub type GroupAlgebraElt = BTreeMap<WeylElt, Coeff>;

fn x_inv(xi: &Coroot) -> Monomial {
    let c = xi.alpha_coords();
    let neg: alloc::vec::Vec<i32> = c[..xi.rank()].iter().map(|v| -v).collect();
    Monomial::x_pow(xi.rank(), &neg)
}

fn add(e: &mut GroupAlgebraElt, y: WeylElt, c: Coeff) {
    let v = e.entry(y).or_insert_with(|| Coeff::zero(y.rank()));
    *v += &c;
    if v.is_zero() {
        e.remove(&y);
    }
}

/// `Σ_{S_{m,j}} Σ_{A_1,…,A_r} (−1)^{Σ|A_i|−r} q^{−⟨λ, Σ down(A_i)⟩} ed(A_r)`.
pub fn collapse_sum(engine: &mut Engine<'_>, w: &WeylElt, m: usize, j: usize) -> Result<GroupAlgebraElt> {
    if !(1 <= j && j < m && m <= engine.rank()) {
        return Err(Error::Precondition(alloc::format!("collapse needs 1 <= j < m <= n, got j={j} m={m}")));
    }
    let mut out = GroupAlgebraElt::new();
    for b in engine.chains(w, Letter::plain(m), Letter::plain(j))? {
        add(&mut out, b.start, Coeff::term(x_inv(&b.shift), b.sign));
    }
    Ok(out)
}

/// Whether the chained sum equals `q^{−⟨λ, wt(p_{m,j}(w))⟩} ed(p_{m,j}(w))`.
pub fn collapse_check(engine: &mut Engine<'_>, w: &WeylElt, m: usize, j: usize) -> Result<bool> {
    let sum = collapse_sum(engine, w, m, j)?;
    let p = p_path(engine.graph(), w, Letter::plain(m), Letter::plain(j))?;
    let mut expect = GroupAlgebraElt::new();
    add(&mut expect, p.end(), Coeff::term(x_inv(&p.weight()?), 1));
    Ok(sum == expect)
}
