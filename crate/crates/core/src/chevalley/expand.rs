use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::alcove::{admissible_subsets, make_chain, AdmissibleSubset, ChainKind};
use crate::qbg::Qbg;
use crate::ring::{Atoms, Coeff, DemazureCombo, Key, Monomial, RationalCoeff};
use crate::root::{Letter, Weight};
use crate::weyl::{AffineElt, WeylElt};
use crate::{Error, Result};

/// Direction of a Chevalley expansion: `V_w^-(λ ± ε_k)` in terms of `V_y^-(λ)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

/// `numerator / atoms`, with a denominator-free numerator over keys `(y, 0)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChevalleyExpansion {
    pub numerator: DemazureCombo,
    pub atoms: Atoms,
}

impl ChevalleyExpansion {
    pub fn combo(&self) -> DemazureCombo {
        let inv = RationalCoeff::new(Coeff::one(self.numerator.rank()), self.atoms);
        self.numerator.scale(&inv)
    }
}

/// Shared state for building and checking expansions: the graph plus memo
/// tables for admissible subsets and Chevalley expansions.
pub struct Engine<'g> {
    g: &'g Qbg,
    subsets: BTreeMap<(WeylElt, ChainKind), Vec<AdmissibleSubset>>,
    expansions: BTreeMap<(WeylElt, Sign, usize), ChevalleyExpansion>,
}

impl<'g> Engine<'g> {
    pub fn new(g: &'g Qbg) -> Self {
        Engine {
            g,
            subsets: BTreeMap::new(),
            expansions: BTreeMap::new(),
        }
    }

    pub fn graph(&self) -> &'g Qbg {
        self.g
    }

    pub fn rank(&self) -> usize {
        self.g.rank()
    }

    /// `A(w, chain)` for a named chain, memoized.
    pub fn subsets(&mut self, w: &WeylElt, kind: ChainKind) -> Result<&[AdmissibleSubset]> {
        if !self.subsets.contains_key(&(*w, kind)) {
            let chain = make_chain(kind, self.rank())?;
            let a = admissible_subsets(self.g, w, &chain)?;
            self.subsets.insert((*w, kind), a);
        }
        Ok(&self.subsets[&(*w, kind)])
    }

    /// Nonempty `A` over the chain attached to `from` (`Θ_k` for `k`,
    /// `Γ_k(k)` for `k̄`) with `ed(A)^{-1} w ε_from = ε_to`.
    pub fn filtered(&mut self, w: &WeylElt, from: Letter, to: Letter) -> Result<Vec<AdmissibleSubset>> {
        let kind = if from.is_barred() {
            ChainKind::Gamma(from.index())
        } else {
            ChainKind::Theta(from.index())
        };
        let target = w.image(from);
        Ok(self
            .subsets(w, kind)?
            .iter()
            .filter(|a| !a.is_empty() && a.end().inverse().image(target) == to)
            .cloned()
            .collect())
    }

    /// The Chevalley expansion of `V_w^-(λ ± ε_k)`, memoized.
    pub fn expansion(&mut self, w: &WeylElt, sign: Sign, k: usize) -> Result<&ChevalleyExpansion> {
        let n = self.rank();
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange { index: k as i32, rank: n });
        }
        if !self.expansions.contains_key(&(*w, sign, k)) {
            let (kind, atoms) = match sign {
                Sign::Plus => (ChainKind::Pair(k), Atoms::single(n, k)),
                Sign::Minus if k >= 2 => (ChainKind::PairStar(k), Atoms::single(n, k - 1)),
                Sign::Minus => (ChainKind::PairStar(k), Atoms::none(n)),
            };
            let zero = Weight::zero(n);
            let mut numerator = DemazureCombo::new(n);
            for a in self.subsets(w, kind)? {
                let sgn = if a.neg % 2 == 0 { 1 } else { -1 };
                let wt = a.wt.expect("named pair chains carry a weight");
                let h = a.height.expect("named pair chains carry a weight");
                let c = Coeff::term(Monomial::exp(&wt).mul(&Monomial::q_pow(n, -h)), sgn);
                numerator.add_symbol(&AffineElt::new(a.end(), a.down), &zero, &c);
            }
            self.expansions
                .insert((*w, sign, k), ChevalleyExpansion { numerator, atoms });
        }
        Ok(&self.expansions[&(*w, sign, k)])
    }

    /// The expansion of a key `(y, ±ε_k)`; `None` for keys at `μ = 0`.
    pub fn expand_key(&mut self, key: &Key) -> Result<Option<&ChevalleyExpansion>> {
        if key.mu.is_zero() {
            return Ok(None);
        }
        let letter = key
            .mu
            .as_eps_letter()
            .ok_or_else(|| Error::Precondition(alloc::format!("cannot expand at shift {:?}", key.mu)))?;
        let sign = if letter.is_barred() { Sign::Minus } else { Sign::Plus };
        self.expansion(&key.y, sign, letter.index()).map(Some)
    }

    /// Rewrites a combination over keys `(y, 0)` and `(y, ±ε_k)` entirely
    /// in terms of `V_y^-(λ)`, grouped by denominator.
    pub fn lower(&mut self, c: &DemazureCombo) -> Result<BTreeMap<Atoms, DemazureCombo>> {
        let n = c.rank();
        let mut groups: BTreeMap<Atoms, DemazureCombo> = BTreeMap::new();
        for (key, coeff) in c.iter() {
            let coeff = RationalCoeff::from(coeff.clone().into_polynomial()?);
            match self.expand_key(key)? {
                None => groups
                    .entry(Atoms::none(n))
                    .or_insert_with(|| DemazureCombo::new(n))
                    .add_term(*key, &coeff),
                Some(e) => {
                    let g = groups
                        .entry(e.atoms)
                        .or_insert_with(|| DemazureCombo::new(n));
                    for (k2, c2) in e.numerator.iter() {
                        g.add_term(*k2, &(&coeff * c2));
                    }
                }
            }
        }
        Ok(groups)
    }
}

/// `gch V_w^-(λ ± ε_k)` as a combination of `V_y^-(λ)`.
///
/// Plus uses `Γ_{k−1,k}` and the factor `1/(1 − q^{−1}x_k^{−1})`. Minus uses
/// the `(−ε_k)`-chain `Γ*_{k−1,k}`; there the partitions contribute a
/// geometric series in `α_{k−1}^∨`, giving `1/(1 − q^{−1}x_{k−1}^{−1})` for
/// `k ≥ 2` and no factor for `k = 1`.
pub fn chevalley_expand(g: &Qbg, w: &WeylElt, sign: Sign, k: usize) -> Result<DemazureCombo> {
    Ok(Engine::new(g).expansion(w, sign, k)?.combo())
}
