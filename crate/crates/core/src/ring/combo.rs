use alloc::collections::BTreeMap;
use core::fmt;

use super::{format_eps, Atoms, Coeff, Monomial, RationalCoeff, Specialized};
use crate::root::{pair, Weight};
use crate::weyl::{AffineElt, WeylElt};
use crate::{Error, Result};

/// The symbol `V_y^-(λ + μ)` with the translation part already absorbed.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Key {
    pub y: WeylElt,
    pub mu: Weight,
}

impl Key {
    pub fn new(y: WeylElt, mu: Weight) -> Self {
        Key { y, mu }
    }

    /// `V_y^-(λ)`.
    pub fn base(y: WeylElt) -> Self {
        Key {
            y,
            mu: Weight::zero(y.rank()),
        }
    }
}

impl fmt::Display for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V[{}](λ", crate::render::word(&self.y))?;
        if !self.mu.is_zero() {
            let s = format_eps(&self.mu);
            if s.starts_with('-') {
                write!(f, "{s}")?;
            } else {
                write!(f, "+{s}")?;
            }
        }
        f.write_str(")")
    }
}

/// Strips the translation from `V_{w t_ξ}^-(λ + μ)`: returns the key `(w, μ)`
/// and the factor `q^{−⟨λ+μ, ξ⟩} = q^{−⟨μ,ξ⟩} Π x_i^{−c_i}`, `ξ = Σ c_i α_i^∨`.
pub fn normalize(x: &AffineElt, mu: &Weight) -> (Key, Coeff) {
    let n = mu.rank();
    let c = x.xi.alpha_coords();
    let mut m = Monomial::q_pow(n, -pair(mu, &x.xi));
    for (x, ci) in m.x.iter_mut().zip(&c[..n]) {
        *x = -ci;
    }
    (Key::new(x.w, *mu), Coeff::term(m, 1))
}

/// A finite formal combination `Σ c_{y,μ} V_y^-(λ + μ)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DemazureCombo {
    n: usize,
    terms: BTreeMap<Key, RationalCoeff>,
}

impl DemazureCombo {
    pub fn new(n: usize) -> Self {
        DemazureCombo {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Key, &RationalCoeff)> {
        self.terms.iter()
    }

    pub fn get(&self, k: &Key) -> Option<&RationalCoeff> {
        self.terms.get(k)
    }

    pub fn add_term(&mut self, key: Key, c: &RationalCoeff) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&key) {
            Some(old) => old + c,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, sum);
        }
    }

    pub fn add_poly(&mut self, key: Key, c: Coeff) {
        self.add_term(key, &RationalCoeff::from(c));
    }

    /// Adds `c · V_{x}^-(λ + μ)` after normalizing the symbol.
    pub fn add_symbol(&mut self, x: &AffineElt, mu: &Weight, c: &Coeff) {
        let (key, m) = normalize(x, mu);
        self.add_poly(key, c * &m);
    }

    pub fn add(&self, o: &DemazureCombo) -> DemazureCombo {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(*k, c);
        }
        out
    }

    pub fn sub(&self, o: &DemazureCombo) -> DemazureCombo {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> DemazureCombo {
        DemazureCombo {
            n: self.n,
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &RationalCoeff) -> DemazureCombo {
        let mut out = DemazureCombo::new(self.n);
        for (k, v) in &self.terms {
            out.add_term(*k, &(v * c));
        }
        out
    }

    pub fn scale_coeff(&self, c: &Coeff) -> DemazureCombo {
        self.scale(&RationalCoeff::from(c.clone()))
    }

    /// Replaces every key for which `f` returns an expansion by that
    /// expansion, times the key's coefficient.
    pub fn substitute(&self, mut f: impl FnMut(&Key) -> Option<DemazureCombo>) -> DemazureCombo {
        let mut out = DemazureCombo::new(self.n);
        for (k, c) in &self.terms {
            match f(k) {
                Some(e) => {
                    for (k2, c2) in &e.terms {
                        out.add_term(*k2, &(c * c2));
                    }
                }
                None => out.add_term(*k, c),
            }
        }
        out
    }

    /// Least common multiple of all denominators.
    pub fn atoms(&self) -> Atoms {
        self.terms
            .values()
            .fold(Atoms::none(self.n), |a, c| a.lcm(c.denominator()))
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.values().all(|c| c.is_polynomial())
    }

    /// Multiplies through by `den`, which must contain every denominator.
    pub fn over(&self, den: &Atoms) -> DemazureCombo {
        let mut out = DemazureCombo::new(self.n);
        for (k, c) in &self.terms {
            out.add_poly(*k, c.over(den));
        }
        out
    }

    /// Specializes `x_i = q^{λ_i}` in a denominator-free combination.
    pub fn specialize(&self, lam: &[i32]) -> Result<BTreeMap<Key, Specialized>> {
        let mut out = BTreeMap::new();
        for (k, c) in &self.terms {
            if !c.is_polynomial() {
                return Err(Error::NotPolynomial);
            }
            let s = c.numerator().specialize(lam);
            if !s.is_empty() {
                out.insert(*k, s);
            }
        }
        Ok(out)
    }

    /// Keeps the terms whose key satisfies `f`.
    pub fn filter(&self, f: impl Fn(&Key) -> bool) -> DemazureCombo {
        DemazureCombo {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| f(k))
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }
}

/// Brings two combinations over one common denominator: `a = b` iff the
/// returned numerators agree.
pub fn clear_denominators(a: &DemazureCombo, b: &DemazureCombo) -> (DemazureCombo, DemazureCombo, Atoms) {
    let den = a.atoms().lcm(&b.atoms());
    (a.over(&den), b.over(&den), den)
}

impl fmt::Display for DemazureCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "[{c}] {k}")?;
        }
        Ok(())
    }
}
