use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::root::{Weight, MAX_RANK};

/// `q^a x_1^{b_1} ⋯ x_n^{b_n} e^ν`, where `x_i` stands for `q^{⟨λ,α_i^∨⟩}`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    n: u8,
    pub q: i32,
    pub x: [i32; MAX_RANK],
    pub e: [i32; MAX_RANK],
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial {
            n: n as u8,
            q: 0,
            x: [0; MAX_RANK],
            e: [0; MAX_RANK],
        }
    }

    pub fn rank(&self) -> usize {
        self.n as usize
    }

    pub fn q_pow(n: usize, a: i32) -> Self {
        Monomial {
            q: a,
            ..Monomial::one(n)
        }
    }

    /// `x^b` for exponents indexed by simple coroots.
    pub fn x_pow(n: usize, b: &[i32]) -> Self {
        let mut m = Monomial::one(n);
        m.x[..b.len()].copy_from_slice(b);
        m
    }

    pub fn exp(nu: &Weight) -> Self {
        let mut m = Monomial::one(nu.rank());
        m.e[..nu.rank()].copy_from_slice(nu.coords());
        m
    }

    pub fn weight(&self) -> Weight {
        Weight::from_coords(&self.e[..self.rank()])
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut m = *self;
        m.q += o.q;
        for i in 0..MAX_RANK {
            m.x[i] += o.x[i];
            m.e[i] += o.e[i];
        }
        m
    }

    /// Total `q`-degree once `x_i = q^{λ_i}`.
    pub fn specialize(&self, lam: &[i32]) -> i32 {
        self.q + self.x.iter().zip(lam).map(|(b, l)| b * l).sum::<i32>()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<alloc::string::String> = Vec::new();
        if self.q != 0 {
            parts.push(if self.q == 1 {
                "q".into()
            } else {
                alloc::format!("q^{}", self.q)
            });
        }
        for (i, &b) in self.x[..self.rank()].iter().enumerate() {
            match b {
                0 => {}
                1 => parts.push(alloc::format!("x{}", i + 1)),
                _ => parts.push(alloc::format!("x{}^{}", i + 1, b)),
            }
        }
        if self.e[..self.rank()].iter().any(|&c| c != 0) {
            parts.push(alloc::format!("e^{}", super::format_eps(&self.weight())));
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

/// An integer Laurent polynomial in `q`, `x_i` and `e^ν`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Coeff {
    n: u8,
    terms: BTreeMap<Monomial, i64>,
}

impl Coeff {
    pub fn zero(n: usize) -> Self {
        Coeff {
            n: n as u8,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Coeff::term(Monomial::one(n), 1)
    }

    pub fn term(m: Monomial, c: i64) -> Self {
        let mut out = Coeff::zero(m.rank());
        out.add_term(m, c);
        out
    }

    pub fn rank(&self) -> usize {
        self.n as usize
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &i64)> {
        self.terms.iter()
    }

    /// The single term, if there is exactly one.
    pub fn as_term(&self) -> Option<(Monomial, i64)> {
        match self.terms.len() {
            1 => self.terms.iter().next().map(|(m, c)| (*m, *c)),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(m).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, c: i64) -> Coeff {
        if c == 0 {
            return Coeff::zero(self.rank());
        }
        Coeff {
            n: self.n,
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Coeff {
        Coeff {
            n: self.n,
            terms: self.terms.iter().map(|(t, v)| (t.mul(m), *v)).collect(),
        }
    }

    /// The atom `1 − q^{−1} x_k^{−1}`.
    pub fn atom(n: usize, k: usize) -> Coeff {
        let mut c = Coeff::one(n);
        let mut m = Monomial::q_pow(n, -1);
        m.x[k - 1] = -1;
        c.add_term(m, -1);
        c
    }

    /// Exact division by `1 − q^{−1} x_k^{−1}`, if it divides.
    ///
    /// Monomials are grouped into orbits under multiplication by
    /// `u = q^{−1} x_k^{−1}`; within an orbit the quotient is the sequence of
    /// partial sums, which must telescope to zero.
    pub fn div_atom(&self, k: usize) -> Option<Coeff> {
        let i = k - 1;
        let mut orbits: BTreeMap<Monomial, BTreeMap<i32, i64>> = BTreeMap::new();
        for (m, &c) in &self.terms {
            let mut rep = *m;
            rep.x[i] -= m.q;
            rep.q = 0;
            *orbits.entry(rep).or_default().entry(-m.q).or_insert(0) += c;
        }
        let mut out = Coeff::zero(self.rank());
        for (rep, series) in orbits {
            if series.values().sum::<i64>() != 0 {
                return None;
            }
            let (lo, hi) = (*series.keys().next()?, *series.keys().next_back()?);
            let mut acc = 0;
            for t in lo..hi {
                acc += series.get(&t).copied().unwrap_or(0);
                let mut m = rep;
                m.q = -t;
                m.x[i] -= t;
                out.add_term(m, acc);
            }
        }
        Some(out)
    }

    /// Substitutes `x_i = q^{λ_i}`, keeping `q` and `e^ν`.
    pub fn specialize(&self, lam: &[i32]) -> Specialized {
        let mut out = Specialized::new();
        for (m, &c) in &self.terms {
            let key = (m.specialize(lam), m.weight());
            let slot = out.entry(key).or_insert(0);
            *slot += c;
            if *slot == 0 {
                out.remove(&key);
            }
        }
        out
    }

    /// Replaces every `e^ν` by `e^{f(ν)}`.
    pub fn map_weights(&self, f: impl Fn(&Weight) -> Weight) -> Coeff {
        let mut out = Coeff::zero(self.rank());
        for (m, &c) in &self.terms {
            let nu = f(&m.weight());
            let mut t = *m;
            t.e = [0; MAX_RANK];
            t.e[..nu.rank()].copy_from_slice(nu.coords());
            out.add_term(t, c);
        }
        out
    }
}

/// A specialized coefficient: `(q-degree, e-weight) ↦ integer`.
pub type Specialized = BTreeMap<(i32, Weight), i64>;

/// Product of specialized coefficients.
pub fn specialized_mul(a: &Specialized, b: &Specialized) -> Specialized {
    let mut out = Specialized::new();
    for ((qa, wa), ca) in a {
        for ((qb, wb), cb) in b {
            *out.entry((qa + qb, *wa + *wb)).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, &c)) in self.terms.iter().enumerate() {
            let body = alloc::format!("{m}");
            let mag = c.unsigned_abs();
            let sign = if c < 0 { "-" } else { "+" };
            if idx == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (mag, body.as_str()) {
                (1, _) => f.write_str(&body)?,
                (_, "1") => write!(f, "{mag}")?,
                _ => write!(f, "{mag} {body}")?,
            }
        }
        Ok(())
    }
}

impl Add<&Coeff> for &Coeff {
    type Output = Coeff;
    fn add(self, o: &Coeff) -> Coeff {
        let mut out = self.clone();
        out += o;
        out
    }
}

impl Add for Coeff {
    type Output = Coeff;
    fn add(mut self, o: Coeff) -> Coeff {
        self += &o;
        self
    }
}

impl AddAssign<&Coeff> for Coeff {
    fn add_assign(&mut self, o: &Coeff) {
        for (m, &c) in &o.terms {
            self.add_term(*m, c);
        }
    }
}

impl Sub<&Coeff> for &Coeff {
    type Output = Coeff;
    fn sub(self, o: &Coeff) -> Coeff {
        let mut out = self.clone();
        out -= o;
        out
    }
}

impl Sub for Coeff {
    type Output = Coeff;
    fn sub(mut self, o: Coeff) -> Coeff {
        self -= &o;
        self
    }
}

impl SubAssign<&Coeff> for Coeff {
    fn sub_assign(&mut self, o: &Coeff) {
        for (m, &c) in &o.terms {
            self.add_term(*m, -c);
        }
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        self.scale(-1)
    }
}

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        self.scale(-1)
    }
}

impl Mul<&Coeff> for &Coeff {
    type Output = Coeff;
    fn mul(self, o: &Coeff) -> Coeff {
        let mut out = Coeff::zero(self.rank());
        for (a, &ca) in &self.terms {
            for (b, &cb) in &o.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }
}

impl Mul for Coeff {
    type Output = Coeff;
    fn mul(self, o: Coeff) -> Coeff {
        &self * &o
    }
}
