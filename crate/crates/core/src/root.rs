//! The type C_n root system in the ε-coordinate realization.
//!
//! Weights are integer vectors in the basis ε_1..ε_n, coroots integer
//! vectors in the dual basis ε_1^∨..ε_n^∨, so the pairing is the plain dot
//! product. Roots are stored combinatorially as a pair `(i, b)` of an
//! unbarred index `i` and a letter `b` of `[n̄]` lying after `i` in the order
//! `1 < 2 < ... < n < n̄ < ... < 1̄`, plus a sign; `(i, b)` stands for
//! `ε_i − ε_b` under the convention `ε_{k̄} = −ε_k`.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Index, Mul, Neg, Sub, SubAssign};

use crate::{Error, Result};

/// Largest supported rank. Exhaustive sweeps are only practical far below it.
pub const MAX_RANK: usize = 8;

pub(crate) fn check_rank(n: usize) -> Result<()> {
    if n == 0 || n > MAX_RANK {
        Err(Error::RankOutOfRange(n))
    } else {
        Ok(())
    }
}

/// An element of `[n̄] = {1, ..., n, n̄, ..., 1̄}`, stored as a signed index
/// (`k̄` is `-k`).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter(i8);

impl Letter {
    pub fn new(k: i8) -> Self {
        debug_assert!(k != 0);
        Letter(k)
    }

    /// The unbarred letter `k`.
    pub fn plain(k: usize) -> Self {
        Letter(k as i8)
    }

    /// The barred letter `k̄`.
    pub fn barred(k: usize) -> Self {
        Letter(-(k as i8))
    }

    pub fn value(self) -> i8 {
        self.0
    }

    /// Underlying index in `1..=n`.
    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_barred(self) -> bool {
        self.0 < 0
    }

    pub fn bar(self) -> Self {
        Letter(-self.0)
    }

    /// +1 for unbarred letters, -1 for barred ones.
    pub fn sign(self) -> i32 {
        if self.0 > 0 {
            1
        } else {
            -1
        }
    }

    /// Position in the total order, `1..=2n`.
    pub fn pos(self, n: usize) -> usize {
        if self.0 > 0 {
            self.0 as usize
        } else {
            2 * n + 1 - self.index()
        }
    }

    /// Inverse of [`Letter::pos`].
    pub fn from_pos(n: usize, pos: usize) -> Self {
        debug_assert!((1..=2 * n).contains(&pos));
        if pos <= n {
            Letter::plain(pos)
        } else {
            Letter::barred(2 * n + 1 - pos)
        }
    }

    pub fn check(self, n: usize) -> Result<Self> {
        if self.0 == 0 || self.index() > n {
            Err(Error::IndexOutOfRange {
                index: self.0 as i32,
                rank: n,
            })
        } else {
            Ok(self)
        }
    }

    fn order_key(self) -> (u8, i8) {
        if self.0 > 0 {
            (0, self.0)
        } else {
            (1, self.0)
        }
    }
}

// The total order 1 < ... < n < n̄ < ... < 1̄ does not depend on n.
impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_barred() {
            write!(f, "{}\u{304}", self.index())
        } else {
            write!(f, "{}", self.0)
        }
    }
}

macro_rules! lattice_vector {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name {
            rank: u8,
            coords: [i32; MAX_RANK],
        }

        impl $name {
            pub fn zero(n: usize) -> Self {
                assert!(n <= MAX_RANK, "rank {n} exceeds MAX_RANK");
                Self { rank: n as u8, coords: [0; MAX_RANK] }
            }

            pub fn from_coords(coords: &[i32]) -> Self {
                let mut v = Self::zero(coords.len());
                v.coords[..coords.len()].copy_from_slice(coords);
                v
            }

            /// The `k`-th basis vector (1-based).
            pub fn unit(n: usize, k: usize) -> Self {
                let mut v = Self::zero(n);
                v.coords[k - 1] = 1;
                v
            }

            pub fn rank(&self) -> usize {
                self.rank as usize
            }

            pub fn coords(&self) -> &[i32] {
                &self.coords[..self.rank as usize]
            }

            pub fn is_zero(&self) -> bool {
                self.coords.iter().all(|&c| c == 0)
            }
        }

        impl Index<usize> for $name {
            type Output = i32;
            fn index(&self, i: usize) -> &i32 {
                &self.coords()[i]
            }
        }

        impl Add for $name {
            type Output = Self;
            fn add(mut self, rhs: Self) -> Self {
                self += rhs;
                self
            }
        }

        impl AddAssign for $name {
            fn add_assign(&mut self, rhs: Self) {
                debug_assert_eq!(self.rank, rhs.rank);
                for (a, b) in self.coords.iter_mut().zip(rhs.coords.iter()) {
                    *a += b;
                }
            }
        }

        impl Sub for $name {
            type Output = Self;
            fn sub(mut self, rhs: Self) -> Self {
                self -= rhs;
                self
            }
        }

        impl SubAssign for $name {
            fn sub_assign(&mut self, rhs: Self) {
                debug_assert_eq!(self.rank, rhs.rank);
                for (a, b) in self.coords.iter_mut().zip(rhs.coords.iter()) {
                    *a -= b;
                }
            }
        }

        impl Neg for $name {
            type Output = Self;
            fn neg(mut self) -> Self {
                for a in self.coords.iter_mut() {
                    *a = -*a;
                }
                self
            }
        }

        impl Mul<$name> for i32 {
            type Output = $name;
            fn mul(self, mut rhs: $name) -> $name {
                for a in rhs.coords.iter_mut() {
                    *a *= self;
                }
                rhs
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}{:?}", stringify!($name), self.coords())
            }
        }
    };
}

lattice_vector!(
    /// A weight, in ε-coordinates.
    Weight
);
lattice_vector!(
    /// A coroot-lattice element, in dual ε-coordinates.
    Coroot
);

impl Weight {
    /// `ε_a` for a letter `a`, with `ε_{k̄} = −ε_k`.
    pub fn eps(n: usize, a: Letter) -> Self {
        a.sign() * Weight::unit(n, a.index())
    }

    /// `ϖ_i = ε_1 + ... + ε_i`; `ϖ_0 = 0`.
    pub fn fundamental(n: usize, i: usize) -> Self {
        let mut v = Weight::zero(n);
        for c in v.coords[..i].iter_mut() {
            *c = 1;
        }
        v
    }

    /// `ρ`, with ε-coordinates `(n, n-1, ..., 1)`.
    pub fn rho(n: usize) -> Self {
        let mut v = Weight::zero(n);
        for (k, c) in v.coords[..n].iter_mut().enumerate() {
            *c = (n - k) as i32;
        }
        v
    }

    /// The letter `a` with `self = ε_a`, if `self` is of that form.
    pub fn as_eps_letter(&self) -> Option<Letter> {
        let mut found = None;
        for (k, &c) in self.coords().iter().enumerate() {
            match c {
                0 => {}
                1 | -1 if found.is_none() => {
                    found = Some(if c == 1 {
                        Letter::plain(k + 1)
                    } else {
                        Letter::barred(k + 1)
                    })
                }
                _ => return None,
            }
        }
        found
    }
}

impl Coroot {
    /// The simple coroot `α_i^∨`: `ε_i^∨ − ε_{i+1}^∨` for `i < n`, `ε_n^∨` for `i = n`.
    pub fn simple(n: usize, i: usize) -> Self {
        let mut v = Coroot::unit(n, i);
        if i < n {
            v.coords[i] = -1;
        }
        v
    }

    /// Coordinates in the basis of simple coroots: `c_i = ⟨ϖ_i, self⟩`.
    pub fn alpha_coords(&self) -> [i32; MAX_RANK] {
        let mut out = [0; MAX_RANK];
        let mut acc = 0;
        for (k, &c) in self.coords().iter().enumerate() {
            acc += c;
            out[k] = acc;
        }
        out
    }

    pub fn from_alpha_coords(alpha: &[i32]) -> Self {
        let n = alpha.len();
        let mut v = Coroot::zero(n);
        for (i, &c) in alpha.iter().enumerate() {
            v += c * Coroot::simple(n, i + 1);
        }
        v
    }
}

/// The canonical pairing `⟨λ, ξ⟩`.
pub fn pair(lam: &Weight, cv: &Coroot) -> i32 {
    debug_assert_eq!(lam.rank, cv.rank);
    lam.coords
        .iter()
        .zip(cv.coords.iter())
        .map(|(a, b)| a * b)
        .sum()
}

/// A root `±(i, b)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    i: u8,
    b: Letter,
    negative: bool,
}

impl Root {
    /// `(i, j) = ε_i − ε_j`, `i < j`.
    pub fn diff(i: usize, j: usize) -> Self {
        assert!(0 < i && i < j);
        Root {
            i: i as u8,
            b: Letter::plain(j),
            negative: false,
        }
    }

    /// `(i, j̄) = ε_i + ε_j`, `i < j`; `(i, ī) = 2ε_i` when `i = j`.
    pub fn sum(i: usize, j: usize) -> Self {
        assert!(0 < i && i <= j);
        Root {
            i: i as u8,
            b: Letter::barred(j),
            negative: false,
        }
    }

    /// `(i, ī) = 2ε_i`.
    pub fn long(i: usize) -> Self {
        Root::sum(i, i)
    }

    /// The positive root `(i, b)` for letters `i < b`, `i` unbarred.
    pub fn from_pair(i: usize, b: Letter) -> Result<Self> {
        let ok = i > 0
            && if b.is_barred() {
                i <= b.index()
            } else {
                i < b.index()
            };
        if !ok {
            return Err(Error::NotARoot(alloc::format!("({i},{b})")));
        }
        Ok(Root {
            i: i as u8,
            b,
            negative: false,
        })
    }

    /// The simple root `α_i`.
    pub fn simple(n: usize, i: usize) -> Self {
        if i < n {
            Root::diff(i, i + 1)
        } else {
            Root::long(n)
        }
    }

    /// All `n²` positive roots: `(i,j)`, then `(i,j̄)`, then `(i,ī)`.
    pub fn positive_roots(n: usize) -> Vec<Root> {
        let mut out = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in i + 1..=n {
                out.push(Root::diff(i, j));
            }
        }
        for i in 1..=n {
            for j in i + 1..=n {
                out.push(Root::sum(i, j));
            }
        }
        for i in 1..=n {
            out.push(Root::long(i));
        }
        out
    }

    /// The pair `(i, b)` of the underlying positive root.
    pub fn letters(&self) -> (usize, Letter) {
        (self.i as usize, self.b)
    }

    pub fn is_positive(&self) -> bool {
        !self.negative
    }

    /// `sgn(α)`.
    pub fn sign(&self) -> i32 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    /// `|α|`.
    pub fn abs(&self) -> Self {
        Root {
            negative: false,
            ..*self
        }
    }

    pub fn is_long(&self) -> bool {
        self.b == Letter::barred(self.i as usize)
    }

    pub fn is_simple(&self, n: usize) -> bool {
        !self.negative && {
            let i = self.i as usize;
            if i < n {
                self.b == Letter::plain(i + 1)
            } else {
                self.is_long()
            }
        }
    }

    pub fn weight(&self, n: usize) -> Weight {
        let v = Weight::eps(n, Letter::plain(self.i as usize)) - Weight::eps(n, self.b);
        if self.negative {
            -v
        } else {
            v
        }
    }

    pub fn coroot(&self, n: usize) -> Coroot {
        let mut v = Coroot::unit(n, self.i as usize);
        if !self.is_long() {
            v -= self.b.sign() * Coroot::unit(n, self.b.index());
        }
        if self.negative {
            -v
        } else {
            v
        }
    }

    /// Recognizes a root from its ε-coordinates.
    pub fn from_weight(v: &Weight) -> Option<Root> {
        let nz: Vec<(usize, i32)> = v
            .coords()
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (k + 1, c))
            .collect();
        let (pos, negative) = match nz.as_slice() {
            [(k, 2)] => (Root::long(*k), false),
            [(k, -2)] => (Root::long(*k), true),
            [(i, a), (j, b)] if a.abs() == 1 && b.abs() == 1 => {
                // first nonzero coordinate decides the sign
                let negative = *a < 0;
                let root = if a == b {
                    Root::sum(*i, *j)
                } else {
                    Root::diff(*i, *j)
                };
                (root, negative)
            }
            _ => return None,
        };
        Some(if negative { -pos } else { pos })
    }

    /// `ε_a − ε_c` for letters with `a ≠ c`.
    pub fn from_letters(n: usize, a: Letter, c: Letter) -> Option<Root> {
        Root::from_weight(&(Weight::eps(n, a) - Weight::eps(n, c)))
    }

    /// The reflection `s_α` on letters: the transposition `(i b)(ī b̄)`.
    pub fn reflect_letter(&self, x: Letter) -> Letter {
        let i = Letter::plain(self.i as usize);
        let b = self.b;
        if x == i {
            b
        } else if x == b {
            i
        } else if x == i.bar() {
            b.bar()
        } else if x == b.bar() {
            i.bar()
        } else {
            x
        }
    }

    /// `s_α(λ) = λ − ⟨λ, α^∨⟩ α`.
    pub fn reflect(&self, lam: &Weight) -> Weight {
        let n = lam.rank();
        *lam - pair(lam, &self.coroot(n)) * self.weight(n)
    }

    /// `s_α` on the coroot side: `ξ − ⟨α, ξ⟩ α^∨`.
    pub fn reflect_coroot(&self, xi: &Coroot) -> Coroot {
        let n = xi.rank();
        *xi - pair(&self.weight(n), xi) * self.coroot(n)
    }
}

impl Neg for Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root {
            negative: !self.negative,
            ..self
        }
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        write!(f, "({},{})", self.i, self.b)
    }
}

/// `d(a, b)` on `[n̄]`: the gap between positions in the total order.
pub fn distance(n: usize, a: Letter, b: Letter) -> usize {
    a.pos(n).abs_diff(b.pos(n))
}
