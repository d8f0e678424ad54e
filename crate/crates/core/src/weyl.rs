//! The Weyl group of type C_n as signed permutations, and affine elements
//! `w t_ξ`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::root::{check_rank, Coroot, Letter, Root, Weight, MAX_RANK};
use crate::{Error, Result};

/// A signed permutation in window notation: `win[k-1]` is `w(k)`, with
/// `k̄` encoded as `-k`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeylElt {
    rank: u8,
    win: [i8; MAX_RANK],
}

impl WeylElt {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_RANK);
        let mut win = [0; MAX_RANK];
        for (k, x) in win[..n].iter_mut().enumerate() {
            *x = k as i8 + 1;
        }
        WeylElt { rank: n as u8, win }
    }

    pub fn from_window(win: &[i8]) -> Result<Self> {
        let n = win.len();
        check_rank(n)?;
        let mut seen = [false; MAX_RANK];
        for &x in win {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a - 1] {
                return Err(Error::Parse(alloc::format!("not a signed permutation: {win:?}")));
            }
            seen[a - 1] = true;
        }
        let mut out = WeylElt::identity(n);
        out.win[..n].copy_from_slice(win);
        Ok(out)
    }

    /// The simple reflection `s_i`.
    pub fn simple(n: usize, i: usize) -> Self {
        Self::reflection(n, &Root::simple(n, i))
    }

    /// The reflection `s_α`.
    pub fn reflection(n: usize, alpha: &Root) -> Self {
        let mut out = WeylElt::identity(n);
        for k in 1..=n {
            out.win[k - 1] = alpha.reflect_letter(Letter::plain(k)).value();
        }
        out
    }

    /// `s_{i_1} ⋯ s_{i_r}`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        check_rank(n)?;
        let mut w = WeylElt::identity(n);
        for &i in word {
            if i == 0 || i > n {
                return Err(Error::IndexOutOfRange {
                    index: i as i32,
                    rank: n,
                });
            }
            w = w.mul(&WeylElt::simple(n, i));
        }
        Ok(w)
    }

    /// Parses `e`, a word such as `s1 s2 s1`, `s1s2s1` or `s_1 s_2`, or a
    /// window such as `[2,-3,1]`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(inner) = t.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let mut win = Vec::new();
            for part in inner.split(',') {
                let v: i8 = part
                    .trim()
                    .replace('\u{2212}', "-")
                    .parse()
                    .map_err(|_| Error::Parse(String::from(s)))?;
                win.push(v);
            }
            if win.len() != n {
                return Err(Error::RankMismatch {
                    expected: n,
                    found: win.len(),
                });
            }
            return WeylElt::from_window(&win);
        }
        if t.is_empty() || t == "e" || t == "1" {
            check_rank(n)?;
            return Ok(WeylElt::identity(n));
        }
        let mut word = Vec::new();
        let mut digits = String::new();
        let flush = |digits: &mut String, word: &mut Vec<usize>| -> Result<()> {
            if !digits.is_empty() {
                word.push(digits.parse().map_err(|_| Error::Parse(String::from(s)))?);
                digits.clear();
            }
            Ok(())
        };
        for ch in t.chars() {
            match ch {
                's' | 'S' => {
                    flush(&mut digits, &mut word)?;
                    if !digits.is_empty() {
                        return Err(Error::Parse(String::from(s)));
                    }
                }
                '0'..='9' => digits.push(ch),
                ' ' | '_' | '*' | '.' | ',' => flush(&mut digits, &mut word)?,
                _ => return Err(Error::Parse(String::from(s))),
            }
        }
        flush(&mut digits, &mut word)?;
        WeylElt::from_word(n, &word)
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn window(&self) -> &[i8] {
        &self.win[..self.rank as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.window().iter().enumerate().all(|(k, &x)| x == k as i8 + 1)
    }

    /// `w(a)` for a letter of `[n̄]`.
    pub fn image(&self, a: Letter) -> Letter {
        let x = self.win[a.index() - 1];
        Letter::new(if a.is_barred() { -x } else { x })
    }

    /// `w(λ)`, using `w(ε_k) = ε_{w(k)}`.
    pub fn act(&self, lam: &Weight) -> Weight {
        let n = self.rank();
        let mut out = [0; MAX_RANK];
        for k in 0..n {
            let x = self.win[k];
            out[x.unsigned_abs() as usize - 1] = lam[k] * i32::from(x.signum());
        }
        Weight::from_coords(&out[..n])
    }

    pub fn act_coroot(&self, cv: &Coroot) -> Coroot {
        let n = self.rank();
        let mut out = [0; MAX_RANK];
        for k in 0..n {
            let x = self.win[k];
            out[x.unsigned_abs() as usize - 1] = cv[k] * i32::from(x.signum());
        }
        Coroot::from_coords(&out[..n])
    }

    /// `w(α)` as a signed root.
    pub fn act_root(&self, alpha: &Root) -> Root {
        let (i, b) = alpha.letters();
        let r = Root::from_letters(self.rank(), self.image(Letter::plain(i)), self.image(b))
            .expect("image of a root is a root");
        if alpha.is_positive() {
            r
        } else {
            -r
        }
    }

    /// The product `self · other` (apply `other` first).
    pub fn mul(&self, other: &WeylElt) -> WeylElt {
        debug_assert_eq!(self.rank, other.rank);
        let mut out = *self;
        for k in 0..self.rank() {
            out.win[k] = self.image(Letter::new(other.win[k])).value();
        }
        out
    }

    pub fn inverse(&self) -> WeylElt {
        let mut out = *self;
        for k in 0..self.rank() {
            let x = self.win[k];
            out.win[x.unsigned_abs() as usize - 1] = (k as i8 + 1) * x.signum();
        }
        out
    }

    /// `ℓ(w)`: the number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        let n = self.rank();
        let mut len = 0;
        for i in 1..=n {
            let wi = self.image(Letter::plain(i));
            for j in i + 1..=n {
                len += usize::from(wi > self.image(Letter::plain(j)));
                len += usize::from(wi > self.image(Letter::barred(j)));
            }
            len += usize::from(wi > wi.bar());
        }
        len
    }

    /// Whether `ℓ(w s_i) < ℓ(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        let n = self.rank();
        if i < n {
            self.image(Letter::plain(i)) > self.image(Letter::plain(i + 1))
        } else {
            self.win[n - 1] < 0
        }
    }

    /// A reduced word, obtained by repeatedly removing the smallest right
    /// descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let n = self.rank();
        let mut w = *self;
        let mut word = Vec::new();
        'outer: loop {
            for i in 1..=n {
                if w.has_right_descent(i) {
                    w = w.mul(&WeylElt::simple(n, i));
                    word.push(i);
                    continue 'outer;
                }
            }
            break;
        }
        word.reverse();
        word
    }

    /// `|W| = 2^n n!`.
    pub fn order(n: usize) -> usize {
        (1..=n).product::<usize>() << n
    }

    /// The longest element `−1`.
    pub fn longest(n: usize) -> Self {
        let mut w = WeylElt::identity(n);
        for x in w.win[..n].iter_mut() {
            *x = -*x;
        }
        w
    }

    /// A dense index in `0..order(n)`: Lehmer rank of `|w|` times `2^n`
    /// plus the bitmask of negative entries.
    pub fn index(&self) -> usize {
        let n = self.rank();
        let mut signs = 0usize;
        let mut lehmer = 0usize;
        for k in 0..n {
            if self.win[k] < 0 {
                signs |= 1 << k;
            }
            let a = self.win[k].unsigned_abs();
            let smaller = self.win[k + 1..n]
                .iter()
                .filter(|x| x.unsigned_abs() < a)
                .count();
            lehmer = lehmer * (n - k) + smaller;
        }
        (lehmer << n) | signs
    }

    pub fn from_index(n: usize, idx: usize) -> Self {
        let signs = idx & ((1 << n) - 1);
        let mut lehmer = idx >> n;
        let mut digits = [0usize; MAX_RANK];
        for k in (0..n).rev() {
            let base = n - k;
            digits[k] = lehmer % base;
            lehmer /= base;
        }
        let mut avail: Vec<i8> = (1..=n as i8).collect();
        let mut w = WeylElt::identity(n);
        for (k, &d) in digits.iter().enumerate().take(n) {
            let a = avail.remove(d);
            w.win[k] = if signs & (1 << k) != 0 { -a } else { a };
        }
        w
    }

    /// All elements of `W`, in index order.
    pub fn all(n: usize) -> Vec<WeylElt> {
        (0..WeylElt::order(n)).map(|i| WeylElt::from_index(n, i)).collect()
    }
}

impl fmt::Debug for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, x) in self.window().iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

/// An element `w t_ξ` of the affine Weyl group.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct AffineElt {
    pub w: WeylElt,
    pub xi: Coroot,
}

impl AffineElt {
    pub fn new(w: WeylElt, xi: Coroot) -> Self {
        AffineElt { w, xi }
    }

    pub fn finite(w: WeylElt) -> Self {
        AffineElt {
            w,
            xi: Coroot::zero(w.rank()),
        }
    }

    pub fn translation(xi: Coroot) -> Self {
        AffineElt {
            w: WeylElt::identity(xi.rank()),
            xi,
        }
    }

    /// `(w t_ξ)(v t_η) = (wv) t_{v^{-1}ξ + η}`.
    pub fn mul(&self, other: &AffineElt) -> AffineElt {
        AffineElt {
            w: self.w.mul(&other.w),
            xi: other.w.inverse().act_coroot(&self.xi) + other.xi,
        }
    }

    pub fn inverse(&self) -> AffineElt {
        AffineElt {
            w: self.w.inverse(),
            xi: -self.w.act_coroot(&self.xi),
        }
    }

    /// The affine action on the coroot lattice, `x ↦ w(x + ξ)`.
    pub fn apply(&self, x: &Coroot) -> Coroot {
        self.w.act_coroot(&(*x + self.xi))
    }
}
