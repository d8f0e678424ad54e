use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::Coeff;
use crate::root::MAX_RANK;
use crate::{Error, Result};

/// A multiset of atoms `1 − q^{−1} x_k^{−1}`, `k = 1..n`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Atoms {
    n: u8,
    mult: [u8; MAX_RANK],
}

impl Atoms {
    pub fn none(n: usize) -> Self {
        Atoms {
            n: n as u8,
            mult: [0; MAX_RANK],
        }
    }

    pub fn single(n: usize, k: usize) -> Self {
        let mut a = Atoms::none(n);
        a.mult[k - 1] = 1;
        a
    }

    pub fn rank(&self) -> usize {
        self.n as usize
    }

    /// Multiplicity of the atom for `x_k`.
    pub fn get(&self, k: usize) -> u8 {
        self.mult[k - 1]
    }

    pub fn is_empty(&self) -> bool {
        self.mult.iter().all(|&m| m == 0)
    }

    /// Componentwise maximum.
    pub fn lcm(&self, o: &Atoms) -> Atoms {
        let mut a = *self;
        for i in 0..MAX_RANK {
            a.mult[i] = a.mult[i].max(o.mult[i]);
        }
        a
    }

    pub fn sum(&self, o: &Atoms) -> Atoms {
        let mut a = *self;
        for i in 0..MAX_RANK {
            a.mult[i] += o.mult[i];
        }
        a
    }

    /// `self − o`, for `o ≤ self` componentwise.
    pub fn minus(&self, o: &Atoms) -> Atoms {
        let mut a = *self;
        for i in 0..MAX_RANK {
            a.mult[i] -= o.mult[i];
        }
        a
    }

    /// The product of the atoms as a polynomial.
    pub fn product(&self) -> Coeff {
        let n = self.rank();
        let mut out = Coeff::one(n);
        for k in 1..=n {
            for _ in 0..self.get(k) {
                out = &out * &Coeff::atom(n, k);
            }
        }
        out
    }
}

impl fmt::Display for Atoms {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for k in 1..=self.rank() {
            let m = self.get(k);
            if m == 0 {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "(1 - q^-1 x{k}^-1)")?;
            if m > 1 {
                write!(f, "^{m}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// `numerator / Π atoms`, kept reduced: no atom of the denominator divides
/// the numerator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RationalCoeff {
    num: Coeff,
    den: Atoms,
}

impl RationalCoeff {
    pub fn zero(n: usize) -> Self {
        RationalCoeff {
            num: Coeff::zero(n),
            den: Atoms::none(n),
        }
    }

    pub fn new(num: Coeff, den: Atoms) -> Self {
        let mut r = RationalCoeff { num, den };
        r.reduce();
        r
    }

    pub fn rank(&self) -> usize {
        self.num.rank()
    }

    pub fn numerator(&self) -> &Coeff {
        &self.num
    }

    pub fn denominator(&self) -> &Atoms {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    pub fn into_polynomial(self) -> Result<Coeff> {
        if self.is_polynomial() {
            Ok(self.num)
        } else {
            Err(Error::NotPolynomial)
        }
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = Atoms::none(self.rank());
            return;
        }
        for k in 1..=self.den.rank() {
            while self.den.mult[k - 1] > 0 {
                match self.num.div_atom(k) {
                    Some(q) => {
                        self.num = q;
                        self.den.mult[k - 1] -= 1;
                    }
                    None => break,
                }
            }
        }
    }

    /// The numerator over the larger denominator `den`, which must contain
    /// the current one.
    pub fn over(&self, den: &Atoms) -> Coeff {
        &self.num * &den.minus(&self.den).product()
    }

    pub fn scale(&self, c: &Coeff) -> RationalCoeff {
        RationalCoeff::new(&self.num * c, self.den)
    }

    pub fn div_atoms(&self, a: &Atoms) -> RationalCoeff {
        RationalCoeff::new(self.num.clone(), self.den.sum(a))
    }
}

impl From<Coeff> for RationalCoeff {
    fn from(num: Coeff) -> Self {
        let n = num.rank();
        RationalCoeff {
            num,
            den: Atoms::none(n),
        }
    }
}

impl fmt::Display for RationalCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add<&RationalCoeff> for &RationalCoeff {
    type Output = RationalCoeff;
    fn add(self, o: &RationalCoeff) -> RationalCoeff {
        if self.den == o.den {
            return RationalCoeff::new(&self.num + &o.num, self.den);
        }
        let den = self.den.lcm(&o.den);
        RationalCoeff::new(self.over(&den) + o.over(&den), den)
    }
}

impl Sub<&RationalCoeff> for &RationalCoeff {
    type Output = RationalCoeff;
    fn sub(self, o: &RationalCoeff) -> RationalCoeff {
        self + &-o
    }
}

impl Neg for &RationalCoeff {
    type Output = RationalCoeff;
    fn neg(self) -> RationalCoeff {
        RationalCoeff {
            num: -&self.num,
            den: self.den,
        }
    }
}

impl Mul<&RationalCoeff> for &RationalCoeff {
    type Output = RationalCoeff;
    fn mul(self, o: &RationalCoeff) -> RationalCoeff {
        RationalCoeff::new(&self.num * &o.num, self.den.sum(&o.den))
    }
}
