//! Exact coefficients with a symbolic dominant weight `λ`, and formal
//! combinations of Demazure symbols `V_y^-(λ + μ)`.
//!
//! A pairing `⟨λ, ξ⟩` with `ξ = Σ c_i α_i^∨` becomes the monomial
//! `Π x_i^{c_i}` with `x_i = q^{⟨λ,α_i^∨⟩}`, so one symbolic computation
//! covers every dominant `λ`. The only denominators that occur are the
//! atoms `1 − q^{−1} x_k^{−1}`.

mod coeff;
mod combo;
mod rational;

use alloc::string::String;

use crate::root::Weight;

pub use coeff::{specialized_mul, Coeff, Monomial, Specialized};
pub use combo::{clear_denominators, normalize, DemazureCombo, Key};
pub use rational::{Atoms, RationalCoeff};

/// `ε`-notation for a weight, e.g. `ε1-ε3` or `2ε2`.
pub fn format_eps(v: &Weight) -> String {
    let mut s = String::new();
    for (i, &c) in v.coords().iter().enumerate() {
        if c == 0 {
            continue;
        }
        if c < 0 {
            s.push('-');
        } else if !s.is_empty() {
            s.push('+');
        }
        if c.abs() != 1 {
            s.push_str(&alloc::format!("{}", c.abs()));
        }
        s.push_str(&alloc::format!("ε{}", i + 1));
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root::Coroot;
    use crate::weyl::{AffineElt, WeylElt};
    use proptest::prelude::*;

    const N: usize = 3;

    fn mono(q: i32, x: [i32; 3], e: [i32; 3]) -> Monomial {
        let mut m = Monomial::x_pow(N, &x);
        m.q = q;
        m.e[..3].copy_from_slice(&e);
        m
    }

    fn arb_coeff() -> impl Strategy<Value = Coeff> {
        let term = (-2i32..=2, [-2i32..=2, -2..=2, -2..=2], [-1i32..=1, -1..=1, -1..=1], -3i64..=3);
        proptest::collection::vec(term, 0..5).prop_map(|ts| {
            let mut c = Coeff::zero(N);
            for (q, x, e, v) in ts {
                c.add_term(mono(q, x, e), v);
            }
            c
        })
    }

    fn arb_rational() -> impl Strategy<Value = RationalCoeff> {
        (arb_coeff(), 0u8..=1, 0u8..=1).prop_map(|(c, a, b)| {
            let mut den = Atoms::none(N);
            for _ in 0..a {
                den = den.sum(&Atoms::single(N, 1));
            }
            for _ in 0..b {
                den = den.sum(&Atoms::single(N, 3));
            }
            RationalCoeff::new(c, den)
        })
    }

    fn arb_lambda() -> impl Strategy<Value = [i32; 3]> {
        [0i32..6, 0..6, 0..6]
    }

    fn u(k: usize) -> Coeff {
        let mut m = Monomial::q_pow(N, -1);
        m.x[k - 1] = -1;
        Coeff::term(m, 1)
    }

    #[test]
    fn geometric_series_identity() {
        for k in 1..=N {
            for big_n in 0..6 {
                let mut s = Coeff::zero(N);
                let mut p = Coeff::one(N);
                for _ in 0..=big_n {
                    s += &p;
                    p = &p * &u(k);
                }
                assert_eq!(&s * &Coeff::atom(N, k), &Coeff::one(N) - &p);
                let r = RationalCoeff::new(&Coeff::one(N) - &p, Atoms::single(N, k));
                assert!(r.is_polynomial());
                assert_eq!(r.numerator(), &s);
            }
        }
    }

    #[test]
    fn atom_does_not_divide_one() {
        assert!(Coeff::one(N).div_atom(1).is_none());
        let r = RationalCoeff::new(Coeff::one(N), Atoms::single(N, 2));
        assert!(!r.is_polynomial());
        assert_eq!(r.clone().into_polynomial(), Err(crate::Error::NotPolynomial));
    }

    #[test]
    fn normalize_examples() {
        let w = WeylElt::parse(N, "s1 s2").unwrap();
        let zero = Weight::zero(N);
        let (k, m) = normalize(&AffineElt::finite(w), &zero);
        assert_eq!((k, m), (Key::base(w), Coeff::one(N)));

        let e = WeylElt::identity(N);
        let (k, m) = normalize(&AffineElt::new(e, Coroot::simple(N, 2)), &zero);
        assert_eq!(k, Key::base(e));
        assert_eq!(m, Coeff::term(Monomial::x_pow(N, &[0, -1, 0]), 1));

        let xi = Coroot::from_alpha_coords(&[1, 1, 0]);
        let (k, m) = normalize(&AffineElt::new(e, xi), &Weight::unit(N, 2));
        assert_eq!(k, Key::new(e, Weight::unit(N, 2)));
        assert_eq!(m, Coeff::term(Monomial::x_pow(N, &[-1, -1, 0]), 1));
    }

    #[test]
    fn normalize_is_multiplicative() {
        let e = WeylElt::identity(N);
        let mu = Weight::from_coords(&[1, 0, -1]);
        let a = Coroot::from_alpha_coords(&[1, 0, 2]);
        let b = Coroot::from_alpha_coords(&[0, -1, 1]);
        let (_, ma) = normalize(&AffineElt::new(e, a), &mu);
        let (_, mb) = normalize(&AffineElt::new(e, b), &mu);
        let (_, mab) = normalize(&AffineElt::new(e, a + b), &mu);
        assert_eq!(&ma * &mb, mab);
        let (k, m0) = normalize(&AffineElt::new(e, Coroot::zero(N)), &mu);
        assert_eq!(normalize(&AffineElt::finite(k.y), &k.mu), (k, m0));
    }

    #[test]
    fn combo_examples() {
        let e = WeylElt::identity(N);
        let mut c = DemazureCombo::new(N);
        c.add_poly(Key::base(e), Coeff::term(Monomial::q_pow(N, 2), 3));
        assert_eq!(c.add(&DemazureCombo::new(N)), c);
        assert!(c.sub(&c).is_empty());

        let inv = RationalCoeff::new(Coeff::one(N), Atoms::single(N, 1));
        let mut d = DemazureCombo::new(N);
        d.add_term(Key::base(e), &inv);
        assert!(d.sub(&d).is_empty());
        assert_eq!(d.atoms(), Atoms::single(N, 1));

        let (a2, b2, den) = clear_denominators(&d, &c);
        assert_eq!(den, Atoms::single(N, 1));
        assert_eq!(a2.get(&Key::base(e)).unwrap().numerator(), &Coeff::one(N));
        assert_eq!(b2, c.scale_coeff(&Coeff::atom(N, 1)));

        let (a3, b3, den) = clear_denominators(&c, &c);
        assert!(den.is_empty());
        assert_eq!((a3, b3), (c.clone(), c));
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_coeff(), b in arb_coeff(), c in arb_coeff()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) * &Coeff::atom(N, 2), &(&a * &Coeff::atom(N, 2)) + &(&b * &Coeff::atom(N, 2)));
        }

        #[test]
        fn atom_division_inverts_multiplication(a in arb_coeff(), k in 1usize..=3) {
            prop_assert_eq!((&a * &Coeff::atom(N, k)).div_atom(k), Some(a));
        }

        #[test]
        fn rational_field_laws(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn specialization_is_a_homomorphism(a in arb_coeff(), b in arb_coeff(), lam in arb_lambda()) {
            let sum = (&a + &b).specialize(&lam);
            let mut direct = a.specialize(&lam);
            for (k, v) in b.specialize(&lam) {
                *direct.entry(k).or_insert(0) += v;
            }
            direct.retain(|_, v| *v != 0);
            prop_assert_eq!(sum, direct);
            prop_assert_eq!((&a * &b).specialize(&lam), specialized_mul(&a.specialize(&lam), &b.specialize(&lam)));
        }

        #[test]
        fn specialization_commutes_with_combos(
            cs in proptest::collection::vec((0usize..48, arb_coeff()), 0..6),
            s in arb_coeff(),
            lam in arb_lambda(),
        ) {
            let mut c = DemazureCombo::new(N);
            for (i, v) in &cs {
                c.add_poly(Key::base(WeylElt::from_index(N, *i)), v.clone());
            }
            let scaled = c.scale_coeff(&s).specialize(&lam).unwrap();
            let ss = s.specialize(&lam);
            let mut expect: alloc::collections::BTreeMap<Key, Specialized> = Default::default();
            for (k, v) in c.specialize(&lam).unwrap() {
                let p = specialized_mul(&v, &ss);
                if !p.is_empty() {
                    expect.insert(k, p);
                }
            }
            prop_assert_eq!(scaled, expect);
        }
    }
}
