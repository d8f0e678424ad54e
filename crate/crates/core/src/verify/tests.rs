use super::*;
use crate::alcove::make_chain;
use crate::chevalley::{ic_rhs_cancel_free_first, ic_rhs_first, Direction, Variant};
use crate::qbg::Qbg;

fn w(n: usize, s: &str) -> WeylElt {
    WeylElt::parse(n, s).unwrap()
}

#[test]
fn smallest_instance() {
    let g = Qbg::new(2).unwrap();
    let mut eng = Engine::new(&g);
    let r = verify_first_half(&mut eng, &WeylElt::identity(2), 1).unwrap();
    assert!(r.is_verified(), "{}", r.residual);
    assert_eq!(r.denominator, Atoms::single(2, 1));
}

#[test]
fn rank_two_exhaustive() {
    let g = Qbg::new(2).unwrap();
    let mut eng = Engine::new(&g);
    for y in WeylElt::all(2) {
        for m in 1..=2 {
            assert!(verify_first_half(&mut eng, &y, m).unwrap().is_verified());
            assert!(verify_second_half(&mut eng, &y, m).unwrap().is_verified());
            for r in verify_key_props(&mut eng, &y, m).unwrap() {
                assert!(r.is_verified(), "{}", r.instance);
            }
        }
    }
}

#[test]
fn corrupted_rhs_fails() {
    let n = 2;
    let g = Qbg::new(n).unwrap();
    let mut eng = Engine::new(&g);
    let spec = IdentitySpec::first(w(n, "s1"), 2).unwrap();
    let mut rhs = eng.build(&spec).unwrap();
    rhs.terms.pop();
    let lhs = lhs_combo(&spec);
    let c = clear(&mut eng, &lhs, &rhs.combo()).unwrap();
    assert_ne!(c.lhs, c.rhs);
}

#[test]
fn examples_verify_with_translation() {
    let n = 3;
    let g = Qbg::new(n).unwrap();
    let mut eng = Engine::new(&g);
    let xi = Coroot::from_alpha_coords(&[2, -1, 1]);
    for (word, m, dir) in [
        ("s1 s2 s1", 3, Direction::Plus),
        ("s3 s2", 2, Direction::Minus),
        ("s1 s2 s3 s2 s1", 1, Direction::Minus),
    ] {
        for x in [AffineElt::finite(w(n, word)), AffineElt::new(w(n, word), xi)] {
            let spec = IdentitySpec::new(x, m, dir, Variant::Full).unwrap();
            let r = verify_identity(&mut eng, &spec).unwrap();
            assert!(r.is_verified(), "{spec}");
            assert!(specialization_agrees(&mut eng, &spec, &[1, 0, 2]).unwrap());
        }
    }
}

#[test]
fn certificate_examples() {
    let n = 3;
    let g = Qbg::new(n).unwrap();
    let x = AffineElt::finite(w(n, "s1 s2 s1"));
    assert!(cancellation_certificate(&ic_rhs_cancel_free_first(&g, &x, 3).unwrap().terms));
    assert!(!cancellation_certificate(&ic_rhs_first(&g, &x, 3).unwrap().terms));
    let one = &ic_rhs_first(&g, &x, 1).unwrap().terms[..1];
    assert!(cancellation_certificate(one));
}

#[test]
fn involution_fixed_points() {
    let n = 3;
    let g = Qbg::new(n).unwrap();
    let mut eng = Engine::new(&g);
    for k in 1..=n {
        let len = make_chain(ChainKind::Gamma(k), n).unwrap().len();
        for y in WeylElt::all(n) {
            let i = pair_involution(&mut eng, &y, k, &[], &[]).unwrap();
            assert_eq!((i.b.as_slice(), i.a1.as_slice(), i.case), (&[][..], &[][..], 6));
            // `{α_k}` on both sides is always admissible.
            let i = pair_involution(&mut eng, &y, k, &[len - 1], &[0]).unwrap();
            assert_eq!((i.b, i.a1, i.case), (alloc::vec![len - 1], alloc::vec![0], 5));
        }
    }
    let e = WeylElt::identity(n);
    assert!(pair_involution(&mut eng, &e, 1, &[0, 1, 2], &[]).is_err());
}

#[test]
fn gamma_is_reversed_gamma_star() {
    for n in 1..=4 {
        for k in 1..=n {
            let a = make_chain(ChainKind::Gamma(k), n).unwrap();
            let b = make_chain(ChainKind::GammaStar(k), n).unwrap();
            let l = a.len();
            assert_eq!(l, b.len());
            for p in 0..l {
                assert_eq!(a.entries()[p].abs(), b.entries()[l - 1 - p].abs());
            }
            assert!(b.entries()[0].abs().is_simple(n));
        }
    }
}

#[test]
fn involution_rank_two() {
    let g = Qbg::new(2).unwrap();
    let mut eng = Engine::new(&g);
    for y in WeylElt::all(2) {
        for k in 1..=2 {
            let r = check_involution(&mut eng, &y, k).unwrap();
            assert!(r.holds(), "{:?}", r.failures);
            assert_eq!(r.cases[4] + r.cases[5], 2);
        }
    }
}

#[test]
fn collapse_examples() {
    let n = 3;
    let g = Qbg::new(n).unwrap();
    let mut eng = Engine::new(&g);
    let y = w(n, "s1 s2 s1");
    let sum = collapse_sum(&mut eng, &y, 3, 1).unwrap();
    let mut expect = GroupAlgebraElt::new();
    expect.insert(WeylElt::identity(n), Coeff::term(Monomial::x_pow(n, &[-1, -1, 0]), 1));
    assert_eq!(sum, expect);
    for z in WeylElt::all(n) {
        assert!(collapse_check(&mut eng, &z, 2, 1).unwrap());
        assert_eq!(eng.chains(&z, Letter::plain(2), Letter::plain(1)).unwrap().len(), 1);
    }
    assert!(collapse_sum(&mut eng, &y, 1, 1).is_err());
}

#[test]
fn scan_examples() {
    let n = 3;
    let g = Qbg::new(n).unwrap();
    let mut eng = Engine::new(&g);
    let a = scan_instance(&mut eng, &w(n, "s3 s2"), 2).unwrap();
    assert!(a.ls().contains(&3));
    let b = scan_instance(&mut eng, &w(n, "s1 s2 s3 s2 s1"), 1).unwrap();
    assert!(b.ls().contains(&1));
    assert!(a.working.iter().chain(&b.working).all(|&(_, c)| c));
}
