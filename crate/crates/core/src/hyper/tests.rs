use super::*;
use crate::arith::{int, rat, BigFloat, Coeff, Rational};
use crate::closed::{bc, macdonald_equal, rhs_complex, rhs_exact};
use crate::kernels::{KernelFamily, KernelParams};

const PREC: usize = 192;

fn diff(a: &BigFloat, b: &BigFloat) -> f64 {
    a.sub_ref(b).abs().to_f64()
}

#[test]
fn dixon_matches_series() {
    // 2a = b = c = -2u: 3F2(-2u, -2u, -2u; 1, 1; 1), u = 1 terminates at -6
    let h = HyperSeries::new(vec![int(-2); 3], vec![int(1), int(1)]);
    assert!(matches!(hyper_sum(&h, PREC).unwrap(), HyperValue::Exact(r) if r == int(-6)));
    let fb = fb_lattice_sum(&int(1), &int(0), 0, 50, PREC).unwrap();
    assert_eq!(fb.exact, Some(int(-6)));
    // b = 0 degenerates to 1
    let d = dixon_rhs(&rat(1, 2), &int(0), &rat(1, 7), PREC).unwrap();
    assert!(diff(&d, &BigFloat::from_i64(1, PREC)) < 1e-50);
    // (a, b, c) = (1/2, -1/4, -1/4): truncated series with its tail
    let (a, b, c) = (rat(1, 2), rat(-1, 4), rat(-1, 4));
    let one = Rational::one();
    let two_a = &a * int(2);
    let h = HyperSeries::new(vec![two_a.clone(), b.clone(), c.clone()], vec![&one + &two_a - &b, &one + &two_a - &c])
        .with_cap(20000);
    let s = hyper_sum(&h, PREC).unwrap();
    let d = dixon_rhs(&a, &b, &c, PREC).unwrap();
    let err = diff(&s.to_float(PREC), &d);
    assert!(err < 1e-12 && err <= s.tail(), "err {err} tail {}", s.tail());
}

use num_traits::One;

#[test]
fn dixon_tail_shrinks() {
    // the 3F2 of the F_0 evaluation at u = 1/4
    let u = rat(1, 4);
    let p = -&u * int(2);
    let exact = crate::arith::gamma_ratio(&[int(1) + &u * int(3)], &[int(1) + &u, int(1) + &u, int(1) + &u], PREC)
        .unwrap()
        .mul_ref(&crate::arith::cos_pi(&u, PREC));
    let mut last = f64::INFINITY;
    for cap in [100, 400, 1600] {
        let h = HyperSeries::new(vec![p.clone(); 3], vec![int(1), int(1)]).with_cap(cap);
        let s = hyper_sum(&h, PREC).unwrap();
        assert!(s.tail() < last);
        assert!(diff(&s.to_float(PREC), &exact) <= s.tail());
        last = s.tail();
    }
}

#[test]
fn lattice_examples() {
    // F_1(1, v) = F_0 (1+v) v (v-1) / 6, zero at v = 1
    assert_eq!(fb_lattice_sum(&int(1), &int(1), 1, 50, PREC).unwrap().exact, Some(int(0)));
    let v = rat(1, 3);
    let f1 = fb_lattice_sum(&int(1), &v, 1, 50, PREC).unwrap().exact.unwrap();
    assert_eq!(f1, int(-6) * (int(1) + &v) * &v * (&v - int(1)) / int(6));
    let s = fb_lattice_sum(&rat(1, 4), &int(0), 0, 400, PREC).unwrap();
    let c = fb_closed(&rat(1, 4), &int(0), 0, PREC).unwrap();
    assert!(diff(&s.value, &c) <= 1e-6f64.max(s.tail));
    assert!(fb_lattice_sum(&rat(-1, 2), &int(0), 0, 10, PREC).is_err());
}

#[test]
fn telescoped_recursion() {
    // u = 1/2 has cos(πu) = 0, so u = 1/4 and u = 1 carry the sign
    for (u, v) in [(rat(1, 2), int(0)), (rat(1, 2), rat(1, 3)), (rat(1, 4), rat(1, 3)), (int(1), rat(1, 3))] {
        let mut prev = fb_lattice_sum(&u, &v, 0, 300, PREC).unwrap();
        for b in 1..=3usize {
            let cur = fb_lattice_sum(&u, &v, b, 300, PREC).unwrap();
            let mut factor = Rational::one();
            for i in 0..3 {
                let iu = &u * int(i);
                factor *= (int(b as i64) + &v - &iu) / (int(b as i64) + &iu);
            }
            let predicted = prev.value.mul_ref(&BigFloat::from_rational(&factor, PREC));
            let tol = 3.0 * (cur.tail + prev.tail * crate::arith::rational_to_f64(&factor).abs()) + 1e-40;
            assert!(diff(&cur.value, &predicted) <= tol, "v={v} b={b}");
            // and the closed form that the recursion iterates to
            let closed = fb_closed(&u, &v, b as u32, PREC).unwrap();
            assert!(diff(&cur.value, &closed) <= 1e-6f64.max(3.0 * cur.tail));
            prev = cur;
        }
    }
}

#[test]
fn certificate_holds() {
    let rep = verify_certificate();
    assert!(rep.verified, "difference {}", rep.difference);
    assert_eq!(rep.difference_terms, 0);
    assert_eq!(rep.degrees.len(), 6);
    let bad = verify_certificate_with(Mutation::FlipRSign);
    assert!(!bad.verified);
    assert!(bad.difference_terms > 0);
}

#[test]
fn certificate_specialisations() {
    let q = |u: Rational, v: Rational, b: i64, m: [i64; 3]| [u, v, int(b), int(m[0]), int(m[1]), int(m[2])];
    // the suggested point makes b + m1 - m2 vanish, so compare the cleared sides there
    let p = q(rat(1, 2), rat(1, 3), 2, [1, 0, 2]);
    assert!(certificate_sides_at(&p).is_none());
    let (l, r) = certificate_cleared_at(&p);
    assert_eq!(l, r);
    let p = q(rat(1, 2), rat(1, 3), 2, [1, 0, 3]);
    let (l, r) = certificate_sides_at(&p).unwrap();
    assert_eq!(l, r);
    // b + m2 - m0 = 0 here as well
    let p = q(rat(2, 7), rat(-5, 11), 3, [4, 2, 1]);
    assert!(certificate_sides_at(&p).is_none());
    let (l, r) = certificate_cleared_at(&p);
    assert_eq!(l, r);
    let p = [rat(2, 7), rat(-5, 11), rat(3, 7), rat(4, 5), rat(2, 3), rat(1, 13)];
    let (l, r) = certificate_sides_at(&p).unwrap();
    assert_eq!(l, r);
}

#[test]
fn d4_values() {
    assert_eq!(d4_multisum(0).unwrap(), int(1));
    assert_eq!(d4_multisum(1).unwrap(), int(0));
    assert_eq!(d4_multisum(2).unwrap(), int(192));
    assert_eq!(d4_multisum(3).unwrap(), int(0));
    assert!(d4_multisum(4).is_err());
    assert_eq!(d4_multisum(2).unwrap(), macdonald_equal(&[2, 4, 4, 6], 1));
    assert_eq!(d4_multisum(2).unwrap(), bc(4, 0, 0, 1));
    let p = KernelParams::new(4).with_u(int(2));
    assert_eq!(rhs_exact(KernelFamily::BcComplex, &p).unwrap(), int(192));
}

#[test]
fn g2_b_sum_matches_gamma_form() {
    for (u, v) in [(rat(1, 2), rat(1, 3)), (rat(1, 4), rat(1, 4))] {
        let s = g2_b_sum(&u, &v, 8000, PREC).unwrap();
        let p = KernelParams::default().with_u(u.clone()).with_v(v.clone());
        let rhs = rhs_complex(KernelFamily::G2Complex, &p, PREC).unwrap();
        let err = diff(&s.value, &rhs.numeric);
        assert!(err < 1e-8 && err <= 3.0 * s.tail, "u={u} v={v} err {err} tail {}", s.tail);
    }
}
