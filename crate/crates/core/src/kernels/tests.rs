use super::*;
use crate::arith::{int, rat, Rational};
use crate::series::{ExponentKind, ExponentVector, FactorSpec, LaurentSeries, Symbols};
use num_traits::One;

fn exact(family: KernelFamily, p: &KernelParams) -> Rational {
    let r = ct(family, p, Mode::Rational).unwrap();
    assert!(r.exact, "{family} not exact");
    r.value.as_rational().unwrap().clone()
}

#[test]
fn dyson_anchor() {
    assert_eq!(exact(KernelFamily::Dyson, &KernelParams::new(3).with_a(1)), int(6));
    assert_eq!(exact(KernelFamily::Dyson, &KernelParams::new(3).with_a_vec(vec![1, 1, 2])), int(12));
    assert_eq!(exact(KernelFamily::Dyson, &KernelParams::new(2).with_a(1)), int(2));
}

#[test]
fn log_anchors() {
    let r = ct(KernelFamily::LogDyson, &KernelParams::new(3), Mode::Rational).unwrap();
    assert_eq!(r.value, CtValue::Rational(int(1)));
    assert!(r.exact);
    assert_eq!(exact(KernelFamily::LogDyson, &KernelParams::new(3).with_k(1)), rat(35, 3));
    assert_eq!(exact(KernelFamily::LogMorris, &KernelParams::new(3).with_a(1)), int(1));
    assert_eq!(exact(KernelFamily::AmLog, &KernelParams::new(3)), int(0));
    assert_eq!(exact(KernelFamily::AmLog, &KernelParams::new(3).with_a(2)), int(-5));
    assert_eq!(exact(KernelFamily::AmLog, &KernelParams::new(3).with_a(3)), int(-14));
}

#[test]
fn g2_anchors() {
    assert_eq!(exact(KernelFamily::G2Hz, &KernelParams::default().with_k(1).with_m(1)), int(12));
    assert_eq!(exact(KernelFamily::G2Hz, &KernelParams::default().with_k(1)), int(6));
    assert_eq!(exact(KernelFamily::G2LogLong, &KernelParams::default()), int(1));
    assert_eq!(exact(KernelFamily::G2Equal, &KernelParams::default().with_k(1)), int(2 * 6));
}

#[test]
fn printed_log_long_kernel() {
    let sym = Symbols::plain(Rational::one());
    let k = build_kernel(KernelFamily::G2LogLong, &KernelParams::default(), &sym).unwrap();
    assert_eq!(k.logs, vec![ExponentVector::from([-1, 2, -1])]);
    let mut bare = k.clone();
    bare.logs.clear();
    let prod = bare.expand().unwrap();
    let mut expected = LaurentSeries::monomial(k.vars.clone(), ExponentVector::from([-1, -1, 2]), int(1));
    for e in [[2, -1, -1], [-1, 2, -1], [1, 1, -2]] {
        let f = crate::series::binomial_power::<Rational>(&k.vars, ExponentVector::from(e), 1).unwrap();
        expected = expected.mul_full(&f).unwrap();
    }
    assert_eq!(prod, expected);
}

#[test]
fn complex_morris_small_orders() {
    let p = KernelParams::new(3).with_order(0);
    let r = ct(KernelFamily::ComplexMorris, &p, Mode::UnipolyU).unwrap();
    assert_eq!(r.value, CtValue::UniPoly(crate::arith::UniPoly::one()));
    let p = KernelParams::new(3).with_order(4);
    let CtValue::UniPoly(poly) = ct(KernelFamily::ComplexMorris, &p, Mode::UnipolyU).unwrap().value else {
        panic!()
    };
    assert_eq!(poly.eval(&int(2)), int(-6));
    assert_eq!(poly.eval(&int(1)), int(0));
    assert_eq!(poly.eval(&int(0)), int(1));
    let p = KernelParams::new(3).with_u(int(3)).with_order(8);
    let r = ct(KernelFamily::ComplexMorris, &p, Mode::Rational).unwrap();
    assert!(r.exact);
    assert_eq!(r.value, CtValue::Rational(int(0)));
}

#[test]
fn missing_order() {
    let p = KernelParams::new(3).with_u(rat(1, 2));
    assert!(matches!(
        ct(KernelFamily::ComplexMorris, &p, Mode::Rational),
        Err(crate::Error::MissingTruncation(_))
    ));
    assert!(ct(KernelFamily::ComplexMorris, &KernelParams::new(3).with_order(2), Mode::Rational).is_err());
}

#[test]
fn morris_rewrite_as_series() {
    for (n, k, a, b) in [(3, 1, 0, 0), (3, 1, 1, 1), (5, 1, 0, 0), (3, 0, 1, 0)] {
        let p = KernelParams::new(n).with_k(k).with_a(a).with_b(b);
        let sym = Symbols::plain(Rational::one());
        let lhs = build_kernel(KernelFamily::Morris, &p, &sym).unwrap().expand().unwrap();
        let rhs = build_kernel(KernelFamily::MorrisTau, &p, &sym).unwrap().expand().unwrap();
        let sign = if (k as usize * (n - 1) / 2) % 2 == 1 { int(-1) } else { int(1) };
        assert_eq!(lhs, rhs.scale(&sign), "n={n} k={k}");
    }
}

#[test]
fn bc_rewrite_as_series() {
    let sym = Symbols::plain(Rational::one());
    for n in [4, 5] {
        let p = KernelParams::new(n).with_k(1);
        let lhs = build_kernel(KernelFamily::Bc, &p, &sym).unwrap().expand().unwrap();
        let rhs = build_kernel(KernelFamily::BcSigmaTau, &p, &sym).unwrap().expand().unwrap();
        assert_eq!(lhs, rhs, "n={n}");
    }
}

#[test]
fn g2_substitution_law() {
    use crate::arith::BiPoly;
    let order = 3;
    let sym = Symbols { one: BiPoly::one(), u: Some(BiPoly::u()), v: Some(BiPoly::v()) };
    let p = KernelParams::default().with_order(order);
    let g = build_kernel(KernelFamily::G2Complex, &p, &sym).unwrap().expand().unwrap();
    // A(x, y, z; v, u) = (1-x)^v (1-y)^v (1-z)^v (1-x/y)^u (1-y/z)^u (1-z/x)^u
    let vars = g.vars().clone();
    let mut a = LaurentSeries::constant(vars.clone(), BiPoly::one());
    let parts: [([i32; 3], ExponentKind); 6] = [
        ([1, 0, 0], ExponentKind::V { shift: 0 }),
        ([0, 1, 0], ExponentKind::V { shift: 0 }),
        ([0, 0, 1], ExponentKind::V { shift: 0 }),
        ([1, -1, 0], ExponentKind::U { shift: 0 }),
        ([0, 1, -1], ExponentKind::U { shift: 0 }),
        ([-1, 0, 1], ExponentKind::U { shift: 0 }),
    ];
    for (e, kind) in parts {
        let spec = FactorSpec::new(ExponentVector::from(e), kind).with_order(order);
        a = a.mul_full(&crate::series::expand_factor(&spec, &vars, &sym).unwrap().series).unwrap();
    }
    let images = [ExponentVector::from([1, -1, 0]), ExponentVector::from([0, 1, -1]), ExponentVector::from([-1, 0, 1])];
    assert_eq!(a.substitute(&images).unwrap(), g);
}

#[test]
fn er_insert_edges() {
    let sym = Symbols::plain(Rational::one());
    let p = KernelParams::new(3).with_k(1).with_a(1).with_b(1);
    let base = build_kernel(KernelFamily::LogMorris, &p, &sym).unwrap();
    let r0 = er_insert(base.clone(), 0, &Rational::one()).unwrap();
    assert_eq!(kernel_ct(&r0, &sym).unwrap().0, kernel_ct(&base, &sym).unwrap().0);
    let r3 = er_insert(base.clone(), 3, &Rational::one()).unwrap();
    assert_eq!(r3.factors.last().unwrap(), &LaurentSeries::monomial(base.vars.clone(), ExponentVector::from([1, 1, 1]), int(-1)));
    assert!(er_insert(base.clone(), 4, &Rational::one()).is_err());
    // sum over r gives the kernel with a + 1
    let mut total = int(0);
    for r in 0..=3 {
        total += kernel_ct(&er_insert(base.clone(), r, &Rational::one()).unwrap(), &sym).unwrap().0;
    }
    assert_eq!(total, exact(KernelFamily::LogMorris, &KernelParams::new(3).with_k(1).with_a(2).with_b(1)));
}

#[test]
fn log_morris_orders_are_stable() {
    let p = KernelParams::new(3).with_k(1);
    let r = ct(KernelFamily::LogMorris, &p, Mode::Rational).unwrap();
    assert!(r.log_orders[0] <= 12);
    let sym = Symbols::plain(Rational::one());
    let kernel = build_kernel(KernelFamily::LogMorris, &p, &sym).unwrap();
    let mut factors = kernel.factors.clone();
    let spec = FactorSpec::new(kernel.logs[0].clone(), ExponentKind::Log).with_order(r.log_orders[0] + 5);
    factors.push(crate::series::expand_factor(&spec, &kernel.vars, &sym).unwrap().series);
    assert_eq!(CtValue::Rational(crate::series::constant_term_of_product(&factors).unwrap()), r.value);
}
