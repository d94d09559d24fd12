use super::*;
use crate::arith::{rat, Coeff, Rational, UniPoly};
use num_traits::One;

fn q(n: i64) -> Rational {
    crate::arith::int(n)
}

fn xy() -> Vars {
    vars(&["x", "y"])
}

fn series(v: Vars, text: &str) -> LaurentSeries<Rational> {
    LaurentSeries::parse_dump(v, text).unwrap()
}

#[test]
fn expand_integer_power() {
    let spec = FactorSpec::new(ExponentVector::from([1, -1]), ExponentKind::Int(2));
    let got = expand_factor(&spec, &xy(), &Symbols::plain(q(1))).unwrap();
    assert!(got.exact);
    assert_eq!(got.series, series(xy(), "0 0 : 1\n1 -1 : -2\n2 -2 : 1"));
}

#[test]
fn expand_log() {
    let spec = FactorSpec::new(ExponentVector::from([1, -1]), ExponentKind::Log).with_order(2);
    let got = expand_factor(&spec, &xy(), &Symbols::plain(q(1))).unwrap();
    assert_eq!(got.series, series(xy(), "1 -1 : -1\n2 -2 : -1/2"));
    let bare = FactorSpec::new(ExponentVector::from([1, -1]), ExponentKind::Log);
    assert!(matches!(
        expand_factor(&bare, &xy(), &Symbols::plain(q(1))),
        Err(crate::Error::MissingTruncation(_))
    ));
}

#[test]
fn expand_formal_power() {
    let v = vars(&["x"]);
    let spec = FactorSpec::new(ExponentVector::from([1]), ExponentKind::U { shift: 0 }).with_order(2);
    let sym = Symbols { one: UniPoly::one(), u: Some(UniPoly::x()), v: None };
    let got = expand_factor(&spec, &v, &sym).unwrap();
    let u = UniPoly::x();
    assert_eq!(got.series.coeff(&ExponentVector::from([0])), Some(&UniPoly::one()));
    assert_eq!(got.series.coeff(&ExponentVector::from([1])), Some(&u.neg_ref()));
    let half_u2_minus_u = UniPoly::from_coeffs(vec![q(0), rat(-1, 2), rat(1, 2)]);
    assert_eq!(got.series.coeff(&ExponentVector::from([2])), Some(&half_u2_minus_u));
    assert!(!got.exact);
}

#[test]
fn fixed_integer_exponent_is_exact_once_order_passes_it() {
    let v = vars(&["x"]);
    let spec = FactorSpec::new(ExponentVector::from([1]), ExponentKind::Fixed(q(2))).with_order(5);
    let got = expand_factor(&spec, &v, &Symbols::plain(q(1))).unwrap();
    assert!(got.exact);
    assert_eq!(got.series, series(v, "0 : 1\n1 : -2\n2 : 1"));
}

#[test]
fn shifted_formal_exponent() {
    let v = vars(&["x"]);
    let spec = FactorSpec::new(ExponentVector::from([1]), ExponentKind::U { shift: 1 }).with_order(3);
    let sym = Symbols { one: q(1), u: Some(q(1)), v: None };
    let got = expand_factor(&spec, &v, &sym).unwrap();
    assert!(got.exact);
    assert_eq!(got.series, series(v, "0 : 1\n1 : -2\n2 : 1"));
}

#[test]
fn windowed_products() {
    let f = series(xy(), "0 0 : 1\n1 -1 : -1");
    let g = series(xy(), "0 0 : 1\n-1 1 : -1");
    let full = f.mul_full(&g).unwrap();
    assert_eq!(full, series(xy(), "0 0 : 2\n1 -1 : -1\n-1 1 : -1"));
    assert_eq!(full.constant_term(), q(2));
    let zero_deg = f.mul(&g, &Window::degree_zero(2)).unwrap();
    assert_eq!(zero_deg, full);
    let only_ct = f.mul(&g, &Window::new(vec![0, 0], vec![0, 0]).unwrap()).unwrap();
    assert_eq!(only_ct, series(xy(), "0 0 : 2"));
    let x = series(vars(&["x"]), "1 : 1");
    let xinv = series(vars(&["x"]), "-1 : 1");
    assert_eq!(x.mul(&xinv, &Window::new(vec![-1], vec![1]).unwrap()).unwrap(), series(vars(&["x"]), "0 : 1"));
    assert!(f.mul_full(&x).is_err());
}

#[test]
fn dyson_two_variables() {
    let a = binomial_power::<Rational>(&xy(), ExponentVector::from([1, -1]), 1).unwrap();
    let b = binomial_power::<Rational>(&xy(), ExponentVector::from([-1, 1]), 1).unwrap();
    assert_eq!(constant_term_of_product(&[a.clone(), b.clone()]).unwrap(), q(2));
    assert_eq!(a.mul_full(&b).unwrap().constant_term(), q(2));
}

#[test]
fn log_vandermonde_constant_term() {
    let v = indexed_vars("x", 3);
    let delta = vandermonde::<Rational>(v.clone()).unwrap();
    let pre = LaurentSeries::monomial(v.clone(), ExponentVector::from([-1, -1, -1]), q(1));
    let log = FactorSpec::new(ExponentVector::from([-1, 1, 0]), ExponentKind::Log).with_order(3);
    let log = expand_factor(&log, &v, &Symbols::plain(q(1))).unwrap().series;
    let ct = constant_term_of_product(&[delta.clone(), pre.clone(), log.clone()]).unwrap();
    assert_eq!(ct, q(1));
    let full = delta.mul_full(&pre).unwrap().mul_full(&log).unwrap();
    assert_eq!(full.constant_term(), q(1));
    // same value after eliminating the last variable
    let dehom = full.restrict(&Window::degree_zero(3)).dehomogenize().unwrap();
    assert_eq!(dehom.nvars(), 2);
    assert_eq!(dehom.constant_term(), q(1));
}

#[test]
fn substitution_examples() {
    let f = series(xy(), "1 -1 : 1");
    let inv = [ExponentVector::from([-1, 0]), ExponentVector::from([0, -1])];
    assert_eq!(f.substitute(&inv).unwrap(), series(xy(), "-1 1 : 1"));
    let id = [ExponentVector::from([1, 0]), ExponentVector::from([0, 1])];
    assert_eq!(f.substitute(&id).unwrap(), f);
    let xyz = vars(&["x", "y", "z"]);
    let x = series(xyz.clone(), "1 0 0 : 1");
    let cyc = [ExponentVector::from([1, -1, 0]), ExponentVector::from([0, 1, -1]), ExponentVector::from([-1, 0, 1])];
    assert_eq!(x.substitute(&cyc).unwrap(), series(xyz, "1 -1 0 : 1"));
}

#[test]
fn dehomogenize_examples() {
    let f = series(xy(), "0 0 : 2\n1 -1 : -1\n-1 1 : -1");
    let g = f.dehomogenize().unwrap();
    assert_eq!(g, series(vars(&["x"]), "0 : 2\n1 : -1\n-1 : -1"));
    assert_eq!(g.constant_term(), f.constant_term());
    assert!(LaurentSeries::<Rational>::zero(xy()).dehomogenize().unwrap().is_zero());
    assert!(series(xy(), "1 0 : 1").dehomogenize().is_err());
}

#[test]
fn vandermonde_examples() {
    let v2 = vandermonde::<Rational>(indexed_vars("x", 2)).unwrap();
    assert_eq!(v2, series(indexed_vars("x", 2), "1 0 : 1\n0 1 : -1"));
    let v3 = vandermonde::<Rational>(indexed_vars("x", 3)).unwrap();
    assert_eq!(v3.len(), 6);
    assert!(v3.terms().iter().all(|(_, c)| c.numer().magnitude() == &1u32.into()));
    let swapped = v3.permute(&[1, 0, 2]).unwrap();
    assert_eq!(swapped, v3.neg());
    assert_eq!(vandermonde::<Rational>(indexed_vars("x", 1)).unwrap().constant_term(), q(1));
}

#[test]
fn log_window_inference() {
    let v = indexed_vars("x", 2);
    let poly = series(v.clone(), "-3 1 : 1\n3 -2 : 5\n0 0 : 1");
    let logs = [ExponentVector::from([-1, 1])];
    let orders = infer_log_window(poly.bounding_box().as_ref(), &logs).unwrap();
    assert!(orders[0] <= 6);
    let ct_at = |ord: u32| {
        let spec = FactorSpec::new(logs[0].clone(), ExponentKind::Log).with_order(ord.max(1));
        let l = expand_factor(&spec, &v, &Symbols::plain(q(1))).unwrap().series;
        constant_term_of_product(&[poly.clone(), l]).unwrap()
    };
    assert_eq!(ct_at(orders[0]), ct_at(orders[0] + 5));
    // empty finite part
    assert_eq!(infer_log_window(None, &logs).unwrap(), vec![0]);
    assert!(infer_log_window(poly.bounding_box().as_ref(), &[logs[0].clone(), logs[0].clone()]).is_err());
}

#[test]
fn dump_round_trip() {
    let f = series(xy(), "0 0 : 2\n1 -1 : -1/3\n-1 1 : -1");
    let text = f.dump();
    assert_eq!(text, "-1 1 : -1\n0 0 : 2\n1 -1 : -1/3\n");
    assert_eq!(LaurentSeries::parse_dump(xy(), &text).unwrap(), f);
}
