use ctwork_core::series::{constant_term_of_product, indexed_vars, ExponentVector, Window};
use ctwork_core::{LaurentSeries, Rational};
use proptest::prelude::*;

type Series = LaurentSeries<Rational>;

fn build(n: usize, terms: Vec<(Vec<i32>, i64)>) -> Series {
    let terms = terms.into_iter().map(|(e, c)| (ExponentVector::from(e), Rational::from_integer(c.into())));
    LaurentSeries::from_terms(indexed_vars("x", n), terms).unwrap()
}

fn poly(n: usize) -> impl Strategy<Value = Series> {
    prop::collection::vec((prop::collection::vec(-2i32..=2, n), -3i64..=3), 0..6).prop_map(move |t| build(n, t))
}

/// Degree-0 monomials: last exponent balances the rest.
fn homogeneous(n: usize) -> impl Strategy<Value = Series> {
    prop::collection::vec((prop::collection::vec(-2i32..=2, n - 1), -3i64..=3), 0..5).prop_map(move |t| {
        let t = t
            .into_iter()
            .map(|(mut e, c)| {
                let s: i32 = e.iter().sum();
                e.push(-s);
                (e, c)
            })
            .collect();
        build(n, t)
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

proptest! {
    #[test]
    fn window_doubling_keeps_constant_term(f in poly(3), g in poly(3)) {
        let full = f.mul_full(&g).unwrap().constant_term();
        if let (Some(bf), Some(bg)) = (f.bounding_box(), g.bounding_box()) {
            let w = bf.sum(&bg);
            let doubled = w.sum(&w);
            prop_assert_eq!(f.mul(&g, &w).unwrap().constant_term(), full.clone());
            prop_assert_eq!(f.mul(&g, &doubled).unwrap().constant_term(), full.clone());
        }
        prop_assert_eq!(constant_term_of_product(&[f, g]).unwrap(), full);
    }

    #[test]
    fn skew_symmetric_part_has_zero_constant_term(f in poly(3), i in 0usize..3, j in 0usize..3) {
        prop_assume!(i != j);
        let mut w = vec![0, 1, 2];
        w.swap(i, j);
        let skew = f.sub(&f.permute(&w).unwrap()).unwrap();
        prop_assert_eq!(skew.constant_term(), Rational::from_integer(0.into()));
    }

    #[test]
    fn constant_term_is_permutation_invariant((f, g) in (1usize..=4).prop_flat_map(|n| (poly(n), poly(n)))) {
        let n = f.nvars();
        let ct = constant_term_of_product(&[f.clone(), g.clone()]).unwrap();
        for w in permutations(n) {
            let fw = f.permute(&w).unwrap();
            let gw = g.permute(&w).unwrap();
            prop_assert_eq!(constant_term_of_product(&[fw, gw]).unwrap(), ct.clone());
        }
    }

    #[test]
    fn dehomogenize_commutes_with_constant_term(f in homogeneous(3), g in homogeneous(3)) {
        let fg = f.mul_full(&g).unwrap();
        let lhs = fg.dehomogenize().unwrap().constant_term();
        let split = f.dehomogenize().unwrap().mul_full(&g.dehomogenize().unwrap()).unwrap();
        prop_assert_eq!(lhs.clone(), fg.constant_term());
        prop_assert_eq!(split.constant_term(), lhs);
    }

    #[test]
    fn degree_zero_window_product_is_associative(f in homogeneous(3), g in homogeneous(3), h in homogeneous(3)) {
        let w = Window::degree_zero(3);
        let left = f.mul(&g, &w).unwrap().mul(&h, &w).unwrap();
        let right = f.mul(&g.mul(&h, &w).unwrap(), &w).unwrap();
        let swapped = g.mul(&f, &w).unwrap().mul(&h, &w).unwrap();
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(&left, &swapped);
    }

    #[test]
    fn shrinking_the_window_only_removes_terms(f in poly(2), g in poly(2)) {
        let full = f.mul_full(&g).unwrap();
        let w = Window::new(vec![-1, -1], vec![1, 1]).unwrap();
        let part = f.mul(&g, &w).unwrap();
        for (e, c) in part.terms() {
            prop_assert!(w.contains(e));
            prop_assert_eq!(full.coeff(e), Some(c));
        }
        prop_assert_eq!(part, full.restrict(&w));
    }
}
