use super::{ExponentVector, LaurentSeries, Window};
use crate::arith::Coeff;
use crate::error::{Error, Result};

/// Constant term of a product of finite series.
///
/// Factors are multiplied smallest first. After each step only monomials
/// whose negation lies in the bounding box of the remaining factors are
/// kept; the last factor is paired directly against the accumulator.
pub fn constant_term_of_product<C: Coeff>(factors: &[LaurentSeries<C>]) -> Result<C> {
    let Some(first) = factors.first() else {
        return Err(Error::InvalidParams("empty product".into()));
    };
    let n = first.nvars();
    if factors.iter().any(|f| f.vars() != first.vars()) {
        return Err(Error::VariableMismatch("factors over different variables".into()));
    }
    if factors.iter().any(LaurentSeries::is_zero) {
        return Ok(C::zero());
    }
    let mut order: Vec<&LaurentSeries<C>> = factors.iter().collect();
    order.sort_by_key(|f| f.len());
    let boxes: Vec<Window> = order.iter().map(|f| f.bounding_box().expect("nonzero")).collect();
    // rest[i] bounds the product of order[i..]
    let mut rest = vec![Window::full(n); order.len() + 1];
    rest[order.len()] = Window::bounding([&ExponentVector::zeros(n)]).expect("one point");
    for i in (0..order.len()).rev() {
        rest[i] = boxes[i].sum(&rest[i + 1]);
    }
    if !rest[0].contains(&ExponentVector::zeros(n)) {
        return Ok(C::zero());
    }
    let last = order.len() - 1;
    let mut acc = order[0].restrict(&rest[1].negated());
    for i in 1..last {
        if acc.is_zero() {
            return Ok(C::zero());
        }
        acc = acc.mul(order[i], &rest[i + 1].negated())?;
    }
    if last == 0 {
        return Ok(acc.constant_term());
    }
    let mut ct = C::zero();
    for (e, c) in acc.terms() {
        if let Some(d) = order[last].coeff(&e.neg()) {
            ct.add_assign_ref(&c.mul_ref(d));
        }
    }
    Ok(ct)
}

/// Full product of finite series, filtered to `w` at the end.
pub fn expand_product<C: Coeff>(factors: &[LaurentSeries<C>], w: &Window) -> Result<LaurentSeries<C>> {
    let Some(first) = factors.first() else {
        return Err(Error::InvalidParams("empty product".into()));
    };
    let mut acc = first.clone();
    for f in &factors[1..] {
        acc = acc.mul_full(f)?;
    }
    Ok(acc.restrict(w))
}
