use std::fmt;

use num_traits::One;

use super::build::{build_kernel, elementary_symmetric, Kernel};
use super::family::{KernelFamily, KernelParams, Mode};
use crate::arith::{BiPoly, BigFloat, Coeff, Rational, UniPoly};
use crate::error::{Error, Result};
use crate::series::{
    constant_term_of_product, expand_factor, infer_log_window, ExponentKind, FactorSpec, LaurentSeries, Symbols,
    Window,
};

/// Constant term with its truncation status.
#[derive(Clone, Debug, PartialEq)]
pub struct CtResult<C> {
    pub value: C,
    /// True when no term that could reach the constant term was dropped.
    pub exact: bool,
    /// Value at the full order minus the value at half the order, for truncated runs.
    pub tail: Option<C>,
    /// Orders used for the logarithms.
    pub log_orders: Vec<u32>,
}

/// A constant term in whichever ring the mode selected.
#[derive(Clone, Debug, PartialEq)]
pub enum CtValue {
    Rational(Rational),
    UniPoly(UniPoly),
    BiPoly(BiPoly),
    Float(BigFloat),
}

impl CtValue {
    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            CtValue::Rational(r) => Some(r),
            _ => None,
        }
    }

    /// Nearest double, for the numeric variants.
    pub fn to_f64(&self) -> Option<f64> {
        match self {
            CtValue::Rational(r) => Some(crate::arith::rational_to_f64(r)),
            CtValue::Float(x) => Some(x.to_f64()),
            _ => None,
        }
    }
}

impl fmt::Display for CtValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CtValue::Rational(r) => write!(f, "{r}"),
            CtValue::UniPoly(p) => write!(f, "{p}"),
            CtValue::BiPoly(p) => write!(f, "{p}"),
            CtValue::Float(x) => write!(f, "{x}"),
        }
    }
}

/// Constant term of an assembled kernel, with the log orders it used.
///
/// Degree-0 kernels lose their last variable first.
pub fn kernel_ct<C: Coeff>(kernel: &Kernel<C>, sym: &Symbols<C>) -> Result<(C, Vec<u32>)> {
    if kernel.factors.iter().any(LaurentSeries::is_zero) {
        return Ok((C::zero(), vec![0; kernel.logs.len()]));
    }
    let mut bx: Option<Window> = None;
    for f in &kernel.factors {
        let b = f.bounding_box().expect("nonzero factor");
        bx = Some(match bx {
            None => b,
            Some(acc) => acc.sum(&b),
        });
    }
    let orders = infer_log_window(bx.as_ref(), &kernel.logs)?;
    if orders.contains(&0) {
        return Ok((C::zero(), orders));
    }
    let mut factors = kernel.factors.clone();
    for (mono, &order) in kernel.logs.iter().zip(&orders) {
        let spec = FactorSpec::new(mono.clone(), ExponentKind::Log).with_order(order);
        factors.push(expand_factor(&spec, &kernel.vars, sym)?.series);
    }
    let degree_zero = kernel.vars.len() >= 2
        && factors
            .iter()
            .map(LaurentSeries::homogeneous_degree)
            .try_fold(0i64, |acc, d| d.map(|d| acc + d))
            == Some(0);
    if degree_zero {
        factors = factors.iter().map(LaurentSeries::drop_last_var).collect::<Result<_>>()?;
    }
    Ok((constant_term_of_product(&factors)?, orders))
}

/// Constant term of a family's kernel over the ring of `sym`.
///
/// Truncated runs are repeated at half the order to produce the tail.
pub fn ct_in<C: Coeff>(family: KernelFamily, p: &KernelParams, sym: &Symbols<C>) -> Result<CtResult<C>> {
    let kernel = build_kernel(family, p, sym)?;
    let (value, log_orders) = kernel_ct(&kernel, sym)?;
    let tail = match (kernel.exact, p.order) {
        (false, Some(order)) => {
            let half = KernelParams { order: Some(order / 2), ..p.clone() };
            let coarse = kernel_ct(&build_kernel(family, &half, sym)?, sym)?.0;
            Some(value.sub_ref(&coarse))
        }
        _ => None,
    };
    Ok(CtResult { value, exact: kernel.exact, tail, log_orders })
}

fn need(x: &Option<Rational>, name: &str, family: KernelFamily) -> Result<Rational> {
    x.clone()
        .ok_or_else(|| Error::InvalidParams(format!("{family} in this mode needs a value for {name}")))
}

/// Constant term in the ring selected by `mode`.
pub fn ct(family: KernelFamily, p: &KernelParams, mode: Mode) -> Result<CtResult<CtValue>> {
    fn wrap<C>(r: CtResult<C>, f: impl Fn(C) -> CtValue) -> CtResult<CtValue> {
        CtResult { value: f(r.value), exact: r.exact, tail: r.tail.map(&f), log_orders: r.log_orders }
    }
    let uses_u = family.is_complex();
    let uses_v = family == KernelFamily::G2Complex;
    match mode {
        Mode::Rational => {
            let sym = Symbols {
                one: Rational::one(),
                u: if uses_u { Some(need(&p.u, "u", family)?) } else { None },
                v: if uses_v { Some(need(&p.v, "v", family)?) } else { None },
            };
            Ok(wrap(ct_in(family, p, &sym)?, CtValue::Rational))
        }
        Mode::UnipolyU => {
            let sym = Symbols {
                one: UniPoly::one(),
                u: Some(UniPoly::x()),
                v: if uses_v { Some(UniPoly::constant(need(&p.v, "v", family)?)) } else { None },
            };
            Ok(wrap(ct_in(family, p, &sym)?, CtValue::UniPoly))
        }
        Mode::BipolyUv => {
            let sym = Symbols { one: BiPoly::one(), u: Some(BiPoly::u()), v: Some(BiPoly::v()) };
            Ok(wrap(ct_in(family, p, &sym)?, CtValue::BiPoly))
        }
        Mode::Bigfloat { prec } => {
            let embed = |x: &Option<Rational>, name, used: bool| -> Result<Option<BigFloat>> {
                if !used {
                    return Ok(None);
                }
                Ok(Some(BigFloat::from_rational(&need(x, name, family)?, prec)))
            };
            let sym = Symbols { one: BigFloat::from_i64(1, prec), u: embed(&p.u, "u", uses_u)?, v: embed(&p.v, "v", uses_v)? };
            Ok(wrap(ct_in(family, p, &sym)?, CtValue::Float))
        }
    }
}

/// Multiply the kernel by `(-1)^r e_r(X)`.
pub fn er_insert<C: Coeff>(kernel: Kernel<C>, r: usize, one: &C) -> Result<Kernel<C>> {
    let mut e = elementary_symmetric(&kernel.vars, r, one)?;
    if r % 2 == 1 {
        e = e.neg();
    }
    kernel.with_factor(e)
}
