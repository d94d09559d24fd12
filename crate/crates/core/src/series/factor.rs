use super::{ExponentVector, LaurentSeries, Vars, Window};
use crate::arith::{binomial, Coeff, Rational};
use crate::error::{Error, Result};

/// Exponent of a factor `(1 - M)^E`, or a logarithm `log(1 - M)`.
#[derive(Clone, Debug, PartialEq)]
pub enum ExponentKind {
    Int(u32),
    /// The formal exponent `u`, plus an integer shift.
    U { shift: i64 },
    /// The formal exponent `v`, plus an integer shift.
    V { shift: i64 },
    /// A fixed rational value embedded in the coefficient ring.
    Fixed(Rational),
    Log,
}

impl ExponentKind {
    pub fn is_finite(&self) -> bool {
        matches!(self, ExponentKind::Int(_))
    }
}

/// `(1 - M)^E` or `log(1 - M)` with `M` the monomial `base`.
#[derive(Clone, Debug, PartialEq)]
pub struct FactorSpec {
    pub base: ExponentVector,
    pub kind: ExponentKind,
    /// Highest power of `M` kept for infinite kinds.
    pub order: Option<u32>,
}

impl FactorSpec {
    pub fn new(base: ExponentVector, kind: ExponentKind) -> Self {
        FactorSpec { base, kind, order: None }
    }

    pub fn with_order(mut self, order: u32) -> Self {
        self.order = Some(order);
        self
    }
}

/// Values of the formal exponents in a coefficient ring, and its unit.
///
/// The unit carries the working precision for float rings.
#[derive(Clone, Debug)]
pub struct Symbols<C> {
    pub one: C,
    pub u: Option<C>,
    pub v: Option<C>,
}

impl<C: Coeff> Symbols<C> {
    pub fn plain(one: C) -> Self {
        Symbols { one, u: None, v: None }
    }

    pub fn embed(&self, r: &Rational) -> C {
        self.one.scale(r)
    }

    fn exponent(&self, kind: &ExponentKind) -> Result<C> {
        let shifted = |x: &Option<C>, name: &str, shift: i64| {
            let x = x.clone().ok_or_else(|| {
                Error::InvalidParams(format!("coefficient ring has no value for {name}"))
            })?;
            let mut out = x;
            out.add_assign_ref(&self.embed(&Rational::from_integer(shift.into())));
            Ok(out)
        };
        match kind {
            ExponentKind::Int(e) => Ok(self.embed(&Rational::from_integer((*e).into()))),
            ExponentKind::U { shift } => shifted(&self.u, "u", *shift),
            ExponentKind::V { shift } => shifted(&self.v, "v", *shift),
            ExponentKind::Fixed(r) => Ok(self.embed(r)),
            ExponentKind::Log => Err(Error::InvalidParams("logarithm has no exponent".into())),
        }
    }
}

/// A factor expanded into a series, with a flag telling whether nothing was cut.
#[derive(Clone, Debug)]
pub struct Expanded<C> {
    pub series: LaurentSeries<C>,
    pub exact: bool,
}

/// Expand one factor: the binomial series of `(1 - M)^E` or `-Σ M^j / j`.
pub fn expand_factor<C: Coeff>(spec: &FactorSpec, vars: &Vars, sym: &Symbols<C>) -> Result<Expanded<C>> {
    if spec.base.len() != vars.len() {
        return Err(Error::VariableMismatch(format!(
            "factor base {:?} for {} variables",
            spec.base,
            vars.len()
        )));
    }
    let power = |j: u32| spec.base.scaled(j as i32);
    match &spec.kind {
        ExponentKind::Int(e) => {
            let terms = (0..=*e).map(|j| {
                let mut b = Rational::from_integer(binomial(*e as i64, j as i64));
                if j % 2 == 1 {
                    b = -b;
                }
                (power(j), sym.embed(&b))
            });
            let series = LaurentSeries::from_terms(vars.clone(), terms)?;
            Ok(Expanded { series, exact: true })
        }
        ExponentKind::Log => {
            let order = spec
                .order
                .ok_or_else(|| Error::MissingTruncation(format!("log(1 - {:?})", spec.base)))?;
            if order == 0 {
                return Err(Error::InvalidParams("logarithm truncation order must be at least 1".into()));
            }
            let terms = (1..=order).map(|j| {
                (power(j), sym.embed(&Rational::new((-1).into(), (j as i64).into())))
            });
            let series = LaurentSeries::from_terms(vars.clone(), terms)?;
            Ok(Expanded { series, exact: false })
        }
        kind => {
            let order = spec
                .order
                .ok_or_else(|| Error::MissingTruncation(format!("(1 - {:?})^{kind:?}", spec.base)))?;
            let e = sym.exponent(kind)?;
            let mut terms = Vec::with_capacity(order as usize + 1);
            let mut b = sym.one.clone();
            let mut falling = e.clone();
            for j in 0..=order {
                let t = if j % 2 == 1 { b.neg_ref() } else { b.clone() };
                terms.push((power(j), t));
                // binom(E, j+1) = binom(E, j) (E - j) / (j + 1)
                b = b.mul_ref(&falling).div_int(j as i64 + 1);
                falling = falling.sub_ref(&sym.one);
            }
            let exact = b.is_zero();
            let series = LaurentSeries::from_terms(vars.clone(), terms)?;
            Ok(Expanded { series, exact })
        }
    }
}

/// Truncation orders for logarithms multiplied against a finite series.
///
/// For each log, a variable occurring in no other log pins down how many
/// powers can still be cancelled by the finite part; larger orders cannot
/// change the constant term.
pub fn infer_log_window(poly_box: Option<&Window>, logs: &[ExponentVector]) -> Result<Vec<u32>> {
    let Some(bx) = poly_box else {
        // the finite part is zero
        return Ok(vec![0; logs.len()]);
    };
    logs.iter()
        .enumerate()
        .map(|(k, mono)| {
            let mut best: Option<i64> = None;
            for i in 0..mono.len() {
                let mu = mono[i] as i64;
                if mu == 0 || logs.iter().enumerate().any(|(l, o)| l != k && o[i] != 0) {
                    continue;
                }
                // poly exponent e_i + j mu = 0 for some e_i in the box
                let bound = if mu > 0 {
                    (-bx.lower()[i]).div_euclid(mu)
                } else {
                    bx.upper()[i].div_euclid(-mu)
                };
                best = Some(best.map_or(bound, |b: i64| b.min(bound)));
            }
            let bound = best.ok_or_else(|| {
                Error::InvalidParams(format!("log monomial {mono:?} shares all its variables"))
            })?;
            Ok(bound.clamp(0, u32::MAX as i64) as u32)
        })
        .collect()
}

/// Exact expansion of `(1 - M)^e` with integer coefficients, generic over the ring.
pub fn binomial_power<C: Coeff>(vars: &Vars, base: ExponentVector, e: u32) -> Result<LaurentSeries<C>> {
    let sym = Symbols::plain(C::one());
    Ok(expand_factor(&FactorSpec::new(base, ExponentKind::Int(e)), vars, &sym)?.series)
}
