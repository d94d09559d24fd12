use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{BigFloat, Coeff, Rational};
use crate::error::{Error, Result};

/// `pFq(num; den; 1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct HyperSeries {
    pub num: Vec<Rational>,
    pub den: Vec<Rational>,
    /// Number of terms summed when the series does not terminate.
    pub cap: usize,
}

#[derive(Clone, Debug)]
pub enum HyperValue {
    Exact(Rational),
    /// A truncated sum and `|S(cap) - S(cap/2)|`.
    Approx { value: BigFloat, tail: f64 },
}

impl HyperValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            HyperValue::Exact(r) => crate::arith::rational_to_f64(r),
            HyperValue::Approx { value, .. } => value.to_f64(),
        }
    }

    pub fn to_float(&self, prec: usize) -> BigFloat {
        match self {
            HyperValue::Exact(r) => BigFloat::from_rational(r, prec),
            HyperValue::Approx { value, .. } => value.clone(),
        }
    }

    pub fn tail(&self) -> f64 {
        match self {
            HyperValue::Exact(_) => 0.0,
            HyperValue::Approx { tail, .. } => *tail,
        }
    }
}

fn nonpositive_int(x: &Rational) -> Option<u64> {
    (x.is_integer() && !x.is_positive()).then(|| (-x.to_integer()).to_u64()).flatten()
}

impl HyperSeries {
    pub fn new(num: Vec<Rational>, den: Vec<Rational>) -> Self {
        HyperSeries { num, den, cap: 1000 }
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    /// Index of the last nonzero term when a numerator parameter is `-N`.
    pub fn terminates_at(&self) -> Option<u64> {
        self.num.iter().filter_map(nonpositive_int).min()
    }

    /// Ratio `t_{j+1} / t_j`.
    fn ratio(&self, j: u64) -> Result<Rational> {
        let jr = Rational::from_integer(j.into());
        let mut r = Rational::one() / (&jr + Rational::one());
        for a in &self.num {
            r *= a + &jr;
        }
        for b in &self.den {
            let d = b + &jr;
            if d.is_zero() {
                return Err(Error::Domain(format!("denominator parameter {b} hits a pole")));
            }
            r /= d;
        }
        Ok(r)
    }
}

/// Sum a hypergeometric series at argument 1: exactly when it terminates,
/// otherwise to `cap` terms in `prec`-bit floats.
pub fn hyper_sum(h: &HyperSeries, prec: usize) -> Result<HyperValue> {
    if let Some(n) = h.terminates_at() {
        let mut term = Rational::one();
        let mut sum = Rational::one();
        for j in 0..n {
            term *= h.ratio(j)?;
            sum += &term;
        }
        return Ok(HyperValue::Exact(sum));
    }
    let wp = prec + 16;
    let mut term = BigFloat::from_i64(1, wp);
    let mut sum = term.clone();
    let mut half_sum = None;
    for j in 0..h.cap as u64 {
        if j as usize == h.cap / 2 {
            half_sum = Some(sum.clone());
        }
        term = term.mul_ref(&BigFloat::from_rational(&h.ratio(j)?, wp));
        sum.add_assign_ref(&term);
    }
    let tail = half_sum.map_or(f64::INFINITY, |s| sum.sub_ref(&s).abs().to_f64());
    Ok(HyperValue::Approx { value: sum.round_to(prec), tail })
}
