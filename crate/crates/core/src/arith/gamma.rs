use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{binomial, BigFloat, Coeff, Rational};
use crate::error::{Error, Result};

static BERNOULLI: Mutex<Vec<Rational>> = Mutex::new(Vec::new());

/// Bernoulli number `B_n` with `B_1 = -1/2`.
pub fn bernoulli(n: usize) -> Rational {
    let mut table = BERNOULLI.lock().unwrap_or_else(|e| e.into_inner());
    while table.len() <= n {
        let m = table.len();
        let b = if m == 0 {
            Rational::one()
        } else {
            // sum_{j<=m} binom(m+1, j) B_j = 0
            let s = (0..m).fold(Rational::zero(), |acc, j| {
                acc + Rational::from_integer(binomial(m as i64 + 1, j as i64)) * &table[j]
            });
            -s / Rational::from_integer(BigInt::from(m + 1))
        };
        table.push(b);
    }
    table[n].clone()
}

fn pow2_neg(bits: usize) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << bits)
}

/// `ln Γ(x)` for rational `x > 0`, absolute error below `2^(8 - prec)`.
pub fn lgamma(x: &Rational, prec: usize) -> Result<BigFloat> {
    if !x.is_positive() {
        return Err(Error::Domain(format!("lgamma({x}) needs a positive argument")));
    }
    let wp = prec + 32;
    let threshold = ((prec + 20) / 8).max(32) as i64;
    let mut y = x.clone();
    let mut shift = Rational::one();
    while y < Rational::from_integer(threshold.into()) {
        shift *= &y;
        y += Rational::one();
    }
    let yf = BigFloat::from_rational(&y, wp);
    let half = Rational::new(1.into(), 2.into());
    let two_pi = BigFloat::pi(wp).mul_ref(&BigFloat::from_i64(2, wp));

    let mut acc = BigFloat::from_rational(&(&y - &half), wp).mul_ref(&yf.ln());
    acc = acc.sub_ref(&yf);
    acc.add_assign_ref(&two_pi.ln().scale(&half));

    let eps = BigFloat::from_rational(&pow2_neg(prec + 10), wp);
    let y2 = yf.mul_ref(&yf);
    let mut ypow = yf.clone();
    let mut prev: Option<BigFloat> = None;
    for k in 1usize.. {
        let c = bernoulli(2 * k) / Rational::from_integer(BigInt::from(2 * k * (2 * k - 1)));
        let term = BigFloat::from_rational(&c, wp).div_ref(&ypow);
        let mag = term.abs();
        if prev.as_ref().is_some_and(|p| mag > *p) {
            return Err(Error::Domain(format!("asymptotic series diverged for lgamma({x})")));
        }
        acc.add_assign_ref(&term);
        if mag < eps {
            break;
        }
        prev = Some(mag);
        ypow = ypow.mul_ref(&y2);
    }
    if !shift.is_one() {
        acc = acc.sub_ref(&BigFloat::from_rational(&shift, wp).ln());
    }
    Ok(acc.round_to(prec))
}

fn is_nonpositive_integer(x: &Rational) -> bool {
    x.is_integer() && !x.is_positive()
}

/// `ln |Γ(x)|` and the sign of `Γ(x)` for any rational that is not a pole.
pub fn lgamma_signed(x: &Rational, prec: usize) -> Result<(BigFloat, i32)> {
    if x.is_positive() {
        return Ok((lgamma(x, prec)?, 1));
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Domain(format!("Γ has a pole at {x}")));
    }
    // Γ(x) Γ(1-x) = π / sin(πx)
    let wp = prec + 32;
    let one_minus = Rational::one() - x;
    let pi = BigFloat::pi(wp);
    let s = pi.mul_ref(&BigFloat::from_rational(x, wp)).sin();
    let sign = if s.is_negative() { -1 } else { 1 };
    let ln = pi.ln().sub_ref(&s.abs().ln()).sub_ref(&lgamma(&one_minus, wp)?);
    Ok((ln.round_to(prec), sign))
}

/// `∏ Γ(num_i) / ∏ Γ(den_j)`. A pole in the denominator makes the ratio zero.
pub fn gamma_ratio(num: &[Rational], den: &[Rational], prec: usize) -> Result<BigFloat> {
    let wp = prec + 16;
    if den.iter().any(is_nonpositive_integer) {
        if let Some(p) = num.iter().find(|x| is_nonpositive_integer(x)) {
            return Err(Error::Domain(format!("Γ has a pole at {p}")));
        }
        return Ok(BigFloat::zero_with_prec(prec));
    }
    let mut ln = BigFloat::zero_with_prec(wp);
    let mut sign = 1;
    for x in num {
        let (l, s) = lgamma_signed(x, wp)?;
        ln.add_assign_ref(&l);
        sign *= s;
    }
    for x in den {
        let (l, s) = lgamma_signed(x, wp)?;
        ln = ln.sub_ref(&l);
        sign *= s;
    }
    let mag = ln.exp();
    Ok(if sign < 0 { mag.neg_ref() } else { mag }.round_to(prec))
}

/// `Γ(x) = (x-1)!` for positive integers, `None` otherwise.
pub fn gamma_integer(x: &Rational) -> Option<BigInt> {
    if !x.is_integer() || !x.is_positive() {
        return None;
    }
    let n = x.to_integer().to_u64()?;
    Some(super::factorial(n - 1))
}

/// `cos(π x)` for rational `x`, exact when `2x` is an integer.
pub fn cos_pi(x: &Rational, prec: usize) -> BigFloat {
    let two = Rational::from_integer(2.into());
    let t = x * &two;
    if t.is_integer() {
        let k = t.to_integer().mod_floor(&BigInt::from(4));
        let v = match k.to_i64() {
            Some(0) => 1,
            Some(2) => -1,
            _ => 0,
        };
        return BigFloat::from_i64(v, prec);
    }
    BigFloat::pi(prec + 16)
        .mul_ref(&BigFloat::from_rational(x, prec + 16))
        .cos()
        .round_to(prec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::gamma_half_exact;
    use rand::{Rng, SeedableRng};

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn close(a: &BigFloat, b: &BigFloat, bits: usize) -> bool {
        let tol = BigFloat::from_rational(&pow2_neg(bits), a.precision().max(b.precision()));
        a.sub_ref(b).abs() < tol
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(1), q(-1, 2));
        assert_eq!(bernoulli(2), q(1, 6));
        assert_eq!(bernoulli(12), q(-691, 2730));
        assert_eq!(bernoulli(13), q(0, 1));
    }

    #[test]
    fn lgamma_half_is_ln_sqrt_pi() {
        let want = BigFloat::pi(160).ln().scale(&q(1, 2));
        assert!(close(&lgamma(&q(1, 2), 128).unwrap(), &want, 120));
    }

    #[test]
    fn lgamma_one_is_zero() {
        assert!(lgamma(&q(1, 1), 256).unwrap().abs().to_f64() < 1e-70);
        assert!(lgamma(&q(2, 1), 256).unwrap().abs().to_f64() < 1e-70);
    }

    #[test]
    fn lgamma_seven_halves() {
        // Γ(7/2) = Γ(1 + 5/2) = 15 sqrt(π) / 8
        let g = gamma_half_exact(5);
        assert_eq!(g.df, q(15, 1));
        let want = BigFloat::from_rational(&q(15, 8), 256)
            .mul_ref(&BigFloat::pi(256).sqrt())
            .ln();
        assert!(close(&lgamma(&q(7, 2), 256).unwrap(), &want, 240));
    }

    #[test]
    fn lgamma_high_precision_stays_accurate() {
        // ln Γ(11) = ln 10!
        let want = BigFloat::from_i64(3_628_800, 1100).ln();
        assert!(close(&lgamma(&q(11, 1), 1024).unwrap(), &want, 1010));
    }

    #[test]
    fn lgamma_rejects_nonpositive() {
        assert!(lgamma(&q(0, 1), 128).is_err());
        assert!(lgamma(&q(-1, 2), 128).is_err());
    }

    #[test]
    fn gamma_recurrence_on_random_rationals() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..100 {
            let x = q(rng.gen_range(1..=2000), 100);
            let a = lgamma(&(&x + q(1, 1)), 128).unwrap();
            let b = lgamma(&x, 128).unwrap();
            let ratio = a.sub_ref(&b).exp();
            assert!(close(&ratio, &BigFloat::from_rational(&x, 128), 100), "x={x}");
        }
    }

    #[test]
    fn reflection_for_negative_arguments() {
        // Γ(-1/2) = -2 sqrt(π)
        let (ln, sign) = lgamma_signed(&q(-1, 2), 128).unwrap();
        assert_eq!(sign, -1);
        let want = BigFloat::pi(128).sqrt().mul_ref(&BigFloat::from_i64(2, 128)).ln();
        assert!(close(&ln, &want, 110));
        assert!(lgamma_signed(&q(-2, 1), 128).is_err());
    }

    #[test]
    fn gamma_ratio_values() {
        let r = gamma_ratio(&[q(4, 1)], &[q(2, 1), q(2, 1), q(2, 1)], 128).unwrap();
        assert!(close(&r, &BigFloat::from_i64(6, 128), 110));
        let z = gamma_ratio(&[q(1, 2)], &[q(-1, 1)], 128).unwrap();
        assert!(z.is_zero());
        assert!(gamma_ratio(&[q(0, 1)], &[q(1, 1)], 128).is_err());
    }

    #[test]
    fn cos_pi_exact_at_half_integers() {
        assert_eq!(cos_pi(&q(1, 1), 128).to_f64(), -1.0);
        assert_eq!(cos_pi(&q(3, 2), 128).to_f64(), 0.0);
        assert_eq!(cos_pi(&q(-4, 1), 128).to_f64(), 1.0);
        assert!((cos_pi(&q(1, 4), 128).to_f64() - 0.5f64.sqrt()).abs() < 1e-15);
    }
}
