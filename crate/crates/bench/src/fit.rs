//! Fitting the correction polynomial `P_n(s)`, `s = cos²(πu/2)`, of the
//! complex Dyson identity from truncated constant terms.

use ctwork_core::arith::{cos_pi, double_factorial, factorial, gamma_ratio, int, rat, BigFloat, Coeff, Field, Rational, UniPoly};
use ctwork_core::closed::{pn_poly, PnFamily};
use ctwork_core::kernels::{ct, CtValue, KernelFamily, KernelParams, Mode};
use ctwork_core::{Error, Result};
use serde::Serialize;

/// Coefficients (constant first) of the polynomial of degree `< points.len()`
/// through `points`, by Newton divided differences over any field.
pub fn interpolate<C: Field>(points: &[(C, C)]) -> Result<Vec<C>> {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            if points[i].0 == points[j].0 {
                return Err(Error::InvalidParams(format!("duplicate abscissa at samples {i} and {j}")));
            }
        }
    }
    let mut dd: Vec<C> = points.iter().map(|p| p.1.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let den = points[i].0.sub_ref(&points[i - level].0);
            let num = dd[i].sub_ref(&dd[i - 1]);
            dd[i] = num.div_ref(&den).ok_or_else(|| Error::InvalidParams("ill-conditioned samples".into()))?;
        }
    }
    // expand the Newton form from the innermost coefficient outwards
    let mut coeffs = vec![C::zero(); n];
    for i in (0..n).rev() {
        let mut next = vec![C::zero(); n];
        for (d, c) in coeffs.iter().enumerate() {
            if d + 1 < n {
                next[d + 1].add_assign_ref(c);
            }
            next[d].add_assign_ref(&c.mul_ref(&points[i].0).neg_ref());
        }
        next[0].add_assign_ref(&dd[i]);
        coeffs = next;
    }
    Ok(coeffs)
}

pub fn eval_poly<C: Coeff>(coeffs: &[C], x: &C) -> C {
    coeffs.iter().rev().fold(C::zero(), |acc, c| {
        let mut t = acc.mul_ref(x);
        t.add_assign_ref(c);
        t
    })
}

/// One sample of the fit.
#[derive(Clone, Debug, Serialize)]
pub struct FitSample {
    #[serde(serialize_with = "ser_rational")]
    pub u: Rational,
    pub s: f64,
    /// Truncated constant term.
    pub lhs: f64,
    pub tail: f64,
    /// `lhs` divided by the Gamma factor and `x^m`.
    pub reduced: f64,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(r)
}

#[derive(Clone, Debug, Serialize)]
pub struct FitResult {
    pub family: PnFamily,
    pub n: usize,
    pub truncation: u32,
    pub samples: Vec<FitSample>,
    /// Fitted coefficients in `s`, constant first.
    pub fitted: Vec<f64>,
    /// Residuals at the samples not used for interpolation.
    pub residuals: Vec<f64>,
    /// Tabulated polynomial, when known.
    pub known: Option<Vec<f64>>,
    /// Largest coefficient-wise distance to the tabulated polynomial.
    pub distance: Option<f64>,
}

/// Largest `n` fitted without the unbounded flag.
pub const MAX_FIT_N: usize = 5;

/// `binom(m, 2)` with `m = (n-1)/2`.
pub fn expected_degree(n: usize) -> usize {
    let m = (n - 1) / 2;
    m * m.saturating_sub(1) / 2
}

fn gamma_factor(n: usize, u: &Rational, prec: usize) -> Result<BigFloat> {
    let one = int(1);
    let h = u / int(2);
    gamma_ratio(&[&one + &h * int(n as i64)], &vec![&one + &h; n], prec)
}

/// Fit `P_n` for the A family through complex Dyson constant terms truncated at `truncation`.
///
/// The first `degree + 1` samples are interpolated; the rest are held out.
pub fn fit_pn(
    family: PnFamily,
    n: usize,
    u_samples: &[Rational],
    truncation: u32,
    prec: usize,
    unbounded: bool,
) -> Result<FitResult> {
    if family != PnFamily::A {
        return Err(Error::InvalidParams("fitting is implemented for the A family only".into()));
    }
    if n.is_multiple_of(2) || n < 3 {
        return Err(Error::InvalidParams(format!("A-family fitting needs odd n >= 3, got {n}")));
    }
    if n > MAX_FIT_N && !unbounded {
        return Err(Error::Guard(format!("n = {n} fitting needs the unbounded flag")));
    }
    let degree = expected_degree(n);
    if u_samples.len() < degree + 1 {
        return Err(Error::InvalidParams(format!("degree {degree} needs {} samples", degree + 1)));
    }
    let m = (n - 1) / 2;
    let wp = prec + 32;
    let mut samples = Vec::new();
    let mut points = Vec::new();
    for u in u_samples {
        let p = KernelParams::new(n).with_u(u.clone()).with_order(truncation);
        let r = ct(KernelFamily::ComplexDyson, &p, Mode::Bigfloat { prec: wp })?;
        let CtValue::Float(lhs) = r.value else { unreachable!("float mode") };
        let tail = r.tail.as_ref().and_then(CtValue::to_f64).map_or(0.0, f64::abs);
        let x = cos_pi(&(u / int(2)), wp);
        let den = gamma_factor(n, u, wp)?.mul_ref(&x.powi(m as u32));
        let reduced = Field::div_ref(&lhs, &den)
            .filter(|q| q.is_finite())
            .ok_or_else(|| Error::Domain(format!("Gamma factor or cos(πu/2) vanishes at u = {u}")))?;
        let s = x.mul_ref(&x);
        samples.push(FitSample { u: u.clone(), s: s.to_f64(), lhs: lhs.to_f64(), tail, reduced: reduced.to_f64() });
        points.push((s, reduced));
    }
    let coeffs = interpolate(&points[..degree + 1])?;
    let residuals = points[degree + 1..].iter().map(|(s, y)| eval_poly(&coeffs, s).sub_ref(y).abs().to_f64()).collect();
    let fitted: Vec<f64> = coeffs.iter().map(BigFloat::to_f64).collect();
    let known = pn_poly(family, n).ok().map(|p| (0..=degree).map(|i| ctwork_core::arith::rational_to_f64(&p.coeff(i))).collect::<Vec<_>>());
    let distance = known.as_ref().map(|k| k.iter().zip(&fitted).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max));
    Ok(FitResult { family, n, truncation, samples, fitted, residuals, known, distance })
}

/// Default samples: `u = 1/2, 1/4, 2/3, 1/3, ...`, distinct in `s` and away from odd integers.
pub fn default_samples(count: usize) -> Vec<Rational> {
    [rat(1, 2), rat(1, 4), rat(2, 3), rat(1, 3), rat(3, 4), rat(1, 5)].into_iter().take(count).collect()
}

/// `P_n(1)` from the exact constant term at `u = 2`, where
/// `x = -1` and the Gamma factor is `n!`.
pub fn pn_at_one(n: usize) -> Result<Rational> {
    let p = KernelParams::new(n).with_u(int(2)).with_order(2);
    let r = ct(KernelFamily::ComplexDyson, &p, Mode::Rational)?;
    let (CtValue::Rational(v), true) = (r.value, r.exact) else {
        return Err(Error::Domain("constant term at u = 2 is not exact".into()));
    };
    let sign = if (n - 1) / 2 % 2 == 1 { int(-1) } else { int(1) };
    Ok(v * sign / Rational::from_integer(factorial(n as u64)))
}

/// `P_n(0)` from the logarithmic Dyson constant term at `k = 0`: the `m`th
/// derivative at `u = 1` gives `CT = P_n(0) n!! / n`.
pub fn pn_at_zero(n: usize) -> Result<Rational> {
    let p = KernelParams::new(n);
    let r = ct(KernelFamily::LogDyson, &p, Mode::Rational)?;
    let CtValue::Rational(v) = r.value else { unreachable!("rational mode") };
    Ok(v * int(n as i64) / double_factorial(n as i64)?)
}

/// Exact fit through rational samples, for closed-loop checks.
pub fn fit_exact(points: &[(Rational, Rational)]) -> Result<UniPoly> {
    Ok(UniPoly::from_coeffs(interpolate(points)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_loop_recovers_known_polynomials() {
        let target = UniPoly::from_coeffs(vec![rat(3, 45), rat(26, 45), rat(-16, 45), rat(32, 45)]);
        let pts: Vec<_> = [rat(1, 2), rat(1, 3), rat(2, 7), rat(9, 10)].into_iter().map(|s| (s.clone(), target.eval(&s))).collect();
        assert_eq!(fit_exact(&pts).unwrap(), target);
        let p5 = pn_poly(PnFamily::A, 5).unwrap();
        let pts: Vec<_> = [rat(1, 2), rat(1, 7)].into_iter().map(|s| (s.clone(), p5.eval(&s))).collect();
        assert_eq!(fit_exact(&pts).unwrap(), p5);
        let dup = [(rat(1, 2), int(1)), (rat(1, 2), int(2))];
        assert!(fit_exact(&dup).is_err());
    }

    #[test]
    fn float_interpolation() {
        let pts = [(1.0f64, 3.0), (2.0, 5.0), (4.0, 9.0)];
        let c = interpolate(&pts).unwrap();
        assert!((c[0] - 1.0).abs() < 1e-12 && (c[1] - 2.0).abs() < 1e-12 && c[2].abs() < 1e-12);
    }

    #[test]
    fn anchors() {
        assert_eq!(pn_at_one(3).unwrap(), int(1));
        assert_eq!(pn_at_zero(3).unwrap(), int(1));
    }

    #[test]
    fn degrees() {
        assert_eq!(expected_degree(3), 0);
        assert_eq!(expected_degree(5), 1);
        assert_eq!(expected_degree(7), 3);
    }

    #[test]
    fn n3_is_constant_one() {
        let r = fit_pn(PnFamily::A, 3, &default_samples(2), 100, 96, false).unwrap();
        assert_eq!(r.fitted.len(), 1);
        assert!((r.fitted[0] - 1.0).abs() < 1e-4, "{:?}", r.fitted);
        assert!(r.distance.unwrap() < 1e-4);
        assert_eq!(r.residuals.len(), 1);
    }

    #[test]
    fn guards() {
        assert!(fit_pn(PnFamily::A, 7, &default_samples(4), 8, 64, false).is_err());
        assert!(fit_pn(PnFamily::Bc, 5, &default_samples(2), 8, 64, false).is_err());
        assert!(fit_pn(PnFamily::A, 5, &default_samples(1), 8, 64, false).is_err());
    }
}
