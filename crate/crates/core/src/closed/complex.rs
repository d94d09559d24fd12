use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{
    cos_pi, gamma_half_exact, gamma_ratio, int, pochhammer, rat, BigFloat, Coeff, GammaHalfExact, Rational,
};
use crate::error::{Error, Result};
use crate::kernels::{KernelFamily, KernelParams};

use super::pn::{carrier_power, pn_poly, PnFamily};

/// A right-hand side value: exact when rational, otherwise a float with an error bound.
#[derive(Clone, Debug, Serialize)]
pub struct ClosedFormValue {
    #[serde(serialize_with = "ser_opt_rational")]
    pub exact: Option<Rational>,
    #[serde(serialize_with = "ser_float")]
    pub numeric: BigFloat,
    /// Absolute error bound on `numeric`.
    pub bound: f64,
}

fn ser_opt_rational<S: serde::Serializer>(r: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.collect_str(r),
        None => s.serialize_none(),
    }
}

fn ser_float<S: serde::Serializer>(x: &BigFloat, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(x.to_f64())
}

impl ClosedFormValue {
    pub fn exact(r: Rational, prec: usize) -> Self {
        ClosedFormValue { numeric: BigFloat::from_rational(&r, prec), exact: Some(r), bound: 0.0 }
    }

    pub fn to_f64(&self) -> f64 {
        self.numeric.to_f64()
    }
}

/// A product of Gamma values `Γ(1 + N/2)^{±1}`, kept symbolic for exact evaluation.
struct GammaProduct {
    num: Vec<Rational>,
    den: Vec<Rational>,
}

impl GammaProduct {
    fn new() -> Self {
        GammaProduct { num: Vec::new(), den: Vec::new() }
    }

    fn up(&mut self, x: Rational) -> &mut Self {
        self.num.push(x);
        self
    }

    fn down(&mut self, x: Rational) -> &mut Self {
        self.den.push(x);
        self
    }

    fn half_exact(x: &Rational) -> Option<GammaHalfExact> {
        let n = (x - Rational::one()) * int(2);
        if !n.is_integer() || n.is_negative() {
            return None;
        }
        Some(gamma_half_exact(n.to_integer().to_u32()?))
    }

    /// Exact value when every argument is `1 + N/2` and the radicals cancel.
    fn exact(&self) -> Option<Rational> {
        let mut acc = GammaHalfExact::one();
        for x in &self.num {
            acc = acc.mul(&Self::half_exact(x)?);
        }
        for x in &self.den {
            acc = acc.div(&Self::half_exact(x)?);
        }
        acc.to_rational()
    }

    fn float(&self, prec: usize) -> Result<BigFloat> {
        gamma_ratio(&self.num, &self.den, prec)
    }

    fn len(&self) -> usize {
        self.num.len() + self.den.len()
    }
}

/// `cos(πx)` when it is one of `-1, 0, 1`.
fn cos_pi_exact(x: &Rational) -> Option<i64> {
    let t = x * int(2);
    if !t.is_integer() {
        return None;
    }
    Some(match t.to_integer().to_i64()?.rem_euclid(4) {
        0 => 1,
        2 => -1,
        _ => 0,
    })
}

fn half(x: &Rational) -> Rational {
    x / int(2)
}

fn one_plus(x: Rational) -> Rational {
    Rational::one() + x
}

fn need(x: &Option<Rational>, name: &str) -> Result<Rational> {
    x.clone().ok_or_else(|| Error::InvalidParams(format!("missing {name}")))
}

fn positive(x: Rational, what: &str) -> Result<()> {
    if x.is_positive() {
        Ok(())
    } else {
        Err(Error::Domain(format!("convergence needs {what} > 0")))
    }
}

/// The pieces of a complex right-hand side: `cosines · P(x²) · Gammas · rational`.
struct Parts {
    /// Arguments `y` of the `cos(πy)` factors.
    cos_args: Vec<Rational>,
    /// Correction polynomial evaluated at `x² = cos²(πu/2)`.
    pn: Option<(PnFamily, usize, Rational)>,
    gammas: GammaProduct,
    rational: Rational,
}

fn parts(family: KernelFamily, p: &KernelParams) -> Result<Parts> {
    use KernelFamily::*;
    p.validate(family)?;
    let u = need(&p.u, "u")?;
    match family {
        ComplexMorris | ComplexDyson => {
            let n = p.n;
            positive(one_plus(&u * int(n as i64) / int(2)), "1 + nu/2")?;
            let (a, b) = if family == ComplexDyson { (0, 0) } else { (p.a0()?, p.b) };
            let mut g = GammaProduct::new();
            g.up(one_plus(&u * int(n as i64) / int(2)));
            for _ in 0..n {
                g.down(one_plus(half(&u)));
            }
            let mut r = Rational::one();
            for i in 0..n as i64 {
                let x = one_plus(&u * int(i) / int(2));
                r *= pochhammer(&x, a + b) / (pochhammer(&x, a) * pochhammer(&x, b));
            }
            let m = carrier_power(PnFamily::A, n);
            Ok(Parts { cos_args: vec![half(&u); m], pn: Some((PnFamily::A, n, half(&u))), gammas: g, rational: r })
        }
        G2Complex => {
            let v = need(&p.v, "v")?;
            let s = &u + &v;
            positive(one_plus(&u * rat(3, 2)), "1 + 3u/2")?;
            positive(one_plus(&s * rat(3, 2)), "1 + 3(u+v)/2")?;
            let mut g = GammaProduct::new();
            g.up(one_plus(&s * rat(3, 2)))
                .up(one_plus(&u * rat(3, 2)))
                .up(one_plus(u.clone()))
                .up(one_plus(v.clone()))
                .down(one_plus(&u * rat(3, 2) + &v))
                .down(one_plus(&u + half(&v)))
                .down(one_plus(half(&s)))
                .down(one_plus(half(&u)))
                .down(one_plus(half(&u)))
                .down(one_plus(half(&v)));
            Ok(Parts { cos_args: vec![half(&u), half(&v)], pn: None, gammas: g, rational: Rational::one() })
        }
        BcComplex => {
            let (n, a, b) = (p.n as i64, p.a0()?, p.b);
            positive(one_plus(int(2 * b as i64) + &u * int(n - 1)), "1 + 2b + (n-1)u")?;
            positive(one_plus(&u * int(n) / int(2)), "1 + nu/2")?;
            let mut g = GammaProduct::new();
            g.up(one_plus(&u * int(n) / int(2))).down(one_plus(&u * int(n - 1) / int(2)));
            for _ in 0..n {
                g.down(one_plus(half(&u)));
            }
            for i in 1..n {
                g.up(one_plus(&u * int(i))).down(one_plus(&u * rat(2 * i - 1, 2)));
            }
            let mut r = Rational::one();
            for i in 0..n {
                let x = rat(1, 2) + &u * int(i) / int(2);
                let y = one_plus(&u * int(n + i - 1) / int(2));
                r *= pochhammer(&x, a + b) * pochhammer(&x, b) / pochhammer(&y, a + 2 * b);
                // normalisation so that u = 2k gives the classical BC value
                r *= Rational::from_integer(BigInt::from(1) << (2 * (a + 2 * b)) as usize);
            }
            let m = carrier_power(PnFamily::Bc, p.n);
            Ok(Parts { cos_args: vec![half(&u); m], pn: Some((PnFamily::Bc, p.n, half(&u))), gammas: g, rational: r })
        }
        _ => Err(Error::InvalidParams(format!("{family} has no complex right-hand side"))),
    }
}

/// Exact value of a complex right-hand side at exponents where it is rational.
pub fn complex_exact(family: KernelFamily, p: &KernelParams) -> Result<Option<Rational>> {
    let parts = parts(family, p)?;
    let mut cos = Rational::one();
    for y in &parts.cos_args {
        match cos_pi_exact(y) {
            Some(c) => cos *= int(c),
            None => return Ok(None),
        }
    }
    if cos.is_zero() {
        return Ok(Some(cos));
    }
    let pn = match &parts.pn {
        Some((fam, n, y)) => {
            let Some(x) = cos_pi_exact(y) else {
                return Ok(None);
            };
            pn_poly(*fam, *n)?.eval(&int(x * x))
        }
        None => Rational::one(),
    };
    Ok(parts.gammas.exact().map(|g| cos * pn * g * parts.rational))
}

/// Complex right-hand side at `p.u` (and `p.v`), exact when possible.
pub fn rhs_complex(family: KernelFamily, p: &KernelParams, prec: usize) -> Result<ClosedFormValue> {
    if let Some(r) = complex_exact(family, p)? {
        return Ok(ClosedFormValue::exact(r, prec));
    }
    let parts = parts(family, p)?;
    let wp = prec + 32;
    let mut acc = parts.gammas.float(wp)?;
    for y in &parts.cos_args {
        acc = acc.mul_ref(&cos_pi(y, wp));
    }
    if let Some((fam, n, y)) = &parts.pn {
        let x = cos_pi(y, wp);
        let one = BigFloat::from_i64(1, wp);
        acc = acc.mul_ref(&pn_poly(*fam, *n)?.eval_in(&x.mul_ref(&x), &one));
    }
    acc = acc.mul_ref(&BigFloat::from_rational(&parts.rational, wp)).round_to(prec);
    let rel = (parts.gammas.len() + parts.cos_args.len() + 4) as f64 * 2f64.powi(10 - prec as i32);
    let bound = acc.to_f64().abs() * rel;
    Ok(ClosedFormValue { exact: None, numeric: acc, bound })
}

/// Gamma product of Dixon's well-poised `3F2(2a, b, c; 1+2a-b, 1+2a-c; 1)`.
pub fn dixon_rhs(a: &Rational, b: &Rational, c: &Rational, prec: usize) -> Result<BigFloat> {
    let one = Rational::one();
    positive(&one + a - b - c, "1 + a - b - c")?;
    let two_a = a * int(2);
    let num = [&one + a, &one + &two_a - b, &one + &two_a - c, &one + a - b - c];
    let den = [&one + &two_a, &one + a - b, &one + a - c, &one + &two_a - b - c];
    gamma_ratio(&num, &den, prec)
}
