use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{cos_pi, gamma_ratio, int, pochhammer, BigFloat, Coeff, Rational};
use crate::error::{Error, Result};

use super::series::{hyper_sum, HyperSeries};

/// A truncated lattice or series sum with its halved-truncation tail proxy.
#[derive(Clone, Debug)]
pub struct TruncatedSum {
    pub value: BigFloat,
    /// Exact value when the sum has finite support.
    pub exact: Option<Rational>,
    pub tail: f64,
}

/// `Σ_{m ∈ {0..M}^3} ∏_i (-1)^{m_i} binom(2u, m_i) binom(-1-v, b + m_i - m_{i+1})`, cyclic in `i`.
fn fb_sum_in<C: Coeff>(u2: &[C], vb: &[C], b: usize, cap: usize) -> C {
    // binom(-1-v, j) vanishes for j < 0, so m_{i+1} <= m_i + b around the cycle
    let signed = |m: usize| if m % 2 == 1 { u2[m].neg_ref() } else { u2[m].clone() };
    let mut total = C::zero();
    for m0 in 0..=cap {
        let w0 = signed(m0);
        if w0.is_zero() {
            continue;
        }
        for m1 in m0.saturating_sub(2 * b)..=(m0 + b).min(cap) {
            let w1 = w0.mul_ref(&signed(m1)).mul_ref(&vb[b + m0 - m1]);
            if w1.is_zero() {
                continue;
            }
            for m2 in m0.saturating_sub(b)..=(m1 + b).min(cap) {
                let w = w1.mul_ref(&signed(m2)).mul_ref(&vb[b + m1 - m2]).mul_ref(&vb[b + m2 - m0]);
                total.add_assign_ref(&w);
            }
        }
    }
    total
}

fn binomials<C: Coeff>(top: &C, count: usize, one: &C) -> Vec<C> {
    let mut out = Vec::with_capacity(count);
    let mut b = one.clone();
    let mut t = top.clone();
    for j in 0..count {
        out.push(b.clone());
        b = b.mul_ref(&t).div_int(j as i64 + 1);
        t = t.sub_ref(one);
    }
    out
}

/// The lattice sum `F_b(u, v)` truncated at `m_i <= cap`.
///
/// Carries the sign `(-1)^b` of the `[x^b y^b z^b]` extraction, so that it
/// matches [`fb_closed`]. When `2u` is a nonnegative integer the support is
/// finite and the sum is exact.
pub fn fb_lattice_sum(u: &Rational, v: &Rational, b: usize, cap: usize, prec: usize) -> Result<TruncatedSum> {
    if !(Rational::one() + u * int(3)).is_positive() {
        return Err(Error::Domain("F_b needs 1 + 3u > 0".into()));
    }
    let u2 = u * int(2);
    let top_v = -Rational::one() - v;
    if u2.is_integer() && !u2.is_negative() {
        let cap = u2.to_integer().to_usize().unwrap_or(usize::MAX).min(cap);
        let one = Rational::one();
        let mut s = fb_sum_in(&binomials(&u2, cap + 1, &one), &binomials(&top_v, 3 * b + 1, &one), b, cap);
        if b % 2 == 1 {
            s = -s;
        }
        return Ok(TruncatedSum { value: BigFloat::from_rational(&s, prec), exact: Some(s), tail: 0.0 });
    }
    let wp = prec + 16;
    let one = BigFloat::from_i64(1, wp);
    let u2f = binomials(&BigFloat::from_rational(&u2, wp), cap + 1, &one);
    let vbf = binomials(&BigFloat::from_rational(&top_v, wp), 3 * b + 1, &one);
    let mut full = fb_sum_in(&u2f, &vbf, b, cap);
    let mut half = fb_sum_in(&u2f, &vbf, b, cap / 2);
    if b % 2 == 1 {
        full = full.neg_ref();
        half = half.neg_ref();
    }
    let tail = full.sub_ref(&half).abs().to_f64();
    Ok(TruncatedSum { value: full.round_to(prec), exact: None, tail })
}

/// `cos(πu) Γ(1+3u)/Γ(1+u)^3 ∏_i (1+v-iu)_b / (1+iu)_b`, the closed form of `F_b`.
pub fn fb_closed(u: &Rational, v: &Rational, b: u32, prec: usize) -> Result<BigFloat> {
    let one = Rational::one();
    let g = gamma_ratio(&[&one + u * int(3)], &[&one + u, &one + u, &one + u], prec + 16)?;
    let mut r = Rational::one();
    for i in 0..3 {
        let iu = u * int(i);
        r *= pochhammer(&(&one + v - &iu), b) / pochhammer(&(&one + &iu), b);
    }
    Ok(g.mul_ref(&cos_pi(u, prec + 16)).mul_ref(&BigFloat::from_rational(&r, prec + 16)).round_to(prec))
}

/// Constant term of the complex G2 kernel as the sum over `b` of the
/// `[x^b y^b z^b]` coefficients: `cos(πu/2) Γ(1+3u/2)/Γ(1+u/2)^3 · 3F2(-v, -u/2-v, -u-v; 1+u/2, 1+u; 1)`.
pub fn g2_b_sum(u: &Rational, v: &Rational, cap: usize, prec: usize) -> Result<TruncatedSum> {
    let one = Rational::one();
    let h = u / int(2);
    let series = HyperSeries::new(vec![-v.clone(), -&h - v, -u - v], vec![&one + &h, &one + u]).with_cap(cap);
    let wp = prec + 16;
    let sum = hyper_sum(&series, wp)?;
    let pre = gamma_ratio(&[&one + &h * int(3)], &[&one + &h, &one + &h, &one + &h], wp)?.mul_ref(&cos_pi(&h, wp));
    let value = pre.mul_ref(&sum.to_float(wp));
    let tail = sum.tail() * pre.abs().to_f64();
    let exact = pre.is_zero().then(Rational::zero);
    Ok(TruncatedSum { value: value.round_to(prec), exact, tail })
}
