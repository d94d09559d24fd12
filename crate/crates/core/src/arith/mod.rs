//! Exact rationals, big floats, factorial-family functions and the polynomial
//! rings in the formal exponents.

mod bigfloat;
mod factorial;
mod gamma;
mod multipoly;
mod poly;
mod ring;
pub mod serde_rational;

pub use bigfloat::BigFloat;
pub use factorial::{
    binomial, binomial_general, binomial_with_one, double_factorial, double_factorial_int,
    factorial, gamma_half_exact, pochhammer, pochhammer_half, GammaHalfExact,
};
pub use gamma::{bernoulli, cos_pi, gamma_integer, gamma_ratio, lgamma, lgamma_signed};
pub use multipoly::MultiPoly;
pub use poly::{BiPoly, UniPoly};
pub use ring::{rational_to_f64, Approx, Coeff, Field};

use std::str::FromStr;

use num_bigint::BigInt;

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parse `p/q`, an integer, or a finite decimal such as `-0.25`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let n = BigInt::from_str(p.trim()).ok()?;
        let d = BigInt::from_str(q.trim()).ok()?;
        return (d != BigInt::from(0)).then(|| Rational::new(n, d));
    }
    if let Some((ip, fp)) = s.split_once('.') {
        if fp.is_empty() || !fp.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let neg = ip.starts_with('-');
        let whole = BigInt::from_str(if ip.is_empty() || ip == "-" { "0" } else { ip }).ok()?;
        let scale = num_traits::pow(BigInt::from(10), fp.len());
        let frac = Rational::new(BigInt::from_str(fp).ok()?, scale);
        let w = Rational::from_integer(whole);
        return Some(if neg { w - frac } else { w + frac });
    }
    BigInt::from_str(s).ok().map(Rational::from_integer)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_rational("3/6"), Some(rat(1, 2)));
        assert_eq!(parse_rational("-4"), Some(int(-4)));
        assert_eq!(parse_rational("-0.25"), Some(rat(-1, 4)));
        assert_eq!(parse_rational(".5"), Some(rat(1, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }
}
