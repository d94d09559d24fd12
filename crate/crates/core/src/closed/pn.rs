use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{binomial, rat, Rational, UniPoly};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PnFamily {
    A,
    Bc,
}

impl fmt::Display for PnFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PnFamily::A => "A",
            PnFamily::Bc => "BC",
        })
    }
}

impl std::str::FromStr for PnFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(PnFamily::A),
            "bc" => Ok(PnFamily::Bc),
            _ => Err(Error::InvalidParams(format!("unknown polynomial family {s}"))),
        }
    }
}

fn poly(num: &[i64], den: i64) -> UniPoly {
    UniPoly::from_coeffs(num.iter().map(|&c| rat(c, den)).collect())
}

/// Known correction polynomial in `s = cos²(πu/2)`.
pub fn pn_poly(family: PnFamily, n: usize) -> Result<UniPoly> {
    let p = match (family, n) {
        (PnFamily::A, 1 | 3) | (PnFamily::Bc, 1 | 4) => UniPoly::one(),
        (PnFamily::A, 5) => poly(&[1, 2], 3),
        (PnFamily::A, 7) => poly(&[3, 26, -16, 32], 45),
        (PnFamily::Bc, 5) => poly(&[3, 4, 8], 15),
        _ => return Err(Error::Absent(format!("no {family} polynomial for n = {n}"))),
    };
    Ok(p)
}

/// Power of `x = cos(πu/2)` multiplying `P_n(x²)` in the complex identities.
pub fn carrier_power(family: PnFamily, n: usize) -> usize {
    match family {
        PnFamily::A => (n - 1) / 2,
        PnFamily::Bc => n - n % 4,
    }
}

/// `x^m P_n(x²)` written as `x^m Σ c_i cos(iπu)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ZBasis {
    /// The power `m` of `x = cos(πu/2)` kept outside the basis.
    pub carrier: usize,
    /// `c_i` multiplying `z_i = cos(iπu)`, starting at `z_0 = 1`.
    #[serde(serialize_with = "ser_rationals")]
    pub coeffs: Vec<Rational>,
}

fn ser_rationals<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|r| r.to_string()))
}

/// Rewrite `P_n(s)` in the multiple-angle basis: `s = (1 + z_1)/2`, and
/// `z_1^j = 2^-j Σ_l binom(j, l) z_{|j - 2l|}`.
pub fn z_basis(n: usize) -> Result<ZBasis> {
    let p = pn_poly(PnFamily::A, n)?;
    let deg = p.degree().unwrap_or(0);
    let mut coeffs = vec![Rational::zero(); deg + 1];
    for (j, c) in p.coeffs().iter().enumerate() {
        // s^j = 2^-j Σ_i binom(j, i) z_1^i
        for i in 0..=j {
            let w = c * Rational::new(binomial(j as i64, i as i64), BigInt::one() << j);
            for l in 0..=i {
                let idx = (i as i64 - 2 * l as i64).unsigned_abs() as usize;
                coeffs[idx] += &w * Rational::new(binomial(i as i64, l as i64), BigInt::one() << i);
            }
        }
    }
    Ok(ZBasis { carrier: carrier_power(PnFamily::A, n), coeffs })
}
