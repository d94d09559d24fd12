use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum KernelFamily {
    Dyson,
    Morris,
    MorrisTau,
    LogDyson,
    LogMorris,
    AmLog,
    ComplexMorris,
    ComplexDyson,
    G2Equal,
    G2Hz,
    G2Complex,
    G2LogLong,
    G2LogShort,
    Bc,
    BcSigmaTau,
    BcComplex,
}

impl KernelFamily {
    pub const ALL: [KernelFamily; 16] = [
        KernelFamily::Dyson,
        KernelFamily::Morris,
        KernelFamily::MorrisTau,
        KernelFamily::LogDyson,
        KernelFamily::LogMorris,
        KernelFamily::AmLog,
        KernelFamily::ComplexMorris,
        KernelFamily::ComplexDyson,
        KernelFamily::G2Equal,
        KernelFamily::G2Hz,
        KernelFamily::G2Complex,
        KernelFamily::G2LogLong,
        KernelFamily::G2LogShort,
        KernelFamily::Bc,
        KernelFamily::BcSigmaTau,
        KernelFamily::BcComplex,
    ];

    pub fn id(self) -> &'static str {
        match self {
            KernelFamily::Dyson => "dyson",
            KernelFamily::Morris => "morris",
            KernelFamily::MorrisTau => "morris-tau",
            KernelFamily::LogDyson => "log-dyson",
            KernelFamily::LogMorris => "log-morris",
            KernelFamily::AmLog => "am-log",
            KernelFamily::ComplexMorris => "complex-morris",
            KernelFamily::ComplexDyson => "complex-dyson",
            KernelFamily::G2Equal => "g2-equal",
            KernelFamily::G2Hz => "g2-hz",
            KernelFamily::G2Complex => "g2-complex",
            KernelFamily::G2LogLong => "g2-log-long",
            KernelFamily::G2LogShort => "g2-log-short",
            KernelFamily::Bc => "bc",
            KernelFamily::BcSigmaTau => "bc-sigma-tau",
            KernelFamily::BcComplex => "bc-complex",
        }
    }

    /// Kernels with a formal exponent `u` (and `v` for G2).
    pub fn is_complex(self) -> bool {
        matches!(
            self,
            KernelFamily::ComplexMorris | KernelFamily::ComplexDyson | KernelFamily::G2Complex | KernelFamily::BcComplex
        )
    }

    pub fn is_g2(self) -> bool {
        matches!(
            self,
            KernelFamily::G2Equal | KernelFamily::G2Hz | KernelFamily::G2Complex | KernelFamily::G2LogLong | KernelFamily::G2LogShort
        )
    }

    fn needs_odd_n(self) -> bool {
        matches!(
            self,
            KernelFamily::MorrisTau
                | KernelFamily::LogDyson
                | KernelFamily::LogMorris
                | KernelFamily::AmLog
                | KernelFamily::ComplexMorris
                | KernelFamily::ComplexDyson
        )
    }
}

impl fmt::Display for KernelFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for KernelFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        KernelFamily::ALL
            .into_iter()
            .find(|f| f.id() == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown kernel family {s:?}")))
    }
}

/// Coefficient ring used for a constant-term computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Exact rationals; formal exponents must be given as numbers.
    Rational,
    /// Polynomials in `u`; `v` (if used) must be a number.
    UnipolyU,
    /// Polynomials in `u` and `v`.
    BipolyUv,
    /// Big floats at the given precision in bits.
    Bigfloat { prec: usize },
}

/// Parameters shared by all families; each family reads the ones it uses.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KernelParams {
    pub n: usize,
    /// One exponent per variable for Dyson, otherwise a single value.
    pub a: Vec<u32>,
    pub b: u32,
    pub k: u32,
    /// Short-root exponent of the G2 families.
    pub m: u32,
    #[serde(default, with = "crate::arith::serde_rational::opt")]
    pub u: Option<Rational>,
    #[serde(default, with = "crate::arith::serde_rational::opt")]
    pub v: Option<Rational>,
    /// Truncation order of every formal binomial series.
    pub order: Option<u32>,
}

impl Default for KernelParams {
    fn default() -> Self {
        KernelParams { n: 3, a: vec![0], b: 0, k: 0, m: 0, u: None, v: None, order: None }
    }
}

impl KernelParams {
    pub fn new(n: usize) -> Self {
        KernelParams { n, ..Default::default() }
    }

    pub fn with_a(mut self, a: u32) -> Self {
        self.a = vec![a];
        self
    }

    pub fn with_a_vec(mut self, a: Vec<u32>) -> Self {
        self.a = a;
        self
    }

    pub fn with_b(mut self, b: u32) -> Self {
        self.b = b;
        self
    }

    pub fn with_k(mut self, k: u32) -> Self {
        self.k = k;
        self
    }

    pub fn with_m(mut self, m: u32) -> Self {
        self.m = m;
        self
    }

    pub fn with_u(mut self, u: Rational) -> Self {
        self.u = Some(u);
        self
    }

    pub fn with_v(mut self, v: Rational) -> Self {
        self.v = Some(v);
        self
    }

    pub fn with_order(mut self, order: u32) -> Self {
        self.order = Some(order);
        self
    }

    /// The single `a` of non-Dyson families (0 when absent).
    pub fn a0(&self) -> Result<u32> {
        match self.a.as_slice() {
            [] => Ok(0),
            [a] => Ok(*a),
            _ => Err(Error::InvalidParams("this family takes a single value of a".into())),
        }
    }

    /// Dyson exponents, one per variable; a single value is repeated.
    pub fn a_vec(&self) -> Result<Vec<u32>> {
        match self.a.len() {
            0 => Ok(vec![0; self.n]),
            1 => Ok(vec![self.a[0]; self.n]),
            l if l == self.n => Ok(self.a.clone()),
            l => Err(Error::InvalidParams(format!("{l} values of a for n = {}", self.n))),
        }
    }

    /// `(n - 1) / 2`.
    pub fn half(&self) -> usize {
        (self.n - 1) / 2
    }

    /// `2k + 1`.
    pub fn big_k(&self) -> u32 {
        2 * self.k + 1
    }

    pub fn validate(&self, family: KernelFamily) -> Result<()> {
        if family.is_g2() {
            return Ok(());
        }
        if self.n == 0 {
            return Err(Error::InvalidParams("n must be positive".into()));
        }
        if family.needs_odd_n() && self.n.is_multiple_of(2) {
            return Err(Error::InvalidParams(format!("{family} needs odd n, got {}", self.n)));
        }
        if matches!(family, KernelFamily::BcSigmaTau | KernelFamily::BcComplex) && !matches!(self.n % 4, 0 | 1) {
            return Err(Error::InvalidParams(format!("{family} needs n = 0 or 1 mod 4, got {}", self.n)));
        }
        if family == KernelFamily::Dyson {
            self.a_vec()?;
        } else {
            self.a0()?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for f in KernelFamily::ALL {
            assert_eq!(f.id().parse::<KernelFamily>().unwrap(), f);
            assert_eq!(serde_json::to_string(&f).unwrap(), format!("\"{}\"", f.id()));
        }
        assert!("morse".parse::<KernelFamily>().is_err());
    }

    #[test]
    fn validation() {
        assert!(KernelParams::new(4).validate(KernelFamily::LogDyson).is_err());
        assert!(KernelParams::new(6).validate(KernelFamily::BcSigmaTau).is_err());
        assert!(KernelParams::new(5).validate(KernelFamily::BcSigmaTau).is_ok());
        assert!(KernelParams::new(3).with_a_vec(vec![1, 2]).validate(KernelFamily::Dyson).is_err());
        assert!(KernelParams::new(3).with_a_vec(vec![1, 2]).validate(KernelFamily::Morris).is_err());
    }
}
