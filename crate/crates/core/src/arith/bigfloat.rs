use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat as Raw, Consts, RoundingMode, Sign};
use num_bigint::{BigInt, Sign as IntSign};
use num_traits::{One, Zero};

use super::{Approx, Coeff, Field, Rational};

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constant cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// Binary floating point number at a caller-chosen precision, rounded to nearest.
///
/// Binary operations work at the larger precision of their operands.
#[derive(Clone)]
pub struct BigFloat {
    v: Raw,
    prec: usize,
}

impl BigFloat {
    fn wrap(v: Raw, prec: usize) -> Self {
        BigFloat { v, prec }
    }

    pub fn zero_with_prec(prec: usize) -> Self {
        Self::wrap(Raw::from_word(0, prec), prec)
    }

    pub fn from_f64(x: f64, prec: usize) -> Self {
        Self::wrap(Raw::from_f64(x, prec), prec)
    }

    pub fn from_i64(n: i64, prec: usize) -> Self {
        Self::wrap(Raw::from_i64(n, prec), prec)
    }

    /// Exact conversion of an integer; the result's precision is at least `prec`.
    pub fn from_bigint(n: &BigInt, prec: usize) -> Self {
        let (sign, words) = n.to_u64_digits();
        if words.is_empty() {
            return Self::zero_with_prec(prec);
        }
        let s = if sign == IntSign::Minus { Sign::Neg } else { Sign::Pos };
        let raw = Raw::from_words(&words, s, 64 * words.len() as i32);
        let mut out = Self::wrap(raw, prec.max(64 * words.len()));
        out.prec = prec;
        out
    }

    pub fn from_rational(r: &Rational, prec: usize) -> Self {
        let n = Self::from_bigint(r.numer(), prec);
        if r.denom().is_one() {
            return n.round_to(prec);
        }
        let d = Self::from_bigint(r.denom(), prec);
        Self::wrap(n.v.div(&d.v, prec, RM), prec)
    }

    pub fn precision(&self) -> usize {
        self.prec
    }

    /// Same value rounded to a new precision.
    pub fn round_to(&self, prec: usize) -> Self {
        let mut v = self.v.clone();
        if v.set_precision(prec, RM).is_err() {
            return Self::wrap(Raw::nan(None), prec);
        }
        Self::wrap(v, prec)
    }

    pub fn pi(prec: usize) -> Self {
        Self::wrap(with_consts(|cc| cc.pi(prec, RM)), prec)
    }

    pub fn ln(&self) -> Self {
        Self::wrap(with_consts(|cc| self.v.ln(self.prec, RM, cc)), self.prec)
    }

    pub fn exp(&self) -> Self {
        Self::wrap(with_consts(|cc| self.v.exp(self.prec, RM, cc)), self.prec)
    }

    pub fn cos(&self) -> Self {
        Self::wrap(with_consts(|cc| self.v.cos(self.prec, RM, cc)), self.prec)
    }

    pub fn sin(&self) -> Self {
        Self::wrap(with_consts(|cc| self.v.sin(self.prec, RM, cc)), self.prec)
    }

    pub fn sqrt(&self) -> Self {
        Self::wrap(self.v.sqrt(self.prec, RM), self.prec)
    }

    pub fn abs(&self) -> Self {
        Self::wrap(self.v.abs(), self.prec)
    }

    pub fn powi(&self, n: u32) -> Self {
        Self::wrap(self.v.powi(n as usize, self.prec, RM), self.prec)
    }

    pub fn is_negative(&self) -> bool {
        self.v.is_negative() && !self.v.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        !self.v.is_nan() && !self.v.is_inf()
    }

    pub fn to_f64(&self) -> f64 {
        if self.v.is_nan() {
            return f64::NAN;
        }
        if self.v.is_inf() {
            return if self.v.is_inf_pos() { f64::INFINITY } else { f64::NEG_INFINITY };
        }
        let Some((words, _, sign, e, _)) = self.v.as_raw_parts() else {
            return f64::NAN;
        };
        if self.v.is_zero() || words.is_empty() {
            return 0.0;
        }
        let top = *words.last().unwrap() as f64;
        let mag = top * 2f64.powi(e.clamp(-1200, 1200) - 64);
        if sign == Sign::Neg {
            -mag
        } else {
            mag
        }
    }

    /// Hexadecimal significand `0x0.<digits>p<exponent>`, exact for the stored value.
    pub fn to_hex(&self) -> String {
        if !self.is_finite() {
            return format!("{}", self.to_f64());
        }
        let Some((words, _, sign, e, _)) = self.v.as_raw_parts() else {
            return "nan".into();
        };
        if self.v.is_zero() {
            return "0x0p+0".into();
        }
        let mut digits: String = words.iter().rev().map(|w| format!("{w:016x}")).collect();
        while digits.ends_with('0') {
            digits.pop();
        }
        let s = if sign == Sign::Neg { "-" } else { "" };
        format!("{s}0x0.{digits}p{e:+}")
    }

    fn binop(&self, rhs: &Self, f: impl FnOnce(&Raw, &Raw, usize) -> Raw) -> Self {
        let p = self.prec.max(rhs.prec);
        Self::wrap(f(&self.v, &rhs.v, p), p)
    }

    pub fn add_ref(&self, rhs: &Self) -> Self {
        self.binop(rhs, |a, b, p| a.add(b, p, RM))
    }

    pub fn div_ref(&self, rhs: &Self) -> Self {
        self.binop(rhs, |a, b, p| a.div(b, p, RM))
    }
}

impl fmt::Debug for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BigFloat({} ~ {:e}, {} bits)", self.to_hex(), self.to_f64(), self.prec)
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_hex())
    }
}

impl PartialEq for BigFloat {
    fn eq(&self, other: &Self) -> bool {
        self.v.cmp(&other.v) == Some(0)
    }
}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.v.cmp(&other.v).map(|c| c.cmp(&0))
    }
}

impl Zero for BigFloat {
    fn zero() -> Self {
        Self::zero_with_prec(64)
    }
    fn is_zero(&self) -> bool {
        self.v.is_zero()
    }
}

impl One for BigFloat {
    fn one() -> Self {
        Self::from_i64(1, 64)
    }
}

impl Add for BigFloat {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}

impl Sub for BigFloat {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.sub_ref(&rhs)
    }
}

impl Mul for BigFloat {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl Div for BigFloat {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self.div_ref(&rhs)
    }
}

impl Neg for BigFloat {
    type Output = Self;
    fn neg(self) -> Self {
        self.neg_ref()
    }
}

impl Coeff for BigFloat {
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self = self.add_ref(rhs);
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.binop(rhs, |a, b, p| a.mul(b, p, RM))
    }

    fn neg_ref(&self) -> Self {
        Self::wrap(Raw::neg(&self.v), self.prec)
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.binop(rhs, |a, b, p| a.sub(b, p, RM))
    }

    fn div_int(&self, d: i64) -> Self {
        assert!(d != 0, "division by zero");
        self.div_ref(&Self::from_i64(d, self.prec))
    }

    fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero_with_prec(self.prec);
        }
        self.mul_ref(&Self::from_rational(r, self.prec))
    }

    fn from_int(n: i64) -> Self {
        Self::from_i64(n, 64)
    }
}

impl Field for BigFloat {
    fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Self::wrap(self.v.reciprocal(self.prec, RM), self.prec))
    }
}

impl Approx for BigFloat {
    fn approx(&self) -> f64 {
        BigFloat::to_f64(self)
    }
}
