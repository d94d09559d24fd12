use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Coeff, Rational};

/// Dense polynomial in one formal exponent `u`, ascending coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate itself.
    pub fn x() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Horner evaluation in any coefficient ring; `one` fixes its precision.
    pub fn eval_in<C: Coeff>(&self, x: &C, one: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x);
            acc.add_assign_ref(&one.scale(c));
        }
        acc
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.eval_in(x, &Rational::one())
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(i.into()))
                .collect(),
        )
    }

    /// Keep only the terms of degree `<= d`.
    pub fn truncate(&self, d: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().take(d + 1).cloned().collect())
    }
}

impl Zero for UniPoly {
    fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for UniPoly {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl Add for UniPoly {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self.add_assign_ref(&rhs);
        self
    }
}

impl Sub for UniPoly {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.sub_ref(&rhs)
    }
}

impl Mul for UniPoly {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl Neg for UniPoly {
    type Output = Self;
    fn neg(self) -> Self {
        self.neg_ref()
    }
}

impl Coeff for UniPoly {
    fn add_assign_ref(&mut self, rhs: &Self) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    fn neg_ref(&self) -> Self {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    fn div_int(&self, d: i64) -> Self {
        assert!(d != 0, "division by zero");
        let d = Rational::from_integer(d.into());
        UniPoly { coeffs: self.coeffs.iter().map(|c| c / &d).collect() }
    }

    fn scale(&self, r: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * r).collect())
    }
}

pub(crate) fn write_term(f: &mut fmt::Formatter<'_>, first: bool, c: &Rational, mono: &str) -> fmt::Result {
    let neg = c < &Rational::zero();
    let mag = if neg { -c } else { c.clone() };
    match (first, neg) {
        (true, true) => write!(f, "-")?,
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
        (true, false) => {}
    }
    if mono.is_empty() {
        write!(f, "{mag}")
    } else if mag.is_one() {
        write!(f, "{mono}")
    } else {
        write!(f, "{mag}*{mono}")
    }
}

pub(crate) fn power(name: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => name.to_string(),
        _ => format!("{name}^{e}"),
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                write_term(f, first, c, &power("u", i))?;
                first = false;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial in the two formal exponents `u` and `v`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn u() -> Self {
        Self::monomial(1, 0, Rational::one())
    }

    pub fn v() -> Self {
        Self::monomial(0, 1, Rational::one())
    }

    pub fn monomial(du: u32, dv: u32, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((du, dv), c);
        }
        BiPoly { terms }
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn eval_in<C: Coeff>(&self, u: &C, v: &C, one: &C) -> C {
        let mut acc = C::zero();
        for (&(i, j), c) in &self.terms {
            let mut t = one.scale(c);
            for _ in 0..i {
                t = t.mul_ref(u);
            }
            for _ in 0..j {
                t = t.mul_ref(v);
            }
            acc.add_assign_ref(&t);
        }
        acc
    }

    pub fn eval(&self, u: &Rational, v: &Rational) -> Rational {
        self.eval_in(u, v, &Rational::one())
    }
}

impl Zero for BiPoly {
    fn zero() -> Self {
        BiPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for BiPoly {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl Add for BiPoly {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self.add_assign_ref(&rhs);
        self
    }
}

impl Sub for BiPoly {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.sub_ref(&rhs)
    }
}

impl Mul for BiPoly {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl Neg for BiPoly {
    type Output = Self;
    fn neg(self) -> Self {
        self.neg_ref()
    }
}

impl Coeff for BiPoly {
    fn add_assign_ref(&mut self, rhs: &Self) {
        for (k, c) in &rhs.terms {
            let slot = self.terms.entry(*k).or_insert_with(Rational::zero);
            *slot += c;
            if slot.is_zero() {
                self.terms.remove(k);
            }
        }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = BiPoly::zero();
        for (&(a, b), x) in &self.terms {
            for (&(c, d), y) in &rhs.terms {
                *out.terms.entry((a + c, b + d)).or_insert_with(Rational::zero) += x * y;
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    fn neg_ref(&self) -> Self {
        BiPoly { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }

    fn div_int(&self, d: i64) -> Self {
        assert!(d != 0, "division by zero");
        let d = Rational::from_integer(d.into());
        BiPoly { terms: self.terms.iter().map(|(k, c)| (*k, c / &d)).collect() }
    }

    fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        BiPoly { terms: self.terms.iter().map(|(k, c)| (*k, c * r)).collect() }
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (&(i, j), c)) in self.terms.iter().enumerate() {
            let mono = [power("u", i as usize), power("v", j as usize)]
                .into_iter()
                .filter(|s| !s.is_empty())
                .collect::<Vec<_>>()
                .join("*");
            write_term(f, n == 0, c, &mono)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn unipoly_arithmetic() {
        let u = UniPoly::x();
        let p = u.clone() * u.clone() - u.clone();
        assert_eq!(p.to_string(), "-u + u^2");
        assert_eq!(p.eval(&q(3, 1)), q(6, 1));
        assert_eq!((p.clone() - p.clone()).degree(), None);
        assert_eq!(p.derivative(), UniPoly::from_coeffs(vec![q(-1, 1), q(2, 1)]));
        assert_eq!(p.div_int(2).to_string(), "-1/2*u + 1/2*u^2");
        assert_eq!(p.truncate(1), -u);
    }

    #[test]
    fn bipoly_arithmetic() {
        let (u, v) = (BiPoly::u(), BiPoly::v());
        let p = (u.clone() + v.clone()) * (u.clone() - v.clone());
        assert_eq!(p, u.clone() * u.clone() - v.clone() * v.clone());
        assert_eq!(p.eval(&q(3, 1), &q(1, 2)), q(35, 4));
        assert_eq!((p.clone() - p).terms().count(), 0);
    }

    #[test]
    fn eval_in_floats() {
        let p = UniPoly::from_coeffs(vec![q(1, 3), q(2, 3)]);
        assert!((p.eval_in(&0.5f64, &1.0) - 2.0 / 3.0).abs() < 1e-15);
    }
}
