use std::borrow::Cow;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::poly::{power, write_term};
use super::{Coeff, Rational};

/// Sparse polynomial over a fixed, named set of indeterminates.
///
/// Constants may carry an empty name set; they combine with any polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MultiPoly {
    vars: Arc<[String]>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MultiPoly { vars: Arc::from(Vec::new()), terms }
    }

    /// The generators of the ring with the given indeterminates.
    pub fn generators(names: &[&str]) -> Vec<MultiPoly> {
        let vars: Arc<[String]> = names.iter().map(|s| s.to_string()).collect();
        (0..names.len())
            .map(|i| {
                let mut e = vec![0; names.len()];
                e[i] = 1;
                MultiPoly { vars: vars.clone(), terms: BTreeMap::from([(e, Rational::one())]) }
            })
            .collect()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Degree in each indeterminate.
    pub fn degrees(&self) -> Vec<u32> {
        let mut out = vec![0; self.vars.len()];
        for e in self.terms.keys() {
            for (d, x) in out.iter_mut().zip(e) {
                *d = (*d).max(*x);
            }
        }
        out
    }

    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self
                .terms
                .iter()
                .next()
                .filter(|(e, _)| e.iter().all(|&x| x == 0))
                .map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul_ref(self))
    }

    /// Evaluate at a point given in the order of [`MultiPoly::vars`].
    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert!(
            self.vars.is_empty() || point.len() == self.vars.len(),
            "point has {} coordinates, polynomial has {} indeterminates",
            point.len(),
            self.vars.len()
        );
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    fn widen(&self, vars: &Arc<[String]>) -> Self {
        if self.vars.len() == vars.len() {
            return self.clone();
        }
        let terms = self
            .terms
            .values()
            .map(|c| (vec![0; vars.len()], c.clone()))
            .collect();
        MultiPoly { vars: vars.clone(), terms }
    }

    fn aligned(&self, rhs: &Self) -> (Self, Self) {
        if self.vars == rhs.vars {
            return (self.clone(), rhs.clone());
        }
        if self.vars.is_empty() {
            return (self.widen(&rhs.vars), rhs.clone());
        }
        if rhs.vars.is_empty() {
            return (self.clone(), rhs.widen(&self.vars));
        }
        panic!("indeterminate mismatch: {:?} vs {:?}", self.vars, rhs.vars);
    }
}

impl Zero for MultiPoly {
    fn zero() -> Self {
        MultiPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MultiPoly {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl Add for MultiPoly {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self.add_assign_ref(&rhs);
        self
    }
}

impl Sub for MultiPoly {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.sub_ref(&rhs)
    }
}

impl Mul for MultiPoly {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl Neg for MultiPoly {
    type Output = Self;
    fn neg(self) -> Self {
        self.neg_ref()
    }
}

impl Coeff for MultiPoly {
    fn add_assign_ref(&mut self, rhs: &Self) {
        if rhs.is_zero() {
            return;
        }
        if self.vars != rhs.vars {
            if self.vars.is_empty() {
                *self = self.widen(&rhs.vars);
            } else if !rhs.vars.is_empty() {
                panic!("indeterminate mismatch: {:?} vs {:?}", self.vars, rhs.vars);
            }
        }
        let rhs = if rhs.vars.len() == self.vars.len() {
            Cow::Borrowed(rhs)
        } else {
            Cow::Owned(rhs.widen(&self.vars))
        };
        for (e, c) in &rhs.terms {
            let slot = self.terms.entry(e.clone()).or_insert_with(Rational::zero);
            *slot += c;
            if slot.is_zero() {
                self.terms.remove(e);
            }
        }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        let (a, b) = self.aligned(rhs);
        let mut terms: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (e, x) in &a.terms {
            for (f, y) in &b.terms {
                let g: Vec<u32> = e.iter().zip(f).map(|(p, q)| p + q).collect();
                *terms.entry(g).or_insert_with(Rational::zero) += x * y;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        MultiPoly { vars: a.vars, terms }
    }

    fn neg_ref(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    fn div_int(&self, d: i64) -> Self {
        assert!(d != 0, "division by zero");
        self.scale(&Rational::new(1.into(), d.into()))
    }

    fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * r)).collect(),
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().enumerate() {
            let mono = self
                .vars
                .iter()
                .zip(e)
                .map(|(v, &k)| power(v, k as usize))
                .filter(|s| !s.is_empty())
                .collect::<Vec<_>>()
                .join("*");
            write_term(f, n == 0, c, &mono)?;
        }
        Ok(())
    }
}
