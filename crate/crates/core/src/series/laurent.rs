use std::collections::hash_map::Entry;
use std::fmt::{self, Write as _};
use std::sync::Arc;

use rustc_hash::FxHashMap;

use super::{ExponentVector, Window};
use crate::arith::{parse_rational, Coeff, Rational};
use crate::error::{Error, Result};

pub type Vars = Arc<[String]>;

pub fn vars(names: &[&str]) -> Vars {
    names.iter().map(|s| s.to_string()).collect()
}

/// `x1, ..., xn`.
pub fn indexed_vars(prefix: &str, n: usize) -> Vars {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// Sparse Laurent polynomial (or truncated series) over a coefficient ring.
///
/// Terms are kept sorted by exponent with no zero coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentSeries<C> {
    vars: Vars,
    terms: Vec<(ExponentVector, C)>,
}

impl<C: Coeff> LaurentSeries<C> {
    pub fn zero(vars: Vars) -> Self {
        LaurentSeries { vars, terms: Vec::new() }
    }

    pub fn constant(vars: Vars, c: C) -> Self {
        let n = vars.len();
        Self::monomial(vars, ExponentVector::zeros(n), c)
    }

    pub fn monomial(vars: Vars, e: ExponentVector, c: C) -> Self {
        assert_eq!(e.len(), vars.len(), "exponent length");
        let terms = if c.is_zero() { Vec::new() } else { vec![(e, c)] };
        LaurentSeries { vars, terms }
    }

    /// Collect terms, summing repeated exponents.
    pub fn from_terms(vars: Vars, terms: impl IntoIterator<Item = (ExponentVector, C)>) -> Result<Self> {
        let mut map: FxHashMap<ExponentVector, C> = FxHashMap::default();
        for (e, c) in terms {
            if e.len() != vars.len() {
                return Err(Error::VariableMismatch(format!(
                    "exponent {e:?} for {} variables",
                    vars.len()
                )));
            }
            match map.entry(e) {
                Entry::Occupied(mut o) => o.get_mut().add_assign_ref(&c),
                Entry::Vacant(v) => {
                    v.insert(c);
                }
            }
        }
        Ok(Self::from_map(vars, map))
    }

    fn from_map(vars: Vars, map: FxHashMap<ExponentVector, C>) -> Self {
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        LaurentSeries { vars, terms }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(ExponentVector, C)] {
        &self.terms
    }

    pub fn coeff(&self, e: &ExponentVector) -> Option<&C> {
        self.terms.binary_search_by(|t| t.0.cmp(e)).ok().map(|i| &self.terms[i].1)
    }

    /// Coefficient of the zero exponent.
    pub fn constant_term(&self) -> C {
        self.coeff(&ExponentVector::zeros(self.nvars())).cloned().unwrap_or_else(C::zero)
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VariableMismatch(format!("{:?} vs {:?}", self.vars, other.vars)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        Self::from_terms(self.vars.clone(), self.terms.iter().chain(&other.terms).cloned())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg_ref())
    }

    /// Multiply every coefficient by `c`.
    pub fn scale(&self, c: &C) -> Self {
        self.map_coeffs(|x| x.mul_ref(c))
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> LaurentSeries<D> {
        let terms = self
            .terms
            .iter()
            .filter_map(|(e, c)| {
                let d = f(c);
                (!d.is_zero()).then(|| (e.clone(), d))
            })
            .collect();
        LaurentSeries { vars: self.vars.clone(), terms }
    }

    /// Keep only the monomials inside `w`.
    pub fn restrict(&self, w: &Window) -> Self {
        let terms = self.terms.iter().filter(|(e, _)| w.contains(e)).cloned().collect();
        LaurentSeries { vars: self.vars.clone(), terms }
    }

    /// Product with every monomial outside `w` discarded.
    pub fn mul(&self, other: &Self, w: &Window) -> Result<Self> {
        self.check_vars(other)?;
        if w.nvars() != self.nvars() {
            return Err(Error::VariableMismatch("window size".into()));
        }
        let (a, b) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc: FxHashMap<ExponentVector, C> = FxHashMap::default();
        let first_of = |t: &(ExponentVector, C)| if t.0.is_empty() { 0 } else { t.0[0] as i64 };
        for (e1, c1) in &a.terms {
            // b is sorted, so its first coordinate is nondecreasing
            let (lo, hi) = if e1.is_empty() {
                (0, b.terms.len())
            } else {
                let shift = e1[0] as i64;
                let lo = b.terms.partition_point(|t| first_of(t) + shift < w.lower()[0]);
                let hi = b.terms.partition_point(|t| first_of(t) + shift <= w.upper()[0]);
                (lo, hi.max(lo))
            };
            for (e2, c2) in &b.terms[lo..hi] {
                let e = e1.add(e2);
                if !w.contains(&e) {
                    continue;
                }
                let p = c1.mul_ref(c2);
                match acc.entry(e) {
                    Entry::Occupied(mut o) => o.get_mut().add_assign_ref(&p),
                    Entry::Vacant(v) => {
                        v.insert(p);
                    }
                }
            }
        }
        Ok(Self::from_map(self.vars.clone(), acc))
    }

    pub fn mul_full(&self, other: &Self) -> Result<Self> {
        self.mul(other, &Window::full(self.nvars()))
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut acc = Self::constant(self.vars.clone(), C::one());
        for _ in 0..k {
            acc = acc.mul_full(self)?;
        }
        Ok(acc)
    }

    pub fn bounding_box(&self) -> Option<Window> {
        Window::bounding(self.terms.iter().map(|t| &t.0))
    }

    /// `Some(d)` when every monomial has total degree `d` (`Some(0)` for zero).
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut it = self.terms.iter().map(|t| t.0.total_degree());
        let Some(d) = it.next() else { return Some(0) };
        it.all(|x| x == d).then_some(d)
    }

    /// Set the last variable to 1. Requires every monomial to have degree 0.
    pub fn dehomogenize(&self) -> Result<Self> {
        if let Some((e, _)) = self.terms.iter().find(|t| t.0.total_degree() != 0) {
            return Err(Error::InvalidParams(format!("monomial {e:?} has nonzero total degree")));
        }
        self.drop_last_var()
    }

    /// Set the last variable to 1 without checking homogeneity.
    pub(crate) fn drop_last_var(&self) -> Result<Self> {
        if self.vars.is_empty() {
            return Err(Error::InvalidParams("no variable to eliminate".into()));
        }
        let vars: Vars = self.vars[..self.vars.len() - 1].iter().cloned().collect();
        Self::from_terms(vars, self.terms.iter().map(|(e, c)| (e.without_last(), c.clone())))
    }

    /// Monomial substitution `x_i -> images[i]`, written over `target` variables.
    pub fn substitute_into(&self, target: Vars, images: &[ExponentVector]) -> Result<Self> {
        if images.len() != self.nvars() || images.iter().any(|m| m.len() != target.len()) {
            return Err(Error::VariableMismatch("substitution shape".into()));
        }
        let n = target.len();
        let terms = self.terms.iter().map(|(e, c)| {
            let mut out = ExponentVector::zeros(n);
            for (i, &k) in e.as_slice().iter().enumerate() {
                if k != 0 {
                    out = out.add(&images[i].scaled(k));
                }
            }
            (out, c.clone())
        });
        Self::from_terms(target, terms)
    }

    /// Monomial substitution within the same variables.
    pub fn substitute(&self, images: &[ExponentVector]) -> Result<Self> {
        self.substitute_into(self.vars.clone(), images)
    }

    /// `f(x_{w(1)}, ..., x_{w(n)})` for a permutation `w` of `0..n`.
    pub fn permute(&self, w: &[usize]) -> Result<Self> {
        let n = self.nvars();
        let images: Vec<_> = w.iter().map(|&j| ExponentVector::unit(n, j, 1)).collect();
        self.substitute(&images)
    }

    /// One line per monomial, `e1 e2 ... en : coefficient`, sorted.
    pub fn dump(&self) -> String
    where
        C: fmt::Display,
    {
        let mut out = String::new();
        for (e, c) in &self.terms {
            let _ = writeln!(out, "{e} : {c}");
        }
        out
    }
}

impl LaurentSeries<Rational> {
    /// Inverse of [`LaurentSeries::dump`] for rational coefficients.
    pub fn parse_dump(vars: Vars, text: &str) -> Result<Self> {
        let mut terms = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let (exps, coeff) = line
                .split_once(':')
                .ok_or_else(|| Error::InvalidParams(format!("bad dump line {line:?}")))?;
            let e: std::result::Result<Vec<i32>, _> = exps.split_whitespace().map(str::parse).collect();
            let e = e.map_err(|_| Error::InvalidParams(format!("bad exponents in {line:?}")))?;
            let c = parse_rational(coeff)
                .ok_or_else(|| Error::InvalidParams(format!("bad coefficient in {line:?}")))?;
            terms.push((ExponentVector::from(e), c));
        }
        Self::from_terms(vars, terms)
    }
}

/// `∏_{i<j} (x_i - x_j)`.
pub fn vandermonde<C: Coeff>(vars: Vars) -> Result<LaurentSeries<C>> {
    let n = vars.len();
    if n == 0 {
        return Err(Error::InvalidParams("vandermonde needs a variable".into()));
    }
    let mut acc = LaurentSeries::constant(vars.clone(), C::one());
    for i in 0..n {
        for j in i + 1..n {
            let f = LaurentSeries::from_terms(
                vars.clone(),
                [(ExponentVector::unit(n, i, 1), C::one()), (ExponentVector::unit(n, j, 1), C::one().neg_ref())],
            )?;
            acc = acc.mul_full(&f)?;
        }
    }
    Ok(acc)
}

impl<C: Coeff + fmt::Display> fmt::Display for LaurentSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let mono: Vec<String> = self
                .vars
                .iter()
                .zip(e.as_slice())
                .filter(|(_, &p)| p != 0)
                .map(|(v, &p)| if p == 1 { v.clone() } else { format!("{v}^{p}") })
                .collect();
            if mono.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}
