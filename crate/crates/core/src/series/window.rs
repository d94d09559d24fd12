use super::ExponentVector;
use crate::error::{Error, Result};

/// Per-variable exponent bounds with an optional total degree range.
///
/// Also used as the bounding box of a finite support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    lower: Vec<i64>,
    upper: Vec<i64>,
    degree: Option<(i64, i64)>,
}

const UNBOUNDED: i64 = i64::MAX / 4;

impl Window {
    pub fn full(n: usize) -> Self {
        Window { lower: vec![-UNBOUNDED; n], upper: vec![UNBOUNDED; n], degree: None }
    }

    /// Only monomials of total degree zero.
    pub fn degree_zero(n: usize) -> Self {
        Self::full(n).with_degree(0, 0)
    }

    pub fn new(lower: Vec<i64>, upper: Vec<i64>) -> Result<Self> {
        if lower.len() != upper.len() {
            return Err(Error::SizeMismatch("window bounds".into()));
        }
        if lower.iter().zip(&upper).any(|(l, u)| l > u) {
            return Err(Error::InvalidParams("window lower bound exceeds upper bound".into()));
        }
        Ok(Window { lower, upper, degree: None })
    }

    pub fn with_degree(mut self, lo: i64, hi: i64) -> Self {
        self.degree = Some((lo, hi));
        self
    }

    /// Smallest box containing the given exponents; `None` when empty.
    pub fn bounding<'a>(exps: impl IntoIterator<Item = &'a ExponentVector>) -> Option<Self> {
        let mut it = exps.into_iter();
        let first = it.next()?;
        let mut lower: Vec<i64> = first.as_slice().iter().map(|&e| e as i64).collect();
        let mut upper = lower.clone();
        let d = first.total_degree();
        let mut deg = (d, d);
        for e in it {
            for (i, &x) in e.as_slice().iter().enumerate() {
                lower[i] = lower[i].min(x as i64);
                upper[i] = upper[i].max(x as i64);
            }
            let d = e.total_degree();
            deg = (deg.0.min(d), deg.1.max(d));
        }
        Some(Window { lower, upper, degree: Some(deg) })
    }

    pub fn nvars(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[i64] {
        &self.lower
    }

    pub fn upper(&self) -> &[i64] {
        &self.upper
    }

    pub fn degree(&self) -> Option<(i64, i64)> {
        self.degree
    }

    pub fn contains(&self, e: &ExponentVector) -> bool {
        let s = e.as_slice();
        for i in 0..s.len() {
            let x = s[i] as i64;
            if x < self.lower[i] || x > self.upper[i] {
                return false;
            }
        }
        match self.degree {
            Some((lo, hi)) => {
                let d = e.total_degree();
                lo <= d && d <= hi
            }
            None => true,
        }
    }

    /// Minkowski sum of two boxes.
    pub fn sum(&self, rhs: &Self) -> Self {
        let add = |a: i64, b: i64| (a + b).clamp(-UNBOUNDED, UNBOUNDED);
        Window {
            lower: self.lower.iter().zip(&rhs.lower).map(|(a, b)| add(*a, *b)).collect(),
            upper: self.upper.iter().zip(&rhs.upper).map(|(a, b)| add(*a, *b)).collect(),
            degree: match (self.degree, rhs.degree) {
                (Some(a), Some(b)) => Some((a.0 + b.0, a.1 + b.1)),
                _ => None,
            },
        }
    }

    /// The box of negated exponents.
    pub fn negated(&self) -> Self {
        Window {
            lower: self.upper.iter().map(|u| -u).collect(),
            upper: self.lower.iter().map(|l| -l).collect(),
            degree: self.degree.map(|(lo, hi)| (-hi, -lo)),
        }
    }

    pub fn intersect(&self, rhs: &Self) -> Self {
        Window {
            lower: self.lower.iter().zip(&rhs.lower).map(|(a, b)| *a.max(b)).collect(),
            upper: self.upper.iter().zip(&rhs.upper).map(|(a, b)| *a.min(b)).collect(),
            degree: match (self.degree, rhs.degree) {
                (Some(a), Some(b)) => Some((a.0.max(b.0), a.1.min(b.1))),
                (a, b) => a.or(b),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounding_box_and_sums() {
        let es = [ExponentVector::from([1, -2]), ExponentVector::from([-1, 3])];
        let b = Window::bounding(&es).unwrap();
        assert_eq!((b.lower(), b.upper()), (&[-1, -2][..], &[1, 3][..]));
        assert_eq!(b.degree(), Some((-1, 2)));
        let s = b.sum(&b.negated());
        assert_eq!((s.lower(), s.upper()), (&[-2, -5][..], &[2, 5][..]));
        assert!(s.contains(&ExponentVector::from([0, 0])));
        assert!(Window::new(vec![1], vec![0]).is_err());
    }

    #[test]
    fn degree_filter() {
        let w = Window::degree_zero(2);
        assert!(w.contains(&ExponentVector::from([3, -3])));
        assert!(!w.contains(&ExponentVector::from([3, -2])));
    }
}
