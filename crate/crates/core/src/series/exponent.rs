use std::fmt;
use std::ops::Index;

use smallvec::SmallVec;

/// Integer exponents of a Laurent monomial, one entry per variable.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExponentVector(SmallVec<[i32; 8]>);

impl ExponentVector {
    pub fn zeros(n: usize) -> Self {
        ExponentVector(SmallVec::from_elem(0, n))
    }

    /// `e` in position `i`, zero elsewhere.
    pub fn unit(n: usize, i: usize, e: i32) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = e;
        v
    }

    /// Exponent of `x_num / x_den`.
    pub fn ratio(n: usize, num: usize, den: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[num] += 1;
        v.0[den] -= 1;
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i32] {
        &self.0
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> Self {
        ExponentVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn scaled(&self, k: i32) -> Self {
        ExponentVector(self.0.iter().map(|a| a * k).collect())
    }

    pub fn set(&mut self, i: usize, e: i32) {
        self.0[i] = e;
    }

    /// Drop the last coordinate.
    pub fn without_last(&self) -> Self {
        ExponentVector(self.0[..self.0.len().saturating_sub(1)].iter().copied().collect())
    }
}

impl Index<usize> for ExponentVector {
    type Output = i32;
    fn index(&self, i: usize) -> &i32 {
        &self.0[i]
    }
}

impl From<&[i32]> for ExponentVector {
    fn from(s: &[i32]) -> Self {
        ExponentVector(SmallVec::from_slice(s))
    }
}

impl From<Vec<i32>> for ExponentVector {
    fn from(v: Vec<i32>) -> Self {
        ExponentVector(SmallVec::from_vec(v))
    }
}

impl<const N: usize> From<[i32; N]> for ExponentVector {
    fn from(a: [i32; N]) -> Self {
        ExponentVector(a.iter().copied().collect())
    }
}

impl FromIterator<i32> for ExponentVector {
    fn from_iter<I: IntoIterator<Item = i32>>(it: I) -> Self {
        ExponentVector(it.into_iter().collect())
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}
