use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;

/// Coefficient ring of a Laurent series: a commutative algebra over the rationals.
///
/// Only what the series engine needs is required: ring operations, division by
/// a nonzero machine integer, and embedding of exact rationals.
pub trait Coeff: Clone + PartialEq + Debug + Send + Sync + Zero + One {
    fn add_assign_ref(&mut self, rhs: &Self);
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    /// Exact division by a nonzero integer.
    fn div_int(&self, d: i64) -> Self;

    /// Multiply by an exact rational. Float rings keep the precision of `self`.
    fn scale(&self, r: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
    }

    /// Embed a rational at the default precision of the ring.
    fn from_rational(r: &Rational) -> Self {
        Self::one().scale(r)
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        let mut out = rhs.neg_ref();
        out.add_assign_ref(self);
        out
    }
}

/// Coefficient rings with inverses of nonzero elements.
pub trait Field: Coeff {
    fn inv(&self) -> Option<Self>;

    fn div_ref(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul_ref(&r))
    }
}

/// Rings with a magnitude, used for tolerance comparisons.
pub trait Approx: Coeff {
    fn approx(&self) -> f64;
}

impl Coeff for Rational {
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn div_int(&self, d: i64) -> Self {
        assert!(d != 0, "division by zero");
        self / Rational::from_integer(BigInt::from(d))
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn from_int(n: i64) -> Self {
        Rational::from_integer(n.into())
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

impl Approx for Rational {
    fn approx(&self) -> f64 {
        rational_to_f64(self)
    }
}

/// Nearest double to a rational, robust to huge numerators and denominators.
pub fn rational_to_f64(r: &Rational) -> f64 {
    if let Some(x) = r.to_f64() {
        if x.is_finite() && (x != 0.0 || r.is_zero()) {
            return x;
        }
    }
    let (n, d) = (r.numer().abs(), r.denom().clone());
    let shift = n.bits() as i64 - d.bits() as i64 - 60;
    let q = if shift >= 0 {
        n / (d << shift as usize)
    } else {
        (n << (-shift) as usize) / d
    };
    let mag = q.to_f64().unwrap_or(f64::INFINITY) * 2f64.powi(shift as i32);
    if r.is_negative() {
        -mag
    } else {
        mag
    }
}

macro_rules! float_coeff {
    ($t:ty) => {
        impl Coeff for $t {
            fn add_assign_ref(&mut self, rhs: &Self) {
                *self += *rhs;
            }
            fn mul_ref(&self, rhs: &Self) -> Self {
                self * rhs
            }
            fn neg_ref(&self) -> Self {
                -self
            }
            fn div_int(&self, d: i64) -> Self {
                assert!(d != 0, "division by zero");
                self / d as $t
            }
            fn scale(&self, r: &Rational) -> Self {
                self * rational_to_f64(r) as $t
            }
            fn from_int(n: i64) -> Self {
                n as $t
            }
        }

        impl Field for $t {
            fn inv(&self) -> Option<Self> {
                (*self != 0.0).then(|| 1.0 / self)
            }
        }

        impl Approx for $t {
            fn approx(&self) -> f64 {
                *self as f64
            }
        }
    };
}

float_coeff!(f64);
float_coeff!(f32);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn huge_rational_to_f64() {
        let big = BigInt::from(3) * num_traits::pow(BigInt::from(10), 400);
        let r = Rational::new(big.clone(), big * BigInt::from(4));
        assert_eq!(rational_to_f64(&r), 0.25);
        let tiny = Rational::new(BigInt::one(), num_traits::pow(BigInt::from(2), 1100));
        assert_eq!(rational_to_f64(&tiny), 0.0);
    }

    #[test]
    fn float_rings_embed_rationals() {
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(f64::from_rational(&half), 0.5);
        assert_eq!(f32::from_int(3).div_int(2), 1.5);
        assert_eq!(Rational::from_int(7).sub_ref(&Rational::from_int(2)), Rational::from_int(5));
    }
}
