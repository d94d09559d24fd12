use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Coeff, Rational};
use crate::error::{Error, Result};

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `n!!` with `(-1)!! = 0!! = 1`.
pub fn double_factorial(n: i64) -> Result<Rational> {
    double_factorial_int(n).map(Rational::from_integer)
}

pub fn double_factorial_int(n: i64) -> Result<BigInt> {
    if n < -1 {
        return Err(Error::Domain(format!("double factorial of {n}")));
    }
    let mut acc = BigInt::one();
    let mut i = n;
    while i > 1 {
        acc *= i;
        i -= 2;
    }
    Ok(acc)
}

/// Integer binomial coefficient; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Rising factorial `x (x+1) ... (x+m-1)`.
pub fn pochhammer<C: Coeff>(x: &C, m: u32) -> C {
    let mut acc = C::one();
    let mut t = x.clone();
    for _ in 0..m {
        acc = acc.mul_ref(&t);
        t.add_assign_ref(&C::one());
    }
    acc
}

/// `binom(x, m) = (-1)^m (-x)_m / m!`, built up one factor at a time so that
/// only small integer divisions occur.
pub fn binomial_general<C: Coeff>(x: &C, m: u32) -> C {
    binomial_with_one(x, m, &C::one())
}

/// As [`binomial_general`], with an explicit unit (carries float precision).
pub fn binomial_with_one<C: Coeff>(x: &C, m: u32, one: &C) -> C {
    let mut acc = one.clone();
    let mut t = x.clone();
    for i in 0..m {
        acc = acc.mul_ref(&t).div_int(i as i64 + 1);
        t = t.sub_ref(one);
    }
    acc
}

/// `(1 + N/2)_a = (N+2a)!! / (2^a N!!)`.
pub fn pochhammer_half(n: u32, a: u32) -> Rational {
    let num = double_factorial_int(n as i64 + 2 * a as i64).expect("nonnegative");
    let den = double_factorial_int(n as i64).expect("nonnegative") << a as usize;
    Rational::new(num, den)
}

/// Exact value of `Γ(1 + N/2)` as `df * sqrt(2)^pow_sqrt2 * sqrt(π/2)^half_pi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaHalfExact {
    pub df: Rational,
    pub pow_sqrt2: i64,
    /// Power of `sqrt(π/2)`; 0 or 1 for a single gamma value, any integer for products.
    pub half_pi: i64,
}

pub fn gamma_half_exact(n: u32) -> GammaHalfExact {
    GammaHalfExact {
        df: double_factorial(n as i64).expect("nonnegative"),
        pow_sqrt2: -(n as i64),
        half_pi: (n % 2) as i64,
    }
}

impl GammaHalfExact {
    pub fn one() -> Self {
        GammaHalfExact { df: Rational::one(), pow_sqrt2: 0, half_pi: 0 }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        GammaHalfExact {
            df: &self.df * &rhs.df,
            pow_sqrt2: self.pow_sqrt2 + rhs.pow_sqrt2,
            half_pi: self.half_pi + rhs.half_pi,
        }
    }

    pub fn div(&self, rhs: &Self) -> Self {
        GammaHalfExact {
            df: &self.df / &rhs.df,
            pow_sqrt2: self.pow_sqrt2 - rhs.pow_sqrt2,
            half_pi: self.half_pi - rhs.half_pi,
        }
    }

    /// The exact rational value, when both radical exponents make it rational.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.half_pi != 0 || self.pow_sqrt2 % 2 != 0 {
            return None;
        }
        let e = self.pow_sqrt2 / 2;
        let p = Rational::from_integer(BigInt::one() << e.unsigned_abs() as usize);
        Some(if e >= 0 { &self.df * p } else { &self.df / p })
    }

    pub fn to_f64(&self) -> f64 {
        super::rational_to_f64(&self.df)
            * 2f64.sqrt().powi(self.pow_sqrt2 as i32)
            * std::f64::consts::FRAC_PI_2.sqrt().powi(self.half_pi as i32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::UniPoly;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn double_factorials() {
        assert_eq!(double_factorial(9).unwrap(), q(945, 1));
        assert_eq!(double_factorial(-1).unwrap(), q(1, 1));
        assert_eq!(double_factorial(0).unwrap(), q(1, 1));
        assert!(double_factorial(-2).is_err());
        for n in 1..40 {
            let lhs = double_factorial(n).unwrap();
            assert_eq!(lhs, double_factorial(n - 2).unwrap() * q(n, 1));
        }
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&q(1, 2), 3), q(15, 8));
        let u = UniPoly::x();
        assert_eq!(pochhammer(&u, 2), UniPoly::from_coeffs(vec![q(0, 1), q(1, 1), q(1, 1)]));
        assert_eq!(pochhammer(&q(7, 3), 0), q(1, 1));
    }

    #[test]
    fn binomial_examples() {
        let u = UniPoly::x();
        assert_eq!(binomial_general(&u, 2), UniPoly::from_coeffs(vec![q(0, 1), q(-1, 2), q(1, 2)]));
        assert_eq!(binomial_general(&q(3, 2), 1), q(3, 2));
        assert_eq!(binomial_general(&q(4, 1), 2), q(6, 1));
        for m in 0..12 {
            assert_eq!(binomial_general(&u, m).degree(), Some(m as usize));
        }
    }

    #[test]
    fn binomial_at_integers_matches_classical() {
        for j in 0..=30i64 {
            for m in 0..=30u32 {
                let b = binomial_general(&q(j, 1), m);
                assert_eq!(b, Rational::from_integer(binomial(j, m as i64)), "j={j} m={m}");
            }
        }
    }

    #[test]
    fn gamma_half_examples() {
        let g3 = gamma_half_exact(3);
        assert_eq!((g3.df.clone(), g3.pow_sqrt2, g3.half_pi), (q(3, 1), -3, 1));
        // 3 sqrt(pi) / 4
        let want = 3.0 * std::f64::consts::PI.sqrt() / 4.0;
        assert!((g3.to_f64() - want).abs() < 1e-14);
        assert_eq!(gamma_half_exact(0).to_rational(), Some(q(1, 1)));
        let g4 = gamma_half_exact(4);
        assert_eq!((g4.df.clone(), g4.pow_sqrt2), (q(8, 1), -4));
        assert_eq!(g4.to_rational(), Some(q(2, 1)));
    }

    #[test]
    fn gamma_half_recurrence() {
        // Γ(1/2) = sqrt(π), then Γ(x+1) = x Γ(x) on half-integers
        let mut val = std::f64::consts::PI.sqrt();
        for n in (1..30u32).step_by(2) {
            val *= n as f64 / 2.0;
            let rel = (gamma_half_exact(n).to_f64() - val).abs() / val;
            assert!(rel < 1e-13, "N={n}");
        }
    }

    #[test]
    fn pochhammer_half_examples() {
        assert_eq!(pochhammer_half(3, 2), q(35, 4));
        assert_eq!(pochhammer_half(3, 2), pochhammer(&q(5, 2), 2));
        assert_eq!(pochhammer_half(2, 1), q(2, 1));
        for a in 0..8 {
            assert_eq!(pochhammer_half(0, a), Rational::from_integer(factorial(a as u64)));
        }
    }

    #[test]
    fn pochhammer_half_matches_rising_factorial() {
        for n in 0..=50u32 {
            for a in 0..=50u32 {
                let x = q(2 + n as i64, 2);
                assert_eq!(pochhammer_half(n, a), pochhammer(&x, a));
            }
        }
    }
}
