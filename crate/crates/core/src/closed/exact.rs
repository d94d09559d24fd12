use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{binomial, double_factorial, factorial, int, Rational};
use crate::error::{Error, Result};
use crate::kernels::{KernelFamily, KernelParams};

use super::pn::{pn_poly, PnFamily};
use super::complex::complex_exact;

fn fact(n: i64) -> Result<Rational> {
    if n < 0 {
        return Err(Error::Domain(format!("factorial of {n}")));
    }
    Ok(Rational::from_integer(factorial(n as u64)))
}

fn df(n: i64) -> Result<Rational> {
    double_factorial(n)
}

fn sign(odd: bool) -> Rational {
    if odd {
        -Rational::one()
    } else {
        Rational::one()
    }
}

/// `(a_1 + ... + a_n)! / (a_1! ... a_n!)`.
pub fn dyson(a: &[u32]) -> Rational {
    let total: u64 = a.iter().map(|&x| x as u64).sum();
    let mut r = Rational::from_integer(factorial(total));
    for &x in a {
        r /= Rational::from_integer(factorial(x as u64));
    }
    r
}

/// Degrees of the fundamental invariants of the built-in root systems.
pub fn degrees_a(n: usize) -> Vec<u32> {
    (2..=n as u32).collect()
}

pub const DEGREES_G2: [u32; 2] = [2, 6];

/// `∏ binom(k d_i, k)`.
pub fn macdonald_equal(degrees: &[u32], k: u32) -> Rational {
    degrees
        .iter()
        .map(|&d| Rational::from_integer(binomial((k * d) as i64, k as i64)))
        .product()
}

pub fn morris(n: usize, a: u32, b: u32, k: u32) -> Rational {
    let (a, b, k) = (a as i64, b as i64, k as i64);
    let mut r = Rational::one();
    for i in 0..n as i64 {
        let num = fact(a + b + i * k).unwrap() * fact((i + 1) * k).unwrap();
        let den = fact(a + i * k).unwrap() * fact(b + i * k).unwrap() * fact(k).unwrap();
        r *= num / den;
    }
    r
}

fn odd_n(n: usize) -> Result<()> {
    if n.is_multiple_of(2) {
        return Err(Error::InvalidParams(format!("n must be odd, got {n}")));
    }
    Ok(())
}

/// `(nK)!! / (n!! (K!!)^n)` with `K = 2k + 1`.
pub fn log_dyson(n: usize, k: u32) -> Result<Rational> {
    odd_n(n)?;
    let kk = 2 * k as i64 + 1;
    let n = n as i64;
    let mut den = df(n)?;
    for _ in 0..n {
        den *= df(kk)?;
    }
    Ok(df(n * kk)? / den)
}

/// `∏_i (2a+2b+iK)!! ((i+1)K)!! / ((2a+iK)!! (2b+iK)!! K!!)`.
fn log_morris_product(n: usize, a: u32, b: u32, k: u32) -> Result<Rational> {
    let kk = 2 * k as i64 + 1;
    let (a, b) = (a as i64, b as i64);
    let mut r = Rational::one();
    for i in 0..n as i64 {
        let num = df(2 * a + 2 * b + i * kk)? * df((i + 1) * kk)?;
        let den = df(2 * a + i * kk)? * df(2 * b + i * kk)? * df(kk)?;
        r *= num / den;
    }
    Ok(r)
}

pub fn log_morris(n: usize, a: u32, b: u32, k: u32) -> Result<Rational> {
    odd_n(n)?;
    Ok(log_morris_product(n, a, b, k)? / df(n as i64)?)
}

/// The constant of the `n = 3` logarithmic identity with the `x_i^{2-(k+1)(n+1)}` prefactor.
pub fn am_log_c3k(k: u32) -> Rational {
    let k = k as i64;
    let kk = 2 * k + 1;
    let head = fact(3 * kk).unwrap() * fact(k).unwrap().pow(3)
        / (int(6) * fact(3 * k + 1).unwrap() * fact(kk).unwrap().pow(3));
    let b1 = Rational::from_integer(binomial(3 * kk - 1, 2 * kk - 1));
    // binom(5K/2 - 1, 2K - 1) with a half-integer top
    let top = Rational::new(BigInt::from(5 * kk - 2), BigInt::from(2));
    let b2 = crate::arith::binomial_general(&top, (2 * kk - 1) as u32);
    head / b1 / b2
}

/// Printed right-hand side `c_{3k} ∏_i binom(a + Ki/2, (m+1)K - 1)` at `n = 3`.
pub fn am_log(n: usize, a: u32, k: u32) -> Result<Rational> {
    if n != 3 {
        return Err(Error::Absent(format!("no closed-form constant for n = {n}")));
    }
    let kk = 2 * k as i64 + 1;
    let m = 1;
    let mut r = am_log_c3k(k);
    for i in 0..n as i64 {
        let top = int(a as i64) + Rational::new(BigInt::from(kk * i), BigInt::from(2));
        r *= crate::arith::binomial_general(&top, ((m + 1) * kk - 1) as u32);
    }
    Ok(r)
}

/// `(3k+3m)! (3k)! (2k)! (2m)! / ((3k+2m)! (2k+m)! (k+m)! k! k! m!)`.
pub fn g2_hz(k: u32, m: u32) -> Rational {
    let (k, m) = (k as i64, m as i64);
    let f = |x| fact(x).unwrap();
    f(3 * k + 3 * m) * f(3 * k) * f(2 * k) * f(2 * m)
        / (f(3 * k + 2 * m) * f(2 * k + m) * f(k + m) * f(k) * f(k) * f(m))
}

pub fn g2_equal(k: u32) -> Rational {
    macdonald_equal(&DEGREES_G2, k)
}

/// `G(K, M)`: the double-factorial analogue of the two-parameter G2 value, over 3.
pub fn g2_log(big_k: u32, big_m: u32) -> Rational {
    let (k, m) = (big_k as i64, big_m as i64);
    let d = |x| df(x).unwrap();
    d(3 * k + 3 * m) * d(3 * k) * d(2 * k) * d(2 * m)
        / (int(3) * d(3 * k + 2 * m) * d(2 * k + m) * d(k + m) * d(k) * d(k) * d(m))
}

pub fn bc(n: usize, a: u32, b: u32, k: u32) -> Rational {
    let (n, a, b, k) = (n as i64, a as i64, b as i64, k as i64);
    let f = |x| fact(x).unwrap();
    let mut r = Rational::one();
    for i in 0..n {
        let num = f(k + i * k) * f(2 * a + 2 * b + 2 * i * k) * f(2 * b + 2 * i * k);
        let den = f(k) * f(a + b + i * k) * f(b + i * k) * f(a + 2 * b + (n + i - 1) * k);
        r *= num / den;
    }
    r
}

/// `m`-th derivative at `u = K` of the complex Morris right-hand side.
pub fn morris_derivative(n: usize, a: u32, b: u32, k: u32) -> Result<Rational> {
    odd_n(n)?;
    let m = (n - 1) / 2;
    let s = sign((k as usize + 1) * m % 2 == 1);
    Ok(s * fact(m as i64)? / df(n as i64 - 2)? * log_morris_product(n, a, b, k)?)
}

/// `(n - ζ)`-th derivative at `u = K` of the complex BC right-hand side, `ζ = n mod 4`.
pub fn bc_derivative(n: usize, a: u32, b: u32, k: u32) -> Result<Rational> {
    let zeta = n % 4;
    if zeta > 1 {
        return Err(Error::InvalidParams(format!("n = {n} is not 0 or 1 mod 4")));
    }
    let p0 = pn_poly(PnFamily::Bc, n)?.eval(&Rational::zero());
    let kk = 2 * k as i64 + 1;
    let (ni, a, b) = (n as i64, a as i64, b as i64);
    let mut r = fact(ni - zeta as i64)? * p0 * df(ni * kk)? / (df((ni - 1) * kk)? * df(kk)?.pow(ni as i32));
    for i in 1..ni {
        r *= df(2 * i * kk)? / df((2 * i - 1) * kk)?;
    }
    for i in 0..ni {
        let num = df(2 * b + i * kk - 1)? * df(2 * a + 2 * b + i * kk - 1)? * df((ni + i - 1) * kk)?;
        let den = df(2 * a + 4 * b + (ni + i - 1) * kk)? * df(i * kk - 1)?.pow(2);
        r *= num / den;
    }
    // same normalisation as the complex right-hand side
    r *= Rational::from_integer(BigInt::one() << (2 * ni * (a + 2 * b)) as usize);
    Ok(r)
}

/// Exact right-hand side of the identity attached to a kernel family.
///
/// Complex families are exact only at integer exponents, where every Gamma
/// value reduces to double factorials.
pub fn rhs_exact(family: KernelFamily, p: &KernelParams) -> Result<Rational> {
    use KernelFamily::*;
    p.validate(family)?;
    let (n, b, k, m) = (p.n, p.b, p.k, p.m);
    match family {
        Dyson => Ok(dyson(&p.a_vec()?)),
        Morris => Ok(morris(n, p.a0()?, b, k)),
        MorrisTau => Ok(sign(k as usize * p.half() % 2 == 1) * morris(n, p.a0()?, b, k)),
        LogDyson => log_dyson(n, k),
        LogMorris => log_morris(n, p.a0()?, b, k),
        AmLog => am_log(n, p.a0()?, k),
        G2Equal => Ok(g2_equal(k)),
        G2Hz => Ok(g2_hz(k, m)),
        G2LogLong => Ok(g2_log(2 * k + 1, 2 * m)),
        G2LogShort => Ok(g2_log(2 * k, 2 * m + 1)),
        Bc | BcSigmaTau => Ok(bc(n, p.a0()?, b, k)),
        ComplexMorris | ComplexDyson | G2Complex | BcComplex => complex_exact(family, p)?
            .ok_or_else(|| Error::Domain(format!("{family} has no exact value at these exponents"))),
    }
}
