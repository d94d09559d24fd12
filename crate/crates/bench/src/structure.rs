//! Structural checks behind the logarithmic Morris identity: the
//! matching sum, the permutation sign law and the `f_r` recursion.

use std::time::Instant;

use ctwork_core::arith::{double_factorial_int, int, BigFloat, Coeff, Rational};
use ctwork_core::closed::ClosedFormValue;
use ctwork_core::combin::{enumerate_matchings, tau_matrix};
use ctwork_core::kernels::{build_kernel, er_insert, kernel_ct, Kernel, KernelFamily, KernelParams};
use ctwork_core::series::Symbols;
use ctwork_core::{Error, ExponentVector, Result};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::report::{Status, VerifyReport};

/// Largest `n` accepted by the exhaustive checks.
pub const MAX_STRUCTURE_N: usize = 5;

fn guard(n: usize) -> Result<()> {
    if n.is_multiple_of(2) || n > MAX_STRUCTURE_N {
        return Err(Error::Guard(format!("structural checks need odd n <= {MAX_STRUCTURE_N}, got {n}")));
    }
    Ok(())
}

fn sym() -> Symbols<Rational> {
    Symbols::plain(Rational::one())
}

/// `F_ab`: the logarithmic Morris kernel without its logarithms.
fn f_ab(n: usize, a: u32, b: u32, k: u32) -> Result<Kernel<Rational>> {
    let p = KernelParams::new(n).with_a(a).with_b(b).with_k(k);
    Ok(build_kernel(KernelFamily::LogMorris, &p, &sym())?.with_logs(Vec::new()))
}

fn ct_with_logs(f: &Kernel<Rational>, logs: Vec<ExponentVector>) -> Result<Rational> {
    Ok(kernel_ct(&f.clone().with_logs(logs), &sym())?.0)
}

/// `log(1 - x_{w_1}/x_{w_2}) log(1 - x_{w_3}/x_{w_4}) ...`, 1-based.
fn paired(n: usize, w: &[usize]) -> Vec<ExponentVector> {
    w.chunks(2).take((n - 1) / 2).map(|p| ExponentVector::ratio(n, p[0] - 1, p[1] - 1)).collect()
}

fn sign_of(w: &[usize]) -> i64 {
    let inv = (0..w.len()).flat_map(|i| (i + 1..w.len()).map(move |j| (i, j))).filter(|&(i, j)| w[i] > w[j]).count();
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sum over perfect matchings of `[n+1]` against the signed single term.
///
/// Each matching contributes `CT[F_ab ∏ log(1 - (x_i/x_j)^{tau_ij})]` over its
/// edges avoiding `n+1`; the total must be `(-1)^{binom(m,2)} n CT[F_ab g(id)]`.
pub fn matching_sum_check(n: usize, a: u32, b: u32, k: u32) -> Result<VerifyReport> {
    guard(n)?;
    let start = Instant::now();
    let f = f_ab(n, a, b, k)?;
    let tau = tau_matrix(n)?;
    let mut lhs = Rational::zero();
    for pi in enumerate_matchings(n + 1)? {
        let logs = pi
            .pairs()
            .iter()
            .filter(|&&(_, j)| j != n + 1)
            .map(|&(i, j)| {
                let (i, j) = (i - 1, j - 1);
                if tau.get(i, j) > 0 {
                    ExponentVector::ratio(n, i, j)
                } else {
                    ExponentVector::ratio(n, j, i)
                }
            })
            .collect();
        lhs += ct_with_logs(&f, logs)?;
    }
    let m = (n - 1) / 2;
    let sign = if (m * m.saturating_sub(1) / 2) % 2 == 1 { -1 } else { 1 };
    let id: Vec<usize> = (1..=n).collect();
    let rhs = ct_with_logs(&f, paired(n, &id))? * int(sign * n as i64);
    let status = if lhs == rhs { Status::ExactEqual } else { Status::Mismatch };
    Ok(VerifyReport {
        id: "matching-sum".into(),
        params: KernelParams::new(n).with_a(a).with_b(b).with_k(k),
        lhs: ClosedFormValue::exact(lhs, 64),
        rhs: ClosedFormValue::exact(rhs, 64),
        status,
        tol: 0.0,
        tail: 0.0,
        ms: start.elapsed().as_millis() as u64,
    })
}

/// `CT[F_00 g(w; X)] = sgn(w) CT[F_00 g(id; X)]` for a permutation `w` of `1..=n`.
pub fn sign_permutation_check(n: usize, k: u32, w: &[usize]) -> Result<bool> {
    guard(n)?;
    let mut sorted = w.to_vec();
    sorted.sort_unstable();
    if sorted != (1..=n).collect::<Vec<_>>() {
        return Err(Error::InvalidParams(format!("{w:?} is not a permutation of 1..={n}")));
    }
    let f = f_ab(n, 0, 0, k)?;
    let id: Vec<usize> = (1..=n).collect();
    let base = ct_with_logs(&f, paired(n, &id))?;
    let moved = ct_with_logs(&f, paired(n, w))?;
    Ok(moved == base * int(sign_of(w)))
}

/// The sequence `f_r(a) = CT[(-1)^r e_r(X) G_ab(X)]` and the identities it satisfies.
#[derive(Clone, Debug, Serialize)]
pub struct FrReport {
    pub n: usize,
    pub a: u32,
    pub b: u32,
    pub k: u32,
    #[serde(serialize_with = "ser_rationals")]
    pub values: Vec<Rational>,
    /// One entry per `r < n`: `(n-r)(2b+rK) f_r = (r+1)(2a+2+(n-r-1)K) f_{r+1}`.
    pub recursion: Vec<bool>,
    /// `Σ_r f_r(a) = f_0(a+1)`.
    pub sum: bool,
    /// `f_0(a) = f_0(0) ∏ (2a+2b+iK)!! (iK)!! / ((2b+iK)!! (2a+iK)!!)`.
    pub product: bool,
    /// `CT[G_{0,b}] = CT[G_{0,0}]`.
    pub homogeneity: bool,
}

fn ser_rationals<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

impl FrReport {
    pub fn passed(&self) -> bool {
        self.recursion.iter().all(|&x| x) && self.sum && self.product && self.homogeneity
    }
}

fn log_morris(n: usize, a: u32, b: u32, k: u32) -> Result<Kernel<Rational>> {
    let p = KernelParams::new(n).with_a(a).with_b(b).with_k(k);
    build_kernel(KernelFamily::LogMorris, &p, &sym())
}

fn df(n: u32) -> Rational {
    Rational::from_integer(double_factorial_int(n as i64).expect("nonnegative"))
}

pub fn fr_sequence(n: usize, a: u32, b: u32, k: u32) -> Result<FrReport> {
    guard(n)?;
    let big_k = 2 * k + 1;
    let g = log_morris(n, a, b, k)?;
    let values = (0..=n)
        .map(|r| Ok(kernel_ct(&er_insert(g.clone(), r, &Rational::one())?, &sym())?.0))
        .collect::<Result<Vec<_>>>()?;
    let recursion = (0..n)
        .map(|r| {
            let (nn, rr) = (n as i64, r as i64);
            let (a, b, kk) = (a as i64, b as i64, big_k as i64);
            let left = int((nn - rr) * (2 * b + rr * kk)) * &values[r];
            let right = int((rr + 1) * (2 * a + 2 + (nn - rr - 1) * kk)) * &values[r + 1];
            left == right
        })
        .collect();
    let next = kernel_ct(&log_morris(n, a + 1, b, k)?, &sym())?.0;
    let sum = values.iter().fold(Rational::zero(), |acc, v| acc + v) == next;
    let f00 = kernel_ct(&log_morris(n, 0, b, k)?, &sym())?.0;
    let mut ratio = Rational::one();
    for i in 0..n as u32 {
        let ik = i * big_k;
        ratio *= df(2 * a + 2 * b + ik) * df(ik) / (df(2 * b + ik) * df(2 * a + ik));
    }
    let product = values[0] == f00.clone() * ratio;
    let homogeneity = f00 == kernel_ct(&log_morris(n, 0, 0, k)?, &sym())?.0;
    Ok(FrReport { n, a, b, k, values, recursion, sum, product, homogeneity })
}

/// Residuals of the complex analogue of the `f_r` recursion,
/// `(n-r)(2b+ru) f_r = (r+1)(2a+2+(n-r-1)u) f_{r+1}`, on the truncated
/// complex Morris kernel. Reported with the truncation tails, never asserted.
#[derive(Clone, Debug, Serialize)]
pub struct ComplexFrReport {
    pub values: Vec<f64>,
    pub tails: Vec<f64>,
    pub residuals: Vec<f64>,
}

pub fn fr_complex(n: usize, a: u32, b: u32, u: &Rational, order: u32, prec: usize) -> Result<ComplexFrReport> {
    guard(n)?;
    let one = BigFloat::from_i64(1, prec);
    let sym = Symbols { one: one.clone(), u: Some(BigFloat::from_rational(u, prec)), v: None };
    let at = |order: u32| -> Result<Vec<BigFloat>> {
        let p = KernelParams::new(n).with_a(a).with_b(b).with_u(u.clone()).with_order(order);
        let g = build_kernel(KernelFamily::ComplexMorris, &p, &sym)?;
        (0..=n).map(|r| Ok(kernel_ct(&er_insert(g.clone(), r, &one)?, &sym)?.0)).collect()
    };
    let fine = at(order)?;
    let coarse = at(order / 2)?;
    let tails = fine.iter().zip(&coarse).map(|(x, y)| x.sub_ref(y).abs().to_f64()).collect();
    let residuals = (0..n)
        .map(|r| {
            let (nn, rr) = (int(n as i64), int(r as i64));
            let left = (&nn - &rr) * (int(2 * b as i64) + &rr * u);
            let right = (&rr + int(1)) * (int(2 * a as i64 + 2) + (&nn - &rr - int(1)) * u);
            fine[r].scale(&left).sub_ref(&fine[r + 1].scale(&right)).abs().to_f64()
        })
        .collect();
    Ok(ComplexFrReport { values: fine.iter().map(BigFloat::to_f64).collect(), tails, residuals })
}
