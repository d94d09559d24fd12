use std::time::Instant;

use ctwork_core::closed::{rhs_complex, rhs_exact, ClosedFormValue};
use ctwork_core::kernels::{ct, CtValue, KernelFamily, KernelParams, Mode};
use ctwork_core::{BigFloat, Rational, Result};
use num_traits::Signed;

use crate::report::{grade, VerifyReport};

/// Numeric settings shared by the drivers.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Settings {
    /// Working precision in bits for float paths.
    pub prec: usize,
    /// Requested tolerance for truncated comparisons.
    pub tol: f64,
    /// Truncation order used when the parameters give none.
    pub order: u32,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { prec: 128, tol: 1e-6, order: 200 }
    }
}

fn is_natural(x: &Option<Rational>) -> bool {
    x.as_ref().is_none_or(|r| r.is_integer() && !r.is_negative())
}

/// Left-hand side of `family` with its tail estimate.
///
/// Complex families at nonnegative integer exponents have terminating
/// binomial series and are evaluated exactly; elsewhere they run in big floats.
pub fn lhs_value(family: KernelFamily, p: &KernelParams, s: &Settings) -> Result<(ClosedFormValue, f64)> {
    let mut p = p.clone();
    if family.is_complex() && p.order.is_none() {
        p.order = Some(s.order);
    }
    let mode = if !family.is_complex() || (is_natural(&p.u) && is_natural(&p.v)) {
        Mode::Rational
    } else {
        Mode::Bigfloat { prec: s.prec }
    };
    let r = ct(family, &p, mode)?;
    let tail = r.tail.as_ref().and_then(CtValue::to_f64).map_or(0.0, f64::abs);
    let value = match r.value {
        CtValue::Rational(q) if r.exact => ClosedFormValue::exact(q, s.prec),
        CtValue::Rational(q) => ClosedFormValue { numeric: BigFloat::from_rational(&q, s.prec), exact: None, bound: 0.0 },
        CtValue::Float(x) => ClosedFormValue { exact: None, numeric: x, bound: 0.0 },
        other => unreachable!("numeric mode returned {other}"),
    };
    Ok((value, tail))
}

/// Right-hand side in the orientation of the implemented kernel.
///
/// For the Adamović-Milas family the kernel logarithms point the other way
/// from the printed value, which costs `(-1)^m`.
pub fn rhs_value(family: KernelFamily, p: &KernelParams, s: &Settings) -> Result<ClosedFormValue> {
    if family.is_complex() {
        return rhs_complex(family, p, s.prec);
    }
    let mut r = rhs_exact(family, p)?;
    if family == KernelFamily::AmLog && p.half() % 2 == 1 {
        r = -r;
    }
    Ok(ClosedFormValue::exact(r, s.prec))
}

/// Compute both sides of an identity and grade the comparison.
pub fn verify(family: KernelFamily, p: &KernelParams, s: &Settings) -> Result<VerifyReport> {
    p.validate(family)?;
    let start = Instant::now();
    let (lhs, tail) = lhs_value(family, p, s)?;
    let rhs = rhs_value(family, p, s)?;
    let (status, tol) = grade(&lhs, &rhs, s.tol, tail);
    let mut params = p.clone();
    if family.is_complex() && params.order.is_none() {
        params.order = Some(s.order);
    }
    Ok(VerifyReport {
        id: family.id().to_string(),
        params,
        lhs,
        rhs,
        status,
        tol,
        tail,
        ms: start.elapsed().as_millis() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;
    use ctwork_core::arith::{int, rat};

    fn exact(family: KernelFamily, p: KernelParams) -> Rational {
        let r = verify(family, &p, &Settings::default()).unwrap();
        assert_eq!(r.status, Status::ExactEqual, "{r}");
        r.lhs.exact.unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(exact(KernelFamily::Dyson, KernelParams::new(3).with_a_vec(vec![1, 1, 2])), int(12));
        assert_eq!(exact(KernelFamily::LogMorris, KernelParams::new(3).with_a(1)), int(1));
        assert_eq!(exact(KernelFamily::LogDyson, KernelParams::new(3).with_k(1)), rat(35, 3));
        let p = KernelParams::default().with_k(1).with_m(1);
        assert_eq!(exact(KernelFamily::G2LogShort, p), ctwork_core::closed::g2_log(2, 3));
    }

    #[test]
    fn am_log_orientation() {
        // printed value 5, kernel value -5 at n = 3
        let p = KernelParams::new(3).with_a(2);
        assert_eq!(rhs_exact(KernelFamily::AmLog, &p).unwrap(), int(5));
        assert_eq!(exact(KernelFamily::AmLog, p), int(-5));
    }

    #[test]
    fn complex_paths() {
        let s = Settings { order: 200, ..Settings::default() };
        let p = KernelParams::new(3).with_u(int(2));
        let r = verify(KernelFamily::ComplexDyson, &p, &s).unwrap();
        assert_eq!(r.status, Status::ExactEqual);
        assert_eq!(r.lhs.exact, Some(int(-6)));
        let p = KernelParams::new(3).with_a(1).with_u(rat(1, 2));
        let r = verify(KernelFamily::ComplexMorris, &p, &s).unwrap();
        assert_eq!(r.status, Status::WithinTolerance, "{r}");
        assert!(r.tail > 0.0 && r.tol >= 1e-6);
        assert_eq!(r.params.order, Some(200));
    }

    #[test]
    fn errors() {
        let s = Settings::default();
        assert!(verify(KernelFamily::LogDyson, &KernelParams::new(4), &s).is_err());
        // complex Dyson in float mode needs u
        assert!(verify(KernelFamily::ComplexDyson, &KernelParams::new(3), &s).is_err());
    }
}
