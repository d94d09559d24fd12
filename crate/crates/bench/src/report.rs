use std::fmt;

use ctwork_core::arith::Coeff;
use ctwork_core::closed::ClosedFormValue;
use ctwork_core::kernels::KernelParams;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    ExactEqual,
    WithinTolerance,
    Mismatch,
}

impl Status {
    pub fn passed(self) -> bool {
        self != Status::Mismatch
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::ExactEqual => "exact-equal",
            Status::WithinTolerance => "within-tolerance",
            Status::Mismatch => "mismatch",
        })
    }
}

/// Outcome of comparing one left-hand side against its closed form.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub id: String,
    pub params: KernelParams,
    pub lhs: ClosedFormValue,
    pub rhs: ClosedFormValue,
    pub status: Status,
    /// Tolerance used; 0 for exact comparisons.
    pub tol: f64,
    /// Truncation tail estimate of the left-hand side.
    pub tail: f64,
    pub ms: u64,
}

/// Decide the status of a comparison.
///
/// Exact equality is reserved for two rationals. Otherwise the tolerance is
/// `max(requested, 3 * tail)`, widened by the rounding bound of the right side.
pub fn grade(lhs: &ClosedFormValue, rhs: &ClosedFormValue, requested: f64, tail: f64) -> (Status, f64) {
    if let (Some(l), Some(r)) = (&lhs.exact, &rhs.exact) {
        if tail == 0.0 {
            return (if l == r { Status::ExactEqual } else { Status::Mismatch }, 0.0);
        }
    }
    let tol = requested.max(3.0 * tail);
    let diff = lhs.numeric.sub_ref(&rhs.numeric).abs().to_f64();
    let ok = diff <= tol + rhs.bound + lhs.bound;
    (if ok { Status::WithinTolerance } else { Status::Mismatch }, tol)
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.status.passed()
    }

    /// Exact value when present, otherwise the rounded float.
    pub fn show(v: &ClosedFormValue) -> String {
        match &v.exact {
            Some(r) => r.to_string(),
            None => format!("{:.15e}", v.to_f64()),
        }
    }

    pub const CSV_HEADER: &'static str = "id,n,a,b,k,m,u,v,order,lhs,rhs,status,tol,tail,ms";

    pub fn csv_row(&self) -> String {
        let p = &self.params;
        let opt = |x: &Option<ctwork_core::Rational>| x.as_ref().map(|r| r.to_string()).unwrap_or_default();
        let a: Vec<String> = p.a.iter().map(u32::to_string).collect();
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{:e},{:e},{}",
            self.id,
            p.n,
            a.join(" "),
            p.b,
            p.k,
            p.m,
            opt(&p.u),
            opt(&p.v),
            p.order.map(|o| o.to_string()).unwrap_or_default(),
            Self::show(&self.lhs),
            Self::show(&self.rhs),
            self.status,
            self.tol,
            self.tail,
            self.ms
        )
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} lhs={} rhs={} {}", self.id, Self::show(&self.lhs), Self::show(&self.rhs), self.status)?;
        if self.status != Status::ExactEqual {
            write!(f, " (tol {:e}, tail {:e})", self.tol, self.tail)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ctwork_core::arith::{int, rat};
    use ctwork_core::BigFloat;

    fn float(x: f64, bound: f64) -> ClosedFormValue {
        ClosedFormValue { exact: None, numeric: BigFloat::from_f64(x, 64), bound }
    }

    #[test]
    fn grading() {
        let a = ClosedFormValue::exact(rat(35, 3), 64);
        assert_eq!(grade(&a, &a, 1e-6, 0.0), (Status::ExactEqual, 0.0));
        let b = ClosedFormValue::exact(int(12), 64);
        assert_eq!(grade(&a, &b, 1e-6, 0.0).0, Status::Mismatch);
        // tolerance widens to three tails
        let (s, tol) = grade(&float(1.0, 0.0), &float(1.0 + 2e-5, 0.0), 1e-6, 1e-5);
        assert_eq!(s, Status::WithinTolerance);
        assert!((tol - 3e-5).abs() < 1e-18);
        assert_eq!(grade(&float(1.0, 0.0), &float(1.1, 0.0), 1e-6, 1e-5).0, Status::Mismatch);
    }

    #[test]
    fn json_shape() {
        let r = VerifyReport {
            id: "dyson".into(),
            params: KernelParams::new(3).with_a_vec(vec![1, 1, 2]),
            lhs: ClosedFormValue::exact(int(12), 64),
            rhs: ClosedFormValue::exact(int(12), 64),
            status: Status::ExactEqual,
            tol: 0.0,
            tail: 0.0,
            ms: 1,
        };
        let v = serde_json::to_value(&r).unwrap();
        for key in ["id", "params", "lhs", "rhs", "status", "tol", "tail", "ms"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["status"], "exact-equal");
        assert_eq!(v["lhs"]["exact"], "12");
        assert_eq!(r.csv_row().split(',').count(), VerifyReport::CSV_HEADER.split(',').count());
    }
}
