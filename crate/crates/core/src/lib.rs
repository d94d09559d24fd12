//! Constant term workbench: exact and numeric evaluation of constant terms of
//! multivariate Laurent series, the closed forms they are compared against,
//! and the supporting combinatorics and hypergeometric machinery.

pub mod arith;
pub mod closed;
pub mod combin;
pub mod error;
pub mod hyper;
pub mod kernels;
pub mod series;

pub use arith::{BiPoly, BigFloat, MultiPoly, Rational, UniPoly};
pub use error::{Error, Result};
pub use series::{ExponentVector, LaurentSeries, Window};

pub type RationalSeries = LaurentSeries<Rational>;
pub type USeries = LaurentSeries<UniPoly>;
pub type UvSeries = LaurentSeries<BiPoly>;
pub type FloatSeries = LaurentSeries<BigFloat>;
pub type F64Series = LaurentSeries<f64>;
pub type F32Series = LaurentSeries<f32>;
