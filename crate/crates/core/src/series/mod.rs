//! Sparse multivariate Laurent series over a pluggable coefficient ring.

mod exponent;
mod factor;
mod laurent;
mod product;
mod window;

pub use exponent::ExponentVector;
pub use factor::{binomial_power, expand_factor, infer_log_window, Expanded, ExponentKind, FactorSpec, Symbols};
pub use laurent::{indexed_vars, vandermonde, vars, LaurentSeries, Vars};
pub use product::{constant_term_of_product, expand_product};
pub use window::Window;

#[cfg(test)]
mod tests;
