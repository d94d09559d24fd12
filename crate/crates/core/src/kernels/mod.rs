//! The catalogue of kernels and the constant-term driver.

mod build;
mod driver;
mod family;

pub use build::{build_kernel, elementary_symmetric, Kernel};
pub use driver::{ct, ct_in, er_insert, kernel_ct, CtResult, CtValue};
pub use family::{KernelFamily, KernelParams, Mode};

#[cfg(test)]
mod tests;
