//! Right-hand sides of the constant term identities: exact rationals,
//! Gamma-function values for complex exponents, and the correction polynomials.

mod complex;
mod exact;
mod pn;

pub use complex::{complex_exact, dixon_rhs, rhs_complex, ClosedFormValue};
pub use exact::{
    am_log, am_log_c3k, bc, bc_derivative, degrees_a, dyson, g2_equal, g2_hz, g2_log, log_dyson, log_morris,
    macdonald_equal, morris, morris_derivative, rhs_exact, DEGREES_G2,
};
pub use pn::{carrier_power, pn_poly, z_basis, PnFamily, ZBasis};
