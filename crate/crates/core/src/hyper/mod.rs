//! Hypergeometric sums: generalised series at argument 1, the `F_b` lattice
//! sum with its telescoping certificate, and the D4 multisum.

mod certificate;
mod d4;
mod lattice;
mod series;

pub use crate::closed::dixon_rhs;
pub use certificate::{
    certificate_cleared_at, certificate_sides_at, verify_certificate, verify_certificate_with, CertificateReport,
    Mutation, CERT_VARS,
};
pub use d4::{d4_multisum, D4_MAX_U};
pub use lattice::{fb_closed, fb_lattice_sum, g2_b_sum, TruncatedSum};
pub use series::{hyper_sum, HyperSeries, HyperValue};

#[cfg(test)]
mod tests;
