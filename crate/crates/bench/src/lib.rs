//! Verification drivers that bind kernels to their closed forms, the
//! structural checks behind the logarithmic identities, fitting of the
//! correction polynomials, and the acceptance suites.

pub mod fit;
pub mod report;
pub mod structure;
pub mod suites;
pub mod verify;

pub use fit::{fit_pn, FitResult};
pub use report::{Status, VerifyReport};
pub use structure::{fr_sequence, matching_sum_check, sign_permutation_check, FrReport};
pub use suites::{run_suite, Suite, SuiteOutcome};
pub use verify::{verify, Settings};
