//! Perfect matchings, Pfaffians and the ±1 signature matrices used to
//! rewrite the A- and BC-type kernels.

mod matching;
mod pfaffian;
mod signature;

pub use matching::{enumerate_matchings, Matching, MAX_MATCHING_VERTICES};
pub use pfaffian::{
    det, pf_closed_q, pfaffian, pfaffian_by_definition, pfaffian_by_elimination, q_matrix,
    rotate_matching, summand, PfaffianMethod, SkewMatrix, MAX_DEFINITION_SIZE,
};
pub use signature::{
    exists_signature_pair, sigma_matrix, signature_condition, tau_even, tau_matrix, SignatureKind,
    SignatureMatrix,
};
