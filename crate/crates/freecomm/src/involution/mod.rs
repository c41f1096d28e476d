//! The sign-reversing involution on odd upper complements of the standard
//! matching: classification, permutation construction, and the exhaustive
//! validation harness behind the cancellation of odd cumulants.

mod classify;
mod sigma;
mod validate;

pub use classify::{classify, inner_odd_blocks, is_in_c_odd, PivotData, TypeTag};
pub use sigma::{
    brace_condition, cumulant_invariance_symbolic, psi, search_partner, sigma_literal, sigma_of,
    PairChecks, Resolution,
};
pub use validate::{partner_map, validate_involution, CertRecord, CertSummary, PairingCertificate};
