//! Cumulants and structural properties of quadratic forms
//! `Q_n = sum a_ij X_i X_j`: the cumulant formulas, the strong-cancellation
//! certificate, the commutator table of `T_2`, and the Hadamard-product
//! representation.

mod cancel;
mod checks;
mod engine;
mod form;
mod hadamard;
mod t2;

pub use cancel::{
    strong_cancellation_check, symbolic_skew_matrix, symmetric_perturbation, CancellationReport,
};
pub use checks::{
    odd_cumulant_residuals, partitioned_trace_check, skew_report, PartitionedTraceReport,
    SkewReport,
};
pub use form::{ptrace, QuadMode, QuadraticForm};
pub use hadamard::{
    even_cumulant_table, hadamard_agrees, hadamard_representation, trace_generating_table,
};
pub use t2::{t2_commutator_table, t2_matrix, T2Table};
