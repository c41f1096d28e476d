//! Exact combinatorics of free probability: noncrossing partition lattices,
//! free cumulants, the sign-reversing involution behind the cancellation of
//! odd cumulants in sums of commutators, and the explicit laws (tetilla,
//! generalized tetilla, free skew-symmetric) that arise from quadratic forms
//! in free semicircular variables.
//!
//! Everything algebraic is computed over exact Gaussian rationals, so every
//! identity the library claims can be checked mechanically. A floating-point
//! Monte Carlo module ([`rmt`]) cross-checks the exact predictions against
//! GUE random matrices.
//!
//! The crate is organized around the mathematical objects:
//!
//! - [`exact`] — arbitrary-precision rationals, `Q(i)`, sparse multivariate
//!   polynomials, truncated power series and exact matrices.
//! - [`ncpart`] — set partitions, the lattice `NC(n)`, Kreweras complements
//!   and the special partition families entering the cumulant formulas.
//! - [`involution`] — classification of odd upper-complement partitions and
//!   the sign-reversing involution, with an exhaustive validation harness.
//! - [`freecalc`] — moment/cumulant conversion, mixed cumulants of free
//!   families, the product formula, boxed convolution and the Hankel test
//!   for free infinite divisibility.
//! - [`quadform`] — cumulants of quadratic forms `Q = sum a_ij X_i X_j`,
//!   the strong-cancellation certificate and the Hadamard representation.
//! - [`laws`] — semicircle, free Poisson, tetilla and generalized tetilla
//!   laws, dilations and the decomposition of free skew-symmetric laws.
//! - [`rmt`] — GUE sampling and empirical trace moments.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod error;
pub mod exact;
pub mod freecalc;
pub mod involution;
pub mod laws;
pub mod ncpart;
pub mod quadform;
pub mod rmt;

pub use error::{Error, Result};
