//! Exact arithmetic foundation: rationals, Gaussian rationals, sparse
//! multivariate polynomials over `Q(i)`, truncated formal power series and
//! exact matrices.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here can be shared freely across threads.

mod gaussian;
mod matrix;
mod poly;
mod series;

pub use gaussian::{parse_gaussian, parse_rational, rat, rat_big, render_rational, GaussianRational, Rational};
pub use matrix::{standard_skew_matrix, ExactMatrix};
pub use poly::{sym, Monomial, MultiPoly, Var};
pub use series::{
    arctan_series, arctangent_number, compose, divide, hadamard, series_calculus, tan_series,
    tangent_number, PowerSeries, SeriesOp,
};

/// Default truncation order for power series work; covers cumulants through
/// K_16 with margin.
pub const DEFAULT_SERIES_ORDER: usize = 16;
