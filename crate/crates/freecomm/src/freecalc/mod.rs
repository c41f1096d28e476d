//! Free-cumulant calculus: moment/cumulant conversion, mixed moments and
//! cumulants of free families, the product formula, symbolic tracial
//! cumulants, boxed convolution and the Hankel FID test.

mod boxed;
mod convert;
mod engine;
mod family;
mod hankel;
mod symbols;

pub use boxed::{
    boxed_convolution, identity_series, moebius_series, univariate_series, zeta_series, CoeffTable,
};
pub use convert::{
    cumulants_from_moments, free_convolve, moments_from_cumulants,
    moments_from_cumulants_by_enumeration,
};
pub use engine::{mixed_moment, poly_cumulant, product_cumulant, ExpansionMode};
pub use family::{CumulantSpec, FreeFamily, KappaDefault};
pub use hankel::{fid_hankel_check, rational_determinant, FidVerdict, HankelReport};
pub use symbols::{mirror_canonical, JointCumulantSymbol, NCPolynomial};
