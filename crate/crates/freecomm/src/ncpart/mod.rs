//! Set partitions of `[n]`, the noncrossing lattice `NC(n)`, Kreweras
//! complements, and the special partition families the cumulant sums
//! range over.

mod enumerate;
mod lattice;
mod partition;
mod special;

pub use enumerate::{
    catalan, count_nc, enum_bound, enumerate_nc, for_each_nc, NcFilter, DEFAULT_ENUM_BOUND,
};
pub(crate) use enumerate::{visit_nc, BlockRules};
pub(crate) use lattice::UnionFind;
pub use partition::{Permutation, SetPartition};
pub use special::{
    for_each_upper_complement, interval_iso_down, interval_iso_up, nu0, standard_matching,
    upper_complements, UpperComplementKind,
};
