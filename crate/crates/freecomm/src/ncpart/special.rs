//! The special partition families entering the quadratic-form expansion:
//! the standard matching, its shift, upper-complement classes, and the
//! interval isomorphism with `NC(r)`.

use super::enumerate::{enum_bound, for_each_nc, NcFilter};
use super::partition::SetPartition;
use crate::error::{Error, Result};

/// The standard matching `{(1,2),(3,4),...,(2r-1,2r)}`; its pairs are the
/// standard braces.
pub fn standard_matching(r: usize) -> SetPartition {
    SetPartition::from_raw(2 * r, &(1..=r).map(|t| vec![2 * t - 1, 2 * t]).collect::<Vec<_>>())
}

/// The shifted matching `nu_0r = {(2,3),(4,5),...,(2r,1)}`.
pub fn nu0(r: usize) -> SetPartition {
    let mut blocks: Vec<Vec<usize>> = (1..r).map(|t| vec![2 * t, 2 * t + 1]).collect();
    blocks.push(vec![2 * r, 1]);
    SetPartition::from_raw(2 * r, &blocks)
}

/// Which upper-complement family to stream.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum UpperComplementKind {
    /// `C_2r`: all of `NC(2r)` whose join with the standard matching is full.
    All,
    /// `C^e_2r`: the even members.
    Even,
    /// `C^o_2r`: members with at least one odd block.
    Odd,
}

/// Stream the upper complements of the standard matching in `NC(2r)`.
pub fn for_each_upper_complement(
    r: usize,
    kind: UpperComplementKind,
    mut f: impl FnMut(&SetPartition),
) -> Result<()> {
    let n = 2 * r;
    if n > enum_bound() {
        return Err(Error::bound(format!(
            "2r = {n} exceeds enumeration bound {} (override with NC_ENUM_BOUND)",
            enum_bound()
        )));
    }
    let matching = standard_matching(r);
    for_each_nc(n, NcFilter::All, |blocks| {
        let p = SetPartition::from_raw(n, blocks);
        if !p.join_is_full(&matching).expect("same ground set") {
            return;
        }
        let keep = match kind {
            UpperComplementKind::All => true,
            UpperComplementKind::Even => p.is_even(),
            UpperComplementKind::Odd => p.has_odd_block(),
        };
        if keep {
            f(&p);
        }
    })
}

/// Collect an upper-complement family.
pub fn upper_complements(r: usize, kind: UpperComplementKind) -> Result<Vec<SetPartition>> {
    let mut out = Vec::new();
    for_each_upper_complement(r, kind, |p| out.push(p.clone()))?;
    Ok(out)
}

/// The order isomorphism `NC(r) <-> [nu_0r, 1_{2r}]` inside `NCE(2r)`:
/// merge the pair classes `p_j = {2j, 2j+1}` (indices mod `2r`, so
/// `p_r = {2r, 1}`) along the blocks of the argument.
pub fn interval_iso_up(tau: &SetPartition, r: usize) -> Result<SetPartition> {
    if tau.n() != r {
        return Err(Error::invalid("argument must be a partition of [r]"));
    }
    if !tau.is_noncrossing() {
        return Err(Error::invalid("argument must be noncrossing"));
    }
    let pair_class = |j: usize| -> [usize; 2] {
        if j < r {
            [2 * j, 2 * j + 1]
        } else {
            [2 * r, 1]
        }
    };
    let blocks: Vec<Vec<usize>> = tau
        .blocks()
        .iter()
        .map(|b| b.iter().flat_map(|&j| pair_class(j)).collect())
        .collect();
    Ok(SetPartition::from_raw(2 * r, &blocks))
}

/// Inverse of [`interval_iso_up`]: requires the argument to lie above
/// `nu_0r` (each pair class inside one block) and to be even noncrossing.
pub fn interval_iso_down(pi: &SetPartition, r: usize) -> Result<SetPartition> {
    if pi.n() != 2 * r {
        return Err(Error::invalid("argument must be a partition of [2r]"));
    }
    if !nu0(r).leq(pi)? {
        return Err(Error::invalid("argument is not above nu_0r"));
    }
    let blocks_idx: Vec<usize> = (1..=r)
        .map(|j| {
            let rep = if j < r { 2 * j } else { 2 * r };
            pi.block_index_of(rep)
        })
        .collect();
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); pi.size()];
    for (j, &bi) in blocks_idx.iter().enumerate() {
        blocks[bi].push(j + 1);
    }
    blocks.retain(|b| !b.is_empty());
    Ok(SetPartition::from_raw(r, &blocks))
}
