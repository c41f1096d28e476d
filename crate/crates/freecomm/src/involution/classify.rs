//! Inner odd blocks, pivot data and the I / IIa / IIb / IIIa / IIIb
//! classification of odd upper-complement partitions.

use crate::error::{Error, Result};
use crate::ncpart::{standard_matching, SetPartition};
use serde::Serialize;

/// The five involution types. Flip partitions (two odd blocks joined at
/// their endpoints by the pivot brace) are I, IIa, IIb; the rest are III,
/// split by the parity of the leftmost inner odd block's minimum.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum TypeTag {
    I,
    IIa,
    IIb,
    IIIa,
    IIIb,
}

impl TypeTag {
    /// Where the involution sends each type.
    pub fn partner(self) -> TypeTag {
        match self {
            TypeTag::I => TypeTag::I,
            TypeTag::IIa => TypeTag::IIb,
            TypeTag::IIb => TypeTag::IIa,
            TypeTag::IIIa => TypeTag::IIIb,
            TypeTag::IIIb => TypeTag::IIIa,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            TypeTag::I => "I",
            TypeTag::IIa => "IIa",
            TypeTag::IIb => "IIb",
            TypeTag::IIIa => "IIIa",
            TypeTag::IIIb => "IIIb",
        }
    }
}

/// Everything the involution needs to know about the pivot of an odd
/// upper-complement partition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PivotData {
    pub inner_odd_blocks: Vec<Vec<usize>>,
    /// The inner odd block with the smallest minimum.
    pub leftmost: Vec<usize>,
    /// The unique standard brace meeting the leftmost block's padding
    /// interval in exactly one element.
    pub pivot_brace: (usize, usize),
    /// That single intersection element; an endpoint of the leftmost block.
    pub pivot_element: usize,
    /// Block containing the left element of the pivot brace.
    pub left_pivot_block: Vec<usize>,
    /// Block containing the right element of the pivot brace.
    pub right_pivot_block: Vec<usize>,
}

/// Membership in `C^o_{2n}`: noncrossing, full join with the standard
/// matching, and at least one odd block.
pub fn is_in_c_odd(p: &SetPartition) -> Result<bool> {
    let n2 = p.n();
    if n2 == 0 || n2 % 2 != 0 {
        return Ok(false);
    }
    Ok(p.is_noncrossing()
        && p.has_odd_block()
        && p.join_is_full(&standard_matching(n2 / 2))?)
}

/// The odd blocks with no other odd block nested inside their padding
/// interval. Empty exactly when the partition is even.
pub fn inner_odd_blocks(p: &SetPartition) -> Result<Vec<Vec<usize>>> {
    if !p.is_noncrossing() {
        return Err(Error::invalid("inner odd blocks are defined for noncrossing partitions"));
    }
    let odd: Vec<&Vec<usize>> = p.blocks().iter().filter(|b| b.len() % 2 == 1).collect();
    let mut out = Vec::new();
    for b in &odd {
        let (a, w) = (b[0], b[b.len() - 1]);
        let nested = odd.iter().any(|c| {
            c != b && a < c[0] && c[c.len() - 1] < w
        });
        if !nested {
            out.push((*b).clone());
        }
    }
    out.sort_by_key(|b| b[0]);
    Ok(out)
}

/// Classify a member of `C^o_{2n}` and extract its pivot data.
pub fn classify(p: &SetPartition) -> Result<(TypeTag, PivotData)> {
    if !is_in_c_odd(p)? {
        return Err(Error::invalid(format!(
            "{p} is not an odd upper complement of the standard matching"
        )));
    }
    let n2 = p.n();
    let inner = inner_odd_blocks(p)?;
    let leftmost = inner[0].clone();
    let (alpha, omega) = (leftmost[0], leftmost[leftmost.len() - 1]);
    // padding interval has odd length, so exactly one standard brace meets
    // it in one point: on the left when alpha is even, on the right when
    // alpha is odd
    let (pivot_brace, pivot_element) = if alpha % 2 == 0 {
        ((alpha - 1, alpha), alpha)
    } else {
        ((omega, omega + 1), omega)
    };
    let left_pivot_block = p.blocks()[p.block_index_of(pivot_brace.0)].clone();
    let right_pivot_block = p.blocks()[p.block_index_of(pivot_brace.1)].clone();

    let odd_blocks: Vec<&Vec<usize>> = p.blocks().iter().filter(|b| b.len() % 2 == 1).collect();
    let is_flip = odd_blocks.len() == 2 && {
        let b0 = &left_pivot_block;
        let b1 = &right_pivot_block;
        let both_odd = b0.len() % 2 == 1 && b1.len() % 2 == 1 && b0 != b1;
        let is_end = |x: usize, b: &Vec<usize>| x == b[0] || x == b[b.len() - 1];
        both_odd && is_end(pivot_brace.0, b0) && is_end(pivot_brace.1, b1)
    };

    let tag = if is_flip {
        if inner.len() == 2 {
            TypeTag::I
        } else if pivot_brace == (1, 2) {
            TypeTag::IIa
        } else if pivot_brace == (n2 - 1, n2) {
            TypeTag::IIb
        } else {
            // the flip classification leaves no other position for the pivot brace
            return Err(Error::invalid(format!(
                "flip partition {p} with interior pivot brace contradicts the classification"
            )));
        }
    } else if alpha % 2 == 0 {
        TypeTag::IIIa
    } else {
        TypeTag::IIIb
    };

    Ok((
        tag,
        PivotData {
            inner_odd_blocks: inner,
            leftmost,
            pivot_brace,
            pivot_element,
            left_pivot_block,
            right_pivot_block,
        },
    ))
}
