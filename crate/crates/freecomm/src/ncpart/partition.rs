//! Set partitions of `[n] = {1, ..., n}` in canonical form, and permutations
//! acting on them.

use crate::error::{Error, Result};
use serde::Serialize;
use std::fmt;

/// A set partition of `{1, ..., n}`.
///
/// Canonical form: every block sorted ascending, blocks sorted by their
/// minimum. Two equal partitions therefore compare equal structurally, and
/// the canonical form doubles as a map key.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Build from blocks, validating that they partition `[n]`.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<SetPartition> {
        let mut seen = vec![false; n + 1];
        let mut count = 0;
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::invalid("empty block"));
            }
            for &x in b {
                if x == 0 || x > n {
                    return Err(Error::invalid(format!("element {x} outside 1..={n}")));
                }
                if seen[x] {
                    return Err(Error::invalid(format!("element {x} repeated")));
                }
                seen[x] = true;
                count += 1;
            }
        }
        if count != n {
            return Err(Error::invalid("blocks do not cover the ground set"));
        }
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    /// Canonicalize blocks that are already known to partition `[n]`.
    pub(crate) fn from_raw(n: usize, blocks: &[Vec<usize>]) -> SetPartition {
        let mut blocks: Vec<Vec<usize>> = blocks
            .iter()
            .map(|b| {
                let mut b = b.clone();
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort_by_key(|b| b[0]);
        SetPartition { n, blocks }
    }

    /// The minimal partition (all singletons).
    pub fn minimal(n: usize) -> SetPartition {
        SetPartition {
            n,
            blocks: (1..=n).map(|x| vec![x]).collect(),
        }
    }

    /// The maximal partition (one block).
    pub fn maximal(n: usize) -> SetPartition {
        SetPartition {
            n,
            blocks: vec![(1..=n).collect()],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of blocks.
    pub fn size(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Index of the block containing `x` (1-based element).
    pub fn block_index_of(&self, x: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.binary_search(&x).is_ok())
            .expect("element in ground set")
    }

    pub fn same_block(&self, x: usize, y: usize) -> bool {
        self.block_index_of(x) == self.block_index_of(y)
    }

    /// No quadruple `i < j < k < l` with `i ~ k`, `j ~ l`, `i !~ j`.
    pub fn is_noncrossing(&self) -> bool {
        // sweep: for each block, its padding interval must meet other blocks
        // only in nested fashion; equivalent stack check over 1..n
        let mut block_of = vec![usize::MAX; self.n + 1];
        for (bi, b) in self.blocks.iter().enumerate() {
            for &x in b {
                block_of[x] = bi;
            }
        }
        let mut stack: Vec<usize> = Vec::new();
        let mut remaining: Vec<usize> = self.blocks.iter().map(|b| b.len()).collect();
        for x in 1..=self.n {
            let bi = block_of[x];
            match stack.last() {
                Some(&top) if top == bi => {}
                _ => {
                    if stack.contains(&bi) {
                        return false; // reopened a block that is not on top
                    }
                    stack.push(bi);
                }
            }
            remaining[bi] -= 1;
            if remaining[bi] == 0 {
                stack.pop();
            }
        }
        true
    }

    /// All blocks have even cardinality.
    pub fn is_even(&self) -> bool {
        self.blocks.iter().all(|b| b.len() % 2 == 0)
    }

    pub fn has_odd_block(&self) -> bool {
        !self.is_even()
    }

    /// Multiset of block sizes, sorted.
    pub fn block_sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.blocks.iter().map(|b| b.len()).collect();
        s.sort_unstable();
        s
    }

    /// Blockwise image under a permutation, re-canonicalized.
    pub fn permute(&self, s: &Permutation) -> Result<SetPartition> {
        if s.n() != self.n {
            return Err(Error::invalid("permutation size mismatch"));
        }
        let blocks: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&x| s.image(x)).collect())
            .collect();
        Ok(SetPartition::from_raw(self.n, &blocks))
    }

    /// Compact block-index form `1,1,2` (block number of each element,
    /// numbered by first appearance).
    pub fn to_block_indices(&self) -> String {
        let mut idx = vec![0usize; self.n + 1];
        for (bi, b) in self.blocks.iter().enumerate() {
            for &x in b {
                idx[x] = bi + 1;
            }
        }
        (1..=self.n)
            .map(|x| idx[x].to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parse either the canonical form `{(1,2),(3)}` or the compact
    /// block-index form `1,1,2`.
    pub fn parse(s: &str) -> Result<SetPartition> {
        let t = s.trim();
        if t.starts_with('{') {
            let inner = t
                .strip_prefix('{')
                .and_then(|u| u.strip_suffix('}'))
                .ok_or_else(|| Error::invalid(format!("unbalanced braces in {s:?}")))?;
            let mut blocks = Vec::new();
            let mut rest = inner.trim();
            while !rest.is_empty() {
                rest = rest.trim_start_matches(',').trim();
                if rest.is_empty() {
                    break;
                }
                let open = rest
                    .strip_prefix('(')
                    .ok_or_else(|| Error::invalid(format!("expected '(' in {s:?}")))?;
                let close = open
                    .find(')')
                    .ok_or_else(|| Error::invalid(format!("expected ')' in {s:?}")))?;
                let body = &open[..close];
                let block: Result<Vec<usize>> = body
                    .split(',')
                    .filter(|p| !p.trim().is_empty())
                    .map(|p| {
                        p.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::invalid(format!("bad element {p:?}")))
                    })
                    .collect();
                blocks.push(block?);
                rest = &open[close + 1..];
            }
            let n = blocks.iter().flatten().copied().max().unwrap_or(0);
            SetPartition::new(n, blocks)
        } else {
            let ids: Result<Vec<usize>> = t
                .split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::invalid(format!("bad block index {p:?}")))
                })
                .collect();
            let ids = ids?;
            let n = ids.len();
            let k = ids.iter().copied().max().unwrap_or(0);
            let mut blocks = vec![Vec::new(); k];
            for (x, &b) in ids.iter().enumerate() {
                if b == 0 {
                    return Err(Error::invalid("block indices are 1-based"));
                }
                blocks[b - 1].push(x + 1);
            }
            blocks.retain(|b| !b.is_empty());
            SetPartition::new(n, blocks)
        }
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(
                f,
                "({})",
                b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            )?;
        }
        write!(f, "}}")
    }
}

impl Serialize for SetPartition {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

/// A permutation of `[n]`, stored as the image list.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Build from 1-based images; validates bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &y in &images {
            if y == 0 || y > n || seen[y] {
                return Err(Error::invalid("not a bijection"));
            }
            seen[y] = true;
        }
        Ok(Permutation { images })
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Permutation {
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(a - 1, b - 1);
        Permutation { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `(self . other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: (1..=self.n()).map(|x| self.image(other.image(x))).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.n()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y - 1] = x + 1;
        }
        Permutation { images }
    }

    /// Cycles, each rotated to start at its minimum, sorted by minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut c = vec![start];
            seen[start] = true;
            let mut x = self.image(start);
            while x != start {
                seen[x] = true;
                c.push(x);
                x = self.image(x);
            }
            cycles.push(c);
        }
        cycles
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.images
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}
