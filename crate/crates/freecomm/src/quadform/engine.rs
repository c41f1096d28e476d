//! Product-formula expansion specialized to quadratic forms.
//!
//! `K_r(Q_n)` with `Q_n = sum a_ij X_i X_j` expands over noncrossing
//! partitions of `2r` positions whose join with the standard matching is
//! full, times index labelings. The enumeration runs partitions outermost
//! and backtracks over block labels with coefficient and support pruning;
//! terms are accumulated as integer counts keyed by their exact factor
//! multisets, so big-number work happens once per distinct term shape.

use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, MultiPoly};
use crate::freecalc::FreeFamily;
use crate::ncpart::{visit_nc, BlockRules, UnionFind};
use std::collections::BTreeMap;

/// Term shape: multiset of matrix entries used by the braces, and multiset
/// of (member, order) univariate cumulants used by the blocks.
type TermKey = (Vec<(u8, u8)>, Vec<(u8, u8)>);

pub(crate) struct QuadEngine<'a> {
    pub matrix: &'a ExactMatrix,
    pub names: Vec<String>,
    pub family: &'a FreeFamily,
}

impl<'a> QuadEngine<'a> {
    pub fn new(matrix: &'a ExactMatrix, family: &'a FreeFamily) -> Result<QuadEngine<'a>> {
        let names: Vec<String> = family.names().map(|s| s.to_string()).collect();
        if names.len() != matrix.dim() {
            return Err(Error::invalid(format!(
                "family has {} members but the system matrix is {}x{}",
                names.len(),
                matrix.dim(),
                matrix.dim()
            )));
        }
        Ok(QuadEngine {
            matrix,
            names,
            family,
        })
    }

    /// `K_r(Q_n)` by the product formula under freeness.
    pub fn cumulant(&self, r: usize) -> Result<MultiPoly> {
        let n2 = 2 * r;
        if n2 > 16 {
            return Err(Error::bound(format!(
                "quadratic-form expansion at order {r} needs partitions of {n2} > 16 points"
            )));
        }
        let n = self.matrix.dim();
        // union of supports over members drives the block-size pruning
        let specs: Vec<_> = self
            .names
            .iter()
            .map(|nm| self.family.get(nm).expect("validated"))
            .collect();
        let size_ok = |_: usize, s: usize| specs.iter().any(|sp| sp.contributes(s));
        let grow_ok = |_: usize, s: usize| {
            specs
                .iter()
                .any(|sp| sp.max_contributing().is_none_or(|m| s < m))
        };
        let trivially = |_: usize, _: usize| true;
        let rules = BlockRules {
            size_ok: &size_ok,
            compat: &trivially,
            grow_ok: &grow_ok,
        };

        let mut counts: BTreeMap<TermKey, u64> = BTreeMap::new();
        let mut block_of = vec![0usize; n2 + 1];
        visit_nc(n2, &rules, &mut |blocks| {
            // join with the standard matching must be full
            let mut uf = UnionFind::new(blocks.len());
            for (bi, b) in blocks.iter().enumerate() {
                for &x in b {
                    block_of[x] = bi;
                }
            }
            for t in 1..=r {
                uf.union(block_of[2 * t - 1] + 1, block_of[2 * t] + 1);
            }
            if uf.components() != 1 {
                return;
            }
            // braces checked as soon as both endpoint blocks are labeled
            let k = blocks.len();
            let mut braces_at: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k];
            for t in 1..=r {
                let (u, v) = (block_of[2 * t - 1], block_of[2 * t]);
                braces_at[u.max(v)].push((u, v));
            }
            let mut labels = vec![0u8; k];
            assign(
                0,
                blocks,
                &braces_at,
                &mut labels,
                n as u8,
                self,
                &mut counts,
            );
        });

        // assemble the distinct term shapes exactly once
        let mut total = MultiPoly::zero();
        for ((entries, kappas), count) in counts {
            let mut term = MultiPoly::from_int(count as i64);
            for (i, j) in entries {
                term = term.mul(self.matrix.get(i as usize, j as usize));
            }
            for (label, size) in kappas {
                let spec = self.family.get(&self.names[label as usize]).expect("validated");
                term = term.mul(&spec.kappa(size as usize));
            }
            total = total.add(&term);
        }
        Ok(total)
    }
}

fn assign(
    bi: usize,
    blocks: &[Vec<usize>],
    braces_at: &[Vec<(usize, usize)>],
    labels: &mut Vec<u8>,
    n: u8,
    eng: &QuadEngine,
    counts: &mut BTreeMap<TermKey, u64>,
) {
    if bi == blocks.len() {
        let mut entries: Vec<(u8, u8)> = Vec::new();
        for per_block in braces_at {
            for &(u, v) in per_block {
                entries.push((labels[u], labels[v]));
            }
        }
        entries.sort_unstable();
        let mut kappas: Vec<(u8, u8)> = labels
            .iter()
            .zip(blocks)
            .map(|(&l, b)| (l, b.len() as u8))
            .collect();
        kappas.sort_unstable();
        *counts.entry((entries, kappas)).or_default() += 1;
        return;
    }
    for label in 0..n {
        let spec = eng.family.get(&eng.names[label as usize]).expect("validated");
        if !spec.contributes(blocks[bi].len()) {
            continue;
        }
        labels[bi] = label;
        // prune on braces that are now fully labeled
        let ok = braces_at[bi]
            .iter()
            .all(|&(u, v)| !eng.matrix.get(labels[u] as usize, labels[v] as usize).is_zero());
        if ok {
            assign(bi + 1, blocks, braces_at, labels, n, eng, counts);
        }
    }
}
