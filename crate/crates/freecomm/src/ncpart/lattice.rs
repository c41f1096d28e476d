//! Refinement order, meet/join, and the Kreweras complementation maps.

use super::partition::{Permutation, SetPartition};
use crate::error::{Error, Result};

impl SetPartition {
    /// Refinement order: every block of `self` is contained in a block of
    /// `other`.
    pub fn leq(&self, other: &SetPartition) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::invalid("ground set mismatch"));
        }
        Ok(self.blocks().iter().all(|b| {
            let target = other.block_index_of(b[0]);
            b.iter().all(|&x| other.block_index_of(x) == target)
        }))
    }

    /// Common refinement (the meet in both the full and the NC lattice;
    /// the meet of noncrossing partitions is automatically noncrossing).
    pub fn meet(&self, other: &SetPartition) -> Result<SetPartition> {
        if self.n() != other.n() {
            return Err(Error::invalid("ground set mismatch"));
        }
        let n = self.n();
        let mut key_to_block: std::collections::BTreeMap<(usize, usize), Vec<usize>> =
            std::collections::BTreeMap::new();
        for x in 1..=n {
            key_to_block
                .entry((self.block_index_of(x), other.block_index_of(x)))
                .or_default()
                .push(x);
        }
        let blocks: Vec<Vec<usize>> = key_to_block.into_values().collect();
        Ok(SetPartition::from_raw(n, &blocks))
    }

    /// The permutation whose cycles are the blocks traversed in increasing
    /// order.
    fn block_cycle_permutation(&self) -> Permutation {
        let mut images = vec![0usize; self.n()];
        for b in self.blocks() {
            for w in b.windows(2) {
                images[w[0] - 1] = w[1];
            }
            images[b[b.len() - 1] - 1] = b[0];
        }
        Permutation::from_images(images).expect("blocks form a permutation")
    }

    fn from_cycles(n: usize, p: &Permutation) -> SetPartition {
        SetPartition::from_raw(n, &p.cycles())
    }

    /// Right Kreweras complement: the maximal noncrossing partition of the
    /// barred copies interlaced after the elements. Computed as the cycle
    /// decomposition of `p^{-1} c` with `c` the long cycle.
    pub fn kreweras_right(&self) -> Result<SetPartition> {
        if !self.is_noncrossing() {
            return Err(Error::invalid("Kreweras complement requires noncrossing input"));
        }
        let n = self.n();
        let c = long_cycle(n);
        let q = self.block_cycle_permutation().inverse().compose(&c);
        Ok(Self::from_cycles(n, &q))
    }

    /// Left Kreweras complement, the inverse map of [`Self::kreweras_right`].
    pub fn kreweras_left(&self) -> Result<SetPartition> {
        if !self.is_noncrossing() {
            return Err(Error::invalid("Kreweras complement requires noncrossing input"));
        }
        let n = self.n();
        let c = long_cycle(n);
        let q = c.compose(&self.block_cycle_permutation().inverse());
        Ok(Self::from_cycles(n, &q))
    }

    /// Join in the noncrossing lattice, via the complement anti-isomorphism:
    /// `join(p, q) = K_left(meet(K_right(p), K_right(q)))`.
    pub fn join_nc(&self, other: &SetPartition) -> Result<SetPartition> {
        let kp = self.kreweras_right()?;
        let kq = other.kreweras_right()?;
        kp.meet(&kq)?.kreweras_left()
    }

    /// Connectivity of the union relation (union-find). Agrees with
    /// `join_nc(other) == 1` whenever `other` is an interval partition —
    /// in particular for the standard matching, which is how the upper
    /// complement classes are defined. For general pairs it is only a
    /// lower bound on the noncrossing join.
    pub fn join_is_full(&self, other: &SetPartition) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::invalid("ground set mismatch"));
        }
        let n = self.n();
        let mut uf = UnionFind::new(n);
        for b in self.blocks().iter().chain(other.blocks()) {
            for w in b.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        Ok(uf.components() == 1)
    }
}

fn long_cycle(n: usize) -> Permutation {
    let mut images: Vec<usize> = (2..=n).collect();
    images.push(1);
    Permutation::from_images(images).expect("cycle")
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    count: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..=n).collect(),
            count: n,
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut x = x;
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
            self.count -= 1;
        }
    }

    pub fn components(&self) -> usize {
        self.count
    }
}
