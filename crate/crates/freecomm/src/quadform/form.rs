//! Quadratic forms in free variables and their cumulants through four
//! independent formulas.

use super::engine::QuadEngine;
use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, MultiPoly};
use crate::freecalc::{poly_cumulant, ExpansionMode, FreeFamily, NCPolynomial};
use crate::ncpart::{for_each_nc, NcFilter, SetPartition};

/// `Q_n = sum a_ij X_i X_j` with a selfadjoint system matrix over a free
/// family. The i-th row/column corresponds to the i-th family member in
/// name order.
#[derive(Clone, Debug)]
pub struct QuadraticForm {
    matrix: ExactMatrix,
    family: FreeFamily,
}

/// Which cumulant formula to evaluate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QuadMode {
    /// Full product-formula expansion; no structural assumptions.
    General,
    /// The even-family formula: index sums against the inner even upper
    /// complements, requires every member even.
    EvenFamily,
    /// The convolution-like formula over `NC(r)` with partitioned traces;
    /// requires an identically distributed even family.
    IidEven,
    /// `K_r = Tr(A^r)`; requires standard semicircular members.
    Semicircular,
}

impl QuadraticForm {
    pub fn new(matrix: ExactMatrix, family: FreeFamily) -> Result<QuadraticForm> {
        if family.names().count() != matrix.dim() {
            return Err(Error::invalid(
                "family size must match the matrix dimension",
            ));
        }
        if !matrix.is_selfadjoint() {
            return Err(Error::invalid("system matrix must be selfadjoint"));
        }
        Ok(QuadraticForm { matrix, family })
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.matrix
    }

    pub fn family(&self) -> &FreeFamily {
        &self.family
    }

    fn names(&self) -> Vec<String> {
        self.family.names().map(|s| s.to_string()).collect()
    }

    /// The form as a noncommutative polynomial `sum a_ij X_i X_j`.
    pub fn as_nc_polynomial(&self) -> NCPolynomial {
        let names = self.names();
        let n = self.matrix.dim();
        let mut terms = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let a = self.matrix.get(i, j);
                if !a.is_zero() {
                    terms.push((a.clone(), vec![names[i].clone(), names[j].clone()]));
                }
            }
        }
        NCPolynomial::from_terms(terms)
    }

    /// `K_r(Q_n)` in the requested mode. All modes agree on their common
    /// domains; they are independent routes through the same sum.
    pub fn cumulant(&self, r: usize, mode: QuadMode) -> Result<MultiPoly> {
        if r == 0 {
            return Err(Error::invalid("cumulant order must be >= 1"));
        }
        match mode {
            QuadMode::General => QuadEngine::new(&self.matrix, &self.family)?.cumulant(r),
            QuadMode::EvenFamily => self.cumulant_even_family(r),
            QuadMode::IidEven => self.cumulant_iid_even(r),
            QuadMode::Semicircular => self.cumulant_semicircular(r),
        }
    }

    /// General-mode expansion routed through the generic polynomial engine;
    /// an independent implementation used to cross-check [`QuadMode::General`].
    pub fn cumulant_via_poly_engine(&self, r: usize) -> Result<MultiPoly> {
        poly_cumulant(&self.as_nc_polynomial(), &self.family, r, ExpansionMode::Numeric)
    }

    fn cumulant_even_family(&self, r: usize) -> Result<MultiPoly> {
        if !self.family.all_even() {
            return Err(Error::invalid(
                "the even-family formula requires every member to be even",
            ));
        }
        let n = self.matrix.dim();
        let names = self.names();
        // iterate index tuples i: [r] -> [n] with the cyclic entry product
        // Tr(A E_{i_1} ... A E_{i_r}) = a_{i_r i_1} a_{i_1 i_2} ... a_{i_{r-1} i_r},
        // then sum the inner even upper complements blockwise
        let mut total = MultiPoly::zero();
        let mut idx = vec![0usize; r];
        loop {
            let mut cyc = MultiPoly::one();
            for t in 0..r {
                let (from, to) = (idx[(t + r - 1) % r], idx[t]);
                let a = self.matrix.get(from, to);
                if a.is_zero() {
                    cyc = MultiPoly::zero();
                    break;
                }
                cyc = cyc.mul(a);
            }
            if !cyc.is_zero() {
                // sum over tau in NC(r) with the index map constant on blocks
                let mut inner = MultiPoly::zero();
                for_each_nc(r, NcFilter::All, |blocks| {
                    let mut w = MultiPoly::one();
                    for b in blocks {
                        let l0 = idx[b[0] - 1];
                        if b.iter().any(|&x| idx[x - 1] != l0) {
                            return;
                        }
                        let spec = self.family.get(&names[l0]).expect("validated");
                        let f = spec.kappa(2 * b.len());
                        if f.is_zero() {
                            return;
                        }
                        w = w.mul(&f);
                    }
                    inner = inner.add(&w);
                })?;
                total = total.add(&cyc.mul(&inner));
            }
            // next index tuple
            let mut t = 0;
            loop {
                if t == r {
                    return Ok(total);
                }
                idx[t] += 1;
                if idx[t] < n {
                    break;
                }
                idx[t] = 0;
                t += 1;
            }
        }
    }

    fn cumulant_iid_even(&self, r: usize) -> Result<MultiPoly> {
        if !self.family.all_even() {
            return Err(Error::invalid(
                "the iid-even formula requires every member to be even",
            ));
        }
        if !self.family.identically_distributed() {
            return Err(Error::invalid(
                "the iid-even formula requires identically distributed members",
            ));
        }
        let names = self.names();
        let spec = self.family.get(&names[0])?;
        let mut total = MultiPoly::zero();
        for_each_nc(r, NcFilter::All, |blocks| {
            let tau = SetPartition::from_raw(r, blocks);
            let mut w = ptrace(&tau, &self.matrix);
            if w.is_zero() {
                return;
            }
            for b in blocks {
                w = w.mul(&spec.kappa(2 * b.len()));
            }
            total = total.add(&w);
        })?;
        Ok(total)
    }

    fn cumulant_semicircular(&self, r: usize) -> Result<MultiPoly> {
        let names = self.names();
        for nm in &names {
            let s = self.family.get(nm)?;
            let standard = s.kappa(2) == MultiPoly::one()
                && s.kappa(1).is_zero()
                && s.max_contributing() == Some(2);
            if !standard {
                return Err(Error::invalid(
                    "the trace formula requires standard semicircular members",
                ));
            }
        }
        Ok(self.matrix.trace_pow(r))
    }
}

/// Partitioned trace: the cyclic entry sum with the index map constrained
/// to be constant on the blocks of `tau`. The two anchors fixing the
/// orientation: `ptrace(minimal) = Tr(A^r)` and agreement of the iid-even
/// formula with the even-family formula.
pub fn ptrace(tau: &SetPartition, a: &ExactMatrix) -> MultiPoly {
    let r = tau.n();
    let n = a.dim();
    let k = tau.size();
    let mut total = MultiPoly::zero();
    let mut labels = vec![0usize; k];
    loop {
        let mut term = MultiPoly::one();
        for t in 1..=r {
            let from = labels[tau.block_index_of(if t == 1 { r } else { t - 1 })];
            let to = labels[tau.block_index_of(t)];
            let e = a.get(from, to);
            if e.is_zero() {
                term = MultiPoly::zero();
                break;
            }
            term = term.mul(e);
        }
        total = total.add(&term);
        let mut i = 0;
        loop {
            if i == k {
                return total;
            }
            labels[i] += 1;
            if labels[i] < n {
                break;
            }
            labels[i] = 0;
            i += 1;
        }
    }
}
