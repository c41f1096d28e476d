//! Structural checks around skew-symmetric system matrices: the commutator
//! rewrite, symbolic vanishing of odd cumulants, and the partitioned-trace
//! characterization of skewness.

use super::engine::QuadEngine;
use super::form::ptrace;
use crate::error::Result;
use crate::exact::{ExactMatrix, MultiPoly};
use crate::freecalc::FreeFamily;
use crate::ncpart::{for_each_nc, NcFilter, SetPartition};
use serde::Serialize;

/// Skewness and the rewrite `T_n = sum_{k<l} a_kl (X_k X_l - X_l X_k)`.
#[derive(Clone, Debug, Serialize)]
pub struct SkewReport {
    pub is_skew: bool,
    /// Commutator coefficients `(k, l, a_kl)` for `k < l`, rendered.
    pub commutator_coefficients: Vec<(usize, usize, String)>,
}

pub fn skew_report(a: &ExactMatrix) -> SkewReport {
    let is_skew = a.is_skew_symmetric();
    let mut coeffs = Vec::new();
    if is_skew {
        for k in 0..a.dim() {
            for l in k + 1..a.dim() {
                let e = a.get(k, l);
                if !e.is_zero() {
                    coeffs.push((k + 1, l + 1, e.to_string()));
                }
            }
        }
    }
    SkewReport {
        is_skew,
        commutator_coefficients: coeffs,
    }
}

/// `K_r(T_n)` for the given odd orders with fully symbolic univariate
/// cumulants per member; all must vanish when `a` is skew.
pub fn odd_cumulant_residuals(
    a: &ExactMatrix,
    family: &FreeFamily,
    orders: &[usize],
) -> Result<Vec<(usize, MultiPoly)>> {
    let engine = QuadEngine::new(a, family)?;
    orders
        .iter()
        .map(|&r| Ok((r, engine.cumulant(r)?)))
        .collect()
}

/// Generalized vanishing of partitioned traces: for a skew
/// selfadjoint matrix and odd `r`, every `ptrace(pi, A)` with `pi` in
/// `NC(r)` vanishes, the plain trace of the odd power being the minimal
/// case.
#[derive(Clone, Debug, Serialize)]
pub struct PartitionedTraceReport {
    pub odd_orders: Vec<usize>,
    pub trace_powers_zero: bool,
    pub all_partitioned_traces_zero: bool,
    /// Witness `(r, pi)` when something fails to vanish.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<(usize, String)>,
}

pub fn partitioned_trace_check(a: &ExactMatrix, max_odd_r: usize) -> Result<PartitionedTraceReport> {
    let mut odd_orders = Vec::new();
    let mut trace_ok = true;
    let mut all_ok = true;
    let mut witness = None;
    let mut r = 1;
    while r <= max_odd_r {
        odd_orders.push(r);
        if !a.trace_pow(r).is_zero() {
            trace_ok = false;
        }
        for_each_nc(r, NcFilter::All, |blocks| {
            if witness.is_some() {
                return;
            }
            let pi = SetPartition::from_raw(r, blocks);
            if !ptrace(&pi, a).is_zero() {
                all_ok = false;
                witness = Some((r, pi.to_string()));
            }
        })?;
        r += 2;
    }
    Ok(PartitionedTraceReport {
        odd_orders,
        trace_powers_zero: trace_ok,
        all_partitioned_traces_zero: all_ok,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::standard_skew_matrix;
    use crate::freecalc::{CumulantSpec, FreeFamily};

    #[test]
    fn skew_rewrite_of_standard_matrix() {
        let rep = skew_report(&standard_skew_matrix(2));
        assert!(rep.is_skew);
        assert_eq!(rep.commutator_coefficients.len(), 1);
        assert_eq!(rep.commutator_coefficients[0], (1, 2, "I".to_string()));
        let mut broken = standard_skew_matrix(2);
        broken.set(0, 0, MultiPoly::one());
        assert!(!skew_report(&broken).is_skew);
    }

    #[test]
    fn odd_cumulants_vanish_symbolically_n2() {
        let fam = FreeFamily::new()
            .with(CumulantSpec::symbolic("X1"))
            .with(CumulantSpec::symbolic("X2"));
        let res = odd_cumulant_residuals(&standard_skew_matrix(2), &fam, &[1, 3, 5]).unwrap();
        for (r, v) in res {
            assert!(v.is_zero(), "K_{r} = {v}");
        }
    }

    #[test]
    fn odd_cumulants_vanish_symbolically_n3() {
        let mut fam = FreeFamily::new();
        for k in 1..=3 {
            fam.insert(CumulantSpec::symbolic(format!("X{k}")));
        }
        let res = odd_cumulant_residuals(&standard_skew_matrix(3), &fam, &[1, 3, 5]).unwrap();
        for (r, v) in res {
            assert!(v.is_zero(), "K_{r} = {v}");
        }
    }

    #[test]
    fn partitioned_traces_vanish_for_skew() {
        for n in 2..=4 {
            let rep = partitioned_trace_check(&standard_skew_matrix(n), 5).unwrap();
            assert!(rep.trace_powers_zero);
            assert!(rep.all_partitioned_traces_zero, "witness: {:?}", rep.witness);
        }
        // non-skew witness: identity matrix has Tr(A^1) = n != 0
        let rep = partitioned_trace_check(&ExactMatrix::identity(2), 3).unwrap();
        assert!(!rep.trace_powers_zero);
        assert!(!rep.all_partitioned_traces_zero);
    }
}
