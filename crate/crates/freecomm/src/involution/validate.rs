//! Exhaustive validation of the involution over `C^o_{2n}` and the
//! machine-readable pairing certificate.

use super::classify::classify;
use super::sigma::{
    brace_condition, cumulant_invariance_symbolic, local_checks, sigma_literal, sigma_of,
    PairChecks, Resolution,
};
use crate::error::Result;
use crate::ncpart::{for_each_upper_complement, SetPartition, UpperComplementKind};
use serde::Serialize;
use std::collections::BTreeMap;

/// One certified partition with its permutation, partner and check results.
#[derive(Clone, Debug, Serialize)]
pub struct CertRecord {
    pub partition: String,
    pub r: usize,
    #[serde(rename = "type")]
    pub type_tag: &'static str,
    /// One-line image list of the delivered permutation.
    pub sigma: Vec<usize>,
    pub partner: String,
    pub checks: PairChecks,
    pub resolution: Resolution,
    /// Why the printed formula was not usable, when it was not.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub literal_failure: Option<String>,
    pub failed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertSummary {
    pub total: usize,
    pub pairs: usize,
    pub fixed_points: usize,
    pub literal: usize,
    pub searched: usize,
    pub failed: usize,
    pub by_type: BTreeMap<String, usize>,
}

/// The full pairing certificate for all `C^o_{2n}`, `n <= n_max`.
#[derive(Clone, Debug, Serialize)]
pub struct PairingCertificate {
    pub n_max: usize,
    pub summary: CertSummary,
    pub records: Vec<CertRecord>,
}

impl PairingCertificate {
    pub fn all_ok(&self) -> bool {
        self.summary.failed == 0
    }

    /// The discrepancy report: records where the printed formula had to be
    /// replaced by the resolved completion.
    pub fn discrepancies(&self) -> impl Iterator<Item = &CertRecord> {
        self.records
            .iter()
            .filter(|r| r.resolution == Resolution::Searched)
    }
}

/// Validate the involution exhaustively for every `pi` in `C^o_{2n}`,
/// `n <= n_max`: the delivered permutation must produce a noncrossing
/// partner inside `C^o`, reverse exactly one brace, preserve blockwise
/// cyclic words (checked symbolically), respect the type-transition table
/// and pair involutively. Partitions with no valid partner are marked
/// FAILED rather than silently dropped.
pub fn validate_involution(n_max: usize) -> Result<PairingCertificate> {
    // exhaustive validation is bounded at 2n <= 12 unless the enumeration
    // bound was raised explicitly through the environment
    let cap = if std::env::var("NC_ENUM_BOUND").is_ok() {
        crate::ncpart::enum_bound()
    } else {
        12
    };
    if 2 * n_max > cap {
        return Err(crate::error::Error::bound(format!(
            "exhaustive validation covers 2n <= {cap}; requested 2n = {}",
            2 * n_max
        )));
    }
    let mut records = Vec::new();
    let mut by_type: BTreeMap<String, usize> = BTreeMap::new();
    let mut fixed_points = 0usize;
    for r in 1..=n_max {
        let mut members: Vec<SetPartition> = Vec::new();
        for_each_upper_complement(r, UpperComplementKind::Odd, |p| members.push(p.clone()))?;
        for p in &members {
            let (tag, _) = classify(p)?;
            *by_type.entry(tag.as_str().to_string()).or_default() += 1;
            match sigma_of(p) {
                Ok((sigma, resolution)) => {
                    let lc = local_checks(p, &sigma, tag);
                    let q = lc.image.clone();
                    if q == *p {
                        fixed_points += 1;
                    }
                    // involutivity through the partner's own resolution
                    let involutive = sigma_of(&q)
                        .map(|(s2, _)| s2 == sigma.inverse())
                        .unwrap_or(false)
                        && q.permute(&sigma.inverse()).map(|b| b == *p).unwrap_or(false);
                    let checks = PairChecks {
                        nc: lc.nc,
                        membership: lc.membership,
                        involutive,
                        sign: lc.sign && brace_condition(&sigma),
                        cumulant_invariant: lc.cumulant_invariant
                            && cumulant_invariance_symbolic(p, &sigma),
                        block_sizes: lc.block_sizes,
                        type_transition: lc.type_transition,
                    };
                    let literal_failure = match sigma_literal(p) {
                        Ok(lit) if lit == sigma => None,
                        Ok(lit) => Some(
                            local_checks(p, &lit, tag)
                                .first_failure()
                                .unwrap_or("valid but inconsistent with the inverse relations")
                                .to_string(),
                        ),
                        Err(e) => Some(e.to_string()),
                    };
                    let failed = !checks.all();
                    records.push(CertRecord {
                        partition: p.to_string(),
                        r,
                        type_tag: tag.as_str(),
                        sigma: sigma.images().to_vec(),
                        partner: q.to_string(),
                        checks,
                        resolution,
                        literal_failure,
                        failed,
                    });
                }
                Err(e) => {
                    records.push(CertRecord {
                        partition: p.to_string(),
                        r,
                        type_tag: tag.as_str(),
                        sigma: Vec::new(),
                        partner: String::new(),
                        checks: PairChecks {
                            nc: false,
                            membership: false,
                            involutive: false,
                            sign: false,
                            cumulant_invariant: false,
                            block_sizes: false,
                            type_transition: false,
                        },
                        resolution: Resolution::Searched,
                        literal_failure: Some(e.to_string()),
                        failed: true,
                    });
                }
            }
        }
    }
    let total = records.len();
    let literal = records
        .iter()
        .filter(|c| c.resolution == Resolution::Literal)
        .count();
    let failed = records.iter().filter(|c| c.failed).count();
    let summary = CertSummary {
        total,
        pairs: (total - fixed_points) / 2,
        fixed_points,
        literal,
        searched: total - literal,
        failed,
        by_type,
    };
    Ok(PairingCertificate {
        n_max,
        summary,
        records,
    })
}

/// Partner map as a plain association, convenient for the cancellation
/// report in the quadratic-form module.
pub fn partner_map(r: usize) -> Result<BTreeMap<SetPartition, SetPartition>> {
    let mut map = BTreeMap::new();
    for_each_upper_complement(r, UpperComplementKind::Odd, |p| {
        map.insert(p.clone(), p.clone());
    })?;
    let keys: Vec<SetPartition> = map.keys().cloned().collect();
    for p in keys {
        let q = super::sigma::psi(&p)?;
        map.insert(p, q);
    }
    Ok(map)
}
