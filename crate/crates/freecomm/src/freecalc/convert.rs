//! Moment <-> free-cumulant conversion and additive free convolution.

use crate::error::{Error, Result};
use crate::exact::MultiPoly;
use crate::ncpart::{for_each_nc, NcFilter};

/// `m_n = sum over NC(n) of prod_B K_{|B|}`, computed through the recursion
/// `m_n = sum_s K_s [z^{n-s}] M(z)^s` (first-block decomposition).
/// Input and output are 1-based sequences: `seq[k]` is order `k+1`.
pub fn moments_from_cumulants(kappa: &[MultiPoly], order: usize) -> Result<Vec<MultiPoly>> {
    if kappa.len() < order {
        return Err(Error::invalid(format!(
            "need cumulants up to order {order}, got {}",
            kappa.len()
        )));
    }
    // m[0] = 1 internally (moment of the empty word)
    let mut m = vec![MultiPoly::one()];
    for n in 1..=order {
        // conv[s][t] = [z^t] M(z)^s over the moments known so far
        let mut conv = vec![MultiPoly::one()]; // M^0 = 1
        let mut mn = MultiPoly::zero();
        for s in 1..=n {
            // multiply conv by (m_0 + m_1 z + ...) truncated at n - s
            let mut next = vec![MultiPoly::zero(); n - s + 1];
            for (t, c) in conv.iter().enumerate() {
                if t > n - s || c.is_zero() {
                    continue;
                }
                for u in 0..=n - s - t {
                    next[t + u] = next[t + u].add(&c.mul(&m[u]));
                }
            }
            conv = next;
            mn = mn.add(&kappa[s - 1].mul(&conv[n - s]));
        }
        m.push(mn);
    }
    Ok(m[1..].to_vec())
}

/// Inverse of [`moments_from_cumulants`] (triangular solve).
pub fn cumulants_from_moments(moments: &[MultiPoly], order: usize) -> Result<Vec<MultiPoly>> {
    if moments.len() < order {
        return Err(Error::invalid(format!(
            "need moments up to order {order}, got {}",
            moments.len()
        )));
    }
    let mut kappa: Vec<MultiPoly> = Vec::with_capacity(order);
    for n in 1..=order {
        // with K_n = 0 the defect is exactly m_n - K_n
        kappa.push(MultiPoly::zero());
        let predicted = moments_from_cumulants(&kappa, n)?;
        let defect = moments[n - 1].sub(&predicted[n - 1]);
        *kappa.last_mut().expect("just pushed") = defect;
    }
    Ok(kappa)
}

/// Additive free convolution at the cumulant level: termwise sum.
pub fn free_convolve(a: &[MultiPoly], b: &[MultiPoly]) -> Result<Vec<MultiPoly>> {
    if a.len() != b.len() {
        return Err(Error::invalid("cumulant sequences must share a truncation"));
    }
    Ok(a.iter().zip(b).map(|(x, y)| x.add(y)).collect())
}

/// Brute-force oracle: the defining sum over the noncrossing lattice.
/// Exposed for tests and cross-checks; quadratic in the lattice size.
pub fn moments_from_cumulants_by_enumeration(
    kappa: &[MultiPoly],
    order: usize,
) -> Result<Vec<MultiPoly>> {
    let mut out = Vec::with_capacity(order);
    for n in 1..=order {
        let mut m = MultiPoly::zero();
        for_each_nc(n, NcFilter::All, |blocks| {
            let mut w = MultiPoly::one();
            for b in blocks {
                w = w.mul(&kappa[b.len() - 1]);
            }
            m = m.add(&w);
        })?;
        out.push(m);
    }
    Ok(out)
}
