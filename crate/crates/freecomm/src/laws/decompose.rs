//! Decomposition of free skew-symmetric laws into dilated tetilla factors
//! through the spectrum of the system matrix.

use super::numeric::{rational_to_f64, RatPoly};
use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, MultiPoly, Var};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct CompoundRestatement {
    pub rate: usize,
    /// Symmetric atoms `(location, weight)`, including the origin atom for
    /// odd dimension.
    pub atoms: Vec<(f64, f64)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    pub n: usize,
    pub charpoly: String,
    /// `chi(-lambda) = (-1)^n chi(lambda)` verified symbolically.
    pub parity_symmetric: bool,
    /// Scale parameters, descending; one trailing zero for odd `n`.
    pub scales: Vec<f64>,
    /// Nonzero scales: the dilation factors of the tetilla components.
    pub tetilla_components: Vec<f64>,
    /// `max_r |Tr(A^r) - sum_i 2 lambda_i^r|` over even `r <= 8`.
    pub additivity_max_error: f64,
    pub compound: CompoundRestatement,
}

/// Spectral decomposition of a skew selfadjoint matrix: scales are the
/// nonnegative eigenvalues, extracted by exact bisection on the even part
/// of the characteristic polynomial.
pub fn skew_law_decompose(a: &ExactMatrix) -> Result<DecompositionReport> {
    if !a.is_selfadjoint() {
        return Err(Error::invalid("matrix must be selfadjoint"));
    }
    if !a.is_skew_symmetric() {
        return Err(Error::invalid("matrix must be skew-symmetric"));
    }
    let n = a.dim();
    let lam = Var::new("lambda");
    let chi = a.charpoly(lam);

    // chi(-lambda) = (-1)^n chi(lambda)
    let minus = chi.substitute(&|v| {
        (v == lam).then(|| {
            MultiPoly::from_term(
                crate::exact::Monomial::var(lam),
                crate::exact::GaussianRational::from_int(-1),
            )
        })
    });
    let expect = if n % 2 == 0 { chi.clone() } else { chi.neg() };
    let parity_symmetric = minus == expect;
    if !parity_symmetric {
        return Err(Error::invalid(
            "characteristic polynomial is not parity-symmetric; matrix cannot be skew",
        ));
    }

    // even part: chi(lambda) = lambda^{n mod 2} q(lambda^2)
    let coeffs = chi.coeffs_in(lam);
    let mut q_coeffs = Vec::new();
    let mut k = n % 2;
    while k <= n {
        let c = coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(MultiPoly::zero)
            .as_rational()
            .ok_or_else(|| Error::invalid("characteristic coefficients must be rational"))?;
        q_coeffs.push(c);
        k += 2;
    }
    let q = RatPoly { coeffs: q_coeffs };

    // roots of q in y = lambda^2, with exact multiplicities
    let (q_pos, zero_mult) = q.strip_zero_roots();
    let mut scales: Vec<f64> = vec![0.0; zero_mult];
    for (factor, mult) in q_pos.square_free_decomposition() {
        for y in factor.positive_roots(512, 80) {
            for _ in 0..mult {
                scales.push(y.sqrt());
            }
        }
    }
    scales.sort_by(|x, y| y.partial_cmp(x).expect("finite"));
    if scales.len() != n / 2 {
        return Err(Error::invalid(format!(
            "expected {} nonnegative eigenvalue pairs, isolated {}",
            n / 2,
            scales.len()
        )));
    }
    if n % 2 == 1 {
        scales.push(0.0);
    }

    // cumulant additivity: Tr(A^r) = sum_i 2 lambda_i^r for even r
    let mut additivity_max_error: f64 = 0.0;
    for r in (2..=8).step_by(2) {
        let exact = a
            .trace_pow(r)
            .as_rational()
            .ok_or_else(|| Error::invalid("trace powers must be rational"))?;
        let approx: f64 = scales.iter().map(|l| 2.0 * l.powi(r as i32)).sum();
        additivity_max_error = additivity_max_error.max((rational_to_f64(&exact) - approx).abs());
    }

    let tetilla_components: Vec<f64> = scales.iter().copied().filter(|l| *l > 0.0).collect();
    let weight = 1.0 / n as f64;
    let mut atoms: Vec<(f64, f64)> = Vec::new();
    for &l in &scales[..n / 2] {
        atoms.push((l, weight));
        atoms.push((-l, weight));
    }
    if n % 2 == 1 {
        atoms.push((0.0, weight));
    }
    atoms.sort_by(|x, y| x.0.partial_cmp(&y.0).expect("finite"));

    Ok(DecompositionReport {
        n,
        charpoly: chi.to_string(),
        parity_symmetric,
        scales,
        tetilla_components,
        additivity_max_error,
        compound: CompoundRestatement { rate: n, atoms },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{standard_skew_matrix, GaussianRational};

    /// The block-diagonal skew matrix with blocks `[[0, i l], [-i l, 0]]`.
    fn block_sigma(lams: &[i64]) -> ExactMatrix {
        let n = 2 * lams.len();
        let mut m = ExactMatrix::zero(n);
        for (k, &l) in lams.iter().enumerate() {
            let v = MultiPoly::i().scale(&GaussianRational::from_int(l));
            m.set(2 * k, 2 * k + 1, v.clone());
            m.set(2 * k + 1, 2 * k, v.neg());
        }
        m
    }

    #[test]
    fn a3_decomposes_to_sqrt3_dilation() {
        let rep = skew_law_decompose(&standard_skew_matrix(3)).unwrap();
        assert_eq!(rep.scales.len(), 2);
        assert!((rep.scales[0] - 3f64.sqrt()).abs() < 1e-12);
        assert_eq!(rep.scales[1], 0.0);
        assert_eq!(rep.tetilla_components.len(), 1);
        assert!(rep.additivity_max_error < 1e-9);
        assert!(rep.parity_symmetric);
    }

    #[test]
    fn block_diagonal_scales() {
        let rep = skew_law_decompose(&block_sigma(&[1, 2])).unwrap();
        assert_eq!(rep.scales.len(), 2);
        assert!((rep.scales[0] - 2.0).abs() < 1e-12);
        assert!((rep.scales[1] - 1.0).abs() < 1e-12);
        // Tr(A^4) = 2(1 + 16) = 34
        let t4 = block_sigma(&[1, 2]).trace_pow(4);
        assert_eq!(t4, MultiPoly::from_int(34));
    }

    #[test]
    fn repeated_scales_are_counted() {
        let rep = skew_law_decompose(&block_sigma(&[2, 2])).unwrap();
        assert_eq!(rep.scales.len(), 2);
        assert!((rep.scales[0] - 2.0).abs() < 1e-12);
        assert!((rep.scales[1] - 2.0).abs() < 1e-12);
        assert!(rep.additivity_max_error < 1e-9);
    }

    #[test]
    fn zero_matrix_is_point_mass() {
        let rep = skew_law_decompose(&ExactMatrix::zero(4)).unwrap();
        assert_eq!(rep.scales, vec![0.0, 0.0]);
        assert!(rep.tetilla_components.is_empty());
    }

    #[test]
    fn non_skew_rejected() {
        assert!(skew_law_decompose(&ExactMatrix::identity(2)).is_err());
    }
}
