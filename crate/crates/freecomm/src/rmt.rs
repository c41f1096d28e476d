//! Monte Carlo cross-check: GUE matrices approximate free semicircular
//! families, so empirical trace moments of matrix quadratic forms converge
//! to the exact predictions.

use crate::error::{Error, Result};
use crate::exact::ExactMatrix;
use crate::laws::LawSpec;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// A random-matrix model: `n` independent GUE(N) matrices combined through
/// a numeric coefficient matrix. Entry variance is `1/N` so the empirical
/// spectral law of one sample tends to the semicircle on `[-2, 2]`.
#[derive(Clone, Debug)]
pub struct MatrixModel {
    pub dim: usize,
    pub coeffs: Vec<Vec<Complex64>>,
    pub seed: u64,
}

impl MatrixModel {
    pub fn new(dim: usize, coeffs: Vec<Vec<Complex64>>, seed: u64) -> Result<MatrixModel> {
        let n = coeffs.len();
        if n == 0 || coeffs.iter().any(|row| row.len() != n) {
            return Err(Error::invalid("coefficient matrix must be square"));
        }
        for i in 0..n {
            for j in 0..n {
                let diff = coeffs[i][j] - coeffs[j][i].conj();
                if diff.norm() > 1e-12 {
                    return Err(Error::invalid(
                        "coefficient matrix must be selfadjoint so that Q is Hermitian",
                    ));
                }
            }
        }
        if dim < 50 {
            return Err(Error::invalid("matrix dimension must be at least 50"));
        }
        Ok(MatrixModel { dim, coeffs, seed })
    }

    /// Commutator model for the generalized tetilla law: coefficients from
    /// the standard skew matrix `A_n`.
    pub fn commutator(n: usize, dim: usize, seed: u64) -> Result<MatrixModel> {
        MatrixModel::new(
            dim,
            exact_to_complex(&crate::exact::standard_skew_matrix(n))?,
            seed,
        )
    }

    pub fn family_size(&self) -> usize {
        self.coeffs.len()
    }
}

/// Convert a constant exact matrix to complex floats.
pub fn exact_to_complex(a: &ExactMatrix) -> Result<Vec<Vec<Complex64>>> {
    let n = a.dim();
    let mut out = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for i in 0..n {
        for j in 0..n {
            let c = a
                .get(i, j)
                .as_constant()
                .ok_or_else(|| Error::invalid("model coefficients must be numeric"))?;
            let (re, im) = c.to_f64();
            out[i][j] = Complex64::new(re, im);
        }
    }
    Ok(out)
}

/// Dense Hermitian matrix in row-major storage.
struct HMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl HMatrix {
    fn zero(n: usize) -> HMatrix {
        HMatrix {
            n,
            data: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    #[inline]
    fn at(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    /// `self * other` with an ikj loop for cache friendliness.
    fn mul(&self, other: &HMatrix) -> HMatrix {
        let n = self.n;
        let mut out = HMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                let row = &other.data[k * n..(k + 1) * n];
                let dst = &mut out.data[i * n..(i + 1) * n];
                for (d, &b) in dst.iter_mut().zip(row) {
                    *d += a * b;
                }
            }
        }
        out
    }

    fn conj_transpose(&self) -> HMatrix {
        let n = self.n;
        let mut out = HMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.at(i, j).conj();
            }
        }
        out
    }

    fn add_scaled(&mut self, other: &HMatrix, c: Complex64) {
        for (d, &s) in self.data.iter_mut().zip(&other.data) {
            *d += c * s;
        }
    }

    fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self.at(i, i)).sum()
    }

    /// `Tr(self * other)` without forming the product.
    fn trace_mul(&self, other: &HMatrix) -> Complex64 {
        let n = self.n;
        let mut t = Complex64::new(0.0, 0.0);
        for i in 0..n {
            for j in 0..n {
                t += self.at(i, j) * other.at(j, i);
            }
        }
        t
    }
}

/// One standard normal via Box-Muller.
fn gaussian(rng: &mut ChaCha8Rng) -> f64 {
    let u1: f64 = rng.random::<f64>().max(1e-300);
    let u2: f64 = rng.random();
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

/// Sample a GUE(N) matrix: independent complex Gaussian entries of variance
/// `1/N` off the diagonal, real variance `1/N` on it.
fn sample_gue(n: usize, rng: &mut ChaCha8Rng) -> HMatrix {
    let mut h = HMatrix::zero(n);
    let off = 1.0 / (2.0 * n as f64).sqrt();
    let diag = 1.0 / (n as f64).sqrt();
    for i in 0..n {
        h.data[i * n + i] = Complex64::new(diag * gaussian(rng), 0.0);
        for j in i + 1..n {
            let z = Complex64::new(off * gaussian(rng), off * gaussian(rng));
            h.data[i * n + j] = z;
            h.data[j * n + i] = z.conj();
        }
    }
    h
}

/// Per-order mean and standard error of `Tr(Q^r)/N`.
#[derive(Clone, Debug, Serialize)]
pub struct MomentEstimate {
    pub order: usize,
    pub mean: f64,
    pub stderr: f64,
}

/// Sample the model: each trial draws the family, forms
/// `Q = sum a_kl X_k X_l` and records normalized traces `Tr(Q^r)/N` for
/// `r = 1..rmax`. Deterministic for a fixed seed; trial `t` runs on stream
/// `t` of the counter-based generator.
pub fn empirical_moments(
    model: &MatrixModel,
    rmax: usize,
    trials: usize,
) -> Result<Vec<MomentEstimate>> {
    if trials == 0 {
        return Err(Error::invalid("at least one trial required"));
    }
    if rmax == 0 || rmax > 8 {
        return Err(Error::invalid("order must be between 1 and 8"));
    }
    let n = model.family_size();
    let dim = model.dim;
    let mut sums = vec![0.0f64; rmax];
    let mut sq_sums = vec![0.0f64; rmax];
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(model.seed);
        rng.set_stream(trial as u64 + 1);
        let xs: Vec<HMatrix> = (0..n).map(|_| sample_gue(dim, &mut rng)).collect();
        // X_l X_k = (X_k X_l)^H for Hermitian samples keeps products minimal
        let mut q = HMatrix::zero(dim);
        for k in 0..n {
            for l in k..n {
                let (ckl, clk) = (model.coeffs[k][l], model.coeffs[l][k]);
                if ckl.norm_sqr() == 0.0 && clk.norm_sqr() == 0.0 {
                    continue;
                }
                let prod = xs[k].mul(&xs[l]);
                if k == l {
                    q.add_scaled(&prod, ckl);
                } else {
                    q.add_scaled(&prod, ckl);
                    q.add_scaled(&prod.conj_transpose(), clk);
                }
            }
        }
        // moments r = 1..rmax from q and its square
        let q2 = q.mul(&q);
        let mut cur = None::<HMatrix>;
        for r in 1..=rmax {
            let val = match r {
                1 => q.trace(),
                2 => q2.trace(),
                3 => q.trace_mul(&q2),
                4 => q2.trace_mul(&q2),
                _ => {
                    let next = match cur.take() {
                        None => q2.mul(&q2).mul(&q), // q^5
                        Some(prev) => prev.mul(&q),
                    };
                    let t = next.trace();
                    cur = Some(next);
                    t
                }
            };
            let v = val.re / dim as f64;
            sums[r - 1] += v;
            sq_sums[r - 1] += v * v;
        }
    }
    let t = trials as f64;
    Ok((1..=rmax)
        .map(|r| {
            let mean = sums[r - 1] / t;
            let var = (sq_sums[r - 1] / t - mean * mean).max(0.0);
            let stderr = if trials > 1 {
                (var / (t - 1.0)).sqrt()
            } else {
                0.0
            };
            MomentEstimate {
                order: r,
                mean,
                stderr,
            }
        })
        .collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct MomentComparison {
    pub order: usize,
    pub exact: f64,
    pub empirical: f64,
    pub stderr: f64,
    pub z_score: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CompareReport {
    pub law: String,
    pub dim: usize,
    pub trials: usize,
    pub seed: u64,
    pub z_threshold: f64,
    pub rows: Vec<MomentComparison>,
    pub pass: bool,
}

/// Compare empirical trace moments against a law's exact moments with
/// per-order z-scores. The threshold acknowledges the `O(1/N)` bias of
/// finite matrices.
pub fn compare_with_prediction(
    model: &MatrixModel,
    law: &LawSpec,
    rmax: usize,
    trials: usize,
    z_threshold: f64,
) -> Result<CompareReport> {
    let est = empirical_moments(model, rmax, trials)?;
    let exact = law.moments(rmax)?;
    let rows: Vec<MomentComparison> = est
        .iter()
        .zip(exact)
        .map(|(e, ex)| {
            let exact_f = crate::laws::numeric::rational_to_f64(&ex);
            let spread = if e.stderr > 0.0 { e.stderr } else { 1e-12 };
            let z = (e.mean - exact_f) / spread;
            MomentComparison {
                order: e.order,
                exact: exact_f,
                empirical: e.mean,
                stderr: e.stderr,
                z_score: z,
                pass: z.abs() <= z_threshold,
            }
        })
        .collect();
    let pass = rows.iter().all(|r| r.pass);
    Ok(CompareReport {
        law: law.name.clone(),
        dim: model.dim,
        trials,
        seed: model.seed,
        z_threshold,
        rows,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seed_determinism() {
        let model = MatrixModel::commutator(2, 60, 7).unwrap();
        let a = empirical_moments(&model, 3, 2).unwrap();
        let b = empirical_moments(&model, 3, 2).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.mean.to_bits(), y.mean.to_bits());
            assert_eq!(x.stderr.to_bits(), y.stderr.to_bits());
        }
    }

    #[test]
    fn single_gue_semicircle_sanity() {
        // m2 -> 1 and m4 -> 2 for one GUE sample of moderate size:
        // Q = X^2 with a single matrix, so Tr(Q)/N = m2 and Tr(Q^2)/N = m4
        let model = MatrixModel::new(200, vec![vec![Complex64::new(1.0, 0.0)]], 11).unwrap();
        let est = empirical_moments(&model, 2, 8).unwrap();
        assert!((est[0].mean - 1.0).abs() < 0.05, "m2 = {}", est[0].mean);
        assert!((est[1].mean - 2.0).abs() < 0.10, "m4 = {}", est[1].mean);
    }

    #[test]
    fn hermiticity_guard() {
        let bad = vec![
            vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 1.0)],
            vec![Complex64::new(1.0, 1.0), Complex64::new(0.0, 0.0)],
        ];
        assert!(MatrixModel::new(100, bad, 1).is_err());
        let zero = MatrixModel::new(60, vec![vec![Complex64::new(0.0, 0.0)]], 1).unwrap();
        let est = empirical_moments(&zero, 3, 2).unwrap();
        assert!(est.iter().all(|e| e.mean == 0.0));
    }

    #[test]
    fn commutator_model_matches_tetilla_at_small_scale() {
        let model = MatrixModel::commutator(2, 120, 3).unwrap();
        let law = crate::laws::tetilla_law(8);
        let rep = compare_with_prediction(&model, &law, 4, 6, 5.0).unwrap();
        assert!(rep.pass, "rows: {:?}", rep.rows);
        // a deliberately wrong law must fail at r = 4: semicircle m4 = 2 vs 10
        let wrong = crate::laws::semicircle_law(8);
        let rep2 = compare_with_prediction(&model, &wrong, 4, 6, 5.0).unwrap();
        assert!(!rep2.rows[3].pass);
    }
}
