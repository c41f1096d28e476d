//! Floating-point helpers for the laws module: adaptive quadrature and
//! exact-sign bisection for polynomial roots.

use crate::exact::Rational;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Adaptive Simpson quadrature with absolute tolerance.
pub fn integrate(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson(f: &dyn Fn(f64) -> f64, a: f64, fa: f64, b: f64, fb: f64) -> (f64, f64, f64) {
        let m = 0.5 * (a + b);
        let fm = f(m);
        ((b - a) / 6.0 * (fa + 4.0 * fm + fb), m, fm)
    }
    fn rec(
        f: &dyn Fn(f64) -> f64,
        a: f64,
        fa: f64,
        b: f64,
        fb: f64,
        whole: f64,
        m: f64,
        fm: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let (left, lm, flm) = simpson(f, a, fa, m, fm);
        let (right, rm, frm) = simpson(f, m, fm, b, fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            return left + right + delta / 15.0;
        }
        rec(f, a, fa, m, fm, left, lm, flm, tol / 2.0, depth - 1)
            + rec(f, m, fm, b, fb, right, rm, frm, tol / 2.0, depth - 1)
    }
    let (fa, fb) = (f(a), f(b));
    let (whole, m, fm) = simpson(f, a, fa, b, fb);
    // depth 24 resolves integrable kinks well below 1e-9 without letting the
    // per-level tolerance halving underflow into unbounded recursion
    rec(f, a, fa, b, fb, whole, m, fm, tol, 24)
}

/// A univariate polynomial with rational coefficients, for exact sign
/// evaluation during root isolation.
#[derive(Clone, Debug)]
pub struct RatPoly {
    /// `coeffs[k]` multiplies `y^k`.
    pub coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn degree(&self) -> usize {
        self.coeffs
            .iter()
            .rposition(|c| !c.is_zero())
            .unwrap_or(0)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Divide out `y^m` where `m` is the multiplicity of the zero root.
    pub fn strip_zero_roots(&self) -> (RatPoly, usize) {
        let m = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.coeffs.len());
        (
            RatPoly {
                coeffs: self.coeffs[m..].to_vec(),
            },
            m,
        )
    }

    /// Cauchy bound on the absolute value of real roots.
    pub fn root_bound(&self) -> Rational {
        let d = self.degree();
        let lead = self.coeffs[d].clone();
        let mut max = Rational::zero();
        for c in &self.coeffs[..d] {
            let q = (c / &lead).abs();
            if q > max {
                max = q;
            }
        }
        max + Rational::from_integer(BigInt::from(1))
    }

    /// All real roots in `(0, bound]`, found by exact sign changes on a
    /// refining grid plus bisection. Intended for polynomials with simple
    /// positive roots (square-free input).
    pub fn positive_roots(&self, grid: usize, iterations: usize) -> Vec<f64> {
        let bound = self.root_bound();
        let mut roots = Vec::new();
        let step = &bound / Rational::from_integer(BigInt::from(grid as i64));
        let mut prev_x = Rational::zero();
        let mut prev_sign = sign_of(&self.eval(&prev_x));
        for k in 1..=grid {
            let x = &step * Rational::from_integer(BigInt::from(k as i64));
            let v = self.eval(&x);
            let s = sign_of(&v);
            if s == 0 {
                roots.push(rational_to_f64(&x));
            } else if prev_sign != 0 && s != prev_sign {
                // bisect in (prev_x, x)
                let (mut lo, mut hi) = (prev_x.clone(), x.clone());
                let lo_sign = prev_sign;
                for _ in 0..iterations {
                    let mid = (&lo + &hi) / Rational::from_integer(BigInt::from(2));
                    let sm = sign_of(&self.eval(&mid));
                    if sm == 0 {
                        lo = mid.clone();
                        hi = mid;
                        break;
                    }
                    if sm == lo_sign {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                let mid = (&lo + &hi) / Rational::from_integer(BigInt::from(2));
                roots.push(rational_to_f64(&mid));
            }
            prev_x = x;
            prev_sign = s;
        }
        roots
    }
}

impl RatPoly {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn trimmed(mut self) -> RatPoly {
        while self.coeffs.len() > 1 && self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn derivative(&self) -> RatPoly {
        if self.coeffs.len() <= 1 {
            return RatPoly {
                coeffs: vec![Rational::zero()],
            };
        }
        RatPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k as i64)))
                .collect(),
        }
    }

    fn monic(&self) -> RatPoly {
        let d = self.degree();
        let lead = self.coeffs[d].clone();
        if lead.is_zero() {
            return self.clone().trimmed();
        }
        RatPoly {
            coeffs: self.coeffs[..=d].iter().map(|c| c / &lead).collect(),
        }
    }

    /// Polynomial remainder of `self / div`.
    fn rem(&self, div: &RatPoly) -> RatPoly {
        let dd = div.degree();
        let lead = div.coeffs[dd].clone();
        let mut r = self.coeffs.clone();
        while r.len() > dd {
            let k = r.len() - 1;
            if r[k].is_zero() {
                r.pop();
                continue;
            }
            let q = &r[k] / &lead;
            for j in 0..=dd {
                let s = &q * &div.coeffs[j];
                r[k - dd + j] -= s;
            }
            r.pop();
        }
        (RatPoly { coeffs: r }).trimmed()
    }

    /// Exact quotient; panics unless `div` divides `self`.
    fn exact_div(&self, div: &RatPoly) -> RatPoly {
        let dd = div.degree();
        let lead = div.coeffs[dd].clone();
        let mut r = self.coeffs.clone();
        let mut q = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while r.len() > dd {
            let k = r.len() - 1;
            if r[k].is_zero() {
                r.pop();
                continue;
            }
            let c = &r[k] / &lead;
            q[k - dd] = c.clone();
            for j in 0..=dd {
                let s = &c * &div.coeffs[j];
                r[k - dd + j] -= s;
            }
            r.pop();
        }
        assert!(
            r.iter().all(|c| c.is_zero()),
            "exact_div called with a non-divisor"
        );
        (RatPoly { coeffs: q }).trimmed()
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &RatPoly) -> RatPoly {
        let mut a = self.monic();
        let mut b = other.clone().trimmed();
        while !b.is_zero() && b.degree() + 1 > 0 {
            if b.degree() == 0 {
                return RatPoly {
                    coeffs: vec![Rational::from_integer(BigInt::from(1))],
                };
            }
            let b_m = b.monic();
            let r = a.rem(&b_m);
            a = b_m;
            if r.is_zero() {
                return a;
            }
            b = r;
        }
        a.monic()
    }

    /// Square-free decomposition (Yun): returns `(factor, multiplicity)`
    /// pairs with the factors monic, pairwise coprime and square-free.
    pub fn square_free_decomposition(&self) -> Vec<(RatPoly, usize)> {
        let f = self.monic();
        if f.degree() == 0 {
            return Vec::new();
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        if a0.degree() == 0 {
            return vec![(f, 1)];
        }
        let mut out = Vec::new();
        let mut b = f.exact_div(&a0);
        let mut c = df.exact_div(&a0);
        let mut i = 1usize;
        let max_mult = f.degree();
        while i <= max_mult {
            let d = {
                // c - b'
                let db = b.derivative();
                let mut coeffs = c.coeffs.clone();
                coeffs.resize(coeffs.len().max(db.coeffs.len()), Rational::zero());
                for (k, v) in db.coeffs.iter().enumerate() {
                    coeffs[k] -= v.clone();
                }
                (RatPoly { coeffs }).trimmed()
            };
            if d.is_zero() {
                if b.degree() >= 1 {
                    out.push((b.monic(), i));
                }
                break;
            }
            let p = b.gcd(&d);
            if p.degree() >= 1 {
                out.push((p.monic(), i));
            }
            let next_b = b.exact_div(&p);
            let next_c = d.exact_div(&p);
            b = next_b;
            c = next_c;
            i += 1;
            if b.degree() == 0 {
                break;
            }
        }
        out
    }
}

fn sign_of(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    let n: f64 = r.numer().to_string().parse().unwrap_or(f64::NAN);
    let d: f64 = r.denom().to_string().parse().unwrap_or(f64::NAN);
    n / d
}
