//! Exact square matrices with polynomial entries.

use super::gaussian::GaussianRational;
use super::poly::{MultiPoly, Var};
use crate::error::{Error, Result};

/// Square matrix over the polynomial ring `Q(i)[x...]`; specializes to
/// `Q(i)` when all entries are constant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactMatrix {
    n: usize,
    entries: Vec<MultiPoly>,
}

impl ExactMatrix {
    pub fn zero(n: usize) -> ExactMatrix {
        ExactMatrix {
            n,
            entries: vec![MultiPoly::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> ExactMatrix {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, MultiPoly::one());
        }
        m
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> MultiPoly) -> ExactMatrix {
        let mut m = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<MultiPoly>>) -> Result<ExactMatrix> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::invalid("matrix must be square"));
        }
        Ok(ExactMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: MultiPoly) {
        self.entries[i * self.n + j] = v;
    }

    pub fn add(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.n != other.n {
            return Err(Error::invalid("dimension mismatch"));
        }
        Ok(ExactMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn scale(&self, c: &GaussianRational) -> ExactMatrix {
        ExactMatrix {
            n: self.n,
            entries: self.entries.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.n != other.n {
            return Err(Error::invalid("dimension mismatch"));
        }
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> ExactMatrix {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn conj_transpose(&self) -> ExactMatrix {
        Self::from_fn(self.n, |i, j| self.get(j, i).conj())
    }

    pub fn trace(&self) -> MultiPoly {
        let mut t = MultiPoly::zero();
        for i in 0..self.n {
            t = t.add(self.get(i, i));
        }
        t
    }

    pub fn pow(&self, e: usize) -> ExactMatrix {
        let mut acc = Self::identity(self.n);
        for _ in 0..e {
            acc = acc.mul(self).expect("same dimension");
        }
        acc
    }

    /// `Tr(M^r)` exactly.
    pub fn trace_pow(&self, r: usize) -> MultiPoly {
        self.pow(r).trace()
    }

    /// `A = A*` entrywise.
    pub fn is_selfadjoint(&self) -> bool {
        *self == self.conj_transpose()
    }

    /// `A = -A^T` entrywise.
    pub fn is_skew_symmetric(&self) -> bool {
        *self
            == self
                .transpose()
                .scale(&GaussianRational::from_int(-1))
    }

    /// Characteristic polynomial `det(lambda I - A)` in the variable `var`,
    /// computed by the Faddeev-LeVerrier recursion (divisions only by
    /// integers, exact over `Q(i)[x...]`).
    pub fn charpoly(&self, var: Var) -> MultiPoly {
        let n = self.n;
        let lambda = MultiPoly::from_term(
            super::poly::Monomial::var(var),
            GaussianRational::one(),
        );
        // c[0] = 1; M_1 = A; c_k = -tr(A M_k)/k with M_{k+1} = A M_k + c_k I
        let mut cs = vec![MultiPoly::one()];
        let mut m = Self::identity(n);
        for k in 1..=n {
            m = self.mul(&m).expect("square");
            let ck = m
                .trace()
                .scale(&GaussianRational::from_rational(super::gaussian::rat(
                    -1, k as i64,
                )));
            for i in 0..n {
                let cur = m.get(i, i).add(&ck);
                m.set(i, i, cur);
            }
            cs.push(ck);
        }
        let mut chi = MultiPoly::zero();
        let mut pow = MultiPoly::one();
        for k in 0..=n {
            // coefficient of lambda^k is c_{n-k}
            chi = chi.add(&cs[n - k].mul(&pow));
            pow = pow.mul(&lambda);
        }
        chi
    }

    /// The diagonal map: zero out all off-diagonal entries. Idempotent.
    pub fn diagonal_part(&self) -> ExactMatrix {
        Self::from_fn(self.n, |i, j| {
            if i == j {
                self.get(i, i).clone()
            } else {
                MultiPoly::zero()
            }
        })
    }

    /// Determinant via the characteristic polynomial: `det A = (-1)^n c_n`.
    pub fn determinant(&self) -> MultiPoly {
        let v = Var::new("__det_lambda");
        let chi = self.charpoly(v);
        let c0 = chi.coeffs_in(v)[0].clone();
        if self.n % 2 == 1 {
            c0.neg()
        } else {
            c0
        }
    }
}

/// The matrix `A_n`: zero diagonal, `i` above the diagonal, `-i` below.
/// Its quadratic form is the full commutator sum of `n` semicirculars.
pub fn standard_skew_matrix(n: usize) -> ExactMatrix {
    ExactMatrix::from_fn(n, |i, j| {
        if j > i {
            MultiPoly::i()
        } else if j < i {
            MultiPoly::i().neg()
        } else {
            MultiPoly::zero()
        }
    })
}
