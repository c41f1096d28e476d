//! The symbolic cumulant table of `T_2 = a_12 X_1 X_2 + a_21 X_2 X_1` with
//! mean-and-variance-one semicircular arguments, and its Hankel
//! determinants.

use super::engine::QuadEngine;
use crate::error::{Error, Result};
use crate::exact::{rat, sym, ExactMatrix, GaussianRational, MultiPoly};
use crate::freecalc::{CumulantSpec, FreeFamily};

/// Cumulants `K_1..K_rmax` of `T_2` as polynomials in `a = Re a_12` and
/// `b = Im a_12`, plus the Hankel determinants `h_m = det [K_{i+j}]` for
/// `2m <= rmax`.
#[derive(Clone, Debug)]
pub struct T2Table {
    /// `cumulants[k]` is `K_{k+1}`.
    pub cumulants: Vec<MultiPoly>,
    /// `(m, h_m)` pairs.
    pub hankels: Vec<(usize, MultiPoly)>,
}

/// System matrix of `T_2` with `a_12 = a + ib`, `a_21 = a - ib`.
pub fn t2_matrix() -> ExactMatrix {
    let a = sym("a");
    let b = sym("b");
    let a12 = a.add(&b.mul(&MultiPoly::i()));
    let a21 = a12.conj();
    ExactMatrix::from_rows(vec![
        vec![MultiPoly::zero(), a12],
        vec![a21, MultiPoly::zero()],
    ])
    .expect("square")
}

fn mean_one_semicircular_pair() -> FreeFamily {
    FreeFamily::new()
        .with(CumulantSpec::semicircular("X1", rat(1, 1), rat(1, 1)))
        .with(CumulantSpec::semicircular("X2", rat(1, 1), rat(1, 1)))
}

/// Compute the table; `rmax <= 8` by default scale.
pub fn t2_commutator_table(rmax: usize) -> Result<T2Table> {
    if rmax == 0 {
        return Err(Error::invalid("order must be >= 1"));
    }
    let matrix = t2_matrix();
    let family = mean_one_semicircular_pair();
    let engine = QuadEngine::new(&matrix, &family)?;
    let mut cumulants = Vec::with_capacity(rmax);
    for r in 1..=rmax {
        cumulants.push(engine.cumulant(r)?);
    }
    let mut hankels = Vec::new();
    for m in 2..=rmax / 2 {
        let mat = ExactMatrix::from_fn(m, |i, j| cumulants[i + j + 1].clone());
        hankels.push((m, mat.determinant()));
    }
    Ok(T2Table { cumulants, hankels })
}

impl T2Table {
    /// Evaluate a table polynomial at rational `(a, b)`.
    pub fn eval_at(
        poly: &MultiPoly,
        a: crate::exact::Rational,
        b: crate::exact::Rational,
    ) -> GaussianRational {
        poly.eval(&|v| match v.name().as_str() {
            "a" => Some(GaussianRational::from_rational(a.clone())),
            "b" => Some(GaussianRational::from_rational(b.clone())),
            _ => None,
        })
        .expect("table polynomials only involve a and b")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(i64, u32, u32)]) -> MultiPoly {
        // sum of c * a^p * b^q
        let a = sym("a");
        let b = sym("b");
        let mut out = MultiPoly::zero();
        for &(c, p, q) in terms {
            out = out.add(
                &a.pow(p)
                    .mul(&b.pow(q))
                    .scale(&GaussianRational::from_int(c)),
            );
        }
        out
    }

    #[test]
    fn low_order_cumulants() {
        let t = t2_commutator_table(4).unwrap();
        assert_eq!(t.cumulants[0], poly(&[(2, 1, 0)]));
        assert_eq!(t.cumulants[1], poly(&[(2, 0, 2), (10, 2, 0)]));
        assert_eq!(t.cumulants[2], poly(&[(24, 3, 0)]));
        assert_eq!(t.cumulants[3], poly(&[(2, 0, 4), (4, 2, 2), (66, 4, 0)]));
    }

    #[test]
    fn table_agrees_with_generic_engine() {
        // the same symbolic table through the word-outer polynomial engine
        use crate::freecalc::{poly_cumulant, ExpansionMode, NCPolynomial};
        let a = sym("a");
        let b = sym("b");
        let a12 = a.add(&b.mul(&MultiPoly::i()));
        let a21 = a12.conj();
        let p = NCPolynomial::from_terms(vec![
            (a12, vec!["X1".into(), "X2".into()]),
            (a21, vec!["X2".into(), "X1".into()]),
        ]);
        let fam = mean_one_semicircular_pair();
        let table = t2_commutator_table(5).unwrap();
        for r in 1..=5 {
            let via_poly = poly_cumulant(&p, &fam, r, ExpansionMode::Numeric).unwrap();
            assert_eq!(table.cumulants[r - 1], via_poly, "r = {r}");
        }
    }

    #[test]
    fn hankel_two() {
        let t = t2_commutator_table(4).unwrap();
        assert_eq!(t.hankels.len(), 1);
        let (m, h2) = &t.hankels[0];
        assert_eq!(*m, 2);
        // h2 = K2 K4 - K3^2 = 4(b^6 + 7a^2b^4 + 43a^4b^2 + 21a^6)
        assert_eq!(
            *h2,
            poly(&[(4, 0, 6), (28, 2, 4), (172, 4, 2), (84, 6, 0)])
        );
    }
}
