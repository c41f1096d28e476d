//! The Hadamard-product representation of the cumulant transform of a
//! quadratic form in even variables: trace generating function against the
//! boxed convolution of the even cumulant transforms with the zeta series.

use super::form::{QuadMode, QuadraticForm};
use crate::error::{Error, Result};
use crate::exact::MultiPoly;
use crate::freecalc::{boxed_convolution, zeta_series, CoeffTable};

/// The trace generating function `f_A`: the coefficient of the word
/// `(i_1, ..., i_r)` is `Tr(A E_{i_1} A E_{i_2} ... A E_{i_r})`, i.e. the
/// cyclic entry product.
pub fn trace_generating_table(q: &QuadraticForm, order: usize) -> CoeffTable {
    let a = q.matrix();
    let n = a.dim();
    let mut t = CoeffTable::new(n, order);
    let mut word: Vec<u8> = Vec::new();
    fn rec(word: &mut Vec<u8>, n: usize, order: usize, q: &QuadraticForm, t: &mut CoeffTable) {
        if !word.is_empty() {
            let a = q.matrix();
            let r = word.len();
            let mut c = MultiPoly::one();
            for k in 0..r {
                let from = (word[(k + r - 1) % r] - 1) as usize;
                let to = (word[k] - 1) as usize;
                let e = a.get(from, to);
                if e.is_zero() {
                    c = MultiPoly::zero();
                    break;
                }
                c = c.mul(e);
            }
            t.set(word.clone(), c);
        }
        if word.len() == order {
            return;
        }
        for x in 1..=n as u8 {
            word.push(x);
            rec(word, n, order, q, t);
            word.pop();
        }
    }
    rec(&mut word, n, order, q, &mut t);
    t
}

/// The sum of the even cumulant transforms: letter `i` carries the series
/// `sum_m K_{2m}(X_i) z_i^m` on constant words, zero elsewhere.
pub fn even_cumulant_table(q: &QuadraticForm, order: usize) -> Result<CoeffTable> {
    if !q.family().all_even() {
        return Err(Error::invalid(
            "the Hadamard representation requires an even family",
        ));
    }
    let names: Vec<String> = q.family().names().map(|s| s.to_string()).collect();
    let mut t = CoeffTable::new(names.len(), order);
    for (i, name) in names.iter().enumerate() {
        let spec = q.family().get(name)?;
        for m in 1..=order {
            let c = spec.kappa(2 * m);
            if !c.is_zero() {
                t.set(vec![(i + 1) as u8; m], c);
            }
        }
    }
    Ok(t)
}

/// The cumulant sequence of `Q` read off the Hadamard product
/// `f_A . ((C_even(X_1) + ... + C_even(X_n)) boxed zeta)` on the diagonal.
/// Coefficient `r-1` must equal `K_r(Q)` from the even-family formula.
pub fn hadamard_representation(q: &QuadraticForm, order: usize) -> Result<Vec<MultiPoly>> {
    if 2 * order > 16 {
        return Err(Error::bound(format!(
            "Hadamard representation at order {order} exceeds the expansion bound"
        )));
    }
    let n = q.matrix().dim();
    let f_a = trace_generating_table(q, order);
    let even = even_cumulant_table(q, order)?;
    let zeta = zeta_series(n, order);
    let boxed = boxed_convolution(&even, &zeta)?;
    let had = f_a.hadamard(&boxed)?;
    Ok(had.diagonal())
}

/// Convenience: check agreement with the even-family formula order by order.
pub fn hadamard_agrees(q: &QuadraticForm, order: usize) -> Result<bool> {
    let h = hadamard_representation(q, order)?;
    for r in 1..=order {
        if h[r - 1] != q.cumulant(r, QuadMode::EvenFamily)? {
            return Ok(false);
        }
    }
    Ok(true)
}
