//! Boxed convolution of multivariate formal series over the noncrossing
//! lattice, with the zeta and Moebius series.

use crate::error::{Error, Result};
use crate::exact::{MultiPoly, Rational};
use crate::ncpart::{catalan, for_each_nc, NcFilter, SetPartition};
use num_bigint::BigInt;
use std::collections::BTreeMap;

/// Coefficient table of a formal noncommutative series in `m` variables,
/// indexed by words over `{1, ..., m}` up to a fixed length. Missing words
/// have coefficient zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoeffTable {
    alphabet: usize,
    order: usize,
    coeffs: BTreeMap<Vec<u8>, MultiPoly>,
}

impl CoeffTable {
    pub fn new(alphabet: usize, order: usize) -> CoeffTable {
        assert!(alphabet >= 1 && alphabet <= u8::MAX as usize);
        CoeffTable {
            alphabet,
            order,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn set(&mut self, word: Vec<u8>, c: MultiPoly) {
        assert!(!word.is_empty() && word.len() <= self.order);
        assert!(word.iter().all(|&x| x >= 1 && x as usize <= self.alphabet));
        if c.is_zero() {
            self.coeffs.remove(&word);
        } else {
            self.coeffs.insert(word, c);
        }
    }

    pub fn coeff(&self, word: &[u8]) -> MultiPoly {
        self.coeffs.get(word).cloned().unwrap_or_else(MultiPoly::zero)
    }

    pub fn words(&self) -> impl Iterator<Item = (&Vec<u8>, &MultiPoly)> {
        self.coeffs.iter()
    }

    /// Diagonal restriction `z_i -> z`: the univariate coefficient of `z^r`
    /// is the sum over all words of length `r`.
    pub fn diagonal(&self) -> Vec<MultiPoly> {
        let mut out = vec![MultiPoly::zero(); self.order];
        for (w, c) in &self.coeffs {
            out[w.len() - 1] = out[w.len() - 1].add(c);
        }
        out
    }

    /// Hadamard (wordwise) product.
    pub fn hadamard(&self, other: &CoeffTable) -> Result<CoeffTable> {
        if self.alphabet != other.alphabet {
            return Err(Error::invalid("alphabet mismatch"));
        }
        let mut out = CoeffTable::new(self.alphabet, self.order.min(other.order));
        for (w, c) in &self.coeffs {
            if w.len() > out.order {
                continue;
            }
            let d = other.coeff(w);
            if !d.is_zero() {
                out.set(w.clone(), c.mul(&d));
            }
        }
        Ok(out)
    }
}

fn for_each_word(alphabet: usize, order: usize, mut f: impl FnMut(&[u8])) {
    let mut w: Vec<u8> = Vec::new();
    fn rec(w: &mut Vec<u8>, alphabet: usize, order: usize, f: &mut impl FnMut(&[u8])) {
        if !w.is_empty() {
            f(w);
        }
        if w.len() == order {
            return;
        }
        for x in 1..=alphabet as u8 {
            w.push(x);
            rec(w, alphabet, order, f);
            w.pop();
        }
    }
    rec(&mut w, alphabet, order, &mut f);
}

/// The zeta series: coefficient 1 on every word.
pub fn zeta_series(alphabet: usize, order: usize) -> CoeffTable {
    let mut t = CoeffTable::new(alphabet, order);
    for_each_word(alphabet, order, |w| t.set(w.to_vec(), MultiPoly::one()));
    t
}

/// The Moebius series: every word of length `n` carries
/// `(-1)^{n+1} (2n-2)!/((n-1)! n!)`, the signed Catalan number.
pub fn moebius_series(alphabet: usize, order: usize) -> CoeffTable {
    let mut t = CoeffTable::new(alphabet, order);
    for_each_word(alphabet, order, |w| {
        let n = w.len();
        let c = BigInt::from(catalan(n - 1));
        let sign = if n % 2 == 1 { 1 } else { -1 };
        t.set(
            w.to_vec(),
            MultiPoly::from_rational(Rational::from_integer(c * BigInt::from(sign))),
        );
    });
    t
}

/// The identity for boxed convolution: `z_1 + ... + z_m`.
pub fn identity_series(alphabet: usize, order: usize) -> CoeffTable {
    let mut t = CoeffTable::new(alphabet, order);
    for x in 1..=alphabet as u8 {
        t.set(vec![x], MultiPoly::one());
    }
    t
}

/// Univariate series with `coeff(z^n) = seq[n-1]` embedded on letter 1.
pub fn univariate_series(seq: &[MultiPoly], order: usize) -> CoeffTable {
    let mut t = CoeffTable::new(1, order);
    for (k, c) in seq.iter().take(order).enumerate() {
        t.set(vec![1; k + 1], c.clone());
    }
    t
}

/// Multiplicative extension `Cf_{w,pi}(f) = prod_B Cf_{w|B}(f)`.
fn partitioned_coeff(f: &CoeffTable, word: &[u8], blocks: &[Vec<usize>]) -> MultiPoly {
    let mut out = MultiPoly::one();
    for b in blocks {
        let sub: Vec<u8> = b.iter().map(|&pos| word[pos - 1]).collect();
        let c = f.coeff(&sub);
        if c.is_zero() {
            return MultiPoly::zero();
        }
        out = out.mul(&c);
    }
    out
}

/// Boxed convolution: for each word `w` of length `n`,
/// `Cf_w(f x g) = sum over NC(n) of Cf_{w,pi}(f) Cf_{w,Kr(pi)}(g)`
/// with the right Kreweras complement pairing the bars after each letter.
pub fn boxed_convolution(f: &CoeffTable, g: &CoeffTable) -> Result<CoeffTable> {
    if f.alphabet != g.alphabet {
        return Err(Error::invalid("alphabet mismatch"));
    }
    let order = f.order.min(g.order);
    let mut out = CoeffTable::new(f.alphabet, order);
    for_each_word(f.alphabet, order, |w| {
        let n = w.len();
        let mut total = MultiPoly::zero();
        for_each_nc(n, NcFilter::All, |blocks| {
            let part_f = partitioned_coeff(f, w, blocks);
            if part_f.is_zero() {
                return;
            }
            let pi = SetPartition::from_raw(n, blocks);
            let comp = pi.kreweras_right().expect("noncrossing by construction");
            let part_g = partitioned_coeff(g, w, comp.blocks());
            if part_g.is_zero() {
                return;
            }
            total = total.add(&part_f.mul(&part_g));
        })
        .expect("word length within bound");
        out.set(w.to_vec(), total);
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::convert::moments_from_cumulants;
    use super::*;
    use crate::exact::rat;

    #[test]
    fn zeta_and_moebius_are_mutually_inverse() {
        for alphabet in 1..=2 {
            let order = 5;
            let z = zeta_series(alphabet, order);
            let mob = moebius_series(alphabet, order);
            let id = identity_series(alphabet, order);
            assert_eq!(boxed_convolution(&z, &mob).unwrap(), id);
            assert_eq!(boxed_convolution(&mob, &z).unwrap(), id);
        }
    }

    #[test]
    fn identity_is_neutral() {
        let order = 4;
        let mut f = CoeffTable::new(2, order);
        // an arbitrary table
        f.set(vec![1], MultiPoly::from_rational(rat(2, 3)));
        f.set(vec![2, 1], MultiPoly::from_int(5));
        f.set(vec![1, 2, 2], MultiPoly::from_rational(rat(-7, 2)));
        f.set(vec![2, 2, 1, 1], MultiPoly::from_int(1));
        let id = identity_series(2, order);
        assert_eq!(boxed_convolution(&f, &id).unwrap(), f);
        assert_eq!(boxed_convolution(&id, &f).unwrap(), f);
    }

    #[test]
    fn cumulant_series_boxed_zeta_gives_moments() {
        // univariate: (cumulant series) x zeta = moment series, order 6
        let kappa: Vec<MultiPoly> = [rat(1, 2), rat(3, 1), rat(-1, 3), rat(2, 1), rat(0, 1), rat(1, 1)]
            .iter()
            .cloned()
            .map(MultiPoly::from_rational)
            .collect();
        let order = 6;
        let c = univariate_series(&kappa, order);
        let z = zeta_series(1, order);
        let m_series = boxed_convolution(&c, &z).unwrap();
        let expect = moments_from_cumulants(&kappa, order).unwrap();
        for n in 1..=order {
            assert_eq!(m_series.coeff(&vec![1u8; n]), expect[n - 1], "order {n}");
        }
    }

    #[test]
    fn diagonal_sums_words_by_length() {
        let mut f = CoeffTable::new(2, 2);
        f.set(vec![1], MultiPoly::from_int(1));
        f.set(vec![2], MultiPoly::from_int(3));
        f.set(vec![1, 2], MultiPoly::from_int(5));
        let d = f.diagonal();
        assert_eq!(d[0], MultiPoly::from_int(4));
        assert_eq!(d[1], MultiPoly::from_int(5));
    }
}
