//! Cyclic-canonical joint-cumulant symbols and noncommutative polynomials.

use crate::exact::{sym, GaussianRational, MultiPoly};

/// A joint tracial cumulant `K_n(X_{w_1}, ..., X_{w_n})` identified up to
/// cyclic rotation of the word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct JointCumulantSymbol {
    word: Vec<String>,
}

impl JointCumulantSymbol {
    /// Canonicalize to the lexicographically minimal rotation.
    pub fn new(word: &[impl AsRef<str>]) -> JointCumulantSymbol {
        let w: Vec<String> = word.iter().map(|s| s.as_ref().to_string()).collect();
        JointCumulantSymbol {
            word: minimal_rotation(&w),
        }
    }

    pub fn word(&self) -> &[String] {
        &self.word
    }

    pub fn order(&self) -> usize {
        self.word.len()
    }

    /// Rendered name: `k[X;n]` for constant words, `K[a,b,...]` otherwise.
    pub fn render(&self) -> String {
        if self.word.iter().all(|x| x == &self.word[0]) {
            format!("k[{};{}]", self.word[0], self.word.len())
        } else {
            format!("K[{}]", self.word.join(","))
        }
    }

    /// The symbol as a polynomial variable.
    pub fn to_poly(&self) -> MultiPoly {
        sym(&self.render())
    }
}

fn minimal_rotation(w: &[String]) -> Vec<String> {
    let n = w.len();
    let mut best: Option<Vec<String>> = None;
    for s in 0..n {
        let rot: Vec<String> = (0..n).map(|k| w[(s + k) % n].clone()).collect();
        if best.as_ref().is_none_or(|b| rot < *b) {
            best = Some(rot);
        }
    }
    best.unwrap_or_default()
}

/// Optional mirror normalization (valid for selfadjoint variables with real
/// cumulants): identify a word with its reversal, then re-canonicalize.
pub fn mirror_canonical(s: &JointCumulantSymbol) -> JointCumulantSymbol {
    let mut rev: Vec<String> = s.word().to_vec();
    rev.reverse();
    let a = minimal_rotation(s.word());
    let b = minimal_rotation(&rev);
    JointCumulantSymbol {
        word: if b < a { b } else { a },
    }
}

/// A noncommutative polynomial in named variables: a list of
/// (coefficient, word) terms.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct NCPolynomial {
    terms: Vec<(MultiPoly, Vec<String>)>,
}

impl NCPolynomial {
    pub fn new() -> NCPolynomial {
        NCPolynomial::default()
    }

    pub fn from_terms(terms: Vec<(MultiPoly, Vec<String>)>) -> NCPolynomial {
        let mut p = NCPolynomial { terms };
        p.normalize();
        p
    }

    /// A single variable.
    pub fn variable(name: impl Into<String>) -> NCPolynomial {
        NCPolynomial {
            terms: vec![(MultiPoly::one(), vec![name.into()])],
        }
    }

    fn normalize(&mut self) {
        // merge equal words, drop zero coefficients
        let mut map: std::collections::BTreeMap<Vec<String>, MultiPoly> =
            std::collections::BTreeMap::new();
        for (c, w) in self.terms.drain(..) {
            let e = map.entry(w).or_insert_with(MultiPoly::zero);
            *e = e.add(&c);
        }
        self.terms = map
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(w, c)| (c, w))
            .collect();
    }

    pub fn terms(&self) -> &[(MultiPoly, Vec<String>)] {
        &self.terms
    }

    pub fn degree(&self) -> usize {
        self.terms.iter().map(|(_, w)| w.len()).max().unwrap_or(0)
    }

    pub fn add(&self, other: &NCPolynomial) -> NCPolynomial {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.clone());
        NCPolynomial::from_terms(terms)
    }

    pub fn sub(&self, other: &NCPolynomial) -> NCPolynomial {
        self.add(&other.scale(&GaussianRational::from_int(-1)))
    }

    pub fn scale(&self, c: &GaussianRational) -> NCPolynomial {
        NCPolynomial::from_terms(
            self.terms
                .iter()
                .map(|(p, w)| (p.scale(c), w.clone()))
                .collect(),
        )
    }

    pub fn mul(&self, other: &NCPolynomial) -> NCPolynomial {
        let mut terms = Vec::new();
        for (c1, w1) in &self.terms {
            for (c2, w2) in &other.terms {
                let mut w = w1.clone();
                w.extend(w2.iter().cloned());
                terms.push((c1.mul(c2), w));
            }
        }
        NCPolynomial::from_terms(terms)
    }

    /// `[a, b] = ab - ba`.
    pub fn commutator(a: &NCPolynomial, b: &NCPolynomial) -> NCPolynomial {
        a.mul(b).sub(&b.mul(a))
    }

    /// The selfadjoint commutator `i(XY - YX)` of two named variables.
    pub fn i_commutator(x: impl Into<String>, y: impl Into<String>) -> NCPolynomial {
        let x = NCPolynomial::variable(x);
        let y = NCPolynomial::variable(y);
        NCPolynomial::commutator(&x, &y).scale(&GaussianRational::i())
    }

    /// Selfadjointness of the formal element: the coefficient of each word
    /// must equal the conjugate of the coefficient of the reversed word.
    pub fn is_selfadjoint(&self) -> bool {
        self.terms.iter().all(|(c, w)| {
            let mut rev = w.clone();
            rev.reverse();
            let c_rev = self
                .terms
                .iter()
                .find(|(_, v)| *v == rev)
                .map(|(p, _)| p.clone())
                .unwrap_or_else(MultiPoly::zero);
            *c == c_rev.conj()
        })
    }
}
