//! Sparse multivariate polynomials over `Q(i)` with interned variable names.
//!
//! Terms are stored without zero coefficients. The printed form is canonical:
//! graded ordering (total degree descending, then lexicographic on the
//! variable names), so output is stable and diffable regardless of the order
//! in which variables were first seen.

use super::gaussian::{GaussianRational, Rational};
use crate::error::{Error, Result};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

/// Interned variable identifier.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Var(u32);

struct Interner {
    names: Vec<String>,
    lookup: std::collections::HashMap<String, u32>,
}

fn interner() -> &'static Mutex<Interner> {
    static INT: OnceLock<Mutex<Interner>> = OnceLock::new();
    INT.get_or_init(|| {
        Mutex::new(Interner {
            names: Vec::new(),
            lookup: std::collections::HashMap::new(),
        })
    })
}

impl Var {
    pub fn new(name: &str) -> Var {
        let mut it = interner().lock().unwrap();
        if let Some(&id) = it.lookup.get(name) {
            return Var(id);
        }
        let id = it.names.len() as u32;
        it.names.push(name.to_string());
        it.lookup.insert(name.to_string(), id);
        Var(id)
    }

    pub fn name(&self) -> String {
        interner().lock().unwrap().names[self.0 as usize].clone()
    }
}

/// Product of variable powers; exponents positive, sorted by variable id.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Monomial {
        Monomial(vec![(v, 1)])
    }

    pub fn var_pow(v: Var, e: u32) -> Monomial {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    pub fn from_pairs(mut pairs: Vec<(Var, u32)>) -> Monomial {
        pairs.retain(|&(_, e)| e > 0);
        pairs.sort_by_key(|&(v, _)| v);
        let mut out: Vec<(Var, u32)> = Vec::with_capacity(pairs.len());
        for (v, e) in pairs {
            match out.last_mut() {
                Some((u, f)) if *u == v => *f += e,
                _ => out.push((v, e)),
            }
        }
        Monomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.0[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((self.0[i].0, self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.0
    }

    /// Expanded name sequence, e.g. `a^2*b` -> `["a", "a", "b"]`, used for
    /// the canonical graded-lex print order.
    fn name_word(&self) -> Vec<String> {
        let mut w = Vec::new();
        for &(v, e) in &self.0 {
            let n = v.name();
            for _ in 0..e {
                w.push(n.clone());
            }
        }
        w.sort();
        w
    }
}

/// Sparse multivariate polynomial over `Q(i)`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, GaussianRational>,
}

/// The polynomial consisting of the single variable `name`.
pub fn sym(name: &str) -> MultiPoly {
    MultiPoly::from_term(Monomial::var(Var::new(name)), GaussianRational::one())
}

impl MultiPoly {
    pub fn zero() -> MultiPoly {
        MultiPoly::default()
    }

    pub fn one() -> MultiPoly {
        MultiPoly::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> MultiPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        MultiPoly { terms }
    }

    pub fn from_rational(r: Rational) -> MultiPoly {
        MultiPoly::constant(GaussianRational::from_rational(r))
    }

    pub fn from_int(n: i64) -> MultiPoly {
        MultiPoly::constant(GaussianRational::from_int(n))
    }

    /// The imaginary unit as a constant polynomial.
    pub fn i() -> MultiPoly {
        MultiPoly::constant(GaussianRational::i())
    }

    pub fn from_term(m: Monomial, c: GaussianRational) -> MultiPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> GaussianRational {
        self.coeff(&Monomial::one())
    }

    /// `Some(c)` when the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        if self.terms.is_empty() {
            return Some(GaussianRational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Monomial::one()) {
                return Some(c.clone());
            }
        }
        None
    }

    /// `Some(r)` when the polynomial is a real rational constant.
    pub fn as_rational(&self) -> Option<Rational> {
        self.as_constant().and_then(|c| c.is_real().then_some(c.re))
    }

    pub fn add_term(&mut self, m: Monomial, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &GaussianRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Complex conjugation of the coefficients; variables are treated as
    /// real symbols.
    pub fn conj(&self) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.conj()))
                .collect(),
        }
    }

    /// Substitute polynomials for variables; unmapped variables stay.
    pub fn substitute(&self, map: &dyn Fn(Var) -> Option<MultiPoly>) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(c.clone());
            for &(v, e) in m.pairs() {
                let factor = match map(v) {
                    Some(p) => p.pow(e),
                    None => MultiPoly::from_term(Monomial::var_pow(v, e), GaussianRational::one()),
                };
                term = term.mul(&factor);
            }
            out = out.add(&term);
        }
        out
    }

    /// Full evaluation; errors when a variable has no assigned value.
    pub fn eval(&self, map: &dyn Fn(Var) -> Option<GaussianRational>) -> Result<GaussianRational> {
        let mut out = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.pairs() {
                let val = map(v).ok_or_else(|| {
                    Error::invalid(format!("no value for variable {}", v.name()))
                })?;
                t *= &val.pow(e);
            }
            out += &t;
        }
        Ok(out)
    }

    /// Coefficients of `self` viewed as a univariate polynomial in `v`;
    /// index = power of `v`.
    pub fn coeffs_in(&self, v: Var) -> Vec<MultiPoly> {
        let mut out: Vec<MultiPoly> = Vec::new();
        for (m, c) in &self.terms {
            let mut e_v = 0;
            let mut rest = Vec::new();
            for &(u, e) in m.pairs() {
                if u == v {
                    e_v = e;
                } else {
                    rest.push((u, e));
                }
            }
            while out.len() <= e_v as usize {
                out.push(MultiPoly::zero());
            }
            out[e_v as usize].add_term(Monomial::from_pairs(rest), c);
        }
        if out.is_empty() {
            out.push(MultiPoly::zero());
        }
        out
    }

    /// Canonical term list as (coefficient, monomial) strings, in the same
    /// graded order as `Display`; the monomial of the constant term is `1`.
    pub fn rendered_terms(&self) -> Vec<(String, String)> {
        self.sorted_terms()
            .into_iter()
            .map(|(m, c)| {
                let mono = if m.is_one() {
                    "1".to_string()
                } else {
                    m.pairs()
                        .iter()
                        .map(|&(v, e)| {
                            if e == 1 {
                                v.name()
                            } else {
                                format!("{}^{}", v.name(), e)
                            }
                        })
                        .collect::<Vec<_>>()
                        .join("*")
                };
                (c.to_string(), mono)
            })
            .collect()
    }

    /// Terms in canonical print order: degree descending, then lex on the
    /// expanded variable-name word.
    fn sorted_terms(&self) -> Vec<(&Monomial, &GaussianRational)> {
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|(m1, _), (m2, _)| {
            m2.degree()
                .cmp(&m1.degree())
                .then_with(|| m1.name_word().cmp(&m2.name_word()))
        });
        ts
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.sorted_terms() {
            let mono = m
                .pairs()
                .iter()
                .map(|&(v, e)| {
                    if e == 1 {
                        v.name()
                    } else {
                        format!("{}^{}", v.name(), e)
                    }
                })
                .collect::<Vec<_>>()
                .join("*");
            // choose a printable coefficient and sign
            let (sign, mag) = if c.is_real() && c.re < Rational::from_integer(0.into()) {
                ('-', GaussianRational::from_rational(-c.re.clone()))
            } else {
                ('+', c.clone())
            };
            let coeff_str = if mag == GaussianRational::one() && !m.is_one() {
                String::new()
            } else if mag.is_real() || mag.re.is_zero() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            let body = match (coeff_str.is_empty(), mono.is_empty()) {
                (true, false) => mono,
                (false, true) => coeff_str,
                (false, false) => format!("{coeff_str}*{mono}"),
                (true, true) => unreachable!("coefficient 1 with empty monomial prints as 1"),
            };
            if first {
                if sign == '-' {
                    write!(f, "-{body}")?;
                } else {
                    write!(f, "{body}")?;
                }
                first = false;
            } else {
                write!(f, "{sign}{body}")?;
            }
        }
        Ok(())
    }
}
