//! Truncated formal power series with `MultiPoly` coefficients, and the
//! tangent / arctangent numbers.

use super::gaussian::{rat, GaussianRational, Rational};
use super::poly::MultiPoly;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;

/// Power series truncated at a fixed order; `coeffs[k]` is the coefficient
/// of `z^k`, with `coeffs.len() == order + 1`. Operations never read beyond
/// the truncation order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerSeries {
    coeffs: Vec<MultiPoly>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> PowerSeries {
        PowerSeries {
            coeffs: vec![MultiPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> PowerSeries {
        let mut s = Self::zero(order);
        s.coeffs[0] = MultiPoly::one();
        s
    }

    /// The identity series `z`.
    pub fn z(order: usize) -> PowerSeries {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = MultiPoly::one();
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<MultiPoly>) -> PowerSeries {
        assert!(!coeffs.is_empty());
        PowerSeries { coeffs }
    }

    pub fn from_rationals(coeffs: &[Rational]) -> PowerSeries {
        PowerSeries {
            coeffs: coeffs
                .iter()
                .map(|r| MultiPoly::from_rational(r.clone()))
                .collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> MultiPoly {
        self.coeffs.get(k).cloned().unwrap_or_else(MultiPoly::zero)
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> PowerSeries {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, MultiPoly::zero());
        PowerSeries { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for k in 0..=order {
            out.coeffs[k] = self.coeffs[k].add(&other.coeffs[k]);
        }
        out
    }

    pub fn sub(&self, other: &PowerSeries) -> PowerSeries {
        self.add(&other.scale(&GaussianRational::from_int(-1)))
    }

    pub fn scale(&self, c: &GaussianRational) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                out.coeffs[i + j] = out.coeffs[i + j].add(&self.coeffs[i].mul(&other.coeffs[j]));
            }
        }
        out
    }

    /// Coefficientwise (Hadamard) product.
    pub fn hadamard(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for k in 0..=order {
            out.coeffs[k] = self.coeffs[k].mul(&other.coeffs[k]);
        }
        out
    }

    /// Composition `self(other(z))`; requires `other(0) = 0`.
    pub fn compose(&self, other: &PowerSeries) -> Result<PowerSeries> {
        if !other.coeffs[0].is_zero() {
            return Err(Error::invalid(
                "series composition requires inner constant term 0",
            ));
        }
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        out.coeffs[0] = self.coeffs[0].clone();
        // Horner from the top coefficient down
        let mut acc = Self::zero(order);
        for k in (1..=order).rev() {
            // acc = (acc + c_k) * other
            let mut with_c = acc.clone();
            with_c.coeffs[0] = with_c.coeffs[0].add(&self.coeffs[k]);
            acc = with_c.mul(other);
        }
        Ok(out.add(&acc))
    }

    /// Division `self / other`; requires an invertible constant term on
    /// `other` (a nonzero element of `Q(i)`).
    pub fn divide(&self, other: &PowerSeries) -> Result<PowerSeries> {
        let c0 = other.coeffs[0]
            .as_constant()
            .filter(|c| !c.is_zero())
            .ok_or_else(|| {
                Error::invalid("series division requires a nonzero constant denominator term")
            })?;
        let order = self.order().min(other.order());
        let inv0 = c0.inverse()?;
        let mut out = Self::zero(order);
        for k in 0..=order {
            // q_k = (a_k - sum_{j<k} q_j b_{k-j}) / b_0
            let mut t = self.coeffs[k].clone();
            for j in 0..k {
                t = t.sub(&out.coeffs[j].mul(&other.coeffs[k - j]));
            }
            out.coeffs[k] = t.scale(&inv0);
        }
        Ok(out)
    }

    /// Substitute `z -> c*z` (coefficientwise scaling by `c^k`).
    pub fn dilate(&self, c: &GaussianRational) -> PowerSeries {
        let mut out = self.clone();
        let mut p = GaussianRational::one();
        for k in 0..=self.order() {
            out.coeffs[k] = self.coeffs[k].scale(&p);
            p *= c;
        }
        out
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                parts.push(format!("({c})*z^{k}"));
            }
        }
        if parts.is_empty() {
            write!(f, "0 + O(z^{})", self.order() + 1)
        } else {
            write!(f, "{} + O(z^{})", parts.join(" + "), self.order() + 1)
        }
    }
}

/// Binary series operations exposed through one entry point.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SeriesOp {
    Compose,
    Divide,
    Hadamard,
    Multiply,
    Add,
}

/// Dispatch for the series calculus; `compose` requires `g(0) = 0` and
/// `divide` requires `g(0) != 0`.
pub fn series_calculus(f: &PowerSeries, g: &PowerSeries, op: SeriesOp) -> Result<PowerSeries> {
    match op {
        SeriesOp::Compose => f.compose(g),
        SeriesOp::Divide => f.divide(g),
        SeriesOp::Hadamard => Ok(f.hadamard(g)),
        SeriesOp::Multiply => Ok(f.mul(g)),
        SeriesOp::Add => Ok(f.add(g)),
    }
}

pub fn compose(f: &PowerSeries, g: &PowerSeries) -> Result<PowerSeries> {
    f.compose(g)
}

pub fn divide(f: &PowerSeries, g: &PowerSeries) -> Result<PowerSeries> {
    f.divide(g)
}

pub fn hadamard(f: &PowerSeries, g: &PowerSeries) -> PowerSeries {
    f.hadamard(g)
}

fn factorial(n: usize) -> Rational {
    let mut f = BigInt::one();
    for k in 2..=n {
        f *= BigInt::from(k);
    }
    Rational::from_integer(f)
}

/// `sin z` truncated at `order`.
fn sin_series(order: usize) -> PowerSeries {
    let mut coeffs = vec![Rational::zero(); order + 1];
    let mut sign = Rational::one();
    let mut k = 1;
    while k <= order {
        coeffs[k] = &sign / factorial(k);
        sign = -sign;
        k += 2;
    }
    PowerSeries::from_rationals(&coeffs)
}

/// `cos z` truncated at `order`.
fn cos_series(order: usize) -> PowerSeries {
    let mut coeffs = vec![Rational::zero(); order + 1];
    let mut sign = Rational::one();
    let mut k = 0;
    while k <= order {
        coeffs[k] = &sign / factorial(k);
        sign = -sign;
        k += 2;
    }
    PowerSeries::from_rationals(&coeffs)
}

/// `tan z` truncated at `order`.
pub fn tan_series(order: usize) -> PowerSeries {
    sin_series(order)
        .divide(&cos_series(order))
        .expect("cos has constant term 1")
}

/// `arctan z` truncated at `order`.
pub fn arctan_series(order: usize) -> PowerSeries {
    let mut coeffs = vec![Rational::zero(); order + 1];
    let mut sign = Rational::one();
    let mut k = 1;
    while k <= order {
        coeffs[k] = &sign / rat(k as i64, 1);
        sign = -sign;
        k += 2;
    }
    PowerSeries::from_rationals(&coeffs)
}

/// Tangent number `T_n` with `tan z = sum T_n z^n / n!`; zero at even `n`.
pub fn tangent_number(n: usize) -> Result<Rational> {
    if n == 0 {
        return Err(Error::invalid("tangent numbers are indexed from 1"));
    }
    let t = tan_series(n);
    t.coeff(n)
        .as_rational()
        .map(|c| c * factorial(n))
        .ok_or_else(|| Error::invalid("tangent coefficient not rational"))
}

/// Arctangent number `A_n^(k)` with `(arctan z)^k / k! = sum A_n^(k) z^n / n!`.
/// Returns zero for `k > n` (every term of the power has order >= k).
pub fn arctangent_number(n: usize, k: usize) -> Result<Rational> {
    if n == 0 || k == 0 {
        return Err(Error::invalid("arctangent numbers are indexed from 1"));
    }
    if k > n {
        return Ok(Rational::zero());
    }
    let at = arctan_series(n);
    let mut p = PowerSeries::one(n);
    for _ in 0..k {
        p = p.mul(&at);
    }
    let c = p
        .coeff(n)
        .as_rational()
        .ok_or_else(|| Error::invalid("arctangent coefficient not rational"))?;
    Ok(c * factorial(n) / factorial(k))
}

#[cfg(test)]
mod tests {
    use super::super::poly::sym;
    use super::*;

    fn q(p: i64, q_: i64) -> MultiPoly {
        MultiPoly::from_rational(rat(p, q_))
    }

    #[test]
    fn hadamard_matches_definition() {
        // hadamard(z + 2z^2, 3z + 5z^2) = 3z + 10z^2
        let f = PowerSeries::from_coeffs(vec![q(0, 1), q(1, 1), q(2, 1)]);
        let g = PowerSeries::from_coeffs(vec![q(0, 1), q(3, 1), q(5, 1)]);
        let h = f.hadamard(&g);
        assert_eq!(h.coeff(1), q(3, 1));
        assert_eq!(h.coeff(2), q(10, 1));
    }

    #[test]
    fn divide_geometric() {
        // z / (1 + z^2) = z - z^3 at order 4
        let num = PowerSeries::z(4);
        let den = PowerSeries::from_coeffs(vec![q(1, 1), q(0, 1), q(1, 1), q(0, 1), q(0, 1)]);
        let r = num.divide(&den).unwrap();
        assert_eq!(r.coeff(1), q(1, 1));
        assert_eq!(r.coeff(2), MultiPoly::zero());
        assert_eq!(r.coeff(3), q(-1, 1));
        assert_eq!(r.coeff(4), MultiPoly::zero());
    }

    #[test]
    fn compose_requires_zero_constant() {
        let f = PowerSeries::one(3);
        let g = PowerSeries::one(3);
        assert!(f.compose(&g).is_err());
        assert!(f.divide(&PowerSeries::zero(3)).is_err());
    }

    #[test]
    fn tan_of_double_arctan() {
        // (2 tan(2 arctan z) - 2z) / (1 + z^2) = 2z + 2z^3 + 2z^5 + ...
        let order = 7;
        let two_at = arctan_series(order).scale(&GaussianRational::from_int(2));
        let t = tan_series(order).compose(&two_at).unwrap();
        let num = t
            .scale(&GaussianRational::from_int(2))
            .sub(&PowerSeries::z(order).scale(&GaussianRational::from_int(2)));
        let den = PowerSeries::one(order).add(&PowerSeries::z(order).mul(&PowerSeries::z(order)));
        let r = num.divide(&den).unwrap();
        for k in 0..=order {
            let expect = if k % 2 == 1 { q(2, 1) } else { MultiPoly::zero() };
            assert_eq!(r.coeff(k), expect, "coefficient of z^{k}");
        }
    }

    #[test]
    fn tangent_numbers_match_taylor_display() {
        assert_eq!(tangent_number(1).unwrap(), rat(1, 1));
        assert_eq!(tangent_number(2).unwrap(), rat(0, 1));
        assert_eq!(tangent_number(3).unwrap(), rat(2, 1));
        assert_eq!(tangent_number(5).unwrap(), rat(16, 1));
        assert_eq!(tangent_number(7).unwrap(), rat(272, 1));
    }

    #[test]
    fn arctangent_numbers() {
        assert_eq!(arctangent_number(1, 1).unwrap(), rat(1, 1));
        assert_eq!(arctangent_number(3, 1).unwrap(), rat(-2, 1));
        assert_eq!(arctangent_number(2, 2).unwrap(), rat(1, 1));
        assert_eq!(arctangent_number(4, 2).unwrap(), rat(-8, 1));
        assert_eq!(arctangent_number(4, 4).unwrap(), rat(1, 1));
        // k > n is zero by definition
        assert_eq!(arctangent_number(2, 5).unwrap(), Rational::zero());
    }

    #[test]
    fn composition_associativity() {
        let order = 9;
        let f = tan_series(order);
        let g = arctan_series(order).scale(&GaussianRational::from_int(3));
        let h = PowerSeries::z(order)
            .mul(&PowerSeries::z(order))
            .add(&PowerSeries::z(order));
        let lhs = f.compose(&g.compose(&h).unwrap()).unwrap();
        let rhs = f.compose(&g).unwrap().compose(&h).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn tan_multiple_angle_identity_over_qi() {
        // tan(n arctan z) = i((1-iz)^n - (1+iz)^n)/((1-iz)^n + (1+iz)^n)
        // as a truncated identity over Q(i), order 9, n = 2..5.
        let order = 9;
        for n in 2..=5u32 {
            let at_n = arctan_series(order).scale(&GaussianRational::from_int(n as i64));
            let lhs = tan_series(order).compose(&at_n).unwrap();

            let z = PowerSeries::z(order);
            let iz = z.scale(&GaussianRational::i());
            let one = PowerSeries::one(order);
            let mut low = one.sub(&iz); // 1 - iz
            let mut high = one.add(&iz); // 1 + iz
            let (mut lp, mut hp) = (PowerSeries::one(order), PowerSeries::one(order));
            for _ in 0..n {
                lp = lp.mul(&low);
                hp = hp.mul(&high);
            }
            low = lp;
            high = hp;
            let num = low.sub(&high).scale(&GaussianRational::i());
            let den = low.add(&high);
            let rhs = num.divide(&den).unwrap();
            assert_eq!(lhs, rhs, "multiple-angle identity failed for n={n}");
        }
    }

    #[test]
    fn series_with_symbolic_coefficients() {
        let a = sym("a");
        let f = PowerSeries::from_coeffs(vec![MultiPoly::zero(), a.clone(), MultiPoly::one()]);
        let g = f.mul(&f);
        assert_eq!(g.coeff(2), a.mul(&a));
    }
}
