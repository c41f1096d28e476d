//! Gaussian rationals: the field `Q(i)` with exact arithmetic.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// Arbitrary-precision rational, always reduced, denominator positive.
pub type Rational = BigRational;

/// Shorthand for a rational from machine integers.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Rational from big integers.
pub fn rat_big(p: BigInt, q: BigInt) -> Rational {
    Rational::new(p, q)
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn render_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let p: BigInt = num
        .trim()
        .parse()
        .map_err(|_| Error::invalid(format!("bad rational {s:?}")))?;
    let q: BigInt = den
        .trim()
        .parse()
        .map_err(|_| Error::invalid(format!("bad rational {s:?}")))?;
    if q.is_zero() {
        return Err(Error::invalid("zero denominator"));
    }
    Ok(Rational::new(p, q))
}

/// An element of `Q(i)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussianRational {
            re,
            im: Rational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n, 1))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// Squared modulus `re^2 + im^2`.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::invalid("division by zero in Q(i)"));
        }
        let n = self.norm_sqr();
        Ok(GaussianRational {
            re: &self.re / &n,
            im: -&self.im / &n,
        })
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn to_f64(&self) -> (f64, f64) {
        fn f(r: &Rational) -> f64 {
            let n: f64 = r.numer().to_string().parse().unwrap_or(f64::NAN);
            let d: f64 = r.denom().to_string().parse().unwrap_or(f64::NAN);
            n / d
        }
        (f(&self.re), f(&self.im))
    }
}

impl fmt::Display for GaussianRational {
    /// Canonical form: `p/q` when real, `r/s*I` when purely imaginary,
    /// `p/q+r/s*I` (or `-`) otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", render_rational(&self.re));
        }
        let im_str = if self.im.abs() == Rational::one() {
            "I".to_string()
        } else {
            format!("{}*I", render_rational(&self.im.abs()))
        };
        if self.re.is_zero() {
            if self.im.is_negative() {
                write!(f, "-{im_str}")
            } else {
                write!(f, "{im_str}")
            }
        } else {
            let sign = if self.im.is_negative() { '-' } else { '+' };
            write!(f, "{}{}{}", render_rational(&self.re), sign, im_str)
        }
    }
}

/// Parse `p/q`, `r/s*I`, `I`, `-I` or `p/q+r/s*I` (also with `-`).
pub fn parse_gaussian(s: &str) -> Result<GaussianRational> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::invalid("empty Q(i) literal"));
    }
    // split at the last +/- that is not the leading sign
    let bytes = s.as_bytes();
    let mut split = None;
    for k in (1..bytes.len()).rev() {
        if (bytes[k] == b'+' || bytes[k] == b'-') && bytes[k - 1] != b'e' && bytes[k - 1] != b'E' {
            split = Some(k);
            break;
        }
    }
    let parse_part = |part: &str| -> Result<(Rational, bool)> {
        // returns (value, is_imaginary)
        if let Some(core) = part.strip_suffix("*I").or_else(|| part.strip_suffix("I")) {
            let v = if core.is_empty() || core == "+" {
                Rational::one()
            } else if core == "-" {
                -Rational::one()
            } else {
                parse_rational(core)?
            };
            Ok((v, true))
        } else {
            Ok((parse_rational(part)?, false))
        }
    };
    let mut out = GaussianRational::zero();
    let parts: Vec<String> = match split {
        Some(k) if s.contains('I') && k > 0 => vec![s[..k].to_string(), s[k..].to_string()],
        _ => vec![s.clone()],
    };
    for p in &parts {
        let (v, imag) = parse_part(p)?;
        if imag {
            out.im += v;
        } else {
            out.re += v;
        }
    }
    Ok(out)
}

macro_rules! forward_ref_binop {
    ($imp:ident, $method:ident) => {
        impl $imp for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
        impl $imp<&GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$method(rhs)
            }
        }
    };
}

impl Add<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

forward_ref_binop!(Add, add);
forward_ref_binop!(Sub, sub);
forward_ref_binop!(Mul, mul);

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

impl Div<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self * &rhs.inverse().expect("division by zero in Q(i)")
    }
}

forward_ref_binop!(Div, div);

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_on_samples() {
        let samples = [
            GaussianRational::new(rat(3, 2), rat(-1, 5)),
            GaussianRational::i(),
            GaussianRational::new(rat(-7, 3), rat(11, 4)),
            GaussianRational::from_int(2),
        ];
        for a in &samples {
            for b in &samples {
                for c in &samples {
                    assert_eq!(&(a * b) * c, a * &(b * c));
                    assert_eq!(a * &(b + c), &(a * b) + &(a * c));
                    assert_eq!(a + b, b + a);
                }
                assert_eq!(a * b, b * a);
            }
            if !a.is_zero() {
                assert_eq!(a * &a.inverse().unwrap(), GaussianRational::one());
            }
            assert_eq!(a.conj().conj(), *a);
        }
        let i = GaussianRational::i();
        assert_eq!(&i * &i, GaussianRational::from_int(-1));
    }

    #[test]
    fn render_and_parse_round_trip() {
        let vals = [
            GaussianRational::from_int(0),
            GaussianRational::from_int(-5),
            GaussianRational::new(rat(1, 2), rat(0, 1)),
            GaussianRational::new(rat(0, 1), rat(-3, 4)),
            GaussianRational::new(rat(2, 7), rat(5, 3)),
            GaussianRational::new(rat(-1, 1), rat(-1, 1)),
            GaussianRational::i(),
        ];
        for v in &vals {
            let s = v.to_string();
            let back = parse_gaussian(&s).unwrap();
            assert_eq!(&back, v, "round trip through {s:?}");
        }
        assert_eq!(parse_gaussian("0+1*I").unwrap(), GaussianRational::i());
        assert_eq!(parse_gaussian("-I").unwrap(), -GaussianRational::i());
    }
}
