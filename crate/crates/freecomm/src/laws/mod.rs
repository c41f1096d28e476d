//! Concrete distributions: semicircle, free Poisson, tetilla and
//! generalized tetilla laws, dilations, and the decomposition of free
//! skew-symmetric laws into dilated tetilla factors.

mod classic;
mod decompose;
mod gen_tetilla;
pub(crate) mod numeric;
pub use classic::{
    compound_free_poisson, free_poisson, semicircle_cauchy, semicircle_density, semicircle_law,
    tetilla_density, tetilla_density_moment, tetilla_law, tetilla_support_bound,
};
pub use decompose::{skew_law_decompose, CompoundRestatement, DecompositionReport};
pub use gen_tetilla::{cotangent_atoms, gen_tetilla, GenTetillaReport};
pub use numeric::integrate;

use crate::error::{Error, Result};
use crate::exact::{render_rational, MultiPoly, Rational};
use num_traits::Zero;
use serde::Serialize;

/// Which closed-form density a law carries.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Density {
    Semicircle,
    Tetilla,
}

impl Density {
    pub fn eval(self, x: f64) -> f64 {
        match self {
            Density::Semicircle => semicircle_density(x),
            Density::Tetilla => tetilla_density(x),
        }
    }
}

/// A named distribution: exact cumulant sequence plus optional density and
/// atomic Levy data.
#[derive(Clone, Debug, Serialize)]
pub struct LawSpec {
    pub name: String,
    /// `kappa[k]` is `K_{k+1}`, exact.
    #[serde(serialize_with = "ser_kappa")]
    pub kappa: Vec<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub density: Option<Density>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub support: Option<(f64, f64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub levy_atoms: Option<Vec<(f64, f64)>>,
}

fn ser_kappa<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for r in v {
        seq.serialize_element(&render_rational(r))?;
    }
    seq.end()
}

impl LawSpec {
    /// Exact moments from the cumulant sequence.
    pub fn moments(&self, order: usize) -> Result<Vec<Rational>> {
        let polys: Vec<MultiPoly> = self
            .kappa
            .iter()
            .map(|k| MultiPoly::from_rational(k.clone()))
            .collect();
        crate::freecalc::moments_from_cumulants(&polys, order)?
            .into_iter()
            .map(|p| {
                p.as_rational()
                    .ok_or_else(|| Error::invalid("moments of a numeric law must be rational"))
            })
            .collect()
    }

    /// Hankel FID verdict at the given depth.
    pub fn fid_check(&self, depth: usize) -> Result<crate::freecalc::HankelReport> {
        crate::freecalc::fid_hankel_check(&self.kappa, depth)
    }

    /// Dilation by a rational scale: `K_n -> s^n K_n`. Scale zero is the
    /// point mass at the origin.
    pub fn dilate(&self, s: &Rational) -> LawSpec {
        let mut p = Rational::from_integer(1.into());
        let kappa = self
            .kappa
            .iter()
            .map(|k| {
                p *= s;
                k * &p
            })
            .collect();
        LawSpec {
            name: format!("dilated({})", self.name),
            kappa,
            density: None,
            support: None,
            levy_atoms: None,
        }
    }

    /// Dilation by `sqrt(s2)` for even laws: `K_{2m} -> s2^m K_{2m}`.
    /// Rejected when an odd cumulant is nonzero (the scale would leave the
    /// rationals).
    pub fn dilate_sqrt(&self, s2: &Rational) -> Result<LawSpec> {
        if self
            .kappa
            .iter()
            .enumerate()
            .any(|(k, v)| (k + 1) % 2 == 1 && !v.is_zero())
        {
            return Err(Error::invalid(
                "square-root dilation needs an even cumulant sequence",
            ));
        }
        let mut p = Rational::from_integer(1.into());
        let kappa = self
            .kappa
            .iter()
            .enumerate()
            .map(|(k, v)| {
                if (k + 1) % 2 == 0 {
                    p *= s2;
                    v * &p
                } else {
                    Rational::zero()
                }
            })
            .collect();
        let s = numeric::rational_to_f64(s2).sqrt();
        Ok(LawSpec {
            name: format!("dilated({})", self.name),
            kappa,
            density: None,
            support: self.support.map(|(a, b)| (a * s, b * s)),
            levy_atoms: self
                .levy_atoms
                .as_ref()
                .map(|atoms| atoms.iter().map(|&(x, w)| (x * s, w)).collect()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn dilation_scales_cumulants() {
        let t = tetilla_law(10);
        let d = t.dilate(&rat(1, 1));
        assert_eq!(d.kappa, t.kappa);
        let z = t.dilate(&rat(0, 1));
        assert!(z.kappa.iter().all(|k| k.is_zero()));
        // D_{sqrt 3}(T_2) has the cumulants of the three-degree law
        let d3 = t.dilate_sqrt(&rat(3, 1)).unwrap();
        let (g3, _) = gen_tetilla(3, 10).unwrap();
        assert_eq!(d3.kappa, g3.kappa);
    }

    #[test]
    fn sqrt_dilation_needs_even_law() {
        let p = free_poisson(rat(1, 1), 6).unwrap();
        assert!(p.dilate_sqrt(&rat(2, 1)).is_err());
    }

    #[test]
    fn law_serialization_uses_exact_strings() {
        let t = tetilla_law(4);
        let json = serde_json::to_value(&t).unwrap();
        assert_eq!(json["kappa"][1], "2");
        assert_eq!(json["density"], "tetilla");
    }
}
