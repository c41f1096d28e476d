//! The concrete laws: semicircle, free Poisson, compound free Poisson and
//! the tetilla law with its closed-form density.

use super::numeric::integrate;
use super::LawSpec;
use crate::error::{Error, Result};
use crate::exact::{rat, Rational};
use num_complex::Complex64;
use num_traits::{Signed, Zero};

/// `sqrt(11 + 5 sqrt(5))`, the stated bound on the support of the tetilla
/// law. The density itself vanishes once the inner radicand of its cube
/// roots turns negative, which happens at `sqrt((11 + 5 sqrt(5))/2)`.
pub fn tetilla_support_bound() -> f64 {
    (11.0 + 5.0 * 5f64.sqrt()).sqrt()
}

/// The Wigner semicircle law on `[-2, 2]`.
pub fn semicircle_law(order: usize) -> LawSpec {
    let mut kappa = vec![Rational::zero(); order];
    if order >= 2 {
        kappa[1] = rat(1, 1);
    }
    LawSpec {
        name: "semicircle".into(),
        kappa,
        density: Some(super::Density::Semicircle),
        support: Some((-2.0, 2.0)),
        levy_atoms: None,
    }
}

/// Density of the semicircle law.
pub fn semicircle_density(x: f64) -> f64 {
    if x.abs() >= 2.0 {
        0.0
    } else {
        (4.0 - x * x).sqrt() / (2.0 * std::f64::consts::PI)
    }
}

/// Cauchy transform `G(z) = (z - sqrt(z^2 - 4))/2` with the branch fixed by
/// `Im z > 0 => Im G <= 0`. Rejected on the real axis inside the support,
/// where the branch is undefined.
pub fn semicircle_cauchy(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && z.re.abs() < 2.0 {
        return Err(Error::invalid(
            "Cauchy transform undefined on the real axis inside the support",
        ));
    }
    // sqrt(z^2 - 4) = z sqrt(1 - 4/z^2), principal branch of the right factor
    let s = z * (Complex64::new(1.0, 0.0) - 4.0 / (z * z)).sqrt();
    Ok((z - s) / 2.0)
}

/// Free Poisson (Marchenko-Pastur) of rate `lambda`: `K_n = lambda`.
pub fn free_poisson(lambda: Rational, order: usize) -> Result<LawSpec> {
    if !lambda.is_positive() {
        return Err(Error::invalid("rate must be positive"));
    }
    Ok(LawSpec {
        name: format!("free-poisson({})", crate::exact::render_rational(&lambda)),
        kappa: vec![lambda; order],
        density: None,
        support: None,
        levy_atoms: None,
    })
}

/// Compound free Poisson of rate `lambda` with an atomic jump distribution:
/// `K_n = lambda sum_j w_j x_j^n`.
pub fn compound_free_poisson(
    lambda: Rational,
    atoms: &[(Rational, Rational)],
    order: usize,
) -> Result<LawSpec> {
    if !lambda.is_positive() {
        return Err(Error::invalid("rate must be positive"));
    }
    if atoms.is_empty() {
        return Err(Error::invalid("jump distribution needs at least one atom"));
    }
    let total: Rational = atoms.iter().map(|(_, w)| w.clone()).sum();
    if atoms.iter().any(|(_, w)| !w.is_positive()) || total != rat(1, 1) {
        return Err(Error::invalid(
            "atom weights must be positive and sum to one",
        ));
    }
    let mut kappa = Vec::with_capacity(order);
    for n in 1..=order {
        let mut m = Rational::zero();
        for (x, w) in atoms {
            let mut p = Rational::from_integer(1.into());
            for _ in 0..n {
                p *= x;
            }
            m += w * p;
        }
        kappa.push(&lambda * m);
    }
    Ok(LawSpec {
        name: "compound-free-poisson".into(),
        kappa,
        density: None,
        support: None,
        levy_atoms: Some(
            atoms
                .iter()
                .map(|(x, w)| {
                    (
                        super::numeric::rational_to_f64(x),
                        super::numeric::rational_to_f64(w),
                    )
                })
                .collect(),
        ),
    })
}

/// The tetilla law: the law of `i(XY - YX)` for free standard semicircular
/// `X`, `Y`. Realized as the compound free Poisson with rate 2 and jump
/// distribution `(delta_{-1} + delta_1)/2`, so `K_{2m} = 2`.
pub fn tetilla_law(order: usize) -> LawSpec {
    let mut law = compound_free_poisson(
        rat(2, 1),
        &[(rat(-1, 1), rat(1, 2)), (rat(1, 1), rat(1, 2))],
        order,
    )
    .expect("valid parameters");
    law.name = "tetilla".into();
    let b = tetilla_support_bound();
    law.density = Some(super::Density::Tetilla);
    law.support = Some((-b, b));
    law
}

/// Closed-form density of the tetilla law, evaluated with real odd cube
/// roots. Zero wherever the inner square-root radicand
/// `3x^2 + 33x^4 - 3x^6` is negative (beyond `sqrt((11+5 sqrt 5)/2)`) and
/// extended by its limit `1/pi` at the origin.
pub fn tetilla_density(x: f64) -> f64 {
    if x == 0.0 {
        return std::f64::consts::FRAC_1_PI;
    }
    let x2 = x * x;
    let d = 3.0 * x2 + 33.0 * x2 * x2 - 3.0 * x2 * x2 * x2;
    if d < 0.0 {
        return 0.0;
    }
    let s = d.sqrt();
    let base = 1.0 + 18.0 * x2;
    let u = base + 3.0 * s;
    let v = base - 3.0 * s;
    let bracket = u.cbrt() - v.cbrt();
    bracket / (2.0 * 3f64.sqrt() * std::f64::consts::PI * x.abs())
}

/// Numeric moment of the tetilla density by adaptive quadrature.
pub fn tetilla_density_moment(r: u32, tol: f64) -> f64 {
    let b = tetilla_support_bound();
    integrate(&|x: f64| x.powi(r as i32) * tetilla_density(x), -b, b, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn semicircle_moments_are_catalan() {
        let law = semicircle_law(8);
        let m = law.moments(8).unwrap();
        let vals: Vec<String> = m.iter().map(crate::exact::render_rational).collect();
        assert_eq!(vals, ["0", "1", "0", "2", "0", "5", "0", "14"]);
    }

    #[test]
    fn semicircle_density_integrates_to_one() {
        let i = integrate(&semicircle_density, -2.0, 2.0, 1e-10);
        assert!((i - 1.0).abs() < 1e-8, "integral = {i}");
        let m2 = integrate(&|x: f64| x * x * semicircle_density(x), -2.0, 2.0, 1e-10);
        assert!((m2 - 1.0).abs() < 1e-7);
    }

    #[test]
    fn cauchy_transform_branch_and_equation() {
        for z in [Complex64::new(3.0, 1.0), Complex64::new(0.0, 2.0)] {
            let g = semicircle_cauchy(z).unwrap();
            let residual = g * g - z * g + Complex64::new(1.0, 0.0);
            assert!(residual.norm() < 1e-12);
            assert!(g.im <= 0.0);
        }
        assert!(semicircle_cauchy(Complex64::new(0.5, 0.0)).is_err());
        // outside the support the transform is real
        let g = semicircle_cauchy(Complex64::new(3.0, 0.0)).unwrap();
        assert!(g.im.abs() < 1e-14);
    }

    #[test]
    fn poisson_cumulants() {
        let p = free_poisson(rat(1, 1), 6).unwrap();
        assert!(p.kappa.iter().all(|k| *k == rat(1, 1)));
        let m = p.moments(2).unwrap();
        assert_eq!(m[0], rat(1, 1));
        assert_eq!(m[1], rat(2, 1)); // lambda + lambda^2
        assert!(free_poisson(rat(0, 1), 3).is_err());

        let trivial = compound_free_poisson(rat(5, 1), &[(rat(0, 1), rat(1, 1))], 5).unwrap();
        assert!(trivial.kappa.iter().all(|k| k.is_zero()));
    }

    #[test]
    fn tetilla_is_compound_poisson_rate_two() {
        let t = tetilla_law(8);
        let expect: Vec<Rational> = (1..=8)
            .map(|n| if n % 2 == 0 { rat(2, 1) } else { rat(0, 1) })
            .collect();
        assert_eq!(t.kappa, expect);
        assert_eq!(t.levy_atoms.as_deref(), Some(&[(-1.0, 0.5), (1.0, 0.5)][..]));
    }

    #[test]
    fn tetilla_density_symmetry_and_support() {
        for x in [0.3, 1.1, 2.7, 3.1] {
            assert!((tetilla_density(x) - tetilla_density(-x)).abs() < 1e-15);
            assert!(tetilla_density(x) > 0.0);
        }
        // vanishes beyond the radicand root
        let inner = ((11.0 + 5.0 * 5f64.sqrt()) / 2.0).sqrt();
        assert_eq!(tetilla_density(inner + 1e-6), 0.0);
        assert!(tetilla_density(inner - 1e-3) > 0.0);
        assert!((tetilla_support_bound() - 4.709_600_820_398_577).abs() < 1e-12);
    }

    #[test]
    fn tetilla_density_moments() {
        let i0 = tetilla_density_moment(0, 1e-10);
        assert!((i0 - 1.0).abs() < 1e-6, "integral = {i0}");
        let m2 = tetilla_density_moment(2, 1e-10);
        assert!((m2 - 2.0).abs() < 1e-4, "m2 = {m2}");
        let m4 = tetilla_density_moment(4, 1e-10);
        assert!((m4 - 10.0).abs() < 1e-4, "m4 = {m4}");
        let m6 = tetilla_density_moment(6, 1e-10);
        assert!((m6 - 66.0).abs() < 1e-4, "m6 = {m6}");
    }
}
