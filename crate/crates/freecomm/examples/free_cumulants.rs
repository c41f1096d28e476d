//! Free-cumulant calculus: moment/cumulant conversion, mixed moments of
//! free semicirculars, the product formula, and boxed convolution.

use freecomm::exact::MultiPoly;
use freecomm::freecalc::{
    boxed_convolution, cumulants_from_moments, identity_series, mixed_moment, moebius_series,
    moments_from_cumulants, poly_cumulant, product_cumulant, zeta_series, CumulantSpec,
    ExpansionMode, FreeFamily, NCPolynomial,
};

fn main() -> freecomm::Result<()> {
    // semicircle: K = (0, 1, 0, 0, ...) gives the Catalan moments
    let kappa: Vec<MultiPoly> = [0, 1, 0, 0, 0, 0, 0, 0]
        .iter()
        .map(|&k| MultiPoly::from_int(k))
        .collect();
    let moments = moments_from_cumulants(&kappa, 8)?;
    println!(
        "semicircle moments: {}",
        moments.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(", ")
    );
    assert_eq!(cumulants_from_moments(&moments, 8)?, kappa);

    let fam = FreeFamily::new()
        .with(CumulantSpec::standard_semicircular("X"))
        .with(CumulantSpec::standard_semicircular("Y"));
    println!("\nmixed moments of free standard semicirculars:");
    for word in [["X", "Y", "X", "Y"], ["X", "Y", "Y", "X"], ["X", "X", "X", "X"]] {
        println!("  tau({}) = {}", word.join(""), mixed_moment(&word, &fam)?);
    }

    // product formula: K_2(XY, YX) keeps only the nested pairing
    let k2 = product_cumulant(&[2, 2], &["X", "Y", "Y", "X"], &fam)?;
    println!("\nK_2(XY, YX) = {k2}");

    // the commutator i(XY - YX) has the tetilla cumulants
    let c = NCPolynomial::i_commutator("X", "Y");
    for r in 1..=6 {
        let k = poly_cumulant(&c, &fam, r, ExpansionMode::Numeric)?;
        println!("K_{r}(i[X,Y]) = {k}");
    }

    // zeta and Moebius series invert each other under boxed convolution
    let z = zeta_series(2, 5);
    let m = moebius_series(2, 5);
    assert_eq!(boxed_convolution(&z, &m)?, identity_series(2, 5));
    println!("\nzeta (x) Moebius = identity series, checked to order 5");

    // lazy symbolic sequences survive in the output
    let symfam = FreeFamily::new()
        .with(CumulantSpec::standard_semicircular("X"))
        .with(CumulantSpec::standard_semicircular("Y"))
        .with(CumulantSpec::symbolic("Z"));
    let wrapped = NCPolynomial::commutator(&NCPolynomial::variable("X"), &NCPolynomial::variable("Y"))
        .mul(&NCPolynomial::variable("Z"))
        .mul(&NCPolynomial::commutator(
            &NCPolynomial::variable("X"),
            &NCPolynomial::variable("Y"),
        ));
    let k1 = poly_cumulant(&wrapped, &symfam, 1, ExpansionMode::Numeric)?;
    println!("K_1([X,Y] Z [X,Y]) = {k1}  (the odd cumulants of Z do not cancel)");
    Ok(())
}
