//! Free skew-symmetric laws decompose as free convolutions of dilated
//! tetilla laws; the scales are the nonnegative eigenvalues of the system
//! matrix.

use freecomm::exact::{rat, standard_skew_matrix, ExactMatrix, GaussianRational, MultiPoly};
use freecomm::laws::{gen_tetilla, skew_law_decompose, tetilla_law};

fn main() -> freecomm::Result<()> {
    let rep = skew_law_decompose(&standard_skew_matrix(3))?;
    println!("A_3: charpoly {}", rep.charpoly);
    println!("  scales {:?}", rep.scales);
    println!("  tetilla components {:?}", rep.tetilla_components);
    println!("  compound restatement: rate {}, atoms {:?}", rep.compound.rate, rep.compound.atoms);

    // cumulant-level identity T_3 = D_{sqrt 3}(T_2)
    let d = tetilla_law(10).dilate_sqrt(&rat(3, 1))?;
    let (t3, _) = gen_tetilla(3, 10)?;
    assert_eq!(d.kappa, t3.kappa);
    println!("\nT_3 = D_sqrt3(T_2) holds exactly at cumulant level");

    // a block matrix with scales 2 and 1
    let mut sigma = ExactMatrix::zero(4);
    for (k, l) in [(0usize, 1i64), (2, 2)] {
        let v = MultiPoly::i().scale(&GaussianRational::from_int(l));
        sigma.set(k, k + 1, v.clone());
        sigma.set(k + 1, k, v.neg());
    }
    let rep = skew_law_decompose(&sigma)?;
    println!("\nblock matrix: scales {:?}", rep.scales);
    println!("  additivity defect {:.2e}", rep.additivity_max_error);
    Ok(())
}
