//! The tetilla density: pointwise values, quadrature moments against the
//! exact cumulants, and the support data.

use freecomm::laws::{tetilla_density, tetilla_density_moment, tetilla_law, tetilla_support_bound};

fn main() -> freecomm::Result<()> {
    println!("density of i(XY - YX) for free standard semicirculars:");
    let law = tetilla_law(6);
    let density = law.density.expect("tetilla carries a density");
    for x in [0.0, 0.5, 1.0, 2.0, 3.0, 3.3] {
        assert_eq!(density.eval(x), tetilla_density(x));
        println!("  f({x:>4}) = {:.9}", tetilla_density(x));
    }
    println!("stated support bound: {:.12}", tetilla_support_bound());
    println!(
        "density vanishes beyond {:.12} (where the inner radicand turns negative)",
        ((11.0 + 5.0 * 5f64.sqrt()) / 2.0).sqrt()
    );

    println!("\nquadrature vs exact moments:");
    let exact = law.moments(6)?;
    for (r, target) in [(0u32, "1".to_string())]
        .into_iter()
        .chain([(2u32, 2), (4, 4), (6, 6)].map(|(r, k)| (r, freecomm::exact::render_rational(&exact[k - 1]))))
    {
        let num = tetilla_density_moment(r, 1e-10);
        println!("  m_{r}: {num:.8}  (exact {target})");
    }
    Ok(())
}
