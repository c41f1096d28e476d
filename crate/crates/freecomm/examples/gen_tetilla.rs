//! Generalized tetilla laws: three independent cumulant routes, cotangent
//! Levy atoms, and the Hankel test for free infinite divisibility.

use freecomm::exact::render_rational;
use freecomm::laws::gen_tetilla;

fn main() -> freecomm::Result<()> {
    for n in 2..=5 {
        let (law, report) = gen_tetilla(n, 10)?;
        let evens: Vec<String> = (1..=5)
            .map(|m| render_rational(&law.kappa[2 * m - 1]))
            .collect();
        println!("{}:", law.name);
        println!("  K_2, K_4, ..., K_10 = {}", evens.join(", "));
        println!(
            "  Levy atoms: {:?}",
            law.levy_atoms
                .as_ref()
                .map(|a| a.iter().map(|(x, _)| (x * 1e6).round() / 1e6).collect::<Vec<_>>())
        );
        println!(
            "  atom moment defect {:.2e}, routes agree: {}",
            report.atom_moment_error, report.routes_agree
        );
        let fid = law.fid_check(4)?;
        println!(
            "  Hankel determinants {:?} -> {:?}",
            fid.determinants.iter().map(render_rational).collect::<Vec<_>>(),
            fid.verdict
        );
    }
    Ok(())
}
