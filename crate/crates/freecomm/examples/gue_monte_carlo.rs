//! GUE cross-check at small scale: empirical trace moments of the
//! commutator model against the exact tetilla prediction.

use freecomm::laws::gen_tetilla;
use freecomm::rmt::{compare_with_prediction, MatrixModel};

fn main() -> freecomm::Result<()> {
    let model = MatrixModel::commutator(2, 200, 42)?;
    let (law, _) = gen_tetilla(2, 8)?;
    let report = compare_with_prediction(&model, &law, 4, 10, 4.0)?;
    println!(
        "commutator model, N = {}, {} trials, seed {}:",
        report.dim, report.trials, report.seed
    );
    for row in &report.rows {
        println!(
            "  m_{}: empirical {:>8.4}  exact {:>4.1}  stderr {:.4}  z = {:+.2}  {}",
            row.order,
            row.empirical,
            row.exact,
            row.stderr,
            row.z_score,
            if row.pass { "ok" } else { "OFF" },
        );
    }
    println!("overall: {}", if report.pass { "PASS" } else { "FAIL" });

    let model3 = MatrixModel::commutator(3, 200, 7)?;
    let (law3, _) = gen_tetilla(3, 8)?;
    let report3 = compare_with_prediction(&model3, &law3, 4, 10, 4.0)?;
    println!(
        "\nthree-variable model vs gen-tetilla(3): {}",
        if report3.pass { "PASS" } else { "FAIL" }
    );
    Ok(())
}
