//! The symbolic cumulant table of T_2 = a_12 X_1 X_2 + a_21 X_2 X_1 with
//! mean-one semicircular arguments, its Hankel determinants, and the
//! failure of free infinite divisibility once the real part is nonzero.

use freecomm::exact::rat;
use freecomm::freecalc::fid_hankel_check;
use freecomm::quadform::{t2_commutator_table, T2Table};

fn main() -> freecomm::Result<()> {
    let table = t2_commutator_table(8)?;
    println!("cumulants of T_2 with a_12 = a + ib:");
    for (k, c) in table.cumulants.iter().enumerate() {
        println!("  K{} = {c}", k + 1);
    }
    println!("\nHankel determinants:");
    for (m, h) in &table.hankels {
        println!("  h{m} = {h}");
    }

    // at a = 1, b = 0 the sequence is not conditionally positive definite
    let kappa: Vec<_> = table
        .cumulants
        .iter()
        .map(|p| T2Table::eval_at(p, rat(1, 1), rat(0, 1)).re)
        .collect();
    let rep = fid_hankel_check(&kappa, 4)?;
    println!("\nspecialization a = 1, b = 0: determinants {:?}", rep.determinants.iter().map(freecomm::exact::render_rational).collect::<Vec<_>>());
    println!("verdict: {:?}", rep.verdict);

    // purely imaginary a_12 (a = 0) keeps everything nonnegative
    let kappa_imag: Vec<_> = table
        .cumulants
        .iter()
        .map(|p| T2Table::eval_at(p, rat(0, 1), rat(1, 1)).re)
        .collect();
    let rep = fid_hankel_check(&kappa_imag, 4)?;
    println!(
        "specialization a = 0, b = 1 (the tetilla): verdict {:?}, determinants {:?}",
        rep.verdict,
        rep.determinants.iter().map(freecomm::exact::render_rational).collect::<Vec<_>>()
    );
    Ok(())
}
