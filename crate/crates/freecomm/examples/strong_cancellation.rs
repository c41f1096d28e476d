//! Strong cancellation of odd cumulants: with a skew-symmetric system
//! matrix the odd upper complements cancel pairwise with no freeness
//! assumption; a symmetric perturbation breaks the cancellation.

use freecomm::quadform::{
    strong_cancellation_check, symbolic_skew_matrix, symmetric_perturbation,
};

fn main() -> freecomm::Result<()> {
    for (n, r) in [(2usize, 2usize), (2, 3), (3, 2), (3, 3)] {
        let rep = strong_cancellation_check(&symbolic_skew_matrix(n), r)?;
        println!(
            "n = {n}, order {r}: odd residual {} (pairing via {}, {} pairs), even part has {} terms",
            if rep.verdict { "= 0" } else { "NONZERO" },
            rep.pairing_source,
            rep.pairs,
            rep.even_part.num_terms(),
        );
        assert!(rep.verdict);
    }

    let perturbed = symmetric_perturbation(&symbolic_skew_matrix(2));
    let rep = strong_cancellation_check(&perturbed, 2)?;
    println!("\nwith a symmetric perturbation y at (1,2)/(2,1):");
    println!("  residual = {}", rep.residual);
    assert!(!rep.verdict);
    Ok(())
}
