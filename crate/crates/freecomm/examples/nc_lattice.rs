//! Tour of the noncrossing lattice: enumeration, Kreweras complements,
//! meet/join, and the interval isomorphism behind the even-partition sums.

use freecomm::ncpart::{
    catalan, enumerate_nc, interval_iso_down, interval_iso_up, nu0, standard_matching,
    upper_complements, NcFilter, SetPartition, UpperComplementKind,
};

fn main() -> freecomm::Result<()> {
    for n in 1..=8 {
        let count = enumerate_nc(n, NcFilter::All)?.len();
        assert_eq!(count as u64, catalan(n));
        println!("|NC({n})| = {count}");
    }

    println!("\nNC(4), even blocks only:");
    for p in enumerate_nc(4, NcFilter::Even)? {
        println!("  {p}");
    }

    let p = SetPartition::parse("{(1,2),(3)}")?;
    let right = p.kreweras_right()?;
    println!("\nright Kreweras complement of {p} is {right}");
    println!("sizes: |p| = {}, |K(p)| = {} (sum = n + 1)", p.size(), right.size());
    assert_eq!(right.kreweras_left()?, p);

    let a = SetPartition::parse("{(1,2),(3),(4)}")?;
    let q = SetPartition::parse("{(1,4),(2,3)}")?;
    println!("join of {a} and {q} in NC(4): {}", a.join_nc(&q)?);
    println!("meet: {}", a.meet(&q)?);

    let matching = standard_matching(3);
    println!("\nstandard matching on [6]: {matching}");
    println!("its shift nu_0: {}", nu0(3));
    let c6 = upper_complements(3, UpperComplementKind::All)?;
    let even = upper_complements(3, UpperComplementKind::Even)?.len();
    println!(
        "upper complements C_6: {} members, {} even, {} odd",
        c6.len(),
        even,
        c6.len() - even
    );

    // the even ones are the image of NC(3) under the pair-class merge
    for tau in enumerate_nc(3, NcFilter::All)? {
        let up = interval_iso_up(&tau, 3)?;
        assert_eq!(interval_iso_down(&up, 3)?, tau);
        println!("  {tau}  <->  {up}");
    }
    Ok(())
}
