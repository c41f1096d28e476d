//! Property tests for the algebraic invariants: field/ring axioms on random
//! samples, conversion round trips, and the lattice/involution symmetries.

use freecomm::exact::{rat, GaussianRational, MultiPoly, Rational};
use freecomm::freecalc::{cumulants_from_moments, moments_from_cumulants};
use freecomm::involution::psi;
use freecomm::ncpart::{enumerate_nc, upper_complements, NcFilter, SetPartition, UpperComplementKind};
use proptest::prelude::*;
use std::sync::OnceLock;

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-200i64..200, 1i64..60).prop_map(|(p, q)| rat(p, q))
}

fn arb_gaussian() -> impl Strategy<Value = GaussianRational> {
    (arb_rational(), arb_rational()).prop_map(|(re, im)| GaussianRational::new(re, im))
}

/// Random polynomial in the fixed variables `u`, `v` with small support.
fn arb_poly() -> impl Strategy<Value = MultiPoly> {
    proptest::collection::vec((arb_gaussian(), 0u32..3, 0u32..3), 0..5).prop_map(|terms| {
        let u = freecomm::exact::sym("u");
        let v = freecomm::exact::sym("v");
        let mut out = MultiPoly::zero();
        for (c, eu, ev) in terms {
            out = out.add(&u.pow(eu).mul(&v.pow(ev)).scale(&c));
        }
        out
    })
}

proptest! {
    #[test]
    fn gaussian_rationals_form_a_field(a in arb_gaussian(), b in arb_gaussian(), c in arb_gaussian()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(a.conj().conj(), a.clone());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inverse().unwrap(), GaussianRational::one());
        }
    }

    #[test]
    fn polynomials_form_a_commutative_ring(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
        prop_assert!(p.sub(&p).is_zero());
        // conjugation is a ring involution
        prop_assert_eq!(p.mul(&q).conj(), p.conj().mul(&q.conj()));
    }

    #[test]
    fn moment_cumulant_round_trip(vals in proptest::collection::vec(arb_rational(), 1..8)) {
        let kappa: Vec<MultiPoly> = vals.iter().cloned().map(MultiPoly::from_rational).collect();
        let order = kappa.len();
        let m = moments_from_cumulants(&kappa, order).unwrap();
        prop_assert_eq!(cumulants_from_moments(&m, order).unwrap(), kappa);
    }

    #[test]
    fn partition_text_round_trips(rgs in proptest::collection::vec(0usize..5, 1..9)) {
        // restricted-growth normalization makes any vector a partition
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut labels: Vec<usize> = Vec::new();
        for (i, &raw) in rgs.iter().enumerate() {
            let label = raw.min(labels.len());
            if label == labels.len() {
                labels.push(label);
                blocks.push(Vec::new());
            }
            blocks[label].push(i + 1);
        }
        let p = SetPartition::new(rgs.len(), blocks).unwrap();
        prop_assert_eq!(SetPartition::parse(&p.to_string()).unwrap(), p.clone());
        prop_assert_eq!(SetPartition::parse(&p.to_block_indices()).unwrap(), p);
    }

    #[test]
    fn kreweras_complements_are_mutually_inverse((n, pick) in (1usize..8).prop_flat_map(|n| (Just(n), 0usize..10_000)) ) {
        static CACHE: OnceLock<Vec<Vec<SetPartition>>> = OnceLock::new();
        let all = CACHE.get_or_init(|| {
            (0..8)
                .map(|n| if n == 0 { Vec::new() } else { enumerate_nc(n, NcFilter::All).unwrap() })
                .collect()
        });
        let list = &all[n];
        let p = &list[pick % list.len()];
        let right = p.kreweras_right().unwrap();
        prop_assert_eq!(&right.kreweras_left().unwrap(), p);
        prop_assert_eq!(right.size(), n + 1 - p.size());
        prop_assert!(right.is_noncrossing());
    }

    #[test]
    fn involution_is_involutive((r, pick) in (2usize..5).prop_flat_map(|r| (Just(r), 0usize..10_000))) {
        static CACHE: OnceLock<Vec<Vec<SetPartition>>> = OnceLock::new();
        let all = CACHE.get_or_init(|| {
            (0..5)
                .map(|r| {
                    if r < 2 {
                        Vec::new()
                    } else {
                        upper_complements(r, UpperComplementKind::Odd).unwrap()
                    }
                })
                .collect()
        });
        let list = &all[r];
        let p = &list[pick % list.len()];
        let q = psi(p).unwrap();
        prop_assert_eq!(&psi(&q).unwrap(), p);
        prop_assert_eq!(q.block_sizes(), p.block_sizes());
    }
}
