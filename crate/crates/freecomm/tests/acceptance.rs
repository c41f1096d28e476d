//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! with the measured values (`--nocapture` shows them; the test name itself
//! is the criterion line in the default harness output).

use freecomm::exact::{
    rat, standard_skew_matrix, sym, ExactMatrix, GaussianRational, MultiPoly, Rational, Var,
};
use freecomm::freecalc::{
    fid_hankel_check, poly_cumulant, CumulantSpec, ExpansionMode, FidVerdict, FreeFamily,
    KappaDefault, NCPolynomial,
};
use freecomm::involution::{classify, validate_involution};
use freecomm::laws::{
    gen_tetilla, integrate, semicircle_law, skew_law_decompose, tetilla_density,
    tetilla_density_moment, tetilla_law, tetilla_support_bound,
};
use freecomm::ncpart::Permutation;
use freecomm::quadform::{
    hadamard_representation, strong_cancellation_check, symbolic_skew_matrix,
    symmetric_perturbation, t2_commutator_table, QuadMode, QuadraticForm,
};
use freecomm::rmt::{empirical_moments, MatrixModel};
use num_traits::Zero;
use std::time::Instant;

/// `sum of c * a^p * b^q` helper for expected tables.
fn ab_poly(terms: &[(i64, u32, u32)]) -> MultiPoly {
    let a = sym("a");
    let b = sym("b");
    let mut out = MultiPoly::zero();
    for &(c, p, q) in terms {
        out = out.add(
            &a.pow(p)
                .mul(&b.pow(q))
                .scale(&GaussianRational::from_int(c)),
        );
    }
    out
}

#[test]
fn criterion_01_t2_cumulant_table() {
    let start = Instant::now();
    let table = t2_commutator_table(8).expect("table computes");
    let expected = [
        ab_poly(&[(2, 1, 0)]),
        ab_poly(&[(2, 0, 2), (10, 2, 0)]),
        ab_poly(&[(24, 3, 0)]),
        ab_poly(&[(2, 0, 4), (4, 2, 2), (66, 4, 0)]),
        ab_poly(&[(160, 5, 0)]),
        ab_poly(&[(2, 0, 6), (6, 2, 4), (6, 4, 2), (386, 6, 0)]),
        ab_poly(&[(896, 7, 0)]),
        ab_poly(&[(2, 0, 8), (8, 2, 6), (12, 4, 4), (8, 6, 2), (2050, 8, 0)]),
    ];
    for (r, want) in expected.iter().enumerate() {
        assert_eq!(
            &table.cumulants[r],
            want,
            "K_{} of T_2 deviates from the displayed table",
            r + 1
        );
    }
    let dt = start.elapsed();
    assert!(dt.as_secs() < 60, "table must compute in under a minute");
    println!(
        "criterion 01 PASS: symbolic K_1..K_8 of T_2 match the displayed table ({} ms)",
        dt.as_millis()
    );
}

#[test]
fn criterion_02_hankel_determinants() {
    let table = t2_commutator_table(8).expect("table computes");
    let a = sym("a");
    let b = sym("b");
    let a2 = a.mul(&a);
    let b2 = b.mul(&b);

    let h2_expect = ab_poly(&[(4, 0, 6), (28, 2, 4), (172, 4, 2), (84, 6, 0)]);
    // 32 a^2 (b^2 + a^2)(b^8 - 12 a^2 b^6 + 2 a^4 b^4 - 52 a^6 b^2 - 131 a^8)
    let inner = ab_poly(&[(1, 0, 8), (-12, 2, 6), (2, 4, 4), (-52, 6, 2), (-131, 8, 0)]);
    let h3_expect = a2
        .scale(&GaussianRational::from_int(32))
        .mul(&b2.add(&a2))
        .mul(&inner);
    // -256 a^6 (b^2 - 3a^2)^4 (b^2 + a^2)^3
    let h4_expect = a2
        .pow(3)
        .scale(&GaussianRational::from_int(-256))
        .mul(&b2.sub(&a2.scale(&GaussianRational::from_int(3))).pow(4))
        .mul(&b2.add(&a2).pow(3));

    let get = |m: usize| {
        table
            .hankels
            .iter()
            .find(|(k, _)| *k == m)
            .map(|(_, h)| h.clone())
            .expect("hankel computed")
    };
    assert_eq!(get(2), h2_expect, "h2 deviates from the displayed form");
    assert_eq!(get(3), h3_expect, "h3 deviates from the displayed form");
    assert_eq!(get(4), h4_expect, "h4 deviates from the displayed form");

    // h3 with b^2 = 3 a^2 substituted must collapse to -65536 a^12
    let h3 = get(3);
    let b_var = Var::new("b");
    let coeffs = h3.coeffs_in(b_var);
    let mut collapsed = MultiPoly::zero();
    for (p, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        assert!(p % 2 == 0, "h3 must be even in b");
        let three_a2 = a2.scale(&GaussianRational::from_int(3)).pow((p / 2) as u32);
        collapsed = collapsed.add(&c.mul(&three_a2));
    }
    assert_eq!(collapsed, ab_poly(&[(-65536, 12, 0)]));

    // sampled sign analysis: h4 < 0 whenever alpha != 0 and b^2 != 3 a^2
    let h4 = get(4);
    let mut samples = 0;
    for (p, q) in [
        (1i64, 0i64),
        (1, 1),
        (2, 3),
        (-1, 2),
        (3, -5),
        (1, 7),
        (-2, -1),
        (5, 4),
    ] {
        let alpha = rat(p, 2);
        let beta = rat(q, 3);
        if alpha == rat(0, 1) {
            continue;
        }
        if &beta * &beta == rat(3, 1) * &alpha * &alpha {
            continue;
        }
        let v = h4
            .eval(&|v: Var| match v.name().as_str() {
                "a" => Some(GaussianRational::from_rational(alpha.clone())),
                "b" => Some(GaussianRational::from_rational(beta.clone())),
                _ => None,
            })
            .expect("h4 in a,b");
        assert!(v.is_real() && v.re < Rational::from_integer(0.into()), "h4 >= 0 at sample");
        samples += 1;
    }
    println!("criterion 02 PASS: h2/h3/h4 match, h3|_(b^2=3a^2) = -65536 a^12, h4 < 0 at {samples} samples");
}

#[test]
fn criterion_03_iterated_commutator_witness() {
    // X1, X2 free and identically distributed with cumulants r_1, r_2, ...
    let rsyms: Vec<MultiPoly> = (1..=9).map(|k| sym(&format!("r{k}"))).collect();
    let fam = FreeFamily::new()
        .with(CumulantSpec::new("X1", rsyms.clone(), false, KappaDefault::Zero).unwrap())
        .with(CumulantSpec::new("X2", rsyms, false, KappaDefault::Zero).unwrap());
    let nested = NCPolynomial::commutator(
        &NCPolynomial::commutator(&NCPolynomial::variable("X1"), &NCPolynomial::variable("X2")),
        &NCPolynomial::variable("X1"),
    );
    let k3 = poly_cumulant(&nested, &fam, 3, ExpansionMode::Numeric).expect("expansion in bounds");
    let (r2, r3, r4) = (sym("r2"), sym("r3"), sym("r4"));
    let expect = r2
        .mul(&r3)
        .mul(&r4)
        .scale(&GaussianRational::from_int(-6))
        .add(&r3.pow(3).scale(&GaussianRational::from_int(6)))
        .add(&r2.pow(3).mul(&r3).scale(&GaussianRational::from_int(-6)));
    assert_eq!(k3, expect, "K_3([[X1,X2],X1]) deviates");
    println!("criterion 03 PASS: K_3([[X1,X2],X1]) = -6 r2 r3 r4 + 6 r3^3 - 6 r2^3 r3");
}

#[test]
fn criterion_04_involution_suite() {
    let start = Instant::now();
    let n_max = if std::env::var("FREECOMM_SLOW").is_ok() { 6 } else { 5 };
    let cert = validate_involution(n_max).expect("validation runs");
    assert_eq!(cert.summary.failed, 0, "unpaired partitions: {:?}", cert.summary);
    assert!(
        cert.records.iter().all(|r| r.checks.all()),
        "some record fails one of the five checks"
    );

    // the type-III rule applied naively to a type II partition walks away,
    // reproducing the printed counterexample
    let naive = |p: &freecomm::ncpart::SetPartition| {
        let (_, piv) = classify(p).unwrap();
        let b = &piv.leftmost;
        let (alpha, omega) = (b[0], b[b.len() - 1]);
        let n2 = p.n();
        let mut img: Vec<usize> = (1..=n2).collect();
        let (lo, hi) = (alpha, omega + 1);
        for i in lo..=hi - 2 {
            img[i - 1] = i + 2;
        }
        img[hi - 2] = lo + 1;
        img[hi - 1] = lo;
        p.permute(&Permutation::from_images(img).unwrap()).unwrap()
    };
    let p0 = freecomm::ncpart::SetPartition::parse("{(1,2,6),(3,4,5)}").unwrap();
    let p1 = naive(&p0);
    assert_eq!(p1.to_string(), "{(1,2,3),(4,5,6)}");
    let p2 = naive(&p1);
    assert_eq!(p2.to_string(), "{(1,5,6),(2,3,4)}");
    assert_ne!(p2, p0, "the naive rule must not be involutive");

    println!(
        "criterion 04 PASS: certificate pairs all {} members up to n = {n_max} \
         (fixed points {}, literal {}, searched {}) in {} ms; display (3.5) regression holds",
        cert.summary.total,
        cert.summary.fixed_points,
        cert.summary.literal,
        cert.summary.searched,
        start.elapsed().as_millis()
    );
}

#[test]
fn criterion_05_strong_cancellation() {
    for (n, r) in [(2usize, 2usize), (2, 3), (3, 2), (3, 3), (2, 4)] {
        let rep = strong_cancellation_check(&symbolic_skew_matrix(n), r).expect("in bounds");
        assert!(
            rep.verdict,
            "odd upper-complement residual nonzero at (n, r) = ({n}, {r}): {}",
            rep.residual
        );
    }
    let perturbed = symmetric_perturbation(&symbolic_skew_matrix(2));
    let rep = strong_cancellation_check(&perturbed, 2).expect("in bounds");
    assert!(!rep.verdict, "symmetric perturbation must leave a residual");
    println!(
        "criterion 05 PASS: C^o residual vanishes at (2,2),(2,3),(3,2),(3,3),(2,4); \
         symmetric perturbation survives"
    );
}

#[test]
fn criterion_06_formula_concordance() {
    // seeded pseudo-random rational even cumulant data: three datasets of
    // (K_2, K_4, K_6) shared by all three variables
    let mut state = 0x2545f4914f6cdd1du64;
    let mut next_rat = || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let p = ((state >> 33) % 19) as i64 - 9;
        let q = ((state >> 13) % 7) as i64 + 1;
        rat(p, q)
    };
    // a selfadjoint (not skew) matrix with rational and imaginary entries
    let i = GaussianRational::i();
    let a = ExactMatrix::from_rows(vec![
        vec![
            MultiPoly::from_int(2),
            MultiPoly::one().add(&MultiPoly::constant(i.clone())),
            MultiPoly::from_rational(rat(1, 2)),
        ],
        vec![
            MultiPoly::one().sub(&MultiPoly::constant(i.clone())),
            MultiPoly::zero(),
            MultiPoly::constant(i.clone()).neg(),
        ],
        vec![
            MultiPoly::from_rational(rat(1, 2)),
            MultiPoly::constant(i),
            MultiPoly::from_int(-1),
        ],
    ])
    .unwrap();
    for _dataset in 0..3 {
        let even_kappa = vec![
            MultiPoly::zero(),
            MultiPoly::from_rational(next_rat()),
            MultiPoly::zero(),
            MultiPoly::from_rational(next_rat()),
            MultiPoly::zero(),
            MultiPoly::from_rational(next_rat()),
        ];
        let mut fam = FreeFamily::new();
        for k in 1..=3 {
            fam.insert(
                CumulantSpec::new(format!("X{k}"), even_kappa.clone(), true, KappaDefault::Zero)
                    .unwrap(),
            );
        }
        let q = QuadraticForm::new(a.clone(), fam).unwrap();
        let hadamard = hadamard_representation(&q, 5).unwrap();
        for r in 1..=5 {
            let general = q.cumulant(r, QuadMode::General).unwrap();
            let even = q.cumulant(r, QuadMode::EvenFamily).unwrap();
            let iid = q.cumulant(r, QuadMode::IidEven).unwrap();
            assert_eq!(general, even, "general vs even-family at r = {r}");
            assert_eq!(general, iid, "general vs iid-even at r = {r}");
            assert_eq!(general, hadamard[r - 1], "general vs Hadamard at r = {r}");
        }
    }
    // semicircular mode equals Tr(A^r) on the same matrix
    let qs = QuadraticForm::new(a.clone(), FreeFamily::standard_semicircular_family(3)).unwrap();
    for r in 1..=5 {
        assert_eq!(
            qs.cumulant(r, QuadMode::Semicircular).unwrap(),
            a.trace_pow(r),
            "trace formula at r = {r}"
        );
        assert_eq!(
            qs.cumulant(r, QuadMode::General).unwrap(),
            a.trace_pow(r),
            "general vs trace at r = {r}"
        );
    }
    println!("criterion 06 PASS: general / even-family / iid-even / Hadamard agree for r <= 5, n = 3");
}

#[test]
fn criterion_07_gen_tetilla_triple_agreement() {
    let lam = Var::new("lambda");
    for n in 2..=5usize {
        // gen_tetilla fails hard internally if the three routes disagree
        let (law, rep) = gen_tetilla(n, 10).expect("routes agree");
        assert!(rep.routes_agree);
        assert_eq!(law.kappa[1], rat((n * (n - 1)) as i64, 1), "K_2 = n(n-1)");
        for m in 1..=5 {
            assert!(law.kappa[2 * m - 2].is_zero(), "odd cumulants vanish");
        }
        // charpoly(A_n) = ((lambda - i)^n + (lambda + i)^n)/2
        let chi = standard_skew_matrix(n).charpoly(lam);
        let l = MultiPoly::from_term(
            freecomm::exact::Monomial::var(lam),
            GaussianRational::one(),
        );
        let expect = l
            .sub(&MultiPoly::i())
            .pow(n as u32)
            .add(&l.add(&MultiPoly::i()).pow(n as u32))
            .scale(&GaussianRational::from_rational(rat(1, 2)));
        assert_eq!(chi, expect, "characteristic polynomial of A_{n}");
    }

    // the multiple-angle identity as a truncated series identity over Q(i)
    use freecomm::exact::{arctan_series, tan_series, PowerSeries};
    let order = 9;
    for n in 2..=5u32 {
        let lhs = tan_series(order)
            .compose(&arctan_series(order).scale(&GaussianRational::from_int(n as i64)))
            .unwrap();
        let z = PowerSeries::z(order);
        let iz = z.scale(&GaussianRational::i());
        let one = PowerSeries::one(order);
        let (mut lo, mut hi) = (PowerSeries::one(order), PowerSeries::one(order));
        for _ in 0..n {
            lo = lo.mul(&one.sub(&iz));
            hi = hi.mul(&one.add(&iz));
        }
        let rhs = lo
            .sub(&hi)
            .scale(&GaussianRational::i())
            .divide(&lo.add(&hi))
            .unwrap();
        assert_eq!(lhs, rhs, "multiple-angle identity at order 9, n = {n}");
    }
    println!(
        "criterion 07 PASS: trace / tangent-number / R-transform routes agree exactly \
         for n = 2..5, m <= 5; K_2 = n(n-1); charpoly and the angle identity hold"
    );
}

#[test]
fn criterion_08_fid_verdicts() {
    let mut lines = Vec::new();
    for n in 2..=5usize {
        let (law, _) = gen_tetilla(n, 8).expect("routes agree");
        let rep = law.fid_check(4).expect("depth 4 available");
        assert!(
            rep.fid_consistent(),
            "gen-tetilla({n}) produced a negative or rank-inconsistent Hankel determinant: {:?}",
            rep.determinants
        );
        // the law has min(n, 2 floor(n/2) + something) distinct nonzero atoms;
        // with at least four of them the strict verdict is PASS
        if n >= 4 {
            assert_eq!(rep.verdict, FidVerdict::Pass, "n = {n} should pass strictly");
        }
        lines.push(format!("n={n}:{:?}", rep.verdict));
    }

    // alpha = 1, beta = 0 specialization of T_2: FAIL with h4 = -20736
    let table = t2_commutator_table(8).unwrap();
    let kappa: Vec<Rational> = table
        .cumulants
        .iter()
        .map(|p| {
            p.eval(&|v: Var| match v.name().as_str() {
                "a" => Some(GaussianRational::one()),
                "b" => Some(GaussianRational::zero()),
                _ => None,
            })
            .unwrap()
            .re
        })
        .collect();
    let rep = fid_hankel_check(&kappa, 4).unwrap();
    assert!(matches!(rep.verdict, FidVerdict::Fail(_)), "must fail at depth 4");
    assert_eq!(rep.determinants[3], rat(-20736, 1), "h4 = -20736");
    println!(
        "criterion 08 PASS: gen-tetilla verdicts [{}] all FID-consistent; \
         T_2(alpha=1, beta=0) fails with h4 = -20736",
        lines.join(", ")
    );
}

#[test]
fn criterion_09_law_numerics() {
    let i0 = tetilla_density_moment(0, 1e-10);
    assert!((i0 - 1.0).abs() < 1e-6, "integral = {i0}");
    let m2 = tetilla_density_moment(2, 1e-10);
    let m4 = tetilla_density_moment(4, 1e-10);
    let m6 = tetilla_density_moment(6, 1e-10);
    assert!((m2 - 2.0).abs() < 1e-4, "m2 = {m2}");
    assert!((m4 - 10.0).abs() < 1e-4, "m4 = {m4}");
    assert!((m6 - 66.0).abs() < 1e-4, "m6 = {m6}");

    let bound = tetilla_support_bound();
    assert!((bound - 4.709_600_820_398_577).abs() < 1e-9, "support endpoint");
    assert!((bound * bound - (11.0 + 5.0 * 5f64.sqrt())).abs() < 1e-9);

    // density is symmetric and the quadrature mass beyond the endpoint is zero
    for x in [0.25, 1.5, 3.0] {
        assert!((tetilla_density(x) - tetilla_density(-x)).abs() < 1e-15);
    }
    let tail = integrate(&tetilla_density, bound, bound + 2.0, 1e-10);
    assert_eq!(tail, 0.0);

    let sc = semicircle_law(8);
    let moments = sc.moments(8).unwrap();
    let catalan: Vec<Rational> = [0, 1, 0, 2, 0, 5, 0, 14].iter().map(|&c| rat(c, 1)).collect();
    assert_eq!(moments, catalan, "semicircle moments are Catalan");
    println!(
        "criterion 09 PASS: tetilla integral {i0:.8}, m2 {m2:.6}, m4 {m4:.5}, m6 {m6:.4}, \
         support endpoint {bound:.9}; semicircle moments Catalan"
    );
}

#[test]
fn criterion_10_skew_decomposition() {
    // A_3 decomposes with scales (sqrt 3, 0) and matches D_{sqrt 3}(T_2)
    let rep = skew_law_decompose(&standard_skew_matrix(3)).unwrap();
    assert_eq!(rep.scales.len(), 2);
    assert!((rep.scales[0] - 3f64.sqrt()).abs() < 1e-12);
    assert_eq!(rep.scales[1], 0.0);
    let dilated = tetilla_law(10).dilate_sqrt(&rat(3, 1)).unwrap();
    let (t3, _) = gen_tetilla(3, 10).unwrap();
    assert_eq!(dilated.kappa, t3.kappa, "T_3 = D_sqrt3(T_2) at cumulant level");

    // pseudo-random rational skew matrices up to n = 6
    let entries5 = [
        (0usize, 1usize, 3i64, 2i64),
        (0, 2, -1, 3),
        (0, 4, 5, 7),
        (1, 2, 2, 1),
        (1, 3, -4, 5),
        (2, 3, 1, 6),
        (2, 4, -2, 3),
        (3, 4, 7, 4),
    ];
    for n in [5usize, 6] {
        let mut a = ExactMatrix::zero(n);
        for &(r, c, p, q) in &entries5 {
            let v = MultiPoly::i().scale(&GaussianRational::from_rational(rat(p, q)));
            a.set(r, c, v.clone());
            a.set(c, r, v.neg());
        }
        if n == 6 {
            let v = MultiPoly::i().scale(&GaussianRational::from_rational(rat(9, 5)));
            a.set(1, 5, v.clone());
            a.set(5, 1, v.neg());
        }
        let rep = skew_law_decompose(&a).unwrap();
        assert!(
            rep.additivity_max_error < 1e-9,
            "n = {n}: additivity error {}",
            rep.additivity_max_error
        );
    }
    println!(
        "criterion 10 PASS: A_3 -> scales (sqrt 3, 0), T_3 = D_sqrt3(T_2) exactly; \
         trace additivity within 1e-9 for random skew matrices n = 5, 6"
    );
}

#[test]
fn criterion_11_sandwiched_commutator() {
    // symbolic: K_1([X,Y] Z [X,Y]) = -2 K_1(Z) with Z's cumulants left free
    let fam = FreeFamily::new()
        .with(CumulantSpec::standard_semicircular("X"))
        .with(CumulantSpec::standard_semicircular("Y"))
        .with(CumulantSpec::symbolic("Z"));
    let xy = NCPolynomial::commutator(&NCPolynomial::variable("X"), &NCPolynomial::variable("Y"));
    let w = xy.mul(&NCPolynomial::variable("Z")).mul(&xy);
    let k1 = poly_cumulant(&w, &fam, 1, ExpansionMode::Numeric).unwrap();
    assert_eq!(
        k1,
        sym("k[Z;1]").scale(&GaussianRational::from_int(-2)),
        "odd cumulants of Z survive"
    );

    // numeric: with Z free Poisson of rate 1 the law passes Hankel depth 2
    let start = Instant::now();
    let fam_num = FreeFamily::new()
        .with(CumulantSpec::standard_semicircular("X"))
        .with(CumulantSpec::standard_semicircular("Y"))
        .with(CumulantSpec::free_poisson("Z", rat(1, 1), 20));
    let kappa: Vec<Rational> = (1..=4)
        .map(|r| {
            poly_cumulant(&w, &fam_num, r, ExpansionMode::Numeric)
                .expect("within pruned bounds")
                .as_rational()
                .expect("numeric cumulant")
        })
        .collect();
    let rep = fid_hankel_check(&kappa, 2).unwrap();
    assert!(rep.fid_consistent(), "dets: {:?}", rep.determinants);
    println!(
        "criterion 11 PASS: K_1([X,Y]Z[X,Y]) = -2 K_1(Z); Poisson instance K_1..K_4 = [{}] \
         passes Hankel depth 2 ({} ms)",
        kappa
            .iter()
            .map(freecomm::exact::render_rational)
            .collect::<Vec<_>>()
            .join(", "),
        start.elapsed().as_millis()
    );
}

#[test]
fn criterion_12_monte_carlo() {
    let start = Instant::now();
    let model = MatrixModel::commutator(2, 500, 1).unwrap();
    let est = empirical_moments(&model, 4, 20).unwrap();
    let m2 = &est[1];
    let m4 = &est[3];
    assert!(
        (m2.mean - 2.0).abs() / 2.0 < 0.05,
        "m2 = {} deviates more than 5%",
        m2.mean
    );
    assert!(
        (m4.mean - 10.0).abs() / 10.0 < 0.07,
        "m4 = {} deviates more than 7%",
        m4.mean
    );
    for odd in [&est[0], &est[2]] {
        assert!(
            odd.mean.abs() <= 3.0 * odd.stderr.max(1e-9),
            "odd moment {} outside 3 standard errors ({})",
            odd.mean,
            odd.stderr
        );
    }
    let dt = start.elapsed();
    assert!(dt.as_secs() < 120, "Monte Carlo must finish in under 2 minutes");
    println!(
        "criterion 12 PASS: N=500, 20 trials: m2 = {:.4} (target 2), m4 = {:.4} (target 10), \
         odd moments within 3 se, runtime {} s",
        m2.mean,
        m4.mean,
        dt.as_secs_f32()
    );
}
