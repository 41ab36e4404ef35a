//! Acceptance gate: one test per release criterion, each printing a single
//! pass line on success (run with `--nocapture` to see them alongside the
//! harness output).

use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use simderiv::decider::{
    decide, derivation_of, normalize, shamsuddin_simple, verify_witness, BinomialDerivationSpec,
    Outcome,
};
use simderiv::deriv::{Derivation, ScalingAut};
use simderiv::exprio::{format_poly, parse_poly, ParseError};
use simderiv::oracle::{darboux_search, SearchConfig, SearchMode};
use simderiv::pfrak::{monomial_pfrak_vanishes, pfrak};
use simderiv::qpoly::{rat, rat_int, BPoly, Rat, UPoly};

const SEED: u64 = 0xacce_97a2;

fn random_upoly(rng: &mut ChaCha8Rng, max_deg: u32, force_nonzero: bool) -> UPoly {
    loop {
        let deg = rng.random_range(0..=max_deg);
        let mut terms = Vec::new();
        for e in 0..=deg {
            if rng.random_range(0..3) == 0 {
                continue;
            }
            let num = rng.random_range(-9i64..=9);
            if num == 0 {
                continue;
            }
            terms.push((e, rat(num, rng.random_range(1i64..=4))));
        }
        let p = UPoly::from_terms(terms);
        if !force_nonzero || !p.is_zero() {
            return p;
        }
    }
}

fn random_bpoly(rng: &mut ChaCha8Rng, max_deg: u32) -> BPoly {
    let mut terms = Vec::new();
    for _ in 0..rng.random_range(0..=6) {
        let i = rng.random_range(0..=max_deg);
        let j = rng.random_range(0..=max_deg);
        let num = rng.random_range(-9i64..=9);
        if num == 0 {
            continue;
        }
        terms.push(((i, j), rat(num, rng.random_range(1i64..=4))));
    }
    BPoly::from_terms(terms)
}

fn rat_pow(c: &Rat, n: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..n {
        acc = &acc * c;
    }
    acc
}

/// Division-scheme identities: degree drop, homogeneity in the dividend,
/// pass-through for low-degree dividends, the monomial recursion, and the
/// divisibility criterion — 500 random pairs plus exhaustive small ranges.
#[test]
fn criterion_1_division_scheme_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let eps_set = [rat_int(2), rat_int(-3), rat(1, 2)];
    for _ in 0..500 {
        let a = random_upoly(&mut rng, 6, true);
        let b = random_upoly(&mut rng, 12, false);
        let (p, trace) = pfrak(&a, &b).unwrap();
        assert!(trace.replay(&a, &b), "trace must replay for a nonzero");
        if let (Some(dp), Some(da)) = (p.degree(), a.degree()) {
            assert!(dp < da, "deg p < deg a violated");
        }
        for eps in &eps_set {
            let (scaled, _) = pfrak(&a, &b.scale(eps)).unwrap();
            assert_eq!(scaled, p.scale(eps), "homogeneity in b violated");
        }
        let deg_a = a.degree().unwrap();
        if deg_a > 0 {
            let small = random_upoly(&mut rng, deg_a - 1, false);
            let (pass_through, _) = pfrak(&a, &small).unwrap();
            assert_eq!(pass_through, small, "deg b < deg a must pass through");
        }
    }
    for n in 0..=8u32 {
        for m in 0..=8u32 {
            let a = UPoly::monomial(n, Rat::one());
            let (lhs, _) = pfrak(&a, &UPoly::monomial(m + n + 1, Rat::one())).unwrap();
            let (base, _) = pfrak(&a, &UPoly::monomial(m, Rat::one())).unwrap();
            assert_eq!(lhs, base.scale(&rat_int(m as i64 + 1)));
        }
    }
    for n in 0..20u32 {
        for m in (n + 1)..=20u32 {
            let (p, _) =
                pfrak(&UPoly::monomial(n, Rat::one()), &UPoly::monomial(m, Rat::one())).unwrap();
            assert_eq!(p.is_zero(), monomial_pfrak_vanishes(n, m).unwrap());
        }
    }
    println!("criterion 1 (division-scheme identities): pass");
}

/// The shape classifier agrees with the iterated-division criterion on every
/// dx + (c1 x^t1 + c2 x^t2 y) dy with 0 <= t2 < t1 <= 12, coefficients in
/// {1, -1, 2, 1/2}.
#[test]
fn criterion_2_decision_procedure_agreement() {
    let coeffs = [rat_int(1), rat_int(-1), rat_int(2), rat(1, 2)];
    let mut cells = 0;
    for t1 in 1..=12u32 {
        for t2 in 0..t1 {
            for c1 in &coeffs {
                for c2 in &coeffs {
                    let spec = BinomialDerivationSpec {
                        r: 0,
                        t1,
                        s1: 0,
                        t2,
                        s2: 1,
                        c1: c1.clone(),
                        c2: c2.clone(),
                    };
                    let by_shape = decide(&spec).outcome == Outcome::Simple;
                    let (by_criterion, _) = shamsuddin_simple(
                        &UPoly::monomial(t2, c2.clone()),
                        &UPoly::monomial(t1, c1.clone()),
                    )
                    .unwrap();
                    assert_eq!(
                        by_shape, by_criterion,
                        "disagreement at t1={t1} t2={t2} c1={c1} c2={c2}"
                    );
                    cells += 1;
                }
            }
        }
    }
    assert_eq!(cells, 78 * 16);
    println!("criterion 2 (decision-procedure agreement): pass");
}

/// Every NotSimple verdict over the full grid r, t1, t2 in [0, 4],
/// s1, s2 in [0, 4], coefficients in {0, 1, -2} carries a witness that
/// machine-verifies exactly.
#[test]
fn criterion_3_witness_validity_grid() {
    let coeffs = [Rat::zero(), Rat::one(), rat_int(-2)];
    let mut not_simple = 0u32;
    for r in 0..=4u32 {
        for t1 in 0..=4u32 {
            for s1 in 0..=4u32 {
                for t2 in 0..=4u32 {
                    for s2 in 0..=4u32 {
                        for c1 in &coeffs {
                            for c2 in &coeffs {
                                let raw = BinomialDerivationSpec {
                                    r,
                                    t1,
                                    s1,
                                    t2,
                                    s2,
                                    c1: c1.clone(),
                                    c2: c2.clone(),
                                };
                                let verdict = decide(&raw);
                                let d = derivation_of(&normalize(&raw));
                                if verdict.outcome == Outcome::NotSimple {
                                    assert!(
                                        verdict.witness.is_some(),
                                        "missing witness at r={r} t1={t1} s1={s1} t2={t2} s2={s2} c1={c1} c2={c2}"
                                    );
                                    not_simple += 1;
                                }
                                assert!(
                                    verify_witness(&d, &verdict),
                                    "witness failed at r={r} t1={t1} s1={s1} t2={t2} s2={s2} c1={c1} c2={c2}: {}",
                                    verdict.rule()
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    assert!(not_simple > 0);
    println!("criterion 3 (witness validity on the parameter grid): pass");
}

/// For every Simple-classified spec with exponents <= 2 and unit
/// coefficients, the bounded Darboux search at (6, 6) in both modes returns
/// nothing; the three named instances are asserted explicitly.
#[test]
fn criterion_4_oracle_emptiness_on_simple_verdicts() {
    let cfg = SearchConfig::new(6, 6, SearchMode::Both);
    let mut simple_count = 0;
    for r in 0..=2u32 {
        for t1 in 0..=2u32 {
            for s1 in 0..=2u32 {
                for t2 in 0..=2u32 {
                    for s2 in 0..=2u32 {
                        let raw = BinomialDerivationSpec {
                            r,
                            t1,
                            s1,
                            t2,
                            s2,
                            c1: Rat::one(),
                            c2: Rat::one(),
                        };
                        let verdict = decide(&raw);
                        if verdict.outcome != Outcome::Simple {
                            continue;
                        }
                        simple_count += 1;
                        let d = derivation_of(&normalize(&raw));
                        let found = darboux_search(&d, &cfg);
                        assert!(
                            found.is_empty(),
                            "Darboux element found for Simple spec r={r} t1={t1} s1={s1} t2={t2} s2={s2}: f = {}",
                            format_poly(&found[0].f)
                        );
                    }
                }
            }
        }
    }
    assert!(simple_count > 0, "grid must contain Simple specs");

    // named instances
    let named = [
        Derivation::new(BPoly::one(), &BPoly::monomial(0, 2, Rat::one()) + &BPoly::var_x()),
        Derivation::new(
            BPoly::one(),
            &BPoly::monomial(2, 1, Rat::one()) + &BPoly::var_x(),
        ),
        Derivation::new(
            BPoly::var_y(),
            &BPoly::monomial(1, 1, Rat::one()) + &BPoly::one(),
        ),
    ];
    for d in &named {
        assert!(
            darboux_search(d, &cfg).is_empty(),
            "named instance dx = {}, dy = {} must be clean",
            format_poly(&d.dx),
            format_poly(&d.dy)
        );
    }
    println!("criterion 4 (oracle emptiness on Simple verdicts): pass");
}

/// Conjugation identities at rational instantiations: for each of the three
/// diagonal-scaling reductions and alpha in {2, 3, 1/2}, conjugating the
/// scaled derivation lands exactly on alpha^{-1} times the unit form.
#[test]
fn criterion_5_conjugation_identities() {
    let alphas = [rat_int(2), rat_int(3), rat(1, 2)];
    let frees = [rat_int(1), rat_int(3), rat(-1, 2)];
    let mut count = 0;
    let check = |dbar: &Derivation, theta: &ScalingAut, d: &Derivation, alpha: &Rat| {
        assert_eq!(
            dbar.conjugate(theta),
            d.scale(&(Rat::one() / alpha)),
            "conjugation identity failed for dx = {}, dy = {}",
            format_poly(&dbar.dx),
            format_poly(&dbar.dy)
        );
    };
    for alpha in &alphas {
        for c in &frees {
            // dy = x^u (c1 x^t y^s + c2): c1 = c2^{1-s} alpha^{-v}
            for (u, t, s) in [(0u32, 1u32, 1u32), (0, 2, 1), (1, 1, 2), (2, 1, 3)] {
                let v = t + (u + 1) * s;
                let c1 = Rat::one() / &(&rat_pow(c, s - 1) * &rat_pow(alpha, v));
                let dbar = Derivation::new(
                    BPoly::one(),
                    &BPoly::monomial(u + t, s, c1) + &BPoly::monomial(u, 0, c.clone()),
                );
                let d = Derivation::new(
                    BPoly::one(),
                    &BPoly::monomial(u + t, s, Rat::one()) + &BPoly::monomial(u, 0, Rat::one()),
                );
                let theta =
                    ScalingAut::new(alpha.clone(), c * &rat_pow(alpha, u + 1)).unwrap();
                check(&dbar, &theta, &d, alpha);
                count += 1;
            }
            // dy = x^u (c1 x^t + c2 y^s): c2 = c1^{1-s} alpha^{-v}
            for (u, t, s) in [(0u32, 1u32, 2u32), (0, 2, 2), (1, 1, 3), (0, 1, 4)] {
                let v = (s - 1) * t + (u + 1) * s;
                let c2 = Rat::one() / &(&rat_pow(c, s - 1) * &rat_pow(alpha, v));
                let dbar = Derivation::new(
                    BPoly::one(),
                    &BPoly::monomial(u + t, 0, c.clone()) + &BPoly::monomial(u, s, c2),
                );
                let d = Derivation::new(
                    BPoly::one(),
                    &BPoly::monomial(u + t, 0, Rat::one()) + &BPoly::monomial(u, s, Rat::one()),
                );
                let theta =
                    ScalingAut::new(alpha.clone(), c * &rat_pow(alpha, u + t + 1)).unwrap();
                check(&dbar, &theta, &d, alpha);
                count += 1;
            }
            // dx = y^r, dy = c1 x^t y^s + c2: c1 = alpha^{-(t(r+1)+s)}
            for (r, t, s) in [(1u32, 1u32, 1u32), (1, 2, 1), (2, 1, 2)] {
                let c1 = Rat::one() / rat_pow(alpha, t * (r + 1) + s);
                let dbar = Derivation::new(
                    BPoly::monomial(0, r, Rat::one()),
                    &BPoly::monomial(t, s, c1) + &BPoly::constant(c.clone()),
                );
                let d = Derivation::new(
                    BPoly::monomial(0, r, Rat::one()),
                    &BPoly::monomial(t, s, Rat::one()) + &BPoly::constant(c.clone()),
                );
                let theta = ScalingAut::new(rat_pow(alpha, r + 1), alpha.clone()).unwrap();
                check(&dbar, &theta, &d, alpha);
                count += 1;
            }
        }
    }
    assert!(count >= 50, "only {count} instantiations");
    println!("criterion 5 (conjugation identities, {count} instantiations): pass");
}

/// Leibniz and linearity hold exactly on 500 random (d, f, g) triples.
#[test]
fn criterion_6_derivation_laws() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x6);
    for _ in 0..500 {
        let d = Derivation::new(random_bpoly(&mut rng, 3), random_bpoly(&mut rng, 3));
        let f = random_bpoly(&mut rng, 4);
        let g = random_bpoly(&mut rng, 4);
        assert_eq!(
            d.apply(&(&f * &g)),
            &(&f * &d.apply(&g)) + &(&g * &d.apply(&f)),
            "Leibniz failed"
        );
        assert_eq!(
            d.apply(&(&f + &g)),
            &d.apply(&f) + &d.apply(&g),
            "additivity failed"
        );
        let c = rat(rng.random_range(-9i64..=9), rng.random_range(1i64..=4));
        assert_eq!(d.apply(&f.scale(&c)), d.apply(&f).scale(&c), "scaling failed");
    }
    println!("criterion 6 (derivation laws on 500 random triples): pass");
}

/// Parser round trips: parse(format(p)) = p on 500 random polynomials,
/// format(parse(s)) = s on canonical strings, and positioned diagnostics on
/// malformed input.
#[test]
fn criterion_7_parser_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x7);
    for _ in 0..500 {
        let p = random_bpoly(&mut rng, 6);
        let text = format_poly(&p);
        let back = parse_poly(&text).unwrap_or_else(|e| panic!("reparse of {text:?}: {e}"));
        assert_eq!(back, p, "parse(format) drifted on {text:?}");
        // canonical strings are fixed points of format(parse(.))
        assert_eq!(format_poly(&back), text);
    }
    for canonical in ["0", "1/2", "x^2*y - 1/2", "-x + y", "2*x^3 + x*y^4 - 3"] {
        let p = parse_poly(canonical).unwrap();
        assert_eq!(format_poly(&p), canonical);
    }
    for (src, pos) in [("x^-1", 3), ("", 1), ("x +", 4), ("1/0", 3), ("x**y", 3)] {
        match parse_poly(src) {
            Err(ParseError::Syntax { pos: got, .. })
            | Err(ParseError::ExponentOverflow { pos: got })
            | Err(ParseError::ZeroDenominator { pos: got }) => {
                assert_eq!(got, pos, "diagnostic position for {src:?}");
            }
            Ok(_) => panic!("{src:?} should not parse"),
        }
    }
    println!("criterion 7 (parser round trips): pass");
}

/// Two runs of the grid subcommand on the same request produce byte-identical
/// CSV.
#[test]
fn criterion_8_grid_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let out = dir.path().join(name);
        let status = std::process::Command::new(env!("CARGO_BIN_EXE_simderiv"))
            .args([
                "grid", "--r", "0..1", "--t1", "0..3", "--s1", "0..2", "--t2", "0..2", "--s2",
                "0..2", "--c1", "1,-2,1/2", "--c2", "0,1", "--verify",
            ])
            .arg("--out")
            .arg(&out)
            .status()
            .unwrap();
        assert!(status.success(), "grid run failed");
        std::fs::read(&out).unwrap()
    };
    let first = run("a.csv");
    let second = run("b.csv");
    assert!(!first.is_empty());
    assert_eq!(first, second, "grid output must be byte-identical");
    println!("criterion 8 (grid determinism): pass");
}
