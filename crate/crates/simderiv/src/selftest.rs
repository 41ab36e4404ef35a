//! Built-in property suites behind `simderiv selftest`: the division-scheme
//! identities, agreement of the two decision procedures, conjugation
//! identities for the diagonal-scaling reductions, and witness verification
//! over a parameter grid. Prints one count line per suite; on failure prints
//! the first counterexample and exits 3.

use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use simderiv::decider::{
    decide, derivation_of, normalize, shamsuddin_simple, verify_witness, BinomialDerivationSpec,
    Outcome,
};
use simderiv::deriv::{Derivation, ScalingAut};
use simderiv::exprio::{format_poly, format_rat};
use simderiv::pfrak::{monomial_pfrak_vanishes, pfrak};
use simderiv::qpoly::{rat, rat_int, BPoly, Rat, UPoly};
use std::process::ExitCode;

const SEED: u64 = 0x5e1f_7e57;

struct Failure {
    suite: &'static str,
    detail: String,
}

pub fn run(inject_pfrak_fault: bool) -> ExitCode {
    let suites: [(&str, fn(bool) -> Result<usize, Failure>); 4] = [
        ("division-scheme", suite_division_scheme),
        ("decision-agreement", suite_decision_agreement),
        ("conjugation-identities", suite_conjugation),
        ("witness-grid", suite_witness_grid),
    ];
    for (name, suite) in suites {
        match suite(inject_pfrak_fault) {
            Ok(count) => println!("{name}: {count} checks passed"),
            Err(f) => {
                eprintln!("{}: FAIL", f.suite);
                eprintln!("counterexample: {}", f.detail);
                return ExitCode::from(3);
            }
        }
    }
    ExitCode::SUCCESS
}

fn fail(suite: &'static str, detail: String) -> Failure {
    Failure { suite, detail }
}

fn fmt_u(p: &UPoly) -> String {
    format_poly(&p.to_bpoly())
}

/// pfrak with the fault-injection hook: the hook flips the sign of every
/// result so the suite provably catches wrong outputs.
fn pfrak_under_test(a: &UPoly, b: &UPoly, fault: bool) -> UPoly {
    let (p, _) = pfrak(a, b).expect("a nonzero by construction");
    if fault {
        p.scale(&rat_int(-1))
    } else {
        p
    }
}

fn random_upoly(rng: &mut ChaCha8Rng, max_deg: u32, force_nonzero: bool) -> UPoly {
    loop {
        let deg = rng.random_range(0..=max_deg);
        let mut terms = Vec::new();
        for e in 0..=deg {
            if rng.random_range(0..3) == 0 {
                continue; // sparse
            }
            let num = rng.random_range(-9i64..=9);
            if num == 0 {
                continue;
            }
            let den = rng.random_range(1i64..=4);
            terms.push((e, rat(num, den)));
        }
        let p = UPoly::from_terms(terms);
        if !force_nonzero || !p.is_zero() {
            return p;
        }
    }
}

/// Division-scheme identities on >= 500 random pairs plus the exhaustive
/// monomial ranges:
///   (a) deg p(a, b) < deg a;
///   (b) p(a, eps*b) = eps * p(a, b) for eps in {2, -3, 1/2};
///   (c) p(a, b) = b when deg a > deg b;
///   (d) p(x^n, x^{m+n+1}) = (m+1) * p(x^n, x^m) for 0 <= n, m <= 8;
///   (e) p(x^n, x^m) = 0 iff (n+1) | (m-n), for 0 <= n < m <= 20.
fn suite_division_scheme(fault: bool) -> Result<usize, Failure> {
    const SUITE: &str = "division-scheme";
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut checks = 0usize;
    let eps_set = [rat_int(2), rat_int(-3), rat(1, 2)];

    for _ in 0..500 {
        let a = random_upoly(&mut rng, 6, true);
        let b = random_upoly(&mut rng, 12, false);
        let p = pfrak_under_test(&a, &b, fault);

        // (a) degree drop
        if let (Some(dp), Some(da)) = (p.degree(), a.degree()) {
            if dp >= da {
                return Err(fail(
                    SUITE,
                    format!(
                        "degree bound: a = {}, b = {}, p = {} has degree {dp} >= {da}",
                        fmt_u(&a),
                        fmt_u(&b),
                        fmt_u(&p)
                    ),
                ));
            }
        }
        checks += 1;

        // (b) homogeneity in b
        for eps in &eps_set {
            let lhs = pfrak_under_test(&a, &b.scale(eps), fault);
            if lhs != p.scale(eps) {
                return Err(fail(
                    SUITE,
                    format!(
                        "homogeneity: a = {}, b = {}, eps = {}: p(a, eps*b) = {} but eps*p(a, b) = {}",
                        fmt_u(&a),
                        fmt_u(&b),
                        format_rat(eps),
                        fmt_u(&lhs),
                        fmt_u(&p.scale(eps))
                    ),
                ));
            }
            checks += 1;
        }

        // (c) low-degree b passes through untouched
        let deg_a = a.degree().expect("a nonzero");
        if deg_a > 0 {
            let small = random_upoly(&mut rng, deg_a - 1, false);
            let p_small = pfrak_under_test(&a, &small, fault);
            if p_small != small {
                return Err(fail(
                    SUITE,
                    format!(
                        "pass-through: a = {}, b = {} (deg b < deg a) gave p = {}",
                        fmt_u(&a),
                        fmt_u(&small),
                        fmt_u(&p_small)
                    ),
                ));
            }
            checks += 1;
        }
    }

    // (d) monomial recursion, exhaustive
    for n in 0..=8u32 {
        for m in 0..=8u32 {
            let a = UPoly::monomial(n, Rat::one());
            let lhs = pfrak_under_test(&a, &UPoly::monomial(m + n + 1, Rat::one()), fault);
            let rhs = pfrak_under_test(&a, &UPoly::monomial(m, Rat::one()), fault)
                .scale(&rat_int(m as i64 + 1));
            if lhs != rhs {
                return Err(fail(
                    SUITE,
                    format!(
                        "monomial recursion: n = {n}, m = {m}: p(x^{n}, x^{}) = {} but (m+1)*p(x^{n}, x^{m}) = {}",
                        m + n + 1,
                        fmt_u(&lhs),
                        fmt_u(&rhs)
                    ),
                ));
            }
            checks += 1;
        }
    }

    // (e) vanishing criterion, exhaustive
    for n in 0..20u32 {
        for m in (n + 1)..=20u32 {
            let a = UPoly::monomial(n, Rat::one());
            let b = UPoly::monomial(m, Rat::one());
            let vanishes = pfrak_under_test(&a, &b, fault).is_zero();
            let predicted = monomial_pfrak_vanishes(n, m).expect("n < m");
            if vanishes != predicted {
                return Err(fail(
                    SUITE,
                    format!(
                        "vanishing criterion: n = {n}, m = {m}: computed {vanishes}, closed form {predicted}"
                    ),
                ));
            }
            checks += 1;
        }
    }

    Ok(checks)
}

/// The shape classifier and the iterated-division criterion must agree on
/// every derivation dx + (c1 x^t1 + c2 x^t2 y) dy with 0 <= t2 < t1 <= 12 and
/// coefficients ranging over {1, -1, 2, 1/2}.
fn suite_decision_agreement(_fault: bool) -> Result<usize, Failure> {
    const SUITE: &str = "decision-agreement";
    let coeffs = [rat_int(1), rat_int(-1), rat_int(2), rat(1, 2)];
    let mut checks = 0usize;
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
                    let a = UPoly::monomial(t2, c2.clone());
                    let b = UPoly::monomial(t1, c1.clone());
                    let (by_criterion, _) =
                        shamsuddin_simple(&a, &b).expect("c2 nonzero");
                    if by_shape != by_criterion {
                        return Err(fail(
                            SUITE,
                            format!(
                                "t1 = {t1}, t2 = {t2}, c1 = {}, c2 = {}: classifier says simple={by_shape}, criterion says simple={by_criterion}",
                                format_rat(c1),
                                format_rat(c2)
                            ),
                        ));
                    }
                    checks += 1;
                }
            }
        }
    }
    Ok(checks)
}

fn rat_pow(c: &Rat, n: u32) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..n {
        acc = &acc * c;
    }
    acc
}

fn check_conjugation(
    suite: &'static str,
    label: &str,
    dbar: &Derivation,
    theta: &ScalingAut,
    d: &Derivation,
    alpha: &Rat,
) -> Result<(), Failure> {
    let got = dbar.conjugate(theta);
    let want = d.scale(&(Rat::one() / alpha));
    if got != want {
        return Err(fail(
            suite,
            format!(
                "{label}: conjugate gave dx = {}, dy = {}; expected dx = {}, dy = {}",
                format_poly(&got.dx),
                format_poly(&got.dy),
                format_poly(&want.dx),
                format_poly(&want.dy)
            ),
        ));
    }
    Ok(())
}

/// Rational instantiations of the three diagonal-scaling reductions. In each,
/// the scaled coefficients are chosen from the alpha^v relation so that
/// conjugating the scaled derivation by theta lands exactly on alpha^{-1}
/// times the unit-coefficient one.
fn suite_conjugation(_fault: bool) -> Result<usize, Failure> {
    const SUITE: &str = "conjugation-identities";
    let alphas = [rat_int(2), rat_int(3), rat(1, 2)];
    let c_frees = [rat_int(1), rat_int(3), rat(-1, 2)];
    let mut checks = 0usize;

    // Family 1: dy = x^u (c1 x^t y^s + c2), v = t + (u+1)s,
    // c1 = c2^{1-s} alpha^{-v}, theta = (alpha, c2 * alpha^{u+1}).
    for alpha in &alphas {
        for c2 in &c_frees {
            for (u, t, s) in [(0u32, 1u32, 1u32), (0, 2, 1), (1, 1, 2), (2, 1, 3)] {
                let v = t + (u + 1) * s;
                let c1 = Rat::one() / &(&rat_pow(c2, s - 1) * &rat_pow(alpha, v));
                let dbar = Derivation::new(
                    BPoly::one(),
                    &BPoly::monomial(u + t, s, c1) + &BPoly::monomial(u, 0, c2.clone()),
                );
                let d = Derivation::new(
                    BPoly::one(),
                    &BPoly::monomial(u + t, s, Rat::one()) + &BPoly::monomial(u, 0, Rat::one()),
                );
                let theta =
                    ScalingAut::new(alpha.clone(), c2 * &rat_pow(alpha, u + 1)).expect("nonzero");
                check_conjugation(
                    SUITE,
                    &format!(
                        "constant-tail u={u} t={t} s={s} alpha={} c2={}",
                        format_rat(alpha),
                        format_rat(c2)
                    ),
                    &dbar,
                    &theta,
                    &d,
                    alpha,
                )?;
                checks += 1;
            }
        }
    }

    // Family 2: dy = x^u (c1 x^t + c2 y^s), v = (s-1)t + (u+1)s,
    // c2 = c1^{1-s} alpha^{-v}, theta = (alpha, c1 * alpha^{u+t+1}).
    for alpha in &alphas {
        for c1 in &c_frees {
            for (u, t, s) in [(0u32, 1u32, 2u32), (0, 2, 2), (1, 1, 3), (0, 1, 4)] {
                let v = (s - 1) * t + (u + 1) * s;
                let c2 = Rat::one() / &(&rat_pow(c1, s - 1) * &rat_pow(alpha, v));
                let dbar = Derivation::new(
                    BPoly::one(),
                    &BPoly::monomial(u + t, 0, c1.clone()) + &BPoly::monomial(u, s, c2),
                );
                let d = Derivation::new(
                    BPoly::one(),
                    &BPoly::monomial(u + t, 0, Rat::one()) + &BPoly::monomial(u, s, Rat::one()),
                );
                let theta = ScalingAut::new(alpha.clone(), c1 * &rat_pow(alpha, u + t + 1))
                    .expect("nonzero");
                check_conjugation(
                    SUITE,
                    &format!(
                        "y-power-tail u={u} t={t} s={s} alpha={} c1={}",
                        format_rat(alpha),
                        format_rat(c1)
                    ),
                    &dbar,
                    &theta,
                    &d,
                    alpha,
                )?;
                checks += 1;
            }
        }
    }

    // Family 3: dx = y^r, dy = c1 x^t y^s + c2 with r >= 1,
    // c1 = alpha^{-(t(r+1)+s)}, theta = (alpha^{r+1}, alpha); c2 rides along.
    for alpha in &alphas {
        for c2 in &c_frees {
            for (r, t, s) in [(1u32, 1u32, 1u32), (1, 2, 1), (2, 1, 2)] {
                let c1 = Rat::one() / rat_pow(alpha, t * (r + 1) + s);
                let dbar = Derivation::new(
                    BPoly::monomial(0, r, Rat::one()),
                    &BPoly::monomial(t, s, c1) + &BPoly::constant(c2.clone()),
                );
                let d = Derivation::new(
                    BPoly::monomial(0, r, Rat::one()),
                    &BPoly::monomial(t, s, Rat::one()) + &BPoly::constant(c2.clone()),
                );
                let theta =
                    ScalingAut::new(rat_pow(alpha, r + 1), alpha.clone()).expect("nonzero");
                check_conjugation(
                    SUITE,
                    &format!(
                        "positive-r r={r} t={t} s={s} alpha={} c2={}",
                        format_rat(alpha),
                        format_rat(c2)
                    ),
                    &dbar,
                    &theta,
                    &d,
                    alpha,
                )?;
                checks += 1;
            }
        }
    }

    Ok(checks)
}

/// Every NotSimple verdict over a small parameter grid must carry a witness
/// that re-verifies against the derivation it certifies.
fn suite_witness_grid(_fault: bool) -> Result<usize, Failure> {
    const SUITE: &str = "witness-grid";
    let coeffs = [Rat::zero(), Rat::one(), rat_int(-2)];
    let mut checks = 0usize;
    for r in 0..=3u32 {
        for t1 in 0..=3u32 {
            for s1 in 0..=3u32 {
                for t2 in 0..=3u32 {
                    for s2 in 0..=3u32 {
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
                                if !verify_witness(&d, &verdict) {
                                    return Err(fail(
                                        SUITE,
                                        format!(
                                            "r={r} t1={t1} s1={s1} t2={t2} s2={s2} c1={} c2={}: rule {} witness failed to verify",
                                            format_rat(c1),
                                            format_rat(c2),
                                            verdict.rule()
                                        ),
                                    ));
                                }
                                checks += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(checks)
}
