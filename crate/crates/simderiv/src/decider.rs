//! Classification of the two-term derivations
//! `y^r dx + (c1 x^t1 y^s1 + c2 x^t2 y^s2) dy` of Q[x, y].
//!
//! [`classify`] decides simplicity by the four shape conditions below and,
//! for every non-simple verdict, attaches a machine-checkable witness: a
//! Darboux element with its eigenvalue, a stable ideal, or (in the single
//! divisibility-criterion case) the vanishing iterated-division trace.
//!
//! Simplicity holds exactly when all of:
//!   (a) both coefficients are nonzero and t2 < t1;
//!   (b) if r > 0 then t2 = s2 = 0 and s1 > 0;
//!   (c) if r = 0 then s1 + s2 > 0 and s1*s2 = 0;
//!   (d) if r = s1 = 0 and s2 = 1 then (t2 + 1) does not divide (t1 - t2).

use crate::deriv::{darboux_certificate, ideal_stable_uy, ideal_stable_xy, Derivation};
use crate::exprio::{format_poly, format_rat};
use crate::pfrak::{pfrak, PfrakError, PfrakTrace};
use crate::qpoly::{rat_int, BPoly, Rat, UPoly};
use num_traits::{One, Zero};
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum DeciderError {
    #[error("spec is not normalized: require t2 <= t1, s2 <= s1 on ties, and distinct exponent pairs")]
    NotNormalized,
    #[error("spec is outside the scaling-relation families")]
    FamilyMismatch,
    #[error(transparent)]
    Pfrak(#[from] PfrakError),
}

/// Parameters of the derivation y^r dx + (c1 x^t1 y^s1 + c2 x^t2 y^s2) dy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialDerivationSpec {
    pub r: u32,
    pub t1: u32,
    pub s1: u32,
    pub t2: u32,
    pub s2: u32,
    pub c1: Rat,
    pub c2: Rat,
}

impl BinomialDerivationSpec {
    /// The derivation this spec denotes.
    pub fn derivation(&self) -> Derivation {
        let dx = BPoly::monomial(0, self.r, Rat::one());
        let dy = &BPoly::monomial(self.t1, self.s1, self.c1.clone())
            + &BPoly::monomial(self.t2, self.s2, self.c2.clone());
        Derivation::new(dx, dy)
    }

    /// True when the exponents satisfy the normalization contract: t2 <= t1,
    /// s2 <= s1 on a t-tie, and the two exponent pairs differ.
    pub fn is_normalized(&self) -> bool {
        if (self.t1, self.s1) == (self.t2, self.s2) {
            return false;
        }
        self.t2 < self.t1 || (self.t2 == self.t1 && self.s2 <= self.s1)
    }
}

/// A normalized input: either a genuine two-term spec or a single-term
/// residue left after merging coinciding exponent pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Normalized {
    Binomial(BinomialDerivationSpec),
    SingleTerm { r: u32, t: u32, s: u32, c: Rat },
}

/// Canonicalizes a raw spec: swaps the two terms so t2 <= t1 (ties broken by
/// s2 <= s1), and merges coinciding exponent pairs into a single term with
/// summed coefficient. Zero coefficients leave their exponents in place.
/// Idempotent.
pub fn normalize(raw: &BinomialDerivationSpec) -> Normalized {
    if (raw.t1, raw.s1) == (raw.t2, raw.s2) {
        return Normalized::SingleTerm {
            r: raw.r,
            t: raw.t1,
            s: raw.s1,
            c: &raw.c1 + &raw.c2,
        };
    }
    let mut spec = raw.clone();
    if (spec.t1, spec.s1) < (spec.t2, spec.s2) {
        std::mem::swap(&mut spec.t1, &mut spec.t2);
        std::mem::swap(&mut spec.s1, &mut spec.s2);
        std::mem::swap(&mut spec.c1, &mut spec.c2);
    }
    Normalized::Binomial(spec)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Simple,
    NotSimple,
}

/// Non-simplicity witness, checkable through the deriv module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    DarbouxElement {
        f: BPoly,
        lambda: BPoly,
    },
    StableIdealXY,
    StableIdealUY {
        u: UPoly,
    },
    /// The divisibility criterion failed; the vanishing iterated-division
    /// trace for (a, b) is the certificate.
    CriterionOnly {
        a: UPoly,
        b: UPoly,
        trace: PfrakTrace,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub rule_trace: Vec<String>,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn simple(trace: Vec<String>) -> Self {
        Verdict {
            outcome: Outcome::Simple,
            rule_trace: trace,
            witness: None,
        }
    }

    fn not_simple(trace: Vec<String>, witness: Witness) -> Self {
        Verdict {
            outcome: Outcome::NotSimple,
            rule_trace: trace,
            witness: Some(witness),
        }
    }

    /// The decisive rule (last trace entry).
    pub fn rule(&self) -> &str {
        self.rule_trace.last().map(String::as_str).unwrap_or("")
    }

    /// Stable JSON rendering; polynomials in canonical text form.
    pub fn to_json(&self) -> Value {
        let witness = self.witness.as_ref().map(|w| match w {
            Witness::DarbouxElement { f, lambda } => json!({
                "kind": "darboux",
                "f": format_poly(f),
                "lambda": format_poly(lambda),
            }),
            Witness::StableIdealXY => json!({ "kind": "stable-ideal-xy" }),
            Witness::StableIdealUY { u } => json!({
                "kind": "stable-ideal-uy",
                "u": format_poly(&u.to_bpoly()),
            }),
            Witness::CriterionOnly { a, b, trace } => json!({
                "kind": "criterion-pfrak-zero",
                "a": format_poly(&a.to_bpoly()),
                "b": format_poly(&b.to_bpoly()),
                "pfrak": format_poly(&trace.result.to_bpoly()),
                "steps": trace
                    .steps
                    .iter()
                    .map(|s| json!([
                        format_poly(&s.quotient.to_bpoly()),
                        format_poly(&s.remainder.to_bpoly()),
                    ]))
                    .collect::<Vec<_>>(),
            }),
        });
        json!({
            "outcome": match self.outcome {
                Outcome::Simple => "Simple",
                Outcome::NotSimple => "NotSimple",
            },
            "rule_trace": self.rule_trace,
            "witness": witness,
        })
    }
}

/// Re-checks a verdict's witness against the derivation it certifies.
/// Returns true for Simple verdicts (nothing to check).
pub fn verify_witness(d: &Derivation, verdict: &Verdict) -> bool {
    let Some(witness) = &verdict.witness else {
        return verdict.outcome == Outcome::Simple;
    };
    match witness {
        Witness::DarbouxElement { f, lambda } => match darboux_certificate(d, f) {
            Ok(Some(cert)) => cert.lambda == *lambda,
            _ => false,
        },
        Witness::StableIdealXY => ideal_stable_xy(d),
        Witness::StableIdealUY { u } => ideal_stable_uy(d, u).unwrap_or(false),
        Witness::CriterionOnly { a, b, trace } => {
            trace.result.is_zero() && trace.replay(a, b)
        }
    }
}

fn darboux_witness(trace: Vec<String>, d: &Derivation, f: BPoly) -> Verdict {
    let cert = darboux_certificate(d, &f)
        .expect("witness candidates are nonconstant")
        .expect("constructed witnesses divide exactly");
    Verdict::not_simple(
        trace,
        Witness::DarbouxElement {
            f: cert.f,
            lambda: cert.lambda,
        },
    )
}

/// Decides simplicity of a normalized two-term spec. Errors when the spec
/// violates the normalization contract.
pub fn classify(spec: &BinomialDerivationSpec) -> Result<Verdict, DeciderError> {
    if !spec.is_normalized() {
        return Err(DeciderError::NotNormalized);
    }
    let d = spec.derivation();
    let mut trace: Vec<String> = Vec::new();

    // (a) both coefficients nonzero
    if spec.c1.is_zero() {
        trace.push("cond:nonzero-coefficients:fail(c1=0)".into());
        return Ok(single_live_term_witness(
            trace, &d, spec.r, spec.t2, spec.s2, &spec.c2,
        ));
    }
    if spec.c2.is_zero() {
        trace.push("cond:nonzero-coefficients:fail(c2=0)".into());
        return Ok(single_live_term_witness(
            trace, &d, spec.r, spec.t1, spec.s1, &spec.c1,
        ));
    }
    trace.push("cond:nonzero-coefficients:pass".into());

    // (a) distinct x-exponents
    if spec.t1 == spec.t2 {
        trace.push("cond:x-exponents-distinct:fail".into());
        trace.push("rule:notsimple:equal-x-exponents-darboux".into());
        let f = &BPoly::monomial(0, spec.s1, spec.c1.clone())
            + &BPoly::monomial(0, spec.s2, spec.c2.clone());
        return Ok(darboux_witness(trace, &d, f));
    }
    trace.push("cond:x-exponents-distinct:pass".into());

    if spec.r > 0 {
        // (b) r > 0 demands t2 = s2 = 0 and s1 > 0
        if spec.t2 > 0 || spec.s2 > 0 {
            trace.push("cond:positive-r-shape:fail(second-term-in-(x,y))".into());
            trace.push("rule:notsimple:stable-ideal-xy".into());
            return Ok(Verdict::not_simple(trace, Witness::StableIdealXY));
        }
        if spec.s1 == 0 {
            trace.push("cond:positive-r-shape:fail(s1=0)".into());
            trace.push("rule:notsimple:stable-ideal-uy".into());
            let u = &UPoly::monomial(spec.t1, spec.c1.clone())
                + &UPoly::constant(spec.c2.clone());
            return Ok(Verdict::not_simple(trace, Witness::StableIdealUY { u }));
        }
        trace.push("cond:positive-r-shape:pass".into());
        trace.push("rule:simple:yr-family".into());
        return Ok(Verdict::simple(trace));
    }

    // r = 0 from here on.
    if spec.s1 + spec.s2 == 0 {
        trace.push("cond:zero-r-shape:fail(no-y-term)".into());
        trace.push("rule:notsimple:pure-x-darboux-curve".into());
        let t1 = rat_int(spec.t1 as i64 + 1);
        let t2 = rat_int(spec.t2 as i64 + 1);
        let f = &(&BPoly::monomial(spec.t1 + 1, 0, &spec.c1 * &t2)
            + &BPoly::monomial(spec.t2 + 1, 0, &spec.c2 * &t1))
            + &BPoly::monomial(0, 1, -(&t1 * &t2));
        return Ok(darboux_witness(trace, &d, f));
    }
    if spec.s1 > 0 && spec.s2 > 0 {
        trace.push("cond:zero-r-shape:fail(both-terms-in-y)".into());
        trace.push("rule:notsimple:darboux-y".into());
        return Ok(darboux_witness(trace, &d, BPoly::var_y()));
    }
    trace.push("cond:zero-r-shape:pass".into());

    if spec.s2 == 0 {
        // second term is a pure power of x; s1 >= 1
        trace.push("rule:simple:ys-plus-const-family".into());
        return Ok(Verdict::simple(trace));
    }

    // s1 = 0 here.
    if spec.s2 == 1 {
        // divisibility criterion for d/dx + (a y + b) d/dy with
        // a = c2 x^t2, b = c1 x^t1
        let a = UPoly::monomial(spec.t2, spec.c2.clone());
        let b = UPoly::monomial(spec.t1, spec.c1.clone());
        let (p, ptrace) = pfrak(&a, &b)?;
        if p.is_zero() {
            trace.push("cond:divisibility-criterion:fail".into());
            trace.push("rule:notsimple:divisibility-criterion".into());
            return Ok(Verdict::not_simple(
                trace,
                Witness::CriterionOnly {
                    a,
                    b,
                    trace: ptrace,
                },
            ));
        }
        trace.push("cond:divisibility-criterion:pass".into());
        trace.push("rule:simple:linear-y-criterion".into());
        return Ok(Verdict::simple(trace));
    }

    // s2 >= 2, s1 = 0
    trace.push("rule:simple:xt-plus-ys-family".into());
    Ok(Verdict::simple(trace))
}

/// Witness construction when exactly one term survives (the other
/// coefficient vanished): index-symmetric with the live term's data.
fn single_live_term_witness(
    mut trace: Vec<String>,
    d: &Derivation,
    r: u32,
    t: u32,
    s: u32,
    c: &Rat,
) -> Verdict {
    if c.is_zero() {
        // dy = 0 entirely: y is constant under d
        trace.push("rule:notsimple:darboux-y".into());
        return darboux_witness(trace, d, BPoly::var_y());
    }
    if s > 0 {
        trace.push("rule:notsimple:darboux-y".into());
        darboux_witness(trace, d, BPoly::var_y())
    } else {
        trace.push("rule:notsimple:zero-coefficient-darboux-curve".into());
        let f = &BPoly::monomial(0, r + 1, rat_int(t as i64 + 1))
            - &BPoly::monomial(t + 1, 0, c * &rat_int(r as i64 + 1));
        darboux_witness(trace, d, f)
    }
}

/// Classification of the merged single-term derivation
/// y^r dx + c x^t y^s dy: never simple.
pub fn classify_degenerate(r: u32, t: u32, s: u32, c: &Rat) -> Verdict {
    let dx = BPoly::monomial(0, r, Rat::one());
    let dy = BPoly::monomial(t, s, c.clone());
    let d = Derivation::new(dx, dy);
    let trace = vec!["cond:two-distinct-terms:fail(single-term)".into()];
    single_live_term_witness(trace, &d, r, t, s, c)
}

/// Normalizes and classifies a raw spec; total on all inputs.
pub fn decide(raw: &BinomialDerivationSpec) -> Verdict {
    match normalize(raw) {
        Normalized::Binomial(spec) => classify(&spec).expect("normalize establishes the contract"),
        Normalized::SingleTerm { r, t, s, c } => classify_degenerate(r, t, s, &c),
    }
}

/// The derivation denoted by a normalized input.
pub fn derivation_of(n: &Normalized) -> Derivation {
    match n {
        Normalized::Binomial(spec) => spec.derivation(),
        Normalized::SingleTerm { r, t, s, c } => Derivation::new(
            BPoly::monomial(0, *r, Rat::one()),
            BPoly::monomial(*t, *s, c.clone()),
        ),
    }
}

/// Decides simplicity of d/dx + (a(x) y + b(x)) d/dy: simple exactly when
/// the iterated-division polynomial of (a, b) is nonzero. Errors when a = 0.
pub fn shamsuddin_simple(a: &UPoly, b: &UPoly) -> Result<(bool, PfrakTrace), PfrakError> {
    let (p, trace) = pfrak(a, b)?;
    Ok((!p.is_zero(), trace))
}

// ---------------------------------------------------------------------------
// Scaling-relation data
// ---------------------------------------------------------------------------

/// Which unit-coefficient family a spec reduces to by diagonal scaling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalingFamily {
    /// dy = x^u (c1 x^t y^s + c2): second term constant in y (s2 = 0).
    ConstantSecondTerm,
    /// dy = x^u (c1 x^t + c2 y^s): second term a pure y-power (s1 = 0, s >= 2).
    YPowerSecondTerm,
}

/// Normalization data for the scaling reduction: exponents (u, t, s), the
/// order v of the required scale factor, and the target value of alpha^v.
/// alpha itself is never materialized; tests instantiate it rationally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedSpec {
    pub family: ScalingFamily,
    pub u: u32,
    pub t: u32,
    pub s: u32,
    pub v: u32,
    pub alpha_power_target: Rat,
}

/// Extracts (u, t, s, v) and the alpha^v relation for specs in one of the
/// two scaling families. Errors otherwise.
pub fn scaling_relation(spec: &BinomialDerivationSpec) -> Result<NormalizedSpec, DeciderError> {
    if spec.r != 0
        || spec.c1.is_zero()
        || spec.c2.is_zero()
        || spec.t1 <= spec.t2
    {
        return Err(DeciderError::FamilyMismatch);
    }
    let u = spec.t2;
    let t = spec.t1 - spec.t2;
    let pow = |c: &Rat, n: u32| -> Rat {
        let mut acc = Rat::one();
        for _ in 0..n {
            acc = &acc * c;
        }
        acc
    };
    if spec.s2 == 0 && spec.s1 >= 1 {
        let s = spec.s1;
        let v = t + (u + 1) * s;
        // alpha^v = c2^{1-s} * c1^{-1}: the value that makes the scaling
        // x -> alpha*x, y -> c2*alpha^{u+1}*y carry this derivation onto
        // alpha^{-1} times its unit-coefficient form, checked exactly by
        // the conjugation test suite.
        let target = Rat::one() / (&pow(&spec.c2, s - 1) * &spec.c1);
        Ok(NormalizedSpec {
            family: ScalingFamily::ConstantSecondTerm,
            u,
            t,
            s,
            v,
            alpha_power_target: target,
        })
    } else if spec.s1 == 0 && spec.s2 >= 2 {
        let s = spec.s2;
        let v = (s - 1) * t + (u + 1) * s;
        // alpha^v = c1^{1-s} * c2^{-1}, mirroring the other family with the
        // scaling x -> alpha*x, y -> c1*alpha^{u+t+1}*y.
        let target = Rat::one() / (&pow(&spec.c1, s - 1) * &spec.c2);
        Ok(NormalizedSpec {
            family: ScalingFamily::YPowerSecondTerm,
            u,
            t,
            s,
            v,
            alpha_power_target: target,
        })
    } else {
        Err(DeciderError::FamilyMismatch)
    }
}

/// CSV/JSON-friendly description of a witness.
pub fn witness_fields(w: Option<&Witness>) -> (String, String, String) {
    match w {
        None => (String::new(), String::new(), String::new()),
        Some(Witness::DarbouxElement { f, lambda }) => (
            "darboux".into(),
            format_poly(f),
            format_poly(lambda),
        ),
        Some(Witness::StableIdealXY) => ("stable-ideal-xy".into(), String::new(), String::new()),
        Some(Witness::StableIdealUY { u }) => (
            "stable-ideal-uy".into(),
            format_poly(&u.to_bpoly()),
            String::new(),
        ),
        Some(Witness::CriterionOnly { a, b, trace }) => (
            "criterion-pfrak-zero".into(),
            // semicolon separator keeps CSV cells comma-free
            format!(
                "pfrak({}; {})",
                format_poly(&a.to_bpoly()),
                format_poly(&b.to_bpoly())
            ),
            format_poly(&trace.result.to_bpoly()),
        ),
    }
}

/// Renders a rational for CSV cells.
pub fn csv_rat(c: &Rat) -> String {
    format_rat(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::rat;

    fn spec(r: u32, t1: u32, s1: u32, t2: u32, s2: u32, c1: Rat, c2: Rat) -> BinomialDerivationSpec {
        BinomialDerivationSpec {
            r,
            t1,
            s1,
            t2,
            s2,
            c1,
            c2,
        }
    }

    fn one() -> Rat {
        Rat::one()
    }

    #[test]
    fn yr_family_is_simple() {
        let v = decide(&spec(1, 1, 1, 0, 0, one(), one()));
        assert_eq!(v.outcome, Outcome::Simple);
        assert_eq!(v.rule(), "rule:simple:yr-family");
    }

    #[test]
    fn pure_x_curve_witness() {
        // d = dx + (x^2 + 1) dy: x^3 + 3x - 3y is killed
        let v = decide(&spec(0, 2, 0, 0, 0, one(), one()));
        assert_eq!(v.outcome, Outcome::NotSimple);
        match v.witness.as_ref().unwrap() {
            Witness::DarbouxElement { f, lambda } => {
                let expected = BPoly::from_terms([
                    ((3, 0), Rat::one()),
                    ((1, 0), rat_int(3)),
                    ((0, 1), rat_int(-3)),
                ]);
                // witness is stated up to the published scaling
                assert_eq!(f, &expected);
                assert!(lambda.is_zero());
            }
            other => panic!("unexpected witness {other:?}"),
        }
        assert!(verify_witness(
            &spec(0, 2, 0, 0, 0, one(), one()).derivation(),
            &v
        ));
    }

    #[test]
    fn criterion_only_case() {
        let v = decide(&spec(0, 3, 0, 1, 1, one(), one()));
        assert_eq!(v.outcome, Outcome::NotSimple);
        assert!(matches!(
            v.witness,
            Some(Witness::CriterionOnly { .. })
        ));
    }

    #[test]
    fn criterion_pass_case() {
        let v = decide(&spec(0, 2, 0, 1, 1, one(), one()));
        assert_eq!(v.outcome, Outcome::Simple);
        assert_eq!(v.rule(), "rule:simple:linear-y-criterion");
    }

    #[test]
    fn stable_xy_case() {
        // r = 2, second term x^0 y^1: both images lie in (x, y)
        let v = decide(&spec(2, 1, 1, 0, 1, one(), one()));
        assert_eq!(v.outcome, Outcome::NotSimple);
        assert_eq!(v.witness, Some(Witness::StableIdealXY));
        assert!(verify_witness(
            &spec(2, 1, 1, 0, 1, one(), one()).derivation(),
            &v
        ));
    }

    #[test]
    fn equal_x_exponents_beat_positive_r() {
        // t1 = t2 = 1 triggers the Darboux rule even though r > 0:
        // d = (y^2, xy + x) sends y + 1 to x(y + 1)
        let v = decide(&spec(2, 1, 1, 1, 0, one(), one()));
        assert_eq!(v.outcome, Outcome::NotSimple);
        assert_eq!(v.rule(), "rule:notsimple:equal-x-exponents-darboux");
        match v.witness.as_ref().unwrap() {
            Witness::DarbouxElement { f, lambda } => {
                assert_eq!(f, &(&BPoly::var_y() + &BPoly::one()));
                assert_eq!(lambda, &BPoly::var_x());
            }
            other => panic!("unexpected witness {other:?}"),
        }
        assert!(verify_witness(
            &spec(2, 1, 1, 1, 0, one(), one()).derivation(),
            &v
        ));
    }

    #[test]
    fn constant_tail_family_simple() {
        let v = decide(&spec(0, 1, 1, 0, 0, rat_int(2), rat_int(3)));
        assert_eq!(v.outcome, Outcome::Simple);
        assert_eq!(v.rule(), "rule:simple:ys-plus-const-family");
    }

    #[test]
    fn normalize_swaps_and_merges() {
        let raw = spec(0, 0, 0, 2, 0, one(), one());
        match normalize(&raw) {
            Normalized::Binomial(s) => {
                assert_eq!((s.t1, s.t2), (2, 0));
                assert_eq!(s.c1, one());
            }
            _ => panic!("not degenerate"),
        }

        let raw = spec(0, 1, 1, 1, 1, one(), -one());
        match normalize(&raw) {
            Normalized::SingleTerm { c, .. } => assert!(c.is_zero()),
            _ => panic!("should merge"),
        }

        // idempotence
        let s1 = spec(1, 3, 2, 1, 0, one(), rat(1, 2));
        match normalize(&s1) {
            Normalized::Binomial(s) => assert_eq!(s, s1),
            _ => panic!(),
        }
    }

    #[test]
    fn classify_rejects_unnormalized() {
        let raw = spec(0, 0, 0, 2, 0, one(), one());
        assert_eq!(classify(&raw), Err(DeciderError::NotNormalized));
    }

    #[test]
    fn degenerate_witnesses_verify() {
        // c = 0
        let v = classify_degenerate(1, 2, 1, &Rat::zero());
        assert_eq!(v.outcome, Outcome::NotSimple);
        // r=0, t=1, s=0, c=1: 2y - x^2 is killed
        let v = classify_degenerate(0, 1, 0, &one());
        match v.witness.as_ref().unwrap() {
            Witness::DarbouxElement { f, lambda } => {
                let expected =
                    &BPoly::monomial(0, 1, rat_int(2)) - &BPoly::monomial(2, 0, one());
                assert_eq!(f, &expected);
                assert!(lambda.is_zero());
            }
            other => panic!("unexpected witness {other:?}"),
        }
        // r=1, t=0, s=1, c=1: y with lambda = 1
        let v = classify_degenerate(1, 0, 1, &one());
        match v.witness.as_ref().unwrap() {
            Witness::DarbouxElement { f, lambda } => {
                assert_eq!(f, &BPoly::var_y());
                assert_eq!(lambda, &BPoly::one());
            }
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn shamsuddin_examples() {
        let xn = |n| UPoly::monomial(n, Rat::one());
        assert!(shamsuddin_simple(&xn(1), &xn(2)).unwrap().0);
        assert!(!shamsuddin_simple(&xn(1), &xn(3)).unwrap().0);
        assert!(!shamsuddin_simple(&UPoly::one(), &xn(5)).unwrap().0);
        assert!(shamsuddin_simple(&UPoly::zero(), &xn(1)).is_err());
    }

    #[test]
    fn scaling_relation_examples() {
        // u=0, t=1, s=1, c1=1/4, c2=1 -> v = 2, target 4
        let n = scaling_relation(&spec(0, 1, 1, 0, 0, rat(1, 4), one())).unwrap();
        assert_eq!((n.u, n.t, n.s, n.v), (0, 1, 1, 2));
        assert_eq!(n.alpha_power_target, rat_int(4));
        assert_eq!(n.family, ScalingFamily::ConstantSecondTerm);

        // pure y-power family: u=0, t=1, s=2, unit coefficients -> v=3, target 1
        let n = scaling_relation(&spec(0, 1, 0, 0, 2, one(), one())).unwrap();
        assert_eq!((n.u, n.t, n.s, n.v), (0, 1, 2, 3));
        assert_eq!(n.alpha_power_target, one());
        assert_eq!(n.family, ScalingFamily::YPowerSecondTerm);

        // u=1, t=2, s=3 -> v = 2 + 2*3 = 8
        let n = scaling_relation(&spec(0, 3, 3, 1, 0, one(), one())).unwrap();
        assert_eq!((n.u, n.t, n.s, n.v), (1, 2, 3, 8));
        assert_eq!(n.alpha_power_target, one());

        assert!(scaling_relation(&spec(1, 1, 1, 0, 0, one(), one())).is_err());
    }
}
