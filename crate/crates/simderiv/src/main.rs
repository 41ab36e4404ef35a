//! Command-line front end: classification, iterated-division polynomials,
//! Darboux search, parameter-grid sweeps, and the self-test suites.
//!
//! Exit codes: 0 = success (for `classify`: Simple), 1 = NotSimple,
//! 2 = usage error, 3 = internal verification failure.

use clap::{Parser, Subcommand, ValueEnum};
use simderiv::decider::{
    decide, derivation_of, normalize, verify_witness, witness_fields, BinomialDerivationSpec,
    Outcome,
};
use simderiv::deriv::Derivation;
use simderiv::exprio::{format_poly, format_rat, parse_poly, parse_rat};
use simderiv::oracle::{darboux_search, SearchConfig, SearchMode};
use simderiv::pfrak::pfrak;
use simderiv::qpoly::{BPoly, Rat, UPoly};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

mod selftest;

#[derive(Parser)]
#[command(name = "simderiv", version, about = "Decides simplicity of two-term polynomial derivations of Q[x, y], with verifiable witnesses")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    ZeroLambda,
    SingleMonomialLambda,
    Both,
}

impl From<ModeArg> for SearchMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::ZeroLambda => SearchMode::ZeroLambda,
            ModeArg::SingleMonomialLambda => SearchMode::SingleMonomialLambda,
            ModeArg::Both => SearchMode::Both,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify y^r dx + (c1 x^t1 y^s1 + c2 x^t2 y^s2) dy
    Classify {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        t1: u32,
        #[arg(long)]
        s1: u32,
        #[arg(long)]
        t2: u32,
        #[arg(long)]
        s2: u32,
        /// Rational coefficient, e.g. "1", "-2", "1/2"
        #[arg(long)]
        c1: String,
        #[arg(long)]
        c2: String,
        /// Re-check the witness through the derivation module
        #[arg(long)]
        verify: bool,
        /// Emit the verdict as JSON
        #[arg(long)]
        json: bool,
    },
    /// Compute the iterated-division polynomial p(a, b) for a, b in Q[x]
    Pfrak {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// Print each quotient/remainder step
        #[arg(long)]
        trace: bool,
    },
    /// Bounded-degree Darboux element search for d = (dx, dy)
    Darboux {
        #[arg(long)]
        dx: String,
        #[arg(long)]
        dy: String,
        #[arg(long, default_value_t = 4)]
        max_degx: u32,
        #[arg(long, default_value_t = 4)]
        max_degy: u32,
        #[arg(long, value_enum, default_value_t = ModeArg::Both)]
        mode: ModeArg,
    },
    /// Sweep a parameter grid and write one CSV row per cell
    Grid {
        /// Inclusive range "LO..HI" or a single value
        #[arg(long)]
        r: String,
        #[arg(long)]
        t1: String,
        #[arg(long)]
        s1: String,
        #[arg(long)]
        t2: String,
        #[arg(long)]
        s2: String,
        /// Comma-separated rational coefficient set, e.g. "1,-1,1/2"
        #[arg(long)]
        c1: String,
        #[arg(long)]
        c2: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        verify: bool,
    },
    /// Run the built-in property suites
    Selftest {
        /// Debug hook: flip a sign in the division-scheme results to prove
        /// the suite can fail
        #[arg(long, hide = true)]
        inject_pfrak_fault: bool,
    },
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn parse_rat_flag(name: &str, src: &str) -> Result<Rat, String> {
    parse_rat(src).map_err(|e| format!("--{name}: {e}"))
}

fn parse_poly_flag(name: &str, src: &str) -> Result<BPoly, String> {
    parse_poly(src).map_err(|e| format!("--{name}: {e}"))
}

fn parse_upoly_flag(name: &str, src: &str) -> Result<UPoly, String> {
    let p = parse_poly_flag(name, src)?;
    p.to_upoly()
        .ok_or_else(|| format!("--{name}: expected a polynomial in x only"))
}

/// Inclusive "LO..HI" range or a single value.
fn parse_range(name: &str, src: &str) -> Result<(u32, u32), String> {
    let parse_u32 =
        |s: &str| -> Result<u32, String> { s.trim().parse().map_err(|_| format!("--{name}: expected a non-negative integer, got {s:?}")) };
    if let Some((lo, hi)) = src.split_once("..") {
        let lo = parse_u32(lo)?;
        let hi = parse_u32(hi)?;
        if lo > hi {
            return Err(format!("--{name}: empty range {src:?}"));
        }
        Ok((lo, hi))
    } else {
        let v = parse_u32(src)?;
        Ok((v, v))
    }
}

fn parse_coeff_set(name: &str, src: &str) -> Result<Vec<Rat>, String> {
    let items: Vec<&str> = src.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    if items.is_empty() {
        return Err(format!("--{name}: empty coefficient set"));
    }
    items
        .into_iter()
        .map(|s| parse_rat_flag(name, s))
        .collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Classify {
            r,
            t1,
            s1,
            t2,
            s2,
            c1,
            c2,
            verify,
            json,
        } => {
            let (c1, c2) = match (parse_rat_flag("c1", &c1), parse_rat_flag("c2", &c2)) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(e), _) | (_, Err(e)) => return usage_error(e),
            };
            let raw = BinomialDerivationSpec {
                r,
                t1,
                s1,
                t2,
                s2,
                c1,
                c2,
            };
            cmd_classify(&raw, verify, json)
        }
        Command::Pfrak { a, b, trace } => {
            let (a, b) = match (parse_upoly_flag("a", &a), parse_upoly_flag("b", &b)) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(e), _) | (_, Err(e)) => return usage_error(e),
            };
            if a.is_zero() {
                return usage_error("--a must be nonzero");
            }
            cmd_pfrak(&a, &b, trace)
        }
        Command::Darboux {
            dx,
            dy,
            max_degx,
            max_degy,
            mode,
        } => {
            let (dx, dy) = match (parse_poly_flag("dx", &dx), parse_poly_flag("dy", &dy)) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(e), _) | (_, Err(e)) => return usage_error(e),
            };
            cmd_darboux(&Derivation::new(dx, dy), max_degx, max_degy, mode.into())
        }
        Command::Grid {
            r,
            t1,
            s1,
            t2,
            s2,
            c1,
            c2,
            out,
            verify,
        } => {
            let ranges = (|| -> Result<_, String> {
                Ok((
                    parse_range("r", &r)?,
                    parse_range("t1", &t1)?,
                    parse_range("s1", &s1)?,
                    parse_range("t2", &t2)?,
                    parse_range("s2", &s2)?,
                    parse_coeff_set("c1", &c1)?,
                    parse_coeff_set("c2", &c2)?,
                ))
            })();
            match ranges {
                Ok((r, t1, s1, t2, s2, c1, c2)) => cmd_grid(r, t1, s1, t2, s2, &c1, &c2, &out, verify),
                Err(e) => usage_error(e),
            }
        }
        Command::Selftest { inject_pfrak_fault } => selftest::run(inject_pfrak_fault),
    }
}

fn cmd_classify(raw: &BinomialDerivationSpec, verify: bool, json: bool) -> ExitCode {
    let verdict = decide(raw);
    let d = derivation_of(&normalize(raw));
    let verified = if verify {
        Some(verify_witness(&d, &verdict))
    } else {
        None
    };
    if json {
        let mut v = verdict.to_json();
        if let Some(ok) = verified {
            v["verified"] = serde_json::Value::Bool(ok);
        }
        println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
    } else {
        match verdict.outcome {
            Outcome::Simple => println!("Simple"),
            Outcome::NotSimple => println!("NotSimple"),
        }
        for step in &verdict.rule_trace {
            println!("  {step}");
        }
        let (kind, f, lambda) = witness_fields(verdict.witness.as_ref());
        if !kind.is_empty() {
            println!("witness: {kind}");
            if !f.is_empty() {
                println!("  f = {f}");
            }
            if !lambda.is_empty() {
                println!("  lambda = {lambda}");
            }
        }
        if let Some(ok) = verified {
            println!("verification: {}", if ok { "PASS" } else { "FAIL" });
        }
    }
    if verified == Some(false) {
        return ExitCode::from(3);
    }
    match verdict.outcome {
        Outcome::Simple => ExitCode::SUCCESS,
        Outcome::NotSimple => ExitCode::from(1),
    }
}

fn cmd_pfrak(a: &UPoly, b: &UPoly, trace: bool) -> ExitCode {
    let (p, t) = pfrak(a, b).expect("a nonzero");
    println!("{}", format_poly(&p.to_bpoly()));
    if trace {
        for (i, step) in t.steps.iter().enumerate() {
            println!(
                "step {}: q = {}, r = {}",
                i + 1,
                format_poly(&step.quotient.to_bpoly()),
                format_poly(&step.remainder.to_bpoly())
            );
        }
    }
    ExitCode::SUCCESS
}

fn cmd_darboux(d: &Derivation, max_degx: u32, max_degy: u32, mode: SearchMode) -> ExitCode {
    let cfg = SearchConfig::new(max_degx, max_degy, mode);
    let certs = darboux_search(d, &cfg);
    if certs.is_empty() {
        println!("none found within bounds");
    } else {
        for c in &certs {
            println!("f = {}, lambda = {}", format_poly(&c.f), format_poly(&c.lambda));
        }
    }
    ExitCode::SUCCESS
}

const GRID_CELL_CAP: u64 = 1_000_000;

#[allow(clippy::too_many_arguments)]
fn cmd_grid(
    r: (u32, u32),
    t1: (u32, u32),
    s1: (u32, u32),
    t2: (u32, u32),
    s2: (u32, u32),
    c1s: &[Rat],
    c2s: &[Rat],
    out: &std::path::Path,
    verify: bool,
) -> ExitCode {
    let span = |(lo, hi): (u32, u32)| (hi - lo + 1) as u64;
    let cells = span(r) * span(t1) * span(s1) * span(t2) * span(s2)
        * c1s.len() as u64
        * c2s.len() as u64;
    if cells > GRID_CELL_CAP {
        return usage_error(format!(
            "grid has {cells} cells, exceeding the cap of {GRID_CELL_CAP}"
        ));
    }
    let dir = out.parent().filter(|p| !p.as_os_str().is_empty());
    let mut tmp = match tempfile::NamedTempFile::new_in(dir.unwrap_or(std::path::Path::new("."))) {
        Ok(f) => f,
        Err(e) => return usage_error(format!("cannot create output file: {e}")),
    };
    let mut any_verify_failure = false;
    let mut write_all = || -> std::io::Result<()> {
        writeln!(
            tmp,
            "r,t1,s1,t2,s2,c1,c2,verdict,rule,witness_kind,witness_f,witness_lambda,verified"
        )?;
        for rv in r.0..=r.1 {
            for t1v in t1.0..=t1.1 {
                for s1v in s1.0..=s1.1 {
                    for t2v in t2.0..=t2.1 {
                        for s2v in s2.0..=s2.1 {
                            for c1 in c1s {
                                for c2 in c2s {
                                    let raw = BinomialDerivationSpec {
                                        r: rv,
                                        t1: t1v,
                                        s1: s1v,
                                        t2: t2v,
                                        s2: s2v,
                                        c1: c1.clone(),
                                        c2: c2.clone(),
                                    };
                                    let verdict = decide(&raw);
                                    let verified = if verify {
                                        let d = derivation_of(&normalize(&raw));
                                        let ok = verify_witness(&d, &verdict);
                                        any_verify_failure |= !ok;
                                        if ok { "pass" } else { "fail" }
                                    } else {
                                        ""
                                    };
                                    let (kind, f, lambda) =
                                        witness_fields(verdict.witness.as_ref());
                                    writeln!(
                                        tmp,
                                        "{rv},{t1v},{s1v},{t2v},{s2v},{},{},{},{},{kind},{f},{lambda},{verified}",
                                        format_rat(c1),
                                        format_rat(c2),
                                        match verdict.outcome {
                                            Outcome::Simple => "Simple",
                                            Outcome::NotSimple => "NotSimple",
                                        },
                                        verdict.rule(),
                                    )?;
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    };
    if let Err(e) = write_all() {
        return usage_error(format!("write failed: {e}"));
    }
    if let Err(e) = tmp.persist(out) {
        return usage_error(format!("cannot persist output: {e}"));
    }
    if any_verify_failure {
        eprintln!("error: witness verification failed on at least one row");
        return ExitCode::from(3);
    }
    ExitCode::SUCCESS
}
