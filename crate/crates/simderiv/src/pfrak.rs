//! The iterated-division polynomial p(a, b) for a, b in Q[x].
//!
//! Starting from the division b = q1*a + r1, each further step divides the
//! derivative of the previous quotient: dq_i/dx = q_{i+1}*a + r_{i+1}. The
//! quotient degrees strictly decrease, so some q_{t+1} = 0 and the process
//! stops; p(a, b) is the sum r_1 + ... + r_{t+1}. Nonvanishing of p(a, b)
//! decides simplicity of the derivation d/dx + (a(x)y + b(x)) d/dy, which is
//! what makes the full execution trace worth keeping around.

use crate::qpoly::UPoly;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum PfrakError {
    #[error("the divisor polynomial a must be nonzero")]
    ZeroModulus,
    #[error("monomial criterion requires m > n, got n = {n}, m = {m}")]
    BadMonomialOrder { n: u32, m: u32 },
}

/// One division step: a quotient/remainder pair with deg r < deg a.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PfrakStep {
    pub quotient: UPoly,
    pub remainder: UPoly,
}

/// Full execution trace of the iterated division.
///
/// `steps[0]` divides b; `steps[i]` for i > 0 divides the derivative of
/// `steps[i-1].quotient`. The last step is the first one whose quotient is
/// zero, and `result` is the sum of all remainders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PfrakTrace {
    pub steps: Vec<PfrakStep>,
    pub result: UPoly,
}

impl PfrakTrace {
    /// Replays the trace against (a, b): checks every division identity and
    /// the remainder degree bound exactly.
    pub fn replay(&self, a: &UPoly, b: &UPoly) -> bool {
        if a.is_zero() || self.steps.is_empty() {
            return false;
        }
        let deg_a = a.degree().expect("nonzero a");
        let mut dividend = b.clone();
        let mut sum = UPoly::zero();
        for (i, step) in self.steps.iter().enumerate() {
            let recombined = &(&step.quotient * a) + &step.remainder;
            if recombined != dividend {
                return false;
            }
            if let Some(deg_r) = step.remainder.degree() {
                if deg_r >= deg_a {
                    return false;
                }
            }
            sum = &sum + &step.remainder;
            if i + 1 < self.steps.len() {
                if step.quotient.is_zero() {
                    return false; // only the last quotient may vanish
                }
                dividend = step.quotient.derivative();
            } else if !step.quotient.is_zero() {
                return false; // trace must run until the quotient dies
            }
        }
        sum == self.result
    }
}

/// Computes p(a, b) together with its execution trace. Errors when a = 0.
pub fn pfrak(a: &UPoly, b: &UPoly) -> Result<(UPoly, PfrakTrace), PfrakError> {
    if a.is_zero() {
        return Err(PfrakError::ZeroModulus);
    }
    let mut steps = Vec::new();
    let mut result = UPoly::zero();
    let (mut q, mut r) = b.divmod(a).expect("a nonzero");
    loop {
        result = &result + &r;
        let done = q.is_zero();
        steps.push(PfrakStep {
            quotient: q.clone(),
            remainder: r,
        });
        if done {
            break;
        }
        let next = q.derivative().divmod(a).expect("a nonzero");
        q = next.0;
        r = next.1;
    }
    Ok((
        result.clone(),
        PfrakTrace {
            steps,
            result,
        },
    ))
}

/// Closed-form vanishing criterion for monomials: p(x^n, x^m) = 0 exactly
/// when (n+1) divides (m-n). Requires m > n.
pub fn monomial_pfrak_vanishes(n: u32, m: u32) -> Result<bool, PfrakError> {
    if m <= n {
        return Err(PfrakError::BadMonomialOrder { n, m });
    }
    Ok((m - n) % (n + 1) == 0)
}
