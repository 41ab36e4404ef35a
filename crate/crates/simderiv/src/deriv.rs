//! Derivations of Q[x, y]: application, Darboux certification, stability of
//! the two ideal shapes used by the classifier, and conjugation by diagonal
//! scaling automorphisms.

use crate::qpoly::{BPoly, Rat, UPoly};
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum DerivError {
    #[error("a Darboux element must be nonzero and nonconstant")]
    UnitOrZeroCandidate,
    #[error("the ideal generator u must be nonzero")]
    ZeroIdealGenerator,
    #[error("scaling coefficients must be nonzero")]
    SingularScaling,
    #[error("degree bounds are undefined for the zero derivation")]
    ZeroDerivation,
}

/// A derivation of Q[x, y], determined by the images of x and y.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub dx: BPoly,
    pub dy: BPoly,
}

impl Derivation {
    pub fn new(dx: BPoly, dy: BPoly) -> Self {
        Derivation { dx, dy }
    }

    pub fn is_zero(&self) -> bool {
        self.dx.is_zero() && self.dy.is_zero()
    }

    /// Applies the derivation: d(f) = dx * df/dx + dy * df/dy.
    pub fn apply(&self, f: &BPoly) -> BPoly {
        &(&self.dx * &f.partial_x()) + &(&self.dy * &f.partial_y())
    }

    pub fn scale(&self, c: &Rat) -> Derivation {
        Derivation {
            dx: self.dx.scale(c),
            dy: self.dy.scale(c),
        }
    }

    /// Conjugation by a diagonal scaling: returns e = theta . d . theta^-1,
    /// so e(f) = theta(d(theta^-1(f))) for every f.
    pub fn conjugate(&self, theta: &ScalingAut) -> Derivation {
        let px = BPoly::monomial(1, 0, theta.ax.clone());
        let py = BPoly::monomial(0, 1, theta.by.clone());
        let ax_inv = Rat::one() / &theta.ax;
        let by_inv = Rat::one() / &theta.by;
        Derivation {
            dx: self.dx.substitute(&px, &py).scale(&ax_inv),
            dy: self.dy.substitute(&px, &py).scale(&by_inv),
        }
    }
}

/// Diagonal scaling automorphism x -> ax * x, y -> by * y with nonzero
/// rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalingAut {
    ax: Rat,
    by: Rat,
}

impl ScalingAut {
    pub fn new(ax: Rat, by: Rat) -> Result<Self, DerivError> {
        if ax.is_zero() || by.is_zero() {
            return Err(DerivError::SingularScaling);
        }
        Ok(ScalingAut { ax, by })
    }

    pub fn identity() -> Self {
        ScalingAut {
            ax: Rat::one(),
            by: Rat::one(),
        }
    }

    pub fn ax(&self) -> &Rat {
        &self.ax
    }

    pub fn by(&self) -> &Rat {
        &self.by
    }

    /// Composition `self . other` (apply `other` first).
    pub fn compose(&self, other: &ScalingAut) -> ScalingAut {
        ScalingAut {
            ax: &self.ax * &other.ax,
            by: &self.by * &other.by,
        }
    }
}

/// A verified eigen-relation d(f) = lambda * f with f nonzero nonconstant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DarbouxCertificate {
    pub f: BPoly,
    pub lambda: BPoly,
}

/// Certifies f as a Darboux element of d: computes d(f) and divides by f
/// exactly. Returns `None` when f does not divide d(f). lambda = 0 is a
/// valid eigenvalue (covering d(f) = 0). Errors when f is zero or constant.
pub fn darboux_certificate(
    d: &Derivation,
    f: &BPoly,
) -> Result<Option<DarbouxCertificate>, DerivError> {
    if f.is_zero() || f.is_constant() {
        return Err(DerivError::UnitOrZeroCandidate);
    }
    let image = d.apply(f);
    let quotient = image.exact_div(f).expect("f nonzero");
    Ok(quotient.map(|lambda| DarbouxCertificate {
        f: f.clone(),
        lambda,
    }))
}

/// Is the ideal (x, y) stable under d? Membership in (x, y) is just the
/// vanishing of the constant term.
pub fn ideal_stable_xy(d: &Derivation) -> bool {
    d.dx.coeff(0, 0).is_zero() && d.dy.coeff(0, 0).is_zero()
}

/// Is the ideal (u(x), y) stable under d? A polynomial g lies in (u, y)
/// exactly when g(x, 0) reduces to 0 modulo u. Checked for the two
/// generators d(u) and d(y). Errors when u = 0.
pub fn ideal_stable_uy(d: &Derivation, u: &UPoly) -> Result<bool, DerivError> {
    if u.is_zero() {
        return Err(DerivError::ZeroIdealGenerator);
    }
    let member = |g: &BPoly| -> bool {
        let (_, r) = g.eval_y_zero().divmod(u).expect("u nonzero");
        r.is_zero()
    };
    let du = d.apply(&u.to_bpoly());
    Ok(member(&du) && member(&d.dy))
}
