//! Exact rational scalars and sparse polynomial arithmetic over Q.
//!
//! Two polynomial types are provided: [`UPoly`] (univariate in x) and
//! [`BPoly`] (bivariate in x, y). Both keep a canonical sparse form: no
//! stored coefficient is ever zero, so structural equality is semantic
//! equality. All operations are exact; there is no floating point anywhere
//! in this crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

/// Arbitrary-precision rational scalar. `BigRational` keeps the invariants
/// we need: positive denominator, fully reduced, zero stored as 0/1.
pub type Rat = BigRational;

/// Shorthand for an integer rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for the rational n/d. Panics on d = 0.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum QpolyError {
    #[error("division by the zero polynomial")]
    ZeroDivisor,
}

// ---------------------------------------------------------------------------
// Univariate polynomials
// ---------------------------------------------------------------------------

/// Sparse univariate polynomial over `Rat` in the variable x.
///
/// The degree of the zero polynomial is `None` rather than a numeric
/// sentinel, so no arithmetic is ever performed on it.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UPoly {
    coeffs: BTreeMap<u32, Rat>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly::default()
    }

    pub fn one() -> Self {
        UPoly::monomial(0, Rat::one())
    }

    /// c * x^exp.
    pub fn monomial(exp: u32, c: Rat) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(exp, c);
        }
        UPoly { coeffs }
    }

    pub fn constant(c: Rat) -> Self {
        UPoly::monomial(0, c)
    }

    /// Builds a polynomial from (exponent, coefficient) pairs, summing
    /// duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (u32, Rat)>>(terms: I) -> Self {
        let mut p = UPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: u32, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.remove(&exp) {
            None => {
                self.coeffs.insert(exp, c);
            }
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.coeffs.insert(exp, sum);
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: u32) -> Rat {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.values().next_back()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rat)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn scale(&self, c: &Rat) -> UPoly {
        if c.is_zero() {
            return UPoly::zero();
        }
        UPoly {
            coeffs: self.coeffs.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Formal derivative d/dx.
    pub fn derivative(&self) -> UPoly {
        UPoly::from_terms(
            self.coeffs
                .iter()
                .filter(|(e, _)| **e > 0)
                .map(|(e, c)| (e - 1, c * rat_int(*e as i64))),
        )
    }

    /// Euclidean division: returns (q, r) with `self = q*a + r` and
    /// `deg r < deg a`. Errors when `a` is zero.
    pub fn divmod(&self, a: &UPoly) -> Result<(UPoly, UPoly), QpolyError> {
        let deg_a = a.degree().ok_or(QpolyError::ZeroDivisor)?;
        let lead_a = a.leading_coeff().expect("nonzero divisor").clone();
        let mut q = UPoly::zero();
        let mut r = self.clone();
        while let Some(deg_r) = r.degree() {
            if deg_r < deg_a {
                break;
            }
            let factor = r.leading_coeff().expect("nonzero remainder") / &lead_a;
            let shift = deg_r - deg_a;
            q.add_term(shift, factor.clone());
            // r -= factor * x^shift * a
            for (e, c) in a.coeffs.iter() {
                r.add_term(e + shift, -(&factor * c));
            }
        }
        Ok((q, r))
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        let mut last_exp: Option<u32> = None;
        for (e, c) in self.coeffs.iter().rev() {
            if let Some(prev) = last_exp {
                for _ in 0..(prev - e) {
                    acc = acc * x;
                }
            }
            acc += c;
            last_exp = Some(*e);
        }
        if let Some(e) = last_exp {
            for _ in 0..e {
                acc = acc * x;
            }
        }
        acc
    }

    /// The same polynomial viewed in Q[x, y].
    pub fn to_bpoly(&self) -> BPoly {
        BPoly::from_terms(self.coeffs.iter().map(|(e, c)| ((*e, 0), c.clone())))
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let mut out = self.clone();
        for (e, c) in rhs.coeffs.iter() {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        let mut out = self.clone();
        for (e, c) in rhs.coeffs.iter() {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        let mut out = UPoly::zero();
        for (e1, c1) in self.coeffs.iter() {
            for (e2, c2) in rhs.coeffs.iter() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

// ---------------------------------------------------------------------------
// Bivariate polynomials
// ---------------------------------------------------------------------------

/// Sparse bivariate polynomial over `Rat` in x and y, keyed by the exponent
/// pair (x-exponent, y-exponent). The `BTreeMap` key order is exactly the
/// lexicographic order with x > y, so the last entry is the lex leading term.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BPoly {
    terms: BTreeMap<(u32, u32), Rat>,
}

impl BPoly {
    pub fn zero() -> Self {
        BPoly::default()
    }

    pub fn one() -> Self {
        BPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        BPoly::monomial(0, 0, c)
    }

    pub fn var_x() -> Self {
        BPoly::monomial(1, 0, Rat::one())
    }

    pub fn var_y() -> Self {
        BPoly::monomial(0, 1, Rat::one())
    }

    /// c * x^i * y^j.
    pub fn monomial(i: u32, j: u32, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), Rat)>>(terms: I) -> Self {
        let mut p = BPoly::zero();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    fn add_term(&mut self, key: (u32, u32), c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&key) {
            None => {
                self.terms.insert(key, c);
            }
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(key, sum);
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|k| *k == (0, 0))
    }

    pub fn deg_x(&self) -> Option<u32> {
        self.terms.keys().map(|(i, _)| *i).max()
    }

    pub fn deg_y(&self) -> Option<u32> {
        self.terms.keys().map(|(_, j)| *j).max()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rat {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &Rat)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Leading term in lex order with x > y.
    pub fn leading_term(&self) -> Option<((u32, u32), &Rat)> {
        self.terms.iter().next_back().map(|(k, c)| (*k, c))
    }

    pub fn scale(&self, c: &Rat) -> BPoly {
        if c.is_zero() {
            return BPoly::zero();
        }
        BPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> BPoly {
        let mut out = BPoly::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Formal partial derivative with respect to x.
    pub fn partial_x(&self) -> BPoly {
        BPoly::from_terms(
            self.terms
                .iter()
                .filter(|((i, _), _)| *i > 0)
                .map(|((i, j), c)| ((i - 1, *j), c * rat_int(*i as i64))),
        )
    }

    /// Formal partial derivative with respect to y.
    pub fn partial_y(&self) -> BPoly {
        BPoly::from_terms(
            self.terms
                .iter()
                .filter(|((_, j), _)| *j > 0)
                .map(|((i, j), c)| ((*i, j - 1), c * rat_int(*j as i64))),
        )
    }

    /// Exact division: returns `Some(q)` with `self = q * f` when `f`
    /// divides `self`, otherwise `None`. Errors when `f` is zero.
    ///
    /// Single-divisor multivariate division in lex order (x > y): whenever
    /// the leading term of the running remainder is not divisible by the
    /// leading term of `f`, no multiple of `f` can cancel it, so the
    /// division is inexact and we stop.
    pub fn exact_div(&self, f: &BPoly) -> Result<Option<BPoly>, QpolyError> {
        let ((fa, fb), fc) = f.leading_term().ok_or(QpolyError::ZeroDivisor)?;
        let fc = fc.clone();
        let mut r = self.clone();
        let mut q = BPoly::zero();
        while let Some(((ra, rb), rc)) = r.leading_term() {
            if ra < fa || rb < fb {
                return Ok(None);
            }
            let key = (ra - fa, rb - fb);
            let factor = rc / &fc;
            q.add_term(key, factor.clone());
            for ((i, j), c) in f.terms.iter() {
                r.add_term((i + key.0, j + key.1), -(&factor * c));
            }
        }
        Ok(Some(q))
    }

    /// Evaluates `self(px, py)` by Horner-style composition: write
    /// `self = sum_i x^i g_i(y)` and fold over descending i, evaluating
    /// each g_i at `py` the same way.
    pub fn substitute(&self, px: &BPoly, py: &BPoly) -> BPoly {
        // Group coefficients by x-exponent.
        let mut by_x: BTreeMap<u32, Vec<(u32, Rat)>> = BTreeMap::new();
        for ((i, j), c) in self.terms.iter() {
            by_x.entry(*i).or_default().push((*j, c.clone()));
        }
        let eval_y = |terms: &[(u32, Rat)]| -> BPoly {
            let mut acc = BPoly::zero();
            let mut last: Option<u32> = None;
            for (j, c) in terms.iter().rev() {
                if let Some(prev) = last {
                    for _ in 0..(prev - j) {
                        acc = &acc * py;
                    }
                }
                acc = &acc + &BPoly::constant(c.clone());
                last = Some(*j);
            }
            if let Some(j) = last {
                for _ in 0..j {
                    acc = &acc * py;
                }
            }
            acc
        };
        let mut acc = BPoly::zero();
        let mut last: Option<u32> = None;
        for (i, terms) in by_x.iter().rev() {
            if let Some(prev) = last {
                for _ in 0..(prev - i) {
                    acc = &acc * px;
                }
            }
            acc = &acc + &eval_y(terms);
            last = Some(*i);
        }
        if let Some(i) = last {
            for _ in 0..i {
                acc = &acc * px;
            }
        }
        acc
    }

    /// Sets y = 0, leaving a univariate polynomial in x.
    pub fn eval_y_zero(&self) -> UPoly {
        UPoly::from_terms(
            self.terms
                .iter()
                .filter(|((_, j), _)| *j == 0)
                .map(|((i, _), c)| (*i, c.clone())),
        )
    }

    /// Conversion to univariate in x; `None` when any term involves y.
    pub fn to_upoly(&self) -> Option<UPoly> {
        if self.terms.keys().any(|(_, j)| *j > 0) {
            return None;
        }
        Some(UPoly::from_terms(
            self.terms.iter().map(|((i, _), c)| (*i, c.clone())),
        ))
    }
}

impl Add for &BPoly {
    type Output = BPoly;
    fn add(self, rhs: &BPoly) -> BPoly {
        let mut out = self.clone();
        for (k, c) in rhs.terms.iter() {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl Sub for &BPoly {
    type Output = BPoly;
    fn sub(self, rhs: &BPoly) -> BPoly {
        let mut out = self.clone();
        for (k, c) in rhs.terms.iter() {
            out.add_term(*k, -c);
        }
        out
    }
}

impl Mul for &BPoly {
    type Output = BPoly;
    fn mul(self, rhs: &BPoly) -> BPoly {
        let mut out = BPoly::zero();
        for ((i1, j1), c1) in self.terms.iter() {
            for ((i2, j2), c2) in rhs.terms.iter() {
                out.add_term((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BPoly {
    type Output = BPoly;
    fn neg(self) -> BPoly {
        BPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}
