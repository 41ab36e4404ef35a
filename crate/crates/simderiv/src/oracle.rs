//! Bounded-degree Darboux element search, independent of the classifier.
//!
//! The search looks for nonconstant f with d(f) = lambda * f where f stays
//! within configured degree bounds and lambda is either zero or a single
//! monomial with a rational coefficient. Both cases reduce to exact linear
//! algebra over Q:
//!
//! * lambda = 0: f ranges over the exact nullspace of the linear map
//!   f -> d(f) on the bounded coefficient space.
//! * lambda = b * x^i y^j: the rows of d(f) = b*m*f that do not involve b
//!   are solved first; on their kernel the remaining rows form a square
//!   eigenvalue problem whose characteristic polynomial is monic, so the
//!   rational candidates for b are exactly its rational roots. This is
//!   exhaustive over rational b at the given bounds.
//!
//! Every certificate is re-verified through `darboux_certificate` before it
//! is reported, and the result list is canonicalized (monic leading
//! coefficients, deduplicated, sorted) so output is reproducible
//! bit-for-bit.

use crate::deriv::{darboux_certificate, DarbouxCertificate, DerivError, Derivation};
use crate::exprio::format_poly;
use crate::linalg::{charpoly, nullspace, rational_roots_monic, Kernel};
use crate::qpoly::{BPoly, Rat};
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    ZeroLambda,
    SingleMonomialLambda,
    Both,
}

/// Bounds and mode for [`darboux_search`]. The lambda bounds default to
/// [`lambda_degree_bounds`] of the derivation when left unset.
#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub max_deg_x: u32,
    pub max_deg_y: u32,
    pub lambda_bound_x: Option<u32>,
    pub lambda_bound_y: Option<u32>,
    pub mode: SearchMode,
}

impl SearchConfig {
    pub fn new(max_deg_x: u32, max_deg_y: u32, mode: SearchMode) -> Self {
        SearchConfig {
            max_deg_x,
            max_deg_y,
            lambda_bound_x: None,
            lambda_bound_y: None,
            mode,
        }
    }
}

/// Degree bounds for any eigenvalue lambda of a Darboux relation of d:
/// componentwise, deg(lambda) = deg(d(f)) - deg(f), and applying d raises
/// the x-degree by at most max(deg_x(dx) - 1, deg_x(dy)) and the y-degree
/// by at most max(deg_y(dx), deg_y(dy) - 1). Errors for the zero derivation.
pub fn lambda_degree_bounds(d: &Derivation) -> Result<(u32, u32), DerivError> {
    if d.is_zero() {
        return Err(DerivError::ZeroDerivation);
    }
    let minus1 = |deg: Option<u32>| deg.map(|v| v.saturating_sub(1));
    let x_bound = [minus1(d.dx.deg_x()), d.dy.deg_x()]
        .into_iter()
        .flatten()
        .max()
        .unwrap_or(0);
    let y_bound = [d.dx.deg_y(), minus1(d.dy.deg_y())]
        .into_iter()
        .flatten()
        .max()
        .unwrap_or(0);
    Ok((x_bound, y_bound))
}

/// Domain monomial basis: exponent pairs within the bounds in graded
/// lexicographic order (ascending total degree; within a degree, descending
/// x-exponent). Fixed so kernel vectors are reproducible.
fn domain_basis(max_x: u32, max_y: u32) -> Vec<(u32, u32)> {
    let mut basis: Vec<(u32, u32)> = (0..=max_x)
        .flat_map(|i| (0..=max_y).map(move |j| (i, j)))
        .collect();
    basis.sort_by_key(|&(i, j)| (i + j, std::cmp::Reverse(i)));
    basis
}

fn vector_to_poly(basis: &[(u32, u32)], v: &[Rat]) -> BPoly {
    BPoly::from_terms(
        basis
            .iter()
            .zip(v.iter())
            .map(|(&(i, j), c)| ((i, j), c.clone())),
    )
}

fn monic_in_lex(f: &BPoly) -> BPoly {
    match f.leading_term() {
        None => f.clone(),
        Some((_, lc)) => f.scale(&(Rat::one() / lc)),
    }
}

struct ResultSet {
    seen: BTreeSet<(String, String)>,
    certs: Vec<DarbouxCertificate>,
}

impl ResultSet {
    fn new() -> Self {
        ResultSet {
            seen: BTreeSet::new(),
            certs: Vec::new(),
        }
    }

    /// Verifies and records a candidate; silently drops constants,
    /// duplicates, and anything that fails re-verification.
    fn admit(&mut self, d: &Derivation, f: BPoly, lambda: &BPoly) {
        if f.is_zero() || f.is_constant() {
            return;
        }
        let f = monic_in_lex(&f);
        let key = (format_poly(&f), format_poly(lambda));
        if self.seen.contains(&key) {
            return;
        }
        match darboux_certificate(d, &f) {
            Ok(Some(cert)) if cert.lambda == *lambda => {
                self.seen.insert(key);
                self.certs.push(cert);
            }
            _ => {}
        }
    }

    fn finish(mut self) -> Vec<DarbouxCertificate> {
        self.certs
            .sort_by_key(|c| (format_poly(&c.f), format_poly(&c.lambda)));
        self.certs
    }
}

/// Searches for Darboux certificates of d within the configured bounds.
/// An empty result means "none found within bounds", not an error.
pub fn darboux_search(d: &Derivation, cfg: &SearchConfig) -> Vec<DarbouxCertificate> {
    let basis = domain_basis(cfg.max_deg_x, cfg.max_deg_y);
    let images: Vec<BPoly> = basis
        .iter()
        .map(|&(i, j)| d.apply(&BPoly::monomial(i, j, Rat::one())))
        .collect();
    let mut results = ResultSet::new();

    if matches!(cfg.mode, SearchMode::ZeroLambda | SearchMode::Both) {
        zero_lambda_search(d, &basis, &images, &mut results);
    }
    if matches!(cfg.mode, SearchMode::SingleMonomialLambda | SearchMode::Both) {
        let (def_x, def_y) = lambda_degree_bounds(d).unwrap_or((0, 0));
        let bx = cfg.lambda_bound_x.unwrap_or(def_x);
        let by = cfg.lambda_bound_y.unwrap_or(def_y);
        for mi in 0..=bx {
            for mj in 0..=by {
                single_monomial_search(d, &basis, &images, (mi, mj), &mut results);
            }
        }
    }
    results.finish()
}

/// Exact nullspace of f -> d(f): every nonconstant kernel element is a
/// Darboux element with lambda = 0.
fn zero_lambda_search(
    d: &Derivation,
    basis: &[(u32, u32)],
    images: &[BPoly],
    results: &mut ResultSet,
) {
    let mut row_index: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    for img in images {
        for (key, _) in img.terms() {
            let next = row_index.len();
            row_index.entry(key).or_insert(next);
        }
    }
    let mut rows = vec![vec![Rat::zero(); basis.len()]; row_index.len()];
    for (col, img) in images.iter().enumerate() {
        for (key, c) in img.terms() {
            rows[row_index[&key]][col] = c.clone();
        }
    }
    let kernel = nullspace(rows, basis.len());
    let zero = BPoly::zero();
    for v in &kernel.basis {
        results.admit(d, vector_to_poly(basis, v), &zero);
    }
}

/// Eigenvalue search for lambda = b * x^mi * y^mj over all rational b.
fn single_monomial_search(
    d: &Derivation,
    basis: &[(u32, u32)],
    images: &[BPoly],
    m: (u32, u32),
    results: &mut ResultSet,
) {
    let ncols = basis.len();
    let image_keys: Vec<(u32, u32)> = basis.iter().map(|&(i, j)| (i + m.0, j + m.1)).collect();
    let image_set: BTreeSet<(u32, u32)> = image_keys.iter().copied().collect();

    // Rows of d(f) that cannot meet b * m * f must vanish outright.
    let mut free_row_index: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    for img in images {
        for (key, _) in img.terms() {
            if !image_set.contains(&key) {
                let next = free_row_index.len();
                free_row_index.entry(key).or_insert(next);
            }
        }
    }
    let mut n_rows = vec![vec![Rat::zero(); ncols]; free_row_index.len()];
    for (col, img) in images.iter().enumerate() {
        for (key, c) in img.terms() {
            if let Some(&r) = free_row_index.get(&key) {
                n_rows[r][col] = c.clone();
            }
        }
    }
    let Kernel { basis: kbasis, free_cols } = nullspace(n_rows, ncols);
    let k = kbasis.len();
    if k == 0 {
        return;
    }

    // On the kernel, row m*basis[p] of the eigen equation reads
    // (A_img K z)_p = b * (K z)_p. E = A_img * K; F = K.
    let mut a_img = vec![vec![Rat::zero(); ncols]; ncols];
    for (col, img) in images.iter().enumerate() {
        for (key, c) in img.terms() {
            if let Some(p) = image_keys.iter().position(|&ik| ik == key) {
                a_img[p][col] = c.clone();
            }
        }
    }
    let mat_mul = |a: &Vec<Vec<Rat>>, cols: &Vec<Vec<Rat>>| -> Vec<Vec<Rat>> {
        // cols holds column vectors; result is (rows of a) x (len of cols)
        a.iter()
            .map(|row| {
                cols.iter()
                    .map(|col| {
                        row.iter()
                            .zip(col.iter())
                            .filter(|(x, y)| !x.is_zero() && !y.is_zero())
                            .fold(Rat::zero(), |acc, (x, y)| acc + x * y)
                    })
                    .collect()
            })
            .collect()
    };
    let e = mat_mul(&a_img, &kbasis); // ncols x k
    // K restricted to its free columns is the identity, so the square
    // subsystem picked out by those rows is E_R - b*I: a plain eigenvalue
    // problem. Its characteristic polynomial is monic, hence never
    // identically zero, and its rational roots are the only possible b.
    let g: Vec<Vec<Rat>> = free_cols
        .iter()
        .map(|&p| e[p].clone())
        .collect();
    let candidates = rational_roots_monic(&charpoly(&g));

    for b in candidates {
        // Solve the full system (E - b*F) z = 0 and lift kernel vectors.
        let rows: Vec<Vec<Rat>> = (0..ncols)
            .map(|p| {
                (0..k)
                    .map(|c| &e[p][c] - &(&b * &kbasis[c][p]))
                    .collect()
            })
            .collect();
        let zk = nullspace(rows, k);
        let lambda = BPoly::monomial(m.0, m.1, b.clone());
        for z in &zk.basis {
            let mut v = vec![Rat::zero(); ncols];
            for (c, zc) in z.iter().enumerate() {
                if !zc.is_zero() {
                    for (p, slot) in v.iter_mut().enumerate() {
                        *slot = &*slot + &(zc * &kbasis[c][p]);
                    }
                }
            }
            results.admit(d, vector_to_poly(basis, &v), &lambda);
        }
    }
}
