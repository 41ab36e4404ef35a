//! Exact rational linear algebra used by the Darboux search: nullspaces by
//! reduced row echelon form, characteristic polynomials, and rational
//! eigenvalue extraction via integer root isolation with Sturm chains.
//! Everything here is exact; no numerics.

use crate::qpoly::{Rat, UPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Nullspace basis in RREF standard form. For each free column f the basis
/// holds a vector with 1 at f, zeros at the other free columns, and the
/// negated reduced entries at the pivot columns. `free_cols` records which
/// columns those unit entries sit in, in ascending order.
pub(crate) struct Kernel {
    pub basis: Vec<Vec<Rat>>,
    pub free_cols: Vec<usize>,
}

/// Computes the exact nullspace of the matrix given as dense rows.
/// Deterministic: columns are processed left to right and the first row
/// with a nonzero entry becomes the pivot.
pub(crate) fn nullspace(mut rows: Vec<Vec<Rat>>, ncols: usize) -> Kernel {
    let nrows = rows.len();
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut next_row = 0;
    for col in 0..ncols {
        let Some(pr) = (next_row..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next_row, pr);
        let inv = Rat::one() / &rows[next_row][col];
        for c in col..ncols {
            let v = &rows[next_row][c] * &inv;
            rows[next_row][c] = v;
        }
        for r in 0..nrows {
            if r != next_row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..ncols {
                    let v = &rows[r][c] - &(&factor * &rows[next_row][c]);
                    rows[r][c] = v;
                }
            }
        }
        pivots.push((next_row, col));
        next_row += 1;
        if next_row == nrows {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let free_cols: Vec<usize> = (0..ncols).filter(|c| !pivot_cols.contains(c)).collect();
    let basis = free_cols
        .iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); ncols];
            v[f] = Rat::one();
            for &(pr, pc) in &pivots {
                v[pc] = -&rows[pr][f];
            }
            v
        })
        .collect();
    Kernel { basis, free_cols }
}

/// Characteristic polynomial det(xI - M) of a square rational matrix, by
/// the Faddeev-LeVerrier recurrence. Exact; fine for the small matrices the
/// search produces.
pub(crate) fn charpoly(m: &[Vec<Rat>]) -> UPoly {
    let n = m.len();
    if n == 0 {
        return UPoly::one();
    }
    let mut coeffs: Vec<Rat> = Vec::with_capacity(n + 1);
    coeffs.push(Rat::one()); // leading
    let mut mk: Vec<Vec<Rat>> = m.to_vec();
    let mut c_prev;
    for k in 1..=n {
        let trace = (0..n).fold(Rat::zero(), |acc, i| acc + &mk[i][i]);
        c_prev = -trace / Rat::from_integer(BigInt::from(k));
        coeffs.push(c_prev.clone());
        if k == n {
            break;
        }
        // mk <- M * (mk + c_prev * I)
        let mut shifted = mk.clone();
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] = &row[i] + &c_prev;
        }
        let mut next = vec![vec![Rat::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = Rat::zero();
                for (l, srow) in shifted.iter().enumerate() {
                    if !m[i][l].is_zero() && !srow[j].is_zero() {
                        acc += &m[i][l] * &srow[j];
                    }
                }
                next[i][j] = acc;
            }
        }
        mk = next;
    }
    // coeffs[i] multiplies x^(n - i)
    UPoly::from_terms(
        coeffs
            .into_iter()
            .enumerate()
            .map(|(i, c)| (n as u32 - i as u32, c)),
    )
}

/// All rational roots of a monic polynomial with rational coefficients.
///
/// Substituting x = g / D with D the common denominator turns the problem
/// into finding integer roots of a monic integer polynomial, which are
/// isolated exactly with a Sturm chain and integer bisection.
pub(crate) fn rational_roots_monic(p: &UPoly) -> Vec<Rat> {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    if deg == 0 {
        return Vec::new();
    }
    // Common denominator of all coefficients.
    let mut d = BigInt::one();
    for (_, c) in p.terms() {
        d = d.lcm(c.denom());
    }
    // q(g) = D^deg * p(g / D), monic with integer coefficients.
    let q = UPoly::from_terms(p.terms().map(|(e, c)| {
        let mut scale = Rat::one();
        for _ in 0..(deg - e) {
            scale = scale * Rat::from_integer(d.clone());
        }
        (e, c * &scale)
    }));
    integer_roots_monic(&q)
        .into_iter()
        .map(|g| Rat::new(g, d.clone()))
        .collect()
}

fn sign_of(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

fn sturm_variations(chain: &[UPoly], x: &Rat) -> usize {
    let mut count = 0;
    let mut last: i8 = 0;
    for p in chain {
        let s = sign_of(&p.eval(x));
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Integer roots of a monic polynomial with integer coefficients (given
/// over `Rat`). Exhaustive: every rational root of such a polynomial is an
/// integer, and all of them lie within the Cauchy bound.
fn integer_roots_monic(p: &UPoly) -> Vec<BigInt> {
    let mut roots: Vec<BigInt> = Vec::new();
    let mut q = p.clone();
    // Strip x^k: zero is a root iff the constant term vanishes.
    if q.coeff(0).is_zero() && !q.is_zero() {
        roots.push(BigInt::zero());
        q = UPoly::from_terms(
            q.terms()
                .filter(|(e, _)| *e > 0)
                .map(|(e, c)| (e - 1, c.clone())),
        );
        while q.coeff(0).is_zero() && q.degree().map_or(false, |d| d > 0) {
            q = UPoly::from_terms(
                q.terms()
                    .filter(|(e, _)| *e > 0)
                    .map(|(e, c)| (e - 1, c.clone())),
            );
        }
    }
    if q.degree().map_or(true, |d| d == 0) {
        return roots;
    }
    // Squarefree part, monic.
    let s = {
        let g = upoly_gcd_monic(&q, &q.derivative());
        let (sf, rem) = q.divmod(&g).expect("gcd nonzero");
        debug_assert!(rem.is_zero());
        monic(&sf)
    };
    if s.degree().map_or(true, |d| d == 0) {
        return roots;
    }
    // Sturm chain of the squarefree part.
    let mut chain = vec![s.clone(), s.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let (_, r) = chain[n - 2].divmod(&chain[n - 1]).expect("nonzero");
        chain.push(-&r);
    }
    // Cauchy bound on root magnitude.
    let mut bound = BigInt::one();
    for (_, c) in s.terms() {
        let m = c.abs().ceil().to_integer();
        if m > bound {
            bound = m;
        }
    }
    bound += BigInt::one();
    // Bisect over half-integer endpoints: the polynomial is monic with
    // integer coefficients, so it cannot vanish at a non-integer rational,
    // which keeps every endpoint evaluation nonzero.
    let half = Rat::new(BigInt::one(), BigInt::from(2));
    let lo = Rat::from_integer(-&bound) - &half;
    let hi = Rat::from_integer(bound.clone()) + &half;
    let mut stack = vec![(lo, hi)];
    while let Some((a, b)) = stack.pop() {
        let n = sturm_variations(&chain, &a).saturating_sub(sturm_variations(&chain, &b));
        if n == 0 {
            continue;
        }
        let width = &b - &a;
        if width <= Rat::one() {
            // at most one integer candidate inside (a, b)
            let candidate = (&a + &half).to_integer();
            if s.eval(&Rat::from_integer(candidate.clone())).is_zero() {
                roots.push(candidate);
            }
            continue;
        }
        // split at the half-integer nearest the midpoint
        let mid = Rat::from_integer((&a + &(&width / Rat::from_integer(BigInt::from(2)))).floor().to_integer()) + &half;
        stack.push((a, mid.clone()));
        stack.push((mid, b));
    }
    roots.sort();
    roots.dedup();
    roots
}

fn monic(p: &UPoly) -> UPoly {
    match p.leading_coeff() {
        None => p.clone(),
        Some(lc) => p.scale(&(Rat::one() / lc)),
    }
}

fn upoly_gcd_monic(a: &UPoly, b: &UPoly) -> UPoly {
    let mut f = monic(a);
    let mut g = monic(b);
    while !g.is_zero() {
        let (_, r) = f.divmod(&g).expect("g nonzero");
        f = g;
        g = monic(&r);
    }
    f
}
