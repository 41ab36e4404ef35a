//! Exact decision procedures for simplicity of polynomial derivations of
//! Q[x, y].
//!
//! The crate decides whether a derivation of the shape
//! `y^r dx + (c1 x^t1 y^s1 + c2 x^t2 y^s2) dy` is simple, emits a
//! machine-verifiable witness for every non-simple verdict, and
//! cross-validates the classifier against an independent bounded-degree
//! Darboux element search. All arithmetic is exact rational; there is no
//! floating point anywhere.

pub mod decider;
pub mod deriv;
pub mod exprio;
mod linalg;
pub mod oracle;
pub mod pfrak;
pub mod qpoly;
