//! Exact rational polynomial kernel.

pub mod interval;
pub mod multipoly;
pub mod prs;
pub mod rational;
pub mod sturm;
pub mod unipoly;

pub use interval::{Bound, Enclosure, Interval};
pub use multipoly::{BiPoly, MultiPoly};
pub use rational::{int, parse_rational, rat, Rational};
pub use sturm::{
    distinct_real_roots, isolate_real_roots, isolate_roots, refine_root, sturm_count, RealRoot,
    SturmSequence,
};
pub use unipoly::UniPoly;

use crate::error::Result;

/// Value of `p` at `x`.
pub fn eval(p: &UniPoly, x: &Rational) -> Rational {
    p.eval(x)
}

/// `Res(p, q)` with respect to `var`; the remaining variables stay symbolic.
pub fn resultant(p: &MultiPoly, q: &MultiPoly, var: &str) -> Result<MultiPoly> {
    p.resultant(q, var)
}

/// Discriminant of `p` with respect to `var`.
pub fn discriminant(p: &MultiPoly, var: &str) -> Result<MultiPoly> {
    p.discriminant(var)
}

/// Resultant of two univariate polynomials.
pub fn resultant_uni(p: &UniPoly, q: &UniPoly) -> Result<Rational> {
    prs::resultant(p.coeffs(), q.coeffs())
}

/// Discriminant of a univariate polynomial.
pub fn discriminant_uni(p: &UniPoly) -> Result<Rational> {
    prs::discriminant(p.coeffs(), p.derivative().coeffs())
}
