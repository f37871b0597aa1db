use num_traits::Zero;
use std::fmt;

use super::rational::{display, Rational};
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    PosInf,
    Finite(Rational),
}

impl Bound {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Bound::Finite(r) => Some(r),
            _ => None,
        }
    }
}

/// Real interval with rational or infinite endpoints.
///
/// Infinite ends are always open. Construction enforces `lower < upper`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lower: Bound,
    upper: Bound,
    lower_open: bool,
    upper_open: bool,
}

impl Interval {
    pub fn new(lower: Bound, lower_open: bool, upper: Bound, upper_open: bool) -> Result<Self> {
        let ok = match (&lower, &upper) {
            (Bound::PosInf, _) | (_, Bound::NegInf) => false,
            (Bound::Finite(a), Bound::Finite(b)) => a < b,
            _ => true,
        };
        if !ok {
            return Err(Error::InvalidInterval(format!("{lower:?} must lie below {upper:?}")));
        }
        let lower_open = lower_open || lower == Bound::NegInf;
        let upper_open = upper_open || upper == Bound::PosInf;
        Ok(Interval { lower, upper, lower_open, upper_open })
    }

    /// `[a, b]`.
    pub fn closed(a: Rational, b: Rational) -> Result<Self> {
        Self::new(Bound::Finite(a), false, Bound::Finite(b), false)
    }

    /// `(a, b)`.
    pub fn open(a: Rational, b: Rational) -> Result<Self> {
        Self::new(Bound::Finite(a), true, Bound::Finite(b), true)
    }

    /// `(-inf, inf)`.
    pub fn real_line() -> Self {
        Self::new(Bound::NegInf, true, Bound::PosInf, true).unwrap()
    }

    /// `(a, inf)`.
    pub fn above(a: Rational) -> Self {
        Self::new(Bound::Finite(a), true, Bound::PosInf, true).unwrap()
    }

    /// `(-inf, b)`.
    pub fn below(b: Rational) -> Self {
        Self::new(Bound::NegInf, true, Bound::Finite(b), true).unwrap()
    }

    pub fn lower(&self) -> &Bound {
        &self.lower
    }
    pub fn upper(&self) -> &Bound {
        &self.upper
    }
    pub fn lower_open(&self) -> bool {
        self.lower_open
    }
    pub fn upper_open(&self) -> bool {
        self.upper_open
    }

    /// Both endpoints, if finite.
    pub fn endpoints(&self) -> Option<(&Rational, &Rational)> {
        Some((self.lower.finite()?, self.upper.finite()?))
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let lo = match &self.lower {
            Bound::Finite(a) => {
                if self.lower_open {
                    x > a
                } else {
                    x >= a
                }
            }
            _ => true,
        };
        let hi = match &self.upper {
            Bound::Finite(b) => {
                if self.upper_open {
                    x < b
                } else {
                    x <= b
                }
            }
            _ => true,
        };
        lo && hi
    }

    pub fn width(&self) -> Option<Rational> {
        self.endpoints().map(|(a, b)| b - a)
    }

    pub fn midpoint(&self) -> Option<Rational> {
        self.endpoints().map(|(a, b)| (a + b) / Rational::from_integer(2.into()))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = match &self.lower {
            Bound::Finite(a) => display(a),
            _ => "-inf".into(),
        };
        let u = match &self.upper {
            Bound::Finite(b) => display(b),
            _ => "inf".into(),
        };
        write!(
            f,
            "{}{l}, {u}{}",
            if self.lower_open { '(' } else { '[' },
            if self.upper_open { ')' } else { ']' }
        )
    }
}

/// Closed rational enclosure `[lo, hi]` for certified evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enclosure {
    pub lo: Rational,
    pub hi: Rational,
}

impl Enclosure {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        Enclosure { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        Enclosure { lo: x.clone(), hi: x }
    }

    pub fn add(&self, o: &Self) -> Self {
        Enclosure::new(&self.lo + &o.lo, &self.hi + &o.hi)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Enclosure::new(lo, hi)
    }

    /// Sign if the enclosure excludes zero.
    pub fn sign(&self) -> Option<i8> {
        if self.lo > Rational::zero() {
            Some(1)
        } else if self.hi < Rational::zero() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    /// Horner evaluation of `p` over the enclosure.
    pub fn eval(p: &UniPoly, x: &Enclosure) -> Enclosure {
        let mut acc = Enclosure::point(Rational::zero());
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(x).add(&Enclosure::point(c.clone()));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::rational::{int, rat};

    #[test]
    fn rejects_empty() {
        assert!(Interval::closed(int(1), int(1)).is_err());
        assert!(Interval::open(int(2), int(1)).is_err());
    }

    #[test]
    fn membership_respects_openness() {
        let iv = Interval::new(Bound::Finite(int(0)), true, Bound::Finite(int(1)), false).unwrap();
        assert!(!iv.contains(&int(0)));
        assert!(iv.contains(&int(1)));
        assert!(iv.contains(&rat(1, 2)));
        assert_eq!(iv.to_string(), "(0, 1]");
        assert!(Interval::real_line().contains(&int(-1000)));
    }

    #[test]
    fn enclosure_brackets_values() {
        let p = UniPoly::from_ints(&[-2, 0, 1], "x");
        let e = Enclosure::eval(&p, &Enclosure::new(rat(3, 2), int(2)));
        assert_eq!(e.sign(), Some(1));
        let e = Enclosure::eval(&p, &Enclosure::new(int(1), int(2)));
        assert_eq!(e.sign(), None);
    }
}
