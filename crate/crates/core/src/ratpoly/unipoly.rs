use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::rational::{int, sign, to_f64, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial over the rationals, lowest degree first.
///
/// The indeterminate name is a display label only; arithmetic and equality
/// ignore it and results inherit the left operand's name.
#[derive(Clone, Debug)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
    var: String,
}

impl PartialEq for UniPoly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}
impl Eq for UniPoly {}

impl UniPoly {
    pub fn new(coeffs: Vec<Rational>, var: &str) -> Self {
        let mut p = UniPoly { coeffs, var: var.to_string() };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64], var: &str) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect(), var)
    }

    pub fn zero(var: &str) -> Self {
        Self::new(Vec::new(), var)
    }

    pub fn constant(c: Rational, var: &str) -> Self {
        Self::new(vec![c], var)
    }

    /// The indeterminate itself.
    pub fn x(var: &str) -> Self {
        Self::new(vec![Rational::zero(), Rational::one()], var)
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize, var: &str) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::new(v, var)
    }

    /// `x - r`.
    pub fn linear_root(r: &Rational, var: &str) -> Self {
        Self::new(vec![-r.clone(), Rational::one()], var)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn with_var(mut self, var: &str) -> Self {
        self.var = var.to_string();
        self
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + to_f64(c);
        }
        acc
    }

    /// Sign of `p(x)` in `{-1, 0, 1}`.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        sign(&self.eval(x))
    }

    /// Coefficients as `f64`, lowest degree first.
    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(to_f64).collect()
    }

    pub fn derivative(&self) -> Self {
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * int(k as i64))
            .collect();
        Self::new(v, &self.var)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect(), &self.var)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(Rational::one(), &self.var);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `p(q(x))`.
    pub fn compose(&self, q: &UniPoly) -> Self {
        let mut acc = Self::zero(&q.var);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &Self::constant(c.clone(), &q.var);
        }
        acc
    }

    /// `p(x + a)`.
    pub fn shift(&self, a: &Rational) -> Self {
        self.compose(&Self::new(vec![a.clone(), Rational::one()], &self.var))
    }

    /// Euclidean division over the rationals.
    pub fn div_rem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        if d.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let dd = d.deg();
        let lc = d.lc();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(&self.var), self.clone()));
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let t = &r[k + dd] / &lc;
            if !t.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &t * dc;
                }
            }
            q[k] = t;
        }
        r.truncate(dd);
        Ok((Self::new(q, &self.var), Self::new(r, &self.var)))
    }

    /// Quotient of a division that must be exact.
    pub fn div_exact(&self, d: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    pub fn rem(&self, d: &UniPoly) -> Result<UniPoly> {
        Ok(self.div_rem(d)?.1)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.lc();
        self.scale(&(Rational::one() / lc))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r.primitive();
        }
        a.monic()
    }

    /// Positive rational multiple with coprime integer coefficients.
    ///
    /// Used to keep remainder sequences small; never changes sign.
    pub fn primitive(&self) -> Self {
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let mut den = num_bigint::BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let mut num = num_bigint::BigInt::zero();
        for c in &self.coeffs {
            let v = c.numer() * (&den / c.denom());
            num = num.gcd(&v);
        }
        self.scale(&Rational::new(den, num.abs()))
    }

    /// `p / gcd(p, p')`, monic. Constants map to themselves.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.deg() < 1 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).expect("gcd divides").monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.deg() < 1 || self.gcd(&self.derivative()).deg() == 0
    }

    /// Strict bound `B` with every real root in `(-B, B)`: `1 + max |a_i / a_n|`.
    pub fn cauchy_bound(&self) -> Rational {
        let lc = self.lc().abs();
        let mut m = Rational::zero();
        for c in &self.coeffs[..self.coeffs.len().saturating_sub(1)] {
            let r = c.abs() / &lc;
            if r > m {
                m = r;
            }
        }
        m + Rational::one()
    }

    /// Remove the factor `(x - r)^k` exactly.
    pub fn deflate(&self, r: &Rational, k: u32) -> Result<UniPoly> {
        self.div_exact(&Self::linear_root(r, &self.var).pow(k))
    }

    /// Sign of the polynomial as `x -> +infinity`.
    pub fn sign_pos_inf(&self) -> i8 {
        sign(&self.lc())
    }

    /// Sign of the polynomial as `x -> -infinity`.
    pub fn sign_neg_inf(&self) -> i8 {
        let s = sign(&self.lc());
        if self.deg() % 2 == 1 {
            -s
        } else {
            s
        }
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let body = super::rational::display(&a);
            match k {
                0 => write!(f, "{body}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{body}*")?;
                    }
                    write!(f, "{}", self.var)?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn add_coeffs(a: &[Rational], b: &[Rational], negate_b: bool) -> Vec<Rational> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
            if negate_b {
                x - y
            } else {
                x + y
            }
        })
        .collect()
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        UniPoly::new(add_coeffs(&self.coeffs, &rhs.coeffs, false), &self.var)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        UniPoly::new(add_coeffs(&self.coeffs, &rhs.coeffs, true), &self.var)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(&self.var);
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UniPoly::new(v, &self.var)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect(), &self.var)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&UniPoly> for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: &UniPoly) -> UniPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::rational::rat;

    #[test]
    fn division_round_trips() {
        let a = UniPoly::from_ints(&[-5, 10, -5, 6], "m");
        let b = UniPoly::from_ints(&[1, 2], "m");
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.deg() < b.deg() || r.is_zero());
    }

    #[test]
    fn gcd_and_squarefree() {
        let x1 = UniPoly::from_ints(&[-1, 1], "x");
        let x2 = UniPoly::from_ints(&[2, 1], "x");
        let p = &(&x1 * &x1) * &x2;
        assert_eq!(p.gcd(&p.derivative()), x1);
        assert_eq!(p.squarefree_part(), &x1 * &x2);
        assert!(!p.is_squarefree());
    }

    #[test]
    fn shift_and_display() {
        let p = UniPoly::from_ints(&[0, 0, 1], "x");
        assert_eq!(p.shift(&int(1)), UniPoly::from_ints(&[1, 2, 1], "x"));
        assert_eq!(p.to_string(), "x^2");
        let q = UniPoly::new(vec![rat(-1, 2), int(0), int(-3)], "u");
        assert_eq!(q.to_string(), "-3*u^2 - 1/2");
    }

    #[test]
    fn primitive_keeps_sign() {
        let p = UniPoly::new(vec![rat(-2, 3), rat(4, 9)], "x");
        let q = p.primitive();
        assert_eq!(q, UniPoly::from_ints(&[-3, 2], "x"));
    }
}
