//! Subresultant pseudo-remainder sequences.
//!
//! The resultant is computed over any integral domain that supports exact
//! division, so the same code serves `Q[x]` and `Q[c, s][m]`.

use crate::error::{Error, Result};

/// Commutative ring with exact division, enough for fraction-free PRS.
pub trait Ring: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add_r(&self, o: &Self) -> Self;
    fn sub_r(&self, o: &Self) -> Self;
    fn mul_r(&self, o: &Self) -> Self;
    fn neg_r(&self) -> Self;
    /// `self / o`, where `o` is known to divide `self`.
    fn div_exact_r(&self, o: &Self) -> Self;

    fn pow_r(&self, k: usize) -> Self {
        let mut acc = self.one_like();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul_r(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_r(&base);
            }
        }
        acc
    }
}

fn trim<R: Ring>(p: &mut Vec<R>) {
    while p.last().is_some_and(|c| c.is_zero_elem()) {
        p.pop();
    }
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
pub fn prem<R: Ring>(a: &[R], b: &[R]) -> Vec<R> {
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut r: Vec<R> = a.to_vec();
    trim(&mut r);
    if r.len() <= db {
        return r;
    }
    let mut e = r.len() - db;
    while r.len() > db {
        let dr = r.len() - 1;
        let t = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = c.mul_r(&lb);
        }
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] = r[shift + j].sub_r(&t.mul_r(bc));
        }
        trim(&mut r);
        e -= 1;
    }
    if e > 0 {
        let f = lb.pow_r(e);
        for c in r.iter_mut() {
            *c = c.mul_r(&f);
        }
    }
    r
}

/// Sylvester resultant `Res(a, b)` (rows of `a` first) of coefficient
/// vectors listed lowest degree first.
pub fn resultant<R: Ring>(a: &[R], b: &[R]) -> Result<R> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    if a.is_empty() || b.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let one = a[0].one_like();
    let mut sign_neg = false;
    if a.len() < b.len() {
        if (a.len() - 1) % 2 == 1 && (b.len() - 1) % 2 == 1 {
            sign_neg = true;
        }
        std::mem::swap(&mut a, &mut b);
    }
    let finish = |v: R, neg: bool| if neg { v.neg_r() } else { v };
    if b.len() == 1 {
        return Ok(finish(b[0].pow_r(a.len() - 1), sign_neg));
    }
    let mut g = one.clone();
    let mut h = one;
    loop {
        let da = a.len() - 1;
        let db = b.len() - 1;
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign_neg = !sign_neg;
        }
        let r = prem(&a, &b);
        a = b;
        if r.is_empty() {
            return Ok(a[0].zero_like());
        }
        let div = g.mul_r(&h.pow_r(delta));
        b = r.iter().map(|c| c.div_exact_r(&div)).collect();
        g = a[a.len() - 1].clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g.pow_r(delta).div_exact_r(&h.pow_r(delta - 1)),
        };
        if b.len() == 1 {
            break;
        }
    }
    let da = a.len() - 1;
    let res = b[0].pow_r(da).div_exact_r(&h.pow_r(da - 1));
    Ok(finish(res, sign_neg))
}

/// `(-1)^(n(n-1)/2) Res(p, p') / lc(p)` for a coefficient vector of degree `n >= 2`.
pub fn discriminant<R: Ring>(p: &[R], dp: &[R]) -> Result<R> {
    let mut p = p.to_vec();
    trim(&mut p);
    if p.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let n = p.len() - 1;
    if n < 2 {
        return Err(Error::DegreeTooLow { degree: n, required: 2 });
    }
    let r = resultant(&p, dp)?.div_exact_r(&p[n]);
    Ok(if (n * (n - 1) / 2) % 2 == 1 { r.neg_r() } else { r })
}

impl Ring for super::Rational {
    fn zero_like(&self) -> Self {
        num_traits::Zero::zero()
    }
    fn one_like(&self) -> Self {
        num_traits::One::one()
    }
    fn is_zero_elem(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add_r(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_r(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_r(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_r(&self) -> Self {
        -self
    }
    fn div_exact_r(&self, o: &Self) -> Self {
        self / o
    }
}
