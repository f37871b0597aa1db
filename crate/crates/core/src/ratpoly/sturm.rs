use num_traits::Signed;
use std::cmp::Ordering;

use super::interval::{Bound, Enclosure, Interval};
use super::rational::{dyadic_ceil, from_f64, int, pow2, rat, to_f64, Rational};
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Canonical Sturm chain `p, p', -rem(p, p'), ...`.
///
/// Later members are replaced by positive multiples with integer
/// coefficients, which keeps sizes down without changing any sign.
#[derive(Clone, Debug, PartialEq)]
pub struct SturmSequence {
    chain: Vec<UniPoly>,
}

impl SturmSequence {
    pub fn new(p: &UniPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut chain = vec![p.clone()];
        let mut a = p.clone();
        let mut b = p.derivative().primitive();
        while !b.is_zero() {
            chain.push(b.clone());
            let r = a.rem(&b)?;
            a = b;
            b = (-r).primitive();
        }
        Ok(SturmSequence { chain })
    }

    pub fn chain(&self) -> &[UniPoly] {
        &self.chain
    }

    fn count_changes(signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0i8;
        let mut n = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                n += 1;
            }
            last = s;
        }
        n
    }

    /// Sign variations at a point, zeros skipped.
    pub fn variations_at(&self, x: &Rational) -> usize {
        Self::count_changes(self.chain.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations(&self, b: &Bound) -> usize {
        match b {
            Bound::Finite(x) => self.variations_at(x),
            Bound::NegInf => Self::count_changes(self.chain.iter().map(|p| p.sign_neg_inf())),
            Bound::PosInf => Self::count_changes(self.chain.iter().map(|p| p.sign_pos_inf())),
        }
    }

    /// Distinct roots in `(a, b]` (requires a squarefree head).
    pub fn count_half_open(&self, a: &Bound, b: &Bound) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }

    /// Distinct roots in `iv`, honouring endpoint openness.
    pub fn count(&self, iv: &Interval) -> usize {
        let p = &self.chain[0];
        let mut n = self.count_half_open(iv.lower(), iv.upper());
        if let Bound::Finite(a) = iv.lower() {
            if !iv.lower_open() && p.sign_at(a) == 0 {
                n += 1;
            }
        }
        if let Bound::Finite(b) = iv.upper() {
            if iv.upper_open() && p.sign_at(b) == 0 {
                n -= 1;
            }
        }
        n
    }
}

/// Fails with `NotSquarefree` when a repeated root of `p` lies in `iv`.
fn check_squarefree_on(p: &UniPoly, iv: &Interval) -> Result<UniPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = p.gcd(&p.derivative());
    if g.deg() > 0 {
        let q = g.squarefree_part();
        if SturmSequence::new(&q)?.count(iv) > 0 {
            return Err(Error::NotSquarefree);
        }
    }
    Ok(p.squarefree_part())
}

/// Exact number of distinct real roots of `p` in `iv`.
pub fn sturm_count(p: &UniPoly, iv: &Interval) -> Result<usize> {
    let q = check_squarefree_on(p, iv)?;
    if q.deg() == 0 {
        return Ok(0);
    }
    Ok(SturmSequence::new(&q)?.count(iv))
}

/// Number of distinct real roots on the whole line, multiplicities ignored.
pub fn distinct_real_roots(p: &UniPoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let q = p.squarefree_part();
    if q.deg() == 0 {
        return Ok(0);
    }
    Ok(SturmSequence::new(&q)?.count(&Interval::real_line()))
}

/// A real algebraic number: the unique root of a squarefree `poly` in the
/// open interval `(lo, hi)`, with `poly(lo) * poly(hi) < 0`.
#[derive(Clone, Debug)]
pub struct RealRoot {
    poly: UniPoly,
    lo: Rational,
    hi: Rational,
    /// Sign of `poly` at `lo`, cached for bisection.
    lo_sign: i8,
    exact: Option<Rational>,
}

impl RealRoot {
    /// Wrap a known rational value.
    pub fn rational(r: Rational, var: &str) -> Self {
        let one = int(1);
        RealRoot {
            poly: UniPoly::linear_root(&r, var),
            lo: &r - &one,
            hi: &r + &one,
            lo_sign: -1,
            exact: Some(r),
        }
    }

    /// Root of squarefree `poly` isolated by `[lo, hi]` with a sign change.
    pub fn from_bracket(poly: UniPoly, lo: Rational, hi: Rational) -> Result<Self> {
        let (a, b) = (poly.sign_at(&lo), poly.sign_at(&hi));
        if a == 0 {
            return Ok(Self::rational(lo, poly.var()));
        }
        if b == 0 {
            return Ok(Self::rational(hi, poly.var()));
        }
        if a == b || lo >= hi {
            return Err(Error::NoSignChange);
        }
        Ok(RealRoot { poly, lo, hi, lo_sign: a, exact: None })
    }

    pub fn poly(&self) -> &UniPoly {
        &self.poly
    }

    pub fn exact(&self) -> Option<&Rational> {
        self.exact.as_ref()
    }

    pub fn bounds(&self) -> (&Rational, &Rational) {
        (&self.lo, &self.hi)
    }

    pub fn interval(&self) -> Interval {
        Interval::closed(self.lo.clone(), self.hi.clone()).expect("lo < hi")
    }

    fn bisect_once(&mut self) {
        if self.exact.is_some() {
            return;
        }
        let mid = (&self.lo + &self.hi) / int(2);
        let sm = self.poly.sign_at(&mid);
        if sm == 0 {
            self.exact = Some(mid.clone());
            let w = (&self.hi - &self.lo) / int(4);
            self.lo = &mid - &w;
            self.hi = &mid + &w;
        } else if sm == self.lo_sign {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    /// Shrink until the isolating interval is at most `width` wide.
    pub fn refine_to(&mut self, width: &Rational) {
        while self.exact.is_none() && &(&self.hi - &self.lo) > width {
            self.bisect_once();
        }
    }

    /// Rational approximation within `tol` of the root.
    pub fn approx(&self, tol: &Rational) -> Rational {
        if let Some(r) = &self.exact {
            return r.clone();
        }
        let mut c = self.clone();
        c.refine_to(&(tol * int(2)));
        if let Some(r) = &c.exact {
            return r.clone();
        }
        (&c.lo + &c.hi) / int(2)
    }

    /// Float approximation, accurate to a few ulps for a simple root.
    ///
    /// Exact bisection down to a relative width of `2^-24`, then float Newton
    /// steps kept inside the bracket.
    pub fn to_f64(&self) -> f64 {
        if let Some(r) = &self.exact {
            return to_f64(r);
        }
        let scale = self.lo.abs().max(self.hi.abs()).max(pow2(-200));
        let mut c = self.clone();
        c.refine_to(&(scale * pow2(-24)));
        if let Some(r) = &c.exact {
            return to_f64(r);
        }
        let (mut lo, mut hi) = (to_f64(&c.lo), to_f64(&c.hi));
        let coeffs = c.poly.to_f64_coeffs();
        let deriv: Vec<f64> = coeffs.iter().enumerate().skip(1).map(|(k, a)| k as f64 * a).collect();
        let horner = |cs: &[f64], x: f64| cs.iter().rev().fold(0.0, |acc, a| acc * x + a);
        let s_lo = horner(&coeffs, lo).signum();
        let mut x = 0.5 * (lo + hi);
        for _ in 0..100 {
            let fx = horner(&coeffs, x);
            if fx == 0.0 {
                return x;
            }
            if fx.signum() == s_lo {
                lo = x;
            } else {
                hi = x;
            }
            let step = fx / horner(&deriv, x);
            let next = x - step;
            let next = if next > lo && next < hi { next } else { 0.5 * (lo + hi) };
            if next == x || hi - lo <= f64::EPSILON * x.abs() {
                return next;
            }
            x = next;
        }
        x
    }

    /// Ordering of the root relative to `x`.
    pub fn cmp_rational(&self, x: &Rational) -> Ordering {
        if let Some(r) = &self.exact {
            return r.cmp(x);
        }
        if x <= &self.lo {
            return Ordering::Greater;
        }
        if x >= &self.hi {
            return Ordering::Less;
        }
        let sx = self.poly.sign_at(x);
        if sx == 0 {
            Ordering::Equal
        } else if sx == self.poly.sign_at(&self.lo) {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    /// Certified sign of `g` at the root.
    pub fn sign_of(&self, g: &UniPoly) -> i8 {
        if let Some(r) = &self.exact {
            return g.sign_at(r);
        }
        if g.is_zero() {
            return 0;
        }
        let mut me = self.clone();
        // The gcd test is only needed once a few bisections fail to certify.
        let mut checked_gcd = false;
        for step in 0usize.. {
            let e = Enclosure::eval(g, &Enclosure::new(me.lo.clone(), me.hi.clone()));
            if let Some(s) = e.sign() {
                return s;
            }
            if !checked_gcd && step >= 8 {
                checked_gcd = true;
                let d = self.poly.gcd(g);
                if d.deg() > 0 && d.sign_at(&self.lo) * d.sign_at(&self.hi) < 0 {
                    return 0;
                }
            }
            me.bisect_once();
            if let Some(r) = &me.exact {
                return g.sign_at(r);
            }
        }
        unreachable!("the loop only exits by returning")
    }

    /// Certified ordering of two algebraic numbers.
    pub fn cmp_root(&self, other: &RealRoot) -> Ordering {
        if let Some(r) = &other.exact {
            return self.cmp_rational(r);
        }
        if let Some(r) = &self.exact {
            return other.cmp_rational(r).reverse();
        }
        // Equal iff `self` is a root of `other.poly`.
        let mut a = self.clone();
        let mut b = other.clone();
        if a.sign_of(&b.poly) == 0 {
            return Ordering::Equal;
        }
        loop {
            if a.hi <= b.lo {
                return Ordering::Less;
            }
            if b.hi <= a.lo {
                return Ordering::Greater;
            }
            a.bisect_once();
            b.bisect_once();
            if let Some(r) = &a.exact {
                return b.cmp_rational(r).reverse();
            }
            if let Some(r) = &b.exact {
                return a.cmp_rational(r);
            }
        }
    }
}

/// Every distinct real root of `p` in `iv`, in increasing order.
pub fn isolate_real_roots(p: &UniPoly, iv: &Interval) -> Result<Vec<RealRoot>> {
    let q = check_squarefree_on(p, iv)?;
    if q.deg() == 0 {
        return Ok(Vec::new());
    }
    let seq = SturmSequence::new(&q)?;
    let count = |a: &Rational, b: &Rational| {
        seq.count_half_open(&Bound::Finite(a.clone()), &Bound::Finite(b.clone()))
    };
    let big = dyadic_ceil(&q.cauchy_bound());
    let mut out = Vec::new();

    // Small bracket around an exact rational root `r`.
    let point_root = |r: &Rational, room: &Rational| -> (Rational, Rational) {
        let mut d = room.clone();
        loop {
            let (a, b) = (r - &d, r + &d);
            if q.sign_at(&a) != 0 && q.sign_at(&b) != 0 && count(&a, &b) == 1 {
                return (a, b);
            }
            d /= int(2);
        }
    };

    let mut a = match iv.lower() {
        Bound::Finite(x) if x > &-&big => x.clone(),
        _ => -&big,
    };
    let mut b = match iv.upper() {
        Bound::Finite(x) if x < &big => x.clone(),
        _ => big.clone(),
    };
    if a >= b {
        return Ok(Vec::new());
    }
    if q.sign_at(&a) == 0 {
        if !iv.lower_open() {
            let (l, h) = point_root(&a, &int(1));
            out.push((l, h));
        }
        let mut d = (&b - &a) / int(2);
        while count(&a, &(&a + &d)) > 0 {
            d /= int(2);
        }
        a = &a + &d;
    }
    if q.sign_at(&b) == 0 {
        if !iv.upper_open() {
            let (l, h) = point_root(&b, &int(1));
            out.push((l, h));
        }
        let mut d = (&b - &a) / int(2);
        while q.sign_at(&(&b - &d)) == 0 || count(&(&b - &d), &b) > 1 {
            d /= int(2);
        }
        b = &b - &d;
    }

    let mut stack = vec![(a, b)];
    while let Some((a, b)) = stack.pop() {
        let n = count(&a, &b);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push((a, b));
            continue;
        }
        let mid = (&a + &b) / int(2);
        if q.sign_at(&mid) == 0 {
            let room = (&b - &a) / int(4);
            let (l, h) = point_root(&mid, &room);
            out.push((l.clone(), h.clone()));
            stack.push((a, l));
            stack.push((h, b));
        } else {
            stack.push((a, mid.clone()));
            stack.push((mid, b));
        }
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out.into_iter().map(|(l, h)| RealRoot::from_bracket(q.clone(), l, h)).collect()
}

/// Disjoint closed intervals, one per distinct root of `p` in `iv`.
pub fn isolate_roots(p: &UniPoly, iv: &Interval) -> Result<Vec<Interval>> {
    Ok(isolate_real_roots(p, iv)?.iter().map(RealRoot::interval).collect())
}

/// Bisection to within `tol` of the single root bracketed by `iv`.
pub fn refine_root(p: &UniPoly, iv: &Interval, tol: &Rational) -> Result<Rational> {
    if !tol.is_positive() {
        return Err(Error::InvalidInterval("tolerance must be positive".into()));
    }
    let (a, b) = iv
        .endpoints()
        .ok_or_else(|| Error::InvalidInterval("refinement needs finite endpoints".into()))?;
    let (mut a, mut b) = (a.clone(), b.clone());
    let sa = p.sign_at(&a);
    let sb = p.sign_at(&b);
    if sa == 0 {
        return Ok(a);
    }
    if sb == 0 {
        return Ok(b);
    }
    if sa == sb {
        return Err(Error::NoSignChange);
    }
    let two = int(2);
    while &(&b - &a) > &(tol * &two) {
        let mid = (&a + &b) / &two;
        let sm = p.sign_at(&mid);
        if sm == 0 {
            return Ok(mid);
        }
        if sm == sa {
            a = mid;
        } else {
            b = mid;
        }
    }
    Ok((a + b) / two)
}

/// Bracket a float estimate of a simple root of `p` by a small rational
/// interval, widening geometrically until the sign changes.
pub fn bracket_near(p: &UniPoly, x: f64, start_width: f64) -> Option<RealRoot> {
    let q = p.squarefree_part();
    let center = from_f64(x);
    let mut w = from_f64(start_width.max(1e-300));
    for _ in 0..400 {
        let (a, b) = (&center - &w, &center + &w);
        let (sa, sb) = (q.sign_at(&a), q.sign_at(&b));
        if sa != 0 && sb != 0 && sa != sb {
            let n = SturmSequence::new(&q).ok()?.count_half_open(&Bound::Finite(a.clone()), &Bound::Finite(b.clone()));
            if n == 1 {
                return RealRoot::from_bracket(q, a, b).ok();
            }
            return None;
        }
        w *= rat(2, 1);
    }
    None
}
