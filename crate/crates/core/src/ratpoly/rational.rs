//! Exact rational scalars.
//!
//! `Rational` is `num_rational::BigRational`: always in lowest terms with a
//! positive denominator. This module adds the few conveniences the rest of
//! the crate leans on (construction shorthands, exact decimal parsing, sign,
//! dyadic helpers and lossless conversion from `f64`).

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// `n / d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parse `"p/q"`, an integer, or a finite decimal such as `-0.125` or
/// `1.5e-3`. Decimals are converted exactly, never through `f64`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = || Error::Parse(format!("cannot parse `{text}` as a rational"));
    if t.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = t.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    let (mantissa, exponent) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.chars().chain(frac.chars()).all(|ch| ch.is_ascii_digit()) {
        return Err(bad());
    }
    let all: String = format!("{whole}{frac}");
    let numer = BigInt::from_str(if all.is_empty() { "0" } else { &all }).map_err(|_| bad())?;
    let scale = exponent - frac.len() as i32;
    let ten = BigInt::from(10u32);
    let mut value = Rational::from_integer(numer);
    if scale >= 0 {
        value *= Rational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        value /= Rational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Ok(if neg { -value } else { value })
}

/// Sign as `-1`, `0` or `+1`.
pub fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Exact rational value of a finite `f64`.
pub fn from_f64(x: f64) -> Rational {
    Rational::from_float(x).expect("finite float")
}

/// `2^k` for any integer `k`.
pub fn pow2(k: i64) -> Rational {
    let p = num_traits::pow(BigInt::from(2u32), k.unsigned_abs() as usize);
    if k >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

/// Smallest power of two that is `>= x` (for `x > 0`).
pub fn dyadic_ceil(x: &Rational) -> Rational {
    assert!(x.is_positive());
    let mut k: i64 = 0;
    let mut p = Rational::one();
    while &p < x {
        p *= int(2);
        k += 1;
    }
    let half = rat(1, 2);
    while k > -1000 && &(&p * &half) >= x {
        p *= &half;
        k -= 1;
    }
    p
}

/// Render as `p/q` (or `p` when integral).
pub fn display(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn pow(r: &Rational, k: u32) -> Rational {
    num_traits::pow(r.clone(), k as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_forms() {
        assert_eq!(parse_rational("3/2").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("-1/10").unwrap(), rat(-1, 10));
        assert_eq!(parse_rational("-0/1").unwrap(), int(0));
        assert_eq!(parse_rational("15").unwrap(), int(15));
        assert_eq!(parse_rational("-0.1").unwrap(), rat(-1, 10));
        assert_eq!(parse_rational("1.5").unwrap(), rat(3, 2));
        assert_eq!(parse_rational(".25").unwrap(), rat(1, 4));
        assert_eq!(parse_rational("1e-3").unwrap(), rat(1, 1000));
        assert_eq!(parse_rational("2.5E2").unwrap(), int(250));
    }

    #[test]
    fn rejects_garbage() {
        for t in ["", "abc", "1/0", "1.2.3", "--1", "1e", "0x10"] {
            assert!(parse_rational(t).is_err(), "{t}");
        }
    }

    #[test]
    fn dyadic_ceiling() {
        assert_eq!(dyadic_ceil(&rat(3, 1)), int(4));
        assert_eq!(dyadic_ceil(&int(4)), int(4));
        assert_eq!(dyadic_ceil(&rat(3, 16)), rat(1, 4));
    }

    #[test]
    fn float_round_trip_is_exact() {
        let x = 0.1f64;
        assert_eq!(to_f64(&from_f64(x)), x);
        assert_ne!(from_f64(x), rat(1, 10));
    }
}
