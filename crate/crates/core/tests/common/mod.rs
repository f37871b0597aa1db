//! Oracles shared by the integration test targets.
#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use tws_core::ratpoly::rational::{sign, to_f64};
use tws_core::ratpoly::{rat, Rational, UniPoly};

pub const X: &str = "x";

/// Random squarefree polynomial of degree 1..=6 with integer coefficients in [-10, 10].
pub fn random_squarefree(rng: &mut ChaCha8Rng) -> UniPoly {
    loop {
        let deg = rng.gen_range(1..=6);
        let mut c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-10..=10)).collect();
        if c[deg] == 0 {
            c[deg] = if rng.gen_bool(0.5) { 1 } else { -1 } * rng.gen_range(1..=10);
        }
        let p = UniPoly::from_ints(&c, X);
        if p.is_squarefree() {
            return p;
        }
    }
}

/// Random rational with odd denominator, so it rarely coincides with a root.
pub fn random_point(rng: &mut ChaCha8Rng, bound: f64) -> Rational {
    let den = 2 * rng.gen_range(50..5000) + 1;
    let num = (rng.gen_range(-bound..bound) * den as f64).round() as i64;
    rat(num, den)
}

/// Number of roots of `p` in the closed interval `[a, b]` by a dense sign scan.
///
/// The grid spacing is `1e-4` after scaling the Cauchy root bound to 1.
/// Endpoints are evaluated exactly; interior grid points in floating point.
pub fn dense_scan_count(p: &UniPoly, a: &Rational, b: &Rational) -> usize {
    let bound = to_f64(&p.cauchy_bound());
    let h = 1e-4 * bound;
    let (af, bf) = (to_f64(a), to_f64(b));
    let mut signs = vec![sign(&p.eval(a))];
    let mut x = (af / h).floor() * h + h;
    while x < bf {
        if x > af {
            let v = p.eval_f64(x);
            signs.push(if v > 0.0 { 1 } else if v < 0.0 { -1 } else { 0 });
        }
        x += h;
    }
    signs.push(sign(&p.eval(b)));
    let zeros = signs.iter().filter(|s| **s == 0).count();
    let changes = signs.windows(2).filter(|w| w[0] * w[1] < 0).count();
    zeros + changes
}

/// Dense scan over the whole real line, using the Cauchy bound.
pub fn dense_scan_real_roots(p: &UniPoly) -> usize {
    let b = p.cauchy_bound();
    dense_scan_count(p, &-b.clone(), &b)
}

/// Relative difference `|a - b| / max(|b|, tiny)`.
pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

/// Integrate `(u - ubar) u'' + u'^2 / 2 + F'(u) = 0` with classical RK4 from
/// `u(0) = u0, u'(0) = 0` and report `(u, u')` at each requested `ξ >= 0` (ascending).
///
/// Steps are capped at `h_max`, so output points never force interpolation.
pub fn rk4_profile(f1: &UniPoly, ubar: f64, u0: f64, xis: &[f64], h_max: f64) -> Vec<(f64, f64)> {
    let rhs = |u: f64, v: f64| -> (f64, f64) { (v, -(0.5 * v * v + f1.eval_f64(u)) / (u - ubar)) };
    let step = |u: f64, v: f64, h: f64| -> (f64, f64) {
        let (k1u, k1v) = rhs(u, v);
        let (k2u, k2v) = rhs(u + 0.5 * h * k1u, v + 0.5 * h * k1v);
        let (k3u, k3v) = rhs(u + 0.5 * h * k2u, v + 0.5 * h * k2v);
        let (k4u, k4v) = rhs(u + h * k3u, v + h * k3v);
        (u + h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u), v + h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v))
    };
    let (mut x, mut u, mut v) = (0.0, u0, 0.0);
    let mut out = Vec::with_capacity(xis.len());
    for &target in xis {
        while x < target {
            let h = (target - x).min(h_max);
            (u, v) = step(u, v, h);
            x += h;
        }
        out.push((u, v));
    }
    out
}

/// Time for the RK4 trajectory from a turning point `u0` to reach the next turning point,
/// located by the sign change of `u'` and a final linear interpolation.
pub fn rk4_half_period(f1: &UniPoly, ubar: f64, u0: f64, h: f64) -> f64 {
    let rhs = |u: f64, v: f64| -> (f64, f64) { (v, -(0.5 * v * v + f1.eval_f64(u)) / (u - ubar)) };
    let (mut x, mut u, mut v) = (0.0, u0, 0.0);
    let mut dir = 0.0;
    loop {
        let (k1u, k1v) = rhs(u, v);
        let (k2u, k2v) = rhs(u + 0.5 * h * k1u, v + 0.5 * h * k1v);
        let (k3u, k3v) = rhs(u + 0.5 * h * k2u, v + 0.5 * h * k2v);
        let (k4u, k4v) = rhs(u + h * k3u, v + h * k3v);
        let nu = u + h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
        let nv = v + h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        if dir == 0.0 {
            dir = nv.signum();
        } else if nv.signum() != dir {
            return x + h * v / (v - nv);
        }
        (x, u, v) = (x + h, nu, nv);
        assert!(x < 1e6, "no turning point");
    }
}
