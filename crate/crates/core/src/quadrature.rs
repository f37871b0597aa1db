//! Double-exponential (tanh-sinh) quadrature for integrands with algebraic
//! endpoint singularities.
//!
//! The integrand receives the abscissa together with its distances to both
//! endpoints, computed without cancellation, so factors like `1/sqrt(b - x)`
//! stay accurate right up to the endpoint.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadratureConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Number of step halvings after the initial unit step.
    pub max_levels: u32,
    /// Samples per monotone profile segment.
    pub sample_count: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig { abs_tol: 1e-12, rel_tol: 1e-12, max_levels: 10, sample_count: 512 }
    }
}

impl QuadratureConfig {
    pub fn with_tol(tol: f64) -> Self {
        QuadratureConfig { abs_tol: tol, rel_tol: tol, ..Default::default() }
    }

    pub fn with_samples(mut self, n: usize) -> Self {
        self.sample_count = n;
        self
    }

    /// Same configuration with both tolerances halved.
    pub fn halved(self) -> Self {
        QuadratureConfig { abs_tol: self.abs_tol / 2.0, rel_tol: self.rel_tol / 2.0, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        let ok_tol = |t: f64| t.is_finite() && t > 0.0;
        if !ok_tol(self.abs_tol) || !ok_tol(self.rel_tol) {
            return Err(Error::QuadratureFailure("tolerances must be positive".into()));
        }
        if self.sample_count < 16 {
            return Err(Error::QuadratureFailure("sample_count must be at least 16".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
}

/// Truncation of the transformed axis; weights beyond it are below `1e-37` relative.
const T_MAX: f64 = 4.0;

/// `∫_a^b f(x, x - a, b - x) dx` by tanh-sinh with step halving.
pub fn tanh_sinh<F>(f: F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<QuadResult>
where
    F: Fn(f64, f64, f64) -> f64,
{
    tanh_sinh_dyn(&f, a, b, cfg)
}

fn tanh_sinh_dyn(f: &dyn Fn(f64, f64, f64) -> f64, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<QuadResult> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::QuadratureFailure("non-finite interval".into()));
    }
    if a == b {
        return Ok(QuadResult { value: 0.0, error_estimate: 0.0, evaluations: 0 });
    }
    if a > b {
        let r = tanh_sinh_dyn(&|x, da, db| f(x, db, da), b, a, cfg)?;
        return Ok(QuadResult { value: -r.value, ..r });
    }
    let len = b - a;
    let half = len / 2.0;
    let mut evals = 0usize;
    // Contribution of node t: weight times integrand, both halves of the axis.
    let mut node = |t: f64| -> Result<f64> {
        let y = FRAC_PI_2 * t.sinh();
        let cy = y.cosh();
        let w = half * FRAC_PI_2 * t.cosh() / (cy * cy);
        if w == 0.0 {
            return Ok(0.0);
        }
        let mut acc = 0.0;
        for sgn in [1.0, -1.0] {
            let ys = sgn * y;
            // Distances to a and b: len / (1 + e^{-2y}) and len / (1 + e^{2y}).
            let da = len / (1.0 + (-2.0 * ys).exp());
            let db = len / (1.0 + (2.0 * ys).exp());
            if da == 0.0 || db == 0.0 {
                continue;
            }
            let x = if da < db { a + da } else { b - db };
            let v = f(x, da, db);
            evals += 1;
            if !v.is_finite() {
                return Err(Error::QuadratureFailure(format!("integrand not finite at {x}")));
            }
            acc += w * v;
            if t == 0.0 {
                break;
            }
        }
        Ok(acc)
    };

    let mut h = 1.0;
    let mut sum = node(0.0)?;
    let mut k = 1.0;
    while k * h <= T_MAX {
        sum += node(k * h)?;
        k += 1.0;
    }
    let mut estimate = h * sum;
    let mut err = f64::INFINITY;
    for level in 1..=cfg.max_levels {
        h /= 2.0;
        let mut k = 1.0;
        while k * h <= T_MAX {
            sum += node(k * h)?;
            k += 2.0;
        }
        let next = h * sum;
        err = (next - estimate).abs();
        estimate = next;
        if level >= 3 && err <= cfg.abs_tol.max(cfg.rel_tol * estimate.abs()) {
            return Ok(QuadResult { value: estimate, error_estimate: err, evaluations: evals });
        }
    }
    Err(Error::QuadratureFailure(format!(
        "no convergence on [{a}, {b}] after {} levels (estimate {estimate}, change {err})",
        cfg.max_levels
    )))
}

/// Plain integrand convenience wrapper.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<f64> {
    tanh_sinh(|x, _, _| f(x), a, b, cfg).map(|r| r.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_and_smooth() {
        let cfg = QuadratureConfig::default();
        let v = integrate(|x| x * x, 0.0, 3.0, &cfg).unwrap();
        assert!((v - 9.0).abs() < 1e-12);
        let v = integrate(f64::exp, -1.0, 1.0, &cfg).unwrap();
        assert!((v - (1f64.exp() - (-1f64).exp())).abs() < 1e-12);
    }

    #[test]
    fn inverse_square_root_endpoints() {
        let cfg = QuadratureConfig::default();
        // ∫_0^1 dx / sqrt(x (1 - x)) = π.
        let r = tanh_sinh(|_, da, db| 1.0 / (da * db).sqrt(), 0.0, 1.0, &cfg).unwrap();
        assert!((r.value - std::f64::consts::PI).abs() < 1e-12);
    }

    #[test]
    fn reversed_interval_negates() {
        let cfg = QuadratureConfig::default();
        let v = integrate(|x| x, 2.0, 0.0, &cfg).unwrap();
        assert!((v + 2.0).abs() < 1e-12);
    }

    #[test]
    fn config_validation() {
        assert!(QuadratureConfig::default().validate().is_ok());
        assert!(QuadratureConfig::default().with_samples(8).validate().is_err());
        assert!(QuadratureConfig::with_tol(0.0).validate().is_err());
    }
}
