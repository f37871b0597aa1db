//! Traveling waves of the Camassa–Holm equation.
//!
//! In the translate `w = u - c` the profile equation has the same shape as the
//! moderate-amplitude one, `w w'' + w'^2 / 2 + F'(w) = 0`, with singular line
//! `ubar = 0` and the cubic potential `F(w) = A w - B w^2 - w^3 / 2`, where
//! `A = K - 2 kappa c - c^2 / 2` and `B = c + kappa`.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::orbits::{critical_points, CriticalKind};
use crate::profiles::{
    crest_near, decay_rate, periodic_profile, solitary_from_parts, Endpoint, ProfileKind, ProfileMeta,
    QuadratureConfig, Segment, WaveProfile, TAIL_EPS,
};
use crate::ratpoly::rational::{pow2, to_f64};
use crate::ratpoly::{int, rat, MultiPoly, Rational, UniPoly};
use crate::wavemodel::{WaveModel, U};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CHParams {
    pub c: Rational,
    pub kappa: Rational,
    pub k: Rational,
    pub a: Rational,
    pub b: Rational,
}

impl CHParams {
    pub fn new(c: Rational, kappa: Rational, k: Rational) -> Self {
        let a = &k - int(2) * &kappa * &c - &c * &c / int(2);
        let b = &c + &kappa;
        CHParams { c, kappa, k, a, b }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CHClass {
    SolitaryAndPeriodic,
    PeriodicOnly,
    Peakon,
    None,
}

impl CHClass {
    pub fn as_str(self) -> &'static str {
        match self {
            CHClass::SolitaryAndPeriodic => "SolitaryAndPeriodic",
            CHClass::PeriodicOnly => "PeriodicOnly",
            CHClass::Peakon => "Peakon",
            CHClass::None => "None",
        }
    }
}

impl fmt::Display for CHClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `F(w) = A w - B w^2 - w^3 / 2`.
pub fn ch_potential(p: &CHParams) -> UniPoly {
    UniPoly::new(vec![Rational::zero(), p.a.clone(), -p.b.clone(), rat(-1, 2)], U)
}

/// The `(ubar = 0, F)` model in the `w` variable.
pub fn ch_build(p: &CHParams) -> WaveModel {
    WaveModel::from_parts(p.c.clone(), p.k.clone(), Rational::zero(), ch_potential(p))
}

/// Symbolic `F(w; A, B)` over the ring `(w, A, B)`.
pub fn ch_potential_symbolic() -> MultiPoly {
    MultiPoly::parse("A*w - B*w^2 - w^3/2", &["w", "A", "B"]).expect("well-formed potential")
}

/// Exact classification from the bounds on `A` in terms of `B^2`.
///
/// With `B = 0` the only candidate is `A = 0`, where `F'` has a double root;
/// that point is classified `None`.
pub fn ch_classify(p: &CHParams) -> CHClass {
    let b2 = &p.b * &p.b;
    let lower = -rat(2, 3) * &b2;
    let peak = -rat(1, 2) * &b2;
    if p.a <= lower {
        CHClass::None
    } else if p.a == peak {
        CHClass::Peakon
    } else if p.a > peak {
        CHClass::PeriodicOnly
    } else {
        CHClass::SolitaryAndPeriodic
    }
}

/// Frame of an emitted CH profile.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChFrame {
    /// Translate `w = u - c`, singular line at 0.
    W,
    /// Original variable `u = w + c`.
    U,
}

/// Shift a `w`-frame profile to `u = w + c`.
pub fn to_u_frame(mut prof: WaveProfile, c: &Rational) -> WaveProfile {
    let cf = to_f64(c);
    for u in &mut prof.u {
        *u += cf;
    }
    let m = &mut prof.meta;
    m.ubar += cf;
    m.s = m.s.map(|x| x + cf);
    m.m = m.m.map(|x| x + cf);
    m.notes.retain(|(k, _)| k != "frame");
    m.notes.push(("frame".into(), "u = w + c".into()));
    prof
}

fn in_frame(prof: WaveProfile, p: &CHParams, frame: ChFrame) -> WaveProfile {
    match frame {
        ChFrame::W => prof,
        ChFrame::U => to_u_frame(prof, &p.c),
    }
}

/// Solitary wave for parameters in the solitary-and-periodic band.
pub fn ch_solitary_profile(p: &CHParams, frame: ChFrame, cfg: &QuadratureConfig) -> Result<WaveProfile> {
    let class = ch_classify(p);
    if class != CHClass::SolitaryAndPeriodic {
        return Err(Error::NotAdmissible(format!("no smooth solitary wave: class {class}")));
    }
    let model = ch_build(p);
    let saddle = critical_points(&model)?
        .into_iter()
        .find(|cp| cp.kind == CriticalKind::Saddle)
        .ok_or_else(|| Error::NotAdmissible("no saddle".into()))?;
    let s = saddle.u.exact().cloned().unwrap_or_else(|| saddle.u.approx(&pow2(-120)));
    let m = crest_near(&model, &s)?;
    let mut prof = solitary_from_parts(&model, &s, &Endpoint::from_root(&m, 1), ProfileKind::Solitary, cfg)?;
    prof.meta.notes.push(("frame".into(), "w = u - c".into()));
    Ok(in_frame(prof, p, frame))
}

/// Periodic wave at level `h` of the `w`-model.
pub fn ch_periodic_profile(p: &CHParams, h: &Rational, frame: ChFrame, cfg: &QuadratureConfig) -> Result<WaveProfile> {
    match ch_classify(p) {
        CHClass::SolitaryAndPeriodic | CHClass::PeriodicOnly => {}
        other => return Err(Error::NotAdmissible(format!("no smooth periodic wave: class {other}"))),
    }
    let mut prof = periodic_profile(&ch_build(p), h, cfg)?;
    prof.meta.notes.push(("frame".into(), "w = u - c".into()));
    Ok(in_frame(prof, p, frame))
}

/// Peakon with crest `w = 0` and tails `w -> -B`.
///
/// On the level `h = F(0) = 0` with `A = -B^2 / 2` the radicand is
/// `v^2 = (B + w)^2`, so each branch solves `w' = ∓(B + w)` away from the corner.
pub fn ch_peakon_profile(p: &CHParams, frame: ChFrame, cfg: &QuadratureConfig) -> Result<WaveProfile> {
    cfg.validate()?;
    if ch_classify(p) != CHClass::Peakon || p.b.is_zero() {
        return Err(Error::NotPeakonParams);
    }
    let model = ch_build(p);
    let h = Rational::zero();
    let tail = -p.b.clone();
    let seg = Segment::build(&model, &h, &Endpoint::new(Rational::zero(), 0), &Endpoint::new(tail.clone(), 2))?
        .truncate_end(TAIL_EPS);
    let half = seg.sample(cfg)?;

    let n = half.xi.len();
    let mut xi = Vec::with_capacity(2 * n - 1);
    let mut w = Vec::with_capacity(2 * n - 1);
    let mut dw = Vec::with_capacity(2 * n - 1);
    for k in (1..n).rev() {
        xi.push(-half.xi[k]);
        w.push(half.u[k]);
        dw.push(-half.du[k]);
    }
    xi.extend_from_slice(&half.xi);
    w.extend_from_slice(&half.u);
    dw.extend_from_slice(&half.du);

    let bf = to_f64(&p.b);
    let branch_residual = xi
        .iter()
        .zip(&w)
        .zip(&dw)
        .filter(|((x, _), _)| **x != 0.0)
        .map(|((x, w), d)| (d + x.signum() * (bf + w)).abs())
        .fold(0.0, f64::max);
    let closed_form_error = xi
        .iter()
        .zip(&w)
        .map(|(x, w)| (w - (-bf + bf * (-x.abs()).exp())).abs())
        .fold(0.0, f64::max);
    // One-sided limit of w w'' + w'^2 / 2 + F'(w) at the crest: B^2 / 2 + A.
    let corner_residual = &p.b * &p.b / int(2) + &p.a;

    let mut meta = ProfileMeta {
        c: to_f64(&p.c),
        ubar: 0.0,
        h: 0.0,
        s: Some(to_f64(&tail)),
        m: Some(0.0),
        period: None,
        half_width: Some(half.total),
        decay_rate: Some(decay_rate(&model, &tail)),
        polarity: Some(if bf > 0.0 {
            crate::classifier::Polarity::Elevation
        } else {
            crate::classifier::Polarity::Depression
        }),
        hamiltonian_residual: crate::profiles::hamiltonian_residual(&model, 0.0, &w, &dw),
        extra: Vec::new(),
        notes: Vec::new(),
    };
    meta.extra.extend([
        ("corner_slope_right".to_string(), half.du[0].abs()),
        ("corner_slope_left".to_string(), half.du[0].abs()),
        ("corner_slope_expected".to_string(), to_f64(&p.b.abs())),
        ("branch_residual".to_string(), branch_residual),
        ("closed_form_max_error".to_string(), closed_form_error),
        ("corner_ode_residual".to_string(), to_f64(&corner_residual)),
        ("tail_eps".to_string(), TAIL_EPS),
    ]);
    meta.notes.extend([
        ("frame".to_string(), "w = u - c".to_string()),
        ("v_form_derived".to_string(), "v = ±(B + w)".to_string()),
        ("v_form_printed".to_string(), "v = ±(B - u)".to_string()),
        ("closed_form".to_string(), "w = -B + B exp(-|xi|)".to_string()),
    ]);
    let prof = WaveProfile { kind: ProfileKind::Peakon, xi, u: w, du: dw, meta };
    Ok(in_frame(prof, p, frame))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(c: i64, kappa: i64, k: i64) -> CHParams {
        CHParams::new(int(c), int(kappa), int(k))
    }

    #[test]
    fn derived_coefficients() {
        let p = params(1, 0, 0);
        assert_eq!(p.a, rat(-1, 2));
        assert_eq!(p.b, int(1));
        assert_eq!(ch_build(&p).f().eval(&Rational::zero()), Rational::zero());
    }

    #[test]
    fn classification_examples() {
        assert_eq!(ch_classify(&params(1, 0, 0)), CHClass::Peakon);
        assert_eq!(ch_classify(&params(-7, 0, 0)), CHClass::Peakon);
        assert_eq!(ch_classify(&params(3, 1, 0)), CHClass::SolitaryAndPeriodic);
        // A = -2/3 B^2 exactly.
        let mut p = params(3, 1, 0);
        p.a = -rat(2, 3) * &p.b * &p.b;
        assert_eq!(ch_classify(&p), CHClass::None);
        assert_eq!(ch_classify(&params(1, 0, 1)), CHClass::PeriodicOnly);
    }

    #[test]
    fn discriminant_of_derivative() {
        let f = ch_potential_symbolic();
        let d = f.derivative("w").unwrap().discriminant("w").unwrap();
        let want = MultiPoly::parse("6*A + 4*B^2", &["w", "A", "B"]).unwrap();
        assert_eq!(d.ratio_to(&want), Some(int(1)));
    }

    #[test]
    fn peakon_closed_form() {
        let cfg = QuadratureConfig::default().with_samples(256);
        let p = ch_peakon_profile(&params(1, 0, 0), ChFrame::W, &cfg).unwrap();
        assert!(p.meta.extra("closed_form_max_error").unwrap() < 1e-6);
        assert!((p.meta.extra("corner_slope_right").unwrap() - 1.0).abs() < 1e-8);
        assert_eq!(p.meta.extra("corner_ode_residual"), Some(0.0));
        assert_eq!(ch_peakon_profile(&params(3, 1, 0), ChFrame::W, &cfg), Err(Error::NotPeakonParams));
    }

    #[test]
    fn solitary_band_profile() {
        let cfg = QuadratureConfig::default().with_samples(128);
        let p = ch_solitary_profile(&params(3, 1, 0), ChFrame::W, &cfg).unwrap();
        assert_eq!(p.meta.s, Some(-3.0));
        assert_eq!(p.meta.m, Some(-2.0));
        let shifted = ch_solitary_profile(&params(3, 1, 0), ChFrame::U, &cfg).unwrap();
        assert_eq!(shifted.meta.m, Some(1.0));
    }
}
