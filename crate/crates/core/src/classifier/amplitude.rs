//! How the solitary-wave amplitude `a = m - s` responds to the speed.
//!
//! At fixed `K` the saddle `s` and crest `m` move with `c`, and implicit
//! differentiation of `F'(s) = 0`, `F(m) = F(s)` gives
//!
//! ```text
//! da/dc = -1/28 * ((s^2 - m^2) F''(s) + 2 s F'(m)) / (F'(m) F''(s))
//! ```
//!
//! whose numerator is `(s - m)^2 Q(m, c, s) / 14`. On the crest `m` solves the
//! cubic `P`, so the sign can only change across `R = Res_m(Q, P) = 0`.

use std::cmp::Ordering;

use super::{printed, region_of, AmplitudeRegion, AmplitudeTrend, Polarity, RegionLabel};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::orbits::{crest, critical_points, CriticalKind};
use crate::ratpoly::rational::{pow2, sign, to_f64};
use crate::ratpoly::{isolate_real_roots, rat, BiPoly, Interval, MultiPoly, Rational, RealRoot, UniPoly};
use crate::wavemodel::{build_from_cK, build_from_cs, ParamPoint, U};

/// `Q(m, c, s)`.
pub fn q_poly() -> MultiPoly {
    printed::parse(printed::Q, &printed::MCS)
}

/// `P(m, c, s)`, normalized by `F(s) - F(m) = -(s - m)^2 P / 140`.
pub fn p_poly() -> MultiPoly {
    printed::parse(printed::P, &printed::MCS)
}

/// The transcribed curve `R(c, s)`.
pub fn printed_r() -> BiPoly {
    printed::parse(printed::R, &printed::CS)
}

/// `Res_m(Q, P)`, computed from scratch.
pub fn resultant_r() -> Result<BiPoly> {
    Ok(q_poly().resultant(&p_poly(), "m")?.prune_vars().with_vars(&["c".into(), "s".into()]))
}

fn specialize(p: &MultiPoly, c: &Rational, s: &Rational) -> UniPoly {
    p.eval_var("c", c)
        .and_then(|q| q.eval_var("s", s))
        .and_then(|q| q.to_unipoly("m"))
        .expect("polynomial in m, c, s")
        .with_var(U)
}

#[derive(Clone, Debug)]
pub struct AmplitudeSensitivity {
    pub m: RealRoot,
    pub sign_dc_a: i8,
    pub sign_q: i8,
    pub sign_f1m: i8,
    pub sign_f2s: i8,
    /// Floating-point value of `da/dc` at fixed `K`.
    pub dc_a: f64,
}

/// Exact sign, and a float value, of `da/dc` at an admissible point.
pub fn amplitude_sensitivity(p: &ParamPoint) -> Result<AmplitudeSensitivity> {
    let region = region_of(p);
    if !region.is_admissible() {
        return Err(if matches!(
            region,
            RegionLabel::OnA1 | RegionLabel::OnA2 | RegionLabel::OnNcurve | RegionLabel::AtCstar
        ) {
            Error::OnBoundary(format!("({}, {}) lies on {}", p.c, p.s, region))
        } else {
            Error::NotAdmissible(format!("({}, {}) lies in {}", p.c, p.s, region))
        });
    }
    let (model, _) = build_from_cs(p);
    let m = crest(&model, &p.s)?;
    thread_local! {
        static Q: MultiPoly = q_poly();
    }
    let q = Q.with(|q| specialize(q, &p.c, &p.s));
    let sign_q = m.sign_of(&q);
    let sign_f1m = m.sign_of(&model.f1());
    let f2s = model.f2().eval(&p.s);
    let sign_f2s = sign(&f2s);
    let sign_dc_a = -sign_f1m * sign_f2s * sign_q;

    let mf = m.to_f64();
    let sf = to_f64(&p.s);
    let f1m = model.f1().eval_f64(mf);
    let f2sf = to_f64(&f2s);
    let dc_a = -1.0 / 28.0 * ((sf * sf - mf * mf) * f2sf + 2.0 * sf * f1m) / (f1m * f2sf);
    Ok(AmplitudeSensitivity { m, sign_dc_a, sign_q, sign_f1m, sign_f2s, dc_a })
}

/// Amplitude region of an admissible point; `R = 0` is reported as the curve.
pub fn amplitude_region(p: &ParamPoint) -> Result<AmplitudeTrend> {
    let sens = amplitude_sensitivity(p)?;
    let region = region_of(p);
    thread_local! {
        static R: BiPoly = printed_r();
    }
    let r_zero = R.with(|r| r.eval(&[("c", p.c.clone()), ("s", p.s.clone())]))?.is_zero();
    let (label, polarity) = match region {
        RegionLabel::R1 => {
            let lab = if sens.sign_dc_a == 0 || r_zero {
                AmplitudeRegion::OnRcurve
            } else if sens.sign_dc_a > 0 {
                AmplitudeRegion::I
            } else if p.s > rat(-1, 2) {
                AmplitudeRegion::II
            } else {
                AmplitudeRegion::III
            };
            (lab, Polarity::Elevation)
        }
        RegionLabel::R4 => {
            let lab = if sens.sign_dc_a == 0 || r_zero {
                AmplitudeRegion::OnRcurve
            } else if sens.sign_dc_a > 0 {
                AmplitudeRegion::IV
            } else {
                AmplitudeRegion::V
            };
            (lab, Polarity::Depression)
        }
        _ => unreachable!("admissibility checked above"),
    };
    Ok(AmplitudeTrend { region: label, sign_dc_a: sens.sign_dc_a, wave_polarity: Some(polarity) })
}

/// Saddle, crest and amplitude of the solitary wave of the model `(c, K)`,
/// using the saddle nearest to `near`.
///
/// The saddle is generally irrational; it is pinned down to `2^-130` and
/// the crest is the first root of `F(s~) - F` past the center.
pub fn amplitude_at_fixed_k(c: &Rational, k: &Rational, near: &Rational) -> Result<(f64, f64, f64)> {
    let model = build_from_cK(c, k);
    let crit = critical_points(&model)?;
    let saddle = crit
        .iter()
        .filter(|cp| cp.kind == CriticalKind::Saddle)
        .min_by(|a, b| {
            let da = (a.u.to_f64() - to_f64(near)).abs();
            let db = (b.u.to_f64() - to_f64(near)).abs();
            da.partial_cmp(&db).unwrap_or(Ordering::Equal)
        })
        .ok_or(Error::NoCrest)?;
    let s = saddle.u.approx(&pow2(-130));
    let f2s = model.f2().eval(&s);
    let dir = -sign(&f2s);
    let center = crit
        .iter()
        .filter(|cp| cp.kind == CriticalKind::Center)
        .filter(|cp| cp.u.cmp_rational(&s) == if dir > 0 { Ordering::Greater } else { Ordering::Less })
        .min_by(|a, b| {
            let da = (a.u.to_f64() - to_f64(&s)).abs();
            let db = (b.u.to_f64() - to_f64(&s)).abs();
            da.partial_cmp(&db).unwrap_or(Ordering::Equal)
        })
        .ok_or(Error::NoCrest)?;
    // Isolating intervals can be wide; the crest lies beyond the center, not beyond its bracket.
    let mut cu = center.u.clone();
    cu.refine_to(&pow2(-60));
    let (clo, chi) = cu.bounds();
    let level = model.f() - &UniPoly::constant(model.f().eval(&s), U);
    let iv = if dir > 0 { Interval::above(chi.clone()) } else { Interval::below(clo.clone()) };
    let roots = isolate_real_roots(&level, &iv)?;
    let m = if dir > 0 { roots.into_iter().next() } else { roots.into_iter().next_back() };
    let m = m.ok_or(Error::NoCrest)?;
    let mf = m.approx(&pow2(-80));
    let sf = to_f64(&s);
    let mf = to_f64(&mf);
    Ok((sf, mf, mf - sf))
}
