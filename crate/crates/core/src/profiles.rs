//! Sampled wave profiles from quadrature of `dξ = du / v(u)`.
//!
//! Every profile is assembled from monotone half-segments running from a
//! turning point (where `ξ = 0`) to a far end: another turning point, the
//! saddle, or the singular line. On each segment the radicand is written as
//!
//! ```text
//! v^2 = 2 (h - F(u)) / (u - ubar) = 2 d_start^a d_end^b q(u) / (u - ubar)
//! ```
//!
//! with the endpoint factors expressed through distances, so the integrand
//! keeps full relative accuracy at both ends. Samples are placed on a
//! uniform `ξ` grid by inverting `ξ(u)` with safeguarded Newton steps.

use std::cmp::Ordering;

use crate::classifier::Polarity;
use crate::error::{Error, Result};
use crate::orbits::{
    center, crest, crest_polynomial, critical_points, peaked_level_factorization, periodic_turning_points,
    CriticalKind,
};
use crate::quadrature::tanh_sinh;
pub use crate::quadrature::QuadratureConfig;
use crate::ratpoly::rational::{pow2, sign, to_f64};
use crate::ratpoly::{isolate_real_roots, Interval, Rational, RealRoot, UniPoly};
use crate::wavemodel::{build_from_cs, ubar_of, ParamPoint, SaddleRole, WaveModel, U};

/// Solitary tails are cut where `|u - s| < TAIL_EPS * |m - s|`.
pub const TAIL_EPS: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProfileKind {
    Solitary,
    Periodic,
    Compacton,
    PeakedPeriodic,
    GluedPeriodic,
    Peakon,
}

impl ProfileKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ProfileKind::Solitary => "Solitary",
            ProfileKind::Periodic => "Periodic",
            ProfileKind::Compacton => "Compacton",
            ProfileKind::PeakedPeriodic => "PeakedPeriodic",
            ProfileKind::GluedPeriodic => "GluedPeriodic",
            ProfileKind::Peakon => "Peakon",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProfileMeta {
    pub c: f64,
    pub ubar: f64,
    pub h: f64,
    pub s: Option<f64>,
    /// Crest or trough.
    pub m: Option<f64>,
    pub period: Option<f64>,
    /// Support radius `T` (compactons), branch time (peaked waves) or tail cut (solitary).
    pub half_width: Option<f64>,
    pub decay_rate: Option<f64>,
    pub polarity: Option<Polarity>,
    /// Largest `|H(u, u') - h|` over the samples.
    pub hamiltonian_residual: f64,
    pub extra: Vec<(String, f64)>,
    pub notes: Vec<(String, String)>,
}

impl ProfileMeta {
    fn new(model: &WaveModel, h: &Rational) -> Self {
        ProfileMeta {
            c: to_f64(&model.c),
            ubar: to_f64(&model.ubar),
            h: to_f64(h),
            s: None,
            m: None,
            period: None,
            half_width: None,
            decay_rate: None,
            polarity: None,
            hamiltonian_residual: 0.0,
            extra: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn extra(&self, key: &str) -> Option<f64> {
        self.extra.iter().find(|(k, _)| k == key).map(|(_, v)| *v)
    }

    pub fn note(&self, key: &str) -> Option<&str> {
        self.notes.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct WaveProfile {
    pub kind: ProfileKind,
    pub xi: Vec<f64>,
    pub u: Vec<f64>,
    /// `du/dξ` at each sample, from the level-set relation.
    pub du: Vec<f64>,
    pub meta: ProfileMeta,
}

impl WaveProfile {
    pub fn len(&self) -> usize {
        self.xi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xi.is_empty()
    }

    /// `max |u(ξ_i) - u(ξ_{n-1-i})|` for profiles centered at `ξ = 0`.
    pub fn symmetry_error(&self) -> f64 {
        let n = self.u.len();
        (0..n / 2).map(|i| (self.u[i] - self.u[n - 1 - i]).abs()).fold(0.0, f64::max)
    }
}

/// A root of `h - F` that bounds a segment, with its multiplicity.
#[derive(Clone, Debug)]
pub struct Endpoint {
    pub value: Rational,
    pub multiplicity: u32,
}

impl Endpoint {
    pub fn new(value: Rational, multiplicity: u32) -> Self {
        Endpoint { value, multiplicity }
    }

    /// A tight rational stand-in for an algebraic root.
    pub fn from_root(r: &RealRoot, multiplicity: u32) -> Self {
        Endpoint { value: r.approx(&pow2(-120)), multiplicity }
    }
}

/// Position on a segment, stored as distances to both ends; the smaller of
/// the two is the accurate one.
#[derive(Clone, Copy, Debug)]
struct Pos {
    y: f64,
    z: f64,
}

/// A monotone piece of orbit from `start` (`ξ = 0`) to `end`.
#[derive(Clone, Debug)]
pub struct Segment {
    start: f64,
    end: f64,
    sigma: f64,
    len: f64,
    start_exp: i32,
    end_exp: i32,
    q: Vec<f64>,
    ubar: Option<f64>,
    z_min: f64,
}

impl Segment {
    /// Factor `h - F` on `[start, end]`; a root at `ubar` cancels the denominator.
    pub fn build(model: &WaveModel, h: &Rational, start: &Endpoint, end: &Endpoint) -> Result<Segment> {
        let mut g = &UniPoly::constant(h.clone(), U) - model.f();
        let mut ubar = Some(to_f64(&model.ubar));
        if sign(&g.eval(&model.ubar)) == 0 {
            g = g.deflate(&model.ubar, 1)?;
            ubar = None;
        }
        for ep in [start, end] {
            for _ in 0..ep.multiplicity {
                g = g.div_rem(&UniPoly::linear_root(&ep.value, U))?.0;
            }
        }
        let diff = &end.value - &start.value;
        let len = to_f64(&diff).abs();
        if len == 0.0 {
            return Err(Error::LevelOutOfRange("degenerate segment".into()));
        }
        Ok(Segment {
            start: to_f64(&start.value),
            end: to_f64(&end.value),
            sigma: sign(&diff) as f64,
            len,
            start_exp: start.multiplicity as i32,
            end_exp: end.multiplicity as i32,
            q: g.to_f64_coeffs(),
            ubar,
            z_min: 0.0,
        })
    }

    /// Stop short of the far end by `eps` times the segment length.
    pub fn truncate_end(mut self, eps: f64) -> Self {
        self.z_min = eps * self.len;
        self
    }

    pub fn len(&self) -> f64 {
        self.len
    }

    pub fn start(&self) -> f64 {
        self.start
    }

    pub fn end(&self) -> f64 {
        self.end
    }

    fn u_at(&self, ds: f64, de: f64) -> f64 {
        if ds <= de {
            self.start + self.sigma * ds
        } else {
            self.end - self.sigma * de
        }
    }

    /// Radicand `v^2` at distances `ds` from the start and `de` from the end.
    pub fn v2(&self, ds: f64, de: f64) -> f64 {
        let u = self.u_at(ds, de);
        let mut val = 2.0 * self.q.iter().rev().fold(0.0, |acc, c| acc * u + c);
        if self.start_exp > 0 {
            val *= ds.powi(self.start_exp);
        }
        if self.end_exp > 0 {
            val *= de.powi(self.end_exp);
        }
        if let Some(ub) = self.ubar {
            val /= u - ub;
        }
        val.abs()
    }

    fn v_pos(&self, p: Pos) -> f64 {
        self.v2(p.y, p.z).sqrt()
    }

    fn pos_y(&self, y: f64) -> Pos {
        Pos { y, z: self.len - y }
    }

    fn pos_z(&self, z: f64) -> Pos {
        Pos { y: self.len - z, z }
    }

    fn first_half(&self, p: Pos) -> bool {
        p.y <= p.z
    }

    /// `∫ dξ` between two positions, `a` nearer the start.
    fn integral(&self, a: Pos, b: Pos, cfg: &QuadratureConfig) -> Result<f64> {
        let mid = self.pos_y(self.len / 2.0);
        match (self.first_half(a), self.first_half(b)) {
            (true, true) => {
                let f = |_: f64, da: f64, db: f64| 1.0 / self.v2(a.y + da, b.z + db).sqrt();
                Ok(tanh_sinh(f, a.y, b.y, cfg)?.value)
            }
            (false, false) => self.integral_z(b.z, a.z, a.y, cfg),
            (true, false) => {
                let near = self.integral(a, mid, cfg)?;
                Ok(near + self.integral_z(b.z, mid.z, mid.y, cfg)?)
            }
            (false, true) => Err(Error::QuadratureFailure("positions out of order".into())),
        }
    }

    /// Integral over `z in [z_lo, z_hi]`; `y_at_hi` is the start distance at `z_hi`.
    fn integral_z(&self, z_lo: f64, z_hi: f64, y_at_hi: f64, cfg: &QuadratureConfig) -> Result<f64> {
        // Near a double root the integrand behaves like 1/z; split geometrically.
        if self.end_exp >= 2 && z_lo > 0.0 && z_hi > 8.0 * z_lo {
            let cut = 8.0 * z_lo;
            let near = self.integral_z(z_lo, cut, y_at_hi + (z_hi - cut), cfg)?;
            return Ok(near + self.integral_z(cut, z_hi, y_at_hi, cfg)?);
        }
        let f = |_: f64, da: f64, db: f64| 1.0 / self.v2(y_at_hi + db, z_lo + da).sqrt();
        Ok(tanh_sinh(f, z_lo, z_hi, cfg)?.value)
    }

    /// Accelerations `u''` at the far end, `(1/2) d(v^2)/du`, by a one-sided stencil.
    pub fn end_acceleration(&self) -> f64 {
        let d = 1e-5 * self.len;
        let f = |k: f64| self.v2(self.len - k * d, k * d);
        let dv2_dde = (-3.0 * f(0.0) + 4.0 * f(1.0) - f(2.0)) / (2.0 * d);
        // u = end - sigma * de
        0.5 * (-self.sigma) * dv2_dde
    }

    /// Total `ξ` from start to the (possibly truncated) end.
    pub fn total(&self, cfg: &QuadratureConfig) -> Result<f64> {
        self.integral(self.pos_y(0.0), self.pos_z(self.z_min), cfg)
    }

    /// Uniform-`ξ` samples `(ξ, u, du/dξ)` from start to end, and the total `ξ`.
    pub fn sample(&self, cfg: &QuadratureConfig) -> Result<HalfProfile> {
        let n = cfg.sample_count;
        let mid = self.pos_y(self.len / 2.0);
        let xi_mid = self.integral(self.pos_y(0.0), mid, cfg)?;
        let end = self.pos_z(self.z_min);
        let total = xi_mid + self.integral(mid, end, cfg)?;
        let tol = cfg.abs_tol.max(cfg.rel_tol * total);
        let mut out = HalfProfile { xi: Vec::with_capacity(n), u: Vec::with_capacity(n), du: Vec::with_capacity(n), total };
        let mut prev = (self.pos_y(0.0), 0.0);
        for k in 0..n {
            let target = total * k as f64 / (n - 1) as f64;
            let p = if k == 0 {
                self.pos_y(0.0)
            } else if k == n - 1 {
                end
            } else if target <= xi_mid {
                self.solve(prev.0, prev.1, target, true, tol, cfg)?
            } else {
                let base = if self.first_half(prev.0) { (mid, xi_mid) } else { prev };
                self.solve(base.0, base.1, target, false, tol, cfg)?
            };
            out.xi.push(target);
            out.u.push(self.u_at(p.y, p.z));
            out.du.push(self.sigma * self.v_pos(p));
            prev = (p, target);
        }
        Ok(out)
    }

    /// Position past `base` (at `xi_base`) where `ξ` reaches `target`.
    fn solve(&self, base: Pos, xi_base: f64, target: f64, in_y: bool, tol: f64, cfg: &QuadratureConfig) -> Result<Pos> {
        let delta = target - xi_base;
        let at = |t: f64| if in_y { self.pos_y(base.y + t) } else { self.pos_z(base.z - t) };
        let t_max = if in_y { self.len / 2.0 - base.y } else { base.z - self.z_min };
        let phi = |t: f64| -> Result<f64> {
            Ok(self.integral(base, at(t), cfg)? - delta)
        };
        let (mut lo, mut hi) = (0.0, t_max);
        let v0 = self.v_pos(base);
        let mut t = if v0 > 0.0 {
            delta * v0
        } else {
            let ts = 1e-6 * t_max;
            let kappa = self.v_pos(at(ts)).powi(2) / ts;
            kappa * delta * delta / 4.0
        };
        if !(t > lo && t < hi) {
            t = 0.5 * (lo + hi);
        }
        for _ in 0..200 {
            let r = phi(t)?;
            if r.abs() <= tol {
                return Ok(at(t));
            }
            if r < 0.0 {
                lo = t;
            } else {
                hi = t;
            }
            if hi - lo <= 4.0 * f64::EPSILON * self.len {
                return Ok(at(t));
            }
            let v = self.v_pos(at(t));
            let tn = t - r * v;
            t = if tn > lo && tn < hi && v > 0.0 { tn } else { 0.5 * (lo + hi) };
        }
        Err(Error::QuadratureFailure(format!("sample inversion did not converge near ξ = {target}")))
    }
}

/// Samples from a turning point to a far end.
#[derive(Clone, Debug)]
pub struct HalfProfile {
    pub xi: Vec<f64>,
    pub u: Vec<f64>,
    pub du: Vec<f64>,
    pub total: f64,
}

/// Mirror a half profile about `ξ = 0`.
fn mirrored(half: &HalfProfile) -> (Vec<f64>, Vec<f64>, Vec<f64>) {
    let n = half.xi.len();
    let mut xi = Vec::with_capacity(2 * n - 1);
    let mut u = Vec::with_capacity(2 * n - 1);
    let mut du = Vec::with_capacity(2 * n - 1);
    for k in (1..n).rev() {
        xi.push(-half.xi[k]);
        u.push(half.u[k]);
        du.push(-half.du[k]);
    }
    xi.extend_from_slice(&half.xi);
    u.extend_from_slice(&half.u);
    du.extend_from_slice(&half.du);
    (xi, u, du)
}

/// `max |F(u) + (u - ubar) u'^2 / 2 - h|` over the samples.
pub fn hamiltonian_residual(model: &WaveModel, h: f64, u: &[f64], du: &[f64]) -> f64 {
    let ub = to_f64(&model.ubar);
    u.iter()
        .zip(du)
        .map(|(&x, &v)| (model.f().eval_f64(x) + 0.5 * v * v * (x - ub) - h).abs())
        .fold(0.0, f64::max)
}

fn finish(kind: ProfileKind, model: &WaveModel, h: &Rational, xi: Vec<f64>, u: Vec<f64>, du: Vec<f64>, mut meta: ProfileMeta) -> WaveProfile {
    meta.hamiltonian_residual = hamiltonian_residual(model, to_f64(h), &u, &du);
    WaveProfile { kind, xi, u, du, meta }
}

/// `sqrt(-F''(s) / (s - ubar))`, the exponential rate at the saddle.
pub fn decay_rate(model: &WaveModel, s: &Rational) -> f64 {
    (-to_f64(&model.f2().eval(s)) / to_f64(&(s - &model.ubar))).sqrt()
}

/// Solitary wave through the saddle `s` of `model`.
pub fn solitary_profile(model: &WaveModel, s: &Rational, cfg: &QuadratureConfig) -> Result<WaveProfile> {
    cfg.validate()?;
    if model.role_at(s) != SaddleRole::Saddle || sign(&model.f1().eval(s)) != 0 {
        return Err(Error::NotAdmissible(format!("u = {s} is not a saddle of the model")));
    }
    let m = crest(model, s).map_err(|_| Error::NotAdmissible(format!("no homoclinic orbit through {s}")))?;
    solitary_from_parts(model, s, &Endpoint::from_root(&m, 1), ProfileKind::Solitary, cfg)
}

/// Solitary profile with the saddle (possibly a rational stand-in) and crest already located.
pub fn solitary_from_parts(
    model: &WaveModel,
    s: &Rational,
    crest: &Endpoint,
    kind: ProfileKind,
    cfg: &QuadratureConfig,
) -> Result<WaveProfile> {
    cfg.validate()?;
    let h = model.f().eval(s);
    let seg = Segment::build(model, &h, crest, &Endpoint::new(s.clone(), 2))?.truncate_end(TAIL_EPS);
    let half = seg.sample(cfg)?;
    let (xi, u, du) = mirrored(&half);
    let mut meta = ProfileMeta::new(model, &h);
    meta.s = Some(to_f64(s));
    meta.m = Some(to_f64(&crest.value));
    meta.half_width = Some(half.total);
    meta.decay_rate = Some(decay_rate(model, s));
    meta.polarity = Some(if crest.value > *s { Polarity::Elevation } else { Polarity::Depression });
    meta.extra.push(("tail_eps".into(), TAIL_EPS));
    Ok(finish(kind, model, &h, xi, u, du, meta))
}

/// Periodic wave at level `h` around the center.
pub fn periodic_profile(model: &WaveModel, h: &Rational, cfg: &QuadratureConfig) -> Result<WaveProfile> {
    cfg.validate()?;
    let (lo, hi) = periodic_turning_points(model, h)?;
    let seg = Segment::build(model, h, &Endpoint::from_root(&hi, 1), &Endpoint::from_root(&lo, 1))?;
    let half = seg.sample(cfg)?;
    let (xi, u, du) = mirrored(&half);
    let mut meta = ProfileMeta::new(model, h);
    meta.m = Some(hi.to_f64());
    meta.period = Some(2.0 * half.total);
    meta.extra.push(("u_minus".into(), lo.to_f64()));
    meta.extra.push(("u_plus".into(), hi.to_f64()));
    if let Ok((uc, _)) = center(model) {
        meta.extra.push(("u_center".into(), uc.to_f64()));
    }
    Ok(finish(ProfileKind::Periodic, model, h, xi, u, du, meta))
}

/// Period of the periodic orbit at level `h`, without sampling.
pub fn periodic_period(model: &WaveModel, h: &Rational, cfg: &QuadratureConfig) -> Result<f64> {
    let (lo, hi) = periodic_turning_points(model, h)?;
    let seg = Segment::build(model, h, &Endpoint::from_root(&hi, 1), &Endpoint::from_root(&lo, 1))?;
    Ok(2.0 * seg.total(cfg)?)
}

/// `2 pi / sqrt(F''(u_c) / (u_c - ubar))`, the small-amplitude period.
pub fn linear_period(model: &WaveModel) -> Result<f64> {
    let (uc, _) = center(model)?;
    let x = uc.to_f64();
    let w2 = model.f2().eval_f64(x) / (x - to_f64(&model.ubar));
    Ok(2.0 * std::f64::consts::PI / w2.sqrt())
}

/// Compacton on the singular line `s = ubar(c)`, extended by `ubar` outside `(-T, T)`.
pub fn compacton_profile(c: &Rational, cfg: &QuadratureConfig) -> Result<WaveProfile> {
    cfg.validate()?;
    let ubar = ubar_of(c);
    let (model, _) = build_from_cs(&ParamPoint::new(c.clone(), ubar.clone()));
    let f2 = model.f2().eval(&ubar);
    // v^2 = (u - ubar) p(u) with p = -2 C and p(ubar) = -F''(ubar).
    if sign(&f2) == 0 {
        return Err(Error::PNotPositive);
    }
    let cp = crest_polynomial(&model, &ubar)?;
    if !cp.is_squarefree() {
        return Err(Error::RepeatedRootInP);
    }
    let dir = -sign(&f2);
    let iv = if dir > 0 { Interval::above(ubar.clone()) } else { Interval::below(ubar.clone()) };
    let roots = isolate_real_roots(&cp, &iv)?;
    let m = if dir > 0 { roots.into_iter().next() } else { roots.into_iter().next_back() };
    let m = m.ok_or(Error::PNotPositive)?;
    let h = model.f().eval(&ubar);
    let seg = Segment::build(&model, &h, &Endpoint::from_root(&m, 1), &Endpoint::new(ubar.clone(), 1))?;
    let half = seg.sample(cfg)?;
    let t = half.total;
    let (mut xi, mut u, mut du) = mirrored(&half);
    // Constant continuation on both sides.
    let pad = (cfg.sample_count / 4).max(4);
    let step = t / (cfg.sample_count - 1) as f64;
    let ub = to_f64(&ubar);
    let left: Vec<f64> = (1..=pad).rev().map(|k| -t - k as f64 * step).collect();
    let right: Vec<f64> = (1..=pad).map(|k| t + k as f64 * step).collect();
    xi = left.iter().chain(xi.iter()).chain(right.iter()).copied().collect();
    u = std::iter::repeat(ub).take(pad).chain(u).chain(std::iter::repeat(ub).take(pad)).collect();
    du = std::iter::repeat(0.0).take(pad).chain(du).chain(std::iter::repeat(0.0).take(pad)).collect();

    let mut meta = ProfileMeta::new(&model, &h);
    meta.s = Some(ub);
    meta.m = Some(m.to_f64());
    meta.half_width = Some(t);
    meta.polarity = Some(if dir > 0 { Polarity::Elevation } else { Polarity::Depression });
    let expected = -to_f64(&f2) / 4.0;
    meta.extra.push(("junction_coefficient_expected".into(), expected));
    meta.extra.push(("junction_coefficient".into(), junction_fit(&half, ub, t)));
    Ok(finish(ProfileKind::Compacton, &model, &h, xi, u, du, meta))
}

/// Least-squares fit of `u - ubar = a (ξ - T)^2 + b (ξ - T)^3` on the samples nearest `T`; returns `a`.
fn junction_fit(half: &HalfProfile, ubar: f64, t: f64) -> f64 {
    let n = half.xi.len();
    let k0 = n.saturating_sub(n / 32 + 4);
    let (mut s44, mut s45, mut s55, mut r4, mut r5) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for k in k0..n - 1 {
        let d = half.xi[k] - t;
        let y = half.u[k] - ubar;
        let (p2, p3) = (d * d, d * d * d);
        s44 += p2 * p2;
        s45 += p2 * p3;
        s55 += p3 * p3;
        r4 += p2 * y;
        r5 += p3 * y;
    }
    let det = s44 * s55 - s45 * s45;
    (r4 * s55 - r5 * s45) / det
}

/// Peaked periodic wave on branch 1 (`[m1, ubar]`) or 2 (`[ubar, m2]`).
pub fn peaked_periodic_profile(model: &WaveModel, branch: u8, cfg: &QuadratureConfig) -> Result<WaveProfile> {
    cfg.validate()?;
    let fac = peaked_level_factorization(model)?;
    let m = match branch {
        1 => &fac.m1,
        2 => &fac.m2,
        _ => return Err(Error::WrongRegion(format!("branch must be 1 or 2, got {branch}"))),
    };
    let seg = peaked_segment(model, &fac.h_p, m)?;
    let half = seg.sample(cfg)?;
    let (xi, u, du) = mirrored(&half);
    let mut meta = ProfileMeta::new(model, &fac.h_p);
    meta.m = Some(m.to_f64());
    meta.half_width = Some(half.total);
    meta.period = Some(2.0 * half.total);
    meta.extra.push(("branch".into(), branch as f64));
    meta.extra.push(("corner_slope_expected".into(), corner_slope(model)));
    meta.extra.push(("corner_slope".into(), half.du.last().copied().unwrap_or(f64::NAN).abs()));
    meta.extra.push(("m1".into(), fac.m1.to_f64()));
    meta.extra.push(("m2".into(), fac.m2.to_f64()));
    Ok(finish(ProfileKind::PeakedPeriodic, model, &fac.h_p, xi, u, du, meta))
}

fn peaked_segment(model: &WaveModel, h_p: &Rational, m: &RealRoot) -> Result<Segment> {
    Segment::build(model, h_p, &Endpoint::from_root(m, 1), &Endpoint::new(model.ubar.clone(), 0))
}

/// `sqrt(-2 F'(ubar))`, the slope with which peaked orbits hit the singular line.
pub fn corner_slope(model: &WaveModel) -> f64 {
    (-2.0 * to_f64(&model.f1().eval(&model.ubar))).sqrt()
}

/// Times `(T1, T2)` to reach the singular line on the two peaked branches.
pub fn branch_times(model: &WaveModel, cfg: &QuadratureConfig) -> Result<(f64, f64)> {
    let fac = peaked_level_factorization(model)?;
    let t1 = peaked_segment(model, &fac.h_p, &fac.m1)?.total(cfg)?;
    let t2 = peaked_segment(model, &fac.h_p, &fac.m2)?.total(cfg)?;
    Ok((t1, t2))
}

/// Vertical search segment `{c} x [s_lo, s_hi]` for the glued wave.
#[derive(Clone, Debug, PartialEq)]
pub struct GluedPath {
    pub c: Rational,
    pub s_lo: Rational,
    pub s_hi: Rational,
}

impl Default for GluedPath {
    /// `c = -1`, `s` in `[1/4, 1/2]`, inside the region with `F'(ubar) < 0` above the singular line.
    fn default() -> Self {
        GluedPath {
            c: Rational::from_integer((-1).into()),
            s_lo: Rational::new(1.into(), 4.into()),
            s_hi: Rational::new(1.into(), 2.into()),
        }
    }
}

/// Tolerance on `|T1 - T2|` for the glued wave.
pub const GLUE_TOL: f64 = 1e-10;

/// Smooth periodic wave glued from both peaked branches where `T1 = T2`.
pub fn glued_smooth_profile(path: &GluedPath, cfg: &QuadratureConfig) -> Result<WaveProfile> {
    cfg.validate()?;
    let diff = |s: &Rational| -> Result<f64> {
        let (model, _) = build_from_cs(&ParamPoint::new(path.c.clone(), s.clone()));
        let (t1, t2) = branch_times(&model, cfg)?;
        Ok(t1 - t2)
    };
    let mut lo = path.s_lo.clone();
    let mut hi = path.s_hi.clone();
    let d_lo = diff(&lo)?;
    let d_hi = diff(&hi)?;
    if d_lo.signum() == d_hi.signum() {
        return Err(Error::NoSignChangeOnPath);
    }
    let mut best = if d_lo.abs() < d_hi.abs() { (lo.clone(), d_lo) } else { (hi.clone(), d_hi) };
    for _ in 0..200 {
        if best.1.abs() <= GLUE_TOL {
            break;
        }
        let mid = (&lo + &hi) / Rational::from_integer(2.into());
        let d = diff(&mid)?;
        if d.abs() < best.1.abs() {
            best = (mid.clone(), d);
        }
        if d.signum() == d_lo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if best.1.abs() > GLUE_TOL {
        return Err(Error::QuadratureFailure(format!("|T1 - T2| = {:e} above tolerance", best.1.abs())));
    }
    let s = best.0;
    let (model, _) = build_from_cs(&ParamPoint::new(path.c.clone(), s.clone()));
    let fac = peaked_level_factorization(&model)?;
    let seg1 = peaked_segment(&model, &fac.h_p, &fac.m1)?;
    let seg2 = peaked_segment(&model, &fac.h_p, &fac.m2)?;
    let h1 = seg1.sample(cfg)?;
    let h2 = seg2.sample(cfg)?;
    let (t1, t2) = (h1.total, h2.total);
    let n = h1.xi.len();

    let mut xi = Vec::with_capacity(4 * n);
    let mut u = Vec::with_capacity(4 * n);
    let mut du = Vec::with_capacity(4 * n);
    // m1 -> ubar on [-T1, 0].
    for k in 0..n {
        xi.push(h1.xi[k] - t1);
        u.push(h1.u[k]);
        du.push(h1.du[k]);
    }
    // ubar -> m2 on [0, T2].
    for k in (0..n - 1).rev() {
        xi.push(t2 - h2.xi[k]);
        u.push(h2.u[k]);
        du.push(-h2.du[k]);
    }
    // m2 -> ubar on [T2, 2 T2].
    for k in 1..n {
        xi.push(t2 + h2.xi[k]);
        u.push(h2.u[k]);
        du.push(h2.du[k]);
    }
    // ubar -> m1 on [2 T2, 2 T2 + T1].
    for k in (0..n - 1).rev() {
        xi.push(2.0 * t2 + t1 - h1.xi[k]);
        u.push(h1.u[k]);
        du.push(-h1.du[k]);
    }

    let mut meta = ProfileMeta::new(&model, &fac.h_p);
    meta.s = Some(to_f64(&s));
    meta.period = Some(2.0 * t1 + 2.0 * t2);
    meta.half_width = Some(t1);
    let slope = corner_slope(&model);
    meta.extra.extend([
        ("t1".to_string(), t1),
        ("t2".to_string(), t2),
        ("t_gap".to_string(), (t1 - t2).abs()),
        ("junction_slope_expected".to_string(), slope),
        ("junction_slope_left".to_string(), h1.du[n - 1].abs()),
        ("junction_slope_right".to_string(), h2.du[n - 1].abs()),
        ("junction_accel_left".to_string(), seg1.end_acceleration()),
        ("junction_accel_right".to_string(), seg2.end_acceleration()),
        ("junction_accel_expected".to_string(), -to_f64(&model.f2().eval(&model.ubar)) / 2.0),
        ("m1".to_string(), fac.m1.to_f64()),
        ("m2".to_string(), fac.m2.to_f64()),
    ]);
    meta.notes.push((
        "search_path".into(),
        format!("c = {}, s in [{}, {}], bisection on s", path.c, path.s_lo, path.s_hi),
    ));
    meta.notes.push(("s_found".into(), s.to_string()));
    Ok(finish(ProfileKind::GluedPeriodic, &model, &fac.h_p, xi, u, du, meta))
}

/// Nearest root of `(F(s~) - F(u)) / (u - s~)^2` beyond `s~` on the crest side,
/// for a saddle known only through a rational stand-in `s~`.
pub fn crest_near(model: &WaveModel, s: &Rational) -> Result<RealRoot> {
    let g = &UniPoly::constant(model.f().eval(s), U) - model.f();
    let (cp, _) = g.div_rem(&UniPoly::linear_root(s, U).pow(2))?;
    // The loop encloses the nearest center.
    let sf = to_f64(s);
    let nearest = critical_points(model)?
        .into_iter()
        .filter(|cp| cp.kind == CriticalKind::Center)
        .map(|cp| cp.u.to_f64())
        .min_by(|a, b| (a - sf).abs().total_cmp(&(b - sf).abs()))
        .ok_or(Error::NoCrest)?;
    let dir = if nearest > sf { 1 } else { -1 };
    let iv = if dir > 0 { Interval::above(s.clone()) } else { Interval::below(s.clone()) };
    let roots = isolate_real_roots(&cp, &iv).map_err(|_| Error::NoCrest)?;
    let m = if dir > 0 { roots.into_iter().next() } else { roots.into_iter().next_back() };
    let m = m.ok_or(Error::NoCrest)?;
    let s_side = s.cmp(&model.ubar);
    if s_side == Ordering::Equal || m.cmp_rational(&model.ubar) != s_side {
        return Err(Error::NoCrest);
    }
    Ok(m)
}
