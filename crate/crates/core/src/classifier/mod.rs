//! Existence regions, amplitude regions and the algebraic curves bounding them.
//!
//! A point `(c, s)` is placed by the exact signs of `s - ubar`, `F''(s)` and
//! `N(c, s)`:
//!
//! | `s > ubar`             | `s < ubar`             |
//! |------------------------|------------------------|
//! | R1: `F'' < 0`, `N > 0` | R4: `F'' > 0`, `N < 0` |
//! | R2: `F'' > 0`, `N > 0` | R5: `F'' < 0`, `N < 0` |
//! | R3: `F'' > 0`, `N < 0` | R6: `F'' < 0`, `N > 0` |
//!
//! The two missing sign patterns are empty: `F'` is convex, so a simple root
//! `s` with `F''(s) < 0` forces `F' > 0` to its left (and symmetrically).

pub mod amplitude;
pub mod appendix;
pub mod monotonicity;
pub mod printed;

use rayon::prelude::*;
use std::fmt;

use crate::ratpoly::rational::sign;
use crate::ratpoly::{
    distinct_real_roots, int, isolate_real_roots, BiPoly, Interval, MultiPoly, Rational, RealRoot,
    UniPoly,
};
use crate::wavemodel::{a1_value, a2_value, build_from_cs, ParamPoint};

pub use amplitude::{
    amplitude_at_fixed_k, amplitude_region, amplitude_sensitivity, printed_r, resultant_r,
    AmplitudeSensitivity,
};
pub use appendix::{verify_appendix, verify_with, CheckKind, IdentityCheck, IdentityReport, Transcriptions};
pub use monotonicity::{monotonicity_certificate, CertifiedCount, MonotonicityCase};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RegionLabel {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    OnA1,
    OnA2,
    OnNcurve,
    AtCstar,
}

impl RegionLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            RegionLabel::R1 => "R1",
            RegionLabel::R2 => "R2",
            RegionLabel::R3 => "R3",
            RegionLabel::R4 => "R4",
            RegionLabel::R5 => "R5",
            RegionLabel::R6 => "R6",
            RegionLabel::OnA1 => "OnA1",
            RegionLabel::OnA2 => "OnA2",
            RegionLabel::OnNcurve => "OnNcurve",
            RegionLabel::AtCstar => "AtCstar",
        }
    }

    pub fn is_admissible(self) -> bool {
        matches!(self, RegionLabel::R1 | RegionLabel::R4)
    }

    /// Regions with `F'(ubar) < 0`, which carry peaked periodic waves.
    pub fn is_peaked(self) -> bool {
        matches!(self, RegionLabel::R3 | RegionLabel::R6)
    }
}

impl fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AmplitudeRegion {
    I,
    II,
    III,
    IV,
    V,
    OnRcurve,
    NotAdmissible,
}

impl AmplitudeRegion {
    pub fn as_str(self) -> &'static str {
        match self {
            AmplitudeRegion::I => "I",
            AmplitudeRegion::II => "II",
            AmplitudeRegion::III => "III",
            AmplitudeRegion::IV => "IV",
            AmplitudeRegion::V => "V",
            AmplitudeRegion::OnRcurve => "OnRcurve",
            AmplitudeRegion::NotAdmissible => "NotAdmissible",
        }
    }
}

impl fmt::Display for AmplitudeRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Polarity {
    Elevation,
    Depression,
}

impl Polarity {
    pub fn as_str(self) -> &'static str {
        match self {
            Polarity::Elevation => "Elevation",
            Polarity::Depression => "Depression",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AmplitudeTrend {
    pub region: AmplitudeRegion,
    /// Sign of the derivative of `a = m - s` with respect to `c` at fixed `K`.
    pub sign_dc_a: i8,
    pub wave_polarity: Option<Polarity>,
}

impl AmplitudeTrend {
    pub fn not_admissible() -> Self {
        AmplitudeTrend { region: AmplitudeRegion::NotAdmissible, sign_dc_a: 0, wave_polarity: None }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Diagnostics {
    pub f2s: Rational,
    pub n: Rational,
    pub s_minus_ubar: Rational,
    pub r: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Classification {
    pub param: ParamPoint,
    pub region: RegionLabel,
    pub admissible: bool,
    pub trend: AmplitudeTrend,
    pub diagnostics: Diagnostics,
}

/// `N(c, s)`, the factor of `F'(ubar)` beside `s - ubar`.
pub fn n_poly() -> BiPoly {
    printed::parse(printed::N, &printed::CS)
}

/// `M(c, s)`, the factor of the discriminant of `F'` beside `F''(s)^2`.
pub fn m_poly() -> BiPoly {
    printed::parse(printed::M, &printed::CS)
}

fn point(c: &Rational, s: &Rational) -> [(&'static str, Rational); 2] {
    [("c", c.clone()), ("s", s.clone())]
}

pub fn n_value(c: &Rational, s: &Rational) -> Rational {
    thread_local! {
        static N: BiPoly = n_poly();
    }
    N.with(|n| n.eval(&point(c, s)).expect("c, s assigned"))
}

/// Existence region of `(c, s)`; boundary tags win over open regions.
pub fn region_of(p: &ParamPoint) -> RegionLabel {
    let a1 = sign(&a1_value(&p.c, &p.s));
    let a2 = sign(&a2_value(&p.c, &p.s));
    if a1 == 0 && a2 == 0 {
        return RegionLabel::AtCstar;
    }
    if a2 == 0 {
        return RegionLabel::OnA2;
    }
    if a1 == 0 {
        return RegionLabel::OnA1;
    }
    let n = sign(&n_value(&p.c, &p.s));
    if n == 0 {
        return RegionLabel::OnNcurve;
    }
    // a1 = -14 F''(s), so F''(s) < 0 iff a1 > 0.
    let f2_neg = a1 > 0;
    match (a2 > 0, f2_neg, n > 0) {
        (true, true, true) => RegionLabel::R1,
        (true, false, true) => RegionLabel::R2,
        (true, false, false) => RegionLabel::R3,
        (false, false, false) => RegionLabel::R4,
        (false, true, false) => RegionLabel::R5,
        (false, true, true) => RegionLabel::R6,
        _ => unreachable!("sign pattern excluded by convexity of F'"),
    }
}

pub fn diagnostics(p: &ParamPoint) -> Diagnostics {
    thread_local! {
        static R: BiPoly = printed_r();
    }
    let (model, _) = build_from_cs(p);
    Diagnostics {
        f2s: model.f2().eval(&p.s),
        n: n_value(&p.c, &p.s),
        s_minus_ubar: a2_value(&p.c, &p.s),
        r: R.with(|r| r.eval(&point(&p.c, &p.s)).expect("c, s assigned")),
    }
}

pub fn classify(p: &ParamPoint) -> Classification {
    let region = region_of(p);
    let admissible = region.is_admissible();
    let trend = if admissible {
        amplitude_region(p).unwrap_or_else(|_| AmplitudeTrend::not_admissible())
    } else {
        AmplitudeTrend::not_admissible()
    };
    Classification { param: p.clone(), region, admissible, trend, diagnostics: diagnostics(p) }
}

/// The common point of `A1`, `A2` and `N = 0`.
#[derive(Clone, Debug)]
pub struct CStar {
    /// `P*(s) = -2 - 20 s + 6 s^2 - 12 s^3`.
    pub p_star: UniPoly,
    pub s_root: RealRoot,
    pub s_interval: Interval,
    pub c_interval: Interval,
    pub s_approx: Rational,
    pub c_approx: Rational,
    /// `Res_c(A2, N) / P*`, a nonzero constant.
    pub resultant_cofactor: Rational,
}

pub fn p_star() -> UniPoly {
    printed::parse(printed::P_STAR, &["s"]).to_unipoly("s").expect("univariate")
}

/// Isolate `s*` to width at most `tol` and map it to `c* = -14 s* - 1`.
pub fn cstar(tol: &Rational) -> CStar {
    let p = p_star();
    assert_eq!(distinct_real_roots(&p).unwrap(), 1);
    let mut root = isolate_real_roots(&p, &Interval::real_line()).unwrap().remove(0);
    root.refine_to(tol);
    let (lo, hi) = root.bounds();
    let s_interval = Interval::closed(lo.clone(), hi.clone()).unwrap();
    let c_of = |s: &Rational| int(-14) * s - int(1);
    let c_interval = Interval::closed(c_of(hi), c_of(lo)).unwrap();
    let s_approx = root.approx(&(tol / int(2)));
    let c_approx = c_of(&s_approx);
    let a2 = MultiPoly::parse("s + (1 + c)/14", &printed::CS).unwrap();
    let res = a2.resultant(&n_poly(), "c").unwrap().to_unipoly("s").unwrap();
    let cof = res.div_exact(&p).expect("P* divides Res_c(A2, N)");
    CStar {
        p_star: p,
        s_root: root.clone(),
        s_interval,
        c_interval,
        s_approx,
        c_approx,
        resultant_cofactor: cof.lc(),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScanRow {
    pub c: Rational,
    pub s: Rational,
    pub region: RegionLabel,
    pub amplitude_region: AmplitudeRegion,
}

/// Evenly spaced grid of `n` rationals from `a` to `b` inclusive.
pub fn linspace(a: &Rational, b: &Rational, n: usize) -> Vec<Rational> {
    match n {
        0 => vec![],
        1 => vec![a.clone()],
        _ => (0..n)
            .map(|i| a + (b - a) * Rational::new((i as i64).into(), ((n - 1) as i64).into()))
            .collect(),
    }
}

/// Classify every point of a rectangular grid, rows ordered by `c` then `s`.
pub fn scan_grid(c: &[Rational], s: &[Rational]) -> Vec<ScanRow> {
    let pts: Vec<(Rational, Rational)> =
        c.iter().flat_map(|cv| s.iter().map(move |sv| (cv.clone(), sv.clone()))).collect();
    pts.into_par_iter()
        .map(|(c, s)| {
            let p = ParamPoint::new(c, s);
            let region = region_of(&p);
            let amplitude_region = if region.is_admissible() {
                amplitude_region(&p).map(|t| t.region).unwrap_or(AmplitudeRegion::NotAdmissible)
            } else {
                AmplitudeRegion::NotAdmissible
            };
            ScanRow { c: p.c, s: p.s, region, amplitude_region }
        })
        .collect()
}
