//! Critical points, level sets and turning points of the Hamiltonian
//! `H(u, v) = F(u) + v^2 (u - ubar) / 2`.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::ratpoly::rational::{display, from_f64, sign};
use crate::ratpoly::{int, isolate_real_roots, Interval, Rational, RealRoot, UniPoly};
use crate::wavemodel::{WaveModel, U};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CriticalKind {
    Saddle,
    Center,
}

#[derive(Clone, Debug)]
pub struct CriticalPoint {
    pub u: RealRoot,
    pub kind: CriticalKind,
    /// Sign of `F''(u) (u - ubar)`, the Jacobian determinant up to a positive factor.
    pub det_sign: i8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitKind {
    Homoclinic,
    Periodic,
    HeteroclinicPair,
    CompactHomoclinic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    AboveUbar,
    BelowUbar,
}

impl Side {
    pub fn sign(self) -> i8 {
        match self {
            Side::AboveUbar => 1,
            Side::BelowUbar => -1,
        }
    }
}

#[derive(Clone, Debug)]
pub struct OrbitSpec {
    pub h: Rational,
    pub kind: OrbitKind,
    pub turning_points: Vec<RealRoot>,
    pub side: Side,
}

/// `h_p - F(u) = (u - ubar) W(u)` with `W` certified to have exactly two
/// real roots `m1 < ubar < m2`; `q` is `W / ((u - m1)(u - m2))` with the
/// roots replaced by tight rational approximations.
#[derive(Clone, Debug)]
pub struct PeakedFactorization {
    pub m1: RealRoot,
    pub m2: RealRoot,
    pub q: UniPoly,
    pub w: UniPoly,
    pub h_p: Rational,
}

fn side_of(model: &WaveModel, r: &RealRoot) -> Option<Side> {
    match r.cmp_rational(&model.ubar) {
        Ordering::Greater => Some(Side::AboveUbar),
        Ordering::Less => Some(Side::BelowUbar),
        Ordering::Equal => None,
    }
}

/// All real critical points, classified by the sign of `F''(u) (u - ubar)`.
pub fn critical_points(model: &WaveModel) -> Result<Vec<CriticalPoint>> {
    let f1 = model.f1();
    let g = f1.gcd(&f1.derivative());
    if g.deg() > 0 && crate::ratpoly::distinct_real_roots(&g)? > 0 {
        return Err(Error::DegenerateCritical("F' has a repeated real root".into()));
    }
    let det = &model.f2() * &model.ubar_factor();
    isolate_real_roots(&f1, &Interval::real_line())?
        .into_iter()
        .map(|u| {
            let det_sign = u.sign_of(&det);
            let kind = match det_sign {
                -1 => CriticalKind::Saddle,
                1 => CriticalKind::Center,
                _ => {
                    return Err(Error::DegenerateCritical(
                        "critical point on the singular line".into(),
                    ))
                }
            };
            Ok(CriticalPoint { u, kind, det_sign })
        })
        .collect()
}

/// `(F(u) - F(s)) / (u - s)^2`, exact when `F'(s) = 0`.
pub fn crest_polynomial(model: &WaveModel, s: &Rational) -> Result<UniPoly> {
    let shifted = model.f() - &UniPoly::constant(model.f().eval(s), U);
    shifted.deflate(s, 2)
}

/// The crest (or trough) `m` of the homoclinic orbit through the saddle `s`.
pub fn crest(model: &WaveModel, s: &Rational) -> Result<RealRoot> {
    let c = crest_polynomial(model, s).map_err(|_| Error::NoCrest)?;
    let f2s = sign(&model.f2().eval(s));
    let s_side = sign(&(s - &model.ubar));
    if f2s == 0 || s_side == 0 || f2s * s_side >= 0 {
        return Err(Error::NoCrest);
    }
    // Convex F' puts the center above s when F''(s) < 0 and below otherwise.
    let dir = -f2s;
    let iv = if dir > 0 { Interval::above(s.clone()) } else { Interval::below(s.clone()) };
    let roots = isolate_real_roots(&c, &iv).map_err(|_| Error::NoCrest)?;
    let m = if dir > 0 { roots.into_iter().next() } else { roots.into_iter().next_back() };
    let m = m.ok_or(Error::NoCrest)?;
    let same_side = match m.cmp_rational(&model.ubar) {
        Ordering::Greater => s_side > 0,
        Ordering::Less => s_side < 0,
        Ordering::Equal => false,
    };
    if !same_side || m.sign_of(&model.f1()) == 0 {
        return Err(Error::NoCrest);
    }
    Ok(m)
}

/// Homoclinic orbit through the saddle `s` at level `h_s = F(s)`.
pub fn homoclinic_orbit(model: &WaveModel, s: &Rational) -> Result<OrbitSpec> {
    let m = crest(model, s)?;
    let side = if s > &model.ubar { Side::AboveUbar } else { Side::BelowUbar };
    Ok(OrbitSpec {
        h: model.f().eval(s),
        kind: OrbitKind::Homoclinic,
        turning_points: vec![RealRoot::rational(s.clone(), U), m],
        side,
    })
}

/// Exact `v^2 = 2 (h - F(u)) / (u - ubar)`.
pub fn v_squared(model: &WaveModel, h: &Rational, u: &Rational) -> Result<Rational> {
    let num = (h - model.f().eval(u)) * int(2);
    let den = u - &model.ubar;
    if den.is_zero() {
        return if num.is_zero() {
            Ok(-model.f1().eval(u) * int(2))
        } else {
            Err(Error::OnSingularLine)
        };
    }
    let v2 = num / den;
    if v2.is_negative() {
        return Err(Error::NegativeRadicand(display(u)));
    }
    Ok(v2)
}

/// Upper branch `v(u) >= 0` of the level set `H = h`.
///
/// On the singular line with `h = F(ubar)` the radicand is taken as its
/// limit `-2 F'(ubar)`.
pub fn v_of_u(model: &WaveModel, h: &Rational, u: &Rational) -> Result<f64> {
    Ok(crate::ratpoly::rational::to_f64(&v_squared(model, h, u)?).sqrt())
}

pub fn hamiltonian(model: &WaveModel, u: &Rational, v: &Rational) -> Rational {
    model.f().eval(u) + v * v * (u - &model.ubar) / int(2)
}

/// Float Hamiltonian for sampled profiles.
pub fn hamiltonian_f64(model: &WaveModel, u: f64, v: f64) -> f64 {
    model.f().eval_f64(u) + 0.5 * v * v * (u - crate::ratpoly::rational::to_f64(&model.ubar))
}

/// The unique center of the model, with its side of the singular line.
pub fn center(model: &WaveModel) -> Result<(RealRoot, Side)> {
    let cps = critical_points(model)?;
    let mut centers = cps.into_iter().filter(|c| c.kind == CriticalKind::Center);
    let c = centers.next().ok_or_else(|| Error::LevelOutOfRange("no center".into()))?;
    if centers.next().is_some() {
        return Err(Error::LevelOutOfRange("more than one center".into()));
    }
    let side = side_of(model, &c.u).expect("center off the singular line");
    Ok((c.u, side))
}

/// Turning points `u_- < u_c < u_+` of the periodic orbit at level `h`.
pub fn periodic_turning_points(model: &WaveModel, h: &Rational) -> Result<(RealRoot, RealRoot)> {
    let (uc, side) = center(model)?;
    let e = side.sign();
    let g = &UniPoly::constant(h.clone(), U) - model.f();
    // Need e (h - F(u_c)) > 0.
    if uc.sign_of(&g) != e {
        return Err(Error::LevelOutOfRange(format!("h = {} is not past the center level", display(h))));
    }
    if !g.is_squarefree() {
        return Err(Error::LevelOutOfRange("level passes through a critical point".into()));
    }
    let roots = isolate_real_roots(&g, &Interval::real_line())?;
    let below = roots.iter().filter(|r| r.cmp_root(&uc) == Ordering::Less).next_back().cloned();
    let above = roots.iter().find(|r| r.cmp_root(&uc) == Ordering::Greater).cloned();
    let (lo, hi) = match (below, above) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::LevelOutOfRange("orbit is unbounded".into())),
    };
    let ok = match side {
        Side::AboveUbar => lo.cmp_rational(&model.ubar) == Ordering::Greater,
        Side::BelowUbar => hi.cmp_rational(&model.ubar) == Ordering::Less,
    };
    if !ok {
        return Err(Error::LevelOutOfRange("orbit reaches the singular line".into()));
    }
    Ok((lo, hi))
}

/// Periodic orbit around the center at level `h`.
pub fn periodic_orbit(model: &WaveModel, h: &Rational) -> Result<OrbitSpec> {
    let (a, b) = periodic_turning_points(model, h)?;
    let side = side_of(model, &a).expect("checked off the singular line");
    Ok(OrbitSpec { h: h.clone(), kind: OrbitKind::Periodic, turning_points: vec![a, b], side })
}

/// Exact `W(u) = (F(ubar) - F(u)) / (u - ubar)`.
pub fn peaked_w(model: &WaveModel) -> Result<UniPoly> {
    let h_p = model.f().eval(&model.ubar);
    (&UniPoly::constant(h_p, U) - model.f()).div_exact(&model.ubar_factor())
}

/// Factorization behind the two heteroclinic orbits meeting the singular line.
pub fn peaked_level_factorization(model: &WaveModel) -> Result<PeakedFactorization> {
    if model.f1().sign_at(&model.ubar) >= 0 {
        return Err(Error::WrongRegion("peaked waves need F'(ubar) < 0".into()));
    }
    let w = peaked_w(model)?;
    let roots = isolate_real_roots(&w, &Interval::real_line())
        .map_err(|_| Error::WrongRegion("W has a repeated root".into()))?;
    if roots.len() != 2 {
        return Err(Error::WrongRegion(format!("W has {} real roots, expected 2", roots.len())));
    }
    let (m1, m2) = (roots[0].clone(), roots[1].clone());
    let tol = crate::ratpoly::rational::pow2(-80);
    let quad = &UniPoly::linear_root(&m1.approx(&tol), U) * &UniPoly::linear_root(&m2.approx(&tol), U);
    let (q, _) = w.div_rem(&quad)?;
    let q = round_coeffs(&q);
    Ok(PeakedFactorization { m1, m2, q, w, h_p: model.f().eval(&model.ubar) })
}

fn round_coeffs(p: &UniPoly) -> UniPoly {
    UniPoly::new(
        p.coeffs().iter().map(|c| from_f64(crate::ratpoly::rational::to_f64(c))).collect(),
        p.var(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::rat;
    use crate::wavemodel::{build_from_cs, ParamPoint};

    #[test]
    fn admissible_point_has_saddle_and_center() {
        let (m, _) = build_from_cs(&ParamPoint::new(int(2), int(0)));
        let cps = critical_points(&m).unwrap();
        assert_eq!(cps.len(), 2);
        assert_eq!(cps[0].kind, CriticalKind::Saddle);
        assert_eq!(cps[0].u.cmp_rational(&int(0)), Ordering::Equal);
        assert_eq!(cps[1].kind, CriticalKind::Center);
        let uc = cps[1].u.to_f64();
        assert!(uc > 0.0 && uc < 0.553);
    }

    #[test]
    fn crest_at_reference_point() {
        let (m, _) = build_from_cs(&ParamPoint::new(int(2), int(0)));
        let c = crest_polynomial(&m, &int(0)).unwrap();
        assert_eq!(c.scale(&int(140)), UniPoly::from_ints(&[-5, 10, -5, 6], U));
        let r = crest(&m, &int(0)).unwrap();
        let x = r.to_f64();
        assert!(x > 0.5 && x < 0.6);
    }

    #[test]
    fn radicand_vanishes_at_turning_points() {
        let (m, _) = build_from_cs(&ParamPoint::new(int(2), int(0)));
        let h = m.f().eval(&int(0));
        assert_eq!(v_of_u(&m, &h, &int(0)).unwrap(), 0.0);
        assert!(matches!(v_of_u(&m, &h, &int(2)), Err(Error::NegativeRadicand(_))));
        assert_eq!(v_of_u(&m, &int(1), &m.ubar), Err(Error::OnSingularLine));
        let u = rat(1, 4);
        let v2 = v_squared(&m, &h, &u).unwrap();
        assert_eq!(m.f().eval(&u) + &v2 * (&u - &m.ubar) / int(2), h);
    }

    #[test]
    fn periodic_turning_points_bracket_center() {
        let (m, _) = build_from_cs(&ParamPoint::new(int(2), int(0)));
        let (uc, _) = center(&m).unwrap();
        let hc = uc.approx(&rat(1, 1 << 30));
        let hc = m.f().eval(&hc);
        let hs = m.f().eval(&int(0));
        let h = (&hc + &hs) / int(2);
        let (a, b) = periodic_turning_points(&m, &h).unwrap();
        assert_eq!(a.cmp_rational(&int(0)), Ordering::Greater);
        assert_eq!(a.cmp_root(&uc), Ordering::Less);
        assert_eq!(b.cmp_root(&uc), Ordering::Greater);
        assert!(periodic_turning_points(&m, &(hs + rat(1, 1000))).is_err());
    }
}
