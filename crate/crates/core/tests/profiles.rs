mod common;

use common::*;
use tws_core::classifier::Polarity;
use tws_core::orbits::{center, critical_points, CriticalKind};
use tws_core::profiles::*;
use tws_core::quadrature::QuadratureConfig;
use tws_core::ratpoly::rational::{pow2, to_f64};
use tws_core::ratpoly::{int, rat, Rational};
use tws_core::wavemodel::{build_from_cs, ubar_of, ParamPoint, WaveModel};
use tws_core::Error;

fn model(c: Rational, s: Rational) -> WaveModel {
    build_from_cs(&ParamPoint::new(c, s)).0
}

fn cfg(n: usize) -> QuadratureConfig {
    QuadratureConfig::default().with_samples(n)
}

/// Non-negative half of a profile centered at `ξ = 0`.
fn right_half(p: &WaveProfile) -> (Vec<f64>, Vec<f64>, Vec<f64>) {
    let k0 = p.xi.iter().position(|x| *x >= 0.0).unwrap();
    (p.xi[k0..].to_vec(), p.u[k0..].to_vec(), p.du[k0..].to_vec())
}

fn assert_monotone(xi: &[f64]) {
    assert!(xi.windows(2).all(|w| w[0] < w[1]), "abscissae must increase strictly");
}

#[test]
fn solitary_matches_rk4_oracle() {
    let m = model(int(2), int(0));
    let p = solitary_profile(&m, &int(0), &cfg(256)).unwrap();
    assert_eq!(p.kind, ProfileKind::Solitary);
    assert_monotone(&p.xi);
    let crest = p.meta.m.unwrap();
    let (xi, u, du) = right_half(&p);
    assert_eq!(xi[0], 0.0);
    assert_eq!(u[0], crest);
    let oracle = rk4_profile(&m.f1(), to_f64(&m.ubar), crest, &xi, 1e-3);
    // The saddle amplifies perturbations as e^{λξ}; compare before the tail.
    let s = p.meta.s.unwrap();
    let mut compared = 0;
    for k in 0..xi.len() {
        if (u[k] - s).abs() < 1e-3 * (crest - s).abs() {
            break;
        }
        assert!((u[k] - oracle[k].0).abs() < 1e-8, "u at ξ = {}: {} vs {}", xi[k], u[k], oracle[k].0);
        assert!((du[k] - oracle[k].1).abs() < 1e-7, "u' at ξ = {}", xi[k]);
        compared += 1;
    }
    assert!(compared > 20, "only {compared} samples before the tail");
}

#[test]
fn solitary_invariants() {
    let m = model(int(2), int(0));
    let p = solitary_profile(&m, &int(0), &cfg(512)).unwrap();
    assert!(p.meta.hamiltonian_residual <= 1e-8);
    assert!(p.symmetry_error() <= 1e-8);
    assert_eq!(p.meta.polarity, Some(Polarity::Elevation));
    let (s, crest) = (p.meta.s.unwrap(), p.meta.m.unwrap());
    assert!(p.u.iter().all(|u| *u >= s - 1e-12 && *u <= crest + 1e-12));
    // Tail rate against an independent finite difference of F'.
    let h = 1e-6;
    let f2 = (m.f1().eval_f64(h) - m.f1().eval_f64(-h)) / (2.0 * h);
    let lambda = (-f2 / (0.0 - to_f64(&m.ubar))).sqrt();
    assert!(rel(p.meta.decay_rate.unwrap(), lambda) < 1e-6);
    // Fit log|u - s| on the tail.
    let (xi, u, _) = right_half(&p);
    let pts: Vec<(f64, f64)> = xi
        .iter()
        .zip(&u)
        .filter(|(_, u)| (*u - s).abs() < 1e-4 && (*u - s).abs() > 1e-9)
        .map(|(x, u)| (*x, (u - s).abs().ln()))
        .collect();
    assert!(pts.len() > 5);
    let slope = (pts.last().unwrap().1 - pts[0].1) / (pts.last().unwrap().0 - pts[0].0);
    assert!(rel(-slope, lambda) < 0.01, "fitted {slope}, expected {lambda}");
}

#[test]
fn solitary_rejects_non_saddles() {
    let m = model(int(2), int(0));
    assert!(matches!(solitary_profile(&m, &rat(1, 3), &cfg(64)), Err(Error::NotAdmissible(_))));
    let bad = QuadratureConfig { sample_count: 1, ..QuadratureConfig::default() };
    assert!(solitary_profile(&m, &int(0), &bad).is_err());
}

/// An exact level halfway between the center and the saddle.
fn mid_level(m: &WaveModel, s: &Rational) -> Rational {
    let (uc, _) = center(m).unwrap();
    let uc = uc.approx(&pow2(-60));
    (m.f().eval(&uc) + m.f().eval(s)) / int(2)
}

#[test]
fn periodic_period_matches_rk4_oracle() {
    let m = model(int(2), int(0));
    let h = mid_level(&m, &int(0));
    let p = periodic_profile(&m, &h, &cfg(256)).unwrap();
    let period = p.meta.period.unwrap();
    let top = p.meta.extra("u_plus").unwrap();
    let half = rk4_half_period(&m.f1(), to_f64(&m.ubar), top, 1e-4);
    assert!(rel(period, 2.0 * half) < 1e-6, "{period} vs {}", 2.0 * half);
    assert!(p.meta.hamiltonian_residual < 1e-10);
    assert!(p.symmetry_error() < 1e-10);
    assert_eq!(periodic_period(&m, &h, &cfg(64)).unwrap(), period);
}

#[test]
fn small_periodic_orbits_approach_the_linear_period() {
    let m = model(int(2), int(0));
    let (uc, _) = center(&m).unwrap();
    let uc = uc.approx(&pow2(-80));
    let fc = m.f().eval(&uc);
    let gap = m.f().eval(&int(0)) - &fc;
    let lin = linear_period(&m).unwrap();
    let mut errs = Vec::new();
    for k in [8, 12, 16] {
        let h = &fc + &gap * pow2(-k);
        let t = periodic_period(&m, &h, &cfg(64)).unwrap();
        errs.push(rel(t, lin));
    }
    assert!(errs.windows(2).all(|w| w[1] < w[0]), "{errs:?}");
    assert!(errs[2] < 1e-3, "{errs:?}");
    let h = &fc + &gap * rat(1, 1_000_000);
    let t = periodic_period(&m, &h, &cfg(64)).unwrap();
    assert!(rel(t, lin) < 0.01, "{t} vs {lin}");
}

#[test]
fn periodic_rejects_levels_outside_the_band() {
    let m = model(int(2), int(0));
    assert!(matches!(periodic_profile(&m, &rat(1, 100), &cfg(64)), Err(Error::LevelOutOfRange(_))));
}

#[test]
fn compacton_support_and_junction() {
    let c = int(3);
    let p = compacton_profile(&c, &cfg(512)).unwrap();
    let ubar = to_f64(&ubar_of(&c));
    let t = p.meta.half_width.unwrap();
    // Outside the support the profile is exactly ubar.
    for (x, u) in p.xi.iter().zip(&p.u) {
        if x.abs() >= t {
            assert!((u - ubar).abs() <= 1e-10, "u({x}) = {u}");
        }
    }
    let a = p.meta.extra("junction_coefficient").unwrap();
    let want = p.meta.extra("junction_coefficient_expected").unwrap();
    assert!(rel(a, want) < 0.01, "{a} vs {want}");
    let t2 = compacton_profile(&c, &cfg(512).halved()).unwrap().meta.half_width.unwrap();
    assert!((t - t2).abs() <= 1e-8);
    assert!(p.meta.hamiltonian_residual < 1e-10);
}

#[test]
fn compacton_support_matches_rk4_oracle() {
    let c = int(3);
    let p = compacton_profile(&c, &cfg(128)).unwrap();
    let ubar = to_f64(&ubar_of(&c));
    let (m, _) = build_from_cs(&ParamPoint::new(c.clone(), ubar_of(&c)));
    let crest = p.meta.m.unwrap();
    // The trajectory reaches ubar with u' = 0; integrate until u - ubar changes sign.
    let xs: Vec<f64> = (0..).map(|k| k as f64 * 1e-3).take_while(|x| *x < 2.0 * p.meta.half_width.unwrap()).collect();
    let traj = rk4_profile(&m.f1(), ubar, crest, &xs, 1e-3);
    let hit = traj.iter().position(|(u, _)| (u - ubar) * (crest - ubar) <= 1e-7 * (crest - ubar).abs());
    let t_rk = xs[hit.expect("reaches the singular line")];
    assert!((t_rk - p.meta.half_width.unwrap()).abs() < 0.05, "{t_rk} vs {}", p.meta.half_width.unwrap());
}

#[test]
fn peaked_branches_hit_the_corner_slope() {
    let m = model(int(-1), rat(3, 8));
    for branch in [1, 2] {
        let p = peaked_periodic_profile(&m, branch, &cfg(256)).unwrap();
        let got = p.meta.extra("corner_slope").unwrap();
        let want = p.meta.extra("corner_slope_expected").unwrap();
        // Independent: sqrt(-2 F'(ubar)) from the f64 coefficients.
        let ub = to_f64(&m.ubar);
        let oracle = (-2.0 * m.f1().eval_f64(ub)).sqrt();
        assert!((want - oracle).abs() < 1e-12);
        assert!((got - want).abs() <= 1e-6, "branch {branch}: {got} vs {want}");
        assert!(p.meta.hamiltonian_residual < 1e-10);
        let ends = [p.u[0], *p.u.last().unwrap()];
        assert!(ends.iter().all(|u| (u - ub).abs() < 1e-12));
    }
    assert!(matches!(peaked_periodic_profile(&m, 3, &cfg(64)), Err(Error::WrongRegion(_))));
}

#[test]
fn glued_wave_is_c2_at_the_junctions() {
    let p = glued_smooth_profile(&GluedPath::default(), &cfg(256)).unwrap();
    let e = |k: &str| p.meta.extra(k).unwrap();
    assert!(e("t_gap") <= GLUE_TOL);
    assert!((e("junction_slope_left") - e("junction_slope_expected")).abs() <= 1e-6);
    assert!((e("junction_slope_right") - e("junction_slope_expected")).abs() <= 1e-6);
    let acc = e("junction_accel_expected");
    assert!((e("junction_accel_left") - acc).abs() <= 1e-6);
    assert!((e("junction_accel_right") - acc).abs() <= 1e-6);
    assert!((e("junction_accel_left") - e("junction_accel_right")).abs() <= 1e-6);
    assert_monotone(&p.xi);
    assert!((p.meta.period.unwrap() - 2.0 * (e("t1") + e("t2"))).abs() < 1e-12);
    // The derivative is continuous across each junction: the finite-difference slope agrees on both sides.
    let ub = p.meta.ubar;
    let k = p.u.iter().position(|u| (u - ub).abs() < 1e-12).unwrap();
    let left = (p.u[k] - p.u[k - 1]) / (p.xi[k] - p.xi[k - 1]);
    let right = (p.u[k + 1] - p.u[k]) / (p.xi[k + 1] - p.xi[k]);
    assert!((left - right).abs() < 0.05 * left.abs().max(right.abs()), "{left} vs {right}");
}

#[test]
fn glued_search_needs_a_sign_change() {
    let path = GluedPath { c: int(-1), s_lo: rat(1, 4), s_hi: rat(3, 10) };
    let r = glued_smooth_profile(&path, &cfg(64));
    // Either a root lies on the short segment, or the search reports the missing sign change.
    match r {
        Ok(p) => assert!(p.meta.extra("t_gap").unwrap() <= GLUE_TOL),
        Err(e) => assert_eq!(e, Error::NoSignChangeOnPath),
    }
}

#[test]
fn crest_near_agrees_with_exact_crest() {
    let m = model(int(2), int(0));
    let exact = tws_core::orbits::crest(&m, &int(0)).unwrap().to_f64();
    assert!((crest_near(&m, &int(0)).unwrap().to_f64() - exact).abs() < 1e-14);
    let cps = critical_points(&m).unwrap();
    assert!(cps.iter().any(|c| c.kind == CriticalKind::Center && c.u.to_f64() > 0.0 && c.u.to_f64() < exact));
}
