use proptest::prelude::*;
use tws_core::classifier::*;
use tws_core::orbits::{critical_points, CriticalKind};
use tws_core::ratpoly::rational::{pow2, sign, to_f64};
use tws_core::ratpoly::{int, rat, sturm_count, Interval, Rational, UniPoly};
use num_traits::Zero;
use tws_core::wavemodel::{build_from_cs, ubar_of, ParamPoint};
use tws_core::Error;

fn pt(c: Rational, s: Rational) -> ParamPoint {
    ParamPoint::new(c, s)
}

/// Region from the defining signs, computed without the transcribed `N`.
///
/// `F''(s)` comes from the closed form `-(c - 1 - 6s + 6s^2 - 12s^3) / 14` and
/// the sign of `N` from `F'(ubar)` at `K = phi(c, s)`, since `F'(ubar) = beta (s - ubar) N`
/// with `beta > 0`.
fn oracle_region(c: &Rational, s: &Rational) -> Option<&'static str> {
    let a1 = c - int(1) - int(6) * s + int(6) * s * s - int(12) * s * s * s;
    let f2 = sign(&(-a1));
    let ubar = -(c + int(1)) / int(14);
    let side = sign(&(s - &ubar));
    let k = s * (int(-3) * s * s * s + int(2) * s * s - int(3) * s + c - int(1)) / int(14);
    // F'(u) = K + (1 - c)/14 u + 3/14 u^2 - 1/7 u^3 + 3/14 u^4.
    let u = &ubar;
    let f1 = &k + (int(1) - c) / int(14) * u + rat(3, 14) * u * u - rat(1, 7) * u * u * u
        + rat(3, 14) * u * u * u * u;
    if side == 0 || f2 == 0 {
        return None;
    }
    let n = sign(&f1) * side;
    if n == 0 {
        return None;
    }
    Some(match (side, f2, n) {
        (1, -1, 1) => "R1",
        (1, 1, 1) => "R2",
        (1, 1, -1) => "R3",
        (-1, 1, -1) => "R4",
        (-1, -1, -1) => "R5",
        (-1, -1, 1) => "R6",
        _ => "other",
    })
}

#[test]
fn printed_polynomials_at_known_slices() {
    let m = m_poly();
    assert_eq!(m.eval(&[("c", int(0)), ("s", int(0))]).unwrap(), int(823));
    for c in [-3, 0, 2, 7] {
        let cr = int(c);
        let mv = m.eval(&[("c", cr.clone()), ("s", int(-1))]).unwrap();
        assert_eq!(mv, int(243 * c * c + 1742 * c + 4831));
        let nv = n_poly().eval(&[("c", cr.clone()), ("s", int(1))]).unwrap();
        assert_eq!(nv, int((3 * c - 11) * (c * c + 2 * c + 1177)));
    }
}

#[test]
fn paper_point_region_one() {
    let cl = classify(&pt(rat(3, 2), rat(-1, 10)));
    assert_eq!(cl.region, RegionLabel::R1);
    assert!(cl.admissible);
    assert_eq!(cl.trend.region, AmplitudeRegion::I);
    assert_eq!(cl.trend.sign_dc_a, 1);
    assert_eq!(cl.trend.wave_polarity, Some(Polarity::Elevation));
}

#[test]
fn singular_line_is_tagged() {
    assert_eq!(region_of(&pt(int(-1), int(0))), RegionLabel::OnA2);
    for c in [-7, 0, 3, 19] {
        let c = int(c);
        assert_eq!(region_of(&pt(c.clone(), ubar_of(&c))), RegionLabel::OnA2);
    }
}

#[test]
fn cstar_is_isolated_and_consistent() {
    let cs = cstar(&pow2(-40));
    assert_eq!(sturm_count(&cs.p_star, &Interval::real_line()).unwrap(), 1);
    assert_eq!(cs.p_star.sign_at(&int(0)), -1);
    assert_eq!(cs.p_star.sign_at(&int(-1)), 1);
    let w = to_f64(&cs.c_interval.width().unwrap());
    assert!(w <= 1e-8, "width {w}");
    // On the singular line c = -1 - 14 s.
    let s = cs.s_root.to_f64();
    assert!((to_f64(&cs.c_approx) - (-1.0 - 14.0 * s)).abs() < 1e-8);
    assert!(!cs.resultant_cofactor.is_zero());
    // P* at the approximation is tiny, and A1 vanishes there too.
    let a1 = |c: f64, s: f64| c - 1.0 - 6.0 * s + 6.0 * s * s - 12.0 * s * s * s;
    assert!(a1(to_f64(&cs.c_approx), s).abs() < 1e-7);
    assert_eq!(region_of(&pt(cs.c_approx.clone(), ubar_of(&cs.c_approx))), RegionLabel::OnA2);
}

#[test]
fn grid_scan_partitions_cleanly() {
    let c = linspace(&int(-20), &int(20), 60);
    let s = linspace(&int(-2), &int(2), 60);
    let rows = scan_grid(&c, &s);
    assert_eq!(rows.len(), 3600);
    for r in &rows {
        if let Some(want) = oracle_region(&r.c, &r.s) {
            assert_eq!(r.region.as_str(), want, "at ({}, {})", r.c, r.s);
        }
        assert_eq!(r.region.is_admissible(), r.amplitude_region != AmplitudeRegion::NotAdmissible);
    }
}

#[test]
fn monotonicity_certificates_at_sample_points() {
    let cert = monotonicity_certificate(&pt(int(2), int(0))).unwrap();
    assert_eq!(cert.count, 1);
    assert_eq!(cert.hypotheses.leading_coefficient, int(-168));
    assert!(matches!(monotonicity_certificate(&pt(int(0), int(1))), Err(Error::NotAdmissible(_))));
    assert!(matches!(
        monotonicity_certificate(&pt(rat(3, 2), rat(-1, 10))),
        Ok(CertifiedCount { count: 1, .. })
    ));
}

#[test]
fn amplitude_trend_rejects_inadmissible_points() {
    assert!(matches!(amplitude_region(&pt(int(0), int(1))), Err(Error::NotAdmissible(_))));
    assert!(matches!(amplitude_region(&pt(int(-1), int(0))), Err(Error::OnBoundary(_))));
}

fn rational_in(lo: i64, hi: i64, den: i64) -> impl Strategy<Value = Rational> {
    (lo * den..=hi * den).prop_map(move |n| rat(n, den))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn region_matches_sign_oracle(c in rational_in(-20, 20, 97), s in rational_in(-2, 2, 89)) {
        let got = region_of(&pt(c.clone(), s.clone()));
        match oracle_region(&c, &s) {
            Some(want) => prop_assert_eq!(got.as_str(), want),
            None => prop_assert!(matches!(got, RegionLabel::OnA1 | RegionLabel::OnA2 | RegionLabel::OnNcurve | RegionLabel::AtCstar)),
        }
    }

    #[test]
    fn open_regions_are_locally_constant(c in rational_in(-20, 20, 97), s in rational_in(-2, 2, 89)) {
        let here = region_of(&pt(c.clone(), s.clone()));
        let eps = pow2(-40);
        let near = region_of(&pt(&c + &eps, &s - &eps));
        // A shift of 2^-40 crosses a boundary only within that distance of it.
        let d = classify(&pt(c.clone(), s.clone())).diagnostics;
        let far = [&d.f2s, &d.n, &d.s_minus_ubar].iter().all(|v| to_f64(v).abs() > 1e-6);
        if far {
            prop_assert_eq!(here, near);
        }
    }

    #[test]
    fn admissible_points_have_saddle_and_center(c in rational_in(-20, 20, 97), s in rational_in(-2, 2, 89)) {
        let p = pt(c, s);
        prop_assume!(region_of(&p).is_admissible());
        let (model, _) = build_from_cs(&p);
        let cps = critical_points(&model).unwrap();
        let ubar = to_f64(&model.ubar);
        let side = |x: f64| (x - ubar).signum();
        let saddles: Vec<_> = cps.iter().filter(|c| c.kind == CriticalKind::Saddle && side(c.u.to_f64()) == side(to_f64(&p.s))).collect();
        let centers: Vec<_> = cps.iter().filter(|c| c.kind == CriticalKind::Center && side(c.u.to_f64()) == side(to_f64(&p.s))).collect();
        prop_assert_eq!(saddles.len(), 1);
        prop_assert_eq!(centers.len(), 1);
    }

    #[test]
    fn polarity_follows_region(c in rational_in(-20, 20, 97), s in rational_in(-2, 2, 89)) {
        let cl = classify(&pt(c, s));
        match cl.region {
            RegionLabel::R1 => prop_assert_eq!(cl.trend.wave_polarity, Some(Polarity::Elevation)),
            RegionLabel::R4 => prop_assert_eq!(cl.trend.wave_polarity, Some(Polarity::Depression)),
            _ => prop_assert_eq!(cl.trend.wave_polarity, None),
        }
    }
}

#[test]
fn crest_cubic_at_reference_point() {
    // At (2, 0) the deflated crest polynomial is 6m^3 - 5m^2 + 10m - 5 up to scale.
    let (model, _) = build_from_cs(&pt(int(2), int(0)));
    let cp = tws_core::orbits::crest_polynomial(&model, &int(0)).unwrap();
    let want = UniPoly::from_ints(&[-5, 10, -5, 6], "u");
    let ratio = cp.lc() / want.lc();
    assert_eq!(cp, want.scale(&ratio));
}
