//! Uniqueness of the inflection point of solitary and compacton profiles.
//!
//! Along a homoclinic orbit `u'^2 = D(u)` and the numerator of `D'(u)` is
//! `-(s - u) I(u; c, s) / 490` with `I` a quartic in `u`. Profiles are monotone
//! with a single inflection point iff `I` has exactly one root between the
//! saddle and infinity on the crest side.

use num_traits::Zero;

use super::{printed, region_of, RegionLabel};
use crate::error::{Error, Result};
use crate::ratpoly::rational::sign;
use crate::ratpoly::{discriminant_uni, int, sturm_count, Interval, MultiPoly, Rational, UniPoly};
use crate::wavemodel::{a1_value, ubar_of, ParamPoint, U};

/// `I(u; c, s)`.
pub fn i_poly() -> MultiPoly {
    printed::parse(printed::I, &printed::UCS)
}

/// `I(u; c, s)` at a fixed parameter point.
pub fn i_at(c: &Rational, s: &Rational) -> UniPoly {
    i_poly()
        .eval_var("c", c)
        .and_then(|q| q.eval_var("s", s))
        .and_then(|q| q.to_unipoly("u"))
        .expect("polynomial in u, c, s")
        .with_var(U)
}

/// On `A2` (`s = ubar`), `I` vanishes at `u = ubar`; the cofactor is the cubic `I~_c`.
pub fn i_tilde(c: &Rational) -> UniPoly {
    let ubar = ubar_of(c);
    i_at(c, &ubar).deflate(&ubar, 1).expect("I vanishes at ubar on A2")
}

/// `D1(c, s) * D2(c, s)`.
pub fn d1_d2() -> MultiPoly {
    &printed::parse(printed::D1, &printed::CS) * &printed::parse(printed::D2, &printed::CS)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonotonicityCase {
    /// Open admissible region, quartic `I` on the crest side of `s`.
    Interior,
    /// Compacton line `s = ubar`, cubic `I~` on the crest side of `ubar`.
    OnA2,
}

/// The four root-count stability hypotheses, each evaluated at the point.
#[derive(Clone, Debug, PartialEq)]
pub struct Hypotheses {
    /// Number of roots in `omega` at this point, by Sturm sequences.
    pub sample_count: usize,
    /// The discriminant in `u` is nonzero, so all roots are simple.
    pub discriminant_nonzero: bool,
    /// Leading coefficient in `u`; constant, so no root escapes to infinity.
    pub leading_coefficient: Rational,
    /// Sign of the polynomial at the finite end of `omega`.
    pub boundary_sign: i8,
}

impl Hypotheses {
    pub fn all_hold(&self) -> bool {
        self.discriminant_nonzero && !self.leading_coefficient.is_zero() && self.boundary_sign != 0
    }
}

#[derive(Clone, Debug)]
pub struct CertifiedCount {
    pub count: usize,
    pub omega: Interval,
    pub case: MonotonicityCase,
    pub hypotheses: Hypotheses,
    /// For the interior case, whether `Dis_u(I) = -375 D1 D2` at the point.
    pub discriminant_factorization_ok: Option<bool>,
}

fn omega(anchor: &Rational, elevation: bool) -> Interval {
    if elevation {
        Interval::above(anchor.clone())
    } else {
        Interval::below(anchor.clone())
    }
}

/// Count and certify the roots of `I` on the crest side of the saddle.
pub fn monotonicity_certificate(p: &ParamPoint) -> Result<CertifiedCount> {
    let region = region_of(p);
    match region {
        RegionLabel::R1 | RegionLabel::R4 => {
            let elevation = region == RegionLabel::R1;
            let poly = i_at(&p.c, &p.s);
            let dis = discriminant_uni(&poly)?;
            let d1d2 = d1_d2().eval(&[("c", p.c.clone()), ("s", p.s.clone())])?;
            let om = omega(&p.s, elevation);
            let hyp = Hypotheses {
                sample_count: 0,
                discriminant_nonzero: !dis.is_zero(),
                leading_coefficient: poly.lc(),
                boundary_sign: poly.sign_at(&p.s),
            };
            finish(poly, om, MonotonicityCase::Interior, hyp, Some(dis == d1d2 * int(-375)))
        }
        RegionLabel::OnA2 => {
            let ubar = ubar_of(&p.c);
            let poly = i_tilde(&p.c);
            let dis = discriminant_uni(&poly)?;
            // The compacton is an elevation wave above c*, where F''(ubar) < 0.
            let elevation = sign(&a1_value(&p.c, &ubar)) > 0;
            let om = omega(&ubar, elevation);
            let hyp = Hypotheses {
                sample_count: 0,
                discriminant_nonzero: !dis.is_zero(),
                leading_coefficient: poly.lc(),
                boundary_sign: poly.sign_at(&ubar),
            };
            finish(poly, om, MonotonicityCase::OnA2, hyp, None)
        }
        RegionLabel::OnA1 | RegionLabel::OnNcurve | RegionLabel::AtCstar => {
            Err(Error::OnBoundary(format!("({}, {}) lies on {}", p.c, p.s, region)))
        }
        _ => Err(Error::NotAdmissible(format!("({}, {}) lies in {}", p.c, p.s, region))),
    }
}

fn finish(
    poly: UniPoly,
    om: Interval,
    case: MonotonicityCase,
    mut hyp: Hypotheses,
    fact: Option<bool>,
) -> Result<CertifiedCount> {
    if !hyp.all_hold() {
        return Err(Error::DegenerateCritical(format!(
            "root-count hypotheses fail on {om}: {hyp:?}"
        )));
    }
    let count = sturm_count(&poly, &om)?;
    hyp.sample_count = count;
    Ok(CertifiedCount { count, omega: om, case, hypotheses: hyp, discriminant_factorization_ok: fact })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::rat;

    #[test]
    fn reference_point_has_one_root() {
        let cert = monotonicity_certificate(&ParamPoint::new(int(2), int(0))).unwrap();
        assert_eq!(cert.count, 1);
        assert_eq!(cert.case, MonotonicityCase::Interior);
        assert_eq!(cert.hypotheses.leading_coefficient, int(-168));
        assert_eq!(cert.discriminant_factorization_ok, Some(true));
    }

    #[test]
    fn compacton_line_cubic() {
        let ratio = |c: Rational| {
            let t = i_tilde(&c);
            assert_eq!(t.deg(), 3);
            let cubic = int(3) * &c * &c * &c + int(30) * &c * &c + int(1031) * &c - int(368);
            t.eval(&ubar_of(&c)) / cubic
        };
        assert_eq!(ratio(int(3)), ratio(rat(-7, 5)));
        let c = int(3);
        let cert = monotonicity_certificate(&ParamPoint::new(c.clone(), ubar_of(&c))).unwrap();
        assert_eq!(cert.case, MonotonicityCase::OnA2);
        assert_eq!(cert.count, 1);
    }
}
