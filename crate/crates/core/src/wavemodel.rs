//! The traveling-wave model `(ubar, F)` of the moderate-amplitude equation.
//!
//! Traveling waves satisfy `(u - ubar) u'' + u'^2 / 2 + F'(u) = 0` with
//! `F(u) = K u + (1-c)/28 u^2 + u^3/14 - u^4/28 + 3u^5/70` and the singular
//! line `ubar = -(1+c)/14`.

use num_traits::Zero;

use crate::ratpoly::{int, rat, MultiPoly, Rational, UniPoly};

/// Name of the phase variable in every model polynomial.
pub const U: &str = "u";

#[derive(Clone, Debug, PartialEq)]
pub struct WaveModel {
    pub c: Rational,
    pub k: Rational,
    pub ubar: Rational,
    f: UniPoly,
}

/// `(c, s)` parameters: speed and the level at infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamPoint {
    pub c: Rational,
    pub s: Rational,
}

impl ParamPoint {
    pub fn new(c: Rational, s: Rational) -> Self {
        ParamPoint { c, s }
    }
}

/// Role of the critical point `u = s` of the potential.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SaddleRole {
    Saddle,
    Center,
    Degenerate,
}

impl WaveModel {
    /// A model with arbitrary potential and singular line.
    pub fn from_parts(c: Rational, k: Rational, ubar: Rational, f: UniPoly) -> Self {
        WaveModel { c, k, ubar, f: f.with_var(U) }
    }

    pub fn f(&self) -> &UniPoly {
        &self.f
    }

    pub fn f1(&self) -> UniPoly {
        self.f.derivative()
    }

    pub fn f2(&self) -> UniPoly {
        self.f.derivative().derivative()
    }

    /// `ubar` as a polynomial constant, handy for deflations.
    pub fn ubar_factor(&self) -> UniPoly {
        UniPoly::linear_root(&self.ubar, U)
    }

    /// Sign of `F''(u) (u - ubar)`: negative at saddles, positive at centers.
    pub fn det_sign(&self, u: &Rational) -> i8 {
        crate::ratpoly::rational::sign(&(self.f2().eval(u) * (u - &self.ubar)))
    }

    /// Role of a rational critical point `u`.
    pub fn role_at(&self, u: &Rational) -> SaddleRole {
        match self.det_sign(u) {
            -1 => SaddleRole::Saddle,
            1 => SaddleRole::Center,
            _ => SaddleRole::Degenerate,
        }
    }
}

pub fn ubar_of(c: &Rational) -> Rational {
    -(c + int(1)) / int(14)
}

/// Model from speed `c` and integration constant `K`.
#[allow(non_snake_case)]
pub fn build_from_cK(c: &Rational, k: &Rational) -> WaveModel {
    let f = UniPoly::new(
        vec![
            Rational::zero(),
            k.clone(),
            (int(1) - c) / int(28),
            rat(1, 14),
            rat(-1, 28),
            rat(3, 70),
        ],
        U,
    );
    WaveModel { c: c.clone(), k: k.clone(), ubar: ubar_of(c), f }
}

/// The integration constant that makes `s` a critical point of `F`.
pub fn phi(c: &Rational, s: &Rational) -> Rational {
    let s2 = s * s;
    let s3 = &s2 * s;
    s * (int(-3) * s3 + int(2) * s2 - int(3) * s + c - int(1)) / int(14)
}

pub fn build_from_cs(p: &ParamPoint) -> (WaveModel, SaddleRole) {
    let m = build_from_cK(&p.c, &phi(&p.c, &p.s));
    let role = m.role_at(&p.s);
    (m, role)
}

/// `c - 1 - 6s + 6s^2 - 12s^3`, which equals `-14 F''(s)`.
pub fn a1_value(c: &Rational, s: &Rational) -> Rational {
    let s2 = s * s;
    c - int(1) - int(6) * s + int(6) * &s2 - int(12) * &s2 * s
}

/// `s + (1+c)/14`, which equals `s - ubar`.
pub fn a2_value(c: &Rational, s: &Rational) -> Rational {
    s + (c + int(1)) / int(14)
}

/// `F` as a polynomial in `(u, c, K)`.
pub fn f_symbolic() -> MultiPoly {
    MultiPoly::parse("K u + (1 - c)/28 u^2 + u^3/14 - u^4/28 + 3 u^5/70", &["u", "c", "K"])
        .expect("static polynomial")
}

/// `phi(c, s)` as a polynomial in `(c, s)`.
pub fn phi_symbolic() -> MultiPoly {
    MultiPoly::parse("s(-3 s^3 + 2 s^2 - 3 s + c - 1)/14", &["c", "s"]).expect("static polynomial")
}

/// `F` with `K = phi(c, s)`, a polynomial in `(u, c, s)`.
pub fn f_cs_symbolic() -> MultiPoly {
    f_symbolic().subs("K", &phi_symbolic()).expect("K occurs")
}

pub fn a1_symbolic() -> MultiPoly {
    MultiPoly::parse("c - 1 - 6 s + 6 s^2 - 12 s^3", &["c", "s"]).expect("static polynomial")
}

pub fn a2_symbolic() -> MultiPoly {
    MultiPoly::parse("s + (1 + c)/14", &["c", "s"]).expect("static polynomial")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singular_line() {
        assert_eq!(build_from_cK(&int(-1), &int(0)).ubar, int(0));
        assert_eq!(build_from_cK(&int(2), &int(0)).ubar, rat(-3, 14));
    }

    #[test]
    fn quadratic_term_vanishes_at_unit_speed() {
        let m = build_from_cK(&int(1), &int(0));
        assert_eq!(m.f().coeff(2), int(0));
        assert_eq!(m.f().coeff(3), rat(1, 14));
        assert_eq!(m.f().lc(), rat(3, 70));
        assert_eq!(m.f().deg(), 5);
    }

    #[test]
    fn derivatives_at_origin() {
        let m = build_from_cK(&int(2), &int(0));
        assert_eq!(m.f1().eval(&int(0)), int(0));
        assert_eq!(m.f2().eval(&int(0)), rat(-1, 14));
    }

    #[test]
    fn phi_values() {
        assert_eq!(phi(&int(7), &int(0)), int(0));
        assert_eq!(phi(&int(1), &int(1)), rat(-2, 7));
    }

    #[test]
    fn roles() {
        let (_, r) = build_from_cs(&ParamPoint::new(rat(3, 2), rat(-1, 10)));
        assert_eq!(r, SaddleRole::Saddle);
        let (_, r) = build_from_cs(&ParamPoint::new(int(2), int(0)));
        assert_eq!(r, SaddleRole::Saddle);
        let (_, r) = build_from_cs(&ParamPoint::new(int(-1), int(0)));
        assert_eq!(r, SaddleRole::Degenerate);
    }

    #[test]
    fn symbolic_forms_agree() {
        let f = f_cs_symbolic();
        let fs = f.derivative("u").unwrap().subs("u", &MultiPoly::var("s", &["s"]).unwrap()).unwrap();
        assert!(fs.is_zero());
        let f2s = f
            .derivative("u")
            .unwrap()
            .derivative("u")
            .unwrap()
            .subs("u", &MultiPoly::var("s", &["s"]).unwrap())
            .unwrap();
        assert!((&f2s.scale(&int(-14)) - &a1_symbolic()).is_zero());
        assert_eq!(a1_value(&int(1), &int(0)), int(0));
        assert_eq!(a2_value(&int(-1), &int(0)), int(0));
    }
}
