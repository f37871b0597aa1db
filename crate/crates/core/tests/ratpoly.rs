mod common;

use common::*;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tws_core::ratpoly::rational::{parse_rational, to_f64};
use tws_core::ratpoly::{
    discriminant_uni, int, isolate_roots, rat, refine_root, resultant_uni, sturm_count, Interval, MultiPoly,
    Rational, UniPoly,
};
use tws_core::Error;

/// Sylvester determinant by Gaussian elimination, rows of `p` first.
fn sylvester_resultant(p: &UniPoly, q: &UniPoly) -> Rational {
    let (m, n) = (p.deg(), q.deg());
    let size = m + n;
    let mut a = vec![vec![Rational::zero(); size]; size];
    // Coefficients from the leading term down.
    let pc: Vec<Rational> = p.coeffs().iter().rev().cloned().collect();
    let qc: Vec<Rational> = q.coeffs().iter().rev().cloned().collect();
    for i in 0..n {
        for (j, c) in pc.iter().enumerate() {
            a[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in qc.iter().enumerate() {
            a[n + i][i + j] = c.clone();
        }
    }
    let mut det = Rational::one();
    for col in 0..size {
        let Some(piv) = (col..size).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        det *= a[col][col].clone();
        for r in col + 1..size {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &a[col][col];
            for k in col..size {
                let t = &f * &a[col][k];
                a[r][k] -= t;
            }
        }
    }
    det
}

fn random_poly(rng: &mut ChaCha8Rng, min_deg: usize, max_deg: usize) -> UniPoly {
    let deg = rng.gen_range(min_deg..=max_deg);
    let mut c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-10..=10)).collect();
    if c[deg] == 0 {
        c[deg] = 1;
    }
    UniPoly::from_ints(&c, X)
}

#[test]
fn sturm_examples() {
    let x2p1 = UniPoly::from_ints(&[1, 0, 1], X);
    assert_eq!(sturm_count(&x2p1, &Interval::real_line()).unwrap(), 0);
    let x2m1 = UniPoly::from_ints(&[-1, 0, 1], X);
    assert_eq!(sturm_count(&x2m1, &Interval::above(int(0))).unwrap(), 1);
    let m_at_minus1 = UniPoly::from_ints(&[4831, 1742, 243], X);
    assert_eq!(sturm_count(&m_at_minus1, &Interval::real_line()).unwrap(), 0);
}

#[test]
fn sturm_rejects_repeated_roots() {
    let p = UniPoly::from_ints(&[1, -2, 1], X);
    assert_eq!(sturm_count(&p, &Interval::real_line()), Err(Error::NotSquarefree));
}

#[test]
fn sturm_matches_dense_scan_on_random_polynomials() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut disagreements = Vec::new();
    for _ in 0..200 {
        let p = random_squarefree(&mut rng);
        let bound = to_f64(&p.cauchy_bound());
        for _ in 0..50 {
            let a = random_point(&mut rng, bound);
            let b = random_point(&mut rng, bound);
            let (a, b) = if a <= b { (a, b) } else { (b, a) };
            if a == b {
                continue;
            }
            let got = sturm_count(&p, &Interval::closed(a.clone(), b.clone()).unwrap()).unwrap();
            let want = dense_scan_count(&p, &a, &b);
            if got != want {
                disagreements.push(format!("{p:?} on [{a}, {b}]: sturm {got}, scan {want}"));
            }
        }
    }
    assert!(disagreements.is_empty(), "{disagreements:#?}");
}

#[test]
fn isolation_of_sqrt2_and_crest_cubic() {
    let p = UniPoly::from_ints(&[-2, 0, 1], X);
    let ivs = isolate_roots(&p, &Interval::above(int(0))).unwrap();
    assert_eq!(ivs.len(), 1);
    let r = refine_root(&p, &ivs[0], &rat(1, 1_000_000)).unwrap();
    assert!((to_f64(&r) - 2f64.sqrt()).abs() <= 1e-6);

    let crest = UniPoly::from_ints(&[-5, 10, -5, 6], X);
    let ivs = isolate_roots(&crest, &Interval::above(int(0))).unwrap();
    assert_eq!(ivs.len(), 1);
    let (lo, hi) = ivs[0].endpoints().unwrap();
    let m = refine_root(&crest, &ivs[0], &rat(1, 100_000_000)).unwrap();
    assert!(to_f64(&m) > 0.5 && to_f64(&m) < 0.6);
    assert!(lo < hi);
    // Oracle: sign change of the cubic in a 1e-4 cell around the refined value.
    let mf = to_f64(&m);
    assert!(crest.eval_f64(mf - 1e-4) * crest.eval_f64(mf + 1e-4) < 0.0);
}

#[test]
fn refine_requires_sign_change() {
    let p = UniPoly::from_ints(&[-2, 0, 1], X);
    let iv = Interval::closed(int(2), int(3)).unwrap();
    assert_eq!(refine_root(&p, &iv, &rat(1, 10)), Err(Error::NoSignChange));
}

#[test]
fn resultant_linear_convention() {
    let v = ["x", "a", "b"];
    let p = MultiPoly::parse("x - a", &v).unwrap();
    let q = MultiPoly::parse("x - b", &v).unwrap();
    let r = p.resultant(&q, "x").unwrap();
    let want = MultiPoly::parse("a - b", &v).unwrap();
    assert!((&r - &want).is_zero(), "{r:?}");
}

#[test]
fn resultant_agrees_with_sylvester_determinant() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    for _ in 0..100 {
        let p = random_poly(&mut rng, 1, 5);
        let q = random_poly(&mut rng, 1, 5);
        assert_eq!(resultant_uni(&p, &q).unwrap(), sylvester_resultant(&p, &q));
    }
}

#[test]
fn resultant_detects_planted_common_roots() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    for _ in 0..100 {
        let r = rat(rng.gen_range(-20..=20), rng.gen_range(1..=9));
        let root = UniPoly::linear_root(&r, X);
        let p = &root * &random_poly(&mut rng, 0, 4);
        let q = &root * &random_poly(&mut rng, 0, 4);
        assert!(resultant_uni(&p, &q).unwrap().is_zero());
        assert!(p.gcd(&q).deg() > 0);
    }
}

#[test]
fn resultant_zero_iff_common_factor() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    for _ in 0..100 {
        let p = random_poly(&mut rng, 1, 4);
        let q = random_poly(&mut rng, 1, 4);
        let res = resultant_uni(&p, &q).unwrap();
        assert_eq!(res.is_zero(), p.gcd(&q).deg() > 0);
    }
}

#[test]
fn discriminant_examples() {
    let v = ["x", "a", "b", "c"];
    let p = MultiPoly::parse("a*x^2 + b*x + c", &v).unwrap();
    let d = p.discriminant("x").unwrap();
    assert!((&d - &MultiPoly::parse("b^2 - 4*a*c", &v).unwrap()).is_zero());
    let lin = UniPoly::from_ints(&[1, 1], X);
    assert_eq!(discriminant_uni(&lin), Err(Error::DegreeTooLow { degree: 1, required: 2 }));
    assert_eq!(resultant_uni(&UniPoly::zero(X), &lin), Err(Error::ZeroPolynomial));
}

#[test]
fn discriminant_vanishes_on_planted_double_roots() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    for _ in 0..100 {
        let r = rat(rng.gen_range(-20..=20), rng.gen_range(1..=9));
        let sq = UniPoly::linear_root(&r, X).pow(2);
        let p = &sq * &random_poly(&mut rng, 0, 4);
        assert!(discriminant_uni(&p).unwrap().is_zero());
    }
}

#[test]
fn self_resultant_is_zero() {
    let p = UniPoly::from_ints(&[3, -1, 4, 1], X);
    assert!(resultant_uni(&p, &p).unwrap().is_zero());
}

#[test]
fn parse_rational_forms() {
    assert_eq!(parse_rational("3/2").unwrap(), rat(3, 2));
    assert_eq!(parse_rational("-0/1").unwrap(), int(0));
    assert_eq!(parse_rational("-0.125").unwrap(), rat(-1, 8));
    assert_eq!(parse_rational("17").unwrap(), int(17));
    assert!(parse_rational("1/0").is_err());
    assert!(parse_rational("abc").is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn resultant_is_deterministic(a in proptest::collection::vec(-10i64..=10, 2..6),
                                  b in proptest::collection::vec(-10i64..=10, 2..6)) {
        let p = UniPoly::from_ints(&a, X);
        let q = UniPoly::from_ints(&b, X);
        prop_assume!(!p.is_zero() && !q.is_zero());
        let r1 = resultant_uni(&p, &q);
        let r2 = resultant_uni(&p, &q);
        prop_assert_eq!(r1, r2);
    }

    #[test]
    fn resultant_antisymmetry(a in proptest::collection::vec(-10i64..=10, 2..6),
                              b in proptest::collection::vec(-10i64..=10, 2..6)) {
        let p = UniPoly::from_ints(&a, X);
        let q = UniPoly::from_ints(&b, X);
        prop_assume!(p.deg() >= 1 && q.deg() >= 1);
        // Res(q, p) = (-1)^(deg p * deg q) Res(p, q).
        let sgn = if (p.deg() * q.deg()) % 2 == 1 { int(-1) } else { int(1) };
        prop_assert_eq!(resultant_uni(&q, &p).unwrap(), sgn * resultant_uni(&p, &q).unwrap());
    }

    #[test]
    fn decimal_parsing_is_exact(n in -1_000_000i64..1_000_000, k in 0u32..6) {
        let den = 10i64.pow(k);
        let text = if k == 0 {
            n.to_string()
        } else {
            let sign = if n < 0 { "-" } else { "" };
            let a = n.unsigned_abs();
            format!("{sign}{}.{:0width$}", a / den as u64, a % den as u64, width = k as usize)
        };
        prop_assert_eq!(parse_rational(&text).unwrap(), rat(n, den));
    }

    #[test]
    fn isolated_intervals_are_disjoint_and_complete(c in proptest::collection::vec(-10i64..=10, 2..7)) {
        let p = UniPoly::from_ints(&c, X);
        prop_assume!(p.deg() >= 1 && p.is_squarefree());
        let ivs = isolate_roots(&p, &Interval::real_line()).unwrap();
        prop_assert_eq!(ivs.len(), sturm_count(&p, &Interval::real_line()).unwrap());
        for w in ivs.windows(2) {
            let (_, hi) = w[0].endpoints().unwrap();
            let (lo, _) = w[1].endpoints().unwrap();
            prop_assert!(hi <= lo);
        }
        for iv in &ivs {
            prop_assert_eq!(sturm_count(&p, iv).unwrap(), 1);
        }
    }
}
