//! The identity and certificate suite behind the region picture.
//!
//! Each transcribed polynomial is compared with one derived from `F` by
//! exact elimination. Three kinds of entries are reported:
//!
//! * `Identity`: polynomial equality up to a frozen rational constant;
//! * `Certificate`: a Sturm or enclosure argument that a curve avoids a set;
//! * `Audit`: a printed claim that is checked but not relied upon. Failing
//!   audits are discrepancies with a witness, not failures of the suite.

use std::fmt;

use num_traits::Zero;

use super::monotonicity::i_tilde;
use super::printed;
use crate::error::{Error, Result};
use crate::ratpoly::rational::{display, sign};
use crate::ratpoly::{
    distinct_real_roots, int, isolate_real_roots, rat, sturm_count, Enclosure, Interval, MultiPoly,
    Rational, UniPoly,
};
use crate::wavemodel::{a1_symbolic, a2_symbolic, f_cs_symbolic, ubar_of};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    Identity,
    Certificate,
    Audit,
}

impl CheckKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckKind::Identity => "identity",
            CheckKind::Certificate => "certificate",
            CheckKind::Audit => "audit",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityCheck {
    pub name: String,
    pub kind: CheckKind,
    pub passed: bool,
    pub detail: String,
    /// Proportionality constant, when the check is an identity up to scaling.
    pub constant: Option<Rational>,
    /// A point exhibiting a failure.
    pub witness: Option<String>,
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match (self.passed, self.kind) {
            (true, _) => "PASS",
            (false, CheckKind::Audit) => "DISCREPANCY",
            (false, _) => "FAIL",
        };
        write!(f, "[{status}] {} {}: {}", self.kind.as_str(), self.name, self.detail)?;
        if let Some(w) = &self.witness {
            write!(f, " (witness: {w})")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    /// True iff every identity and certificate holds; audits do not count.
    pub fn passed(&self) -> bool {
        self.checks.iter().filter(|c| c.kind != CheckKind::Audit).all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| c.kind != CheckKind::Audit && !c.passed)
    }

    pub fn discrepancies(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| c.kind == CheckKind::Audit && !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// The first failing identity or certificate as an error.
    pub fn into_result(self) -> Result<Self> {
        if let Some(c) = self.failures().next() {
            return Err(Error::IdentityFailed {
                name: c.name.clone(),
                witness: c.witness.clone().unwrap_or_else(|| c.detail.clone()),
            });
        }
        Ok(self)
    }
}

/// The transcribed polynomials used by the suite; editable for fault injection.
#[derive(Clone, Debug)]
pub struct Transcriptions {
    pub m: String,
    pub n: String,
    pub p_star: String,
    pub r: String,
    pub q: String,
    pub p: String,
    pub p_alt: String,
    pub dis_p: String,
    pub i: String,
    pub d1: String,
    pub d2: String,
    pub dis_d2_deg12: String,
    pub dis_d2_quartic: String,
    pub d_tilde: String,
    pub d_tilde_2: String,
}

impl Default for Transcriptions {
    fn default() -> Self {
        Transcriptions {
            m: printed::M.into(),
            n: printed::N.into(),
            p_star: printed::P_STAR.into(),
            r: printed::R.into(),
            q: printed::Q.into(),
            p: printed::P.into(),
            p_alt: printed::P_ALT.into(),
            dis_p: printed::DIS_P.into(),
            i: printed::I.into(),
            d1: printed::D1.into(),
            d2: printed::D2.into(),
            dis_d2_deg12: printed::DIS_D2_DEG12.into(),
            dis_d2_quartic: printed::DIS_D2_QUARTIC.into(),
            d_tilde: printed::D_TILDE.into(),
            d_tilde_2: printed::D_TILDE_2.into(),
        }
    }
}

impl Transcriptions {
    pub const NAMES: [&'static str; 15] = [
        "M", "N", "P_STAR", "R", "Q", "P", "P_ALT", "DIS_P", "I", "D1", "D2", "DIS_D2_DEG12",
        "DIS_D2_QUARTIC", "D_TILDE", "D_TILDE_2",
    ];

    pub fn get_mut(&mut self, name: &str) -> Option<&mut String> {
        Some(match name.to_ascii_uppercase().as_str() {
            "M" => &mut self.m,
            "N" => &mut self.n,
            "P_STAR" => &mut self.p_star,
            "R" => &mut self.r,
            "Q" => &mut self.q,
            "P" => &mut self.p,
            "P_ALT" => &mut self.p_alt,
            "DIS_P" => &mut self.dis_p,
            "I" => &mut self.i,
            "D1" => &mut self.d1,
            "D2" => &mut self.d2,
            "DIS_D2_DEG12" => &mut self.dis_d2_deg12,
            "DIS_D2_QUARTIC" => &mut self.dis_d2_quartic,
            "D_TILDE" => &mut self.d_tilde,
            "D_TILDE_2" => &mut self.d_tilde_2,
            _ => return None,
        })
    }

    /// Add one to the constant term of the named polynomial.
    pub fn perturb(&mut self, name: &str) -> Result<()> {
        let t = self.get_mut(name).ok_or_else(|| Error::Parse(format!("unknown polynomial {name}")))?;
        t.push_str(" + 1");
        Ok(())
    }
}

/// Constants fixed by the first certified run and held as regression values.
pub mod frozen {
    use crate::ratpoly::{int, rat, Rational};
    use num_bigint::BigInt;

    pub fn ch_dis() -> Rational {
        int(1)
    }
    pub fn alpha() -> Rational {
        rat(-1, 38416)
    }
    pub fn beta() -> Rational {
        rat(1, 38416)
    }
    pub fn dis_m() -> Rational {
        int(-16)
    }
    pub fn r_ratio() -> Rational {
        int(1)
    }
    pub fn crest_cubic() -> Rational {
        rat(-1, 140)
    }
    pub fn d_prime_numerator() -> Rational {
        rat(-1, 490)
    }
    pub fn i_at_s() -> Rational {
        int(70)
    }
    pub fn dis_i() -> Rational {
        int(-375)
    }
    pub fn dis_d2() -> Rational {
        Rational::from_integer("204877012038451200000".parse::<BigInt>().expect("integer literal"))
    }
    pub fn res_a2_n() -> Rational {
        int(1)
    }
    pub fn dis_n() -> Rational {
        int(-30118144)
    }
    pub fn m1() -> Rational {
        rat(423, 32)
    }

    /// Every frozen constant by name, for reports.
    pub fn all() -> Vec<(&'static str, Rational)> {
        vec![
            ("alpha", alpha()),
            ("beta", beta()),
            ("dis_m", dis_m()),
            ("r_ratio", r_ratio()),
            ("crest_cubic", crest_cubic()),
            ("d_prime_numerator", d_prime_numerator()),
            ("i_at_s", i_at_s()),
            ("dis_i", dis_i()),
            ("dis_d2", dis_d2()),
            ("res_a2_n", res_a2_n()),
            ("dis_n", dis_n()),
            ("m1", m1()),
            ("ch_dis", ch_dis()),
        ]
    }
}

const CS: [&str; 2] = printed::CS;

fn parse_in(text: &str, vars: &[&str]) -> Result<MultiPoly> {
    MultiPoly::parse(text, vars)
}

fn uni(p: &MultiPoly, var: &str) -> Result<UniPoly> {
    p.prune_vars().with_vars(&[var.to_string()]).to_unipoly(var).or_else(|_| p.to_unipoly(var))
}

/// Twelve fixed rational sample points of the `(c, s)` plane.
pub fn sample_points() -> Vec<(Rational, Rational)> {
    (0..12)
        .map(|k| (rat(7 * k - 31, 3), rat(13 - 5 * k, 7 + k)))
        .collect()
}

struct Suite {
    checks: Vec<IdentityCheck>,
}

impl Suite {
    fn push(&mut self, name: &str, kind: CheckKind, r: Result<(bool, String, Option<Rational>, Option<String>)>) {
        let c = match r {
            Ok((passed, detail, constant, witness)) => {
                IdentityCheck { name: name.into(), kind, passed, detail, constant, witness }
            }
            Err(e) => IdentityCheck {
                name: name.into(),
                kind,
                passed: false,
                detail: format!("error: {e}"),
                constant: None,
                witness: None,
            },
        };
        self.checks.push(c);
    }

    /// `lhs = k * rhs` with `k` equal to the frozen constant, when given.
    fn proportional(&mut self, name: &str, lhs: Result<MultiPoly>, rhs: Result<MultiPoly>, frozen: Option<Rational>) {
        let r = lhs.and_then(|l| rhs.map(|r| (l, r))).map(|(l, r)| proportional(&l, &r, frozen));
        self.push(name, CheckKind::Identity, r);
    }
}

fn proportional(
    lhs: &MultiPoly,
    rhs: &MultiPoly,
    frozen: Option<Rational>,
) -> (bool, String, Option<Rational>, Option<String>) {
    match lhs.ratio_to(rhs) {
        Some(k) if !k.is_zero() => {
            let ok = frozen.as_ref().map_or(true, |f| f == &k);
            let detail = match &frozen {
                Some(f) if f != &k => format!("constant {} differs from frozen {}", display(&k), display(f)),
                _ => format!("constant {}", display(&k)),
            };
            (ok, detail, Some(k), None)
        }
        _ => {
            let w = difference_witness(lhs, rhs);
            (false, "not proportional".into(), None, w)
        }
    }
}

/// A sample point where `lhs / rhs` differs from its value at the first point.
fn difference_witness(lhs: &MultiPoly, rhs: &MultiPoly) -> Option<String> {
    let mut vars: Vec<String> = lhs.vars().iter().map(|s| s.to_string()).collect();
    for v in rhs.vars() {
        if !vars.iter().any(|w| w == v) {
            vars.push(v.to_string());
        }
    }
    let pts: Vec<Vec<(&str, Rational)>> = (0..12)
        .map(|k| {
            vars.iter()
                .enumerate()
                .map(|(i, v)| (v.as_str(), rat(3 * k as i64 + 2 * i as i64 - 7, 5 + i as i64)))
                .collect()
        })
        .collect();
    let mut first: Option<Rational> = None;
    for p in &pts {
        let l = lhs.eval(p).ok()?;
        let r = rhs.eval(p).ok()?;
        if r.is_zero() {
            if !l.is_zero() {
                return Some(fmt_point(p));
            }
            continue;
        }
        let q = l / r;
        match &first {
            None => first = Some(q),
            Some(f) if f != &q => return Some(fmt_point(p)),
            _ => {}
        }
    }
    None
}

fn fmt_point(p: &[(&str, Rational)]) -> String {
    p.iter().map(|(n, x)| format!("{n}={}", display(x))).collect::<Vec<_>>().join(", ")
}

/// Rational enclosure of `p` over `[lo, hi]`.
fn enclose(p: &UniPoly, lo: &Rational, hi: &Rational) -> Enclosure {
    Enclosure::eval(p, &Enclosure::new(lo.clone(), hi.clone()))
}

/// `c` on `A2` is decreasing in `s`, on `A1` increasing.
fn a2_c(s: &Rational) -> Rational {
    int(-14) * s - int(1)
}

fn a1_c(s: &Rational) -> Rational {
    int(1) + int(6) * s - int(6) * s * s + int(12) * s * s * s
}

/// `p > 0` on `(x0, inf)` including `x0`.
fn positive_beyond(p: &UniPoly, x0: &Rational) -> bool {
    if p.sign_at(x0) <= 0 {
        return false;
    }
    matches!(sturm_count(p, &Interval::above(x0.clone())), Ok(0))
}

/// `D2(c, s) != 0` whenever `s` lies in `[lo, hi]` and `(c, s)` is on the
/// admissible side of `A2` (`c` above) or of `A1` (`c` below).
///
/// Coefficient-wise enclosures over the strip give a polynomial in `c` that
/// bounds `D2` from one side; the strip is split until both bounds are
/// Sturm-certified. Returns the number of pieces used.
pub fn strip_certificate(d2: &MultiPoly, lo: &Rational, hi: &Rational, max_depth: u32) -> Result<usize> {
    let coeffs: Vec<UniPoly> =
        d2.coeffs_in("c")?.iter().map(|d| uni(d, "s")).collect::<Result<_>>()?;
    fn go(coeffs: &[UniPoly], lo: &Rational, hi: &Rational, depth: u32) -> Result<usize> {
        let encl: Vec<Enclosure> = coeffs.iter().map(|d| enclose(d, lo, hi)).collect();
        let c_up = a2_c(hi);
        let c_down = a1_c(hi);
        let upper_ok = c_up > Rational::zero() && {
            let l = UniPoly::new(encl.iter().map(|e| e.lo.clone()).collect(), "c");
            positive_beyond(&l, &c_up)
        };
        let lower_ok = c_down < Rational::zero() && {
            // D2(-t, s) <= sum upper((-1)^k d_k) t^k; require that to be negative.
            let u = UniPoly::new(
                encl.iter()
                    .enumerate()
                    .map(|(k, e)| if k % 2 == 0 { -e.hi.clone() } else { e.lo.clone() })
                    .collect(),
                "t",
            );
            positive_beyond(&u, &-c_down)
        };
        if upper_ok && lower_ok {
            return Ok(1);
        }
        if depth == 0 {
            return Err(Error::IdentityFailed {
                name: "strip".into(),
                witness: format!("s in [{}, {}]", display(lo), display(hi)),
            });
        }
        let mid = (lo + hi) / int(2);
        Ok(go(coeffs, lo, &mid, depth - 1)? + go(coeffs, &mid, hi, depth - 1)?)
    }
    go(&coeffs, lo, hi, max_depth)
}

/// Run the full suite on the built-in transcriptions.
pub fn verify_appendix() -> IdentityReport {
    verify_with(&Transcriptions::default())
}

/// Run the full suite on the given transcriptions.
pub fn verify_with(t: &Transcriptions) -> IdentityReport {
    let mut suite = Suite { checks: Vec::new() };
    let ucs = printed::UCS;
    let f = f_cs_symbolic();
    let u = MultiPoly::var("u", &ucs).expect("u");
    let s = MultiPoly::var("s", &ucs).expect("s");
    let ubar = parse_in("-(1 + c)/14", &ucs).expect("ubar");
    let f1 = f.derivative("u").expect("u");
    let f2 = f1.derivative("u").expect("u");
    let f2s = f2.subs("u", &s).expect("u");

    let m = parse_in(&t.m, &CS);
    let n = parse_in(&t.n, &CS);

    // A1 is -14 F''(s).
    suite.proportional("a1_is_f2s", Ok(a1_symbolic()), Ok(f2s.clone()), Some(int(-14)));

    // Discriminant of F' in u.
    let dis_f1 = f1.discriminant("u");
    let rhs = m.clone().map(|m| &(&f2s * &f2s) * &m);
    suite.proportional("dis_f1_alpha_m", dis_f1.clone(), rhs.clone(), Some(frozen::alpha()));
    suite.push(
        "dis_f1_alpha_samples",
        CheckKind::Identity,
        dis_f1.and_then(|d| rhs.map(|r| (d, r))).map(|(d, r)| sampled_ratio(&d, &r, &frozen::alpha())),
    );

    // F'(ubar) with K = phi.
    let f1_ubar = f1.subs("u", &ubar);
    let rhs = n.clone().map(|n| &(&s - &ubar) * &n);
    suite.proportional("f1_ubar_beta_n", f1_ubar.clone(), rhs.clone(), Some(frozen::beta()));
    suite.push(
        "f1_ubar_beta_samples",
        CheckKind::Identity,
        f1_ubar.and_then(|d| rhs.map(|r| (d, r))).map(|(d, r)| sampled_ratio(&d, &r, &frozen::beta())),
    );

    // Restrictions of M and N to s = -1 and s = 1.
    suite.proportional(
        "n_at_s1",
        n.clone().and_then(|n| n.eval_var("s", &int(1))),
        parse_in("(3c - 11)(c^2 + 2c + 1177)", &["c"]),
        Some(int(1)),
    );
    suite.proportional(
        "m_at_s_minus1",
        m.clone().and_then(|m| m.eval_var("s", &int(-1))),
        parse_in("243 c^2 + 1742 c + 4831", &["c"]),
        Some(int(1)),
    );

    // M has no real zeros.
    let dis_m = m.clone().and_then(|m| m.discriminant("c"));
    suite.proportional(
        "dis_c_m",
        dis_m,
        parse_in("(18 s^2 - 6 s + 23)^3", &["s"]),
        Some(frozen::dis_m()),
    );
    suite.push("m_positive", CheckKind::Certificate, m.clone().and_then(|m| m_positive(&m)));

    // N has exactly one real zero in c for every s.
    let dis_n = n.clone().and_then(|n| n.discriminant("c"));
    suite.proportional(
        "dis_c_n",
        dis_n,
        parse_in("324 s^6 - 324 s^5 - 81 s^4 + 1524 s^3 + 4710 s^2 - 3598 s + 15595", &["s"]),
        Some(frozen::dis_n()),
    );
    suite.push("n_single_branch", CheckKind::Certificate, n.clone().and_then(|n| n_single_branch(&n)));

    // c*: A1, A2 and N meet at one point.
    let p_star = parse_in(&t.p_star, &["s"]);
    suite.proportional(
        "res_c_a2_n",
        n.clone().and_then(|n| a2_symbolic().resultant(&n, "c")),
        p_star.clone(),
        Some(frozen::res_a2_n()),
    );
    suite.push(
        "a1_a2_meet_on_p_star",
        CheckKind::Identity,
        p_star.clone().and_then(|p| a1_a2_meet(&p)),
    );
    suite.push(
        "p_star_single_root",
        CheckKind::Certificate,
        p_star.clone().and_then(|p| uni(&p, "s")).and_then(|p| {
            let k = distinct_real_roots(&p)?;
            let bracket = p.sign_at(&int(-1)) > 0 && p.sign_at(&int(0)) < 0;
            Ok((k == 1 && bracket, format!("{k} real root(s), sign change on (-1, 0): {bracket}"), None, None))
        }),
    );

    // Amplitude curve R.
    let q = parse_in(&t.q, &printed::MCS);
    let p = parse_in(&t.p, &printed::MCS);
    let r = parse_in(&t.r, &CS);
    let r_derived = q.clone().and_then(|q| p.clone().and_then(|p| q.resultant(&p, "m")));
    suite.proportional("res_m_q_p", r_derived, r.clone(), Some(frozen::r_ratio()));
    {
        let mv = MultiPoly::var("m", &printed::MCS).expect("m");
        let sv = MultiPoly::var("s", &printed::MCS).expect("s");
        let lhs = &f.subs("u", &sv).expect("u") - &f.subs("u", &mv).expect("u");
        let d = &sv - &mv;
        suite.proportional(
            "crest_cubic",
            Ok(lhs),
            p.clone().map(|p| &(&d * &d) * &p),
            Some(frozen::crest_cubic()),
        );
        let num = &(&(&(&sv * &sv) - &(&mv * &mv)) * &f2s)
            + &(&f1.subs("u", &mv).expect("u") * &sv).scale(&int(2));
        suite.proportional(
            "amplitude_numerator",
            Ok(num),
            q.clone().map(|q| &(&d * &d) * &q),
            Some(rat(1, 14)),
        );
    }
    suite.proportional(
        "p_alt_is_minus_p",
        parse_in(&t.p_alt, &printed::MCS),
        p.clone(),
        Some(int(-1)),
    );
    suite.proportional(
        "dis_m_p",
        p.clone().and_then(|p| p.discriminant("m")),
        parse_in(&t.dis_p, &CS),
        Some(int(1)),
    );
    suite.push(
        "p_single_root",
        CheckKind::Certificate,
        parse_in(&t.dis_p, &CS).and_then(|d| dis_p_negative(&d)),
    );
    suite.push("r_meets_a2_a1", CheckKind::Certificate, r.clone().and_then(|r| r_crossings(&r)));

    // Monotonicity polynomial I.
    let i = parse_in(&t.i, &ucs);
    let sf = f.subs("u", &s).expect("u");
    let dnum = (&(&(-&(&f1 * &(&u - &ubar))) - &sf) + &f).scale(&int(2));
    suite.proportional(
        "d_prime_numerator",
        Ok(dnum.clone()),
        i.clone().map(|i| &(&s - &u) * &i),
        Some(frozen::d_prime_numerator()),
    );
    suite.push(
        "d_prime_constant_positive",
        CheckKind::Audit,
        i.clone().map(|i| {
            let k = dnum.ratio_to(&(&(&s - &u) * &i));
            let ok = k.as_ref().map_or(false, |k| sign(k) > 0);
            let shown = k.as_ref().map_or("none".into(), display);
            (ok, format!("constant {shown}; a positive constant was claimed"), k, (!ok).then(|| "every (u, c, s)".into()))
        }),
    );
    let i_s = i.clone().and_then(|i| i.subs("u", &s));
    suite.proportional(
        "i_at_s_a1",
        i_s.clone(),
        Ok(&a1_symbolic().with_vars(&ucs.map(String::from)) * &(&s - &ubar)),
        Some(frozen::i_at_s()),
    );
    suite.push(
        "i_at_s_positive_multiple_of_f2s",
        CheckKind::Audit,
        i_s.map(|is| {
            let k = is.ratio_to(&(&f2s * &(&s - &ubar)));
            let ok = k.as_ref().map_or(false, |k| sign(k) > 0);
            let shown = k.as_ref().map_or("none".into(), display);
            let w = (!ok).then(|| "c=2, s=0".to_string());
            (ok, format!("I(s) = {shown} F''(s) (s - ubar); a positive constant was claimed"), k, w)
        }),
    );
    let d1 = parse_in(&t.d1, &CS);
    let d2 = parse_in(&t.d2, &CS);
    suite.proportional(
        "dis_u_i",
        i.clone().and_then(|i| i.discriminant("u")),
        d1.clone().and_then(|a| d2.clone().map(|b| &a * &b)),
        Some(frozen::dis_i()),
    );
    suite.push("i_tilde_boundary", CheckKind::Identity, p_star.clone().and_then(|p| i_tilde_boundary(&p)));
    suite.push("i_tilde_simple_roots", CheckKind::Certificate, i_tilde_discriminant());

    // Discriminant of D2 in c.
    let deg12 = parse_in(&t.dis_d2_deg12, &["s"]);
    let quartic = parse_in(&t.dis_d2_quartic, &["s"]);
    let d_tilde = parse_in(&t.d_tilde, &["s"]);
    let rhs = deg12.clone().and_then(|a| {
        quartic.clone().and_then(|b| d_tilde.clone().map(|d| &(&a * &b.pow(3)) * &d.pow(2)))
    });
    suite.proportional("dis_c_d2", d2.clone().and_then(|d| d.discriminant("c")), rhs, Some(frozen::dis_d2()));
    for (name, poly) in [("deg12_no_real_roots", &deg12), ("quartic_no_real_roots", &quartic)] {
        suite.push(
            name,
            CheckKind::Certificate,
            poly.clone().and_then(|p| uni(&p, "s")).and_then(|p| {
                let k = distinct_real_roots(&p)?;
                Ok((k == 0, format!("{k} real root(s)"), None, None))
            }),
        );
    }
    let strip1 = (rat(-131, 128), rat(-65, 64));
    suite.push(
        "d_tilde_roots",
        CheckKind::Certificate,
        d_tilde.clone().and_then(|p| uni(&p, "s")).and_then(|p| {
            let k = distinct_real_roots(&p)?;
            let inside = sturm_count(&p, &Interval::closed(strip1.0.clone(), strip1.1.clone())?)?;
            Ok((
                k == 2 && inside == 1,
                format!("{k} real root(s); {inside} in [-131/128, -65/64]"),
                None,
                None,
            ))
        }),
    );
    suite.push(
        "m1_bound",
        CheckKind::Identity,
        Ok({
            let v = a2_c(&strip1.1);
            (v == frozen::m1(), format!("min of c on A2 over the strip = {}", display(&v)), Some(v), None)
        }),
    );
    suite.push(
        "d2_strip_1",
        CheckKind::Certificate,
        d2.clone().and_then(|d| {
            let k = strip_certificate(&d, &strip1.0, &strip1.1, 10)?;
            Ok((true, format!("D2 != 0 on the admissible part of s in [-131/128, -65/64], {k} piece(s)"), None, None))
        }),
    );
    suite.push(
        "d2_strip_2",
        CheckKind::Certificate,
        d_tilde.clone().and_then(|dt| d2.clone().map(|d| (dt, d))).and_then(|(dt, d)| {
            let dt = uni(&dt, "s")?;
            let roots = isolate_real_roots(&dt, &Interval::real_line())?;
            let mut r2 = roots.last().ok_or(Error::NoSignChange)?.clone();
            r2.refine_to(&rat(1, 128));
            let (lo, hi) = r2.bounds();
            let k = strip_certificate(&d, lo, hi, 10)?;
            Ok((
                true,
                format!("D2 != 0 on the admissible part of s in [{}, {}], {k} piece(s)", display(lo), display(hi)),
                None,
                None,
            ))
        }),
    );
    suite.push(
        "d_tilde_2_majorant",
        CheckKind::Audit,
        parse_in(&t.d_tilde_2, &["c"]).and_then(|dt2| d2.clone().and_then(|d| majorant_witness(&d, &dt2, &strip1))),
    );

    // Camassa-Holm: Dis_w(F') = 6A + 4B^2 with a positive constant.
    let ch_f = crate::camassaholm::ch_potential_symbolic();
    let ch_dis = ch_f.derivative("w").and_then(|d| d.discriminant("w"));
    suite.proportional("ch_dis_f1", ch_dis, parse_in("6*A + 4*B^2", &["w", "A", "B"]), Some(frozen::ch_dis()));
    IdentityReport { checks: suite.checks }
}

fn sampled_ratio(lhs: &MultiPoly, rhs: &MultiPoly, want: &Rational) -> (bool, String, Option<Rational>, Option<String>) {
    let (lhs, rhs) = (lhs.prune_vars(), rhs.prune_vars());
    let mut used = 0;
    for (c, s) in sample_points() {
        let pt = [("c", c.clone()), ("s", s.clone())];
        let (Ok(l), Ok(r)) = (lhs.eval(&pt), rhs.eval(&pt)) else {
            return (false, "evaluation failed".into(), None, None);
        };
        if r.is_zero() {
            continue;
        }
        used += 1;
        if &(l / r) != want {
            return (false, "ratio varies".into(), None, Some(fmt_point(&pt)));
        }
    }
    (used >= 10, format!("ratio {} at {used} sample points", display(want)), Some(want.clone()), None)
}

type Outcome = Result<(bool, String, Option<Rational>, Option<String>)>;

/// Leading coefficient in `c` is a positive constant, `Dis_c(M) < 0` for all
/// `s`, and `M(0, 0) > 0`, so `M > 0` on the plane.
fn m_positive(m: &MultiPoly) -> Outcome {
    let cs = m.coeffs_in("c")?;
    let lc = cs.last().and_then(|c| c.as_constant()).unwrap_or_else(Rational::zero);
    let dis = uni(&m.discriminant("c")?, "s")?;
    let roots = distinct_real_roots(&dis)?;
    let neg = dis.sign_at(&int(0)) < 0;
    let at0 = m.eval(&[("c", int(0)), ("s", int(0))])?;
    let ok = sign(&lc) > 0 && roots == 0 && neg && sign(&at0) > 0;
    Ok((ok, format!("leading coefficient {}, Dis_c has {roots} real roots, M(0,0) = {}", display(&lc), display(&at0)), None, None))
}

/// `Dis_c(N)` has no real roots and is negative, so `N(., s)` has one real root.
fn n_single_branch(n: &MultiPoly) -> Outcome {
    let dis = uni(&n.discriminant("c")?, "s")?;
    let roots = distinct_real_roots(&dis)?;
    let neg = dis.sign_at(&int(0)) < 0;
    let at1 = uni(&n.eval_var("s", &int(1))?, "c")?;
    let k1 = distinct_real_roots(&at1)?;
    Ok((roots == 0 && neg && k1 == 1, format!("Dis_c(N) has {roots} real roots; N(c, 1) has {k1}"), None, None))
}

/// `A1` and `A2` meet exactly at the real root of `P*`.
fn a1_a2_meet(p_star: &MultiPoly) -> Outcome {
    let meet = a1_symbolic().subs("c", &parse_in("-14 s - 1", &["s"])?)?;
    let k = meet.ratio_to(p_star);
    Ok((k.is_some(), format!("A1 on A2 = {} P*", k.as_ref().map_or("?".into(), display)), k, None))
}

/// `Dis_m(P)` is quadratic in `c` with negative leading coefficient and a
/// negative discriminant for every `s`, so the crest cubic has one real root.
fn dis_p_negative(d: &MultiPoly) -> Outcome {
    let cs = d.coeffs_in("c")?;
    let lc = cs.last().and_then(|c| c.as_constant()).unwrap_or_else(Rational::zero);
    let dd = uni(&d.discriminant("c")?, "s")?;
    let roots = distinct_real_roots(&dd)?;
    let neg = dd.sign_at(&int(0)) < 0;
    Ok((
        sign(&lc) < 0 && roots == 0 && neg && cs.len() == 3,
        format!("leading coefficient {}, Dis_c(Dis_m P) has {roots} real roots", display(&lc)),
        None,
        None,
    ))
}

/// `R = 0` crosses `A2` three times and `A1` once.
fn r_crossings(r: &MultiPoly) -> Outcome {
    let on_a2 = uni(&r.subs("c", &parse_in("-14 s - 1", &["s"])?)?, "s")?;
    let on_a1 = uni(&r.subs("c", &parse_in("1 + 6 s - 6 s^2 + 12 s^3", &["s"])?)?, "s")?;
    let k2 = distinct_real_roots(&on_a2)?;
    let k1 = distinct_real_roots(&on_a1)?;
    Ok((k2 == 3 && k1 == 1, format!("{k2} crossing(s) with A2, {k1} with A1"), None, None))
}

/// On `A2` the boundary value `I~_c(ubar)` is a multiple of `P*(ubar(c))`.
fn i_tilde_boundary(p_star: &MultiPoly) -> Outcome {
    let samples: Vec<Rational> = (0..8).map(|k| rat(5 * k - 17, 3)).collect();
    let ps = uni(p_star, "s")?;
    let mut ratio: Option<Rational> = None;
    for c in &samples {
        let ub = ubar_of(c);
        let a = i_tilde(c).eval(&ub);
        let b = ps.eval(&ub);
        if b.is_zero() {
            continue;
        }
        let q = a / b;
        match &ratio {
            None => ratio = Some(q),
            Some(r) if r != &q => {
                return Ok((false, "ratio varies".into(), None, Some(format!("c={}", display(c)))))
            }
            _ => {}
        }
    }
    let k = ratio.unwrap_or_else(Rational::zero);
    Ok((!k.is_zero(), format!("I~(ubar) = {} P*(ubar)", display(&k)), Some(k), None))
}

/// `Dis_u(I~_c)` has no real roots in `c`.
fn i_tilde_discriminant() -> Outcome {
    let i = parse_in(printed::I, &printed::UCS)?;
    let ubar = parse_in("-(1 + c)/14", &["c"])?;
    let on_a2 = i.subs("s", &ubar)?;
    let div = parse_in("u + (1 + c)/14", &["u", "c"])?;
    let cubic = on_a2.div_exact(&div)?;
    let dis = uni(&cubic.discriminant("u")?, "c")?;
    let k = distinct_real_roots(&dis)?;
    Ok((k == 0, format!("Dis_u(I~) has {k} real root(s) in c"), None, None))
}

/// Search the strip for a point with `D2(c, s) >= D~2(c)` and `c >= M1`.
fn majorant_witness(d2: &MultiPoly, dt2: &MultiPoly, strip: &(Rational, Rational)) -> Outcome {
    let dt2 = uni(dt2, "c")?;
    let ss = [strip.0.clone(), (&strip.0 + &strip.1) / int(2), strip.1.clone()];
    for k in 0..=40 {
        let c = frozen::m1() + rat(k, 2);
        for s in &ss {
            let lhs = d2.eval(&[("c", c.clone()), ("s", s.clone())])?;
            if lhs >= dt2.eval(&c) {
                return Ok((
                    false,
                    "D2(c, s) < D~2(c) was claimed on the strip".into(),
                    None,
                    Some(format!("c={}, s={}", display(&c), display(s))),
                ));
            }
        }
    }
    Ok((true, "no counterexample on the sample grid".into(), None, None))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_runs_and_reports_known_discrepancies() {
        let rep = verify_appendix();
        for c in &rep.checks {
            println!("{c}");
        }
        assert!(rep.passed());
        let disc: Vec<&str> = rep.discrepancies().map(|c| c.name.as_str()).collect();
        assert_eq!(disc, ["d_prime_constant_positive", "i_at_s_positive_multiple_of_f2s", "d_tilde_2_majorant"]);
    }

    #[test]
    fn perturbation_is_detected() {
        let mut t = Transcriptions::default();
        t.perturb("N").unwrap();
        let rep = verify_with(&t);
        assert!(!rep.passed());
        assert!(rep.failures().any(|c| c.name == "f1_ubar_beta_n"));
    }
}
