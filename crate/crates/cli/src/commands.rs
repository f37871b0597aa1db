use std::fmt;

use anyhow::{bail, Result};
use rayon::prelude::*;
use serde_json::{json, Value};
use tws_core::camassaholm::{
    ch_classify, ch_peakon_profile, ch_periodic_profile, ch_solitary_profile, CHClass, CHParams, ChFrame,
};
use tws_core::classifier::{
    self, classify, cstar, linspace, monotonicity_certificate, scan_grid, verify_with, Classification,
    IdentityReport, RegionLabel, ScanRow, Transcriptions,
};
use tws_core::profiles::{
    compacton_profile, glued_smooth_profile, peaked_periodic_profile, periodic_profile, solitary_profile,
    GluedPath, QuadratureConfig,
};
use tws_core::ratpoly::rational::{display, parse_rational, pow2, to_f64};
use tws_core::ratpoly::{int, Rational};
use tws_core::wavemodel::{build_from_cs, ubar_of, ParamPoint};

use crate::args::*;
use crate::output::{fmt_f64, write_json, write_profile, write_text, SCHEMA_VERSION};

/// Inconsistent flags; reported with exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(UsageError(msg.into()).into())
}

fn rat(text: &str) -> Result<Rational> {
    Ok(parse_rational(text)?)
}

fn required(v: &Option<String>, flag: &str, what: &str) -> Result<Rational> {
    match v {
        Some(t) => rat(t),
        None => usage(format!("{what} requires --{flag}")),
    }
}

/// Quadrature settings from the flags; a sample count below 16 is a usage error.
pub fn quad_config(tol: f64, samples: usize) -> Result<QuadratureConfig> {
    if samples < 16 {
        return usage(format!("--samples must be at least 16, got {samples}"));
    }
    Ok(QuadratureConfig::with_tol(tol).with_samples(samples))
}

pub fn classification_json(cl: &Classification) -> Value {
    let d = &cl.diagnostics;
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": "classify",
        "c": display(&cl.param.c),
        "s": display(&cl.param.s),
        "ubar": display(&ubar_of(&cl.param.c)),
        "region": cl.region.as_str(),
        "admissible": cl.admissible,
        "polarity": cl.trend.wave_polarity.map_or(Value::Null, |p| json!(p.as_str())),
        "amplitude_region": cl.trend.region.as_str(),
        "sign_dc_a": cl.trend.sign_dc_a,
        "diagnostics": {
            "F2s": display(&d.f2s),
            "N": display(&d.n),
            "s_minus_ubar": display(&d.s_minus_ubar),
            "R": display(&d.r),
        },
    })
}

pub fn cmd_classify(a: &ClassifyArgs) -> Result<()> {
    let p = ParamPoint::new(rat(&a.c)?, rat(&a.s)?);
    write_json(a.out.as_deref(), &classification_json(&classify(&p)))
}

pub fn cmd_profile(a: &ProfileArgs, tol: f64) -> Result<()> {
    let cfg = quad_config(tol, a.output.samples)?;
    let name = format!("{:?}", a.kind).to_lowercase();
    let needs_point = !matches!(a.kind, ProfileKindArg::Compacton | ProfileKindArg::Glued);
    if a.kind == ProfileKindArg::Compacton {
        if a.s.is_some() || !a.on_a2 {
            return usage("compacton profiles take --c with --on-a2 and no --s");
        }
    } else if a.on_a2 {
        return usage("--on-a2 applies only to compacton profiles");
    }
    if a.kind != ProfileKindArg::Periodic && a.h.is_some() {
        return usage("--h applies only to periodic profiles");
    }
    let mut params = json!({ "kind": name });
    let prof = if needs_point {
        let c = required(&a.c, "c", "this profile")?;
        let s = required(&a.s, "s", "this profile")?;
        params["c"] = json!(display(&c));
        params["s"] = json!(display(&s));
        let (model, _) = build_from_cs(&ParamPoint::new(c, s.clone()));
        match a.kind {
            ProfileKindArg::Solitary => solitary_profile(&model, &s, &cfg)?,
            ProfileKindArg::Periodic => {
                let h = required(&a.h, "h", "a periodic profile")?;
                params["h"] = json!(display(&h));
                periodic_profile(&model, &h, &cfg)?
            }
            ProfileKindArg::Peaked1 => peaked_periodic_profile(&model, 1, &cfg)?,
            ProfileKindArg::Peaked2 => peaked_periodic_profile(&model, 2, &cfg)?,
            _ => unreachable!("handled below"),
        }
    } else if a.kind == ProfileKindArg::Compacton {
        let c = required(&a.c, "c", "a compacton profile")?;
        params["c"] = json!(display(&c));
        params["s"] = json!(display(&ubar_of(&c)));
        compacton_profile(&c, &cfg)?
    } else {
        if a.s.is_some() {
            return usage("glued profiles search s; use --s-min/--s-max");
        }
        let mut path = GluedPath::default();
        if let Some(c) = &a.c {
            path.c = rat(c)?;
        }
        if let Some(v) = &a.s_min {
            path.s_lo = rat(v)?;
        }
        if let Some(v) = &a.s_max {
            path.s_hi = rat(v)?;
        }
        params["c"] = json!(display(&path.c));
        params["s_min"] = json!(display(&path.s_lo));
        params["s_max"] = json!(display(&path.s_hi));
        glued_smooth_profile(&path, &cfg)?
    };
    write_profile(&prof, params, &a.output.out, a.output.format, a.output.samples)
}

pub fn scan_rows(a: &ScanArgs) -> Result<Vec<ScanRow>> {
    let c_min = rat(&a.c_min)?;
    let c_max = rat(&a.c_max)?;
    if a.nc == 0 || c_min > c_max {
        return usage("bad grid: need nc >= 1 and c-min <= c-max");
    }
    let cs = linspace(&c_min, &c_max, a.nc);
    if a.on_a2 {
        if a.s_min.is_some() || a.s_max.is_some() {
            return usage("--on-a2 scans take no s range");
        }
        let rows = cs
            .into_par_iter()
            .map(|c| {
                let cl = classify(&ParamPoint::new(c.clone(), ubar_of(&c)));
                ScanRow { c, s: cl.param.s, region: cl.region, amplitude_region: cl.trend.region }
            })
            .collect();
        return Ok(rows);
    }
    let (Some(s_min), Some(s_max)) = (&a.s_min, &a.s_max) else {
        return usage("bad grid: need --s-min and --s-max");
    };
    let (s_min, s_max) = (rat(s_min)?, rat(s_max)?);
    if a.ns == 0 || s_min > s_max {
        return usage("bad grid: need ns >= 1 and s-min <= s-max");
    }
    Ok(scan_grid(&cs, &linspace(&s_min, &s_max, a.ns)))
}

pub fn cmd_scan(a: &ScanArgs) -> Result<()> {
    let rows = scan_rows(a)?;
    let mut text = String::from("c,s,region,amplitude_region\n");
    for r in &rows {
        text.push_str(&format!(
            "{},{},{},{}\n",
            fmt_f64(to_f64(&r.c)),
            fmt_f64(to_f64(&r.s)),
            r.region.as_str(),
            r.amplitude_region.as_str()
        ));
    }
    write_text(&a.out, &text)
}

/// Light module invariants run alongside the identity suite.
fn invariants() -> Vec<(&'static str, bool, String)> {
    let mut out = Vec::new();
    let grid = linspace(&int(-20), &int(20), 21);
    let sgrid = linspace(&int(-2), &int(2), 21);
    let rows = scan_grid(&grid, &sgrid);
    let consistent = rows.iter().all(|r| {
        r.region.is_admissible() == (r.amplitude_region != classifier::AmplitudeRegion::NotAdmissible)
    });
    out.push(("scan_partition", consistent && rows.len() == 441, format!("{} rows labeled", rows.len())));

    let cs = cstar(&pow2(-40));
    let w = cs.c_interval.width().map(|w| to_f64(&w)).unwrap_or(f64::INFINITY);
    let on_a2 = classify(&ParamPoint::new(cs.c_approx.clone(), ubar_of(&cs.c_approx)));
    out.push((
        "cstar_isolated",
        w <= 1e-8 && on_a2.region == RegionLabel::OnA2,
        format!("c* ~ {} (width {w:e})", fmt_f64(to_f64(&cs.c_approx))),
    ));

    let peakon = (-3..=3).filter(|&c| c != 0).all(|c| {
        ch_classify(&CHParams::new(int(c), int(0), int(0))) == CHClass::Peakon
    });
    out.push(("ch_kappa0_peakon", peakon, "c in -3..3 without 0".into()));

    let mono = monotonicity_certificate(&ParamPoint::new(int(2), int(0)));
    let ok = mono.as_ref().map(|m| m.count == 1).unwrap_or(false);
    out.push(("monotonicity_reference", ok, "one root of I on the crest side at (2, 0)".into()));
    out
}

pub fn report_json(rep: &IdentityReport, inv: &[(&str, bool, String)]) -> Value {
    let checks: Vec<Value> = rep
        .checks
        .iter()
        .map(|c| {
            let status = match (c.passed, c.kind) {
                (true, _) => "pass",
                (false, classifier::CheckKind::Audit) => "discrepancy",
                (false, _) => "fail",
            };
            json!({
                "name": c.name,
                "kind": c.kind.as_str(),
                "status": status,
                "detail": c.detail,
                "constant": c.constant.as_ref().map(display),
                "witness": c.witness,
            })
        })
        .collect();
    let frozen: serde_json::Map<String, Value> = classifier::appendix::frozen::all()
        .into_iter()
        .map(|(k, v)| (k.to_string(), json!(display(&v))))
        .collect();
    let invariants: Vec<Value> =
        inv.iter().map(|(n, ok, d)| json!({ "name": n, "passed": ok, "detail": d })).collect();
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": "verify",
        "passed": rep.passed() && inv.iter().all(|(_, ok, _)| *ok),
        "checks": checks,
        "invariants": invariants,
        "frozen_constants": frozen,
    })
}

pub fn cmd_verify(a: &VerifyArgs) -> Result<()> {
    let mut t = Transcriptions::default();
    if let Some(name) = &a.perturb {
        if t.perturb(name).is_err() {
            return usage(format!("unknown transcription `{name}`; one of {:?}", Transcriptions::NAMES));
        }
    }
    let rep = verify_with(&t);
    let inv = invariants();
    for c in &rep.checks {
        println!("{c}");
    }
    for (n, ok, d) in &inv {
        println!("[{}] invariant {n}: {d}", if *ok { "PASS" } else { "FAIL" });
    }
    println!("frozen constants:");
    for (k, v) in classifier::appendix::frozen::all() {
        println!("  {k} = {}", display(&v));
    }
    if let Some(p) = &a.json {
        write_json(Some(p), &report_json(&rep, &inv))?;
    }
    let discrepancies = rep.discrepancies().count();
    if let Some((n, _, d)) = inv.iter().find(|(_, ok, _)| !ok) {
        println!("summary: invariant {n} failed");
        return Err(tws_core::Error::IdentityFailed { name: n.to_string(), witness: d.clone() }.into());
    }
    match rep.into_result() {
        Ok(_) => {
            println!("summary: all identities pass ({discrepancies} audit discrepancies reported)");
            Ok(())
        }
        Err(e) => {
            println!("summary: {e}");
            Err(e.into())
        }
    }
}

fn ch_params(a: &ChParamArgs) -> Result<CHParams> {
    Ok(CHParams::new(rat(&a.c)?, rat(&a.kappa)?, rat(&a.k)?))
}

fn ch_params_json(p: &CHParams) -> Value {
    json!({
        "c": display(&p.c),
        "kappa": display(&p.kappa),
        "K": display(&p.k),
        "A": display(&p.a),
        "B": display(&p.b),
    })
}

pub fn cmd_ch(cmd: &ChCommand, tol: f64) -> Result<()> {
    match cmd {
        ChCommand::Classify { params, out } => {
            let p = ch_params(params)?;
            let class = ch_classify(&p);
            let mut v = json!({
                "schema_version": SCHEMA_VERSION,
                "command": "ch classify",
                "class": class.as_str(),
            });
            v["params"] = ch_params_json(&p);
            write_json(out.as_deref(), &v)
        }
        ChCommand::Profile(a) => {
            let p = ch_params(&a.params)?;
            let cfg = quad_config(tol, a.output.samples)?;
            let frame = match a.frame {
                FrameArg::W => ChFrame::W,
                FrameArg::U => ChFrame::U,
            };
            if a.kind != ChKindArg::Periodic && a.h.is_some() {
                bail!(UsageError("--h applies only to periodic profiles".into()));
            }
            let prof = match a.kind {
                ChKindArg::Peakon => ch_peakon_profile(&p, frame, &cfg)?,
                ChKindArg::Solitary => ch_solitary_profile(&p, frame, &cfg)?,
                ChKindArg::Periodic => {
                    let h = required(&a.h, "h", "a periodic profile")?;
                    ch_periodic_profile(&p, &h, frame, &cfg)?
                }
            };
            let mut params = ch_params_json(&p);
            params["kind"] = json!(format!("ch-{:?}", a.kind).to_lowercase());
            params["frame"] = json!(if frame == ChFrame::W { "w" } else { "u" });
            if let Some(h) = &a.h {
                params["h"] = json!(display(&rat(h)?));
            }
            write_profile(&prof, params, &a.output.out, a.output.format, a.output.samples)
        }
    }
}
