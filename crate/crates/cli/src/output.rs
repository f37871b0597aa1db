use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde_json::{json, Map, Value};
use tws_core::profiles::WaveProfile;

pub const SCHEMA_VERSION: &str = "1";

/// Floats in CSV carry 17 significant digits.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    let mut f = fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
    f.write_all(text.as_bytes()).with_context(|| format!("writing {}", path.display()))
}

pub fn write_json(path: Option<&Path>, value: &Value) -> Result<()> {
    let text = serde_json::to_string_pretty(value)? + "\n";
    match path {
        Some(p) => write_text(p, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn sidecar_path(out: &Path) -> PathBuf {
    if out.extension().is_some_and(|e| e == "json") {
        let mut s = out.as_os_str().to_owned();
        s.push(".meta.json");
        PathBuf::from(s)
    } else {
        out.with_extension("json")
    }
}

fn opt(x: Option<f64>) -> Value {
    x.map_or(Value::Null, |v| json!(v))
}

pub fn profile_meta_json(p: &WaveProfile) -> Value {
    let m = &p.meta;
    let extra: Map<String, Value> = m.extra.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
    let notes: Map<String, Value> = m.notes.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
    json!({
        "kind": p.kind.as_str(),
        "c": m.c,
        "ubar": m.ubar,
        "h": m.h,
        "s": opt(m.s),
        "m": opt(m.m),
        "period": opt(m.period),
        "T": opt(m.half_width),
        "lambda": opt(m.decay_rate),
        "polarity": m.polarity.map_or(Value::Null, |p| json!(p.as_str())),
        "hamiltonian_residual": m.hamiltonian_residual,
        "extra": extra,
        "notes": notes,
    })
}

/// Writes the profile as CSV plus sidecar, or as a single JSON document.
pub fn write_profile(p: &WaveProfile, params: Value, out: &Path, format: crate::args::Format, samples: usize) -> Result<()> {
    let meta = profile_meta_json(p);
    match format {
        crate::args::Format::Csv => {
            let mut text = String::with_capacity(48 * p.len() + 8);
            text.push_str("xi,u\n");
            for (x, u) in p.xi.iter().zip(&p.u) {
                text.push_str(&fmt_f64(*x));
                text.push(',');
                text.push_str(&fmt_f64(*u));
                text.push('\n');
            }
            write_text(out, &text)?;
            let side = json!({
                "schema_version": SCHEMA_VERSION,
                "command": "profile",
                "params": params,
                "samples_per_segment": samples,
                "rows": p.len(),
                "csv": out.file_name().map(|n| n.to_string_lossy().into_owned()),
                "meta": meta,
            });
            write_json(Some(&sidecar_path(out)), &side)
        }
        crate::args::Format::Json => {
            let doc = json!({
                "schema_version": SCHEMA_VERSION,
                "command": "profile",
                "params": params,
                "samples_per_segment": samples,
                "rows": p.len(),
                "meta": meta,
                "xi": p.xi,
                "u": p.u,
                "du": p.du,
            });
            write_json(Some(out), &doc)
        }
    }
}
