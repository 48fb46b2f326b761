//! Lossless `key=value` text form of a [`SpectralBenchReport`].

use std::collections::BTreeMap;

use wigwell_core::{AsymmetricWellParams, SpectralBenchReport, SymmetricWellParams, WellParams};

use crate::{fmt_f64, CliError, Result};

pub fn to_text(r: &SpectralBenchReport) -> String {
    let mut lines: Vec<(String, String)> = Vec::new();
    let mut put = |k: &str, v: String| lines.push((k.to_string(), v));
    match r.params {
        WellParams::Symmetric(p) => {
            put("well.kind", "symmetric".into());
            put("well.E0", fmt_f64(p.e0()));
            put("well.E1", fmt_f64(p.e1()));
        }
        WellParams::Asymmetric(p) => {
            put("well.kind", "asymmetric".into());
            put("well.alpha", fmt_f64(p.alpha()));
            put("well.beta", fmt_f64(p.beta()));
            put("well.E0", fmt_f64(p.e0()));
            put("well.deltaE", fmt_f64(p.delta_e()));
        }
    }
    put("n", r.n.to_string());
    put("L", fmt_f64(r.half_width));
    put("dx", fmt_f64(r.dx));
    for (i, level) in ["E0", "E1"].iter().enumerate() {
        put(&format!("exact.{level}"), fmt_f64(r.exact[i]));
        put(&format!("numerical.{level}"), fmt_f64(r.numerical[i]));
        put(&format!("abs_error.{level}"), fmt_f64(r.abs_errors[i]));
    }
    for (i, state) in ["psi0", "psi1"].iter().enumerate() {
        put(
            &format!("sup_error.{state}"),
            fmt_f64(r.eigenfunction_sup_errors[i]),
        );
    }
    lines.iter().map(|(k, v)| format!("{k}={v}\n")).collect()
}

pub fn from_text(text: &str) -> Result<SpectralBenchReport> {
    let map: BTreeMap<&str, &str> = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .enumerate()
        .map(|(i, l)| {
            l.split_once('=').ok_or_else(|| CliError::Parse {
                line: i + 1,
                key: l.to_string(),
                message: "expected `key=value`".into(),
            })
        })
        .collect::<Result<_>>()?;
    let get = |k: &str| map.get(k).copied().ok_or_else(|| CliError::missing(k));
    let num = |k: &str| -> Result<f64> {
        let v = get(k)?;
        v.parse().map_err(|_| CliError::Parse {
            line: 0,
            key: k.into(),
            message: format!("not a number: `{v}`"),
        })
    };
    let invalid = |e: wigwell_core::WellError| CliError::Validation(e.to_string());
    let params = match get("well.kind")? {
        "symmetric" => SymmetricWellParams::new(num("well.E0")?, num("well.E1")?)
            .map_err(invalid)?
            .into(),
        "asymmetric" => AsymmetricWellParams::new(
            num("well.alpha")?,
            num("well.beta")?,
            num("well.E0")?,
            num("well.deltaE")?,
        )
        .map_err(invalid)?
        .into(),
        other => {
            return Err(CliError::Parse {
                line: 0,
                key: "well.kind".into(),
                message: format!("unknown well kind `{other}`"),
            })
        }
    };
    let n = get("n")?.parse().map_err(|_| CliError::Parse {
        line: 0,
        key: "n".into(),
        message: "not a count".into(),
    })?;
    Ok(SpectralBenchReport {
        params,
        n,
        half_width: num("L")?,
        dx: num("dx")?,
        numerical: [num("numerical.E0")?, num("numerical.E1")?],
        exact: [num("exact.E0")?, num("exact.E1")?],
        abs_errors: [num("abs_error.E0")?, num("abs_error.E1")?],
        eigenfunction_sup_errors: [num("sup_error.psi0")?, num("sup_error.psi1")?],
    })
}
