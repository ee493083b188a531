//! Plot-ready sweep output: `manifest.json`, `correlations.csv`,
//! `entropy.csv`, `summary.csv` and `means.csv`.
//!
//! All CSVs use `,` separators, `.` decimals and LF line endings. Undefined
//! values are written as empty cells.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::Serialize;

use super::{SweepConfig, SweepResult};
use crate::error::Result;
use crate::generators::GenSpec;
use crate::stats::pair_labels;

/// Formats a real with 12 significant digits, trailing zeros trimmed but at
/// least one decimal kept (`2.0`, `0.666666666667`, `1.5e-7`).
pub fn format_real(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0.0".to_string();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("exponent digits");
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa.to_string()))
    }
}

fn trim_zeros(mut s: String) -> String {
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.push('0');
        }
    }
    s
}

fn cell(x: Option<f64>) -> String {
    x.map(format_real).unwrap_or_default()
}

#[derive(Serialize)]
struct Failure<'a> {
    grid_index: usize,
    replicate: usize,
    spec: &'a GenSpec,
    error: &'a str,
}

#[derive(Serialize)]
struct Manifest<'a> {
    tool: &'static str,
    version: &'static str,
    model: &'static str,
    config: &'a SweepConfig,
    closeness_rule: &'static str,
    entropy_log_base: &'static str,
    failures: Vec<Failure<'a>>,
}

/// Writes every sweep artifact into `dir`, creating it if needed.
pub fn write_sweep(result: &SweepResult, dir: impl AsRef<Path>) -> Result<()> {
    let dir = dir.as_ref();
    fs::create_dir_all(dir)?;
    let model = result.config.model().tag();

    let manifest = Manifest {
        tool: "egonet",
        version: env!("CARGO_PKG_VERSION"),
        model,
        config: &result.config,
        closeness_rule: "mean distance over all n vertices; unreachable vertices excluded from the sum",
        entropy_log_base: "e",
        failures: result
            .failures()
            .map(|r| Failure {
                grid_index: r.grid_index,
                replicate: r.replicate,
                spec: &r.spec,
                error: r.outcome.as_ref().err().map(String::as_str).unwrap_or(""),
            })
            .collect(),
    };
    let mut json = serde_json::to_string_pretty(&manifest)?;
    json.push('\n');
    fs::write(dir.join("manifest.json"), json)?;

    let pairs = pair_labels();
    let mut corr = format!("model,param_value,replicate,{}\n", pairs.join(","));
    let mut entropy = String::from("model,param_value,replicate,h_graph,h_randic,h_laplacian\n");
    let mut summary = String::from("param_value,replicate,n,m,components,mean_degree\n");
    for row in &result.rows {
        let value = format_real(row.param_value);
        let prefix = format!("{model},{value},{}", row.replicate);
        match &row.outcome {
            Ok(res) => {
                let cells: Vec<String> = res.correlations.pairs().map(|(_, _, r)| cell(r)).collect();
                writeln!(corr, "{prefix},{}", cells.join(",")).unwrap();
                let h = res.entropy;
                writeln!(
                    entropy,
                    "{prefix},{},{},{}",
                    format_real(h.h_graph),
                    format_real(h.h_randic),
                    format_real(h.h_laplacian)
                )
                .unwrap();
                let s = res.summary;
                writeln!(
                    summary,
                    "{value},{},{},{},{},{}",
                    row.replicate,
                    s.n,
                    s.m,
                    s.components,
                    format_real(s.mean_degree)
                )
                .unwrap();
            }
            Err(_) => {
                writeln!(corr, "{prefix}{}", ",".repeat(pairs.len())).unwrap();
                writeln!(entropy, "{prefix},,,").unwrap();
                writeln!(summary, "{value},{},{},,,", row.replicate, row.spec.n).unwrap();
            }
        }
    }
    fs::write(dir.join("correlations.csv"), corr)?;
    fs::write(dir.join("entropy.csv"), entropy)?;
    fs::write(dir.join("summary.csv"), summary)?;

    let mut means = format!(
        "model,param_value,succeeded,{},h_graph,h_randic,h_laplacian\n",
        pairs.join(",")
    );
    for m in &result.means {
        let cells: Vec<String> = m.correlations.pairs().map(|(_, _, r)| cell(r)).collect();
        let h: Vec<String> = m.entropy.iter().map(|&x| cell(x)).collect();
        writeln!(
            means,
            "{model},{},{},{},{}",
            format_real(m.param_value),
            m.succeeded,
            cells.join(","),
            h.join(",")
        )
        .unwrap();
    }
    fs::write(dir.join("means.csv"), means)?;
    Ok(())
}
