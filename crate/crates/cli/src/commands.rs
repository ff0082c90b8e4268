use std::fs;
use std::path::Path;

use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use vertex_core::render::{join_terms, monomial_latex};
use vertex_core::verify::run_suite;
use vertex_core::{
    count_pq, elementary_schur, enumerate_pq, matrix_element_closed, partial_exp, schur_terms, BasisConfig, Cutoffs,
    LaurentPoly, OneParticleVector,
};

use crate::{Cli, Command, Format};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("input error: {0}")]
    Input(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub struct Outcome {
    pub rendered: String,
    pub status: u8,
}

impl Outcome {
    fn ok(rendered: String) -> Self {
        Self { rendered, status: 0 }
    }
}

/// Reads `arg` as inline JSON when it looks like JSON, else as a file path.
fn load_json_source(arg: &str) -> Result<String, String> {
    let t = arg.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        Ok(arg.to_string())
    } else {
        fs::read_to_string(arg).map_err(|e| format!("cannot read {arg:?}: {e}"))
    }
}

fn cutoffs(cli: &Cli) -> Result<Cutoffs, CliError> {
    Cutoffs::new(cli.modes, cli.order, cli.degree).map_err(|e| CliError::Usage(e.to_string()))
}

fn basis(cli: &Cli) -> Result<BasisConfig, CliError> {
    let Some(src) = &cli.basis else {
        return Ok(BasisConfig::identity(cli.modes));
    };
    let text = load_json_source(src).map_err(CliError::Config)?;
    let config: BasisConfig = serde_json::from_str(&text).map_err(|e| CliError::Config(format!("basis: {e}")))?;
    if config.modes() != cli.modes {
        return Err(CliError::Config(format!(
            "basis has {} modes but --modes is {}",
            config.modes(),
            cli.modes
        )));
    }
    Ok(config)
}

fn vector(name: &str, src: &str, modes: u32) -> Result<OneParticleVector, CliError> {
    let text = load_json_source(src).map_err(CliError::Input)?;
    let v: OneParticleVector =
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("vector {name}: {e}")))?;
    v.check_modes(modes).map_err(|e| CliError::Input(format!("vector {name}: {e}")))?;
    OneParticleVector::from_entries(modes, v.iter().map(|(m, c)| (m, c.clone())))
        .map_err(|e| CliError::Input(format!("vector {name}: {e}")))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values serialize");
    s.push('\n');
    s
}

fn laurent_body(power: i64, latex: bool) -> String {
    match (power, latex) {
        (0, _) => String::new(),
        (1, _) => "z".into(),
        (k, false) => format!("z^{k}"),
        (k, true) => format!("z^{{{k}}}"),
    }
}

fn render_laurent(p: &LaurentPoly, latex: bool) -> String {
    join_terms(p.iter().map(|(k, c)| (c.clone(), laurent_body(k, latex))), latex)
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let cut = cutoffs(cli)?;
    let config = basis(cli)?;
    match &cli.command {
        Command::SchurTerms { w } => {
            let op = schur_terms(*w, &cut);
            Ok(Outcome::ok(match cli.format {
                Format::Json => to_json(&op),
                Format::Text => format!("{}\n", op.to_text()),
                Format::Latex => format!("{}\n", op.to_latex()),
            }))
        }
        Command::Enumerate { m, w } => {
            let pairs = enumerate_pq(*m, *w, cut.modes);
            let count = count_pq(*m, *w, cut.modes);
            Ok(Outcome::ok(match cli.format {
                Format::Json => to_json(&json!({
                    "m": m, "w": w, "modes": cut.modes, "count": count, "pairs": pairs,
                })),
                Format::Text => {
                    let mut out = format!("# m={m} w={w} K={} count={count}\n", cut.modes);
                    for pair in &pairs {
                        out.push_str(&serde_json::to_string(pair).expect("pairs serialize"));
                        out.push('\n');
                    }
                    out
                }
                Format::Latex => {
                    let mut out = String::new();
                    for pair in &pairs {
                        let p = monomial_latex("p", &pair.p);
                        let q = monomial_latex("q", &pair.q);
                        out.push_str(&format!("({}, {})\n", if p.is_empty() { "1" } else { &p }, if q.is_empty() { "1" } else { &q }));
                    }
                    out
                }
            }))
        }
        Command::MatrixElement { u, v } => {
            let u = vector("u", u, cut.modes)?;
            let v = vector("v", v, cut.modes)?;
            let slice = matrix_element_closed(&u, &v, &config, &cut);
            let contraction = u.inner(&v);
            let prefactor = partial_exp(&contraction, cut.order);
            Ok(Outcome::ok(match cli.format {
                Format::Json => to_json(&json!({
                    "coeffs": slice.coeffs,
                    "cutoffs": slice.cutoffs,
                    "prefactor": {
                        "kind": "partial-sum",
                        "description": "E_M(<u,v>) = sum_{i<=M} <u,v>^i / i!, standing in for exp(<u,v>)",
                        "order": cut.order,
                        "contraction": contraction,
                        "value": prefactor,
                    },
                })),
                Format::Text => format!(
                    "{}\n# prefactor: partial sum E_{}(<u,v>) = {} with <u,v> = {}\n",
                    render_laurent(&slice.coeffs, false),
                    cut.order,
                    prefactor,
                    contraction
                ),
                Format::Latex => format!("{}\n", render_laurent(&slice.coeffs, true)),
            }))
        }
        Command::ElementarySchur { m } => {
            let poly = elementary_schur(*m, cut.modes);
            Ok(Outcome::ok(match cli.format {
                Format::Json => to_json(&json!({
                    "m": m, "modes": cut.modes, "terms": poly, "latex": poly.to_latex("x"),
                })),
                Format::Text => format!("{}\n", poly.to_text("x")),
                Format::Latex => format!("S_{{{m}}} = {}\n", poly.to_latex("x")),
            }))
        }
        Command::Verify => {
            if cli.trials == 0 {
                return Err(CliError::Usage("--trials must be at least 1".into()));
            }
            let report = run_suite(cli.seed, cli.trials, &cut, &config).map_err(|e| CliError::Usage(e.to_string()))?;
            let status = if report.passed() { 0 } else { 1 };
            let rendered = match cli.format {
                Format::Json => to_json(&report),
                Format::Text | Format::Latex => report.to_text(),
            };
            Ok(Outcome { rendered, status })
        }
    }
}

pub fn emit(cli: &Cli, rendered: &str) -> Result<(), CliError> {
    match &cli.output {
        Some(path) => write_file(path, rendered),
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}

fn write_file(path: &Path, rendered: &str) -> Result<(), CliError> {
    fs::write(path, rendered).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}
