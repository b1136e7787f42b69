//! Executes a [`RunConfig`]; shared by the binary and the tests.

use std::path::Path;

use mixsing_core::newton::newton_polyhedron;
use mixsing_core::MixedPolynomial;
use serde::Serialize;

use crate::config::{Command, Format, RunConfig};
use crate::error::CliError;
use crate::input::{load_polynomial, parse_real};
use crate::{parallel, report, svg};

/// All renderings of one run; `render` picks the requested one.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub json: String,
    pub text: String,
    pub svg: Option<String>,
}

impl Outcome {
    pub fn render(&self, format: Format) -> Result<&str, CliError> {
        match format {
            Format::Json => Ok(&self.json),
            Format::Text => Ok(&self.text),
            Format::Svg => self
                .svg
                .as_deref()
                .ok_or_else(|| CliError::Usage("svg output is available for analyze and resolve only".into())),
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn polynomial(cfg: &RunConfig) -> Result<MixedPolynomial, CliError> {
    let spec = cfg.poly.as_deref().ok_or_else(|| CliError::Usage(format!("{} needs --poly", cfg.command.name())))?;
    let (f, _) = load_polynomial(spec, &cfg.params)?;
    f.require_nonzero()?;
    f.require_planar()?;
    Ok(f)
}

pub fn execute(cfg: &RunConfig) -> Result<Outcome, CliError> {
    execute_with(cfg, parallel::threads())
}

pub fn execute_with(cfg: &RunConfig, workers: usize) -> Result<Outcome, CliError> {
    Ok(match cfg.command {
        Command::Analyze => {
            let f = polynomial(cfg)?;
            let (r, np, fan) = report::analyze(&f, &cfg.fan)?;
            Outcome { json: to_json(&r), text: report::analyze_text(&r), svg: Some(svg::render(&np, &fan)) }
        }
        Command::Resolve => {
            let f = polynomial(cfg)?;
            if let Some(chart) = &cfg.chart {
                let r = report::single_chart(&f, chart)?;
                Outcome { json: to_json(&r), text: report::single_chart_text(&r), svg: None }
            } else {
                let (r, fan) = report::resolve(&f, &cfg.fan)?;
                let np = newton_polyhedron(&f)?;
                Outcome { json: to_json(&r), text: report::resolve_text(&r), svg: Some(svg::render(&np, &fan)) }
            }
        }
        Command::Certify => {
            if let Some(spec) = &cfg.sweep {
                let r = report::sweep(spec, &cfg.search, workers)?;
                Outcome { json: to_json(&r), text: report::sweep_text(&r), svg: None }
            } else {
                let f = polynomial(cfg)?;
                let r = report::certify(&f, &cfg.search, workers)?;
                Outcome { json: to_json(&r), text: report::certify_text(&r), svg: None }
            }
        }
        Command::Classify => {
            let r = report::classify_report();
            Outcome { json: to_json(&r), text: report::classify_text(&r), svg: None }
        }
        Command::Lemma => {
            let k = parse_real(cfg.params.get("k").map_or("3", String::as_str))?;
            let r = report::lemma_report(&k)?;
            Outcome { json: to_json(&r), text: report::lemma_text(&r), svg: None }
        }
    })
}

/// Writes `<command>.<ext>` and the effective `run_config.toml` into `dir`.
pub fn write_outputs(cfg: &RunConfig, outcome: &Outcome, dir: &Path) -> Result<(), CliError> {
    std::fs::create_dir_all(dir)?;
    let name = format!("{}.{}", cfg.command.name(), cfg.format.extension());
    std::fs::write(dir.join(name), outcome.render(cfg.format)?)?;
    std::fs::write(dir.join("run_config.toml"), cfg.to_toml())?;
    Ok(())
}
