//! The serializable description of one run. A report is a pure function of
//! its [`RunConfig`]; the CLI only fills one in from flags.

use std::collections::BTreeMap;
use std::path::PathBuf;

use mixsing_core::nondeg::SearchConfig;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    #[default]
    Analyze,
    Resolve,
    Certify,
    Classify,
    Lemma,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Analyze => "analyze",
            Command::Resolve => "resolve",
            Command::Certify => "certify",
            Command::Classify => "classify",
            Command::Lemma => "lemma",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Text,
    Svg,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Text => "txt",
            Format::Svg => "svg",
        }
    }
}

/// Multistart search settings; mirrors [`SearchConfig`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SearchSettings {
    pub starts: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub polish_target: f64,
    pub box_radius: f64,
    pub penalty_weight: f64,
    pub dedup_radius: f64,
    pub max_candidates: usize,
    pub local_evals: usize,
}

impl Default for SearchSettings {
    fn default() -> Self {
        SearchConfig::default().into()
    }
}

impl From<SearchConfig> for SearchSettings {
    fn from(c: SearchConfig) -> Self {
        Self {
            starts: c.starts,
            seed: c.seed,
            tolerance: c.tolerance,
            polish_target: c.polish_target,
            box_radius: c.box_radius,
            penalty_weight: c.penalty_weight,
            dedup_radius: c.dedup_radius,
            max_candidates: c.max_candidates,
            local_evals: c.local_evals,
        }
    }
}

impl From<&SearchSettings> for SearchConfig {
    fn from(s: &SearchSettings) -> Self {
        Self {
            starts: s.starts,
            seed: s.seed,
            tolerance: s.tolerance,
            polish_target: s.polish_target,
            box_radius: s.box_radius,
            penalty_weight: s.penalty_weight,
            dedup_radius: s.dedup_radius,
            max_candidates: s.max_candidates,
            local_evals: s.local_evals,
        }
    }
}

/// `certify --sweep case=IV kgrid=2.5:5:0.5`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub case: String,
    /// `start:stop:step` or a comma list of values.
    pub kgrid: String,
}

impl SweepSpec {
    pub fn parse(items: &[String]) -> Result<Self, CliError> {
        let mut case = None;
        let mut kgrid = None;
        for item in items {
            match item.split_once('=') {
                Some(("case", v)) => case = Some(v.to_string()),
                Some(("kgrid", v)) => kgrid = Some(v.to_string()),
                _ => return Err(CliError::Usage(format!("unrecognized sweep item `{item}` (expected case=… or kgrid=…)"))),
            }
        }
        Ok(Self {
            case: case.ok_or_else(|| CliError::Usage("sweep needs case=<I..V>".into()))?,
            kgrid: kgrid.ok_or_else(|| CliError::Usage("sweep needs kgrid=<start:stop:step>".into()))?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub command: Command,
    /// File path, corpus name, or polynomial text.
    pub poly: Option<String>,
    /// Parameter bindings such as `k = "5/2"`; override `@param` lines.
    pub params: BTreeMap<String, String>,
    /// `auto` or a ray list such as `E1,(1,2),E2`.
    pub fan: String,
    /// Two rays in chart-variable order, e.g. `S,E1`.
    pub chart: Option<String>,
    pub sweep: Option<SweepSpec>,
    pub search: SearchSettings,
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            command: Command::Analyze,
            poly: None,
            params: BTreeMap::new(),
            fan: "auto".into(),
            chart: None,
            sweep: None,
            search: SearchSettings::default(),
            format: Format::Json,
            out: None,
        }
    }
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Usage(format!("config: {e}")))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("RunConfig is always representable in TOML")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn toml_round_trip() {
        let mut c = RunConfig { command: Command::Certify, poly: Some("rho.mp".into()), ..Default::default() };
        c.params.insert("k".into(), "5/2".into());
        c.search.starts = 123;
        c.sweep = Some(SweepSpec { case: "IV".into(), kgrid: "2.5:5:0.5".into() });
        assert_eq!(RunConfig::from_toml(&c.to_toml()).unwrap(), c);
        assert!(RunConfig::from_toml("bogus = 1").is_err());
    }

    #[test]
    fn sweep_items() {
        let s = SweepSpec::parse(&["case=IV".into(), "kgrid=2.5:5:0.5".into()]).unwrap();
        assert_eq!(s.kgrid, "2.5:5:0.5");
        assert!(SweepSpec::parse(&["case=IV".into()]).is_err());
    }
}
