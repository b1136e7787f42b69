use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mixsing::config::{Command, Format, RunConfig, SweepSpec};
use mixsing::error::CliError;
use mixsing::input::parse_assignment;
use mixsing::run;

/// Mixed polynomial singularities: Newton boundaries, toric charts and
/// non-degeneracy certificates.
#[derive(Parser)]
#[command(name = "mixsing", version)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Newton boundary, weights, homogeneity and the regular fan
    Analyze(Common),
    /// Toric charts, strict transforms and exceptional-divisor checks
    Resolve(Common),
    /// Face-by-face non-degeneracy certificates (or a parameter sweep)
    Certify(Common),
    /// Enumerate the mixed J10 family members
    Classify(Common),
    /// Exact checks of the critical-point identities at a parameter value
    Lemma(Common),
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
    Svg,
}

#[derive(Args)]
struct Common {
    /// Polynomial file, bundled corpus name (e.g. rho.mp) or inline text
    #[arg(long)]
    poly: Option<String>,
    /// Parameter binding name=value, repeatable
    #[arg(long = "param")]
    params: Vec<String>,
    /// `auto` or a ray list such as "E1,(1,1),E2"
    #[arg(long)]
    fan: Option<String>,
    /// Single chart given by two rays in variable order, e.g. "P,E2"
    #[arg(long)]
    chart: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    starts: Option<usize>,
    /// Residual threshold for reporting a critical point
    #[arg(long)]
    tol: Option<f64>,
    /// Output directory; writes <command>.<ext> and run_config.toml
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// TOML run configuration; flags override its values
    #[arg(long)]
    config: Option<PathBuf>,
    /// Sweep items: case=<I..V> kgrid=<start:stop:step>
    #[arg(long, num_args = 1..)]
    sweep: Option<Vec<String>>,
}

fn build_config(command: Command, c: Common) -> Result<RunConfig, CliError> {
    let mut cfg = match &c.config {
        Some(path) => RunConfig::from_toml(&std::fs::read_to_string(path)?)?,
        None => RunConfig::default(),
    };
    cfg.command = command;
    if c.poly.is_some() {
        cfg.poly = c.poly;
    }
    let mut params = BTreeMap::new();
    for p in &c.params {
        let (k, v) = parse_assignment(p)?;
        params.insert(k, v);
    }
    cfg.params.extend(params);
    if let Some(fan) = c.fan {
        cfg.fan = fan;
    }
    if c.chart.is_some() {
        cfg.chart = c.chart;
    }
    if let Some(seed) = c.seed {
        cfg.search.seed = seed;
    }
    if let Some(starts) = c.starts {
        cfg.search.starts = starts;
    }
    if let Some(tol) = c.tol {
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(CliError::Usage(format!("--tol must be positive, got {tol}")));
        }
        cfg.search.tolerance = tol;
    }
    if c.out.is_some() {
        cfg.out = c.out;
    }
    if let Some(f) = c.format {
        cfg.format = match f {
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
            FormatArg::Svg => Format::Svg,
        };
    }
    if let Some(items) = c.sweep {
        cfg.sweep = Some(SweepSpec::parse(&items)?);
    }
    Ok(cfg)
}

fn run(cli: Cli) -> Result<(), CliError> {
    let (command, common) = match cli.command {
        Sub::Analyze(c) => (Command::Analyze, c),
        Sub::Resolve(c) => (Command::Resolve, c),
        Sub::Certify(c) => (Command::Certify, c),
        Sub::Classify(c) => (Command::Classify, c),
        Sub::Lemma(c) => (Command::Lemma, c),
    };
    let cfg = build_config(command, common)?;
    let outcome = run::execute(&cfg)?;
    let rendered = outcome.render(cfg.format)?;
    match &cfg.out {
        Some(dir) => run::write_outputs(&cfg, &outcome, dir)?,
        None => print!("{rendered}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
