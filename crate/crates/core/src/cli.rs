//! Command-line driver: shear-parameter tables, stress sweeps as CSV and the
//! verification report.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::hyper::{shear_stress, HyperelasticModel};
use crate::hypo::{HypoProblem, RateKind, TrajectorySample};
use crate::kinematics::ShearMode;
use crate::tensor::SymTensor2;
use crate::verify::{run_all, table_row, Profile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const CSV_HEADER: [&str; 7] = ["alpha", "sigma11", "sigma22", "sigma12", "sigma_bar11", "sigma_bar22", "sigma_bar12"];

pub const DEFAULT_ALPHA_MAX: f64 = 1.5;
pub const DEFAULT_POINTS: usize = 151;
pub const DEFAULT_STEPS: usize = 10_000;

#[derive(Debug, Parser)]
#[command(name = "shearlab", version, about = "Finite simple shear stress sweeps and verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the shear parameters of LFSS and RFSS at alpha = 0, 0.5, 1.0, 1.5.
    Tables,
    /// Write stress components over a uniform alpha grid as CSV.
    Sweep(SweepArgs),
    /// Run the acceptance checks and report measured errors.
    Verify {
        #[arg(long, default_value = "default")]
        profile: String,
    },
}

#[derive(Debug, Args, Default)]
struct SweepArgs {
    /// Model names, comma separated.
    #[arg(long)]
    model: Option<String>,
    /// lfss, rfss or simple-shear.
    #[arg(long)]
    mode: Option<String>,
    #[arg(long)]
    alpha_max: Option<f64>,
    /// Number of grid points including both endpoints.
    #[arg(long)]
    points: Option<usize>,
    /// Integration steps for hypoelastic models.
    #[arg(long)]
    steps: Option<usize>,
    #[arg(long)]
    mu: Option<f64>,
    #[arg(long)]
    lambda: Option<f64>,
    /// Initial shear stress for hypoelastic models.
    #[arg(long = "sigma12-0", allow_hyphen_values = true)]
    sigma12_0: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Flat JSON file with the same keys; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
}

/// Sweep settings as read from a JSON config file.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub model: Option<String>,
    pub mode: Option<String>,
    #[serde(alias = "alpha-max")]
    pub alpha_max: Option<f64>,
    pub points: Option<usize>,
    pub steps: Option<usize>,
    pub mu: Option<f64>,
    pub lambda: Option<f64>,
    #[serde(alias = "sigma12-0", alias = "initial_sigma12")]
    pub sigma12_0: Option<f64>,
    pub out: Option<PathBuf>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<ConfigFile> {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::InvalidParameter(format!("cannot read config {}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| Error::InvalidParameter(format!("config {}: {e}", path.display())))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SweepModel {
    Hyper(HyperelasticModel),
    Hypo(RateKind),
}

impl SweepModel {
    pub fn parse(name: &str, mu: f64, lambda: f64) -> Result<SweepModel> {
        let trimmed = name.trim();
        if trimmed.to_ascii_lowercase().starts_with("hypo-") {
            return trimmed.parse().map(SweepModel::Hypo);
        }
        HyperelasticModel::parse(trimmed, mu, lambda).map(SweepModel::Hyper)
    }

    pub fn name(&self) -> String {
        match self {
            SweepModel::Hyper(m) => m.name(),
            SweepModel::Hypo(r) => r.name().to_string(),
        }
    }

    /// File-name-safe form of the name.
    pub fn slug(&self) -> String {
        self.name()
            .chars()
            .map(|c| match c {
                ':' => '-',
                ',' => '_',
                c => c,
            })
            .collect()
    }
}

/// Splits a comma-separated model list, re-joining `mr:<mu1>,<mu2>`.
pub fn split_model_list(list: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for token in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        if let Some(last) = out.last_mut() {
            if last.to_ascii_lowercase().starts_with("mr:") && !last.contains(',') && token.parse::<f64>().is_ok() {
                last.push(',');
                last.push_str(token);
                continue;
            }
        }
        out.push(token.to_string());
    }
    out
}

/// Fully resolved sweep scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub models: Vec<String>,
    pub mode: ShearMode,
    pub alpha_max: f64,
    pub points: usize,
    pub steps: usize,
    pub mu: f64,
    pub lambda: f64,
    pub sigma12_0: Option<f64>,
    pub out: Option<PathBuf>,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        ScenarioConfig {
            models: Vec::new(),
            mode: ShearMode::Lfss,
            alpha_max: DEFAULT_ALPHA_MAX,
            points: DEFAULT_POINTS,
            steps: DEFAULT_STEPS,
            mu: 1.0,
            lambda: 0.0,
            sigma12_0: None,
            out: None,
        }
    }
}

impl ScenarioConfig {
    /// Merges file values under flag values and applies defaults.
    pub fn resolve(file: ConfigFile, flags: ConfigFile) -> Result<ScenarioConfig> {
        let d = ScenarioConfig::default();
        let model = flags.model.or(file.model).ok_or_else(|| Error::InvalidParameter("no model given".into()))?;
        let mode = match flags.mode.or(file.mode) {
            Some(m) => m.parse()?,
            None => d.mode,
        };
        let config = ScenarioConfig {
            models: split_model_list(&model),
            mode,
            alpha_max: flags.alpha_max.or(file.alpha_max).unwrap_or(d.alpha_max),
            points: flags.points.or(file.points).unwrap_or(d.points),
            steps: flags.steps.or(file.steps).unwrap_or(d.steps),
            mu: flags.mu.or(file.mu).unwrap_or(d.mu),
            lambda: flags.lambda.or(file.lambda).unwrap_or(d.lambda),
            sigma12_0: flags.sigma12_0.or(file.sigma12_0),
            out: flags.out.or(file.out),
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if self.models.is_empty() {
            return Err(Error::InvalidParameter("no model given".into()));
        }
        if !(self.alpha_max >= 0.0 && self.alpha_max.is_finite()) {
            return Err(Error::InvalidParameter(format!("alpha_max {}", self.alpha_max)));
        }
        if self.points < 2 {
            return Err(Error::InvalidParameter("points must be at least 2".into()));
        }
        if self.steps < 1 {
            return Err(Error::InvalidParameter("steps must be at least 1".into()));
        }
        if !(self.mu > 0.0 && self.mu.is_finite()) || !self.lambda.is_finite() {
            return Err(Error::InvalidParameter(format!("moduli mu = {}, lambda = {}", self.mu, self.lambda)));
        }
        if self.sigma12_0.is_some_and(|s| !s.is_finite()) {
            return Err(Error::NonFinite);
        }
        if self.models.len() > 1 && self.out.is_none() {
            return Err(Error::InvalidParameter("several models need --out".into()));
        }
        Ok(())
    }

    pub fn parsed_models(&self) -> Result<Vec<SweepModel>> {
        self.models.iter().map(|m| SweepModel::parse(m, self.mu, self.lambda)).collect()
    }

    /// Uniform grid including both endpoints.
    pub fn grid(&self) -> Vec<f64> {
        let n = self.points - 1;
        (0..=n).map(|i| self.alpha_max * i as f64 / n as f64).collect()
    }
}

/// Stress rows of one model on the scenario grid.
pub fn sweep_model(config: &ScenarioConfig, model: &SweepModel) -> Result<Vec<TrajectorySample>> {
    let grid = config.grid();
    match model {
        SweepModel::Hyper(m) => grid
            .iter()
            .map(|&alpha| {
                let p = shear_stress(m, config.mode, alpha)?;
                Ok(TrajectorySample { alpha, sigma: p.sigma, sigma_bar: p.sigma_bar })
            })
            .collect(),
        SweepModel::Hypo(rate) => {
            let intervals = config.points - 1;
            let stride = config.steps.div_ceil(intervals);
            let sigma0 = SymTensor2::shear(config.sigma12_0.unwrap_or(0.0));
            let problem = HypoProblem::new(*rate, config.mode, config.mu, config.alpha_max, stride * intervals)
                .with_lambda(config.lambda)
                .with_sigma0(sigma0);
            let traj = problem.solve()?.every(stride);
            Ok(traj.samples.into_iter().zip(grid).map(|(s, alpha)| TrajectorySample { alpha, ..s }).collect())
        }
    }
}

pub fn write_csv<W: Write>(writer: W, rows: &[TrajectorySample]) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    let io_err = |e: csv::Error| Error::InvalidParameter(format!("csv write: {e}"));
    w.write_record(CSV_HEADER).map_err(io_err)?;
    for r in rows {
        let values = [r.alpha, r.sigma.s11, r.sigma.s22, r.sigma.s12, r.sigma_bar.s11, r.sigma_bar.s22, r.sigma_bar.s12];
        w.write_record(values.iter().map(|v| format!("{v:.16e}"))).map_err(io_err)?;
    }
    w.flush().map_err(|e| Error::InvalidParameter(format!("csv write: {e}")))?;
    Ok(())
}

pub fn read_csv<R: io::Read>(reader: R) -> Result<Vec<TrajectorySample>> {
    let mut r = csv::Reader::from_reader(reader);
    let bad = |msg: String| Error::InvalidParameter(format!("csv read: {msg}"));
    let header = r.headers().map_err(|e| bad(e.to_string()))?;
    if header.iter().ne(CSV_HEADER) {
        return Err(bad(format!("unexpected header {header:?}")));
    }
    let mut rows = Vec::new();
    for record in r.records() {
        let record = record.map_err(|e| bad(e.to_string()))?;
        let v: Vec<f64> =
            record.iter().map(|s| s.parse::<f64>().map_err(|e| bad(format!("{s}: {e}")))).collect::<Result<_>>()?;
        if v.len() != CSV_HEADER.len() {
            return Err(bad(format!("row has {} fields", v.len())));
        }
        rows.push(TrajectorySample {
            alpha: v[0],
            sigma: SymTensor2::new(v[1], v[2], v[3]),
            sigma_bar: SymTensor2::new(v[4], v[5], v[6]),
        });
    }
    Ok(rows)
}

/// Output path of one model: the path itself for a single model,
/// `<stem>.<slug>.<ext>` otherwise.
pub fn output_path(out: &Path, model: &SweepModel, multiple: bool) -> PathBuf {
    if !multiple {
        return out.to_path_buf();
    }
    let stem = out.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let ext = out.extension().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "csv".into());
    out.with_file_name(format!("{stem}.{}.{ext}", model.slug()))
}

fn write_atomic(path: &Path, rows: &[TrajectorySample]) -> Result<()> {
    let mut buf = Vec::new();
    write_csv(&mut buf, rows)?;
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    let fail = |e: io::Error| Error::InvalidParameter(format!("cannot write {}: {e}", path.display()));
    fs::write(&tmp, &buf).map_err(fail)?;
    fs::rename(&tmp, path).map_err(|e| {
        let _ = fs::remove_file(&tmp);
        fail(e)
    })
}

/// Runs a sweep, writing to files or to `stdout`. Warnings go to `stderr`.
pub fn cmd_sweep(config: &ScenarioConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<()> {
    let models = config.parsed_models()?;
    if config.sigma12_0.is_some() {
        for m in models.iter().filter(|m| matches!(m, SweepModel::Hyper(_))) {
            let _ = writeln!(stderr, "warning: --sigma12-0 ignored for hyperelastic model {}", m.name());
        }
    }
    let multiple = models.len() > 1;
    for model in &models {
        let rows = sweep_model(config, model)?;
        match &config.out {
            Some(out) => write_atomic(&output_path(out, model, multiple), &rows)?,
            None => write_csv(&mut *stdout, &rows)?,
        }
    }
    Ok(())
}

fn fmt_cell(x: f64) -> String {
    if x.abs() >= 10.0 {
        format!("{x:.3}")
    } else {
        format!("{x:.4}")
    }
}

/// Shear-parameter table text for both modes.
pub fn cmd_tables() -> Result<String> {
    let mut s = String::new();
    for (mode, angle, shear) in [(ShearMode::Lfss, "theta*", "gamma*"), (ShearMode::Rfss, "theta", "gamma")] {
        s.push_str(&format!("{mode}\n"));
        s.push_str(&format!("{:>6} {:>8} {:>8} {:>8} {:>8} {:>8}\n", "alpha", angle, shear, "a", "b", "c"));
        for alpha in [0.0, 0.5, 1.0, 1.5] {
            let [th, g, a, b, c] = table_row(mode, alpha)?;
            s.push_str(&format!(
                "{alpha:>6.1} {:>8} {:>8} {:>8} {:>8} {:>8}\n",
                format!("{th:.2}"),
                fmt_cell(g),
                fmt_cell(a),
                fmt_cell(b),
                fmt_cell(c)
            ));
        }
        s.push('\n');
    }
    Ok(s)
}

/// Runs every check; returns the report text and whether all passed.
pub fn cmd_verify(profile: Profile) -> (String, bool) {
    let results = run_all(profile);
    let mut s = String::new();
    for r in &results {
        s.push_str(&format!("{r}\n"));
    }
    let passed = results.iter().filter(|r| r.passed).count();
    s.push_str(&format!("{passed}/{} checks passed ({} profile)\n", results.len(), profile.name()));
    (s, passed == results.len())
}

fn flags_of(args: &SweepArgs) -> ConfigFile {
    ConfigFile {
        model: args.model.clone(),
        mode: args.mode.clone(),
        alpha_max: args.alpha_max,
        points: args.points,
        steps: args.steps,
        mu: args.mu,
        lambda: args.lambda,
        sigma12_0: args.sigma12_0,
        out: args.out.clone(),
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(stderr, "{text}") } else { write!(stdout, "{text}") };
            return code;
        }
    };
    let fail = |stderr: &mut dyn Write, e: Error| {
        let _ = writeln!(stderr, "error: {e}");
        EXIT_USAGE
    };
    match cli.command {
        Command::Tables => match cmd_tables() {
            Ok(text) => {
                let _ = write!(stdout, "{text}");
                EXIT_OK
            }
            Err(e) => fail(stderr, e),
        },
        Command::Verify { profile } => {
            let profile: Profile = match profile.parse() {
                Ok(p) => p,
                Err(e) => return fail(stderr, e),
            };
            let (text, all) = cmd_verify(profile);
            let _ = write!(stdout, "{text}");
            if all {
                EXIT_OK
            } else {
                EXIT_VERIFY_FAILED
            }
        }
        Command::Sweep(args) => {
            let file = match &args.config {
                Some(path) => match ConfigFile::load(path) {
                    Ok(f) => f,
                    Err(e) => return fail(stderr, e),
                },
                None => ConfigFile::default(),
            };
            let result =
                ScenarioConfig::resolve(file, flags_of(&args)).and_then(|config| cmd_sweep(&config, stdout, stderr));
            match result {
                Ok(()) => EXIT_OK,
                Err(e) => fail(stderr, e),
            }
        }
    }
}
