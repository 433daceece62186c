//! Command-line front end. `main.rs` only forwards to [`run_cli`].
//!
//! Exit codes: 0 success, 2 usage or validation error, 3 I/O error,
//! 4 numerical degeneracy.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ingest::{builtin_fixtures, fixture_names, Fixture, PublishedValues};
use crate::model::{
    compare_with_reference, rank_seeds, run_configuration, ComparisonRecord, DarlMode, ExperimentConfig,
    PredictionRecord, ReferencePoint, SeedFailure, SeedRanking, SeedRmse,
};
use crate::prng::{uniform_series, SeedValue, SortOrder};
use crate::stats::{self, NormalityResult, QuartileSummary};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(name = "darl", version, about = "Seeded air-temperature prediction for earth-air-water heat exchangers")]
pub struct Cli {
    /// Directory for report and plot-data files.
    #[arg(long, global = true)]
    pub out_dir: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Override the number of series values (default: one per centimeter).
    #[arg(long, global = true)]
    pub n_override: Option<usize>,

    #[arg(long, global = true, value_enum)]
    pub sort_order: Option<OrderArg>,

    /// Model reading: as-printed or a registered variant.
    #[arg(long, global = true)]
    pub darl_mode: Option<String>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Asc,
    Desc,
}

impl From<OrderArg> for SortOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Asc => SortOrder::Ascending,
            OrderArg::Desc => SortOrder::Descending,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a sorted uniform series as a single-column CSV.
    Generate(GenerateArgs),
    /// Run an experiment and report predictions against reference data.
    Run(InputArgs),
    /// Rank seeds by mean relative error.
    Sweep(InputArgs),
    /// Normality test and quartiles for a series.
    Validate(ValidateArgs),
    /// List built-in fixtures.
    Fixtures,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long)]
    pub seed: u32,
    #[arg(long)]
    pub n: usize,
    #[arg(long, allow_negative_numbers = true)]
    pub min: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub max: f64,
    #[arg(long, value_enum, default_value_t = OrderArg::Asc)]
    pub order: OrderArg,
    /// Output path (default: `<out-dir>/X1_<seed>.csv`).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Built-in fixture name.
    #[arg(long, conflicts_with = "config", required_unless_present = "config")]
    pub fixture: Option<String>,
    /// Configuration document (JSON).
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Reference observations CSV (`length_m,t_obs_c`), for --config runs.
    #[arg(long, requires = "config")]
    pub reference: Option<PathBuf>,
    /// Restrict to these seeds.
    #[arg(long, value_delimiter = ',')]
    pub seeds: Vec<u32>,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    /// Series CSV with a header row; the first column is tested.
    #[arg(long, conflicts_with = "fixture", required_unless_present = "fixture")]
    pub series: Option<PathBuf>,
    #[arg(long)]
    pub fixture: Option<String>,
    #[arg(long, value_delimiter = ',')]
    pub seeds: Vec<u32>,
}

/// Formats like C's `%.15g`.
pub fn fmt_sig15(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.14e}");
    let (mant, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("exponent digits");
    if !(-5..15).contains(&exp) {
        let mant = trim_zeros(mant);
        let sign = if exp < 0 { '-' } else { '+' };
        return format!("{mant}e{sign}{:02}", exp.abs());
    }
    let decimals = (14 - exp).max(0) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Rounds every float in a JSON tree to 15 significant digits.
fn round_json(value: &mut serde_json::Value) {
    use serde_json::Value;
    match value {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().unwrap_or_default();
            let r: f64 = fmt_sig15(x).parse().unwrap_or(x);
            *value = serde_json::Number::from_f64(r).map_or(Value::Null, Value::Number);
        }
        Value::Array(items) => items.iter_mut().for_each(round_json),
        Value::Object(map) => map.values_mut().for_each(round_json),
        _ => {}
    }
}

/// Deterministic JSON: floats at 15 significant digits, pretty-printed.
pub fn to_stable_json<T: Serialize>(value: &T) -> String {
    let mut v = serde_json::to_value(value).expect("report serializes");
    round_json(&mut v);
    let mut s = serde_json::to_string_pretty(&v).expect("json");
    s.push('\n');
    s
}

pub fn series_csv(values: &[f64]) -> String {
    let mut out = String::with_capacity(values.len() * 18 + 16);
    out.push_str("Ordered_Value\n");
    for v in values {
        out.push_str(&fmt_sig15(*v));
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct SeriesReport {
    pub seed: SeedValue,
    pub n: usize,
    pub alpha: f64,
    pub beta: f64,
    pub r_squared: f64,
    pub normality: Option<NormalityResult>,
    pub quartiles: QuartileSummary,
}

#[derive(Debug, Clone, Serialize)]
pub struct PublishedRowReport {
    pub length_m: f64,
    pub seed: SeedValue,
    pub published_delta_t_c: f64,
    pub published_relative_error_pct: f64,
    pub computed_t_sim_c: Option<f64>,
    pub computed_delta_t_c: Option<f64>,
    pub computed_relative_error_pct: Option<f64>,
}

/// Published values next to the values computed with the same seeds.
#[derive(Debug, Clone, Serialize)]
pub struct PublishedComparison {
    pub published_rmse_c: f64,
    pub computed_rmse_c: Option<f64>,
    pub rows: Vec<PublishedRowReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub tool_version: &'static str,
    pub source: String,
    pub config: ExperimentConfig,
    pub predictions: Vec<PredictionRecord>,
    pub comparisons: Vec<ComparisonRecord>,
    pub rmse_by_seed: Vec<SeedRmse>,
    pub ranking: Vec<SeedRanking>,
    pub series: Vec<SeriesReport>,
    pub failures: Vec<SeedFailure>,
    pub published: Option<PublishedComparison>,
    /// Excluded from the JSON artifact so reports stay byte-stable.
    #[serde(skip)]
    pub wall_time_ms: f64,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        to_stable_json(self)
    }

    /// Plot data for one seed: `length_m,t_sim_c,t_obs_c`.
    pub fn plot_csv(&self, seed: SeedValue) -> String {
        let mut out = String::from("length_m,t_sim_c,t_obs_c\n");
        for p in self.predictions.iter().filter(|p| p.seed == seed) {
            let obs = self
                .comparisons
                .iter()
                .find(|c| c.seed == seed && c.target_length == p.target_length)
                .map(|c| fmt_sig15(c.t_obs))
                .unwrap_or_default();
            let _ = writeln!(out, "{},{},{}", fmt_sig15(p.target_length), fmt_sig15(p.t_sim), obs);
        }
        out
    }

    pub fn comparison_csv(&self) -> String {
        let mut out = String::from("seed,length_m,t_sim_c,t_obs_c,delta_t_c,relative_error_pct\n");
        for c in &self.comparisons {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                c.seed,
                fmt_sig15(c.target_length),
                fmt_sig15(c.t_sim),
                fmt_sig15(c.t_obs),
                fmt_sig15(c.delta_t),
                fmt_sig15(c.relative_error_pct)
            );
        }
        out
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let c = &self.config;
        let _ = writeln!(out, "source: {}  (darl {})", self.source, self.tool_version);
        let _ = writeln!(
            out,
            "T_in {} °C  T_end {} °C  T_w {} ± {} °C  L {} m  n {}  order {:?}  mode {}",
            c.t_in,
            c.t_end,
            c.t_w,
            c.t_w_uncertainty,
            c.total_length,
            c.sample_count(),
            c.sort_order,
            c.darl_mode
        );
        out.push('\n');
        let _ = writeln!(
            out,
            "{:>6} {:>9} {:>10} {:>8} {:>10} {:>6}",
            "seed", "length_m", "T_phi", "R2", "T_sim", "range"
        );
        for p in &self.predictions {
            let _ = writeln!(
                out,
                "{:>6} {:>9.2} {:>10.4} {:>8.5} {:>10.4} {:>6}",
                p.seed.0,
                p.target_length,
                p.t_phi,
                p.r_squared,
                p.t_sim,
                if p.out_of_range_flag { "OUT" } else { "ok" }
            );
        }
        if !self.comparisons.is_empty() {
            out.push('\n');
            let _ = writeln!(
                out,
                "{:>6} {:>9} {:>10} {:>10} {:>9} {:>9}",
                "seed", "length_m", "T_sim", "T_obs", "dT", "err_%"
            );
            for r in &self.comparisons {
                let _ = writeln!(
                    out,
                    "{:>6} {:>9.2} {:>10.4} {:>10.2} {:>9.4} {:>9.3}",
                    r.seed.0, r.target_length, r.t_sim, r.t_obs, r.delta_t, r.relative_error_pct
                );
            }
            out.push('\n');
            for r in &self.rmse_by_seed {
                let _ = writeln!(out, "RMSE seed {:>6}: {:.4} °C", r.seed.0, r.rmse);
            }
        }
        if let Some(p) = &self.published {
            out.push('\n');
            let _ = writeln!(out, "published vs computed (same seed per target):");
            let _ = writeln!(
                out,
                "{:>9} {:>6} {:>8} {:>10} {:>10} {:>10}",
                "length_m", "seed", "pub_dT", "pub_err_%", "calc_dT", "calc_err_%"
            );
            for r in &p.rows {
                let fmt_opt = |v: Option<f64>, prec: usize| v.map_or("-".into(), |x| format!("{x:.prec$}"));
                let _ = writeln!(
                    out,
                    "{:>9.2} {:>6} {:>8.2} {:>10.2} {:>10} {:>10}",
                    r.length_m,
                    r.seed.0,
                    r.published_delta_t_c,
                    r.published_relative_error_pct,
                    fmt_opt(r.computed_delta_t_c, 4),
                    fmt_opt(r.computed_relative_error_pct, 3)
                );
            }
            let _ = writeln!(
                out,
                "RMSE published {:.4} °C, computed {}",
                p.published_rmse_c,
                p.computed_rmse_c.map_or("-".into(), |x| format!("{x:.4} °C"))
            );
        }
        if !self.series.is_empty() {
            out.push('\n');
            let _ = writeln!(
                out,
                "{:>6} {:>5} {:>9} {:>10} {:>9} {:>9} {:>9} {:>9} {:>7}",
                "seed", "n", "W", "p", "Q1", "Q2", "Q3", "IQR", "normal"
            );
            for s in &self.series {
                let (w, p, verdict) = match &s.normality {
                    Some(nr) => (
                        format!("{:.5}", nr.w_statistic),
                        format!("{:.3e}", nr.p_value),
                        if nr.rejected() { "no" } else { "yes" },
                    ),
                    None => ("-".into(), "-".into(), "-"),
                };
                let q = &s.quartiles;
                let _ = writeln!(
                    out,
                    "{:>6} {:>5} {:>9} {:>10} {:>9.4} {:>9.4} {:>9.4} {:>9.4} {:>7}",
                    s.seed.0, s.n, w, p, q.q1, q.q2, q.q3, q.iqr, verdict
                );
            }
        }
        for f in &self.failures {
            let _ = writeln!(out, "seed {} skipped: {}", f.seed, f.reason);
        }
        let _ = writeln!(out, "\nwall time: {:.2} ms", self.wall_time_ms);
        out
    }
}

/// Resolved experiment input: configuration plus optional reference data.
#[derive(Debug, Clone)]
pub struct Experiment {
    pub source: String,
    pub config: ExperimentConfig,
    pub reference: Option<Vec<ReferencePoint>>,
    pub published: Option<PublishedValues>,
}

impl From<Fixture> for Experiment {
    fn from(f: Fixture) -> Self {
        Experiment {
            source: format!("fixture:{}", f.name),
            config: f.config,
            reference: Some(f.reference),
            published: Some(f.published),
        }
    }
}

/// Builds the full report for an experiment.
pub fn build_report(exp: &Experiment) -> Result<RunReport> {
    let start = Instant::now();
    let config = &exp.config;
    let run = run_configuration(config);
    if run.seeds.is_empty() {
        let code = run.failures.iter().map(|f| f.exit_code).max().unwrap_or(4);
        let detail: Vec<String> = run.failures.iter().map(|f| format!("seed {}: {}", f.seed, f.reason)).collect();
        return Err(Error::NoUsableSeed {
            detail: detail.join("; "),
            code,
        });
    }
    let predictions = run.records();

    let (comparisons, rmse_by_seed, ranking) = match &exp.reference {
        Some(reference) => {
            let cmp = compare_with_reference(&predictions, reference)?;
            let ranking = rank_seeds(&cmp.rows)?;
            (cmp.rows, cmp.rmse_by_seed, ranking)
        }
        None => (Vec::new(), Vec::new(), Vec::new()),
    };

    let series = run
        .seeds
        .iter()
        .map(|s| {
            let values = &s.series.values;
            Ok(SeriesReport {
                seed: s.seed,
                n: values.len(),
                alpha: s.fit.alpha,
                beta: s.fit.beta,
                r_squared: s.fit.r_squared,
                normality: stats::shapiro_wilk(values).ok(),
                quartiles: stats::quartile_summary(values)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let published = exp.published.as_ref().map(|p| {
        let rows: Vec<PublishedRowReport> = p
            .rows
            .iter()
            .map(|row| {
                let hit = comparisons
                    .iter()
                    .find(|c| c.seed == row.seed && (c.target_length - row.length_m).abs() < 1e-9);
                PublishedRowReport {
                    length_m: row.length_m,
                    seed: row.seed,
                    published_delta_t_c: row.delta_t_c,
                    published_relative_error_pct: row.relative_error_pct,
                    computed_t_sim_c: hit.map(|c| c.t_sim),
                    computed_delta_t_c: hit.map(|c| c.delta_t),
                    computed_relative_error_pct: hit.map(|c| c.relative_error_pct),
                }
            })
            .collect();
        let deltas: Option<Vec<f64>> = rows.iter().map(|r| r.computed_delta_t_c).collect();
        let computed_rmse_c = deltas.and_then(|d| stats::rmse(&d, &vec![0.0; d.len()]).ok());
        PublishedComparison {
            published_rmse_c: p.rmse_c,
            computed_rmse_c,
            rows,
        }
    });

    Ok(RunReport {
        tool_version: VERSION,
        source: exp.source.clone(),
        config: config.clone(),
        predictions,
        comparisons,
        rmse_by_seed,
        ranking,
        series,
        failures: run.failures,
        published,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub tool_version: &'static str,
    pub source: String,
    pub darl_mode: DarlMode,
    pub ranking: Vec<SeedRanking>,
    pub chosen_seed: SeedValue,
}

impl SweepReport {
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "source: {}  mode {}", self.source, self.darl_mode);
        let _ = writeln!(
            out,
            "{:>4} {:>6} {:>12} {:>10} {:>10}",
            "rank", "seed", "mean_err_%", "mean_dT", "rmse"
        );
        for (i, r) in self.ranking.iter().enumerate() {
            let _ = writeln!(
                out,
                "{:>4} {:>6} {:>12.4} {:>10.4} {:>10.4}",
                i + 1,
                r.seed.0,
                r.mean_relative_error_pct,
                r.mean_delta_t,
                r.rmse
            );
        }
        let _ = writeln!(out, "chosen seed: {}", self.chosen_seed);
        out
    }
}

pub fn build_sweep(exp: &Experiment) -> Result<SweepReport> {
    if exp.reference.is_none() {
        return Err(Error::Validation("sweep needs reference observations".into()));
    }
    let report = build_report(exp)?;
    let chosen_seed = report.ranking[0].seed;
    Ok(SweepReport {
        tool_version: VERSION,
        source: exp.source.clone(),
        darl_mode: exp.config.darl_mode,
        ranking: report.ranking,
        chosen_seed,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationEntry {
    pub label: String,
    pub n: usize,
    pub normality: NormalityResult,
    pub normality_rejected: bool,
    pub quartiles: QuartileSummary,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub tool_version: &'static str,
    pub entries: Vec<ValidationEntry>,
}

impl ValidationReport {
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let nr = &e.normality;
            let verdict = if e.normality_rejected {
                format!("normality rejected (p < {})", nr.alpha)
            } else {
                format!("normality not rejected (p >= {})", nr.alpha)
            };
            let q = &e.quartiles;
            let _ = writeln!(
                out,
                "{}: n={} W={:.6} p={:.6e} {}\n  Q1={:.4} Q2={:.4} Q3={:.4} IQR={:.4}",
                e.label, e.n, nr.w_statistic, nr.p_value, verdict, q.q1, q.q2, q.q3, q.iqr
            );
        }
        out
    }
}

pub fn validate_values(label: impl Into<String>, values: &[f64]) -> Result<ValidationEntry> {
    let normality = stats::shapiro_wilk(values)?;
    Ok(ValidationEntry {
        label: label.into(),
        n: values.len(),
        normality_rejected: normality.rejected(),
        normality,
        quartiles: stats::quartile_summary(values)?,
    })
}

/// Reads the first column of a CSV with a header row.
pub fn read_series_csv(path: &Path) -> Result<Vec<f64>> {
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(bytes.as_slice());
    let mut values = Vec::new();
    for (row, rec) in reader.records().enumerate() {
        let rec = rec.map_err(|e| Error::Parse(format!("row {row}: {e}")))?;
        let field = rec.get(0).unwrap_or("");
        let v: f64 = field
            .parse()
            .map_err(|_| Error::Parse(format!("row {row}: `{field}` is not a number")))?;
        values.push(v);
    }
    Ok(values)
}

pub fn read_reference_csv(path: &Path) -> Result<Vec<ReferencePoint>> {
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(bytes.as_slice());
    reader
        .deserialize()
        .enumerate()
        .map(|(row, r)| r.map_err(|e| Error::Parse(format!("reference row {row}: {e}"))))
        .collect()
}

fn apply_overrides(cli: &Cli, config: &mut ExperimentConfig, seeds: &[u32]) -> Result<()> {
    if let Some(n) = cli.n_override {
        config.n_override = Some(n);
    }
    if let Some(order) = cli.sort_order {
        config.sort_order = order.into();
    }
    if let Some(mode) = &cli.darl_mode {
        config.darl_mode = DarlMode::from_name(mode)?;
    }
    if !seeds.is_empty() {
        let mut s: Vec<SeedValue> = seeds.iter().copied().map(SeedValue).collect();
        s.sort_unstable();
        s.dedup();
        config.seeds = s;
    }
    config.validate()
}

fn resolve_experiment(cli: &Cli, args: &InputArgs) -> Result<Experiment> {
    let mut exp = match (&args.fixture, &args.config) {
        (Some(name), _) => Experiment::from(builtin_fixtures(name)?),
        (None, Some(path)) => {
            let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
            let config = crate::ingest::load_config(&bytes)?;
            let reference = args.reference.as_deref().map(read_reference_csv).transpose()?;
            Experiment {
                source: path.display().to_string(),
                config,
                reference,
                published: None,
            }
        }
        (None, None) => return Err(Error::Validation("either --fixture or --config is required".into())),
    };
    apply_overrides(cli, &mut exp.config, &args.seeds)?;
    Ok(exp)
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| Error::io(path, e))
}

fn ensure_dir(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(|e| Error::io("<stdout>", e))
}

fn cmd_generate(cli: &Cli, args: &GenerateArgs, out: &mut dyn Write) -> Result<()> {
    let series = uniform_series(SeedValue(args.seed), args.n, args.min, args.max, args.order.into())?;
    let path = match &args.out {
        Some(p) => p.clone(),
        None => {
            let dir = cli.out_dir.clone().unwrap_or_else(|| PathBuf::from("."));
            ensure_dir(&dir)?;
            dir.join(format!("X1_{}.csv", args.seed))
        }
    };
    write_file(&path, &series_csv(&series.values))?;
    emit(out, &format!("wrote {} values to {}\n", series.len(), path.display()))
}

fn cmd_run(cli: &Cli, args: &InputArgs, out: &mut dyn Write) -> Result<()> {
    let exp = resolve_experiment(cli, args)?;
    let report = build_report(&exp)?;
    for f in &report.failures {
        eprintln!("warning: seed {} skipped: {}", f.seed, f.reason);
    }
    if let Some(dir) = &cli.out_dir {
        ensure_dir(dir)?;
        write_file(&dir.join("report.json"), &report.to_json())?;
        for s in &report.series {
            write_file(&dir.join(format!("plot_seed{}.csv", s.seed)), &report.plot_csv(s.seed))?;
        }
    }
    match cli.format {
        Format::Json => emit(out, &report.to_json()),
        Format::Table => emit(out, &report.to_table()),
        Format::Csv => emit(out, &report.comparison_csv()),
    }
}

fn cmd_sweep(cli: &Cli, args: &InputArgs, out: &mut dyn Write) -> Result<()> {
    let exp = resolve_experiment(cli, args)?;
    let sweep = build_sweep(&exp)?;
    let json = to_stable_json(&sweep);
    if let Some(dir) = &cli.out_dir {
        ensure_dir(dir)?;
        write_file(&dir.join("sweep.json"), &json)?;
    }
    match cli.format {
        Format::Json => emit(out, &json),
        Format::Table => emit(out, &sweep.to_table()),
        Format::Csv => {
            let mut s = String::from("rank,seed,mean_relative_error_pct,mean_delta_t_c,rmse_c\n");
            for (i, r) in sweep.ranking.iter().enumerate() {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{}",
                    i + 1,
                    r.seed,
                    fmt_sig15(r.mean_relative_error_pct),
                    fmt_sig15(r.mean_delta_t),
                    fmt_sig15(r.rmse)
                );
            }
            emit(out, &s)
        }
    }
}

fn cmd_validate(cli: &Cli, args: &ValidateArgs, out: &mut dyn Write) -> Result<()> {
    let mut entries = Vec::new();
    if let Some(path) = &args.series {
        let values = read_series_csv(path)?;
        entries.push(validate_values(path.display().to_string(), &values)?);
    } else if let Some(name) = &args.fixture {
        let mut config = builtin_fixtures(name)?.config;
        apply_overrides(cli, &mut config, &args.seeds)?;
        for &seed in &config.seeds {
            let (_, series) = crate::model::build_series(&config, seed)?;
            entries.push(validate_values(format!("{name} seed {seed}"), &series.values)?);
        }
    }
    let report = ValidationReport {
        tool_version: VERSION,
        entries,
    };
    let json = to_stable_json(&report);
    if let Some(dir) = &cli.out_dir {
        ensure_dir(dir)?;
        write_file(&dir.join("validation.json"), &json)?;
    }
    match cli.format {
        Format::Json => emit(out, &json),
        _ => emit(out, &report.to_table()),
    }
}

fn cmd_fixtures(out: &mut dyn Write) -> Result<()> {
    let mut s = String::new();
    for name in fixture_names() {
        let f = builtin_fixtures(name)?;
        let _ = writeln!(s, "{name:<14} {}", f.description);
    }
    emit(out, &s)
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<()> {
    match &cli.command {
        Command::Generate(a) => cmd_generate(cli, a, out),
        Command::Run(a) => cmd_run(cli, a, out),
        Command::Sweep(a) => cmd_sweep(cli, a, out),
        Command::Validate(a) => cmd_validate(cli, a, out),
        Command::Fixtures => cmd_fixtures(out),
    }
}

/// Parses arguments, runs the command and returns the process exit code.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
