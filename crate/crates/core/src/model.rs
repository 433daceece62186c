//! The prediction model: synthetic series over a length grid, the
//! temperature correlation, experiment execution and seed ranking.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::prng::{uniform_series, SeedValue, SortOrder, UniformSeries, FERMAT_PRIMES};
use crate::regression::{fit_series, LinearFit};
use crate::stats;

/// Tolerance used when matching target lengths to reference lengths.
const LENGTH_EPS: f64 = 1e-9;

/// Registered readings of the temperature correlation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum DarlMode {
    /// `T = ((T_max - T_min) / (T_phi - T_w)) * (1 / R²) * T_w + T_phi`
    #[default]
    #[serde(rename = "as-printed")]
    AsPrinted,
    /// `T = ((T_max - T_min) / (T_phi * R²)) * T_w + T_phi`
    #[serde(rename = "phi-r2-bracket")]
    PhiR2Bracket,
}

impl DarlMode {
    pub const ALL: [DarlMode; 2] = [DarlMode::AsPrinted, DarlMode::PhiR2Bracket];

    pub fn name(self) -> &'static str {
        match self {
            DarlMode::AsPrinted => "as-printed",
            DarlMode::PhiR2Bracket => "phi-r2-bracket",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == name)
            .ok_or_else(|| Error::UnknownMode(name.to_string()))
    }
}

impl std::str::FromStr for DarlMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DarlMode::from_name(s)
    }
}

impl std::fmt::Display for DarlMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Boundary conditions and evaluation grid for one experiment.
///
/// Serializes to the flat configuration document (`t_in_c`, `total_length_m`, ...).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    /// Inlet air temperature; upper bound of the synthetic series.
    #[serde(rename = "t_in_c")]
    pub t_in: f64,
    /// Terminal sensor temperature (S4 or S7); lower bound of the series.
    #[serde(rename = "t_end_c")]
    pub t_end: f64,
    #[serde(rename = "t_w_c")]
    pub t_w: f64,
    #[serde(rename = "t_w_uncertainty_c", default)]
    pub t_w_uncertainty: f64,
    #[serde(rename = "total_length_m")]
    pub total_length: f64,
    #[serde(rename = "target_lengths_m")]
    pub target_lengths: Vec<f64>,
    pub seeds: Vec<SeedValue>,
    #[serde(default)]
    pub n_override: Option<usize>,
    #[serde(default)]
    pub sort_order: SortOrder,
    #[serde(default)]
    pub darl_mode: DarlMode,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        let finite = [self.t_in, self.t_end, self.t_w, self.t_w_uncertainty, self.total_length];
        if finite.iter().any(|v| !v.is_finite()) {
            return Err(Error::Validation("temperatures and lengths must be finite".into()));
        }
        if !(self.t_in > self.t_end) {
            return Err(Error::Validation(format!(
                "inlet temperature {} must exceed terminal temperature {}",
                self.t_in, self.t_end
            )));
        }
        if !(self.total_length > 0.0) {
            return Err(Error::Validation("total length must be positive".into()));
        }
        if self.target_lengths.is_empty() {
            return Err(Error::Validation("no target lengths".into()));
        }
        for &x in &self.target_lengths {
            if !(x > 0.0 && x < self.total_length) {
                return Err(Error::Validation(format!(
                    "target length {x} outside (0, {})",
                    self.total_length
                )));
            }
        }
        if self.seeds.is_empty() {
            return Err(Error::Validation("seed set is empty".into()));
        }
        if let Some(s) = self.seeds.iter().find(|s| !FERMAT_PRIMES.contains(&s.0)) {
            return Err(Error::Validation(format!("seed {s} is not a Fermat prime")));
        }
        if self.seeds.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Validation("seeds must be strictly increasing".into()));
        }
        if let Some(n) = self.n_override {
            if n < 2 {
                return Err(Error::Validation("n_override must be at least 2".into()));
            }
        }
        Ok(())
    }

    /// Number of series values: the override if set, else one per centimeter.
    pub fn sample_count(&self) -> usize {
        self.n_override
            .unwrap_or_else(|| (100.0 * self.total_length).round() as usize)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PredictionRecord {
    pub seed: SeedValue,
    pub target_length: f64,
    pub t_phi: f64,
    pub r_squared: f64,
    pub t_sim: f64,
    pub out_of_range_flag: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonRecord {
    pub seed: SeedValue,
    pub target_length: f64,
    pub t_sim: f64,
    pub t_obs: f64,
    pub delta_t: f64,
    pub relative_error_pct: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReferencePoint {
    pub length_m: f64,
    pub t_obs_c: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeedRmse {
    pub seed: SeedValue,
    pub rmse: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Comparison {
    pub rows: Vec<ComparisonRecord>,
    pub rmse_by_seed: Vec<SeedRmse>,
}

/// A seed whose evaluation was abandoned.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeedFailure {
    pub seed: SeedValue,
    pub reason: String,
    pub exit_code: i32,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeedOutcome {
    pub seed: SeedValue,
    pub fit: LinearFit,
    pub series: UniformSeries,
    pub records: Vec<PredictionRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConfigurationRun {
    pub seeds: Vec<SeedOutcome>,
    pub failures: Vec<SeedFailure>,
}

impl ConfigurationRun {
    /// All prediction records in (seed, length) order.
    pub fn records(&self) -> Vec<PredictionRecord> {
        self.seeds.iter().flat_map(|s| s.records.iter().cloned()).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ModelOutput {
    pub t_sim: f64,
    pub out_of_range_flag: bool,
}

/// Length grid `x_i = i * L / (n - 1)` paired with the synthetic series.
pub fn build_series(config: &ExperimentConfig, seed: SeedValue) -> Result<(Vec<f64>, UniformSeries)> {
    let n = config.sample_count();
    let series = uniform_series(seed, n, config.t_end, config.t_in, config.sort_order)?;
    let step = config.total_length / (n - 1) as f64;
    let mut grid: Vec<f64> = (0..n).map(|i| i as f64 * step).collect();
    grid[n - 1] = config.total_length;
    Ok((grid, series))
}

/// The correlation evaluated exactly as printed.
pub fn darl_temperature(t_max: f64, t_min: f64, t_w: f64, t_phi: f64, r_squared: f64) -> Result<ModelOutput> {
    darl_temperature_with(DarlMode::AsPrinted, t_max, t_min, t_w, t_phi, r_squared)
}

pub fn darl_temperature_with(
    mode: DarlMode,
    t_max: f64,
    t_min: f64,
    t_w: f64,
    t_phi: f64,
    r_squared: f64,
) -> Result<ModelOutput> {
    if !(r_squared > 0.0 && r_squared <= 1.0) {
        return Err(Error::InvalidCoefficient(r_squared));
    }
    let t_sim = match mode {
        DarlMode::AsPrinted => {
            if t_phi == t_w {
                return Err(Error::Singularity { t_phi });
            }
            ((t_max - t_min) / (t_phi - t_w)) * (1.0 / r_squared) * t_w + t_phi
        }
        DarlMode::PhiR2Bracket => {
            if t_phi == 0.0 {
                return Err(Error::Singularity { t_phi });
            }
            ((t_max - t_min) / (t_phi * r_squared)) * t_w + t_phi
        }
    };
    let lower = t_min.min(t_w);
    Ok(ModelOutput {
        t_sim,
        out_of_range_flag: !(t_sim >= lower && t_sim <= t_max),
    })
}

fn run_seed(config: &ExperimentConfig, seed: SeedValue) -> Result<SeedOutcome> {
    let (grid, series) = build_series(config, seed)?;
    let fit = fit_series(&grid, &series.values)?;
    let mut targets = config.target_lengths.clone();
    targets.sort_by(f64::total_cmp);
    let records = targets
        .into_iter()
        .map(|x| {
            let t_phi = fit.predict_at(x);
            let out = darl_temperature_with(
                config.darl_mode,
                config.t_in,
                config.t_end,
                config.t_w,
                t_phi,
                fit.r_squared,
            )?;
            Ok(PredictionRecord {
                seed,
                target_length: x,
                t_phi,
                r_squared: fit.r_squared,
                t_sim: out.t_sim,
                out_of_range_flag: out.out_of_range_flag,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SeedOutcome {
        seed,
        fit,
        series,
        records,
    })
}

/// Runs every seed of `config`: one fit over the full length, evaluated at
/// each target. Seeds run in parallel; output is ordered by (seed, length).
/// A seed that fails (degenerate fit, singular model) is reported in
/// `failures` and contributes no records.
pub fn run_configuration(config: &ExperimentConfig) -> ConfigurationRun {
    let mut seeds = config.seeds.clone();
    seeds.sort_unstable();
    seeds.dedup();
    let results: Vec<(SeedValue, Result<SeedOutcome>)> = seeds
        .par_iter()
        .map(|&s| (s, run_seed(config, s)))
        .collect();

    let mut run = ConfigurationRun {
        seeds: Vec::new(),
        failures: Vec::new(),
    };
    for (seed, result) in results {
        match result {
            Ok(outcome) => run.seeds.push(outcome),
            Err(e) => run.failures.push(SeedFailure {
                seed,
                reason: e.to_string(),
                exit_code: e.exit_code(),
            }),
        }
    }
    run
}

pub fn compare_with_reference(records: &[PredictionRecord], reference: &[ReferencePoint]) -> Result<Comparison> {
    let mut rows = Vec::with_capacity(records.len());
    for r in records {
        let obs = reference
            .iter()
            .find(|p| (p.length_m - r.target_length).abs() <= LENGTH_EPS)
            .ok_or(Error::MissingReference(r.target_length))?;
        rows.push(ComparisonRecord {
            seed: r.seed,
            target_length: r.target_length,
            t_sim: r.t_sim,
            t_obs: obs.t_obs_c,
            delta_t: (r.t_sim - obs.t_obs_c).abs(),
            relative_error_pct: stats::relative_error(obs.t_obs_c, r.t_sim)?,
        });
    }

    let mut rmse_by_seed = Vec::new();
    for seed in distinct_seeds(&rows) {
        let (obs, sim): (Vec<f64>, Vec<f64>) = rows
            .iter()
            .filter(|c| c.seed == seed)
            .map(|c| (c.t_obs, c.t_sim))
            .unzip();
        rmse_by_seed.push(SeedRmse {
            seed,
            rmse: stats::rmse(&obs, &sim)?,
        });
    }
    Ok(Comparison { rows, rmse_by_seed })
}

fn distinct_seeds(rows: &[ComparisonRecord]) -> Vec<SeedValue> {
    let mut seeds: Vec<SeedValue> = rows.iter().map(|c| c.seed).collect();
    seeds.sort_unstable();
    seeds.dedup();
    seeds
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeedRanking {
    pub seed: SeedValue,
    pub mean_relative_error_pct: f64,
    pub mean_delta_t: f64,
    pub rmse: f64,
    pub targets: usize,
}

/// Seeds ordered by mean relative error, ties to the smaller seed.
pub fn rank_seeds(rows: &[ComparisonRecord]) -> Result<Vec<SeedRanking>> {
    if rows.is_empty() {
        return Err(Error::InsufficientSamples { given: 0, needed: 1 });
    }
    let mut ranking = Vec::new();
    for seed in distinct_seeds(rows) {
        let mine: Vec<&ComparisonRecord> = rows.iter().filter(|c| c.seed == seed).collect();
        let k = mine.len() as f64;
        let (obs, sim): (Vec<f64>, Vec<f64>) = mine.iter().map(|c| (c.t_obs, c.t_sim)).unzip();
        ranking.push(SeedRanking {
            seed,
            mean_relative_error_pct: mine.iter().map(|c| c.relative_error_pct).sum::<f64>() / k,
            mean_delta_t: mine.iter().map(|c| c.delta_t).sum::<f64>() / k,
            rmse: stats::rmse(&obs, &sim)?,
            targets: mine.len(),
        });
    }
    ranking.sort_by(|a, b| {
        a.mean_relative_error_pct
            .total_cmp(&b.mean_relative_error_pct)
            .then(a.seed.cmp(&b.seed))
    });
    Ok(ranking)
}

pub fn select_best_seed(rows: &[ComparisonRecord]) -> Result<SeedValue> {
    Ok(rank_seeds(rows)?[0].seed)
}
