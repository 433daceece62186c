//! Validation statistics: Shapiro–Wilk, RMSE, relative error and quartiles.

use serde::Serialize;
use statrs::distribution::{ContinuousCDF, Normal};

use crate::error::{Error, Result};

/// Default significance level for the normality test.
pub const DEFAULT_ALPHA: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NormalityResult {
    pub w_statistic: f64,
    pub p_value: f64,
    pub n: usize,
    pub alpha: f64,
}

impl NormalityResult {
    /// True when normality is rejected at `alpha`.
    pub fn rejected(&self) -> bool {
        self.p_value < self.alpha
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuartileSummary {
    pub q1: f64,
    pub q2: f64,
    pub q3: f64,
    pub iqr: f64,
}

// Royston (1995) polynomial coefficients, ordered by increasing power.
const C1: [f64; 6] = [0.0, 0.221157, -0.147981, -2.071190, 4.434685, -2.706056];
const C2: [f64; 6] = [0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633];
const C3: [f64; 4] = [0.5440, -0.39978, 0.025054, -6.714e-4];
const C4: [f64; 4] = [1.3822, -0.77857, 0.062767, -0.0020322];
const C5: [f64; 4] = [-1.5861, -0.31082, -0.083751, 0.0038915];
const C6: [f64; 3] = [-0.4803, -0.082676, 0.0030302];
const G: [f64; 2] = [-2.273, 0.459];

fn poly(coef: &[f64], x: f64) -> f64 {
    coef.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

fn std_normal() -> Normal {
    Normal::new(0.0, 1.0).expect("unit normal")
}

/// Shapiro–Wilk W statistic and p-value (Royston's approximation, 3 ≤ n ≤ 5000).
pub fn shapiro_wilk(values: &[f64]) -> Result<NormalityResult> {
    shapiro_wilk_at(values, DEFAULT_ALPHA)
}

pub fn shapiro_wilk_at(values: &[f64], alpha: f64) -> Result<NormalityResult> {
    let n = values.len();
    if !(3..=5000).contains(&n) {
        return Err(Error::UnsupportedSampleSize(n));
    }
    let mut x = values.to_vec();
    x.sort_by(f64::total_cmp);
    let range = x[n - 1] - x[0];
    if !(range > 0.0) {
        return Err(Error::DegenerateVariance);
    }

    let weights = sw_weights(n);

    // Scale by range before forming sums.
    let xs: Vec<f64> = x.iter().map(|v| (v - x[0]) / range).collect();
    let mean = xs.iter().sum::<f64>() / n as f64;
    let ssq: f64 = xs.iter().map(|v| (v - mean) * (v - mean)).sum();
    let num: f64 = weights
        .iter()
        .enumerate()
        .map(|(i, a)| a * (xs[n - 1 - i] - xs[i]))
        .sum();
    let w = (num * num / ssq).min(1.0);

    let p_value = sw_p_value(w, n);
    Ok(NormalityResult {
        w_statistic: w,
        p_value,
        n,
        alpha,
    })
}

/// Antisymmetric weights `a_1..a_{n/2}` for the upper half.
fn sw_weights(n: usize) -> Vec<f64> {
    let half = n / 2;
    if n == 3 {
        return vec![std::f64::consts::FRAC_1_SQRT_2];
    }
    let norm = std_normal();
    let an25 = n as f64 + 0.25;
    let m: Vec<f64> = (1..=half)
        .map(|i| norm.inverse_cdf((i as f64 - 0.375) / an25))
        .collect();
    let summ2 = 2.0 * m.iter().map(|v| v * v).sum::<f64>();
    let ssumm2 = summ2.sqrt();
    let rsn = 1.0 / (n as f64).sqrt();

    let a1 = poly(&C1, rsn) - m[0] / ssumm2;
    let mut a = vec![0.0; half];
    a[0] = a1;
    let (first, fac) = if n > 5 {
        let a2 = -m[1] / ssumm2 + poly(&C2, rsn);
        a[1] = a2;
        let fac = ((summ2 - 2.0 * m[0] * m[0] - 2.0 * m[1] * m[1])
            / (1.0 - 2.0 * a1 * a1 - 2.0 * a2 * a2))
            .sqrt();
        (2, fac)
    } else {
        let fac = ((summ2 - 2.0 * m[0] * m[0]) / (1.0 - 2.0 * a1 * a1)).sqrt();
        (1, fac)
    };
    for i in first..half {
        a[i] = -m[i] / fac;
    }
    a
}

fn sw_p_value(w: f64, n: usize) -> f64 {
    if n == 3 {
        let stqr = std::f64::consts::FRAC_PI_3;
        let pi6 = 6.0 / std::f64::consts::PI;
        return (pi6 * (w.sqrt().asin() - stqr)).clamp(0.0, 1.0);
    }
    let an = n as f64;
    let w1 = (1.0 - w).ln();
    let (y, mean, sd) = if n <= 11 {
        let gamma = poly(&G, an);
        if w1 >= gamma {
            return 1e-99;
        }
        (-(gamma - w1).ln(), poly(&C3, an), poly(&C4, an).exp())
    } else {
        let ln_n = an.ln();
        (w1, poly(&C5, ln_n), poly(&C6, ln_n).exp())
    };
    let z = (y - mean) / sd;
    (1.0 - std_normal().cdf(z)).clamp(0.0, 1.0)
}

/// Root mean square error between observed and simulated values.
pub fn rmse(observed: &[f64], simulated: &[f64]) -> Result<f64> {
    if observed.len() != simulated.len() {
        return Err(Error::ShapeMismatch {
            left: observed.len(),
            right: simulated.len(),
        });
    }
    if observed.is_empty() {
        return Err(Error::InsufficientSamples { given: 0, needed: 1 });
    }
    let sum: f64 = observed
        .iter()
        .zip(simulated)
        .map(|(o, s)| (o - s) * (o - s))
        .sum();
    Ok((sum / observed.len() as f64).sqrt())
}

/// Percent error relative to the observed (experimental) value.
pub fn relative_error(observed: f64, simulated: f64) -> Result<f64> {
    if observed == 0.0 {
        return Err(Error::DivisionByZero);
    }
    Ok(100.0 * (observed - simulated).abs() / observed.abs())
}

/// Type-7 sample quantile of an already sorted slice.
pub fn quantile_sorted(sorted: &[f64], p: f64) -> f64 {
    let n = sorted.len();
    let h = (n - 1) as f64 * p;
    let lo = h.floor() as usize;
    let hi = (lo + 1).min(n - 1);
    sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
}

pub fn quartile_summary(values: &[f64]) -> Result<QuartileSummary> {
    if values.is_empty() {
        return Err(Error::InsufficientSamples { given: 0, needed: 1 });
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let q1 = quantile_sorted(&sorted, 0.25);
    let q2 = quantile_sorted(&sorted, 0.5);
    let q3 = quantile_sorted(&sorted, 0.75);
    Ok(QuartileSummary {
        q1,
        q2,
        q3,
        iqr: q3 - q1,
    })
}

/// Arithmetic mean and sample (n - 1) standard deviation.
pub fn mean_and_sd(values: &[f64]) -> Result<(f64, f64)> {
    if values.is_empty() {
        return Err(Error::InsufficientSamples { given: 0, needed: 1 });
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    if values.len() == 1 {
        return Ok((mean, 0.0));
    }
    let ss: f64 = values.iter().map(|v| (v - mean) * (v - mean)).sum();
    Ok((mean, (ss / (n - 1.0)).sqrt()))
}
