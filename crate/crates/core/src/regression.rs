//! Ordinary least squares of temperature on pipe length.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SamplePoint {
    /// Length along the pipe, meters.
    pub x: f64,
    /// Temperature, °C.
    pub y: f64,
}

impl SamplePoint {
    pub fn new(x: f64, y: f64) -> Self {
        SamplePoint { x, y }
    }
}

/// Result of a simple linear fit `y = alpha + beta * x`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LinearFit {
    pub alpha: f64,
    pub beta: f64,
    pub r_squared: f64,
    pub n: usize,
}

impl LinearFit {
    /// Regression temperature at length `x`. No clamping.
    pub fn predict_at(&self, x: f64) -> f64 {
        self.alpha + self.beta * x
    }
}

/// Two-pass (mean-centered) least squares.
pub fn fit_ols(points: &[SamplePoint]) -> Result<LinearFit> {
    let n = points.len();
    if n < 2 {
        return Err(Error::InsufficientSamples { given: n, needed: 2 });
    }
    if points.iter().all(|p| p.x == points[0].x) {
        return Err(Error::DegenerateAbscissa);
    }
    if points.iter().all(|p| p.y == points[0].y) {
        return Err(Error::DegenerateVariance);
    }
    let nf = n as f64;
    let x_mean = points.iter().map(|p| p.x).sum::<f64>() / nf;
    let y_mean = points.iter().map(|p| p.y).sum::<f64>() / nf;

    let (mut sxx, mut sxy, mut syy) = (0.0, 0.0, 0.0);
    for p in points {
        let dx = p.x - x_mean;
        let dy = p.y - y_mean;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }

    let beta = sxy / sxx;
    let alpha = y_mean - beta * x_mean;
    let sse: f64 = points
        .iter()
        .map(|p| {
            let r = p.y - (alpha + beta * p.x);
            r * r
        })
        .sum();
    let r_squared = (1.0 - sse / syy).clamp(0.0, 1.0);

    Ok(LinearFit {
        alpha,
        beta,
        r_squared,
        n,
    })
}

/// Convenience wrapper pairing a length grid with a series.
pub fn fit_series(grid: &[f64], values: &[f64]) -> Result<LinearFit> {
    if grid.len() != values.len() {
        return Err(Error::ShapeMismatch {
            left: grid.len(),
            right: values.len(),
        });
    }
    let points: Vec<SamplePoint> = grid
        .iter()
        .zip(values)
        .map(|(&x, &y)| SamplePoint::new(x, y))
        .collect();
    fit_ols(&points)
}
