//! Reference fitting problems and the guess-quality grid experiment.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fitter::{build_clothoid, solve_a, FitConfig, HermiteData, ReducedProblem};

/// Largest endpoint error accepted for any reference case.
pub const MAX_ENDPOINT_ERROR: f64 = 1e-12;
/// Iteration limit accepted for the generic cases (Tests 1–6).
pub const MAX_ITER_GENERIC: usize = 5;
/// Iteration limit accepted for the near-line and near-circle families.
pub const MAX_ITER_FAMILY: usize = 4;
/// Angle range of the grid experiment, as a fraction of `π`.
pub const GRID_EXTENT: f64 = 0.9999;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchCase {
    pub name: String,
    pub data: HermiteData,
    pub max_iterations: usize,
}

/// Tests 1–6, then the families 7 and 8 for `k = 1..=10`.
// the published data is rounded to 5 decimals; keep it that way
#[allow(clippy::approx_constant)]
pub fn reference_cases() -> Vec<BenchCase> {
    let generic = [
        (5.0, 4.0, PI / 3.0, 5.0, 6.0, 7.0 * PI / 6.0),
        (3.0, 5.0, 2.14676, 6.0, 5.0, 2.86234),
        (3.0, 6.0, 3.05433, 6.0, 6.0, 3.14159),
        (3.0, 6.0, 0.08727, 6.0, 6.0, 3.05433),
        (5.0, 4.0, 0.34907, 4.0, 5.0, 4.48550),
        (4.0, 4.0, 0.52360, 5.0, 5.0, 4.66003),
    ];
    let mut cases: Vec<BenchCase> = generic
        .iter()
        .enumerate()
        .map(|(i, &(x0, y0, t0, x1, y1, t1))| BenchCase {
            name: format!("test{}", i + 1),
            data: HermiteData::new(x0, y0, t0, x1, y1, t1),
            max_iterations: MAX_ITER_GENERIC,
        })
        .collect();
    for k in 1..=10 {
        let scale = 2f64.powi(-k);
        cases.push(BenchCase {
            name: format!("test7 k={k}"),
            data: HermiteData::new(0.0, 0.0, 0.01 * scale, 100.0, 0.0, -0.02 * scale),
            max_iterations: MAX_ITER_FAMILY,
        });
    }
    for k in 1..=10 {
        let scale = 2f64.powi(-k);
        cases.push(BenchCase {
            name: format!("test8 k={k}"),
            data: HermiteData::new(
                0.0,
                -100.0,
                0.00011 * scale,
                -100.0,
                0.0,
                1.5 * PI - 0.0001 * scale,
            ),
            max_iterations: MAX_ITER_FAMILY,
        });
    }
    cases
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub name: String,
    /// `None` when the fit failed; `error` then holds the message.
    pub iterations: Option<usize>,
    pub endpoint_error: Option<f64>,
    pub elapsed: Duration,
    pub error: Option<String>,
    pub pass: bool,
}

pub fn run_case(case: &BenchCase, cfg: &FitConfig) -> BenchRow {
    let start = Instant::now();
    let fit = build_clothoid(&case.data, cfg);
    let elapsed = start.elapsed();
    match fit {
        Ok(fit) => BenchRow {
            name: case.name.clone(),
            iterations: Some(fit.iterations),
            endpoint_error: Some(fit.endpoint_error),
            elapsed,
            error: None,
            pass: fit.iterations <= case.max_iterations && fit.endpoint_error <= MAX_ENDPOINT_ERROR,
        },
        Err(e) => BenchRow {
            name: case.name.clone(),
            iterations: None,
            endpoint_error: None,
            elapsed,
            error: Some(e.to_string()),
            pass: false,
        },
    }
}

pub fn run_bench(cfg: &FitConfig) -> Vec<BenchRow> {
    reference_cases().iter().map(|c| run_case(c, cfg)).collect()
}

/// Iteration histogram over a square grid of chord-relative angles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridStats {
    pub grid_n: usize,
    /// `histogram[i]` counts the cells solved in exactly `i` iterations.
    pub histogram: Vec<usize>,
    /// Cells where the solver returned an error.
    pub failures: usize,
}

impl GridStats {
    pub fn total(&self) -> usize {
        self.grid_n * self.grid_n
    }

    pub fn max_iterations(&self) -> Option<usize> {
        self.histogram.iter().rposition(|&c| c > 0)
    }

    /// Fraction of all cells solved in at most `k` iterations.
    pub fn fraction_at_most(&self, k: usize) -> f64 {
        let n: usize = self.histogram.iter().take(k + 1).sum();
        n as f64 / self.total() as f64
    }

    fn merge(mut self, other: Self) -> Self {
        if other.histogram.len() > self.histogram.len() {
            self.histogram.resize(other.histogram.len(), 0);
        }
        for (acc, c) in self.histogram.iter_mut().zip(&other.histogram) {
            *acc += c;
        }
        self.failures += other.failures;
        self
    }
}

/// `grid_n` equally spaced angles covering `±GRID_EXTENT·π` inclusive.
pub fn grid_angles(grid_n: usize) -> Vec<f64> {
    let lo = -GRID_EXTENT * PI;
    let step = 2.0 * GRID_EXTENT * PI / (grid_n - 1) as f64;
    (0..grid_n)
        .map(|i| if i + 1 == grid_n { -lo } else { lo + i as f64 * step })
        .collect()
}

/// Solves `g(A) = 0` on every cell of the `grid_n × grid_n` angle grid.
///
/// The parallel and serial runs produce identical statistics.
pub fn grid_stats(grid_n: usize, cfg: &FitConfig, parallel: bool) -> Result<GridStats> {
    if grid_n < 2 {
        return Err(Error::InvalidConfig(format!(
            "grid size must be at least 2, got {grid_n}"
        )));
    }
    cfg.validate()?;
    let angles = grid_angles(grid_n);
    let empty = || GridStats {
        grid_n,
        histogram: Vec::new(),
        failures: 0,
    };
    let row = |&phi0: &f64| {
        let mut stats = empty();
        for &phi1 in &angles {
            let solved = ReducedProblem::from_angles(1.0, phi0, phi1).and_then(|rp| solve_a(&rp, cfg));
            match solved {
                Ok((_, it)) => {
                    if it >= stats.histogram.len() {
                        stats.histogram.resize(it + 1, 0);
                    }
                    stats.histogram[it] += 1;
                }
                Err(_) => stats.failures += 1,
            }
        }
        stats
    };
    let stats = if parallel {
        angles.par_iter().map(row).reduce(empty, GridStats::merge)
    } else {
        angles.iter().map(row).fold(empty(), GridStats::merge)
    };
    Ok(stats)
}
