//! Clothoid segments: curves whose curvature varies linearly with arc length.

use crate::error::{Error, Result};
use crate::fitter::HermiteData;
use crate::gfresnel::{eval_xy, EvalConfig, GeneralizedParams};

/// A clothoid segment
///
/// ```text
/// x(s) = x0 + ∫₀ˢ cos(κ′τ²/2 + κτ + ϑ0) dτ
/// y(s) = y0 + ∫₀ˢ sin(κ′τ²/2 + κτ + ϑ0) dτ
/// ```
///
/// for `0 ≤ s ≤ L`. The evaluators accept any finite `s`; outside `[0, L]`
/// they extrapolate the same spiral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClothoidCurve {
    pub x0: f64,
    pub y0: f64,
    pub theta0: f64,
    pub kappa: f64,
    pub kappa_prime: f64,
    pub length: f64,
}

/// One row of a sampled clothoid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleRow {
    pub s: f64,
    pub x: f64,
    pub y: f64,
    pub theta: f64,
    pub kappa: f64,
}

impl ClothoidCurve {
    pub fn new(
        x0: f64,
        y0: f64,
        theta0: f64,
        kappa: f64,
        kappa_prime: f64,
        length: f64,
    ) -> Result<Self> {
        let fields = [x0, y0, theta0, kappa, kappa_prime, length];
        if fields.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("ClothoidCurve"));
        }
        if length <= 0.0 {
            return Err(Error::Domain(format!(
                "clothoid length must be positive, got {length}"
            )));
        }
        Ok(Self {
            x0,
            y0,
            theta0,
            kappa,
            kappa_prime,
            length,
        })
    }

    /// Position at arc length `s`.
    pub fn point_at(&self, s: f64) -> Result<(f64, f64)> {
        self.point_at_with(s, &EvalConfig::default())
    }

    pub fn point_at_with(&self, s: f64, cfg: &EvalConfig) -> Result<(f64, f64)> {
        if !s.is_finite() {
            return Err(Error::NonFinite("point_at"));
        }
        if s == 0.0 {
            return Ok((self.x0, self.y0));
        }
        let params = GeneralizedParams::new(self.kappa_prime * s * s, self.kappa * s, self.theta0, 1);
        let (x, y) = eval_xy(&params, cfg)?;
        Ok((self.x0 + s * x[0], self.y0 + s * y[0]))
    }

    /// Tangent angle `ϑ0 + κs + κ′s²/2`.
    pub fn angle_at(&self, s: f64) -> f64 {
        self.theta0 + s * (self.kappa + 0.5 * self.kappa_prime * s)
    }

    /// Curvature `κ + κ′s`.
    pub fn curvature_at(&self, s: f64) -> f64 {
        self.kappa + self.kappa_prime * s
    }

    /// `n ≥ 2` equally spaced rows from `s = 0` to `s = L`.
    pub fn sample(&self, n: usize) -> Result<Vec<SampleRow>> {
        if n < 2 {
            return Err(Error::TooFewSamples(n));
        }
        let step = self.length / (n - 1) as f64;
        (0..n)
            .map(|i| {
                let s = if i == n - 1 { self.length } else { i as f64 * step };
                let (x, y) = self.point_at(s)?;
                Ok(SampleRow {
                    s,
                    x,
                    y,
                    theta: self.angle_at(s),
                    kappa: self.curvature_at(s),
                })
            })
            .collect()
    }

    /// Distance between the curve end and the target end point of `data`.
    pub fn endpoint_residual(&self, data: &HermiteData) -> Result<f64> {
        let (x, y) = self.point_at(self.length)?;
        Ok((x - data.x1).hypot(y - data.y1))
    }
}
