//! Generalized Fresnel integrals
//!
//! ```text
//! X_k(a,b,c) = ∫₀¹ τᵏ cos(a τ²/2 + b τ + c) dτ
//! Y_k(a,b,c) = ∫₀¹ τᵏ sin(a τ²/2 + b τ + c) dτ
//! ```
//!
//! The constant phase `c` is handled by a rotation of the `c = 0` values. For
//! `c = 0` three evaluators are provided:
//!
//! - [`eval_xy_a_large`]: completes the square in the phase and writes the
//!   integrals as binomial combinations of Fresnel momenta differences.
//! - [`eval_xy_a_small`]: power series in `a` whose coefficients are the
//!   `a = 0` integrals of higher order.
//! - [`eval_xy_a_zero`]: the `a = 0` integrals through reduced Lommel series.
//!
//! The closed form behind [`eval_xy_a_large`] subtracts quantities of size
//! `(b/a)ᵏ` to produce results of size one, so [`eval_xy`] routes to the
//! series whenever `|a|` is below the configured threshold and also whenever
//! `|b| > 8|a|` with `|a| < 4`. In the second case the series order is raised
//! until the truncation bound `(|a|/2)^{2p} cosh(|a|/2) / (2p)!` drops below
//! `1e-17`.

use crate::error::{Error, Result};
use crate::fresnel::fresnel_momenta;

/// Largest number of momenta returned by [`eval_xy`] and [`eval_xy_a_large`].
pub const MAX_XY_COUNT: usize = 3;

const EXTENDED_SERIES_MAX_A: f64 = 4.0;
const LARGE_PATH_MAX_RATIO: f64 = 8.0;
const SERIES_TARGET: f64 = 1e-17;
/// Above this `|b|` the Lommel series cancels badly for low orders; the
/// forward recurrence is used instead for orders below `|b|`, where it is
/// contracting.
const LOMMEL_MAX_B: f64 = 8.0;
const LOMMEL_MAX_TERMS: usize = 10_000;

/// Thresholds and truncation orders for the regime switches.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    /// `|a|` below this uses the series in `a`.
    pub epsilon_a: f64,
    /// Truncation order `p` of the series in `a`.
    pub series_order_p: usize,
    /// `|b|` below this uses Taylor polynomials for `X_0(0,b)`, `Y_0(0,b)`.
    pub epsilon_b: f64,
    /// Relative cutoff of the reduced Lommel series.
    pub lommel_rel_tol: f64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            epsilon_a: 1e-2,
            series_order_p: 5,
            epsilon_b: 1e-3,
            lommel_rel_tol: 1e-50,
        }
    }
}

impl EvalConfig {
    /// Truncation bound `(ε/2)^{2p} cosh(ε)` of the series at `|a| = ε`.
    pub fn remainder_bound(&self) -> f64 {
        remainder_bound(self.epsilon_a, self.series_order_p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.epsilon_a > 0.0 && self.epsilon_a.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "epsilon_a must be positive, got {}",
                self.epsilon_a
            )));
        }
        if self.series_order_p < 2 {
            return Err(Error::InvalidConfig(format!(
                "series order must be at least 2, got {}",
                self.series_order_p
            )));
        }
        let bound = self.remainder_bound();
        if bound.is_nan() || bound >= 1e-16 {
            return Err(Error::InvalidConfig(format!(
                "series remainder bound {bound:e} at |a| = {} is not below 1e-16",
                self.epsilon_a
            )));
        }
        if !(self.epsilon_b >= 0.0 && self.epsilon_b < 0.1) {
            return Err(Error::InvalidConfig(format!(
                "epsilon_b must lie in [0, 0.1), got {}",
                self.epsilon_b
            )));
        }
        if !(self.lommel_rel_tol >= 0.0 && self.lommel_rel_tol < 1e-8) {
            return Err(Error::InvalidConfig(format!(
                "lommel_rel_tol must lie in [0, 1e-8), got {}",
                self.lommel_rel_tol
            )));
        }
        Ok(())
    }
}

/// `(|a|/2)^{2p} cosh(a)`, the truncation bound of the series in `a`.
pub fn remainder_bound(a: f64, p: usize) -> f64 {
    (0.5 * a.abs()).powi(2 * p as i32) * a.cosh()
}

/// Arguments of `X_k(a,b,c)`, `Y_k(a,b,c)`; `k` is the number of momenta
/// requested (indices `0..k`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralizedParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub k: usize,
}

impl GeneralizedParams {
    pub fn new(a: f64, b: f64, c: f64, k: usize) -> Self {
        Self { a, b, c, k }
    }
}

/// Completed-square form of the phase,
/// `aτ²/2 + bτ = (π/2)·σ·(τz + ω₋)² + η`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LargeParamDecomposition {
    /// Sign of `a`.
    pub sigma: f64,
    /// `σ √(|a|/π)`, equal to `ω₊ − ω₋`.
    pub z: f64,
    /// `b / √(π|a|)`.
    pub omega_minus: f64,
    /// `ω₋ + z`.
    pub omega_plus: f64,
    /// `−b²/(2a)`.
    pub eta: f64,
}

impl LargeParamDecomposition {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite()) {
            return Err(Error::NonFinite("LargeParamDecomposition"));
        }
        if a == 0.0 {
            return Err(Error::Domain(
                "the completed-square form needs a != 0".to_string(),
            ));
        }
        let sigma = a.signum();
        let abs_a = a.abs();
        let z = sigma * (abs_a / std::f64::consts::PI).sqrt();
        let omega_minus = b / (std::f64::consts::PI * abs_a).sqrt();
        Ok(Self {
            sigma,
            z,
            omega_minus,
            omega_plus: omega_minus + z,
            eta: -b * b / (2.0 * a),
        })
    }

    /// `(π/2)·σ·(τz + ω₋)² + η`.
    pub fn phase(&self, tau: f64) -> f64 {
        let xi = tau * self.z + self.omega_minus;
        std::f64::consts::FRAC_PI_2 * self.sigma * xi * xi + self.eta
    }
}

fn check_count(k: usize) -> Result<()> {
    if k == 0 || k > MAX_XY_COUNT {
        return Err(Error::OrderOutOfRange {
            order: k,
            max: MAX_XY_COUNT,
        });
    }
    Ok(())
}

/// `X_j(a,b,c)`, `Y_j(a,b,c)` for `j = 0..k`, `1 ≤ k ≤ 3`.
pub fn eval_xy(params: &GeneralizedParams, cfg: &EvalConfig) -> Result<(Vec<f64>, Vec<f64>)> {
    let GeneralizedParams { a, b, c, k } = *params;
    if !(a.is_finite() && b.is_finite() && c.is_finite()) {
        return Err(Error::NonFinite("eval_xy"));
    }
    check_count(k)?;
    let (mut x, mut y) = match series_order(a, b, cfg) {
        Some(p) => eval_xy_a_small(a, b, k, p, cfg)?,
        None => eval_xy_a_large(a, b, k)?,
    };
    if c != 0.0 {
        let (sc, cc) = c.sin_cos();
        for (xj, yj) in x.iter_mut().zip(y.iter_mut()) {
            let (xh, yh) = (*xj, *yj);
            *xj = xh * cc - yh * sc;
            *yj = xh * sc + yh * cc;
        }
    }
    Ok((x, y))
}

/// Series order to use at `(a, b)`, or `None` for the closed form.
fn series_order(a: f64, b: f64, cfg: &EvalConfig) -> Option<usize> {
    let abs_a = a.abs();
    if abs_a < cfg.epsilon_a {
        return Some(cfg.series_order_p);
    }
    if abs_a < EXTENDED_SERIES_MAX_A && b.abs() > LARGE_PATH_MAX_RATIO * abs_a {
        return Some(extended_series_order(abs_a, cfg.series_order_p));
    }
    None
}

/// Smallest `p ≥ p_min` with `(|a|/2)^{2p} cosh(|a|/2) / (2p)! < 1e-17`.
fn extended_series_order(abs_a: f64, p_min: usize) -> usize {
    let x = 0.5 * abs_a;
    let mut p = p_min.max(1);
    // x^{2p} / (2p)!
    let mut term = (1..=2 * p).fold(1.0, |acc, i| acc * x / i as f64);
    while term * x.cosh() >= SERIES_TARGET {
        term *= x * x / ((2 * p + 1) * (2 * p + 2)) as f64;
        p += 1;
    }
    p
}

/// `X_j(a,b)`, `Y_j(a,b)` for `j = 0..k` from Fresnel momenta.
///
/// Exact for every `a ≠ 0`, but the binomial sums cancel when `|b/a|` is
/// large; [`eval_xy`] avoids that region.
pub fn eval_xy_a_large(a: f64, b: f64, k: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    check_count(k)?;
    let d = LargeParamDecomposition::new(a, b)?;
    let plus = fresnel_momenta(d.omega_plus, k - 1)?;
    let minus = fresnel_momenta(d.omega_minus, k - 1)?;
    let dc: Vec<f64> = plus.c().iter().zip(minus.c()).map(|(p, m)| p - m).collect();
    let ds: Vec<f64> = plus.s().iter().zip(minus.s()).map(|(p, m)| p - m).collect();
    let (se, ce) = d.eta.sin_cos();
    let shift = -d.omega_minus;

    let mut x = Vec::with_capacity(k);
    let mut y = Vec::with_capacity(k);
    let mut z_pow = d.z;
    for order in 0..k {
        // Σ_j C(order, j) (−ω₋)^{order−j} ΔC_j
        let mut sc = 0.0;
        let mut ss = 0.0;
        let mut binom = 1.0;
        for j in 0..=order {
            let w = binom * shift.powi((order - j) as i32);
            sc += w * dc[j];
            ss += w * ds[j];
            binom = binom * (order - j) as f64 / (j + 1) as f64;
        }
        x.push((ce * sc - d.sigma * se * ss) / z_pow);
        y.push((se * sc + d.sigma * ce * ss) / z_pow);
        z_pow *= d.z;
    }
    Ok((x, y))
}

/// `X_j(0,b)`, `Y_j(0,b)` for `j = 0..=max_order`.
///
/// Orders `j ≥ 1` use the reduced Lommel series; when `|b|` is large the
/// orders `j < |b|` are taken from the forward recurrence instead.
pub fn eval_xy_a_zero(b: f64, max_order: usize, cfg: &EvalConfig) -> Result<(Vec<f64>, Vec<f64>)> {
    if !b.is_finite() {
        return Err(Error::NonFinite("eval_xy_a_zero"));
    }
    let mut x = Vec::with_capacity(max_order + 1);
    let mut y = Vec::with_capacity(max_order + 1);
    let (sb, cb) = b.sin_cos();
    let b2 = b * b;
    if b.abs() < cfg.epsilon_b {
        x.push(1.0 - (b2 / 6.0) * (1.0 - b2 / 20.0));
        y.push(0.5 * b * (1.0 - (b2 / 12.0) * (1.0 - b2 / 30.0)));
    } else {
        x.push(sb / b);
        y.push((1.0 - cb) / b);
    }
    let d = sb - b * cb;
    for j in 1..=max_order {
        let jf = j as f64;
        if b.abs() > LOMMEL_MAX_B && jf < b.abs() {
            let xj = (sb - jf * y[j - 1]) / b;
            let yj = (jf * x[j - 1] - cb) / b;
            x.push(xj);
            y.push(yj);
            continue;
        }
        let tol = cfg.lommel_rel_tol;
        let coef_a = jf * b * sb / (1.0 + jf);
        let coef_b = d * b / (1.0 + jf);
        let coef_c = -b2 * sb / (2.0 + jf);
        let xj = coef_a * r_lommel(jf + 0.5, 1.5, b, tol)?
            + coef_b * r_lommel(jf + 1.5, 0.5, b, tol)?
            + cb / (1.0 + jf);
        let yj = coef_c * r_lommel(jf + 1.5, 1.5, b, tol)?
            + d * r_lommel(jf + 0.5, 0.5, b, tol)?
            + sb / (2.0 + jf);
        x.push(xj);
        y.push(yj);
    }
    Ok((x, y))
}

/// `X_j(a,b)`, `Y_j(a,b)` for `j = 0..k` from the series in `a` truncated
/// after `p` terms beyond the leading one.
pub fn eval_xy_a_small(
    a: f64,
    b: f64,
    k: usize,
    p: usize,
    cfg: &EvalConfig,
) -> Result<(Vec<f64>, Vec<f64>)> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::NonFinite("eval_xy_a_small"));
    }
    check_count(k)?;
    let (x0, y0) = eval_xy_a_zero(b, k + 4 * p + 2, cfg)?;
    let half_a = 0.5 * a;
    let mut x: Vec<f64> = (0..k).map(|j| x0[j] - half_a * y0[j + 2]).collect();
    let mut y: Vec<f64> = (0..k).map(|j| y0[j] + half_a * x0[j + 2]).collect();
    // t = (−1)ⁿ (a/2)^{2n} / (2n)!
    let mut t = 1.0;
    for n in 1..=p {
        let nf = n as f64;
        t *= -a * a / (8.0 * nf * (2.0 * nf - 1.0));
        let s = a / (4.0 * nf + 2.0);
        for j in 0..k {
            x[j] += t * (x0[4 * n + j] - s * y0[4 * n + j + 2]);
            y[j] += t * (y0[4 * n + j] + s * x0[4 * n + j + 2]);
        }
    }
    Ok((x, y))
}

/// Reduced Lommel series `w_{μ,ν}(b) = Σₙ (−b²)ⁿ / α_{n+1}(μ,ν)` with
/// `α_n = Π_{m=1}^{n} ((μ + 2m − 1)² − ν²)`, summed until a term falls below
/// `rel_tol` times the partial sum.
pub fn r_lommel(mu: f64, nu: f64, b: f64, rel_tol: f64) -> Result<f64> {
    if !(mu.is_finite() && nu.is_finite() && b.is_finite()) {
        return Err(Error::NonFinite("r_lommel"));
    }
    let first = (mu + nu + 1.0) * (mu - nu + 1.0);
    if first == 0.0 {
        return Err(Error::Domain(format!(
            "Lommel series with mu = {mu}, nu = {nu} has a vanishing first denominator"
        )));
    }
    let mut t = 1.0 / first;
    let mut r = t;
    let mut n = 1.0;
    let mut terms = 1;
    while t.abs() > rel_tol * r.abs() {
        let d1 = 2.0 * n + mu - nu + 1.0;
        let d2 = 2.0 * n + mu + nu + 1.0;
        if d1 == 0.0 || d2 == 0.0 {
            return Err(Error::Domain(format!(
                "Lommel series with mu = {mu}, nu = {nu} has a vanishing denominator"
            )));
        }
        t *= (-b / d1) * (b / d2);
        r += t;
        n += 1.0;
        terms += 1;
        if terms > LOMMEL_MAX_TERMS {
            break;
        }
    }
    Ok(r)
}
