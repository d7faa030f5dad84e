//! G1 Hermite interpolation with one clothoid segment.
//!
//! With `A = κ′L²/2` and `B = κL` the three interpolation conditions reduce to
//! a scalar equation in `A`:
//!
//! ```text
//! g(A) = Y_0(2A, δ − A, φ0) = 0
//! L    = r / X_0(2A, δ − A, φ0)
//! κ    = (δ − A) / L,   κ′ = 2A / L²
//! ```
//!
//! where `r`, `φ` are the polar coordinates of the chord and `φ0`, `φ1` the
//! end tangent angles measured from the chord. The root is found by Newton's
//! method started from a fitted guess and kept inside the bracket
//! `[−A_max, A_max]` where it is known to be unique.

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::fmt;
use std::str::FromStr;

use crate::clothoid::ClothoidCurve;
use crate::error::{Error, Result};
use crate::gfresnel::{eval_xy, EvalConfig, GeneralizedParams};

/// Angular tolerance for detecting the excluded corner `φ0 = −φ1 = ±π`.
pub const EXCLUDED_ANGLE_TOL: f64 = 1e-12;
/// `|g′(A)|` below this is treated as a vanishing derivative.
pub const DERIVATIVE_FLOOR: f64 = 1e-30;

/// Largest relative final correction applied after the tolerance is met.
const POLISH_LIMIT: f64 = 1e-6;
const BRACKET_PANELS: usize = 64;
const MAX_BISECTIONS: usize = 200;

/// Interpolation input: two points with their tangent angles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermiteData {
    pub x0: f64,
    pub y0: f64,
    pub theta0: f64,
    pub x1: f64,
    pub y1: f64,
    pub theta1: f64,
}

impl HermiteData {
    pub fn new(x0: f64, y0: f64, theta0: f64, x1: f64, y1: f64, theta1: f64) -> Self {
        Self {
            x0,
            y0,
            theta0,
            x1,
            y1,
            theta1,
        }
    }
}

/// Hermite data expressed in the chord frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedProblem {
    /// Chord length.
    pub r: f64,
    /// Chord direction.
    pub varphi: f64,
    pub phi0: f64,
    pub phi1: f64,
    /// `phi1 − phi0`.
    pub delta: f64,
}

impl ReducedProblem {
    /// Builds the reduced problem directly from chord-relative angles, which
    /// are normalized to `[−π, π]`.
    pub fn from_angles(r: f64, phi0: f64, phi1: f64) -> Result<Self> {
        if !(r.is_finite() && phi0.is_finite() && phi1.is_finite()) {
            return Err(Error::NonFinite("ReducedProblem"));
        }
        if r <= 0.0 {
            return Err(Error::DegenerateInput);
        }
        let phi0 = normalize_angle(phi0);
        let phi1 = normalize_angle(phi1);
        Ok(Self {
            r,
            varphi: 0.0,
            phi0,
            phi1,
            delta: phi1 - phi0,
        })
    }
}

/// Least-squares coefficients of the guess formulas for the root `A(φ0, φ1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GuessCoefficients {
    pub c: [f64; 3],
    pub d: [f64; 6],
}

impl GuessCoefficients {
    pub const DEFAULT: Self = Self {
        c: [3.070645, 0.947923, -0.673029],
        d: [2.989696, 0.71622, -0.458969, -0.502821, 0.26106, -0.045854],
    };
}

impl Default for GuessCoefficients {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// Which guess formula seeds Newton's method.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum GuessVariant {
    /// `3(φ0 + φ1)`, from `sin x ≈ x` in `g`.
    Linear,
    /// Three-coefficient fit.
    Cubic,
    /// Six-coefficient fit.
    #[default]
    Quintic,
}

impl GuessVariant {
    pub const ALL: [GuessVariant; 3] = [Self::Linear, Self::Cubic, Self::Quintic];
}

impl fmt::Display for GuessVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Linear => "linear",
            Self::Cubic => "cubic",
            Self::Quintic => "quintic",
        })
    }
}

impl FromStr for GuessVariant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "linear" => Ok(Self::Linear),
            "cubic" => Ok(Self::Cubic),
            "quintic" => Ok(Self::Quintic),
            other => Err(format!(
                "unknown guess variant '{other}' (expected linear, cubic or quintic)"
            )),
        }
    }
}

/// Solver settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitConfig {
    /// Newton stops once `|g(A)| ≤ tol`.
    pub tol: f64,
    pub max_iter: usize,
    pub guess_variant: GuessVariant,
    pub eval: EvalConfig,
}

impl Default for FitConfig {
    fn default() -> Self {
        Self {
            tol: 1e-12,
            max_iter: 100,
            guess_variant: GuessVariant::Quintic,
            eval: EvalConfig::default(),
        }
    }
}

impl FitConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "tolerance must be positive, got {}",
                self.tol
            )));
        }
        if self.max_iter == 0 {
            return Err(Error::InvalidConfig(
                "max_iter must be at least 1".to_string(),
            ));
        }
        self.eval.validate()
    }
}

/// A solved interpolation problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitResult {
    pub curve: ClothoidCurve,
    /// Root of `g`, `κ′L²/2`.
    pub a: f64,
    /// `δ − A`, equal to `κL`.
    pub b: f64,
    /// Evaluations of `g` by the solver, the one at the initial guess
    /// included; an exact guess counts as one.
    pub iterations: usize,
    /// `|g(A)|` at exit.
    pub residual_g: f64,
    /// Distance from the curve end to `(x1, y1)`.
    pub endpoint_error: f64,
}

/// Maps `phi` into `[−π, π]` by adding multiples of `2π`; `±π` are kept.
pub fn normalize_angle(phi: f64) -> f64 {
    let mut phi = phi;
    if phi.abs() > 64.0 * PI {
        phi %= TAU;
    }
    while phi > PI {
        phi -= TAU;
    }
    while phi < -PI {
        phi += TAU;
    }
    phi
}

/// Chord-frame form of the Hermite data.
pub fn reduce(data: &HermiteData) -> Result<ReducedProblem> {
    let HermiteData {
        x0,
        y0,
        theta0,
        x1,
        y1,
        theta1,
    } = *data;
    if [x0, y0, theta0, x1, y1, theta1].iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite("reduce"));
    }
    let dx = x1 - x0;
    let dy = y1 - y0;
    let r = dx.hypot(dy);
    if r == 0.0 {
        return Err(Error::DegenerateInput);
    }
    let varphi = dy.atan2(dx);
    let phi0 = normalize_angle(theta0 - varphi);
    let phi1 = normalize_angle(theta1 - varphi);
    Ok(ReducedProblem {
        r,
        varphi,
        phi0,
        phi1,
        delta: phi1 - phi0,
    })
}

fn xy_at(a: f64, rp: &ReducedProblem, cfg: &EvalConfig, k: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    eval_xy(&GeneralizedParams::new(2.0 * a, rp.delta - a, rp.phi0, k), cfg)
}

/// `g(A) = Y_0(2A, δ − A, φ0)`.
pub fn g_eval(a: f64, rp: &ReducedProblem, cfg: &EvalConfig) -> Result<f64> {
    Ok(xy_at(a, rp, cfg, 1)?.1[0])
}

/// `g′(A) = X_2(2A, δ − A, φ0) − X_1(2A, δ − A, φ0)`.
pub fn g_prime(a: f64, rp: &ReducedProblem, cfg: &EvalConfig) -> Result<f64> {
    let (x, _) = xy_at(a, rp, cfg, 3)?;
    Ok(x[2] - x[1])
}

/// `h(A) = X_0(2A, δ − A, φ0)`.
pub fn h_eval(a: f64, rp: &ReducedProblem, cfg: &EvalConfig) -> Result<f64> {
    Ok(xy_at(a, rp, cfg, 1)?.0[0])
}

fn g_and_prime(a: f64, rp: &ReducedProblem, cfg: &EvalConfig) -> Result<(f64, f64)> {
    let (x, y) = xy_at(a, rp, cfg, 3)?;
    Ok((y[0], x[2] - x[1]))
}

/// Starting point for Newton's method.
pub fn initial_guess(phi0: f64, phi1: f64, variant: GuessVariant, coeffs: &GuessCoefficients) -> f64 {
    let sum = phi0 + phi1;
    let p0 = phi0 / PI;
    let p1 = phi1 / PI;
    let prod = p0 * p1;
    let sq = p0 * p0 + p1 * p1;
    match variant {
        GuessVariant::Linear => 3.0 * sum,
        GuessVariant::Cubic => {
            let [c1, c2, c3] = coeffs.c;
            sum * (c1 + c2 * prod + c3 * sq)
        }
        GuessVariant::Quintic => {
            let [d1, d2, d3, d4, d5, d6] = coeffs.d;
            let quartic = p0.powi(4) + p1.powi(4);
            sum * (d1 + prod * (d2 + d3 * prod) + sq * (d4 + d5 * prod) + d6 * quartic)
        }
    }
}

fn is_excluded(phi0: f64, phi1: f64) -> bool {
    (phi0.abs() - PI).abs() <= EXCLUDED_ANGLE_TOL
        && (phi1.abs() - PI).abs() <= EXCLUDED_ANGLE_TOL
        && phi0 * phi1 < 0.0
}

fn sign(v: f64) -> f64 {
    if v > 0.0 {
        1.0
    } else if v < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// Half-width of the bracket `[−A_max, A_max]` holding the unique root.
pub fn a_max_bound(phi0: f64, phi1: f64) -> Result<f64> {
    if !(phi0.is_finite() && phi1.is_finite()) {
        return Err(Error::NonFinite("a_max_bound"));
    }
    if is_excluded(phi0, phi1) {
        return Err(Error::ExcludedAngles { phi0, phi1 });
    }
    let delta = (phi1 - phi0).abs();
    // start angle after reversing and/or mirroring into |φ0| ≤ φ1
    let canonical_phi0 = if phi1.abs() >= phi0.abs() {
        sign(phi1) * phi0
    } else {
        sign(phi0) * phi1
    };
    let theta_max = (FRAC_PI_2 + canonical_phi0).max(0.0);
    if theta_max == 0.0 {
        return Ok(delta);
    }
    Ok(delta + 2.0 * theta_max * (1.0 + (1.0 + delta / theta_max).sqrt()))
}

/// Root of `g` inside `[−A_max, A_max]` and the number of `g` evaluations.
pub fn solve_a(rp: &ReducedProblem, cfg: &FitConfig) -> Result<(f64, usize)> {
    let a_max = a_max_bound(rp.phi0, rp.phi1)?;
    let eval = &cfg.eval;
    let mut a = initial_guess(rp.phi0, rp.phi1, cfg.guess_variant, &GuessCoefficients::DEFAULT);
    let mut iterations = 0;
    loop {
        let (g, dg) = g_and_prime(a, rp, eval)?;
        iterations += 1;
        if g.abs() <= cfg.tol {
            if a.abs() <= a_max * (1.0 + 1e-9) + 1e-9 {
                // the step from this evaluation is free and squares the residual
                let polished = a - g / dg;
                if polished.is_finite() && (polished - a).abs() <= POLISH_LIMIT * (1.0 + a.abs()) {
                    a = polished;
                }
                return Ok((a, iterations));
            }
            // a root of another winding; look inside the bracket instead
            return bisect_in_bracket(rp, cfg, a_max, a, iterations);
        }
        if iterations >= cfg.max_iter {
            return Err(Error::NoConvergence {
                last: a,
                iterations,
                residual: g.abs(),
            });
        }
        if dg.abs() < DERIVATIVE_FLOOR {
            return bisect_in_bracket(rp, cfg, a_max, a, iterations);
        }
        let next = a - g / dg;
        if !next.is_finite() || next.abs() > 2.0 * a_max.max(f64::MIN_POSITIVE) {
            return bisect_in_bracket(rp, cfg, a_max, a, iterations);
        }
        a = next;
    }
}

/// Bisection on the sign change of `g` in `[−A_max, A_max]` closest to `near`.
fn bisect_in_bracket(
    rp: &ReducedProblem,
    cfg: &FitConfig,
    a_max: f64,
    near: f64,
    mut iterations: usize,
) -> Result<(f64, usize)> {
    let eval = &cfg.eval;
    let step = 2.0 * a_max / BRACKET_PANELS as f64;
    let nodes: Vec<f64> = (0..=BRACKET_PANELS)
        .map(|i| if i == BRACKET_PANELS { a_max } else { -a_max + i as f64 * step })
        .collect();
    let values = nodes
        .iter()
        .map(|&a| g_eval(a, rp, eval))
        .collect::<Result<Vec<f64>>>()?;

    if let Some(i) = values.iter().position(|g| g.abs() <= cfg.tol) {
        return Ok((nodes[i], iterations));
    }
    let (mut lo, mut hi, mut g_lo) = (0..BRACKET_PANELS)
        .filter(|&i| values[i].signum() != values[i + 1].signum())
        .map(|i| (nodes[i], nodes[i + 1], values[i]))
        .min_by(|p, q| {
            let dp = (0.5 * (p.0 + p.1) - near).abs();
            let dq = (0.5 * (q.0 + q.1) - near).abs();
            dp.total_cmp(&dq)
        })
        .ok_or(Error::SingularDerivative { at: near })?;

    for _ in 0..MAX_BISECTIONS {
        let mid = 0.5 * (lo + hi);
        let g_mid = g_eval(mid, rp, eval)?;
        iterations += 1;
        if g_mid.abs() <= cfg.tol || mid == lo || mid == hi {
            return Ok((mid, iterations));
        }
        if g_mid.signum() == g_lo.signum() {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }
    let mid = 0.5 * (lo + hi);
    Err(Error::NoConvergence {
        last: mid,
        iterations,
        residual: g_eval(mid, rp, eval)?.abs(),
    })
}

/// Fits the clothoid segment interpolating `data`.
pub fn build_clothoid(data: &HermiteData, cfg: &FitConfig) -> Result<FitResult> {
    cfg.validate()?;
    let rp = reduce(data)?;
    let (a, iterations) = solve_a(&rp, cfg)?;
    let (x, y) = xy_at(a, &rp, &cfg.eval, 1)?;
    let (h, g) = (x[0], y[0]);
    if h <= 0.0 {
        return Err(Error::Inconsistent { a, h });
    }
    let length = rp.r / h;
    let b = rp.delta - a;
    let curve = ClothoidCurve::new(
        data.x0,
        data.y0,
        data.theta0,
        b / length,
        2.0 * a / (length * length),
        length,
    )?;
    let endpoint_error = curve.endpoint_residual(data)?;
    Ok(FitResult {
        curve,
        a,
        b,
        iterations,
        residual_g: g.abs(),
        endpoint_error,
    })
}
