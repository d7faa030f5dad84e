//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::f64::consts::PI;
use std::sync::OnceLock;

/// Five-point Gauss–Legendre rule on [−1, 1] from its closed form; exact
/// for polynomials up to degree 9.
fn gauss_legendre() -> &'static ([f64; 5], [f64; 5]) {
    static RULE: OnceLock<([f64; 5], [f64; 5])> = OnceLock::new();
    RULE.get_or_init(|| {
        let r = 2.0 * (10.0f64 / 7.0).sqrt();
        let inner = (5.0 - r).sqrt() / 3.0;
        let outer = (5.0 + r).sqrt() / 3.0;
        let s70 = 13.0 * 70f64.sqrt();
        let w_inner = (322.0 + s70) / 900.0;
        let w_outer = (322.0 - s70) / 900.0;
        (
            [-outer, -inner, 0.0, inner, outer],
            [w_outer, w_inner, 128.0 / 225.0, w_inner, w_outer],
        )
    })
}

fn panel<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> f64 {
    let (nodes, weights) = gauss_legendre();
    let mid = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    nodes
        .iter()
        .zip(weights)
        .map(|(x, w)| w * f(mid + half * x))
        .sum::<f64>()
        * half
}

fn adapt<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64, whole: f64, tol: f64, depth: u32) -> f64 {
    let mid = 0.5 * (lo + hi);
    let left = panel(f, lo, mid);
    let right = panel(f, mid, hi);
    if depth == 0 || (left + right - whole).abs() <= tol {
        return left + right;
    }
    adapt(f, lo, mid, left, tol, depth - 1) + adapt(f, mid, hi, right, tol, depth - 1)
}

/// ∫_lo^hi f by adaptive Gauss–Legendre with interval halving.
pub fn integrate<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64) -> f64 {
    // start from a few panels so oscillatory integrands are resolved
    let pieces = 64;
    let step = (hi - lo) / pieces as f64;
    (0..pieces)
        .map(|i| {
            let a = lo + i as f64 * step;
            let b = if i + 1 == pieces { hi } else { a + step };
            adapt(&f, a, b, panel(&f, a, b), 1e-16, 16)
        })
        .sum()
}

/// ∫₀¹ τ^j cos(aτ²/2 + bτ + c) dτ and the matching sine integral.
pub fn xy_quad(a: f64, b: f64, c: f64, j: i32) -> (f64, f64) {
    let phase = move |t: f64| 0.5 * a * t * t + b * t + c;
    (
        integrate(|t| t.powi(j) * phase(t).cos(), 0.0, 1.0),
        integrate(|t| t.powi(j) * phase(t).sin(), 0.0, 1.0),
    )
}

/// `πv/2` reduced modulo `2π`; exact reduction keeps large `v` accurate.
fn half_pi_phase(v: f64) -> f64 {
    0.5 * PI * (v % 4.0)
}

/// ∫₀ᵗ τ^k cos(πτ²/2) dτ and the matching sine integral.
///
/// Beyond `τ = 1` the integral is taken in `v = τ²`, where the integrand
/// varies slowly; in `τ` the rounding of the sample points alone would cost
/// about `πt·ε` per sample.
pub fn moment_quad(t: f64, k: i32) -> (f64, f64) {
    let at = t.abs();
    let near = at.min(1.0);
    let mut c = integrate(|u| u.powi(k) * half_pi_phase(u * u).cos(), 0.0, near);
    let mut s = integrate(|u| u.powi(k) * half_pi_phase(u * u).sin(), 0.0, near);
    if at > 1.0 {
        let hi = at * at;
        let lo = at.mul_add(at, -hi);
        let weight = |v: f64| 0.5 * v.powf(0.5 * (k - 1) as f64);
        c += integrate(|v| weight(v) * half_pi_phase(v).cos(), 1.0, hi);
        s += integrate(|v| weight(v) * half_pi_phase(v).sin(), 1.0, hi);
        // the rounding of t² to `hi`
        c += lo * weight(hi) * half_pi_phase(hi).cos();
        s += lo * weight(hi) * half_pi_phase(hi).sin();
    }
    if t < 0.0 && k % 2 == 0 {
        (-c, -s)
    } else {
        (c, s)
    }
}

/// Sign-change bisection for a continuous `f` on `[lo, hi]`.
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64) -> f64 {
    let mut f_lo = f(lo);
    assert!(f_lo * f(hi) <= 0.0, "no sign change in [{lo}, {hi}]");
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return mid;
        }
        if (f_mid < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Difference of two angles reduced to [−π, π].
pub fn angle_diff(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(2.0 * PI);
    if d > PI {
        d - 2.0 * PI
    } else {
        d
    }
}
