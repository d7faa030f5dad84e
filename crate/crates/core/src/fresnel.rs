//! Fresnel integrals
//!
//! ```text
//! C(t) = ∫₀ᵗ cos(πτ²/2) dτ,    S(t) = ∫₀ᵗ sin(πτ²/2) dτ
//! ```
//!
//! and their momenta `C_k(t)`, `S_k(t)` (the same integrands weighted by `τᵏ`)
//! for `k ≤ 3`.
//!
//! Three regimes are used for the base integrals:
//!
//! - `|t| ≤ 1.6`: Maclaurin series.
//! - `1.6 < |t| ≤ 6`: Chebyshev expansions of the auxiliary functions `f`, `g`
//!   in the variable `u = (1.6/t)²`.
//! - `|t| > 6`: asymptotic expansions of `f`, `g`, truncated at the smallest
//!   term.
//!
//! with `C = ½ + f·sin(πt²/2) − g·cos(πt²/2)` and
//! `S = ½ − f·cos(πt²/2) − g·sin(πt²/2)`. The phase `πt²/2` is reduced with an
//! exact split of `t²`, so large arguments do not lose digits in the
//! trigonometric factors.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};

/// Largest momentum order supported by [`fresnel_momenta`].
pub const MAX_MOMENTUM_ORDER: usize = 3;

const SERIES_LIMIT: f64 = 1.6;
const CHEBYSHEV_LIMIT: f64 = 6.0;
/// `(SERIES_LIMIT / CHEBYSHEV_LIMIT)²`, the lower end of the `u` interval.
const U_MIN: f64 = (SERIES_LIMIT / CHEBYSHEV_LIMIT) * (SERIES_LIMIT / CHEBYSHEV_LIMIT);

// Chebyshev coefficients on u ∈ [U_MIN, 1] of
//   π·t·f(t)       (AUX_F)
//   π²·t³·g(t)     (AUX_G)
// with t = 1.6/√u.
#[allow(clippy::excessive_precision)]
const AUX_F: [f64; 30] = [
    9.8559036279339063681e-1,
    -1.7222346270974770319e-2,
    -2.6535320618112425928e-3,
    3.7944103399960959495e-4,
    -1.9263623988187161462e-5,
    -3.9616606914235523815e-6,
    1.4123023494501871801e-6,
    -2.4230594010772145644e-7,
    1.7073759508429559134e-8,
    5.1377394297968850179e-9,
    -2.6306409706106438032e-9,
    7.0100174844237974237e-10,
    -1.2140807358861309683e-10,
    5.93009429577648804e-12,
    5.6126706080129869009e-12,
    -2.9412562646902639023e-12,
    9.4510626939594286871e-13,
    -2.2169763940833243219e-13,
    3.176414391271185427e-14,
    2.8466103390794664597e-15,
    -4.2885872798692125725e-15,
    2.0136022811282141002e-15,
    -6.8495393357694101233e-16,
    1.8215840759545928729e-16,
    -3.3889254934015918349e-17,
    6.8807687913419998726e-19,
    3.1582887892147906308e-18,
    -1.9336176132849299485e-18,
    8.0810516480878626789e-19,
    -2.7245945035932559884e-19,
];
#[allow(clippy::excessive_precision)]
const AUX_G: [f64; 33] = [
    9.3769652407883172221e-1,
    -7.1993886029265178198e-2,
    -8.390039113446404833e-3,
    2.254463475728432721e-3,
    -2.3798066291724034467e-4,
    -1.0559561986454555413e-5,
    1.1221242121303161844e-5,
    -2.9162778733658306642e-6,
    4.2855678317789462796e-7,
    9.5610134531609869632e-10,
    -2.4992592573651455667e-8,
    9.954756881438448782e-9,
    -2.5233615245242593954e-9,
    4.0331404801799295671e-10,
    4.7195402834688233545e-12,
    -3.39355711998171089e-11,
    1.6149327426235275866e-11,
    -5.1885431674512438233e-12,
    1.2327162390508104078e-12,
    -1.7163422320974079927e-13,
    -2.4768760611229425032e-14,
    3.0407326718747337859e-14,
    -1.4523684902637629973e-14,
    5.1300994429827937151e-15,
    -1.4324423988029636137e-15,
    2.8643039525065192438e-16,
    -1.2284471588215542977e-17,
    -2.4932663913050377012e-17,
    1.6685219564755378943e-17,
    -7.4189352607912530929e-18,
    2.6607332437343586752e-18,
    -7.864573435340632138e-19,
    1.7572496827448492126e-19,
];

/// Momenta `C_0..C_k`, `S_0..S_k` of the Fresnel integrals at one argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FresnelMomenta {
    pub t: f64,
    order: usize,
    c: [f64; MAX_MOMENTUM_ORDER + 1],
    s: [f64; MAX_MOMENTUM_ORDER + 1],
}

impl FresnelMomenta {
    /// Highest order stored.
    pub fn order(&self) -> usize {
        self.order
    }

    /// `C_0(t), ..., C_k(t)`.
    pub fn c(&self) -> &[f64] {
        &self.c[..=self.order]
    }

    /// `S_0(t), ..., S_k(t)`.
    pub fn s(&self) -> &[f64] {
        &self.s[..=self.order]
    }
}

/// Standard Fresnel integrals `(C(t), S(t))`.
pub fn fresnel(t: f64) -> Result<(f64, f64)> {
    if !t.is_finite() {
        return Err(Error::NonFinite("fresnel"));
    }
    let at = t.abs();
    let (c, s) = if at <= SERIES_LIMIT {
        fresnel_series(at)
    } else {
        let (f, g) = if at <= CHEBYSHEV_LIMIT {
            auxiliary_chebyshev(at)
        } else {
            auxiliary_asymptotic(at)
        };
        if f == 0.0 && g == 0.0 {
            (0.5, 0.5)
        } else {
            let (sn, cs) = sin_cos_half_pi_sq(at);
            (0.5 + f * sn - g * cs, 0.5 - f * cs - g * sn)
        }
    };
    Ok((c.copysign(t), s.copysign(t)))
}

/// Momenta of the Fresnel integrals up to order `k`, `0 ≤ k ≤ 3`.
///
/// Orders 1 and 2 come from closed forms; order 3 from the integration-by-parts
/// recurrence
///
/// ```text
/// C_{k+1} = (tᵏ sin(πt²/2) − k S_{k−1}) / π
/// S_{k+1} = (k C_{k−1} − tᵏ cos(πt²/2)) / π
/// ```
///
/// which is unstable for large `k`, hence the cap.
pub fn fresnel_momenta(t: f64, k: usize) -> Result<FresnelMomenta> {
    if k > MAX_MOMENTUM_ORDER {
        return Err(Error::OrderOutOfRange {
            order: k,
            max: MAX_MOMENTUM_ORDER,
        });
    }
    let (c0, s0) = fresnel(t)?;
    let mut m = FresnelMomenta {
        t,
        order: k,
        c: [0.0; MAX_MOMENTUM_ORDER + 1],
        s: [0.0; MAX_MOMENTUM_ORDER + 1],
    };
    m.c[0] = c0;
    m.s[0] = s0;
    if k == 0 {
        return Ok(m);
    }
    let (sn, cs) = sin_cos_half_pi_sq(t);
    // 1 − cos(πt²/2) = 2 sin²(πt²/4), without cancellation near t = 0
    let (sq, _) = sin_cos_quarter_pi_sq(t);
    m.c[1] = sn / PI;
    m.s[1] = 2.0 * sq * sq / PI;
    if k >= 2 {
        m.c[2] = (t * sn - s0) / PI;
        m.s[2] = (c0 - t * cs) / PI;
    }
    if k >= 3 {
        let t2 = t * t;
        m.c[3] = (t2 * sn - 2.0 * m.s[1]) / PI;
        m.s[3] = (2.0 * m.c[1] - t2 * cs) / PI;
    }
    Ok(m)
}

/// `(sin(πt²/2), cos(πt²/2))` with `t²` split exactly and reduced modulo 4.
pub(crate) fn sin_cos_half_pi_sq(t: f64) -> (f64, f64) {
    let x = reduced_square(t, 4.0);
    (FRAC_PI_2 * x).sin_cos()
}

/// `(sin(πt²/4), cos(πt²/4))`, reduced modulo 8.
fn sin_cos_quarter_pi_sq(t: f64) -> (f64, f64) {
    let x = reduced_square(t, 8.0);
    (0.25 * PI * x).sin_cos()
}

/// `t² mod period`, centered on zero, computed from the exact product
/// `t² = hi + lo`. `period` must be a power of two.
fn reduced_square(t: f64, period: f64) -> f64 {
    let hi = t * t;
    if !hi.is_finite() {
        return f64::NAN;
    }
    let lo = t.mul_add(t, -hi);
    // hi and the multiple of `period` share a common ulp, so this is exact
    let r = hi - period * (hi / period).round();
    r + lo
}

fn fresnel_series(t: f64) -> (f64, f64) {
    let x = FRAC_PI_2 * t * t;
    let x2 = x * x;
    let mut p = 1.0; // (−1)ⁿ x²ⁿ / (2n)!
    let mut q = x; // (−1)ⁿ x²ⁿ⁺¹ / (2n+1)!
    let mut c = 1.0;
    let mut s = q / 3.0;
    for n in 1..60 {
        let nf = n as f64;
        p *= -x2 / ((2.0 * nf - 1.0) * (2.0 * nf));
        q *= -x2 / ((2.0 * nf) * (2.0 * nf + 1.0));
        let dc = p / (4.0 * nf + 1.0);
        let ds = q / (4.0 * nf + 3.0);
        c += dc;
        s += ds;
        if dc.abs() <= 1e-17 * c.abs() && ds.abs() <= 1e-17 * s.abs().max(1e-300) {
            break;
        }
    }
    (t * c, t * s)
}

fn auxiliary_chebyshev(t: f64) -> (f64, f64) {
    let u = (SERIES_LIMIT / t) * (SERIES_LIMIT / t);
    let x = (2.0 * u - (1.0 + U_MIN)) / (1.0 - U_MIN);
    let f = clenshaw(&AUX_F, x) / (PI * t);
    let g = clenshaw(&AUX_G, x) / (PI * PI * t * t * t);
    (f, g)
}

fn auxiliary_asymptotic(t: f64) -> (f64, f64) {
    if t > 1e150 {
        return (0.0, 0.0);
    }
    //  f ~ 1/(πt) Σ (−1)ᵐ (4m−1)!! / (πt²)²ᵐ
    //  g ~ 1/(π²t³) Σ (−1)ᵐ (4m+1)!! / (πt²)²ᵐ
    let y = PI * t * t;
    let y2 = y * y;
    let mut tf = 1.0;
    let mut tg = 1.0;
    let mut f = 1.0;
    let mut g = 1.0;
    let mut f_done = false;
    let mut g_done = false;
    for m in 0..40 {
        let mf = m as f64;
        if !f_done {
            let next = -tf * (4.0 * mf + 1.0) * (4.0 * mf + 3.0) / y2;
            if next.abs() >= tf.abs() || next.abs() < 1e-18 {
                f_done = true;
            } else {
                tf = next;
                f += tf;
            }
        }
        if !g_done {
            let next = -tg * (4.0 * mf + 3.0) * (4.0 * mf + 5.0) / y2;
            if next.abs() >= tg.abs() || next.abs() < 1e-18 {
                g_done = true;
            } else {
                tg = next;
                g += tg;
            }
        }
        if f_done && g_done {
            break;
        }
    }
    (f / (PI * t), g / (PI * y * t))
}

fn clenshaw(coeffs: &[f64], x: f64) -> f64 {
    let mut b1 = 0.0;
    let mut b2 = 0.0;
    for &c in coeffs.iter().skip(1).rev() {
        let b0 = 2.0 * x * b1 - b2 + c;
        b2 = b1;
        b1 = b0;
    }
    x * b1 - b2 + coeffs[0]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_argument() {
        assert_eq!(fresnel(0.0).unwrap(), (0.0, 0.0));
        let m = fresnel_momenta(0.0, 2).unwrap();
        assert_eq!(m.c(), &[0.0, 0.0, 0.0]);
        assert_eq!(m.s(), &[0.0, 0.0, 0.0]);
    }

    #[test]
    fn values_at_one() {
        let (c, s) = fresnel(1.0).unwrap();
        assert!((c - 0.7798934003768228).abs() < 1e-15);
        assert!((s - 0.4382591473903548).abs() < 1e-15);
        let (cn, sn) = fresnel(-1.0).unwrap();
        assert_eq!((cn, sn), (-c, -s));
    }

    #[test]
    fn first_momenta_at_one() {
        let m = fresnel_momenta(1.0, 1).unwrap();
        assert!((m.c()[1] - 1.0 / PI).abs() < 1e-16);
        assert!((m.s()[1] - 1.0 / PI).abs() < 1e-16);
    }

    #[test]
    fn limits_at_infinity() {
        for t in [50.0, 1e3, 1e8, 1e200] {
            let (c, s) = fresnel(t).unwrap();
            assert!((c - 0.5).abs() < 1.0 / (PI * t) + 1e-16, "{t}");
            assert!((s - 0.5).abs() < 1.0 / (PI * t) + 1e-16, "{t}");
        }
    }

    #[test]
    fn regime_seams_are_continuous() {
        for seam in [SERIES_LIMIT, CHEBYSHEV_LIMIT] {
            let (lo, hi) = (seam * (1.0 - 1e-15), seam * (1.0 + 1e-15));
            let below = fresnel(lo).unwrap();
            let above = fresnel(hi).unwrap();
            // first-order change across the seam: (C, S)' = (cos, sin)(πt²/2)
            let phase = 0.5 * PI * seam * seam;
            let dt = hi - lo;
            assert!((above.0 - below.0 - dt * phase.cos()).abs() < 2e-15);
            assert!((above.1 - below.1 - dt * phase.sin()).abs() < 2e-15);
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(fresnel(f64::NAN), Err(Error::NonFinite("fresnel")));
        assert!(fresnel(f64::INFINITY).is_err());
        assert_eq!(
            fresnel_momenta(0.5, 4).unwrap_err(),
            Error::OrderOutOfRange { order: 4, max: 3 }
        );
    }

    #[test]
    fn phase_reduction_matches_direct_evaluation() {
        for t in [0.0, 0.3, 1.0, 2.5, 7.1, 12.0] {
            let (s, c) = sin_cos_half_pi_sq(t);
            let direct = FRAC_PI_2 * t * t;
            assert!((s - direct.sin()).abs() < 1e-13);
            assert!((c - direct.cos()).abs() < 1e-13);
        }
    }
}
