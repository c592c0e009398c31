//! Sufficient conditions that certify preservation from sup norms alone,
//! and concrete symbol families built to satisfy them.
//!
//! Writing A = ‖ω‖_∞ and B = ‖φ‖_∞:
//!
//! * for α ∈ [0, 1], the bound A + B + AB < 1 suffices;
//! * for α ∈ (-1, 0), it sharpens to
//!   -α[(A + B + AB)² + 4AB] + (A + B + AB)² < 1, which as α → -1 with
//!   A = B degenerates to the quartic 2A⁴ + 8A³ + 12A² = 1 whose positive
//!   root is the largest symmetric sup norm that works for every negative α;
//! * for α = 0 the exact pointwise criterion is |1 - ω||φ| + |ω| < 1, so
//!   the crude bound ‖φ‖, ‖ω‖ < √2 - 1 suffices;
//! * the quadratic pair φ = z(az + b), ω = z(cz + d) with |a| + |b| = 1,
//!   c = -ab/K, d = (1 - a² - b²)/K preserves P_1 whenever K > 2 + √5.

use crate::criterion::OperatorSymbols;
use crate::error::{Error, Result};
use crate::search::bisect_root;
use crate::subordination::AlphaParam;
use crate::taylor::TaylorPoly;

/// Sup-norm gate for α ∈ [0, 1]: A + B + AB < 1.
pub fn norm_condition(a_norm: f64, b_norm: f64) -> Result<bool> {
    for &n in &[a_norm, b_norm] {
        if !(0.0..1.0).contains(&n) {
            return Err(Error::NormOutOfRange(n));
        }
    }
    Ok(a_norm + b_norm + a_norm * b_norm < 1.0)
}

/// Sup-norm gate for real α ∈ (-1, 0):
/// -α[(A + B + AB)² + 4AB] + (A + B + AB)² < 1.
pub fn negative_alpha_condition(a_norm: f64, b_norm: f64, alpha: f64) -> Result<bool> {
    if !(-1.0 < alpha && alpha < 0.0) {
        return Err(Error::AlphaNotNegative(alpha));
    }
    for &n in &[a_norm, b_norm] {
        if !(0.0..1.0).contains(&n) {
            return Err(Error::NormOutOfRange(n));
        }
    }
    let s = a_norm + b_norm + a_norm * b_norm;
    Ok(-alpha * (s * s + 4.0 * a_norm * b_norm) + s * s < 1.0)
}

/// 2x⁴ + 8x³ + 12x² - 1, the α → -1 limit of the symmetric (A = B) gate.
pub fn negative_alpha_polynomial(x: f64) -> f64 {
    ((2.0 * x + 8.0) * x + 12.0) * x * x - 1.0
}

/// Positive root of that quartic: the common sup-norm radius below which
/// A = B = ‖ω‖ = ‖φ‖ passes the gate for every α ∈ (-1, 0). Near 0.2648.
pub fn negative_alpha_radius() -> f64 {
    bisect_root(negative_alpha_polynomial, 0.0, 1.0, 1e-12, 200)
        .expect("sign change on [0, 1]")
}

/// Sup-norm radius below which both symbols certify preservation of P_0:
/// √2 - 1.
pub fn small_norm_threshold() -> f64 {
    std::f64::consts::SQRT_2 - 1.0
}

/// Scale threshold for the quadratic family: 2 + √5.
pub fn quadratic_min_k() -> f64 {
    2.0 + 5.0_f64.sqrt()
}

/// Builds the quadratic pair φ = z(az + b), ω = z(cz + d) with
/// c = -ab/k, d = (1 - a² - b²)/k at α = 1. Requires a, b > 0 with
/// a + b = 1 and k above `quadratic_min_k`.
pub fn quadratic_symbols(a: f64, b: f64, k: f64) -> Result<OperatorSymbols> {
    if !(a > 0.0 && a < 1.0) {
        return Err(Error::NormOutOfRange(a));
    }
    if !(b > 0.0 && b < 1.0) {
        return Err(Error::NormOutOfRange(b));
    }
    if (a + b - 1.0).abs() > 1e-12 {
        return Err(Error::Spec {
            field: "quadratic family",
            reason: format!("coefficients must satisfy a + b = 1, got a + b = {}", a + b),
        });
    }
    let min_k = quadratic_min_k();
    if k <= min_k {
        return Err(Error::ThresholdNotMet { value: k, min: min_k });
    }
    let c = -a * b / k;
    let d = (1.0 - a * a - b * b) / k;
    let phi = TaylorPoly::from_real(&[0.0, b, a]);
    let omega = TaylorPoly::from_real(&[0.0, d, c]);
    OperatorSymbols::with_defaults(AlphaParam::real(1.0)?, omega.into(), phi.into())
}
