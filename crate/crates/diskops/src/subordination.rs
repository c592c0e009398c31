//! The subordination class and its half-plane geometry.
//!
//! For a disk parameter α (|α| ≤ 1, α ≠ -1) the class P_α consists of the
//! analytic functions on the unit disk with f(0) = 1 whose values stay in
//! the half-plane H_α = { w : 2 Re[(1 + ᾱ) w] > 1 - |α|² }. Equivalently
//! f = T_α ∘ ω for a Schwarz function ω, where T_α(z) = (1 + αz)/(1 - z)
//! maps the disk conformally onto H_α. The module provides both routes:
//! geometric membership testing on sample grids, and the exact coefficient
//! correspondence f ↔ ω.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::function::DiskEval;
use crate::grid::DiskGrid;
use crate::schwarz::SchwarzFn;
use crate::taylor::TaylorPoly;

/// Angular quadrature resolution for the integral means.
pub const MEAN_QUAD_POINTS: usize = 2048;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Class parameter: a complex number in the closed unit disk, excluding the
/// degenerate α = -1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AlphaParam(Complex64);

impl AlphaParam {
    pub fn new(alpha: Complex64) -> Result<Self> {
        if alpha.norm() > 1.0 + 1e-12 {
            return Err(Error::AlphaOutOfRange(alpha));
        }
        if (alpha + ONE).norm() <= 1e-12 {
            return Err(Error::AlphaDegenerate);
        }
        Ok(AlphaParam(alpha))
    }

    pub fn real(alpha: f64) -> Result<Self> {
        Self::new(Complex64::new(alpha, 0.0))
    }

    pub fn get(self) -> Complex64 {
        self.0
    }

    /// True when the imaginary part is negligible.
    pub fn is_real(self) -> bool {
        self.0.im.abs() <= 1e-12
    }
}

/// The conformal map T_α(z) = (1 + αz)/(1 - z) from the disk onto H_α.
/// Singular at z = 1.
pub fn disk_to_halfplane(alpha: AlphaParam, z: Complex64) -> Result<Complex64> {
    let den = ONE - z;
    if den.norm() == 0.0 {
        return Err(Error::PoleAt(z));
    }
    Ok((ONE + alpha.get() * z) / den)
}

/// Inverse map z = (w - 1)/(w + α). Singular at w = -α.
pub fn halfplane_to_disk(alpha: AlphaParam, w: Complex64) -> Result<Complex64> {
    let den = w + alpha.get();
    if den.norm() == 0.0 {
        return Err(Error::PoleAt(w));
    }
    Ok((w - ONE) / den)
}

/// Signed slack of w against the boundary of H_α: positive inside,
/// zero on the boundary line, negative outside.
pub fn halfplane_slack(alpha: AlphaParam, w: Complex64) -> f64 {
    let a = alpha.get();
    2.0 * ((ONE + a.conj()) * w).re - (1.0 - a.norm_sqr())
}

/// Series of the member T_α ∘ ω through order `deg`, computed as
/// (1 + αω) · (1 - ω)^{-1} in truncated arithmetic. Coefficient-exact
/// through `deg` because ω(0) = 0.
pub fn member_from_schwarz(alpha: AlphaParam, omega: &SchwarzFn, deg: usize) -> TaylorPoly {
    let mut w = omega.taylor(deg);
    // the validation bounded |ω(0)| by the tolerance; pin it to zero so the
    // member is normalized exactly
    w = w.sub(&TaylorPoly::constant(w.at_zero()));
    let num = TaylorPoly::one().add(&w.scale(alpha.get()));
    let den = TaylorPoly::one().sub(&w);
    // constant term of den is exactly 1
    num.multiply(&den.invert(deg).expect("unit constant term"), deg)
}

/// Recovers the Schwarz series ω = (f - 1)/(f + α) of a member through order
/// `deg`. The input must be normalized, f(0) = 1.
pub fn schwarz_from_member(alpha: AlphaParam, f: &TaylorPoly, deg: usize) -> Result<TaylorPoly> {
    if (f.at_zero() - ONE).norm() > crate::schwarz::DEFAULT_TOL {
        return Err(Error::NotNormalized(f.at_zero()));
    }
    let num = f.sub(&TaylorPoly::one());
    let den = f.add(&TaylorPoly::constant(alpha.get()));
    // |den(0)| = |1 + α| > 0 since α = -1 is excluded
    let mut w = num.multiply(&den.invert(deg)?, deg);
    w = w.sub(&TaylorPoly::constant(w.at_zero()));
    Ok(w)
}

/// Outcome of a sampled membership check.
#[derive(Clone, Copy, Debug)]
pub struct MembershipReport {
    pub is_member: bool,
    pub value_at_zero: Complex64,
    /// Smallest half-plane slack seen over the grid.
    pub worst_halfplane_slack: f64,
    /// Sample point where the smallest slack occurred.
    pub witness: Complex64,
}

/// Evaluates the half-plane slack of f at every interior grid sample.
/// Membership holds when f(0) = 1 and every slack clears -tol. A pass is
/// sampled evidence, not a proof.
pub fn check_membership<F: DiskEval>(
    alpha: AlphaParam,
    f: &F,
    grid: &DiskGrid,
    tol: f64,
) -> MembershipReport {
    let mut worst = f64::INFINITY;
    let mut witness = Complex64::new(0.0, 0.0);
    for z in grid.samples() {
        let s = halfplane_slack(alpha, f.at(z));
        if s < worst {
            worst = s;
            witness = z;
        }
    }
    let value_at_zero = f.at(Complex64::new(0.0, 0.0));
    MembershipReport {
        is_member: (value_at_zero - ONE).norm() <= tol && worst > -tol,
        value_at_zero,
        worst_halfplane_slack: worst,
        witness,
    }
}

/// Coefficient bound |c_n| ≤ |1 + α| for n ≥ 1, reported as the worst excess.
#[derive(Clone, Copy, Debug)]
pub struct CoefficientBoundReport {
    /// The bound |1 + α| itself.
    pub bound: f64,
    /// max_n (|c_n| - bound); a member keeps this ≤ 0 up to rounding.
    pub max_excess: f64,
    pub worst_index: usize,
}

pub fn coefficient_bound(alpha: AlphaParam, f: &TaylorPoly) -> CoefficientBoundReport {
    let bound = (ONE + alpha.get()).norm();
    let mut max_excess = -bound;
    let mut worst_index = 0;
    for n in 1..=f.degree() {
        let excess = f.coeff(n).norm() - bound;
        if excess > max_excess {
            max_excess = excess;
            worst_index = n;
        }
    }
    CoefficientBoundReport {
        bound,
        max_excess,
        worst_index,
    }
}

/// Two-sided growth estimate for members:
/// (1 - |αz|)/(1 + |z|) ≤ |f(z)| ≤ (1 + |αz|)/(1 - |z|).
#[derive(Clone, Copy, Debug)]
pub struct GrowthBoundReport {
    pub lower_min_slack: f64,
    pub lower_witness: Complex64,
    pub upper_min_slack: f64,
    pub upper_witness: Complex64,
}

pub fn growth_bounds<F: DiskEval>(alpha: AlphaParam, f: &F, grid: &DiskGrid) -> GrowthBoundReport {
    let a = alpha.get().norm();
    let mut lo = f64::INFINITY;
    let mut lo_w = Complex64::new(0.0, 0.0);
    let mut hi = f64::INFINITY;
    let mut hi_w = Complex64::new(0.0, 0.0);
    for z in grid.samples() {
        let r = z.norm();
        let v = f.at(z).norm();
        let lower = (1.0 - a * r) / (1.0 + r);
        let upper = (1.0 + a * r) / (1.0 - r);
        if v - lower < lo {
            lo = v - lower;
            lo_w = z;
        }
        if upper - v < hi {
            hi = upper - v;
            hi_w = z;
        }
    }
    GrowthBoundReport {
        lower_min_slack: lo,
        lower_witness: lo_w,
        upper_min_slack: hi,
        upper_witness: hi_w,
    }
}

/// The boundary member with Schwarz symbol λz: coefficients c₀ = 1 and
/// c_n = (1 + α)λⁿ. These maximize |c_n| over the whole class, so they make
/// the coefficient bound sharp. λ must be unimodular.
pub fn extreme_point(alpha: AlphaParam, lambda: Complex64, deg: usize) -> Result<TaylorPoly> {
    if (lambda.norm() - 1.0).abs() > 1e-12 {
        return Err(Error::NotUnimodular(lambda));
    }
    let lead = ONE + alpha.get();
    let mut coeffs = Vec::with_capacity(deg + 1);
    coeffs.push(ONE);
    let mut pw = ONE;
    for _ in 1..=deg {
        pw *= lambda;
        coeffs.push(lead * pw);
    }
    Ok(TaylorPoly::new(coeffs))
}

/// Integral means r ↦ (2π)^{-1} ∫ |f(re^{iθ})|^p dθ for 0 < p < 1, one value
/// per requested radius, by the periodic trapezoid rule at 2048 angles.
/// For an analytic f the profile is nondecreasing in r.
pub fn hardy_means<F: DiskEval>(f: &F, p: f64, radii: &[f64]) -> Result<Vec<f64>> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::ExponentOutOfRange(p));
    }
    let mut out = Vec::with_capacity(radii.len());
    for &r in radii {
        if !(0.0..1.0).contains(&r) {
            return Err(Error::OutsideDisk(Complex64::new(r, 0.0)));
        }
        let mut acc = 0.0;
        for j in 0..MEAN_QUAD_POINTS {
            let t = 2.0 * std::f64::consts::PI * j as f64 / MEAN_QUAD_POINTS as f64;
            acc += f.at(Complex64::from_polar(r, t)).norm().powf(p);
        }
        out.push(acc / MEAN_QUAD_POINTS as f64);
    }
    Ok(out)
}
