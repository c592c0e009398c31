//! Supremum estimation and the Schwarz-function contract.
//!
//! Every representation used here attains its disk supremum on the unit
//! circle (maximum modulus), so `sup_norm` samples |z| = 1 at the grid's
//! angles and then sharpens the discrete argmax by golden-section search in
//! the angle. The estimate is a true lower bound for the supremum; its gap is
//! controlled by the angular resolution and the refinement depth.
//!
//! A Schwarz function is an analytic self-map of the disk fixing the origin.
//! [`SchwarzFn`] witnesses a validated one and is required wherever the class
//! machinery needs that contract, so the validation happens once.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::function::{DiskEval, DiskFunction};
use crate::grid::DiskGrid;
use crate::search::golden_section_max;
use crate::taylor::TaylorPoly;

/// Angular resolution of the standalone supremum estimate.
pub const SUP_SCAN_ANGLES: usize = 4096;
/// Golden-section refinement depth after the coarse scan.
pub const GOLDEN_STEPS: usize = 40;
/// Default slack for Schwarz validation and class membership.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Supremum of |f| over the disk, estimated on the boundary circle at the
/// grid's angles and refined around the argmax.
pub fn sup_norm<F: DiskEval>(f: &F, grid: &DiskGrid) -> f64 {
    sup_norm_at_angles(f, grid.angles())
}

/// Supremum estimate at the default angular resolution (4096 angles).
pub fn sup_norm_est<F: DiskEval>(f: &F) -> f64 {
    let angles: Vec<f64> = (0..SUP_SCAN_ANGLES)
        .map(|j| 2.0 * std::f64::consts::PI * j as f64 / SUP_SCAN_ANGLES as f64)
        .collect();
    sup_norm_at_angles(f, &angles)
}

fn sup_norm_at_angles<F: DiskEval>(f: &F, angles: &[f64]) -> f64 {
    let modulus = |t: f64| f.at(Complex64::from_polar(1.0, t)).norm();
    let mut best_t = angles[0];
    let mut best = modulus(best_t);
    for &t in &angles[1..] {
        let v = modulus(t);
        if v > best {
            best = v;
            best_t = t;
        }
    }
    // widest gap between neighboring sample angles brackets the true argmax
    let step = if angles.len() > 1 {
        2.0 * std::f64::consts::PI / angles.len() as f64
    } else {
        std::f64::consts::PI
    };
    let (_, refined) = golden_section_max(modulus, best_t - step, best_t + step, GOLDEN_STEPS);
    best.max(refined)
}

/// What the Schwarz validation measured.
#[derive(Clone, Copy, Debug)]
pub struct SchwarzReport {
    pub at_zero: Complex64,
    pub sup: f64,
}

impl SchwarzReport {
    pub fn passes(&self, tol: f64) -> bool {
        self.at_zero.norm() <= tol && self.sup <= 1.0 + tol
    }
}

/// Checks f(0) = 0 and sup |f| ≤ 1 within `tol`, returning the measurements.
pub fn is_schwarz<F: DiskEval>(f: &F, grid: &DiskGrid, tol: f64) -> (bool, SchwarzReport) {
    let report = SchwarzReport {
        at_zero: f.at(Complex64::new(0.0, 0.0)),
        sup: sup_norm(f, grid),
    };
    (report.passes(tol), report)
}

/// A disk function that passed Schwarz validation, together with the
/// measurements that justified it.
#[derive(Clone, Debug)]
pub struct SchwarzFn {
    fun: DiskFunction,
    report: SchwarzReport,
}

impl SchwarzFn {
    pub fn validate(fun: DiskFunction, grid: &DiskGrid, tol: f64) -> Result<Self> {
        let (ok, report) = is_schwarz(&fun, grid, tol);
        if !ok {
            return Err(Error::NotSchwarz {
                at_zero: report.at_zero.norm(),
                sup: report.sup,
            });
        }
        Ok(SchwarzFn { fun, report })
    }

    /// Validation against the default grid and tolerance.
    pub fn validate_default(fun: DiskFunction) -> Result<Self> {
        Self::validate(fun, &DiskGrid::default(), DEFAULT_TOL)
    }

    pub fn as_fn(&self) -> &DiskFunction {
        &self.fun
    }

    /// The supremum estimate recorded at validation time.
    pub fn sup(&self) -> f64 {
        self.report.sup
    }

    pub fn report(&self) -> SchwarzReport {
        self.report
    }

    /// Series view through order `deg`.
    pub fn taylor(&self, deg: usize) -> TaylorPoly {
        self.fun.taylor(deg)
    }
}

impl DiskEval for SchwarzFn {
    fn at(&self, z: Complex64) -> Complex64 {
        self.fun.at(z)
    }
}

/// Deterministic random Schwarz polynomial: coefficients c₁..c_deg drawn
/// uniformly from the unit square, then the whole series rescaled so the
/// supremum estimate equals 1 - margin. The constant term is exactly zero.
pub fn random_schwarz(seed: u64, deg: usize, margin: f64) -> Result<TaylorPoly> {
    random_rescaled(seed, deg, margin, true)
}

/// Same draw without the vanishing constant term: a generic analytic
/// function with supremum estimate 1 - margin. Handy for building dominated
/// pairs by multiplication.
pub fn random_unit_bounded(seed: u64, deg: usize, margin: f64) -> Result<TaylorPoly> {
    random_rescaled(seed, deg, margin, false)
}

fn random_rescaled(seed: u64, deg: usize, margin: f64, fix_origin: bool) -> Result<TaylorPoly> {
    if !(margin > 0.0 && margin < 1.0) {
        return Err(Error::MarginOutOfRange(margin));
    }
    if deg < 1 {
        return Err(Error::DegreeTooSmall);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coeffs = vec![Complex64::new(0.0, 0.0); deg + 1];
    let lo = if fix_origin { 1 } else { 0 };
    for c in coeffs.iter_mut().skip(lo) {
        *c = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    }
    if coeffs.iter().all(|c| c.norm() == 0.0) {
        coeffs[lo.max(1)] = Complex64::new(1.0, 0.0);
    }
    let draft = TaylorPoly::new(coeffs);
    let sup = sup_norm_est(&draft);
    Ok(draft.scale_real((1.0 - margin) / sup))
}
