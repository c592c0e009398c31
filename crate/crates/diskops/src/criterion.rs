//! The pointwise preservation margin for weighted composition operators.
//!
//! The operator with symbol pair (ω, φ) sends f to T_α(ω) · (f ∘ φ), where
//! T_α(ω) is the weight built from the Schwarz function ω. It maps the class
//! P_α into itself exactly when, at every z in the disk,
//!
//!   2 Q(ω) |φ| < (1 - |ω|²) + P(ω) |φ|²
//!
//! with P(w) = |αw|² - |1 + (α - 1)w|² and Q = |q|,
//! q(w) = (α - 1)|w|² + w̄ - αw. The margin function below is the right side
//! minus the left side; preservation is a strict sign condition on it.
//!
//! An independent route to the same sign comes from the boundary members:
//! for unimodular λ the operator sends the member with symbol λz to the
//! member with symbol ω_λ = (ω + λφ + (α - 1)λωφ)/(1 + αλφω), and the
//! criterion at z is exactly sup_λ |ω_λ(z)| < 1. `extreme_image_sup`
//! evaluates that supremum by brute force so the margin can be audited
//! against it.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::function::{DiskEval, DiskFunction};
use crate::grid::DiskGrid;
use crate::schwarz::{SchwarzFn, DEFAULT_TOL};
use crate::search::golden_section_max;
use crate::subordination::{member_from_schwarz, AlphaParam};
use crate::taylor::TaylorPoly;

/// Unimodular sample count for the extreme-image supremum.
pub const DEFAULT_LAMBDA_SAMPLES: usize = 720;

/// Slope of the near-boundary modulus test used by the classifier: a radial
/// limit is treated as unimodular at an angle when |f| > 1 - 10(1 - r) all
/// along the boundary ladder.
pub const INNER_SLOPE: f64 = 10.0;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Quadratic coefficient P(w) = |αw|² - |1 + (α - 1)w|² of the margin.
pub fn p_term(alpha: AlphaParam, w: Complex64) -> f64 {
    let a = alpha.get();
    (a * w).norm_sqr() - (ONE + (a - ONE) * w).norm_sqr()
}

/// P again, through the real decomposition
/// a(|w|² - 1) + (a - 1)|w - 1|² + 2bv with α = a + ib, v = Im w.
/// Kept as an independent route for auditing `p_term`.
pub fn p_term_real_form(alpha: AlphaParam, w: Complex64) -> f64 {
    let a = alpha.get().re;
    let b = alpha.get().im;
    a * (w.norm_sqr() - 1.0) + (a - 1.0) * (w - ONE).norm_sqr() + 2.0 * b * w.im
}

/// q(w) = (α - 1)|w|² + w̄ - αw, the complex quantity whose modulus scales
/// the linear term of the margin.
pub fn q_term(alpha: AlphaParam, w: Complex64) -> Complex64 {
    let a = alpha.get();
    (a - ONE) * w.norm_sqr() + w.conj() - a * w
}

/// q split into real and imaginary parts,
/// [(a-1)(|w|²-u) + bv] + i[b(|w|²-u) - (a+1)v], an independent route.
pub fn q_term_split(alpha: AlphaParam, w: Complex64) -> Complex64 {
    let a = alpha.get().re;
    let b = alpha.get().im;
    let m = w.norm_sqr() - w.re;
    Complex64::new((a - 1.0) * m + b * w.im, b * m - (a + 1.0) * w.im)
}

/// Q(w) = |q(w)|.
pub fn q_abs(alpha: AlphaParam, w: Complex64) -> f64 {
    q_term(alpha, w).norm()
}

/// A validated symbol pair with its class parameter. Both ω and φ are held
/// with their Schwarz certificates; the weight is T_α(ω).
#[derive(Clone, Debug)]
pub struct OperatorSymbols {
    alpha: AlphaParam,
    omega: SchwarzFn,
    phi: SchwarzFn,
}

impl OperatorSymbols {
    /// Validates both symbols on the given grid.
    pub fn new(
        alpha: AlphaParam,
        omega: DiskFunction,
        phi: DiskFunction,
        grid: &DiskGrid,
        tol: f64,
    ) -> Result<Self> {
        let omega = SchwarzFn::validate(omega, grid, tol)?;
        let phi = SchwarzFn::validate(phi, grid, tol)?;
        Ok(OperatorSymbols { alpha, omega, phi })
    }

    /// Validates with the default grid and tolerance.
    pub fn with_defaults(alpha: AlphaParam, omega: DiskFunction, phi: DiskFunction) -> Result<Self> {
        Self::new(alpha, omega, phi, &DiskGrid::default(), DEFAULT_TOL)
    }

    /// Assembles from already-validated symbols.
    pub fn from_schwarz(alpha: AlphaParam, omega: SchwarzFn, phi: SchwarzFn) -> Self {
        OperatorSymbols { alpha, omega, phi }
    }

    /// Unweighted composition operator: ω ≡ 0, so the weight is 1.
    pub fn composition(alpha: AlphaParam, phi: DiskFunction) -> Result<Self> {
        Self::with_defaults(alpha, TaylorPoly::zero().into(), phi)
    }

    /// Pure multiplication operator: φ = z.
    pub fn multiplication(alpha: AlphaParam, omega: DiskFunction) -> Result<Self> {
        Self::with_defaults(alpha, omega, TaylorPoly::identity().into())
    }

    pub fn alpha(&self) -> AlphaParam {
        self.alpha
    }

    pub fn omega(&self) -> &DiskFunction {
        self.omega.as_fn()
    }

    pub fn phi(&self) -> &DiskFunction {
        self.phi.as_fn()
    }

    pub fn omega_schwarz(&self) -> &SchwarzFn {
        &self.omega
    }

    pub fn phi_schwarz(&self) -> &SchwarzFn {
        &self.phi
    }

    pub fn omega_sup(&self) -> f64 {
        self.omega.sup()
    }

    pub fn phi_sup(&self) -> f64 {
        self.phi.sup()
    }

    /// Series of the weight T_α ∘ ω through order `deg`.
    pub fn weight_series(&self, deg: usize) -> TaylorPoly {
        member_from_schwarz(self.alpha, &self.omega, deg)
    }
}

pub(crate) fn margin_raw(sym: &OperatorSymbols, z: Complex64) -> f64 {
    let w = sym.omega().at(z);
    let t = sym.phi().at(z).norm();
    (1.0 - w.norm_sqr()) + p_term(sym.alpha, w) * t * t - 2.0 * q_abs(sym.alpha, w) * t
}

/// The pointwise margin at an interior point z. Positive means the
/// preservation inequality holds there.
pub fn criterion_margin(sym: &OperatorSymbols, z: Complex64) -> Result<f64> {
    if z.norm() >= 1.0 {
        return Err(Error::OutsideDisk(z));
    }
    Ok(margin_raw(sym, z))
}

/// Margin in the special case α = 0, where the criterion collapses to
/// |1 - ω||φ| + |ω| < 1. Returns 1 - (|1 - w||p| + |w|); the full margin at
/// α = 0 factors as (1 - s)(1 + s) for s = |1 - w||p| + |w|, so the signs
/// agree exactly.
pub fn alpha_zero_margin(omega_val: Complex64, phi_val: Complex64) -> f64 {
    1.0 - ((ONE - omega_val).norm() * phi_val.norm() + omega_val.norm())
}

/// Verdict of a sampled preservation scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Every sampled margin cleared +tol. Sampled evidence, not a proof.
    Preserves,
    /// Some sampled margin fell below -tol: a genuine counterexample point.
    Fails,
    /// The minimum margin landed within ±tol of zero.
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Verdict::Preserves => "PASS",
            Verdict::Fails => "FAIL",
            Verdict::Inconclusive => "INCONCLUSIVE",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub verdict: Verdict,
    /// Smallest margin over all samples, interior and near-boundary.
    pub min_margin: f64,
    /// Sample point attaining the minimum.
    pub witness: Complex64,
    pub samples_checked: usize,
    /// Smallest margin over the near-boundary ladder alone, when the grid
    /// has one. Inner-type failures show up here first.
    pub near_boundary_min: Option<f64>,
    /// Attached by the callers that also run the boundary classifier.
    pub boundary: Option<BoundaryReport>,
}

impl CriterionReport {
    pub fn preserves(&self) -> bool {
        self.verdict == Verdict::Preserves
    }
}

/// Scans the margin over every grid sample, near-boundary ladder included,
/// and reports the worst point. Strictness is judged against `tol`:
/// min > tol passes, min < -tol fails, anything within ±tol is inconclusive.
pub fn check_preservation(sym: &OperatorSymbols, grid: &DiskGrid, tol: f64) -> CriterionReport {
    let mut min_margin = f64::INFINITY;
    let mut witness = Complex64::new(0.0, 0.0);
    let mut samples_checked = 0;
    for z in grid.samples() {
        let m = margin_raw(sym, z);
        samples_checked += 1;
        if m < min_margin {
            min_margin = m;
            witness = z;
        }
    }
    let mut near_boundary_min = None;
    for z in grid.boundary_samples() {
        let m = margin_raw(sym, z);
        samples_checked += 1;
        if near_boundary_min.is_none_or(|b| m < b) {
            near_boundary_min = Some(m);
        }
        if m < min_margin {
            min_margin = m;
            witness = z;
        }
    }
    let verdict = if min_margin > tol {
        Verdict::Preserves
    } else if min_margin < -tol {
        Verdict::Fails
    } else {
        Verdict::Inconclusive
    };
    CriterionReport {
        verdict,
        min_margin,
        witness,
        samples_checked,
        near_boundary_min,
        boundary: None,
    }
}

/// Pointwise symbol of the image of the boundary member indexed by
/// unimodular λ: (ω + λφ + (α - 1)λωφ)/(1 + αλφω) evaluated at z.
pub fn extreme_image_symbol(
    sym: &OperatorSymbols,
    lambda: Complex64,
    z: Complex64,
) -> Result<Complex64> {
    if z.norm() >= 1.0 {
        return Err(Error::OutsideDisk(z));
    }
    let a = sym.alpha.get();
    let w = sym.omega().at(z);
    let p = sym.phi().at(z);
    let den = ONE + a * lambda * p * w;
    if den.norm() < 1e-14 {
        return Err(Error::DegenerateDenominator { z, lambda });
    }
    Ok((w + lambda * p + (a - ONE) * lambda * w * p) / den)
}

/// Brute-force sup over |λ| = 1 of the extreme-image symbol modulus at z,
/// from `n_lambda` equispaced samples plus golden-section refinement around
/// the discrete argmax. The criterion margin at z is positive exactly when
/// this supremum is below 1.
pub fn extreme_image_sup(sym: &OperatorSymbols, z: Complex64, n_lambda: usize) -> Result<f64> {
    if z.norm() >= 1.0 {
        return Err(Error::OutsideDisk(z));
    }
    if n_lambda < 8 {
        return Err(Error::LambdaCountTooSmall(n_lambda));
    }
    let a = sym.alpha.get();
    let w = sym.omega().at(z);
    let p = sym.phi().at(z);
    let modulus = |t: f64| {
        let lambda = Complex64::from_polar(1.0, t);
        let num = w + lambda * p + (a - ONE) * lambda * w * p;
        let den = ONE + a * lambda * p * w;
        if den.norm() == 0.0 {
            f64::INFINITY
        } else {
            num.norm() / den.norm()
        }
    };
    let mut best_t = 0.0;
    let mut best = modulus(0.0);
    for j in 1..n_lambda {
        let t = 2.0 * std::f64::consts::PI * j as f64 / n_lambda as f64;
        let v = modulus(t);
        if v > best {
            best = v;
            best_t = t;
        }
    }
    let step = 2.0 * std::f64::consts::PI / n_lambda as f64;
    let (_, refined) = golden_section_max(
        modulus,
        best_t - step,
        best_t + step,
        crate::schwarz::GOLDEN_STEPS,
    );
    Ok(best.max(refined))
}

/// How the symbols behave toward the boundary circle.
#[derive(Clone, Debug, PartialEq)]
pub enum BoundaryClass {
    /// |φ| → 1 at essentially every sampled angle. Preservation then forces
    /// the weight to be identically 1, i.e. ω ≡ 0; `consistent` records
    /// whether this pair obeys that.
    PhiInnerLike { omega_sup: f64, consistent: bool },
    /// Real α with |ω| → 1 at essentially every sampled angle. Preservation
    /// then forces φ ≡ 0.
    OmegaInnerLike { phi_sup: f64, consistent: bool },
    /// Neither symbol looks inner; the fraction of angles where |ω| → 1
    /// must stay negligible for preservation, and is reported.
    Generic,
}

impl std::fmt::Display for BoundaryClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundaryClass::PhiInnerLike { omega_sup, consistent } => write!(
                f,
                "phi inner-like ({}, omega sup {omega_sup:.3e})",
                if *consistent { "weight trivial as required" } else { "weight not trivial" }
            ),
            BoundaryClass::OmegaInnerLike { phi_sup, consistent } => write!(
                f,
                "omega inner-like ({}, phi sup {phi_sup:.3e})",
                if *consistent { "phi trivial as required" } else { "phi not trivial" }
            ),
            BoundaryClass::Generic => f.write_str("generic"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct BoundaryReport {
    /// Fraction of sampled angles where |φ| hugs the circle along the ladder.
    pub phi_inner_fraction: f64,
    /// Same for ω.
    pub omega_inner_fraction: f64,
    pub class: BoundaryClass,
}

fn inner_like_at<F: DiskEval>(f: &F, theta: f64, ladder: &[f64]) -> bool {
    ladder.iter().all(|&r| {
        f.at(Complex64::from_polar(r, theta)).norm() > 1.0 - INNER_SLOPE * (1.0 - r)
    })
}

/// Estimates radial limits of |φ| and |ω| at the given angles along the
/// near-boundary ladder and classifies the pair. `tol` plays two roles: an
/// angle fraction of at least 1 - tol counts as "essentially all", and a
/// supremum at most tol counts as an identically vanishing symbol.
pub fn classify_boundary(
    sym: &OperatorSymbols,
    angles: &[f64],
    boundary_radii: &[f64],
    tol: f64,
) -> BoundaryReport {
    assert!(!angles.is_empty() && !boundary_radii.is_empty(), "need angles and a ladder");
    let mut phi_hits = 0usize;
    let mut omega_hits = 0usize;
    for &t in angles {
        if inner_like_at(sym.phi(), t, boundary_radii) {
            phi_hits += 1;
        }
        if inner_like_at(sym.omega(), t, boundary_radii) {
            omega_hits += 1;
        }
    }
    let n = angles.len() as f64;
    let phi_inner_fraction = phi_hits as f64 / n;
    let omega_inner_fraction = omega_hits as f64 / n;
    let class = if phi_inner_fraction >= 1.0 - tol {
        BoundaryClass::PhiInnerLike {
            omega_sup: sym.omega_sup(),
            consistent: sym.omega_sup() <= tol,
        }
    } else if sym.alpha.is_real() && omega_inner_fraction >= 1.0 - tol {
        BoundaryClass::OmegaInnerLike {
            phi_sup: sym.phi_sup(),
            consistent: sym.phi_sup() <= tol,
        }
    } else {
        BoundaryClass::Generic
    };
    BoundaryReport {
        phi_inner_fraction,
        omega_inner_fraction,
        class,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blaschke::BlaschkeProduct;
    use crate::schwarz::random_schwarz;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn alpha(re: f64, im: f64) -> AlphaParam {
        AlphaParam::new(c(re, im)).unwrap()
    }

    #[test]
    fn p_term_reference_values() {
        assert!((p_term(alpha(0.3, 0.4), c(0.0, 0.0)) + 1.0).abs() < 1e-15);
        let w = c(0.2, -0.7);
        assert!((p_term(alpha(1.0, 0.0), w) - (w.norm_sqr() - 1.0)).abs() < 1e-14);
        assert!((p_term(alpha(0.0, 0.0), c(0.5, 0.0)) + 0.25).abs() < 1e-15);
    }

    #[test]
    fn p_term_two_routes_agree() {
        let pts = [c(0.1, 0.2), c(-0.6, 0.3), c(0.0, -0.9), c(0.85, 0.0)];
        let als = [alpha(0.3, 0.4), alpha(-0.5, 0.1), alpha(1.0, 0.0), alpha(0.0, 0.0)];
        for al in als {
            for w in pts {
                let d = (p_term(al, w) - p_term_real_form(al, w)).abs();
                assert!(d < 1e-13, "alpha {:?} w {w}: gap {d}", al.get());
            }
        }
    }

    #[test]
    fn q_term_reference_values() {
        assert_eq!(q_term(alpha(0.5, -0.5), c(0.0, 0.0)), c(0.0, 0.0));
        // α = 0 on the real axis: q = u - u²
        let u = 0.3;
        let q = q_term(alpha(0.0, 0.0), c(u, 0.0));
        assert!((q - c(u - u * u, 0.0)).norm() < 1e-15);
        // α = 1, w = i/2: q = w̄ - w = -i
        let q1 = q_term(alpha(1.0, 0.0), c(0.0, 0.5));
        assert!((q1 - c(0.0, -1.0)).norm() < 1e-15);
        assert!((q_abs(alpha(1.0, 0.0), c(0.0, 0.5)) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn q_term_split_agrees() {
        let pts = [c(0.1, 0.2), c(-0.6, 0.3), c(0.0, -0.9), c(0.85, 0.0)];
        let als = [alpha(0.3, 0.4), alpha(-0.5, 0.1), alpha(1.0, 0.0)];
        for al in als {
            for w in pts {
                let d = (q_term(al, w) - q_term_split(al, w)).norm();
                assert!(d < 1e-13);
            }
        }
    }

    fn sym_poly(al: AlphaParam, omega: TaylorPoly, phi: TaylorPoly) -> OperatorSymbols {
        OperatorSymbols::with_defaults(al, omega.into(), phi.into()).unwrap()
    }

    #[test]
    fn composition_margin_is_one_minus_phi_squared() {
        let sym = OperatorSymbols::composition(alpha(0.6, 0.2), TaylorPoly::from_real(&[0.0, 0.5]).into())
            .unwrap();
        for &z in &[c(0.3, 0.1), c(-0.4, 0.4), c(0.0, 0.85)] {
            let m = criterion_margin(&sym, z).unwrap();
            let t = (z * 0.5).norm();
            assert!((m - (1.0 - t * t)).abs() < 1e-14);
        }
    }

    #[test]
    fn margin_rejects_exterior_points() {
        let sym = OperatorSymbols::composition(alpha(0.0, 0.0), TaylorPoly::identity().into()).unwrap();
        assert!(criterion_margin(&sym, c(1.0, 0.0)).is_err());
        assert!(criterion_margin(&sym, c(0.9, 0.9)).is_err());
    }

    #[test]
    fn alpha_zero_margin_factors_the_full_margin() {
        let al = alpha(0.0, 0.0);
        let omega = random_schwarz(3, 6, 0.3).unwrap();
        let phi = random_schwarz(4, 5, 0.4).unwrap();
        let sym = sym_poly(al, omega.clone(), phi.clone());
        for &z in &[c(0.2, 0.3), c(-0.5, 0.1), c(0.0, -0.8), c(0.7, 0.2)] {
            let w = omega.eval(z);
            let p = phi.eval(z);
            let s = (ONE - w).norm() * p.norm() + w.norm();
            let factored = (1.0 - s) * (1.0 + s);
            let m = criterion_margin(&sym, z).unwrap();
            assert!((m - factored).abs() < 1e-12, "z {z}: {m} vs {factored}");
            assert_eq!(m > 0.0, alpha_zero_margin(w, p) > 0.0);
        }
    }

    #[test]
    fn extreme_image_symbol_reference_value() {
        let sym = sym_poly(alpha(0.0, 0.0), TaylorPoly::identity(), TaylorPoly::identity());
        let v = extreme_image_symbol(&sym, c(1.0, 0.0), c(0.5, 0.0)).unwrap();
        assert!((v - c(0.75, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn extreme_image_symbol_degenerate_denominator() {
        let sym = sym_poly(alpha(1.0, 0.0), TaylorPoly::identity(), TaylorPoly::identity());
        let z = c(0.0, 1.0 - 1e-16);
        assert!(matches!(
            extreme_image_symbol(&sym, c(1.0, 0.0), z),
            Err(Error::DegenerateDenominator { .. })
        ));
    }

    #[test]
    fn extreme_image_sup_dominates_members_and_matches_margin_sign() {
        let sym = sym_poly(
            alpha(0.5, 0.3),
            random_schwarz(5, 4, 0.5).unwrap(),
            random_schwarz(6, 4, 0.5).unwrap(),
        );
        for &z in &[c(0.4, 0.2), c(-0.3, -0.6)] {
            let sup = extreme_image_sup(&sym, z, DEFAULT_LAMBDA_SAMPLES).unwrap();
            for k in 0..16 {
                let lam = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_8 * k as f64);
                let v = extreme_image_symbol(&sym, lam, z).unwrap().norm();
                assert!(sup >= v - 1e-12);
            }
            let m = criterion_margin(&sym, z).unwrap();
            assert_eq!(m > 0.0, sup < 1.0, "margin {m}, sup {sup}");
        }
        assert!(extreme_image_sup(&sym, c(0.2, 0.0), 7).is_err());
        assert!(extreme_image_sup(&sym, c(2.0, 0.0), 64).is_err());
    }

    #[test]
    fn contracting_pair_preserves() {
        let sym = sym_poly(
            alpha(0.5, 0.0),
            TaylorPoly::from_real(&[0.0, 0.125]),
            TaylorPoly::from_real(&[0.0, 0.25]),
        );
        let rep = check_preservation(&sym, &DiskGrid::default(), 1e-9);
        assert_eq!(rep.verdict, Verdict::Preserves);
        assert!(rep.preserves());
        assert!(rep.min_margin > 0.1);
        assert_eq!(rep.samples_checked, (24 + 20) * 128);
        assert!(rep.near_boundary_min.unwrap() > 0.0);
    }

    #[test]
    fn blaschke_composition_with_weight_fails_near_boundary() {
        let b = BlaschkeProduct::new(vec![c(0.0, 0.0), c(0.4, 0.0)], 0.0).unwrap();
        let sym = OperatorSymbols::with_defaults(
            alpha(0.5, 0.0),
            TaylorPoly::from_real(&[0.0, 0.3]).into(),
            b.into(),
        )
        .unwrap();
        let rep = check_preservation(&sym, &DiskGrid::default(), 1e-9);
        assert_eq!(rep.verdict, Verdict::Fails);
        assert!(rep.near_boundary_min.unwrap() < -1e-3);
        assert!(rep.witness.norm() > 0.49);
    }

    #[test]
    fn unweighted_blaschke_composition_preserves() {
        let b = BlaschkeProduct::new(vec![c(0.0, 0.0), c(0.4, 0.0)], 0.0).unwrap();
        let sym = OperatorSymbols::composition(alpha(0.5, 0.0), b.into()).unwrap();
        let rep = check_preservation(&sym, &DiskGrid::default(), 1e-9);
        assert_eq!(rep.verdict, Verdict::Preserves);
    }

    #[test]
    fn classifier_flags_inner_phi() {
        let b = BlaschkeProduct::new(vec![c(0.0, 0.0), c(0.3, -0.2)], 0.5).unwrap();
        let grid = DiskGrid::default();
        let sym = OperatorSymbols::with_defaults(
            alpha(0.2, 0.1),
            TaylorPoly::from_real(&[0.0, 0.3]).into(),
            b.clone().into(),
        )
        .unwrap();
        let rep = classify_boundary(&sym, grid.angles(), grid.boundary_radii(), 0.02);
        assert!((rep.phi_inner_fraction - 1.0).abs() < 1e-12);
        match rep.class {
            BoundaryClass::PhiInnerLike { consistent, omega_sup } => {
                assert!(!consistent);
                assert!(omega_sup > 0.2);
            }
            other => panic!("wrong class {other:?}"),
        }

        let ok = OperatorSymbols::composition(alpha(0.2, 0.1), b.into()).unwrap();
        let rep2 = classify_boundary(&ok, grid.angles(), grid.boundary_radii(), 0.02);
        assert!(matches!(rep2.class, BoundaryClass::PhiInnerLike { consistent: true, .. }));
    }

    #[test]
    fn classifier_flags_inner_omega_for_real_alpha() {
        let b = BlaschkeProduct::new(vec![c(0.0, 0.0), c(-0.25, 0.1)], 1.0).unwrap();
        let grid = DiskGrid::default();
        let sym = OperatorSymbols::with_defaults(
            alpha(0.5, 0.0),
            b.clone().into(),
            TaylorPoly::from_real(&[0.0, 0.4]).into(),
        )
        .unwrap();
        let rep = classify_boundary(&sym, grid.angles(), grid.boundary_radii(), 0.02);
        assert!(matches!(rep.class, BoundaryClass::OmegaInnerLike { consistent: false, .. }));

        // complex α: the ω-inner shortcut does not apply, class is generic
        let sym2 = OperatorSymbols::with_defaults(
            alpha(0.5, 0.2),
            b.into(),
            TaylorPoly::from_real(&[0.0, 0.4]).into(),
        )
        .unwrap();
        let rep2 = classify_boundary(&sym2, grid.angles(), grid.boundary_radii(), 0.02);
        assert_eq!(rep2.class, BoundaryClass::Generic);
    }

    #[test]
    fn classifier_generic_for_contractive_symbols() {
        let grid = DiskGrid::default();
        let sym = sym_poly(
            alpha(0.3, 0.0),
            TaylorPoly::from_real(&[0.0, 0.5]),
            TaylorPoly::from_real(&[0.0, 0.25, 0.25]),
        );
        let rep = classify_boundary(&sym, grid.angles(), grid.boundary_radii(), 0.02);
        assert_eq!(rep.class, BoundaryClass::Generic);
        assert_eq!(rep.phi_inner_fraction, 0.0);
        assert_eq!(rep.omega_inner_fraction, 0.0);
    }
}
