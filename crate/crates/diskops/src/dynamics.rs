//! Iteration of a weighted composition operator on truncated series.
//!
//! When φ(0) = 0 the operator acts lower-triangularly on Taylor
//! coefficients with diagonal entries ψ(0)·φ'(0)ⁿ, so for a genuinely
//! contracting φ the orbit of any normalized series converges geometrically
//! to the unique fixed series. Rotations φ = λz are the degenerate case:
//! nothing contracts, orbits recur, and the fixed functions are exactly the
//! series supported on coefficient indices divisible by the order of λ.
//! Iteration refuses rotation symbols and points at the support test
//! instead.

use num_complex::Complex64;

use crate::criterion::OperatorSymbols;
use crate::error::{Error, Result};
use crate::schwarz::DEFAULT_TOL;
use crate::taylor::TaylorPoly;

/// Tolerance for recognizing roots of unity.
pub const ROOT_TOL: f64 = 1e-10;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Structure of a symbol as a rigid rotation of the disk.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RotationKind {
    NotRotation,
    Identity,
    /// Minimal n ≥ 2 with λⁿ = 1.
    RootOfUnity(u32),
    /// Unimodular multiplier with no power returning to 1 within the
    /// searched range.
    IrrationalRotation,
}

impl std::fmt::Display for RotationKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RotationKind::NotRotation => f.write_str("not a rotation"),
            RotationKind::Identity => f.write_str("the identity"),
            RotationKind::RootOfUnity(n) => write!(f, "a rotation of order {n}"),
            RotationKind::IrrationalRotation => f.write_str("an aperiodic rotation"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RotationClass {
    pub kind: RotationKind,
    /// The unimodular multiplier, when the series is a rotation.
    pub lambda: Option<Complex64>,
}

/// Decides whether a series is λz for unimodular λ, up to `tol` on the
/// coefficients, and if so resolves the multiplier's order up to `n_max`.
pub fn classify_rotation(phi: &TaylorPoly, tol: f64, n_max: u32) -> RotationClass {
    let none = RotationClass {
        kind: RotationKind::NotRotation,
        lambda: None,
    };
    if phi.coeff(0).norm() > tol {
        return none;
    }
    let c1 = phi.coeff(1);
    if (c1.norm() - 1.0).abs() > tol {
        return none;
    }
    for k in 2..=phi.degree() {
        if phi.coeff(k).norm() > tol {
            return none;
        }
    }
    let lambda = c1 / c1.norm();
    if (lambda - ONE).norm() <= ROOT_TOL {
        return RotationClass {
            kind: RotationKind::Identity,
            lambda: Some(lambda),
        };
    }
    let mut power = lambda;
    for n in 2..=n_max {
        power *= lambda;
        if (power - ONE).norm() <= ROOT_TOL {
            return RotationClass {
                kind: RotationKind::RootOfUnity(n),
                lambda: Some(lambda),
            };
        }
    }
    RotationClass {
        kind: RotationKind::IrrationalRotation,
        lambda: Some(lambda),
    }
}

/// One application of the operator: f ↦ T_α(ω) · (f ∘ φ), truncated at
/// `deg`. The input must be normalized to f(0) = 1.
pub fn apply_operator(sym: &OperatorSymbols, f: &TaylorPoly, deg: usize) -> Result<TaylorPoly> {
    if (f.at_zero() - ONE).norm() > DEFAULT_TOL {
        return Err(Error::NotNormalized(f.at_zero()));
    }
    let psi = sym.weight_series(deg);
    let phi_t = sym.phi_schwarz().taylor(deg);
    Ok(f.compose(&phi_t, deg).multiply(&psi, deg))
}

/// Orbit record of repeated application. `iterates` starts with the
/// initial series, `residuals[k]` is the coefficient distance between
/// iterates k and k + 1, and `steps` counts applications performed.
#[derive(Clone, Debug)]
pub struct IterationTrace {
    pub iterates: Vec<TaylorPoly>,
    pub residuals: Vec<f64>,
    pub converged: bool,
    pub steps: usize,
}

impl IterationTrace {
    pub fn last(&self) -> &TaylorPoly {
        self.iterates.last().expect("trace holds the initial series")
    }

    pub fn last_residual(&self) -> Option<f64> {
        self.residuals.last().copied()
    }
}

/// Iterates the operator from `f0` until successive truncated series agree
/// within `tol` in the coefficient sup distance, or `max_iter` applications
/// pass. Rotation symbols are rejected up front: an unweighted rotation has
/// a coefficient-support fixed set (see `in_rotation_fixed_set`), and a
/// rotation with a genuine weight admits no normalized fixed series to find.
pub fn iterate_to_fixed_point(
    sym: &OperatorSymbols,
    f0: &TaylorPoly,
    deg: usize,
    tol: f64,
    max_iter: usize,
) -> Result<IterationTrace> {
    let phi_t = sym.phi_schwarz().taylor(deg);
    let rot = classify_rotation(&phi_t, DEFAULT_TOL, 256);
    if rot.kind != RotationKind::NotRotation {
        if sym.omega_sup() > tol {
            return Err(Error::WeightedRotation);
        }
        return Err(Error::RotationSymbol { kind: rot.kind });
    }
    if (f0.at_zero() - ONE).norm() > DEFAULT_TOL {
        return Err(Error::NotNormalized(f0.at_zero()));
    }
    let psi = sym.weight_series(deg);
    let mut iterates = vec![f0.truncate(deg)];
    let mut residuals = Vec::new();
    let mut converged = false;
    for _ in 0..max_iter {
        let cur = iterates.last().expect("non-empty");
        let next = cur.compose(&phi_t, deg).multiply(&psi, deg);
        let res = cur.max_coeff_distance(&next);
        iterates.push(next);
        residuals.push(res);
        if res <= tol {
            converged = true;
            break;
        }
    }
    let steps = residuals.len();
    Ok(IterationTrace {
        iterates,
        residuals,
        converged,
        steps,
    })
}

/// Membership in the fixed set of the unweighted rotation by λ, where λ has
/// multiplicative order `n`: every coefficient off the n-divisible indices
/// must vanish within `tol`.
pub fn in_rotation_fixed_set(
    lambda: Complex64,
    n: u32,
    f: &TaylorPoly,
    tol: f64,
) -> Result<bool> {
    if n == 0 {
        return Err(Error::Spec {
            field: "rotation order",
            reason: "must be at least 1".into(),
        });
    }
    let mut power = ONE;
    for _ in 0..n {
        power *= lambda;
    }
    if (power - ONE).norm() > ROOT_TOL {
        return Err(Error::RootMismatch { lambda, n });
    }
    let n = n as usize;
    for k in 0..=f.degree() {
        if k % n != 0 && f.coeff(k).norm() >= tol {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blaschke::BlaschkeProduct;
    use crate::subordination::{extreme_point, AlphaParam};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn rotation_classification() {
        let id = classify_rotation(&TaylorPoly::identity(), 1e-9, 256);
        assert_eq!(id.kind, RotationKind::Identity);

        let neg = classify_rotation(&TaylorPoly::from_real(&[0.0, -1.0]), 1e-9, 256);
        assert_eq!(neg.kind, RotationKind::RootOfUnity(2));
        assert!((neg.lambda.unwrap() - c(-1.0, 0.0)).norm() < 1e-15);

        let quarter = classify_rotation(&TaylorPoly::new(vec![c(0.0, 0.0), c(0.0, 1.0)]), 1e-9, 256);
        assert_eq!(quarter.kind, RotationKind::RootOfUnity(4));

        let irr = classify_rotation(
            &TaylorPoly::new(vec![c(0.0, 0.0), Complex64::from_polar(1.0, 0.7)]),
            1e-9,
            256,
        );
        assert_eq!(irr.kind, RotationKind::IrrationalRotation);

        let contraction = classify_rotation(&TaylorPoly::from_real(&[0.0, 0.5]), 1e-9, 256);
        assert_eq!(contraction.kind, RotationKind::NotRotation);
        assert!(contraction.lambda.is_none());

        let shifted = classify_rotation(&TaylorPoly::from_real(&[0.1, 1.0]), 1e-9, 256);
        assert_eq!(shifted.kind, RotationKind::NotRotation);

        let dirty = TaylorPoly::from_real(&[0.0, 1.0, 1e-6]);
        assert_eq!(classify_rotation(&dirty, 1e-9, 256).kind, RotationKind::NotRotation);
        assert_eq!(classify_rotation(&dirty, 1e-5, 256).kind, RotationKind::Identity);

        let blaschke_id = BlaschkeProduct::new(vec![c(0.0, 0.0)], 0.0).unwrap().taylor(8);
        assert_eq!(classify_rotation(&blaschke_id, 1e-9, 256).kind, RotationKind::Identity);
    }

    fn contraction_sym() -> OperatorSymbols {
        OperatorSymbols::with_defaults(
            AlphaParam::real(0.5).unwrap(),
            TaylorPoly::from_real(&[0.0, 0.125]).into(),
            TaylorPoly::from_real(&[0.0, 0.25]).into(),
        )
        .unwrap()
    }

    #[test]
    fn apply_composition_rescales_coefficients() {
        let sym = OperatorSymbols::composition(
            AlphaParam::real(0.3).unwrap(),
            TaylorPoly::from_real(&[0.0, 0.5]).into(),
        )
        .unwrap();
        let f = TaylorPoly::from_real(&[1.0, 2.0]);
        let g = apply_operator(&sym, &f, 8).unwrap();
        assert!((g.coeff(0) - c(1.0, 0.0)).norm() < 1e-15);
        assert!((g.coeff(1) - c(1.0, 0.0)).norm() < 1e-15);
        for k in 2..=8 {
            assert!(g.coeff(k).norm() < 1e-15);
        }
    }

    #[test]
    fn apply_on_constant_one_returns_the_weight() {
        let sym = contraction_sym();
        let g = apply_operator(&sym, &TaylorPoly::one(), 32).unwrap();
        assert!(g.max_coeff_distance(&sym.weight_series(32)) < 1e-15);
    }

    #[test]
    fn apply_rejects_unnormalized_input() {
        let sym = contraction_sym();
        let bad = TaylorPoly::from_real(&[2.0, 1.0]);
        assert!(matches!(
            apply_operator(&sym, &bad, 8),
            Err(Error::NotNormalized(_))
        ));
    }

    #[test]
    fn contraction_orbit_converges_from_two_starts() {
        let sym = contraction_sym();
        let deg = 64;
        let a = iterate_to_fixed_point(&sym, &TaylorPoly::one(), deg, 1e-10, 10_000).unwrap();
        let f0 = extreme_point(sym.alpha(), c(1.0, 0.0), deg).unwrap();
        let b = iterate_to_fixed_point(&sym, &f0, deg, 1e-10, 10_000).unwrap();
        assert!(a.converged && b.converged);
        assert!(a.steps < 200 && b.steps < 200, "steps {} and {}", a.steps, b.steps);
        assert!(a.last().max_coeff_distance(b.last()) < 1e-9);
        let fixed = apply_operator(&sym, a.last(), deg).unwrap();
        assert!(fixed.max_coeff_distance(a.last()) < 1e-9);
        assert!(a.last_residual().unwrap() <= 1e-10);
    }

    #[test]
    fn unweighted_contraction_flattens_to_constant_one() {
        let sym = OperatorSymbols::composition(
            AlphaParam::real(0.7).unwrap(),
            TaylorPoly::from_real(&[0.0, 0.5]).into(),
        )
        .unwrap();
        let f0 = extreme_point(sym.alpha(), c(-1.0, 0.0), 64).unwrap();
        let trace = iterate_to_fixed_point(&sym, &f0, 64, 1e-10, 10_000).unwrap();
        assert!(trace.converged);
        let lim = trace.last();
        assert!((lim.coeff(0) - c(1.0, 0.0)).norm() < 1e-9);
        for k in 1..=lim.degree() {
            assert!(lim.coeff(k).norm() < 1e-9, "coefficient {k} survived");
        }
    }

    #[test]
    fn rotations_are_rerouted() {
        let id = OperatorSymbols::composition(AlphaParam::real(0.5).unwrap(), TaylorPoly::identity().into())
            .unwrap();
        assert!(matches!(
            iterate_to_fixed_point(&id, &TaylorPoly::one(), 16, 1e-10, 100),
            Err(Error::RotationSymbol {
                kind: RotationKind::Identity
            })
        ));

        let half_turn = OperatorSymbols::composition(
            AlphaParam::real(0.5).unwrap(),
            TaylorPoly::from_real(&[0.0, -1.0]).into(),
        )
        .unwrap();
        assert!(matches!(
            iterate_to_fixed_point(&half_turn, &TaylorPoly::one(), 16, 1e-10, 100),
            Err(Error::RotationSymbol {
                kind: RotationKind::RootOfUnity(2)
            })
        ));

        let weighted = OperatorSymbols::with_defaults(
            AlphaParam::real(1.0).unwrap(),
            TaylorPoly::from_real(&[0.0, 0.125]).into(),
            TaylorPoly::from_real(&[0.0, -1.0]).into(),
        )
        .unwrap();
        assert!(matches!(
            iterate_to_fixed_point(&weighted, &TaylorPoly::one(), 16, 1e-10, 100),
            Err(Error::WeightedRotation)
        ));
    }

    #[test]
    fn rotation_fixed_set_is_coefficient_support() {
        let even = TaylorPoly::from_real(&[1.0, 0.0, 0.3, 0.0, -0.2]);
        let odd_leak = TaylorPoly::from_real(&[1.0, 0.0, 0.3, 1e-6]);
        let lam = c(-1.0, 0.0);
        assert!(in_rotation_fixed_set(lam, 2, &even, 1e-9).unwrap());
        assert!(!in_rotation_fixed_set(lam, 2, &odd_leak, 1e-9).unwrap());

        let quarter = c(0.0, 1.0);
        let supported = TaylorPoly::from_real(&[1.0, 0.0, 0.0, 0.0, 0.5, 0.0, 0.0, 0.0, 0.1]);
        assert!(in_rotation_fixed_set(quarter, 4, &supported, 1e-9).unwrap());
        assert!(!in_rotation_fixed_set(quarter, 4, &even, 1e-9).unwrap());

        assert!(in_rotation_fixed_set(c(1.0, 0.0), 1, &odd_leak, 1e-9).unwrap());
        assert!(matches!(
            in_rotation_fixed_set(quarter, 2, &even, 1e-9),
            Err(Error::RootMismatch { .. })
        ));
        assert!(in_rotation_fixed_set(lam, 0, &even, 1e-9).is_err());
    }
}
