//! Finite Blaschke products, the exact inner functions of this crate.
//!
//! B(z) = e^{iθ} Π_k (z - a_k) / (1 - ā_k z) with every zero a_k strictly
//! inside the unit disk. |B| < 1 on the open disk and |B| = 1 on the circle,
//! so these serve as reference inputs wherever unimodular boundary behavior
//! is needed.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::taylor::TaylorPoly;

#[derive(Clone, Debug, PartialEq)]
pub struct BlaschkeProduct {
    zeros: Vec<Complex64>,
    rotation: f64,
}

impl BlaschkeProduct {
    /// Builds the product from its zeros and a rotation angle θ (radians).
    /// Every zero must satisfy |a| < 1 and at least one zero is required.
    pub fn new(zeros: Vec<Complex64>, rotation: f64) -> Result<Self> {
        if zeros.is_empty() {
            return Err(Error::BlaschkeEmpty);
        }
        for &a in &zeros {
            if a.norm() >= 1.0 {
                return Err(Error::BlaschkeZeroOutOfRange(a));
            }
        }
        Ok(BlaschkeProduct { zeros, rotation })
    }

    pub fn zeros(&self) -> &[Complex64] {
        &self.zeros
    }

    pub fn rotation(&self) -> f64 {
        self.rotation
    }

    /// True when some zero sits at the origin, i.e. B(0) = 0.
    pub fn vanishes_at_origin(&self) -> bool {
        self.zeros.iter().any(|a| a.norm() == 0.0)
    }

    /// Evaluates the product. Defined on the closed disk; the poles 1/ā_k
    /// all lie outside it.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        debug_assert!(z.norm() <= 1.0 + 1e-12, "Blaschke eval outside the closed disk");
        let mut acc = Complex64::from_polar(1.0, self.rotation);
        for &a in &self.zeros {
            acc *= (z - a) / (Complex64::new(1.0, 0.0) - a.conj() * z);
        }
        acc
    }

    /// Series coefficients through order `deg`, from the factor expansion
    /// (z - a)/(1 - ā z) = -a + Σ_{n≥1} ā^{n-1}(1 - |a|²) zⁿ.
    pub fn taylor(&self, deg: usize) -> TaylorPoly {
        let mut acc = TaylorPoly::constant(Complex64::from_polar(1.0, self.rotation));
        for &a in &self.zeros {
            let mut coeffs = vec![-a];
            let scale = 1.0 - a.norm_sqr();
            let mut pw = Complex64::new(1.0, 0.0);
            for _ in 1..=deg {
                coeffs.push(pw * scale);
                pw *= a.conj();
            }
            acc = acc.multiply(&TaylorPoly::new(coeffs), deg);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn single_zero_at_origin_is_identity() {
        let b = BlaschkeProduct::new(vec![c(0.0, 0.0)], 0.0).unwrap();
        let z = c(0.0, 0.5);
        assert!((b.eval(z) - z).norm() < 1e-15);
    }

    #[test]
    fn unimodular_on_the_circle() {
        let b = BlaschkeProduct::new(vec![c(0.0, 0.0), c(0.3, -0.2), c(-0.5, 0.1)], 0.7).unwrap();
        for j in 0..1024 {
            let t = 2.0 * std::f64::consts::PI * j as f64 / 1024.0;
            let v = b.eval(Complex64::from_polar(1.0, t));
            assert!((v.norm() - 1.0).abs() < 1e-12, "angle {t}: |B| = {}", v.norm());
        }
    }

    #[test]
    fn strictly_contractive_inside() {
        let b = BlaschkeProduct::new(vec![c(0.2, 0.0), c(0.0, -0.4)], 1.3).unwrap();
        for j in 0..64 {
            let t = 2.0 * std::f64::consts::PI * j as f64 / 64.0;
            let v = b.eval(Complex64::from_polar(0.9, t));
            assert!(v.norm() < 1.0);
        }
    }

    #[test]
    fn rejects_zero_on_or_outside_circle() {
        assert!(BlaschkeProduct::new(vec![c(1.0, 0.0)], 0.0).is_err());
        assert!(BlaschkeProduct::new(vec![c(0.8, 0.8)], 0.0).is_err());
    }

    #[test]
    fn rejects_empty_product() {
        assert!(BlaschkeProduct::new(vec![], 0.0).is_err());
    }

    #[test]
    fn taylor_matches_pointwise_values() {
        let b = BlaschkeProduct::new(vec![c(0.0, 0.0), c(0.4, 0.1)], 0.3).unwrap();
        let series = b.taylor(40);
        for j in 0..32 {
            let t = 2.0 * std::f64::consts::PI * j as f64 / 32.0;
            let z = Complex64::from_polar(0.5, t);
            // tail of the factor expansion at |z| = 1/2 decays like |a|^n 2^{-n}
            assert!((series.eval(z) - b.eval(z)).norm() < 1e-10);
        }
    }

    #[test]
    fn taylor_constant_term_vanishes_with_origin_zero() {
        let b = BlaschkeProduct::new(vec![c(0.0, 0.0), c(0.5, 0.0)], 0.0).unwrap();
        assert_eq!(b.taylor(8).at_zero(), c(0.0, 0.0));
        assert!(b.vanishes_at_origin());
    }
}
