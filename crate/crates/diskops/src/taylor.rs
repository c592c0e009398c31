//! Truncated power series with complex coefficients.
//!
//! `TaylorPoly` stores the coefficients c₀..c_N of a polynomial in z and is
//! the working representation for every analytic object in this crate:
//! class members, Schwarz symbols, weights, iterates. Products and
//! compositions take an explicit truncation order so the caller controls the
//! error budget; when the inner function vanishes at 0, truncated composition
//! and reciprocal are coefficient-exact through that order.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Truncated power series Σ_{n=0}^{N} c_n zⁿ.
#[derive(Clone, Debug, PartialEq)]
pub struct TaylorPoly {
    coeffs: Vec<Complex64>,
}

impl TaylorPoly {
    /// Wraps raw coefficients. At least the constant term must be present.
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least its constant term");
        TaylorPoly { coeffs }
    }

    /// The constant series c.
    pub fn constant(c: Complex64) -> Self {
        TaylorPoly { coeffs: vec![c] }
    }

    /// The constant series 1.
    pub fn one() -> Self {
        Self::constant(Complex64::new(1.0, 0.0))
    }

    /// The zero series.
    pub fn zero() -> Self {
        Self::constant(Complex64::new(0.0, 0.0))
    }

    /// The identity series z.
    pub fn identity() -> Self {
        TaylorPoly {
            coeffs: vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)],
        }
    }

    /// Builds a series from real coefficients.
    pub fn from_real(coeffs: &[f64]) -> Self {
        assert!(!coeffs.is_empty());
        TaylorPoly {
            coeffs: coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient c_n, zero beyond the stored degree.
    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs
            .get(n)
            .copied()
            .unwrap_or_else(|| Complex64::new(0.0, 0.0))
    }

    pub fn at_zero(&self) -> Complex64 {
        self.coeffs[0]
    }

    /// Horner evaluation at z.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Cuts or zero-extends to exactly deg + 1 coefficients.
    pub fn truncate(&self, deg: usize) -> TaylorPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(deg + 1, Complex64::new(0.0, 0.0));
        TaylorPoly { coeffs }
    }

    pub fn scale(&self, c: Complex64) -> TaylorPoly {
        TaylorPoly {
            coeffs: self.coeffs.iter().map(|&a| a * c).collect(),
        }
    }

    pub fn scale_real(&self, x: f64) -> TaylorPoly {
        self.scale(Complex64::new(x, 0.0))
    }

    /// Coefficientwise sum, extended to the longer length.
    pub fn add(&self, other: &TaylorPoly) -> TaylorPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        TaylorPoly { coeffs }
    }

    /// Coefficientwise difference, extended to the longer length.
    pub fn sub(&self, other: &TaylorPoly) -> TaylorPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - other.coeff(k)).collect();
        TaylorPoly { coeffs }
    }

    /// Largest coefficient gap max_n |c_n - d_n|, compared through the longer
    /// of the two series.
    pub fn max_coeff_distance(&self, other: &TaylorPoly) -> f64 {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n)
            .map(|k| (self.coeff(k) - other.coeff(k)).norm())
            .fold(0.0, f64::max)
    }

    /// Σ |c_n|, a cheap bound for |f| on the closed disk.
    pub fn coeff_one_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).sum()
    }

    /// Cauchy product with `other`, truncated at order `deg`.
    pub fn multiply(&self, other: &TaylorPoly, deg: usize) -> TaylorPoly {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); deg + 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if i > deg {
                break;
            }
            let jmax = (deg - i).min(other.coeffs.len() - 1);
            for j in 0..=jmax {
                coeffs[i + j] += a * other.coeffs[j];
            }
        }
        TaylorPoly { coeffs }
    }

    /// Composition self(inner(z)) truncated at order `deg`, by a truncated
    /// Horner sweep. Exact through `deg` whenever inner(0) = 0; for a general
    /// polynomial inner it is the truncation of the exact polynomial
    /// composition.
    pub fn compose(&self, inner: &TaylorPoly, deg: usize) -> TaylorPoly {
        let mut acc = TaylorPoly::constant(self.coeffs[self.degree()]).truncate(deg);
        for k in (0..self.degree()).rev() {
            acc = acc.multiply(inner, deg);
            acc.coeffs[0] += self.coeffs[k];
        }
        acc
    }

    /// Reciprocal series 1/self through order `deg`. The constant term must
    /// not vanish.
    pub fn invert(&self, deg: usize) -> Result<TaylorPoly> {
        let a0 = self.coeffs[0];
        if a0.norm() < 1e-150 {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = Complex64::new(1.0, 0.0) / a0;
        let mut coeffs = vec![Complex64::new(0.0, 0.0); deg + 1];
        coeffs[0] = inv0;
        for n in 1..=deg {
            let mut s = Complex64::new(0.0, 0.0);
            for k in 1..=n.min(self.coeffs.len() - 1) {
                s += self.coeffs[k] * coeffs[n - k];
            }
            coeffs[n] = -inv0 * s;
        }
        Ok(TaylorPoly { coeffs })
    }
}

impl std::fmt::Display for TaylorPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (n, c) in self.coeffs.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({:.6} {:+.6}i)", c.re, c.im)?;
            if n == 1 {
                write!(f, " z")?;
            } else if n > 1 {
                write!(f, " z^{n}")?;
            }
        }
        Ok(())
    }
}
