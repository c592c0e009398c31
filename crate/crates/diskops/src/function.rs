//! A symbol on the disk in either representation.

use num_complex::Complex64;

use crate::blaschke::BlaschkeProduct;
use crate::taylor::TaylorPoly;

/// Pointwise evaluation on the closed unit disk.
pub trait DiskEval {
    fn at(&self, z: Complex64) -> Complex64;
}

impl DiskEval for TaylorPoly {
    fn at(&self, z: Complex64) -> Complex64 {
        self.eval(z)
    }
}

impl DiskEval for BlaschkeProduct {
    fn at(&self, z: Complex64) -> Complex64 {
        self.eval(z)
    }
}

/// Either a truncated series or an exact finite Blaschke product. Operator
/// symbols accept both shapes; series-based operations convert through
/// [`DiskFunction::taylor`].
#[derive(Clone, Debug, PartialEq)]
pub enum DiskFunction {
    Poly(TaylorPoly),
    Blaschke(BlaschkeProduct),
}

impl DiskFunction {
    pub fn at_zero(&self) -> Complex64 {
        match self {
            DiskFunction::Poly(p) => p.at_zero(),
            DiskFunction::Blaschke(b) => b.eval(Complex64::new(0.0, 0.0)),
        }
    }

    /// Series coefficients through order `deg`. Exact for a polynomial of
    /// degree ≤ deg, and exact through `deg` for a Blaschke product.
    pub fn taylor(&self, deg: usize) -> TaylorPoly {
        match self {
            DiskFunction::Poly(p) => p.truncate(deg),
            DiskFunction::Blaschke(b) => b.taylor(deg),
        }
    }

    pub fn is_blaschke(&self) -> bool {
        matches!(self, DiskFunction::Blaschke(_))
    }
}

impl DiskEval for DiskFunction {
    fn at(&self, z: Complex64) -> Complex64 {
        match self {
            DiskFunction::Poly(p) => p.eval(z),
            DiskFunction::Blaschke(b) => b.eval(z),
        }
    }
}

impl From<TaylorPoly> for DiskFunction {
    fn from(p: TaylorPoly) -> Self {
        DiskFunction::Poly(p)
    }
}

impl From<BlaschkeProduct> for DiskFunction {
    fn from(b: BlaschkeProduct) -> Self {
        DiskFunction::Blaschke(b)
    }
}
