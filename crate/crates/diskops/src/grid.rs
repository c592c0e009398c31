//! Sampling grids on the unit disk.
//!
//! A `DiskGrid` carries three sample families: interior radii for bulk scans,
//! a near-boundary radius ladder 1 - 2^{-k} for limit behavior, and a set of
//! equispaced angles. Membership and growth checks sweep the interior
//! samples; preservation scans additionally sweep the boundary ladder, where
//! failures of inner-type symbols concentrate.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Interior radii stop here; closer to the circle a degree-64 truncation no
/// longer tracks its function and the boundary ladder takes over.
pub const INTERIOR_MAX_RADIUS: f64 = 0.9;

pub const DEFAULT_RADIAL: usize = 24;
pub const DEFAULT_ANGULAR: usize = 128;
pub const DEFAULT_BOUNDARY_K: u32 = 20;

#[derive(Clone, Debug, PartialEq)]
pub struct DiskGrid {
    radii: Vec<f64>,
    angles: Vec<f64>,
    boundary_radii: Vec<f64>,
}

impl DiskGrid {
    /// `radial` equispaced interior radii in (0, 0.9], `angular` equispaced
    /// angles, and the ladder 1 - 2^{-k} for k = 1..=boundary_k_max.
    pub fn new(radial: usize, angular: usize, boundary_k_max: u32) -> Result<Self> {
        if radial == 0 || angular == 0 {
            return Err(Error::EmptyGrid);
        }
        let radii = (1..=radial)
            .map(|i| INTERIOR_MAX_RADIUS * i as f64 / radial as f64)
            .collect();
        let angles = (0..angular)
            .map(|j| 2.0 * std::f64::consts::PI * j as f64 / angular as f64)
            .collect();
        let boundary_radii = (1..=boundary_k_max)
            .map(|k| 1.0 - 0.5f64.powi(k as i32))
            .collect();
        Ok(DiskGrid {
            radii,
            angles,
            boundary_radii,
        })
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    pub fn boundary_radii(&self) -> &[f64] {
        &self.boundary_radii
    }

    /// Interior sample points, radii x angles.
    pub fn samples(&self) -> Vec<Complex64> {
        let mut out = Vec::with_capacity(self.radii.len() * self.angles.len());
        for &r in &self.radii {
            for &t in &self.angles {
                out.push(Complex64::from_polar(r, t));
            }
        }
        out
    }

    /// Near-boundary sample points, ladder radii x angles.
    pub fn boundary_samples(&self) -> Vec<Complex64> {
        let mut out = Vec::with_capacity(self.boundary_radii.len() * self.angles.len());
        for &r in &self.boundary_radii {
            for &t in &self.angles {
                out.push(Complex64::from_polar(r, t));
            }
        }
        out
    }
}

impl Default for DiskGrid {
    fn default() -> Self {
        DiskGrid::new(DEFAULT_RADIAL, DEFAULT_ANGULAR, DEFAULT_BOUNDARY_K).unwrap()
    }
}
