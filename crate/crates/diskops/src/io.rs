//! File formats: the JSON symbol specification consumed by the command-line
//! tools, the run report they emit, and the CSV margin dump.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::blaschke::BlaschkeProduct;
use crate::criterion::{criterion_margin, CriterionReport, OperatorSymbols};
use crate::error::{Error, Result};
use crate::function::DiskFunction;
use crate::grid::{DiskGrid, DEFAULT_ANGULAR, DEFAULT_BOUNDARY_K, DEFAULT_RADIAL};
use crate::schwarz::DEFAULT_TOL;
use crate::subordination::AlphaParam;
use crate::taylor::TaylorPoly;

fn default_radial() -> usize {
    DEFAULT_RADIAL
}

fn default_angular() -> usize {
    DEFAULT_ANGULAR
}

fn default_boundary_k() -> u32 {
    DEFAULT_BOUNDARY_K
}

fn default_tol() -> f64 {
    DEFAULT_TOL
}

/// Sampling resolution. Interior radii are spread up to 0.9; the
/// near-boundary ladder has radii 1 - 2^-k for k = 1..=boundary_k_max.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    #[serde(default = "default_radial")]
    pub radial: usize,
    #[serde(default = "default_angular")]
    pub angular: usize,
    #[serde(default = "default_boundary_k")]
    pub boundary_k_max: u32,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec {
            radial: DEFAULT_RADIAL,
            angular: DEFAULT_ANGULAR,
            boundary_k_max: DEFAULT_BOUNDARY_K,
        }
    }
}

/// A symbol function: either a polynomial by coefficients or a finite
/// Blaschke product by zeros and a rotation angle. Complex numbers are
/// [re, im] pairs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FunctionSpec {
    Poly {
        coeffs: Vec<[f64; 2]>,
    },
    Blaschke {
        zeros: Vec<[f64; 2]>,
        #[serde(default)]
        rotation: f64,
    },
}

impl FunctionSpec {
    fn build(&self, field: &'static str) -> Result<DiskFunction> {
        match self {
            FunctionSpec::Poly { coeffs } => {
                if coeffs.is_empty() {
                    return Err(Error::Spec {
                        field,
                        reason: "polynomial needs at least one coefficient".into(),
                    });
                }
                let c = coeffs.iter().map(|&[re, im]| Complex64::new(re, im)).collect();
                Ok(TaylorPoly::new(c).into())
            }
            FunctionSpec::Blaschke { zeros, rotation } => {
                let z = zeros.iter().map(|&[re, im]| Complex64::new(re, im)).collect();
                Ok(BlaschkeProduct::new(z, *rotation)?.into())
            }
        }
    }

    fn from_function(f: &DiskFunction) -> Self {
        match f {
            DiskFunction::Poly(p) => FunctionSpec::Poly {
                coeffs: p.coeffs().iter().map(|c| [c.re, c.im]).collect(),
            },
            DiskFunction::Blaschke(b) => FunctionSpec::Blaschke {
                zeros: b.zeros().iter().map(|c| [c.re, c.im]).collect(),
                rotation: b.rotation(),
            },
        }
    }
}

/// On-disk description of an operator: class parameter, both symbols, and
/// optional grid and tolerance overrides.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SymbolSpec {
    pub alpha: [f64; 2],
    pub omega: FunctionSpec,
    pub phi: FunctionSpec,
    #[serde(default)]
    pub grid: GridSpec,
    #[serde(default = "default_tol")]
    pub tol: f64,
}

impl SymbolSpec {
    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|source| Error::Parse {
            path: "<inline>".into(),
            source,
        })
    }

    pub fn from_path<P: AsRef<Path>>(path: P) -> Result<Self> {
        let text = std::fs::read_to_string(path.as_ref())?;
        serde_json::from_str(&text).map_err(|source| Error::Parse {
            path: path.as_ref().display().to_string(),
            source,
        })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// Validates everything and assembles the operator, the grid, and the
    /// tolerance to judge it with.
    pub fn build(&self) -> Result<(OperatorSymbols, DiskGrid, f64)> {
        if !(self.tol > 0.0 && self.tol < 1.0) {
            return Err(Error::Spec {
                field: "tol",
                reason: format!("must lie in (0, 1), got {}", self.tol),
            });
        }
        let alpha = AlphaParam::new(Complex64::new(self.alpha[0], self.alpha[1]))?;
        let omega = self.omega.build("omega")?;
        let phi = self.phi.build("phi")?;
        let grid = DiskGrid::new(self.grid.radial, self.grid.angular, self.grid.boundary_k_max)?;
        let sym = OperatorSymbols::new(alpha, omega, phi, &grid, self.tol)?;
        Ok((sym, grid, self.tol))
    }

    pub fn from_symbols(sym: &OperatorSymbols, grid: &DiskGrid, tol: f64) -> Self {
        SymbolSpec {
            alpha: [sym.alpha().get().re, sym.alpha().get().im],
            omega: FunctionSpec::from_function(sym.omega()),
            phi: FunctionSpec::from_function(sym.phi()),
            grid: GridSpec {
                radial: grid.radii().len(),
                angular: grid.angles().len(),
                boundary_k_max: grid.boundary_radii().len() as u32,
            },
            tol,
        }
    }
}

/// Result record written by the command-line tools.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunReport {
    pub verdict: String,
    pub min_margin: f64,
    pub witness: [f64; 2],
    pub near_boundary_min: Option<f64>,
    pub samples_checked: usize,
    pub classification: String,
    pub timings: BTreeMap<String, f64>,
}

impl RunReport {
    pub fn from_criterion(rep: &CriterionReport) -> Self {
        let classification = match &rep.boundary {
            Some(b) => b.class.to_string(),
            None => "unclassified".into(),
        };
        RunReport {
            verdict: rep.verdict.to_string(),
            min_margin: rep.min_margin,
            witness: [rep.witness.re, rep.witness.im],
            near_boundary_min: rep.near_boundary_min,
            samples_checked: rep.samples_checked,
            classification,
            timings: BTreeMap::new(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

/// Writes the interior margin samples as CSV with header `r,theta,margin`,
/// one row per grid sample, radii outermost.
pub fn write_margin_table<W: Write>(
    sym: &OperatorSymbols,
    grid: &DiskGrid,
    out: &mut W,
) -> Result<()> {
    writeln!(out, "r,theta,margin")?;
    for &r in grid.radii() {
        for &t in grid.angles() {
            let z = Complex64::from_polar(r, t);
            let m = criterion_margin(sym, z)?;
            writeln!(out, "{r},{t},{m}")?;
        }
    }
    Ok(())
}
