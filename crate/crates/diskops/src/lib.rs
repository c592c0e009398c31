//! Computational tools for subordination classes of the unit disk and the
//! weighted composition operators that act on them.
//!
//! A function belongs to the class with parameter α (|α| ≤ 1, α ≠ -1) when
//! it is analytic on the disk, equals 1 at the origin, and takes values in
//! the half-plane {w : 2 Re[(1 + ᾱ)w] > 1 - |α|²}. The generator
//! T_α(z) = (1 + αz)/(1 - z) maps the disk onto that half-plane, so the
//! class is exactly {T_α ∘ ω : ω Schwarz}. The operator built from a
//! Schwarz function ω and a self-map φ sends f to (T_α ∘ ω) · (f ∘ φ); the
//! central question is whether it maps the class into itself, and the
//! answer is a pointwise margin inequality in ω and |φ|. Everything here
//! either evaluates that margin, cross-checks it against an independent
//! route, or explores its consequences.
//!
//! The examples tour the capabilities:
//!
//! | example | shows |
//! |---|---|
//! | `disk_arithmetic` | truncated series, Blaschke products, sup norms |
//! | `class_membership` | membership, coefficient and growth bounds |
//! | `preservation_check` | the margin scan and the brute-force oracle |
//! | `sufficient_families` | sup-norm gates and ready-made symbol families |
//! | `boundary_probe` | inner-like symbols and the boundary classifier |
//! | `fixed_points` | operator iteration and rotation fixed sets |
//!
//! The `diskops` binary drives the same machinery from JSON symbol files:
//! `check` scans margins, `verify-examples` runs the seeded claim battery,
//! `iterate` finds fixed series, `classify` reports boundary behavior.

pub mod blaschke;
pub mod cli;
pub mod criterion;
pub mod dynamics;
pub mod error;
pub mod families;
pub mod function;
pub mod grid;
pub mod io;
pub mod schwarz;
pub mod search;
pub mod subordination;
pub mod taylor;
pub mod verify;

pub use blaschke::BlaschkeProduct;
pub use criterion::{check_preservation, criterion_margin, OperatorSymbols, Verdict};
pub use error::{Error, Result};
pub use function::{DiskEval, DiskFunction};
pub use grid::DiskGrid;
pub use schwarz::SchwarzFn;
pub use subordination::AlphaParam;
pub use taylor::TaylorPoly;
