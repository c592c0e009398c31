//! Error type shared across the crate.

use num_complex::Complex64;
use thiserror::Error;

use crate::dynamics::RotationKind;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug)]
pub enum Error {
    #[error("alpha = {0} lies outside the closed unit disk")]
    AlphaOutOfRange(Complex64),
    #[error("alpha = -1 degenerates the target half-plane to a line; the class is not defined there")]
    AlphaDegenerate,
    #[error("pole: the map is singular at {0}")]
    PoleAt(Complex64),
    #[error("not a Schwarz function: |f(0)| = {at_zero:.3e}, sup estimate = {sup:.6}")]
    NotSchwarz { at_zero: f64, sup: f64 },
    #[error("series is not normalized: constant term {0} should be 1")]
    NotNormalized(Complex64),
    #[error("cannot invert a series whose constant term vanishes")]
    ZeroConstantTerm,
    #[error("Blaschke zero {0} must lie strictly inside the unit disk")]
    BlaschkeZeroOutOfRange(Complex64),
    #[error("a Blaschke product needs at least one zero")]
    BlaschkeEmpty,
    #[error("point {0} lies outside the open unit disk")]
    OutsideDisk(Complex64),
    #[error("lambda = {0} is not unimodular")]
    NotUnimodular(Complex64),
    #[error("denominator of the induced symbol vanishes at z = {z}, lambda = {lambda}")]
    DegenerateDenominator { z: Complex64, lambda: Complex64 },
    #[error("need at least 8 lambda samples, got {0}")]
    LambdaCountTooSmall(usize),
    #[error("integral-mean exponent p = {0} must lie in (0, 1)")]
    ExponentOutOfRange(f64),
    #[error("margin {0} must lie strictly between 0 and 1")]
    MarginOutOfRange(f64),
    #[error("need degree at least 1 for a nontrivial draw")]
    DegreeTooSmall,
    #[error("grid must have at least one radius and one angle")]
    EmptyGrid,
    #[error("invalid symbol family: {0}")]
    InvalidFamily(String),
    #[error("scale {value} is below the family threshold {min}")]
    ThresholdNotMet { value: f64, min: f64 },
    #[error("alpha = {0} must be real in (-1, 0) for this condition")]
    AlphaNotNegative(f64),
    #[error("norm bound {0} must lie in [0, 1)")]
    NormOutOfRange(f64),
    #[error(
        "symbol is a rotation ({kind}); the fixed points form a coefficient-support set, \
         use the rotation classifier instead of iteration"
    )]
    RotationSymbol { kind: RotationKind },
    #[error(
        "rotation symbol with a nontrivial weight: a rotation has unimodular boundary values, \
         so preservation forces the weight to be identically 1; this operator has no fixed-point theory here"
    )]
    WeightedRotation,
    #[error("lambda = {lambda} is not an order-{n} root of unity")]
    RootMismatch { lambda: Complex64, n: u32 },
    #[error("bisection needs a sign change over the bracket [{lo}, {hi}]")]
    NoBracket { lo: f64, hi: f64 },
    #[error("field `{field}`: {reason}")]
    Spec { field: &'static str, reason: String },
    #[error("cannot parse {path}: {source}")]
    Parse {
        path: String,
        #[source]
        source: serde_json::Error,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
