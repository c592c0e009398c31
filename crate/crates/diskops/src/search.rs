//! One-dimensional search helpers: golden-section refinement for the
//! boundary suprema and bracketed bisection for the family thresholds.

use crate::error::{Error, Result};

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Maximizes `f` on [lo, hi] by golden-section search, returning the best
/// (argument, value) pair seen. The search narrows toward a local maximum;
/// callers bracket the global argmax with a coarse scan first.
pub fn golden_section_max<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, steps: usize) -> (f64, f64) {
    let mut a = lo;
    let mut b = hi;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    let mut best = if f1 >= f2 { (x1, f1) } else { (x2, f2) };
    for _ in 0..steps {
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        }
        let (x, v) = if f1 >= f2 { (x1, f1) } else { (x2, f2) };
        if v > best.1 {
            best = (x, v);
        }
    }
    best
}

/// Bisection for a root of `f` in [lo, hi]. Requires a sign change over the
/// bracket; runs until the bracket is narrower than `tol` or `max_iter`
/// halvings have happened.
pub fn bisect_root<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64, max_iter: usize) -> Result<f64> {
    let mut a = lo;
    let mut b = hi;
    let fa = f(a);
    let fb = f(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::NoBracket { lo, hi });
    }
    let neg_left = fa < 0.0;
    for _ in 0..max_iter {
        let m = 0.5 * (a + b);
        let fm = f(m);
        if fm == 0.0 {
            return Ok(m);
        }
        if (fm < 0.0) == neg_left {
            a = m;
        } else {
            b = m;
        }
        if b - a < tol {
            break;
        }
    }
    Ok(0.5 * (a + b))
}
