//! Closed-form sufficient conditions: norm gates that certify preservation
//! without scanning, and the quadratic pair construction that sits close
//! enough to the boundary to need the scan after all.

use diskops::families::{
    negative_alpha_condition, negative_alpha_polynomial, negative_alpha_radius, norm_condition,
    quadratic_min_k, quadratic_symbols, small_norm_threshold,
};
use diskops::{check_preservation, AlphaParam, DiskFunction, DiskGrid, OperatorSymbols, SchwarzFn, TaylorPoly};
use num_complex::Complex64;

fn poly(coeffs: &[f64]) -> DiskFunction {
    DiskFunction::from(TaylorPoly::new(
        coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
    ))
}

fn main() {
    // Small norms certify preservation outright: the gate is
    // A + B + AB < 1 on the sup norms of omega and phi.
    println!("sum gate A + B + AB < 1:");
    for (a, b) in [(0.3, 0.3), (0.3, 0.6), (0.5, 0.4)] {
        println!("  A = {a}, B = {b}: certified = {}", norm_condition(a, b).unwrap());
    }

    // The symmetric threshold is sqrt(2) - 1: both norms below it pass.
    let t = small_norm_threshold();
    println!("symmetric threshold sqrt(2) - 1 = {t:.12}");
    println!("  gate at 0.999 t: {}", norm_condition(0.999 * t, 0.999 * t).unwrap());
    println!("  gate at 1.001 t: {}", norm_condition(1.001 * t, 1.001 * t).unwrap());

    // A gated pair really does preserve: alpha = -1/2 with small norms.
    let alpha = AlphaParam::real(-0.5).unwrap();
    println!("\nnegative alpha = -0.5, omega = 0.2 z, phi = 0.15 z:");
    println!("  gate: {}", negative_alpha_condition(0.2, 0.15, -0.5).unwrap());
    let sym = OperatorSymbols::from_schwarz(
        alpha,
        SchwarzFn::validate_default(poly(&[0.0, 0.2])).unwrap(),
        SchwarzFn::validate_default(poly(&[0.0, 0.15])).unwrap(),
    );
    let rep = check_preservation(&sym, &DiskGrid::default(), 1e-9);
    println!("  scan verdict: {} (min margin {:.4})", rep.verdict, rep.min_margin);

    // As alpha approaches -1 the gate degenerates to a quartic in the common
    // norm; its positive root is the radius of the safe ball.
    let s0 = negative_alpha_radius();
    println!("\nlimiting quartic 2x^4 + 8x^3 + 12x^2 - 1:");
    println!("  positive root s0 = {s0:.10}");
    println!("  residual {:.2e}", negative_alpha_polynomial(s0).abs());
    let near = -1.0 + 1e-7;
    println!("  gate at 0.99 s0, alpha = {near}: {}",
        negative_alpha_condition(0.99 * s0, 0.99 * s0, near).unwrap());
    println!("  gate at 1.01 s0, alpha = {near}: {}",
        negative_alpha_condition(1.01 * s0, 1.01 * s0, near).unwrap());

    // The quadratic construction phi = z(az + b), omega = z(cz + d) needs
    // K > 2 + sqrt(5) and lands within microns of the preservation boundary.
    println!("\nquadratic pairs at alpha = 1, a = b = 1/2:");
    println!("  minimal K = 2 + sqrt(5) = {:.10}", quadratic_min_k());
    match quadratic_symbols(0.5, 0.5, 4.0) {
        Ok(_) => println!("  K = 4 accepted (unexpected)"),
        Err(e) => println!("  K = 4 rejected: {e}"),
    }
    let sym = quadratic_symbols(0.5, 0.5, 5.0).unwrap();
    let rep = check_preservation(&sym, &DiskGrid::default(), 1e-9);
    println!("  K = 5 scan: {} with min margin {:.3e} near the boundary",
        rep.verdict, rep.min_margin);
    println!("  (positive, but four orders tighter than the contracting pair)");
}
