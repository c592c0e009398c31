//! Iterating the operator: convergence to the unique fixed series when phi
//! contracts, collapse to the constant 1 for plain composition, and the
//! coefficient-support description of fixed sets under rotations.

use diskops::dynamics::{
    apply_operator, classify_rotation, in_rotation_fixed_set, iterate_to_fixed_point,
};
use diskops::subordination::extreme_point;
use diskops::{AlphaParam, DiskFunction, OperatorSymbols, SchwarzFn, TaylorPoly};
use num_complex::Complex64;

fn line(coeffs: &[f64]) -> SchwarzFn {
    SchwarzFn::validate_default(DiskFunction::from(TaylorPoly::new(
        coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
    )))
    .unwrap()
}

fn main() {
    // omega = z/8, phi = z/4 at alpha = 1/2: the orbit of any member is a
    // coefficientwise contraction.
    let alpha = AlphaParam::real(0.5).unwrap();
    let sym = OperatorSymbols::from_schwarz(alpha, line(&[0.0, 0.125]), line(&[0.0, 0.25]));

    let deg = 64;
    let from_one = iterate_to_fixed_point(&sym, &TaylorPoly::one(), deg, 1e-10, 10_000).unwrap();
    println!("iteration from the constant 1:");
    println!("  converged in {} steps, final residual {:.2e}",
        from_one.steps, from_one.last_residual().unwrap());
    for (k, c) in from_one.last().coeffs().iter().take(4).enumerate() {
        println!("  c[{k}] = {:.10}", c);
    }

    // A different start lands on the same fixed series.
    let gen = extreme_point(alpha, Complex64::new(1.0, 0.0), deg).unwrap();
    let from_gen = iterate_to_fixed_point(&sym, &gen, deg, 1e-10, 10_000).unwrap();
    println!("from the extreme member: {} steps, limit gap {:.2e}",
        from_gen.steps, from_gen.last().max_coeff_distance(from_one.last()));

    // The limit really is fixed: applying the operator once moves nothing.
    let reapplied = apply_operator(&sym, from_one.last(), deg).unwrap();
    println!("fixed-point defect {:.2e}", reapplied.max_coeff_distance(from_one.last()));

    // Plain composition with phi = z/2 flattens everything to the constant 1.
    let comp = OperatorSymbols::composition(
        AlphaParam::real(0.6).unwrap(),
        DiskFunction::from(TaylorPoly::new(vec![
            Complex64::new(0.0, 0.0),
            Complex64::new(0.5, 0.0),
        ])),
    )
    .unwrap();
    let trace = iterate_to_fixed_point(&comp, &gen, deg, 1e-10, 10_000).unwrap();
    let limit = trace.last();
    let tail: f64 = limit.coeffs()[1..].iter().map(|c| c.norm()).fold(0.0, f64::max);
    println!("\ncomposition with z/2: {} steps, limit = 1 + (tail below {:.1e})",
        trace.steps, tail);

    // Rotations have no contraction to lean on; iteration refuses and the
    // fixed set is described by coefficient support instead.
    let half_turn = OperatorSymbols::composition(
        AlphaParam::real(0.4).unwrap(),
        DiskFunction::from(TaylorPoly::new(vec![
            Complex64::new(0.0, 0.0),
            Complex64::new(-1.0, 0.0),
        ])),
    )
    .unwrap();
    let rot = classify_rotation(&half_turn.phi_schwarz().taylor(deg), 1e-9, 256);
    println!("\nphi = -z is {}", rot.kind);
    match iterate_to_fixed_point(&half_turn, &TaylorPoly::one(), deg, 1e-10, 100) {
        Ok(_) => println!("  iteration ran (unexpected)"),
        Err(e) => println!("  iteration declined: {e}"),
    }

    // Members with only even powers of z are exactly the fixed ones.
    let even_omega = line(&[0.0, 0.0, 0.5]);
    let even = diskops::subordination::member_from_schwarz(
        AlphaParam::real(0.4).unwrap(),
        &even_omega,
        deg,
    );
    let lambda = Complex64::new(-1.0, 0.0);
    println!("  even member fixed: {}",
        in_rotation_fixed_set(lambda, 2, &even, 1e-9).unwrap());
    let odd_omega = line(&[0.0, 0.3]);
    let generic = diskops::subordination::member_from_schwarz(
        AlphaParam::real(0.4).unwrap(),
        &odd_omega,
        deg,
    );
    println!("  generic member fixed: {}",
        in_rotation_fixed_set(lambda, 2, &generic, 1e-9).unwrap());
}
