//! Behavior toward the unit circle: the radius ladder, inner-likeness
//! classification, and the supremum of the image of an extreme member as
//! a second opinion on the margin sign.

use diskops::criterion::{classify_boundary, extreme_image_sup, criterion_margin};
use diskops::{AlphaParam, BlaschkeProduct, DiskFunction, DiskGrid, OperatorSymbols, TaylorPoly};
use num_complex::Complex64;

fn main() {
    let grid = DiskGrid::default();
    let ladder = grid.boundary_radii();
    println!("boundary ladder: {:.6} .. {:.10} ({} rungs)",
        ladder[0], ladder[ladder.len() - 1], ladder.len());

    // A Blaschke composition symbol is inner: |phi| tends to 1 along almost
    // every radius, which the ladder test picks up at every angle.
    let b = BlaschkeProduct::new(
        vec![Complex64::new(0.0, 0.0), Complex64::new(0.4, 0.0)],
        0.0,
    )
    .unwrap();
    let alpha = AlphaParam::real(0.5).unwrap();
    let weighted = OperatorSymbols::with_defaults(
        alpha,
        DiskFunction::from(TaylorPoly::new(vec![
            Complex64::new(0.0, 0.0),
            Complex64::new(0.3, 0.0),
        ])),
        DiskFunction::from(b),
    )
    .unwrap();
    let rep = classify_boundary(&weighted, grid.angles(), ladder, 0.02);
    println!("\nBlaschke phi with weight 0.3 z:");
    println!("  phi inner fraction {:.3}, omega inner fraction {:.3}",
        rep.phi_inner_fraction, rep.omega_inner_fraction);
    println!("  class: {}", rep.class);

    // Preservation with an inner phi forces a trivial weight, so the margin
    // must go negative somewhere near the circle. Watch it cross.
    println!("  margin along the worst ray:");
    let theta = 2.2;
    for r in [0.9, 0.99, 0.999, 0.9999] {
        let z = Complex64::from_polar(r, theta);
        println!("    r = {r:.4}: {:+.4}", criterion_margin(&weighted, z).unwrap());
    }

    // The sup over unimodular twists of the image of an extreme member tells
    // the same story: preservation needs it below 1.
    println!("  extreme-image sup vs 1:");
    for r in [0.5, 0.9, 0.999] {
        let z = Complex64::from_polar(r, theta);
        let sup = extreme_image_sup(&weighted, z, 720).unwrap();
        println!("    r = {r:.3}: sup = {sup:.6}");
    }

    // For real alpha the roles flip: an inner omega with a genuine phi is
    // just as fatal, and the classifier says which symbol is the obstacle.
    let inner_omega = OperatorSymbols::with_defaults(
        AlphaParam::real(0.3).unwrap(),
        DiskFunction::from(
            BlaschkeProduct::new(vec![Complex64::new(0.0, 0.0)], 0.4).unwrap(),
        ),
        DiskFunction::from(TaylorPoly::new(vec![
            Complex64::new(0.0, 0.0),
            Complex64::new(0.35, 0.0),
        ])),
    )
    .unwrap();
    let rep = classify_boundary(&inner_omega, grid.angles(), ladder, 0.02);
    println!("\nrotated identity as omega, phi = 0.35 z, alpha = 0.3:");
    println!("  class: {}", rep.class);

    // A contracting pair triggers neither test.
    let tame = OperatorSymbols::with_defaults(
        alpha,
        DiskFunction::from(TaylorPoly::new(vec![
            Complex64::new(0.0, 0.0),
            Complex64::new(0.125, 0.0),
        ])),
        DiskFunction::from(TaylorPoly::new(vec![
            Complex64::new(0.0, 0.0),
            Complex64::new(0.25, 0.0),
        ])),
    )
    .unwrap();
    let rep = classify_boundary(&tame, grid.angles(), ladder, 0.02);
    println!("\ncontracting pair: class = {}", rep.class);
}
