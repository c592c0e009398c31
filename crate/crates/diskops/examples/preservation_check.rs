//! The core question: does psi * (f o phi) stay in the class for every
//! member f? The pointwise margin answers it, symbol specs are read from
//! JSON, and the run report is what the `check` subcommand prints.

use diskops::criterion::criterion_margin;
use diskops::io::{RunReport, SymbolSpec};
use diskops::{check_preservation, DiskGrid, Verdict};
use num_complex::Complex64;

fn spec_path(name: &str) -> String {
    format!("{}/examples/specs/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn main() {
    // A comfortably contracting pair: omega = z/8, phi = z/4 at alpha = 1/2.
    let spec = SymbolSpec::from_path(spec_path("contracting.json")).unwrap();
    let (sym, grid, tol) = spec.build().unwrap();

    // The margin at a point is positive iff every member passes through it
    // safely; scanning the grid turns that into a verdict.
    println!("pointwise margins for the contracting pair:");
    for r in [0.0, 0.5, 0.9, 0.999] {
        let z = Complex64::new(r, 0.0);
        println!("  margin({r:.3}) = {:.6}", criterion_margin(&sym, z).unwrap());
    }

    let rep = check_preservation(&sym, &grid, tol);
    println!("verdict: {} (min margin {:.4e} over {} samples)",
        rep.verdict, rep.min_margin, rep.samples_checked);
    assert_eq!(rep.verdict, Verdict::Preserves);

    let run = RunReport::from_criterion(&rep);
    println!("\nrun report as JSON:\n{}", run.to_json_string());

    // An inner composition symbol with a genuine weight cannot preserve the
    // class; the margin goes negative as the boundary ladder climbs.
    let spec = SymbolSpec::from_path(spec_path("inner_phi.json")).unwrap();
    let (sym, _, tol) = spec.build().unwrap();
    let grid = DiskGrid::default();
    let rep = check_preservation(&sym, &grid, tol);
    println!("\nBlaschke composition with weight 0.3 z:");
    println!("  verdict: {} with near-boundary min {:.4}",
        rep.verdict, rep.near_boundary_min.unwrap());
    println!("  worst point {:.4}", rep.witness);
    assert_eq!(rep.verdict, Verdict::Fails);

    // The margin is a strict certificate: where it is positive, the image
    // of every extreme member stays strictly inside the half-plane.
    let z = rep.witness;
    println!("  margin at the worst point: {:.4}", criterion_margin(&sym, z).unwrap());
}
