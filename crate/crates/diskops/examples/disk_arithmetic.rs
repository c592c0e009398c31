//! Truncated power series and finite Blaschke products, the raw material
//! for everything else: evaluation, products, composition, reciprocals,
//! and boundary supremum estimates.

use diskops::schwarz::sup_norm_est;
use diskops::{BlaschkeProduct, DiskEval, TaylorPoly};
use num_complex::Complex64;

fn main() {
    let z = Complex64::new(0.3, 0.4);

    // The geometric series truncated at degree 48 against its closed form.
    let geo = TaylorPoly::new(vec![Complex64::new(1.0, 0.0); 49]);
    let closed = Complex64::new(1.0, 0.0) / (Complex64::new(1.0, 0.0) - z);
    println!("1/(1-z) at {z:.3}:");
    println!("  series      {:.12}", geo.eval(z));
    println!("  closed form {closed:.12}");

    // Products and reciprocals are truncated convolutions. Multiplying the
    // series by its reciprocal recovers 1 up to the truncation degree.
    let recip = geo.invert(48).unwrap();
    let one = geo.multiply(&recip, 48);
    println!("series * reciprocal has coefficients [{:.1}, ...] and degree {}",
        one.coeff(0).re, one.degree());
    assert!(one.max_coeff_distance(&TaylorPoly::one()) < 1e-12);

    // Composition plugs one series into another. The truncation degree has
    // to cover the powers of the inner series that still matter at |z| = 1/2.
    let inner = TaylorPoly::new(vec![
        Complex64::new(0.0, 0.0),
        Complex64::new(0.5, 0.0),
        Complex64::new(0.0, 0.25),
    ]);
    let composed = geo.compose(&inner, 48);
    let direct = Complex64::new(1.0, 0.0) / (Complex64::new(1.0, 0.0) - inner.eval(z));
    println!("1/(1-w) composed with w = z/2 + i z^2/4:");
    println!("  series      {:.12}", composed.eval(z));
    println!("  pointwise   {direct:.12}");
    assert!((composed.eval(z) - direct).norm() < 1e-9);

    // A Blaschke product with zeros at 0 and 0.4 is unimodular on the circle.
    let b = BlaschkeProduct::new(
        vec![Complex64::new(0.0, 0.0), Complex64::new(0.4, 0.0)],
        0.7,
    )
    .unwrap();
    let boundary = Complex64::from_polar(1.0, 1.234);
    println!("Blaschke product with zeros 0 and 0.4:");
    println!("  |B({boundary:.3})| = {:.15}", b.at(boundary).norm());
    println!("  |B({z:.3})| = {:.15}", b.at(z).norm());
    assert!((b.at(boundary).norm() - 1.0).abs() < 1e-12);
    assert!(b.at(z).norm() < 1.0);

    // Its truncated Taylor expansion agrees with direct evaluation inside.
    let bt = b.taylor(24);
    println!("  Taylor(24) error at {z:.3}: {:.2e}", (bt.eval(z) - b.at(z)).norm());

    // Boundary supremum estimates drive the self-map validation used later.
    let f = TaylorPoly::new(vec![
        Complex64::new(0.0, 0.0),
        Complex64::new(0.6, 0.0),
        Complex64::new(0.3, 0.0),
    ]);
    println!("sup |0.6 z + 0.3 z^2| on the circle = {:.12} (exact 0.9)", sup_norm_est(&f));
}
