//! The subordination class P_alpha: building members from self-maps,
//! testing membership by half-plane slack, and the sharp coefficient and
//! growth bounds its members obey.

use diskops::subordination::{
    check_membership, coefficient_bound, disk_to_halfplane, extreme_point, growth_bounds,
    halfplane_slack, member_from_schwarz,
};
use diskops::{AlphaParam, DiskFunction, DiskGrid, SchwarzFn, TaylorPoly};
use num_complex::Complex64;

fn main() {
    let alpha = AlphaParam::new(Complex64::new(0.5, 0.2)).unwrap();
    let grid = DiskGrid::default();

    // T_alpha maps the disk onto the half-plane that defines the class.
    // Slack is the distance-like quantity that is positive exactly inside.
    for r in [0.0, 0.5, 0.9, 0.99] {
        let w = disk_to_halfplane(alpha, Complex64::new(r, 0.0)).unwrap();
        println!("T_alpha({r:.2}) = {w:.4}  slack {:.4}", halfplane_slack(alpha, w));
    }

    // Any self-map fixing the origin generates a member.
    let omega = SchwarzFn::validate_default(DiskFunction::from(TaylorPoly::new(vec![
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.5, 0.0),
    ])))
    .unwrap();
    let f = member_from_schwarz(alpha, &omega, 48);
    let rep = check_membership(alpha, &f, &grid, 1e-9);
    println!("\nmember built from omega = z^2/2:");
    println!("  f(0) = {:.6}", rep.value_at_zero);
    println!("  member: {} (worst slack {:.4} at {:.3})",
        rep.is_member, rep.worst_halfplane_slack, rep.witness);
    assert!(rep.is_member);

    // Shifting the constant term moves f(0) off 1 and out of the class.
    let shifted = f.add(&TaylorPoly::constant(Complex64::new(0.2, 0.0)));
    let rep = check_membership(alpha, &shifted, &grid, 1e-9);
    println!("  after adding 0.2: member = {}", rep.is_member);
    assert!(!rep.is_member);

    // Every coefficient of a member is bounded by |1 + alpha|.
    let bound = coefficient_bound(alpha, &f);
    println!("\ncoefficient bound |1+alpha| = {:.6}:", bound.bound);
    println!("  max excess {:.4} at index {}", bound.max_excess, bound.worst_index);
    assert!(bound.max_excess <= 0.0);

    // The bound is attained by the extreme members (1 + alpha lambda z)/(1 - lambda z).
    let lambda = Complex64::from_polar(1.0, 1.1);
    let extreme = extreme_point(alpha, lambda, 48).unwrap();
    let bound = coefficient_bound(alpha, &extreme);
    println!("  extreme member excess {:.2e} (attained)", bound.max_excess);
    assert!(bound.max_excess.abs() < 1e-12);

    // |f| is pinched between the extreme values along every radius.
    let growth = growth_bounds(alpha, &f, &grid);
    println!("\ngrowth envelope:");
    println!("  min slack below {:.4} at {:.3}", growth.lower_min_slack, growth.lower_witness);
    println!("  min slack above {:.4} at {:.3}", growth.upper_min_slack, growth.upper_witness);
    assert!(growth.lower_min_slack >= -1e-9 && growth.upper_min_slack >= -1e-9);

    // The class is convex: mixtures of members are members.
    let rotated = SchwarzFn::validate_default(DiskFunction::from(TaylorPoly::new(vec![
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, -0.4),
    ])))
    .unwrap();
    let g = member_from_schwarz(alpha, &rotated, 48);
    let mix = f.scale_real(0.3).add(&g.scale_real(0.7));
    println!("\n0.3 f + 0.7 g member: {}",
        check_membership(alpha, &mix, &grid, 1e-9).is_member);
}
