//! Acceptance suite. Each test covers one criterion, prints a single
//! pass/fail line, and enforces the runtime budget where one is stated.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::time::Instant;

use diskops::families::{
    negative_alpha_condition, negative_alpha_polynomial, negative_alpha_radius, norm_condition,
    quadratic_min_k, quadratic_symbols, small_norm_threshold,
};
use diskops::verify::{run_claim, ClaimOutcome, DEFAULT_SEED};

fn claim(name: &str) -> ClaimOutcome {
    run_claim(name, DEFAULT_SEED).expect("claim name is registered")
}

fn report(n: usize, name: &str, ok: bool, detail: &str) {
    let tag = if ok { "PASS" } else { "FAIL" };
    println!("[{tag}] criterion {n}: {name}: {detail}");
    assert!(ok, "criterion {n} ({name}): {detail}");
}

#[test]
fn criterion_1_quartic_radius() {
    let t = Instant::now();
    let root = negative_alpha_radius();
    let micros = t.elapsed().as_secs_f64() * 1e6;
    let residual = negative_alpha_polynomial(root).abs();
    let ok = (root - 0.2648).abs() < 5e-3 && residual < 1e-10 && micros < 1000.0;
    report(
        1,
        "radius of the negative-alpha ball",
        ok,
        &format!("root {root:.10}, residual {residual:.2e}, solved in {micros:.0} us"),
    );
}

#[test]
fn criterion_2_closed_form_thresholds() {
    let t = Instant::now();
    let small = small_norm_threshold();
    let kmin = quadratic_min_k();
    let mut ok = small == 2f64.sqrt() - 1.0 && kmin == 2.0 + 5f64.sqrt();

    // Gates flip across each threshold at a relative offset of 1e-3.
    let x = small * (1.0 - 1e-3);
    ok &= norm_condition(x, x).unwrap();
    let x = small * (1.0 + 1e-3);
    ok &= !norm_condition(x, x).unwrap();
    ok &= quadratic_symbols(0.5, 0.5, kmin * (1.0 + 1e-3)).is_ok();
    ok &= quadratic_symbols(0.5, 0.5, kmin * (1.0 - 1e-3)).is_err();
    let s0 = negative_alpha_radius();
    let alpha = -1.0 + 1e-7;
    ok &= negative_alpha_condition(s0 * (1.0 - 1e-3), s0 * (1.0 - 1e-3), alpha).unwrap();
    ok &= !negative_alpha_condition(s0 * (1.0 + 1e-3), s0 * (1.0 + 1e-3), alpha).unwrap();

    let gates = claim("threshold-gates");
    ok &= gates.passed;
    let secs = t.elapsed().as_secs_f64();
    ok &= secs < 1.0;
    report(
        2,
        "closed-form thresholds and gate flips",
        ok,
        &format!("sqrt(2)-1 and 2+sqrt(5) exact, flips at 1e-3 offsets, {secs:.3} s"),
    );
}

#[test]
fn criterion_3_oracle_sign_agreement() {
    let t = Instant::now();
    let out = claim("oracle-equivalence");
    let secs = t.elapsed().as_secs_f64();
    let ok = out.passed && secs < 30.0;
    report(
        3,
        "margin sign matches the unimodular-sweep oracle",
        ok,
        &format!("{} ({secs:.1} s)", out.detail),
    );
}

#[test]
fn criterion_4_alpha_zero_factorization() {
    let t = Instant::now();
    let out = claim("alpha-zero-factorization");
    let secs = t.elapsed().as_secs_f64();
    let ok = out.passed && secs < 5.0;
    report(
        4,
        "alpha = 0 margin factors through the triangle bound",
        ok,
        &format!("{} ({secs:.1} s)", out.detail),
    );
}

#[test]
fn criterion_5_algebraic_identities() {
    let out = claim("identity-suite");
    report(5, "coefficient identities at 1e-12", out.passed, &out.detail);
}

#[test]
fn criterion_6_sufficient_families() {
    let t = Instant::now();
    let quadratic = claim("quadratic-family");
    let norm = claim("norm-families");
    let small = claim("small-norm-family");
    let negative = claim("negative-alpha-family");
    let secs = t.elapsed().as_secs_f64();
    let ok =
        quadratic.passed && norm.passed && small.passed && negative.passed && secs < 60.0;
    report(
        6,
        "sufficient families preserve end-to-end",
        ok,
        &format!(
            "quadratic: {}; norm gate: {}; small norm: {}; negative alpha: {} ({secs:.1} s)",
            quadratic.detail, norm.detail, small.detail, negative.detail
        ),
    );
}

#[test]
fn criterion_7_class_propositions() {
    let coeff = claim("coefficient-bound");
    let growth = claim("growth-estimate");
    let convex = claim("convexity");
    let ok = coeff.passed && growth.passed && convex.passed;
    report(
        7,
        "coefficient bound, growth envelope, convexity",
        ok,
        &format!("{}; {}; {}", coeff.detail, growth.detail, convex.detail),
    );
}

#[test]
fn criterion_8_structure_constraints() {
    let shifted = claim("composition-normalization");
    let inner_phi = claim("inner-phi");
    let inner_omega = claim("inner-omega");
    let ok = shifted.passed && inner_phi.passed && inner_omega.passed;
    report(
        8,
        "origin normalization and inner-symbol obstructions",
        ok,
        &format!(
            "{}; {}; {}",
            shifted.detail, inner_phi.detail, inner_omega.detail
        ),
    );
}

#[test]
fn criterion_9_fixed_point_dynamics() {
    let contraction = claim("contraction-fixed-point");
    let collapse = claim("composition-fixed-point");
    let rotation = claim("rotation-fixed-set");
    let ok = contraction.passed && collapse.passed && rotation.passed;
    report(
        9,
        "iteration limits and rotation fixed sets",
        ok,
        &format!(
            "{}; {}; {}",
            contraction.detail, collapse.detail, rotation.detail
        ),
    );
}
