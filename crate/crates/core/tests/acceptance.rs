//! Acceptance suite: one test per criterion, each printing its pass/fail
//! line. `cargo test --test acceptance -- --nocapture` shows the lines and
//! timings; the CLI `verify` subcommand runs the same checks.

use rotspec::reproduce::acceptance::{self, CriterionResult};

fn run(result: CriterionResult) {
    println!("{}", result.render_line());
    assert!(result.pass, "{}", result.render_line());
}

#[test]
fn criterion_01_exact_rotation_set() {
    run(acceptance::criterion_01());
}

#[test]
fn criterion_02_vertex_uniqueness() {
    run(acceptance::criterion_02());
}

#[test]
fn criterion_03_slopes_and_extremality() {
    run(acceptance::criterion_03());
}

#[test]
fn criterion_04_lipschitz_bound() {
    run(acceptance::criterion_04());
}

#[test]
fn criterion_05_accumulation_point_entropy() {
    run(acceptance::criterion_05());
}

#[test]
fn criterion_06_right_endpoint_entropy() {
    run(acceptance::criterion_06());
}

#[test]
fn criterion_07_discontinuity_gap() {
    run(acceptance::criterion_07());
}

#[test]
fn criterion_08_pressure_gradient() {
    run(acceptance::criterion_08());
}

#[test]
fn criterion_09_primal_dual_consistency() {
    run(acceptance::criterion_09());
}

#[test]
fn criterion_10_karp_vs_enumeration() {
    run(acceptance::criterion_10());
}

#[test]
fn criterion_11_gkr_counterexample() {
    run(acceptance::criterion_11());
}

#[test]
fn criterion_12_determinism() {
    run(acceptance::criterion_12());
}
