//! Acceptance suite: every criterion runs at its stated tolerance (exact
//! zero in the rational-function field) over the full series/rank grid,
//! and prints one pass/fail line.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion lines.

use qkmv::relations::CatalogSeries;
use qkmv::rootsys::{default_grid, SeriesKind};
use qkmv::suite::{
    check_automorphism, check_base_gates, check_cybe, check_drinfeldian_tilde,
    check_evaluation_a, check_free_identity, check_hopf_suite, check_limits_eta0,
    check_limits_q1, check_structural, check_xi_symbolic, CheckRecord, Status,
};
use std::time::Instant;

fn report(name: &str, records: &[CheckRecord], started: Instant) -> bool {
    let fails: Vec<&CheckRecord> = records
        .iter()
        .filter(|c| c.status == Status::Fail)
        .collect();
    let reported = records
        .iter()
        .filter(|c| c.status == Status::Reported)
        .count();
    let ok = fails.is_empty();
    let tag = if ok { "PASS" } else { "FAIL" };
    let extra = if reported > 0 {
        format!(", {reported} recorded outcomes")
    } else {
        String::new()
    };
    println!(
        "ACCEPTANCE {name}: {tag} ({} checks{extra}) in {} ms",
        records.len(),
        started.elapsed().as_millis()
    );
    for f in fails.iter().take(10) {
        println!("    failing: {} [{}] defect {}", f.id, f.anchor, f.defect);
    }
    ok
}

#[test]
fn criterion_01_base_relation_gates() {
    let t = Instant::now();
    let mut recs = Vec::new();
    for s in default_grid() {
        recs.extend(check_base_gates(s, None));
    }
    assert!(report(
        "1 base-relation gates (finite catalogs exact in shipped reps)",
        &recs,
        t
    ));
}

#[test]
fn criterion_02_deformed_relation_reproduction() {
    let t = Instant::now();
    let mut recs = Vec::new();
    for s in default_grid() {
        recs.extend(check_drinfeldian_tilde(s, None));
    }
    assert!(report(
        "2 explicit deformation relations under xi := tau*rho(e~)",
        &recs,
        t
    ));
}

#[test]
fn criterion_03_gl_evaluation_representation() {
    let t = Instant::now();
    let mut recs = Vec::new();
    for s in default_grid().into_iter().filter(|s| s.kind == SeriesKind::A) {
        recs.extend(check_evaluation_a(s, None));
    }
    assert!(report(
        "3 gl evaluation family incl. separately-vanishing quadratic sides",
        &recs,
        t
    ));
}

#[test]
fn criterion_04_general_explicit_equivalence() {
    let t = Instant::now();
    let mut recs = Vec::new();
    for s in default_grid() {
        recs.extend(check_xi_symbolic(s, None));
    }
    assert!(report(
        "4 general vs explicit relations agree on generic weight-(-theta) xi",
        &recs,
        t
    ));
}

#[test]
fn criterion_05_q_to_one_limit() {
    let t = Instant::now();
    let mut recs = Vec::new();
    for s in default_grid() {
        recs.extend(check_limits_q1(s, None));
    }
    assert!(report(
        "5 q->1 jets pole-free and matching the Yangian catalogs",
        &recs,
        t
    ));
}

#[test]
fn criterion_06_eta_to_zero_limit() {
    let t = Instant::now();
    let mut recs = Vec::new();
    for s in default_grid() {
        recs.extend(check_limits_eta0(s, None));
    }
    assert!(report(
        "6 eta->0 reduces relations and xi Hopf data to the current algebra",
        &recs,
        t
    ));
}

#[test]
fn criterion_07_hopf_axioms_and_morphisms() {
    let t = Instant::now();
    let mut recs = Vec::new();
    for s in default_grid() {
        recs.extend(check_hopf_suite(s, None));
    }
    assert!(report(
        "7 Hopf axioms and coproduct-morphism checks",
        &recs,
        t
    ));
}

#[test]
fn criterion_08_free_algebra_identity() {
    let t = Instant::now();
    let mut recs = Vec::new();
    for s in default_grid() {
        recs.extend(check_free_identity(CatalogSeries::Classical(s), None));
    }
    recs.extend(check_free_identity(CatalogSeries::Sl2, None));
    assert!(report(
        "8 general catalog collapses to 0 = 0 under xi := tau*e~ (free algebra)",
        &recs,
        t
    ));
}

#[test]
fn criterion_09_cybe_suite() {
    let t = Instant::now();
    let recs = check_cybe();
    assert!(report(
        "9 CYBE defects, unitarity, shift identity, Casimir two-tensor",
        &recs,
        t
    ));
}

#[test]
fn criterion_10_structural_cross_checks() {
    let t = Instant::now();
    let mut recs = Vec::new();
    for s in default_grid() {
        recs.extend(check_structural(s, None));
        recs.extend(check_automorphism(s, None));
    }
    assert!(report(
        "10 splitting-index independence, bracket depths, negative control",
        &recs,
        t
    ));
}
