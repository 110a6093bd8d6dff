//! Check suites over the series/rank grid, and the deterministic report
//! plumbing behind the `qkmv` command line.
//!
//! Reports are byte-identical across runs for the same request: records
//! are sorted by id, serialized with sorted keys, and carry no timing
//! (elapsed time is printed to stderr as an envelope line, never into the
//! report body). Exit codes: 0 all pass, 1 at least one failure, 2 usage
//! error (no report file is written in that case).

use crate::cybe;
use crate::freealg::{GenSym, NcExpr};
use crate::hopf::{
    self, check_coproduct_relations, check_counit_of_antipode, check_hopf_axioms, check_s_squared,
    delta_xi_at_eta_zero, drinfeldian_general_hopf, hopf_data, s_xi_at_eta_zero, HopfFamily,
    XiAntipode, XiCoproduct,
};
use crate::relations::{
    relation_catalog, sl2_tilde_e, tilde_e, CatalogSeries, Family,
};
use crate::reps::{
    build_representation, evaluate_sides, extend_with_xi, generic_xi_matrix,
    k_independence_defect, matrix_scalar_ratio, perturbation_breaks_gate, tilde_rep,
    verify_catalog, verify_scaling_automorphism, RepKind, XiMode,
};
use crate::rootsys::{default_grid, RootSystem, Series, SeriesKind};
use crate::scalar::{tau, Scalar, Var};
use std::collections::VecDeque;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Mutex;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Relations,
    Hopf,
    Limits,
    Cybe,
    Automorphism,
    All,
}

impl Suite {
    pub fn parse(s: &str) -> Option<Suite> {
        Some(match s {
            "relations" => Suite::Relations,
            "hopf" => Suite::Hopf,
            "limits" => Suite::Limits,
            "cybe" => Suite::Cybe,
            "automorphism" => Suite::Automorphism,
            "all" => Suite::All,
            _ => return None,
        })
    }

    pub fn label(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Hopf => "hopf",
            Suite::Limits => "limits",
            Suite::Cybe => "cybe",
            Suite::Automorphism => "automorphism",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Substitution,
    Evaluation,
    XiSymbolic,
}

impl Mode {
    pub fn parse(s: &str) -> Option<Mode> {
        Some(match s {
            "substitution" => Mode::Substitution,
            "evaluation" => Mode::Evaluation,
            "xi-symbolic" => Mode::XiSymbolic,
            _ => return None,
        })
    }

    pub fn label(self) -> &'static str {
        match self {
            Mode::Substitution => "substitution",
            Mode::Evaluation => "evaluation",
            Mode::XiSymbolic => "xi-symbolic",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Outcome recorded without a claim: reserved for the B/C/D
    /// classical-evaluation checks.
    Reported,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Reported => "reported",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckRecord {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub defect: u64,
}

impl CheckRecord {
    fn from_defect(id: String, anchor: String, defect: usize) -> CheckRecord {
        CheckRecord {
            id,
            anchor,
            status: if defect == 0 { Status::Pass } else { Status::Fail },
            defect: defect as u64,
        }
    }

    fn reported(id: String, anchor: String, defect: usize) -> CheckRecord {
        CheckRecord {
            id,
            anchor,
            status: if defect == 0 {
                Status::Pass
            } else {
                Status::Reported
            },
            defect: defect as u64,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteRequest {
    pub suite: Suite,
    pub family: Option<Family>,
    pub series: Option<SeriesKind>,
    pub rank: Option<usize>,
    pub mode: Mode,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
}

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Debug)]
pub struct Report {
    pub suite: Suite,
    pub mode: Mode,
    pub family: Option<Family>,
    pub series: Option<SeriesKind>,
    pub rank: Option<usize>,
    pub checks: Vec<CheckRecord>,
    pub pass: u64,
    pub fail: u64,
    pub reported: u64,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        if self.fail > 0 {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        use serde_json::{json, Value};
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "id": c.id,
                    "anchor": c.anchor,
                    "status": c.status.label(),
                    "defect": c.defect,
                })
            })
            .collect();
        let v = json!({
            "suite": self.suite.label(),
            "mode": self.mode.label(),
            "filters": {
                "family": self.family.map(|f| f.label()),
                "series": self.series.map(|s| s.letter()),
                "rank": self.rank,
            },
            "checks": checks,
            "totals": {"pass": self.pass, "fail": self.fail, "reported": self.reported},
        });
        serde_json::to_string_pretty(&v).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            s.push_str(&format!(
                "{} {} [{}] defect={}\n",
                c.status.label().to_uppercase(),
                c.id,
                c.anchor,
                c.defect
            ));
        }
        s.push_str(&format!(
            "totals: pass={} fail={} reported={}\n",
            self.pass, self.fail, self.reported
        ));
        s
    }
}

fn base_rep_kind(kind: SeriesKind) -> RepKind {
    match kind {
        SeriesKind::A => RepKind::FundamentalGl,
        SeriesKind::B => RepKind::VectorB,
        SeriesKind::C => RepKind::VectorC,
        SeriesKind::D => RepKind::VectorD,
    }
}

fn fam_ok(filter: Option<Family>, f: Family) -> bool {
    filter.map(|x| x == f).unwrap_or(true)
}

// ---------------------------------------------------------------------
// Check builders (also used directly by the acceptance suite)
// ---------------------------------------------------------------------

/// Base-relation gates: every finite-catalog relation is the exact zero
/// matrix in the shipped representation (quantum and classical).
pub fn check_base_gates(series: Series, fam: Option<Family>) -> Vec<CheckRecord> {
    let lbl = series.label();
    let mut out = Vec::new();
    if fam_ok(fam, Family::Uqg) {
        let rep = build_representation(base_rep_kind(series.kind), series).expect("gate");
        let cat = relation_catalog(Family::Uqg, CatalogSeries::Classical(series)).unwrap();
        for c in verify_catalog(&rep, &cat).expect("evaluate") {
            out.push(CheckRecord::from_defect(
                format!("relations.{lbl}.{}", c.id),
                c.anchor,
                c.defect,
            ));
        }
    }
    if fam_ok(fam, Family::ClassicalCurrent) {
        let rep = build_representation(RepKind::ClassicalCounterpart, series).expect("gate");
        let rep = extend_with_xi(&rep, XiMode::Evaluation).expect("classical evaluation");
        let cat =
            relation_catalog(Family::ClassicalCurrent, CatalogSeries::Classical(series)).unwrap();
        for c in verify_catalog(&rep, &cat).expect("evaluate") {
            out.push(CheckRecord::from_defect(
                format!("relations.{lbl}.{}", c.id),
                c.anchor,
                c.defect,
            ));
        }
    }
    out
}

/// The central reproduction: every explicit deformation relation holds
/// exactly under ξ ↦ τ·ρ(ẽ).
pub fn check_drinfeldian_tilde(series: Series, fam: Option<Family>) -> Vec<CheckRecord> {
    if !fam_ok(fam, Family::DrinfeldianExplicit) {
        return Vec::new();
    }
    let lbl = series.label();
    let rep = tilde_rep(series).expect("tilde extension");
    let cat =
        relation_catalog(Family::DrinfeldianExplicit, CatalogSeries::Classical(series)).unwrap();
    verify_catalog(&rep, &cat)
        .expect("evaluate")
        .into_iter()
        .map(|c| {
            CheckRecord::from_defect(format!("relations.{lbl}.{}", c.id), c.anchor, c.defect)
        })
        .collect()
}

/// The gl evaluation family: all explicit relations hold with
/// ξ ↦ u·ρ(ẽ), and both sides of the two ξ-quadratic relations vanish
/// separately.
pub fn check_evaluation_a(series: Series, fam: Option<Family>) -> Vec<CheckRecord> {
    if series.kind != SeriesKind::A || !fam_ok(fam, Family::DrinfeldianExplicit) {
        return Vec::new();
    }
    let lbl = series.label();
    let rep = build_representation(RepKind::EvaluationGl, series).expect("evaluation rep");
    let cat =
        relation_catalog(Family::DrinfeldianExplicit, CatalogSeries::Classical(series)).unwrap();
    let mut out: Vec<CheckRecord> = verify_catalog(&rep, &cat)
        .expect("evaluate")
        .into_iter()
        .map(|c| {
            CheckRecord::from_defect(
                format!("relations.{lbl}.eval.{}", c.id),
                c.anchor,
                c.defect,
            )
        })
        .collect();
    for id in ["dr.quad.1".to_string(), format!("dr.quad.{}", series.l - 1)] {
        let rel = cat.get(&id).expect("quadratic relation");
        let (lhs, rhs) = evaluate_sides(&rep, rel).expect("evaluate");
        out.push(CheckRecord::from_defect(
            format!("relations.{lbl}.eval.sides.{id}.lhs"),
            rel.anchor.clone(),
            lhs.nnz(),
        ));
        out.push(CheckRecord::from_defect(
            format!("relations.{lbl}.eval.sides.{id}.rhs"),
            rel.anchor.clone(),
            rhs.nnz(),
        ));
    }
    out
}

/// General ↔ explicit equivalence: each pair of counterpart relations
/// imposes the same constraint on every admissible weight-(−θ) ξ image,
/// compared exactly on a fully generic element of that space.
pub fn check_xi_symbolic(series: Series, fam: Option<Family>) -> Vec<CheckRecord> {
    if !fam_ok(fam, Family::DrinfeldianGeneral) {
        return Vec::new();
    }
    let lbl = series.label();
    let rep = build_representation(base_rep_kind(series.kind), series).expect("base rep");
    let rs = RootSystem::build(series);
    let grep = rep.with_xi_matrix(generic_xi_matrix(&rep, &rs));
    let gen =
        relation_catalog(Family::DrinfeldianGeneral, CatalogSeries::Classical(series)).unwrap();
    let dr =
        relation_catalog(Family::DrinfeldianExplicit, CatalogSeries::Classical(series)).unwrap();
    let mut out = Vec::new();
    for g in &gen.relations {
        let dr_id = format!("dr.{}", g.id.trim_start_matches("gen."));
        let d = dr.get(&dr_id).expect("counterpart relation");
        let mg = grep.evaluate(&g.difference()).expect("evaluate");
        let md = grep.evaluate(&d.difference()).expect("evaluate");
        let ok = matrix_scalar_ratio(&mg, &md).is_some();
        out.push(CheckRecord::from_defect(
            format!("relations.{lbl}.xisym.{}", g.id),
            g.anchor.clone(),
            usize::from(!ok),
        ));
    }
    out
}

/// Substituting ξ := τ·ẽ into the general catalog yields 0 = 0 in the
/// free algebra, with no representation.
pub fn check_free_identity(cs: CatalogSeries, fam: Option<Family>) -> Vec<CheckRecord> {
    if !fam_ok(fam, Family::DrinfeldianGeneral) {
        return Vec::new();
    }
    let cat = relation_catalog(Family::DrinfeldianGeneral, cs).unwrap();
    let te = match cs {
        CatalogSeries::Classical(s) => tilde_e(&RootSystem::build(s)),
        CatalogSeries::Sl2 => sl2_tilde_e(),
    };
    let image = te.scale(&tau());
    let lbl = cs.label();
    cat.relations
        .iter()
        .map(|r| {
            let sub = |g: &GenSym| match g {
                GenSym::Xi => Some(image.clone()),
                _ => None,
            };
            let diff = r.difference().substitute(&sub);
            CheckRecord::from_defect(
                format!("relations.{lbl}.free.{}", r.id),
                r.anchor.clone(),
                diff.terms().len(),
            )
        })
        .collect()
}

/// Structural cross-checks: splitting-index independence of composite
/// vectors, bracket depths against the root data, and the
/// perturbation negative control.
pub fn check_structural(series: Series, fam: Option<Family>) -> Vec<CheckRecord> {
    if !fam_ok(fam, Family::Uqg) {
        return Vec::new();
    }
    let lbl = series.label();
    let mut out = Vec::new();
    let rep = build_representation(base_rep_kind(series.kind), series).expect("base rep");
    if series.kind == SeriesKind::A && series.l >= 4 {
        let d = k_independence_defect(&rep).expect("evaluate");
        out.push(CheckRecord::from_defect(
            format!("relations.{lbl}.check.kindep"),
            "A9".into(),
            d,
        ));
    }
    // bracket depths in the explicit catalog equal 1 + 2(α_i,θ)/(α_i,α_i)
    let rs = RootSystem::build(series);
    let dr =
        relation_catalog(Family::DrinfeldianExplicit, CatalogSeries::Classical(series)).unwrap();
    let mut bad = 0;
    for i in 1..=series.num_simple() {
        let r = dr.get(&format!("dr.ad.{i}")).expect("adjoint relation");
        if r.bracket_depth != Some(rs.affine_exponent(i - 1)) {
            bad += 1;
        }
    }
    out.push(CheckRecord::from_defect(
        format!("relations.{lbl}.check.depths"),
        "gen.7".into(),
        bad,
    ));
    let cat = relation_catalog(Family::Uqg, CatalogSeries::Classical(series)).unwrap();
    let sound = perturbation_breaks_gate(&rep, &cat).expect("evaluate");
    out.push(CheckRecord::from_defect(
        format!("relations.{lbl}.check.negcontrol"),
        "A4".into(),
        usize::from(!sound),
    ));
    out
}

/// The Yangian catalogs at v := 1 under the classical evaluation
/// ξ ↦ u·ρ(e′_{−θ}): a verified pass for the A series, a recorded
/// outcome (never a failure) for B, C, D.
pub fn check_yangian_classical(series: Series, fam: Option<Family>) -> Vec<CheckRecord> {
    if !fam_ok(fam, Family::YangianExplicit) {
        return Vec::new();
    }
    let lbl = series.label();
    let rep = build_representation(RepKind::ClassicalCounterpart, series).expect("classical rep");
    let rep = extend_with_xi(&rep, XiMode::Evaluation).expect("classical evaluation");
    let cat =
        relation_catalog(Family::YangianExplicit, CatalogSeries::Classical(series)).unwrap();
    verify_catalog(&rep, &cat)
        .expect("evaluate")
        .into_iter()
        .map(|c| {
            let id = format!("relations.{lbl}.yacl.{}", c.id);
            if series.kind == SeriesKind::A {
                CheckRecord::from_defect(id, c.anchor, c.defect)
            } else {
                CheckRecord::reported(id, c.anchor, c.defect)
            }
        })
        .collect()
}

fn yangian_counterpart_id(dr_id: &str) -> String {
    let tail = dr_id.trim_start_matches("dr.");
    let tail = tail
        .strip_suffix(".p")
        .or_else(|| tail.strip_suffix(".m"))
        .unwrap_or(tail);
    let tail = tail.replace("c.xi", "c.xi~");
    format!("ya.{tail}")
}

/// q → 1: the first-order jet of every explicit deformation relation is
/// pole-free and matches its Yangian counterpart up to one global scalar.
pub fn check_limits_q1(series: Series, fam: Option<Family>) -> Vec<CheckRecord> {
    if !fam_ok(fam, Family::YangianExplicit) {
        return Vec::new();
    }
    let lbl = series.label();
    let dr =
        relation_catalog(Family::DrinfeldianExplicit, CatalogSeries::Classical(series)).unwrap();
    let ya =
        relation_catalog(Family::YangianExplicit, CatalogSeries::Classical(series)).unwrap();
    let mut out = Vec::new();
    for r in &dr.relations {
        let id = format!("limits.{lbl}.q1.{}", r.id);
        let defect = match r.difference().jet_classical() {
            Err(_) => 1, // a pole would falsify the nonsingularity claim
            Ok((c0, c1)) => {
                let jet = if c0.is_zero() { c1 } else { c0 };
                if jet.is_zero() {
                    0 // no first-order content to match
                } else {
                    match ya.get(&yangian_counterpart_id(&r.id)) {
                        None => 1,
                        Some(y) => usize::from(jet.monic() != y.difference().monic()),
                    }
                }
            }
        };
        out.push(CheckRecord::from_defect(id, r.anchor.clone(), defect));
    }
    // order-0 jet of the explicit ξ coproduct is the Yangian coproduct
    if series.kind == SeriesKind::A {
        let drh = hopf_data(HopfFamily::Drinfeldian, series).expect("hopf data");
        let yah = hopf_data(HopfFamily::Yangian, series).expect("hopf data");
        let t = match drh.delta_xi.as_ref().unwrap() {
            XiCoproduct::Explicit(t) => t.clone(),
            _ => unreachable!("A-series coproduct is explicit"),
        };
        let expect = match yah.delta_xi.as_ref().unwrap() {
            XiCoproduct::Explicit(t) => t.clone(),
            _ => unreachable!(),
        };
        let defect = match t.jet_classical() {
            Err(_) => 1,
            Ok((c0, _)) => usize::from(!c0.sub(&expect).is_zero()),
        };
        out.push(CheckRecord::from_defect(
            format!("limits.{lbl}.q1.hopf.delta-xi"),
            "A22".into(),
            defect,
        ));
    }
    out
}

/// η → 0: every explicit deformation relation and the ξ Hopf data reduce
/// to the quantum-current forms, by exact normal-form comparison.
pub fn check_limits_eta0(series: Series, fam: Option<Family>) -> Vec<CheckRecord> {
    if !fam_ok(fam, Family::QuantumCurrent) {
        return Vec::new();
    }
    let lbl = series.label();
    let dr =
        relation_catalog(Family::DrinfeldianExplicit, CatalogSeries::Classical(series)).unwrap();
    let qc =
        relation_catalog(Family::QuantumCurrent, CatalogSeries::Classical(series)).unwrap();
    let mut out = Vec::new();
    for r in &dr.relations {
        let qc_id = format!("qc.{}", r.id.trim_start_matches("dr."));
        let defect = match qc.get(&qc_id) {
            None => 1,
            Some(c) => {
                let specialized = r
                    .difference()
                    .specialize_var(Var::Eta, &Scalar::zero())
                    .expect("eta := 0");
                usize::from(specialized.monic() != c.difference().monic())
            }
        };
        out.push(CheckRecord::from_defect(
            format!("limits.{lbl}.eta0.{}", r.id),
            r.anchor.clone(),
            defect,
        ));
    }
    let drh = hopf_data(HopfFamily::Drinfeldian, series).expect("hopf data");
    let qch = hopf_data(HopfFamily::QuantumCurrent, series).expect("hopf data");
    let d0 = delta_xi_at_eta_zero(&drh).expect("eta := 0");
    let dq = match qch.delta_xi.as_ref().unwrap() {
        XiCoproduct::Explicit(t) => t.clone(),
        _ => unreachable!(),
    };
    out.push(CheckRecord::from_defect(
        format!("limits.{lbl}.eta0.hopf.delta-xi"),
        "gen.11".into(),
        usize::from(!d0.sub(&dq).is_zero()),
    ));
    let s0 = s_xi_at_eta_zero(&drh).expect("eta := 0");
    let sq = match qch.s_xi.as_ref().unwrap() {
        XiAntipode::Explicit(e) => e.clone(),
        _ => unreachable!(),
    };
    out.push(CheckRecord::from_defect(
        format!("limits.{lbl}.eta0.hopf.s-xi"),
        "gen.13".into(),
        usize::from(s0 != sq),
    ));
    out
}

/// Hopf-axiom and coproduct-morphism checks for one series.
pub fn check_hopf_suite(series: Series, fam: Option<Family>) -> Vec<CheckRecord> {
    let lbl = series.label();
    let mut out = Vec::new();
    let base = build_representation(base_rep_kind(series.kind), series).expect("base rep");

    if fam_ok(fam, Family::Uqg) {
        let hd = hopf_data(HopfFamily::Uqg, series).expect("hopf data");
        for c in check_hopf_axioms(&base, &hd).expect("axioms") {
            out.push(CheckRecord::from_defect(
                format!("hopf.{lbl}.uqg.axiom.{}.{}", c.generator, c.axiom),
                "A5".into(),
                c.defect,
            ));
        }
        let cat = relation_catalog(Family::Uqg, CatalogSeries::Classical(series)).unwrap();
        for c in check_coproduct_relations(&base, &base, &hd, &cat).expect("morphism") {
            out.push(CheckRecord::from_defect(
                format!("hopf.{lbl}.uqg.delta-rel.{}", c.id),
                c.anchor,
                c.defect,
            ));
        }
        for (g, d) in check_s_squared(&base, &hd).expect("s2") {
            out.push(CheckRecord::from_defect(
                format!("hopf.{lbl}.uqg.s2.{g}"),
                "A6".into(),
                d,
            ));
        }
        let mut bad = 0;
        for (_, ok) in check_counit_of_antipode(&hd).expect("counit") {
            bad += usize::from(!ok);
        }
        out.push(CheckRecord::from_defect(
            format!("hopf.{lbl}.uqg.counit-antipode"),
            "A7".into(),
            bad,
        ));
    }

    if fam_ok(fam, Family::DrinfeldianExplicit) {
        let hd = hopf_data(HopfFamily::Drinfeldian, series).expect("hopf data");
        let trep = tilde_rep(series).expect("tilde rep");
        for c in check_hopf_axioms(&trep, &hd).expect("axioms") {
            out.push(CheckRecord::from_defect(
                format!("hopf.{lbl}.dr.axiom.{}.{}", c.generator, c.axiom),
                "gen.11".into(),
                c.defect,
            ));
        }
        for (g, d) in check_s_squared(&trep, &hd).expect("s2") {
            out.push(CheckRecord::from_defect(
                format!("hopf.{lbl}.dr.s2.{g}"),
                "gen.13".into(),
                d,
            ));
        }
        let mut bad = 0;
        for (_, ok) in check_counit_of_antipode(&hd).expect("counit") {
            bad += usize::from(!ok);
        }
        out.push(CheckRecord::from_defect(
            format!("hopf.{lbl}.dr.counit-antipode"),
            "A7".into(),
            bad,
        ));
        // Δ is an algebra morphism for the general presentation (any
        // weight-(−θ) ẽ); the literal per-series displays are recorded
        // against the tensor-square representation, where the B/D zero
        // right-hand-side displays at the node adjacent to the affine one
        // turn out not to be abstract identities for the displayed ẽ.
        let gcat =
            relation_catalog(Family::DrinfeldianGeneral, CatalogSeries::Classical(series))
                .unwrap();
        for c in check_coproduct_relations(&trep, &trep, &hd, &gcat).expect("morphism") {
            out.push(CheckRecord::from_defect(
                format!("hopf.{lbl}.dr.delta-rel.{}", c.id),
                c.anchor,
                c.defect,
            ));
        }
        let cat =
            relation_catalog(Family::DrinfeldianExplicit, CatalogSeries::Classical(series))
                .unwrap();
        if series.kind == SeriesKind::A {
            // evaluation representations at independent spectral points
            let erep = build_representation(RepKind::EvaluationGl, series).expect("eval rep");
            for c in check_hopf_axioms(&erep, &hd).expect("axioms") {
                out.push(CheckRecord::from_defect(
                    format!("hopf.{lbl}.dr-eval.axiom.{}.{}", c.generator, c.axiom),
                    "A22".into(),
                    c.defect,
                ));
            }
            let r1 = erep
                .specialize_var(Var::U, &Scalar::var(Var::Z1))
                .expect("specialize");
            let r2 = erep
                .specialize_var(Var::U, &Scalar::var(Var::Z2))
                .expect("specialize");
            for c in check_coproduct_relations(&r1, &r2, &hd, &cat).expect("morphism") {
                out.push(CheckRecord::from_defect(
                    format!("hopf.{lbl}.dr.delta-rel.{}", c.id),
                    c.anchor,
                    c.defect,
                ));
            }
            // the explicit ξ displays agree with the general formulas
            let general = drinfeldian_general_hopf(series).expect("hopf data");
            let mut de_e = hopf::DeltaEval::new(&hd, &erep, &erep);
            let mut de_g = hopf::DeltaEval::new(&general, &erep, &erep);
            let me = de_e.atom(&GenSym::Xi).expect("delta xi");
            let mg = de_g.atom(&GenSym::Xi).expect("delta xi");
            out.push(CheckRecord::from_defect(
                format!("hopf.{lbl}.dr.cross.delta-xi"),
                "A22".into(),
                me.defect(&mg),
            ));
            // the displayed antipode transcription is recorded against the
            // operative general form (it coincides at rank 3 and departs at
            // rank ≥ 4, where the display's chain words cannot reproduce
            // the mechanically derived antipode)
            let rs = RootSystem::build(series);
            let se = hopf::s_xi_display_a(&rs);
            let sg = hopf::antipode(&NcExpr::atom(GenSym::Xi), &hd).expect("antipode");
            let a = erep.evaluate(&se).expect("evaluate");
            let b = erep.evaluate(&sg).expect("evaluate");
            out.push(CheckRecord::reported(
                format!("hopf.{lbl}.dr.display.s-xi"),
                "A23".into(),
                a.defect(&b),
            ));
        } else {
            for c in check_coproduct_relations(&trep, &trep, &hd, &cat).expect("morphism") {
                out.push(CheckRecord::reported(
                    format!("hopf.{lbl}.dr.delta-rel-display.{}", c.id),
                    c.anchor,
                    c.defect,
                ));
            }
        }
    }

    if series.kind == SeriesKind::A && fam_ok(fam, Family::YangianExplicit) {
        let hd = hopf_data(HopfFamily::Yangian, series).expect("hopf data");
        let rep = build_representation(RepKind::ClassicalCounterpart, series).expect("rep");
        let rep = extend_with_xi(&rep, XiMode::Evaluation).expect("classical evaluation");
        for c in check_hopf_axioms(&rep, &hd).expect("axioms") {
            out.push(CheckRecord::from_defect(
                format!("hopf.{lbl}.yangian.axiom.{}.{}", c.generator, c.axiom),
                "A37".into(),
                c.defect,
            ));
        }
        let cat =
            relation_catalog(Family::YangianExplicit, CatalogSeries::Classical(series)).unwrap();
        for c in check_coproduct_relations(&rep, &rep, &hd, &cat).expect("morphism") {
            out.push(CheckRecord::from_defect(
                format!("hopf.{lbl}.yangian.delta-rel.{}", c.id),
                c.anchor,
                c.defect,
            ));
        }
        for (g, d) in check_s_squared(&rep, &hd).expect("s2") {
            out.push(CheckRecord::from_defect(
                format!("hopf.{lbl}.yangian.s2.{g}"),
                "A38".into(),
                d,
            ));
        }
    }

    if fam_ok(fam, Family::QuantumCurrent) {
        // k_{δ−θ} assembled from the marks equals the θ-vector form
        let rs = RootSystem::build(series);
        let k = hopf::k_delta_theta(&rs);
        let mut expect = crate::freealg::HalfVec::from_root(&crate::rootsys::neg(&rs.theta));
        expect.c2 = 2;
        out.push(CheckRecord::from_defect(
            format!("hopf.{lbl}.qc.k-delta-theta"),
            "qc.23".into(),
            usize::from(k != expect),
        ));
    }
    out
}

/// Scaling-automorphism checks.
pub fn check_automorphism(series: Series, fam: Option<Family>) -> Vec<CheckRecord> {
    if !fam_ok(fam, Family::QuantumCurrent) {
        return Vec::new();
    }
    let lbl = series.label();
    let rep = verify_scaling_automorphism(series).expect("scaling");
    let mut out = vec![CheckRecord::from_defect(
        format!("automorphism.{lbl}.xi-homogeneous"),
        "qc.24".into(),
        rep.xi_homogeneous_failures.len(),
    )];
    if let Some(d) = rep.shifted_point_defect {
        out.push(CheckRecord::from_defect(
            format!("automorphism.{lbl}.shifted-point"),
            "gen.14".into(),
            d,
        ));
    }
    if let Some(fails) = rep.shifted_catalog_failures {
        out.push(CheckRecord::from_defect(
            format!("automorphism.{lbl}.shifted-catalog"),
            "gen.14".into(),
            fails.len(),
        ));
    }
    if let Some(ok) = rep.identity_at_a0 {
        out.push(CheckRecord::from_defect(
            format!("automorphism.{lbl}.identity-a0"),
            "gen.14".into(),
            usize::from(!ok),
        ));
    }
    out
}

/// The classical Yang-Baxter suite (rank-one, fixed checks).
pub fn check_cybe() -> Vec<CheckRecord> {
    use cybe::*;
    let mut out = Vec::new();
    let mut push = |id: &str, anchor: &str, ok: bool| {
        out.push(CheckRecord::from_defect(
            format!("cybe.{id}"),
            anchor.into(),
            usize::from(!ok),
        ));
    };
    let o = omega2();
    push(
        "omega2.value",
        "RT3",
        o.0[H][H].equals(&Scalar::rational(1, 2))
            && o.0[EP][EM].equals(&Scalar::one())
            && o.0[EM][EP].equals(&Scalar::one()),
    );
    push("omega2.flip", "RT3", o.sub(&o.flip()).is_zero());
    push(
        "omega2.adinv",
        "RT3",
        (0..DIM).all(|i| ad_action(&LieElement::basis(i), &o).is_zero()),
    );
    push(
        "omega2.casimir-sum",
        "RT4",
        o.sub(&omega2_dual_basis_sum()).is_zero(),
    );
    for kind in [RKind::Rational, RKind::Trigonometric, RKind::Sum] {
        push(
            &format!("defect.{}", kind.label()),
            "CYBE1",
            cybe_defect(kind).is_zero(),
        );
        push(
            &format!("unitarity.{}", kind.label()),
            "CYBE5",
            unitarity_defect(kind).is_zero(),
        );
    }
    push("shift", "RT7", shift_defect().is_zero());
    let jacobi = (0..DIM).all(|i| {
        (0..DIM).all(|j| {
            (0..DIM).all(|k| {
                let (x, y, z) = (
                    LieElement::basis(i),
                    LieElement::basis(j),
                    LieElement::basis(k),
                );
                x.bracket(&y.bracket(&z))
                    .0
                    .iter()
                    .zip(&y.bracket(&z.bracket(&x)).0)
                    .zip(&z.bracket(&x.bracket(&y)).0)
                    .all(|((a, b), c)| a.add(b).add(c).is_zero())
            })
        })
    });
    push("jacobi", "RT2", jacobi);
    push(
        "cocommutator.rational-h",
        "RT2",
        cocommutator(RKind::Rational, &LieElement::basis(H)).is_zero(),
    );
    let x = LieElement([Scalar::integer(2), Scalar::integer(-1), Scalar::integer(3)]);
    let parts = (0..DIM)
        .map(|i| cocommutator(RKind::Sum, &LieElement::basis(i)).scale(&x.0[i]))
        .reduce(|a, b| a.add(&b))
        .unwrap();
    push(
        "cocommutator.linear",
        "RT2",
        cocommutator(RKind::Sum, &x).sub(&parts).is_zero(),
    );
    out
}

// ---------------------------------------------------------------------
// Suite assembly and execution
// ---------------------------------------------------------------------

fn grid_for(req: &SuiteRequest) -> Result<Vec<Series>, SuiteError> {
    match (req.series, req.rank) {
        (Some(kind), Some(rank)) => {
            let s = Series::new(kind, rank)
                .map_err(|e| SuiteError::Usage(format!("{e}")))?;
            Ok(vec![s])
        }
        (Some(kind), None) => Ok(default_grid()
            .into_iter()
            .filter(|s| s.kind == kind)
            .collect()),
        (None, Some(rank)) => {
            let out: Vec<Series> = [SeriesKind::A, SeriesKind::B, SeriesKind::C, SeriesKind::D]
                .into_iter()
                .filter_map(|k| Series::new(k, rank).ok())
                .collect();
            if out.is_empty() {
                return Err(SuiteError::Usage(format!(
                    "rank {rank} is not valid for any series"
                )));
            }
            Ok(out)
        }
        (None, None) => Ok(default_grid()),
    }
}

type Task = Box<dyn FnOnce() -> Vec<CheckRecord> + Send>;

fn worker_count() -> usize {
    std::env::var("QKMV_WORKERS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|n| *n > 0)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
}

fn run_tasks(tasks: Vec<Task>) -> Vec<CheckRecord> {
    let queue: Mutex<VecDeque<Task>> = Mutex::new(tasks.into());
    let results: Mutex<Vec<CheckRecord>> = Mutex::new(Vec::new());
    let workers = worker_count();
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let task = queue.lock().unwrap().pop_front();
                match task {
                    None => break,
                    Some(t) => {
                        let recs = t();
                        results.lock().unwrap().extend(recs);
                    }
                }
            });
        }
    });
    let mut out = results.into_inner().unwrap();
    out.sort_by(|a, b| a.id.cmp(&b.id));
    out
}

pub fn run_suite(req: &SuiteRequest) -> Result<Report, SuiteError> {
    if req.mode == Mode::Evaluation {
        if let Some(kind) = req.series {
            if kind != SeriesKind::A {
                return Err(SuiteError::Usage(
                    "evaluation mode is only available for series A".into(),
                ));
            }
        }
    }
    let grid = grid_for(req)?;
    let fam = req.family;
    let mut tasks: Vec<Task> = Vec::new();

    let add_relations = |tasks: &mut Vec<Task>, mode: Mode| {
        for s in grid.iter().copied() {
            match mode {
                Mode::Substitution => {
                    tasks.push(Box::new(move || check_base_gates(s, fam)));
                    tasks.push(Box::new(move || check_drinfeldian_tilde(s, fam)));
                    tasks.push(Box::new(move || check_structural(s, fam)));
                    tasks.push(Box::new(move || check_yangian_classical(s, fam)));
                    tasks.push(Box::new(move || {
                        check_free_identity(CatalogSeries::Classical(s), fam)
                    }));
                }
                Mode::Evaluation => {
                    if s.kind == SeriesKind::A {
                        tasks.push(Box::new(move || check_evaluation_a(s, fam)));
                    }
                }
                Mode::XiSymbolic => {
                    tasks.push(Box::new(move || check_xi_symbolic(s, fam)));
                }
            }
        }
        if mode == Mode::Substitution && req.series.is_none() {
            tasks.push(Box::new(move || {
                check_free_identity(CatalogSeries::Sl2, fam)
            }));
        }
    };

    match req.suite {
        Suite::Relations => add_relations(&mut tasks, req.mode),
        Suite::Hopf => {
            for s in grid.iter().copied() {
                tasks.push(Box::new(move || check_hopf_suite(s, fam)));
            }
        }
        Suite::Limits => {
            for s in grid.iter().copied() {
                tasks.push(Box::new(move || check_limits_q1(s, fam)));
                tasks.push(Box::new(move || check_limits_eta0(s, fam)));
            }
        }
        Suite::Cybe => tasks.push(Box::new(check_cybe)),
        Suite::Automorphism => {
            for s in grid.iter().copied() {
                tasks.push(Box::new(move || check_automorphism(s, fam)));
            }
        }
        Suite::All => {
            add_relations(&mut tasks, Mode::Substitution);
            add_relations(&mut tasks, Mode::Evaluation);
            add_relations(&mut tasks, Mode::XiSymbolic);
            for s in grid.iter().copied() {
                tasks.push(Box::new(move || check_hopf_suite(s, fam)));
                tasks.push(Box::new(move || check_limits_q1(s, fam)));
                tasks.push(Box::new(move || check_limits_eta0(s, fam)));
                tasks.push(Box::new(move || check_automorphism(s, fam)));
            }
            tasks.push(Box::new(check_cybe));
        }
    }

    let checks = run_tasks(tasks);
    let (mut pass, mut fail, mut reported) = (0u64, 0u64, 0u64);
    for c in &checks {
        match c.status {
            Status::Pass => pass += 1,
            Status::Fail => fail += 1,
            Status::Reported => reported += 1,
        }
    }
    Ok(Report {
        suite: req.suite,
        mode: req.mode,
        family: req.family,
        series: req.series,
        rank: req.rank,
        checks,
        pass,
        fail,
        reported,
    })
}

/// Serialize the report and write it to the requested destination.
/// The serialized bytes are deterministic for a given request.
pub fn emit_report(report: &Report, req: &SuiteRequest) -> Result<(), SuiteError> {
    let body = match req.format {
        OutputFormat::Json => report.to_json(),
        OutputFormat::Text => report.to_text(),
    };
    match &req.out {
        Some(path) => {
            let mut f = std::fs::File::create(path)?;
            f.write_all(body.as_bytes())?;
        }
        None => {
            print!("{body}");
        }
    }
    Ok(())
}

pub fn parse_family(s: &str) -> Option<Family> {
    Some(match s {
        "classical-current" => Family::ClassicalCurrent,
        "uqg" => Family::Uqg,
        "quantum-current" => Family::QuantumCurrent,
        "drinfeldian-general" => Family::DrinfeldianGeneral,
        "drinfeldian-explicit" => Family::DrinfeldianExplicit,
        "yangian-explicit" => Family::YangianExplicit,
        _ => return None,
    })
}

pub fn parse_series(s: &str) -> Option<SeriesKind> {
    Some(match s {
        "A" | "a" => SeriesKind::A,
        "B" | "b" => SeriesKind::B,
        "C" | "c" => SeriesKind::C,
        "D" | "d" => SeriesKind::D,
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cybe_suite_all_pass() {
        let checks = check_cybe();
        assert!(checks.iter().all(|c| c.status == Status::Pass));
        assert_eq!(checks.len(), 14);
    }

    #[test]
    fn exit_codes_follow_the_totals() {
        let mut rep = Report {
            suite: Suite::Cybe,
            mode: Mode::Substitution,
            family: None,
            series: None,
            rank: None,
            checks: Vec::new(),
            pass: 3,
            fail: 0,
            reported: 1,
        };
        assert_eq!(rep.exit_code(), 0); // recorded outcomes do not fail a run
        rep.fail = 1;
        assert_eq!(rep.exit_code(), 1);
    }

    #[test]
    fn report_is_deterministic() {
        let req = SuiteRequest {
            suite: Suite::Cybe,
            family: None,
            series: None,
            rank: None,
            mode: Mode::Substitution,
            format: OutputFormat::Json,
            out: None,
        };
        let a = run_suite(&req).unwrap().to_json();
        let b = run_suite(&req).unwrap().to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn grid_filters_and_usage_errors() {
        let mut req = SuiteRequest {
            suite: Suite::Relations,
            family: None,
            series: Some(SeriesKind::C),
            rank: Some(1),
            mode: Mode::Substitution,
            format: OutputFormat::Text,
            out: None,
        };
        assert!(matches!(run_suite(&req), Err(SuiteError::Usage(_))));
        req.series = Some(SeriesKind::B);
        req.rank = None;
        req.mode = Mode::Evaluation;
        assert!(matches!(run_suite(&req), Err(SuiteError::Usage(_))));
    }

    #[test]
    fn relations_suite_c2_passes() {
        let req = SuiteRequest {
            suite: Suite::Relations,
            family: None,
            series: Some(SeriesKind::C),
            rank: Some(2),
            mode: Mode::Substitution,
            format: OutputFormat::Text,
            out: None,
        };
        let rep = run_suite(&req).unwrap();
        assert_eq!(rep.fail, 0, "{}", rep.to_text());
        assert!(rep.pass > 0);
    }

    #[test]
    fn classical_evaluation_outcome_is_recorded_not_failed() {
        // the B-series η-quadratic right-hand sides do not vanish under
        // the classical evaluation; the harness records them
        let s = Series::new(SeriesKind::B, 3).unwrap();
        let recs = check_yangian_classical(s, None);
        assert!(recs.iter().all(|c| c.status != Status::Fail));
        let reported: Vec<_> = recs
            .iter()
            .filter(|c| c.status == Status::Reported)
            .map(|c| c.anchor.as_str())
            .collect();
        assert_eq!(reported, vec!["B24", "B25"]);
    }

    #[test]
    fn family_filter_restricts_records() {
        let req = SuiteRequest {
            suite: Suite::Relations,
            family: Some(Family::Uqg),
            series: Some(SeriesKind::A),
            rank: Some(3),
            mode: Mode::Substitution,
            format: OutputFormat::Text,
            out: None,
        };
        let rep = run_suite(&req).unwrap();
        assert!(rep.checks.iter().all(|c| !c.id.contains(".dr.")));
        assert_eq!(rep.fail, 0);
    }
}
