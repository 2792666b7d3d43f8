//! Verification suites: build structured families of complexes, run the
//! designated matching-tree strategy, compare the outcome against the
//! closed-form prediction, and cross-check everything against integer
//! homology. Each instance becomes one [`VerificationRecord`]; renderers
//! turn record lists into JSON lines or a fixed-width table.
//!
//! Determinism contract: for a fixed [`SuiteConfig`], the produced records
//! and both renderings are byte-identical across runs. Timings are kept on
//! the records for diagnostics but excluded from the canonical renderings.

use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::complex::ComplexRepr;
use crate::devoid::{devoid_complex, dominance_complex, DevoidSpec};
use crate::error::DevoidError;
use crate::face::Face;
use crate::graph::{
    cycle, induced_f_matching_number, path, random_chordal, random_forest, saddle_vertices,
    PatternGraph,
};
use crate::homology::{betti, descriptor_match, BettiProfile, DescriptorMatch};
use crate::morse::{
    assemble_matching, fold_reduce, nonface_split, run_tree, verify_acyclic, verify_matching,
    ContractibilityCertificate, HomotopyDescriptor, MorseMatching, PivotStrategy, ScriptedPlan,
};
use crate::predict::{predict_cycle, predict_dom_chordal, predict_dom_forest, predict_path};
use crate::Result;

/// The named verification suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteName {
    /// Path-avoidance complexes of paths against the sphere/contractible
    /// classification, with block-labeling pivots.
    Paths,
    /// Path-avoidance complexes of cycles against the four-branch wedge
    /// classification, with block-labeling pivots.
    Cycles,
    /// Dominance complexes of random chordal graphs against the
    /// cover-number sphere, with simplicial-vertex pivots.
    DomChordal,
    /// Dominance complexes of random forests against the matching-number
    /// sphere, with leaf-neighbor pivots.
    DomForest,
    /// Three-vertex-path avoidance on random forests: torsion-free homology
    /// vanishing above twice the induced-matching bound.
    ForestP3,
    /// Replays of the worked examples: the fold figure, the non-face
    /// surgery chain, and the scripted matching tree.
    Figures,
}

impl SuiteName {
    pub const ALL: [SuiteName; 6] = [
        SuiteName::Paths,
        SuiteName::Cycles,
        SuiteName::DomChordal,
        SuiteName::DomForest,
        SuiteName::ForestP3,
        SuiteName::Figures,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::Paths => "paths",
            SuiteName::Cycles => "cycles",
            SuiteName::DomChordal => "dom-chordal",
            SuiteName::DomForest => "dom-forest",
            SuiteName::ForestP3 => "forest-p3",
            SuiteName::Figures => "figures",
        }
    }

    pub fn parse(s: &str) -> Result<SuiteName> {
        SuiteName::ALL
            .into_iter()
            .find(|name| name.as_str() == s)
            .ok_or_else(|| {
                DevoidError::InvalidParameter(format!(
                    "unknown suite {s:?}; expected paths|cycles|dom-chordal|dom-forest|forest-p3|figures"
                ))
            })
    }
}

/// Knobs shared by every suite. `None` fields fall back to per-suite
/// defaults (the full ranges used by the published tables).
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Forbidden-path length for the paths/cycles suites.
    pub k: usize,
    /// Smallest host size; clamped up to each suite's minimum.
    pub n_min: Option<usize>,
    /// Largest host size.
    pub n_max: Option<usize>,
    /// Number of random instances for the randomized suites.
    pub instances: Option<usize>,
    /// Master seed for instance generation.
    pub seed: u64,
    /// Face budget for homology and matching verification.
    pub face_budget: usize,
    /// Node budget for matching-tree runs.
    pub node_budget: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            k: 3,
            n_min: None,
            n_max: None,
            instances: None,
            seed: 7,
            face_budget: crate::homology::DEFAULT_FACE_BUDGET,
            node_budget: crate::morse::DEFAULT_NODE_BUDGET,
        }
    }
}

/// Outcome of one suite instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RecordStatus {
    Pass,
    Fail,
    /// The instance exceeded a budget; recorded, not counted as a failure.
    Skipped,
}

impl RecordStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            RecordStatus::Pass => "pass",
            RecordStatus::Fail => "fail",
            RecordStatus::Skipped => "skipped",
        }
    }
}

/// One verified instance: what the theorem predicts, what the matching
/// tree computed, what homology says, and whether they all agree.
///
/// A record passes exactly when the computed descriptor matches the
/// prediction and the homology profile is consistent with both; components
/// a suite does not produce (e.g. the bound-only forest suite has no
/// descriptors) are vacuously consistent.
#[derive(Clone, Debug)]
pub struct VerificationRecord {
    pub instance: String,
    pub predicted: Option<HomotopyDescriptor>,
    pub computed: Option<HomotopyDescriptor>,
    pub homology: Option<BettiProfile>,
    pub status: RecordStatus,
    /// Failure reasons, skip reason, or a short success note.
    pub detail: String,
    /// Wall-clock milliseconds; diagnostic only, never rendered into the
    /// canonical JSON/table output.
    pub millis: u128,
}

impl VerificationRecord {
    /// Canonical JSON object (deterministic; excludes timings).
    pub fn to_json(&self) -> Value {
        json!({
            "instance": self.instance,
            "predicted": self.predicted.as_ref().map(HomotopyDescriptor::to_json).unwrap_or(Value::Null),
            "computed": self.computed.as_ref().map(HomotopyDescriptor::to_json).unwrap_or(Value::Null),
            "homology": self.homology.as_ref().map(BettiProfile::to_json).unwrap_or(Value::Null),
            "status": self.status.as_str(),
            "detail": self.detail,
        })
    }
}

/// True when no record failed (skipped records do not count as failures).
pub fn all_pass(records: &[VerificationRecord]) -> bool {
    records.iter().all(|r| r.status != RecordStatus::Fail)
}

/// Run the named suite, producing one record per instance in a fixed,
/// deterministic order.
pub fn run_suite(name: SuiteName, cfg: &SuiteConfig) -> Result<Vec<VerificationRecord>> {
    match name {
        SuiteName::Paths => paths_suite(cfg),
        SuiteName::Cycles => cycles_suite(cfg),
        SuiteName::DomChordal => dom_chordal_suite(cfg),
        SuiteName::DomForest => dom_forest_suite(cfg),
        SuiteName::ForestP3 => forest_p3_suite(cfg),
        SuiteName::Figures => figures_suite(cfg),
    }
}

// ---------------------------------------------------------------------------
// Shared record plumbing
// ---------------------------------------------------------------------------

fn budget_skip(e: &DevoidError) -> Option<String> {
    match e {
        DevoidError::BudgetExceeded(m) | DevoidError::TooLarge(m) => Some(m.clone()),
        _ => None,
    }
}

fn error_record(
    instance: String,
    predicted: Option<HomotopyDescriptor>,
    e: DevoidError,
    millis: u128,
) -> VerificationRecord {
    let (status, detail) = match budget_skip(&e) {
        Some(reason) => (RecordStatus::Skipped, reason),
        None => (RecordStatus::Fail, e.to_string()),
    };
    VerificationRecord {
        instance,
        predicted,
        computed: None,
        homology: None,
        status,
        detail,
        millis,
    }
}

/// Run the full tree-plus-homology pipeline for one instance and score it
/// against `predicted`.
fn theorem_record(
    instance: String,
    c: &ComplexRepr,
    strategy: &PivotStrategy,
    predicted: HomotopyDescriptor,
    cfg: &SuiteConfig,
) -> VerificationRecord {
    let start = Instant::now();
    let outcome = theorem_outcome(c, strategy, &predicted, cfg);
    let millis = start.elapsed().as_millis();
    match outcome {
        Ok((computed, profile, problems)) => {
            let status = if problems.is_empty() {
                RecordStatus::Pass
            } else {
                RecordStatus::Fail
            };
            let detail = if problems.is_empty() {
                format!("agrees: {computed}")
            } else {
                problems.join("; ")
            };
            VerificationRecord {
                instance,
                predicted: Some(predicted),
                computed: Some(computed),
                homology: Some(profile),
                status,
                detail,
                millis,
            }
        }
        Err(e) => error_record(instance, Some(predicted), e, millis),
    }
}

fn theorem_outcome(
    c: &ComplexRepr,
    strategy: &PivotStrategy,
    predicted: &HomotopyDescriptor,
    cfg: &SuiteConfig,
) -> Result<(HomotopyDescriptor, BettiProfile, Vec<String>)> {
    let (tree, report) = run_tree(c, strategy, cfg.node_budget)?;
    let computed = report.interpret();
    let matching = assemble_matching(c, &tree, cfg.face_budget)?;
    let mut problems = Vec::new();
    if !verify_matching(c, &matching, cfg.face_budget)? {
        problems.push("assembled matching fails the pairing checks".to_string());
    }
    if !verify_acyclic(c, &matching, cfg.face_budget)? {
        problems.push("assembled matching is not acyclic".to_string());
    }
    let profile = betti(c, cfg.face_budget)?;
    if computed != *predicted {
        problems.push(format!("computed {computed} differs from predicted {predicted}"));
    }
    if descriptor_match(&profile, predicted) != DescriptorMatch::Consistent {
        problems.push("homology does not confirm the prediction".to_string());
    }
    if descriptor_match(&profile, &computed) != DescriptorMatch::Consistent {
        problems.push("homology does not confirm the computed descriptor".to_string());
    }
    Ok((computed, profile, problems))
}

// ---------------------------------------------------------------------------
// Theorem suites
// ---------------------------------------------------------------------------

fn paths_suite(cfg: &SuiteConfig) -> Result<Vec<VerificationRecord>> {
    let k = cfg.k;
    if k < 2 {
        return Err(DevoidError::InvalidParameter(
            "the paths suite needs a forbidden-path length k >= 2".into(),
        ));
    }
    let lo = cfg.n_min.unwrap_or(k).max(k);
    let hi = cfg.n_max.unwrap_or(16);
    let pattern = PatternGraph::new(path(k)?)?;
    let strategy = PivotStrategy::PathLabeling(k);
    let mut records = Vec::new();
    for n in lo..=hi {
        let instance = format!("paths k={k} n={n}");
        let start = Instant::now();
        let built: Result<(ComplexRepr, HomotopyDescriptor)> = (|| {
            let spec = DevoidSpec::new(path(n)?, vec![pattern.clone()])?;
            Ok((devoid_complex(&spec)?, predict_path(n, k)?))
        })();
        records.push(match built {
            Ok((c, predicted)) => theorem_record(instance, &c, &strategy, predicted, cfg),
            Err(e) => error_record(instance, None, e, start.elapsed().as_millis()),
        });
    }
    Ok(records)
}

fn cycles_suite(cfg: &SuiteConfig) -> Result<Vec<VerificationRecord>> {
    let k = cfg.k;
    if k < 2 {
        return Err(DevoidError::InvalidParameter(
            "the cycles suite needs a forbidden-path length k >= 2".into(),
        ));
    }
    let lo = cfg.n_min.unwrap_or(0).max(k).max(3);
    let hi = cfg.n_max.unwrap_or(14);
    let pattern = PatternGraph::new(path(k)?)?;
    let strategy = PivotStrategy::CycleLabeling(k);
    let mut records = Vec::new();
    for n in lo..=hi {
        let instance = format!("cycles k={k} n={n}");
        let start = Instant::now();
        let built: Result<(ComplexRepr, HomotopyDescriptor)> = (|| {
            let spec = DevoidSpec::new(cycle(n)?, vec![pattern.clone()])?;
            Ok((devoid_complex(&spec)?, predict_cycle(n, k)?))
        })();
        records.push(match built {
            Ok((c, predicted)) => theorem_record(instance, &c, &strategy, predicted, cfg),
            Err(e) => error_record(instance, None, e, start.elapsed().as_millis()),
        });
    }
    Ok(records)
}

fn dom_chordal_suite(cfg: &SuiteConfig) -> Result<Vec<VerificationRecord>> {
    let count = cfg.instances.unwrap_or(200);
    let n_max = cfg.n_max.unwrap_or(12).max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(0x00D0_C40D));
    let mut records = Vec::new();
    for i in 0..count {
        let n = rng.gen_range(1..=n_max);
        let density = rng.gen_range(0.15..0.85);
        let gseed: u64 = rng.gen();
        let instance = format!("dom-chordal i={i:03} n={n}");
        let start = Instant::now();
        let built: Result<(ComplexRepr, PivotStrategy, HomotopyDescriptor)> = (|| {
            let g = random_chordal(n, density, gseed)?;
            let c = dominance_complex(&g)?;
            let predicted = predict_dom_chordal(&g)?;
            Ok((c, PivotStrategy::SimplicialVertex(g), predicted))
        })();
        records.push(match built {
            Ok((c, strategy, predicted)) => {
                theorem_record(instance, &c, &strategy, predicted, cfg)
            }
            Err(e) => error_record(instance, None, e, start.elapsed().as_millis()),
        });
    }
    Ok(records)
}

fn dom_forest_suite(cfg: &SuiteConfig) -> Result<Vec<VerificationRecord>> {
    let count = cfg.instances.unwrap_or(200);
    let n_max = cfg.n_max.unwrap_or(14).max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(0x00F0_4E57));
    let mut records = Vec::new();
    for i in 0..count {
        let n = rng.gen_range(1..=n_max);
        let gseed: u64 = rng.gen();
        let instance = format!("dom-forest i={i:03} n={n}");
        let start = Instant::now();
        let built: Result<(ComplexRepr, PivotStrategy, HomotopyDescriptor)> = (|| {
            let f = random_forest(n, gseed)?;
            let c = dominance_complex(&f)?;
            let predicted = predict_dom_forest(&f)?;
            Ok((c, PivotStrategy::LeafNeighbor(f), predicted))
        })();
        records.push(match built {
            Ok((c, strategy, predicted)) => {
                theorem_record(instance, &c, &strategy, predicted, cfg)
            }
            Err(e) => error_record(instance, None, e, start.elapsed().as_millis()),
        });
    }
    Ok(records)
}

// ---------------------------------------------------------------------------
// Forest bound suite
// ---------------------------------------------------------------------------

fn forest_p3_suite(cfg: &SuiteConfig) -> Result<Vec<VerificationRecord>> {
    let count = cfg.instances.unwrap_or(100);
    let n_max = cfg.n_max.unwrap_or(12).max(1);
    let pattern = PatternGraph::new(path(3)?)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(0x00F0_4E93));
    let mut records = Vec::new();
    for i in 0..count {
        let n = rng.gen_range(1..=n_max);
        let gseed: u64 = rng.gen();
        let instance = format!("forest-p3 i={i:03} n={n}");
        let start = Instant::now();
        let outcome = forest_p3_outcome(n, gseed, &pattern, cfg);
        let millis = start.elapsed().as_millis();
        records.push(match outcome {
            Ok((profile, problems, note)) => {
                let status = if problems.is_empty() {
                    RecordStatus::Pass
                } else {
                    RecordStatus::Fail
                };
                let detail = if problems.is_empty() {
                    note
                } else {
                    problems.join("; ")
                };
                VerificationRecord {
                    instance,
                    predicted: None,
                    computed: None,
                    homology: Some(profile),
                    status,
                    detail,
                    millis,
                }
            }
            Err(e) => error_record(instance, None, e, millis),
        });
    }
    Ok(records)
}

/// Check one random forest: homology of the three-vertex-path avoidance
/// complex must be torsion-free and vanish above 2·ind_3(F) − 1. As a side
/// check, delete a saddle vertex (from a tree component large enough to
/// contain a three-vertex path) and certify the deletion contractible via
/// fold-to-cone or trivial homology; the note records which certificate
/// succeeded, and instances where neither does are recorded, not failed.
fn forest_p3_outcome(
    n: usize,
    gseed: u64,
    pattern: &PatternGraph,
    cfg: &SuiteConfig,
) -> Result<(BettiProfile, Vec<String>, String)> {
    let f = random_forest(n, gseed)?;
    let spec = DevoidSpec::new(f.clone(), vec![pattern.clone()])?;
    let c = devoid_complex(&spec)?;
    let profile = betti(&c, cfg.face_budget)?;
    let ind3 = induced_f_matching_number(&f, pattern)? as i64;
    let bound = 2 * ind3 - 1;
    let mut problems = Vec::new();
    if !profile.is_torsion_free() {
        problems.push("homology has torsion".to_string());
    }
    if let Some(top) = profile.top_nonzero_dim() {
        if top > bound {
            problems.push(format!(
                "nonzero homology in dimension {top} exceeds the bound {bound}"
            ));
        }
    }
    let components = f.components_within(f.vertex_set());
    let saddle = saddle_vertices(&f)?.into_iter().find(|&x| {
        components
            .iter()
            .any(|comp| comp.contains(x) && comp.cardinality() >= 3)
    });
    let note = match saddle {
        None => format!("bound {bound}; no saddle vertex"),
        Some(x) => {
            let del = c.deletion(Face::singleton(x))?;
            let folded_to_cone = fold_reduce(&del)?.0.is_cone().is_some();
            let verdict = if folded_to_cone {
                "folds to a cone"
            } else {
                let p = betti(&del, cfg.face_budget)?;
                if p.all_betti_zero() && p.is_torsion_free() {
                    "has trivial homology"
                } else {
                    "resists both contractibility certificates"
                }
            };
            format!("bound {bound}; deleting saddle {x} {verdict}")
        }
    };
    Ok((profile, problems, note))
}

// ---------------------------------------------------------------------------
// Figures suite
// ---------------------------------------------------------------------------

struct FigureOutcome {
    predicted: Option<HomotopyDescriptor>,
    computed: Option<HomotopyDescriptor>,
    homology: Option<BettiProfile>,
    problems: Vec<String>,
    note: String,
}

fn figures_suite(cfg: &SuiteConfig) -> Result<Vec<VerificationRecord>> {
    let parts: [(&str, fn(&SuiteConfig) -> Result<FigureOutcome>); 5] = [
        ("figures fold", figure_fold),
        ("figures surgery-collapse", figure_surgery_collapse),
        ("figures surgery-wedge", figure_surgery_wedge),
        ("figures surgery-homology", figure_surgery_homology),
        ("figures scripted-tree", figure_scripted_tree),
    ];
    let mut records = Vec::new();
    for (instance, build) in parts {
        let start = Instant::now();
        let outcome = build(cfg);
        let millis = start.elapsed().as_millis();
        records.push(match outcome {
            Ok(out) => {
                let status = if out.problems.is_empty() {
                    RecordStatus::Pass
                } else {
                    RecordStatus::Fail
                };
                let detail = if out.problems.is_empty() {
                    out.note
                } else {
                    out.problems.join("; ")
                };
                VerificationRecord {
                    instance: instance.to_string(),
                    predicted: out.predicted,
                    computed: out.computed,
                    homology: out.homology,
                    status,
                    detail,
                    millis,
                }
            }
            Err(e) => error_record(instance.to_string(), None, e, millis),
        });
    }
    Ok(records)
}

fn facets(n: usize, lists: &[&[usize]]) -> Result<ComplexRepr> {
    ComplexRepr::from_facets(
        n,
        lists.iter().map(|vs| Face::from_vertices(vs.iter().copied())),
    )
}

/// The fold example: a filled triangle {0,1,2} with a path 0–3–2 attached.
/// Vertex 0 dominates vertex 1, so the fold deletes vertex 1 and leaves the
/// empty triangle on {0,2,3} — a circle.
fn figure_fold(cfg: &SuiteConfig) -> Result<FigureOutcome> {
    let delta = facets(4, &[&[0, 1, 2], &[0, 3], &[2, 3]])?;
    let expected = facets(4, &[&[0, 2], &[0, 3], &[2, 3]])?;
    let (folded, trace) = fold_reduce(&delta)?;
    let mut problems = Vec::new();
    if trace != vec![(0, 1)] {
        problems.push(format!(
            "fold trace {trace:?} differs from the expected single fold (0,1)"
        ));
    }
    if folded != expected {
        problems.push("fold result differs from the deletion of vertex 1".to_string());
    }
    let predicted = HomotopyDescriptor::sphere(1);
    let profile = betti(&delta, cfg.face_budget)?;
    if descriptor_match(&profile, &predicted) != DescriptorMatch::Consistent {
        problems.push("homology does not confirm the circle".to_string());
    }
    Ok(FigureOutcome {
        predicted: Some(predicted),
        computed: None,
        homology: Some(profile),
        problems,
        note: "fold deleted vertex 1 (witness 0); the empty triangle remains".to_string(),
    })
}

fn surgery_complexes() -> Result<(ComplexRepr, ComplexRepr, ComplexRepr)> {
    // A chain of three complexes related by non-face surgery: the largest
    // has a filled triangle {0,1,4}; removing {1,4} (and its coface) leaves
    // a hexagon-like graph; removing {3,4} leaves a square with a pendant
    // edge.
    let delta1 = facets(5, &[&[1, 2], &[2, 3], &[0, 3], &[3, 4], &[0, 1, 4]])?;
    let delta2 = facets(5, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3], &[0, 4], &[3, 4]])?;
    let delta3 = facets(5, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3], &[0, 4]])?;
    Ok((delta1, delta2, delta3))
}

fn certificate_note(cert: &ContractibilityCertificate) -> String {
    match cert {
        ContractibilityCertificate::ConeApex(w) => format!("cone apex {w}"),
        ContractibilityCertificate::CollapseSequence(steps) => {
            format!("collapses in {} steps", steps.len())
        }
    }
}

/// First surgery step: putting the non-face {1,4} and its coface {0,1,4}
/// back changes nothing up to homotopy, because the attachment sphere is
/// contractible inside the smaller complex.
fn figure_surgery_collapse(cfg: &SuiteConfig) -> Result<FigureOutcome> {
    let (delta1, delta2, _) = surgery_complexes()?;
    let split = nonface_split(&delta2, Face::from_vertices([1, 4]), &[Face::from_vertices([0, 1, 4])])?;
    let mut problems = Vec::new();
    if split.sphere_dim != 0 {
        problems.push(format!(
            "attachment sphere dimension {} differs from 0",
            split.sphere_dim
        ));
    }
    let augmented = facets(
        5,
        &[&[0, 1], &[1, 2], &[2, 3], &[0, 3], &[0, 4], &[3, 4], &[0, 1, 4]],
    )?;
    if augmented != delta1 {
        problems.push("augmenting the smaller complex does not reproduce the figure".to_string());
    }
    let link_profile = betti(&split.link, cfg.face_budget)?;
    if !(link_profile.all_betti_zero() && link_profile.is_torsion_free()) {
        problems.push("the link of the restored non-face is not acyclic".to_string());
    }
    let whole = betti(&delta1, cfg.face_budget)?;
    let base = betti(&delta2, cfg.face_budget)?;
    let shift = split.homology_shift();
    for d in -1..=4 {
        if whole.reduced_betti(d) != base.reduced_betti(d) + link_profile.reduced_betti(d - shift) {
            problems.push(format!("homology bookkeeping fails in dimension {d}"));
        }
    }
    let note = format!(
        "restoring {{1,4}} with coface {{0,1,4}} preserves homotopy ({})",
        certificate_note(&split.certificate)
    );
    Ok(FigureOutcome {
        predicted: None,
        computed: None,
        homology: Some(whole),
        problems,
        note,
    })
}

/// Second surgery step: restoring the bare non-face {3,4} wedges on a
/// circle (suspension of the 0-sphere attachment).
fn figure_surgery_wedge(cfg: &SuiteConfig) -> Result<FigureOutcome> {
    let (_, delta2, delta3) = surgery_complexes()?;
    let split = nonface_split(&delta3, Face::from_vertices([3, 4]), &[])?;
    let mut problems = Vec::new();
    if split.sphere_dim != 0 {
        problems.push(format!(
            "attachment sphere dimension {} differs from 0",
            split.sphere_dim
        ));
    }
    let augmented = facets(5, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3], &[0, 4], &[3, 4]])?;
    if augmented != delta2 {
        problems.push("augmenting the smaller complex does not reproduce the figure".to_string());
    }
    let link_profile = betti(&split.link, cfg.face_budget)?;
    if link_profile.reduced_betti(-1) != 1 {
        problems.push("the restored non-face should have the empty link".to_string());
    }
    let whole = betti(&delta2, cfg.face_budget)?;
    let base = betti(&delta3, cfg.face_budget)?;
    let shift = split.homology_shift();
    for d in -1..=4 {
        if whole.reduced_betti(d) != base.reduced_betti(d) + link_profile.reduced_betti(d - shift) {
            problems.push(format!("homology bookkeeping fails in dimension {d}"));
        }
    }
    let note = format!(
        "restoring {{3,4}} wedges on one extra circle ({})",
        certificate_note(&split.certificate)
    );
    Ok(FigureOutcome {
        predicted: None,
        computed: None,
        homology: Some(whole),
        problems,
        note,
    })
}

/// End of the surgery chain: the original complex is two circles.
fn figure_surgery_homology(cfg: &SuiteConfig) -> Result<FigureOutcome> {
    let (delta1, _, delta3) = surgery_complexes()?;
    let predicted = HomotopyDescriptor::wedge(vec![1, 1]);
    let profile = betti(&delta1, cfg.face_budget)?;
    let mut problems = Vec::new();
    if descriptor_match(&profile, &predicted) != DescriptorMatch::Consistent {
        problems.push("homology of the figure complex is not two circles".to_string());
    }
    let tail = betti(&delta3, cfg.face_budget)?;
    if descriptor_match(&tail, &HomotopyDescriptor::sphere(1)) != DescriptorMatch::Consistent {
        problems.push("the end of the surgery chain is not a single circle".to_string());
    }
    Ok(FigureOutcome {
        predicted: Some(predicted),
        computed: None,
        homology: Some(profile),
        problems,
        note: "surgery chain: figure complex ~ square-with-pendant v S^1 ~ S^1 v S^1".to_string(),
    })
}

/// The scripted matching tree on the two-triangles-sharing-a-path complex:
/// reproduces the published unmatched cells and matched pairs verbatim.
fn figure_scripted_tree(cfg: &SuiteConfig) -> Result<FigureOutcome> {
    let c = facets(5, &[&[0, 1], &[0, 2], &[1, 2], &[1, 3], &[1, 4], &[3, 4]])?;
    let plan = ScriptedPlan {
        pivots: vec![0, 1, 1, 0],
        gammas: vec![Face::from_vertices([1, 2]), Face::from_vertices([2])],
    };
    let strategy = PivotStrategy::Scripted(plan);
    let (tree, report) = run_tree(&c, &strategy, cfg.node_budget)?;
    let mut problems = Vec::new();
    let expected_critical = vec![Face::from_vertices([1, 2]), Face::from_vertices([3, 4])];
    if report.critical != expected_critical {
        problems.push(format!(
            "critical cells {:?} differ from the published {{1,2}}, {{3,4}}",
            report.critical
        ));
    }
    let matching = assemble_matching(&c, &tree, cfg.face_budget)?;
    let expected_matching: MorseMatching = vec![
        (Face::EMPTY, Face::singleton(1)),
        (Face::singleton(0), Face::from_vertices([0, 1])),
        (Face::singleton(2), Face::from_vertices([0, 2])),
        (Face::singleton(3), Face::from_vertices([1, 3])),
        (Face::singleton(4), Face::from_vertices([1, 4])),
    ];
    if matching != expected_matching {
        problems.push(format!(
            "matching {matching:?} differs from the published pairing"
        ));
    }
    if !verify_matching(&c, &matching, cfg.face_budget)? {
        problems.push("assembled matching fails the pairing checks".to_string());
    }
    if !verify_acyclic(&c, &matching, cfg.face_budget)? {
        problems.push("assembled matching is not acyclic".to_string());
    }
    let computed = report.interpret();
    let predicted = HomotopyDescriptor::wedge(vec![1, 1]);
    if computed != predicted {
        problems.push(format!("computed {computed} differs from predicted {predicted}"));
    }
    let profile = betti(&c, cfg.face_budget)?;
    if descriptor_match(&profile, &predicted) != DescriptorMatch::Consistent {
        problems.push("homology does not confirm the wedge of two circles".to_string());
    }
    Ok(FigureOutcome {
        predicted: Some(predicted),
        computed: Some(computed),
        homology: Some(profile),
        problems,
        note: "unmatched {1,2} and {3,4}; five matched pairs as published".to_string(),
    })
}

// ---------------------------------------------------------------------------
// Renderers
// ---------------------------------------------------------------------------

/// One canonical JSON object per line, in suite order. Deterministic.
pub fn render_jsonl(records: &[VerificationRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&r.to_json().to_string());
        out.push('\n');
    }
    out
}

fn descriptor_cell(d: &Option<HomotopyDescriptor>) -> String {
    match d {
        Some(d) => d.to_string(),
        None => "-".to_string(),
    }
}

fn homology_cell(p: &Option<BettiProfile>) -> String {
    let Some(p) = p else {
        return "-".to_string();
    };
    let nonzero: Vec<String> = p
        .betti
        .iter()
        .filter(|(_, &b)| b > 0)
        .map(|(d, b)| format!("{d}:{b}"))
        .collect();
    let mut s = if nonzero.is_empty() {
        "trivial".to_string()
    } else {
        format!("b[{}]", nonzero.join(","))
    };
    if !p.torsion.is_empty() {
        s.push_str("+torsion");
    }
    s
}

/// A fixed-width table rendered from the records (the records stay the
/// single source of truth). Deterministic.
pub fn render_table(records: &[VerificationRecord]) -> String {
    let header = ["instance", "predicted", "computed", "homology", "status", "detail"];
    let rows: Vec<[String; 6]> = records
        .iter()
        .map(|r| {
            [
                r.instance.clone(),
                descriptor_cell(&r.predicted),
                descriptor_cell(&r.computed),
                homology_cell(&r.homology),
                r.status.as_str().to_string(),
                if r.detail.is_empty() {
                    "-".to_string()
                } else {
                    r.detail.clone()
                },
            ]
        })
        .collect();
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row.iter()) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let render_row = |cells: &[&str]| -> String {
        let mut line = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            // The last column is never padded.
            if i + 1 < cells.len() {
                for _ in cell.chars().count()..*w {
                    line.push(' ');
                }
            }
        }
        line.push('\n');
        line
    };
    let mut out = render_row(&header.map(|h| h));
    let total_width: usize = widths.iter().sum::<usize>() + 2 * (widths.len() - 1);
    out.push_str(&"-".repeat(total_width));
    out.push('\n');
    for row in &rows {
        let cells: Vec<&str> = row.iter().map(String::as_str).collect();
        out.push_str(&render_row(&cells));
    }
    out
}

/// Per-instance wall-clock timings plus a total, for diagnostic streams.
pub fn render_timings(records: &[VerificationRecord]) -> String {
    use std::fmt::Write as _;
    let mut out = String::new();
    let mut total: u128 = 0;
    for r in records {
        let _ = writeln!(out, "{}: {} ms", r.instance, r.millis);
        total += r.millis;
    }
    let _ = writeln!(out, "total: {total} ms over {} records", records.len());
    out
}
