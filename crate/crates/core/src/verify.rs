//! Exhaustive desk-scale checks of the structural results about labeled trees.
//!
//! Every run enumerates all labeled trees of order `1..=n_max` (Prüfer order)
//! and, where the claim quantifies over labelings, every labeling with values
//! from a finite set. Work items are independent; with the `parallel` feature
//! they are spread over a rayon pool and re-assembled in enumeration order, so
//! reports do not depend on the worker count.
//!
//! Sub-checks are tagged by how much they establish:
//! * `exact`: the claim is decided completely for each enumerated tree;
//! * `sampled`: a claim over all labelings, checked on the finite value grid;
//! * `certified`: an explicit construction whose failure is verified directly.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::io::{LabeledTreeJson, TreeJson};
use crate::labeling::{
    counterexample_labeling, generate_space, is_nondegenerate, labeling_count, normalize_values, path_max_matrix,
    LabeledTree, Labeling, LabelingError, Labelings,
};
use crate::metric::{check_axioms, us_witness};
use crate::rational::Rational;
use crate::tree::{cayley_count, PruferTrees, Tree, TreeError, DEFAULT_TREE_CAP};

/// Default cap on the number of (tree, labeling) cases of one run. The full
/// order-7 grid over three values (~36.7M cases) needs an explicit raise.
pub const DEFAULT_CASE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("maximum order must be at least 1")]
    ZeroOrder,
    #[error("label value set is empty")]
    EmptyValues,
    #[error("{needed} cases exceed the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error("unknown theorem {0:?} (expected nondeg, main, lemmas or classify)")]
    UnknownTheorem(String),
}

impl VerifyError {
    pub fn code(&self) -> &'static str {
        match self {
            VerifyError::ZeroOrder => "E_ZERO_ORDER",
            VerifyError::EmptyValues => "E_EMPTY_VALUES",
            VerifyError::BudgetExceeded { .. } => "E_BUDGET",
            VerifyError::Tree(e) => e.code(),
            VerifyError::UnknownTheorem(_) => "E_USAGE",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    /// Path-max distance is ultrametric iff the labeling is non-degenerate.
    #[serde(rename = "nondeg")]
    Nondegeneracy,
    /// Star-generated for every labeling iff longest path <= 3 iff at most
    /// two vertices of degree >= 2.
    #[serde(rename = "main")]
    Main,
    /// Under longest path <= 3: high-degree vertices are pairwise adjacent
    /// and there are at most two of them.
    #[serde(rename = "lemmas")]
    StructureLemmas,
    /// Star or double-star iff every labeling is star-generated.
    #[serde(rename = "classify")]
    Classification,
}

impl TheoremId {
    pub const ALL: [TheoremId; 4] = [
        TheoremId::Nondegeneracy,
        TheoremId::Main,
        TheoremId::StructureLemmas,
        TheoremId::Classification,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Nondegeneracy => "nondeg",
            TheoremId::Main => "main",
            TheoremId::StructureLemmas => "lemmas",
            TheoremId::Classification => "classify",
        }
    }

    /// Whether the run enumerates labelings as well as trees.
    pub fn uses_labelings(self) -> bool {
        self != TheoremId::StructureLemmas
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, VerifyError> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| VerifyError::UnknownTheorem(s.to_owned()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub n_max: usize,
    pub values: Vec<Rational>,
    /// Worker threads; 0 or 1 runs on the calling thread.
    pub jobs: usize,
    pub budget: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            n_max: 6,
            values: [0, 1, 2].map(Rational::integer).to_vec(),
            jobs: 1,
            budget: DEFAULT_CASE_BUDGET,
        }
    }
}

impl VerifyConfig {
    pub fn new(n_max: usize, values: &[u64]) -> Self {
        VerifyConfig {
            n_max,
            values: values.iter().copied().map(Rational::integer).collect(),
            ..VerifyConfig::default()
        }
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }
}

/// `Σ_{n<=n_max} n^max(n-2,0) · k^n`, or just the tree count when
/// `values_per_vertex` is `None`.
pub fn predicted_cases(n_max: usize, values_per_vertex: Option<usize>) -> u128 {
    (1..=n_max)
        .map(|n| cayley_count(n) as u128 * values_per_vertex.map_or(1, |k| labeling_count(n, k)))
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckMode {
    Exact,
    Sampled,
    Certified,
    Informational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubCheck {
    pub name: &'static str,
    pub mode: CheckMode,
    pub cases: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
}

/// The single claim a certificate records as violated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "id", rename_all = "snake_case")]
pub enum Claim {
    UltrametricIffNondegenerate,
    LongestPathIffHighDegree,
    ShortTreeLabelingIsUs,
    CounterexampleIsNotUs,
    HighDegreeVerticesAdjacent,
    AtMostTwoHighDegreeVertices,
    StarLikeIffAllUs { values: Vec<Rational> },
    OtherIffCounterexample,
}

impl Claim {
    pub fn text(&self) -> &'static str {
        match self {
            Claim::UltrametricIffNondegenerate => {
                "the path-max matrix is an ultrametric iff the labeling is non-degenerate"
            }
            Claim::LongestPathIffHighDegree => {
                "longest path <= 3 iff at most two vertices have degree >= 2"
            }
            Claim::ShortTreeLabelingIsUs => {
                "a non-degenerate labeling of a tree with longest path <= 3 generates a star-generated space"
            }
            Claim::CounterexampleIsNotUs => "the counterexample labeling generates a space with no star witness",
            Claim::HighDegreeVerticesAdjacent => {
                "under longest path <= 3, vertices of degree >= 2 are pairwise adjacent"
            }
            Claim::AtMostTwoHighDegreeVertices => {
                "under longest path <= 3, at most two vertices have degree >= 2"
            }
            Claim::StarLikeIffAllUs { .. } => {
                "star or double-star iff every non-degenerate labeling is star-generated and no counterexample applies"
            }
            Claim::OtherIffCounterexample => "neither star nor double-star iff the counterexample applies and is not star-generated",
        }
    }

    /// Re-evaluates the claim on the given data; `true` means it is violated.
    pub fn is_violated(&self, tree: &Tree, labeling: Option<&Labeling>) -> bool {
        match self {
            Claim::UltrametricIffNondegenerate => {
                let l = labeling.expect("claim needs a labeling");
                let ultrametric = check_axioms(tree.order(), &path_max_matrix(tree, l)).is_ok();
                ultrametric != is_nondegenerate(tree, l)
            }
            Claim::LongestPathIffHighDegree => {
                (tree.longest_path_length() <= 3) != (tree.high_degree_vertices().len() <= 2)
            }
            Claim::ShortTreeLabelingIsUs => {
                let l = labeling.expect("claim needs a labeling");
                tree.longest_path_length() <= 3
                    && generate_space(tree, l).is_ok_and(|s| us_witness(&s).is_none())
            }
            Claim::CounterexampleIsNotUs => match counterexample_labeling(tree) {
                Ok(lt) => generate_space(lt.tree(), lt.labeling()).map_or(true, |s| us_witness(&s).is_some()),
                Err(_) => false,
            },
            Claim::HighDegreeVerticesAdjacent => {
                let high = tree.high_degree_vertices();
                tree.longest_path_length() <= 3
                    && high
                        .iter()
                        .enumerate()
                        .any(|(i, &a)| high[i + 1..].iter().any(|&b| !tree.is_adjacent(a, b)))
            }
            Claim::AtMostTwoHighDegreeVertices => {
                tree.longest_path_length() <= 3 && tree.high_degree_vertices().len() > 2
            }
            Claim::StarLikeIffAllUs { values } => {
                let probe = ClassificationProbe::run(tree, values);
                probe.star_like != (probe.all_us && !probe.counterexample_applies)
            }
            Claim::OtherIffCounterexample => {
                let probe = ClassificationProbe::run(tree, &[]);
                !probe.star_like != (probe.counterexample_applies && probe.counterexample_not_us)
            }
        }
    }
}

/// A replayable record of one failed check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    /// `(order, Prüfer index, labeling index)`; failures are reported in
    /// increasing key order.
    pub key: (usize, u64, Option<u64>),
    pub tree: Tree,
    pub labeling: Option<Labeling>,
    pub claim: Claim,
    pub evidence: Value,
}

impl Certificate {
    /// Re-runs the recorded claim; `true` if the violation reproduces.
    pub fn replay(&self) -> bool {
        self.claim.is_violated(&self.tree, self.labeling.as_ref())
    }
}

impl Serialize for Certificate {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            key: (usize, u64, Option<u64>),
            tree: TreeJson,
            #[serde(skip_serializing_if = "Option::is_none")]
            labeled_tree: Option<LabeledTreeJson>,
            claim: &'a Claim,
            claim_text: &'static str,
            evidence: &'a Value,
        }
        let labeled_tree = self.labeling.as_ref().map(|l| {
            let lt = LabeledTree::new(self.tree.clone(), l.clone()).expect("certificate labeling matches tree");
            LabeledTreeJson::from(&lt)
        });
        Repr {
            key: self.key,
            tree: TreeJson::from(&self.tree),
            labeled_tree,
            claim: &self.claim,
            claim_text: self.claim.text(),
            evidence: &self.evidence,
        }
        .serialize(serializer)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub n_max: usize,
    pub values: Vec<Rational>,
    pub cases_checked: u64,
    pub predicted_cases: u64,
    pub distinct_shapes: usize,
    pub checks: Vec<SubCheck>,
    pub failures: Vec<Certificate>,
    pub elapsed_ms: u64,
    pub status: Status,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn check(&self, name: &str) -> Option<&SubCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// One line per sub-check plus a status line.
    pub fn summary(&self) -> String {
        let mut s = format!(
            "theorem {} | n <= {} | values {{{}}} | {} cases | {} ms\n",
            self.theorem,
            self.n_max,
            self.values.iter().map(ToString::to_string).collect::<Vec<_>>().join(","),
            self.cases_checked,
            self.elapsed_ms
        );
        for c in &self.checks {
            let mode = serde_json::to_value(c.mode).expect("mode serializes");
            s += &format!("  [{}] {}: {}\n", mode.as_str().unwrap_or_default(), c.name, c.cases);
        }
        for note in &self.notes {
            s += &format!("  note: {note}\n");
        }
        s += &match self.status {
            Status::Pass => "PASS\n".to_string(),
            Status::Fail => format!("FAIL ({} certificates)\n", self.failures.len()),
        };
        s
    }
}

/// Per-tree partial result.
#[derive(Default)]
struct Outcome {
    cases: u64,
    counts: Vec<u64>,
    failures: Vec<Certificate>,
}

impl Outcome {
    fn new(slots: usize) -> Self {
        Outcome {
            cases: 0,
            counts: vec![0; slots],
            failures: Vec::new(),
        }
    }

    fn fail(&mut self, key: (usize, u64, Option<u64>), tree: &Tree, labeling: Option<&Labeling>, claim: Claim, evidence: Value) {
        self.failures.push(Certificate {
            key,
            tree: tree.clone(),
            labeling: labeling.cloned(),
            claim,
            evidence,
        });
    }
}

/// Every labeling over `values`, degenerate ones included, in odometer order.
fn all_labelings<'t>(tree: &'t Tree, values: &[Rational]) -> Labelings<'t> {
    crate::labeling::enumerate_labelings_budgeted(tree, values, false, u64::MAX).expect("values checked non-empty")
}

fn names_of(tree: &Tree, vs: &[crate::tree::VertexId]) -> Vec<String> {
    vs.iter().map(|&v| tree.name(v).to_owned()).collect()
}

struct ClassificationProbe {
    star_like: bool,
    all_us: bool,
    labelings: u64,
    counterexample_applies: bool,
    counterexample_not_us: bool,
    first_non_us: Option<(u64, Labeling)>,
}

impl ClassificationProbe {
    fn run(tree: &Tree, values: &[Rational]) -> Self {
        let star_like = tree.classify().kind != crate::tree::TreeKind::Other;
        let mut all_us = true;
        let mut labelings = 0;
        let mut first_non_us = None;
        if !values.is_empty() {
            for (i, l) in all_labelings(tree, values).enumerate() {
                labelings += 1;
                if let Ok(space) = generate_space(tree, &l) {
                    if us_witness(&space).is_none() {
                        all_us = false;
                        first_non_us.get_or_insert((i as u64, l));
                    }
                }
            }
        }
        let (counterexample_applies, counterexample_not_us) = match counterexample_labeling(tree) {
            Ok(lt) => (
                true,
                generate_space(lt.tree(), lt.labeling()).is_ok_and(|s| us_witness(&s).is_none()),
            ),
            Err(LabelingError::NoLongPath { .. }) => (false, false),
            Err(e) => panic!("counterexample construction failed: {e}"),
        };
        ClassificationProbe {
            star_like,
            all_us,
            labelings,
            counterexample_applies,
            counterexample_not_us,
            first_non_us,
        }
    }
}

const NONDEG_CHECKS: [(&str, CheckMode); 2] = [
    ("non-degenerate labelings give ultrametrics", CheckMode::Exact),
    ("degenerate labelings fail the axioms", CheckMode::Exact),
];

fn check_nondegeneracy(key: (usize, u64), tree: &Tree, values: &[Rational]) -> Outcome {
    let mut out = Outcome::new(NONDEG_CHECKS.len());
    for (li, l) in all_labelings(tree, values).enumerate() {
        out.cases += 1;
        let axioms = check_axioms(tree.order(), &path_max_matrix(tree, &l));
        let nondegenerate = is_nondegenerate(tree, &l);
        out.counts[usize::from(!nondegenerate)] += 1;
        if axioms.is_ok() != nondegenerate {
            let evidence = json!({
                "nondegenerate": nondegenerate,
                "axiom_violation": axioms.err(),
            });
            out.fail(
                (key.0, key.1, Some(li as u64)),
                tree,
                Some(&l),
                Claim::UltrametricIffNondegenerate,
                evidence,
            );
        }
    }
    out
}

const MAIN_CHECKS: [(&str, CheckMode); 5] = [
    ("(ii) longest path <= 3 iff (iii) <= 2 high-degree vertices", CheckMode::Exact),
    ("(iii) => (i): labelings of short trees are star-generated", CheckMode::Sampled),
    ("not (ii) => not (i): counterexample labeling is not star-generated", CheckMode::Certified),
    ("long trees: grid labelings that are star-generated", CheckMode::Informational),
    ("long trees: grid labelings that are not star-generated", CheckMode::Informational),
];

fn check_main(key: (usize, u64), tree: &Tree, values: &[Rational]) -> Outcome {
    let mut out = Outcome::new(MAIN_CHECKS.len());
    let longest = tree.longest_path_length();
    let high = tree.high_degree_vertices();
    let short = longest <= 3;
    out.counts[0] += 1;
    if short != (high.len() <= 2) {
        out.fail(
            (key.0, key.1, None),
            tree,
            None,
            Claim::LongestPathIffHighDegree,
            json!({ "longest_path": longest, "high_degree": names_of(tree, &high) }),
        );
    }

    for (li, l) in all_labelings(tree, values).enumerate() {
        out.cases += 1;
        let Ok(space) = generate_space(tree, &l) else { continue };
        let witness = us_witness(&space);
        if short {
            out.counts[1] += 1;
            if witness.is_none() {
                out.fail(
                    (key.0, key.1, Some(li as u64)),
                    tree,
                    Some(&l),
                    Claim::ShortTreeLabelingIsUs,
                    json!({ "longest_path": longest, "witness": null }),
                );
            }
        } else if witness.is_some() {
            out.counts[3] += 1;
        } else {
            out.counts[4] += 1;
        }
    }

    if !short {
        out.counts[2] += 1;
        let lt = counterexample_labeling(tree).expect("longest path >= 4");
        let space = generate_space(lt.tree(), lt.labeling()).expect("counterexample is non-degenerate");
        if let Some(w) = us_witness(&space) {
            out.fail(
                (key.0, key.1, None),
                tree,
                Some(lt.labeling()),
                Claim::CounterexampleIsNotUs,
                json!({ "witness": space.point(w) }),
            );
        }
    }
    out
}

const LEMMA_CHECKS: [(&str, CheckMode); 2] = [
    ("high-degree vertices pairwise adjacent", CheckMode::Exact),
    ("at most two high-degree vertices", CheckMode::Exact),
];

fn check_lemmas(key: (usize, u64), tree: &Tree) -> Outcome {
    let mut out = Outcome::new(LEMMA_CHECKS.len());
    out.cases = 1;
    if tree.longest_path_length() > 3 {
        return out;
    }
    let high = tree.high_degree_vertices();
    out.counts[0] += 1;
    out.counts[1] += 1;
    for (i, &a) in high.iter().enumerate() {
        if let Some(&b) = high[i + 1..].iter().find(|&&b| !tree.is_adjacent(a, b)) {
            out.fail(
                (key.0, key.1, None),
                tree,
                None,
                Claim::HighDegreeVerticesAdjacent,
                json!({ "non_adjacent": [tree.name(a), tree.name(b)] }),
            );
            break;
        }
    }
    if high.len() > 2 {
        out.fail(
            (key.0, key.1, None),
            tree,
            None,
            Claim::AtMostTwoHighDegreeVertices,
            json!({ "high_degree": names_of(tree, &high) }),
        );
    }
    out
}

const CLASSIFY_CHECKS: [(&str, CheckMode); 4] = [
    ("star-like iff all labelings star-generated", CheckMode::Sampled),
    ("other iff certified counterexample", CheckMode::Certified),
    ("trees classified star or double-star", CheckMode::Informational),
    ("trees classified other", CheckMode::Informational),
];

fn check_classification(key: (usize, u64), tree: &Tree, values: &[Rational]) -> Outcome {
    let mut out = Outcome::new(CLASSIFY_CHECKS.len());
    let probe = ClassificationProbe::run(tree, values);
    out.cases = probe.labelings;
    out.counts[0] += 1;
    out.counts[1] += 1;
    out.counts[if probe.star_like { 2 } else { 3 }] += 1;
    let kind = tree.classify().kind.as_str();
    if probe.star_like != (probe.all_us && !probe.counterexample_applies) {
        let (li, l) = probe.first_non_us.clone().unzip();
        out.fail(
            (key.0, key.1, li),
            tree,
            l.as_ref(),
            Claim::StarLikeIffAllUs { values: values.to_vec() },
            json!({
                "class": kind,
                "all_us": probe.all_us,
                "counterexample_applies": probe.counterexample_applies,
            }),
        );
    }
    if !probe.star_like != (probe.counterexample_applies && probe.counterexample_not_us) {
        out.fail(
            (key.0, key.1, None),
            tree,
            None,
            Claim::OtherIffCounterexample,
            json!({
                "class": kind,
                "counterexample_applies": probe.counterexample_applies,
                "counterexample_not_us": probe.counterexample_not_us,
            }),
        );
    }
    out
}

fn check_table(theorem: TheoremId) -> &'static [(&'static str, CheckMode)] {
    match theorem {
        TheoremId::Nondegeneracy => &NONDEG_CHECKS,
        TheoremId::Main => &MAIN_CHECKS,
        TheoremId::StructureLemmas => &LEMMA_CHECKS,
        TheoremId::Classification => &CLASSIFY_CHECKS,
    }
}

fn run_one(theorem: TheoremId, key: (usize, u64), tree: &Tree, values: &[Rational]) -> Outcome {
    match theorem {
        TheoremId::Nondegeneracy => check_nondegeneracy(key, tree, values),
        TheoremId::Main => check_main(key, tree, values),
        TheoremId::StructureLemmas => check_lemmas(key, tree),
        TheoremId::Classification => check_classification(key, tree, values),
    }
}

fn outcomes_for_order(theorem: TheoremId, n: usize, values: &[Rational], jobs: usize) -> Vec<Outcome> {
    let trees = PruferTrees::range(n, 0, cayley_count(n));
    let job = |i: u64| run_one(theorem, (n, i), &trees.tree_at(i), values);

    #[cfg(feature = "parallel")]
    if jobs > 1 {
        use rayon::prelude::*;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        return pool.install(|| (0..cayley_count(n)).into_par_iter().map(job).collect());
    }
    #[cfg(not(feature = "parallel"))]
    let _ = jobs;

    (0..cayley_count(n)).map(job).collect()
}

struct Clock(#[cfg(not(target_arch = "wasm32"))] std::time::Instant);

impl Clock {
    fn start() -> Self {
        Clock(
            #[cfg(not(target_arch = "wasm32"))]
            std::time::Instant::now(),
        )
    }

    fn elapsed_ms(&self) -> u64 {
        #[cfg(not(target_arch = "wasm32"))]
        return self.0.elapsed().as_millis() as u64;
        #[cfg(target_arch = "wasm32")]
        0
    }
}

/// Runs one theorem check over every labeled tree of order `1..=n_max`.
pub fn verify(theorem: TheoremId, config: &VerifyConfig) -> Result<VerificationReport, VerifyError> {
    let clock = Clock::start();
    if config.n_max == 0 {
        return Err(VerifyError::ZeroOrder);
    }
    if config.n_max > DEFAULT_TREE_CAP {
        return Err(TreeError::CapExceeded {
            n: config.n_max,
            cap: DEFAULT_TREE_CAP,
        }
        .into());
    }
    let values = normalize_values(&config.values);
    let per_vertex = theorem.uses_labelings().then_some(values.len());
    if per_vertex == Some(0) {
        return Err(VerifyError::EmptyValues);
    }
    let predicted = predicted_cases(config.n_max, per_vertex);
    if predicted > config.budget as u128 {
        return Err(VerifyError::BudgetExceeded {
            needed: predicted,
            budget: config.budget,
        });
    }

    let table = check_table(theorem);
    let mut cases = 0;
    let mut counts = vec![0u64; table.len()];
    let mut failures = Vec::new();
    let mut shapes = std::collections::HashSet::new();
    for n in 1..=config.n_max {
        for outcome in outcomes_for_order(theorem, n, &values, config.jobs) {
            cases += outcome.cases;
            for (total, c) in counts.iter_mut().zip(&outcome.counts) {
                *total += c;
            }
            failures.extend(outcome.failures);
        }
        // Reporting only: how many isomorphism classes the labeled trees cover.
        shapes.extend(PruferTrees::range(n, 0, cayley_count(n)).map(|t| t.shape_code()));
    }

    let mut notes = Vec::new();
    if theorem == TheoremId::Main && values.iter().filter(|v| v.is_positive()).count() < 2 {
        notes.push("fewer than two positive label values: the sampled direction sees few distance levels".to_owned());
    }

    let status = if failures.is_empty() { Status::Pass } else { Status::Fail };
    Ok(VerificationReport {
        theorem,
        n_max: config.n_max,
        values,
        cases_checked: cases,
        predicted_cases: predicted as u64,
        distinct_shapes: shapes.len(),
        checks: table
            .iter()
            .zip(counts)
            .map(|(&(name, mode), cases)| SubCheck { name, mode, cases })
            .collect(),
        failures,
        elapsed_ms: clock.elapsed_ms(),
        status,
        notes,
    })
}

pub fn verify_theorem_nondegeneracy(config: &VerifyConfig) -> Result<VerificationReport, VerifyError> {
    verify(TheoremId::Nondegeneracy, config)
}

pub fn verify_main_theorem(config: &VerifyConfig) -> Result<VerificationReport, VerifyError> {
    verify(TheoremId::Main, config)
}

pub fn verify_structure_lemmas(config: &VerifyConfig) -> Result<VerificationReport, VerifyError> {
    verify(TheoremId::StructureLemmas, config)
}

pub fn verify_classification(config: &VerifyConfig) -> Result<VerificationReport, VerifyError> {
    verify(TheoremId::Classification, config)
}
