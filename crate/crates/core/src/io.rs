//! JSON file forms for trees, labeled trees and spaces, plus CSV matrices.
//!
//! ```text
//! tree:          {"vertices": ["a","b"], "edges": [["a","b"]]}
//! labeled tree:  tree fields plus "labels": {"a": "3", "b": "5/2"}
//! space:         {"points": ["a","b"], "dist": [["0","2"],["2","0"]]}
//! ```
//!
//! Edges are written with endpoints in lexicographic order and the edge list
//! sorted.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::labeling::{LabeledTree, Labeling, LabelingError};
use crate::metric::{validate_ultrametric, FiniteUltrametricSpace, MetricError};
use crate::rational::Rational;
use crate::tree::{validate_tree, Tree, TreeError};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
    #[error(transparent)]
    Metric(#[from] MetricError),
    #[error("no label for vertex {0:?}")]
    MissingLabel(String),
    #[error("label for unknown vertex {0:?}")]
    ExtraLabel(String),
}

impl IoError {
    pub fn code(&self) -> &'static str {
        match self {
            IoError::Json(_) => "E_PARSE",
            IoError::Tree(e) => e.code(),
            IoError::Labeling(e) => e.code(),
            IoError::Metric(e) => e.code(),
            IoError::MissingLabel(_) => "E_MISSING_LABEL",
            IoError::ExtraLabel(_) => "E_EXTRA_LABEL",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledTreeJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
    pub labels: BTreeMap<String, Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceJson {
    pub points: Vec<String>,
    pub dist: Vec<Vec<Rational>>,
}

impl From<&Tree> for TreeJson {
    fn from(tree: &Tree) -> Self {
        let mut edges: Vec<[String; 2]> = tree
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (a, b) = (tree.name(a), tree.name(b));
                let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
                [lo.to_owned(), hi.to_owned()]
            })
            .collect();
        edges.sort();
        TreeJson {
            vertices: tree.names().to_vec(),
            edges,
        }
    }
}

impl TryFrom<&TreeJson> for Tree {
    type Error = TreeError;

    fn try_from(json: &TreeJson) -> Result<Tree, TreeError> {
        validate_tree(json.vertices.iter().cloned(), json.edges.iter().map(|[a, b]| (a, b)))
    }
}

impl From<&LabeledTree> for LabeledTreeJson {
    fn from(lt: &LabeledTree) -> Self {
        let TreeJson { vertices, edges } = TreeJson::from(lt.tree());
        let labels = lt
            .tree()
            .vertices()
            .map(|v| (lt.tree().name(v).to_owned(), lt.label(v)))
            .collect();
        LabeledTreeJson { vertices, edges, labels }
    }
}

impl TryFrom<&LabeledTreeJson> for LabeledTree {
    type Error = IoError;

    fn try_from(json: &LabeledTreeJson) -> Result<LabeledTree, IoError> {
        let tree = validate_tree(json.vertices.iter().cloned(), json.edges.iter().map(|[a, b]| (a, b)))?;
        if let Some(extra) = json.labels.keys().find(|k| tree.vertex(k).is_none()) {
            return Err(IoError::ExtraLabel(extra.clone()));
        }
        let values = tree
            .names()
            .iter()
            .map(|name| json.labels.get(name).copied().ok_or_else(|| IoError::MissingLabel(name.clone())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LabeledTree::new(tree, Labeling::new(values))?)
    }
}

impl From<&FiniteUltrametricSpace> for SpaceJson {
    fn from(space: &FiniteUltrametricSpace) -> Self {
        SpaceJson {
            points: space.points().to_vec(),
            dist: space.rows(),
        }
    }
}

impl TryFrom<&SpaceJson> for FiniteUltrametricSpace {
    type Error = MetricError;

    fn try_from(json: &SpaceJson) -> Result<Self, MetricError> {
        validate_ultrametric(json.points.clone(), &json.dist)
    }
}

pub fn parse_tree(text: &str) -> Result<Tree, IoError> {
    let json: TreeJson = serde_json::from_str(text)?;
    Ok(Tree::try_from(&json)?)
}

pub fn parse_labeled_tree(text: &str) -> Result<LabeledTree, IoError> {
    let json: LabeledTreeJson = serde_json::from_str(text)?;
    LabeledTree::try_from(&json)
}

pub fn parse_space(text: &str) -> Result<FiniteUltrametricSpace, IoError> {
    let json: SpaceJson = serde_json::from_str(text)?;
    Ok(FiniteUltrametricSpace::try_from(&json)?)
}

pub fn tree_to_json(tree: &Tree) -> String {
    serde_json::to_string_pretty(&TreeJson::from(tree)).expect("tree serializes")
}

pub fn labeled_tree_to_json(lt: &LabeledTree) -> String {
    serde_json::to_string_pretty(&LabeledTreeJson::from(lt)).expect("labeled tree serializes")
}

pub fn space_to_json(space: &FiniteUltrametricSpace) -> String {
    serde_json::to_string_pretty(&SpaceJson::from(space)).expect("space serializes")
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

/// Distance matrix as CSV with a header row and a header column of point
/// names. The corner cell is empty.
pub fn distance_csv(space: &FiniteUltrametricSpace) -> String {
    let mut out = String::new();
    for p in space.points().iter() {
        out.push(',');
        out.push_str(&csv_field(p));
    }
    out.push('\n');
    for i in 0..space.order() {
        out.push_str(&csv_field(space.point(i)));
        for d in space.row(i) {
            out.push(',');
            out.push_str(&d.to_string());
        }
        out.push('\n');
    }
    out
}
