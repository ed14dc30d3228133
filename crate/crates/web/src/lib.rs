//! Browser bindings for the ultratree demo page.
//!
//! Each operation takes JSON text in the file formats of `ultratree_core::io`
//! and returns JSON text. Errors come back as `error[CODE]: message`.

use serde::Serialize;
use ultratree_core::io::{self as fio, IoError, LabeledTreeJson, SpaceJson};
use ultratree_core::{build_ultrametric, canonical_form, counterexample_labeling, realize_as_star, us_witness, Tree};
use wasm_bindgen::prelude::*;

#[derive(Serialize)]
struct TreeSummary {
    class: &'static str,
    centers: Vec<String>,
    longest_path: usize,
}

impl TreeSummary {
    fn of(tree: &Tree) -> Self {
        let class = tree.classify();
        TreeSummary {
            class: class.kind.as_str(),
            centers: class.centers.iter().map(|&v| tree.name(v).to_owned()).collect(),
            longest_path: tree.longest_path_length(),
        }
    }
}

#[derive(Serialize)]
struct Analysis {
    tree: TreeSummary,
    space: SpaceJson,
    csv: String,
    witness: Option<String>,
    canonical: String,
}

#[derive(Serialize)]
struct Realization {
    witness: Option<String>,
    star: Option<LabeledTreeJson>,
}

#[derive(Serialize)]
struct Counterexample {
    tree: TreeSummary,
    labeled: Option<LabeledTreeJson>,
    space: Option<SpaceJson>,
    reason: Option<String>,
}

fn fail(code: &str, msg: impl std::fmt::Display) -> String {
    format!("error[{code}]: {msg}")
}

fn io_fail(e: IoError) -> String {
    fail(e.code(), e)
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("output serializes")
}

/// Distance matrix, tree class, star witness and canonical form of a labeled tree.
pub fn analyze_labeled_tree(text: &str) -> Result<String, String> {
    let lt = fio::parse_labeled_tree(text).map_err(io_fail)?;
    let space = build_ultrametric(&lt).map_err(|e| fail(e.code(), e))?;
    Ok(to_json(&Analysis {
        tree: TreeSummary::of(lt.tree()),
        csv: fio::distance_csv(&space),
        witness: us_witness(&space).map(|i| space.point(i).to_owned()),
        canonical: canonical_form(&space).to_string(),
        space: SpaceJson::from(&space),
    }))
}

/// Labeled star generating the space, or nulls when none exists.
pub fn realize_space(text: &str) -> Result<String, String> {
    let space = fio::parse_space(text).map_err(io_fail)?;
    let star = realize_as_star(&space).ok();
    Ok(to_json(&Realization {
        witness: us_witness(&space).map(|i| space.point(i).to_owned()),
        star: star.as_ref().map(LabeledTreeJson::from),
    }))
}

/// A labeling of the tree whose space is not star-generated, if the tree has one.
pub fn tree_counterexample(text: &str) -> Result<String, String> {
    let tree = fio::parse_tree(text).map_err(io_fail)?;
    let summary = TreeSummary::of(&tree);
    let result = match counterexample_labeling(&tree) {
        Ok(lt) => {
            let space = build_ultrametric(&lt).map_err(|e| fail(e.code(), e))?;
            Counterexample {
                tree: summary,
                labeled: Some(LabeledTreeJson::from(&lt)),
                space: Some(SpaceJson::from(&space)),
                reason: None,
            }
        }
        Err(e) => Counterexample {
            tree: summary,
            labeled: None,
            space: None,
            reason: Some(e.to_string()),
        },
    };
    Ok(to_json(&result))
}

#[wasm_bindgen]
pub fn analyze(text: &str) -> Result<String, JsError> {
    analyze_labeled_tree(text).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn realize(text: &str) -> Result<String, JsError> {
    realize_space(text).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn counterexample(text: &str) -> Result<String, JsError> {
    tree_counterexample(text).map_err(|e| JsError::new(&e))
}
