//! Vertex labelings and the path-max distance they generate.
//!
//! For a labeling `l` of a tree, the generated distance between distinct
//! vertices is the largest label on the unique path joining them, and zero on
//! the diagonal. It is an ultrametric exactly when every edge has an endpoint
//! with a positive label.

use thiserror::Error;

use crate::metric::FiniteUltrametricSpace;
use crate::rational::Rational;
use crate::tree::{Tree, VertexId};

/// Default cap on `|values|^|V|` for [`enumerate_labelings`].
pub const DEFAULT_LABELING_BUDGET: u64 = 10_000_000;

/// Labels placed along a 4-edge path to produce a space outside the
/// star-generated class.
pub const COUNTEREXAMPLE_PATTERN: [u64; 5] = [2, 2, 3, 2, 2];

/// Label given to every vertex off the 4-edge path.
pub const COUNTEREXAMPLE_FILL: u64 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingError {
    #[error("labeling has {got} values but the tree has {expected} vertices")]
    DomainMismatch { expected: usize, got: usize },
    #[error("labeling is degenerate on edge {{{0}, {1}}}")]
    DegenerateLabeling(String, String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("extension is degenerate on edge {{{0}, {1}}}")]
    DegenerateResult(String, String),
    #[error("fill label must be positive")]
    NonPositiveFill,
    #[error("longest path has {longest} edges; at least 4 are needed")]
    NoLongPath { longest: usize },
    #[error("{needed} labelings exceed the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("label value set is empty")]
    EmptyValues,
}

impl LabelingError {
    pub fn code(&self) -> &'static str {
        match self {
            LabelingError::DomainMismatch { .. } => "E_DOMAIN_MISMATCH",
            LabelingError::DegenerateLabeling(..) => "E_DEGENERATE",
            LabelingError::UnknownVertex(_) => "E_UNKNOWN_VERTEX",
            LabelingError::DegenerateResult(..) => "E_DEGENERATE_RESULT",
            LabelingError::NonPositiveFill => "E_BAD_FILL",
            LabelingError::NoLongPath { .. } => "E_NO_LONG_PATH",
            LabelingError::BudgetExceeded { .. } => "E_BUDGET",
            LabelingError::EmptyValues => "E_EMPTY_VALUES",
        }
    }
}

/// A total map from a tree's vertices (by index) to labels.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Labeling {
    values: Vec<Rational>,
}

impl Labeling {
    pub fn new(values: Vec<Rational>) -> Self {
        Labeling { values }
    }

    pub fn constant(n: usize, value: Rational) -> Self {
        Labeling { values: vec![value; n] }
    }

    pub fn from_integers(values: &[u64]) -> Self {
        Labeling {
            values: values.iter().copied().map(Rational::integer).collect(),
        }
    }

    pub fn get(&self, v: VertexId) -> Rational {
        self.values[v.index()]
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Pointwise `self <= other`.
    pub fn le_pointwise(&self, other: &Labeling) -> bool {
        self.values.len() == other.values.len() && self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }
}

/// A tree together with a labeling defined on exactly its vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabeledTree {
    tree: Tree,
    labeling: Labeling,
}

impl LabeledTree {
    pub fn new(tree: Tree, labeling: Labeling) -> Result<Self, LabelingError> {
        if tree.order() != labeling.len() {
            return Err(LabelingError::DomainMismatch {
                expected: tree.order(),
                got: labeling.len(),
            });
        }
        Ok(LabeledTree { tree, labeling })
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn labeling(&self) -> &Labeling {
        &self.labeling
    }

    pub fn label(&self, v: VertexId) -> Rational {
        self.labeling.get(v)
    }

    pub fn into_parts(self) -> (Tree, Labeling) {
        (self.tree, self.labeling)
    }

    pub fn is_nondegenerate(&self) -> bool {
        is_nondegenerate(&self.tree, &self.labeling)
    }
}

/// First edge whose endpoints are both labeled zero.
fn degenerate_edge(tree: &Tree, labeling: &Labeling) -> Option<(VertexId, VertexId)> {
    tree.edges()
        .iter()
        .copied()
        .find(|&(a, b)| labeling.get(a).is_zero() && labeling.get(b).is_zero())
}

/// True iff every edge has an endpoint with a positive label.
pub fn is_nondegenerate(tree: &Tree, labeling: &Labeling) -> bool {
    degenerate_edge(tree, labeling).is_none()
}

/// The raw path-max matrix, row-major `n x n`, with zero diagonal.
///
/// Computed by one traversal per source carrying the running maximum, which
/// equals the maximum over the unique path to each reached vertex. No
/// non-degeneracy requirement: degenerate labelings yield off-diagonal zeros.
pub fn path_max_matrix(tree: &Tree, labeling: &Labeling) -> Vec<Rational> {
    let n = tree.order();
    let labels = labeling.as_slice();
    let mut dist = vec![Rational::ZERO; n * n];
    let mut stack: Vec<(usize, usize, Rational)> = Vec::with_capacity(n);
    for source in 0..n {
        stack.push((source, usize::MAX, labels[source]));
        while let Some((x, parent, running)) = stack.pop() {
            if x != source {
                dist[source * n + x] = running;
            }
            for &y in tree.neighbors(VertexId::new(x)) {
                let y = y.index();
                if y != parent {
                    stack.push((y, x, running.max(labels[y])));
                }
            }
        }
    }
    dist
}

/// The ultrametric space generated by a non-degenerate labeled tree.
pub fn build_ultrametric(lt: &LabeledTree) -> Result<FiniteUltrametricSpace, LabelingError> {
    generate_space(&lt.tree, &lt.labeling)
}

/// [`build_ultrametric`] on borrowed parts; the labeling must cover the tree.
pub fn generate_space(tree: &Tree, labeling: &Labeling) -> Result<FiniteUltrametricSpace, LabelingError> {
    if tree.order() != labeling.len() {
        return Err(LabelingError::DomainMismatch {
            expected: tree.order(),
            got: labeling.len(),
        });
    }
    if let Some((a, b)) = degenerate_edge(tree, labeling) {
        return Err(LabelingError::DegenerateLabeling(
            tree.name(a).to_owned(),
            tree.name(b).to_owned(),
        ));
    }
    let dist = path_max_matrix(tree, labeling);
    Ok(FiniteUltrametricSpace::from_trusted(tree.names().clone(), dist))
}

/// Extends a partial labeling by `fill` on every unlisted vertex.
pub fn extend_labeling(
    tree: &Tree,
    partial: &[(VertexId, Rational)],
    fill: Rational,
) -> Result<Labeling, LabelingError> {
    if !fill.is_positive() {
        return Err(LabelingError::NonPositiveFill);
    }
    let mut labeling = Labeling::constant(tree.order(), fill);
    for &(v, value) in partial {
        if !tree.contains(v) {
            return Err(LabelingError::UnknownVertex(v.to_string()));
        }
        labeling.values[v.index()] = value;
    }
    if let Some((a, b)) = degenerate_edge(tree, &labeling) {
        return Err(LabelingError::DegenerateResult(
            tree.name(a).to_owned(),
            tree.name(b).to_owned(),
        ));
    }
    Ok(labeling)
}

/// The 4-edge sub-path used by [`counterexample_labeling`]: the first five
/// vertices of the path between the least pair of diameter endpoints.
pub fn counterexample_path(tree: &Tree) -> Result<[VertexId; 5], LabelingError> {
    let longest = tree.longest_path_length();
    if longest < 4 {
        return Err(LabelingError::NoLongPath { longest });
    }
    let (a, b) = tree.least_diameter_pair().expect("diameter >= 4");
    let path = tree.unique_path(a, b).expect("distinct endpoints");
    Ok([path[0], path[1], path[2], path[3], path[4]])
}

/// Labels a 4-edge path with `2,2,3,2,2` and everything else with `2`.
///
/// The generated space is not star-generated: its restriction to the five
/// path vertices already lacks a witness point.
pub fn counterexample_labeling(tree: &Tree) -> Result<LabeledTree, LabelingError> {
    let path = counterexample_path(tree)?;
    let partial: Vec<_> = path
        .iter()
        .zip(COUNTEREXAMPLE_PATTERN)
        .map(|(&v, label)| (v, Rational::integer(label)))
        .collect();
    let labeling = extend_labeling(tree, &partial, Rational::integer(COUNTEREXAMPLE_FILL))?;
    LabeledTree::new(tree.clone(), labeling)
}

/// Sorted, de-duplicated label values.
pub fn normalize_values(values: &[Rational]) -> Vec<Rational> {
    let mut v = values.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

/// `|values|^n` as an exact count.
pub fn labeling_count(n: usize, distinct_values: usize) -> u128 {
    (distinct_values as u128).saturating_pow(n as u32)
}

/// All labelings of `tree` with labels from `values`, in odometer order
/// (last vertex varies fastest). With `nondegenerate_only`, degenerate
/// labelings are skipped.
pub fn enumerate_labelings<'t>(
    tree: &'t Tree,
    values: &[Rational],
    nondegenerate_only: bool,
) -> Result<Labelings<'t>, LabelingError> {
    enumerate_labelings_budgeted(tree, values, nondegenerate_only, DEFAULT_LABELING_BUDGET)
}

pub fn enumerate_labelings_budgeted<'t>(
    tree: &'t Tree,
    values: &[Rational],
    nondegenerate_only: bool,
    budget: u64,
) -> Result<Labelings<'t>, LabelingError> {
    let values = normalize_values(values);
    if values.is_empty() {
        return Err(LabelingError::EmptyValues);
    }
    let needed = labeling_count(tree.order(), values.len());
    if needed > budget as u128 {
        return Err(LabelingError::BudgetExceeded { needed, budget });
    }
    Ok(Labelings {
        tree,
        digits: vec![0; tree.order()],
        values,
        done: false,
        nondegenerate_only,
    })
}

pub struct Labelings<'t> {
    tree: &'t Tree,
    values: Vec<Rational>,
    digits: Vec<usize>,
    done: bool,
    nondegenerate_only: bool,
}

impl Labelings<'_> {
    fn advance(&mut self) {
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < self.values.len() {
                return;
            }
            *d = 0;
        }
        self.done = true;
    }
}

impl Iterator for Labelings<'_> {
    type Item = Labeling;

    fn next(&mut self) -> Option<Labeling> {
        while !self.done {
            let labeling = Labeling::new(self.digits.iter().map(|&d| self.values[d]).collect());
            self.advance();
            if !self.nondegenerate_only || is_nondegenerate(self.tree, &labeling) {
                return Some(labeling);
            }
        }
        None
    }
}
