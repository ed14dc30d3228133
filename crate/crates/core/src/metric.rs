//! Finite ultrametric spaces.
//!
//! A space is a list of named points and a row-major distance matrix of exact
//! rationals. Besides axiom validation this module answers whether a space is
//! generated by a labeled star (a *witness* point `x0` with
//! `d(x0, x) <= d(y, x)` whenever `x != y`), builds that star, and decides
//! isometry through a canonical dendrogram encoding.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::labeling::{LabeledTree, Labeling};
use crate::rational::Rational;
use crate::tree::Tree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricError {
    #[error("a space needs at least one point")]
    Empty,
    #[error("duplicate point {0:?}")]
    DuplicatePoint(String),
    #[error("point names must be non-empty")]
    EmptyName,
    #[error("distance matrix must be {expected}x{expected}")]
    ShapeMismatch { expected: usize },
    #[error("d({0}, {1}) != d({1}, {0})")]
    SymmetryViolation(String, String),
    #[error("positivity fails at ({0}, {1})")]
    PositivityViolation(String, String),
    #[error("d({0}, {2}) > max(d({0}, {1}), d({1}, {2}))")]
    StrongTriangleViolation(String, String, String),
    #[error("unknown point {0:?}")]
    UnknownPoint(String),
    #[error("subset must be non-empty")]
    EmptySubset,
    #[error("space is not generated by any labeled star")]
    NotUs,
}

impl MetricError {
    pub fn code(&self) -> &'static str {
        match self {
            MetricError::Empty => "E_EMPTY",
            MetricError::DuplicatePoint(_) => "E_DUPLICATE_POINT",
            MetricError::EmptyName => "E_BAD_NAME",
            MetricError::ShapeMismatch { .. } => "E_SHAPE",
            MetricError::SymmetryViolation(..) => "E_SYMMETRY",
            MetricError::PositivityViolation(..) => "E_POSITIVITY",
            MetricError::StrongTriangleViolation(..) => "E_STRONG_TRIANGLE",
            MetricError::UnknownPoint(_) => "E_UNKNOWN_POINT",
            MetricError::EmptySubset => "E_EMPTY_SUBSET",
            MetricError::NotUs => "E_NOT_US",
        }
    }
}

/// Index-level description of the first failed axiom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum AxiomViolation {
    Symmetry { x: usize, y: usize },
    Positivity { x: usize, y: usize },
    StrongTriangle { x: usize, z: usize, y: usize },
}

/// Checks symmetry, positivity and the strong triangle inequality on a
/// row-major `n x n` matrix. The triple scan is exhaustive.
pub fn check_axioms(n: usize, dist: &[Rational]) -> Result<(), AxiomViolation> {
    debug_assert_eq!(dist.len(), n * n);
    let d = |i: usize, j: usize| dist[i * n + j];
    for x in 0..n {
        if !d(x, x).is_zero() {
            return Err(AxiomViolation::Positivity { x, y: x });
        }
        for y in x + 1..n {
            if d(x, y) != d(y, x) {
                return Err(AxiomViolation::Symmetry { x, y });
            }
            if d(x, y).is_zero() {
                return Err(AxiomViolation::Positivity { x, y });
            }
        }
    }
    for x in 0..n {
        for y in x + 1..n {
            let dxy = d(x, y);
            for z in 0..n {
                if dxy > d(x, z).max(d(z, y)) {
                    return Err(AxiomViolation::StrongTriangle { x, z, y });
                }
            }
        }
    }
    Ok(())
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FiniteUltrametricSpace {
    points: Arc<[String]>,
    dist: Vec<Rational>,
}

/// Validates points and a square matrix as an ultrametric space.
pub fn validate_ultrametric(
    points: impl Into<Arc<[String]>>,
    rows: &[Vec<Rational>],
) -> Result<FiniteUltrametricSpace, MetricError> {
    let points: Arc<[String]> = points.into();
    let n = points.len();
    if n == 0 {
        return Err(MetricError::Empty);
    }
    let mut seen = HashSet::with_capacity(n);
    for p in points.iter() {
        if p.is_empty() {
            return Err(MetricError::EmptyName);
        }
        if !seen.insert(p.as_str()) {
            return Err(MetricError::DuplicatePoint(p.clone()));
        }
    }
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(MetricError::ShapeMismatch { expected: n });
    }
    let dist: Vec<Rational> = rows.iter().flatten().copied().collect();
    let name = |i: usize| points[i].clone();
    check_axioms(n, &dist).map_err(|v| match v {
        AxiomViolation::Symmetry { x, y } => MetricError::SymmetryViolation(name(x), name(y)),
        AxiomViolation::Positivity { x, y } => MetricError::PositivityViolation(name(x), name(y)),
        AxiomViolation::StrongTriangle { x, z, y } => MetricError::StrongTriangleViolation(name(x), name(z), name(y)),
    })?;
    Ok(FiniteUltrametricSpace { points, dist })
}

impl FiniteUltrametricSpace {
    /// Wraps a matrix already known to be ultrametric.
    pub(crate) fn from_trusted(points: Arc<[String]>, dist: Vec<Rational>) -> Self {
        debug_assert_eq!(check_axioms(points.len(), &dist), Ok(()));
        FiniteUltrametricSpace { points, dist }
    }

    pub fn order(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &Arc<[String]> {
        &self.points
    }

    pub fn point(&self, i: usize) -> &str {
        &self.points[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.points.iter().position(|p| p == name)
    }

    pub fn dist(&self, i: usize, j: usize) -> Rational {
        self.dist[i * self.order() + j]
    }

    pub fn matrix(&self) -> &[Rational] {
        &self.dist
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        let n = self.order();
        &self.dist[i * n..(i + 1) * n]
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        (0..self.order()).map(|i| self.row(i).to_vec()).collect()
    }

    /// Largest pairwise distance.
    pub fn diameter(&self) -> Rational {
        self.dist.iter().copied().max().unwrap_or_default()
    }

    /// The same distances under new point names.
    pub fn renamed(&self, points: impl Into<Arc<[String]>>) -> Result<Self, MetricError> {
        let points: Arc<[String]> = points.into();
        if points.len() != self.order() {
            return Err(MetricError::ShapeMismatch { expected: self.order() });
        }
        validate_ultrametric(points, &self.rows())
    }

    /// Upper-triangle distances, sorted.
    pub fn distance_multiset(&self) -> Vec<Rational> {
        let n = self.order();
        let mut out: Vec<Rational> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| self.dist(i, j))
            .collect();
        out.sort_unstable();
        out
    }
}

/// True iff `x0` satisfies `d(x0, x) <= d(y, x)` for all `x != y`.
pub fn is_us_witness(space: &FiniteUltrametricSpace, x0: usize) -> bool {
    let n = space.order();
    (0..n).filter(|&x| x != x0).all(|x| {
        let to_x0 = space.dist(x0, x);
        (0..n).filter(|&y| y != x).all(|y| to_x0 <= space.dist(y, x))
    })
}

/// First point (in point order) that witnesses membership in the
/// star-generated class, or `None` if the space is not star-generated.
///
/// `x0` qualifies iff for every other `x`, `d(x0, x)` equals the distance from
/// `x` to its nearest neighbour; nearest-neighbour distances are computed once.
pub fn us_witness(space: &FiniteUltrametricSpace) -> Option<usize> {
    let n = space.order();
    if n == 1 {
        return Some(0);
    }
    let nearest: Vec<Rational> = (0..n)
        .map(|x| {
            (0..n)
                .filter(|&y| y != x)
                .map(|y| space.dist(x, y))
                .min()
                .expect("n >= 2")
        })
        .collect();
    (0..n).find(|&x0| (0..n).all(|x| x == x0 || space.dist(x0, x) == nearest[x]))
}

/// The subspace on `subset`, keeping the parent's point order.
pub fn restrict<S: AsRef<str>>(
    space: &FiniteUltrametricSpace,
    subset: &[S],
) -> Result<FiniteUltrametricSpace, MetricError> {
    if subset.is_empty() {
        return Err(MetricError::EmptySubset);
    }
    let mut keep = vec![false; space.order()];
    for name in subset {
        let name = name.as_ref();
        let i = space.index_of(name).ok_or_else(|| MetricError::UnknownPoint(name.to_owned()))?;
        keep[i] = true;
    }
    let indices: Vec<usize> = (0..space.order()).filter(|&i| keep[i]).collect();
    Ok(restrict_indices(space, &indices))
}

/// The subspace on the given distinct indices, in the order given.
pub fn restrict_indices(space: &FiniteUltrametricSpace, indices: &[usize]) -> FiniteUltrametricSpace {
    let points: Arc<[String]> = indices.iter().map(|&i| space.points[i].clone()).collect();
    let dist = indices
        .iter()
        .flat_map(|&i| indices.iter().map(move |&j| space.dist(i, j)))
        .collect();
    FiniteUltrametricSpace::from_trusted(points, dist)
}

/// Builds the labeled star that generates `space`: center at the witness with
/// label 0, every other point a leaf labeled with its distance to the center.
/// Vertices keep the space's point order.
pub fn realize_as_star(space: &FiniteUltrametricSpace) -> Result<LabeledTree, MetricError> {
    let center = us_witness(space).ok_or(MetricError::NotUs)?;
    let n = space.order();
    let pairs: Vec<(usize, usize)> = (0..n).filter(|&x| x != center).map(|x| (center, x)).collect();
    let tree = Tree::from_index_edges(space.points.clone(), &pairs).expect("a star is a tree");
    let labels = (0..n).map(|x| space.dist(center, x)).collect();
    Ok(LabeledTree::new(tree, Labeling::new(labels)).expect("one label per point"))
}

/// Recursive dendrogram encoding: the diameter, and the forms of the blocks
/// of the relation `d(x, y) < diameter`, sorted by their string form.
///
/// Two finite ultrametric spaces are isometric iff their forms are equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct CanonicalForm {
    pub diameter: Rational,
    pub children: Vec<CanonicalForm>,
}

impl CanonicalForm {
    pub fn point() -> Self {
        CanonicalForm {
            diameter: Rational::ZERO,
            children: Vec::new(),
        }
    }

    pub fn is_point(&self) -> bool {
        self.children.is_empty()
    }

    /// Number of points of the encoded space.
    pub fn size(&self) -> usize {
        if self.is_point() {
            1
        } else {
            self.children.iter().map(CanonicalForm::size).sum()
        }
    }
}

impl fmt::Display for CanonicalForm {
    /// `0` for a point, otherwise `D[child,child,...]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            return f.write_str("0");
        }
        write!(f, "{}[", self.diameter)?;
        for (i, c) in self.children.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

pub fn canonical_form(space: &FiniteUltrametricSpace) -> CanonicalForm {
    let all: Vec<usize> = (0..space.order()).collect();
    canonical_form_of(space, &all)
}

fn canonical_form_of(space: &FiniteUltrametricSpace, idx: &[usize]) -> CanonicalForm {
    if idx.len() == 1 {
        return CanonicalForm::point();
    }
    let diameter = idx
        .iter()
        .flat_map(|&i| idx.iter().map(move |&j| space.dist(i, j)))
        .max()
        .expect("non-empty");
    // Closed balls of radius < diameter are the blocks; each block is
    // identified by its first member.
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for &p in idx {
        match blocks.iter_mut().find(|b| space.dist(b[0], p) < diameter) {
            Some(block) => block.push(p),
            None => blocks.push(vec![p]),
        }
    }
    let mut children: Vec<CanonicalForm> = blocks.iter().map(|b| canonical_form_of(space, b)).collect();
    children.sort_by_cached_key(|c| c.to_string());
    CanonicalForm { diameter, children }
}

/// True iff a distance-preserving bijection between the spaces exists.
pub fn check_isometric(a: &FiniteUltrametricSpace, b: &FiniteUltrametricSpace) -> bool {
    if a.order() != b.order() || a.distance_multiset() != b.distance_multiset() {
        return false;
    }
    canonical_form(a) == canonical_form(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::build_ultrametric;

    fn r(n: u64) -> Rational {
        Rational::integer(n)
    }

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("p{i}")).collect()
    }

    fn rows(m: &[&[u64]]) -> Vec<Vec<Rational>> {
        m.iter().map(|row| row.iter().copied().map(r).collect()).collect()
    }

    fn p5_22322() -> FiniteUltrametricSpace {
        let lt = LabeledTree::new(Tree::path(5), Labeling::from_integers(&[2, 2, 3, 2, 2])).unwrap();
        build_ultrametric(&lt).unwrap()
    }

    fn star_space(center: u64, leaves: &[u64]) -> FiniteUltrametricSpace {
        let mut labels = vec![center];
        labels.extend_from_slice(leaves);
        let lt = LabeledTree::new(Tree::star(leaves.len()), Labeling::from_integers(&labels)).unwrap();
        build_ultrametric(&lt).unwrap()
    }

    fn witness_naive(space: &FiniteUltrametricSpace) -> Option<usize> {
        (0..space.order()).find(|&x0| is_us_witness(space, x0))
    }

    #[test]
    fn validation() {
        let sp = p5_22322();
        assert!(validate_ultrametric(sp.points().clone(), &sp.rows()).is_ok());
        assert!(matches!(
            validate_ultrametric(names(3), &rows(&[&[0, 1, 3], &[1, 0, 1], &[3, 1, 0]])),
            Err(MetricError::StrongTriangleViolation(..))
        ));
        assert!(validate_ultrametric(names(1), &rows(&[&[0]])).is_ok());
    }

    #[test]
    fn validation_errors() {
        assert_eq!(validate_ultrametric(names(0), &[]), Err(MetricError::Empty));
        assert!(matches!(
            validate_ultrametric(names(2), &rows(&[&[0, 1], &[2, 0]])),
            Err(MetricError::SymmetryViolation(..))
        ));
        assert!(matches!(
            validate_ultrametric(names(2), &rows(&[&[0, 0], &[0, 0]])),
            Err(MetricError::PositivityViolation(..))
        ));
        assert!(matches!(
            validate_ultrametric(names(2), &rows(&[&[1, 1], &[1, 0]])),
            Err(MetricError::PositivityViolation(..))
        ));
        assert_eq!(
            validate_ultrametric(names(2), &rows(&[&[0, 1]])),
            Err(MetricError::ShapeMismatch { expected: 2 })
        );
        assert!(matches!(
            validate_ultrametric(vec!["a".to_string(), "a".to_string()], &rows(&[&[0, 1], &[1, 0]])),
            Err(MetricError::DuplicatePoint(_))
        ));
    }

    #[test]
    fn witness_examples() {
        assert_eq!(us_witness(&p5_22322()), None);
        assert_eq!(us_witness(&star_space(0, &[1, 2, 3])), Some(0));
        let two = validate_ultrametric(names(2), &rows(&[&[0, 7], &[7, 0]])).unwrap();
        assert_eq!(us_witness(&two), Some(0));
        let one = validate_ultrametric(names(1), &rows(&[&[0]])).unwrap();
        assert_eq!(us_witness(&one), Some(0));
    }

    #[test]
    fn witness_matches_naive_scan() {
        let spaces = [
            p5_22322(),
            star_space(0, &[1, 2, 3]),
            star_space(2, &[1, 1, 3]),
            star_space(5, &[1, 2]),
        ];
        for s in &spaces {
            assert_eq!(us_witness(s), witness_naive(s));
        }
    }

    #[test]
    fn restriction() {
        let sp = p5_22322();
        let pair = restrict(&sp, &["v1", "v2"]).unwrap();
        assert_eq!(pair.order(), 2);
        assert_eq!(pair.dist(0, 1), r(2));
        assert_eq!(restrict(&sp, &["v5", "v4", "v3", "v2", "v1"]).unwrap(), sp);
        let single = restrict(&sp, &["v3"]).unwrap();
        assert_eq!(single.order(), 1);
        assert_eq!(restrict::<&str>(&sp, &[]), Err(MetricError::EmptySubset));
        assert_eq!(restrict(&sp, &["zz"]), Err(MetricError::UnknownPoint("zz".into())));
    }

    #[test]
    fn star_realization() {
        let two = validate_ultrametric(names(2), &rows(&[&[0, 5], &[5, 0]])).unwrap();
        let lt = realize_as_star(&two).unwrap();
        assert_eq!(lt.labeling(), &Labeling::from_integers(&[0, 5]));
        assert_eq!(build_ultrametric(&lt).unwrap(), two);

        let four = validate_ultrametric(
            names(4),
            &rows(&[&[0, 1, 2, 3], &[1, 0, 2, 3], &[2, 2, 0, 3], &[3, 3, 3, 0]]),
        )
        .unwrap();
        let lt = realize_as_star(&four).unwrap();
        assert_eq!(lt.labeling(), &Labeling::from_integers(&[0, 1, 2, 3]));
        assert_eq!(lt.tree().classify().centers.len(), 1);
        assert_eq!(build_ultrametric(&lt).unwrap(), four);

        assert_eq!(realize_as_star(&p5_22322()), Err(MetricError::NotUs));

        let one = validate_ultrametric(names(1), &rows(&[&[0]])).unwrap();
        let lt = realize_as_star(&one).unwrap();
        assert_eq!(lt.labeling(), &Labeling::from_integers(&[0]));
    }

    #[test]
    fn canonical_forms() {
        let one = validate_ultrametric(names(1), &rows(&[&[0]])).unwrap();
        assert_eq!(canonical_form(&one), CanonicalForm::point());
        let two = validate_ultrametric(names(2), &rows(&[&[0, 3], &[3, 0]])).unwrap();
        assert_eq!(canonical_form(&two).to_string(), "3[0,0]");
        let pair2 = CanonicalForm {
            diameter: r(2),
            children: vec![CanonicalForm::point(), CanonicalForm::point()],
        };
        let want = CanonicalForm {
            diameter: r(3),
            children: vec![CanonicalForm::point(), pair2.clone(), pair2],
        };
        assert_eq!(canonical_form(&p5_22322()), want);
        assert_eq!(want.to_string(), "3[0,2[0,0],2[0,0]]");
        assert_eq!(want.size(), 5);
    }

    #[test]
    fn isometry_examples() {
        let sp = p5_22322();
        let renamed = sp.renamed(names(5)).unwrap();
        assert!(check_isometric(&sp, &renamed));
        let a = validate_ultrametric(names(2), &rows(&[&[0, 2], &[2, 0]])).unwrap();
        let b = validate_ultrametric(names(2), &rows(&[&[0, 3], &[3, 0]])).unwrap();
        assert!(!check_isometric(&a, &b));
        assert!(!check_isometric(&a, &sp));
        // one close pair vs two close pairs
        let c = validate_ultrametric(names(4), &rows(&[&[0, 1, 2, 2], &[1, 0, 2, 2], &[2, 2, 0, 2], &[2, 2, 2, 0]])).unwrap();
        let d = validate_ultrametric(names(4), &rows(&[&[0, 1, 2, 2], &[1, 0, 2, 2], &[2, 2, 0, 1], &[2, 2, 1, 0]])).unwrap();
        assert!(!check_isometric(&c, &d));
    }
}
