//! Ultrametric spaces generated by vertex-labeled finite trees.
//!
//! A labeling `l: V(T) -> [0, ∞)` of a tree `T` induces the distance
//! `d_l(u, v) = max { l(w) : w on the path from u to v }` for `u != v`. This
//! crate builds those spaces with exact rational labels, decides whether a
//! finite ultrametric space is generated by some labeled star (and builds the
//! star when it is), tests isometry through canonical dendrogram forms, and
//! classifies trees as star, double-star or other.
//!
//! The [`verify`] module enumerates every labeled tree up to a small order and
//! checks that a tree has all of its generated spaces star-generated exactly
//! when its longest path has at most three edges.

pub mod io;
pub mod labeling;
pub mod metric;
pub mod rational;
pub mod tree;
pub mod verify;

pub use labeling::{
    build_ultrametric, counterexample_labeling, enumerate_labelings, extend_labeling, generate_space,
    is_nondegenerate, LabeledTree, Labeling, LabelingError,
};
pub use metric::{
    canonical_form, check_isometric, realize_as_star, restrict, us_witness, validate_ultrametric, CanonicalForm,
    FiniteUltrametricSpace, MetricError,
};
pub use rational::Rational;
pub use tree::{enumerate_trees, validate_tree, Tree, TreeClass, TreeError, TreeKind, VertexId};
pub use verify::{TheoremId, VerificationReport, VerifyConfig, VerifyError};
