mod common;

use common::*;
use proptest::prelude::*;
use ultratree_core::labeling::{enumerate_labelings_budgeted, path_max_matrix};
use ultratree_core::tree::{default_names, prufer_edges};
use ultratree_core::{
    build_ultrametric, counterexample_labeling, generate_space, is_nondegenerate, restrict, us_witness, LabeledTree,
    Labeling, Tree,
};

/// Nondegenerate => ultrametric, degenerate => positivity fails, against the
/// literal axioms on the path-walk matrix.
#[test]
fn nondegeneracy_characterizes_ultrametricity() {
    let vals = values(&[0, 1, 2]);
    for tree in all_trees(6) {
        let n = tree.order();
        for l in enumerate_labelings_budgeted(&tree, &vals, false, u64::MAX).unwrap() {
            let m = path_max_matrix(&tree, &l);
            if tree.order() <= 5 {
                for u in tree.vertices() {
                    for v in tree.vertices() {
                        assert_eq!(m[u.index() * n + v.index()], walk_distance(&tree, &l, u, v));
                    }
                }
            }
            let ultra = is_ultrametric(n, |i, j| m[i * n + j]);
            assert_eq!(ultra, is_nondegenerate(&tree, &l), "{tree:?} {l:?}");
            if !ultra {
                let zero_off_diagonal = (0..n).any(|i| (0..n).any(|j| i != j && m[i * n + j].is_zero()));
                assert!(zero_off_diagonal);
            }
        }
    }
}

#[test]
fn counterexample_is_never_star_generated() {
    for tree in all_trees(7).filter(|t| t.longest_path_length() >= 4) {
        let lt = counterexample_labeling(&tree).unwrap();
        assert!(lt.is_nondegenerate());
        let space = build_ultrametric(&lt).unwrap();
        assert_eq!(us_witness(&space), None, "{tree:?}");
        assert_eq!(naive_witness(&space), None);
    }
}

#[test]
fn minimal_pattern_is_also_a_counterexample() {
    let lt = LabeledTree::new(Tree::path(5), Labeling::from_integers(&[1, 1, 2, 1, 1])).unwrap();
    assert_eq!(us_witness(&build_ultrametric(&lt).unwrap()), None);
}

fn arb_labeled(max_n: usize, max_label: u64) -> impl Strategy<Value = (Tree, Labeling)> {
    (2..=max_n).prop_flat_map(move |n| {
        (
            proptest::collection::vec(0..n, n - 2),
            proptest::collection::vec(1..=max_label, n),
        )
            .prop_map(move |(seq, labels)| {
                let tree = Tree::from_index_edges(default_names(n), &prufer_edges(n, &seq)).unwrap();
                (tree, Labeling::from_integers(&labels))
            })
    })
}

proptest! {
    #[test]
    fn distance_dominates_endpoint_labels((tree, l) in arb_labeled(10, 6)) {
        let space = generate_space(&tree, &l).unwrap();
        for u in tree.vertices() {
            for v in tree.vertices().filter(|&v| v != u) {
                prop_assert!(space.dist(u.index(), v.index()) >= l.get(u).max(l.get(v)));
            }
        }
    }

    #[test]
    fn raising_labels_never_shrinks_distances((tree, l) in arb_labeled(9, 5), bumps in proptest::collection::vec(0u64..3, 9)) {
        let raised = Labeling::new(
            l.as_slice().iter().zip(&bumps).map(|(x, &b)| ultratree_core::Rational::integer(x.numer() + b)).collect(),
        );
        prop_assert!(l.le_pointwise(&raised));
        let a = generate_space(&tree, &l).unwrap();
        let b = generate_space(&tree, &raised).unwrap();
        for (x, y) in a.matrix().iter().zip(b.matrix()) {
            prop_assert!(x <= y);
        }
    }

    /// Distances between vertices of a path computed in the whole tree equal
    /// those of the path graph under the restricted labeling.
    #[test]
    fn restriction_to_a_path_is_compatible((tree, l) in arb_labeled(10, 4), a in 0usize..10, b in 0usize..10) {
        let n = tree.order();
        let (u, v) = (tree.vertices().nth(a % n).unwrap(), tree.vertices().nth(b % n).unwrap());
        prop_assume!(u != v);
        let path = tree.unique_path(u, v).unwrap();
        let whole = generate_space(&tree, &l).unwrap();
        let names: Vec<&str> = path.iter().map(|&w| tree.name(w)).collect();
        let sub = restrict(&whole, &names).unwrap();

        let path_tree = ultratree_core::validate_tree(
            names.iter().map(|s| s.to_string()),
            names.windows(2).map(|w| (w[0], w[1])),
        ).unwrap();
        let path_labels = Labeling::new(path_tree.names().iter().map(|nm| l.get(tree.vertex(nm).unwrap())).collect());
        let direct = generate_space(&path_tree, &path_labels).unwrap();
        for x in 0..names.len() {
            for y in 0..names.len() {
                let (i, j) = (sub.index_of(direct.point(x)).unwrap(), sub.index_of(direct.point(y)).unwrap());
                prop_assert_eq!(direct.dist(x, y), sub.dist(i, j));
            }
        }
    }
}
