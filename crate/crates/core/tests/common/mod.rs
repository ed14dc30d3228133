//! Brute-force oracles shared by the integration tests. None of them call the
//! library routine they are used to check.

#![allow(dead_code)]

use std::collections::HashSet;

use itertools::Itertools;
use ultratree_core::labeling::{enumerate_labelings_budgeted, generate_space};
use ultratree_core::tree::cayley_count;
use ultratree_core::{enumerate_trees, FiniteUltrametricSpace, Labeling, Rational, Tree, VertexId};

pub fn r(n: u64) -> Rational {
    Rational::integer(n)
}

pub fn values(v: &[u64]) -> Vec<Rational> {
    v.iter().copied().map(r).collect()
}

/// Longest simple path by DFS over every simple path from every vertex.
pub fn brute_longest_path(tree: &Tree) -> usize {
    fn dfs(tree: &Tree, v: VertexId, seen: &mut Vec<bool>, depth: usize, best: &mut usize) {
        *best = (*best).max(depth);
        for &u in tree.neighbors(v) {
            if !seen[u.index()] {
                seen[u.index()] = true;
                dfs(tree, u, seen, depth + 1, best);
                seen[u.index()] = false;
            }
        }
    }
    let mut best = 0;
    for v in tree.vertices() {
        let mut seen = vec![false; tree.order()];
        seen[v.index()] = true;
        dfs(tree, v, &mut seen, 0, &mut best);
    }
    best
}

/// Path-max distance by walking the unique path.
pub fn walk_distance(tree: &Tree, labeling: &Labeling, u: VertexId, v: VertexId) -> Rational {
    if u == v {
        return Rational::ZERO;
    }
    tree.unique_path(u, v)
        .unwrap()
        .into_iter()
        .map(|w| labeling.get(w))
        .max()
        .unwrap()
}

/// The three axioms, literally.
pub fn is_ultrametric(n: usize, d: impl Fn(usize, usize) -> Rational) -> bool {
    (0..n).all(|x| {
        (0..n).all(|y| {
            d(x, y) == d(y, x)
                && ((d(x, y) == Rational::ZERO) == (x == y))
                && (0..n).all(|z| d(x, y) <= d(x, z).max(d(z, y)))
        })
    })
}

/// Condition (ii) scanned literally over all triples.
pub fn naive_witness(space: &FiniteUltrametricSpace) -> Option<usize> {
    let n = space.order();
    (0..n).find(|&x0| {
        (0..n).all(|x| (0..n).all(|y| x == y || space.dist(x0, x) <= space.dist(y, x)))
    })
}

/// Searches every star on the space's own points (any center, labels drawn
/// from the distance values plus zero) for one generating the space exactly.
pub fn brute_star_generates(space: &FiniteUltrametricSpace) -> bool {
    let n = space.order();
    let mut candidates: Vec<Rational> = space.matrix().to_vec();
    candidates.push(Rational::ZERO);
    candidates.sort();
    candidates.dedup();
    (0..n).any(|center| {
        std::iter::repeat_n(candidates.iter().copied(), n)
            .multi_cartesian_product()
            .any(|labels| {
                (0..n).all(|x| {
                    (0..n).all(|y| {
                        let want = space.dist(x, y);
                        let got = if x == y {
                            Rational::ZERO
                        } else {
                            labels[x].max(labels[y]).max(labels[center])
                        };
                        want == got
                    })
                })
            })
    })
}

/// Searches every bijection for one preserving all distances.
pub fn brute_isometric(a: &FiniteUltrametricSpace, b: &FiniteUltrametricSpace) -> bool {
    let n = a.order();
    if n != b.order() {
        return false;
    }
    (0..n).permutations(n).any(|phi| {
        (0..n).all(|x| (0..n).all(|y| a.dist(x, y) == b.dist(phi[x], phi[y])))
    })
}

/// Every labeled tree of order `1..=n_max`.
pub fn all_trees(n_max: usize) -> impl Iterator<Item = Tree> {
    (1..=n_max).flat_map(|n| enumerate_trees(n).unwrap())
}

/// Every space generated by a non-degenerate labeling over `vals` of a tree
/// of order `<= n_max`, with exact duplicates removed; insertion order kept.
pub fn space_corpus(n_max: usize, vals: &[u64]) -> Vec<FiniteUltrametricSpace> {
    let vals = values(vals);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for tree in all_trees(n_max) {
        for l in enumerate_labelings_budgeted(&tree, &vals, true, u64::MAX).unwrap() {
            let space = generate_space(&tree, &l).unwrap();
            if seen.insert(space.clone()) {
                out.push(space);
            }
        }
    }
    out
}

/// Cayley count, cross-checked by brute force over edge subsets of `K_n`.
pub fn brute_tree_count(n: usize) -> u64 {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let names = ultratree_core::tree::default_names(n);
    pairs
        .into_iter()
        .combinations(n.saturating_sub(1))
        .filter(|edges| Tree::from_index_edges(names.clone(), edges).is_ok())
        .count() as u64
}

pub fn cayley(n: usize) -> u64 {
    cayley_count(n)
}
