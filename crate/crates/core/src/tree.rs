//! Finite simple trees.
//!
//! Vertices carry human-readable names externally and dense indices
//! ([`VertexId`]) internally. Edges are stored normalized as `(lo, hi)` and
//! sorted, so two trees built from the same vertex list and edge set compare
//! equal regardless of input order.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Default order cap for [`enumerate_trees`]; `8^6` trees is already ~262k.
pub const DEFAULT_TREE_CAP: usize = 8;

/// Dense index of a vertex inside one [`Tree`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(u32);

impl VertexId {
    pub fn new(index: usize) -> Self {
        VertexId(u32::try_from(index).expect("vertex index exceeds u32"))
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("a tree needs at least one vertex")]
    Empty,
    #[error("vertex names must be non-empty")]
    EmptyName,
    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(String),
    #[error("bad edge {{{0}, {1}}}: {2}")]
    BadEdge(String, String, &'static str),
    #[error("edge set contains a cycle")]
    HasCycle,
    #[error("graph is not connected ({components} components)")]
    NotConnected { components: usize },
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("path endpoints coincide")]
    SamePoint,
    #[error("order {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
}

impl TreeError {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            TreeError::Empty => "E_EMPTY",
            TreeError::EmptyName => "E_BAD_NAME",
            TreeError::DuplicateVertex(_) => "E_DUPLICATE_VERTEX",
            TreeError::BadEdge(..) => "E_BAD_EDGE",
            TreeError::HasCycle => "E_HAS_CYCLE",
            TreeError::NotConnected { .. } => "E_NOT_CONNECTED",
            TreeError::UnknownVertex(_) => "E_UNKNOWN_VERTEX",
            TreeError::SamePoint => "E_SAME_POINT",
            TreeError::CapExceeded { .. } => "E_CAP_EXCEEDED",
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Tree {
    names: Arc<[String]>,
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<VertexId>>,
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(a, b)| format!("{}-{}", self.name(a), self.name(b)))
            .collect();
        f.debug_struct("Tree")
            .field("vertices", &self.names)
            .field("edges", &edges)
            .finish()
    }
}

/// Validates a named vertex set and edge set as a finite simple tree.
///
/// Edges are unordered; listing `{a,b}` twice (in either order) is the same edge.
pub fn validate_tree<I, S, E, A, B>(vertices: I, edges: E) -> Result<Tree, TreeError>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
    E: IntoIterator<Item = (A, B)>,
    A: AsRef<str>,
    B: AsRef<str>,
{
    let names: Vec<String> = vertices.into_iter().map(Into::into).collect();
    if names.is_empty() {
        return Err(TreeError::Empty);
    }
    let mut index = HashMap::with_capacity(names.len());
    for (i, name) in names.iter().enumerate() {
        if name.is_empty() {
            return Err(TreeError::EmptyName);
        }
        if index.insert(name.as_str(), i).is_some() {
            return Err(TreeError::DuplicateVertex(name.clone()));
        }
    }
    let mut pairs = Vec::new();
    for (a, b) in edges {
        let (a, b) = (a.as_ref(), b.as_ref());
        let bad = |why| TreeError::BadEdge(a.to_owned(), b.to_owned(), why);
        let ia = *index.get(a).ok_or_else(|| bad("unknown endpoint"))?;
        let ib = *index.get(b).ok_or_else(|| bad("unknown endpoint"))?;
        if ia == ib {
            return Err(bad("self-loop"));
        }
        pairs.push((ia, ib));
    }
    drop(index);
    Tree::from_index_edges(names.into(), &pairs)
}

impl Tree {
    /// Builds a tree from shared names and index pairs. Indices must be in range
    /// and distinct within a pair; connectivity and acyclicity are checked.
    pub fn from_index_edges(names: Arc<[String]>, pairs: &[(usize, usize)]) -> Result<Tree, TreeError> {
        let n = names.len();
        if n == 0 {
            return Err(TreeError::Empty);
        }
        let mut edges: Vec<(VertexId, VertexId)> = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if a >= n || b >= n {
                let show = |i: usize| names.get(i).cloned().unwrap_or_else(|| format!("#{i}"));
                return Err(TreeError::BadEdge(show(a), show(b), "unknown endpoint"));
            }
            if a == b {
                return Err(TreeError::BadEdge(names[a].clone(), names[b].clone(), "self-loop"));
            }
            edges.push((VertexId::new(a.min(b)), VertexId::new(a.max(b))));
        }
        edges.sort_unstable();
        edges.dedup();
        if edges.len() > n - 1 {
            return Err(TreeError::HasCycle);
        }

        let mut dsu = DisjointSets::new(n);
        for &(a, b) in &edges {
            if !dsu.union(a.index(), b.index()) {
                return Err(TreeError::HasCycle);
            }
        }
        let components = n - edges.len();
        if components > 1 {
            return Err(TreeError::NotConnected { components });
        }

        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &edges {
            adj[a.index()].push(b);
            adj[b.index()].push(a);
        }
        Ok(Tree { names, edges, adj })
    }

    /// The path `v1 - v2 - ... - vn`.
    pub fn path(n: usize) -> Tree {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Tree::from_index_edges(default_names(n), &pairs).expect("path is a tree")
    }

    /// Star with center `v1` and leaves `v2..=v(leaves+1)`.
    pub fn star(leaves: usize) -> Tree {
        let pairs: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Tree::from_index_edges(default_names(leaves + 1), &pairs).expect("star is a tree")
    }

    /// Adjacent centers `v1`, `v2`; `v1` gets `left` leaves, `v2` gets `right`.
    pub fn double_star(left: usize, right: usize) -> Tree {
        let mut pairs = vec![(0, 1)];
        pairs.extend((0..left).map(|i| (0, 2 + i)));
        pairs.extend((0..right).map(|i| (1, 2 + left + i)));
        Tree::from_index_edges(default_names(left + right + 2), &pairs).expect("double star is a tree")
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &Arc<[String]> {
        &self.names
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v.index()]
    }

    pub fn vertex(&self, name: &str) -> Option<VertexId> {
        self.names.iter().position(|n| n == name).map(VertexId::new)
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> + '_ {
        (0..self.order()).map(VertexId::new)
    }

    /// Normalized `(lo, hi)` edges in sorted order.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v.index()]
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.index() < self.order()
    }

    pub fn is_adjacent(&self, a: VertexId, b: VertexId) -> bool {
        let key = (a.min(b), a.max(b));
        self.edges.binary_search(&key).is_ok()
    }

    fn check(&self, v: VertexId) -> Result<(), TreeError> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(TreeError::UnknownVertex(v.to_string()))
        }
    }

    pub fn degree(&self, v: VertexId) -> Result<usize, TreeError> {
        self.check(v)?;
        Ok(self.adj[v.index()].len())
    }

    /// Vertices of degree at least two, in index order.
    pub fn high_degree_vertices(&self) -> Vec<VertexId> {
        self.vertices().filter(|v| self.adj[v.index()].len() >= 2).collect()
    }

    /// The unique path `(u, ..., v)`.
    pub fn unique_path(&self, u: VertexId, v: VertexId) -> Result<Vec<VertexId>, TreeError> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(TreeError::SamePoint);
        }
        // Parent pointers toward v, then walk from u.
        let mut parent = vec![usize::MAX; self.order()];
        parent[v.index()] = v.index();
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            if x == u {
                break;
            }
            for &y in &self.adj[x.index()] {
                if parent[y.index()] == usize::MAX {
                    parent[y.index()] = x.index();
                    queue.push_back(y);
                }
            }
        }
        let mut path = vec![u];
        let mut cur = u.index();
        while cur != v.index() {
            cur = parent[cur];
            path.push(VertexId::new(cur));
        }
        Ok(path)
    }

    /// Edge counts from `source` to every vertex.
    pub fn hop_distances(&self, source: VertexId) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.order()];
        dist[source.index()] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x.index()];
            for &y in &self.adj[x.index()] {
                if dist[y.index()] == usize::MAX {
                    dist[y.index()] = dx + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Edge count of a longest path; 0 for the order-1 tree.
    ///
    /// Two sweeps: the vertex farthest from any start is an endpoint of some
    /// longest path, and the farthest vertex from it closes the diameter.
    pub fn longest_path_length(&self) -> usize {
        let far = |from: VertexId| {
            let d = self.hop_distances(from);
            let (i, &len) = d
                .iter()
                .enumerate()
                .max_by_key(|&(i, &len)| (len, std::cmp::Reverse(i)))
                .expect("non-empty tree");
            (VertexId::new(i), len)
        };
        let (a, _) = far(VertexId::new(0));
        far(a).1
    }

    /// Lexicographically least `(a, b)` with `a < b` whose path realizes the
    /// diameter, or `None` for the order-1 tree.
    pub fn least_diameter_pair(&self) -> Option<(VertexId, VertexId)> {
        let diameter = self.longest_path_length();
        if diameter == 0 {
            return None;
        }
        self.vertices().find_map(|a| {
            let d = self.hop_distances(a);
            (a.index() + 1..self.order())
                .find(|&b| d[b] == diameter)
                .map(|b| (a, VertexId::new(b)))
        })
    }

    pub fn classify(&self) -> TreeClass {
        let centers = self.high_degree_vertices();
        let kind = match centers.len() {
            0 | 1 => TreeKind::Star,
            2 => TreeKind::DoubleStar,
            _ => TreeKind::Other,
        };
        TreeClass {
            kind,
            centers: if kind == TreeKind::Other { Vec::new() } else { centers },
        }
    }

    /// An isomorphism-invariant code for the unlabeled shape (AHU encoding
    /// rooted at the center, minimized over bicenters).
    pub fn shape_code(&self) -> String {
        let n = self.order();
        let mut degree: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
        let mut remaining = n;
        while remaining > 2 {
            remaining -= layer.len();
            let mut next = Vec::new();
            for &leaf in &layer {
                degree[leaf] = 0;
                for u in self.adj[leaf].iter().map(|u| u.index()) {
                    if degree[u] > 1 {
                        degree[u] -= 1;
                        if degree[u] == 1 {
                            next.push(u);
                        }
                    }
                }
            }
            layer = next;
        }
        layer
            .into_iter()
            .map(|root| self.rooted_code(root, usize::MAX))
            .min()
            .expect("tree has a center")
    }

    fn rooted_code(&self, v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = self.adj[v]
            .iter()
            .filter(|u| u.index() != parent)
            .map(|u| self.rooted_code(u.index(), v))
            .collect();
        kids.sort_unstable();
        format!("({})", kids.concat())
    }
}

/// Shared `v1..vn` names.
pub fn default_names(n: usize) -> Arc<[String]> {
    (1..=n).map(|i| format!("v{i}")).collect()
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum TreeKind {
    Star,
    DoubleStar,
    Other,
}

impl TreeKind {
    pub fn as_str(self) -> &'static str {
        match self {
            TreeKind::Star => "Star",
            TreeKind::DoubleStar => "DoubleStar",
            TreeKind::Other => "Other",
        }
    }
}

impl fmt::Display for TreeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Star / double-star / other, with the degree-≥2 vertices for the first two.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TreeClass {
    pub kind: TreeKind,
    pub centers: Vec<VertexId>,
}

/// Number of labeled trees on `n` vertices: `n^(n-2)`, or 1 for `n <= 2`.
pub fn cayley_count(n: usize) -> u64 {
    if n <= 2 {
        1
    } else {
        (n as u64).pow(n as u32 - 2)
    }
}

/// Decodes a Prüfer sequence over `0..n` into edges.
pub fn prufer_edges(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    if n <= 1 {
        return Vec::new();
    }
    debug_assert_eq!(seq.len(), n - 2);
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut ptr = degree.iter().position(|&d| d == 1).expect("a leaf exists");
    let mut leaf = ptr;
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    edges
}

/// All labeled trees on `v1..vn`, in Prüfer-index order.
pub fn enumerate_trees(n: usize) -> Result<PruferTrees, TreeError> {
    enumerate_trees_capped(n, DEFAULT_TREE_CAP)
}

pub fn enumerate_trees_capped(n: usize, cap: usize) -> Result<PruferTrees, TreeError> {
    if n == 0 {
        return Err(TreeError::Empty);
    }
    if n > cap {
        return Err(TreeError::CapExceeded { n, cap });
    }
    Ok(PruferTrees::range(n, 0, cayley_count(n)))
}

/// Iterator over a contiguous range of Prüfer indices for a fixed order.
///
/// Disjoint ranges can be produced independently; concatenating them in
/// index order reproduces the full enumeration.
#[derive(Clone, Debug)]
pub struct PruferTrees {
    n: usize,
    names: Arc<[String]>,
    next: u64,
    end: u64,
}

impl PruferTrees {
    pub fn range(n: usize, start: u64, end: u64) -> Self {
        let end = end.min(cayley_count(n));
        PruferTrees {
            n,
            names: default_names(n),
            next: start.min(end),
            end,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// The tree with the given Prüfer index (base-`n` digits, most
    /// significant first).
    pub fn tree_at(&self, index: u64) -> Tree {
        let n = self.n;
        let len = n.saturating_sub(2);
        let mut seq = vec![0usize; len];
        let mut rest = index;
        for slot in seq.iter_mut().rev() {
            *slot = (rest % n as u64) as usize;
            rest /= n as u64;
        }
        Tree::from_index_edges(self.names.clone(), &prufer_edges(n, &seq)).expect("Prüfer sequences decode to trees")
    }
}

impl Iterator for PruferTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        if self.next >= self.end {
            return None;
        }
        let tree = self.tree_at(self.next);
        self.next += 1;
        Some(tree)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for PruferTrees {}
