//! Rooted trees over dense vertex ids, metric queries and Tyler trees.

use std::collections::VecDeque;

use num_bigint::BigUint;
use thiserror::Error;

pub type Vertex = usize;

/// Default ceiling on the number of vertices `build_tyler` will materialize.
pub const DEFAULT_SIZE_GUARD: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error("parent list is empty")]
    Empty,
    #[error("no root: every vertex has a parent")]
    NoRoot,
    #[error("multiple roots: vertices {first} and {second} have no parent")]
    MultipleRoots { first: Vertex, second: Vertex },
    #[error("vertex {vertex} has parent {parent}, out of range for {count} vertices")]
    ParentOutOfRange {
        vertex: Vertex,
        parent: Vertex,
        count: usize,
    },
    #[error("cycle through vertex {vertex}: it does not reach the root")]
    Cycle { vertex: Vertex },
    #[error("vertex {vertex} out of range for {count} vertices")]
    InvalidVertex { vertex: Vertex, count: usize },
    #[error("fanout at generation {generation} is 0; every fanout must be at least 1")]
    ZeroFanout { generation: usize },
    #[error("classic Tyler fanout 2^{height}+1 does not fit in 64 bits")]
    FanoutOverflow { height: usize },
    #[error("tree would have {predicted} vertices, above the guard of {guard}")]
    TooLarge { predicted: BigUint, guard: u64 },
}

/// A validated rooted tree. Children lists are sorted by id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    root: Vertex,
    parent: Vec<Option<Vertex>>,
    children: Vec<Vec<Vertex>>,
    depth: Vec<usize>,
}

impl RootedTree {
    /// Builds and validates a tree where vertex `i` has parent `parents[i]`.
    pub fn from_parents(parents: &[Option<Vertex>]) -> Result<Self, TreeError> {
        let count = parents.len();
        if count == 0 {
            return Err(TreeError::Empty);
        }
        let mut root = None;
        for (vertex, p) in parents.iter().enumerate() {
            match *p {
                Some(parent) if parent >= count => {
                    return Err(TreeError::ParentOutOfRange {
                        vertex,
                        parent,
                        count,
                    })
                }
                Some(_) => {}
                None => match root {
                    None => root = Some(vertex),
                    Some(first) => {
                        return Err(TreeError::MultipleRoots {
                            first,
                            second: vertex,
                        })
                    }
                },
            }
        }
        let root = root.ok_or(TreeError::NoRoot)?;

        let mut children = vec![Vec::new(); count];
        for (vertex, p) in parents.iter().enumerate() {
            if let Some(parent) = *p {
                children[parent].push(vertex);
            }
        }

        let mut depth = vec![usize::MAX; count];
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &c in &children[v] {
                depth[c] = depth[v] + 1;
                queue.push_back(c);
            }
        }
        if let Some(vertex) = depth.iter().position(|&d| d == usize::MAX) {
            return Err(TreeError::Cycle { vertex });
        }

        Ok(RootedTree {
            root,
            parent: parents.to_vec(),
            children,
            depth,
        })
    }

    /// Undirected path `0 - 1 - ... - (n-1)` rooted at 0.
    pub fn path(n: usize) -> Self {
        assert!(n > 0);
        let parents: Vec<_> = (0..n).map(|i| i.checked_sub(1)).collect();
        Self::from_parents(&parents).expect("a path is a tree")
    }

    /// Root 0 with `leaves` children.
    pub fn star(leaves: usize) -> Self {
        let parents: Vec<_> = std::iter::once(None)
            .chain((0..leaves).map(|_| Some(0)))
            .collect();
        Self::from_parents(&parents).expect("a star is a tree")
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.parent[v]
    }

    pub fn parents(&self) -> &[Option<Vertex>] {
        &self.parent
    }

    pub fn children(&self, v: Vertex) -> &[Vertex] {
        &self.children[v]
    }

    pub fn depth(&self, v: Vertex) -> usize {
        self.depth[v]
    }

    pub fn height(&self) -> usize {
        self.depth.iter().copied().max().unwrap_or(0)
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.len()
    }

    /// Undirected degree.
    pub fn degree(&self, v: Vertex) -> usize {
        self.children[v].len() + usize::from(self.parent[v].is_some())
    }

    /// Undirected neighbours: parent first, then children in id order.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.parent[v]
            .into_iter()
            .chain(self.children[v].iter().copied())
    }

    /// Vertices of undirected degree 1, ascending.
    pub fn leaves(&self) -> Vec<Vertex> {
        self.vertices().filter(|&v| self.degree(v) == 1).collect()
    }

    /// Breadth-first order from the root, children visited by id.
    pub fn bfs_order(&self) -> Vec<Vertex> {
        let mut order = Vec::with_capacity(self.len());
        order.push(self.root);
        let mut i = 0;
        while i < order.len() {
            order.extend_from_slice(&self.children[order[i]]);
            i += 1;
        }
        order
    }

    /// `generations()[k]` holds the vertices at depth `k`, ascending.
    pub fn generations(&self) -> Vec<Vec<Vertex>> {
        let mut gens = vec![Vec::new(); self.height() + 1];
        for v in self.vertices() {
            gens[self.depth[v]].push(v);
        }
        gens
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), TreeError> {
        if v < self.len() {
            Ok(())
        } else {
            Err(TreeError::InvalidVertex {
                vertex: v,
                count: self.len(),
            })
        }
    }

    /// Lowest common ancestor by synchronized upward walks.
    pub fn lca(&self, mut u: Vertex, mut v: Vertex) -> Vertex {
        while self.depth[u] > self.depth[v] {
            u = self.parent[u].expect("non-root has a parent");
        }
        while self.depth[v] > self.depth[u] {
            v = self.parent[v].expect("non-root has a parent");
        }
        while u != v {
            u = self.parent[u].expect("non-root has a parent");
            v = self.parent[v].expect("non-root has a parent");
        }
        u
    }

    pub fn distance(&self, u: Vertex, v: Vertex) -> usize {
        self.depth[u] + self.depth[v] - 2 * self.depth[self.lca(u, v)]
    }

    /// The unique simple path from `u` to `v`, both included.
    pub fn path_between(&self, u: Vertex, v: Vertex) -> Result<Vec<Vertex>, TreeError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let top = self.lca(u, v);
        let mut path = Vec::with_capacity(self.distance(u, v) + 1);
        let mut x = u;
        while x != top {
            path.push(x);
            x = self.parent[x].expect("below the lca");
        }
        path.push(top);
        let start = path.len();
        let mut y = v;
        while y != top {
            path.push(y);
            y = self.parent[y].expect("below the lca");
        }
        path[start..].reverse();
        Ok(path)
    }

    /// Distances from `source` to every vertex in the underlying undirected tree.
    pub fn distances_from(&self, source: Vertex) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.len()];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn eccentricity(&self, v: Vertex) -> usize {
        self.distances_from(v).into_iter().max().unwrap_or(0)
    }

    /// Center and radius of the underlying undirected tree, found from the
    /// midpoint of a diameter. The current root plays no role.
    pub fn center_and_radius(&self) -> (Vec<Vertex>, usize) {
        let farthest = |dist: &[usize]| {
            // Lowest id among the farthest vertices, for reproducibility.
            let max = *dist.iter().max().expect("non-empty");
            dist.iter().position(|&d| d == max).expect("max exists")
        };
        let a = farthest(&self.distances_from(self.root));
        let b = farthest(&self.distances_from(a));
        let diameter = self.path_between(a, b).expect("valid vertices");
        let d = diameter.len() - 1;
        let radius = d.div_ceil(2);
        let mut center = if d.is_multiple_of(2) {
            vec![diameter[d / 2]]
        } else {
            vec![diameter[d / 2], diameter[d / 2 + 1]]
        };
        center.sort_unstable();
        (center, radius)
    }

    /// The same vertex set and edges, rooted at `new_root`. Ids are kept.
    pub fn reroot(&self, new_root: Vertex) -> Result<RootedTree, TreeError> {
        self.check_vertex(new_root)?;
        let mut parents = vec![None; self.len()];
        let mut seen = vec![false; self.len()];
        seen[new_root] = true;
        let mut queue = VecDeque::from([new_root]);
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    parents[w] = Some(v);
                    queue.push_back(w);
                }
            }
        }
        RootedTree::from_parents(&parents)
    }

    /// `(parent, child)` pairs in child-id order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices()
            .filter_map(|v| self.parent[v].map(|p| (p, v)))
    }
}

pub fn build_from_parent_list(parents: &[Option<Vertex>]) -> Result<RootedTree, TreeError> {
    RootedTree::from_parents(parents)
}

/// Per-generation child counts: every vertex at depth `j` gets `fanout[j]`
/// children; the height is `fanout.len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TylerSpec {
    fanout: Vec<u64>,
}

impl TylerSpec {
    pub fn new(fanout: Vec<u64>) -> Result<Self, TreeError> {
        if let Some(generation) = fanout.iter().position(|&f| f == 0) {
            return Err(TreeError::ZeroFanout { generation });
        }
        Ok(TylerSpec { fanout })
    }

    /// The Tyler tree of height `n`: fanout `2^(n-j) + 1` at generation `j`.
    pub fn classic(n: usize) -> Result<Self, TreeError> {
        if n >= 64 {
            return Err(TreeError::FanoutOverflow { height: n });
        }
        Ok(TylerSpec {
            fanout: (0..n).map(|j| (1u64 << (n - j)) + 1).collect(),
        })
    }

    /// Every internal vertex gets `arity` children, down to depth `height`.
    pub fn complete(arity: u64, height: usize) -> Result<Self, TreeError> {
        Self::new(vec![arity; height])
    }

    pub fn height(&self) -> usize {
        self.fanout.len()
    }

    pub fn fanout(&self) -> &[u64] {
        &self.fanout
    }

    /// `generation_sizes()[k]` is the product of the first `k` fanouts.
    pub fn generation_sizes(&self) -> Vec<BigUint> {
        let mut sizes = vec![BigUint::from(1u32)];
        for &f in &self.fanout {
            let next = sizes.last().expect("non-empty") * f;
            sizes.push(next);
        }
        sizes
    }

    pub fn predicted_vertex_count(&self) -> BigUint {
        self.generation_sizes().into_iter().sum()
    }
}

/// Materializes `spec` with breadth-first ids (root 0).
pub fn build_tyler(spec: &TylerSpec, size_guard: u64) -> Result<RootedTree, TreeError> {
    let predicted = spec.predicted_vertex_count();
    if predicted > BigUint::from(size_guard) {
        return Err(TreeError::TooLarge {
            predicted,
            guard: size_guard,
        });
    }
    let total: usize = predicted.try_into().expect("bounded by the guard");
    let mut parents = Vec::with_capacity(total);
    parents.push(None);
    let mut frontier = 0..1;
    for &f in spec.fanout() {
        let start = parents.len();
        for v in frontier {
            parents.extend(std::iter::repeat_n(Some(v), f as usize));
        }
        frontier = start..parents.len();
    }
    RootedTree::from_parents(&parents)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TylerCount {
    /// `1 + sum_{j=0}^{n-1} prod_{k=n-j}^{n} (2^k + 1)`.
    pub vertices: BigUint,
    /// `2^n + 1`: copies of the height `n-1` Tyler tree hanging off the root.
    pub subtree_multiplicity: BigUint,
}

/// Exact vertex count of the classic Tyler tree of height `n`.
pub fn tyler_vertex_count(n: u32) -> TylerCount {
    let one = BigUint::from(1u32);
    let term = |k: u32| (BigUint::from(1u32) << k) + 1u32;
    let mut vertices = one.clone();
    for j in 0..n {
        let product = ((n - j)..=n).fold(one.clone(), |acc, k| acc * term(k));
        vertices += product;
    }
    TylerCount {
        vertices,
        subtree_multiplicity: term(n),
    }
}
