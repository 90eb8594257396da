//! Exact backtracking search for long-repetition-free colorings.
//!
//! Vertices are colored in breadth-first order from the root, so the colored
//! set is always a connected subtree and the newest vertex is one of its
//! leaves. Any long square created by the newest assignment therefore lies on
//! a path starting at that vertex, and only those paths are re-checked.

use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::coloring::{verify_lrf, Coloring, ColoringError};
use crate::trees::{RootedTree, Vertex};
use crate::words::is_long_square;

pub const DEFAULT_NODE_LIMIT: u64 = 100_000_000;
/// Largest `k^n` the brute-force census will enumerate.
pub const CENSUS_GUARD: u64 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("search needs at least 2 colors, got {k}")]
    TooFewColors { k: u8 },
    #[error("census over {k}^{n} colorings exceeds the guard of {CENSUS_GUARD}")]
    CensusTooLarge { k: u8, n: usize },
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    /// A verified coloring; the root has color 0.
    Found {
        coloring: Coloring,
        nodes_explored: u64,
    },
    /// No long-repetition-free coloring with `k` colors exists.
    Exhausted { nodes_explored: u64 },
    /// Inconclusive: the node budget ran out.
    LimitReached { nodes_explored: u64 },
}

impl SearchOutcome {
    pub fn nodes_explored(&self) -> u64 {
        match *self {
            SearchOutcome::Found { nodes_explored, .. }
            | SearchOutcome::Exhausted { nodes_explored }
            | SearchOutcome::LimitReached { nodes_explored } => nodes_explored,
        }
    }
}

impl fmt::Display for SearchOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchOutcome::Found { nodes_explored, .. } => {
                write!(f, "found after {nodes_explored} assignments")
            }
            SearchOutcome::Exhausted { nodes_explored } => write!(f, "unsat {nodes_explored}"),
            SearchOutcome::LimitReached { nodes_explored } => {
                write!(f, "limit-reached {nodes_explored}")
            }
        }
    }
}

const UNCOLORED: u8 = u8::MAX;

/// Whether every path that starts at `v` and stays inside the colored part
/// is free of a long square that begins at `v`. With the rest of the colored
/// part already long-repetition-free, this decides the extended coloring.
pub(crate) fn newest_vertex_accepts(tree: &RootedTree, colors: &[u8], v: Vertex) -> bool {
    let mut word: Vec<u8> = Vec::new();
    let mut stack = vec![(v, usize::MAX, 0usize)];
    while let Some((x, from, len)) = stack.pop() {
        word.truncate(len);
        word.push(colors[x]);
        if is_long_square(&word) {
            return false;
        }
        for y in tree.neighbors(x) {
            if y != from && colors[y] != UNCOLORED {
                stack.push((y, x, len + 1));
            }
        }
    }
    true
}

/// Depth-first search over assignments in breadth-first vertex order, with
/// the root pinned to color 0. Each color tried counts as one node.
pub fn search_lrf_coloring(
    tree: &RootedTree,
    k: u8,
    node_limit: u64,
) -> Result<SearchOutcome, SearchError> {
    if k < 2 {
        return Err(SearchError::TooFewColors { k });
    }
    let order = tree.bfs_order();
    let n = order.len();
    let mut colors = vec![UNCOLORED; n];
    colors[order[0]] = 0;
    let mut nodes_explored = 1u64;
    let mut next = vec![0u8; n];
    let mut idx = 1;
    while idx < n {
        let v = order[idx];
        if next[idx] == k {
            next[idx] = 0;
            colors[v] = UNCOLORED;
            idx -= 1;
            if idx == 0 {
                return Ok(SearchOutcome::Exhausted { nodes_explored });
            }
            continue;
        }
        if nodes_explored >= node_limit {
            return Ok(SearchOutcome::LimitReached { nodes_explored });
        }
        colors[v] = next[idx];
        next[idx] += 1;
        nodes_explored += 1;
        if newest_vertex_accepts(tree, &colors, v) {
            idx += 1;
        }
    }
    let coloring = Coloring::new(colors, k)?;
    let certificate = verify_lrf(tree, &coloring)?;
    assert!(
        certificate.is_valid(),
        "search produced a coloring that fails verification"
    );
    Ok(SearchOutcome::Found {
        coloring,
        nodes_explored,
    })
}

/// Number of long-repetition-free colorings among all `k^n` assignments.
pub fn brute_force_census(tree: &RootedTree, k: u8) -> Result<u64, SearchError> {
    if k < 2 {
        return Err(SearchError::TooFewColors { k });
    }
    let n = tree.len();
    let total = u64::from(k)
        .checked_pow(n as u32)
        .filter(|&t| t <= CENSUS_GUARD)
        .ok_or(SearchError::CensusTooLarge { k, n })?;
    let count = (0..total)
        .into_par_iter()
        .filter(|&index| {
            let mut rest = index;
            let colors = (0..n)
                .map(|_| {
                    let c = (rest % u64::from(k)) as u8;
                    rest /= u64::from(k);
                    c
                })
                .collect();
            let coloring = Coloring::new(colors, k).expect("colors below k");
            verify_lrf(tree, &coloring).expect("sizes match").is_valid()
        })
        .count();
    Ok(count as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::random_tree;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn paths_and_stars() {
        for n in [1, 5, 20] {
            let t = RootedTree::path(n);
            let SearchOutcome::Found { coloring, .. } =
                search_lrf_coloring(&t, 2, DEFAULT_NODE_LIMIT).unwrap()
            else {
                panic!("paths are 2-colorable");
            };
            assert!(verify_lrf(&t, &coloring).unwrap().is_valid());
            assert_eq!(coloring.color(0), 0);
        }
        assert!(matches!(
            search_lrf_coloring(&RootedTree::star(3), 2, 10).unwrap(),
            SearchOutcome::Found { .. }
        ));
    }

    #[test]
    fn limit_is_inconclusive() {
        let t = RootedTree::path(20);
        assert_eq!(
            search_lrf_coloring(&t, 2, 5).unwrap(),
            SearchOutcome::LimitReached { nodes_explored: 5 }
        );
    }

    #[test]
    fn errors() {
        let t = RootedTree::path(3);
        assert_eq!(
            search_lrf_coloring(&t, 1, 10),
            Err(SearchError::TooFewColors { k: 1 })
        );
        assert_eq!(
            brute_force_census(&RootedTree::path(21), 2),
            Err(SearchError::CensusTooLarge { k: 2, n: 21 })
        );
    }

    #[test]
    fn census_examples() {
        assert_eq!(brute_force_census(&RootedTree::path(3), 2).unwrap(), 8);
        assert_eq!(brute_force_census(&RootedTree::path(6), 2).unwrap(), 56);
    }

    #[test]
    fn deterministic() {
        let t = RootedTree::path(40);
        assert_eq!(
            search_lrf_coloring(&t, 2, DEFAULT_NODE_LIMIT).unwrap(),
            search_lrf_coloring(&t, 2, DEFAULT_NODE_LIMIT).unwrap()
        );
    }

    /// Induced subtree on the vertices with a color, with its coloring.
    fn colored_part(tree: &RootedTree, colors: &[u8]) -> (RootedTree, Coloring) {
        let kept: Vec<Vertex> = tree
            .vertices()
            .filter(|&v| colors[v] != UNCOLORED)
            .collect();
        let index = |v: Vertex| kept.iter().position(|&x| x == v);
        let parents: Vec<_> = kept
            .iter()
            .map(|&v| tree.parent(v).and_then(index))
            .collect();
        let sub = RootedTree::from_parents(&parents).unwrap();
        let c = Coloring::binary(kept.iter().map(|&v| colors[v]).collect()).unwrap();
        (sub, c)
    }

    #[test]
    fn incremental_check_matches_full_verification() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let n = rng.gen_range(1..=11);
            let tree = random_tree(&mut rng, n);
            let order = tree.bfs_order();
            // Walk every prefix extension reachable through valid prefixes.
            let mut frontier = vec![{
                let mut c = vec![UNCOLORED; n];
                c[order[0]] = 0;
                c
            }];
            for &v in &order[1..] {
                let mut next = Vec::new();
                for prefix in &frontier {
                    for color in 0..2 {
                        let mut colors = prefix.clone();
                        colors[v] = color;
                        let fast = newest_vertex_accepts(&tree, &colors, v);
                        let (sub, c) = colored_part(&tree, &colors);
                        let full = verify_lrf(&sub, &c).unwrap().is_valid();
                        assert_eq!(fast, full);
                        if full {
                            next.push(colors);
                        }
                    }
                }
                frontier = next;
            }
        }
    }

    #[test]
    fn complement_symmetry_of_found_colorings() {
        let t = RootedTree::path(12);
        let SearchOutcome::Found { coloring, .. } =
            search_lrf_coloring(&t, 2, DEFAULT_NODE_LIMIT).unwrap()
        else {
            panic!()
        };
        assert!(verify_lrf(&t, &coloring.permuted(&[1, 0]))
            .unwrap()
            .is_valid());
    }
}
