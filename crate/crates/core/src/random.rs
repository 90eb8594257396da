//! Seeded generators for test corpora.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::coloring::Coloring;
use crate::trees::{RootedTree, Vertex};

/// Random tree on `n` vertices with shuffled ids. Each new vertex attaches
/// either uniformly to an earlier one or to one of the three most recent,
/// which mixes bushy and path-like shapes.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> RootedTree {
    random_bounded_depth_tree(rng, n, usize::MAX)
}

/// Like [`random_tree`], but no vertex is deeper than `max_depth` below the
/// root.
pub fn random_bounded_depth_tree<R: Rng>(rng: &mut R, n: usize, max_depth: usize) -> RootedTree {
    assert!(n > 0);
    assert!(
        n == 1 || max_depth > 0,
        "only a single vertex fits in depth 0"
    );
    let mut parent: Vec<Option<Vertex>> = vec![None];
    let mut depth = vec![0usize];
    for v in 1..n {
        let mut p = if rng.gen_bool(0.5) {
            rng.gen_range(0..v)
        } else {
            rng.gen_range(v.saturating_sub(3)..v)
        };
        // Too deep: hang the vertex off the nearest ancestor with room.
        while depth[p] >= max_depth {
            p = parent[p].expect("the root has depth 0");
        }
        parent.push(Some(p));
        depth.push(depth[p] + 1);
    }
    let mut relabel: Vec<Vertex> = (0..n).collect();
    relabel.shuffle(rng);
    let mut parents = vec![None; n];
    for v in 0..n {
        parents[relabel[v]] = parent[v].map(|p| relabel[p]);
    }
    RootedTree::from_parents(&parents).expect("generated a tree")
}

pub fn random_coloring<R: Rng>(rng: &mut R, n: usize, k: u8) -> Coloring {
    Coloring::new((0..n).map(|_| rng.gen_range(0..k)).collect(), k).expect("colors below k")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn depth_bound_holds() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in [1, 2, 50, 500] {
            let t = random_bounded_depth_tree(&mut rng, n, 4);
            assert_eq!(t.len(), n);
            assert!(t.height() <= 4);
        }
    }

    #[test]
    fn seeded_generation_is_reproducible() {
        let a = random_tree(&mut ChaCha8Rng::seed_from_u64(3), 30);
        let b = random_tree(&mut ChaCha8Rng::seed_from_u64(3), 30);
        assert_eq!(a, b);
    }
}
