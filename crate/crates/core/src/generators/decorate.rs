use std::collections::VecDeque;

use serde::Serialize;

use crate::distance::bfs_distances;
use crate::error::{Error, Result};
use crate::graph::{ClassTag, Graph};

/// A diametrical path `v_0 .. v_d` of a tree together with the subtrees
/// hanging off each path vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeDecoration {
    pub diametrical_path: Vec<usize>,
    /// One or two central vertices, both on the path.
    pub center: Vec<usize>,
    /// `subtree_depths[i]` is the height of the subtree rooted at `v_i` after
    /// the path edges are removed. Entries `0` and `d` are always 0 since the
    /// path endpoints are leaves.
    pub subtree_depths: Vec<u32>,
    /// Maximum of `subtree_depths`.
    pub ell: u32,
    /// Path index of the subtree root each vertex hangs from.
    pub subtree_membership: Vec<usize>,
}

impl TreeDecoration {
    pub fn diameter(&self) -> usize {
        self.diametrical_path.len() - 1
    }
}

fn farthest(row: &[u32]) -> usize {
    (0..row.len())
        .max_by_key(|&v| (row[v], std::cmp::Reverse(v)))
        .expect("non-empty graph")
}

/// Double-BFS construction; ties go to the smallest vertex id.
pub fn decorate_tree(t: &Graph) -> Result<TreeDecoration> {
    let class = t.classify()?;
    if class.tag != ClassTag::Tree {
        return Err(Error::WrongClass {
            expected: ClassTag::Tree,
            found: class.tag,
        });
    }
    let n = t.n();
    let a = farthest(&bfs_distances(t, 0)?);
    let from_a = bfs_distances(t, a)?;
    let b = farthest(&from_a);

    // walk back from b along strictly decreasing distance to a
    let mut path = vec![b];
    let mut cur = b;
    while cur != a {
        cur = t
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&x| from_a[x] + 1 == from_a[cur])
            .expect("tree path exists");
        path.push(cur);
    }
    path.reverse();
    let d = path.len() - 1;
    let center = if d % 2 == 0 {
        vec![path[d / 2]]
    } else {
        vec![path[d / 2], path[d / 2 + 1]]
    };

    let mut membership = vec![usize::MAX; n];
    let mut depth = vec![0u32; n];
    let mut queue = VecDeque::new();
    for (i, &v) in path.iter().enumerate() {
        membership[v] = i;
        queue.push_back(v);
    }
    let mut subtree_depths = vec![0u32; d + 1];
    while let Some(u) = queue.pop_front() {
        for &x in t.neighbors(u) {
            if membership[x] == usize::MAX {
                membership[x] = membership[u];
                depth[x] = depth[u] + 1;
                let slot = &mut subtree_depths[membership[x]];
                *slot = (*slot).max(depth[x]);
                queue.push_back(x);
            }
        }
    }
    let ell = subtree_depths.iter().copied().max().unwrap_or(0);
    Ok(TreeDecoration {
        diametrical_path: path,
        center,
        subtree_depths,
        ell,
        subtree_membership: membership,
    })
}
