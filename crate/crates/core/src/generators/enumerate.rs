//! Exhaustive enumeration of small trees, unicyclic and bicyclic graphs, one
//! representative per isomorphism class.

use std::collections::HashSet;

use super::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const FREE_TREE_CAP: usize = 12;
pub const UNICYCLIC_CAP: usize = 9;
pub const BICYCLIC_CAP: usize = 8;

/// Free trees on `n` vertices as canonical level sequences, in the
/// Wright-Richmond-Odlyzko-McKay order (constant amortized time per tree).
///
/// A level sequence lists vertex depths in preorder; each tree is rooted at
/// its center (at one of the two bicenters, with the heavier half first).
#[derive(Debug, Clone)]
pub struct FreeTrees {
    n: usize,
    layout: Option<Vec<usize>>,
    started: bool,
}

impl FreeTrees {
    fn new(n: usize) -> Self {
        let layout = match n {
            0 => None,
            1 => Some(vec![0]),
            _ => Some((0..=n / 2).chain(1..n.div_ceil(2)).collect()),
        };
        FreeTrees {
            n,
            layout,
            started: false,
        }
    }
}

/// Splits a level sequence into the first subtree of the root (depths
/// shifted up by one) and the rest of the tree including the root.
fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .skip(1)
        .find(|&(i, &x)| i > 1 && x == 1)
        .map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|&x| x - 1).collect();
    let rest = std::iter::once(0)
        .chain(layout[m..].iter().copied())
        .collect();
    (left, rest)
}

/// Next rooted level sequence in reverse lexicographic order, with `p` the
/// position to increment (last non-1 entry when `None`).
fn next_rooted_tree(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] != pred[p] - 1 {
        q -= 1;
    }
    let mut result = pred.to_vec();
    for i in p..result.len() {
        result[i] = result[i - p + q];
    }
    Some(result)
}

fn next_tree(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split_tree(&candidate);
    let left_height = left.iter().copied().max().unwrap_or(0);
    let rest_height = rest.iter().copied().max().unwrap_or(0);
    let mut valid = rest_height >= left_height;
    if valid
        && rest_height == left_height
        && (left.len() > rest.len() || (left.len() == rest.len() && left > rest))
    {
        valid = false;
    }
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut next = next_rooted_tree(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split_tree(&next);
        let new_left_height = new_left.iter().copied().max().unwrap_or(0);
        let len = next.len();
        let suffix_len = new_left_height + 1;
        for (k, slot) in next[len - suffix_len..].iter_mut().enumerate() {
            *slot = k + 1;
        }
    }
    Some(next)
}

pub(crate) fn layout_to_graph(layout: &[usize]) -> Graph {
    let mut g = Graph::empty(layout.len());
    // stack[depth] = most recent vertex at that depth
    let mut stack: Vec<usize> = Vec::new();
    for (i, &depth) in layout.iter().enumerate() {
        stack.truncate(depth);
        if let Some(&parent) = stack.last() {
            g.add_edge(parent, i)
                .expect("level sequences describe simple trees");
        }
        stack.push(i);
    }
    g
}

impl Iterator for FreeTrees {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.n == 1 {
            return self.layout.take().map(|l| layout_to_graph(&l));
        }
        let current = self.layout.take()?;
        let candidate = if self.started {
            next_rooted_tree(&current, None)?
        } else {
            self.started = true;
            current
        };
        let tree = next_tree(candidate)?;
        let g = layout_to_graph(&tree);
        self.layout = Some(tree);
        Some(g)
    }
}

fn check_cap(what: &str, n: usize, min: usize, cap: usize) -> Result<()> {
    if n < min {
        return Err(Error::InvalidArgument(format!(
            "{what} enumeration needs n >= {min}, got {n}"
        )));
    }
    if n > cap {
        return Err(Error::InvalidArgument(format!(
            "{what} enumeration capped at n = {cap}, got {n}"
        )));
    }
    Ok(())
}

pub fn enumerate_free_trees(n: usize) -> Result<FreeTrees> {
    enumerate_free_trees_with_cap(n, FREE_TREE_CAP)
}

pub fn enumerate_free_trees_with_cap(n: usize, cap: usize) -> Result<FreeTrees> {
    check_cap("free-tree", n, 1, cap)?;
    Ok(FreeTrees::new(n))
}

/// Adds one non-edge to every input graph in every possible way and keeps
/// the first representative of each isomorphism class.
fn augment_by_one_edge<'a>(inputs: impl IntoIterator<Item = &'a Graph>) -> Vec<Graph> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in inputs {
        for (u, v) in g.non_edges().collect::<Vec<_>>() {
            let mut h = g.clone();
            h.add_edge(u, v).expect("non-edge");
            if seen.insert(canonical_form(&h)) {
                out.push(h);
            }
        }
    }
    out
}

pub fn enumerate_unicyclic(n: usize) -> Result<Vec<Graph>> {
    enumerate_unicyclic_with_cap(n, UNICYCLIC_CAP)
}

/// Connected graphs with `m = n`, up to isomorphism.
pub fn enumerate_unicyclic_with_cap(n: usize, cap: usize) -> Result<Vec<Graph>> {
    check_cap("unicyclic", n, 3, cap)?;
    let trees: Vec<Graph> = FreeTrees::new(n).collect();
    Ok(augment_by_one_edge(&trees))
}

pub fn enumerate_bicyclic(n: usize) -> Result<Vec<Graph>> {
    enumerate_bicyclic_with_cap(n, BICYCLIC_CAP)
}

/// Connected graphs with `m = n + 1`, up to isomorphism. Deleting any cycle
/// edge of such a graph leaves a connected unicyclic graph, so augmenting
/// the unicyclic classes reaches every class.
pub fn enumerate_bicyclic_with_cap(n: usize, cap: usize) -> Result<Vec<Graph>> {
    check_cap("bicyclic", n, 4, cap)?;
    let unicyclic = augment_by_one_edge(&FreeTrees::new(n).collect::<Vec<_>>());
    Ok(augment_by_one_edge(&unicyclic))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ClassTag;

    #[test]
    fn small_tree_counts() {
        let counts: Vec<usize> = (1..=9)
            .map(|n| enumerate_free_trees(n).unwrap().count())
            .collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47]);
    }

    #[test]
    fn trees_are_trees() {
        for n in 1..=8 {
            for t in enumerate_free_trees(n).unwrap() {
                assert_eq!(t.n(), n);
                assert_eq!(t.classify().unwrap().tag, ClassTag::Tree);
            }
        }
    }

    #[test]
    fn caps() {
        assert!(enumerate_free_trees(13).is_err());
        assert!(enumerate_free_trees_with_cap(13, 13).is_ok());
        assert!(enumerate_free_trees(0).is_err());
        assert!(enumerate_unicyclic(10).is_err());
        assert!(enumerate_unicyclic(2).is_err());
        assert!(enumerate_bicyclic(9).is_err());
    }

    #[test]
    fn unicyclic_small() {
        assert_eq!(enumerate_unicyclic(3).unwrap().len(), 1);
        assert_eq!(enumerate_unicyclic(4).unwrap().len(), 2);
        for g in enumerate_unicyclic(6).unwrap() {
            assert_eq!(g.classify().unwrap().tag, ClassTag::Unicyclic);
        }
    }

    #[test]
    fn bicyclic_small() {
        // K4 minus an edge is the only connected (4, 5) graph
        assert_eq!(enumerate_bicyclic(4).unwrap().len(), 1);
        for g in enumerate_bicyclic(6).unwrap() {
            assert_eq!(g.classify().unwrap().cyclomatic, 2);
        }
    }
}
