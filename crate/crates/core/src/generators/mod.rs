//! Graph families, seeded random generators, exhaustive enumerators, tree
//! decoration and the closed-form difference formulas for the two
//! multicyclic families.

mod canon;
mod decorate;
mod enumerate;
mod formulas;

pub use canon::{canonical_form, CanonicalForm};
pub use decorate::{decorate_tree, TreeDecoration};
pub use enumerate::{
    enumerate_bicyclic, enumerate_bicyclic_with_cap, enumerate_free_trees,
    enumerate_free_trees_with_cap, enumerate_unicyclic, enumerate_unicyclic_with_cap, FreeTrees,
    BICYCLIC_CAP, FREE_TREE_CAP, UNICYCLIC_CAP,
};
pub use formulas::{bicyclic_delta_formula, multicyclic_delta_formula, RationalValue};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `P_n`: `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidArgument("path needs n >= 1".into()));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// `C_n` on `0..n` in cyclic order.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument("cycle needs n >= 3".into()));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `K_{1,n-1}` with center 0.
pub fn star(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidArgument("star needs n >= 2".into()));
    }
    Graph::from_edges(n, (1..n).map(|i| (0, i)))
}

/// Decodes a Prüfer sequence over `0..seq.len() + 2` into a labeled tree.
pub fn tree_from_prufer(seq: &[usize]) -> Result<Graph> {
    let n = seq.len() + 2;
    if let Some(&bad) = seq.iter().find(|&&x| x >= n) {
        return Err(Error::VertexOutOfRange { vertex: bad, n });
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut g = Graph::empty(n);
    let mut leaves: std::collections::BTreeSet<usize> =
        (0..n).filter(|&v| degree[v] == 1).collect();
    for &x in seq {
        let leaf = leaves.pop_first().expect("a Prüfer step always has a leaf");
        g.add_edge(leaf, x)?;
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let a = leaves.pop_first().expect("two vertices remain");
    let b = leaves.pop_first().expect("two vertices remain");
    g.add_edge(a, b)?;
    Ok(g)
}

fn random_prufer_tree(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    match n {
        0 => Graph::empty(0),
        1 => Graph::empty(1),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
            tree_from_prufer(&seq).expect("sequence entries are in range")
        }
    }
}

/// Uniform random labeled tree on `n` vertices (random Prüfer sequence).
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidArgument("random_tree needs n >= 1".into()));
    }
    Ok(random_prufer_tree(n, &mut rng_for(seed)))
}

/// Cycle `C_girth` on `0..girth` with a random forest hanging off it.
///
/// A random Prüfer tree is drawn on `n - girth + 1` nodes where node 0 stands
/// for the whole cycle; each edge at node 0 is then attached to a uniformly
/// chosen cycle vertex.
pub fn random_unicyclic(n: usize, girth: usize, seed: u64) -> Result<Graph> {
    if girth < 3 || girth > n {
        return Err(Error::InvalidArgument(format!(
            "girth must satisfy 3 <= g <= n, got g = {girth}, n = {n}"
        )));
    }
    let mut rng = rng_for(seed);
    let mut g = cycle(girth)?;
    let extra = n - girth;
    if extra == 0 {
        return Ok(g);
    }
    for _ in 0..extra {
        g.add_vertex();
    }
    let forest = random_prufer_tree(extra + 1, &mut rng);
    let map = |node: usize| girth + node - 1;
    for (a, b) in forest.edges() {
        if a == 0 {
            let anchor = rng.random_range(0..girth);
            g.add_edge(anchor, map(b))?;
        } else {
            g.add_edge(map(a), map(b))?;
        }
    }
    Ok(g)
}

/// Random connected graph: a random tree plus `extra_edges` distinct random
/// chords (capped by the number of available non-edges).
pub fn random_connected(n: usize, extra_edges: usize, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidArgument(
            "random_connected needs n >= 1".into(),
        ));
    }
    let mut rng = rng_for(seed);
    let mut g = random_prufer_tree(n, &mut rng);
    let available = n * (n - 1) / 2 - g.m();
    let target = extra_edges.min(available);
    let mut added = 0;
    while added < target {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u != v && !g.has_edge(u, v) {
            g.add_edge(u, v)?;
            added += 1;
        }
    }
    Ok(g)
}
