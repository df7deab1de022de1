//! Enumerators against independent brute force: Pruefer sequences with
//! rooted-tree codes for trees, all labeled edge subsets with a
//! permutation-minimal code for graphs with cycles.

use std::collections::{BTreeSet, HashSet};

use fermat_zagreb::generators::{
    enumerate_bicyclic, enumerate_free_trees, enumerate_unicyclic, tree_from_prufer,
};
use fermat_zagreb::{ClassTag, Graph};

fn rooted_code(g: &Graph, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_code(g, w, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Minimum rooted code over all roots: an isomorphism invariant that is
/// complete for trees.
fn tree_code(g: &Graph) -> String {
    (0..g.n())
        .map(|r| rooted_code(g, r, usize::MAX))
        .min()
        .unwrap()
}

fn pruefer_classes(n: usize) -> BTreeSet<String> {
    if n == 1 {
        return [tree_code(&Graph::empty(1))].into();
    }
    if n == 2 {
        return [tree_code(&Graph::from_edges(2, [(0, 1)]).unwrap())].into();
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    let mut out = BTreeSet::new();
    let mut seq = vec![0usize; len];
    for mut code in 0..total {
        for s in seq.iter_mut() {
            *s = code % n;
            code /= n;
        }
        out.insert(tree_code(&tree_from_prufer(&seq).unwrap()));
    }
    out
}

#[test]
fn free_trees_match_pruefer_classes() {
    for n in 1..=8 {
        let enumerated: Vec<String> = enumerate_free_trees(n)
            .unwrap()
            .map(|t| tree_code(&t))
            .collect();
        let distinct: BTreeSet<String> = enumerated.iter().cloned().collect();
        assert_eq!(
            distinct.len(),
            enumerated.len(),
            "duplicate tree at n = {n}"
        );
        assert_eq!(distinct, pruefer_classes(n), "n = {n}");
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    a * n + b
}

fn brute_code(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let n = g.n();
    perms
        .iter()
        .map(|p| {
            g.edges()
                .fold(0u64, |acc, (u, v)| acc | 1 << pair_index(n, p[u], p[v]))
        })
        .min()
        .unwrap()
}

/// Isomorphism classes of connected graphs with `n` vertices and `m` edges.
fn brute_classes(n: usize, m: usize) -> HashSet<u64> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let perms = permutations(n);
    let mut out = HashSet::new();
    for mask in 0u32..(1 << pairs.len()) {
        if mask.count_ones() as usize != m {
            continue;
        }
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        let g = Graph::from_edges(n, edges).unwrap();
        if g.is_connected() {
            out.insert(brute_code(&g, &perms));
        }
    }
    out
}

fn check_against_brute(graphs: Vec<Graph>, n: usize, m: usize, tag: ClassTag) {
    let perms = permutations(n);
    let codes: Vec<u64> = graphs
        .iter()
        .map(|g| {
            assert_eq!((g.n(), g.m()), (n, m));
            assert_eq!(g.classify().unwrap().tag, tag);
            brute_code(g, &perms)
        })
        .collect();
    let distinct: HashSet<u64> = codes.iter().copied().collect();
    assert_eq!(distinct.len(), codes.len(), "duplicate class at n = {n}");
    assert_eq!(distinct, brute_classes(n, m), "n = {n}");
}

#[test]
fn unicyclic_classes_match_brute_force() {
    for n in 3..=6 {
        check_against_brute(enumerate_unicyclic(n).unwrap(), n, n, ClassTag::Unicyclic);
    }
}

#[test]
fn bicyclic_classes_match_brute_force() {
    for n in 4..=6 {
        check_against_brute(
            enumerate_bicyclic(n).unwrap(),
            n,
            n + 1,
            ClassTag::Multicyclic,
        );
    }
}

#[test]
fn class_counts() {
    let uni: Vec<usize> = (3..=9)
        .map(|n| enumerate_unicyclic(n).unwrap().len())
        .collect();
    assert_eq!(uni, [1, 2, 5, 13, 33, 89, 240]);
    let bi: Vec<usize> = (4..=8)
        .map(|n| enumerate_bicyclic(n).unwrap().len())
        .collect();
    assert_eq!(bi, [1, 5, 19, 67, 236]);
    let trees: Vec<usize> = (1..=12)
        .map(|n| enumerate_free_trees(n).unwrap().count())
        .collect();
    assert_eq!(trees, [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]);
}
