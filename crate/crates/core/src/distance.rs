//! Breadth-first distances, all-pairs matrix and classical eccentricity.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

const UNREACHED: u32 = u32::MAX;

fn bfs_into(g: &Graph, source: usize, row: &mut [u32], queue: &mut VecDeque<usize>) {
    row.fill(UNREACHED);
    row[source] = 0;
    queue.clear();
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        let next = row[u] + 1;
        for &v in g.neighbors(u) {
            if row[v] == UNREACHED {
                row[v] = next;
                queue.push_back(v);
            }
        }
    }
}

/// Hop distances from `source` to every vertex of a connected graph.
pub fn bfs_distances(g: &Graph, source: usize) -> Result<Vec<u32>> {
    if source >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: source,
            n: g.n(),
        });
    }
    let mut row = vec![0; g.n()];
    bfs_into(g, source, &mut row, &mut VecDeque::new());
    if row.contains(&UNREACHED) {
        return Err(Error::Disconnected);
    }
    Ok(row)
}

/// Dense `n x n` hop-distance matrix, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.data[u * self.n + v]
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }
}

/// One BFS per vertex. Rows are filled in parallel; the result does not
/// depend on the thread count.
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.n();
    let mut data = vec![0u32; n * n];
    if n > 0 {
        data.par_chunks_mut(n)
            .enumerate()
            .for_each_init(VecDeque::new, |queue, (u, row)| {
                bfs_into(g, u, row, queue);
            });
    }
    if data.contains(&UNREACHED) {
        return Err(Error::Disconnected);
    }
    Ok(DistanceMatrix { n, data })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EccentricityProfile {
    pub ecc: Vec<u32>,
    pub radius: u32,
    pub diameter: u32,
    pub center: Vec<usize>,
}

/// Classical eccentricity of every vertex, plus radius, diameter and center.
pub fn eccentricity2_profile(d: &DistanceMatrix) -> EccentricityProfile {
    let ecc: Vec<u32> = (0..d.n())
        .map(|u| d.row(u).iter().copied().max().unwrap_or(0))
        .collect();
    let radius = ecc.iter().copied().min().unwrap_or(0);
    let diameter = ecc.iter().copied().max().unwrap_or(0);
    let center = (0..d.n()).filter(|&u| ecc[u] == radius).collect();
    EccentricityProfile {
        ecc,
        radius,
        diameter,
        center,
    }
}
