//! Fermat eccentricities and Zagreb-Fermat indices of graphs.
//!
//! The crate computes three-terminal Steiner ("Fermat") distances and
//! eccentricities, the vertex- and edge-sum indices built from them, and
//! runs exhaustive checks of the inequality `F2/m <= F1/n` over small trees
//! and unicyclic graphs, plus counterexample searches among graphs with two
//! or more independent cycles.

pub mod distance;
pub mod error;
pub mod fermat;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod indices;
pub mod verify;

pub use distance::{
    all_pairs_distances, bfs_distances, eccentricity2_profile, DistanceMatrix, EccentricityProfile,
};
pub use error::{Error, ErrorKind, Result};
pub use fermat::{
    eps3_oracle, eps3_pruned, eps3_pruned_with_stats, eps3_tree, fermat_distance, fermat_profile,
    fermat_vertices, Eps3Options, FermatProfile, FermatWitness, PairDomain, PruneStats,
};
pub use graph::{parse_edge_list, to_edge_list, ClassTag, Graph, GraphClass};
pub use indices::{
    compare_averages, full_report, zagreb_classic, zagreb_eccentricity, zagreb_fermat, IndexReport,
    Sign,
};
