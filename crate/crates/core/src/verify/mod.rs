//! Mechanical checks of the structural lemmas and class theorems, exhaustive
//! sweeps over small trees and unicyclic graphs, and counterexample search
//! among graphs with at least two independent cycles.

mod checks;
mod search;
mod sweep;

pub use checks::{
    check_cyclic_sequence, check_diametrical_lemmas, check_edge_lipschitz, check_inequality_claim,
    cycle_part, diametrical_lemmas, eccentricity_inequality, edge_lipschitz, inequality_claim,
    verify_main_inequality, Analysis, InequalityClaim,
};
pub use search::{
    family_instances, search_counterexample, FamilyInstance, Finding, SearchConfig, SearchSummary,
    Strategy,
};
pub use sweep::{
    sweep_class, sweep_class_with_cap, tree_checks, unicyclic_checks, SweepSummary, TreeExtremes,
};

use serde::Serialize;

/// Result of one check on one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub check_name: String,
    /// graph6 string of the instance, or the parameter tuple for
    /// non-graph checks.
    pub instance: String,
    pub passed: bool,
    /// Offending vertices, edges or values when `passed` is false.
    pub detail: String,
}
