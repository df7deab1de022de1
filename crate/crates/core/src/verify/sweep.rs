use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use super::checks::{
    cycle_part, diametrical_lemmas, eccentricity_inequality, edge_lipschitz, inequality_claim,
    Analysis, InequalityClaim,
};
use super::CheckOutcome;
use crate::error::{Error, Result};
use crate::generators::{
    decorate_tree, enumerate_free_trees_with_cap, enumerate_unicyclic_with_cap, path, star,
};
use crate::generators::{FREE_TREE_CAP, UNICYCLIC_CAP};
use crate::graph::{ClassTag, Graph};
use crate::indices::{full_report, Sign};

/// Extremal Zagreb-Fermat values over all trees of one order, next to the
/// values of the star and the path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeExtremes {
    pub n: usize,
    pub f1_min: u64,
    pub f1_max: u64,
    pub f2_min: u64,
    pub f2_max: u64,
    pub star_f1: u64,
    pub star_f2: u64,
    pub path_f1: u64,
    pub path_f2: u64,
}

impl TreeExtremes {
    pub fn attained_by_star_and_path(&self) -> bool {
        self.f1_min == self.star_f1
            && self.f2_min == self.star_f2
            && self.f1_max == self.path_f1
            && self.f2_max == self.path_f2
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub class: ClassTag,
    pub n_min: usize,
    pub n_max: usize,
    pub instance_count: usize,
    pub failures: Vec<CheckOutcome>,
    /// graph6 strings of instances with `n*F2 = m*F1`.
    pub equality_instances: Vec<String>,
    /// Per-order extremes (trees with `n >= 3` only).
    pub extremes: Vec<TreeExtremes>,
    /// True when the sweep stopped at the first failing order.
    pub aborted: bool,
}

impl SweepSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// All per-instance checks for a tree.
pub fn tree_checks(a: &Analysis) -> Result<Vec<CheckOutcome>> {
    let dec = decorate_tree(&a.graph)?;
    Ok(vec![
        edge_lipschitz(a),
        diametrical_lemmas(a, &dec),
        inequality_claim(a, InequalityClaim::HoldsWithPathEquality),
        eccentricity_inequality(a),
    ])
}

/// All per-instance checks for a unicyclic graph.
pub fn unicyclic_checks(a: &Analysis) -> Result<Vec<CheckOutcome>> {
    Ok(vec![
        edge_lipschitz(a),
        cycle_part(a)?,
        inequality_claim(a, InequalityClaim::Holds),
        eccentricity_inequality(a),
    ])
}

struct InstanceResult {
    instance: String,
    outcomes: Vec<CheckOutcome>,
    f1: u64,
    f2: u64,
    zero: bool,
}

fn run_instance(g: &Graph, class: ClassTag) -> Result<InstanceResult> {
    let a = Analysis::new(g)?;
    let outcomes = match class {
        ClassTag::Tree => tree_checks(&a)?,
        _ => unicyclic_checks(&a)?,
    };
    Ok(InstanceResult {
        instance: a.instance(),
        outcomes,
        f1: a.report.f1,
        f2: a.report.f2,
        zero: a.report.comparison == Some(Sign::Zero),
    })
}

pub fn sweep_class(class: ClassTag, n_range: RangeInclusive<usize>) -> Result<SweepSummary> {
    let cap = match class {
        ClassTag::Tree => FREE_TREE_CAP,
        _ => UNICYCLIC_CAP,
    };
    sweep_class_with_cap(class, n_range, cap)
}

/// Runs every applicable check on every isomorphism class of the given
/// class and orders. Orders are processed in increasing order; instances of
/// one order are checked in parallel and merged in enumeration order. The
/// sweep stops after the first order that produced a failure.
pub fn sweep_class_with_cap(
    class: ClassTag,
    n_range: RangeInclusive<usize>,
    cap: usize,
) -> Result<SweepSummary> {
    let (n_min, n_max) = (*n_range.start(), *n_range.end());
    if n_min > n_max {
        return Err(Error::InvalidArgument(format!(
            "empty range {n_min}..{n_max}"
        )));
    }
    let min_order = match class {
        ClassTag::Tree => 2,
        ClassTag::Unicyclic => 3,
        ClassTag::Multicyclic => {
            return Err(Error::InvalidArgument(
                "sweeps cover trees and unicyclic graphs only".into(),
            ));
        }
    };
    if n_min < min_order {
        return Err(Error::InvalidArgument(format!(
            "{class} sweep needs n >= {min_order}"
        )));
    }
    let mut summary = SweepSummary {
        class,
        n_min,
        n_max,
        instance_count: 0,
        failures: Vec::new(),
        equality_instances: Vec::new(),
        extremes: Vec::new(),
        aborted: false,
    };
    for n in n_range {
        let graphs: Vec<Graph> = match class {
            ClassTag::Tree => enumerate_free_trees_with_cap(n, cap)?.collect(),
            _ => enumerate_unicyclic_with_cap(n, cap)?,
        };
        let results: Vec<InstanceResult> = graphs
            .par_iter()
            .map(|g| run_instance(g, class))
            .collect::<Result<_>>()?;
        summary.instance_count += results.len();
        for r in &results {
            if r.zero {
                summary.equality_instances.push(r.instance.clone());
            }
            summary
                .failures
                .extend(r.outcomes.iter().filter(|o| !o.passed).cloned());
        }
        if class == ClassTag::Tree && n >= 3 {
            let star = full_report(&star(n)?)?;
            let path = full_report(&path(n)?)?;
            let ext = TreeExtremes {
                n,
                f1_min: results.iter().map(|r| r.f1).min().unwrap_or(0),
                f1_max: results.iter().map(|r| r.f1).max().unwrap_or(0),
                f2_min: results.iter().map(|r| r.f2).min().unwrap_or(0),
                f2_max: results.iter().map(|r| r.f2).max().unwrap_or(0),
                star_f1: star.f1,
                star_f2: star.f2,
                path_f1: path.f1,
                path_f2: path.f2,
            };
            if !ext.attained_by_star_and_path() {
                summary.failures.push(CheckOutcome {
                    check_name: "tree_extremes".into(),
                    instance: format!("n={n}"),
                    passed: false,
                    detail: format!(
                        "F1 range [{}, {}] vs star {} / path {}; F2 range [{}, {}] vs star {} / path {}",
                        ext.f1_min, ext.f1_max, ext.star_f1, ext.path_f1, ext.f2_min, ext.f2_max, ext.star_f2, ext.path_f2
                    ),
                });
            }
            summary.extremes.push(ext);
        }
        if !summary.failures.is_empty() {
            summary.aborted = n < n_max;
            break;
        }
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_tree_sweep() {
        let s = sweep_class(ClassTag::Tree, 2..=7).unwrap();
        assert!(s.passed(), "{:?}", s.failures);
        assert_eq!(s.instance_count, 1 + 1 + 2 + 3 + 6 + 11);
        assert_eq!(s.equality_instances.len(), 6);
        let five = s.extremes.iter().find(|e| e.n == 5).unwrap();
        assert_eq!((five.f1_min, five.f1_max), (40, 80));
    }

    #[test]
    fn small_unicyclic_sweep() {
        let s = sweep_class(ClassTag::Unicyclic, 3..=6).unwrap();
        assert!(s.passed(), "{:?}", s.failures);
    }

    #[test]
    fn argument_errors() {
        assert!(sweep_class(ClassTag::Tree, 1..=3).is_err());
        assert!(sweep_class(ClassTag::Tree, 2..=13).is_err());
        assert!(sweep_class(ClassTag::Unicyclic, 3..=10).is_err());
        assert!(sweep_class(ClassTag::Multicyclic, 4..=5).is_err());
        #[allow(clippy::reversed_empty_ranges)]
        let empty = 5..=4;
        assert!(sweep_class(ClassTag::Tree, empty).is_err());
    }
}
