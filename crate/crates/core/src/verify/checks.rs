//! Per-instance checks. Every check reports a [`CheckOutcome`]; a failing
//! outcome names the offending vertices or values so it can be re-checked.

use crate::distance::{all_pairs_distances, DistanceMatrix};
use crate::error::{Error, Result};
use crate::fermat::fermat_profile;
use crate::generators::{decorate_tree, TreeDecoration};
use crate::graph::{ClassTag, Graph, GraphClass};
use crate::graph6;
use crate::indices::{report_from_profile, IndexReport, Sign};

use super::CheckOutcome;

/// Everything the checks need about one graph, computed once.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub graph: Graph,
    pub distances: DistanceMatrix,
    pub class: GraphClass,
    pub report: IndexReport,
}

impl Analysis {
    pub fn new(g: &Graph) -> Result<Self> {
        let distances = all_pairs_distances(g)?;
        let profile = fermat_profile(g, &distances, false)?;
        Self::with_profile(g, distances, profile.eps3)
    }

    /// Builds the analysis around an externally supplied profile.
    pub fn with_profile(g: &Graph, distances: DistanceMatrix, eps3: Vec<u32>) -> Result<Self> {
        let class = g.classify()?;
        let report = report_from_profile(g, &distances, eps3, class.tag)?;
        Ok(Analysis {
            graph: g.clone(),
            distances,
            class,
            report,
        })
    }

    pub fn eps3(&self) -> &[u32] {
        &self.report.eps3
    }

    pub fn instance(&self) -> String {
        graph6::encode(&self.graph)
    }
}

fn outcome(name: &str, a: &Analysis, problems: Vec<String>) -> CheckOutcome {
    CheckOutcome {
        check_name: name.to_string(),
        instance: a.instance(),
        passed: problems.is_empty(),
        detail: problems.join("; "),
    }
}

pub fn edge_lipschitz(a: &Analysis) -> CheckOutcome {
    let eps = a.eps3();
    let problems = a
        .graph
        .edges()
        .filter(|&(u, v)| eps[u].abs_diff(eps[v]) > 1)
        .map(|(u, v)| format!("edge {u}-{v}: eps3 {} vs {}", eps[u], eps[v]))
        .collect();
    outcome("edge_lipschitz", a, problems)
}

/// `|eps3(u) - eps3(v)| <= 1` on every edge.
pub fn check_edge_lipschitz(g: &Graph) -> Result<CheckOutcome> {
    Ok(edge_lipschitz(&Analysis::new(g)?))
}

/// Structural lemmas along a decorated diametrical path of a tree:
/// subtree-depth bound, symmetry, monotone descent to the center, the
/// equal/unit-step edge partition, and additivity inside hanging subtrees.
pub fn diametrical_lemmas(a: &Analysis, dec: &TreeDecoration) -> CheckOutcome {
    let eps = a.eps3();
    let path = &dec.diametrical_path;
    let d = dec.diameter();
    let at = |i: usize| eps[path[i]];
    let mut problems = Vec::new();

    for i in 1..d {
        let bound = i.min(d - i) as u32;
        if dec.subtree_depths[i] > bound {
            problems.push(format!(
                "depth bound: l_{i} = {} > {bound}",
                dec.subtree_depths[i]
            ));
        }
    }

    for i in 0..=d {
        if at(i) != at(d - i) {
            problems.push(format!(
                "symmetry: eps3(v_{i}) = {} but eps3(v_{}) = {}",
                at(i),
                d - i,
                at(d - i)
            ));
        }
    }

    // non-increasing by steps of at most one towards the center from both ends
    for i in 0..d / 2 {
        let (outer, inner) = (at(i), at(i + 1));
        if !(inner <= outer && outer <= inner + 1) {
            problems.push(format!(
                "center descent: eps3(v_{i}) = {outer}, eps3(v_{}) = {inner}",
                i + 1
            ));
        }
        let (outer, inner) = (at(d - i), at(d - i - 1));
        if !(inner <= outer && outer <= inner + 1) {
            problems.push(format!(
                "center descent: eps3(v_{}) = {outer}, eps3(v_{}) = {inner}",
                d - i,
                d - i - 1
            ));
        }
    }
    let path_min = (0..=d).map(at).min().unwrap_or(0);
    for &c in &dec.center {
        if eps[c] != path_min {
            problems.push(format!(
                "center {c} has eps3 {} above path minimum {path_min}",
                eps[c]
            ));
        }
    }

    let ell = dec.ell as usize;
    for i in 0..d {
        let diff = at(i).abs_diff(at(i + 1));
        let outer = i < ell || i + ell >= d;
        if outer && diff != 1 {
            problems.push(format!(
                "edge partition: outer edge v_{i}v_{} has difference {diff}",
                i + 1
            ));
        }
        if !outer && diff != 0 {
            problems.push(format!(
                "edge partition: middle edge v_{i}v_{} has difference {diff}",
                i + 1
            ));
        }
    }

    for u in 0..a.graph.n() {
        let i = dec.subtree_membership[u];
        if i == 0 || i == d {
            continue;
        }
        let root = path[i];
        let expected = a.distances.get(u, root) + eps[root];
        if eps[u] != expected {
            problems.push(format!(
                "subtree additivity: vertex {u} under v_{i} has eps3 {} != {expected}",
                eps[u]
            ));
        }
    }
    outcome("diametrical_lemmas", a, problems)
}

pub fn check_diametrical_lemmas(t: &Graph) -> Result<CheckOutcome> {
    let dec = decorate_tree(t)?;
    Ok(diametrical_lemmas(&Analysis::new(t)?, &dec))
}

/// `sum x_i^2 >= sum x_i x_{i+1}` (indices cyclic) for positive integers
/// with cyclic neighbours differing by at most one.
pub fn check_cyclic_sequence(xs: &[u64]) -> Result<CheckOutcome> {
    let len = xs.len();
    if len < 2 {
        return Err(Error::Precondition(
            "cyclic sequence needs at least two terms".into(),
        ));
    }
    if let Some(i) = xs.iter().position(|&x| x == 0) {
        return Err(Error::Precondition(format!("term {i} is not positive")));
    }
    for i in 0..len {
        let (x, y) = (xs[i], xs[(i + 1) % len]);
        if x.abs_diff(y) > 1 {
            return Err(Error::Precondition(format!(
                "terms {i} and {} differ by more than one",
                (i + 1) % len
            )));
        }
    }
    let squares: u128 = xs.iter().map(|&x| u128::from(x) * u128::from(x)).sum();
    let products: u128 = (0..len)
        .map(|i| u128::from(xs[i]) * u128::from(xs[(i + 1) % len]))
        .sum();
    let passed = squares >= products;
    Ok(CheckOutcome {
        check_name: "cyclic_sequence".into(),
        instance: format!("{xs:?}"),
        passed,
        detail: if passed {
            String::new()
        } else {
            format!("sum of squares {squares} < sum of products {products}")
        },
    })
}

/// The cycle part of a unicyclic graph on its own: the sequence of eps3
/// values around the cycle must satisfy the cyclic-sequence inequality.
pub fn cycle_part(a: &Analysis) -> Result<CheckOutcome> {
    let cycle = a.graph.unique_cycle()?;
    let xs: Vec<u64> = cycle.iter().map(|&v| u64::from(a.eps3()[v])).collect();
    let mut out = check_cyclic_sequence(&xs)?;
    out.check_name = "cycle_part".into();
    out.instance = a.instance();
    if !out.passed {
        out.detail = format!("cycle {cycle:?}: {}", out.detail);
    }
    Ok(out)
}

/// What a class-level theorem asserts about the sign of `n*F2 - m*F1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InequalityClaim {
    /// Never positive, and zero exactly on paths.
    HoldsWithPathEquality,
    /// Never positive.
    Holds,
    /// No claim; the sign is only recorded.
    Unclaimed,
}

impl InequalityClaim {
    pub fn for_class(tag: ClassTag) -> Self {
        match tag {
            ClassTag::Tree => InequalityClaim::HoldsWithPathEquality,
            ClassTag::Unicyclic => InequalityClaim::Holds,
            ClassTag::Multicyclic => InequalityClaim::Unclaimed,
        }
    }
}

pub fn inequality_claim(a: &Analysis, claim: InequalityClaim) -> CheckOutcome {
    let sign = a.report.comparison;
    let r = &a.report;
    let values = format!(
        "n={} m={} F1={} F2={} sign={}",
        r.n,
        r.m,
        r.f1,
        r.f2,
        sign.map_or("undefined", Sign::as_str)
    );
    let mut problems = Vec::new();
    match claim {
        InequalityClaim::Unclaimed => {}
        InequalityClaim::Holds | InequalityClaim::HoldsWithPathEquality => {
            if sign == Some(Sign::Positive) {
                problems.push(format!("n*F2 > m*F1 ({values})"));
            }
            if claim == InequalityClaim::HoldsWithPathEquality && sign.is_some() {
                let is_path = a.graph.is_path();
                let zero = sign == Some(Sign::Zero);
                if zero && !is_path {
                    problems.push(format!("equality on a non-path ({values})"));
                }
                if is_path && !zero {
                    problems.push(format!("strict inequality on a path ({values})"));
                }
            }
        }
    }
    let mut out = outcome("main_inequality", a, problems);
    if out.passed {
        out.detail = values;
    }
    out
}

/// Class-appropriate judgement of `F2/m <= F1/n`. Multicyclic inputs always
/// pass; their sign is recorded in the detail.
pub fn verify_main_inequality(g: &Graph) -> Result<CheckOutcome> {
    let a = Analysis::new(g)?;
    if a.graph.m() == 0 {
        return Err(Error::UndefinedComparison);
    }
    Ok(inequality_claim(
        &a,
        InequalityClaim::for_class(a.class.tag),
    ))
}

/// Same claim as [`verify_main_inequality`] but for an explicitly chosen
/// claim, e.g. to probe multicyclic graphs against the tree statement.
pub fn check_inequality_claim(g: &Graph, claim: InequalityClaim) -> Result<CheckOutcome> {
    Ok(inequality_claim(&Analysis::new(g)?, claim))
}

/// `n*E2 <= m*E1` for the classical eccentricity.
pub fn eccentricity_inequality(a: &Analysis) -> CheckOutcome {
    let r = &a.report;
    let problems = match r.eccentricity_comparison() {
        Some(Sign::Positive) => vec![format!(
            "n*E2 > m*E1 (n={} m={} E1={} E2={})",
            r.n, r.m, r.e1, r.e2
        )],
        _ => Vec::new(),
    };
    outcome("eccentricity_inequality", a, problems)
}
