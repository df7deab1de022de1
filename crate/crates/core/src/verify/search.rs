//! Search for graphs with two or more independent cycles on either side of
//! the average comparison.
//!
//! * `exhaustive-small` checks every connected graph with `m = n + 1` up to
//!   `max_n` vertices;
//! * `family-sweep` walks parameter grids of theta graphs with a pendant
//!   path and of two cycles joined by a path with pendant paths, in order of
//!   increasing vertex count;
//! * `random-walk` climbs from seeded random graphs by edge moves that keep
//!   the graph connected and the cycle rank fixed, preferring larger
//!   `n*F2 - m*F1`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::{enumerate_bicyclic_with_cap, random_connected, BICYCLIC_CAP};
use crate::graph::Graph;
use crate::graph6;
use crate::indices::{full_report, IndexReport, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    ExhaustiveSmall,
    FamilySweep,
    RandomWalk,
}

impl Strategy {
    pub fn as_str(self) -> &'static str {
        match self {
            Strategy::ExhaustiveSmall => "exhaustive-small",
            Strategy::FamilySweep => "family-sweep",
            Strategy::RandomWalk => "random-walk",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive-small" => Ok(Strategy::ExhaustiveSmall),
            "family-sweep" => Ok(Strategy::FamilySweep),
            "random-walk" => Ok(Strategy::RandomWalk),
            _ => Err(Error::InvalidArgument(format!(
                "unknown search strategy {s:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub strategy: Strategy,
    /// Maximum number of graphs evaluated.
    pub budget: usize,
    pub seed: u64,
    /// Largest order for `exhaustive-small`.
    pub max_n: usize,
    /// Enumeration cap for `exhaustive-small`.
    pub cap: usize,
}

impl SearchConfig {
    pub const DEFAULT_BUDGET: usize = 10_000;

    pub fn new(strategy: Strategy) -> Self {
        SearchConfig {
            strategy,
            budget: Self::DEFAULT_BUDGET,
            seed: 0,
            max_n: BICYCLIC_CAP,
            cap: BICYCLIC_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub name: String,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub cyclomatic: usize,
    pub f1: u64,
    pub f2: u64,
    pub e1: u64,
    pub e2: u64,
    pub z1: u64,
    pub z2: u64,
    pub comparison: Sign,
}

impl Finding {
    fn new(name: String, g: &Graph, r: &IndexReport, comparison: Sign) -> Self {
        Finding {
            name,
            graph6: graph6::encode(g),
            n: r.n,
            m: r.m,
            cyclomatic: r.m + 1 - r.n,
            f1: r.f1,
            f2: r.f2,
            e1: r.e1,
            e2: r.e2,
            z1: r.z1,
            z2: r.z2,
            comparison,
        }
    }

    pub fn graph(&self) -> Graph {
        graph6::decode(&self.graph6).expect("findings store valid graph6")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchSummary {
    pub strategy: Strategy,
    pub budget: usize,
    pub seed: u64,
    pub examined: usize,
    /// Instances with `n*F2 > m*F1`: the average inequality fails.
    pub positive: Vec<Finding>,
    /// Instances with `n*F2 < m*F1`: the opposite inequality fails.
    pub negative: Vec<Finding>,
    pub zero_count: usize,
    /// Both directions were found.
    pub complete: bool,
}

struct Collector {
    summary: SearchSummary,
}

impl Collector {
    fn new(cfg: &SearchConfig) -> Self {
        Collector {
            summary: SearchSummary {
                strategy: cfg.strategy,
                budget: cfg.budget,
                seed: cfg.seed,
                examined: 0,
                positive: Vec::new(),
                negative: Vec::new(),
                zero_count: 0,
                complete: false,
            },
        }
    }

    fn record(&mut self, name: String, g: &Graph, r: &IndexReport) {
        self.summary.examined += 1;
        if g.m() < g.n() + 1 {
            return;
        }
        match r.comparison {
            Some(Sign::Positive) => {
                self.summary
                    .positive
                    .push(Finding::new(name, g, r, Sign::Positive))
            }
            Some(Sign::Negative) => {
                self.summary
                    .negative
                    .push(Finding::new(name, g, r, Sign::Negative))
            }
            Some(Sign::Zero) => self.summary.zero_count += 1,
            None => {}
        }
    }

    fn finish(mut self) -> SearchSummary {
        self.summary.complete =
            !self.summary.positive.is_empty() && !self.summary.negative.is_empty();
        self.summary
    }
}

/// Evaluates `graphs` in parallel and records them in input order.
fn record_batch(c: &mut Collector, batch: Vec<(String, Graph)>) -> Result<()> {
    let reports: Vec<IndexReport> = batch
        .par_iter()
        .map(|(_, g)| full_report(g))
        .collect::<Result<_>>()?;
    for ((name, g), r) in batch.iter().zip(&reports) {
        c.record(name.clone(), g, r);
    }
    Ok(())
}

pub fn search_counterexample(cfg: &SearchConfig) -> Result<SearchSummary> {
    match cfg.strategy {
        Strategy::ExhaustiveSmall => exhaustive_small(cfg),
        Strategy::FamilySweep => family_sweep(cfg),
        Strategy::RandomWalk => random_walk(cfg),
    }
}

fn exhaustive_small(cfg: &SearchConfig) -> Result<SearchSummary> {
    let mut c = Collector::new(cfg);
    for n in 4..=cfg.max_n {
        let left = cfg.budget - c.summary.examined;
        if left == 0 {
            break;
        }
        let batch: Vec<(String, Graph)> = enumerate_bicyclic_with_cap(n, cfg.cap)?
            .into_iter()
            .take(left)
            .enumerate()
            .map(|(i, g)| (format!("bicyclic-n{n}-{i}"), g))
            .collect();
        record_batch(&mut c, batch)?;
    }
    Ok(c.finish())
}

/// One member of the parameterized families walked by `family-sweep`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum FamilyInstance {
    /// Paths of `a <= b <= c` edges between two hubs, plus a pendant path of
    /// `tail` edges at core vertex `at`.
    ThetaTail {
        a: usize,
        b: usize,
        c: usize,
        at: usize,
        tail: usize,
    },
    /// Cycles of lengths `a <= b` joined by a path of `bridge` edges (0 means
    /// they share a vertex); pendant paths of `tail_a` and `tail_b` edges hang
    /// from the vertex of each cycle farthest from the bridge.
    Dumbbell {
        a: usize,
        b: usize,
        bridge: usize,
        tail_a: usize,
        tail_b: usize,
    },
}

const THETA_MAX_PATH: usize = 8;
const CYCLE_MAX: usize = 8;
const BRIDGE_MAX: usize = 10;
const FAMILY_MAX_N: usize = 250;
const DUMBBELL_TAILS: [usize; 12] = [0, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144];

fn append_path(g: &mut Graph, from: usize, edges: usize) -> usize {
    let mut cur = from;
    for _ in 0..edges {
        let v = g.add_vertex();
        g.add_edge(cur, v).expect("fresh vertex");
        cur = v;
    }
    cur
}

fn join_by_path(g: &mut Graph, a: usize, b: usize, edges: usize) {
    let last = append_path(g, a, edges - 1);
    g.add_edge(last, b).expect("family paths are simple");
}

/// Appends a cycle of `len` vertices through `at`; returns the vertex
/// opposite to `at`.
fn append_cycle(g: &mut Graph, at: usize, len: usize) -> usize {
    let half = len / 2;
    let far = append_path(g, at, half);
    join_by_path(g, far, at, len - half);
    far
}

impl FamilyInstance {
    pub fn order(&self) -> usize {
        match *self {
            FamilyInstance::ThetaTail { a, b, c, tail, .. } => a + b + c - 1 + tail,
            FamilyInstance::Dumbbell {
                a,
                b,
                bridge,
                tail_a,
                tail_b,
            } => a + b - 1 + bridge + tail_a + tail_b,
        }
    }

    pub fn name(&self) -> String {
        match *self {
            FamilyInstance::ThetaTail { a, b, c, at, tail } => {
                format!("theta({a},{b},{c})+tail{tail}@{at}")
            }
            FamilyInstance::Dumbbell {
                a,
                b,
                bridge,
                tail_a,
                tail_b,
            } => {
                format!("dumbbell(C{a},C{b},bridge{bridge})+tails({tail_a},{tail_b})")
            }
        }
    }

    pub fn build(&self) -> Graph {
        match *self {
            FamilyInstance::ThetaTail { a, b, c, at, tail } => {
                let mut g = Graph::empty(2);
                for len in [a, b, c] {
                    join_by_path(&mut g, 0, 1, len);
                }
                append_path(&mut g, at, tail);
                g
            }
            FamilyInstance::Dumbbell {
                a,
                b,
                bridge,
                tail_a,
                tail_b,
            } => {
                let mut g = Graph::empty(1);
                let far_a = append_cycle(&mut g, 0, a);
                let hub_b = append_path(&mut g, 0, bridge);
                let far_b = append_cycle(&mut g, hub_b, b);
                append_path(&mut g, far_a, tail_a);
                append_path(&mut g, far_b, tail_b);
                g
            }
        }
    }
}

/// The full family grid, sorted by vertex count and then by parameters.
pub fn family_instances() -> Vec<FamilyInstance> {
    let mut out = Vec::new();
    for a in 1..=THETA_MAX_PATH {
        for b in a.max(2)..=THETA_MAX_PATH {
            for c in b..=THETA_MAX_PATH {
                let core = a + b + c - 1;
                for tail in 0..=FAMILY_MAX_N.saturating_sub(core) {
                    let anchors = if tail == 0 { 1 } else { core };
                    for at in 0..anchors {
                        out.push(FamilyInstance::ThetaTail { a, b, c, at, tail });
                    }
                }
            }
        }
    }
    for a in 3..=CYCLE_MAX {
        for b in a..=CYCLE_MAX {
            for bridge in 0..=BRIDGE_MAX {
                for &tail_a in &DUMBBELL_TAILS {
                    for &tail_b in &DUMBBELL_TAILS {
                        let inst = FamilyInstance::Dumbbell {
                            a,
                            b,
                            bridge,
                            tail_a,
                            tail_b,
                        };
                        if inst.order() <= FAMILY_MAX_N {
                            out.push(inst);
                        }
                    }
                }
            }
        }
    }
    out.sort_by_key(|inst| (inst.order(), *inst));
    out
}

const BATCH: usize = 512;

fn family_sweep(cfg: &SearchConfig) -> Result<SearchSummary> {
    let mut c = Collector::new(cfg);
    let grid = family_instances();
    for chunk in grid
        .iter()
        .take(cfg.budget)
        .collect::<Vec<_>>()
        .chunks(BATCH)
    {
        let batch = chunk
            .iter()
            .map(|inst| (inst.name(), inst.build()))
            .collect();
        record_batch(&mut c, batch)?;
    }
    Ok(c.finish())
}

const WALK_STEPS: usize = 200;

fn walk_score(r: &IndexReport) -> i128 {
    r.n as i128 * i128::from(r.f2) - r.m as i128 * i128::from(r.f1)
}

/// Seeded hill climb. Each restart draws a connected graph with cycle rank
/// 2 to 4 and up to [`WALK_STEPS`] edge moves; a move is kept when
/// `n*F2 - m*F1` does not decrease (n and m are fixed along a walk).
fn random_walk(cfg: &SearchConfig) -> Result<SearchSummary> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut c = Collector::new(cfg);
    let mut seen: HashSet<String> = HashSet::new();
    let mut restart = 0;
    while c.summary.examined < cfg.budget {
        let n = rng.random_range(10..=30);
        let extra = rng.random_range(2..=4);
        let mut g = random_connected(n, extra, rng.random())?;
        let mut report = full_report(&g)?;
        record_unique(&mut c, &mut seen, format!("walk{restart}-0"), &g, &report);
        for step in 1..=WALK_STEPS {
            if c.summary.examined >= cfg.budget {
                break;
            }
            let edges: Vec<(usize, usize)> = g.edges().collect();
            let (a, b) = edges[rng.random_range(0..edges.len())];
            let (u, v) = (rng.random_range(0..n), rng.random_range(0..n));
            if u == v || g.has_edge(u, v) {
                continue;
            }
            let mut h = g.clone();
            h.remove_edge(a, b);
            h.add_edge(u, v)?;
            if !h.is_connected() {
                continue;
            }
            let r = full_report(&h)?;
            record_unique(&mut c, &mut seen, format!("walk{restart}-{step}"), &h, &r);
            if walk_score(&r) >= walk_score(&report) {
                g = h;
                report = r;
            }
        }
        restart += 1;
    }
    Ok(c.finish())
}

fn record_unique(
    c: &mut Collector,
    seen: &mut HashSet<String>,
    name: String,
    g: &Graph,
    r: &IndexReport,
) {
    if seen.insert(graph6::encode(g)) {
        c.record(name, g, r);
    } else {
        c.summary.examined += 1;
    }
}
