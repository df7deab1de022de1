//! Fermat (three-terminal Steiner) distances and eccentricities.
//!
//! For a triple `{u, v, w}` the Fermat distance is
//! `min_s d(s,u) + d(s,v) + d(s,w)` and the Fermat eccentricity of `u` is the
//! maximum of that quantity over all choices of `v` and `w`. Three routes
//! compute the eccentricity profile:
//!
//! * [`eps3_oracle`] evaluates every ordered pair, no shortcuts;
//! * [`eps3_pruned`] skips pairs using the bounds
//!   `ceil(P / 2) <= F(u,v,w) <= P - max(pairwise)` where `P` is the sum of
//!   the three pairwise distances;
//! * [`eps3_tree`] fixes one eccentric vertex at a farthest vertex of `u`
//!   and uses the half-perimeter identity that holds in trees.
//!
//! All three agree exactly; the test suites compare them on exhaustive and
//! random inputs.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::{ClassTag, Graph};

/// Which `(v, w)` pairs enter the maximum defining the eccentricity of `u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PairDomain {
    /// Every `(v, w)` in `V x V`, repeats and `u` itself included.
    #[default]
    All,
    /// Only triples with `u`, `v`, `w` pairwise distinct. On graphs with
    /// fewer than three vertices the domain is empty and the value is 0.
    Distinct,
}

impl PairDomain {
    #[inline]
    fn admits(self, u: usize, v: usize, w: usize) -> bool {
        match self {
            PairDomain::All => true,
            PairDomain::Distinct => u != v && u != w && v != w,
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Eps3Options {
    pub witnesses: bool,
    pub domain: PairDomain,
}

/// A pair realizing the eccentricity of some vertex, with a Fermat vertex of
/// the resulting triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FermatWitness {
    pub pair: (usize, usize),
    pub fermat_vertex: usize,
    pub value: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FermatProfile {
    pub eps3: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<FermatWitness>>,
}

/// Work counters of the pruned route.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PruneStats {
    /// Unordered pairs whose bounds were computed.
    pub pairs: u64,
    /// Pairs whose Fermat distance was actually evaluated.
    pub evaluations: u64,
}

#[inline]
fn triple_sum_min(a: &[u32], b: &[u32], c: &[u32]) -> u32 {
    a.iter()
        .zip(b)
        .zip(c)
        .map(|((x, y), z)| x + y + z)
        .min()
        .unwrap_or(0)
}

/// Minimum of the triple sum, stopping as soon as a sum `<= stop` is seen.
/// The result is exact whenever it exceeds `stop`.
#[inline]
fn triple_sum_min_until(a: &[u32], b: &[u32], c: &[u32], stop: u32) -> u32 {
    let mut best = u32::MAX;
    for ((x, y), z) in a.iter().zip(b).zip(c) {
        let s = x + y + z;
        if s < best {
            best = s;
            if s <= stop {
                break;
            }
        }
    }
    best
}

#[inline]
fn bounds(duv: u32, duw: u32, dvw: u32) -> (u32, u32) {
    let perimeter = duv + duw + dvw;
    let lower = perimeter.div_ceil(2);
    let upper = perimeter - duv.max(duw).max(dvw);
    (lower, upper)
}

pub fn fermat_distance(d: &DistanceMatrix, u: usize, v: usize, w: usize) -> Result<u32> {
    for x in [u, v, w] {
        d.check_vertex(x)?;
    }
    Ok(triple_sum_min(d.row(u), d.row(v), d.row(w)))
}

/// All Fermat vertices of `{u, v, w}`, ascending.
pub fn fermat_vertices(d: &DistanceMatrix, u: usize, v: usize, w: usize) -> Result<Vec<usize>> {
    let best = fermat_distance(d, u, v, w)?;
    let (ru, rv, rw) = (d.row(u), d.row(v), d.row(w));
    Ok((0..d.n())
        .filter(|&s| ru[s] + rv[s] + rw[s] == best)
        .collect())
}

/// Lexicographically smallest `(v, w, s)` with `F(u, v, w) = value`.
fn lex_witness(
    d: &DistanceMatrix,
    u: usize,
    value: u32,
    domain: PairDomain,
) -> Option<FermatWitness> {
    let n = d.n();
    let ru = d.row(u);
    for v in 0..n {
        let rv = d.row(v);
        for w in 0..n {
            if !domain.admits(u, v, w) {
                continue;
            }
            let (lower, upper) = bounds(ru[v], ru[w], rv[w]);
            if upper < value || lower > value {
                continue;
            }
            let rw = d.row(w);
            if triple_sum_min_until(ru, rv, rw, value.saturating_sub(1)) == value {
                let s = (0..n)
                    .find(|&s| ru[s] + rv[s] + rw[s] == value)
                    .expect("minimum is attained");
                return Some(FermatWitness {
                    pair: (v, w),
                    fermat_vertex: s,
                    value,
                });
            }
        }
    }
    None
}

fn collect_witnesses(d: &DistanceMatrix, eps3: &[u32], domain: PairDomain) -> Vec<FermatWitness> {
    (0..d.n())
        .into_par_iter()
        .map(|u| {
            lex_witness(d, u, eps3[u], domain).unwrap_or(FermatWitness {
                pair: (u, u),
                fermat_vertex: u,
                value: 0,
            })
        })
        .collect()
}

/// Exhaustive evaluation over every ordered pair `(v, w)`.
pub fn eps3_oracle(d: &DistanceMatrix, opts: Eps3Options) -> FermatProfile {
    let n = d.n();
    let per_vertex: Vec<(u32, Option<FermatWitness>)> = (0..n)
        .into_par_iter()
        .map(|u| {
            let ru = d.row(u);
            let mut best: Option<(u32, usize, usize)> = None;
            for v in 0..n {
                let rv = d.row(v);
                for w in 0..n {
                    if !opts.domain.admits(u, v, w) {
                        continue;
                    }
                    let f = triple_sum_min(ru, rv, d.row(w));
                    if best.is_none_or(|(b, _, _)| f > b) {
                        best = Some((f, v, w));
                    }
                }
            }
            match best {
                None => (0, None),
                Some((value, v, w)) => {
                    let witness = opts.witnesses.then(|| {
                        let (rv, rw) = (d.row(v), d.row(w));
                        let s = (0..n)
                            .find(|&s| ru[s] + rv[s] + rw[s] == value)
                            .expect("minimum is attained");
                        FermatWitness {
                            pair: (v, w),
                            fermat_vertex: s,
                            value,
                        }
                    });
                    (value, witness)
                }
            }
        })
        .collect();
    let eps3 = per_vertex.iter().map(|(e, _)| *e).collect();
    let witnesses = opts.witnesses.then(|| {
        per_vertex
            .iter()
            .enumerate()
            .map(|(u, (_, w))| {
                w.unwrap_or(FermatWitness {
                    pair: (u, u),
                    fermat_vertex: u,
                    value: 0,
                })
            })
            .collect()
    });
    FermatProfile { eps3, witnesses }
}

#[derive(Default)]
struct Scratch {
    // (upper, lower, v, w)
    candidates: Vec<(u32, u32, u32, u32)>,
    sorted: Vec<(u32, u32, u32, u32)>,
    counts: Vec<usize>,
}

fn eps3_pruned_vertex(
    d: &DistanceMatrix,
    u: usize,
    domain: PairDomain,
    scratch: &mut Scratch,
    stats: &mut PruneStats,
) -> u32 {
    let n = d.n();
    let ru = d.row(u);

    // Seed the running maximum with the pair of largest lower bound.
    let mut seed: Option<(u32, usize, usize)> = None;
    let mut pairs = 0u64;
    for v in 0..n {
        let rv = d.row(v);
        for w in v..n {
            if !domain.admits(u, v, w) {
                continue;
            }
            pairs += 1;
            let (lower, _) = bounds(ru[v], ru[w], rv[w]);
            if seed.is_none_or(|(l, _, _)| lower > l) {
                seed = Some((lower, v, w));
            }
        }
    }
    stats.pairs += pairs;
    let Some((seed_lower, sv, sw)) = seed else {
        return 0;
    };
    stats.evaluations += 1;
    let mut best = triple_sum_min_until(ru, d.row(sv), d.row(sw), seed_lower);

    // Remaining candidates: only pairs whose upper bound beats the seed.
    scratch.candidates.clear();
    let mut max_upper = 0;
    for v in 0..n {
        let rv = d.row(v);
        for w in v..n {
            if !domain.admits(u, v, w) {
                continue;
            }
            let (lower, upper) = bounds(ru[v], ru[w], rv[w]);
            if upper > best {
                scratch.candidates.push((upper, lower, v as u32, w as u32));
                max_upper = max_upper.max(upper);
            }
        }
    }
    if scratch.candidates.is_empty() {
        return best;
    }

    // Counting sort by upper bound, descending, so the scan can stop early.
    let buckets = max_upper as usize + 1;
    scratch.counts.clear();
    scratch.counts.resize(buckets + 1, 0);
    for &(upper, ..) in &scratch.candidates {
        scratch.counts[buckets - upper as usize] += 1;
    }
    let mut acc = 0;
    for c in scratch.counts.iter_mut() {
        let here = *c;
        *c = acc;
        acc += here;
    }
    scratch.sorted.clear();
    scratch
        .sorted
        .resize(scratch.candidates.len(), (0, 0, 0, 0));
    for &cand in &scratch.candidates {
        let slot = &mut scratch.counts[buckets - cand.0 as usize];
        scratch.sorted[*slot] = cand;
        *slot += 1;
    }

    for &(upper, lower, v, w) in &scratch.sorted {
        if upper <= best {
            break;
        }
        if lower == upper {
            best = lower;
            continue;
        }
        stats.evaluations += 1;
        let f = triple_sum_min_until(ru, d.row(v as usize), d.row(w as usize), best.max(lower));
        best = best.max(f);
    }
    best
}

/// Bound-pruned route. Returns the profile and work counters.
pub fn eps3_pruned_with_stats(
    d: &DistanceMatrix,
    opts: Eps3Options,
) -> (FermatProfile, PruneStats) {
    let pairs = AtomicU64::new(0);
    let evaluations = AtomicU64::new(0);
    let eps3: Vec<u32> = (0..d.n())
        .into_par_iter()
        .map_init(Scratch::default, |scratch, u| {
            let mut local = PruneStats::default();
            let e = eps3_pruned_vertex(d, u, opts.domain, scratch, &mut local);
            pairs.fetch_add(local.pairs, Ordering::Relaxed);
            evaluations.fetch_add(local.evaluations, Ordering::Relaxed);
            e
        })
        .collect();
    let witnesses = opts
        .witnesses
        .then(|| collect_witnesses(d, &eps3, opts.domain));
    let stats = PruneStats {
        pairs: pairs.into_inner(),
        evaluations: evaluations.into_inner(),
    };
    (FermatProfile { eps3, witnesses }, stats)
}

pub fn eps3_pruned(d: &DistanceMatrix, opts: Eps3Options) -> FermatProfile {
    eps3_pruned_with_stats(d, opts).0
}

/// Tree route: with `v*` a farthest vertex from `u`,
/// `eps3(u) = max_w (d(u,v*) + d(u,w) + d(v*,w)) / 2`.
pub fn eps3_tree(t: &Graph, d: &DistanceMatrix, witnesses: bool) -> Result<FermatProfile> {
    let class = t.classify()?;
    if class.tag != ClassTag::Tree {
        return Err(Error::WrongClass {
            expected: ClassTag::Tree,
            found: class.tag,
        });
    }
    let n = d.n();
    let eps3: Vec<u32> = (0..n)
        .into_par_iter()
        .map(|u| {
            let ru = d.row(u);
            let far = (0..n)
                .max_by_key(|&v| (ru[v], std::cmp::Reverse(v)))
                .unwrap_or(u);
            let rf = d.row(far);
            (0..n)
                .map(|w| (ru[far] + ru[w] + rf[w]) / 2)
                .max()
                .unwrap_or(0)
        })
        .collect();
    let witnesses = witnesses.then(|| collect_witnesses(d, &eps3, PairDomain::All));
    Ok(FermatProfile { eps3, witnesses })
}

/// Fastest valid route for `g`: the tree route on trees, the pruned route
/// otherwise.
pub fn fermat_profile(g: &Graph, d: &DistanceMatrix, witnesses: bool) -> Result<FermatProfile> {
    if g.classify()?.tag == ClassTag::Tree {
        eps3_tree(g, d, witnesses)
    } else {
        Ok(eps3_pruned(
            d,
            Eps3Options {
                witnesses,
                domain: PairDomain::All,
            },
        ))
    }
}

impl FermatWitness {
    /// Re-evaluates the witness against `d`: the stored Fermat vertex must
    /// reproduce `value` and no vertex may do better.
    pub fn is_valid_for(&self, d: &DistanceMatrix, u: usize) -> bool {
        let (v, w) = self.pair;
        let s = self.fermat_vertex;
        if [u, v, w, s].iter().any(|&x| x >= d.n()) {
            return false;
        }
        d.get(s, u) + d.get(s, v) + d.get(s, w) == self.value
            && triple_sum_min(d.row(u), d.row(v), d.row(w)) == self.value
    }
}
