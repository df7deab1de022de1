//! Zagreb-type indices and the exact comparison of their averages.

use std::fmt;

use serde::Serialize;

use crate::distance::{all_pairs_distances, eccentricity2_profile};
use crate::error::{Error, Result};
use crate::fermat::{fermat_profile, FermatProfile};
use crate::graph::{ClassTag, Graph};

/// Sign of `n * second - m * first`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, PartialOrd, Ord)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Negative => "negative",
            Sign::Zero => "zero",
            Sign::Positive => "positive",
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `(sum over vertices of x^2, sum over edges of x(u) x(v))` for any
/// per-vertex weight.
fn vertex_edge_sums(
    g: &Graph,
    weight: impl Fn(usize) -> u64,
    what: &'static str,
) -> Result<(u64, u64)> {
    let mut first = 0u64;
    for u in 0..g.n() {
        let x = weight(u);
        first = x
            .checked_mul(x)
            .and_then(|sq| first.checked_add(sq))
            .ok_or(Error::Overflow(what))?;
    }
    let mut second = 0u64;
    for (u, v) in g.edges() {
        second = weight(u)
            .checked_mul(weight(v))
            .and_then(|p| second.checked_add(p))
            .ok_or(Error::Overflow(what))?;
    }
    Ok((first, second))
}

/// First and second Zagreb-Fermat indices from a precomputed profile.
pub fn zagreb_fermat(g: &Graph, p: &FermatProfile) -> Result<(u64, u64)> {
    if p.eps3.len() != g.n() {
        return Err(Error::InvalidArgument(format!(
            "profile has {} entries for a graph on {} vertices",
            p.eps3.len(),
            g.n()
        )));
    }
    vertex_edge_sums(g, |u| u64::from(p.eps3[u]), "Zagreb-Fermat indices")
}

/// First and second Zagreb eccentricity indices.
pub fn zagreb_eccentricity(g: &Graph) -> Result<(u64, u64)> {
    let d = all_pairs_distances(g)?;
    let ecc = eccentricity2_profile(&d).ecc;
    vertex_edge_sums(g, |u| u64::from(ecc[u]), "Zagreb eccentricity indices")
}

/// Classical degree-based Zagreb indices.
pub fn zagreb_classic(g: &Graph) -> Result<(u64, u64)> {
    vertex_edge_sums(g, |u| g.degree(u) as u64, "Zagreb indices")
}

/// Sign of `n * second - m * first` by exact cross-multiplication.
///
/// `Negative` means `second / m < first / n` strictly.
pub fn compare_averages(n: usize, m: usize, first: u64, second: u64) -> Result<Sign> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    if m == 0 {
        return Err(Error::UndefinedComparison);
    }
    let lhs = (n as u128)
        .checked_mul(u128::from(second))
        .ok_or(Error::Overflow("comparison"))?;
    let rhs = (m as u128)
        .checked_mul(u128::from(first))
        .ok_or(Error::Overflow("comparison"))?;
    Ok(match lhs.cmp(&rhs) {
        std::cmp::Ordering::Less => Sign::Negative,
        std::cmp::Ordering::Equal => Sign::Zero,
        std::cmp::Ordering::Greater => Sign::Positive,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexReport {
    pub n: usize,
    pub m: usize,
    pub class: ClassTag,
    pub eps3: Vec<u32>,
    pub f1: u64,
    pub f2: u64,
    pub e1: u64,
    pub e2: u64,
    pub z1: u64,
    pub z2: u64,
    /// Sign of `n*F2 - m*F1`; `None` on the single-vertex graph.
    pub comparison: Option<Sign>,
}

impl IndexReport {
    /// Sign of `n*E2 - m*E1`.
    pub fn eccentricity_comparison(&self) -> Option<Sign> {
        compare_averages(self.n, self.m, self.e1, self.e2).ok()
    }
}

pub fn full_report(g: &Graph) -> Result<IndexReport> {
    let class = g.classify()?;
    let d = all_pairs_distances(g)?;
    let profile = fermat_profile(g, &d, false)?;
    report_from_profile(g, &d, profile.eps3, class.tag)
}

pub(crate) fn report_from_profile(
    g: &Graph,
    d: &crate::distance::DistanceMatrix,
    eps3: Vec<u32>,
    class: ClassTag,
) -> Result<IndexReport> {
    let profile = FermatProfile {
        eps3,
        witnesses: None,
    };
    let (f1, f2) = zagreb_fermat(g, &profile)?;
    let ecc = eccentricity2_profile(d).ecc;
    let (e1, e2) = vertex_edge_sums(g, |u| u64::from(ecc[u]), "Zagreb eccentricity indices")?;
    let (z1, z2) = zagreb_classic(g)?;
    let comparison = match compare_averages(g.n(), g.m(), f1, f2) {
        Ok(sign) => Some(sign),
        Err(Error::UndefinedComparison) => None,
        Err(e) => return Err(e),
    };
    Ok(IndexReport {
        n: g.n(),
        m: g.m(),
        class,
        eps3: profile.eps3,
        f1,
        f2,
        e1,
        e2,
        z1,
        z2,
        comparison,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path, star};

    #[test]
    fn zagreb_fermat_examples() {
        let p4 = path(4).unwrap();
        let prof = FermatProfile {
            eps3: vec![3; 4],
            witnesses: None,
        };
        assert_eq!(zagreb_fermat(&p4, &prof).unwrap(), (36, 27));
        let k14 = star(5).unwrap();
        let prof = FermatProfile {
            eps3: vec![2, 3, 3, 3, 3],
            witnesses: None,
        };
        assert_eq!(zagreb_fermat(&k14, &prof).unwrap(), (40, 24));
        let one = Graph::empty(1);
        let prof = FermatProfile {
            eps3: vec![0],
            witnesses: None,
        };
        assert_eq!(zagreb_fermat(&one, &prof).unwrap(), (0, 0));
    }

    #[test]
    fn profile_length_mismatch() {
        let prof = FermatProfile {
            eps3: vec![1],
            witnesses: None,
        };
        assert!(zagreb_fermat(&path(3).unwrap(), &prof).is_err());
    }

    #[test]
    fn overflow_is_reported() {
        let prof = FermatProfile {
            eps3: vec![u32::MAX; 2],
            witnesses: None,
        };
        // 2 * (2^32 - 1)^2 exceeds u64
        assert_eq!(
            zagreb_fermat(&path(2).unwrap(), &prof),
            Err(Error::Overflow("Zagreb-Fermat indices"))
        );
    }

    #[test]
    fn eccentricity_indices() {
        assert_eq!(zagreb_eccentricity(&path(3).unwrap()).unwrap(), (9, 4));
        assert_eq!(zagreb_eccentricity(&cycle(4).unwrap()).unwrap(), (16, 16));
        assert_eq!(zagreb_eccentricity(&star(4).unwrap()).unwrap(), (13, 6));
    }

    #[test]
    fn classic_indices() {
        assert_eq!(zagreb_classic(&path(3).unwrap()).unwrap(), (6, 4));
        assert_eq!(zagreb_classic(&cycle(5).unwrap()).unwrap(), (20, 20));
        assert_eq!(zagreb_classic(&star(4).unwrap()).unwrap(), (12, 9));
    }

    #[test]
    fn comparisons() {
        assert_eq!(compare_averages(4, 3, 36, 27).unwrap(), Sign::Zero);
        assert_eq!(compare_averages(5, 4, 40, 24).unwrap(), Sign::Negative);
        assert_eq!(compare_averages(6, 6, 96, 96).unwrap(), Sign::Zero);
        assert_eq!(compare_averages(3, 4, 1, 2).unwrap(), Sign::Positive);
        assert_eq!(
            compare_averages(1, 0, 0, 0),
            Err(Error::UndefinedComparison)
        );
        // beyond f64 precision: differ only in the last unit
        let big = (1u64 << 60) + 1;
        assert_eq!(
            compare_averages(3, 3, big, big - 1).unwrap(),
            Sign::Negative
        );
    }

    #[test]
    fn reports() {
        let r = full_report(&path(4).unwrap()).unwrap();
        assert_eq!((r.class, r.comparison), (ClassTag::Tree, Some(Sign::Zero)));
        let r = full_report(&star(5).unwrap()).unwrap();
        assert_eq!(r.comparison, Some(Sign::Negative));
        assert_eq!((r.f1, r.f2), (40, 24));
        let r = full_report(&cycle(6).unwrap()).unwrap();
        assert_eq!(
            (r.class, r.comparison),
            (ClassTag::Unicyclic, Some(Sign::Zero))
        );
        let r = full_report(&Graph::empty(1)).unwrap();
        assert_eq!((r.f1, r.comparison), (0, None));
        assert!(full_report(&Graph::from_edges(3, [(0, 1)]).unwrap()).is_err());
    }
}
