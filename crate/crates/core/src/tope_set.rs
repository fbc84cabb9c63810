//! Validated tope collections and their tope graph.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tope::Tope;

/// Sets above this size get a sampled isometry check.
pub const FULL_ISOMETRY_LIMIT: usize = 1 << 12;
const SAMPLED_ISOMETRY_SOURCES: usize = 64;

/// One named pass/fail line of a [`ValidationReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn push(&mut self, name: &str, passed: bool, witness: Option<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            witness,
        });
    }

    /// Conjunction of all checks.
    pub fn overall(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl Serialize for ValidationReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ValidationReport", 2)?;
        st.serialize_field("checks", &self.checks)?;
        st.serialize_field("overall", &self.overall())?;
        st.end()
    }
}

/// A finite, canonically sorted set of topes sharing one length `t`.
#[derive(Debug, Clone)]
pub struct TopeSet {
    t: usize,
    topes: Vec<Tope>,
    index: HashMap<Tope, usize>,
}

impl TopeSet {
    /// Collects, deduplicates and sorts `topes`. No oriented-matroid axioms
    /// are checked here; see [`TopeSet::validate`].
    pub fn new<I: IntoIterator<Item = Tope>>(topes: I) -> Result<Self> {
        let mut topes: Vec<Tope> = topes.into_iter().collect();
        let Some(first) = topes.first() else {
            return Err(Error::EmptyInput);
        };
        let t = first.len();
        if let Some(bad) = topes.iter().find(|x| x.len() != t) {
            return Err(Error::LengthMismatch {
                expected: t,
                found: bad.len(),
            });
        }
        topes.sort();
        topes.dedup();
        let index = topes
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, x)| (x, i))
            .collect();
        Ok(TopeSet { t, topes, index })
    }

    /// All `2^t` sign vectors: the tope set of the coordinate arrangement.
    pub fn hypercube(t: usize) -> Self {
        assert!((1..=20).contains(&t), "hypercube size out of range");
        TopeSet::new((0..1u64 << t).map(|m| Tope::from_negative_mask(t, m))).unwrap()
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn len(&self) -> usize {
        self.topes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.topes.is_empty()
    }

    pub fn topes(&self) -> &[Tope] {
        &self.topes
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Tope> {
        self.topes.iter()
    }

    pub fn contains(&self, tope: &Tope) -> bool {
        self.index.contains_key(tope)
    }

    pub fn position(&self, tope: &Tope) -> Option<usize> {
        self.index.get(tope).copied()
    }

    /// The positive tope `T^(+)` of this length.
    pub fn base(&self) -> Tope {
        Tope::positive(self.t)
    }

    pub fn is_acyclic(&self) -> bool {
        self.contains(&self.base())
    }

    pub fn is_negation_closed(&self) -> bool {
        self.topes.iter().all(|x| self.contains(&x.negate()))
    }

    /// First pair of (1-based) elements whose columns are equal or negated
    /// across all topes.
    pub fn parallel_pair(&self) -> Option<(usize, usize)> {
        for i in 0..self.t {
            for j in i + 1..self.t {
                let prod = |x: &Tope| x.sign(i) * x.sign(j);
                let first = prod(&self.topes[0]);
                if self.topes.iter().all(|x| prod(x) == first) {
                    return Some((i + 1, j + 1));
                }
            }
        }
        None
    }

    pub fn is_simple(&self) -> bool {
        self.parallel_pair().is_none()
    }

    /// Neighbours of the tope at `idx` in the tope graph (one-element flips).
    pub fn neighbours(&self, idx: usize) -> Vec<usize> {
        let x = &self.topes[idx];
        (0..self.t)
            .filter_map(|e| self.position(&x.flip(e)))
            .collect()
    }

    /// Breadth-first graph distances from `source`; `None` for unreachable topes.
    pub fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let adj: Vec<Vec<usize>> = (0..self.len()).map(|i| self.neighbours(i)).collect();
        bfs_with(&adj, source)
    }

    /// Runs every structural check and reports each one.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();

        let missing = self.topes.iter().find(|x| !self.contains(&x.negate()));
        report.push(
            "negation_closed",
            missing.is_none(),
            missing.map(|x| format!("{} present but {} missing", x, x.negate())),
        );

        let acyclic = self.is_acyclic();
        report.push(
            "acyclic",
            acyclic,
            (!acyclic).then(|| format!("{} missing", self.base())),
        );

        let pair = self.parallel_pair();
        report.push(
            "simple",
            pair.is_none(),
            pair.map(|(i, j)| format!("elements {i} and {j} are parallel or antiparallel")),
        );

        let adj: Vec<Vec<usize>> = (0..self.len()).map(|i| self.neighbours(i)).collect();
        let from_first = bfs_with(&adj, 0);
        let unreachable = from_first.iter().position(Option::is_none);
        report.push(
            "connected",
            unreachable.is_none(),
            unreachable.map(|i| format!("{} unreachable from {}", self.topes[i], self.topes[0])),
        );

        let sources: Vec<usize> = if self.len() <= FULL_ISOMETRY_LIMIT {
            (0..self.len()).collect()
        } else {
            let step = self.len() / SAMPLED_ISOMETRY_SOURCES;
            (0..SAMPLED_ISOMETRY_SOURCES).map(|k| k * step).collect()
        };
        let mut witness = None;
        'outer: for &s in &sources {
            let dist = bfs_with(&adj, s);
            for (j, d) in dist.iter().enumerate() {
                let hamming = self.topes[s].distance(&self.topes[j]).unwrap();
                if *d != Some(hamming) {
                    witness = Some(format!(
                        "graph distance {:?} but separation {} between {} and {}",
                        d, hamming, self.topes[s], self.topes[j]
                    ));
                    break 'outer;
                }
            }
        }
        if witness.is_none() && sources.len() < self.len() {
            witness = Some(format!("sampled {} sources", sources.len()));
            report.push("isometric", true, witness);
        } else {
            report.push("isometric", witness.is_none(), witness);
        }
        report
    }
}

fn bfs_with(adj: &[Vec<usize>], source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &v in &adj[u] {
            if dist[v].is_none() {
                dist[v] = Some(du + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[&str]) -> TopeSet {
        TopeSet::new(v.iter().map(|s| s.parse().unwrap())).unwrap()
    }

    #[test]
    fn square_passes() {
        let r = TopeSet::hypercube(2).validate();
        assert!(r.overall(), "{r:?}");
        assert_eq!(r.checks.len(), 5);
    }

    #[test]
    fn antipodal_pair_is_disconnected() {
        let r = set(&["++", "--"]).validate();
        assert!(!r.overall());
        let failed: Vec<_> = r.failures().map(|c| c.name.as_str()).collect();
        assert!(failed.contains(&"connected"));
    }

    #[test]
    fn hexagon_from_three_lines() {
        let s = set(&["+++", "++-", "+--", "---", "--+", "-++"]);
        // (+,+,-) and (-,-,+) were excluded; this is a different 6-cycle, still a valid OM
        assert!(s.validate().overall());
        let s = set(&["+++", "+-+", "+--", "---", "-+-", "-++"]);
        assert!(s.validate().overall());
    }

    #[test]
    fn detects_parallel_and_missing_negation() {
        let s = set(&["++", "--"]);
        assert_eq!(s.parallel_pair(), Some((1, 2)));
        let s = set(&["++", "+-", "-+"]);
        assert!(!s.is_negation_closed());
        assert!(!s.validate().overall());
    }

    #[test]
    fn non_acyclic_reported() {
        let s = set(&["+-", "-+", "--", "++"]);
        assert!(s.is_acyclic());
        let s = set(&["+-", "-+"]);
        let r = s.validate();
        let failed: Vec<_> = r.failures().map(|c| c.name.as_str()).collect();
        assert!(failed.contains(&"acyclic"));
    }

    #[test]
    fn mixed_lengths_rejected() {
        let r = TopeSet::new(vec!["++".parse().unwrap(), "+++".parse().unwrap()]);
        assert!(matches!(r, Err(Error::LengthMismatch { .. })));
    }
}
