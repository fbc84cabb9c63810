//! Symmetric cycles in the tope graph: validation, canonical form and search.
//!
//! A symmetric cycle is a closed walk `R^0, .., R^{2t-1}` of one-element
//! flips with `R^{k+t} = -R^k`. Its first `t` vertices form a basis of
//! `Q^t`, which is what makes tope decomposition over the cycle possible.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{self, ScaledMatrix};
use crate::tope::Tope;
use crate::tope_set::{TopeSet, ValidationReport};

#[derive(Clone)]
pub struct SymmetricCycle {
    t: usize,
    vertices: Vec<Tope>,
    flip_order: Vec<usize>,
    /// Inverse of the matrix whose rows are `R^0, .., R^{t-1}`.
    basis_inverse: ScaledMatrix,
}

impl PartialEq for SymmetricCycle {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
    }
}

impl Eq for SymmetricCycle {}

impl PartialOrd for SymmetricCycle {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SymmetricCycle {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.vertices.cmp(&other.vertices)
    }
}

impl fmt::Debug for SymmetricCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.vertices.iter().map(|v| v.to_string()))
            .finish()
    }
}

impl SymmetricCycle {
    /// Checks every structural invariant except membership in a host set.
    pub fn from_vertices(vertices: Vec<Tope>) -> Result<Self> {
        let flip_order = structural_flips(&vertices).map_err(Error::InvalidCycle)?;
        let t = vertices[0].len();
        let rows: Vec<Vec<i64>> = vertices[..t].iter().map(Tope::to_i64).collect();
        let inverse = linalg::inverse(&linalg::from_i64_rows(&rows)).ok_or(Error::SingularBasis)?;
        let basis_inverse = ScaledMatrix::from_rational(&inverse)
            .ok_or_else(|| Error::InvalidCycle("basis inverse overflows i128".into()))?;
        Ok(SymmetricCycle {
            t,
            vertices,
            flip_order,
            basis_inverse,
        })
    }

    /// Builds the cycle that starts at `start` and flips the 1-based elements
    /// of `first_half` in order, then repeats them.
    pub fn from_flips(start: &Tope, first_half: &[usize]) -> Result<Self> {
        let mut vertices = vec![start.clone()];
        for &e in first_half
            .iter()
            .chain(first_half)
            .take(2 * start.len() - 1)
        {
            if e == 0 || e > start.len() {
                return Err(Error::InvalidCycle(format!("element {e} out of range")));
            }
            let next = vertices.last().unwrap().flip(e - 1);
            vertices.push(next);
        }
        SymmetricCycle::from_vertices(vertices)
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn vertices(&self) -> &[Tope] {
        &self.vertices
    }

    pub fn vertex(&self, j: usize) -> &Tope {
        &self.vertices[j % (2 * self.t)]
    }

    /// Element (1-based) flipped on step `j -> j+1` for each `j` in `0..2t`.
    pub fn flip_order(&self) -> &[usize] {
        &self.flip_order
    }

    pub(crate) fn basis_inverse(&self) -> &ScaledMatrix {
        &self.basis_inverse
    }

    /// Rotation and orientation with the smallest vertex first and the
    /// smaller of its two neighbours second.
    pub fn canonical(&self) -> SymmetricCycle {
        let n = 2 * self.t;
        let start = (0..n)
            .min_by(|&a, &b| self.vertices[a].cmp(&self.vertices[b]))
            .unwrap();
        let forward = &self.vertices[(start + 1) % n];
        let backward = &self.vertices[(start + n - 1) % n];
        let seq: Vec<Tope> = if forward <= backward {
            (0..n)
                .map(|k| self.vertices[(start + k) % n].clone())
                .collect()
        } else {
            (0..n)
                .map(|k| self.vertices[(start + n - k) % n].clone())
                .collect()
        };
        SymmetricCycle::from_vertices(seq).expect("rotation preserves cycle invariants")
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical()
    }
}

/// Verifies length, adjacency, antipodality, the flip permutation and
/// distinctness; returns the flip order.
fn structural_flips(vertices: &[Tope]) -> std::result::Result<Vec<usize>, String> {
    let report = structural_report(vertices);
    if let Some(c) = report.failures().next() {
        return Err(format!(
            "{}: {}",
            c.name,
            c.witness.clone().unwrap_or_default()
        ));
    }
    let n = vertices.len();
    Ok((0..n)
        .map(|j| vertices[j].separation_set(&vertices[(j + 1) % n]).unwrap()[0])
        .collect())
}

fn structural_report(vertices: &[Tope]) -> ValidationReport {
    let mut r = ValidationReport::default();
    let Some(first) = vertices.first() else {
        r.push("length", false, Some("empty vertex sequence".into()));
        return r;
    };
    let t = first.len();
    if let Some(v) = vertices.iter().find(|v| v.len() != t) {
        r.push(
            "length",
            false,
            Some(format!("{v} has length {} not {t}", v.len())),
        );
        return r;
    }
    if vertices.len() != 2 * t || t < 2 {
        r.push(
            "length",
            false,
            Some(format!(
                "{} vertices for t = {t}, need 2t with t >= 2",
                vertices.len()
            )),
        );
        return r;
    }
    r.push("length", true, None);
    let n = 2 * t;

    let bad_step = (0..n).find(|&j| vertices[j].distance(&vertices[(j + 1) % n]).unwrap() != 1);
    r.push(
        "adjacency",
        bad_step.is_none(),
        bad_step.map(|j| {
            format!(
                "R^{j} = {} and R^{} = {} are not adjacent",
                vertices[j],
                (j + 1) % n,
                vertices[(j + 1) % n]
            )
        }),
    );

    let bad_antipode = (0..t).find(|&k| vertices[k + t] != vertices[k].negate());
    r.push(
        "antipodal",
        bad_antipode.is_none(),
        bad_antipode.map(|k| format!("R^{} != -R^{k}", k + t)),
    );

    let mut seen = vec![false; t];
    let mut perm_ok = bad_step.is_none();
    if perm_ok {
        for j in 0..t {
            let e = vertices[j].separation_set(&vertices[j + 1]).unwrap()[0];
            if std::mem::replace(&mut seen[e - 1], true) {
                perm_ok = false;
            }
        }
    }
    r.push(
        "flip_permutation",
        perm_ok,
        (!perm_ok).then(|| "the first t flips are not a permutation of the ground set".into()),
    );

    let mut sorted: Vec<&Tope> = vertices.iter().collect();
    sorted.sort();
    let dup = sorted.windows(2).find(|w| w[0] == w[1]);
    r.push(
        "distinct",
        dup.is_none(),
        dup.map(|w| format!("{} repeated", w[0])),
    );
    r
}

/// Checks every symmetric-cycle invariant of `candidate` against `host`.
pub fn validate_cycle(candidate: &[Tope], host: &TopeSet) -> ValidationReport {
    let mut report = structural_report(candidate);
    if report.checks.len() == 1 && !report.overall() {
        return report;
    }
    let t = candidate[0].len();
    let outside = candidate.iter().find(|v| !host.contains(v));
    report.push(
        "membership",
        outside.is_none(),
        outside.map(|v| format!("{v} is not a tope of the host set")),
    );
    let rows: Vec<Vec<i64>> = candidate[..t].iter().map(Tope::to_i64).collect();
    let rank = linalg::rank(linalg::from_i64_rows(&rows));
    report.push(
        "basis",
        rank == t,
        (rank != t).then(|| format!("first {t} vertices have rank {rank}")),
    );
    report
}

/// Enumerates canonical symmetric cycles of the tope graph of `host`.
///
/// `limit = None` means all cycles. The search is a depth-first walk over
/// flip sequences, elements tried in ascending order, started only from
/// vertices that can be the smallest vertex of their cycle; the result is
/// sorted.
pub fn find_symmetric_cycles(host: &TopeSet, limit: Option<usize>) -> Result<Vec<SymmetricCycle>> {
    let t = host.t();
    if t < 2 {
        return Err(Error::DegenerateGroundSet(t));
    }
    let limit = limit.unwrap_or(usize::MAX);
    let mut found = Vec::new();
    if limit == 0 {
        return Ok(found);
    }
    for start in host.iter() {
        // the smallest vertex must start with '+', since -S < S otherwise
        if start.sign(0) < 0 {
            continue;
        }
        let mut search = Search {
            host,
            start,
            path: vec![start.clone()],
            used: vec![false; t],
            limit,
            found: &mut found,
        };
        search.descend()?;
        if found.len() >= limit {
            break;
        }
    }
    found.sort();
    if found.is_empty() && limit != usize::MAX {
        return Err(Error::NoCycleFound);
    }
    Ok(found)
}

struct Search<'a> {
    host: &'a TopeSet,
    start: &'a Tope,
    path: Vec<Tope>,
    used: Vec<bool>,
    limit: usize,
    found: &'a mut Vec<SymmetricCycle>,
}

impl Search<'_> {
    fn descend(&mut self) -> Result<()> {
        let t = self.used.len();
        if self.path.len() == t {
            return self.close();
        }
        for e in 0..t {
            if self.used[e] {
                continue;
            }
            let next = self.path.last().unwrap().flip(e);
            if !self.host.contains(&next) {
                continue;
            }
            let neg = next.negate();
            if next < *self.start || neg < *self.start || !self.host.contains(&neg) {
                continue;
            }
            self.used[e] = true;
            self.path.push(next);
            self.descend()?;
            self.path.pop();
            self.used[e] = false;
            if self.found.len() >= self.limit {
                break;
            }
        }
        Ok(())
    }

    fn close(&mut self) -> Result<()> {
        let t = self.used.len();
        // orientation: second vertex smaller than the last one, R^{2t-1} = -R^{t-1}
        if self.path[1] > self.path[t - 1].negate() {
            return Ok(());
        }
        let mut vertices = self.path.clone();
        vertices.extend(self.path.iter().map(Tope::negate));
        match SymmetricCycle::from_vertices(vertices) {
            Ok(c) => {
                self.found.push(c);
                Ok(())
            }
            // a dependent basis would contradict the host being a simple OM;
            // such walks are not symmetric cycles and are skipped
            Err(Error::SingularBasis) => Ok(()),
            Err(e) => Err(e),
        }
    }
}
