//! Weighted intersection graphs of curve systems and the inequality checks
//! built on them.
//!
//! Weights count crossings vertex by vertex. That equals geometric
//! intersection only for filling systems, whose boundary lengths of at least
//! three rule out bigons; callers are expected to check filling first.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::fatgraph::{rev, FatGraph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertex {vertex} has degree {degree}; intersection weights need a 4-regular graph")]
    NotFourRegular { vertex: usize, degree: usize },
    #[error("standard cycle {cycle} crosses itself at vertex {vertex}")]
    SelfCrossing { cycle: usize, vertex: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
}

/// Curves as nodes, crossings as weighted edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightedIntersectionGraph {
    pub curves: usize,
    /// `(i, j, weight)` with `i < j`, sorted.
    pub edges: Vec<(usize, usize, usize)>,
}

impl WeightedIntersectionGraph {
    pub fn weight(&self, i: usize, j: usize) -> usize {
        let (a, b) = (i.min(j), i.max(j));
        self.edges
            .iter()
            .find(|e| e.0 == a && e.1 == b)
            .map_or(0, |e| e.2)
    }

    pub fn total_weight(&self) -> usize {
        self.edges.iter().map(|e| e.2).sum()
    }

    pub fn omega_max(&self) -> usize {
        self.edges.iter().map(|e| e.2).max().unwrap_or(0)
    }

    pub fn matrix(&self) -> Vec<Vec<usize>> {
        let mut m = vec![vec![0; self.curves]; self.curves];
        for &(i, j, w) in &self.edges {
            m[i][j] = w;
            m[j][i] = w;
        }
        m
    }

    pub fn degrees(&self) -> DegreeProfile {
        let mut deg = vec![0; self.curves];
        for &(i, j, w) in &self.edges {
            deg[i] += w;
            deg[j] += w;
        }
        DegreeProfile {
            degrees: deg,
            omega_max: self.omega_max(),
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.curves == 0 {
            return true;
        }
        let mut seen = vec![false; self.curves];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &(i, j, _) in &self.edges {
                let y = if i == x {
                    j
                } else if j == x {
                    i
                } else {
                    continue;
                };
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen.into_iter().all(|b| b)
    }

    /// Whether the unweighted graph is a simple path through every curve.
    pub fn is_path(&self) -> bool {
        if self.curves == 1 {
            return self.edges.is_empty();
        }
        let deg: Vec<usize> = (0..self.curves)
            .map(|v| self.edges.iter().filter(|e| e.0 == v || e.1 == v).count())
            .collect();
        self.edges.len() + 1 == self.curves
            && deg.iter().all(|&d| d == 1 || d == 2)
            && self.is_connected()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub omega_max: usize,
}

/// Which curve each directed edge belongs to.
pub fn curve_of_dart(g: &FatGraph) -> Result<Vec<usize>, AnalysisError> {
    let cycles = g.standard_cycles()?;
    let mut of = vec![usize::MAX; g.dart_count()];
    for (i, c) in cycles.iter().enumerate() {
        for &d in &c.darts {
            of[d] = i;
            of[rev(d)] = i;
        }
    }
    Ok(of)
}

pub fn intersection_graph(g: &FatGraph) -> Result<WeightedIntersectionGraph, AnalysisError> {
    let of = curve_of_dart(g)?;
    let curves = g.standard_cycles()?.len();
    let mut w: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (vi, v) in g.vertices().iter().enumerate() {
        if v.len() != 4 {
            return Err(AnalysisError::NotFourRegular {
                vertex: vi,
                degree: v.len(),
            });
        }
        let (a, b) = (of[v[0]], of[v[1]]);
        if a == b {
            return Err(AnalysisError::SelfCrossing {
                cycle: a,
                vertex: vi,
            });
        }
        *w.entry((a.min(b), a.max(b))).or_insert(0) += 1;
    }
    Ok(WeightedIntersectionGraph {
        curves,
        edges: w.into_iter().map(|((i, j), x)| (i, j, x)).collect(),
    })
}

pub fn omega_max(g: &FatGraph) -> Result<usize, AnalysisError> {
    Ok(intersection_graph(g)?.omega_max())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OmegaBoundReport {
    pub g: usize,
    pub s: usize,
    pub omega_max: usize,
    pub bound: isize,
    pub holds: bool,
    pub equality: bool,
    pub intersection_connected: bool,
}

fn require_filling(g: &FatGraph) -> Result<(), AnalysisError> {
    match g.filling_report().first() {
        None => Ok(()),
        Some(issue) => Err(AnalysisError::Precondition(format!(
            "not a filling system: {issue}"
        ))),
    }
}

fn require_minimal(g: &FatGraph) -> Result<(), AnalysisError> {
    require_filling(g)?;
    let b = g.boundary_count();
    if b != 1 {
        return Err(AnalysisError::Precondition(format!(
            "expected a single complementary disc, found {b}"
        )));
    }
    Ok(())
}

/// `ω_max <= 2g - s + 1` for a minimal filling.
pub fn check_omega_bound(g: &FatGraph) -> Result<OmegaBoundReport, AnalysisError> {
    require_minimal(g)?;
    let ig = intersection_graph(g)?;
    let genus = g.genus()?;
    let s = ig.curves;
    let omega = ig.omega_max();
    let bound = 2 * genus as isize - s as isize + 1;
    Ok(OmegaBoundReport {
        g: genus,
        s,
        omega_max: omega,
        bound,
        holds: omega as isize <= bound,
        equality: omega as isize == bound,
        intersection_connected: ig.is_connected(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EulerReport {
    pub total_weight: usize,
    /// `2g - 2 + b`.
    pub expected: usize,
    pub holds: bool,
}

/// Total pairwise intersection equals `2g - 2 + b` for a filling system.
pub fn check_euler_identity(g: &FatGraph) -> Result<EulerReport, AnalysisError> {
    require_filling(g)?;
    let total = intersection_graph(g)?.total_weight();
    let expected = 2 * g.genus()? + g.boundary_count() - 2;
    Ok(EulerReport {
        total_weight: total,
        expected,
        holds: total == expected,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KnReport {
    pub k: usize,
    pub n: usize,
    pub lhs: usize,
    pub rhs: usize,
    /// Advisory: the inequality is imported, not proved here.
    pub holds: bool,
}

/// `k (n^2 - n) >= 4g - 2` with `k = ω_max`, `n = s`, for a minimal filling.
pub fn check_kn_bound(g: &FatGraph) -> Result<KnReport, AnalysisError> {
    require_minimal(g)?;
    let ig = intersection_graph(g)?;
    let (k, n) = (ig.omega_max(), ig.curves);
    let lhs = k * (n * n - n);
    let rhs = 4 * g.genus()? - 2;
    Ok(KnReport {
        k,
        n,
        lhs,
        rhs,
        holds: lhs >= rhs,
    })
}
