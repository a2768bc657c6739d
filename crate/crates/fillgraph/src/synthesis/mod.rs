//! Constructive builders for filling systems with prescribed genus, number
//! of complementary discs and number of curves.
//!
//! Every builder records a [`SynthesisPlan`]: a list of steps whose replay
//! recomputes the graph from catalog members and embedded search results.
//! Builders execute each step as they record it, so every operation's own
//! prediction check runs at construction time as well as on replay.

pub mod pairs;
pub mod search;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::analysis::{self, intersection_graph};
use crate::families::{self, FamilyError, FamilyId};
use crate::fatgraph::{rev, Dart, FatGraph, GraphError};
use crate::io::{FatGraphFile, IoError};
use crate::ops::{self, OpError, OperationReport};

pub use pairs::filling_pair;
pub use search::{search_filling, search_filling_where, SearchOptions, SearchOutcome};

pub const PLAN_FORMAT: &str = "fillplan/1";

#[derive(Debug, Error)]
pub enum SynthesisError {
    #[error("({g},{b},{s}) is outside the valid range: {reason}")]
    Range {
        g: usize,
        b: usize,
        s: usize,
        reason: String,
    },
    #[error("impossible: ({g},{b},{s}) {reason}")]
    Impossible {
        g: usize,
        b: usize,
        s: usize,
        reason: String,
    },
    #[error("synthesis failed for ({g},{b},{s}): {reason}")]
    Failed {
        g: usize,
        b: usize,
        s: usize,
        reason: String,
    },
    #[error("step {step}: {source}")]
    Op { step: usize, source: OpError },
    #[error("step {step}: {source}")]
    Family { step: usize, source: FamilyError },
    #[error("step {step}: embedded graph: {source}")]
    Embedded { step: usize, source: IoError },
    #[error("step {step}: {reason}")]
    BadStep { step: usize, reason: String },
    #[error("plan format `{0}` is not `{PLAN_FORMAT}`")]
    Format(String),
    #[error("replay produced {got}, plan promises {want}")]
    Verification { want: String, got: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Genus, disc count and curve count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Target {
    pub g: usize,
    pub b: usize,
    pub s: usize,
}

impl Target {
    pub fn new(g: usize, b: usize, s: usize) -> Target {
        Target { g, b, s }
    }

    pub fn triple(&self) -> (usize, usize, usize) {
        (self.g, self.b, self.s)
    }

    /// Least size of a filling with `b` discs.
    pub fn lower_size(g: usize, b: usize) -> usize {
        if (g, b) == (2, 1) {
            3
        } else {
            2
        }
    }

    /// Largest size of a filling with `b` discs.
    pub fn upper_size(g: usize, b: usize) -> usize {
        2 * g + b - 1
    }
}

impl std::fmt::Display for Target {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.g, self.b, self.s)
    }
}

/// One plan step. Operand fields index earlier steps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum Step {
    Family {
        family: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        param: Option<usize>,
    },
    /// A graph given verbatim, e.g. a search result.
    Graph {
        origin: String,
        vertices: Vec<Vec<String>>,
    },
    Join {
        left: usize,
        right: usize,
        x: usize,
        y: usize,
    },
    /// `w` and `u` are directed edges leaving the two vertices; they also fix
    /// how the rotations are aligned.
    Consum {
        left: usize,
        right: usize,
        w: usize,
        u: usize,
    },
    Plumb {
        left: usize,
        right: usize,
        x: usize,
        y: usize,
    },
    /// Removes a degree-2 vertex, merging its two edges.
    Suppress { operand: usize, vertex: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SynthesisPlan {
    pub format: String,
    pub target: Target,
    pub steps: Vec<Step>,
}

/// A replayed plan: the final graph and the report of every operation.
#[derive(Debug, Clone)]
pub struct Replay {
    pub graph: FatGraph,
    pub reports: Vec<(usize, OperationReport)>,
}

impl SynthesisPlan {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes") + "\n"
    }

    pub fn from_json(text: &str) -> Result<SynthesisPlan, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Re-executes every step and checks the result against the target.
    pub fn replay(&self) -> Result<Replay, SynthesisError> {
        if self.format != PLAN_FORMAT {
            return Err(SynthesisError::Format(self.format.clone()));
        }
        let mut pb = PlanBuilder::new();
        for step in &self.steps {
            pb.push(step.clone())?;
        }
        let graph = pb.last()?.clone();
        verify(&graph, self.target)?;
        Ok(Replay {
            graph,
            reports: pb.reports,
        })
    }
}

/// Checks signature, the filling property and the intersection identity.
pub fn verify(graph: &FatGraph, target: Target) -> Result<(), SynthesisError> {
    let sig = graph.signature()?;
    let report = graph.filling_report();
    let euler = analysis::check_euler_identity(graph)
        .ok()
        .filter(|e| e.holds);
    if sig.triple() != target.triple() || !report.is_filling() || euler.is_none() {
        let got = match report.first() {
            Some(issue) => format!("{:?} ({issue})", sig.triple()),
            None if euler.is_none() => format!("{:?} (intersection total off)", sig.triple()),
            None => format!("{:?}", sig.triple()),
        };
        return Err(SynthesisError::Verification {
            want: target.to_string(),
            got,
        });
    }
    Ok(())
}

/// A built filling with the plan that rebuilds it.
#[derive(Debug, Clone)]
pub struct Synthesis {
    pub plan: SynthesisPlan,
    pub graph: FatGraph,
}

impl Synthesis {
    pub fn omega_max(&self) -> usize {
        analysis::omega_max(&self.graph).expect("synthesized graphs are fillings")
    }
}

/// Records steps while executing them.
#[derive(Debug, Default)]
pub struct PlanBuilder {
    steps: Vec<Step>,
    graphs: Vec<FatGraph>,
    reports: Vec<(usize, OperationReport)>,
}

impl PlanBuilder {
    pub fn new() -> PlanBuilder {
        PlanBuilder::default()
    }

    pub fn graph(&self, i: usize) -> &FatGraph {
        &self.graphs[i]
    }

    fn last(&self) -> Result<&FatGraph, SynthesisError> {
        self.graphs.last().ok_or(SynthesisError::BadStep {
            step: 0,
            reason: "plan has no steps".into(),
        })
    }

    fn operand(&self, step: usize, i: usize) -> Result<&FatGraph, SynthesisError> {
        if i >= step {
            return Err(SynthesisError::BadStep {
                step,
                reason: format!("operand {i} does not refer to an earlier step"),
            });
        }
        Ok(&self.graphs[i])
    }

    /// Executes `step` and appends it; returns its index.
    pub fn push(&mut self, step: Step) -> Result<usize, SynthesisError> {
        let at = self.steps.len();
        let op = |source| SynthesisError::Op { step: at, source };
        let (graph, report) = match &step {
            Step::Family { family, param } => {
                let fam = |source| SynthesisError::Family { step: at, source };
                let id = FamilyId::parse(family, *param).map_err(fam)?;
                (families::build(id).map_err(fam)?, None)
            }
            Step::Graph { vertices, .. } => {
                let file = FatGraphFile {
                    format: crate::io::FATGRAPH_FORMAT.to_string(),
                    vertices: vertices.clone(),
                    names: None,
                };
                let g = file
                    .to_graph()
                    .map_err(|source| SynthesisError::Embedded { step: at, source })?;
                (g, None)
            }
            Step::Join { left, right, x, y }
            | Step::Plumb { left, right, x, y }
            | Step::Consum {
                left,
                right,
                w: x,
                u: y,
            } => {
                let l = self.operand(at, *left)?;
                // a step may use one operand twice; the operations want two values
                let r = self.operand(at, *right)?.clone();
                let report = match step {
                    Step::Join { .. } => ops::join(l, *x, &r, *y),
                    Step::Plumb { .. } => ops::plumbing(l, *x, &r, *y),
                    _ => ops::connected_sum(l, *x, &r, *y),
                }
                .map_err(op)?;
                (report.result.clone(), Some(report))
            }
            Step::Suppress { operand, vertex } => (
                self.operand(at, *operand)?.suppress_degree_two(*vertex)?,
                None,
            ),
        };
        self.steps.push(step);
        self.graphs.push(graph);
        if let Some(r) = report {
            self.reports.push((at, r));
        }
        Ok(at)
    }

    pub fn family(&mut self, id: FamilyId) -> Result<usize, SynthesisError> {
        self.push(Step::Family {
            family: id.name().to_string(),
            param: id.parameter(),
        })
    }

    /// Embeds `g` verbatim. Subsequent selectors refer to the graph as
    /// replay will read it back.
    pub fn embed(&mut self, origin: &str, g: &FatGraph) -> Result<usize, SynthesisError> {
        let vertices = FatGraphFile::from_graph(g).vertices;
        self.push(Step::Graph {
            origin: origin.to_string(),
            vertices,
        })
    }

    pub fn join(
        &mut self,
        l: usize,
        x: usize,
        r: usize,
        y: usize,
    ) -> Result<usize, SynthesisError> {
        self.push(Step::Join {
            left: l,
            right: r,
            x,
            y,
        })
    }

    pub fn plumb(
        &mut self,
        l: usize,
        x: usize,
        r: usize,
        y: usize,
    ) -> Result<usize, SynthesisError> {
        self.push(Step::Plumb {
            left: l,
            right: r,
            x,
            y,
        })
    }

    pub fn consum(
        &mut self,
        l: usize,
        w: Dart,
        r: usize,
        u: Dart,
    ) -> Result<usize, SynthesisError> {
        self.push(Step::Consum {
            left: l,
            right: r,
            w,
            u,
        })
    }

    /// Replays another plan's steps into this one; returns the index of its
    /// final graph.
    pub fn append(&mut self, plan: &SynthesisPlan) -> Result<usize, SynthesisError> {
        let base = self.steps.len();
        let shift = |i: usize| i + base;
        for step in &plan.steps {
            let moved = match step.clone() {
                Step::Join { left, right, x, y } => Step::Join {
                    left: shift(left),
                    right: shift(right),
                    x,
                    y,
                },
                Step::Plumb { left, right, x, y } => Step::Plumb {
                    left: shift(left),
                    right: shift(right),
                    x,
                    y,
                },
                Step::Consum { left, right, w, u } => Step::Consum {
                    left: shift(left),
                    right: shift(right),
                    w,
                    u,
                },
                Step::Suppress { operand, vertex } => Step::Suppress {
                    operand: shift(operand),
                    vertex,
                },
                other => other,
            };
            self.push(moved)?;
        }
        Ok(self.steps.len() - 1)
    }

    /// Finishes the plan, verifying that the last graph meets `target`.
    pub fn finish(self, target: Target) -> Result<Synthesis, SynthesisError> {
        let graph = self.last()?.clone();
        verify(&graph, target)?;
        Ok(Synthesis {
            plan: SynthesisPlan {
                format: PLAN_FORMAT.to_string(),
                target,
                steps: self.steps,
            },
            graph,
        })
    }
}

fn failed(t: Target, reason: impl Into<String>) -> SynthesisError {
    SynthesisError::Failed {
        g: t.g,
        b: t.b,
        s: t.s,
        reason: reason.into(),
    }
}

fn expect_triple(
    pb: &PlanBuilder,
    i: usize,
    want: (usize, usize, usize),
) -> Result<(), SynthesisError> {
    let got = pb.graph(i).signature()?.triple();
    if got != want {
        return Err(SynthesisError::Verification {
            want: format!("{want:?}"),
            got: format!("{got:?} at step {i}"),
        });
    }
    Ok(())
}

/// Least edge whose two directions run along one boundary cycle.
pub fn same_boundary_edge(g: &FatGraph) -> Option<usize> {
    let bm = g.boundary_map();
    (0..g.edge_count()).find(|&e| bm[2 * e] == bm[2 * e + 1])
}

/// Least edge whose two directions run along different boundary cycles.
pub fn split_boundary_edge(g: &FatGraph) -> Option<usize> {
    let bm = g.boundary_map();
    (0..g.edge_count()).find(|&e| bm[2 * e] != bm[rev(2 * e)])
}

/// Joins `count` torus pairs onto step `at`, each along a same-boundary edge.
/// Every join adds one disc and one curve and keeps the genus.
fn join_tori(
    pb: &mut PlanBuilder,
    mut at: usize,
    count: usize,
    t: Target,
) -> Result<usize, SynthesisError> {
    for _ in 0..count {
        let x = same_boundary_edge(pb.graph(at))
            .ok_or_else(|| failed(t, "no edge with both directions on one boundary"))?;
        let torus = pb.family(FamilyId::TorusPair)?;
        at = pb.join(at, x, torus, 0)?;
        let case = &pb.reports.last().expect("join reports").1.case;
        if case != "SAME/SAME" {
            return Err(failed(t, format!("join fell into case {case}")));
        }
    }
    Ok(at)
}

fn check_minimal_range(g: usize, s: usize) -> Result<(), SynthesisError> {
    if (g, s) == (2, 2) {
        return Err(SynthesisError::Impossible {
            g,
            b: 1,
            s,
            reason: "no minimal filling pair of a closed surface of genus 2".into(),
        });
    }
    if g < 2 || s < Target::lower_size(g, 1) || s > 2 * g {
        return Err(SynthesisError::Range {
            g,
            b: 1,
            s,
            reason: "need g >= 2 and L <= s <= 2g".into(),
        });
    }
    Ok(())
}

/// Filling of size `2g + b - 1`: the one-boundary graph with `2g` loop curves
/// followed by `b - 1` torus joins.
pub fn max_filling(g: usize, b: usize) -> Result<Synthesis, SynthesisError> {
    let t = Target::new(g, b, g.saturating_mul(2) + b.saturating_sub(1));
    if g == 0 || b == 0 {
        return Err(SynthesisError::Range {
            g,
            b,
            s: t.s,
            reason: "need g >= 1 and b >= 1".into(),
        });
    }
    let mut pb = PlanBuilder::new();
    let seed = pb.family(FamilyId::GammaG(g))?;
    join_tori(&mut pb, seed, b - 1, t)?;
    pb.finish(t)
}

/// Minimal filling (one disc) of genus `g` with `s` curves.
pub fn minimal_filling(g: usize, s: usize) -> Result<Synthesis, SynthesisError> {
    check_minimal_range(g, s)?;
    let mut pb = PlanBuilder::new();
    minimal_into(&mut pb, g, s)?;
    pb.finish(Target::new(g, 1, s))
}

fn minimal_into(pb: &mut PlanBuilder, g: usize, s: usize) -> Result<usize, SynthesisError> {
    let t = Target::new(g, 1, s);
    let at = match (g, s) {
        _ if s == 2 * g => pb.family(FamilyId::GammaG(g))?,
        _ if s + 1 == 2 * g && g >= 3 => pb.family(FamilyId::Girth2gm1(g))?,
        (2, 3) => pb.family(FamilyId::G1)?,
        (3, 3) => pb.family(FamilyId::Gamma0)?,
        (3, 4) => pb.family(FamilyId::QuadrupleF3)?,
        (_, 3) => consum_chain(pb, g)?,
        (_, 2) => {
            let pair = filling_pair(g, 1)?;
            pb.append(&pair.plan)?
        }
        _ => {
            let inner = minimal_into(pb, g - 1, s - 2)?;
            let torus = pb.family(FamilyId::TorusPair)?;
            pb.plumb(inner, 0, torus, 0)?
        }
    };
    expect_triple(pb, at, t.triple())?;
    Ok(at)
}

/// Three-curve minimal fillings: start from the genus-2 or genus-3 triple
/// of matching parity and repeatedly take connected sums with the genus-2
/// four-disc pair. Each step adds two to the genus; the vertex of the
/// accumulating graph is probed among loop-free vertices.
fn consum_chain(pb: &mut PlanBuilder, g: usize) -> Result<usize, SynthesisError> {
    let t = Target::new(g, 1, 3);
    let (mut at, mut cur) = if g.is_multiple_of(2) {
        (pb.family(FamilyId::G1)?, 2)
    } else {
        (pb.family(FamilyId::Gamma0)?, 3)
    };
    let (_, v1) = families::published_vertex(FamilyId::G2, 0)
        .expect("g2 is a catalog family")
        .expect("g2 has a first vertex");
    let g2 = families::build(FamilyId::G2).expect("catalog family");
    let u_slots: Vec<Dart> = {
        let sigma0 = g2.sigma0();
        let mut d = v1;
        (0..4)
            .map(|_| {
                let here = d;
                d = sigma0[d];
                here
            })
            .collect()
    };
    while cur < g {
        let want = (cur + 2, 1, 3);
        let graph = pb.graph(at).clone();
        let vmap = graph.vertex_map();
        let mut choice = None;
        'probe: for v in graph.vertices() {
            if v.iter().any(|&d| vmap[rev(d)] == vmap[d]) {
                continue;
            }
            for &u in &u_slots {
                let Ok(r) = ops::connected_sum(&graph, v[0], &g2, u) else {
                    continue;
                };
                if r.result.is_filling_system() && r.result.signature()?.triple() == want {
                    choice = Some((v[0], u));
                    break 'probe;
                }
            }
        }
        let (w, u) =
            choice.ok_or_else(|| failed(t, format!("no loop-free vertex gives {want:?}")))?;
        let right = pb.family(FamilyId::G2)?;
        at = pb.consum(at, w, right, u)?;
        cur += 2;
    }
    Ok(at)
}

/// A filling of genus `g` with `b` discs and `s` curves.
pub fn filling(g: usize, b: usize, s: usize) -> Result<Synthesis, SynthesisError> {
    let t = Target::new(g, b, s);
    if (g, b, s) == (2, 1, 2) {
        return Err(SynthesisError::Impossible {
            g,
            b,
            s,
            reason: "no minimal filling pair of a closed surface of genus 2".into(),
        });
    }
    if g < 2 || b == 0 || s < Target::lower_size(g, b) || s > Target::upper_size(g, b) {
        return Err(SynthesisError::Range {
            g,
            b,
            s,
            reason: "need g >= 2, b >= 1 and L <= s <= 2g + b - 1".into(),
        });
    }
    let mut pb = PlanBuilder::new();
    if b >= s {
        // two-curve seed with b - s + 2 discs, then s - 2 joins
        let seed_b = b - s + 2;
        let seed = if g == 2 {
            pb.family(FamilyId::Gamma2B(seed_b))?
        } else {
            let pair = filling_pair(g, seed_b)?;
            pb.append(&pair.plan)?
        };
        join_tori(&mut pb, seed, s - 2, t)?;
    } else {
        let k = s - b + 1;
        if g == 2 && k == 2 {
            // the genus-2 one-disc pair does not exist; start from two discs
            let seed = pb.family(FamilyId::TwoDiscTriple)?;
            join_tori(&mut pb, seed, b - 2, t)?;
        } else {
            let seed = minimal_into(&mut pb, g, k)?;
            join_tori(&mut pb, seed, b - 1, t)?;
        }
    }
    pb.finish(t)
}

/// Minimal filling whose largest pairwise intersection is `2g - s + 1`.
pub fn tight_omega_filling(g: usize, s: usize) -> Result<Synthesis, SynthesisError> {
    check_minimal_range(g, s)?;
    let mut pb = PlanBuilder::new();
    let at = tight_into(&mut pb, g, s)?;
    let t = Target::new(g, 1, s);
    let omega = analysis::omega_max(pb.graph(at)).map_err(|e| failed(t, e.to_string()))?;
    if omega + s != 2 * g + 1 {
        return Err(failed(
            t,
            format!("largest intersection is {omega}, not {}", 2 * g + 1 - s),
        ));
    }
    pb.finish(t)
}

fn tight_into(pb: &mut PlanBuilder, g: usize, s: usize) -> Result<usize, SynthesisError> {
    let t = Target::new(g, 1, s);
    let at = if s == 2 {
        let pair = filling_pair(g, 1)?;
        pb.append(&pair.plan)?
    } else if s == 3 {
        // a two-disc pair one genus down, plumbed with an essential circle
        // along an edge that separates the two discs
        let pair = filling_pair(g - 1, 2)?;
        let left = pb.append(&pair.plan)?;
        let x = split_boundary_edge(pb.graph(left))
            .ok_or_else(|| failed(t, "two-disc pair has no edge between its discs"))?;
        let circle = pb.family(FamilyId::SphereCircle)?;
        let plumbed = pb.plumb(left, x, circle, 0)?;
        let v = pb
            .graph(plumbed)
            .degrees()
            .iter()
            .position(|&d| d == 2)
            .ok_or_else(|| failed(t, "plumbing left no degree-2 vertex"))?;
        pb.push(Step::Suppress {
            operand: plumbed,
            vertex: v,
        })?
    } else if s % 2 == 1 {
        let inner = tight_into(pb, g - 1, s - 2)?;
        let torus = pb.family(FamilyId::TorusPair)?;
        pb.plumb(inner, 0, torus, 0)?
    } else if (g, s) == (3, 4) {
        pb.family(FamilyId::QuadrupleF3)?
    } else {
        let m = s / 2;
        let gp = g + 1 - m;
        if gp == 2 {
            let inner = tight_into(pb, g - 1, s - 2)?;
            let torus = pb.family(FamilyId::TorusPair)?;
            pb.plumb(inner, 0, torus, 0)?
        } else {
            let pair = if gp == 1 {
                pb.family(FamilyId::TorusPair)?
            } else {
                let p = filling_pair(gp, 1)?;
                pb.append(&p.plan)?
            };
            let chain = torus_chain(pb, m - 1, t)?;
            pb.plumb(pair, 0, chain, 0)?
        }
    };
    expect_triple(pb, at, t.triple())?;
    Ok(at)
}

/// `k` torus pairs plumbed end to end: genus `k`, one disc, `2k` curves whose
/// intersection graph is a path.
fn torus_chain(pb: &mut PlanBuilder, k: usize, t: Target) -> Result<usize, SynthesisError> {
    let mut at = pb.family(FamilyId::TorusPair)?;
    for _ in 1..k {
        let g = pb.graph(at);
        let ig = intersection_graph(g).map_err(|e| failed(t, e.to_string()))?;
        let end = (0..ig.curves)
            .find(|&c| ig.edges.iter().filter(|e| e.0 == c || e.1 == c).count() == 1)
            .ok_or_else(|| failed(t, "torus chain has no end curve"))?;
        let cycles = g.standard_cycles()?;
        let x = cycles[end].darts[0] / 2;
        let torus = pb.family(FamilyId::TorusPair)?;
        at = pb.plumb(at, x, torus, 0)?;
    }
    let ig = intersection_graph(pb.graph(at)).map_err(|e| failed(t, e.to_string()))?;
    if ig.curves != 2 * k || !ig.is_path() {
        return Err(failed(t, "torus chain intersection graph is not a path"));
    }
    Ok(at)
}
