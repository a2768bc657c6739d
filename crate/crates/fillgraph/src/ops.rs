//! Join, connected sum and plumbing, each with its boundary/genus/curve
//! bookkeeping checked against a fresh recomputation.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::fatgraph::{assemble, cycle_count, disjoint_sigma0, rev, Dart, FatGraph, GraphError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OpError {
    #[error("{side} graph has no edge {edge}")]
    BadEdge { side: Side, edge: usize },
    #[error("{side} graph: directed edge {dart} does not exist")]
    BadDart { side: Side, dart: usize },
    #[error("{side} graph: vertex {vertex} has degree {degree}, connected sum needs degree 4")]
    BadVertex {
        side: Side,
        vertex: usize,
        degree: usize,
    },
    #[error("both operands are the same graph value")]
    SelfOperation,
    #[error("{side} operand: {source}")]
    Operand { side: Side, source: GraphError },
    #[error("splicing closes a strand with no vertex on it; the result is not a fat graph")]
    ClosedStrand,
    #[error("result could not be assembled: {0}")]
    Assemble(GraphError),
    #[error("prediction {predicted} disagrees with recomputation {recomputed} ({case})")]
    Breach {
        case: String,
        predicted: Prediction,
        recomputed: Counts,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OpKind {
    Join,
    ConnectedSum,
    Plumbing,
}

impl fmt::Display for OpKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OpKind::Join => "join",
            OpKind::ConnectedSum => "consum",
            OpKind::Plumbing => "plumb",
        })
    }
}

/// Boundary count, curve count and genus of a graph. Genus is absent for
/// disconnected graphs, curve count for undecorated ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub b: usize,
    pub s: Option<usize>,
    pub g: Option<usize>,
}

impl Counts {
    pub fn of(graph: &FatGraph) -> Counts {
        let s = if graph.is_decorated() {
            Some(graph.standard_cycles().expect("decorated").len())
        } else {
            None
        };
        Counts {
            b: graph.boundary_count(),
            s,
            g: graph.genus().ok(),
        }
    }
}

fn opt(x: Option<usize>) -> String {
    x.map_or("?".to_string(), |v| v.to_string())
}

impl fmt::Display for Counts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(b={}, s={}, g={})", self.b, opt(self.s), opt(self.g))
    }
}

/// The asserted part of a report. A `None` field is not asserted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Prediction {
    pub b: Option<usize>,
    pub s: Option<usize>,
    pub g: Option<usize>,
}

impl Prediction {
    pub fn matches(&self, c: &Counts) -> bool {
        self.b.is_none_or(|b| b == c.b)
            && self.s.is_none_or(|s| Some(s) == c.s)
            && self.g.is_none_or(|g| Some(g) == c.g)
    }

    pub fn is_empty(&self) -> bool {
        self.b.is_none() && self.s.is_none() && self.g.is_none()
    }
}

impl fmt::Display for Prediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(b={}, s={}, g={})",
            opt(self.b),
            opt(self.s),
            opt(self.g)
        )
    }
}

/// Branches of the connected-sum boundary formula, in closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ChiBranch {
    /// Some boundary of the right graph holds both directions of all four edges at `u`.
    A,
    /// No edge at `u` has both directions in one boundary.
    B,
    /// Exactly two such edges.
    C,
    /// Otherwise.
    D,
}

impl ChiBranch {
    /// `(delta b, delta g)` relative to `b1 + b2` and `g1 + g2`.
    pub fn deltas(self) -> (isize, isize) {
        match self {
            ChiBranch::A => (2, -3),
            ChiBranch::B => (-4, 0),
            ChiBranch::C => (0, -2),
            ChiBranch::D => (-2, -1),
        }
    }
}

/// Indicator sums at `u` and the branch they select. The third branch is
/// evaluated under two readings: the sum over all boundaries equals 2
/// (`branch`), or a single boundary contributes 2 (`branch_single_boundary`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChiClassification {
    /// Each edge at `w` has both directions in one boundary of the left graph.
    pub hypothesis: bool,
    /// Per edge at `u`: both directions in one boundary of the right graph.
    pub same_boundary: [bool; 4],
    /// Sum over boundaries and edges of the same-boundary indicator.
    pub same_total: usize,
    /// Sum over boundaries and edges of the corner indicator; always 4.
    pub corner_total: usize,
    /// The four corners at `u` lie in four distinct boundaries.
    pub distinct_corners: bool,
    pub branch: ChiBranch,
    pub branch_single_boundary: ChiBranch,
    /// Closed-form values, when the hypothesis holds.
    pub closed_form_prediction: Option<Prediction>,
    /// Whether the closed form matched the recomputation.
    pub closed_form_agrees: Option<bool>,
}

/// Everything an operation reports besides the graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OperationReport {
    pub op: OpKind,
    /// Case tag, e.g. `SAME/SAME`, `ALL-DIFFERENT`, `B`.
    pub case: String,
    pub left: Counts,
    pub right: Counts,
    pub predicted: Prediction,
    pub recomputed: Counts,
    /// Connected sum only.
    pub chi: Option<ChiClassification>,
    /// Join only: lengths of boundary cycles through the new edges.
    pub new_boundary_lengths: Vec<usize>,
    #[serde(skip)]
    pub result: FatGraph,
}

impl OperationReport {
    pub fn agrees(&self) -> bool {
        self.predicted.matches(&self.recomputed)
    }

    fn checked(self) -> Result<Self, OpError> {
        if self.agrees() {
            Ok(self)
        } else {
            Err(OpError::Breach {
                case: self.case.clone(),
                predicted: self.predicted,
                recomputed: self.recomputed,
            })
        }
    }

    /// One-line summary: `case=SAME/SAME b:1+1→2 s:4+2→5 g:2+1→2`.
    pub fn summary(&self) -> String {
        let show = |l: Option<usize>, r: Option<usize>, x: Option<usize>| {
            format!("{}+{}\u{2192}{}", opt(l), opt(r), opt(x))
        };
        format!(
            "case={} b:{} s:{} g:{}",
            self.case,
            show(
                Some(self.left.b),
                Some(self.right.b),
                Some(self.recomputed.b)
            ),
            show(self.left.s, self.right.s, self.recomputed.s),
            show(self.left.g, self.right.g, self.recomputed.g),
        )
    }
}

fn operand_counts(g: &FatGraph, side: Side) -> Result<Counts, OpError> {
    let c = Counts::of(g);
    if c.g.is_none() {
        return Err(OpError::Operand {
            side,
            source: GraphError::Disconnected {
                components: g.components().len(),
            },
        });
    }
    Ok(c)
}

fn check_edge(g: &FatGraph, edge: usize, side: Side) -> Result<(), OpError> {
    if edge >= g.edge_count() {
        return Err(OpError::BadEdge { side, edge });
    }
    Ok(())
}

fn unique_names(names: Vec<String>) -> Vec<String> {
    let mut seen: HashSet<String> = HashSet::new();
    names
        .into_iter()
        .map(|n| {
            let mut cand = n.clone();
            let mut k = 2;
            while seen.contains(&cand) {
                cand = format!("{n}_{k}");
                k += 1;
            }
            seen.insert(cand.clone());
            cand
        })
        .collect()
}

fn add(a: usize, b: usize, delta: isize) -> Option<usize> {
    usize::try_from(a as isize + b as isize + delta).ok()
}

/// Cuts edge `x` of `left` and edge `y` of `right` and cross-splices them
/// into two new edges: `x+ -> e+`, `y+ -> e-`, `y- -> f+`, `x- -> f-`.
pub fn join(
    left: &FatGraph,
    x: usize,
    right: &FatGraph,
    y: usize,
) -> Result<OperationReport, OpError> {
    if std::ptr::eq(left, right) {
        return Err(OpError::SelfOperation);
    }
    check_edge(left, x, Side::Left)?;
    check_edge(right, y, Side::Right)?;
    let lc = operand_counts(left, Side::Left)?;
    let rc = operand_counts(right, Side::Right)?;
    let n = left.dart_count();
    let sigma0 = disjoint_sigma0(left, right);
    let (x0, x1, y0, y1) = (2 * x, 2 * x + 1, n + 2 * y, n + 2 * y + 1);
    let mut pairs = Vec::new();
    let mut names = Vec::new();
    for k in (0..left.edge_count()).filter(|&k| k != x) {
        pairs.push((2 * k, 2 * k + 1));
        names.push(left.edge_name(k).to_string());
    }
    for k in (0..right.edge_count()).filter(|&k| k != y) {
        pairs.push((n + 2 * k, n + 2 * k + 1));
        names.push(right.edge_name(k).to_string());
    }
    pairs.push((x0, y0));
    names.push(left.edge_name(x).to_string());
    pairs.push((y1, x1));
    names.push(right.edge_name(y).to_string());
    let result =
        assemble(&sigma0, |_| true, &pairs, unique_names(names)).map_err(OpError::Assemble)?;

    let lb = left.boundary_map();
    let rb = right.boundary_map();
    let same = lb[x0] == lb[x1] && rb[2 * y] == rb[2 * y + 1];
    let (case, db, dg) = if same {
        ("SAME/SAME", 0, -1)
    } else {
        ("OTHERWISE", -2, 0)
    };
    let s = match (lc.s, rc.s) {
        (Some(a), Some(b)) => add(a, b, -1),
        _ => None,
    };
    let predicted = Prediction {
        b: add(lc.b, rc.b, db),
        s,
        g: add(lc.g.unwrap(), rc.g.unwrap(), dg),
    };
    let m = result.edge_count();
    let new_edges = [m - 2, m - 1];
    let new_boundary_lengths = result
        .boundary_cycles()
        .iter()
        .filter(|c| c.iter().any(|d| new_edges.contains(&(d / 2))))
        .map(Vec::len)
        .collect();
    OperationReport {
        op: OpKind::Join,
        case: case.to_string(),
        left: lc,
        right: rc,
        predicted,
        recomputed: Counts::of(&result),
        chi: None,
        new_boundary_lengths,
        result,
    }
    .checked()
}

/// Splits edge `x` of `left` and `y` of `right` and joins the halves at a
/// new vertex `(x1-, y1-, x2+, y2+)`, with `x+ -> x1+`, `x- -> x2-`,
/// `y+ -> y1+`, `y- -> y2-`.
pub fn plumbing(
    left: &FatGraph,
    x: usize,
    right: &FatGraph,
    y: usize,
) -> Result<OperationReport, OpError> {
    if std::ptr::eq(left, right) {
        return Err(OpError::SelfOperation);
    }
    check_edge(left, x, Side::Left)?;
    check_edge(right, y, Side::Right)?;
    let lc = operand_counts(left, Side::Left)?;
    let rc = operand_counts(right, Side::Right)?;
    let n = left.dart_count();
    let mut sigma0 = disjoint_sigma0(left, right);
    let base = sigma0.len();
    let (x1b, x2f, y1b, y2f) = (base, base + 1, base + 2, base + 3);
    sigma0.extend([y1b, y2f, x2f, x1b]);
    let (x0, x1, y0, y1) = (2 * x, 2 * x + 1, n + 2 * y, n + 2 * y + 1);
    let mut pairs = Vec::new();
    let mut names = Vec::new();
    for k in (0..left.edge_count()).filter(|&k| k != x) {
        pairs.push((2 * k, 2 * k + 1));
        names.push(left.edge_name(k).to_string());
    }
    for k in (0..right.edge_count()).filter(|&k| k != y) {
        pairs.push((n + 2 * k, n + 2 * k + 1));
        names.push(right.edge_name(k).to_string());
    }
    let (xn, yn) = (left.edge_name(x), right.edge_name(y));
    pairs.extend([(x0, x1b), (x2f, x1), (y0, y1b), (y2f, y1)]);
    names.extend([
        format!("{xn}_1"),
        format!("{xn}_2"),
        format!("{yn}_1"),
        format!("{yn}_2"),
    ]);
    let result =
        assemble(&sigma0, |_| true, &pairs, unique_names(names)).map_err(OpError::Assemble)?;

    let lb = left.boundary_map();
    let rb = right.boundary_map();
    let all_different = lb[x0] != lb[x1] && rb[2 * y] != rb[2 * y + 1];
    let (case, db, dg) = if all_different {
        ("ALL-DIFFERENT", -3, 1)
    } else {
        ("OTHERWISE", -1, 0)
    };
    let s = match (lc.s, rc.s) {
        (Some(a), Some(b)) => Some(a + b),
        _ => None,
    };
    let predicted = Prediction {
        b: add(lc.b, rc.b, db),
        s,
        g: add(lc.g.unwrap(), rc.g.unwrap(), dg),
    };
    OperationReport {
        op: OpKind::Plumbing,
        case: case.to_string(),
        left: lc,
        right: rc,
        predicted,
        recomputed: Counts::of(&result),
        chi: None,
        new_boundary_lengths: Vec::new(),
        result,
    }
    .checked()
}

/// The rotation at the vertex of `d`, starting at `d`.
fn rotation_from(g: &FatGraph, d: Dart) -> Vec<Dart> {
    let s = g.sigma0();
    let mut out = vec![d];
    let mut e = s[d];
    while e != d {
        out.push(e);
        e = s[e];
    }
    out
}

/// For each slot `j` of `slots`, the slot at which the boundary walk that
/// leaves along slot `j` first comes back.
fn return_map(g: &FatGraph, slots: &[Dart]) -> [usize; 4] {
    let s = g.sigma0();
    let mut t = [0; 4];
    for (j, &start) in slots.iter().enumerate() {
        let mut d = start;
        loop {
            let a = rev(d);
            if let Some(k) = slots.iter().position(|&x| x == a) {
                t[j] = k;
                break;
            }
            d = s[a];
        }
    }
    t
}

fn has_loop(slots: &[Dart]) -> bool {
    slots.iter().any(|&d| slots.contains(&rev(d)))
}

/// Both strands through the vertex belong to different curves.
fn is_transverse_crossing(g: &FatGraph, slots: &[Dart]) -> bool {
    let Ok(cycles) = g.standard_cycles() else {
        return false;
    };
    let mut curve = vec![0; g.edge_count()];
    for (i, c) in cycles.iter().enumerate() {
        for e in c.edges() {
            curve[e] = i;
        }
    }
    curve[slots[0] / 2] != curve[slots[1] / 2]
}

fn classify_chi(left: &FatGraph, w: &[Dart], right: &FatGraph, u: &[Dart]) -> ChiClassification {
    let lb = left.boundary_map();
    let rb = right.boundary_map();
    let hypothesis = w.iter().all(|&d| lb[d] == lb[rev(d)]);
    let mut same_boundary = [false; 4];
    for i in 0..4 {
        same_boundary[i] = rb[u[i]] == rb[rev(u[i])];
    }
    let same_total = same_boundary.iter().filter(|&&x| x).count();
    let corner_total = (0..4)
        .filter(|&i| rb[rev(u[i])] == rb[u[(i + 1) % 4]])
        .count();
    let corners: HashSet<usize> = (0..4).map(|i| rb[u[i]]).collect();
    let distinct_corners = corners.len() == 4;
    let mut per_boundary = std::collections::BTreeMap::new();
    for i in 0..4 {
        if same_boundary[i] {
            *per_boundary.entry(rb[u[i]]).or_insert(0usize) += 1;
        }
    }
    let some_four = per_boundary.values().any(|&c| c == 4);
    let some_two = per_boundary.values().any(|&c| c == 2);
    let pick = |third: bool| {
        if some_four {
            ChiBranch::A
        } else if same_total == 0 && corner_total == 4 {
            ChiBranch::B
        } else if third {
            ChiBranch::C
        } else {
            ChiBranch::D
        }
    };
    ChiClassification {
        hypothesis,
        same_boundary,
        same_total,
        corner_total,
        distinct_corners,
        branch: pick(same_total == 2),
        branch_single_boundary: pick(some_two),
        closed_form_prediction: None,
        closed_form_agrees: None,
    }
}

/// Deletes the 4-valent vertices at `w` (in `left`) and `u` (in `right`)
/// and splices the strand arriving at slot `i` of `w` into slot `3 - i` of
/// `u`. Slots are numbered along the rotation starting at the given
/// directed edges, so `w` and `u` also fix the alignment.
pub fn connected_sum(
    left: &FatGraph,
    w: Dart,
    right: &FatGraph,
    u: Dart,
) -> Result<OperationReport, OpError> {
    if std::ptr::eq(left, right) {
        return Err(OpError::SelfOperation);
    }
    if w >= left.dart_count() {
        return Err(OpError::BadDart {
            side: Side::Left,
            dart: w,
        });
    }
    if u >= right.dart_count() {
        return Err(OpError::BadDart {
            side: Side::Right,
            dart: u,
        });
    }
    let wc = rotation_from(left, w);
    let uc = rotation_from(right, u);
    if wc.len() != 4 {
        return Err(OpError::BadVertex {
            side: Side::Left,
            vertex: left.vertex_map()[w],
            degree: wc.len(),
        });
    }
    if uc.len() != 4 {
        return Err(OpError::BadVertex {
            side: Side::Right,
            vertex: right.vertex_map()[u],
            degree: uc.len(),
        });
    }
    let lc = operand_counts(left, Side::Left)?;
    let rc = operand_counts(right, Side::Right)?;
    let n = left.dart_count();
    let sigma0 = disjoint_sigma0(left, right);
    let uc_all: Vec<Dart> = uc.iter().map(|d| d + n).collect();
    let total = sigma0.len();
    let mut dead = vec![false; total];
    let mut portal = vec![usize::MAX; total];
    for i in 0..4 {
        dead[wc[i]] = true;
        dead[uc_all[i]] = true;
        portal[wc[i]] = uc_all[3 - i];
        portal[uc_all[3 - i]] = wc[i];
    }
    let name_of = |d: Dart| {
        if d < n {
            left.edge_name(d / 2).to_string()
        } else {
            right.edge_name((d - n) / 2).to_string()
        }
    };
    let mut used = vec![false; total];
    let mut pairs = Vec::new();
    let mut names = Vec::new();
    for a in 0..total {
        if dead[a] || used[a] {
            continue;
        }
        if !dead[rev(a)] {
            if a % 2 == 0 {
                used[a] = true;
                used[rev(a)] = true;
                pairs.push((a, rev(a)));
                names.push(name_of(a));
            }
            continue;
        }
        let mut p = rev(a);
        let r = loop {
            used[p] = true;
            let q = portal[p];
            used[q] = true;
            let r = rev(q);
            if dead[r] {
                p = r;
                continue;
            }
            break r;
        };
        used[a] = true;
        used[r] = true;
        pairs.push((a, r));
        names.push(name_of(a));
    }
    if (0..total).any(|d| dead[d] && !used[d]) || pairs.is_empty() {
        return Err(OpError::ClosedStrand);
    }
    let result =
        assemble(&sigma0, |d| !dead[d], &pairs, unique_names(names)).map_err(OpError::Assemble)?;
    let recomputed = Counts::of(&result);

    // corner-return law
    let tw = return_map(left, &wc);
    let tu = return_map(right, &uc);
    let corner = |t: [usize; 4]| -> Vec<usize> { (0..4).map(|i| t[(i + 1) % 4]).collect() };
    let merged: Vec<usize> = (0..4).map(|i| tw[3 - tu[3 - i]]).collect();
    let (lg, rg) = (lc.g.unwrap(), rc.g.unwrap());
    let mut predicted = Prediction::default();
    let law_applies = !(has_loop(&wc) && has_loop(&uc));
    if law_applies {
        let b = (lc.b + rc.b + cycle_count(&merged)) as isize
            - cycle_count(&corner(tw)) as isize
            - cycle_count(&corner(tu)) as isize;
        predicted.b = usize::try_from(b).ok();
        if recomputed.g.is_some() {
            predicted.g = predicted.b.and_then(|b| {
                let twice = 2 * (lg + rg) as isize - 4 + (lc.b + rc.b) as isize - b as isize;
                (twice >= 0 && twice % 2 == 0).then_some(twice as usize / 2)
            });
        }
    }
    if let (Some(ls), Some(rs)) = (lc.s, rc.s) {
        if is_transverse_crossing(left, &wc) && is_transverse_crossing(right, &uc) {
            predicted.s = add(ls, rs, -2);
        }
    }

    let mut chi = classify_chi(left, &wc, right, &uc);
    if chi.hypothesis {
        let (db, dg) = chi.branch.deltas();
        let closed = Prediction {
            b: add(lc.b, rc.b, db),
            s: lc.s.zip(rc.s).and_then(|(a, b)| add(a, b, -2)),
            g: add(lg, rg, dg),
        };
        chi.closed_form_agrees = Some(closed.matches(&recomputed));
        chi.closed_form_prediction = Some(closed);
    }
    let case = if law_applies {
        format!("{:?}", chi.branch)
    } else {
        format!(
            "{:?} (law not applicable: loops at both vertices)",
            chi.branch
        )
    };
    OperationReport {
        op: OpKind::ConnectedSum,
        case,
        left: lc,
        right: rc,
        predicted,
        recomputed,
        chi: Some(chi),
        new_boundary_lengths: Vec::new(),
        result,
    }
    .checked()
}

/// The directed edge at slot `offset` of vertex `vertex`, for use as the
/// alignment argument of [`connected_sum`].
pub fn vertex_slot(g: &FatGraph, vertex: usize, offset: usize) -> Option<Dart> {
    let vs = g.vertices();
    let v = vs.get(vertex)?;
    Some(v[offset % v.len()])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build, published_vertex, FamilyId};

    #[test]
    fn join_two_tori_along_loops() {
        let t = build(FamilyId::TorusPair).unwrap();
        let t2 = t.clone();
        let r = join(&t, 0, &t2, 0).unwrap();
        assert_eq!(r.case, "SAME/SAME");
        assert_eq!((r.recomputed.b, r.recomputed.g), (2, Some(1)));
        assert!(r.new_boundary_lengths.iter().all(|&l| l > 2));
    }

    #[test]
    fn join_rejects_same_value() {
        let t = build(FamilyId::TorusPair).unwrap();
        assert_eq!(join(&t, 0, &t, 0).unwrap_err(), OpError::SelfOperation);
        assert!(matches!(
            join(&t, 7, &t.clone(), 0),
            Err(OpError::BadEdge { .. })
        ));
    }

    #[test]
    fn plumb_two_tori() {
        let t = build(FamilyId::TorusPair).unwrap();
        let r = plumbing(&t, 0, &t.clone(), 0).unwrap();
        assert_eq!(r.result.vertex_count(), 3);
        assert_eq!(r.result.edge_count(), 6);
        assert_eq!(
            r.recomputed,
            Counts {
                b: 1,
                s: Some(4),
                g: Some(2)
            }
        );
    }

    #[test]
    fn consum_gamma0_g2() {
        let a = build(FamilyId::Gamma0).unwrap();
        let b = build(FamilyId::G2).unwrap();
        let (_, w) = published_vertex(FamilyId::Gamma0, 0).unwrap().unwrap();
        let (_, u) = published_vertex(FamilyId::G2, 0).unwrap().unwrap();
        let r = connected_sum(&a, w, &b, u).unwrap();
        assert_eq!(
            r.recomputed,
            Counts {
                b: 1,
                s: Some(3),
                g: Some(5)
            }
        );
        let chi = r.chi.unwrap();
        assert_eq!(chi.branch, ChiBranch::B);
        assert_eq!(chi.closed_form_agrees, Some(true));
    }

    #[test]
    fn consum_bad_vertex() {
        let a = build(FamilyId::SphereCircle).unwrap();
        let b = build(FamilyId::G2).unwrap();
        assert!(matches!(
            connected_sum(&a, 0, &b, 0),
            Err(OpError::BadVertex { .. })
        ));
    }

    #[test]
    fn consum_of_two_tori_closes_strands() {
        let t = build(FamilyId::TorusPair).unwrap();
        assert_eq!(
            connected_sum(&t, 0, &t.clone(), 0).unwrap_err(),
            OpError::ClosedStrand
        );
    }
}
