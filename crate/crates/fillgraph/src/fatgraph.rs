//! Fat graphs as a rotation permutation over directed edges.
//!
//! Undirected edge `k` owns the directed edges `2k` (forward, written `k+`)
//! and `2k + 1` (backward, written `k-`), so the reversal involution is
//! `d ^ 1` and never needs to be stored.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A directed edge id. Edge `d / 2`, forward iff `d` is even.
pub type Dart = usize;

#[inline]
pub fn rev(d: Dart) -> Dart {
    d ^ 1
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge label `{label}` appears {count} time(s); every label must appear exactly twice")]
    LabelCount { label: String, count: usize },
    #[error("edge label `{label}` cannot be paired: {reason}")]
    LabelPairing { label: String, reason: String },
    #[error("vertex {vertex} has degree {degree}; every vertex needs degree at least 2")]
    Degree { vertex: usize, degree: usize },
    #[error("rotation is not a permutation of 0..{0}")]
    NotPermutation(usize),
    #[error("directed edge count {0} is odd")]
    OddDartCount(usize),
    #[error("graph has no edges")]
    Empty,
    #[error("vertex {vertex} has odd degree {degree}; standard cycles need every degree even")]
    OddDegree { vertex: usize, degree: usize },
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("cannot parse half-edge `{0}`; expected forms like `x+`, `x-` or `x+#1`")]
    BadHalfEdge(String),
    #[error("{0} names given for {1} edges")]
    NameCount(usize, usize),
    #[error("duplicate edge name `{0}`")]
    DuplicateName(String),
}

/// Direction of a half-edge occurrence in a vertex cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    Forward,
    Backward,
}

impl Dir {
    fn parity(self) -> usize {
        match self {
            Dir::Forward => 0,
            Dir::Backward => 1,
        }
    }
}

/// A signed edge label as written in a vertex cycle, e.g. `f3+` or `x1-`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HalfEdge {
    pub edge: String,
    pub dir: Dir,
    /// Disambiguates two equal signed labels at one vertex (`x+#0`, `x+#1`).
    pub occurrence: Option<u8>,
}

impl HalfEdge {
    pub fn fwd(edge: impl Into<String>) -> Self {
        HalfEdge {
            edge: edge.into(),
            dir: Dir::Forward,
            occurrence: None,
        }
    }

    pub fn bwd(edge: impl Into<String>) -> Self {
        HalfEdge {
            edge: edge.into(),
            dir: Dir::Backward,
            occurrence: None,
        }
    }
}

impl fmt::Display for HalfEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.dir {
            Dir::Forward => '+',
            Dir::Backward => '-',
        };
        write!(f, "{}{}", self.edge, sign)?;
        if let Some(k) = self.occurrence {
            write!(f, "#{k}")?;
        }
        Ok(())
    }
}

impl FromStr for HalfEdge {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GraphError::BadHalfEdge(s.to_string());
        let (body, occurrence) = match s.rsplit_once('#') {
            Some((b, k)) => (b, Some(k.parse::<u8>().map_err(|_| bad())?)),
            None => (s, None),
        };
        let (edge, dir) = if let Some(e) = body.strip_suffix('+') {
            (e, Dir::Forward)
        } else if let Some(e) = body.strip_suffix('-') {
            (e, Dir::Backward)
        } else if let Some(e) = body.strip_suffix('\u{2212}') {
            (e, Dir::Backward)
        } else {
            return Err(bad());
        };
        if edge.is_empty() {
            return Err(bad());
        }
        Ok(HalfEdge {
            edge: edge.to_string(),
            dir,
            occurrence,
        })
    }
}

/// A fat graph: rotation `sigma0` on directed edges plus the implicit
/// reversal `d ^ 1`. Values are immutable; operations build new graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FatGraph {
    sigma0: Vec<Dart>,
    names: Vec<String>,
}

/// Genus, boundary count and cycle count with the usual flags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SurfaceSignature {
    pub genus: usize,
    pub boundary_count: usize,
    pub standard_cycle_count: Option<usize>,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub is_connected: bool,
    pub is_four_regular: bool,
    pub is_decorated: bool,
    pub is_filling: bool,
}

impl SurfaceSignature {
    /// `(g, b, s)`, with `s = 0` for undecorated graphs.
    pub fn triple(&self) -> (usize, usize, usize) {
        (
            self.genus,
            self.boundary_count,
            self.standard_cycle_count.unwrap_or(0),
        )
    }
}

/// One curve of a decorated graph: the directed edges it traverses, in order,
/// starting from its least directed edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardCycle {
    pub darts: Vec<Dart>,
}

impl StandardCycle {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.darts.iter().map(|d| d / 2)
    }
}

/// Why a graph fails the filling predicate. Ordered as the checks run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FillingIssue {
    Disconnected { components: usize },
    NotFourRegular { vertex: usize, degree: usize },
    SelfCrossing { cycle: usize, vertex: usize },
    ShortBoundary { cycle: usize, length: usize },
}

impl fmt::Display for FillingIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FillingIssue::Disconnected { components } => {
                write!(f, "disconnected ({components} components)")
            }
            FillingIssue::NotFourRegular { vertex, degree } => {
                write!(f, "not 4-regular (vertex {vertex} has degree {degree})")
            }
            FillingIssue::SelfCrossing { cycle, vertex } => {
                write!(
                    f,
                    "standard cycle {cycle} crosses itself at vertex {vertex}"
                )
            }
            FillingIssue::ShortBoundary { cycle, length } => {
                write!(f, "boundary cycle {cycle} has length {length} < 3")
            }
        }
    }
}

/// Outcome of the filling predicate. Empty diagnostics means filling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FillingReport {
    pub issues: Vec<FillingIssue>,
}

impl FillingReport {
    pub fn is_filling(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn first(&self) -> Option<&FillingIssue> {
        self.issues.first()
    }
}

/// Isomorphism-invariant code: one sorted code per connected component.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(pub Vec<Vec<u32>>);

impl CanonicalForm {
    /// Compact textual key, components separated by `|`.
    pub fn key(&self) -> String {
        self.0
            .iter()
            .map(|c| {
                c.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(".")
            })
            .collect::<Vec<_>>()
            .join("|")
    }
}

pub(crate) fn orbits(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            cyc.push(d);
            d = perm[d];
        }
        out.push(cyc);
    }
    out
}

pub(crate) fn cycle_count(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut n = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        n += 1;
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            d = perm[d];
        }
    }
    n
}

fn default_names(m: usize) -> Vec<String> {
    (0..m).map(|k| format!("e{k}")).collect()
}

impl FatGraph {
    /// Builds from a rotation on `0..2m`; edges get default names `e0, e1, ...`.
    pub fn from_sigma0(sigma0: Vec<Dart>) -> Result<Self, GraphError> {
        let m = sigma0.len() / 2;
        Self::from_sigma0_named(sigma0, default_names(m))
    }

    pub fn from_sigma0_named(sigma0: Vec<Dart>, names: Vec<String>) -> Result<Self, GraphError> {
        let n = sigma0.len();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n % 2 == 1 {
            return Err(GraphError::OddDartCount(n));
        }
        let mut hit = vec![false; n];
        for &d in &sigma0 {
            if d >= n || hit[d] {
                return Err(GraphError::NotPermutation(n));
            }
            hit[d] = true;
        }
        if names.len() != n / 2 {
            return Err(GraphError::NameCount(names.len(), n / 2));
        }
        let mut seen = std::collections::HashSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(GraphError::DuplicateName(name.clone()));
            }
        }
        let g = FatGraph { sigma0, names };
        for (i, v) in g.vertices().iter().enumerate() {
            if v.len() < 2 {
                return Err(GraphError::Degree {
                    vertex: i,
                    degree: v.len(),
                });
            }
        }
        Ok(g)
    }

    /// Builds from vertex cycles of signed labels. Each label must occur
    /// exactly twice; `x+` becomes the forward direction and `x-` the
    /// backward one. Edge ids follow first appearance.
    pub fn from_vertex_cycles(cycles: &[Vec<HalfEdge>]) -> Result<Self, GraphError> {
        let mut order: Vec<String> = Vec::new();
        let mut occ: HashMap<&str, Vec<&HalfEdge>> = HashMap::new();
        for h in cycles.iter().flatten() {
            let e = occ.entry(h.edge.as_str()).or_default();
            if e.is_empty() {
                order.push(h.edge.clone());
            }
            e.push(h);
        }
        let mut id: HashMap<&str, usize> = HashMap::new();
        for (k, name) in order.iter().enumerate() {
            id.insert(name.as_str(), k);
        }
        for name in &order {
            let hs = &occ[name.as_str()];
            if hs.len() != 2 {
                return Err(GraphError::LabelCount {
                    label: name.clone(),
                    count: hs.len(),
                });
            }
        }
        let dart_of = |h: &HalfEdge| -> Result<Dart, GraphError> {
            let k = id[h.edge.as_str()];
            let hs = &occ[h.edge.as_str()];
            let (a, b) = (hs[0], hs[1]);
            let parity = if a.dir != b.dir {
                h.dir.parity()
            } else {
                match (a.occurrence, b.occurrence) {
                    (Some(x), Some(y)) if x != y => {
                        let lo = x.min(y);
                        usize::from(h.occurrence != Some(lo))
                    }
                    _ => {
                        return Err(GraphError::LabelPairing {
                            label: h.edge.clone(),
                            reason: "both occurrences carry the same direction; use `#0`/`#1`"
                                .into(),
                        })
                    }
                }
            };
            Ok(2 * k + parity)
        };
        let n = 2 * order.len();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut sigma0 = vec![usize::MAX; n];
        for (vi, c) in cycles.iter().enumerate() {
            if c.len() < 2 {
                return Err(GraphError::Degree {
                    vertex: vi,
                    degree: c.len(),
                });
            }
            let ds = c.iter().map(dart_of).collect::<Result<Vec<_>, _>>()?;
            for (j, &d) in ds.iter().enumerate() {
                sigma0[d] = ds[(j + 1) % ds.len()];
            }
        }
        Self::from_sigma0_named(sigma0, order)
    }

    /// Convenience over [`FatGraph::from_vertex_cycles`] with string labels.
    pub fn from_words<S: AsRef<str>>(cycles: &[Vec<S>]) -> Result<Self, GraphError> {
        let parsed = cycles
            .iter()
            .map(|c| {
                c.iter()
                    .map(|s| s.as_ref().parse())
                    .collect::<Result<Vec<HalfEdge>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_vertex_cycles(&parsed)
    }

    pub fn dart_count(&self) -> usize {
        self.sigma0.len()
    }

    pub fn edge_count(&self) -> usize {
        self.sigma0.len() / 2
    }

    pub fn sigma0(&self) -> &[Dart] {
        &self.sigma0
    }

    pub fn sigma0_inverse(&self) -> Vec<Dart> {
        let mut inv = vec![0; self.sigma0.len()];
        for (d, &e) in self.sigma0.iter().enumerate() {
            inv[e] = d;
        }
        inv
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn edge_name(&self, edge: usize) -> &str {
        &self.names[edge]
    }

    pub fn edge_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn half_edge(&self, d: Dart) -> HalfEdge {
        HalfEdge {
            edge: self.names[d / 2].clone(),
            dir: if d.is_multiple_of(2) {
                Dir::Forward
            } else {
                Dir::Backward
            },
            occurrence: None,
        }
    }

    pub fn dart(&self, h: &HalfEdge) -> Option<Dart> {
        self.edge_by_name(&h.edge).map(|k| 2 * k + h.dir.parity())
    }

    /// Same rotation, new edge names.
    pub fn with_names(&self, names: Vec<String>) -> Result<Self, GraphError> {
        Self::from_sigma0_named(self.sigma0.clone(), names)
    }

    /// Same rotation with default names `e0, e1, ...`.
    pub fn with_default_names(&self) -> Self {
        FatGraph {
            sigma0: self.sigma0.clone(),
            names: default_names(self.edge_count()),
        }
    }

    /// Vertices as sigma0 orbits, each starting at its least directed edge,
    /// sorted by that edge.
    pub fn vertices(&self) -> Vec<Vec<Dart>> {
        orbits(&self.sigma0)
    }

    pub fn vertex_count(&self) -> usize {
        cycle_count(&self.sigma0)
    }

    /// Vertex index (in [`FatGraph::vertices`] order) of every directed edge.
    pub fn vertex_map(&self) -> Vec<usize> {
        let mut map = vec![0; self.dart_count()];
        for (i, v) in self.vertices().iter().enumerate() {
            for &d in v {
                map[d] = i;
            }
        }
        map
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.vertices().iter().map(Vec::len).collect()
    }

    pub fn is_four_regular(&self) -> bool {
        self.vertices().iter().all(|v| v.len() == 4)
    }

    pub fn is_decorated(&self) -> bool {
        self.vertices().iter().all(|v| v.len() % 2 == 0)
    }

    /// Rotation at every vertex as signed labels, in [`FatGraph::vertices`] order.
    pub fn vertex_cycles(&self) -> Vec<Vec<HalfEdge>> {
        self.vertices()
            .iter()
            .map(|v| v.iter().map(|&d| self.half_edge(d)).collect())
            .collect()
    }

    /// Connected components as sorted lists of directed edges.
    pub fn components(&self) -> Vec<Vec<Dart>> {
        let n = self.dart_count();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let c = out.len();
            let mut stack = vec![s];
            comp[s] = c;
            let mut members = Vec::new();
            while let Some(d) = stack.pop() {
                members.push(d);
                for e in [self.sigma0[d], rev(d)] {
                    if comp[e] == usize::MAX {
                        comp[e] = c;
                        stack.push(e);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// The boundary permutation `sigma1 . sigma0^-1` (right to left).
    pub fn boundary_permutation(&self) -> Vec<Dart> {
        let inv = self.sigma0_inverse();
        (0..self.dart_count()).map(|d| rev(inv[d])).collect()
    }

    /// Boundary cycles: the orbits of `sigma1 . sigma0^-1`, sorted by least
    /// directed edge. Each orbit is listed in walking order
    /// `d -> sigma0(sigma1(d))` starting at its least edge, which is the
    /// direction in which boundary words are conventionally read.
    pub fn boundary_cycles(&self) -> Vec<Vec<Dart>> {
        let walk: Vec<Dart> = (0..self.dart_count())
            .map(|d| self.sigma0[rev(d)])
            .collect();
        orbits(&walk)
    }

    pub fn boundary_count(&self) -> usize {
        cycle_count(&self.boundary_permutation())
    }

    /// Boundary cycle index of every directed edge.
    pub fn boundary_map(&self) -> Vec<usize> {
        let mut map = vec![0; self.dart_count()];
        for (i, c) in self.boundary_cycles().iter().enumerate() {
            for &d in c {
                map[d] = i;
            }
        }
        map
    }

    /// The map `d -> sigma0^(k)(sigma1(d))` with `2k` the degree at the head
    /// of `d`: continue straight through the vertex.
    pub fn standard_successor(&self) -> Result<Vec<Dart>, GraphError> {
        let vs = self.vertices();
        let vmap = self.vertex_map();
        for (i, v) in vs.iter().enumerate() {
            if v.len() % 2 == 1 {
                return Err(GraphError::OddDegree {
                    vertex: i,
                    degree: v.len(),
                });
            }
        }
        Ok((0..self.dart_count())
            .map(|d| {
                let mut e = rev(d);
                for _ in 0..vs[vmap[e]].len() / 2 {
                    e = self.sigma0[e];
                }
                e
            })
            .collect())
    }

    /// Standard cycles, one per curve, ordered by least directed edge.
    pub fn standard_cycles(&self) -> Result<Vec<StandardCycle>, GraphError> {
        let succ = self.standard_successor()?;
        let mut edge_seen = vec![false; self.edge_count()];
        let mut out = Vec::new();
        for start in 0..self.dart_count() {
            if edge_seen[start / 2] {
                continue;
            }
            let mut darts = Vec::new();
            let mut d = start;
            loop {
                edge_seen[d / 2] = true;
                darts.push(d);
                d = succ[d];
                if d == start {
                    break;
                }
            }
            out.push(StandardCycle { darts });
        }
        Ok(out)
    }

    /// Genus via Euler's relation. Requires a connected graph.
    pub fn genus(&self) -> Result<usize, GraphError> {
        let comps = self.components().len();
        if comps != 1 {
            return Err(GraphError::Disconnected { components: comps });
        }
        let two_g = 2 + self.edge_count() as isize
            - self.vertex_count() as isize
            - self.boundary_count() as isize;
        assert!(
            two_g >= 0 && two_g % 2 == 0,
            "Euler characteristic parity violated"
        );
        Ok(two_g as usize / 2)
    }

    pub fn signature(&self) -> Result<SurfaceSignature, GraphError> {
        let genus = self.genus()?;
        let is_decorated = self.is_decorated();
        let standard_cycle_count = if is_decorated {
            Some(self.standard_cycles()?.len())
        } else {
            None
        };
        Ok(SurfaceSignature {
            genus,
            boundary_count: self.boundary_count(),
            standard_cycle_count,
            vertex_count: self.vertex_count(),
            edge_count: self.edge_count(),
            is_connected: true,
            is_four_regular: self.is_four_regular(),
            is_decorated,
            is_filling: self.filling_report().is_filling(),
        })
    }

    /// Checks, in order: connected, 4-regular, simple standard cycles,
    /// boundary cycles of length at least 3.
    pub fn filling_report(&self) -> FillingReport {
        let mut issues = Vec::new();
        let comps = self.components().len();
        if comps != 1 {
            issues.push(FillingIssue::Disconnected { components: comps });
        }
        if let Some((i, v)) = self
            .vertices()
            .iter()
            .enumerate()
            .find(|(_, v)| v.len() != 4)
        {
            issues.push(FillingIssue::NotFourRegular {
                vertex: i,
                degree: v.len(),
            });
            return FillingReport { issues };
        }
        let vmap = self.vertex_map();
        let cycles = self
            .standard_cycles()
            .expect("4-regular graphs are decorated");
        for (ci, c) in cycles.iter().enumerate() {
            let mut hit = vec![false; self.vertex_count()];
            for &d in &c.darts {
                let v = vmap[rev(d)];
                if hit[v] {
                    issues.push(FillingIssue::SelfCrossing {
                        cycle: ci,
                        vertex: v,
                    });
                    break;
                }
                hit[v] = true;
            }
        }
        for (bi, b) in self.boundary_cycles().iter().enumerate() {
            if b.len() < 3 {
                issues.push(FillingIssue::ShortBoundary {
                    cycle: bi,
                    length: b.len(),
                });
            }
        }
        FillingReport { issues }
    }

    pub fn is_filling_system(&self) -> bool {
        self.filling_report().is_filling()
    }

    /// Canonical code of the component containing `root`, relabelled by a
    /// breadth-first walk that alternates sigma0 and sigma1. Returns `None`
    /// as soon as the code exceeds `bound`.
    fn code_from(&self, root: Dart, size: usize, bound: Option<&[u32]>) -> Option<Vec<u32>> {
        const UNSET: u32 = u32::MAX;
        let mut label = vec![UNSET; self.dart_count()];
        let mut order = Vec::with_capacity(size);
        label[root] = 0;
        label[rev(root)] = 1;
        order.push(root);
        order.push(rev(root));
        let mut next = 2u32;
        let mut code = Vec::with_capacity(size);
        let mut tight = bound.is_some();
        for i in 0..size {
            let d = order[i];
            let e = self.sigma0[d];
            if label[e] == UNSET {
                label[e] = next;
                label[rev(e)] = next + 1;
                order.push(e);
                order.push(rev(e));
                next += 2;
            }
            let x = label[e];
            if tight {
                let b = bound.unwrap()[i];
                if x > b {
                    return None;
                }
                if x < b {
                    tight = false;
                }
            }
            code.push(x);
        }
        Some(code)
    }

    fn component_code(&self, comp: &[Dart]) -> Vec<u32> {
        let mut best: Option<Vec<u32>> = None;
        for &r in comp {
            if let Some(c) = self.code_from(r, comp.len(), best.as_deref()) {
                if best.as_ref().is_none_or(|b| c < *b) {
                    best = Some(c);
                }
            }
        }
        best.expect("component is non-empty")
    }

    /// Least relabelling over all starting directed edges, per component.
    pub fn canonical_form(&self) -> CanonicalForm {
        let mut codes: Vec<Vec<u32>> = self
            .components()
            .iter()
            .map(|c| self.component_code(c))
            .collect();
        codes.sort();
        CanonicalForm(codes)
    }

    pub fn is_isomorphic(&self, other: &FatGraph) -> bool {
        self.dart_count() == other.dart_count()
            && self.vertex_count() == other.vertex_count()
            && self.canonical_form() == other.canonical_form()
    }

    /// Rebuilds the graph whose directed edge `d` becomes
    /// `2 * edge_perm[d / 2] + (d % 2 ^ flip[d / 2])`. Names follow their edges.
    pub fn relabelled(&self, edge_perm: &[usize], flip: &[bool]) -> FatGraph {
        let m = self.edge_count();
        assert_eq!(edge_perm.len(), m);
        assert_eq!(flip.len(), m);
        let map = |d: Dart| 2 * edge_perm[d / 2] + ((d % 2) ^ usize::from(flip[d / 2]));
        let mut sigma0 = vec![0; self.dart_count()];
        let mut names = vec![String::new(); m];
        for d in 0..self.dart_count() {
            sigma0[map(d)] = map(self.sigma0[d]);
        }
        for k in 0..m {
            names[edge_perm[k]] = self.names[k].clone();
        }
        FatGraph { sigma0, names }
    }

    /// Merges the two edges at a degree-2 vertex into one, removing the
    /// vertex. The merged edge keeps the name of the first edge at `vertex`.
    pub fn suppress_degree_two(&self, vertex: usize) -> Result<FatGraph, GraphError> {
        let vs = self.vertices();
        let v = &vs[vertex];
        if v.len() != 2 {
            return Err(GraphError::Degree {
                vertex,
                degree: v.len(),
            });
        }
        let (a, b) = (v[0], v[1]);
        if rev(a) == b {
            // a closed circle with nothing else on it
            return Err(GraphError::Empty);
        }
        // new edge joins rev(a) and rev(b); rev(a) plays forward if a is backward
        let mut pairs = Vec::new();
        let mut keep = Vec::new();
        for k in 0..self.edge_count() {
            if k == a / 2 || k == b / 2 {
                continue;
            }
            pairs.push((2 * k, 2 * k + 1));
            keep.push(self.names[k].clone());
        }
        pairs.push((rev(b), rev(a)));
        keep.push(self.names[a / 2].clone());
        let dead = [a, b];
        assemble(&self.sigma0, |d| !dead.contains(&d), &pairs, keep).map_err(|_| GraphError::Empty)
    }
}

/// Rebuilds a graph from a rotation on an arbitrary dart space. `alive`
/// selects the surviving darts; `pairs` lists every surviving edge as
/// (forward, backward) old darts. Rotation cycles skip dead darts.
pub(crate) fn assemble(
    sigma0: &[Dart],
    alive: impl Fn(Dart) -> bool,
    pairs: &[(Dart, Dart)],
    names: Vec<String>,
) -> Result<FatGraph, GraphError> {
    let mut new_id = vec![usize::MAX; sigma0.len()];
    for (k, &(f, b)) in pairs.iter().enumerate() {
        new_id[f] = 2 * k;
        new_id[b] = 2 * k + 1;
    }
    let mut out = vec![usize::MAX; 2 * pairs.len()];
    for d in 0..sigma0.len() {
        if !alive(d) {
            continue;
        }
        let mut e = sigma0[d];
        while !alive(e) {
            e = sigma0[e];
        }
        debug_assert!(new_id[d] != usize::MAX && new_id[e] != usize::MAX);
        out[new_id[d]] = new_id[e];
    }
    FatGraph::from_sigma0_named(out, names)
}

/// Disjoint union; right darts are shifted by the left dart count.
pub(crate) fn disjoint_sigma0(a: &FatGraph, b: &FatGraph) -> Vec<Dart> {
    let n = a.dart_count();
    a.sigma0
        .iter()
        .copied()
        .chain(b.sigma0.iter().map(|&d| d + n))
        .collect()
}

impl fmt::Display for FatGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .vertex_cycles()
            .iter()
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|h| h.to_string()).collect();
                format!("({})", inner.join(", "))
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(words: &[&[&str]]) -> FatGraph {
        let cycles: Vec<Vec<&str>> = words.iter().map(|c| c.to_vec()).collect();
        FatGraph::from_words(&cycles).unwrap()
    }

    #[test]
    fn torus_pair_counts() {
        let t = g(&[&["a+", "b+", "a-", "b-"]]);
        assert_eq!(t.vertex_count(), 1);
        assert_eq!(t.edge_count(), 2);
        assert_eq!(t.boundary_count(), 1);
        assert_eq!(t.boundary_cycles()[0].len(), 4);
        let cyc = t.standard_cycles().unwrap();
        assert_eq!(
            cyc.iter().map(StandardCycle::len).collect::<Vec<_>>(),
            vec![1, 1]
        );
        assert_eq!(t.signature().unwrap().triple(), (1, 1, 2));
        assert!(t.is_filling_system());
    }

    #[test]
    fn sphere_circle() {
        let c = g(&[&["a+", "a-"]]);
        let b = c.boundary_cycles();
        assert_eq!(b.len(), 2);
        assert!(b.iter().all(|x| x.len() == 1));
        assert_eq!(c.signature().unwrap().triple(), (0, 2, 1));
        assert_eq!(
            c.filling_report().first(),
            Some(&FillingIssue::NotFourRegular {
                vertex: 0,
                degree: 2
            })
        );
    }

    #[test]
    fn planar_one_vertex_is_not_filling() {
        let p = g(&[&["a+", "a-", "b+", "b-"]]);
        assert_eq!(p.boundary_count(), 3);
        let r = p.filling_report();
        assert!(!r.is_filling());
        assert!(r
            .issues
            .iter()
            .any(|i| matches!(i, FillingIssue::SelfCrossing { .. })));
        assert!(r
            .issues
            .iter()
            .any(|i| matches!(i, FillingIssue::ShortBoundary { .. })));
    }

    #[test]
    fn malformed_inputs() {
        let e = FatGraph::from_words(&[vec!["a+", "b+", "a-"]]).unwrap_err();
        assert_eq!(
            e,
            GraphError::LabelCount {
                label: "b".into(),
                count: 1
            }
        );
        let e = FatGraph::from_words(&[vec!["a+"], vec!["a-", "b+", "b-"]]).unwrap_err();
        assert!(matches!(
            e,
            GraphError::Degree {
                vertex: 0,
                degree: 1
            }
        ));
        let e = FatGraph::from_words(&[vec!["a+", "a+"]]).unwrap_err();
        assert!(matches!(e, GraphError::LabelPairing { .. }));
        let ok = FatGraph::from_words(&[vec!["a+#0", "a+#1"]]).unwrap();
        assert_eq!(ok.boundary_count(), 2);
    }

    #[test]
    fn odd_degree_rejected_for_standard_cycles() {
        let theta = g(&[&["a+", "b+", "c+"], &["a-", "c-", "b-"]]);
        assert!(matches!(
            theta.standard_cycles(),
            Err(GraphError::OddDegree { .. })
        ));
        assert_eq!(theta.signature().unwrap().standard_cycle_count, None);
    }

    #[test]
    fn disconnected_signature_errors() {
        let two = g(&[&["a+", "b+", "a-", "b-"], &["c+", "d+", "c-", "d-"]]);
        assert_eq!(
            two.signature().unwrap_err(),
            GraphError::Disconnected { components: 2 }
        );
    }

    #[test]
    fn isomorphism_basics() {
        let t = g(&[&["a+", "b+", "a-", "b-"]]);
        let p = g(&[&["a+", "a-", "b+", "b-"]]);
        let c = g(&[&["a+", "a-"]]);
        assert!(!t.is_isomorphic(&p));
        assert!(!t.is_isomorphic(&c));
        let shuffled = t.relabelled(&[1, 0], &[true, false]);
        assert!(t.is_isomorphic(&shuffled));
    }

    #[test]
    fn half_edge_parsing() {
        let h: HalfEdge = "x12-".parse().unwrap();
        assert_eq!(h, HalfEdge::bwd("x12"));
        let h: HalfEdge = "y\u{2212}".parse().unwrap();
        assert_eq!(h.dir, Dir::Backward);
        assert!("x".parse::<HalfEdge>().is_err());
        assert_eq!("a+#1".parse::<HalfEdge>().unwrap().to_string(), "a+#1");
    }

    #[test]
    fn suppress_degree_two_vertex() {
        // torus loop b subdivided by a degree-2 vertex
        let s = g(&[&["a+", "b+", "a-", "c-"], &["b-", "c+"]]);
        let t = s.suppress_degree_two(1).unwrap();
        assert_eq!(t.vertex_count(), 1);
        assert_eq!(t.signature().unwrap().triple(), (1, 1, 2));
    }
}
