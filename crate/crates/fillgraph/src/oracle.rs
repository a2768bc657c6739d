//! Brute-force census of small connected 4-regular fat graphs, and
//! recompute-based audits of the operation formulas.
//!
//! Invariants here are computed on the raw slot matching, independently of
//! the orbit code in [`crate::fatgraph`]; only canonical forms are shared.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::families::{self, FamilyId};
use crate::fatgraph::FatGraph;
use crate::ops::{self, ChiBranch, OpError, OperationReport};

/// Largest vertex count enumerated exhaustively.
pub const EXHAUSTIVE_CEILING: usize = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("exhaustive census is limited to V <= {EXHAUSTIVE_CEILING} (asked for V = {0}); use targeted search for larger graphs")]
    AboveCeiling(usize),
    #[error("V must be positive")]
    NoVertices,
    #[error("bad filter `{0}`; expected key=value with keys V, m, g, b, s, filling, omega_max")]
    BadFilter(String),
    #[error("unknown operation `{0}`; expected join, consum or plumb")]
    UnknownOp(String),
}

/// One isomorphism class of the census.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub key: String,
    #[serde(rename = "V")]
    pub vertices: usize,
    pub m: usize,
    pub g: usize,
    pub b: usize,
    pub s: usize,
    pub lengths: Vec<usize>,
    pub omega_max: Option<usize>,
    pub filling: bool,
    /// Number of labelled matchings in this class.
    pub count: u64,
    #[serde(skip)]
    pub sigma0: Vec<usize>,
}

impl CensusRow {
    pub fn graph(&self) -> FatGraph {
        FatGraph::from_sigma0(self.sigma0.clone()).expect("census rows are valid rotations")
    }
}

/// Slot-level invariants of one matching. Slot `4v + i` is the `i`-th
/// half-edge at vertex `v`; `mate` is the edge matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlotInvariants {
    pub g: usize,
    pub b: usize,
    pub s: usize,
    pub lengths: Vec<usize>,
    pub omega_max: Option<usize>,
    pub filling: bool,
}

fn next_slot(s: usize) -> usize {
    4 * (s / 4) + (s % 4 + 1) % 4
}

fn opposite_slot(s: usize) -> usize {
    4 * (s / 4) + (s % 4 + 2) % 4
}

fn slot_orbits(n: usize, f: impl Fn(usize) -> usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut c = Vec::new();
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            c.push(x);
            x = f(x);
        }
        out.push(c);
    }
    out
}

fn slots_connected(mate: &[usize]) -> bool {
    let v = mate.len() / 4;
    let mut seen = vec![false; v];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for i in 0..4 {
            let y = mate[4 * x + i] / 4;
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen.iter().all(|&b| b)
}

/// Invariants of a connected matching, computed straight from slots.
pub fn slot_invariants(mate: &[usize]) -> SlotInvariants {
    let n = mate.len();
    let vcount = n / 4;
    // a face leaves along s, arrives at mate[s], turns to the next slot
    let faces = slot_orbits(n, |s| next_slot(mate[s]));
    let b = faces.len();
    // a curve leaves along s and continues out of the opposite slot
    let strands = slot_orbits(n, |s| opposite_slot(mate[s]));
    let mut curve_of_slot = vec![usize::MAX; n];
    let mut lengths = Vec::new();
    let mut simple = true;
    for orbit in &strands {
        if curve_of_slot[orbit[0]] != usize::MAX {
            continue;
        }
        let id = lengths.len();
        let mut visited = vec![false; vcount];
        for &s in orbit {
            curve_of_slot[s] = id;
            curve_of_slot[mate[s]] = id;
            let v = mate[s] / 4;
            if visited[v] {
                simple = false;
            }
            visited[v] = true;
        }
        lengths.push(orbit.len());
    }
    let s = lengths.len();
    lengths.sort_unstable();
    let short_face = faces.iter().any(|f| f.len() < 3);
    let filling = simple && !short_face;
    let omega_max = filling.then(|| {
        let mut w = BTreeMap::new();
        for v in 0..vcount {
            let (c1, c2) = (curve_of_slot[4 * v], curve_of_slot[4 * v + 1]);
            *w.entry((c1.min(c2), c1.max(c2))).or_insert(0usize) += 1;
        }
        w.values().copied().max().unwrap_or(0)
    });
    let two_g = 2 + 2 * vcount - vcount - b;
    SlotInvariants {
        g: two_g / 2,
        b,
        s,
        lengths,
        omega_max,
        filling,
    }
}

/// Rotation in directed-edge encoding for a slot matching. Edges are
/// numbered by their least slot; the least slot is the forward direction.
pub fn matching_to_sigma0(mate: &[usize]) -> Vec<usize> {
    let n = mate.len();
    let mut dart = vec![0; n];
    let mut k = 0;
    for s in 0..n {
        if s < mate[s] {
            dart[s] = 2 * k;
            dart[mate[s]] = 2 * k + 1;
            k += 1;
        }
    }
    let mut sigma0 = vec![0; n];
    for s in 0..n {
        sigma0[dart[s]] = dart[next_slot(s)];
    }
    sigma0
}

fn for_each_matching(mate: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    let Some(a) = mate.iter().position(|&x| x == usize::MAX) else {
        f(mate);
        return;
    };
    for b in a + 1..mate.len() {
        if mate[b] != usize::MAX {
            continue;
        }
        mate[a] = b;
        mate[b] = a;
        for_each_matching(mate, f);
        mate[a] = usize::MAX;
        mate[b] = usize::MAX;
    }
}

#[derive(Default)]
struct Acc {
    rows: BTreeMap<String, (Vec<usize>, SlotInvariants, u64)>,
}

impl Acc {
    fn add(&mut self, mate: &[usize]) {
        if !slots_connected(mate) {
            return;
        }
        let g = FatGraph::from_sigma0(matching_to_sigma0(mate)).expect("valid rotation");
        let canon = g.canonical_form();
        let key = canon.key();
        if let Some(e) = self.rows.get_mut(&key) {
            e.2 += 1;
            return;
        }
        let sigma0: Vec<usize> = canon.0[0].iter().map(|&x| x as usize).collect();
        self.rows.insert(key, (sigma0, slot_invariants(mate), 1));
    }

    fn merge(mut self, other: Acc) -> Acc {
        for (k, (sig, inv, c)) in other.rows {
            self.rows
                .entry(k)
                .and_modify(|e| e.2 += c)
                .or_insert((sig, inv, c));
        }
        self
    }
}

/// Complete census of connected 4-regular fat graphs on `v` vertices, one
/// row per isomorphism class, sorted by canonical key.
pub fn enumerate(v: usize) -> Result<Vec<CensusRow>, OracleError> {
    if v == 0 {
        return Err(OracleError::NoVertices);
    }
    if v > EXHAUSTIVE_CEILING {
        return Err(OracleError::AboveCeiling(v));
    }
    let n = 4 * v;
    // fan out over the partners of slots 0 and (least remaining) slot
    let mut prefixes = Vec::new();
    for b in 1..n {
        let mut mate = vec![usize::MAX; n];
        mate[0] = b;
        mate[b] = 0;
        let a = mate.iter().position(|&x| x == usize::MAX);
        match a {
            None => prefixes.push(mate),
            Some(a) => {
                for c in a + 1..n {
                    if mate[c] == usize::MAX {
                        let mut m2 = mate.clone();
                        m2[a] = c;
                        m2[c] = a;
                        prefixes.push(m2);
                    }
                }
            }
        }
    }
    let acc = prefixes
        .into_par_iter()
        .map(|mut mate| {
            let mut acc = Acc::default();
            for_each_matching(&mut mate, &mut |m| acc.add(m));
            acc
        })
        .reduce(Acc::default, Acc::merge);
    Ok(acc
        .rows
        .into_iter()
        .map(|(key, (sigma0, inv, count))| CensusRow {
            key,
            vertices: v,
            m: 2 * v,
            g: inv.g,
            b: inv.b,
            s: inv.s,
            lengths: inv.lengths,
            omega_max: inv.omega_max,
            filling: inv.filling,
            count,
            sigma0,
        })
        .collect())
}

/// Row filter; every set field must match.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Filter {
    pub vertices: Option<usize>,
    pub m: Option<usize>,
    pub g: Option<usize>,
    pub b: Option<usize>,
    pub s: Option<usize>,
    pub filling: Option<bool>,
    pub omega_max: Option<usize>,
}

impl Filter {
    /// Parses `k=v` pairs separated by commas, e.g. `g=2,b=1,filling=true`.
    pub fn parse(spec: &str) -> Result<Filter, OracleError> {
        let mut f = Filter::default();
        for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let bad = || OracleError::BadFilter(part.to_string());
            let (k, v) = part.split_once('=').ok_or_else(bad)?;
            let num = || v.trim().parse::<usize>().map_err(|_| bad());
            match k.trim() {
                "V" | "v" => f.vertices = Some(num()?),
                "m" => f.m = Some(num()?),
                "g" => f.g = Some(num()?),
                "b" => f.b = Some(num()?),
                "s" => f.s = Some(num()?),
                "omega_max" => f.omega_max = Some(num()?),
                "filling" => f.filling = Some(v.trim().parse::<bool>().map_err(|_| bad())?),
                _ => return Err(bad()),
            }
        }
        Ok(f)
    }

    pub fn accepts(&self, r: &CensusRow) -> bool {
        self.vertices.is_none_or(|x| x == r.vertices)
            && self.m.is_none_or(|x| x == r.m)
            && self.g.is_none_or(|x| x == r.g)
            && self.b.is_none_or(|x| x == r.b)
            && self.s.is_none_or(|x| x == r.s)
            && self.filling.is_none_or(|x| x == r.filling)
            && self.omega_max.is_none_or(|x| Some(x) == r.omega_max)
    }
}

/// Filling sizes present in the census, per `(g, b)`.
pub fn filling_sizes(rows: &[CensusRow]) -> BTreeMap<(usize, usize), Vec<usize>> {
    let mut out: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for r in rows.iter().filter(|r| r.filling) {
        let e = out.entry((r.g, r.b)).or_default();
        if !e.contains(&r.s) {
            e.push(r.s);
        }
    }
    for v in out.values_mut() {
        v.sort_unstable();
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AuditOp {
    Join,
    ConnectedSum,
    Plumbing,
}

impl std::str::FromStr for AuditOp {
    type Err = OracleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "join" => Ok(AuditOp::Join),
            "consum" | "connected_sum" => Ok(AuditOp::ConnectedSum),
            "plumb" | "plumbing" => Ok(AuditOp::Plumbing),
            _ => Err(OracleError::UnknownOp(s.to_string())),
        }
    }
}

/// Per-case tallies of an audit.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BranchTally {
    pub trials: usize,
    /// Trials where the asserted prediction disagreed (must stay 0).
    pub mismatches: usize,
    /// Connected sum: trials where the closed-form hypothesis held.
    pub closed_form_applicable: usize,
    /// Connected sum: closed form disagreed with the recomputation.
    pub closed_form_mismatches: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub op: String,
    pub trials: usize,
    /// Selector combinations the operation refused (closed strands,
    /// disconnected operands).
    pub skipped: usize,
    pub branches: BTreeMap<String, BranchTally>,
    /// Join only: trials with a new boundary cycle of length at most 2, both
    /// operands 4-regular.
    pub short_new_boundaries: usize,
    /// The same, with an operand that has a vertex of degree 2.
    pub short_new_boundaries_low_degree: usize,
    /// Offending operands for asserted mismatches.
    pub failures: Vec<String>,
    /// A few closed-form counterexamples (connected sum).
    pub closed_form_counterexamples: Vec<String>,
}

impl AuditReport {
    pub fn mismatches(&self) -> usize {
        self.branches.values().map(|t| t.mismatches).sum()
    }

    pub fn closed_form_mismatches(&self) -> usize {
        self.branches
            .values()
            .map(|t| t.closed_form_mismatches)
            .sum()
    }
}

/// Named operands: small catalog members plus census graphs on up to
/// `census_v` vertices.
pub fn audit_operands(census_v: usize) -> Vec<(String, FatGraph)> {
    let ids = [
        FamilyId::TorusPair,
        FamilyId::SphereCircle,
        FamilyId::G1,
        FamilyId::Gamma0,
        FamilyId::G2,
        FamilyId::QuadrupleF3,
        FamilyId::TwoDiscTriple,
        FamilyId::GammaG(2),
        FamilyId::GammaG(3),
        FamilyId::Girth2gm1(3),
        FamilyId::Gamma2B(2),
        FamilyId::Gamma2B(3),
        FamilyId::Gamma2B(4),
    ];
    let mut out: Vec<(String, FatGraph)> = ids
        .iter()
        .map(|&id| (id.to_string(), families::build(id).expect("catalog")))
        .collect();
    for v in 1..=census_v.min(EXHAUSTIVE_CEILING) {
        for r in enumerate(v).expect("within ceiling") {
            out.push((format!("census[{}]", r.key), r.graph()));
        }
    }
    out
}

fn describe(name_l: &str, l: &FatGraph, name_r: &str, r: &FatGraph, sel: &str) -> String {
    format!("{name_l} {{{l}}} with {name_r} {{{r}}} at {sel}")
}

/// Applies `op` to every ordered pair of operands over every selector and
/// tallies predicted against recomputed values per case.
pub fn verify_formula_by_recompute(op: AuditOp, operands: &[(String, FatGraph)]) -> AuditReport {
    let pairs: Vec<(usize, usize)> = (0..operands.len())
        .flat_map(|i| (0..operands.len()).map(move |j| (i, j)))
        .collect();
    let partial: Vec<AuditReport> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (ln, l) = &operands[i];
            let (rn, r0) = &operands[j];
            let r = r0.clone();
            let regular = l.is_four_regular() && r.is_four_regular();
            let mut rep = AuditReport::default();
            let mut record = |res: Result<OperationReport, OpError>, sel: String| match res {
                Ok(report) => {
                    rep.trials += 1;
                    let key = match &report.chi {
                        Some(c) => format!("{:?}", c.branch),
                        None => report.case.clone(),
                    };
                    let t = rep.branches.entry(key).or_default();
                    t.trials += 1;
                    if let Some(c) = &report.chi {
                        if c.hypothesis {
                            t.closed_form_applicable += 1;
                        }
                        if c.closed_form_agrees == Some(false) {
                            t.closed_form_mismatches += 1;
                            if rep.closed_form_counterexamples.len() < 3 {
                                rep.closed_form_counterexamples.push(format!(
                                    "{}: closed form {} vs recomputed {}",
                                    describe(ln, l, rn, &r, &sel),
                                    c.closed_form_prediction.unwrap(),
                                    report.recomputed
                                ));
                            }
                        }
                    }
                    if report.new_boundary_lengths.iter().any(|&x| x <= 2) {
                        if regular {
                            rep.short_new_boundaries += 1;
                        } else {
                            rep.short_new_boundaries_low_degree += 1;
                        }
                    }
                }
                Err(OpError::Breach { case, .. }) => {
                    rep.trials += 1;
                    let t = rep.branches.entry(case).or_default();
                    t.trials += 1;
                    t.mismatches += 1;
                    rep.failures.push(describe(ln, l, rn, &r, &sel));
                }
                Err(_) => rep.skipped += 1,
            };
            match op {
                AuditOp::Join => {
                    for x in 0..l.edge_count() {
                        for y in 0..r.edge_count() {
                            record(ops::join(l, x, &r, y), format!("x={x} y={y}"));
                        }
                    }
                }
                AuditOp::Plumbing => {
                    for x in 0..l.edge_count() {
                        for y in 0..r.edge_count() {
                            record(ops::plumbing(l, x, &r, y), format!("x={x} y={y}"));
                        }
                    }
                }
                AuditOp::ConnectedSum => {
                    for wv in l.vertices().iter().filter(|v| v.len() == 4) {
                        for uv in r.vertices().iter().filter(|v| v.len() == 4) {
                            for &u in uv {
                                let sel = format!("w={} u={u}", wv[0]);
                                record(ops::connected_sum(l, wv[0], &r, u), sel);
                            }
                        }
                    }
                }
            }
            rep
        })
        .collect();
    let mut total = AuditReport {
        op: format!("{op:?}"),
        ..AuditReport::default()
    };
    for p in partial {
        total.trials += p.trials;
        total.skipped += p.skipped;
        total.short_new_boundaries += p.short_new_boundaries;
        total.short_new_boundaries_low_degree += p.short_new_boundaries_low_degree;
        for (k, t) in p.branches {
            let e = total.branches.entry(k).or_default();
            e.trials += t.trials;
            e.mismatches += t.mismatches;
            e.closed_form_applicable += t.closed_form_applicable;
            e.closed_form_mismatches += t.closed_form_mismatches;
        }
        total.failures.extend(p.failures);
        if total.closed_form_counterexamples.len() < 3 {
            total
                .closed_form_counterexamples
                .extend(p.closed_form_counterexamples);
            total.closed_form_counterexamples.truncate(3);
        }
    }
    if op == AuditOp::ConnectedSum {
        for b in [ChiBranch::A, ChiBranch::B, ChiBranch::C, ChiBranch::D] {
            total.branches.entry(format!("{b:?}")).or_default();
        }
    }
    total
}
