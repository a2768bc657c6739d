//! Bounded backtracking search for filling systems with a given signature.

use thiserror::Error;

use crate::fatgraph::FatGraph;
use crate::oracle::matching_to_sigma0;

/// Default largest vertex count the search accepts.
pub const DEFAULT_CEILING: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Node budget; `None` is unbounded.
    pub budget: Option<u64>,
    pub ceiling: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: Some(200_000_000),
            ceiling: DEFAULT_CEILING,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(FatGraph),
    /// The whole space was explored.
    NotFound {
        nodes: u64,
    },
    /// The budget ran out first; nothing is known.
    Exhausted {
        nodes: u64,
    },
}

impl SearchOutcome {
    pub fn found(self) -> Option<FatGraph> {
        match self {
            SearchOutcome::Found(g) => Some(g),
            _ => None,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("search on {v} vertices exceeds the configured ceiling of {ceiling}")]
pub struct AboveCeiling {
    pub v: usize,
    pub ceiling: usize,
}

const UNSET: usize = usize::MAX;

fn next_slot(s: usize) -> usize {
    4 * (s / 4) + (s % 4 + 1) % 4
}

fn opposite_slot(s: usize) -> usize {
    4 * (s / 4) + (s % 4 + 2) % 4
}

struct Search<'a> {
    v: usize,
    b: usize,
    s: usize,
    mate: Vec<usize>,
    touched: usize,
    faces: usize,
    curves: usize,
    matched: usize,
    nodes: u64,
    budget: u64,
    accept: &'a dyn Fn(&FatGraph) -> bool,
}

enum Flow {
    Continue,
    Found(FatGraph),
    Stop,
}

impl Search<'_> {
    /// Length of the closed orbit of `f` through `start`, if every step is
    /// defined.
    fn closed(&self, start: usize, f: fn(usize) -> usize) -> Option<usize> {
        let mut x = start;
        let mut len = 0;
        loop {
            let m = self.mate[x];
            if m == UNSET {
                return None;
            }
            x = f(m);
            len += 1;
            if x == start {
                return Some(len);
            }
        }
    }

    fn orbit_contains(&self, start: usize, f: fn(usize) -> usize, target: usize) -> bool {
        let mut x = start;
        loop {
            if x == target {
                return true;
            }
            x = f(self.mate[x]);
            if x == start {
                return false;
            }
        }
    }

    fn simple_strand(&self, start: usize) -> bool {
        let mut seen = vec![false; self.v];
        let mut x = start;
        loop {
            let m = self.mate[x];
            if std::mem::replace(&mut seen[m / 4], true) {
                return false;
            }
            x = opposite_slot(m);
            if x == start {
                return true;
            }
        }
    }

    /// Applies the bookkeeping for the new pair `(a, b)`; returns the
    /// deltas to undo and whether the branch survives.
    fn account(&mut self, a: usize, b: usize) -> (usize, usize, bool) {
        let mut df = 0;
        let face_a = self.closed(a, next_slot);
        let face_b = self
            .closed(b, next_slot)
            .filter(|_| face_a.is_none() || !self.orbit_contains(a, next_slot, b));
        for len in [face_a, face_b].into_iter().flatten() {
            df += 1;
            if len < 3 {
                self.faces += df;
                return (df, 0, false);
            }
        }
        let mut dc = 0;
        if self.closed(a, opposite_slot).is_some() {
            dc = 1;
            if !self.simple_strand(a) {
                self.faces += df;
                return (df, 0, false);
            }
        }
        self.faces += df;
        self.curves += dc;
        let rest = self.matched < 4 * self.v;
        let ok = self.faces <= self.b
            && self.curves <= self.s
            && !(rest && (self.faces == self.b || self.curves == self.s));
        (df, dc, ok)
    }

    fn run(&mut self) -> Flow {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Flow::Stop;
        }
        let n = 4 * self.touched;
        let Some(a) = (0..n).find(|&x| self.mate[x] == UNSET) else {
            if self.touched < self.v {
                return Flow::Continue;
            }
            let g = FatGraph::from_sigma0(matching_to_sigma0(&self.mate)).expect("valid rotation");
            let counts = self.faces == self.b && self.curves == self.s;
            if counts && g.is_filling_system() && (self.accept)(&g) {
                return Flow::Found(g);
            }
            return Flow::Continue;
        };
        let fresh = (self.touched < self.v).then_some(n);
        let partners: Vec<usize> = (a + 1..n)
            .filter(|&x| self.mate[x] == UNSET)
            .chain(fresh)
            .collect();
        for b in partners {
            let opened = b == n;
            if opened {
                self.touched += 1;
            }
            self.mate[a] = b;
            self.mate[b] = a;
            self.matched += 2;
            let (df, dc, ok) = self.account(a, b);
            let flow = if ok { self.run() } else { Flow::Continue };
            self.faces -= df;
            self.curves -= dc;
            self.matched -= 2;
            self.mate[a] = UNSET;
            self.mate[b] = UNSET;
            if opened {
                self.touched -= 1;
            }
            match flow {
                Flow::Continue => {}
                other => return other,
            }
        }
        Flow::Continue
    }
}

/// Searches connected 4-regular graphs on `v` vertices for a filling system
/// with `b` discs and `s` curves that also satisfies `accept`. The genus is
/// forced by `v = 2g - 2 + b`. Deterministic: the same inputs always return
/// the same graph.
pub fn search_filling_where(
    v: usize,
    b: usize,
    s: usize,
    options: SearchOptions,
    accept: &dyn Fn(&FatGraph) -> bool,
) -> Result<SearchOutcome, AboveCeiling> {
    if v > options.ceiling {
        return Err(AboveCeiling {
            v,
            ceiling: options.ceiling,
        });
    }
    if v == 0 || b == 0 || s == 0 || b > v + 2 || (v + 2 - b) % 2 == 1 {
        return Ok(SearchOutcome::NotFound { nodes: 0 });
    }
    let mut st = Search {
        v,
        b,
        s,
        mate: vec![UNSET; 4 * v],
        touched: 1,
        faces: 0,
        curves: 0,
        matched: 0,
        nodes: 0,
        budget: options.budget.unwrap_or(u64::MAX),
        accept,
    };
    Ok(match st.run() {
        Flow::Found(g) => SearchOutcome::Found(g.with_default_names()),
        Flow::Continue => SearchOutcome::NotFound { nodes: st.nodes },
        Flow::Stop => SearchOutcome::Exhausted { nodes: st.nodes },
    })
}

/// [`search_filling_where`] for a target genus, boundary count and size.
pub fn search_filling(
    v: usize,
    target: (usize, usize, usize),
    options: SearchOptions,
) -> Result<SearchOutcome, AboveCeiling> {
    let (g, b, s) = target;
    if 2 * g + b != v + 2 {
        return Ok(SearchOutcome::NotFound { nodes: 0 });
    }
    search_filling_where(v, b, s, options, &|_| true)
}
