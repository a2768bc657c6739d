//! Two-curve filling systems (filling pairs) with any number of discs.
//!
//! Small pairs come from the catalog or from [`search_filling`]; larger ones
//! are reached breadth-first by connected sums with the genus-2 four-disc
//! pair. Such a sum either keeps the disc count and adds two to the genus or
//! adds two discs and one to the genus, so one-disc pairs of even genus
//! cannot be reached from below; the genus-4 one needs a direct search on
//! seven vertices, one above the default ceiling. Results are
//! memoized per process; planning is deterministic, so the memo never
//! changes an answer.

use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

use super::search::{search_filling, SearchOptions, SearchOutcome};
use super::{PlanBuilder, Synthesis, SynthesisError, Target};
use crate::families::{self, FamilyId};
use crate::fatgraph::FatGraph;
use crate::ops;

/// Largest disc count the planner keeps while exploring.
const MAX_DISCS: usize = 8;
/// Vertex ceiling for seed searches.
const SEED_CEILING: usize = 7;
/// Connected-sum rounds before giving up.
const MAX_ROUNDS: usize = 4;

type Memo = BTreeMap<(usize, usize), Synthesis>;

fn memo() -> &'static Mutex<Memo> {
    static MEMO: OnceLock<Mutex<Memo>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(Memo::new()))
}

fn single(pb: PlanBuilder, g: usize, b: usize) -> Result<Synthesis, SynthesisError> {
    pb.finish(Target::new(g, b, 2))
}

fn seeds(gmax: usize) -> Result<Memo, SynthesisError> {
    let mut out = Memo::new();
    let mut pb = PlanBuilder::new();
    pb.family(FamilyId::TorusPair)?;
    out.insert((1, 1), single(pb, 1, 1)?);
    for b in 2..=MAX_DISCS {
        let mut pb = PlanBuilder::new();
        pb.family(FamilyId::Gamma2B(b))?;
        out.insert((2, b), single(pb, 2, b)?);
    }
    let searched = [
        (1, 2),
        (1, 3),
        (1, 4),
        (1, 5),
        (1, 6),
        (3, 1),
        (3, 2),
        (4, 1),
    ];
    for (g, b) in searched {
        if g > gmax {
            continue;
        }
        let v = 2 * g + b - 2;
        let options = SearchOptions {
            ceiling: SEED_CEILING,
            ..SearchOptions::default()
        };
        match search_filling(v, (g, b, 2), options) {
            Ok(SearchOutcome::Found(graph)) => {
                let mut pb = PlanBuilder::new();
                pb.embed(&format!("search V={v} target=({g},{b},2)"), &graph)?;
                out.insert((g, b), single(pb, g, b)?);
            }
            Ok(SearchOutcome::NotFound { .. }) => {}
            Ok(SearchOutcome::Exhausted { nodes }) => {
                return Err(SynthesisError::Failed {
                    g,
                    b,
                    s: 2,
                    reason: format!("search budget exhausted after {nodes} nodes"),
                })
            }
            Err(e) => unreachable!("seed searches stay under the ceiling: {e}"),
        }
    }
    Ok(out)
}

/// One round of connected sums with the genus-2 four-disc pair.
fn expand(known: &Memo, gmax: usize) -> Result<Memo, SynthesisError> {
    let g2 = families::build(FamilyId::G2).expect("catalog family");
    let g2_vertices = g2.vertices();
    let mut found = Memo::new();
    for syn in known.values() {
        let left: &FatGraph = &syn.graph;
        let genus = syn.plan.target.g;
        if genus + 2 > gmax {
            continue;
        }
        for v in left.vertices() {
            for uv in &g2_vertices {
                for &u in uv {
                    let Ok(r) = ops::connected_sum(left, v[0], &g2, u) else {
                        continue;
                    };
                    let Ok(sig) = r.result.signature() else {
                        continue;
                    };
                    let key = (sig.genus, sig.boundary_count);
                    if sig.standard_cycle_count != Some(2)
                        || !sig.is_filling
                        || key.1 > MAX_DISCS
                        || known.contains_key(&key)
                        || found.contains_key(&key)
                    {
                        continue;
                    }
                    let mut pb = PlanBuilder::new();
                    let l = pb.append(&syn.plan)?;
                    let rgt = pb.family(FamilyId::G2)?;
                    pb.consum(l, v[0], rgt, u)?;
                    found.insert(key, single(pb, key.0, key.1)?);
                }
            }
        }
    }
    Ok(found)
}

/// A filling pair of genus `g` with `b` discs.
pub fn filling_pair(g: usize, b: usize) -> Result<Synthesis, SynthesisError> {
    if (g, b) == (2, 1) {
        return Err(SynthesisError::Impossible {
            g,
            b,
            s: 2,
            reason: "no minimal filling pair of a closed surface of genus 2".into(),
        });
    }
    if g == 0 || b == 0 || b > MAX_DISCS {
        return Err(SynthesisError::Range {
            g,
            b,
            s: 2,
            reason: format!("filling pairs are planned for g >= 1 and 1 <= b <= {MAX_DISCS}"),
        });
    }
    let mut memo = memo().lock().expect("memo lock");
    if let Some(s) = memo.get(&(g, b)) {
        return Ok(s.clone());
    }
    let mut known = seeds(g)?;
    for (k, v) in memo.iter() {
        known.entry(*k).or_insert_with(|| v.clone());
    }
    for _ in 0..MAX_ROUNDS {
        if known.contains_key(&(g, b)) {
            break;
        }
        let fresh = expand(&known, g)?;
        if fresh.is_empty() {
            break;
        }
        known.extend(fresh);
    }
    for (k, v) in &known {
        memo.entry(*k).or_insert_with(|| v.clone());
    }
    known.remove(&(g, b)).ok_or_else(|| SynthesisError::Failed {
        g,
        b,
        s: 2,
        reason: format!("no plan within {MAX_ROUNDS} connected-sum rounds"),
    })
}
