//! The census against a brute-force oracle: every perfect matching of the
//! 4V slots, classes taken as orbits under vertex permutations and
//! rotations of each vertex.

use std::collections::{BTreeMap, BTreeSet};

use fillgraph::oracle::{self, CensusRow};

fn matchings(n: usize) -> Vec<Vec<usize>> {
    fn rec(mate: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some(a) = mate.iter().position(|&m| m == usize::MAX) else {
            out.push(mate.clone());
            return;
        };
        for b in a + 1..mate.len() {
            if mate[b] == usize::MAX {
                mate[a] = b;
                mate[b] = a;
                rec(mate, out);
                mate[a] = usize::MAX;
                mate[b] = usize::MAX;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![usize::MAX; n], &mut out);
    out
}

fn connected(mate: &[usize]) -> bool {
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
    seen.into_iter().all(|s| s)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..=p.len() {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

/// Least relabelled matching over all vertex maps and per-vertex shifts.
fn brute_canonical(mate: &[usize], perms: &[Vec<usize>]) -> Vec<usize> {
    let v = mate.len() / 4;
    let mut best: Option<Vec<usize>> = None;
    for p in perms {
        for shifts in 0..4usize.pow(v as u32) {
            let shift = |x: usize| (shifts / 4usize.pow(x as u32)) % 4;
            let relabel = |s: usize| 4 * p[s / 4] + (s % 4 + shift(s / 4)) % 4;
            let mut m = vec![0; mate.len()];
            for s in 0..mate.len() {
                m[relabel(s)] = relabel(mate[s]);
            }
            if best.as_ref().is_none_or(|b| m < *b) {
                best = Some(m);
            }
        }
    }
    best.unwrap()
}

fn orbit_count(mate: &[usize], step: impl Fn(usize) -> usize) -> usize {
    let mut seen = vec![false; mate.len()];
    let mut n = 0;
    for s in 0..mate.len() {
        if seen[s] {
            continue;
        }
        n += 1;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = step(x);
        }
    }
    n
}

/// (g, b, s) straight from slot arithmetic.
fn brute_signature(mate: &[usize]) -> (usize, usize, usize) {
    let faces = orbit_count(mate, |s| {
        let t = mate[s];
        4 * (t / 4) + (t % 4 + 1) % 4
    });
    // each strand is traversed in both directions
    let strands = orbit_count(mate, |s| {
        let t = mate[s];
        4 * (t / 4) + (t % 4 + 2) % 4
    }) / 2;
    let v = mate.len() / 4;
    let chi = v as isize - 2 * v as isize + faces as isize;
    (((2 - chi) / 2) as usize, faces, strands)
}

/// Canonical matching to its signature and labelled count.
type BruteCensus = BTreeMap<Vec<usize>, ((usize, usize, usize), u64)>;

fn brute_census(v: usize) -> BruteCensus {
    let perms = permutations(v);
    let mut classes = BTreeMap::new();
    for m in matchings(4 * v).into_iter().filter(|m| connected(m)) {
        let key = brute_canonical(&m, &perms);
        let sig = brute_signature(&m);
        classes.entry(key).or_insert((sig, 0)).1 += 1;
    }
    classes
}

fn signature_multiset<'a>(
    it: impl Iterator<Item = ((usize, usize, usize), u64)> + 'a,
) -> BTreeMap<(usize, usize, usize), (usize, u64)> {
    let mut out = BTreeMap::new();
    for (sig, count) in it {
        let e = out.entry(sig).or_insert((0, 0));
        e.0 += 1;
        e.1 += count;
    }
    out
}

fn library_multiset(rows: &[CensusRow]) -> BTreeMap<(usize, usize, usize), (usize, u64)> {
    signature_multiset(rows.iter().map(|r| ((r.g, r.b, r.s), r.count)))
}

#[test]
fn census_matches_brute_force_up_to_three_vertices() {
    let expected_classes = [2, 7, 36];
    let expected_labelled = [3, 96, 9504];
    for v in 1..=3 {
        let brute = brute_census(v);
        let rows = oracle::enumerate(v).unwrap();
        assert_eq!(brute.len(), expected_classes[v - 1], "V={v} brute classes");
        assert_eq!(rows.len(), expected_classes[v - 1], "V={v} library classes");
        let labelled: u64 = brute.values().map(|(_, c)| c).sum();
        assert_eq!(labelled, expected_labelled[v - 1]);
        assert_eq!(rows.iter().map(|r| r.count).sum::<u64>(), labelled);
        assert_eq!(
            library_multiset(&rows),
            signature_multiset(brute.values().copied()),
            "V={v}"
        );
    }
}

#[test]
fn census_rows_are_sorted_distinct_and_consistent() {
    for v in 1..=3 {
        let rows = oracle::enumerate(v).unwrap();
        let keys: Vec<&String> = rows.iter().map(|r| &r.key).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(keys, sorted);
        let mut seen = BTreeSet::new();
        for r in &rows {
            let g = r.graph();
            assert!(seen.insert(g.canonical_form().key()));
            assert_eq!(g.canonical_form().key(), r.key);
            assert_eq!(2 * r.g + r.b, r.vertices + 2);
            assert_eq!(r.m, 2 * r.vertices);
            assert_eq!(r.lengths.iter().sum::<usize>(), r.m);
            assert_eq!(r.filling, g.is_filling_system());
        }
    }
}

#[test]
fn one_vertex_classes() {
    let rows = oracle::enumerate(1).unwrap();
    let sigs: BTreeSet<(usize, usize, usize)> = rows.iter().map(|r| (r.g, r.b, r.s)).collect();
    assert_eq!(sigs, BTreeSet::from([(1, 1, 2), (0, 3, 1)]));
}
