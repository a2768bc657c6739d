//! Catalog signatures and boundary words, checked against a naive
//! string-level tracer that shares no code with the library.

use std::collections::{BTreeMap, BTreeSet};

use fillgraph::families::{self, build, vertex_cycles, FamilyId};

/// Vertex cycles as plain strings like `e3-`.
fn words(id: FamilyId) -> Vec<Vec<String>> {
    vertex_cycles(id)
        .unwrap()
        .iter()
        .map(|c| c.iter().map(|h| h.to_string()).collect())
        .collect()
}

fn flip(h: &str) -> String {
    let (name, sign) = h.split_at(h.len() - 1);
    format!("{name}{}", if sign == "+" { "-" } else { "+" })
}

/// Next half-edge along a boundary: cross the edge, then turn to the
/// successor in the far rotation.
fn boundary_walks(vs: &[Vec<String>]) -> Vec<Vec<String>> {
    let mut succ = BTreeMap::new();
    for v in vs {
        for (i, h) in v.iter().enumerate() {
            succ.insert(h.clone(), v[(i + 1) % v.len()].clone());
        }
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for start in succ.keys() {
        if seen.contains(start) {
            continue;
        }
        let mut walk = Vec::new();
        let mut h = start.clone();
        while seen.insert(h.clone()) {
            walk.push(h.clone());
            h = succ[&flip(&h)].clone();
        }
        out.push(walk);
    }
    out
}

/// Straight-through curves of an even-degree rotation.
fn curve_lengths(vs: &[Vec<String>]) -> Vec<usize> {
    let mut opposite = BTreeMap::new();
    for v in vs {
        for (i, h) in v.iter().enumerate() {
            opposite.insert(h.clone(), v[(i + v.len() / 2) % v.len()].clone());
        }
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for start in opposite.keys() {
        if seen.contains(start) {
            continue;
        }
        let mut len = 0;
        let mut h = start.clone();
        while seen.insert(h.clone()) {
            let far = flip(&h);
            seen.insert(far.clone());
            len += 1;
            h = opposite[&far].clone();
        }
        out.push(len);
    }
    out.sort_unstable();
    out
}

fn naive_signature(vs: &[Vec<String>]) -> (usize, usize, usize) {
    let v = vs.len() as isize;
    let e = vs.iter().map(Vec::len).sum::<usize>() as isize / 2;
    let b = boundary_walks(vs).len() as isize;
    let g = (2 - v + e - b) / 2;
    (g as usize, b as usize, curve_lengths(vs).len())
}

fn is_rotation(a: &[String], b: &[String]) -> bool {
    a.len() == b.len() && (0..a.len()).any(|k| a.iter().cycle().skip(k).take(a.len()).eq(b.iter()))
}

fn parse_word(w: &str) -> Vec<String> {
    w.split_whitespace().map(str::to_string).collect()
}

fn has_boundary(id: FamilyId, printed: &str) -> bool {
    let want = parse_word(printed);
    boundary_walks(&words(id))
        .iter()
        .any(|w| is_rotation(w, &want))
}

#[test]
fn known_signatures_and_lengths() {
    let cases: Vec<(FamilyId, families::Expected)> = vec![
        (FamilyId::G1, ((2, 1, 3), Some(vec![1, 2, 3]))),
        (FamilyId::Gamma0, ((3, 1, 3), Some(vec![2, 3, 5]))),
        (FamilyId::G2, ((2, 4, 2), None)),
        (FamilyId::QuadrupleF3, ((3, 1, 4), None)),
        (FamilyId::TwoDiscTriple, ((2, 2, 3), None)),
        (FamilyId::TorusPair, ((1, 1, 2), None)),
    ];
    let mut all = cases;
    for g in 1..=8 {
        all.push((FamilyId::GammaG(g), ((g, 1, 2 * g), None)));
    }
    for g in 3..=8 {
        all.push((FamilyId::Girth2gm1(g), ((g, 1, 2 * g - 1), None)));
    }
    for b in 2..=8 {
        all.push((FamilyId::Gamma2B(b), ((2, b, 2), None)));
    }
    for (id, (sig, lengths)) in all {
        let vs = words(id);
        assert_eq!(naive_signature(&vs), sig, "{id} by naive tracing");
        let g = build(id).unwrap();
        assert_eq!(g.signature().unwrap().triple(), sig, "{id} by the library");
        assert!(g.is_filling_system(), "{id}");
        if let Some(l) = lengths {
            assert_eq!(curve_lengths(&vs), l, "{id}");
        }
        let (esig, _) = families::expected(id).unwrap();
        assert_eq!(esig, sig);
    }
}

#[test]
fn catalog_rows_agree_with_naive_tracer() {
    for row in families::catalog() {
        assert_eq!(naive_signature(&words(row.id)), row.signature, "{}", row.id);
        if let Some(l) = row.lengths {
            let mut l = l.clone();
            l.sort_unstable();
            assert_eq!(curve_lengths(&words(row.id)), l, "{}", row.id);
        }
    }
}

#[test]
fn gamma_g_single_boundary_word() {
    for g in 2..=8 {
        let n = 4 * g;
        let mut w = Vec::new();
        for k in (3..=n - 5).step_by(4) {
            w.push(format!("e{k}-"));
            w.push(format!("e{}+", k + 1));
        }
        w.push(format!("e{}-", n - 2));
        for k in (2..=n - 4).rev().step_by(2) {
            w.push(format!("e{k}-"));
        }
        w.push("e1-".into());
        w.push("e2+".into());
        for k in (5..=n - 3).step_by(4) {
            w.push(format!("e{k}-"));
            w.push(format!("e{}+", k + 1));
        }
        for k in (1..=n - 3).rev().step_by(2) {
            w.push(format!("e{k}+"));
        }
        assert!(
            has_boundary(FamilyId::GammaG(g), &w.join(" ")),
            "g={g}: {w:?}"
        );
    }
}

#[test]
fn gamma_2b_boundary_words() {
    for b in 2..=8 {
        let id = FamilyId::Gamma2B(b);
        let first = format!(
            "e1+ f1- e{}- f{b}- e{}- f{}+ e{b}+ f{}+",
            b + 2,
            b - 1,
            b - 1,
            b + 2
        );
        let last = format!(
            "f{}- e{}+ f{}+ e{b}- f{b}+ e{}- f{}- e{}+",
            b + 2,
            b + 1,
            b + 1,
            b + 1,
            b + 1,
            b + 2
        );
        assert!(has_boundary(id, &first), "b={b} first");
        assert!(has_boundary(id, &last), "b={b} last");
        for j in 2..b {
            let mid = format!("e{j}+ f{j}- e{}- f{}+", j - 1, j - 1);
            assert!(has_boundary(id, &mid), "b={b} j={j}");
        }
    }
}

#[test]
fn two_disc_genus_two_words() {
    let id = FamilyId::TwoDiscTriple;
    assert!(has_boundary(id, "x1+ y2+ z1- x3+ y1+ x1- y3- z2+ x2- y1-"));
    assert!(has_boundary(id, "x2+ z1+ y3+ x3- z2- y2-"));
    assert_eq!(boundary_walks(&words(id)).len(), 2);
}

#[test]
fn library_boundaries_match_naive_walks() {
    for row in families::catalog() {
        let g = build(row.id).unwrap();
        let lib: Vec<Vec<String>> = g
            .boundary_cycles()
            .iter()
            .map(|c| c.iter().map(|&d| g.half_edge(d).to_string()).collect())
            .collect();
        let naive = boundary_walks(&words(row.id));
        assert_eq!(lib.len(), naive.len(), "{}", row.id);
        for w in &naive {
            assert!(lib.iter().any(|l| is_rotation(l, w)), "{}: {w:?}", row.id);
        }
    }
}
