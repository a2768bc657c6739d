use std::sync::OnceLock;

use proptest::prelude::*;

use fillgraph::analysis;
use fillgraph::io;
use fillgraph::ops;
use fillgraph::oracle::{self, CensusRow};
use fillgraph::FatGraph;

fn census() -> &'static [CensusRow] {
    static ROWS: OnceLock<Vec<CensusRow>> = OnceLock::new();
    ROWS.get_or_init(|| {
        (1..=3)
            .flat_map(|v| oracle::enumerate(v).unwrap())
            .collect()
    })
}

/// A census graph under a random edge relabelling and reorientation.
fn relabelled_census_graph() -> impl Strategy<Value = (usize, FatGraph)> {
    relabelled_from((0..census().len()).collect())
}

fn relabelled_filling_graph() -> impl Strategy<Value = (usize, FatGraph)> {
    relabelled_from(
        (0..census().len())
            .filter(|&i| census()[i].filling)
            .collect(),
    )
}

fn relabelled_from(pool: Vec<usize>) -> impl Strategy<Value = (usize, FatGraph)> {
    (prop::sample::select(pool), any::<u64>()).prop_map(|(i, seed)| {
        let g = census()[i].graph();
        let m = g.edge_count();
        let mut perm: Vec<usize> = (0..m).collect();
        let mut x = seed | 1;
        for k in (1..m).rev() {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            perm.swap(k, (x % (k as u64 + 1)) as usize);
        }
        let flip: Vec<bool> = (0..m).map(|e| (seed >> (e % 64)) & 1 == 1).collect();
        (i, g.relabelled(&perm, &flip))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn fatgraph_file_round_trip((_, g) in relabelled_census_graph()) {
        let doc = io::write_graph(&g);
        let back = io::read_graph(&doc).unwrap();
        prop_assert!(back.is_isomorphic(&g));
        prop_assert_eq!(io::write_graph(&back), doc.clone());
        let file = io::FatGraphFile::parse(&doc).unwrap();
        prop_assert_eq!(io::FatGraphFile::parse(&file.to_json()).unwrap(), file);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn canonical_key_ignores_labels((i, g) in relabelled_census_graph()) {
        prop_assert_eq!(g.canonical_form().key(), census()[i].key.clone());
    }

    #[test]
    fn euler_relation_and_partitions((_, g) in relabelled_census_graph()) {
        let sig = g.signature().unwrap();
        prop_assert_eq!(2 * sig.genus + sig.boundary_count, sig.vertex_count + 2);
        let total: usize = g.boundary_cycles().iter().map(Vec::len).sum();
        prop_assert_eq!(total, g.dart_count());
        let curves = g.standard_cycles().unwrap();
        prop_assert_eq!(curves.iter().map(|c| c.len()).sum::<usize>(), g.edge_count());
    }

    #[test]
    fn filling_identities((_, g) in relabelled_filling_graph()) {
        prop_assert!(g.is_filling_system());
        let sig = g.signature().unwrap();
        let e = analysis::check_euler_identity(&g).unwrap();
        prop_assert!(e.holds);
        prop_assert_eq!(e.total_weight, 2 * sig.genus + sig.boundary_count - 2);
        if sig.boundary_count == 1 {
            let r = analysis::check_omega_bound(&g).unwrap();
            prop_assert!(r.holds);
        }
    }

    #[test]
    fn join_prediction_holds(
        (_, l) in relabelled_census_graph(),
        (_, r) in relabelled_census_graph(),
        x in any::<prop::sample::Index>(),
        y in any::<prop::sample::Index>(),
    ) {
        let x = x.index(l.edge_count());
        let y = y.index(r.edge_count());
        let rep = ops::join(&l, x, &r, y).unwrap();
        prop_assert!(rep.agrees(), "{}", rep.summary());
    }

    #[test]
    fn plumbing_prediction_holds(
        (_, l) in relabelled_census_graph(),
        (_, r) in relabelled_census_graph(),
        x in any::<prop::sample::Index>(),
        y in any::<prop::sample::Index>(),
    ) {
        let x = x.index(l.edge_count());
        let y = y.index(r.edge_count());
        if let Ok(rep) = ops::plumbing(&l, x, &r, y) {
            prop_assert!(rep.agrees(), "{}", rep.summary());
        }
    }

    #[test]
    fn connected_sum_prediction_holds(
        (_, l) in relabelled_census_graph(),
        (_, r) in relabelled_census_graph(),
        w in any::<prop::sample::Index>(),
        u in any::<prop::sample::Index>(),
    ) {
        let w = w.index(l.dart_count());
        let u = u.index(r.dart_count());
        match ops::connected_sum(&l, w, &r, u) {
            Ok(rep) => prop_assert!(rep.agrees(), "{}", rep.summary()),
            Err(ops::OpError::Breach { .. }) => prop_assert!(false, "breach"),
            Err(_) => {}
        }
    }
}
