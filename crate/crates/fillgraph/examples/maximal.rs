//! Fillings of the largest possible size, 2g + b - 1 curves.

use fillgraph::synthesis::{max_filling, Target};

fn main() {
    for g in 2..=4 {
        for b in 1..=3 {
            let syn = max_filling(g, b).expect("maximal fillings exist for g >= 2");
            let sig = syn.graph.signature().unwrap();
            assert_eq!(sig.standard_cycle_count, Some(Target::upper_size(g, b)));
            println!(
                "g={g} b={b}: {} curves on {} vertices in {} steps",
                Target::upper_size(g, b),
                sig.vertex_count,
                syn.plan.steps.len()
            );
        }
    }
}
