//! Boundary cycles, standard cycles and intersection numbers of one graph.
//!
//! `cargo run --example analyze -- quadruple`

use fillgraph::analysis;
use fillgraph::families::{self, FamilyId};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "g1".into());
    let id: FamilyId = name
        .parse()
        .expect("a family such as g1, gamma0, gamma_g(3)");
    let g = families::build(id).expect("family builds");

    let sig = g.signature().expect("valid rotation");
    println!(
        "{id}: genus {} with {} boundary cycles",
        sig.genus, sig.boundary_count
    );
    for (i, cycle) in g.boundary_cycles().iter().enumerate() {
        let word: Vec<String> = cycle.iter().map(|&d| g.half_edge(d).to_string()).collect();
        println!("  boundary {i}: {}", word.join(" "));
    }
    for (i, c) in g
        .standard_cycles()
        .expect("even degrees")
        .iter()
        .enumerate()
    {
        let word: Vec<&str> = c.edges().map(|e| g.edge_name(e)).collect();
        println!("  curve {i}: {}", word.join(" "));
    }
    match g.filling_report().first() {
        None => println!("filling system"),
        Some(issue) => println!("not filling: {issue}"),
    }
    if let Ok(ig) = analysis::intersection_graph(&g) {
        for (a, b, w) in &ig.edges {
            println!("  i(C{a}, C{b}) = {w}");
        }
        println!("omega_max = {}", ig.omega_max());
    }
}
