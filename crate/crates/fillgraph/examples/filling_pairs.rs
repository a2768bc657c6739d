//! Two-curve fillings for a range of genera and disc counts.

use fillgraph::synthesis::filling_pair;

fn main() {
    for g in 1..=5 {
        let row: Vec<String> = (1..=4)
            .map(|b| match filling_pair(g, b) {
                Ok(p) => format!("b={b}:V{}", p.graph.vertex_count()),
                Err(_) => format!("b={b}:none"),
            })
            .collect();
        println!("g={g}  {}", row.join("  "));
    }
}
