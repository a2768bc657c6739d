//! Direct backtracking search, including an exhaustive negative answer.

use fillgraph::synthesis::search::{search_filling, SearchOptions, SearchOutcome};

fn main() {
    let opts = SearchOptions::default();
    for (v, target) in [
        (1, (1, 1, 2)),
        (3, (2, 1, 2)),
        (3, (2, 1, 3)),
        (5, (3, 1, 2)),
    ] {
        match search_filling(v, target, opts).unwrap() {
            SearchOutcome::Found(g) => {
                let words: Vec<String> = g
                    .vertex_cycles()
                    .iter()
                    .map(|c| {
                        c.iter()
                            .map(|h| h.to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    })
                    .collect();
                println!("{target:?} on V={v}: found [{}]", words.join(" | "));
            }
            SearchOutcome::NotFound { nodes } => {
                println!("{target:?} on V={v}: none ({nodes} nodes explored)")
            }
            SearchOutcome::Exhausted { nodes } => println!("{target:?}: budget spent at {nodes}"),
        }
    }
}
