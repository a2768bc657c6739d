//! Build and verify a filling for a signature given on the command line.
//!
//! `cargo run --example synthesize -- 3 2 5`

use fillgraph::synthesis::{filling, verify, Target};

fn main() {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (g, b, s) = match args[..] {
        [g, b, s] => (g, b, s),
        _ => (3, 2, 5),
    };
    match filling(g, b, s) {
        Ok(syn) => {
            verify(&syn.graph, Target::new(g, b, s)).expect("synthesized graphs verify");
            println!(
                "({g},{b},{s}): {} steps, omega_max {}",
                syn.plan.steps.len(),
                syn.omega_max()
            );
            for step in &syn.plan.steps {
                println!("  {}", serde_json::to_string(step).unwrap());
            }
        }
        Err(e) => println!("({g},{b},{s}): {e}"),
    }
}
