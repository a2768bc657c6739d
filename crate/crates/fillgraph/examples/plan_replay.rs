//! Plans and graphs survive a JSON round trip.

use fillgraph::io;
use fillgraph::synthesis::{filling, SynthesisPlan};

fn main() {
    let syn = filling(4, 2, 6).unwrap();
    let json = syn.plan.to_json();
    let plan = SynthesisPlan::from_json(&json).unwrap();
    let replayed = plan.replay().unwrap();
    assert!(replayed.graph.is_isomorphic(&syn.graph));
    println!(
        "plan of {} steps replays to an isomorphic graph",
        plan.steps.len()
    );

    let doc = io::write_graph(&replayed.graph);
    let back = io::read_graph(&doc).unwrap();
    assert_eq!(io::write_graph(&back), doc);
    println!("{doc}");
}
