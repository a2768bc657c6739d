//! Graphviz output with ports in rotation order and one color per curve.
//!
//! `cargo run --example export_dot | dot -Tsvg > g1.svg`

use fillgraph::families::{build, FamilyId};
use fillgraph::io;

fn main() {
    let g = build(FamilyId::G1).unwrap();
    print!("{}", io::to_dot(&g));
}
