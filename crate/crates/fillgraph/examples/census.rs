//! Exhaustive census of connected 4-regular fat graphs by vertex count.
//!
//! `cargo run --release --example census -- 3`

use fillgraph::oracle;

fn main() {
    let vmax: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(3);
    for v in 1..=vmax {
        let rows = oracle::enumerate(v).unwrap();
        let labelled: u64 = rows.iter().map(|r| r.count).sum();
        let filling = rows.iter().filter(|r| r.filling).count();
        println!(
            "V={v}: {} classes ({labelled} labelled), {filling} filling",
            rows.len()
        );
        for ((g, b), sizes) in oracle::filling_sizes(&rows) {
            println!("  g={g} b={b} sizes {sizes:?}");
        }
    }
}
