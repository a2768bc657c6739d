//! Every catalog family with its surface signature and cycle lengths.

use fillgraph::families;

fn main() {
    println!(
        "{:<16} {:>3} {:>3} {:>3}  cycle lengths",
        "family", "g", "b", "s"
    );
    for row in families::catalog() {
        let graph = families::build(row.id).expect("catalog entries build");
        let (g, b, s) = row.signature;
        let lengths = graph
            .standard_cycles()
            .map(|cs| {
                let mut l: Vec<usize> = cs.iter().map(|c| c.len()).collect();
                l.sort_unstable_by(|a, b| b.cmp(a));
                format!("{l:?}")
            })
            .unwrap_or_else(|_| "-".into());
        println!("{:<16} {g:>3} {b:>3} {s:>3}  {lengths}", row.id.to_string());
    }
}
