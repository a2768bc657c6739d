//! One-disc fillings of every size for a few genera.

use fillgraph::synthesis::{minimal_filling, Target};

fn main() {
    for g in 2..=5 {
        let sizes: Vec<String> = (Target::lower_size(g, 1)..=Target::upper_size(g, 1))
            .map(|s| {
                let syn = minimal_filling(g, s).unwrap();
                format!("s={s}:w{}", syn.omega_max())
            })
            .collect();
        println!("g={g}  {}", sizes.join("  "));
    }
    println!(
        "genus 2 with two curves: {}",
        minimal_filling(2, 2).unwrap_err()
    );
}
