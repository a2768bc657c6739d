//! One-disc fillings whose largest pairwise intersection is 2g - s + 1.

use fillgraph::synthesis::{tight_omega_filling, Target};

fn main() {
    for g in 2..=6 {
        for s in Target::lower_size(g, 1)..=2 * g {
            let syn = tight_omega_filling(g, s).unwrap();
            assert_eq!(syn.omega_max(), 2 * g + 1 - s);
            print!("({g},{s})->{} ", syn.omega_max());
        }
        println!();
    }
}
