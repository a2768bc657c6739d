//! Canonical keys identify graphs up to relabelling and reorientation of
//! edges.

use fillgraph::families::{build, FamilyId};

fn main() {
    let g = build(FamilyId::Gamma0).unwrap();
    let m = g.edge_count();
    let perm: Vec<usize> = (0..m).rev().collect();
    let flip: Vec<bool> = (0..m).map(|e| e % 2 == 0).collect();
    let h = g.relabelled(&perm, &flip);
    println!("original   {}", g.canonical_form().key());
    println!("relabelled {}", h.canonical_form().key());
    assert!(g.is_isomorphic(&h));
}
