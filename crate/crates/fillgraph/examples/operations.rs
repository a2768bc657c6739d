//! Join, plumbing and connected sum, each with its predicted and
//! recomputed signature.

use fillgraph::families::{build, FamilyId};
use fillgraph::ops;

fn main() {
    let gamma2 = build(FamilyId::GammaG(2)).unwrap();
    let torus = build(FamilyId::TorusPair).unwrap();
    let gamma0 = build(FamilyId::Gamma0).unwrap();
    let g2 = build(FamilyId::G2).unwrap();
    let quad = build(FamilyId::QuadrupleF3).unwrap();

    let joined = ops::join(&gamma2, 0, &torus, 0).unwrap();
    println!("join      {}", joined.summary());

    let plumbed = ops::plumbing(&quad, 0, &torus, 0).unwrap();
    println!("plumbing  {}", plumbed.summary());

    let w = ops::vertex_slot(&gamma0, 0, 0).unwrap();
    let u = ops::vertex_slot(&g2, 0, 0).unwrap();
    let summed = ops::connected_sum(&gamma0, w, &g2, u).unwrap();
    println!("consum    {}", summed.summary());
    if let Some(chi) = &summed.chi {
        println!("          corner branch {:?}", chi.branch);
    }

    for r in [&joined, &plumbed, &summed] {
        assert!(r.agrees());
    }
}
