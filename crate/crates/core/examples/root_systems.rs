//! Cartan data, positive roots and Chevalley structure constants.

use lieo::roots::{LieAlgebra, RootSystem};
use lieo::weyl::weyl_order;

fn main() -> lieo::Result<()> {
    for t in ["A2", "B2", "G2", "C3"] {
        let rs = RootSystem::from_type_str(t)?;
        println!("{t}: |W| = {}, highest root {:?}", weyl_order(&rs), rs.highest_root());
        println!("  cartan {:?}", rs.cartan_matrix());
        println!("  positive roots {:?}", rs.positive_roots());
    }

    let g2 = LieAlgebra::from_type_str("G2")?;
    println!("G2: dim {}", g2.dim());
    for (a, b, c) in g2.chevalley().triples(g2.root_system()) {
        println!("  [x{a:?}, x{b:?}] = {c} x(a+b)");
    }
    Ok(())
}
