//! Composition factors of a Verma module and the constituent labels of the
//! induced locally analytic representation.

use std::sync::Arc;

use lieo::labels::{jh_series, trivial_total_length, SmoothLabel};
use lieo::roots::{LieAlgebra, Weight};
use lieo::verma::{jh_verma_bruteforce, JhOptions};
use lieo::weyl::ParabolicSubset;

fn main() -> lieo::Result<()> {
    let alg = Arc::new(LieAlgebra::from_type_str("A2")?);
    let rs = alg.root_system().clone();
    let factors = jh_verma_bruteforce(Arc::clone(&alg), &rs.zero_weight(), 4, JhOptions::default())?;
    for f in &factors {
        println!("L{} x{} (drop {:?})", f.weight, f.multiplicity, f.drop);
    }

    let weights: Vec<Weight> = factors.iter().map(|f| f.weight.clone()).collect();
    let b = ParabolicSubset::borel(&rs);
    let series = jh_series(&rs, &weights, &SmoothLabel::Trivial, &b)?;
    for c in &series.constituents {
        println!("  {}", c.text);
    }
    println!("length {} (closed form {})", series.total_length, trivial_total_length(&rs, &weights, &b)?);
    Ok(())
}
