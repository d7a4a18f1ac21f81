//! Line bundles on the Drinfeld upper half space: Bott data, the dot-action
//! chain, and the graded pieces of the filtration on global sections.

use lieo::drinfeld::{bott, filtration_report, weight_table, LineBundleSpec};

fn main() -> lieo::Result<()> {
    let spec = LineBundleSpec::new(2, -1, 1)?;
    let b = bott(&spec)?;
    println!("d = 2, (r, s) = (-1, 1): degenerate {}, i0 = {}, dim H = {}", b.degenerate, b.i0, b.h_dim);

    let table = weight_table(&spec)?;
    for (i, w) in table.weights.iter().enumerate() {
        println!("  w_{i} . lambda = {w}");
    }

    let report = filtration_report(&LineBundleSpec::new(2, 0, 0)?)?;
    println!("cohomology {:?}", report.cohomology);
    for c in &report.constituents {
        println!("  {c}");
    }
    Ok(())
}
