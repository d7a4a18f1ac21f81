//! The relation laboratory: local finiteness probes, the p-adic coefficient
//! audit, and the root decomposition counterexample in G2.

use std::sync::Arc;

use lieo::relations::{self, probes};
use lieo::roots::{LieAlgebra, RootSystem, Weight};

fn main() -> lieo::Result<()> {
    let alg = Arc::new(LieAlgebra::from_type_str("A2")?);
    let lambda = Weight::fundamental(vec![1, -3]);
    for g in probes::chevalley_generators(&alg) {
        let (n, depth) = probes::probe_parameters(&alg, &lambda, g)?;
        let p = relations::locally_finite_probe(&alg, &lambda, &alg.basis_element(g), n, depth)?;
        println!("{:>3}: dims {:?}, locally finite {}", p.element, p.dims, p.locally_finite);
    }

    let report = relations::relation_coefficient_audit(&alg, &lambda, &[1, 1], 2, 5, 4)?;
    println!(
        "audit gamma = (1,1), n = 2, p = 5: {} (solution space dim {})",
        if report.verdict { "TRUE" } else { "FALSE" },
        report.solution_space_dim
    );

    let g2 = RootSystem::from_type_str("G2")?;
    let d = relations::decomposition_enumerate(&g2, &[2, 1], 3)?;
    println!("G2 3(2a+b): min sum {}, violations {:?}", d.min_sum, d.violations);
    Ok(())
}
