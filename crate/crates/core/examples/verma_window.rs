//! A finite window of a Verma module: graded dimensions of M(lambda) and of
//! its simple quotient, plus the three character formulas for a dominant weight.

use std::sync::Arc;

use lieo::roots::{LieAlgebra, Weight};
use lieo::verma::{build_window, freudenthal_char, weyl_dim, VermaModule};

fn main() -> lieo::Result<()> {
    let alg = Arc::new(LieAlgebra::from_type_str("A2")?);
    let lambda = Weight::fundamental(vec![1, 0]);
    let window = build_window(Arc::clone(&alg), &lambda, 4)?;
    let mut module = VermaModule::new(Arc::clone(&alg), lambda.clone())?;
    println!("M{lambda} vs L{lambda}, depth {}", window.depth);
    for drop in window.spaces.keys() {
        println!("  drop {drop:?}: {} / {}", window.dim(drop), module.simple_dim(drop));
    }

    let rs = alg.root_system();
    let ch = freudenthal_char(rs, &lambda, 6)?;
    println!("dim L{lambda} = {} (Weyl), {} (Freudenthal)", weyl_dim(rs, &lambda)?, ch.total());
    Ok(())
}
