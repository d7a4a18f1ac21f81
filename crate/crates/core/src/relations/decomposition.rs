//! Decompositions `n gamma = sum nu_i beta_i` over the positive roots and the
//! inequality `n <= sum nu_i`, which fails in type G2.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::roots::RootSystem;
use crate::verma::decompositions;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionSet {
    pub cartan_type: String,
    pub gamma: Vec<i64>,
    pub n: u32,
    /// Positive roots in PBW order; `solutions` index into this list.
    pub roots: Vec<Vec<i64>>,
    pub solutions: Vec<Vec<u32>>,
    pub min_sum: u32,
    /// Solutions with `sum nu < n`.
    pub violations: Vec<Vec<u32>>,
    pub holds: bool,
}

pub fn decomposition_enumerate(rs: &RootSystem, gamma: &[i64], n: u32) -> Result<DecompositionSet> {
    if rs.positive_index(gamma).is_none() {
        return Err(Error::NotARoot(gamma.to_vec()));
    }
    let target: Vec<i64> = gamma.iter().map(|c| c * i64::from(n)).collect();
    let roots = rs.positive_roots().to_vec();
    let solutions = decompositions(&roots, &target);
    let sum = |nu: &Vec<u32>| nu.iter().sum::<u32>();
    let violations: Vec<Vec<u32>> = solutions.iter().filter(|nu| sum(nu) < n).cloned().collect();
    Ok(DecompositionSet {
        cartan_type: rs.cartan_type().to_string(),
        gamma: gamma.to_vec(),
        n,
        min_sum: solutions.iter().map(sum).min().unwrap_or(0),
        holds: violations.is_empty(),
        violations,
        roots,
        solutions,
    })
}

/// Every positive root `gamma` and `1 <= n <= max_n`.
pub fn decomposition_sweep(rs: &RootSystem, max_n: u32) -> Result<Vec<DecompositionSet>> {
    let mut out = Vec::new();
    for gamma in rs.positive_roots() {
        for n in 1..=max_n {
            out.push(decomposition_enumerate(rs, gamma, n)?);
        }
    }
    Ok(out)
}

/// The first failing instance of the inequality, searching roots in PBW
/// order and `n` upwards.
pub fn find_violation(rs: &RootSystem, max_n: u32) -> Result<Option<DecompositionSet>> {
    for n in 1..=max_n {
        for gamma in rs.positive_roots() {
            let d = decomposition_enumerate(rs, gamma, n)?;
            if !d.holds {
                return Ok(Some(d));
            }
        }
    }
    Ok(None)
}
