//! Numerical laboratory for the relations used in the irreducibility
//! argument: free-algebra expansions, root decompositions, probes of
//! `L(lambda)` and the p-adic coefficient audit.

pub mod audit;
pub mod decomposition;
pub mod free_algebra;
pub mod identities;
pub mod probes;

pub use audit::{relation_coefficient_audit, AuditReport, CounterWitness, Witness};
pub use decomposition::{decomposition_enumerate, decomposition_sweep, find_violation, DecompositionSet};
pub use free_algebra::{commutator_expansion_check, FreeElement};
pub use identities::{footnote_constants, heightone_check, lemma1b_check, lemma1b_random, FootnoteRecord, IdentityReport};
pub use probes::{
    chevalley_generators, injectivity_probe, locally_finite_probe, probe_parameters, InjectivityProbe,
    LocalFinitenessProbe,
};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::Result;
use crate::linalg::Rat;
use crate::roots::{RootSystem, Weight};

/// `I(lambda)`: simple roots with `<lambda, alpha^vee>` a non-negative
/// integer. Defined for any rational weight.
pub fn levi_subset(rs: &RootSystem, lambda: &Weight) -> Result<Vec<usize>> {
    let labels = rs.dynkin_labels(lambda)?;
    Ok(labels
        .iter()
        .enumerate()
        .filter(|(_, l)| l.is_integer() && l.to_integer() >= 0)
        .map(|(i, _)| i)
        .collect())
}

fn int_valuation(n: &BigInt, p: u64) -> i64 {
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    while (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    v
}

/// `v_p(x)`, `None` for zero.
pub fn valuation(x: &Rat, p: u64) -> Option<i64> {
    if x.is_zero() {
        return None;
    }
    Some(int_valuation(x.numer(), p) - int_valuation(x.denom(), p))
}

pub fn is_p_integral(x: &Rat, p: u64) -> bool {
    valuation(x, p).map_or(true, |v| v >= 0)
}

/// Warnings when `p` divides a non-zero pairing `<beta, alpha^vee>` between
/// distinct positive roots, where the unit arguments break down.
pub fn prime_hypothesis_warnings(rs: &RootSystem, p: u64) -> Vec<String> {
    let mut bad = std::collections::BTreeSet::new();
    for a in rs.positive_roots() {
        for b in rs.positive_roots() {
            if a == b {
                continue;
            }
            let c = rs.root_pairing(b, a).unsigned_abs();
            if c != 0 && c % p == 0 {
                bad.insert(c);
            }
        }
    }
    bad.into_iter()
        .map(|c| format!("p = {p} divides the root pairing {c}; the unit hypotheses fail"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use num_bigint::BigInt;

    #[test]
    fn valuations() {
        assert_eq!(valuation(&rat(50), 5), Some(2));
        assert_eq!(valuation(&Rat::new(BigInt::from(3), BigInt::from(25)), 5), Some(-2));
        assert_eq!(valuation(&rat(0), 5), None);
        assert!(is_p_integral(&Rat::new(BigInt::from(1), BigInt::from(3)), 5));
    }

    #[test]
    fn hypotheses() {
        let g2 = RootSystem::from_type_str("G2").unwrap();
        assert!(prime_hypothesis_warnings(&g2, 5).is_empty());
        assert_eq!(prime_hypothesis_warnings(&g2, 3).len(), 1);
        // pairings of 2 only occur between a root and itself in G2
        assert!(prime_hypothesis_warnings(&g2, 2).is_empty());
        let b2 = RootSystem::from_type_str("B2").unwrap();
        assert_eq!(prime_hypothesis_warnings(&b2, 2).len(), 1);
        let a2 = RootSystem::from_type_str("A2").unwrap();
        assert!(prime_hypothesis_warnings(&a2, 2).is_empty());
    }

    #[test]
    fn levi_for_rational_weights() {
        let rs = RootSystem::from_type_str("A2").unwrap();
        let mut w = Weight::fundamental(vec![2, -1]);
        assert_eq!(levi_subset(&rs, &w).unwrap(), vec![0]);
        w.coords[0] = crate::roots::Q::new(1, 2);
        assert!(levi_subset(&rs, &w).unwrap().is_empty());
    }
}
