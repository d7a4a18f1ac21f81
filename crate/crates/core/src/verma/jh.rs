//! Jordan–Hölder multiplicities of a Verma module by character subtraction.
//!
//! `char M(lambda)` is written as `sum m_mu char L(mu)` on a window. The
//! system is unitriangular in the dominance order, so subtracting simple
//! characters from the top down determines every `m_mu`. A non-zero residual
//! at a weight outside the linkage class, or a linked weight below the
//! window, makes the oracle refuse instead of reporting a truncated answer.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use super::{drops_up_to, kostant_count, VermaModule};
use crate::error::{Error, Result};
use crate::roots::{LieAlgebra, Weight};
use crate::weyl::WeylGroup;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JhFactor {
    pub weight: Weight,
    /// Drop `lambda - weight` in simple-root coordinates.
    pub drop: Vec<i64>,
    pub multiplicity: i64,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct JhOptions {
    /// Allow rank above 2 (may be slow or need large depths).
    pub allow_higher_rank: bool,
}

pub fn jh_verma_bruteforce(
    alg: Arc<LieAlgebra>,
    lambda: &Weight,
    depth: usize,
    opts: JhOptions,
) -> Result<Vec<JhFactor>> {
    let rs = alg.root_system().clone();
    if rs.rank() > 2 && !opts.allow_higher_rank {
        return Err(Error::BoundExceeded(format!(
            "brute-force Jordan-Hölder oracle is limited to rank 2 (got {})",
            rs.cartan_type()
        )));
    }
    if !rs.is_integral(lambda)? {
        return Err(Error::NonIntegral(lambda.to_string()));
    }
    let weyl = WeylGroup::new(&rs)?;
    // linked weights below lambda, keyed by drop
    let mut linked: BTreeMap<Vec<i64>, Weight> = BTreeMap::new();
    for w in weyl.elements() {
        let mu = w.dot(&rs, lambda)?;
        if let Some(diff) = rs.difference_in_roots(lambda, &mu)? {
            if diff.iter().all(|c| c.is_integer() && *c >= 0.into()) {
                let drop: Vec<i64> = diff.iter().map(|c| c.to_integer()).collect();
                if drop.iter().sum::<i64>() as usize > depth {
                    return Err(Error::WindowTooShallow(format!(
                        "linked weight {mu} lies at height {} > depth {depth}",
                        drop.iter().sum::<i64>()
                    )));
                }
                linked.insert(drop, mu);
            }
        }
    }
    let drops = drops_up_to(rs.rank(), depth);
    let mut residual: BTreeMap<Vec<i64>, i64> = drops
        .iter()
        .map(|d| (d.clone(), kostant_count(&rs, d) as i64))
        .collect();
    let mut factors = Vec::new();
    for d in &drops {
        let m = residual[d];
        if m == 0 {
            continue;
        }
        let Some(mu) = linked.get(d) else {
            return Err(Error::WindowTooShallow(format!(
                "non-zero residual {m} at unlinked drop {d:?}"
            )));
        };
        if m < 0 {
            return Err(Error::Internal(format!("negative multiplicity at {d:?}")));
        }
        let h: i64 = d.iter().sum();
        let mut simple = VermaModule::new(Arc::clone(&alg), mu.clone())?;
        for e in drops_up_to(rs.rank(), depth - h as usize) {
            let total: Vec<i64> = d.iter().zip(&e).map(|(a, b)| a + b).collect();
            let dim = simple.simple_dim(&e) as i64;
            *residual.get_mut(&total).expect("inside window") -= m * dim;
        }
        factors.push(JhFactor {
            weight: mu.clone(),
            drop: d.clone(),
            multiplicity: m,
        });
    }
    Ok(factors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(t: &str, lam: &[i64], depth: usize) -> Result<Vec<JhFactor>> {
        let alg = Arc::new(LieAlgebra::from_type_str(t).unwrap());
        let w = alg.root_system().weight_i64(lam).unwrap();
        jh_verma_bruteforce(alg, &w, depth, JhOptions::default())
    }

    #[test]
    fn sl2_zero() {
        let f = run("A1", &[0], 4).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f[1].weight, Weight::fundamental(vec![-2]));
        assert!(f.iter().all(|x| x.multiplicity == 1));
    }

    #[test]
    fn a2_zero_has_six_factors() {
        let f = run("A2", &[0, 0], 4).unwrap();
        assert_eq!(f.len(), 6);
        assert!(f.iter().all(|x| x.multiplicity == 1));
    }

    #[test]
    fn antidominant_single_factor() {
        let f = run("A2", &[-1, -1], 5).unwrap();
        assert_eq!(f.len(), 1);
        let f = run("B2", &[-2, -1], 5).unwrap();
        assert_eq!(f.len(), 1);
    }

    #[test]
    fn shallow_window_refused() {
        assert!(matches!(run("A2", &[0, 0], 3), Err(Error::WindowTooShallow(_))));
        let alg = Arc::new(LieAlgebra::from_type_str("A3").unwrap());
        let z = alg.root_system().zero_weight();
        assert!(jh_verma_bruteforce(alg, &z, 6, JhOptions::default()).is_err());
    }

    #[test]
    fn b2_regular_dominant() {
        // all eight linked weights appear, each once (regular integral case)
        let f = run("B2", &[0, 0], 8).unwrap();
        assert_eq!(f.len(), 8);
        assert!(f.iter().all(|x| x.multiplicity == 1));
    }
}
