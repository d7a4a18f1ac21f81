//! Formal characters on finite windows: Kostant partition counts, Weyl's
//! dimension formula, Freudenthal's recursion (also over a Levi factor), the
//! Kostant alternating sum, and parabolic Verma characters.

use std::collections::{BTreeMap, HashMap};

use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::drops_up_to;
use crate::error::{Error, Result};
use crate::linalg::{rat, Rat};
use crate::roots::{RootSystem, Weight, Q};
use crate::weyl::WeylGroup;

/// Dimensions of weight spaces `lambda - mu` for drops `mu` of height at most
/// `depth`, keyed by `mu` in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterWindow {
    pub lambda: Weight,
    pub depth: usize,
    #[serde(serialize_with = "ser_dims")]
    pub dims: BTreeMap<Vec<i64>, i64>,
}

fn ser_dims<S: serde::Serializer>(
    dims: &BTreeMap<Vec<i64>, i64>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(dims.len()))?;
    for (k, v) in dims {
        seq.serialize_element(&(k, v))?;
    }
    seq.end()
}

impl CharacterWindow {
    pub fn get(&self, drop: &[i64]) -> i64 {
        self.dims.get(drop).copied().unwrap_or(0)
    }

    pub fn total(&self) -> i64 {
        self.dims.values().sum()
    }
}

fn q_rat(q: &Q) -> Rat {
    Rat::new((*q.numer()).into(), (*q.denom()).into())
}

/// Number of ways to write `target` as a non-negative integer combination of
/// `roots`, for every point of the box `0 <= mu <= target`.
fn partition_table(roots: &[Vec<i64>], target: &[i64]) -> HashMap<Vec<i64>, u64> {
    let mut points: Vec<Vec<i64>> = vec![Vec::new()];
    for &t in target {
        points = points
            .into_iter()
            .flat_map(|p| {
                (0..=t.max(0)).map(move |k| {
                    let mut q = p.clone();
                    q.push(k);
                    q
                })
            })
            .collect();
    }
    points.sort();
    let mut table: HashMap<Vec<i64>, u64> = points
        .iter()
        .map(|p| (p.clone(), u64::from(p.iter().all(|&c| c == 0))))
        .collect();
    for beta in roots {
        for p in &points {
            let prev: Vec<i64> = p.iter().zip(beta).map(|(a, b)| a - b).collect();
            if prev.iter().all(|&c| c >= 0) {
                let add = table[&prev];
                *table.get_mut(p).expect("box point") += add;
            }
        }
    }
    table
}

/// Kostant partition function `P(mu)` over all positive roots.
pub fn kostant_count(rs: &RootSystem, mu: &[i64]) -> u64 {
    kostant_count_in(rs.positive_roots(), mu)
}

/// Partition count using only the given roots.
pub fn kostant_count_in(roots: &[Vec<i64>], mu: &[i64]) -> u64 {
    if mu.iter().any(|&c| c < 0) {
        return 0;
    }
    partition_table(roots, mu)[mu]
}

/// `prod_{beta > 0} <lambda + rho, beta^vee> / <rho, beta^vee>`.
pub fn weyl_dim(rs: &RootSystem, lambda: &Weight) -> Result<u64> {
    if !rs.is_dominant(lambda)? {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let shifted = rs.add_weights(lambda, &rs.rho())?;
    let mut acc = Q::from(1);
    for beta in rs.positive_roots() {
        acc *= rs.coroot_pairing(&shifted, beta)? / rs.coroot_pairing(&rs.rho(), beta)?;
    }
    if !acc.is_integer() {
        return Err(Error::Internal(format!("Weyl dimension {acc} not integral")));
    }
    Ok(acc.to_integer() as u64)
}

/// Weight multiplicities of the finite-dimensional module `V_I(lambda)` of the
/// Levi factor spanned by `subset`, by Freudenthal's formula with `rho_I`.
pub fn freudenthal_levi(
    rs: &RootSystem,
    lambda: &Weight,
    subset: &[usize],
    depth: usize,
) -> Result<CharacterWindow> {
    if !rs.is_levi_dominant(lambda, subset)? {
        return Err(Error::NotDominant(format!(
            "{lambda} is not dominant for the Levi of {subset:?}"
        )));
    }
    let labels: Vec<Rat> = rs.dynkin_labels(lambda)?.iter().map(q_rat).collect();
    let half_len: Vec<Rat> = (0..rs.rank()).map(|j| q_rat(&rs.simple_sq_len(j)) / rat(2)).collect();
    let inner = |a: &[i64], b: &[i64]| q_rat(&rs.inner_product(a, b));
    // (lambda, v) for v in root coordinates
    let lam_dot = |v: &[i64]| -> Rat {
        v.iter()
            .enumerate()
            .map(|(j, &c)| rat(c) * &labels[j] * &half_len[j])
            .sum()
    };
    let levi_roots: Vec<Vec<i64>> = rs
        .subsystem_positive(subset)
        .into_iter()
        .map(|i| rs.root(i).to_vec())
        .collect();
    let mut mult: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for nu in drops_up_to(rs.rank(), depth) {
        if nu.iter().enumerate().any(|(j, &c)| c != 0 && !subset.contains(&j)) {
            continue;
        }
        if nu.iter().all(|&c| c == 0) {
            mult.insert(nu, 1);
            continue;
        }
        // 2 (lambda + rho_I, nu) - (nu, nu); (rho_I, alpha_j) = |alpha_j|^2 / 2
        let rho_dot: Rat = nu.iter().enumerate().map(|(j, &c)| rat(c) * &half_len[j]).sum();
        let denom = (lam_dot(&nu) + rho_dot) * rat(2) - inner(&nu, &nu);
        let mut rhs = Rat::zero();
        for beta in &levi_roots {
            let mut k = 1;
            loop {
                let prev: Vec<i64> = nu.iter().zip(beta).map(|(a, b)| a - k * b).collect();
                if prev.iter().any(|&c| c < 0) {
                    break;
                }
                if let Some(&m) = mult.get(&prev) {
                    if m != 0 {
                        // (lambda - prev, beta)
                        rhs += rat(m) * (lam_dot(beta) - inner(&prev, beta));
                    }
                }
                k += 1;
            }
        }
        let m = if denom.is_zero() {
            Rat::zero()
        } else {
            rhs * rat(2) / denom
        };
        if !m.is_integer() || m < Rat::zero() {
            return Err(Error::Internal(format!("Freudenthal multiplicity {m} at {nu:?}")));
        }
        let m = m.to_integer().to_i64().expect("small multiplicity");
        if m != 0 {
            mult.insert(nu, m);
        }
    }
    Ok(CharacterWindow {
        lambda: lambda.clone(),
        depth,
        dims: mult,
    })
}

/// Character of `V(lambda)` for dominant `lambda`.
pub fn freudenthal_char(rs: &RootSystem, lambda: &Weight, depth: usize) -> Result<CharacterWindow> {
    if !rs.is_dominant(lambda)? {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let all: Vec<usize> = (0..rs.rank()).collect();
    freudenthal_levi(rs, lambda, &all, depth)
}

/// `dim V(lambda)_{lambda - mu} = sum_w (-1)^{l(w)} P(mu - (lambda - w.lambda))`.
pub fn kostant_alternating_dim(w: &WeylGroup, lambda: &Weight, mu: &[i64]) -> Result<i64> {
    let rs = w.root_system();
    if !rs.is_dominant(lambda)? {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let mut total = 0i64;
    for e in w.elements() {
        let shift = rs
            .difference_in_roots(lambda, &e.dot(rs, lambda)?)?
            .ok_or_else(|| Error::Internal("dot orbit left the root lattice".into()))?;
        let arg: Vec<i64> = mu
            .iter()
            .zip(&shift)
            .map(|(m, s)| m - s.to_integer())
            .collect();
        let p = kostant_count(rs, &arg) as i64;
        total += if e.length() % 2 == 0 { p } else { -p };
    }
    Ok(total)
}

/// Verma character `P(mu)` on a window.
pub fn verma_char(rs: &RootSystem, lambda: &Weight, depth: usize) -> CharacterWindow {
    let drops = drops_up_to(rs.rank(), depth);
    let dims = drops
        .into_iter()
        .map(|d| {
            let n = kostant_count(rs, &d) as i64;
            (d, n)
        })
        .collect();
    CharacterWindow {
        lambda: lambda.clone(),
        depth,
        dims,
    }
}

/// `char M_I(lambda) = char V_I(lambda) * prod_{beta in Phi+ \ Phi_I+} (1 - e^{-beta})^{-1}`.
pub fn parabolic_verma_char(
    rs: &RootSystem,
    subset: &[usize],
    lambda: &Weight,
    depth: usize,
) -> Result<CharacterWindow> {
    let levi = freudenthal_levi(rs, lambda, subset, depth)?;
    let levi_idx = rs.subsystem_positive(subset);
    let nil: Vec<Vec<i64>> = (0..rs.num_positive())
        .filter(|i| !levi_idx.contains(i))
        .map(|i| rs.root(i).to_vec())
        .collect();
    let mut dims = BTreeMap::new();
    for mu in drops_up_to(rs.rank(), depth) {
        let mut total = 0i64;
        for (nu, &m) in &levi.dims {
            let rest: Vec<i64> = mu.iter().zip(nu).map(|(a, b)| a - b).collect();
            if rest.iter().all(|&c| c >= 0) {
                total += m * kostant_count_in(&nil, &rest) as i64;
            }
        }
        dims.insert(mu, total);
    }
    Ok(CharacterWindow {
        lambda: lambda.clone(),
        depth,
        dims,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rs(t: &str) -> RootSystem {
        RootSystem::from_type_str(t).unwrap()
    }

    /// Brute-force partition count by enumerating every exponent vector.
    fn brute_partitions(roots: &[Vec<i64>], mu: &[i64]) -> u64 {
        let bound = mu.iter().sum::<i64>();
        let mut count = 0;
        let mut exps = vec![0i64; roots.len()];
        loop {
            let s: Vec<i64> = (0..mu.len())
                .map(|j| roots.iter().zip(&exps).map(|(r, e)| r[j] * e).sum())
                .collect();
            if s == mu {
                count += 1;
            }
            let mut k = 0;
            loop {
                if k == exps.len() {
                    return count;
                }
                exps[k] += 1;
                if exps[k] <= bound {
                    break;
                }
                exps[k] = 0;
                k += 1;
            }
        }
    }

    #[test]
    fn kostant_examples() {
        let a2 = rs("A2");
        assert_eq!(kostant_count(&a2, &[0, 0]), 1);
        assert_eq!(kostant_count(&a2, &[1, 1]), 2);
        let a1 = rs("A1");
        for n in 0..10 {
            assert_eq!(kostant_count(&a1, &[n]), 1);
        }
        assert_eq!(kostant_count(&a2, &[-1, 2]), 0);
    }

    #[test]
    fn weyl_dims() {
        let a2 = rs("A2");
        assert_eq!(weyl_dim(&a2, &a2.zero_weight()).unwrap(), 1);
        assert_eq!(weyl_dim(&a2, &a2.rho()).unwrap(), 8);
        let a1 = rs("A1");
        for m in 0..6 {
            assert_eq!(weyl_dim(&a1, &Weight::fundamental(vec![m])).unwrap(), m as u64 + 1);
        }
        let g2 = rs("G2");
        assert_eq!(weyl_dim(&g2, &Weight::fundamental(vec![1, 0])).unwrap(), 7);
        assert_eq!(weyl_dim(&g2, &Weight::fundamental(vec![0, 1])).unwrap(), 14);
        assert!(weyl_dim(&a2, &Weight::fundamental(vec![-1, 0])).is_err());
    }

    #[test]
    fn three_way_characters() {
        for (t, lam) in [("A2", vec![1, 1]), ("A2", vec![2, 1]), ("B2", vec![1, 1]), ("G2", vec![1, 0]), ("A3", vec![1, 0, 1])] {
            let r = rs(t);
            let w = WeylGroup::new(&r).unwrap();
            let lam = Weight::fundamental(lam);
            let depth = 30;
            let fr = freudenthal_char(&r, &lam, depth).unwrap();
            assert_eq!(fr.total() as u64, weyl_dim(&r, &lam).unwrap(), "{t}");
            for (mu, &m) in &fr.dims {
                assert_eq!(kostant_alternating_dim(&w, &lam, mu).unwrap(), m, "{t} {mu:?}");
            }
        }
    }

    #[test]
    fn parabolic_examples() {
        let a2 = rs("A2");
        let z = a2.zero_weight();
        let pc = parabolic_verma_char(&a2, &[0], &z, 6).unwrap();
        assert_eq!(pc.get(&[0, 1]), 1);
        assert_eq!(pc.get(&[1, 0]), 0);
        let borel = parabolic_verma_char(&a2, &[], &z, 6).unwrap();
        assert_eq!(borel, verma_char(&a2, &z, 6));
        let full = parabolic_verma_char(&a2, &[0, 1], &a2.rho(), 6).unwrap();
        assert_eq!(full.total(), 8);
        assert!(parabolic_verma_char(&a2, &[0], &Weight::fundamental(vec![-1, 0]), 4).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn partition_dp_matches_brute_force(
            t in prop::sample::select(vec!["A2", "B2", "G2"]),
            a in 0i64..5, b in 0i64..5,
        ) {
            let r = rs(t);
            prop_assert_eq!(kostant_count(&r, &[a, b]), brute_partitions(r.positive_roots(), &[a, b]));
        }
    }
}
