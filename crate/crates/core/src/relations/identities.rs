//! Identities in Verma modules checked by direct computation: the height-one
//! formula for `x_gamma^n y_gamma^n v+`, the commuting-bracket formula
//! `x^n y^n v+ = n! [x, y]^n v+`, and the constants of `ad(x_alpha)^k y_gamma`.

use std::sync::Arc;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::linalg::{rat, Rat};
use crate::roots::{LieAlgebra, Weight, WeightBasis, Q};
use crate::verma::{q_to_rat, Vector, VermaModule};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
    pub holds: bool,
}

impl IdentityReport {
    fn new(name: &str) -> Self {
        IdentityReport {
            name: name.into(),
            cases: 0,
            failures: Vec::new(),
            holds: true,
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.holds = false;
            self.failures.push(what());
        }
    }
}

fn factorial(n: u32) -> Rat {
    (1..=n).fold(Rat::one(), |acc, k| acc * rat(k.into()))
}

fn power(module: &mut VermaModule, g: usize, n: u32, v: &Vector) -> Vector {
    (0..n).fold(v.clone(), |acc, _| module.act(g, &acc))
}

fn scalar_multiple(v: &Vector, c: &Rat, hw: &Vector) -> bool {
    let key = hw.keys().next().expect("highest weight vector");
    if c.is_zero() {
        return v.values().all(Zero::is_zero);
    }
    v.len() == 1 && v.get(key) == Some(c)
}

/// Sample values of `t = <lambda, gamma^vee>`: integral, half-integral and
/// negative, pairwise distinct.
const SAMPLES: [(i64, i64); 9] = [(-2, 1), (-1, 2), (0, 1), (1, 3), (1, 1), (2, 1), (3, 1), (7, 2), (9, 1)];

/// For each simple `gamma` and `n <= n_max`, checks
/// `x_gamma^n y_gamma^n v+ = n! prod_{i<n} (t - i) v+` at `n + 2` distinct
/// values of `t`, the other labels held fixed. Both sides are polynomials
/// of degree `<= n` in `t`, so agreement at `n + 1` points is an identity.
pub fn heightone_check(alg: &Arc<LieAlgebra>, n_max: u32) -> Result<IdentityReport> {
    let rs = alg.root_system();
    let mut report = IdentityReport::new("heightone");
    for i in 0..rs.rank() {
        let s = rs.simple_index(i);
        for n in 1..=n_max {
            for &(a, b) in SAMPLES.iter().take(n as usize + 2) {
                let t = Q::new(a, b);
                let coords: Vec<Q> = (0..rs.rank())
                    .map(|j| if j == i { t } else { Q::new(2 * j as i64 - 1, 3) })
                    .collect();
                let lambda = Weight { coords, basis: WeightBasis::Fundamental };
                let mut module = VermaModule::new(Arc::clone(alg), lambda)?;
                let hw = module.highest_weight_vector();
                let down = power(&mut module, alg.y(s), n, &hw);
                let back = power(&mut module, alg.x(s), n, &down);
                let tr = q_to_rat(&t);
                let expected = (0..n).fold(factorial(n), |acc, k| acc * (&tr - rat(k.into())));
                report.record(scalar_multiple(&back, &expected, &hw), || {
                    format!("{} simple {} n={n} t={t}", rs.cartan_type(), i + 1)
                });
            }
        }
    }
    Ok(report)
}

/// For every pair `x = x_beta`, `y = y_gamma` with `[x, [x, y]] = 0`,
/// compares `x^n y^n v+` with `n! [x, y]^n v+` in `M(lambda)`.
pub fn lemma1b_check(alg: &Arc<LieAlgebra>, lambda: &Weight, n_max: u32) -> Result<IdentityReport> {
    let rs = alg.root_system();
    let r = rs.num_positive();
    let mut report = IdentityReport::new("lemma1b");
    let mut module = VermaModule::new(Arc::clone(alg), lambda.clone())?;
    let hw = module.highest_weight_vector();
    for b in 0..r {
        let x = alg.basis_element(alg.x(b));
        for c in 0..r {
            let y = alg.basis_element(alg.y(c));
            let xy = alg.bracket(&x, &y);
            if !alg.bracket(&x, &xy).is_empty() {
                continue;
            }
            for n in 1..=n_max {
                let down = power(&mut module, alg.y(c), n, &hw);
                let lhs = power(&mut module, alg.x(b), n, &down);
                let mut rhs = hw.clone();
                for _ in 0..n {
                    rhs = module.act_element(&xy, &rhs);
                }
                let f = factorial(n);
                rhs.values_mut().for_each(|v| *v *= &f);
                rhs.retain(|_, v| !v.is_zero());
                report.record(lhs == rhs, || {
                    format!("{} x{:?} y{:?} n={n}", rs.cartan_type(), rs.root(b), rs.root(c))
                });
            }
        }
    }
    Ok(report)
}

/// Runs [`lemma1b_check`] at `count` seeded random integral weights with
/// labels in `[-3, 3]`.
pub fn lemma1b_random(alg: &Arc<LieAlgebra>, n_max: u32, count: usize, seed: u64) -> Result<IdentityReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut total = IdentityReport::new("lemma1b");
    for _ in 0..count {
        let labels: Vec<i64> = (0..alg.root_system().rank()).map(|_| rng.gen_range(-3..=3)).collect();
        let r = lemma1b_check(alg, &Weight::fundamental(labels), n_max)?;
        total.cases += r.cases;
        total.holds &= r.holds;
        total.failures.extend(r.failures);
    }
    Ok(total)
}

/// `ad(x_alpha)^{k0} y_gamma = k0! c y_{gamma - k0 alpha}` with `alpha` simple,
/// `gamma - alpha` and `gamma - 2 alpha` positive roots and `k0` maximal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FootnoteRecord {
    pub gamma: Vec<i64>,
    pub alpha: Vec<i64>,
    pub k0: u32,
    pub result_root: Vec<i64>,
    /// The coefficient `k0! c`.
    pub coefficient: i64,
    pub c: i64,
    pub unit: bool,
}

pub fn footnote_constants(alg: &LieAlgebra, p: u64) -> Vec<FootnoteRecord> {
    let rs = alg.root_system();
    let mut out = Vec::new();
    for gamma in rs.positive_roots() {
        for i in 0..rs.rank() {
            let alpha = rs.simple_root(i);
            let shifted = |k: i64| -> Vec<i64> {
                gamma.iter().zip(&alpha).map(|(g, a)| g - k * a).collect()
            };
            if rs.positive_index(&shifted(1)).is_none() || rs.positive_index(&shifted(2)).is_none() {
                continue;
            }
            let mut k0 = 2;
            while rs.positive_index(&shifted(k0 + 1)).is_some() {
                k0 += 1;
            }
            let target = shifted(k0);
            let x = alg.basis_element(alg.x(rs.simple_index(i)));
            let y = alg.basis_element(alg.y(rs.positive_index(gamma).expect("positive root")));
            let res = alg.ad_power(&x, k0 as usize, &y);
            let slot = alg.y(rs.positive_index(&target).expect("positive root"));
            let coefficient = res.get(&slot).copied().unwrap_or_else(Q::zero);
            assert!(res.len() == 1 && coefficient.is_integer(), "ad power is a root vector");
            let coefficient = coefficient.to_integer();
            let fact: i64 = (1..=k0).product();
            let c = coefficient / fact;
            debug_assert_eq!(c * fact, coefficient);
            out.push(FootnoteRecord {
                gamma: gamma.clone(),
                alpha,
                k0: k0 as u32,
                result_root: target,
                coefficient,
                c,
                unit: c != 0 && (c.unsigned_abs() % p != 0),
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(t: &str) -> Arc<LieAlgebra> {
        Arc::new(LieAlgebra::from_type_str(t).unwrap())
    }

    #[test]
    fn heightone_small() {
        for t in ["A1", "A2", "B2"] {
            let r = heightone_check(&alg(t), 4).unwrap();
            assert!(r.holds, "{:?}", r.failures);
        }
    }

    #[test]
    fn heightone_detects_a_wrong_formula() {
        // (n+1)! would disagree already at n = 1, t = 1
        let a = alg("A1");
        let mut m = VermaModule::new(Arc::clone(&a), Weight::fundamental(vec![1])).unwrap();
        let hw = m.highest_weight_vector();
        let down = power(&mut m, a.y(0), 1, &hw);
        let v = power(&mut m, a.x(0), 1, &down);
        assert!(scalar_multiple(&v, &rat(1), &hw));
        assert!(!scalar_multiple(&v, &rat(2), &hw));
    }

    #[test]
    fn lemma1b_rank_two() {
        for (t, n) in [("A2", 4), ("B2", 3)] {
            let r = lemma1b_random(&alg(t), n, 3, 11).unwrap();
            assert!(r.holds, "{:?}", r.failures);
            assert!(r.cases > 0);
        }
    }

    #[test]
    fn footnote_g2() {
        let a = alg("G2");
        let recs = footnote_constants(&a, 5);
        assert!(!recs.is_empty());
        assert!(recs.iter().all(|r| r.unit));
        assert!(footnote_constants(&alg("A2"), 5).is_empty());
        let b2 = footnote_constants(&alg("B2"), 5);
        assert!(b2.iter().all(|r| r.c.abs() == 1));
    }
}
