use std::sync::Arc;

use proptest::prelude::*;

use lieo::labels::{jh_series, SmoothLabel};
use lieo::relations::{self, probes};
use lieo::roots::{LieAlgebra, Weight};
use lieo::weyl::ParabolicSubset;

fn algebra(t: &str) -> Arc<LieAlgebra> {
    Arc::new(LieAlgebra::from_type_str(t).unwrap())
}

fn rank_two() -> impl Strategy<Value = &'static str> {
    prop_oneof![Just("A2"), Just("B2")]
}

fn labels(lo: i64, hi: i64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(lo..=hi, 2)
}

/// Indices of positive roots outside the Levi root system of `lambda`.
fn outside_levi(alg: &LieAlgebra, lambda: &Weight) -> Vec<usize> {
    let rs = alg.root_system();
    let levi = relations::levi_subset(rs, lambda).unwrap();
    (0..rs.num_positive())
        .filter(|&k| rs.root(k).iter().enumerate().any(|(i, &c)| c != 0 && !levi.contains(&i)))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn generators_classified_by_levi(t in rank_two(), l in labels(-3, 3)) {
        let alg = algebra(t);
        let lam = Weight::fundamental(l);
        for g in probes::chevalley_generators(&alg) {
            let (n, depth) = probes::probe_parameters(&alg, &lam, g).unwrap();
            let p = relations::locally_finite_probe(&alg, &lam, &alg.basis_element(g), n, depth).unwrap();
            prop_assert!(p.agrees, "{} on {}: {:?}", p.element, lam, p.dims);
        }
    }

    #[test]
    fn root_vectors_outside_levi_act_freely(t in rank_two(), l in labels(-3, 3), pick in 0usize..8) {
        let alg = algebra(t);
        let lam = Weight::fundamental(l);
        let out = outside_levi(&alg, &lam);
        prop_assume!(!out.is_empty());
        let k = out[pick % out.len()];
        let y = alg.basis_element(alg.y(k));
        let ht: i64 = alg.root_system().root(k).iter().sum();
        let n = 3;
        let p = relations::locally_finite_probe(&alg, &lam, &y, n, n * ht as usize).unwrap();
        prop_assert_eq!(p.dims, (1..=n + 1).collect::<Vec<_>>());
        prop_assert!(!p.locally_finite && !p.predicted);
        let inj = relations::injectivity_probe(&alg, &lam, &y, 5).unwrap();
        prop_assert!(inj.hypothesis);
        prop_assert!(inj.injective, "first failure {:?}", inj.first_failure);
    }

    #[test]
    fn audit_is_true_off_levi(t in rank_two(), l in labels(-3, 3), pick in 0usize..8, n in 1u32..=2) {
        let alg = algebra(t);
        let lam = Weight::fundamental(l);
        let out = outside_levi(&alg, &lam);
        prop_assume!(!out.is_empty());
        let gamma = alg.root_system().root(out[pick % out.len()]).to_vec();
        let depth = n as usize * gamma.iter().sum::<i64>() as usize;
        let rep = relations::relation_coefficient_audit(&alg, &lam, &gamma, n, 5, depth).unwrap();
        prop_assert!(rep.verdict);
        prop_assert!(rep.gram_agrees);
        prop_assert!(rep.witness.is_some() && rep.counter_witness.is_none());
    }

    #[test]
    fn lemma1b_on_random_weights(t in prop_oneof![Just("A2"), Just("B2"), Just("G2")], seed in any::<u64>()) {
        let rep = relations::lemma1b_random(&algebra(t), 3, 3, seed).unwrap();
        prop_assert!(rep.holds, "{:?}", rep.failures);
    }

    #[test]
    fn commutator_expansions(k in 0usize..=3, n in 1usize..=3, seed in any::<u64>()) {
        prop_assert!(relations::commutator_expansion_check(k, n, seed));
    }

    #[test]
    fn jh_series_concatenates(
        t in rank_two(),
        top in prop::collection::vec(labels(-3, 3), 1..4),
        bottom in prop::collection::vec(labels(-3, 3), 1..4),
        opaque in any::<bool>(),
    ) {
        let alg = algebra(t);
        let rs = alg.root_system();
        let b = ParabolicSubset::borel(rs);
        let v = if opaque { SmoothLabel::opaque("pi", true) } else { SmoothLabel::Trivial };
        let top: Vec<Weight> = top.into_iter().map(Weight::fundamental).collect();
        let bottom: Vec<Weight> = bottom.into_iter().map(Weight::fundamental).collect();
        let all: Vec<Weight> = top.iter().chain(&bottom).cloned().collect();
        let text = |f: &[Weight]| -> Vec<String> {
            jh_series(rs, f, &v, &b).unwrap().constituents.into_iter().map(|c| c.text).collect()
        };
        let mut joined = text(&top);
        joined.extend(text(&bottom));
        prop_assert_eq!(text(&all), joined);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn whole_basis_classified_by_levi(t in rank_two(), l in labels(-1, 2)) {
        let alg = algebra(t);
        let lam = Weight::fundamental(l);
        for g in 0..alg.dim() {
            let (n, depth) = probes::probe_parameters(&alg, &lam, g).unwrap();
            let p = relations::locally_finite_probe(&alg, &lam, &alg.basis_element(g), n, depth).unwrap();
            prop_assert!(p.agrees, "{} on {}: {:?}", p.element, lam, p.dims);
        }
    }
}
