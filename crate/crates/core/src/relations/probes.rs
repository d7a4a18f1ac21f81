//! Probes of `L(lambda)` on finite windows: whether an element of `g` acts
//! locally finitely on the highest weight vector, and whether an element of
//! the nilradical of the opposite parabolic acts injectively.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;
use serde::Serialize;

use super::levi_subset;
use crate::error::{Error, Result};
use crate::linalg::{self, Rat};
use crate::roots::{LieAlgebra, LieElement, Weight};
use crate::verma::{Vector, VermaModule};

/// Splits a vector into its homogeneous components.
fn components(module: &VermaModule, v: &Vector) -> BTreeMap<Vec<i64>, Vector> {
    let mut out: BTreeMap<Vec<i64>, Vector> = BTreeMap::new();
    for (m, c) in v {
        out.entry(module.drop_of(m)).or_default().insert(m.clone(), c.clone());
    }
    out
}

/// Image of `v` in `L(lambda)`, as coordinates keyed by drop.
fn project_all(
    module: &mut VermaModule,
    v: &Vector,
    depth: usize,
) -> Result<BTreeMap<Vec<i64>, Vec<Rat>>> {
    let mut out = BTreeMap::new();
    for (drop, part) in components(module, v) {
        let h: i64 = drop.iter().sum();
        if h as usize > depth {
            return Err(Error::WindowTooShallow(format!(
                "component at drop {drop:?} (height {h}) exceeds depth {depth}"
            )));
        }
        let p = module.project(&drop, &part);
        if p.iter().any(|c| !c.is_zero()) {
            out.insert(drop, p);
        }
    }
    Ok(out)
}

/// Rank of a family of vectors given by sparse coordinates keyed by drop.
fn span_rank(vectors: &[BTreeMap<Vec<i64>, Vec<Rat>>]) -> usize {
    let mut offsets: BTreeMap<&Vec<i64>, (usize, usize)> = BTreeMap::new();
    for v in vectors {
        for (d, c) in v {
            offsets.entry(d).or_insert((0, c.len()));
        }
    }
    let mut total = 0;
    for (off, len) in offsets.values_mut() {
        *off = total;
        total += *len;
    }
    let rows: linalg::Matrix = vectors
        .iter()
        .map(|v| {
            let mut row = vec![Rat::zero(); total];
            for (d, c) in v {
                let (off, _) = offsets[d];
                row[off..off + c.len()].clone_from_slice(c);
            }
            row
        })
        .collect();
    linalg::rank(&rows)
}

/// Whether `u` lies in the standard parabolic `p_I`.
pub fn in_parabolic(alg: &LieAlgebra, u: &LieElement, subset: &[usize]) -> bool {
    let rs = alg.root_system();
    let r = rs.num_positive();
    u.keys().all(|&g| {
        if g < r || g >= 2 * r {
            return true;
        }
        let beta = rs.root(g - r);
        beta.iter()
            .enumerate()
            .all(|(i, &c)| c == 0 || subset.contains(&i))
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalFinitenessProbe {
    pub element: String,
    pub n: usize,
    pub depth: usize,
    /// `dim span {x^i v+ : i <= j}` in `L(lambda)` for `j = 0..=n`.
    pub dims: Vec<usize>,
    pub locally_finite: bool,
    /// Whether `x` lies in `p_{I(lambda)}`.
    pub predicted: bool,
    pub agrees: bool,
}

/// `x` is classified locally finite when the powers `x^j v+`, `j <= n`, become
/// linearly dependent in `L(lambda)`; by the submodule argument this is local
/// finiteness on all of `L(lambda)`.
pub fn locally_finite_probe(
    alg: &Arc<LieAlgebra>,
    lambda: &Weight,
    x: &LieElement,
    n: usize,
    depth: usize,
) -> Result<LocalFinitenessProbe> {
    let mut module = VermaModule::new(Arc::clone(alg), lambda.clone())?;
    let mut v = module.highest_weight_vector();
    let mut images = vec![project_all(&mut module, &v, depth)?];
    for _ in 0..n {
        v = module.act_element(x, &v);
        images.push(project_all(&mut module, &v, depth)?);
    }
    let dims: Vec<usize> = (1..=images.len()).map(|j| span_rank(&images[..j])).collect();
    let locally_finite = dims[n] <= n;
    let subset = levi_subset(alg.root_system(), lambda)?;
    let predicted = in_parabolic(alg, x, &subset);
    Ok(LocalFinitenessProbe {
        element: describe(alg, x),
        n,
        depth,
        dims,
        locally_finite,
        predicted,
        agrees: locally_finite == predicted,
    })
}

pub fn describe(alg: &LieAlgebra, u: &LieElement) -> String {
    let parts: Vec<String> = u
        .iter()
        .map(|(&g, c)| {
            if *c == 1.into() {
                alg.describe(g)
            } else {
                format!("{c}*{}", alg.describe(g))
            }
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// Power `n` and depth for probing a single Chevalley basis element: enough
/// powers to see the string of `lambda` through `beta` end when `beta` lies
/// in the Levi, and the depth those powers reach.
pub fn probe_parameters(alg: &LieAlgebra, lambda: &Weight, g: usize) -> Result<(usize, usize)> {
    let rs = alg.root_system();
    let r = rs.num_positive();
    if g < r || g >= 2 * r {
        return Ok((2, 2));
    }
    let beta = rs.root(g - r);
    let pairing = rs.coroot_pairing(lambda, beta)?;
    let n = if pairing.is_integer() && pairing >= 0.into() {
        pairing.to_integer() as usize + 2
    } else {
        3
    };
    let ht: i64 = beta.iter().sum();
    Ok((n, n * ht as usize))
}

/// The simple Chevalley generators `x_i, y_i, h_i`.
pub fn chevalley_generators(alg: &LieAlgebra) -> Vec<usize> {
    let rs = alg.root_system();
    let mut out = Vec::new();
    for i in 0..rs.rank() {
        let s = rs.simple_index(i);
        out.extend([alg.x(s), alg.y(s), alg.h(i)]);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InjectivityLevel {
    pub drop: Vec<i64>,
    pub source_dim: usize,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InjectivityProbe {
    pub element: String,
    pub depth: usize,
    pub levels: Vec<InjectivityLevel>,
    pub injective: bool,
    pub first_failure: Option<Vec<i64>>,
    /// Whether `y` is supported on roots outside `Phi_{I(lambda)}`.
    pub hypothesis: bool,
}

/// For every drop `d` whose images stay inside the window, the map
/// `L(lambda)_{lambda-d} -> L(lambda)` given by `y` must have full rank.
pub fn injectivity_probe(
    alg: &Arc<LieAlgebra>,
    lambda: &Weight,
    y: &LieElement,
    depth: usize,
) -> Result<InjectivityProbe> {
    let rs = alg.root_system();
    let r = rs.num_positive();
    if y.is_empty() || y.keys().any(|&g| g < r || g >= 2 * r) {
        return Err(Error::OutOfRange(
            "injectivity probe needs a non-zero combination of negative root vectors".into(),
        ));
    }
    let max_ht = y.keys().map(|&g| rs.root(g - r).iter().sum::<i64>()).max().unwrap_or(0) as usize;
    if max_ht > depth {
        return Err(Error::WindowTooShallow(format!(
            "element of height {max_ht} needs depth at least {max_ht}"
        )));
    }
    let subset = levi_subset(rs, lambda)?;
    let hypothesis = y.keys().all(|&g| {
        rs.root(g - r)
            .iter()
            .enumerate()
            .any(|(i, &c)| c != 0 && !subset.contains(&i))
    });
    let mut module = VermaModule::new(Arc::clone(alg), lambda.clone())?;
    let mut levels = Vec::new();
    let mut first_failure = None;
    for drop in crate::verma::drops_up_to(rs.rank(), depth - max_ht) {
        let p = module.quotient_map(&drop);
        if p.is_empty() {
            continue;
        }
        // rows of the reduced quotient map have unit pivots: the pivot
        // monomials represent a basis of L(lambda) at this weight
        let basis = module.basis(&drop).to_vec();
        let reps: Vec<Vector> = p
            .iter()
            .map(|row| {
                let j = row.iter().position(|c| !c.is_zero()).expect("non-zero row");
                module.monomial(&basis[j])
            })
            .collect();
        let mut images = Vec::new();
        for rep in &reps {
            let w = module.act_element(y, rep);
            images.push(project_all(&mut module, &w, depth)?);
        }
        let rank = span_rank(&images);
        if rank < reps.len() && first_failure.is_none() {
            first_failure = Some(drop.clone());
        }
        levels.push(InjectivityLevel {
            drop,
            source_dim: reps.len(),
            rank,
        });
    }
    Ok(InjectivityProbe {
        element: describe(alg, y),
        depth,
        injective: first_failure.is_none(),
        first_failure,
        levels,
        hypothesis,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::Q;

    fn alg(t: &str) -> Arc<LieAlgebra> {
        Arc::new(LieAlgebra::from_type_str(t).unwrap())
    }

    fn elem(a: &LieAlgebra, g: usize) -> LieElement {
        a.basis_element(g)
    }

    #[test]
    fn sl2_probes() {
        let a = alg("A1");
        let y = elem(&a, a.y(0));
        // I = {} for lambda = -1: y acts freely
        let p = locally_finite_probe(&a, &Weight::fundamental(vec![-1]), &y, 6, 6).unwrap();
        assert_eq!(p.dims, (1..=7).collect::<Vec<_>>());
        assert!(!p.locally_finite && p.agrees);
        // dominant lambda = 2: span stops at 3 = <lambda, alpha^vee> + 1
        let p = locally_finite_probe(&a, &Weight::fundamental(vec![2]), &y, 5, 5).unwrap();
        assert_eq!(*p.dims.last().unwrap(), 3);
        assert!(p.locally_finite && p.agrees);
        let x = elem(&a, a.x(0));
        assert!(locally_finite_probe(&a, &Weight::fundamental(vec![-1]), &x, 3, 3)
            .unwrap()
            .locally_finite);
        assert!(locally_finite_probe(&a, &Weight::fundamental(vec![0]), &y, 4, 3).is_err());
    }

    #[test]
    fn non_integral_weight() {
        let a = alg("A1");
        let lam = Weight {
            coords: vec![Q::new(1, 2)],
            basis: crate::roots::WeightBasis::Fundamental,
        };
        let p = locally_finite_probe(&a, &lam, &elem(&a, a.y(0)), 4, 4).unwrap();
        assert!(!p.locally_finite && !p.predicted);
    }

    #[test]
    fn mixed_element() {
        // x_1 + y_2 on A2 with I = {alpha_1}: outside p_I
        let a = alg("A2");
        let lam = Weight::fundamental(vec![1, -2]);
        let mut u = elem(&a, a.x(0));
        u.insert(a.y(1), Q::from(1));
        let p = locally_finite_probe(&a, &lam, &u, 3, 3).unwrap();
        assert!(!p.predicted);
        assert!(p.agrees);
    }

    #[test]
    fn injectivity() {
        let a = alg("A1");
        let y = elem(&a, a.y(0));
        let p = injectivity_probe(&a, &Weight::fundamental(vec![-2]), &y, 6).unwrap();
        assert!(p.injective && p.hypothesis);
        // negative control: dominant weight, fails at level <lambda, alpha^vee>
        let p = injectivity_probe(&a, &Weight::fundamental(vec![2]), &y, 6).unwrap();
        assert!(!p.injective && !p.hypothesis);
        assert_eq!(p.first_failure, Some(vec![2]));

        let a = alg("A2");
        let y2 = elem(&a, a.y(1));
        let p = injectivity_probe(&a, &Weight::fundamental(vec![1, -2]), &y2, 5).unwrap();
        assert!(p.injective && p.hypothesis);
        let y12 = elem(&a, a.y(2));
        let p = injectivity_probe(&a, &Weight::fundamental(vec![1, -2]), &y12, 6).unwrap();
        assert!(p.injective);
    }
}
