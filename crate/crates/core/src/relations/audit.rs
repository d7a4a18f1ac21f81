//! p-adic audit of the relation `y_gamma^n v+ = sum_nu c_nu y^nu v+` in
//! `L(lambda)`: can the relation be chosen with every coefficient on the
//! monomials of total degree `>= n` divisible by `p`?
//!
//! The relations are the affine space `e + ker K`, where `K` is the quotient
//! map at weight `lambda - n gamma` and `e` the indicator of `y_gamma^n`.
//! Splitting the PBW monomials into the good set `J` (`sum nu >= n`) and its
//! complement `N`, a solution with `c_J` in `p Z_(p)` exists iff the
//! reduced system below has one; row operations over `Q` and column
//! operations over `Z_(p)` bring it to `[I | 0] u = s`, after which the
//! answer is read off the valuations of `s`.

use std::sync::Arc;

use num_traits::{One, Zero};
use serde::Serialize;

use super::{is_p_integral, levi_subset, prime_hypothesis_warnings, valuation};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix, Rat};
use crate::roots::{LieAlgebra, Weight};
use crate::verma::VermaModule;

/// A functional on `L(lambda)` vanishing on every `N`-monomial, integral on
/// `J`-monomials, and non-integral (or a unit) on `y_gamma^n`: applying it to
/// any relation forces some `c_nu`, `nu` in `J`, to be a `p`-adic unit or worse.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Coordinates with respect to the rows of the quotient map.
    pub functional: Vec<String>,
    /// Values on the monomials of `J`, in the order of `good_set`.
    pub values_on_good: Vec<String>,
    pub value_on_target: String,
    pub target_valuation: i64,
}

/// A relation with every `J`-coefficient divisible by `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CounterWitness {
    /// `c_nu` for every monomial of the weight space, in PBW basis order.
    pub coefficients: Vec<String>,
    pub min_good_valuation: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub lambda: Vec<String>,
    pub gamma: Vec<i64>,
    pub n: u32,
    pub p: u64,
    pub depth: usize,
    /// PBW exponents of the weight space `lambda - n gamma`.
    pub monomials: Vec<Vec<u32>>,
    /// Indices into `monomials` with `sum nu >= n`.
    pub good_set: Vec<usize>,
    pub target: usize,
    pub simple_dim: usize,
    /// `dim` of the space of relations (the maximal submodule at this weight).
    pub solution_space_dim: usize,
    /// The relation `c = e` (indicator of `y_gamma^n`).
    pub base_point: Vec<String>,
    /// Basis of the homogeneous solutions, i.e. of the maximal submodule.
    pub homogeneous_basis: Vec<Vec<String>>,
    /// No freedom at all: the only relation has `c = 1` on `y_gamma^n`.
    pub unique_relation: bool,
    /// Whether the radical of the contravariant form agrees with `ker K`.
    pub gram_agrees: bool,
    /// `true` iff no relation has all `J`-coefficients in `p Z_(p)`.
    pub verdict: bool,
    pub witness: Option<Witness>,
    pub counter_witness: Option<CounterWitness>,
    pub warnings: Vec<String>,
}

fn s(x: &Rat) -> String {
    x.to_string()
}

fn columns(k: &Matrix, idx: &[usize]) -> Matrix {
    k.iter().map(|row| idx.iter().map(|&j| row[j].clone()).collect()).collect()
}

fn apply(f: &[Rat], m: &Matrix, cols: usize) -> Vec<Rat> {
    (0..cols)
        .map(|j| f.iter().zip(m).map(|(a, row)| a * &row[j]).sum())
        .collect()
}

fn mat_vec(m: &Matrix, v: &[Rat]) -> Vec<Rat> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

struct Reduction {
    /// Number of pivots.
    rank: usize,
    /// Transformed right-hand side; the first `rank` entries are `s`.
    rhs: Vec<Rat>,
    /// Row operations: row `i` of the reduced system is `t[i] * (A | b)`.
    t: Matrix,
    /// Column operations, invertible over `Z_(p)`: the reduced matrix is `T A W`.
    w: Matrix,
}

/// Reduces `A u = b` to `[I | 0] (W^{-1} u) = T b`, pivoting on the entry of
/// least valuation in the current row so that every column operation has
/// `p`-integral multipliers.
fn p_local_reduce(a: &Matrix, b: &[Rat], cols: usize, p: u64) -> Result<Reduction> {
    let rows = a.len();
    let mut a = a.clone();
    let mut rhs = b.to_vec();
    let mut t: Matrix = (0..rows)
        .map(|i| (0..rows).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect())
        .collect();
    let mut w: Matrix = (0..cols)
        .map(|i| (0..cols).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect())
        .collect();
    let mut k = 0;
    while k < rows.min(cols) {
        let Some(i) = (k..rows).find(|&i| (k..cols).any(|j| !a[i][j].is_zero())) else {
            break;
        };
        a.swap(i, k);
        rhs.swap(i, k);
        t.swap(i, k);
        let j = (k..cols)
            .filter(|&j| !a[k][j].is_zero())
            .min_by_key(|&j| valuation(&a[k][j], p).expect("non-zero"))
            .expect("row has a non-zero entry");
        for row in a.iter_mut().chain(w.iter_mut()) {
            row.swap(j, k);
        }
        let inv = a[k][k].recip();
        for x in a[k].iter_mut() {
            *x *= &inv;
        }
        rhs[k] *= &inv;
        for x in t[k].iter_mut() {
            *x *= &inv;
        }
        for j in k + 1..cols {
            let f = a[k][j].clone();
            if f.is_zero() {
                continue;
            }
            debug_assert!(is_p_integral(&f, p));
            for row in a.iter_mut().chain(w.iter_mut()) {
                let d = &f * &row[k];
                row[j] -= d;
            }
        }
        for i in 0..rows {
            if i == k || a[i][k].is_zero() {
                continue;
            }
            let g = a[i][k].clone();
            let (pivot_row, pivot_t, pivot_rhs) = (a[k].clone(), t[k].clone(), rhs[k].clone());
            for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                *x -= &g * y;
            }
            for (x, y) in t[i].iter_mut().zip(&pivot_t) {
                *x -= &g * y;
            }
            rhs[i] -= &g * &pivot_rhs;
        }
        k += 1;
    }
    if rhs[k..].iter().any(|x| !x.is_zero()) {
        return Err(Error::Internal("relation system is inconsistent".into()));
    }
    Ok(Reduction { rank: k, rhs, t, w })
}

/// Audits the relation for `y_gamma^n v+` in `L(lambda)`, `lambda` integral
/// with `gamma` outside `Phi_{I(lambda)}`.
pub fn relation_coefficient_audit(
    alg: &Arc<LieAlgebra>,
    lambda: &Weight,
    gamma: &[i64],
    n: u32,
    p: u64,
    depth: usize,
) -> Result<AuditReport> {
    let rs = alg.root_system();
    let g = rs.positive_index(gamma).ok_or_else(|| Error::NotARoot(gamma.to_vec()))?;
    if !rs.is_integral(lambda)? {
        return Err(Error::NonIntegral(format!("{:?}", lambda.coords)));
    }
    if n == 0 {
        return Err(Error::OutOfRange("n must be positive".into()));
    }
    let subset = levi_subset(rs, lambda)?;
    if gamma.iter().enumerate().all(|(i, &c)| c == 0 || subset.contains(&i)) {
        return Err(Error::OutOfRange(format!(
            "gamma = {gamma:?} lies in the Levi root system of lambda"
        )));
    }
    let ht: i64 = gamma.iter().sum();
    if (n as i64 * ht) as usize > depth {
        return Err(Error::WindowTooShallow(format!(
            "n * ht(gamma) = {} exceeds depth {depth}",
            n as i64 * ht
        )));
    }
    let drop: Vec<i64> = gamma.iter().map(|c| c * i64::from(n)).collect();
    let mut module = VermaModule::new(Arc::clone(alg), lambda.clone())?;
    let monomials = module.basis(&drop).to_vec();
    let m = monomials.len();
    let mut target_nu = vec![0u32; rs.num_positive()];
    target_nu[g] = n;
    let target = monomials
        .iter()
        .position(|nu| *nu == target_nu)
        .ok_or_else(|| Error::Internal("target monomial missing".into()))?;
    let k_mat = module.quotient_map(&drop);
    let kdim = k_mat.len();
    let kernel = linalg::kernel(&k_mat, m);

    let gram = module.gram(&drop);
    let gram_kernel = linalg::kernel(&gram, m);
    let gram_agrees = gram_kernel.len() == kernel.len()
        && kernel.iter().all(|v| mat_vec(&gram, v).iter().all(Zero::is_zero));

    let good: Vec<usize> = (0..m).filter(|&i| monomials[i].iter().sum::<u32>() >= n).collect();
    let bad: Vec<usize> = (0..m).filter(|&i| monomials[i].iter().sum::<u32>() < n).collect();
    let b: Vec<Rat> = k_mat.iter().map(|row| row[target].clone()).collect();
    let k_good = columns(&k_mat, &good);
    let k_bad = columns(&k_mat, &bad);

    // left kernel of K_N
    let f = linalg::kernel(&linalg::transpose(&k_bad, bad.len()), kdim);
    let a = linalg::matmul(&f, &k_good, kdim, good.len());
    let b_red: Vec<Rat> = f.iter().map(|row| row.iter().zip(&b).map(|(x, y)| x * y).sum()).collect();
    let red = p_local_reduce(&a, &b_red, good.len(), p)?;

    let best = (0..red.rank)
        .filter_map(|i| valuation(&red.rhs[i], p).map(|v| (v, i)))
        .filter(|&(v, _)| v <= 0)
        .min();

    let mut witness = None;
    let mut counter_witness = None;
    if let Some((v, i)) = best {
        let functional = apply(&red.t[i], &f, kdim);
        let on_bad = apply(&functional, &k_bad, bad.len());
        let on_good = apply(&functional, &k_good, good.len());
        let on_target: Rat = functional.iter().zip(&b).map(|(x, y)| x * y).sum();
        let ok = on_bad.iter().all(Zero::is_zero)
            && on_good.iter().all(|x| is_p_integral(x, p))
            && valuation(&on_target, p) == Some(v);
        if !ok {
            return Err(Error::Internal("witness functional failed verification".into()));
        }
        witness = Some(Witness {
            functional: functional.iter().map(s).collect(),
            values_on_good: on_good.iter().map(s).collect(),
            value_on_target: s(&on_target),
            target_valuation: v,
        });
    } else {
        let mut u = vec![Rat::zero(); good.len()];
        u[..red.rank].clone_from_slice(&red.rhs[..red.rank]);
        let c_good = mat_vec(&red.w, &u);
        let k_c_good = mat_vec(&k_good, &c_good);
        let residual: Vec<Rat> = b.iter().zip(&k_c_good).map(|(x, y)| x - y).collect();
        let c_bad = if bad.is_empty() {
            Vec::new()
        } else {
            linalg::solve_left(&linalg::transpose(&k_bad, bad.len()), &residual)
                .ok_or_else(|| Error::Internal("counter-witness has no N-completion".into()))?
        };
        let mut c = vec![Rat::zero(); m];
        for (&j, x) in good.iter().zip(&c_good) {
            c[j] = x.clone();
        }
        for (&j, x) in bad.iter().zip(&c_bad) {
            c[j] = x.clone();
        }
        // the relation: e - c lies in the maximal submodule
        let mut diff = c.clone();
        diff[target] -= Rat::one();
        let in_radical = mat_vec(&k_mat, &diff).iter().all(Zero::is_zero)
            && mat_vec(&gram, &diff).iter().all(Zero::is_zero);
        let divisible = c_good.iter().all(|x| valuation(x, p).map_or(true, |v| v >= 1));
        if !in_radical || !divisible {
            return Err(Error::Internal("counter-witness failed verification".into()));
        }
        counter_witness = Some(CounterWitness {
            min_good_valuation: c_good.iter().filter_map(|x| valuation(x, p)).min(),
            coefficients: c.iter().map(s).collect(),
        });
    }

    Ok(AuditReport {
        cartan_type: rs.cartan_type().to_string(),
        lambda: lambda.coords.iter().map(|q| q.to_string()).collect(),
        gamma: gamma.to_vec(),
        n,
        p,
        depth,
        monomials,
        good_set: good,
        target,
        simple_dim: kdim,
        solution_space_dim: kernel.len(),
        base_point: (0..m).map(|i| if i == target { "1".into() } else { "0".into() }).collect(),
        homogeneous_basis: kernel.iter().map(|v| v.iter().map(s).collect()).collect(),
        unique_relation: kernel.is_empty(),
        gram_agrees,
        verdict: witness.is_some(),
        witness,
        counter_witness,
        warnings: prime_hypothesis_warnings(rs, p),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn alg(t: &str) -> Arc<LieAlgebra> {
        Arc::new(LieAlgebra::from_type_str(t).unwrap())
    }

    #[test]
    fn simple_root_is_forced() {
        // y_alpha^n v+ is its own relation; J contains only the target
        let a = alg("A2");
        let r = relation_coefficient_audit(&a, &Weight::fundamental(vec![-1, 0]), &[1, 0], 3, 5, 6).unwrap();
        assert_eq!(r.solution_space_dim, 0);
        assert!(r.unique_relation);
        assert_eq!(r.base_point[r.target], "1");
        assert!(r.verdict);
        assert_eq!(r.witness.unwrap().target_valuation, 0);
        assert!(r.gram_agrees);
    }

    #[test]
    fn rejects_bad_input() {
        let a = alg("A2");
        let lam = Weight::fundamental(vec![1, 0]);
        assert!(relation_coefficient_audit(&a, &lam, &[1, 0], 2, 5, 6).is_err());
        assert!(relation_coefficient_audit(&a, &Weight::fundamental(vec![-1, -1]), &[1, 1], 4, 5, 6).is_err());
        assert!(relation_coefficient_audit(&a, &lam, &[2, 1], 1, 5, 6).is_err());
    }

    #[test]
    fn non_simple_roots() {
        for (t, lam) in [("A2", vec![1, -3]), ("A2", vec![-2, 1]), ("B2", vec![-1, 2]), ("B2", vec![3, -4])] {
            let a = alg(t);
            let lam = Weight::fundamental(lam);
            let rs = a.root_system().clone();
            for gamma in rs.positive_roots() {
                let sub = levi_subset(&rs, &lam).unwrap();
                if gamma.iter().enumerate().all(|(i, &c)| c == 0 || sub.contains(&i)) {
                    continue;
                }
                for n in 1..=3 {
                    let r = relation_coefficient_audit(&a, &lam, gamma, n, 5, 9).unwrap();
                    assert!(r.gram_agrees);
                    assert!(r.verdict, "{t} {gamma:?} n={n}");
                }
            }
        }
    }

    #[test]
    fn reduction_respects_integrality() {
        // 5 u_0 + u_1 = 1/5 and 25 u_0 = 1: pivot must be taken on u_1
        let a = vec![vec![rat(5), rat(1)], vec![rat(25), rat(0)]];
        let b = vec![Rat::new(1.into(), 5.into()), rat(1)];
        let red = p_local_reduce(&a, &b, 2, 5).unwrap();
        assert_eq!(red.rank, 2);
        for row in &red.w {
            assert!(row.iter().all(|x| is_p_integral(x, 5)));
        }
    }
}
