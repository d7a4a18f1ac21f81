//! Line bundles `L_lambda = O(r-s) ⊗ det^s` on `P^d` for `G = GL_{d+1}`,
//! `lambda = (r, s, ..., s)`: the Bott index, the weights `w_i . lambda` and
//! `mu_{i,lambda}`, a window check that the local cohomology monomial modules
//! are simple with highest weight `mu_{i,lambda}`, and the labels of the
//! graded pieces of the filtration of the sections over Drinfeld's half space.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::labels::{irreducibility_test, SmoothLabel, Verdict};
use crate::roots::{CartanType, Dominance, RootSystem, Weight};
use crate::verma::weyl_dim;
use crate::weyl::{gl_chain_element, ParabolicSubset};

/// Residue characteristic used for the irreducibility verdicts.
const RESIDUE_CHAR: u64 = 5;

/// Default window height for `verify_local_cohomology`.
pub const DEFAULT_WINDOW: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LineBundleSpec {
    pub d: usize,
    pub r: i64,
    pub s: i64,
}

impl LineBundleSpec {
    pub fn new(d: usize, r: i64, s: i64) -> Result<Self> {
        if d == 0 {
            return Err(Error::OutOfRange("d must be at least 1".into()));
        }
        Ok(LineBundleSpec { d, r, s })
    }

    pub fn root_system(&self) -> RootSystem {
        RootSystem::new(CartanType::gl(self.d + 1).expect("d >= 1")).expect("GL is valid")
    }

    pub fn lambda(&self) -> Weight {
        let mut v = vec![self.s; self.d + 1];
        v[0] = self.r;
        Weight::gl_tuple(v)
    }

    /// Degree `r - s` of the underlying Serre twist.
    pub fn twist(&self) -> i64 {
        self.r - self.s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BottResult {
    pub degenerate: bool,
    /// Index of the dominant `w_i . lambda`, or `s - r - 1` when none is.
    pub i0: usize,
    /// `dim H^{i0}(P^d, L_lambda)`; zero when degenerate.
    pub h_dim: u64,
    /// `w_{i0} . lambda` when non-degenerate.
    pub h_weight: Option<Weight>,
}

/// `w_i . lambda = (s-1, ..., s-1, r+i, s, ..., s)`, computed through the dot action.
pub fn dot_weight(spec: &LineBundleSpec, i: usize) -> Result<Weight> {
    let rs = spec.root_system();
    gl_chain_element(&rs, i)?.dot(&rs, &spec.lambda())
}

/// The closed form of `w_i . lambda`, independent of the Weyl group code.
pub fn dot_weight_closed_form(spec: &LineBundleSpec, i: usize) -> Weight {
    let v: Vec<i64> = (0..=spec.d)
        .map(|k| match k.cmp(&i) {
            std::cmp::Ordering::Less => spec.s - 1,
            std::cmp::Ordering::Equal => spec.r + i as i64,
            std::cmp::Ordering::Greater => spec.s,
        })
        .collect();
    Weight::gl_tuple(v)
}

pub fn bott(spec: &LineBundleSpec) -> Result<BottResult> {
    let rs = spec.root_system();
    let d = spec.d as i64;
    let (r, s) = (spec.r, spec.s);
    let nondegenerate = if r >= s {
        Some(0)
    } else if s >= r + d + 1 {
        Some(spec.d)
    } else {
        None
    };
    Ok(match nondegenerate {
        Some(i0) => {
            let w = dot_weight(spec, i0)?;
            BottResult {
                degenerate: false,
                i0,
                h_dim: weyl_dim(&rs, &w)?,
                h_weight: Some(w),
            }
        }
        None => BottResult {
            degenerate: true,
            i0: (s - r - 1) as usize,
            h_dim: 0,
            h_weight: None,
        },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightTable {
    pub spec: LineBundleSpec,
    /// `w_i . lambda` for `i = 0..=d`.
    pub weights: Vec<Weight>,
    /// Comparison of `w_i . lambda` with `w_{i+1} . lambda`.
    pub chain: Vec<Dominance>,
    pub dominant: Vec<bool>,
}

pub fn weight_table(spec: &LineBundleSpec) -> Result<WeightTable> {
    let rs = spec.root_system();
    let weights = (0..=spec.d)
        .map(|i| dot_weight(spec, i))
        .collect::<Result<Vec<_>>>()?;
    let chain = weights
        .windows(2)
        .map(|p| rs.dominance_compare(&p[0], &p[1]))
        .collect::<Result<Vec<_>>>()?;
    let dominant = weights
        .iter()
        .map(|w| rs.is_dominant(w))
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightTable {
        spec: *spec,
        weights,
        chain,
        dominant,
    })
}

/// `mu_{i,lambda}`: `w_{i-1} . lambda` for `i <= i0`, `w_i . lambda` otherwise.
pub fn mu_weight(spec: &LineBundleSpec, i: usize) -> Result<Weight> {
    if i == 0 || i > spec.d {
        return Err(Error::OutOfRange(format!("mu_i needs 1 <= i <= {} (got {i})", spec.d)));
    }
    let b = bott(spec)?;
    let mu = if i <= b.i0 {
        dot_weight(spec, i - 1)?
    } else {
        dot_weight(spec, i)?
    };
    let rs = spec.root_system();
    let levi = levi_block(spec, i)?;
    if !rs.is_levi_dominant(&mu, &levi.subset)? {
        return Err(Error::Internal(format!(
            "{mu} is not dominant for the Levi {}",
            levi.label(rs.rank())
        )));
    }
    Ok(mu)
}

/// The upper block parabolic `P_(i, d-i+1)`.
pub fn levi_block(spec: &LineBundleSpec, i: usize) -> Result<ParabolicSubset> {
    ParabolicSubset::from_blocks(&spec.root_system(), &[i, spec.d + 1 - i])
}

/// Exponent vector of a Laurent monomial `X_0^{k_0} ... X_d^{k_d}`.
pub type Exponents = Vec<i64>;

/// The `s = 0` model of the local cohomology module: monomials with
/// `k_0..k_{i-1} < 0`, `k_i..k_d >= 0`, `sum k = r - s`, and
/// `L_(a,b) X^k = k_b X^k X_a / X_b` (zero when the result leaves the set).
#[derive(Clone, Debug)]
pub struct MonomialModule {
    pub d: usize,
    pub i: usize,
    pub degree: i64,
}

impl MonomialModule {
    pub fn contains(&self, k: &[i64]) -> bool {
        k.len() == self.d + 1
            && k.iter().sum::<i64>() == self.degree
            && k[..self.i].iter().all(|&x| x < 0)
            && k[self.i..].iter().all(|&x| x >= 0)
    }

    /// `L_(a,b) X^k` as `(coefficient, monomial)`, `None` if zero.
    pub fn act(&self, a: usize, b: usize, k: &[i64]) -> Option<(i64, Exponents)> {
        let c = k[b];
        if c == 0 || a == b {
            return None;
        }
        let mut out = k.to_vec();
        out[a] += 1;
        out[b] -= 1;
        self.contains(&out).then_some((c, out))
    }

    /// The designated highest weight vector.
    pub fn maximal_vector(&self) -> Exponents {
        let r = self.degree;
        let i = self.i as i64;
        let mut k = vec![0i64; self.d + 1];
        if r + i >= 0 {
            k[..self.i].fill(-1);
            k[self.i] = r + i;
        } else {
            k[..self.i - 1].fill(-1);
            k[self.i - 1] = r + i - 1;
        }
        k
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalCohomologyReport {
    pub spec: LineBundleSpec,
    pub i: usize,
    pub window: usize,
    pub mu: Weight,
    /// Maximal vector exponents after the `det^s` twist.
    pub maximal_vector: Exponents,
    pub window_size: usize,
    pub annihilated: bool,
    pub weight_matches: bool,
    pub weights_distinct: bool,
    pub cyclic: bool,
    pub cocyclic: bool,
    /// Window monomials not reached from the maximal vector.
    pub unreached: Vec<Exponents>,
    /// Window monomials from which the maximal vector is not reached.
    pub stuck: Vec<Exponents>,
}

impl LocalCohomologyReport {
    pub fn passed(&self) -> bool {
        self.annihilated && self.weight_matches && self.weights_distinct && self.cyclic && self.cocyclic
    }
}

/// Drop coordinates of `k` below `top` in simple roots `e_j - e_{j+1}`.
fn drop_from(top: &[i64], k: &[i64]) -> Vec<i64> {
    let mut acc = 0;
    (0..top.len() - 1)
        .map(|j| {
            acc += top[j] - k[j];
            acc
        })
        .collect()
}

fn reach(
    module: &MonomialModule,
    start: &Exponents,
    window: &BTreeSet<Exponents>,
    raising: bool,
) -> BTreeSet<Exponents> {
    let n = module.d + 1;
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(k) = queue.pop_front() {
        for a in 0..n {
            for b in 0..n {
                if (a < b) != raising || a == b {
                    continue;
                }
                if let Some((_, next)) = module.act(a, b, &k) {
                    if window.contains(&next) && seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    seen
}

/// Checks on the window of height `window` below the maximal vector that the
/// monomial module is a simple highest weight module of weight `mu_{i,lambda}`:
/// the maximal vector is killed by every raising operator and has the right
/// weight, every window monomial is reached from it by lowering operators, and
/// it is reached from every window monomial by raising operators.
pub fn verify_local_cohomology(
    spec: &LineBundleSpec,
    i: usize,
    window: usize,
) -> Result<LocalCohomologyReport> {
    let mu = mu_weight(spec, i)?;
    let module = MonomialModule {
        d: spec.d,
        i,
        degree: spec.twist(),
    };
    let v = module.maximal_vector();
    if !module.contains(&v) {
        return Err(Error::Internal(format!("maximal vector {v:?} outside the module")));
    }
    let n = spec.d + 1;
    let annihilated = (0..n).all(|a| (a + 1..n).all(|b| module.act(a, b, &v).is_none()));
    let twisted: Exponents = v.iter().map(|x| x + spec.s).collect();
    let weight_matches = Weight::gl_tuple(twisted.clone()) == mu;

    // all monomials of the module whose drop below v has height <= window
    let mut monomials = BTreeSet::new();
    for drop in crate::verma::drops_up_to(spec.d, window) {
        let mut k = v.clone();
        for (j, c) in drop.iter().enumerate() {
            k[j] -= c;
            k[j + 1] += c;
        }
        if module.contains(&k) {
            debug_assert_eq!(drop_from(&v, &k), drop);
            monomials.insert(k);
        }
    }
    let weights: BTreeSet<&Exponents> = monomials.iter().collect();
    let weights_distinct = weights.len() == monomials.len();

    let down = reach(&module, &v, &monomials, false);
    let unreached: Vec<Exponents> = monomials.difference(&down).cloned().collect();
    let stuck: Vec<Exponents> = monomials
        .iter()
        .filter(|k| !reach(&module, k, &monomials, true).contains(&v))
        .cloned()
        .collect();
    Ok(LocalCohomologyReport {
        spec: *spec,
        i,
        window,
        mu,
        maximal_vector: twisted,
        window_size: monomials.len(),
        annihilated,
        weight_matches,
        weights_distinct,
        cyclic: unreached.is_empty(),
        cocyclic: stuck.is_empty(),
        unreached,
        stuck,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SteinbergPart {
    /// `P_(j+1, 1, ..., 1)`.
    pub parabolic: ParabolicSubset,
    /// `dim H^{d-j}(P^d, L_lambda)`.
    pub coefficient_dim: u64,
    pub text: String,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InductionPart {
    /// `P_(j+1, d-j)` (lower block parabolic).
    pub parabolic: ParabolicSubset,
    /// `i = d - j`.
    pub i: usize,
    /// `mu_{i,lambda}` for the upper parabolic `P_(i, d-i+1)`.
    pub mu: Weight,
    /// `mu_{i,lambda}` with its two blocks swapped, i.e. conjugated into the
    /// Levi of `P_(j+1, d-j)`.
    pub twisted_weight: Weight,
    pub smooth: SmoothLabel,
    pub text: String,
    pub verdict: Verdict,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedPiece {
    pub j: usize,
    pub steinberg: Option<SteinbergPart>,
    pub induction: InductionPart,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationReport {
    pub spec: LineBundleSpec,
    pub lambda: Weight,
    pub bott: BottResult,
    /// `dim H^k(P^d, L_lambda)` for `k = 0..=d`.
    pub cohomology: Vec<u64>,
    pub pieces: Vec<GradedPiece>,
    /// `dim H^0(P^d, L_lambda)`.
    pub bottom_dim: u64,
    pub bottom_text: Option<String>,
    /// All constituent labels, top piece first, bottom last.
    pub constituents: Vec<String>,
    /// The one-dimensional reading of the non-vanishing cohomology; true
    /// when it disagrees with the computed dimension.
    pub dimension_discrepancy: bool,
}

fn steinberg_text(rs: &RootSystem, p: &ParabolicSubset, dim: u64, weight: &Weight) -> String {
    let coeff = if dim == 1 && weight.coords.iter().all(|c| c == &weight.coords[0]) {
        if weight.is_zero() {
            "K".to_string()
        } else {
            format!("det^{}", weight.coords[0])
        }
    } else {
        format!("V{weight}'")
    };
    format!("v^G_{}({coeff})", p.label(rs.rank()))
}

pub fn filtration_report(spec: &LineBundleSpec) -> Result<FiltrationReport> {
    let rs = spec.root_system();
    let d = spec.d;
    let b = bott(spec)?;
    let mut cohomology = vec![0u64; d + 1];
    if !b.degenerate {
        cohomology[b.i0] = b.h_dim;
    }
    let mut pieces = Vec::new();
    let mut constituents = Vec::new();
    for j in 0..d {
        let steinberg = if cohomology[d - j] != 0 {
            let mut blocks = vec![j + 1];
            blocks.extend(std::iter::repeat(1).take(d - j));
            let p = ParabolicSubset::from_blocks(&rs, &blocks)?;
            let w = b.h_weight.clone().expect("non-vanishing cohomology");
            let text = steinberg_text(&rs, &p, cohomology[d - j], &w);
            constituents.push(text.clone());
            Some(SteinbergPart {
                parabolic: p,
                coefficient_dim: cohomology[d - j],
                text,
                verdict: Verdict::Irreducible,
            })
        } else {
            None
        };

        let i = d - j;
        let mu = mu_weight(spec, i)?;
        let q = ParabolicSubset::from_blocks(&rs, &[j + 1, d - j])?;
        let mut swapped = mu.coords[i..].to_vec();
        swapped.extend_from_slice(&mu.coords[..i]);
        let twisted_weight = Weight {
            coords: swapped,
            basis: mu.basis,
        };
        // the verdict is taken on the upper model P_(i, d-i+1), where mu is
        // dominant for the Levi; conjugation by the block swap carries it over
        let upper = levi_block(spec, i)?;
        let smooth_upper = SmoothLabel::GenSteinberg {
            ambient: upper.clone(),
            lower: ParabolicSubset::borel(&rs),
        };
        let report = irreducibility_test(&rs, &mu, &smooth_upper, &upper, RESIDUE_CHAR)?;
        let mut warnings = report.warnings;
        if report.q != upper {
            warnings.push(format!(
                "maximal parabolic of {mu} is {}, expected {}",
                report.q.label(rs.rank()),
                upper.label(rs.rank())
            ));
        }
        let smooth = SmoothLabel::GenSteinberg {
            ambient: q.clone(),
            lower: ParabolicSubset::borel(&rs),
        };
        let text = format!(
            "Ind^G_{}(V{}' ⊗ v^L_B)",
            q.label(rs.rank()),
            twisted_weight
        );
        constituents.push(text.clone());
        pieces.push(GradedPiece {
            j,
            steinberg,
            induction: InductionPart {
                parabolic: q,
                i,
                mu,
                twisted_weight,
                smooth,
                text,
                verdict: report.verdict,
                warnings,
            },
        });
    }
    let bottom_dim = cohomology[0];
    let bottom_text = (bottom_dim != 0).then(|| {
        let w = b.h_weight.clone().expect("H^0 non-zero");
        if w.is_zero() {
            "K".to_string()
        } else {
            format!("V{w}'")
        }
    });
    if let Some(t) = &bottom_text {
        constituents.push(t.clone());
    }
    let dimension_discrepancy = !b.degenerate && b.h_dim != 1;
    Ok(FiltrationReport {
        spec: *spec,
        lambda: spec.lambda(),
        bott: b,
        cohomology,
        pieces,
        bottom_dim,
        bottom_text,
        constituents,
        dimension_discrepancy,
    })
}

/// `dim H^0(P^d, O(n)) = C(d+n, d)` for `n >= 0`, and Serre duality for
/// `H^d`; used as an independent check of `bott`.
pub fn binomial_cohomology(spec: &LineBundleSpec) -> BTreeMap<usize, u64> {
    let d = spec.d as u64;
    let n = spec.twist();
    let binom = |a: u64, b: u64| -> u64 { (0..b).fold(1u64, |acc, k| acc * (a - k) / (k + 1)) };
    let mut out = BTreeMap::new();
    if n >= 0 {
        out.insert(0, binom(d + n as u64, d));
    }
    let m = -n - d as i64 - 1;
    if m >= 0 {
        out.insert(spec.d, binom(d + m as u64, d));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::max_parabolic_for;

    fn spec(d: usize, r: i64, s: i64) -> LineBundleSpec {
        LineBundleSpec::new(d, r, s).unwrap()
    }

    fn gl(v: &[i64]) -> Weight {
        Weight::gl_tuple(v.to_vec())
    }

    #[test]
    fn bott_examples() {
        let b = bott(&spec(1, 0, 0)).unwrap();
        assert_eq!((b.degenerate, b.i0, b.h_dim), (false, 0, 1));
        let sp = spec(3, -2, 0);
        let b = bott(&sp).unwrap();
        assert!(b.degenerate);
        assert_eq!(b.i0, 1);
        assert_eq!(b.h_dim, 0);
        assert_eq!(dot_weight(&sp, 1).unwrap(), gl(&[-1, -1, 0, 0]));
        assert_eq!(dot_weight(&sp, 2).unwrap(), gl(&[-1, -1, 0, 0]));
        let b = bott(&spec(2, -3, 0)).unwrap();
        assert_eq!((b.degenerate, b.i0, b.h_dim), (false, 2, 1));
        assert_eq!(b.h_weight, Some(gl(&[-1, -1, -1])));
    }

    #[test]
    fn tables() {
        let t = weight_table(&spec(2, 1, 0)).unwrap();
        assert_eq!(t.weights, vec![gl(&[1, 0, 0]), gl(&[-1, 2, 0]), gl(&[-1, -1, 3])]);
        assert_eq!(dot_weight(&spec(1, 0, 0), 1).unwrap(), gl(&[-1, 1]));
        assert_eq!(mu_weight(&spec(2, 1, 0), 1).unwrap(), gl(&[-1, 2, 0]));
        assert_eq!(mu_weight(&spec(2, 1, 0), 2).unwrap(), gl(&[-1, -1, 3]));
        // i <= i0: mu_i = w_{i-1} . lambda
        let sp = spec(2, -4, 0);
        assert_eq!(bott(&sp).unwrap().i0, 2);
        assert_eq!(mu_weight(&sp, 2).unwrap(), dot_weight(&sp, 1).unwrap());
        assert!(mu_weight(&sp, 0).is_err());
        assert!(mu_weight(&sp, 3).is_err());
    }

    #[test]
    fn closed_form_and_bott_grid() {
        for d in 1..=3 {
            for s in -2..=2 {
                for r in s - 5..=s + 5 {
                    let sp = spec(d, r, s);
                    for i in 0..=d {
                        assert_eq!(dot_weight(&sp, i).unwrap(), dot_weight_closed_form(&sp, i));
                    }
                    let b = bott(&sp).unwrap();
                    let t = weight_table(&sp).unwrap();
                    let dominant: Vec<usize> = (0..=d).filter(|&i| t.dominant[i]).collect();
                    if b.degenerate {
                        assert!(dominant.is_empty());
                        assert_eq!(t.weights[b.i0], t.weights[b.i0 + 1]);
                    } else {
                        assert_eq!(dominant, vec![b.i0]);
                        let expect = binomial_cohomology(&sp);
                        assert_eq!(expect.get(&b.i0), Some(&b.h_dim));
                        assert_eq!(expect.len(), 1);
                    }
                    for (i, c) in t.chain.iter().enumerate() {
                        let expect = if b.degenerate && i == b.i0 {
                            Dominance::Equal
                        } else if i >= b.i0 {
                            Dominance::Greater
                        } else {
                            Dominance::Less
                        };
                        assert_eq!(*c, expect, "{sp:?} i={i}");
                    }
                    let rs = sp.root_system();
                    for i in 1..=d {
                        let mu = mu_weight(&sp, i).unwrap();
                        assert_eq!(max_parabolic_for(&rs, &mu).unwrap(), levi_block(&sp, i).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn local_cohomology_small() {
        let r = verify_local_cohomology(&spec(2, 1, 0), 1, 6).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.maximal_vector, vec![-1, 2, 0]);
        for d in 1..=2 {
            for t in [-3, -2, 0, 1] {
                for s in [0, 2] {
                    for i in 1..=d {
                        let r = verify_local_cohomology(&spec(d, t + s, s), i, 6).unwrap();
                        assert!(r.passed(), "{r:?}");
                        assert!(r.window_size > 0);
                    }
                }
            }
        }
    }

    #[test]
    fn non_maximal_vector_is_detected() {
        let m = MonomialModule { d: 2, i: 1, degree: 1 };
        // X_0^{-1} X_1 X_2 is not killed by L_(1,2)
        assert!(m.act(1, 2, &[-1, 1, 1]).is_some());
    }

    #[test]
    fn filtration_examples() {
        let f = filtration_report(&spec(1, 0, 0)).unwrap();
        assert_eq!(f.pieces.len(), 1);
        assert!(f.pieces[0].steinberg.is_none());
        assert_eq!(f.pieces[0].induction.mu, gl(&[-1, 1]));
        assert_eq!(f.pieces[0].induction.parabolic.label(1), "B");
        assert_eq!(f.bottom_text.as_deref(), Some("K"));
        assert_eq!(f.constituents.len(), 2);

        let f = filtration_report(&spec(1, -2, 0)).unwrap();
        assert_eq!(f.bott.i0, 1);
        let st = f.pieces[0].steinberg.as_ref().unwrap();
        assert_eq!(st.coefficient_dim, 1);
        assert_eq!(f.bottom_dim, 0);
        assert_eq!(f.constituents.len(), 2);

        let f = filtration_report(&spec(2, 0, 0)).unwrap();
        assert_eq!(f.pieces.len(), 2);
        assert!(f.pieces.iter().all(|p| p.steinberg.is_none()));
        assert_eq!(f.constituents.len(), 3);
        assert!(f.pieces.iter().all(|p| p.induction.verdict == Verdict::Irreducible));
        assert!(!f.dimension_discrepancy);

        let f = filtration_report(&spec(2, 2, 0)).unwrap();
        assert_eq!(f.bottom_dim, 6);
        assert!(f.dimension_discrepancy);
    }

    #[test]
    fn twisted_weight_is_levi_dominant_for_lower_block() {
        let sp = spec(3, 1, 0);
        let rs = sp.root_system();
        let f = filtration_report(&sp).unwrap();
        for p in &f.pieces {
            let ind = &p.induction;
            assert!(rs.is_levi_dominant(&ind.twisted_weight, &ind.parabolic.subset).unwrap());
        }
    }
}
