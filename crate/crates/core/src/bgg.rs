//! Ordinary and parabolic BGG resolutions as graded lists of (parabolic)
//! Verma modules, their dual locally analytic counterparts as labels, and an
//! Euler characteristic check against the character of `V(lambda)`.
//!
//! Differentials are not constructed; the complexes are graded objects whose
//! exactness is tested through characters.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::roots::{RootSystem, Weight};
use crate::verma::{freudenthal_char, parabolic_verma_char};
use crate::weyl::{ParabolicSubset, WeylGroup};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summand {
    /// Reduced word, 1-based simple reflection indices.
    pub word: Vec<usize>,
    pub weight: Weight,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionTerm {
    pub degree: usize,
    pub summands: Vec<Summand>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Resolution {
    pub lambda: Weight,
    #[serde(rename = "I")]
    pub parabolic: ParabolicSubset,
    /// `M(mu)` when the parabolic is the Borel, `M_I(mu)` otherwise.
    pub module: String,
    pub terms: Vec<ResolutionTerm>,
    pub augmentation: String,
    /// Weights occurring more than once (reported, not rejected).
    pub duplicates: Vec<Weight>,
}

impl Resolution {
    pub fn summand_counts(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.summands.len()).collect()
    }

    /// `0 -> M(mu_n) -> ... -> M(mu_0) -> V(lambda) -> 0` in one line.
    pub fn display_line(&self) -> String {
        let mut parts = vec!["0".to_string()];
        for t in self.terms.iter().rev() {
            let s: Vec<String> = t
                .summands
                .iter()
                .map(|x| format!("{}{}", self.module, x.weight))
                .collect();
            parts.push(s.join(" ⊕ "));
        }
        parts.push(self.augmentation.clone());
        parts.push("0".into());
        parts.join(" → ")
    }
}

fn trivial_name(lambda: &Weight) -> String {
    if lambda.is_zero() {
        "K".into()
    } else {
        format!("V{lambda}")
    }
}

pub fn bgg_resolution(weyl: &WeylGroup, lambda: &Weight) -> Result<Resolution> {
    parabolic_bgg_resolution(weyl, &ParabolicSubset::borel(weyl.root_system()), lambda)
}

/// Lepowsky's resolution: degree `k` is `sum_{w in ^I W, l(w) = k} M_I(w.lambda)`.
pub fn parabolic_bgg_resolution(
    weyl: &WeylGroup,
    parabolic: &ParabolicSubset,
    lambda: &Weight,
) -> Result<Resolution> {
    let rs = weyl.root_system();
    if !rs.is_dominant(lambda)? {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let cosets = weyl.min_coset_reps(&parabolic.subset)?;
    let top = cosets.max_rep.length();
    let mut terms: Vec<ResolutionTerm> = (0..=top)
        .map(|degree| ResolutionTerm {
            degree,
            summands: Vec::new(),
        })
        .collect();
    let mut seen: BTreeMap<Weight, usize> = BTreeMap::new();
    for w in &cosets.reps {
        let mu = w.dot(rs, lambda)?;
        *seen.entry(mu.clone()).or_default() += 1;
        terms[w.length()].summands.push(Summand {
            word: w.word.iter().map(|i| i + 1).collect(),
            weight: mu,
        });
    }
    let module = if parabolic.is_empty() {
        "M".to_string()
    } else {
        format!("M_{}", parabolic.label(rs.rank()))
    };
    Ok(Resolution {
        lambda: lambda.clone(),
        parabolic: parabolic.clone(),
        module,
        terms,
        augmentation: trivial_name(lambda),
        duplicates: seen
            .into_iter()
            .filter(|(_, n)| *n > 1)
            .map(|(w, _)| w)
            .collect(),
    })
}

/// One induced representation `Ind^G_{P_I}(V_I(mu)')`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InductionLabel {
    pub parabolic: ParabolicSubset,
    pub weight: Weight,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualResolutionLabel {
    pub lambda: Weight,
    pub terms: Vec<Vec<InductionLabel>>,
    pub augmentation: String,
}

impl DualResolutionLabel {
    /// `0 <- Ind(..)_n <- ... <- Ind(..)_0 <- augmentation <- 0`.
    pub fn display_line(&self) -> String {
        let mut parts = vec!["0".to_string()];
        for t in self.terms.iter().rev() {
            let s: Vec<&str> = t.iter().map(|l| l.text.as_str()).collect();
            parts.push(s.join(" ⊕ "));
        }
        parts.push(self.augmentation.clone());
        parts.push("0".into());
        parts.join(" ← ")
    }
}

fn induction_text(rs: &RootSystem, p: &ParabolicSubset, mu: &Weight) -> String {
    let pl = p.label(rs.rank());
    let inner = if mu.is_zero() {
        "K".to_string()
    } else if p.is_empty() {
        format!("{mu}^{{-1}}")
    } else {
        format!("V_I{mu}'")
    };
    format!("Ind^G_{pl}({inner})")
}

/// Term-by-term dual of a (parabolic) BGG resolution.
pub fn dual_la_resolution(rs: &RootSystem, res: &Resolution) -> DualResolutionLabel {
    let p = &res.parabolic;
    let terms = res
        .terms
        .iter()
        .map(|t| {
            t.summands
                .iter()
                .map(|s| InductionLabel {
                    parabolic: p.clone(),
                    weight: s.weight.clone(),
                    text: induction_text(rs, p, &s.weight),
                })
                .collect()
        })
        .collect();
    let pl = p.label(rs.rank());
    let augmentation = if res.lambda.is_zero() {
        format!("i^G_{pl}(K)")
    } else {
        format!("V{}⊗i^G_{pl}", res.lambda)
    };
    DualResolutionLabel {
        lambda: res.lambda.clone(),
        terms,
        augmentation,
    }
}

/// Recovers the graded weight multiset from a dual label (inverse of the
/// relabeling on terms).
pub fn weights_of_dual(dual: &DualResolutionLabel) -> Vec<Vec<Weight>> {
    dual.terms
        .iter()
        .map(|t| t.iter().map(|l| l.weight.clone()).collect())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerReport {
    pub depth: usize,
    pub passed: bool,
    /// Drops where the alternating sum differs from `char V(lambda)`.
    pub residuals: Vec<(Vec<i64>, i64)>,
}

/// `sum_k (-1)^k char(term k) = char V(lambda)` on every window point.
pub fn euler_check(rs: &RootSystem, res: &Resolution, depth: usize) -> Result<EulerReport> {
    let target = freudenthal_char(rs, &res.lambda, depth)?;
    let mut acc: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for t in &res.terms {
        let sign = if t.degree % 2 == 0 { 1 } else { -1 };
        for s in &t.summands {
            let shift = rs
                .difference_in_roots(&res.lambda, &s.weight)?
                .ok_or_else(|| Error::Internal("summand outside the root lattice".into()))?;
            let shift: Vec<i64> = shift.iter().map(|c| c.to_integer()).collect();
            let h = shift.iter().sum::<i64>() as usize;
            if h > depth {
                continue;
            }
            let ch = parabolic_verma_char(rs, &res.parabolic.subset, &s.weight, depth - h)?;
            for (nu, &m) in &ch.dims {
                let d: Vec<i64> = nu.iter().zip(&shift).map(|(a, b)| a + b).collect();
                *acc.entry(d).or_default() += sign * m;
            }
        }
    }
    let mut residuals = Vec::new();
    for d in crate::verma::drops_up_to(rs.rank(), depth) {
        let diff = acc.get(&d).copied().unwrap_or(0) - target.get(&d);
        if diff != 0 {
            residuals.push((d, diff));
        }
    }
    Ok(EulerReport {
        depth,
        passed: residuals.is_empty(),
        residuals,
    })
}
