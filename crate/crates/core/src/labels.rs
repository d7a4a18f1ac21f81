//! Jordan–Hölder labels for representations `F^G_P(M, V)` induced from a
//! module `M` in category O and a smooth representation `V` of a Levi factor.
//!
//! Only the label algebra is modelled: each simple factor `L(mu_i)` of `M`
//! contributes the constituents `F^G_{Q_i}(L(mu_i), W)` where `Q_i` is the
//! maximal parabolic of `mu_i` and `W` runs over the constituents of the
//! smooth induction of `V` from `P` to the Levi of `Q_i`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::roots::{Family, RootSystem, Weight};
use crate::weyl::{max_parabolic_for, ParabolicSubset};

/// A smooth representation of a Levi factor, as a label.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SmoothLabel {
    /// The trivial representation.
    Trivial,
    /// Generalized Steinberg `v^Q_{Q'}` of the Levi of `ambient`, `lower` ⊆ `ambient`.
    /// With `lower == ambient` this is the trivial representation of that Levi,
    /// printed as `1`.
    GenSteinberg {
        ambient: ParabolicSubset,
        lower: ParabolicSubset,
    },
    /// A user supplied representation. `induced_factors` optionally lists the
    /// constituents of its smooth induction, keyed by the target parabolic's label.
    Opaque {
        name: String,
        asserted_irreducible: bool,
        induced_factors: BTreeMap<String, Vec<String>>,
    },
    /// Smooth induction from `from` to the Levi of `to`, kept symbolic.
    Induced {
        from: ParabolicSubset,
        to: ParabolicSubset,
        inner: Box<SmoothLabel>,
        resolved: bool,
    },
}

impl SmoothLabel {
    pub fn opaque(name: &str, asserted_irreducible: bool) -> Self {
        SmoothLabel::Opaque {
            name: name.to_string(),
            asserted_irreducible,
            induced_factors: BTreeMap::new(),
        }
    }

    pub fn is_irreducible(&self) -> Option<bool> {
        match self {
            SmoothLabel::Trivial | SmoothLabel::GenSteinberg { .. } => Some(true),
            SmoothLabel::Opaque {
                asserted_irreducible,
                ..
            } => asserted_irreducible.then_some(true),
            SmoothLabel::Induced { .. } => None,
        }
    }

    fn text(&self, rank: usize) -> String {
        match self {
            SmoothLabel::Trivial => "1".into(),
            SmoothLabel::GenSteinberg { ambient, lower } if ambient == lower => "1".into(),
            SmoothLabel::GenSteinberg { ambient, lower } => {
                format!("v^{}_{}", ambient.label(rank), lower.label(rank))
            }
            SmoothLabel::Opaque { name, .. } => name.clone(),
            SmoothLabel::Induced { from, to, inner, .. } => format!(
                "i^{}_{}({})",
                to.label(rank),
                from.label(rank),
                inner.text(rank)
            ),
        }
    }
}

/// All `Q'` with `I_P ⊆ I_{Q'} ⊆ I_Q`, ordered by `|I_{Q'}|` descending, then
/// lexicographically.
fn intermediate(rs: &RootSystem, p: &ParabolicSubset, q: &ParabolicSubset) -> Vec<ParabolicSubset> {
    let free: Vec<usize> = q.subset.iter().filter(|i| !p.subset.contains(i)).copied().collect();
    let mut out: Vec<ParabolicSubset> = (0..1u64 << free.len())
        .map(|mask| {
            let mut s = p.subset.clone();
            s.extend(free.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &i)| i));
            ParabolicSubset::new(rs, &s).expect("subset of a valid parabolic")
        })
        .collect();
    sort_refinement(&mut out);
    out
}

fn sort_refinement(v: &mut [ParabolicSubset]) {
    v.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.subset.cmp(&b.subset)));
}

/// Constituents `v^Q_{Q'}` (`P ⊆ Q' ⊆ Q`) of the smooth induction of the
/// trivial representation from `P` to the Levi of `Q`; each occurs once.
pub fn steinberg_constituents(
    rs: &RootSystem,
    p: &ParabolicSubset,
    q: &ParabolicSubset,
) -> Result<Vec<SmoothLabel>> {
    if !q.contains(p) {
        return Err(Error::InvalidParabolic(format!(
            "{} is not contained in {}",
            p.label(rs.rank()),
            q.label(rs.rank())
        )));
    }
    Ok(intermediate(rs, p, q)
        .into_iter()
        .map(|lower| SmoothLabel::GenSteinberg {
            ambient: q.clone(),
            lower,
        })
        .collect())
}

/// Constituents of the smooth induction of `v` (a representation of the Levi
/// of `p`) to the Levi of `q`. `None` when they are not determined by the
/// available data.
fn induced_constituents(
    rs: &RootSystem,
    v: &SmoothLabel,
    p: &ParabolicSubset,
    q: &ParabolicSubset,
) -> Result<Option<Vec<SmoothLabel>>> {
    if !q.contains(p) {
        return Err(Error::InvalidParabolic(format!(
            "{} is not contained in {}",
            p.label(rs.rank()),
            q.label(rs.rank())
        )));
    }
    Ok(match v {
        SmoothLabel::Trivial => Some(steinberg_constituents(rs, p, q)?),
        SmoothLabel::GenSteinberg { ambient, lower } => {
            if ambient != p {
                return Err(Error::InvalidParabolic(
                    "generalized Steinberg input must live on the Levi of P".into(),
                ));
            }
            // i^Q_P(v^P_{P'}) has the constituents v^Q_S with S ∩ I_P = I_{P'}
            let mut out: Vec<ParabolicSubset> = intermediate(rs, &ParabolicSubset::borel(rs), q)
                .into_iter()
                .filter(|s| {
                    let meet: Vec<usize> =
                        s.subset.iter().filter(|i| p.subset.contains(i)).copied().collect();
                    meet == lower.subset
                })
                .collect();
            sort_refinement(&mut out);
            Some(
                out.into_iter()
                    .map(|s| SmoothLabel::GenSteinberg {
                        ambient: q.clone(),
                        lower: s,
                    })
                    .collect(),
            )
        }
        SmoothLabel::Opaque {
            asserted_irreducible,
            induced_factors,
            ..
        } => {
            if p == q && *asserted_irreducible {
                Some(vec![v.clone()])
            } else {
                induced_factors.get(&q.label(rs.rank())).map(|names| {
                    names
                        .iter()
                        .map(|n| SmoothLabel::opaque(n, true))
                        .collect()
                })
            }
        }
        SmoothLabel::Induced {
            from, to, inner, ..
        } => {
            if to != p {
                return Err(Error::InvalidParabolic("induction target mismatch".into()));
            }
            match induced_constituents(rs, inner, from, p)? {
                None => None,
                Some(parts) => {
                    let mut out = Vec::new();
                    for w in parts {
                        match induced_constituents(rs, &w, p, q)? {
                            Some(more) => out.extend(more),
                            None => return Ok(None),
                        }
                    }
                    Some(out)
                }
            }
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstituentLabel {
    /// `(i, j)`: factor `i` of `M`, position `j` in its smooth refinement.
    pub index: (usize, usize),
    #[serde(rename = "Q")]
    pub q: ParabolicSubset,
    pub mu: Weight,
    pub smooth: SmoothLabel,
    pub multiplicity: u32,
    pub unresolved: bool,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JhSeries {
    #[serde(rename = "P")]
    pub p: ParabolicSubset,
    #[serde(rename = "V")]
    pub v: SmoothLabel,
    pub factors: Vec<Weight>,
    pub constituents: Vec<ConstituentLabel>,
    pub total_length: usize,
}

fn constituent_text(rank: usize, q: &ParabolicSubset, mu: &Weight, w: &SmoothLabel) -> String {
    format!("F^G_{}(L{}, {})", q.label(rank), mu, w.text(rank))
}

/// The ordered constituent labels of `F^G_P(M, V)` for `M` with simple
/// factors `factors` (top to bottom).
pub fn jh_series(
    rs: &RootSystem,
    factors: &[Weight],
    v: &SmoothLabel,
    p: &ParabolicSubset,
) -> Result<JhSeries> {
    let rank = rs.rank();
    let mut constituents = Vec::new();
    for (i, mu) in factors.iter().enumerate() {
        let q = max_parabolic_for(rs, mu)?;
        if !q.contains(p) {
            return Err(Error::InvalidParabolic(format!(
                "P = {} is not contained in the maximal parabolic {} of {mu}",
                p.label(rank),
                q.label(rank)
            )));
        }
        match induced_constituents(rs, v, p, &q)? {
            Some(parts) => {
                for (j, w) in parts.into_iter().enumerate() {
                    constituents.push(ConstituentLabel {
                        index: (i, j),
                        text: constituent_text(rank, &q, mu, &w),
                        q: q.clone(),
                        mu: mu.clone(),
                        smooth: w,
                        multiplicity: 1,
                        unresolved: false,
                    });
                }
            }
            None => {
                let w = SmoothLabel::Induced {
                    from: p.clone(),
                    to: q.clone(),
                    inner: Box::new(v.clone()),
                    resolved: false,
                };
                constituents.push(ConstituentLabel {
                    index: (i, 0),
                    text: constituent_text(rank, &q, mu, &w),
                    q: q.clone(),
                    mu: mu.clone(),
                    smooth: w,
                    multiplicity: 1,
                    unresolved: true,
                });
            }
        }
    }
    Ok(JhSeries {
        p: p.clone(),
        v: v.clone(),
        factors: factors.to_vec(),
        total_length: constituents.len(),
        constituents,
    })
}

/// `sum_i 2^{|I_{Q_i} \ I_P|}`: the length for trivial `V`.
pub fn trivial_total_length(rs: &RootSystem, factors: &[Weight], p: &ParabolicSubset) -> Result<usize> {
    let mut total = 0;
    for mu in factors {
        let q = max_parabolic_for(rs, mu)?;
        total += 1usize << (q.len() - p.len());
    }
    Ok(total)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Irreducible,
    Reducible,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Irreducible => "irreducible",
            Verdict::Reducible => "reducible",
            Verdict::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IrreducibilityReport {
    pub verdict: Verdict,
    #[serde(rename = "Q")]
    pub q: ParabolicSubset,
    pub warnings: Vec<String>,
}

/// Residue characteristic restrictions under which the criterion is stated.
pub fn prime_warnings(rs: &RootSystem, p: u64) -> Vec<String> {
    let mut w = Vec::new();
    match rs.cartan_type().family {
        Family::B | Family::C | Family::F if p == 2 => w.push(format!(
            "residue characteristic {p} must be odd for type {}",
            rs.cartan_type()
        )),
        Family::G if p <= 3 => w.push(format!(
            "residue characteristic {p} must exceed 3 for type {}",
            rs.cartan_type()
        )),
        _ => {}
    }
    w
}

/// Decision predicate for topological irreducibility of `F^G_P(L(mu), V)`.
pub fn irreducibility_test(
    rs: &RootSystem,
    mu: &Weight,
    v: &SmoothLabel,
    p: &ParabolicSubset,
    residue_char: u64,
) -> Result<IrreducibilityReport> {
    let q = max_parabolic_for(rs, mu)?;
    let mut warnings = prime_warnings(rs, residue_char);
    let verdict = if !q.contains(p) {
        warnings.push(format!(
            "P = {} is not contained in the maximal parabolic {}",
            p.label(rs.rank()),
            q.label(rs.rank())
        ));
        Verdict::Unknown
    } else if &q == p && v.is_irreducible() == Some(true) {
        Verdict::Irreducible
    } else if &q != p && *v == SmoothLabel::Trivial {
        Verdict::Reducible
    } else {
        Verdict::Unknown
    };
    Ok(IrreducibilityReport {
        verdict,
        q,
        warnings,
    })
}

/// A label `F^G_P(L(mu), V)` before expansion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InducedLabel {
    pub base: ParabolicSubset,
    pub mu: Weight,
    pub smooth: SmoothLabel,
}

/// `F^G_P(M, V) = F^G_Q(M, i^{L_Q}_{P}(V))` for `P ⊆ Q ⊆ Q(mu)`.
pub fn transitivity_rewrite(
    rs: &RootSystem,
    label: &InducedLabel,
    q: &ParabolicSubset,
) -> Result<InducedLabel> {
    let qmax = max_parabolic_for(rs, &label.mu)?;
    if !qmax.contains(q) || !q.contains(&label.base) {
        return Err(Error::InvalidParabolic(format!(
            "need {} ⊆ {} ⊆ {}",
            label.base.label(rs.rank()),
            q.label(rs.rank()),
            qmax.label(rs.rank())
        )));
    }
    if q == &label.base {
        return Ok(label.clone());
    }
    Ok(InducedLabel {
        base: q.clone(),
        mu: label.mu.clone(),
        smooth: SmoothLabel::Induced {
            from: label.base.clone(),
            to: q.clone(),
            inner: Box::new(label.smooth.clone()),
            resolved: true,
        },
    })
}

/// Expands an induced label into its constituent multiset.
pub fn expand(rs: &RootSystem, label: &InducedLabel) -> Result<Vec<ConstituentLabel>> {
    Ok(jh_series(rs, std::slice::from_ref(&label.mu), &label.smooth, &label.base)?.constituents)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::CartanType;

    fn rs(t: &str) -> RootSystem {
        RootSystem::from_type_str(t).unwrap()
    }

    #[test]
    fn steinberg_counts() {
        let a2 = rs("A2");
        let b = ParabolicSubset::borel(&a2);
        let g = ParabolicSubset::full(&a2);
        let c = steinberg_constituents(&a2, &b, &g).unwrap();
        assert_eq!(c.len(), 4);
        assert_eq!(c[0].text(2), "1");
        assert_eq!(c[3].text(2), "v^G_B");
        assert_eq!(steinberg_constituents(&a2, &b, &b).unwrap().len(), 1);
        assert!(steinberg_constituents(&a2, &g, &b).is_err());
    }

    #[test]
    fn sl2_example() {
        let gl2 = RootSystem::new(CartanType::gl(2).unwrap()).unwrap();
        let b = ParabolicSubset::borel(&gl2);
        let factors = [Weight::gl_tuple(vec![0, 0]), Weight::gl_tuple(vec![-1, 1])];
        let s = jh_series(&gl2, &factors, &SmoothLabel::Trivial, &b).unwrap();
        let texts: Vec<&str> = s.constituents.iter().map(|c| c.text.as_str()).collect();
        assert_eq!(
            texts,
            vec!["F^G_G(L(0,0), 1)", "F^G_G(L(0,0), v^G_B)", "F^G_B(L(-1,1), 1)"]
        );
        assert_eq!(s.total_length, trivial_total_length(&gl2, &factors, &b).unwrap());
    }

    #[test]
    fn finite_dimensional_a2() {
        let a2 = rs("A2");
        let s = jh_series(&a2, &[a2.rho()], &SmoothLabel::Trivial, &ParabolicSubset::borel(&a2)).unwrap();
        assert_eq!(s.total_length, 4);
        let anti = Weight::fundamental(vec![-1, -1]);
        let s = jh_series(&a2, &[anti], &SmoothLabel::Trivial, &ParabolicSubset::borel(&a2)).unwrap();
        assert_eq!(s.total_length, 1);
    }

    #[test]
    fn opaque_unresolved() {
        let a2 = rs("A2");
        let b = ParabolicSubset::borel(&a2);
        let v = SmoothLabel::opaque("sigma", true);
        let s = jh_series(&a2, &[Weight::fundamental(vec![0, -1])], &v, &b).unwrap();
        assert_eq!(s.total_length, 1);
        assert!(s.constituents[0].unresolved);
        let s = jh_series(&a2, &[Weight::fundamental(vec![-1, -1])], &v, &b).unwrap();
        assert!(!s.constituents[0].unresolved);
        let mut data = BTreeMap::new();
        data.insert("P{1}".to_string(), vec!["a".to_string(), "b".to_string()]);
        let v = SmoothLabel::Opaque {
            name: "sigma".into(),
            asserted_irreducible: true,
            induced_factors: data,
        };
        let s = jh_series(&a2, &[Weight::fundamental(vec![0, -1])], &v, &b).unwrap();
        assert_eq!(s.total_length, 2);
    }

    #[test]
    fn p_must_be_contained() {
        let a2 = rs("A2");
        let p = ParabolicSubset::new(&a2, &[0]).unwrap();
        assert!(jh_series(&a2, &[Weight::fundamental(vec![-1, 0])], &SmoothLabel::Trivial, &p).is_err());
    }

    #[test]
    fn irreducibility_examples() {
        let a2 = rs("A2");
        let g = ParabolicSubset::full(&a2);
        let b = ParabolicSubset::borel(&a2);
        let dom = a2.rho();
        let r = irreducibility_test(&a2, &dom, &SmoothLabel::opaque("pi", true), &g, 5).unwrap();
        assert_eq!(r.verdict, Verdict::Irreducible);
        let r = irreducibility_test(&a2, &dom, &SmoothLabel::Trivial, &b, 5).unwrap();
        assert_eq!(r.verdict, Verdict::Reducible);
        let r = irreducibility_test(&a2, &Weight::fundamental(vec![-1, -1]), &SmoothLabel::Trivial, &b, 5).unwrap();
        assert_eq!(r.verdict, Verdict::Irreducible);
        let r = irreducibility_test(&a2, &dom, &SmoothLabel::opaque("pi", false), &b, 5).unwrap();
        assert_eq!(r.verdict, Verdict::Unknown);
        let g2 = rs("G2");
        let r = irreducibility_test(&g2, &g2.rho(), &SmoothLabel::Trivial, &ParabolicSubset::full(&g2), 3).unwrap();
        assert_eq!(r.warnings.len(), 1);
        let b2 = rs("B2");
        assert_eq!(prime_warnings(&b2, 2).len(), 1);
        assert!(prime_warnings(&b2, 5).is_empty());
    }

    fn multiset(v: Vec<ConstituentLabel>) -> Vec<(Weight, SmoothLabel)> {
        let mut m: Vec<_> = v.into_iter().map(|c| (c.mu, c.smooth)).collect();
        m.sort();
        m
    }

    #[test]
    fn transitivity_roundtrip() {
        let a3 = rs("A3");
        let b = ParabolicSubset::borel(&a3);
        let mu = a3.rho();
        let direct = expand(&a3, &InducedLabel { base: b.clone(), mu: mu.clone(), smooth: SmoothLabel::Trivial }).unwrap();
        for mask in 0..8usize {
            let sub: Vec<usize> = (0..3).filter(|i| mask >> i & 1 == 1).collect();
            let q = ParabolicSubset::new(&a3, &sub).unwrap();
            let label = InducedLabel { base: b.clone(), mu: mu.clone(), smooth: SmoothLabel::Trivial };
            let rw = transitivity_rewrite(&a3, &label, &q).unwrap();
            assert_eq!(multiset(expand(&a3, &rw).unwrap()), multiset(direct.clone()));
        }
        let same = InducedLabel { base: b.clone(), mu: mu.clone(), smooth: SmoothLabel::Trivial };
        assert_eq!(transitivity_rewrite(&a3, &same, &b).unwrap(), same);
        let low = InducedLabel { base: b.clone(), mu: Weight::fundamental(vec![-1, 0, 0]), smooth: SmoothLabel::Trivial };
        assert!(transitivity_rewrite(&a3, &low, &ParabolicSubset::full(&a3)).is_err());
    }

    #[test]
    fn concatenation_invariance() {
        let b2 = rs("B2");
        let b = ParabolicSubset::borel(&b2);
        let factors = [b2.rho(), Weight::fundamental(vec![-3, 2]), Weight::fundamental(vec![1, -4])];
        let whole = jh_series(&b2, &factors, &SmoothLabel::Trivial, &b).unwrap();
        let mut parts = Vec::new();
        for f in &factors {
            parts.extend(jh_series(&b2, std::slice::from_ref(f), &SmoothLabel::Trivial, &b).unwrap().constituents);
        }
        assert_eq!(multiset(whole.constituents), multiset(parts));
    }
}
