//! Weyl groups: enumeration with reduced words, the dot action, minimal coset
//! representatives and the maximal parabolic attached to an integral weight.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::roots::{Family, RootSystem, Weight, Q};

/// Default cap on the number of enumerated group elements.
pub const DEFAULT_WEYL_BOUND: usize = 100_000;

/// A Weyl group element: a reduced word `s_{i_1} ... s_{i_k}` (0-based simple
/// reflection indices) and its matrix on Dynkin labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct WeylElement {
    pub word: Vec<usize>,
    pub matrix: Vec<Vec<i64>>,
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Matrix of `s_i` on Dynkin labels: `lambda_j -> lambda_j - lambda_i a[i][j]`.
fn simple_matrix(rs: &RootSystem, i: usize) -> Vec<Vec<i64>> {
    let mut m = identity(rs.rank());
    for (j, row) in m.iter_mut().enumerate() {
        row[i] -= rs.cartan_matrix()[i][j];
    }
    m
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        WeylElement {
            word: Vec::new(),
            matrix: identity(rs.rank()),
        }
    }

    /// The element given by a word, kept verbatim (callers pass reduced words).
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<Self> {
        let mut m = identity(rs.rank());
        for &i in word {
            if i >= rs.rank() {
                return Err(Error::OutOfRange(format!("simple reflection index {i}")));
            }
            m = matmul(&m, &simple_matrix(rs, i));
        }
        Ok(WeylElement {
            word: word.to_vec(),
            matrix: m,
        })
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// Linear action on a weight (any basis).
    pub fn act(&self, rs: &RootSystem, w: &Weight) -> Result<Weight> {
        let mut out = w.clone();
        for &i in self.word.iter().rev() {
            out = rs.reflect(i, &out)?;
        }
        Ok(out)
    }

    /// Dot action `w(chi + rho) - rho`.
    pub fn dot(&self, rs: &RootSystem, chi: &Weight) -> Result<Weight> {
        let rho = rs.rho();
        let shifted = rs.add_weights(chi, &rho)?;
        rs.sub_weights(&self.act(rs, &shifted)?, &rho)
    }

    /// Action on a vector in simple-root coordinates.
    pub fn act_root(&self, rs: &RootSystem, beta: &[i64]) -> Vec<i64> {
        let mut v = beta.to_vec();
        for &i in self.word.iter().rev() {
            let p = rs.root_pairing_simple(&v, i);
            v[i] -= p;
        }
        v
    }

    pub fn inverse(&self, rs: &RootSystem) -> WeylElement {
        let word: Vec<usize> = self.word.iter().rev().copied().collect();
        WeylElement::from_word(rs, &word).expect("indices already validated")
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversion_count(&self, rs: &RootSystem) -> usize {
        rs.positive_roots()
            .iter()
            .filter(|b| self.act_root(rs, b).iter().any(|&c| c < 0))
            .count()
    }

    /// Word rendered 1-based, e.g. `s2s1`; the identity is `e`.
    pub fn word_string(&self) -> String {
        if self.word.is_empty() {
            "e".into()
        } else {
            self.word.iter().map(|i| format!("s{}", i + 1)).collect()
        }
    }
}

/// `w_j = s_j ... s_1` (1-based `j`, `w_0 = e`).
pub fn gl_chain_element(rs: &RootSystem, j: usize) -> Result<WeylElement> {
    if j > rs.rank() {
        return Err(Error::OutOfRange(format!("w_{j} needs j <= {}", rs.rank())));
    }
    let word: Vec<usize> = (0..j).rev().collect();
    WeylElement::from_word(rs, &word)
}

/// Order of the Weyl group from the classification.
pub fn weyl_order(rs: &RootSystem) -> u128 {
    let n = rs.rank() as u128;
    let fact = |k: u128| (1..=k).product::<u128>();
    match rs.cartan_type().family {
        Family::A => fact(n + 1),
        Family::B | Family::C => (1u128 << n) * fact(n),
        Family::D => (1u128 << (n - 1)) * fact(n),
        Family::E => match n {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        Family::F => 1152,
        Family::G => 12,
    }
}

#[derive(Clone, Debug)]
pub struct WeylGroup {
    rs: RootSystem,
    elements: Vec<WeylElement>,
    index: HashMap<Vec<Vec<i64>>, usize>,
}

impl WeylGroup {
    pub fn new(rs: &RootSystem) -> Result<Self> {
        WeylGroup::with_bound(rs, DEFAULT_WEYL_BOUND)
    }

    /// Enumerates `W` by length, each element carrying its lexicographically
    /// smallest reduced word.
    pub fn with_bound(rs: &RootSystem, bound: usize) -> Result<Self> {
        let order = weyl_order(rs);
        if order > bound as u128 {
            return Err(Error::BoundExceeded(format!(
                "|W({})| = {order} exceeds the bound {bound}",
                rs.cartan_type()
            )));
        }
        let gens: Vec<Vec<Vec<i64>>> = (0..rs.rank()).map(|i| simple_matrix(rs, i)).collect();
        let mut elements = vec![WeylElement::identity(rs)];
        let mut index = HashMap::from([(elements[0].matrix.clone(), 0usize)]);
        let mut layer = vec![0usize];
        while !layer.is_empty() {
            let mut next: HashMap<Vec<Vec<i64>>, Vec<usize>> = HashMap::new();
            for &w in &layer {
                for (i, g) in gens.iter().enumerate() {
                    let m = matmul(g, &elements[w].matrix);
                    if index.contains_key(&m) {
                        continue;
                    }
                    let mut word = vec![i];
                    word.extend_from_slice(&elements[w].word);
                    let slot = next.entry(m).or_insert_with(|| word.clone());
                    if word < *slot {
                        *slot = word;
                    }
                }
            }
            let mut fresh: Vec<(Vec<usize>, Vec<Vec<i64>>)> =
                next.into_iter().map(|(m, w)| (w, m)).collect();
            fresh.sort();
            layer.clear();
            for (word, matrix) in fresh {
                index.insert(matrix.clone(), elements.len());
                layer.push(elements.len());
                elements.push(WeylElement { word, matrix });
            }
        }
        Ok(WeylGroup {
            rs: rs.clone(),
            elements,
            index,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    /// All elements, ordered by length and then by reduced word.
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn longest(&self) -> &WeylElement {
        self.elements.last().expect("non-empty")
    }

    /// The canonical representative of an arbitrary element.
    pub fn canonical(&self, w: &WeylElement) -> &WeylElement {
        &self.elements[self.index[&w.matrix]]
    }

    pub fn multiply(&self, a: &WeylElement, b: &WeylElement) -> &WeylElement {
        &self.elements[self.index[&matmul(&a.matrix, &b.matrix)]]
    }

    /// Length distribution `#{w : l(w) = k}` for `k = 0 .. l(w_0)`.
    pub fn length_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.longest().length() + 1];
        for w in &self.elements {
            counts[w.length()] += 1;
        }
        counts
    }

    /// Minimal length representatives `^I W = {w : w^{-1}(alpha_i) > 0, i in I}`.
    pub fn min_coset_reps(&self, subset: &[usize]) -> Result<CosetSystem> {
        let rs = &self.rs;
        for &i in subset {
            if i >= rs.rank() {
                return Err(Error::InvalidParabolic(format!("simple root index {}", i + 1)));
            }
        }
        let reps: Vec<WeylElement> = self
            .elements
            .iter()
            .filter(|w| {
                let inv = w.inverse(rs);
                subset
                    .iter()
                    .all(|&i| inv.act_root(rs, &rs.simple_root(i)).iter().all(|&c| c >= 0))
            })
            .cloned()
            .collect();
        let max_rep = reps.last().expect("identity is always a representative").clone();
        let mut subset = subset.to_vec();
        subset.sort_unstable();
        subset.dedup();
        Ok(CosetSystem {
            subset,
            reps,
            max_rep,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CosetSystem {
    pub subset: Vec<usize>,
    pub reps: Vec<WeylElement>,
    pub max_rep: WeylElement,
}

/// A standard parabolic, given by a subset `I` of the simple roots (0-based).
/// For `GL_{d+1}` it also carries the block sizes `(n_1, ..., n_s)` of its Levi.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParabolicSubset {
    pub subset: Vec<usize>,
    pub blocks: Option<Vec<usize>>,
}

impl ParabolicSubset {
    pub fn new(rs: &RootSystem, subset: &[usize]) -> Result<Self> {
        let mut s = subset.to_vec();
        s.sort_unstable();
        s.dedup();
        if let Some(&bad) = s.iter().find(|&&i| i >= rs.rank()) {
            return Err(Error::InvalidParabolic(format!(
                "simple root index {} out of range for {}",
                bad + 1,
                rs.cartan_type()
            )));
        }
        let blocks = rs.is_gl().then(|| {
            let mut blocks = Vec::new();
            let mut cur = 1;
            for i in 0..rs.rank() {
                if s.contains(&i) {
                    cur += 1;
                } else {
                    blocks.push(cur);
                    cur = 1;
                }
            }
            blocks.push(cur);
            blocks
        });
        Ok(ParabolicSubset { subset: s, blocks })
    }

    pub fn borel(rs: &RootSystem) -> Self {
        ParabolicSubset::new(rs, &[]).expect("empty subset is valid")
    }

    pub fn full(rs: &RootSystem) -> Self {
        ParabolicSubset::new(rs, &(0..rs.rank()).collect::<Vec<_>>()).expect("valid")
    }

    /// The GL parabolic with Levi blocks `(n_1, ..., n_s)`.
    pub fn from_blocks(rs: &RootSystem, blocks: &[usize]) -> Result<Self> {
        if !rs.is_gl() || blocks.iter().sum::<usize>() != rs.rank() + 1 || blocks.contains(&0) {
            return Err(Error::InvalidParabolic(format!(
                "blocks {blocks:?} do not partition {}",
                rs.rank() + 1
            )));
        }
        let mut subset = Vec::new();
        let mut pos = 0;
        for &b in blocks {
            subset.extend(pos..pos + b - 1);
            pos += b;
        }
        ParabolicSubset::new(rs, &subset)
    }

    pub fn contains(&self, other: &ParabolicSubset) -> bool {
        other.subset.iter().all(|i| self.subset.contains(i))
    }

    pub fn len(&self) -> usize {
        self.subset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subset.is_empty()
    }

    /// Parses a comma separated list of 1-based simple root indices; the empty
    /// string is the Borel.
    pub fn parse(rs: &RootSystem, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(ParabolicSubset::borel(rs));
        }
        let idx = s
            .split(',')
            .map(|t| {
                let t = t.trim().trim_start_matches(['a', 'α']);
                match t.parse::<usize>() {
                    Ok(k) if k >= 1 => Ok(k - 1),
                    _ => Err(Error::Parse(format!("bad simple root index {t:?}"))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        ParabolicSubset::new(rs, &idx)
    }

    /// Compact label: `B`, `G`, `P{1,3}` (1-based), or `P(2,1)` for GL blocks.
    pub fn label(&self, rank: usize) -> String {
        if self.subset.is_empty() {
            "B".into()
        } else if self.subset.len() == rank {
            "G".into()
        } else if let Some(b) = &self.blocks {
            let parts: Vec<String> = b.iter().map(ToString::to_string).collect();
            format!("P({})", parts.join(","))
        } else {
            let parts: Vec<String> = self.subset.iter().map(|i| (i + 1).to_string()).collect();
            format!("P{{{}}}", parts.join(","))
        }
    }
}

impl Serialize for ParabolicSubset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(None)?;
        let one_based: Vec<usize> = self.subset.iter().map(|i| i + 1).collect();
        m.serialize_entry("simple_roots", &one_based)?;
        if let Some(b) = &self.blocks {
            m.serialize_entry("blocks", b)?;
        }
        m.end()
    }
}

/// `I(lambda) = {alpha in Delta : <lambda, alpha^vee> in Z_{>=0}}`.
pub fn max_parabolic_for(rs: &RootSystem, lambda: &Weight) -> Result<ParabolicSubset> {
    let labels = rs.dynkin_labels(lambda)?;
    if labels.iter().any(|l| !l.is_integer()) {
        return Err(Error::NonIntegral(lambda.to_string()));
    }
    let subset: Vec<usize> = labels
        .iter()
        .enumerate()
        .filter(|(_, l)| **l >= Q::from(0))
        .map(|(i, _)| i)
        .collect();
    ParabolicSubset::new(rs, &subset)
}
