//! A finite window of a Verma module: all weight spaces down to a depth, the
//! simple raising and lowering operators between them, and the Gram matrices.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{check_depth, drops_up_to, Monomial, VermaModule};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rat};
use crate::roots::{LieAlgebra, Weight, WeightBasis, Q};

/// Largest depth accepted by `build_window`.
pub const DEFAULT_MAX_DEPTH: usize = 16;

/// Ordering tag recorded with serialized windows.
pub const ORDERING_TAG: &str = "height-then-desc-lex";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VermaWindow {
    pub cartan_type: String,
    pub lambda: Weight,
    pub depth: usize,
    pub spaces: BTreeMap<Vec<i64>, Vec<Monomial>>,
    /// `(i, drop)` -> matrix of `x_{alpha_i}` from `drop` to `drop - alpha_i`.
    pub raising: BTreeMap<(usize, Vec<i64>), Matrix>,
    /// `(i, drop)` -> matrix of `y_{alpha_i}` from `drop` to `drop + alpha_i`.
    pub lowering: BTreeMap<(usize, Vec<i64>), Matrix>,
    pub grams: BTreeMap<Vec<i64>, Matrix>,
}

pub fn build_window(alg: Arc<LieAlgebra>, lambda: &Weight, depth: usize) -> Result<VermaWindow> {
    check_depth(depth, DEFAULT_MAX_DEPTH)?;
    let cartan_type = alg.root_system().cartan_type().to_string();
    let mut module = VermaModule::new(Arc::clone(&alg), lambda.clone())?;
    let rank = module.rank();
    let drops = drops_up_to(rank, depth);
    let mut spaces = BTreeMap::new();
    let mut raising = BTreeMap::new();
    let mut lowering = BTreeMap::new();
    let mut grams = BTreeMap::new();
    for d in &drops {
        spaces.insert(d.clone(), module.basis(d).to_vec());
        let height: i64 = d.iter().sum();
        for i in 0..rank {
            let simple = alg.root_system().simple_index(i);
            if d[i] > 0 {
                let m = module.matrix(alg.x(simple), d).expect("drop[i] > 0");
                raising.insert((i, d.clone()), m);
            }
            if (height as usize) < depth {
                let m = module.matrix(alg.y(simple), d).expect("lowering is always defined");
                lowering.insert((i, d.clone()), m);
            }
        }
        grams.insert(d.clone(), module.gram(d));
    }
    Ok(VermaWindow {
        cartan_type,
        lambda: lambda.clone(),
        depth,
        spaces,
        raising,
        lowering,
        grams,
    })
}

impl VermaWindow {
    pub fn dim(&self, drop: &[i64]) -> usize {
        self.spaces.get(drop).map_or(0, Vec::len)
    }

    pub fn to_doc(&self) -> WindowDoc {
        let mat = |m: &Matrix| -> Vec<Vec<String>> {
            m.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
        };
        WindowDoc {
            schema: crate::SCHEMA_VERSION,
            cartan_type: self.cartan_type.clone(),
            lambda: self.lambda.coords.iter().map(ToString::to_string).collect(),
            basis: match self.lambda.basis {
                WeightBasis::GlTuple => "gl_tuple".into(),
                WeightBasis::Fundamental => "fundamental".into(),
            },
            depth: self.depth,
            ordering: ORDERING_TAG.into(),
            spaces: self.spaces.iter().map(|(k, v)| (k.clone(), v.clone())).collect(),
            raising: self
                .raising
                .iter()
                .map(|((i, d), m)| (*i, d.clone(), mat(m)))
                .collect(),
            lowering: self
                .lowering
                .iter()
                .map(|((i, d), m)| (*i, d.clone(), mat(m)))
                .collect(),
            grams: self.grams.iter().map(|(d, m)| (d.clone(), mat(m))).collect(),
        }
    }

    pub fn from_doc(doc: &WindowDoc) -> Result<Self> {
        let bad = |what: &str| Error::Cache(format!("malformed window document: {what}"));
        if doc.ordering != ORDERING_TAG {
            return Err(bad("ordering tag"));
        }
        let parse_rat = |s: &String| s.parse::<Rat>().map_err(|_| bad("rational"));
        let mat = |m: &Vec<Vec<String>>| -> Result<Matrix> {
            m.iter()
                .map(|r| r.iter().map(parse_rat).collect())
                .collect()
        };
        let coords = doc
            .lambda
            .iter()
            .map(|s| s.parse::<Q>().map_err(|_| bad("weight")))
            .collect::<Result<Vec<_>>>()?;
        let basis = match doc.basis.as_str() {
            "gl_tuple" => WeightBasis::GlTuple,
            "fundamental" => WeightBasis::Fundamental,
            _ => return Err(bad("weight basis")),
        };
        Ok(VermaWindow {
            cartan_type: doc.cartan_type.clone(),
            lambda: Weight { coords, basis },
            depth: doc.depth,
            spaces: doc.spaces.iter().cloned().collect(),
            raising: doc
                .raising
                .iter()
                .map(|(i, d, m)| Ok(((*i, d.clone()), mat(m)?)))
                .collect::<Result<_>>()?,
            lowering: doc
                .lowering
                .iter()
                .map(|(i, d, m)| Ok(((*i, d.clone()), mat(m)?)))
                .collect::<Result<_>>()?,
            grams: doc
                .grams
                .iter()
                .map(|(d, m)| Ok((d.clone(), mat(m)?)))
                .collect::<Result<_>>()?,
        })
    }
}

/// Serialized form of a window; rationals are written as `p/q` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindowDoc {
    pub schema: u32,
    pub cartan_type: String,
    pub lambda: Vec<String>,
    pub basis: String,
    pub depth: usize,
    pub ordering: String,
    pub spaces: Vec<(Vec<i64>, Vec<Monomial>)>,
    pub raising: Vec<(usize, Vec<i64>, Vec<Vec<String>>)>,
    pub lowering: Vec<(usize, Vec<i64>, Vec<Vec<String>>)>,
    pub grams: Vec<(Vec<i64>, Vec<Vec<String>>)>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{matmul, rat};
    use crate::verma::kostant_count;

    #[test]
    fn window_structure() {
        let alg = Arc::new(LieAlgebra::from_type_str("A2").unwrap());
        let lam = Weight::fundamental(vec![1, 0]);
        let w = build_window(Arc::clone(&alg), &lam, 4).unwrap();
        for (d, b) in &w.spaces {
            assert_eq!(b.len() as u64, kostant_count(alg.root_system(), d));
        }
        // [x_1, y_1] = h_1 on the space at drop (1,1)
        let d = vec![1i64, 1];
        let n = w.dim(&d);
        let yx = matmul(&w.lowering[&(0, vec![0, 1])], &w.raising[&(0, d.clone())], 1, n);
        let xy = matmul(&w.raising[&(0, vec![2, 1])], &w.lowering[&(0, d.clone())], 2, n);
        // h_1 acts by <lambda - alpha_1 - alpha_2, alpha_1^vee> = 1 - 2 + 1 = 0
        for i in 0..n {
            for j in 0..n {
                let comm = &xy[i][j] - &yx[i][j];
                assert_eq!(comm, rat(0));
            }
        }
        assert!(build_window(alg, &lam, DEFAULT_MAX_DEPTH + 1).is_err());
    }

    #[test]
    fn doc_roundtrip() {
        let alg = Arc::new(LieAlgebra::from_type_str("B2").unwrap());
        let w = build_window(alg, &Weight::fundamental(vec![0, -1]), 3).unwrap();
        let doc = w.to_doc();
        let json = serde_json::to_string(&doc).unwrap();
        let back: WindowDoc = serde_json::from_str(&json).unwrap();
        assert_eq!(VermaWindow::from_doc(&back).unwrap(), w);
    }
}
