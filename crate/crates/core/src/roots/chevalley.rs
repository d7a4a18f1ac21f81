//! Chevalley basis structure constants and the resulting Lie bracket.
//!
//! Signs are fixed by declaring `N(alpha, beta) = p + 1 > 0` on every
//! extraspecial pair; all other constants follow from the standard relations
//! between structure constants of a Chevalley basis.

use std::collections::{BTreeMap, HashMap};

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{RootSystem, Q};
use crate::error::{Error, Result};

pub const SIGN_CONVENTION: &str = "extraspecial-positive";

/// Structure constants `N(a, b)` with `[e_a, e_b] = N(a, b) e_{a+b}`.
///
/// Roots are addressed by "full" indices: `0..r` are the positive roots in PBW
/// order and `r..2r` their negatives.
#[derive(Clone, Debug)]
pub struct ChevalleyBasis {
    num_pos: usize,
    constants: HashMap<(usize, usize), i64>,
    sum: HashMap<(usize, usize), usize>,
}

fn full_coords(rs: &RootSystem, id: usize) -> Vec<i64> {
    let r = rs.num_positive();
    if id < r {
        rs.root(id).to_vec()
    } else {
        rs.root(id - r).iter().map(|c| -c).collect()
    }
}

fn full_index(rs: &RootSystem, coords: &[i64]) -> Option<usize> {
    if let Some(i) = rs.positive_index(coords) {
        return Some(i);
    }
    let neg: Vec<i64> = coords.iter().map(|c| -c).collect();
    rs.positive_index(&neg).map(|i| i + rs.num_positive())
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Largest `p` with `beta - p alpha` a root.
pub(crate) fn string_down(rs: &RootSystem, alpha: &[i64], beta: &[i64]) -> i64 {
    let mut p = 0;
    let mut cur = beta.to_vec();
    loop {
        cur = cur.iter().zip(alpha).map(|(b, a)| b - a).collect();
        if rs.is_root(&cur) {
            p += 1;
        } else {
            return p;
        }
    }
}

struct Builder<'a> {
    rs: &'a RootSystem,
    pos: HashMap<(usize, usize), i64>,
}

impl Builder<'_> {
    fn neg(&self, id: usize) -> usize {
        let r = self.rs.num_positive();
        if id < r {
            id + r
        } else {
            id - r
        }
    }

    fn is_pos(&self, id: usize) -> bool {
        id < self.rs.num_positive()
    }

    /// General constant, reduced to positive pairs of smaller height.
    fn n(&self, a: usize, b: usize) -> Q {
        let rs = self.rs;
        let (ca, cb) = (full_coords(rs, a), full_coords(rs, b));
        let s = add(&ca, &cb);
        let Some(c) = full_index(rs, &s) else {
            return Q::zero();
        };
        match (self.is_pos(a), self.is_pos(b)) {
            (true, true) => Q::from(self.pos[&(a, b)]),
            (false, false) => -Q::from(self.pos[&(self.neg(a), self.neg(b))]),
            (true, false) => {
                let len_c = rs.sq_len(&s);
                if self.is_pos(c) {
                    -len_c / rs.sq_len(&ca) * self.n(self.neg(b), c)
                } else {
                    len_c / rs.sq_len(&cb) * self.n(self.neg(c), a)
                }
            }
            (false, true) => -self.n(b, a),
        }
    }
}

impl ChevalleyBasis {
    pub fn new(rs: &RootSystem) -> Result<Self> {
        let r = rs.num_positive();
        let mut b = Builder {
            rs,
            pos: HashMap::new(),
        };
        for xi in 0..r {
            let target = rs.root(xi).to_vec();
            let mut pairs = Vec::new();
            for a in 0..r {
                for c in a + 1..r {
                    if add(rs.root(a), rs.root(c)) == target {
                        pairs.push((a, c));
                    }
                }
            }
            let Some(&(a0, b0)) = pairs.first() else {
                continue;
            };
            let p0 = string_down(rs, rs.root(a0), rs.root(b0));
            b.pos.insert((a0, b0), p0 + 1);
            b.pos.insert((b0, a0), -(p0 + 1));
            let len_xi = rs.sq_len(&target);
            for &(a, c) in &pairs[1..] {
                let mut acc = Q::zero();
                let ba0 = add(rs.root(c), &negate(rs.root(a0)));
                if rs.is_root(&ba0) {
                    acc += b.n(c, a0 + r) * b.n(a, b0 + r) / rs.sq_len(&ba0);
                }
                let aa0 = add(rs.root(a), &negate(rs.root(a0)));
                if rs.is_root(&aa0) {
                    acc += b.n(a0 + r, a) * b.n(c, b0 + r) / rs.sq_len(&aa0);
                }
                let v = len_xi / Q::from(p0 + 1) * acc;
                let p = string_down(rs, rs.root(a), rs.root(c));
                if !v.is_integer() || v.abs() != Q::from(p + 1) {
                    return Err(Error::Internal(format!(
                        "structure constant N({:?},{:?}) = {v}, expected +-{}",
                        rs.root(a),
                        rs.root(c),
                        p + 1
                    )));
                }
                b.pos.insert((a, c), v.to_integer());
                b.pos.insert((c, a), -v.to_integer());
            }
        }
        let mut constants = HashMap::new();
        let mut sum = HashMap::new();
        for a in 0..2 * r {
            for c in 0..2 * r {
                let s = add(&full_coords(rs, a), &full_coords(rs, c));
                if let Some(t) = full_index(rs, &s) {
                    let v = b.n(a, c);
                    if !v.is_integer() || v.is_zero() {
                        return Err(Error::Internal(format!("bad constant N({a},{c}) = {v}")));
                    }
                    constants.insert((a, c), v.to_integer());
                    sum.insert((a, c), t);
                }
            }
        }
        Ok(ChevalleyBasis {
            num_pos: r,
            constants,
            sum,
        })
    }

    /// `N(a, b)` for full root indices, or `None` when `a + b` is not a root.
    pub fn constant(&self, a: usize, b: usize) -> Option<(i64, usize)> {
        self.constants
            .get(&(a, b))
            .map(|&n| (n, self.sum[&(a, b)]))
    }

    pub fn num_positive(&self) -> usize {
        self.num_pos
    }

    pub fn sign_convention(&self) -> &'static str {
        SIGN_CONVENTION
    }

    /// All constants as `(a, b, N)` triples with roots in simple-root
    /// coordinates, sorted for deterministic output.
    pub fn triples(&self, rs: &RootSystem) -> Vec<(Vec<i64>, Vec<i64>, i64)> {
        let mut keys: Vec<&(usize, usize)> = self.constants.keys().collect();
        keys.sort();
        keys.into_iter()
            .map(|&(a, b)| {
                (
                    full_coords(rs, a),
                    full_coords(rs, b),
                    self.constants[&(a, b)],
                )
            })
            .collect()
    }
}

fn negate(v: &[i64]) -> Vec<i64> {
    v.iter().map(|c| -c).collect()
}

/// Sparse element of the Lie algebra in the Chevalley basis.
pub type LieElement = BTreeMap<usize, Q>;

/// A split semisimple Lie algebra with its Chevalley basis.
///
/// Basis indices: `x_beta` is `i`, `y_beta` is `r + i` for the `i`-th positive
/// root, and `h_j` (simple coroot) is `2r + j`.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    rs: RootSystem,
    chev: ChevalleyBasis,
    table: Vec<Vec<Vec<(usize, i64)>>>,
}

impl LieAlgebra {
    pub fn new(rs: RootSystem) -> Result<Self> {
        let chev = ChevalleyBasis::new(&rs)?;
        let r = rs.num_positive();
        let l = rs.rank();
        let dim = 2 * r + l;
        let mut table = vec![vec![Vec::new(); dim]; dim];
        for a in 0..dim {
            for b in 0..dim {
                table[a][b] = raw_bracket(&rs, &chev, a, b);
            }
        }
        let alg = LieAlgebra { rs, chev, table };
        if alg.rs.num_positive() <= 50 {
            alg.verify_jacobi()?;
        }
        Ok(alg)
    }

    pub fn from_type_str(s: &str) -> Result<Self> {
        LieAlgebra::new(RootSystem::from_type_str(s)?)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn chevalley(&self) -> &ChevalleyBasis {
        &self.chev
    }

    pub fn dim(&self) -> usize {
        self.table.len()
    }

    pub fn x(&self, i: usize) -> usize {
        i
    }

    pub fn y(&self, i: usize) -> usize {
        self.rs.num_positive() + i
    }

    pub fn h(&self, j: usize) -> usize {
        2 * self.rs.num_positive() + j
    }

    /// Weight of a basis element in simple-root coordinates.
    pub fn basis_weight(&self, g: usize) -> Vec<i64> {
        let r = self.rs.num_positive();
        if g < 2 * r {
            full_coords(&self.rs, g)
        } else {
            vec![0; self.rs.rank()]
        }
    }

    pub fn bracket_basis(&self, a: usize, b: usize) -> &[(usize, i64)] {
        &self.table[a][b]
    }

    pub fn bracket(&self, u: &LieElement, v: &LieElement) -> LieElement {
        let mut out = LieElement::new();
        for (&a, ca) in u {
            for (&b, cb) in v {
                for &(g, n) in &self.table[a][b] {
                    *out.entry(g).or_insert_with(Q::zero) += ca * cb * n;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn basis_element(&self, g: usize) -> LieElement {
        LieElement::from([(g, Q::from(1))])
    }

    /// `ad(u)^k (v)`.
    pub fn ad_power(&self, u: &LieElement, k: usize, v: &LieElement) -> LieElement {
        (0..k).fold(v.clone(), |acc, _| self.bracket(u, &acc))
    }

    /// Exhaustive Jacobi identity over all basis triples.
    pub fn verify_jacobi(&self) -> Result<()> {
        let dim = self.dim();
        for a in 0..dim {
            for b in a + 1..dim {
                for c in b + 1..dim {
                    let ea = self.basis_element(a);
                    let eb = self.basis_element(b);
                    let ec = self.basis_element(c);
                    let mut total = self.bracket(&ea, &self.bracket(&eb, &ec));
                    for (k, v) in self.bracket(&eb, &self.bracket(&ec, &ea)) {
                        *total.entry(k).or_insert_with(Q::zero) += v;
                    }
                    for (k, v) in self.bracket(&ec, &self.bracket(&ea, &eb)) {
                        *total.entry(k).or_insert_with(Q::zero) += v;
                    }
                    if total.values().any(|v| !v.is_zero()) {
                        return Err(Error::Internal(format!(
                            "Jacobi identity fails on basis triple ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn describe(&self, g: usize) -> String {
        let r = self.rs.num_positive();
        if g < r {
            format!("x{:?}", self.rs.root(g))
        } else if g < 2 * r {
            format!("y{:?}", self.rs.root(g - r))
        } else {
            format!("h{}", g - 2 * r + 1)
        }
    }
}

fn raw_bracket(rs: &RootSystem, chev: &ChevalleyBasis, a: usize, b: usize) -> Vec<(usize, i64)> {
    let r = rs.num_positive();
    let l = rs.rank();
    let is_root = |g: usize| g < 2 * r;
    match (is_root(a), is_root(b)) {
        (true, true) => {
            let opposite = if a < r { a + r } else { a - r };
            if b == opposite {
                // [e_beta, e_{-beta}] = h_beta, and h_{-beta} = -h_beta
                let (beta, sign) = if a < r { (a, 1) } else { (a - r, -1) };
                rs.coroot_coeffs(rs.root(beta))
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| *c != 0)
                    .map(|(j, c)| (2 * r + j, sign * c))
                    .collect()
            } else {
                match chev.constant(a, b) {
                    Some((n, s)) => vec![(s, n)],
                    None => Vec::new(),
                }
            }
        }
        (false, true) => {
            let j = a - 2 * r;
            let p = rs.root_pairing_simple(&full_coords(rs, b), j);
            if p == 0 {
                Vec::new()
            } else {
                vec![(b, p)]
            }
        }
        (true, false) => {
            let j = b - 2 * r;
            debug_assert!(j < l);
            let p = rs.root_pairing_simple(&full_coords(rs, a), j);
            if p == 0 {
                Vec::new()
            } else {
                vec![(a, -p)]
            }
        }
        (false, false) => Vec::new(),
    }
}

/// Versioned JSON document for a root system together with its constants.
#[derive(Serialize)]
pub struct RootSystemDoc {
    pub schema: u32,
    pub cartan_type: String,
    pub rank: usize,
    pub simple_roots: Vec<Vec<i64>>,
    pub positive_roots: Vec<Vec<i64>>,
    pub heights: Vec<i64>,
    pub cartan_matrix: Vec<Vec<i64>>,
    pub inner_form: Vec<Vec<serde_json::Value>>,
    pub chevalley: ChevalleyDoc,
}

#[derive(Serialize)]
pub struct ChevalleyDoc {
    pub sign_convention: String,
    pub constants: Vec<(Vec<i64>, Vec<i64>, i64)>,
}

impl RootSystemDoc {
    pub fn new(alg: &LieAlgebra) -> Self {
        let rs = alg.root_system();
        RootSystemDoc {
            schema: crate::SCHEMA_VERSION,
            cartan_type: rs.cartan_type().to_string(),
            rank: rs.rank(),
            simple_roots: (0..rs.rank()).map(|i| rs.simple_root(i)).collect(),
            positive_roots: rs.positive_roots().to_vec(),
            heights: rs.positive_roots().iter().map(|r| r.iter().sum()).collect(),
            cartan_matrix: rs.cartan_matrix().to_vec(),
            inner_form: rs
                .inner_form()
                .iter()
                .map(|row| row.iter().map(super::weight::q_json).collect())
                .collect(),
            chevalley: ChevalleyDoc {
                sign_convention: SIGN_CONVENTION.to_string(),
                constants: alg.chevalley().triples(rs),
            },
        }
    }
}
