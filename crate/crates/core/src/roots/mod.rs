//! Root systems of the classical and exceptional types, integral weights and
//! the dominance order.
//!
//! Roots are stored in simple-root coordinates. Positive roots are ordered by
//! height and, within one height, by descending lexicographic order of their
//! coordinates, so the simple roots come first and in index order. This order
//! is the PBW order used by the rest of the crate.

mod chevalley;
mod weight;

pub use chevalley::{ChevalleyBasis, ChevalleyDoc, LieAlgebra, LieElement, RootSystemDoc, SIGN_CONVENTION};
pub use weight::{Dominance, Weight, WeightBasis, Q};

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A Cartan type such as `B3` or `G2`. `gl` selects the `GL_{rank+1}` weight
/// convention (integer tuples) and is only allowed for type A.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
    pub gl: bool,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if !ok {
            return Err(Error::InvalidCartanType(format!("{family:?}{rank}")));
        }
        Ok(CartanType {
            family,
            rank,
            gl: false,
        })
    }

    /// `GL_n`, i.e. type `A_{n-1}` with tuple weights of length `n`.
    pub fn gl(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidCartanType(format!("GL{n}")));
        }
        Ok(CartanType {
            family: Family::A,
            rank: n - 1,
            gl: true,
        })
    }

    pub fn with_gl(self, gl: bool) -> Result<Self> {
        if gl && self.family != Family::A {
            return Err(Error::InvalidCartanType(format!(
                "GL weight convention requires type A, got {self}"
            )));
        }
        Ok(CartanType { gl, ..self })
    }

    /// Cartan matrix in Bourbaki numbering: `a[i][j] = <alpha_i, alpha_j^vee>`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            Family::A => (0..n - 1).for_each(|i| link(i, i + 1)),
            Family::B | Family::C => (0..n - 1).for_each(|i| link(i, i + 1)),
            Family::D => {
                (0..n - 2).for_each(|i| link(i, i + 1));
                link(n - 3, n - 1);
            }
            Family::E => {
                link(0, 2);
                link(1, 3);
                (2..n - 1).for_each(|i| link(i, i + 1));
            }
            Family::F => (0..3).for_each(|i| link(i, i + 1)),
            Family::G => link(0, 1),
        }
        match self.family {
            // last simple root short
            Family::B => a[n - 2][n - 1] = -2,
            // last simple root long
            Family::C => a[n - 1][n - 2] = -2,
            Family::F => a[1][2] = -2,
            Family::G => a[1][0] = -3,
            _ => {}
        }
        a
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gl {
            write!(f, "GL{}", self.rank + 1)
        } else {
            write!(f, "{:?}{}", self.family, self.rank)
        }
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidCartanType(s.to_string());
        if let Some(rest) = s.strip_prefix("GL").or_else(|| s.strip_prefix("gl")) {
            let n: usize = rest.parse().map_err(|_| bad())?;
            return CartanType::gl(n);
        }
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        CartanType::new(family, rank)
    }
}

impl Serialize for CartanType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A reduced root system with its positive roots, Cartan matrix and the
/// invariant form normalized so that long roots have squared length 2.
#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    positive: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    simple_sq_len: Vec<Q>,
    inner: Vec<Vec<Q>>,
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> Result<Self> {
        let cartan = cartan_type.cartan_matrix();
        let simple_sq_len = symmetrizer(&cartan)?;
        let n = cartan_type.rank;
        let inner = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| Q::from(cartan[i][j]) * simple_sq_len[j] / 2)
                    .collect()
            })
            .collect::<Vec<Vec<Q>>>();
        for i in 0..n {
            for j in 0..n {
                if inner[i][j] != inner[j][i] {
                    return Err(Error::Internal(format!(
                        "Cartan matrix of {cartan_type} is not symmetrizable"
                    )));
                }
            }
        }
        let positive = close_positive_roots(&cartan);
        let index = positive
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        Ok(RootSystem {
            cartan_type,
            cartan,
            positive,
            index,
            simple_sq_len,
            inner,
        })
    }

    pub fn from_type_str(s: &str) -> Result<Self> {
        RootSystem::new(s.parse()?)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn is_gl(&self) -> bool {
        self.cartan_type.gl
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots in PBW order.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn root(&self, i: usize) -> &[i64] {
        &self.positive[i]
    }

    /// Index of a positive root in PBW order.
    pub fn positive_index(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    /// Index of the simple root `alpha_i` in the positive root list.
    pub fn simple_index(&self, i: usize) -> usize {
        let mut e = vec![0; self.rank()];
        e[i] = 1;
        self.index[&e]
    }

    pub fn simple_root(&self, i: usize) -> Vec<i64> {
        let mut e = vec![0; self.rank()];
        e[i] = 1;
        e
    }

    pub fn is_root(&self, coords: &[i64]) -> bool {
        if self.index.contains_key(coords) {
            return true;
        }
        let neg: Vec<i64> = coords.iter().map(|c| -c).collect();
        self.index.contains_key(&neg)
    }

    pub fn highest_root(&self) -> &[i64] {
        self.positive.last().expect("root systems are non-empty")
    }

    /// Sum of the simple-root coordinates of a root (negative for negative roots).
    pub fn height(&self, coords: &[i64]) -> Result<i64> {
        if !self.is_root(coords) {
            return Err(Error::NotARoot(coords.to_vec()));
        }
        Ok(coords.iter().sum())
    }

    pub fn inner_form(&self) -> &[Vec<Q>] {
        &self.inner
    }

    /// `(a, b)` for vectors in simple-root coordinates.
    pub fn inner_product(&self, a: &[i64], b: &[i64]) -> Q {
        let mut acc = Q::zero();
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj != 0 {
                    acc += self.inner[i][j] * (ai * bj);
                }
            }
        }
        acc
    }

    pub fn sq_len(&self, root: &[i64]) -> Q {
        self.inner_product(root, root)
    }

    pub fn simple_sq_len(&self, i: usize) -> Q {
        self.simple_sq_len[i]
    }

    /// Coordinates of `beta^vee` in the basis of simple coroots.
    pub fn coroot_coeffs(&self, beta: &[i64]) -> Vec<i64> {
        let len = self.sq_len(beta);
        beta.iter()
            .enumerate()
            .map(|(j, &b)| {
                let c = Q::from(b) * self.simple_sq_len[j] / len;
                debug_assert!(c.is_integer());
                c.to_integer()
            })
            .collect()
    }

    /// `<beta, alpha_j^vee>` for a vector in root coordinates.
    pub fn root_pairing_simple(&self, beta: &[i64], j: usize) -> i64 {
        beta.iter()
            .enumerate()
            .map(|(i, &b)| b * self.cartan[i][j])
            .sum()
    }

    /// `<beta, alpha^vee>` for arbitrary roots `alpha`, `beta`.
    pub fn root_pairing(&self, beta: &[i64], alpha: &[i64]) -> i64 {
        let v = self.inner_product(beta, alpha) * 2 / self.sq_len(alpha);
        debug_assert!(v.is_integer());
        v.to_integer()
    }

    fn check_basis(&self, w: &Weight) -> Result<()> {
        match w.basis {
            WeightBasis::Fundamental if w.coords.len() == self.rank() => Ok(()),
            WeightBasis::GlTuple if self.is_gl() && w.coords.len() == self.rank() + 1 => Ok(()),
            _ => Err(Error::BasisMismatch(format!(
                "weight {w} ({:?}, length {}) does not fit {}",
                w.basis,
                w.coords.len(),
                self.cartan_type
            ))),
        }
    }

    /// Pairings `<lambda, alpha_i^vee>` with the simple coroots.
    pub fn dynkin_labels(&self, w: &Weight) -> Result<Vec<Q>> {
        self.check_basis(w)?;
        Ok(match w.basis {
            WeightBasis::Fundamental => w.coords.clone(),
            WeightBasis::GlTuple => w.coords.windows(2).map(|p| p[0] - p[1]).collect(),
        })
    }

    /// `<lambda, beta^vee>` for a root `beta` given in simple-root coordinates.
    pub fn coroot_pairing(&self, w: &Weight, beta: &[i64]) -> Result<Q> {
        if !self.is_root(beta) {
            return Err(Error::NotARoot(beta.to_vec()));
        }
        let labels = self.dynkin_labels(w)?;
        Ok(self
            .coroot_coeffs(beta)
            .iter()
            .zip(&labels)
            .map(|(&c, &l)| l * c)
            .sum())
    }

    pub fn zero_weight(&self) -> Weight {
        if self.is_gl() {
            Weight::gl_tuple(vec![0; self.rank() + 1])
        } else {
            Weight::fundamental(vec![0; self.rank()])
        }
    }

    /// Half sum of positive roots; for GL the tuple `(d, d-1, ..., 0)`.
    pub fn rho(&self) -> Weight {
        if self.is_gl() {
            let d = self.rank() as i64;
            Weight::gl_tuple((0..=d).rev().collect())
        } else {
            Weight::fundamental(vec![1; self.rank()])
        }
    }

    /// Half sum of the positive roots of the Levi factor spanned by `subset`,
    /// in simple-root coordinates (rational).
    pub fn rho_of_subsystem(&self, roots: &[usize]) -> Vec<Q> {
        let mut acc = vec![Q::zero(); self.rank()];
        for &r in roots {
            for (a, &c) in acc.iter_mut().zip(&self.positive[r]) {
                *a += Q::from(c) / 2;
            }
        }
        acc
    }

    /// Builds a weight in the natural basis of this root system.
    pub fn weight(&self, coords: Vec<Q>) -> Result<Weight> {
        let w = Weight {
            coords,
            basis: if self.is_gl() {
                WeightBasis::GlTuple
            } else {
                WeightBasis::Fundamental
            },
        };
        self.check_basis(&w)?;
        Ok(w)
    }

    pub fn weight_i64(&self, coords: &[i64]) -> Result<Weight> {
        self.weight(coords.iter().map(|&c| Q::from(c)).collect())
    }

    /// `lambda - sum_i drop_i alpha_i`.
    pub fn sub_roots(&self, w: &Weight, drop: &[i64]) -> Result<Weight> {
        self.check_basis(w)?;
        let mut coords = w.coords.clone();
        match w.basis {
            WeightBasis::Fundamental => {
                for (i, &m) in drop.iter().enumerate() {
                    if m != 0 {
                        for (c, &a) in coords.iter_mut().zip(&self.cartan[i]) {
                            *c -= Q::from(m * a);
                        }
                    }
                }
            }
            WeightBasis::GlTuple => {
                for (i, &m) in drop.iter().enumerate() {
                    coords[i] -= Q::from(m);
                    coords[i + 1] += Q::from(m);
                }
            }
        }
        Ok(Weight {
            coords,
            basis: w.basis,
        })
    }

    pub fn add_roots(&self, w: &Weight, v: &[i64]) -> Result<Weight> {
        let neg: Vec<i64> = v.iter().map(|c| -c).collect();
        self.sub_roots(w, &neg)
    }

    pub fn add_weights(&self, a: &Weight, b: &Weight) -> Result<Weight> {
        self.check_basis(a)?;
        self.check_basis(b)?;
        if a.basis != b.basis {
            return Err(Error::BasisMismatch("adding weights in different bases".into()));
        }
        Ok(Weight {
            coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect(),
            basis: a.basis,
        })
    }

    pub fn sub_weights(&self, a: &Weight, b: &Weight) -> Result<Weight> {
        self.add_weights(a, &b.scaled(-1))
    }

    /// Coordinates of `mu - nu` in the basis of simple roots, or `None` when the
    /// difference does not lie in the rational span of the roots.
    pub fn difference_in_roots(&self, mu: &Weight, nu: &Weight) -> Result<Option<Vec<Q>>> {
        self.check_basis(mu)?;
        self.check_basis(nu)?;
        if mu.basis != nu.basis {
            return Err(Error::BasisMismatch("comparing weights in different bases".into()));
        }
        let diff: Vec<Q> = mu.coords.iter().zip(&nu.coords).map(|(a, b)| a - b).collect();
        match mu.basis {
            WeightBasis::GlTuple => {
                if !diff.iter().copied().sum::<Q>().is_zero() {
                    return Ok(None);
                }
                let mut acc = Q::zero();
                Ok(Some(
                    diff[..self.rank()]
                        .iter()
                        .map(|d| {
                            acc += d;
                            acc
                        })
                        .collect(),
                ))
            }
            WeightBasis::Fundamental => {
                // labels(sum c_i alpha_i)_j = sum_i c_i a[i][j]; solve c^T A = diff^T
                let n = self.rank();
                let at: Vec<Vec<Q>> = (0..n)
                    .map(|j| (0..n).map(|i| Q::from(self.cartan[i][j])).collect())
                    .collect();
                Ok(Some(solve_small(at, diff)?))
            }
        }
    }

    /// Dominance order: `mu >= nu` iff `mu - nu` is a nonnegative combination of
    /// simple roots.
    pub fn dominance_compare(&self, mu: &Weight, nu: &Weight) -> Result<Dominance> {
        let Some(c) = self.difference_in_roots(mu, nu)? else {
            return Ok(Dominance::Incomparable);
        };
        let pos = c.iter().all(|x| !x.is_negative());
        let neg = c.iter().all(|x| !x.is_positive());
        Ok(match (pos, neg) {
            (true, true) => Dominance::Equal,
            (true, false) => Dominance::Greater,
            (false, true) => Dominance::Less,
            (false, false) => Dominance::Incomparable,
        })
    }

    /// Simple reflection `s_i` (linear action, not the dot action).
    pub fn reflect(&self, i: usize, w: &Weight) -> Result<Weight> {
        self.check_basis(w)?;
        let mut coords = w.coords.clone();
        match w.basis {
            WeightBasis::GlTuple => coords.swap(i, i + 1),
            WeightBasis::Fundamental => {
                let li = w.coords[i];
                for (c, &a) in coords.iter_mut().zip(&self.cartan[i]) {
                    *c -= li * a;
                }
            }
        }
        Ok(Weight {
            coords,
            basis: w.basis,
        })
    }

    /// Integral weights: all simple coroot pairings are integers.
    pub fn is_integral(&self, w: &Weight) -> Result<bool> {
        Ok(self.dynkin_labels(w)?.iter().all(|l| l.is_integer()))
    }

    /// Dominant integral: all simple coroot pairings are nonnegative integers.
    pub fn is_dominant(&self, w: &Weight) -> Result<bool> {
        Ok(self
            .dynkin_labels(w)?
            .iter()
            .all(|l| l.is_integer() && !l.is_negative()))
    }

    /// Dominant for the Levi factor spanned by the simple roots in `subset`.
    pub fn is_levi_dominant(&self, w: &Weight, subset: &[usize]) -> Result<bool> {
        let labels = self.dynkin_labels(w)?;
        Ok(subset
            .iter()
            .all(|&i| labels[i].is_integer() && !labels[i].is_negative()))
    }

    /// Positive roots lying in the span of the simple roots in `subset`.
    pub fn subsystem_positive(&self, subset: &[usize]) -> Vec<usize> {
        (0..self.num_positive())
            .filter(|&r| {
                self.positive[r]
                    .iter()
                    .enumerate()
                    .all(|(j, &c)| c == 0 || subset.contains(&j))
            })
            .collect()
    }
}

/// Squared lengths of the simple roots, long roots normalized to 2.
fn symmetrizer(a: &[Vec<i64>]) -> Result<Vec<Q>> {
    let n = a.len();
    let mut d: Vec<Option<Q>> = vec![None; n];
    d[0] = Some(Q::one());
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let di = d[i].expect("queued roots have lengths");
        for j in 0..n {
            if j != i && a[i][j] != 0 && d[j].is_none() {
                d[j] = Some(Q::from(a[j][i]) * di / a[i][j]);
                queue.push_back(j);
            }
        }
    }
    let d: Vec<Q> = d
        .into_iter()
        .map(|x| x.ok_or_else(|| Error::Internal("disconnected Dynkin diagram".into())))
        .collect::<Result<_>>()?;
    let max = d.iter().copied().max().expect("rank >= 1");
    Ok(d.into_iter().map(|x| x * 2 / max).collect())
}

/// Positive roots from the Cartan matrix by root-string closure, in PBW order.
fn close_positive_roots(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut known: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut layers: Vec<Vec<Vec<i64>>> = vec![(0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect()];
    for r in &layers[0] {
        known.insert(r.clone(), ());
    }
    loop {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in layers.last().expect("non-empty") {
            for j in 0..n {
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[j] -= 1;
                    if known.contains_key(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|i| beta[i] * a[i][j]).sum();
                let q = p - pairing;
                if q > 0 {
                    let mut up = beta.clone();
                    up[j] += 1;
                    if !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        for r in &next {
            known.insert(r.clone(), ());
        }
        layers.push(next);
    }
    let mut all: Vec<Vec<i64>> = layers.into_iter().flatten().collect();
    all.sort_by(|x, y| {
        let hx: i64 = x.iter().sum();
        let hy: i64 = y.iter().sum();
        hx.cmp(&hy).then_with(|| y.cmp(x))
    });
    all
}

/// Solves `m x = b` for a small invertible rational matrix.
fn solve_small(mut m: Vec<Vec<Q>>, mut b: Vec<Q>) -> Result<Vec<Q>> {
    let n = m.len();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .ok_or_else(|| Error::Internal("singular Cartan matrix".into()))?;
        m.swap(col, piv);
        b.swap(col, piv);
        let inv = m[col][col].recip();
        for k in col..n {
            m[col][k] *= inv;
        }
        b[col] *= inv;
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                for k in col..n {
                    let t = m[col][k] * f;
                    m[r][k] -= t;
                }
                let t = b[col] * f;
                b[r] -= t;
            }
        }
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::from_type_str(s).unwrap()
    }

    #[test]
    fn a2_positive_roots() {
        assert_eq!(rs("A2").positive_roots(), &[vec![1, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn positive_root_counts() {
        for (t, n) in [
            ("A1", 1),
            ("A3", 6),
            ("B2", 4),
            ("B3", 9),
            ("C3", 9),
            ("D4", 12),
            ("G2", 6),
            ("F4", 24),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
        ] {
            assert_eq!(rs(t).num_positive(), n, "{t}");
        }
    }

    #[test]
    fn g2_heights_and_highest_root() {
        let g2 = rs("G2");
        let heights: Vec<i64> = g2
            .positive_roots()
            .iter()
            .map(|r| g2.height(r).unwrap())
            .collect();
        assert_eq!(heights, vec![1, 1, 2, 3, 4, 5]);
        assert_eq!(g2.highest_root(), &[3, 2]);
        assert_eq!(g2.height(&[3, 2]).unwrap(), 5);
    }

    #[test]
    fn height_rejects_non_roots() {
        let a2 = rs("A2");
        assert_eq!(a2.height(&[1, 0]).unwrap(), 1);
        assert_eq!(a2.height(&[1, 1]).unwrap(), 2);
        assert_eq!(a2.height(&[-1, -1]).unwrap(), -2);
        assert!(matches!(a2.height(&[2, 0]), Err(Error::NotARoot(_))));
    }

    #[test]
    fn long_roots_have_length_two() {
        let b2 = rs("B2");
        assert_eq!(b2.sq_len(&[1, 0]), Q::from(2));
        assert_eq!(b2.sq_len(&[0, 1]), Q::from(1));
        let g2 = rs("G2");
        assert_eq!(g2.sq_len(&[1, 0]), Q::new(2, 3));
        assert_eq!(g2.sq_len(&[3, 2]), Q::from(2));
    }

    #[test]
    fn invalid_types() {
        assert!("E5".parse::<CartanType>().is_err());
        assert!("F3".parse::<CartanType>().is_err());
        assert!("G3".parse::<CartanType>().is_err());
        assert!("A0".parse::<CartanType>().is_err());
        assert!(CartanType::new(Family::B, 3).unwrap().with_gl(true).is_err());
        assert_eq!("GL3".parse::<CartanType>().unwrap().rank, 2);
    }

    #[test]
    fn rho_pairs_to_one() {
        for t in ["A2", "B3", "G2", "GL4"] {
            let r = rs(t);
            let rho = r.rho();
            for i in 0..r.rank() {
                assert_eq!(r.coroot_pairing(&rho, &r.simple_root(i)).unwrap(), Q::one());
            }
        }
    }

    #[test]
    fn coroot_pairings() {
        let gl2 = rs("GL2");
        let lam = Weight::gl_tuple(vec![5, 2]);
        assert_eq!(gl2.coroot_pairing(&lam, &[1]).unwrap(), Q::from(3));
        let a2 = rs("A2");
        let omega1 = Weight::fundamental(vec![1, 0]);
        assert_eq!(a2.coroot_pairing(&omega1, &[0, 1]).unwrap(), Q::zero());
        assert!(a2.coroot_pairing(&Weight::gl_tuple(vec![1, 0, 0]), &[1, 0]).is_err());
    }

    #[test]
    fn dominance_examples() {
        let gl3 = rs("GL3");
        let a = Weight::gl_tuple(vec![2, 0, 0]);
        let b = Weight::gl_tuple(vec![-1, 3, 0]);
        assert_eq!(gl3.dominance_compare(&a, &a).unwrap(), Dominance::Equal);
        assert_eq!(gl3.dominance_compare(&a, &b).unwrap(), Dominance::Greater);
        assert_eq!(gl3.dominance_compare(&b, &a).unwrap(), Dominance::Less);
        assert_eq!(
            gl3.difference_in_roots(&a, &b).unwrap().unwrap(),
            vec![Q::from(3), Q::zero()]
        );
        let a2 = rs("A2");
        let w1 = Weight::fundamental(vec![1, 0]);
        let w2 = Weight::fundamental(vec![0, 1]);
        assert_eq!(a2.dominance_compare(&w1, &w2).unwrap(), Dominance::Incomparable);
        assert!(a2.dominance_compare(&w1, &a).is_err());
    }

    #[test]
    fn height_is_additive() {
        for t in ["A3", "B3", "C3", "G2", "F4"] {
            let r = rs(t);
            for a in r.positive_roots() {
                assert!(r.height(a).unwrap() >= 1);
                for b in r.positive_roots() {
                    let s: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                    if r.is_root(&s) {
                        assert_eq!(
                            r.height(&s).unwrap(),
                            r.height(a).unwrap() + r.height(b).unwrap()
                        );
                    }
                }
            }
        }
    }
}
