//! Verma modules `M(lambda)` in a PBW basis `y_1^{n_1} ... y_r^{n_r} v+`.
//!
//! Products are normal-ordered by commutator substitution with every
//! intermediate result memoized. The maximal submodule is computed two ways:
//! as the radical of the contravariant form, and recursively as the largest
//! subspace whose images under all simple raising operators stay inside it
//! (`quotient_map`). Both are exposed so they can be compared.

mod characters;
mod jh;
mod window;

pub use characters::{
    freudenthal_char, freudenthal_levi, kostant_alternating_dim, kostant_count, kostant_count_in,
    parabolic_verma_char, verma_char, weyl_dim, CharacterWindow,
};
pub use jh::{jh_verma_bruteforce, JhFactor, JhOptions};
pub use window::{build_window, VermaWindow, WindowDoc, DEFAULT_MAX_DEPTH, ORDERING_TAG};

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{self, rat, Matrix, Rat};
use crate::roots::{LieAlgebra, LieElement, Weight};

/// Exponents over the positive roots, in PBW order.
pub type Monomial = Vec<u32>;
/// Sparse vector of a Verma module.
pub type Vector = BTreeMap<Monomial, Rat>;

/// Default window depth: 8 in rank 2, 6 in rank 3 (and the rank-based fallback
/// `max(2, 10 - 2 rank)` otherwise).
pub fn default_depth(rank: usize) -> usize {
    match rank {
        0 | 1 => 10,
        2 => 8,
        3 => 6,
        n => 10usize.saturating_sub(2 * n).max(2),
    }
}

pub fn q_to_rat(q: &crate::roots::Q) -> Rat {
    Rat::new((*q.numer()).into(), (*q.denom()).into())
}

pub(crate) fn add_scaled(acc: &mut Vector, v: &Vector, c: &Rat) {
    if c.is_zero() {
        return;
    }
    for (m, x) in v {
        let e = acc.entry(m.clone()).or_insert_with(Rat::zero);
        *e += x * c;
        if e.is_zero() {
            acc.remove(m);
        }
    }
}

/// All exponent vectors `nu` over `roots` with `sum nu_i roots_i = target`,
/// in descending lexicographic order of `nu`.
pub fn decompositions(roots: &[Vec<i64>], target: &[i64]) -> Vec<Vec<u32>> {
    fn go(roots: &[Vec<i64>], k: usize, rem: &mut Vec<i64>, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == roots.len() {
            if rem.iter().all(|&c| c == 0) {
                out.push(cur.clone());
            }
            return;
        }
        let beta = &roots[k];
        let max = beta
            .iter()
            .zip(rem.iter())
            .filter(|(b, _)| **b > 0)
            .map(|(b, r)| r / b)
            .min()
            .unwrap_or(0)
            .max(0);
        for m in (0..=max).rev() {
            for (r, b) in rem.iter_mut().zip(beta) {
                *r -= m * b;
            }
            cur.push(m as u32);
            go(roots, k + 1, rem, cur, out);
            cur.pop();
            for (r, b) in rem.iter_mut().zip(beta) {
                *r += m * b;
            }
        }
    }
    if target.iter().any(|&c| c < 0) {
        return Vec::new();
    }
    let mut out = Vec::new();
    go(roots, 0, &mut target.to_vec(), &mut Vec::new(), &mut out);
    out
}

pub struct VermaModule {
    alg: Arc<LieAlgebra>,
    lambda: Weight,
    labels: Vec<Rat>,
    cache: HashMap<(usize, Monomial), Vector>,
    spaces: HashMap<Vec<i64>, Vec<Monomial>>,
    quotient: HashMap<Vec<i64>, Matrix>,
    grams: HashMap<Vec<i64>, Matrix>,
}

impl VermaModule {
    pub fn new(alg: Arc<LieAlgebra>, lambda: Weight) -> Result<Self> {
        let labels = alg
            .root_system()
            .dynkin_labels(&lambda)?
            .iter()
            .map(q_to_rat)
            .collect();
        Ok(VermaModule {
            alg,
            lambda,
            labels,
            cache: HashMap::new(),
            spaces: HashMap::new(),
            quotient: HashMap::new(),
            grams: HashMap::new(),
        })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.alg
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn rank(&self) -> usize {
        self.alg.root_system().rank()
    }

    pub fn highest_weight_vector(&self) -> Vector {
        let r = self.alg.root_system().num_positive();
        Vector::from([(vec![0; r], rat(1))])
    }

    /// Monomial `prod y_beta^{nu_beta}` as a vector.
    pub fn monomial(&self, nu: &[u32]) -> Vector {
        Vector::from([(nu.to_vec(), rat(1))])
    }

    /// Weight drop of a monomial in simple-root coordinates.
    pub fn drop_of(&self, m: &[u32]) -> Vec<i64> {
        let rs = self.alg.root_system();
        let mut d = vec![0; rs.rank()];
        for (i, &e) in m.iter().enumerate() {
            if e > 0 {
                for (x, c) in d.iter_mut().zip(rs.root(i)) {
                    *x += i64::from(e) * c;
                }
            }
        }
        d
    }

    /// Ordered PBW basis of the weight space `lambda - drop`.
    pub fn basis(&mut self, drop: &[i64]) -> &[Monomial] {
        if !self.spaces.contains_key(drop) {
            let b = decompositions(self.alg.root_system().positive_roots(), drop);
            self.spaces.insert(drop.to_vec(), b);
        }
        &self.spaces[drop]
    }

    pub fn dim(&mut self, drop: &[i64]) -> usize {
        self.basis(drop).len()
    }

    /// Action of a Chevalley basis element on a PBW monomial.
    pub fn act_basis(&mut self, g: usize, m: &Monomial) -> Vector {
        if let Some(v) = self.cache.get(&(g, m.clone())) {
            return v.clone();
        }
        let alg = Arc::clone(&self.alg);
        let rs = alg.root_system();
        let r = rs.num_positive();
        let first = m.iter().position(|&e| e > 0);
        let out = if g < r {
            match first {
                None => Vector::new(),
                Some(f) => {
                    // x y_f rest = y_f (x rest) + [x, y_f] rest
                    let mut rest = m.clone();
                    rest[f] -= 1;
                    let inner = self.act_basis(g, &rest);
                    let mut out = self.act(alg.y(f), &inner);
                    for &(h, c) in alg.bracket_basis(g, alg.y(f)) {
                        let t = self.act_basis(h, &rest);
                        add_scaled(&mut out, &t, &rat(c));
                    }
                    out
                }
            }
        } else if g < 2 * r {
            let f = g - r;
            match first {
                Some(h) if h < f => {
                    // y_f y_h rest = y_h (y_f rest) + [y_f, y_h] rest
                    let mut rest = m.clone();
                    rest[h] -= 1;
                    let inner = self.act_basis(g, &rest);
                    let mut out = self.act(alg.y(h), &inner);
                    for &(s, c) in alg.bracket_basis(g, alg.y(h)) {
                        let t = self.act_basis(s, &rest);
                        add_scaled(&mut out, &t, &rat(c));
                    }
                    out
                }
                _ => {
                    let mut n = m.clone();
                    n[f] += 1;
                    Vector::from([(n, rat(1))])
                }
            }
        } else {
            let j = g - 2 * r;
            let drop = self.drop_of(m);
            let s = &self.labels[j] - rat(rs.root_pairing_simple(&drop, j));
            if s.is_zero() {
                Vector::new()
            } else {
                Vector::from([(m.clone(), s)])
            }
        };
        self.cache.insert((g, m.clone()), out.clone());
        out
    }

    pub fn act(&mut self, g: usize, v: &Vector) -> Vector {
        let mut out = Vector::new();
        for (m, c) in v {
            let t = self.act_basis(g, m);
            add_scaled(&mut out, &t, c);
        }
        out
    }

    pub fn act_element(&mut self, u: &LieElement, v: &Vector) -> Vector {
        let mut out = Vector::new();
        for (&g, c) in u {
            let t = self.act(g, v);
            add_scaled(&mut out, &t, &q_to_rat(c));
        }
        out
    }

    /// Coordinates of a homogeneous vector in the basis of `drop`.
    pub fn coords(&mut self, drop: &[i64], v: &Vector) -> Vec<Rat> {
        let basis = self.basis(drop).to_vec();
        basis
            .iter()
            .map(|m| v.get(m).cloned().unwrap_or_else(Rat::zero))
            .collect()
    }

    pub fn from_coords(&mut self, drop: &[i64], c: &[Rat]) -> Vector {
        self.basis(drop)
            .iter()
            .zip(c)
            .filter(|(_, x)| !x.is_zero())
            .map(|(m, x)| (m.clone(), x.clone()))
            .collect()
    }

    /// Matrix of a basis element `g` of weight `-beta` or `+beta` from the space
    /// at `drop` to the space at `drop - wt(g)`: rows index the target basis.
    pub fn matrix(&mut self, g: usize, drop: &[i64]) -> Option<Matrix> {
        let wt = self.alg.basis_weight(g);
        let target: Vec<i64> = drop.iter().zip(&wt).map(|(d, w)| d - w).collect();
        if target.iter().any(|&c| c < 0) {
            return None;
        }
        let src = self.basis(drop).to_vec();
        let tgt_dim = self.dim(&target);
        let mut m = linalg::zeros(tgt_dim, src.len());
        for (j, mono) in src.iter().enumerate() {
            let v = self.act_basis(g, mono);
            let col = self.coords(&target, &v);
            for (i, x) in col.into_iter().enumerate() {
                m[i][j] = x;
            }
        }
        Some(m)
    }

    /// Contravariant form on the space at `drop`:
    /// `G[nu][tau]` is the coefficient of `v+` in `sigma(y^nu) y^tau v+`.
    pub fn gram(&mut self, drop: &[i64]) -> Matrix {
        if let Some(g) = self.grams.get(drop) {
            return g.clone();
        }
        let basis = self.basis(drop).to_vec();
        let n = basis.len();
        let g = if drop.iter().all(|&c| c == 0) {
            vec![vec![rat(1)]]
        } else {
            let mut g = linalg::zeros(n, n);
            // sigma(y_f y^{nu'}) = sigma(y^{nu'}) x_f, so row nu of G is row nu'
            // of the smaller Gram matrix composed with the matrix of x_f
            let mut by_first: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            for (i, m) in basis.iter().enumerate() {
                let f = m.iter().position(|&e| e > 0).expect("non-zero drop");
                by_first.entry(f).or_default().push(i);
            }
            for (f, rows) in by_first {
                let x = self.matrix(self.alg.x(f), drop).expect("raising stays in window");
                let lower: Vec<i64> = drop
                    .iter()
                    .zip(self.alg.root_system().root(f))
                    .map(|(d, b)| d - b)
                    .collect();
                let lower_basis = self.basis(&lower).to_vec();
                let lg = self.gram(&lower);
                for i in rows {
                    let mut m = basis[i].clone();
                    m[f] -= 1;
                    let k = lower_basis.iter().position(|b| *b == m).expect("sub-monomial");
                    for (j, cell) in g[i].iter_mut().enumerate() {
                        let mut s = Rat::zero();
                        for (t, lv) in lg[k].iter().enumerate() {
                            if !lv.is_zero() && !x[t][j].is_zero() {
                                s += lv * &x[t][j];
                            }
                        }
                        *cell = s;
                    }
                }
            }
            g
        };
        self.grams.insert(drop.to_vec(), g.clone());
        g
    }

    /// Rows are functionals spanning the dual of `L(lambda)` at `drop`; their
    /// common kernel is the maximal submodule at that weight.
    pub fn quotient_map(&mut self, drop: &[i64]) -> Matrix {
        if let Some(p) = self.quotient.get(drop) {
            return p.clone();
        }
        let p = if drop.iter().all(|&c| c == 0) {
            vec![vec![rat(1)]]
        } else {
            let n = self.dim(drop);
            let mut stacked: Matrix = Vec::new();
            for i in 0..self.rank() {
                if drop[i] == 0 {
                    continue;
                }
                let simple = self.alg.root_system().simple_index(i);
                let x = self.matrix(self.alg.x(simple), drop).expect("drop[i] > 0");
                let mut lower = drop.to_vec();
                lower[i] -= 1;
                let pl = self.quotient_map(&lower);
                let inner = x.len();
                stacked.extend(linalg::matmul(&pl, &x, inner, n));
            }
            linalg::row_basis(&stacked)
        };
        self.quotient.insert(drop.to_vec(), p.clone());
        p
    }

    /// `dim L(lambda)_{lambda - drop}`.
    pub fn simple_dim(&mut self, drop: &[i64]) -> usize {
        self.quotient_map(drop).len()
    }

    /// Image of a homogeneous vector in `L(lambda)` (coordinates w.r.t. the
    /// rows of `quotient_map`).
    pub fn project(&mut self, drop: &[i64], v: &Vector) -> Vec<Rat> {
        let c = self.coords(drop, v);
        let p = self.quotient_map(drop);
        p.iter()
            .map(|row| row.iter().zip(&c).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn in_maximal_submodule(&mut self, drop: &[i64], v: &Vector) -> bool {
        self.project(drop, v).iter().all(Zero::is_zero)
    }

    /// Vectors killed by every simple raising operator.
    pub fn singular_vectors(&mut self, drop: &[i64]) -> Vec<Vector> {
        let n = self.dim(drop);
        if drop.iter().all(|&c| c == 0) {
            return vec![self.highest_weight_vector()];
        }
        let mut stacked: Matrix = Vec::new();
        for i in 0..self.rank() {
            let simple = self.alg.root_system().simple_index(i);
            if let Some(x) = self.matrix(self.alg.x(simple), drop) {
                stacked.extend(x);
            }
        }
        linalg::kernel(&stacked, n)
            .into_iter()
            .map(|c| self.from_coords(drop, &c))
            .collect()
    }

    /// Drops of height at most `depth`, by height then descending lex.
    pub fn drops_up_to(&self, depth: usize) -> Vec<Vec<i64>> {
        drops_up_to(self.rank(), depth)
    }
}

/// All `mu` in `Z_{>=0}^rank` with `sum mu <= depth`, by height then descending lex.
pub fn drops_up_to(rank: usize, depth: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for h in 0..=depth as i64 {
        let mut level = Vec::new();
        compositions(rank, h, &mut Vec::new(), &mut level);
        level.sort_by(|a, b| b.cmp(a));
        out.extend(level);
    }
    out
}

fn compositions(parts: usize, total: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if parts == 1 {
        cur.push(total);
        out.push(cur.clone());
        cur.pop();
        return;
    }
    for k in 0..=total {
        cur.push(k);
        compositions(parts - 1, total - k, cur, out);
        cur.pop();
    }
}

pub(crate) fn check_depth(depth: usize, max: usize) -> Result<()> {
    if depth > max {
        return Err(Error::BoundExceeded(format!(
            "depth {depth} exceeds the configured maximum {max}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::RootSystem;
    use proptest::prelude::*;

    fn module(t: &str, lam: &[i64]) -> VermaModule {
        let alg = Arc::new(LieAlgebra::from_type_str(t).unwrap());
        let w = alg.root_system().weight_i64(lam).unwrap();
        VermaModule::new(alg, w).unwrap()
    }

    fn factorial(n: i64) -> i64 {
        (1..=n).product()
    }

    #[test]
    fn decompositions_a2() {
        let a2 = RootSystem::from_type_str("A2").unwrap();
        let d = decompositions(a2.positive_roots(), &[2, 2]);
        assert_eq!(d, vec![vec![2, 2, 0], vec![1, 1, 1], vec![0, 0, 2]]);
    }

    #[test]
    fn sl2_chain() {
        for m in [-3i64, -1, 0, 2, 5] {
            let mut v = module("A1", &[m]);
            for n in 0..=6u32 {
                let mut u = v.monomial(&[n]);
                for _ in 0..n {
                    u = v.act(v.algebra().x(0), &u);
                }
                let want: i64 = factorial(n as i64) * (0..n as i64).map(|i| m - i).product::<i64>();
                assert_eq!(u.get(&vec![0]).cloned().unwrap_or_else(Rat::zero), rat(want));
            }
        }
    }

    #[test]
    fn sl2_gram() {
        let mut v = module("A1", &[3]);
        assert_eq!(v.gram(&[0]), vec![vec![rat(1)]]);
        assert_eq!(v.gram(&[1]), vec![vec![rat(3)]]);
        assert_eq!(v.gram(&[4]), vec![vec![rat(0)]]);
        assert_eq!(v.simple_dim(&[4]), 0);
        assert_eq!(v.simple_dim(&[3]), 1);
        let s = v.singular_vectors(&[4]);
        assert_eq!(s, vec![v.monomial(&[4])]);
        assert!(v.singular_vectors(&[2]).is_empty());
    }

    #[test]
    fn antidominant_is_simple() {
        let mut v = module("A1", &[-2]);
        for n in 0..8 {
            assert_eq!(v.simple_dim(&[n]), 1);
            assert_ne!(v.gram(&[n])[0][0], rat(0));
        }
        let mut a = module("A2", &[-1, -1]);
        for d in a.drops_up_to(5) {
            if d.iter().any(|&c| c > 0) {
                assert!(a.singular_vectors(&d).is_empty(), "{d:?}");
            }
            assert_eq!(a.simple_dim(&d), a.dim(&d));
        }
    }

    #[test]
    fn lemma_x_n_y_n() {
        // x = x_beta, y = y_gamma with [x,[x,y]] = 0 and x v+ = 0
        for t in ["A2", "B2", "G2"] {
            let alg = Arc::new(LieAlgebra::from_type_str(t).unwrap());
            let rs = alg.root_system().clone();
            let r = rs.num_positive();
            let mut v = VermaModule::new(Arc::clone(&alg), rs.weight_i64(&vec![-2; rs.rank()]).unwrap()).unwrap();
            for b in 0..r {
                for c in 0..r {
                    let x = alg.basis_element(alg.x(b));
                    let y = alg.basis_element(alg.y(c));
                    let xy = alg.bracket(&x, &y);
                    if !alg.bracket(&x, &xy).is_empty() {
                        continue;
                    }
                    for n in 1..=3 {
                        let mut lhs = v.highest_weight_vector();
                        for _ in 0..n {
                            lhs = v.act_element(&y, &lhs);
                        }
                        for _ in 0..n {
                            lhs = v.act_element(&x, &lhs);
                        }
                        let mut rhs = v.highest_weight_vector();
                        for _ in 0..n {
                            rhs = v.act_element(&xy, &rhs);
                        }
                        let f = rat(factorial(n));
                        let rhs: Vector = rhs.into_iter().map(|(m, c)| (m, c * &f)).collect();
                        assert_eq!(lhs, rhs, "{t} {b} {c} {n}");
                    }
                }
            }
        }
    }

    #[test]
    fn gram_radical_equals_quotient_kernel() {
        for (t, lam) in [("A2", vec![0, 0]), ("A2", vec![1, -2]), ("B2", vec![0, 1]), ("G2", vec![1, 0])] {
            let mut v = module(t, &lam);
            for d in v.drops_up_to(5) {
                let n = v.dim(&d);
                let g = v.gram(&d);
                let p = v.quotient_map(&d);
                assert_eq!(linalg::rank(&g), p.len(), "{t} {lam:?} {d:?}");
                // every vector of the Gram radical is killed by the projection
                for k in linalg::kernel(&g, n) {
                    assert!(p.iter().all(|row| row.iter().zip(&k).map(|(a, b)| a * b).sum::<Rat>().is_zero()));
                }
            }
        }
    }

    #[test]
    fn chevalley_relations_on_module() {
        // [a, b] acts as a b - b a on a few vectors
        let mut v = module("B2", &[1, -1]);
        let alg = Arc::new(LieAlgebra::from_type_str("B2").unwrap());
        let vecs = [v.monomial(&[1, 0, 1, 0]), v.monomial(&[0, 2, 0, 1])];
        for u in &vecs {
            for a in 0..alg.dim() {
                for b in 0..alg.dim() {
                    let ab = v.act(b, u);
                    let ab = v.act(a, &ab);
                    let ba = v.act(a, u);
                    let ba = v.act(b, &ba);
                    let mut lhs = ab;
                    add_scaled(&mut lhs, &ba, &rat(-1));
                    let br = alg.bracket(&alg.basis_element(a), &alg.basis_element(b));
                    let rhs = v.act_element(&br, u);
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn gram_symmetric_and_dims_match_kostant(
            t in prop::sample::select(vec!["A2", "B2", "G2"]),
            a in -3i64..3, b in -3i64..3,
        ) {
            let mut v = module(t, &[a, b]);
            let rs = v.algebra().root_system().clone();
            for d in v.drops_up_to(4) {
                prop_assert_eq!(v.dim(&d) as u64, kostant_count(&rs, &d));
                let g = v.gram(&d);
                for i in 0..g.len() {
                    for j in 0..g.len() {
                        prop_assert_eq!(&g[i][j], &g[j][i]);
                    }
                }
            }
        }
    }
}
