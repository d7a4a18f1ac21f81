//! The free associative algebra over `Z` on a finite alphabet, and the two
//! expansions of `x^k z_1 ... z_n` and `[x^(k), z_1 ... z_n]` through iterated
//! commutators `[x^(i), z] = ad(x)^i z`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// An integral combination of words (all coefficients in the identities are
/// integers), kept with sorted keys and no zero terms.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreeElement {
    terms: BTreeMap<Vec<u8>, BigInt>,
}

impl FreeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(&[])
    }

    pub fn word(w: &[u8]) -> Self {
        Self::term(w, BigInt::one())
    }

    pub fn term(w: &[u8], c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w.to_vec(), c);
        }
        FreeElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, &BigInt)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        FreeElement {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    fn add_term(&mut self, w: Vec<u8>, c: BigInt) {
        match self.terms.entry(w) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn commutator(a: &Self, b: &Self) -> Self {
        &(a * b) - &(b * a)
    }

    /// `[x^(i), z]`.
    pub fn iterated_commutator(x: &Self, i: usize, z: &Self) -> Self {
        (0..i).fold(z.clone(), |acc, _| Self::commutator(x, &acc))
    }
}

impl Add for &FreeElement {
    type Output = FreeElement;
    fn add(self, rhs: &FreeElement) -> FreeElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &FreeElement {
    type Output = FreeElement;
    fn sub(self, rhs: &FreeElement) -> FreeElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Mul for &FreeElement {
    type Output = FreeElement;
    fn mul(self, rhs: &FreeElement) -> FreeElement {
        let mut out = FreeElement::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, ca * cb);
            }
        }
        out
    }
}

fn multinomial(parts: &[usize]) -> BigInt {
    let fact = |n: usize| (1..=n).fold(BigInt::one(), |acc, k| acc * k);
    let total: usize = parts.iter().sum();
    parts.iter().fold(fact(total), |acc, &p| acc / fact(p))
}

/// Compositions of `total` into `parts` non-negative pieces.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `sum_{i_1 + ... + i_{n+1} = k} (k; i) [x^(i_1), z_1] ... [x^(i_n), z_n] x^{i_{n+1}}`.
pub fn left_expansion(x: &FreeElement, zs: &[FreeElement], k: usize) -> FreeElement {
    let mut out = FreeElement::zero();
    for idx in compositions(k, zs.len() + 1) {
        let mut prod = FreeElement::one();
        for (z, &i) in zs.iter().zip(&idx) {
            prod = &prod * &FreeElement::iterated_commutator(x, i, z);
        }
        prod = &prod * &x.pow(idx[zs.len()]);
        out = &out + &prod.scale(&multinomial(&idx));
    }
    out
}

/// `sum_{i_1 + ... + i_n = k} (k; i) [x^(i_1), z_1] ... [x^(i_n), z_n]`.
pub fn bracket_expansion(x: &FreeElement, zs: &[FreeElement], k: usize) -> FreeElement {
    let mut out = FreeElement::zero();
    for idx in compositions(k, zs.len()) {
        let mut prod = FreeElement::one();
        for (z, &i) in zs.iter().zip(&idx) {
            prod = &prod * &FreeElement::iterated_commutator(x, i, z);
        }
        out = &out + &prod.scale(&multinomial(&idx));
    }
    out
}

fn product(zs: &[FreeElement]) -> FreeElement {
    zs.iter().fold(FreeElement::one(), |acc, z| &acc * z)
}

/// Both identities for `x, z_1, ..., z_n`.
pub fn identities_hold(x: &FreeElement, zs: &[FreeElement], k: usize) -> bool {
    let prod = product(zs);
    let lhs = &x.pow(k) * &prod;
    let bracket_lhs = FreeElement::iterated_commutator(x, k, &prod);
    lhs == left_expansion(x, zs, k) && bracket_lhs == bracket_expansion(x, zs, k)
}

/// Checks both identities with `x, z_1, ..., z_n` the generators of a free
/// algebra, and again with random combinations of short words (seeded).
pub fn commutator_expansion_check(k: usize, n: usize, seed: u64) -> bool {
    let gens: Vec<FreeElement> = (0..=n as u8).map(|a| FreeElement::word(&[a])).collect();
    if !identities_hold(&gens[0], &gens[1..], k) {
        return false;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let alphabet = 3u8;
    let mut random_element = || {
        let mut e = FreeElement::zero();
        for _ in 0..2 {
            let len = rng.gen_range(1..=2);
            let w: Vec<u8> = (0..len).map(|_| rng.gen_range(0..alphabet)).collect();
            let c = BigInt::from(rng.gen_range(-3i64..=3));
            e = &e + &FreeElement::term(&w, c);
        }
        e
    };
    let x = random_element();
    let zs: Vec<FreeElement> = (0..n).map(|_| random_element()).collect();
    identities_hold(&x, &zs, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: u8) -> FreeElement {
        FreeElement::word(&[a])
    }

    #[test]
    fn small_cases() {
        // x z = [x, z] + z x
        let (x, z) = (g(0), g(1));
        let lhs = &x * &z;
        let rhs = &FreeElement::commutator(&x, &z) + &(&z * &x);
        assert_eq!(lhs, rhs);
        assert_eq!(left_expansion(&x, &[z.clone()], 1), lhs);
        // k = 0 gives the product itself
        assert_eq!(left_expansion(&x, &[g(1), g(2)], 0), &g(1) * &g(2));
        assert_eq!(bracket_expansion(&x, &[g(1), g(2)], 0), &g(1) * &g(2));
    }

    #[test]
    fn exhaustive_small_range() {
        for k in 0..=4 {
            for n in 1..=3 {
                assert!(commutator_expansion_check(k, n, 7 + k as u64), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn a_wrong_coefficient_is_caught() {
        let (x, z1, z2) = (g(0), g(1), g(2));
        let mut bad = left_expansion(&x, &[z1.clone(), z2.clone()], 2);
        bad = &bad + &(&(&z1 * &z2) * &x);
        assert_ne!(&(&x.pow(2) * &z1) * &z2, bad);
    }
}
