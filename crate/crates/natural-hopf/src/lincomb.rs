//! Finitely supported integer linear combinations over an ordered basis.

use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Basis sets closed under an associative concatenation with a unit.
pub trait Monoid: Ord + Clone {
    fn unit() -> Self;
    fn concat(&self, other: &Self) -> Self;
}

impl<A: Monoid, B: Monoid> Monoid for (A, B) {
    fn unit() -> Self {
        (A::unit(), B::unit())
    }

    fn concat(&self, other: &Self) -> Self {
        (self.0.concat(&other.0), self.1.concat(&other.1))
    }
}

impl<A: Monoid, B: Monoid, C: Monoid> Monoid for (A, B, C) {
    fn unit() -> Self {
        (A::unit(), B::unit(), C::unit())
    }

    fn concat(&self, other: &Self) -> Self {
        (
            self.0.concat(&other.0),
            self.1.concat(&other.1),
            self.2.concat(&other.2),
        )
    }
}

/// A linear combination; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, BigInt>,
}

/// Linear combination over pairs, used for tensor squares.
pub type TensorComb<L, R = L> = LinComb<(L, R)>;

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        let mut x = Self::zero();
        x.terms.insert(key, BigInt::one());
        x
    }

    pub fn add_term(&mut self, key: K, coeff: impl Into<BigInt>) {
        let coeff = coeff.into();
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LinComb<K>, factor: &BigInt) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * factor);
        }
    }

    pub fn add_assign(&mut self, other: &LinComb<K>) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &LinComb<K>) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), -c);
        }
    }

    pub fn scaled(&self, factor: &BigInt) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, factor);
        out
    }

    pub fn coefficient(&self, key: &K) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, BigInt> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, BigInt> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Applies `f` to every basis element and accumulates the images.
    pub fn map_keys<J: Ord + Clone>(&self, mut f: impl FnMut(&K) -> J) -> LinComb<J> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_term(f(k), c.clone());
        }
        out
    }

    /// Linear extension of a map from basis elements to linear combinations.
    pub fn flat_map<J: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<J>) -> LinComb<J> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Sums the given basis elements, each with coefficient 1.
    pub fn from_keys(keys: impl IntoIterator<Item = K>) -> Self {
        let mut out = Self::zero();
        for k in keys {
            out.add_term(k, BigInt::one());
        }
        out
    }

    pub fn into_vec(self) -> Vec<(K, BigInt)> {
        self.terms.into_iter().collect()
    }
}

impl<K: Monoid> LinComb<K> {
    pub fn one() -> Self {
        Self::basis(K::unit())
    }

    /// Bilinear extension of the basis concatenation.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.concat(b), x * y);
            }
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, BigInt)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, BigInt)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<'a, K: Ord> IntoIterator for &'a LinComb<K> {
    type Item = (&'a K, &'a BigInt);
    type IntoIter = btree_map::Iter<'a, K, BigInt>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

/// Applies a linear map to each leg of a tensor.
pub fn map_legs<A, B, C, D>(
    x: &TensorComb<A, B>,
    mut left: impl FnMut(&A) -> LinComb<C>,
    mut right: impl FnMut(&B) -> LinComb<D>,
) -> TensorComb<C, D>
where
    A: Ord + Clone,
    B: Ord + Clone,
    C: Ord + Clone,
    D: Ord + Clone,
{
    let mut out = LinComb::zero();
    for ((a, b), c) in x {
        let la = left(a);
        let rb = right(b);
        for (ka, ca) in &la {
            for (kb, cb) in &rb {
                out.add_term((ka.clone(), kb.clone()), c * ca * cb);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
    struct W(Vec<u8>);

    impl Monoid for W {
        fn unit() -> Self {
            W(Vec::new())
        }
        fn concat(&self, o: &Self) -> Self {
            let mut v = self.0.clone();
            v.extend_from_slice(&o.0);
            W(v)
        }
    }

    #[test]
    fn cancellation_removes_keys() {
        let mut x = LinComb::basis(W(alloc::vec![1]));
        x.add_term(W(alloc::vec![1]), -1);
        assert!(x.is_zero());
    }

    #[test]
    fn product_is_bilinear() {
        let mut x = LinComb::basis(W(alloc::vec![1]));
        x.add_term(W(alloc::vec![2]), 2);
        let y = LinComb::basis(W(alloc::vec![3]));
        let z = x.mul(&y);
        assert_eq!(z.coefficient(&W(alloc::vec![2, 3])), BigInt::from(2));
        assert_eq!(LinComb::<W>::one().mul(&z), z);
    }
}
