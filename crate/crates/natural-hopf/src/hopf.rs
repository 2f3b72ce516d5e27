//! The Hopf algebra spanned by reduced forests: concatenation product,
//! coproduct by admissible cuts (and, independently, by factorizations of
//! terms), counit, antipode, dimensions and symmetry classification.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::lincomb::TensorComb;
use crate::{Forest, LinComb, Signature, Term};

pub type ForestComb = LinComb<Forest>;
pub type ForestTensor = TensorComb<Forest>;

pub fn product(x: &ForestComb, y: &ForestComb) -> ForestComb {
    x.mul(y)
}

/// Coproduct of a single basis element, summed over admissible pairs.
pub fn coproduct_basis(f: &Forest) -> ForestTensor {
    let f = f.reduce();
    let mut out = LinComb::zero();
    for pair in f.admissible_pairs() {
        let upper = f.restrict_mask(pair.upper_mask());
        let lower = f.restrict_mask(&pair.lower_mask());
        out.add_term((upper, lower), 1);
    }
    out
}

pub fn coproduct(x: &ForestComb) -> ForestTensor {
    x.flat_map(coproduct_basis)
}

/// Every way of writing `t` as an upper term grafted with a sequence of
/// lower terms (one per leaf of the upper term, leaves included).
pub fn factorizations(t: &Term) -> Vec<(Term, Vec<Term>)> {
    let mut out = alloc::vec![(Term::Leaf, alloc::vec![t.clone()])];
    if let Term::Node(g, children) = t {
        if children.is_empty() {
            out.push((t.clone(), Vec::new()));
            return out;
        }
        let per_child: Vec<Vec<(Term, Vec<Term>)>> =
            children.iter().map(factorizations).collect();
        for pick in per_child.iter().map(|v| v.iter()).multi_cartesian_product() {
            let upper = Term::Node(*g, pick.iter().map(|(y, _)| y.clone()).collect());
            let lower = pick.iter().flat_map(|(_, w)| w.iter().cloned()).collect();
            out.push((upper, lower));
        }
    }
    out
}

/// Coproduct of a term computed from its factorizations.
pub fn coproduct_via_factorizations(t: &Term) -> ForestTensor {
    let mut out = LinComb::zero();
    for (upper, lower) in factorizations(t) {
        let upper = Forest::from(upper).reduce();
        let lower = Forest::new(lower).reduce();
        out.add_term((upper, lower), 1);
    }
    out
}

/// Multiplicative extension of [`coproduct_via_factorizations`] to forests.
pub fn coproduct_via_factorizations_forest(f: &Forest) -> ForestTensor {
    f.terms()
        .iter()
        .fold(ForestTensor::one(), |acc, t| {
            acc.mul(&coproduct_via_factorizations(t))
        })
}

pub fn counit(x: &ForestComb) -> BigInt {
    x.coefficient(&Forest::empty())
}

/// The antipode, from the recursion `S(f) = -f - sum S(f') f''` over the
/// nontrivial terms of the coproduct.
pub fn antipode(x: &ForestComb) -> ForestComb {
    let mut memo = BTreeMap::new();
    x.flat_map(|f| antipode_basis(&f.reduce(), &mut memo))
}

fn antipode_basis(f: &Forest, memo: &mut BTreeMap<Forest, ForestComb>) -> ForestComb {
    if f.is_empty() {
        return ForestComb::one();
    }
    if let Some(known) = memo.get(f) {
        return known.clone();
    }
    let mut s = ForestComb::basis(f.clone()).scaled(&-BigInt::one());
    for ((upper, lower), c) in &coproduct_basis(f) {
        if upper.is_empty() || lower.is_empty() {
            continue;
        }
        let head = antipode_basis(upper, memo);
        s.add_scaled(&head.mul(&ForestComb::basis(lower.clone())), &-c);
    }
    memo.insert(f.clone(), s.clone());
    s
}

/// Number of terms of each degree `0..=n_max`, from `T = 1 + z S(T)` where
/// `S` counts generators by arity.
pub fn term_counts(sig: &Signature, n_max: usize) -> Vec<BigInt> {
    let profile = sig.profile();
    let mut t: Vec<BigInt> = alloc::vec![BigInt::one()];
    for n in 1..=n_max {
        // [z^(n-1)] of sum_k profile[k] T^k, using only known coefficients
        let mut power: Vec<BigInt> = alloc::vec![BigInt::one()];
        let mut total = BigInt::zero();
        for (k, &count) in profile.iter().enumerate() {
            if k > 0 {
                power = truncated_product(&power, &t, n);
            }
            if count > 0 {
                if let Some(c) = power.get(n - 1) {
                    total += c * count;
                }
            }
        }
        t.push(total);
    }
    t
}

fn truncated_product(a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
    let mut out = alloc::vec![BigInt::zero(); len.min(a.len() + b.len() - 1)];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            if i + j < out.len() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Dimensions of the homogeneous components of degrees `0..=n_max`: reduced
/// forests are sequences of terms of positive degree.
pub fn hilbert_dims(sig: &Signature, n_max: usize) -> Vec<BigInt> {
    let t = term_counts(sig, n_max);
    let mut d: Vec<BigInt> = alloc::vec![BigInt::one()];
    for n in 1..=n_max {
        let mut total = BigInt::zero();
        for k in 1..=n {
            total += &t[k] * &d[n - k];
        }
        d.push(total);
    }
    d
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Symmetry {
    pub commutative: bool,
    pub cocommutative: bool,
}

/// Symmetry of the product and coproduct, read off the profile.
pub fn classify_profile(sig: &Signature) -> Symmetry {
    let profile = sig.profile();
    Symmetry {
        commutative: profile.is_empty() || profile == [1],
        cocommutative: profile.len() <= 1 || profile == [0, 1],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions_of_small_profiles() {
        let dims = |p: &[usize], n| -> Vec<i64> {
            hilbert_dims(&Signature::from_profile(p), n)
                .iter()
                .map(|x| i64::try_from(x).unwrap())
                .collect()
        };
        assert_eq!(dims(&[0, 2], 4), [1, 2, 8, 32, 128]);
        assert_eq!(dims(&[0, 0, 1], 4), [1, 1, 3, 10, 35]);
        assert_eq!(dims(&[], 3), [1, 0, 0, 0]);
        assert_eq!(dims(&[0, 1, 1, 1], 2), [1, 3, 27]);
    }

    #[test]
    fn classification() {
        let c = |p: &[usize]| {
            let s = classify_profile(&Signature::from_profile(p));
            (s.commutative, s.cocommutative)
        };
        assert_eq!(c(&[1]), (true, true));
        assert_eq!(c(&[0, 1]), (false, true));
        assert_eq!(c(&[0, 1, 1, 1]), (false, false));
        assert_eq!(c(&[3]), (false, true));
        assert_eq!(c(&[]), (true, true));
    }

    #[test]
    fn leaf_factorization() {
        let t = coproduct_via_factorizations(&Term::Leaf);
        assert_eq!(t, ForestTensor::one());
    }
}
