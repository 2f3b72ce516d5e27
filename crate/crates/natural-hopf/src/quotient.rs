//! Quotients of free operads by content (multiassociative operad), by infix
//! reading (interstice operad) and by degree (associative operad): their
//! elements, compositions, the injection into forests, and closed-form
//! coproducts on phrases.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::binomial;

use crate::alphabet::{realize, ForestLikeAlphabet, Polynomial};
use crate::enumerate::{weak_compositions, TermCatalog};
use crate::lincomb::TensorComb;
use crate::{Error, Forest, Gen, LinComb, Monoid, Result, Signature, Term};

/// Entries of phrases: graded elements with a unit of degree 0.
pub trait Entry: Ord + Clone {
    fn degree(&self) -> usize;
}

/// A word of non-unit entries, with concatenation as product.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Phrase<T>(Vec<T>);

impl<T: Entry> Phrase<T> {
    /// Builds a phrase, dropping entries of degree 0.
    pub fn new(entries: impl IntoIterator<Item = T>) -> Self {
        Phrase(entries.into_iter().filter(|e| e.degree() > 0).collect())
    }

    pub fn entries(&self) -> &[T] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(Entry::degree).sum()
    }
}

impl<T: Entry> Ord for Phrase<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl<T: Entry> PartialOrd for Phrase<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Entry> Monoid for Phrase<T> {
    fn unit() -> Self {
        Phrase(Vec::new())
    }

    fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Phrase(v)
    }
}

/// A multiset of generators, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Multiset(Vec<Gen>);

impl Multiset {
    pub fn new(mut gens: Vec<Gen>) -> Self {
        gens.sort();
        Multiset(gens)
    }

    pub fn empty() -> Self {
        Multiset(Vec::new())
    }

    pub fn generators(&self) -> &[Gen] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn union(&self, other: &Multiset) -> Multiset {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Multiset::new(v)
    }

    /// Sum of the arities minus the size plus one; negative values mean no
    /// term has this content.
    pub fn arity(&self, sig: &Signature) -> isize {
        self.0.iter().map(|&g| sig.arity(g) as isize).sum::<isize>() - self.0.len() as isize + 1
    }

    fn counts(&self, generators: usize) -> Vec<usize> {
        let mut c = alloc::vec![0; generators];
        for g in &self.0 {
            c[g.index()] += 1;
        }
        c
    }

    fn from_counts(counts: &[usize]) -> Multiset {
        let mut v = Vec::new();
        for (g, &k) in counts.iter().enumerate() {
            v.extend(core::iter::repeat_n(Gen(g as u32), k));
        }
        Multiset(v)
    }
}

impl Ord for Multiset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Multiset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Entry for Multiset {
    fn degree(&self) -> usize {
        self.0.len()
    }
}

/// A word of generators of a binary signature.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SigWord(pub Vec<Gen>);

impl SigWord {
    pub fn letters(&self) -> &[Gen] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn arity(&self) -> usize {
        self.0.len() + 1
    }
}

impl Ord for SigWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for SigWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Entry for SigWord {
    fn degree(&self) -> usize {
        self.0.len()
    }
}

/// Occurrence counts of the generators of a signature whose generators all
/// share the same arity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CountVector(pub Vec<usize>);

impl Ord for CountVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for CountVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Entry for CountVector {
    fn degree(&self) -> usize {
        self.0.iter().sum()
    }
}

impl Entry for usize {
    fn degree(&self) -> usize {
        *self
    }
}

pub fn content(t: &Term) -> Multiset {
    Multiset::new(t.decorations())
}

/// Decorations read in infix order; every node must have two children.
pub fn infix(t: &Term) -> Result<SigWord> {
    fn walk(t: &Term, out: &mut Vec<Gen>) -> Result<()> {
        match t {
            Term::Leaf => Ok(()),
            Term::Node(g, children) => {
                let [left, right] = children.as_slice() else {
                    return Err(Error::NotBinary);
                };
                walk(left, out)?;
                out.push(*g);
                walk(right, out)
            }
        }
    }
    let mut out = Vec::new();
    walk(t, &mut out)?;
    Ok(SigWord(out))
}

pub fn mas_compose(m: &Multiset, i: usize, m2: &Multiset, sig: &Signature) -> Result<Multiset> {
    let bound = m.arity(sig).max(0) as usize;
    if i == 0 || i > bound {
        return Err(Error::IndexOutOfRange { index: i, bound });
    }
    Ok(m.union(m2))
}

/// Inserts `u2` into the `i`-th interstice of `u`.
pub fn int_compose(u: &SigWord, i: usize, u2: &SigWord) -> Result<SigWord> {
    let bound = u.arity();
    if i == 0 || i > bound {
        return Err(Error::IndexOutOfRange { index: i, bound });
    }
    let mut v = u.0[..i - 1].to_vec();
    v.extend_from_slice(&u2.0);
    v.extend_from_slice(&u.0[i - 1..]);
    Ok(SigWord(v))
}

/// An operad congruence on terms given by a computable canonical form.
pub trait Congruence {
    type Class: Entry;
    fn class_of(&self, t: &Term) -> Self::Class;
}

/// Terms are equivalent when they have the same content.
#[derive(Clone, Copy, Debug, Default)]
pub struct ByContent;

impl Congruence for ByContent {
    type Class = Multiset;
    fn class_of(&self, t: &Term) -> Multiset {
        content(t)
    }
}

/// Terms over a binary signature are equivalent when their infix readings
/// agree.
#[derive(Clone, Copy, Debug)]
pub struct ByInfix(());

impl ByInfix {
    pub fn new(sig: &Signature) -> Result<Self> {
        if sig.is_binary() {
            Ok(ByInfix(()))
        } else {
            Err(Error::NotBinary)
        }
    }
}

impl Congruence for ByInfix {
    type Class = SigWord;
    fn class_of(&self, t: &Term) -> SigWord {
        infix(t).expect("binary signature checked at construction")
    }
}

/// Terms over a binary signature are equivalent when their degrees agree.
#[derive(Clone, Copy, Debug)]
pub struct ByDegree(());

impl ByDegree {
    pub fn new(sig: &Signature) -> Result<Self> {
        if sig.is_binary() {
            Ok(ByDegree(()))
        } else {
            Err(Error::NotBinary)
        }
    }
}

impl Congruence for ByDegree {
    type Class = usize;
    fn class_of(&self, t: &Term) -> usize {
        t.degree()
    }
}

/// Sum of the terms in a class.
pub fn class_sum<C: Congruence>(class: &C::Class, cong: &C, catalog: &mut TermCatalog) -> LinComb<Forest> {
    LinComb::from_keys(
        catalog
            .terms(class.degree())
            .iter()
            .filter(|t| cong.class_of(t) == *class)
            .map(|t| Forest::from(t.clone())),
    )
}

/// Sends a phrase to the sum of the forests whose terms lie in the
/// corresponding classes.
pub fn phi_expand<C: Congruence>(x: &Phrase<C::Class>, cong: &C, catalog: &mut TermCatalog) -> LinComb<Forest> {
    x.entries()
        .iter()
        .fold(LinComb::one(), |acc, e| acc.mul(&class_sum(e, cong, catalog)))
}

pub fn realize_quotient<C: Congruence>(
    x: &Phrase<C::Class>,
    cong: &C,
    catalog: &mut TermCatalog,
    alphabet: &ForestLikeAlphabet,
) -> Polynomial {
    realize(&phi_expand(x, cong, catalog), alphabet)
}

fn multiplicative<T: Entry>(x: &Phrase<T>, mut entry: impl FnMut(&T) -> TensorComb<Phrase<T>>) -> TensorComb<Phrase<T>> {
    x.entries()
        .iter()
        .fold(TensorComb::one(), |acc, e| acc.mul(&entry(e)))
}

/// Coproduct of phrases of multisets: a sub-multiset on the left, and on the
/// right every ordered distribution of the rest into as many (possibly
/// empty) multisets as the arity of that sub-multiset.
pub fn mas_coproduct(x: &Phrase<Multiset>, sig: &Signature) -> TensorComb<Phrase<Multiset>> {
    multiplicative(x, |m| mas_coproduct_entry(m, sig))
}

fn mas_coproduct_entry(m: &Multiset, sig: &Signature) -> TensorComb<Phrase<Multiset>> {
    let n = sig.len();
    let counts = m.counts(n);
    let mut out = LinComb::zero();
    for kept in below(&counts) {
        let upper = Multiset::from_counts(&kept);
        let arity = upper.arity(sig);
        if arity < 0 {
            continue;
        }
        let slots = arity as usize;
        let rest: Vec<usize> = counts.iter().zip(&kept).map(|(c, k)| c - k).collect();
        if slots == 0 {
            if rest.iter().all(|&r| r == 0) {
                out.add_term((Phrase::new([upper.clone()]), Phrase::unit()), 1);
            }
            continue;
        }
        let per_generator: Vec<Vec<Vec<usize>>> =
            rest.iter().map(|&r| weak_compositions(r, slots)).collect();
        for split in per_generator.iter().map(|v| v.iter()).multi_cartesian_product() {
            let lower: Vec<Multiset> = (0..slots)
                .map(|i| {
                    let c: Vec<usize> = split.iter().map(|per| per[i]).collect();
                    Multiset::from_counts(&c)
                })
                .collect();
            if lower.iter().any(|u| u.arity(sig) < 0) {
                continue;
            }
            out.add_term((Phrase::new([upper.clone()]), Phrase::new(lower)), 1);
        }
    }
    out
}

/// Coproduct for signatures with `s` generators of arity `r + 1`, entries
/// being occurrence vectors: keep `u' <= u` on the left and split the rest
/// into an ordered sequence of `l` nonzero vectors, with multiplicity
/// `binomial(|u'| r + 1, l)`.
pub fn fdb_coproduct(r: usize, x: &Phrase<CountVector>) -> Result<TensorComb<Phrase<CountVector>>> {
    if let Some(first) = x.entries().first() {
        let s = first.0.len();
        if let Some(bad) = x.entries().iter().find(|e| e.0.len() != s) {
            return Err(Error::ArgumentCount {
                expected: s,
                found: bad.0.len(),
            });
        }
    }
    Ok(multiplicative(x, |u| fdb_coproduct_entry(r, u)))
}

fn fdb_coproduct_entry(r: usize, u: &CountVector) -> TensorComb<Phrase<CountVector>> {
    let mut out = LinComb::zero();
    for kept in below(&u.0) {
        let arity = kept.iter().sum::<usize>() * r + 1;
        let rest: Vec<usize> = u.0.iter().zip(&kept).map(|(a, b)| a - b).collect();
        for parts in vector_compositions(&rest) {
            if parts.len() > arity {
                continue;
            }
            let c = binomial(BigInt::from(arity), BigInt::from(parts.len()));
            out.add_term(
                (
                    Phrase::new([CountVector(kept.clone())]),
                    Phrase::new(parts.into_iter().map(CountVector)),
                ),
                c,
            );
        }
    }
    out
}

/// Every vector bounded componentwise by `bound`.
fn below(bound: &[usize]) -> Vec<Vec<usize>> {
    if bound.is_empty() {
        return alloc::vec![Vec::new()];
    }
    bound
        .iter()
        .map(|&c| 0..=c)
        .multi_cartesian_product()
        .collect()
}

/// Ordered sequences of nonzero vectors summing to `total`.
fn vector_compositions(total: &[usize]) -> Vec<Vec<Vec<usize>>> {
    if total.iter().all(|&x| x == 0) {
        return alloc::vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in below(total) {
        if first.iter().all(|&x| x == 0) {
            continue;
        }
        let rest: Vec<usize> = total.iter().zip(&first).map(|(a, b)| a - b).collect();
        for mut tail in vector_compositions(&rest) {
            tail.insert(0, first.clone());
            out.push(tail);
        }
    }
    out
}

/// Coproduct of phrases of words: a subword on the left, and on the right
/// the factors of the word that remain between its chosen letters.
pub fn phr_coproduct(x: &Phrase<SigWord>) -> TensorComb<Phrase<SigWord>> {
    multiplicative(x, phr_coproduct_entry)
}

fn phr_coproduct_entry(u: &SigWord) -> TensorComb<Phrase<SigWord>> {
    let n = u.len();
    let mut out = LinComb::zero();
    for mask in 0u64..(1u64 << n) {
        let mut chosen = Vec::new();
        let mut factors = alloc::vec![Vec::new()];
        for (i, &g) in u.0.iter().enumerate() {
            if mask >> i & 1 == 1 {
                chosen.push(g);
                factors.push(Vec::new());
            } else {
                factors.last_mut().expect("nonempty").push(g);
            }
        }
        out.add_term(
            (
                Phrase::new([SigWord(chosen)]),
                Phrase::new(factors.into_iter().map(SigWord)),
            ),
            1,
        );
    }
    out
}

/// Outcome of an exhaustive congruence check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CongruenceReport {
    pub terms: usize,
    pub classes: usize,
    pub compositions: usize,
    pub violations: Vec<String>,
}

/// Checks on all terms of degree at most `max_degree` that equivalent terms
/// have equal arity and degree, and that equivalence survives partial
/// composition on either side with any such term.
pub fn congruence_check<C: Congruence>(cong: &C, sig: &Signature, max_degree: usize) -> CongruenceReport
where
    C::Class: core::fmt::Debug,
{
    let mut catalog = TermCatalog::new(sig);
    let mut all: Vec<Term> = Vec::new();
    for d in 0..=max_degree {
        all.extend(catalog.terms(d).iter().cloned());
    }
    let mut reps: alloc::collections::BTreeMap<C::Class, usize> = Default::default();
    let mut report = CongruenceReport {
        terms: all.len(),
        ..Default::default()
    };
    for (k, t) in all.iter().enumerate() {
        let class = cong.class_of(t);
        if class.degree() != t.degree() {
            report
                .violations
                .push(alloc::format!("degree mismatch for class {class:?}"));
        }
        let rep = *reps.entry(class.clone()).or_insert(k);
        if rep == k {
            continue;
        }
        let r = &all[rep];
        if r.arity() != t.arity() {
            report
                .violations
                .push(alloc::format!("arity mismatch in class {class:?}"));
            continue;
        }
        for s in &all {
            for i in 1..=t.arity() {
                let a = t.partial_compose(i, s).expect("index in range");
                let b = r.partial_compose(i, s).expect("index in range");
                report.compositions += 1;
                if cong.class_of(&a) != cong.class_of(&b) {
                    report
                        .violations
                        .push(alloc::format!("right composition at {i} splits class {class:?}"));
                }
            }
            for i in 1..=s.arity() {
                let a = s.partial_compose(i, t).expect("index in range");
                let b = s.partial_compose(i, r).expect("index in range");
                report.compositions += 1;
                if cong.class_of(&a) != cong.class_of(&b) {
                    report
                        .violations
                        .push(alloc::format!("left composition at {i} splits class {class:?}"));
                }
            }
        }
    }
    report.classes = reps.len();
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interstice_splicing() {
        let (a, b) = (Gen(0), Gen(1));
        let u = SigWord(alloc::vec![b, b, a, b, a]);
        let v = SigWord(alloc::vec![a, a, b]);
        assert_eq!(
            int_compose(&u, 3, &v).unwrap().0,
            [b, b, a, a, b, a, b, a]
        );
        assert_eq!(int_compose(&SigWord::default(), 1, &v).unwrap(), v);
        assert!(int_compose(&u, 7, &v).is_err());
    }

    #[test]
    fn multiset_arity() {
        let sig = Signature::from_profile(&[0, 1, 1, 1]);
        assert_eq!(Multiset::new(alloc::vec![Gen(0), Gen(1)]).arity(&sig), 2);
        assert_eq!(Multiset::empty().arity(&sig), 1);
    }

    #[test]
    fn infix_needs_binary_nodes() {
        let t = Term::Node(Gen(0), alloc::vec![Term::Leaf]);
        assert_eq!(infix(&t), Err(Error::NotBinary));
        assert!(ByInfix::new(&Signature::from_profile(&[0, 1, 1, 1])).is_err());
    }
}
