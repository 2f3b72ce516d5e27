//! Trimmed forests (forests with their leaves removed), charges, the
//! Hopf algebra they span, and length polynomials.

use alloc::vec::Vec;
use core::cmp::Ordering;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::One;

use crate::alphabet::{Polynomial, Word};
use crate::forest::AdmissiblePairs;
use crate::lincomb::TensorComb;
use crate::positions::{LengthAlphabet, LengthLetter};
use crate::quotient::Multiset;
use crate::{Forest, Gen, LinComb, Monoid, Signature, Term};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TrimmedTree {
    pub generator: Gen,
    pub children: Vec<TrimmedTree>,
}

impl TrimmedTree {
    pub fn degree(&self) -> usize {
        1 + self.children.iter().map(TrimmedTree::degree).sum::<usize>()
    }

    /// Checks that no node has more children than its generator's arity.
    pub fn fits(&self, sig: &Signature) -> bool {
        self.generator.index() < sig.len()
            && self.children.len() <= sig.arity(self.generator)
            && self.children.iter().all(|c| c.fits(sig))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TrimmedForest(pub Vec<TrimmedTree>);

impl TrimmedForest {
    pub fn empty() -> Self {
        TrimmedForest(Vec::new())
    }

    pub fn trees(&self) -> &[TrimmedTree] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(TrimmedTree::degree).sum()
    }

    /// Parent of each node, nodes numbered in preorder.
    pub fn parents(&self) -> Vec<Option<usize>> {
        fn walk(t: &TrimmedTree, parent: Option<usize>, out: &mut Vec<Option<usize>>) {
            let me = out.len();
            out.push(parent);
            for c in &t.children {
                walk(c, Some(me), out);
            }
        }
        let mut out = Vec::new();
        for t in &self.0 {
            walk(t, None, &mut out);
        }
        out
    }

    /// Induced sub-forest on the flagged nodes, pieces ordered by the
    /// preorder index of their top node.
    pub fn restrict_mask(&self, keep: &[bool]) -> TrimmedForest {
        fn walk(
            t: &TrimmedTree,
            keep: &[bool],
            counter: &mut usize,
            parent_kept: bool,
            pieces: &mut Vec<(usize, TrimmedTree)>,
        ) -> Option<TrimmedTree> {
            let index = *counter;
            *counter += 1;
            let kept = keep[index];
            let children: Vec<TrimmedTree> = t
                .children
                .iter()
                .filter_map(|c| walk(c, keep, counter, kept, pieces))
                .collect();
            if !kept {
                return None;
            }
            let built = TrimmedTree {
                generator: t.generator,
                children,
            };
            if parent_kept {
                Some(built)
            } else {
                pieces.push((index, built));
                None
            }
        }
        let mut counter = 0;
        let mut pieces = Vec::new();
        for t in &self.0 {
            walk(t, keep, &mut counter, false, &mut pieces);
        }
        pieces.sort_by_key(|(top, _)| *top);
        TrimmedForest(pieces.into_iter().map(|(_, t)| t).collect())
    }
}

impl Ord for TrimmedForest {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for TrimmedForest {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monoid for TrimmedForest {
    fn unit() -> Self {
        TrimmedForest::empty()
    }

    fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        TrimmedForest(v)
    }
}

fn trim_term(t: &Term) -> Option<TrimmedTree> {
    match t {
        Term::Leaf => None,
        Term::Node(g, children) => Some(TrimmedTree {
            generator: *g,
            children: children.iter().filter_map(trim_term).collect(),
        }),
    }
}

/// Removes all leaves.
pub fn trim(f: &Forest) -> TrimmedForest {
    TrimmedForest(f.terms().iter().filter_map(trim_term).collect())
}

fn tree_charge(t: &TrimmedTree, sig: &Signature) -> BigInt {
    let slots = binomial(
        BigInt::from(sig.arity(t.generator)),
        BigInt::from(t.children.len()),
    );
    t.children
        .iter()
        .fold(slots, |acc, c| acc * tree_charge(c, sig))
}

/// Number of reduced forests trimming to `t`.
pub fn charge(t: &TrimmedForest, sig: &Signature) -> BigInt {
    t.0.iter()
        .fold(BigInt::one(), |acc, tree| acc * tree_charge(tree, sig))
}

fn untrim_tree(t: &TrimmedTree, sig: &Signature) -> Vec<Term> {
    let arity = sig.arity(t.generator);
    let k = t.children.len();
    if k > arity {
        return Vec::new();
    }
    let variants: Vec<Vec<Term>> = t.children.iter().map(|c| untrim_tree(c, sig)).collect();
    let fillings: Vec<Vec<&Term>> = if k == 0 {
        alloc::vec![Vec::new()]
    } else {
        variants.iter().map(|v| v.iter()).multi_cartesian_product().collect()
    };
    let mut out = Vec::new();
    for slots in (0..arity).combinations(k) {
        for filling in &fillings {
            let mut children = alloc::vec![Term::Leaf; arity];
            for (&slot, &child) in slots.iter().zip(filling) {
                children[slot] = child.clone();
            }
            out.push(Term::Node(t.generator, children));
        }
    }
    out
}

/// Every reduced forest trimming to `t`: each node places its children in
/// some increasing choice of its slots and fills the others with leaves.
pub fn untrim(t: &TrimmedForest, sig: &Signature) -> Vec<Forest> {
    if t.is_empty() {
        return alloc::vec![Forest::empty()];
    }
    let per_tree: Vec<Vec<Term>> = t.0.iter().map(|tree| untrim_tree(tree, sig)).collect();
    per_tree
        .iter()
        .map(|v| v.iter())
        .multi_cartesian_product()
        .map(|terms| Forest::new(terms.into_iter().cloned().collect()))
        .collect()
}

pub fn nck_product(x: &LinComb<TrimmedForest>, y: &LinComb<TrimmedForest>) -> LinComb<TrimmedForest> {
    x.mul(y)
}

pub fn nck_coproduct_basis(t: &TrimmedForest) -> TensorComb<TrimmedForest> {
    let mut out = LinComb::zero();
    for pair in AdmissiblePairs::new(t.parents()) {
        let upper = t.restrict_mask(pair.upper_mask());
        let lower = t.restrict_mask(&pair.lower_mask());
        out.add_term((upper, lower), 1);
    }
    out
}

/// Coproduct by admissible cuts on trimmed forests.
pub fn nck_coproduct(x: &LinComb<TrimmedForest>) -> TensorComb<TrimmedForest> {
    x.flat_map(nck_coproduct_basis)
}

/// Sum over all labelings of the nodes by lengths `0..=L` increasing
/// strictly from each node to its children, read as words over the
/// alphabet of lengths.
pub fn length_polynomial(t: &TrimmedForest, lengths: &LengthAlphabet) -> Polynomial {
    let parents = t.parents();
    let mut decorations = Vec::with_capacity(parents.len());
    fn walk(t: &TrimmedTree, out: &mut Vec<Gen>) {
        out.push(t.generator);
        for c in &t.children {
            walk(c, out);
        }
    }
    for tree in t.trees() {
        walk(tree, &mut decorations);
    }
    let mut out = Polynomial::zero();
    let mut chosen: Vec<usize> = Vec::with_capacity(parents.len());
    fn extend(
        parents: &[Option<usize>],
        decorations: &[Gen],
        lengths: &LengthAlphabet,
        chosen: &mut Vec<usize>,
        out: &mut Polynomial,
    ) {
        let i = chosen.len();
        if i == parents.len() {
            let word = chosen
                .iter()
                .zip(decorations)
                .map(|(&length, &generator)| lengths.id(LengthLetter { generator, length }))
                .collect::<Option<Vec<_>>>();
            if let Some(w) = word {
                out.add_term(Word(w), 1);
            }
            return;
        }
        let low = parents[i].map_or(0, |p| chosen[p] + 1);
        for l in low..=lengths.max_len() {
            chosen.push(l);
            extend(parents, decorations, lengths, chosen, out);
            chosen.pop();
        }
    }
    extend(&parents, &decorations, lengths, &mut chosen, &mut out);
    out
}

/// Trimmed trees with node content `m` that fit the signature.
pub fn trees_with_content(m: &Multiset, sig: &Signature) -> Vec<TrimmedTree> {
    let mut counts = alloc::vec![0usize; sig.len()];
    for g in m.generators() {
        counts[g.index()] += 1;
    }
    trees_of(&counts, sig)
}

fn trees_of(counts: &[usize], sig: &Signature) -> Vec<TrimmedTree> {
    let mut out = Vec::new();
    for g in sig.generators() {
        if counts[g.index()] == 0 {
            continue;
        }
        let mut rest = counts.to_vec();
        rest[g.index()] -= 1;
        for children in forests_of(&rest, sig.arity(g), sig) {
            out.push(TrimmedTree {
                generator: g,
                children,
            });
        }
    }
    out
}

/// Sequences of at most `max_trees` trimmed trees with total content `counts`.
fn forests_of(counts: &[usize], max_trees: usize, sig: &Signature) -> Vec<Vec<TrimmedTree>> {
    if counts.iter().all(|&c| c == 0) {
        return alloc::vec![Vec::new()];
    }
    if max_trees == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for first in counts.iter().map(|&c| 0..=c).multi_cartesian_product() {
        if first.iter().all(|&c| c == 0) {
            continue;
        }
        let rest: Vec<usize> = counts.iter().zip(&first).map(|(a, b)| a - b).collect();
        let heads = trees_of(&first, sig);
        if heads.is_empty() {
            continue;
        }
        let tails = forests_of(&rest, max_trees - 1, sig);
        for head in &heads {
            for tail in &tails {
                let mut v = alloc::vec![head.clone()];
                v.extend(tail.iter().cloned());
                out.push(v);
            }
        }
    }
    out
}

/// Realization of the class of terms with content `m` over lengths,
/// computed through trimmed trees weighted by their charges.
pub fn mas_lengths_expand(m: &Multiset, sig: &Signature, lengths: &LengthAlphabet) -> Polynomial {
    let mut out = Polynomial::zero();
    for tree in trees_with_content(m, sig) {
        let forest = TrimmedForest(alloc::vec![tree]);
        out.add_scaled(&length_polynomial(&forest, lengths), &charge(&forest, sig));
    }
    out
}
