//! Exhaustive enumeration of terms and reduced forests by degree.

use alloc::vec::Vec;

use itertools::Itertools;

use crate::{Forest, Signature, Term};

/// Lazily filled table of all terms of each degree over a fixed signature.
#[derive(Clone, Debug)]
pub struct TermCatalog {
    sig: Signature,
    by_degree: Vec<Vec<Term>>,
}

impl TermCatalog {
    pub fn new(sig: &Signature) -> Self {
        TermCatalog {
            sig: sig.clone(),
            by_degree: alloc::vec![alloc::vec![Term::Leaf]],
        }
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    /// All terms of degree `n`, in canonical order.
    pub fn terms(&mut self, n: usize) -> &[Term] {
        while self.by_degree.len() <= n {
            let next = self.build(self.by_degree.len());
            self.by_degree.push(next);
        }
        &self.by_degree[n]
    }

    fn build(&self, n: usize) -> Vec<Term> {
        let mut out = Vec::new();
        for g in self.sig.generators() {
            let k = self.sig.arity(g);
            for split in weak_compositions(n - 1, k) {
                if k == 0 {
                    out.push(Term::Node(g, Vec::new()));
                    continue;
                }
                let choices: Vec<&[Term]> =
                    split.iter().map(|&d| self.by_degree[d].as_slice()).collect();
                for children in choices.into_iter().multi_cartesian_product() {
                    out.push(Term::Node(g, children.into_iter().cloned().collect()));
                }
            }
        }
        out.sort();
        out
    }

    /// All reduced forests of degree `n`, in canonical order.
    pub fn forests(&mut self, n: usize) -> Vec<Forest> {
        for d in 0..=n {
            self.terms(d);
        }
        let mut out = Vec::new();
        for parts in compositions(n) {
            if parts.is_empty() {
                out.push(Forest::empty());
                continue;
            }
            let choices: Vec<&[Term]> = parts
                .iter()
                .map(|&d| self.by_degree[d].as_slice())
                .collect();
            for terms in choices.into_iter().multi_cartesian_product() {
                out.push(Forest::new(terms.into_iter().cloned().collect()));
            }
        }
        out.sort();
        out
    }
}

/// All terms of degree `n` over `sig`, each exactly once, in canonical order.
pub fn enumerate_terms(sig: &Signature, n: usize) -> Vec<Term> {
    TermCatalog::new(sig).terms(n).to_vec()
}

/// All reduced forests of degree `n` over `sig`.
pub fn enumerate_forests(sig: &Signature, n: usize) -> Vec<Forest> {
    TermCatalog::new(sig).forests(n)
}

/// Sequences of `parts` nonnegative integers summing to `total`.
pub fn weak_compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(parts);
    weak_rec(total, parts, &mut current, &mut out);
    out
}

fn weak_rec(left: usize, parts: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if current.len() + 1 == parts {
        current.push(left);
        out.push(current.clone());
        current.pop();
        return;
    }
    if parts == 0 {
        if left == 0 {
            out.push(Vec::new());
        }
        return;
    }
    for first in 0..=left {
        current.push(first);
        weak_rec(left - first, parts, current, out);
        current.pop();
    }
}

/// Sequences of positive integers summing to `total`.
pub fn compositions(total: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return alloc::vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=total {
        for mut rest in compositions(total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let sig_e = Signature::from_profile(&[0, 1, 1, 1]);
        assert_eq!(enumerate_terms(&sig_e, 0), [Term::Leaf]);
        assert_eq!(enumerate_terms(&sig_e, 1).len(), 3);
        assert_eq!(enumerate_terms(&sig_e, 2).len(), 18);
        let binary = Signature::from_profile(&[0, 0, 1]);
        assert_eq!(enumerate_terms(&binary, 3).len(), 5);
        assert_eq!(weak_compositions(2, 2).len(), 3);
        assert_eq!(weak_compositions(0, 0).len(), 1);
        assert_eq!(weak_compositions(1, 0).len(), 0);
        assert_eq!(compositions(4).len(), 8);
    }

    #[test]
    fn nullary_generators() {
        let sig = Signature::from_profile(&[2, 0, 1]);
        assert_eq!(enumerate_terms(&sig, 1).len(), 3);
        assert_eq!(enumerate_terms(&sig, 2).len(), 6);
    }
}
