//! Forests (finite sequences of terms), their node tables, restrictions to
//! node subsets, and admissible cuts.
//!
//! Internal nodes are numbered from 0 in preorder across the whole forest.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::{Error, Gen, Monoid, Result, Term};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Forest(Vec<Term>);

impl Forest {
    pub fn new(terms: Vec<Term>) -> Self {
        Forest(terms)
    }

    pub fn empty() -> Self {
        Forest(Vec::new())
    }

    pub fn terms(&self) -> &[Term] {
        &self.0
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(Term::degree).sum()
    }

    pub fn arity(&self) -> usize {
        self.0.iter().map(Term::arity).sum()
    }

    /// Largest node height; 0 for forests without internal nodes.
    pub fn depth(&self) -> usize {
        self.0.iter().filter_map(Term::depth).max().unwrap_or(0)
    }

    /// Drops every term that is a bare leaf.
    pub fn reduce(&self) -> Forest {
        Forest(self.0.iter().filter(|t| !t.is_leaf()).cloned().collect())
    }

    pub fn is_reduced(&self) -> bool {
        self.0.iter().all(|t| !t.is_leaf())
    }

    pub fn concat(&self, other: &Forest) -> Forest {
        let mut terms = self.0.clone();
        terms.extend(other.0.iter().cloned());
        Forest(terms)
    }

    pub fn node_table(&self) -> NodeTable {
        NodeTable::new(self)
    }

    /// Induced structure on the nodes flagged in `keep`: kept nodes keep
    /// their generator and child slots, removed children become leaves, and
    /// each maximal connected piece becomes a term. Pieces are ordered by the
    /// preorder index of their top node.
    pub fn restrict_mask(&self, keep: &[bool]) -> Forest {
        let mut counter = 0;
        let mut pieces = Vec::new();
        for t in &self.0 {
            restrict_walk(t, keep, &mut counter, false, &mut pieces);
        }
        pieces.sort_by_key(|(top, _)| *top);
        Forest(pieces.into_iter().map(|(_, t)| t).collect())
    }

    /// Same as [`Forest::restrict_mask`] with an explicit list of 0-based
    /// node indices.
    pub fn restrict(&self, nodes: &[usize]) -> Result<Forest> {
        let degree = self.degree();
        let mut keep = alloc::vec![false; degree];
        for &i in nodes {
            if i >= degree {
                return Err(Error::NodeOutOfRange { index: i, degree });
            }
            keep[i] = true;
        }
        Ok(self.restrict_mask(&keep))
    }

    /// All admissible pairs of the forest, ancestor-closed part first.
    pub fn admissible_pairs(&self) -> AdmissiblePairs {
        AdmissiblePairs::new(self.node_table().parent_indices())
    }
}

fn restrict_walk(
    t: &Term,
    keep: &[bool],
    counter: &mut usize,
    parent_kept: bool,
    pieces: &mut Vec<(usize, Term)>,
) -> Term {
    match t {
        Term::Leaf => Term::Leaf,
        Term::Node(g, children) => {
            let index = *counter;
            *counter += 1;
            let kept = keep.get(index).copied().unwrap_or(false);
            let slots: Vec<Term> = children
                .iter()
                .map(|c| restrict_walk(c, keep, counter, kept, pieces))
                .collect();
            if !kept {
                return Term::Leaf;
            }
            let built = Term::Node(*g, slots);
            if parent_kept {
                built
            } else {
                pieces.push((index, built));
                Term::Leaf
            }
        }
    }
}

/// Forests compare by degree, then term by term.
impl Ord for Forest {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Forest {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monoid for Forest {
    fn unit() -> Self {
        Forest::empty()
    }

    fn concat(&self, other: &Self) -> Self {
        Forest::concat(self, other)
    }
}

impl From<Term> for Forest {
    fn from(t: Term) -> Self {
        Forest(alloc::vec![t])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeInfo {
    pub decoration: Gen,
    pub height: usize,
    /// Child indices (1-based) along the path from the root.
    pub position: Vec<usize>,
    /// Parent node and the (1-based) child slot this node occupies.
    pub parent: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeTable {
    nodes: Vec<NodeInfo>,
}

impl NodeTable {
    pub fn new(f: &Forest) -> Self {
        let mut nodes = Vec::with_capacity(f.degree());
        let mut path = Vec::new();
        for t in f.terms() {
            Self::walk(t, None, &mut path, &mut nodes);
        }
        NodeTable { nodes }
    }

    fn walk(
        t: &Term,
        parent: Option<(usize, usize)>,
        path: &mut Vec<usize>,
        nodes: &mut Vec<NodeInfo>,
    ) {
        let Term::Node(g, children) = t else { return };
        let index = nodes.len();
        nodes.push(NodeInfo {
            decoration: *g,
            height: path.len(),
            position: path.clone(),
            parent,
        });
        for (j, c) in children.iter().enumerate() {
            path.push(j + 1);
            Self::walk(c, Some((index, j + 1)), path, nodes);
            path.pop();
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[NodeInfo] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &NodeInfo {
        &self.nodes[i]
    }

    pub fn parent_indices(&self) -> Vec<Option<usize>> {
        self.nodes.iter().map(|n| n.parent.map(|(p, _)| p)).collect()
    }
}

/// A partition of the internal nodes into an ancestor-closed part and its
/// (descendant-closed) complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissiblePair {
    upper: Vec<bool>,
}

impl AdmissiblePair {
    pub fn upper_mask(&self) -> &[bool] {
        &self.upper
    }

    pub fn lower_mask(&self) -> Vec<bool> {
        self.upper.iter().map(|b| !b).collect()
    }

    pub fn upper(&self) -> Vec<usize> {
        (0..self.upper.len()).filter(|&i| self.upper[i]).collect()
    }

    pub fn lower(&self) -> Vec<usize> {
        (0..self.upper.len()).filter(|&i| !self.upper[i]).collect()
    }

    pub fn contains_upper(&self, i: usize) -> bool {
        self.upper[i]
    }
}

/// Enumerates ancestor-closed node sets of a forest given by its parent
/// array (nodes in preorder), in lexicographic order of their indicator
/// vectors. Each step costs time linear in the number of nodes.
#[derive(Clone, Debug)]
pub struct AdmissiblePairs {
    parents: Vec<Option<usize>>,
    upper: Vec<bool>,
    started: bool,
    done: bool,
}

impl AdmissiblePairs {
    pub fn new(parents: Vec<Option<usize>>) -> Self {
        let n = parents.len();
        AdmissiblePairs {
            parents,
            upper: alloc::vec![false; n],
            started: false,
            done: false,
        }
    }

    fn can_join(&self, i: usize) -> bool {
        match self.parents[i] {
            None => true,
            Some(p) => self.upper[p],
        }
    }
}

impl Iterator for AdmissiblePairs {
    type Item = AdmissiblePair;

    fn next(&mut self) -> Option<AdmissiblePair> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(AdmissiblePair {
                upper: self.upper.clone(),
            });
        }
        // Lexicographic successor: the last node that may still switch on
        // switches on, and every later node switches off.
        let pivot = (0..self.upper.len())
            .rev()
            .find(|&i| !self.upper[i] && self.can_join(i));
        match pivot {
            None => {
                self.done = true;
                None
            }
            Some(i) => {
                self.upper[i] = true;
                for flag in &mut self.upper[i + 1..] {
                    *flag = false;
                }
                Some(AdmissiblePair {
                    upper: self.upper.clone(),
                })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn leaf() -> Term {
        Term::Leaf
    }

    fn node(g: u32, children: Vec<Term>) -> Term {
        Term::Node(Gen(g), children)
    }

    #[test]
    fn single_node_has_two_cuts() {
        let f = Forest::from(node(0, vec![leaf()]));
        let cuts: Vec<_> = f.admissible_pairs().map(|p| p.upper()).collect();
        assert_eq!(cuts, vec![vec![], vec![0]]);
    }

    #[test]
    fn reduce_drops_leaves() {
        let t = node(0, vec![leaf()]);
        let f = Forest::new(vec![leaf(), t.clone(), leaf()]);
        assert_eq!(f.reduce(), Forest::from(t));
        assert_eq!(Forest::new(vec![leaf(), leaf()]).reduce(), Forest::empty());
        assert_eq!(f.reduce().reduce(), f.reduce());
    }

    #[test]
    fn restriction_of_everything_is_reduction() {
        let t = node(1, vec![node(0, vec![leaf()]), leaf()]);
        let f = Forest::new(vec![leaf(), t.clone()]);
        assert_eq!(f.restrict(&[0, 1]).unwrap(), Forest::from(t));
        assert_eq!(f.restrict(&[]).unwrap(), Forest::empty());
        assert!(f.restrict(&[2]).is_err());
    }
}
