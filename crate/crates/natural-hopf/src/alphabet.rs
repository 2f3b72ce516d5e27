//! Forest-like alphabets, compatible words, and the realization map sending
//! a forest to the sum of its compatible words.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::lincomb::TensorComb;
use crate::{Forest, Gen, LinComb, Monoid, NodeTable};

/// Index of a letter inside its alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u32);

impl Letter {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }
}

impl Monoid for Word {
    fn unit() -> Self {
        Word::empty()
    }

    fn concat(&self, other: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

/// Noncommutative polynomial with integer coefficients.
pub type Polynomial = LinComb<Word>;

/// A finite alphabet with a root predicate, one decoration predicate per
/// generator and one edge relation per child index. Nothing is assumed
/// about these relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestLikeAlphabet {
    names: Vec<String>,
    by_name: BTreeMap<String, Letter>,
    root: Vec<bool>,
    /// `decorated[g]`: sorted letters carrying generator `g`.
    decorated: Vec<Vec<Letter>>,
    /// `rooted[g]`: the root letters among `decorated[g]`.
    rooted: Vec<Vec<Letter>>,
    /// `carries[g][a]`: letter `a` carries generator `g`.
    carries: Vec<Vec<bool>>,
    /// `edges[j - 1][a]`: sorted targets of `a` for child index `j`.
    edges: Vec<Vec<Vec<Letter>>>,
}

/// Incremental construction of a [`ForestLikeAlphabet`].
#[derive(Clone, Debug)]
pub struct AlphabetBuilder {
    generators: usize,
    children: usize,
    names: Vec<String>,
    root: Vec<bool>,
    decorations: Vec<(Gen, Letter)>,
    edges: Vec<(usize, Letter, Letter)>,
}

impl AlphabetBuilder {
    /// `generators` decoration predicates and edge relations for child
    /// indices `1..=children`.
    pub fn new(generators: usize, children: usize) -> Self {
        AlphabetBuilder {
            generators,
            children,
            names: Vec::new(),
            root: Vec::new(),
            decorations: Vec::new(),
            edges: Vec::new(),
        }
    }

    pub fn letter(&mut self, name: impl Into<String>) -> Letter {
        self.names.push(name.into());
        self.root.push(false);
        Letter(self.names.len() as u32 - 1)
    }

    pub fn root(&mut self, a: Letter) {
        self.root[a.index()] = true;
    }

    pub fn decorate(&mut self, g: Gen, a: Letter) {
        if g.index() < self.generators {
            self.decorations.push((g, a));
        }
    }

    pub fn edge(&mut self, j: usize, from: Letter, to: Letter) {
        if (1..=self.children).contains(&j) {
            self.edges.push((j, from, to));
        }
    }

    pub fn build(self) -> ForestLikeAlphabet {
        let n = self.names.len();
        let mut decorated = alloc::vec![Vec::new(); self.generators];
        let mut carries = alloc::vec![alloc::vec![false; n]; self.generators];
        for (g, a) in self.decorations {
            if !carries[g.index()][a.index()] {
                carries[g.index()][a.index()] = true;
                decorated[g.index()].push(a);
            }
        }
        for list in &mut decorated {
            list.sort();
        }
        let rooted = decorated
            .iter()
            .map(|list| {
                list.iter()
                    .copied()
                    .filter(|a| self.root[a.index()])
                    .collect()
            })
            .collect();
        let mut edges = alloc::vec![alloc::vec![Vec::new(); n]; self.children];
        for (j, from, to) in self.edges {
            edges[j - 1][from.index()].push(to);
        }
        for per_child in &mut edges {
            for targets in per_child.iter_mut() {
                targets.sort();
                targets.dedup();
            }
        }
        let by_name = self
            .names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), Letter(i as u32)))
            .collect();
        ForestLikeAlphabet {
            names: self.names,
            by_name,
            root: self.root,
            decorated,
            rooted,
            carries,
            edges,
        }
    }
}

impl ForestLikeAlphabet {
    /// The alphabet without letters.
    pub fn empty(generators: usize, children: usize) -> Self {
        AlphabetBuilder::new(generators, children).build()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (0..self.names.len() as u32).map(Letter)
    }

    pub fn generator_count(&self) -> usize {
        self.decorated.len()
    }

    pub fn child_count(&self) -> usize {
        self.edges.len()
    }

    pub fn name(&self, a: Letter) -> &str {
        &self.names[a.index()]
    }

    pub fn lookup(&self, name: &str) -> Option<Letter> {
        self.by_name.get(name).copied()
    }

    pub fn is_root(&self, a: Letter) -> bool {
        self.root[a.index()]
    }

    pub fn carries(&self, g: Gen, a: Letter) -> bool {
        self.carries
            .get(g.index())
            .is_some_and(|row| row[a.index()])
    }

    pub fn decorated_by(&self, g: Gen) -> &[Letter] {
        self.decorated.get(g.index()).map_or(&[], |v| v.as_slice())
    }

    /// Root letters carrying `g`.
    pub fn roots_decorated_by(&self, g: Gen) -> &[Letter] {
        self.rooted.get(g.index()).map_or(&[], |v| v.as_slice())
    }

    pub fn targets(&self, j: usize, a: Letter) -> &[Letter] {
        if j == 0 || j > self.edges.len() {
            return &[];
        }
        &self.edges[j - 1][a.index()]
    }

    pub fn has_edge(&self, j: usize, from: Letter, to: Letter) -> bool {
        self.targets(j, from).binary_search(&to).is_ok()
    }

    /// Renders a word with letter names separated by spaces.
    pub fn render_word(&self, w: &Word) -> String {
        let mut out = String::new();
        for (i, a) in w.0.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(self.name(*a));
        }
        out
    }
}

/// Whether `w` encodes `f`: right length, roots on root letters, each letter
/// carrying its node's generator, and each edge of `f` in the matching
/// relation.
pub fn compatible(w: &Word, f: &Forest, a: &ForestLikeAlphabet) -> bool {
    let table = f.node_table();
    if w.len() != table.len() {
        return false;
    }
    table.nodes().iter().enumerate().all(|(i, node)| {
        let letter = w.0[i];
        letter.index() < a.len()
            && a.carries(node.decoration, letter)
            && match node.parent {
                None => a.is_root(letter),
                Some((p, j)) => a.has_edge(j, w.0[p], letter),
            }
    })
}

/// All words compatible with `f`, found by a preorder search where each node
/// only tries letters allowed by its decoration and by its parent's letter.
pub fn compatible_words(f: &Forest, a: &ForestLikeAlphabet) -> Vec<Word> {
    let table = f.node_table();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(table.len());
    extend(&table, a, &mut current, &mut out);
    out
}

fn extend(table: &NodeTable, a: &ForestLikeAlphabet, current: &mut Vec<Letter>, out: &mut Vec<Word>) {
    let i = current.len();
    if i == table.len() {
        out.push(Word(current.clone()));
        return;
    }
    let node = table.node(i);
    match node.parent {
        None => {
            for &letter in a.roots_decorated_by(node.decoration) {
                current.push(letter);
                extend(table, a, current, out);
                current.pop();
            }
        }
        Some((p, j)) => {
            for &letter in a.targets(j, current[p]) {
                if a.carries(node.decoration, letter) {
                    current.push(letter);
                    extend(table, a, current, out);
                    current.pop();
                }
            }
        }
    }
}

/// Sum of the words compatible with `f`.
pub fn realize_forest(f: &Forest, a: &ForestLikeAlphabet) -> Polynomial {
    Polynomial::from_keys(compatible_words(&f.reduce(), a))
}

/// Linear extension of [`realize_forest`].
pub fn realize(x: &LinComb<Forest>, a: &ForestLikeAlphabet) -> Polynomial {
    x.flat_map(|f| realize_forest(f, a))
}

/// Disjoint sum of two alphabets: letters of the first come first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumAlphabet {
    alphabet: ForestLikeAlphabet,
    split: usize,
}

/// Letters are tagged by prefixing `1.` or `2.` to their names. Roots and
/// decorations are inherited; edges are those of each side plus every pair
/// from a letter of the first alphabet to a root letter of the second.
pub fn disjoint_sum(a1: &ForestLikeAlphabet, a2: &ForestLikeAlphabet) -> SumAlphabet {
    let generators = a1.generator_count().max(a2.generator_count());
    let children = a1.child_count().max(a2.child_count());
    let mut b = AlphabetBuilder::new(generators, children);
    let split = a1.len();
    let shift = |a: Letter| Letter(a.0 + split as u32);
    for a in a1.letters() {
        b.letter(alloc::format!("1.{}", a1.name(a)));
    }
    for a in a2.letters() {
        b.letter(alloc::format!("2.{}", a2.name(a)));
    }
    for (side, alphabet) in [(0, a1), (1, a2)] {
        let place = |a: Letter| if side == 0 { a } else { shift(a) };
        for a in alphabet.letters() {
            if alphabet.is_root(a) {
                b.root(place(a));
            }
            for g in 0..alphabet.generator_count() {
                if alphabet.carries(Gen(g as u32), a) {
                    b.decorate(Gen(g as u32), place(a));
                }
            }
            for j in 1..=alphabet.child_count() {
                for &t in alphabet.targets(j, a) {
                    b.edge(j, place(a), place(t));
                }
            }
        }
    }
    for a in a1.letters() {
        for t in a2.letters().filter(|&t| a2.is_root(t)) {
            for j in 1..=children {
                b.edge(j, a, shift(t));
            }
        }
    }
    SumAlphabet {
        alphabet: b.build(),
        split,
    }
}

impl SumAlphabet {
    pub fn alphabet(&self) -> &ForestLikeAlphabet {
        &self.alphabet
    }

    pub fn left(&self, a: Letter) -> Letter {
        a
    }

    pub fn right(&self, a: Letter) -> Letter {
        Letter(a.0 + self.split as u32)
    }

    /// Splits a word into its subwords on each side.
    pub fn split_word(&self, w: &Word) -> (Word, Word) {
        let split = self.split as u32;
        let (l, r): (Vec<Letter>, Vec<Letter>) = w.0.iter().partition(|a| a.0 < split);
        (Word(l), Word(r.into_iter().map(|a| Letter(a.0 - split)).collect()))
    }

    /// Letterwise split of every monomial, coefficients accumulated.
    pub fn theta_split(&self, p: &Polynomial) -> TensorComb<Word> {
        p.map_keys(|w| self.split_word(w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Term;

    fn one_letter() -> ForestLikeAlphabet {
        let mut b = AlphabetBuilder::new(1, 1);
        let x = b.letter("x");
        b.root(x);
        b.decorate(Gen(0), x);
        b.build()
    }

    #[test]
    fn empty_word_realizes_empty_forest() {
        let a = one_letter();
        assert!(compatible(&Word::empty(), &Forest::empty(), &a));
        assert_eq!(realize_forest(&Forest::empty(), &a), Polynomial::one());
    }

    #[test]
    fn sum_with_empty_is_identity() {
        let a = one_letter();
        let s = disjoint_sum(&a, &ForestLikeAlphabet::empty(1, 1));
        assert_eq!(s.alphabet().len(), 1);
        let f = Forest::from(Term::Node(Gen(0), alloc::vec![Term::Leaf]));
        assert_eq!(
            realize_forest(&f, s.alphabet()).len(),
            realize_forest(&f, &a).len()
        );
    }
}
