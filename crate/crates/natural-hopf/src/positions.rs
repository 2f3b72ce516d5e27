//! Truncated alphabets of positions and of lengths, the position word of a
//! forest, weights, and recovery of a forest from its realization.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::alphabet::{AlphabetBuilder, ForestLikeAlphabet, Letter, Polynomial, Word};
use crate::{Error, Forest, Gen, Result, Signature, Term};

/// A letter `a^s_u`: a generator and a label over `0..=J`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PositionLetter {
    pub generator: Gen,
    pub label: Vec<usize>,
}

/// Writes a label as a digit string when every entry is a single digit,
/// and comma-separated otherwise.
pub fn render_label(label: &[usize], out: &mut String) {
    if label.iter().all(|&x| x <= 9) {
        for x in label {
            let _ = write!(out, "{x}");
        }
    } else {
        for (i, x) in label.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "{x}");
        }
    }
}

pub fn render_position_letter(sig: &Signature, letter: &PositionLetter) -> String {
    let mut out = String::new();
    let _ = write!(out, "a^{}_[", sig.name(letter.generator));
    render_label(&letter.label, &mut out);
    out.push(']');
    out
}

/// The alphabet of positions with labels of length at most `max_len` and
/// entries at most `max_entry`.
#[derive(Clone, Debug)]
pub struct PositionAlphabet {
    alphabet: ForestLikeAlphabet,
    letters: Vec<PositionLetter>,
    index: BTreeMap<PositionLetter, Letter>,
    max_len: usize,
    max_entry: usize,
}

/// Labels of length at most `max_len` over `0..=max_entry`, shortest first.
fn labels(max_len: usize, max_entry: usize) -> Vec<Vec<usize>> {
    let mut out = alloc::vec![Vec::new()];
    let mut layer = alloc::vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for u in &layer {
            for x in 0..=max_entry {
                let mut v: Vec<usize> = u.clone();
                v.push(x);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Roots are the letters with all-zero labels; `a^s_u ->_j a^t_v` whenever
/// `v` is `u` followed by `j` and some zeros.
pub fn alphabet_positions(sig: &Signature, max_len: usize, max_entry: usize) -> PositionAlphabet {
    let mut b = AlphabetBuilder::new(sig.len(), max_entry);
    let mut letters = Vec::new();
    let mut index = BTreeMap::new();
    for label in labels(max_len, max_entry) {
        for g in sig.generators() {
            let letter = PositionLetter {
                generator: g,
                label: label.clone(),
            };
            let id = b.letter(render_position_letter(sig, &letter));
            if label.iter().all(|&x| x == 0) {
                b.root(id);
            }
            b.decorate(g, id);
            index.insert(letter.clone(), id);
            letters.push(letter);
        }
    }
    for letter in &letters {
        let from = index[letter];
        for j in 1..=max_entry {
            let mut target = letter.label.clone();
            target.push(j);
            while target.len() <= max_len {
                for g in sig.generators() {
                    let key = PositionLetter {
                        generator: g,
                        label: target.clone(),
                    };
                    b.edge(j, from, index[&key]);
                }
                target.push(0);
            }
        }
    }
    PositionAlphabet {
        alphabet: b.build(),
        letters,
        index,
        max_len,
        max_entry,
    }
}

impl PositionAlphabet {
    pub fn alphabet(&self) -> &ForestLikeAlphabet {
        &self.alphabet
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn max_entry(&self) -> usize {
        self.max_entry
    }

    pub fn letter(&self, a: Letter) -> &PositionLetter {
        &self.letters[a.index()]
    }

    pub fn id(&self, letter: &PositionLetter) -> Option<Letter> {
        self.index.get(letter).copied()
    }

    /// The word made of the given letters, if they all fit the truncation.
    pub fn word(&self, letters: &[PositionLetter]) -> Option<Word> {
        letters.iter().map(|l| self.id(l)).collect::<Option<_>>().map(Word)
    }

    /// Total label length of a word.
    pub fn weight(&self, w: &Word) -> usize {
        w.0.iter().map(|&a| self.letter(a).label.len()).sum()
    }
}

/// The letter `a^s_l` of the alphabet of lengths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LengthLetter {
    pub generator: Gen,
    pub length: usize,
}

pub fn render_length_letter(sig: &Signature, letter: &LengthLetter) -> String {
    alloc::format!("a^{}_{}", sig.name(letter.generator), letter.length)
}

/// Every letter is a root and `a^s_l ->_j a^t_m` exactly when `l < m`.
#[derive(Clone, Debug)]
pub struct LengthAlphabet {
    alphabet: ForestLikeAlphabet,
    generators: usize,
    max_len: usize,
}

pub fn alphabet_lengths(sig: &Signature, max_len: usize) -> LengthAlphabet {
    let children = sig.max_arity();
    let mut b = AlphabetBuilder::new(sig.len(), children);
    for g in sig.generators() {
        for length in 0..=max_len {
            let id = b.letter(render_length_letter(
                sig,
                &LengthLetter {
                    generator: g,
                    length,
                },
            ));
            b.root(id);
            b.decorate(g, id);
        }
    }
    let id = |g: usize, length: usize| Letter((g * (max_len + 1) + length) as u32);
    for g in 0..sig.len() {
        for l in 0..=max_len {
            for h in 0..sig.len() {
                for m in l + 1..=max_len {
                    for j in 1..=children {
                        b.edge(j, id(g, l), id(h, m));
                    }
                }
            }
        }
    }
    LengthAlphabet {
        alphabet: b.build(),
        generators: sig.len(),
        max_len,
    }
}

impl LengthAlphabet {
    pub fn alphabet(&self) -> &ForestLikeAlphabet {
        &self.alphabet
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn id(&self, letter: LengthLetter) -> Option<Letter> {
        (letter.generator.index() < self.generators && letter.length <= self.max_len).then(|| {
            Letter((letter.generator.index() * (self.max_len + 1) + letter.length) as u32)
        })
    }

    pub fn letter(&self, a: Letter) -> LengthLetter {
        LengthLetter {
            generator: Gen((a.index() / (self.max_len + 1)) as u32),
            length: a.index() % (self.max_len + 1),
        }
    }
}

/// Replaces each position letter by the length letter of its label.
pub fn project_lengths(
    p: &Polynomial,
    positions: &PositionAlphabet,
    lengths: &LengthAlphabet,
) -> Result<Polynomial> {
    let mut out = Polynomial::zero();
    for (w, c) in p {
        let mut image = Vec::with_capacity(w.len());
        for &a in w.letters() {
            let letter = positions.letter(a);
            let target = LengthLetter {
                generator: letter.generator,
                length: letter.label.len(),
            };
            let id = lengths
                .id(target)
                .ok_or_else(|| Error::LetterOutOfRange(positions.alphabet.name(a).into()))?;
            image.push(id);
        }
        out.add_term(Word(image), c.clone());
    }
    Ok(out)
}

/// Decorations and positions of the nodes, in preorder.
pub fn pos_word(f: &Forest) -> Vec<PositionLetter> {
    f.node_table()
        .nodes()
        .iter()
        .map(|n| PositionLetter {
            generator: n.decoration,
            label: n.position.clone(),
        })
        .collect()
}

pub fn weight(letters: &[PositionLetter]) -> usize {
    letters.iter().map(|l| l.label.len()).sum()
}

/// Rebuilds a forest from node decorations and positions given in preorder.
pub fn forest_from_positions(sig: &Signature, letters: &[PositionLetter]) -> Result<Forest> {
    // Each entry: decoration, filled child slots.
    struct Open {
        generator: Gen,
        position: Vec<usize>,
        slots: Vec<Option<Term>>,
    }
    fn close(node: Open) -> Term {
        Term::Node(
            node.generator,
            node.slots
                .into_iter()
                .map(|s| s.unwrap_or(Term::Leaf))
                .collect(),
        )
    }
    fn attach(stack: &mut Vec<Open>, done: &mut Vec<Term>) -> Result<()> {
        let node = stack.pop().expect("nonempty stack");
        let j = *node.position.last().unwrap_or(&0);
        let term = close(node);
        match stack.last_mut() {
            None => done.push(term),
            Some(parent) => {
                let slot = parent.slots.get_mut(j - 1).ok_or_else(|| {
                    Error::InvalidPositions(alloc::format!("child index {j} exceeds arity"))
                })?;
                if slot.is_some() {
                    return Err(Error::InvalidPositions(alloc::format!(
                        "child slot {j} used twice"
                    )));
                }
                *slot = Some(term);
                if parent.slots[j..].iter().any(Option::is_some) {
                    return Err(Error::InvalidPositions("children out of order".into()));
                }
            }
        }
        Ok(())
    }

    let mut stack: Vec<Open> = Vec::new();
    let mut done = Vec::new();
    for letter in letters {
        if letter.generator.index() >= sig.len() {
            return Err(Error::UnknownGenerator(alloc::format!("#{}", letter.generator.0)));
        }
        let p = &letter.label;
        if p.contains(&0) {
            return Err(Error::InvalidPositions("zero entry in a position".into()));
        }
        // Close every open node that is not a proper prefix of p.
        while let Some(top) = stack.last() {
            if top.position.len() < p.len() && p.starts_with(&top.position) {
                break;
            }
            attach(&mut stack, &mut done)?;
        }
        let expected = stack.last().map_or(0, |top| top.position.len() + 1);
        if p.len() != expected {
            return Err(Error::InvalidPositions(alloc::format!(
                "position of length {} has no parent",
                p.len()
            )));
        }
        stack.push(Open {
            generator: letter.generator,
            position: p.clone(),
            slots: alloc::vec![None; sig.arity(letter.generator)],
        });
    }
    while !stack.is_empty() {
        attach(&mut stack, &mut done)?;
    }
    Ok(Forest::new(done))
}

/// Recovers `f` from the realization of `f` over a position alphabet deep
/// enough for it: the unique monomial of minimal weight is the position
/// word of `f` up to the zeros padding its labels.
pub fn leading_forest(p: &Polynomial, positions: &PositionAlphabet, sig: &Signature) -> Result<Forest> {
    let mut best: Option<(usize, &Word)> = None;
    let mut tied = false;
    for (w, _) in p {
        let wt = positions.weight(w);
        match best {
            Some((b, _)) if wt > b => {}
            Some((b, _)) if wt == b => tied = true,
            _ => {
                best = Some((wt, w));
                tied = false;
            }
        }
    }
    let Some((_, w)) = best else {
        return Err(Error::NoLeadingMonomial);
    };
    if tied {
        return Err(Error::NoLeadingMonomial);
    }
    let stripped: Vec<PositionLetter> = w
        .letters()
        .iter()
        .map(|&a| {
            let letter = positions.letter(a);
            PositionLetter {
                generator: letter.generator,
                label: letter.label.iter().copied().filter(|&x| x != 0).collect(),
            }
        })
        .collect();
    forest_from_positions(sig, &stripped)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alphabet_sizes() {
        let sig = Signature::from_profile(&[0, 1, 1, 1]);
        assert_eq!(alphabet_positions(&sig, 1, 3).alphabet().len(), 15);
        let zero = alphabet_positions(&sig, 0, 3);
        assert!(zero.alphabet().letters().all(|a| zero.alphabet().is_root(a)));
        assert_eq!(alphabet_lengths(&sig, 2).alphabet().len(), 9);
    }

    #[test]
    fn label_rendering() {
        let mut s = String::new();
        render_label(&[1, 0, 2], &mut s);
        s.push(' ');
        render_label(&[1, 10], &mut s);
        assert_eq!(s, "102 1,10");
    }

    #[test]
    fn empty_polynomial_has_no_leading_forest() {
        let sig = Signature::from_profile(&[0, 1]);
        let ap = alphabet_positions(&sig, 1, 1);
        assert_eq!(
            leading_forest(&Polynomial::zero(), &ap, &sig),
            Err(Error::NoLeadingMonomial)
        );
        assert_eq!(
            leading_forest(&Polynomial::one(), &ap, &sig),
            Ok(Forest::empty())
        );
    }
}
