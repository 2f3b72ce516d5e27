//! Decorated words, packing, the monomial basis over the alphabet of
//! lengths, and the expansion of forest realizations in that basis.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;

use itertools::Itertools;

use crate::alphabet::{Polynomial, Word};
use crate::positions::{LengthAlphabet, LengthLetter};
use crate::{Error, Forest, Gen, LinComb, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DecoratedLetter {
    pub value: usize,
    pub decoration: Gen,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DecoratedWord(pub Vec<DecoratedLetter>);

impl DecoratedWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_value(&self) -> usize {
        self.0.iter().map(|l| l.value).max().unwrap_or(0)
    }
}

impl Ord for DecoratedWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for DecoratedWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Replaces each value by its rank among the distinct values of the word.
pub fn pack(u: &DecoratedWord) -> DecoratedWord {
    let values: Vec<usize> = u
        .0
        .iter()
        .map(|l| l.value)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    DecoratedWord(
        u.0.iter()
            .map(|l| DecoratedLetter {
                value: values.binary_search(&l.value).expect("value present") + 1,
                decoration: l.decoration,
            })
            .collect(),
    )
}

pub fn is_packed(u: &DecoratedWord) -> bool {
    pack(u) == *u
}

/// Letter by letter transcription `k^s -> a^s_k`, when it fits the alphabet.
pub fn monomial_of(u: &DecoratedWord, lengths: &LengthAlphabet) -> Option<Word> {
    u.0.iter()
        .map(|l| {
            lengths.id(LengthLetter {
                generator: l.decoration,
                length: l.value,
            })
        })
        .collect::<Option<Vec<_>>>()
        .map(Word)
}

/// Sum of the transcriptions of all words packing to `u`, their values
/// ranging over the lengths `0..=L` of the alphabet.
pub fn m_polynomial(u: &DecoratedWord, lengths: &LengthAlphabet) -> Result<Polynomial> {
    if !is_packed(u) {
        return Err(Error::NotPacked);
    }
    let k = u.max_value();
    let mut out = Polynomial::zero();
    for chosen in (0..=lengths.max_len()).combinations(k) {
        let word = u
            .0
            .iter()
            .map(|l| {
                lengths
                    .id(LengthLetter {
                        generator: l.decoration,
                        length: chosen[l.value - 1],
                    })
                    .ok_or_else(|| Error::UnknownGenerator(alloc::format!("#{}", l.decoration.0)))
            })
            .collect::<Result<Vec<_>>>()?;
        out.add_term(Word(word), 1);
    }
    Ok(out)
}

/// Packed words whose transcription is compatible with `f` over the
/// alphabet of lengths: decorations follow the nodes in preorder and values
/// strictly increase from parent to child.
pub fn wqsym_decompose(f: &Forest) -> LinComb<DecoratedWord> {
    let table = f.node_table();
    let n = table.len();
    let mut values = Vec::with_capacity(n);
    let mut found = Vec::new();
    assign(&table, n, &mut values, &mut found);
    LinComb::from_keys(found.into_iter().map(|vals: Vec<usize>| {
        DecoratedWord(
            vals.iter()
                .zip(table.nodes())
                .map(|(&value, node)| DecoratedLetter {
                    value,
                    decoration: node.decoration,
                })
                .collect(),
        )
    }))
}

fn assign(table: &crate::NodeTable, n: usize, values: &mut Vec<usize>, found: &mut Vec<Vec<usize>>) {
    let i = values.len();
    if i == n {
        let distinct: BTreeSet<usize> = values.iter().copied().collect();
        if distinct.len() == distinct.last().copied().unwrap_or(0) {
            found.push(values.clone());
        }
        return;
    }
    let low = match table.node(i).parent {
        None => 1,
        Some((p, _)) => values[p] + 1,
    };
    for v in low..=n {
        values.push(v);
        assign(table, n, values, found);
        values.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(letters: &[(usize, u32)]) -> DecoratedWord {
        DecoratedWord(
            letters.iter()
                .map(|&(value, g)| DecoratedLetter {
                    value,
                    decoration: Gen(g),
                })
                .collect(),
        )
    }

    #[test]
    fn packing() {
        let u = word(&[(4, 1), (2, 1), (3, 0), (4, 1), (4, 2), (6, 2), (3, 0)]);
        let p = word(&[(3, 1), (1, 1), (2, 0), (3, 1), (3, 2), (4, 2), (2, 0)]);
        assert_eq!(pack(&u), p);
        assert!(is_packed(&p));
        assert!(is_packed(&DecoratedWord::default()));
        assert!(!is_packed(&word(&[(2, 0)])));
    }

    #[test]
    fn empty_forest_gives_empty_word() {
        let d = wqsym_decompose(&Forest::empty());
        assert_eq!(d, LinComb::basis(DecoratedWord::default()));
    }
}
