//! Output formats.
//!
//! Text output writes one basis element per line, in canonical order:
//!
//! * linear combination: `COEFF * [KEY]`
//! * tensor: `COEFF * [LEFT] (x) [RIGHT]`
//! * polynomial: `COEFF * [LETTER LETTER ...]`, letters separated by spaces
//!
//! A zero combination prints the single line `0`. Keys use the term,
//! forest and phrase syntax accepted on input, so `[]` is the empty forest
//! or phrase.
//!
//! JSON output is a single compact line holding an array of rows:
//!
//! * linear combination: `{"key": KEY, "coeff": C}`
//! * tensor: `{"left": LEFT, "right": RIGHT, "coeff": C}`
//! * polynomial: `{"word": [LETTER, ...], "coeff": C}`
//!
//! Coefficients are JSON integers when they fit in 64 bits and decimal
//! strings otherwise. Parsing a document and printing it again reproduces
//! the same bytes.

use std::fmt::Write as _;
use std::str::FromStr;

use natural_hopf::lincomb::TensorComb;
use natural_hopf::{ForestLikeAlphabet, LinComb, Polynomial, Word};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// An exact coefficient with the JSON encoding described above.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coeff(pub BigInt);

impl Serialize for Coeff {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(small) => s.serialize_i64(small),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Coeff {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Small(i64),
            Big(String),
        }
        match Raw::deserialize(d)? {
            Raw::Small(x) => Ok(Coeff(x.into())),
            Raw::Big(s) => BigInt::from_str(&s)
                .map(Coeff)
                .map_err(|_| serde::de::Error::custom(format!("`{s}` is not an integer"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KeyRow {
    pub key: String,
    pub coeff: Coeff,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorRow {
    pub left: String,
    pub right: String,
    pub coeff: Coeff,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WordRow {
    pub word: Vec<String>,
    pub coeff: Coeff,
}

pub fn lincomb_rows<K: Ord + Clone>(x: &LinComb<K>, mut render: impl FnMut(&K) -> String) -> Vec<KeyRow> {
    x.iter()
        .map(|(k, c)| KeyRow {
            key: render(k),
            coeff: Coeff(c.clone()),
        })
        .collect()
}

pub fn tensor_rows<K: Ord + Clone>(x: &TensorComb<K>, mut render: impl FnMut(&K) -> String) -> Vec<TensorRow> {
    x.iter()
        .map(|((l, r), c)| TensorRow {
            left: render(l),
            right: render(r),
            coeff: Coeff(c.clone()),
        })
        .collect()
}

pub fn polynomial_rows(p: &Polynomial, alphabet: &ForestLikeAlphabet) -> Vec<WordRow> {
    p.iter()
        .map(|(w, c)| WordRow {
            word: w.letters().iter().map(|&a| alphabet.name(a).to_string()).collect(),
            coeff: Coeff(c.clone()),
        })
        .collect()
}

/// Rebuilds a linear combination from rows, parsing each key.
pub fn lincomb_from_rows<K: Ord + Clone, E>(
    rows: &[KeyRow],
    mut parse: impl FnMut(&str) -> Result<K, E>,
) -> Result<LinComb<K>, E> {
    rows.iter()
        .map(|r| Ok((parse(&r.key)?, r.coeff.0.clone())))
        .collect()
}

pub fn tensor_from_rows<K: Ord + Clone, E>(
    rows: &[TensorRow],
    mut parse: impl FnMut(&str) -> Result<K, E>,
) -> Result<TensorComb<K>, E> {
    rows.iter()
        .map(|r| Ok(((parse(&r.left)?, parse(&r.right)?), r.coeff.0.clone())))
        .collect()
}

pub fn polynomial_from_rows(rows: &[WordRow], alphabet: &ForestLikeAlphabet) -> Result<Polynomial, String> {
    rows.iter()
        .map(|r| {
            let letters = r
                .word
                .iter()
                .map(|name| alphabet.lookup(name).ok_or_else(|| format!("unknown letter `{name}`")))
                .collect::<Result<Vec<_>, _>>()?;
            Ok((Word(letters), r.coeff.0.clone()))
        })
        .collect()
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("rows always serialize");
    s.push('\n');
    s
}

pub fn lincomb_text(rows: &[KeyRow]) -> String {
    if rows.is_empty() {
        return "0\n".into();
    }
    let mut s = String::new();
    for r in rows {
        let _ = writeln!(s, "{} * [{}]", r.coeff.0, r.key);
    }
    s
}

pub fn tensor_text(rows: &[TensorRow]) -> String {
    if rows.is_empty() {
        return "0\n".into();
    }
    let mut s = String::new();
    for r in rows {
        let _ = writeln!(s, "{} * [{}] (x) [{}]", r.coeff.0, r.left, r.right);
    }
    s
}

pub fn polynomial_text(rows: &[WordRow]) -> String {
    if rows.is_empty() {
        return "0\n".into();
    }
    let mut s = String::new();
    for r in rows {
        let _ = writeln!(s, "{} * [{}]", r.coeff.0, r.word.join(" "));
    }
    s
}
