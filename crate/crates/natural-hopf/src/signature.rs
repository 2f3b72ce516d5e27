//! Signatures: finite lists of named generators with arities.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::{Error, Result};

/// Index of a generator inside its signature.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen(pub u32);

impl Gen {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    names: Vec<String>,
    arities: Vec<usize>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Name given to the `k`-th generator of a signature built from a profile:
/// `a`, `b`, ..., `z`, `a1`, `b1`, ...
pub fn auto_name(k: usize) -> String {
    let letter = (b'a' + (k % 26) as u8) as char;
    if k < 26 {
        letter.to_string()
    } else {
        alloc::format!("{letter}{}", k / 26)
    }
}

impl Signature {
    pub fn new<I, S>(generators: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, usize)>,
        S: Into<String>,
    {
        let mut names: Vec<String> = Vec::new();
        let mut arities = Vec::new();
        for (name, arity) in generators {
            let name = name.into();
            if !valid_name(&name) {
                return Err(Error::InvalidName(name));
            }
            if names.contains(&name) {
                return Err(Error::DuplicateName(name));
            }
            names.push(name);
            arities.push(arity);
        }
        Ok(Signature { names, arities })
    }

    /// Builds a signature from its profile: `counts[n]` generators of arity
    /// `n`, named automatically in order of increasing arity.
    pub fn from_profile(counts: &[usize]) -> Self {
        let mut names = Vec::new();
        let mut arities = Vec::new();
        for (arity, &count) in counts.iter().enumerate() {
            for _ in 0..count {
                names.push(auto_name(names.len()));
                arities.push(arity);
            }
        }
        Signature { names, arities }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn arity(&self, g: Gen) -> usize {
        self.arities[g.index()]
    }

    pub fn name(&self, g: Gen) -> &str {
        &self.names[g.index()]
    }

    pub fn lookup(&self, name: &str) -> Option<Gen> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| Gen(i as u32))
    }

    pub fn generators(&self) -> impl Iterator<Item = Gen> + '_ {
        (0..self.names.len()).map(|i| Gen(i as u32))
    }

    pub fn max_arity(&self) -> usize {
        self.arities.iter().copied().max().unwrap_or(0)
    }

    /// Number of generators of each arity, up to the maximal one.
    pub fn profile(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        if !self.is_empty() {
            counts.resize(self.max_arity() + 1, 0);
        }
        for &a in &self.arities {
            counts[a] += 1;
        }
        counts
    }

    pub fn is_binary(&self) -> bool {
        self.arities.iter().all(|&a| a == 2)
    }

    /// True when every generator name is a single character, so that words
    /// over the signature can be written without separators.
    pub fn has_short_names(&self) -> bool {
        self.names.iter().all(|n| n.len() == 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profile_round_trip() {
        let sig = Signature::from_profile(&[0, 1, 1, 1]);
        assert_eq!(sig.profile(), [0, 1, 1, 1]);
        assert_eq!(sig.name(Gen(2)), "c");
        assert_eq!(sig.arity(Gen(2)), 3);
        assert_eq!(Signature::from_profile(&[]).profile(), Vec::<usize>::new());
    }

    #[test]
    fn rejects_bad_names() {
        assert_eq!(
            Signature::new([("a", 1), ("a", 2)]),
            Err(Error::DuplicateName("a".into()))
        );
        assert!(Signature::new([("1x", 1)]).is_err());
        assert!(Signature::new([("x_1", 1)]).is_ok());
    }
}
