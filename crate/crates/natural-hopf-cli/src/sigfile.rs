//! Signature files: one `name arity` pair per line. Blank lines are
//! skipped and `#` starts a comment.

use std::fmt;
use std::path::Path;

use natural_hopf::Signature;

#[derive(Debug)]
pub enum SigFileError {
    Io(std::io::Error),
    Line { line: usize, message: String },
}

impl fmt::Display for SigFileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SigFileError::Io(e) => write!(f, "cannot read signature file: {e}"),
            SigFileError::Line { line, message } => write!(f, "signature file line {line}: {message}"),
        }
    }
}

impl std::error::Error for SigFileError {}

pub fn parse_signature(text: &str) -> Result<Signature, SigFileError> {
    let mut generators = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |message: String| SigFileError::Line { line: k + 1, message };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [name, arity] = fields.as_slice() else {
            return Err(bad(format!("expected `name arity`, got `{line}`")));
        };
        let arity: usize = arity.parse().map_err(|_| bad(format!("arity `{arity}` is not a natural number")))?;
        generators.push((name.to_string(), arity));
    }
    Signature::new(generators).map_err(|e| SigFileError::Line {
        line: 0,
        message: e.to_string(),
    })
}

pub fn read_signature(path: &Path) -> Result<Signature, SigFileError> {
    let text = std::fs::read_to_string(path).map_err(SigFileError::Io)?;
    parse_signature(&text)
}

/// Parses `--profile` values such as `0,1,1,1`.
pub fn parse_profile(text: &str) -> Result<Signature, String> {
    let counts = text
        .split(',')
        .map(|c| c.trim().parse::<usize>().map_err(|_| format!("bad profile entry `{c}`")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Signature::from_profile(&counts))
}
