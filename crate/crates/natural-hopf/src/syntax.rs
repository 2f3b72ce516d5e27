//! Text syntax for terms, forests, trimmed forests, phrases and decorated
//! words.
//!
//! * term: `*` for a leaf, `name(t1,...,tk)` for a node, or a bare `name`
//!   for a generator of arity 0;
//! * forest: terms separated by `;`, the empty string being the empty forest;
//! * trimmed forest: the same grammar without `*`, a childless node being a
//!   bare `name`;
//! * multiset phrase: `{a,b,b} ; {c}`;
//! * word phrase: `aab, b, b` (names separated by spaces when some name is
//!   longer than one character);
//! * occurrence-vector phrase: `120 ; 1` (entries above 9 written `[1,10]`);
//! * decorated word: `3^b 1^b 2^a`.
//!
//! Whitespace between tokens is ignored everywhere.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::quotient::{CountVector, Multiset, Phrase, SigWord};
use crate::wqsym::{DecoratedLetter, DecoratedWord};
use crate::{Error, Forest, Gen, Result, Signature, Term, TrimmedForest, TrimmedTree};

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.error(alloc::format!("expected `{c}`, found `{found}`")),
                None => self.error(alloc::format!("expected `{c}`, found end of input")),
            }
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.error(alloc::format!("unexpected `{c}`")),
        }
    }

    fn ident(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let rest = &self.text[self.pos..];
        let mut end = 0;
        for (i, c) in rest.char_indices() {
            let ok = if i == 0 {
                c.is_ascii_alphabetic() || c == '_'
            } else {
                c.is_ascii_alphanumeric() || c == '_'
            };
            if !ok {
                break;
            }
            end = i + c.len_utf8();
        }
        if end == 0 {
            return self.error("expected a generator name");
        }
        self.pos += end;
        Ok(&rest[..end])
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let rest = &self.text[self.pos..];
        let end = rest
            .char_indices()
            .find(|(_, c)| !c.is_ascii_digit())
            .map_or(rest.len(), |(i, _)| i);
        if end == 0 {
            return self.error("expected a number");
        }
        let value = rest[..end]
            .parse()
            .or_else(|_| self.error("number too large"))?;
        self.pos += end;
        Ok(value)
    }

    fn generator(&mut self, sig: &Signature) -> Result<Gen> {
        let name = self.ident()?;
        sig.lookup(name)
            .ok_or_else(|| Error::UnknownGenerator(name.into()))
    }
}

fn term(cur: &mut Cursor, sig: &Signature) -> Result<Term> {
    if cur.eat('*') {
        return Ok(Term::Leaf);
    }
    let g = cur.generator(sig)?;
    let mut children = Vec::new();
    if cur.eat('(') {
        loop {
            children.push(term(cur, sig)?);
            if !cur.eat(',') {
                break;
            }
        }
        cur.expect(')')?;
    }
    if children.len() != sig.arity(g) {
        return Err(Error::ChildCount {
            name: sig.name(g).into(),
            expected: sig.arity(g),
            found: children.len(),
        });
    }
    Ok(Term::Node(g, children))
}

fn separated<T>(
    cur: &mut Cursor,
    sep: char,
    mut item: impl FnMut(&mut Cursor) -> Result<T>,
) -> Result<Vec<T>> {
    let mut out = Vec::new();
    if cur.at_end() {
        return Ok(out);
    }
    loop {
        out.push(item(cur)?);
        if !cur.eat(sep) {
            break;
        }
    }
    cur.finish()?;
    Ok(out)
}

pub fn parse_term(text: &str, sig: &Signature) -> Result<Term> {
    let mut cur = Cursor::new(text);
    let t = term(&mut cur, sig)?;
    cur.finish()?;
    Ok(t)
}

pub fn parse_forest(text: &str, sig: &Signature) -> Result<Forest> {
    let mut cur = Cursor::new(text);
    separated(&mut cur, ';', |c| term(c, sig)).map(Forest::new)
}

fn trimmed_tree(cur: &mut Cursor, sig: &Signature) -> Result<TrimmedTree> {
    let g = cur.generator(sig)?;
    let mut children = Vec::new();
    if cur.eat('(') {
        loop {
            children.push(trimmed_tree(cur, sig)?);
            if !cur.eat(',') {
                break;
            }
        }
        cur.expect(')')?;
    }
    if children.len() > sig.arity(g) {
        return Err(Error::TooManyChildren {
            name: sig.name(g).into(),
            arity: sig.arity(g),
            found: children.len(),
        });
    }
    Ok(TrimmedTree {
        generator: g,
        children,
    })
}

pub fn parse_trimmed_forest(text: &str, sig: &Signature) -> Result<TrimmedForest> {
    let mut cur = Cursor::new(text);
    separated(&mut cur, ';', |c| trimmed_tree(c, sig)).map(TrimmedForest)
}

pub fn parse_multiset(text: &str, sig: &Signature) -> Result<Multiset> {
    let mut cur = Cursor::new(text);
    let m = multiset(&mut cur, sig)?;
    cur.finish()?;
    Ok(m)
}

fn multiset(cur: &mut Cursor, sig: &Signature) -> Result<Multiset> {
    cur.expect('{')?;
    let mut gens = Vec::new();
    if !cur.eat('}') {
        loop {
            gens.push(cur.generator(sig)?);
            if !cur.eat(',') {
                break;
            }
        }
        cur.expect('}')?;
    }
    Ok(Multiset::new(gens))
}

pub fn parse_multiset_phrase(text: &str, sig: &Signature) -> Result<Phrase<Multiset>> {
    let mut cur = Cursor::new(text);
    let entries = separated(&mut cur, ';', |c| {
        let start = c.pos;
        let m = multiset(c, sig)?;
        if m.is_empty() {
            return Err(Error::Syntax {
                offset: start,
                message: "empty multiset in a phrase".into(),
            });
        }
        Ok(m)
    })?;
    Ok(Phrase::new(entries))
}

/// Parses a single word of generator names.
pub fn parse_sig_word(text: &str, sig: &Signature) -> Result<SigWord> {
    let mut gens = Vec::new();
    if sig.has_short_names() {
        for (i, c) in text.char_indices() {
            if c.is_whitespace() {
                continue;
            }
            let mut buf = [0u8; 4];
            let g = sig.lookup(c.encode_utf8(&mut buf)).ok_or_else(|| {
                if c.is_ascii_alphabetic() || c == '_' {
                    Error::UnknownGenerator(c.to_string())
                } else {
                    Error::Syntax {
                        offset: i,
                        message: alloc::format!("unexpected `{c}`"),
                    }
                }
            })?;
            gens.push(g);
        }
    } else {
        for name in text.split_whitespace() {
            gens.push(
                sig.lookup(name)
                    .ok_or_else(|| Error::UnknownGenerator(name.into()))?,
            );
        }
    }
    Ok(SigWord(gens))
}

pub fn parse_word_phrase(text: &str, sig: &Signature) -> Result<Phrase<SigWord>> {
    if text.trim().is_empty() {
        return Ok(Phrase::new([]));
    }
    let mut entries = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        let w = parse_sig_word(piece, sig).map_err(|e| match e {
            Error::Syntax { offset: o, message } => Error::Syntax {
                offset: offset + o,
                message,
            },
            other => other,
        })?;
        if w.is_empty() {
            return Err(Error::Syntax {
                offset,
                message: "empty word in a phrase".into(),
            });
        }
        entries.push(w);
        offset += piece.len() + 1;
    }
    Ok(Phrase::new(entries))
}

fn count_vector(cur: &mut Cursor) -> Result<CountVector> {
    if cur.eat('[') {
        let mut v = Vec::new();
        loop {
            v.push(cur.number()?);
            if !cur.eat(',') {
                break;
            }
        }
        cur.expect(']')?;
        return Ok(CountVector(v));
    }
    cur.skip_ws();
    let rest = &cur.text[cur.pos..];
    let end = rest
        .char_indices()
        .find(|(_, c)| !c.is_ascii_digit())
        .map_or(rest.len(), |(i, _)| i);
    if end == 0 {
        return cur.error("expected digits");
    }
    let v = rest[..end]
        .bytes()
        .map(|b| (b - b'0') as usize)
        .collect();
    cur.pos += end;
    Ok(CountVector(v))
}

pub fn parse_count_phrase(text: &str) -> Result<Phrase<CountVector>> {
    let mut cur = Cursor::new(text);
    let entries = separated(&mut cur, ';', count_vector)?;
    Ok(Phrase::new(entries))
}

pub fn parse_decorated_word(text: &str, sig: &Signature) -> Result<DecoratedWord> {
    let mut cur = Cursor::new(text);
    let mut letters = Vec::new();
    while !cur.at_end() {
        let value = cur.number()?;
        cur.expect('^')?;
        let decoration = cur.generator(sig)?;
        letters.push(DecoratedLetter { value, decoration });
    }
    Ok(DecoratedWord(letters))
}

/// Conversion to the text syntax.
pub trait Render {
    fn render_into(&self, sig: &Signature, out: &mut String);

    fn render(&self, sig: &Signature) -> String {
        let mut out = String::new();
        self.render_into(sig, &mut out);
        out
    }
}

impl Render for Term {
    fn render_into(&self, sig: &Signature, out: &mut String) {
        match self {
            Term::Leaf => out.push('*'),
            Term::Node(g, children) => {
                out.push_str(sig.name(*g));
                if !children.is_empty() {
                    out.push('(');
                    for (i, c) in children.iter().enumerate() {
                        if i > 0 {
                            out.push(',');
                        }
                        c.render_into(sig, out);
                    }
                    out.push(')');
                }
            }
        }
    }
}

fn render_joined<T: Render>(items: &[T], sep: &str, sig: &Signature, out: &mut String) {
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            out.push_str(sep);
        }
        x.render_into(sig, out);
    }
}

impl Render for Forest {
    fn render_into(&self, sig: &Signature, out: &mut String) {
        render_joined(self.terms(), " ; ", sig, out);
    }
}

impl Render for TrimmedTree {
    fn render_into(&self, sig: &Signature, out: &mut String) {
        out.push_str(sig.name(self.generator));
        if !self.children.is_empty() {
            out.push('(');
            render_joined(&self.children, ",", sig, out);
            out.push(')');
        }
    }
}

impl Render for TrimmedForest {
    fn render_into(&self, sig: &Signature, out: &mut String) {
        render_joined(self.trees(), " ; ", sig, out);
    }
}

impl Render for Multiset {
    fn render_into(&self, sig: &Signature, out: &mut String) {
        out.push('{');
        for (i, g) in self.generators().iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(sig.name(*g));
        }
        out.push('}');
    }
}

impl Render for SigWord {
    fn render_into(&self, sig: &Signature, out: &mut String) {
        let sep = if sig.has_short_names() { "" } else { " " };
        for (i, g) in self.letters().iter().enumerate() {
            if i > 0 {
                out.push_str(sep);
            }
            out.push_str(sig.name(*g));
        }
    }
}

impl Render for CountVector {
    fn render_into(&self, _sig: &Signature, out: &mut String) {
        if self.0.iter().all(|&x| x <= 9) {
            for x in &self.0 {
                let _ = write!(out, "{x}");
            }
        } else {
            out.push('[');
            for (i, x) in self.0.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                let _ = write!(out, "{x}");
            }
            out.push(']');
        }
    }
}

impl Render for Phrase<Multiset> {
    fn render_into(&self, sig: &Signature, out: &mut String) {
        render_joined(self.entries(), " ; ", sig, out);
    }
}

impl Render for Phrase<SigWord> {
    fn render_into(&self, sig: &Signature, out: &mut String) {
        render_joined(self.entries(), ", ", sig, out);
    }
}

impl Render for Phrase<CountVector> {
    fn render_into(&self, sig: &Signature, out: &mut String) {
        render_joined(self.entries(), " ; ", sig, out);
    }
}

impl Render for DecoratedWord {
    fn render_into(&self, sig: &Signature, out: &mut String) {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{}^{}", l.value, sig.name(l.decoration));
        }
    }
}
