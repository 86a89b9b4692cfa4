//! Finite presentations and their line-oriented source format.
//!
//! ```text
//! group heisenberg5
//! gens a b c
//! rel a^5, b^5, c^5
//! rel c = [a,b]        # equations become relators w1*w2^-1
//! rel [a,c] = 1; rel [b,c]
//! ```
//!
//! Words use `*` for products, `^k` for integer powers (negative allowed,
//! zero rejected), `[x,y]` for commutators (`x^-1 y^-1 x y`, nesting allowed),
//! parentheses for grouping and `1` for the identity. `;` separates
//! statements like a newline does and `,` separates relators inside `rel`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::word::Word;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePresentation {
    pub name: Option<String>,
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl FinitePresentation {
    pub fn new(name: Option<String>, generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        let n = generators.len() as u32;
        for (i, g) in generators.iter().enumerate() {
            if !is_identifier(g) {
                return Err(Error::Input(alloc::format!("invalid generator name {g:?}")));
            }
            if generators[..i].contains(g) {
                return Err(Error::Input(alloc::format!("generator {g} declared twice")));
            }
        }
        for r in &relators {
            if r.max_generator().is_some_and(|m| m >= n) {
                return Err(Error::Input("relator uses an undeclared generator".into()));
            }
        }
        let relators = relators.into_iter().filter(|r| !r.is_identity()).collect();
        Ok(FinitePresentation {
            name,
            generators,
            relators,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Parser::default().parse(text)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn generator_index(&self, name: &str) -> Option<u32> {
        self.generators.iter().position(|g| g == name).map(|i| i as u32)
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    /// Same presentation with relators reordered.
    pub fn with_relators(&self, relators: Vec<Word>) -> Result<Self> {
        FinitePresentation::new(self.name.clone(), self.generators.clone(), relators)
    }

    /// Parses a word over this presentation's generators.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let mut p = WordParser {
            src: text.as_bytes(),
            pos: 0,
            line: 1,
            col0: 0,
            gens: &self.generators,
        };
        let w = p.word()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(w)
    }

    /// Source text that parses back to an identical presentation.
    pub fn to_source(&self) -> String {
        let mut out = String::new();
        if let Some(n) = &self.name {
            out.push_str("group ");
            out.push_str(n);
            out.push('\n');
        }
        out.push_str("gens");
        for g in &self.generators {
            out.push(' ');
            out.push_str(g);
        }
        out.push('\n');
        for r in &self.relators {
            out.push_str("rel ");
            out.push_str(&r.to_source(&self.generators));
            out.push('\n');
        }
        out
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Default)]
struct Parser {
    name: Option<String>,
    gens: Vec<String>,
    rels: Vec<Word>,
}

impl Parser {
    fn parse(mut self, text: &str) -> Result<FinitePresentation> {
        for (li, raw_line) in text.lines().enumerate() {
            let line_no = li + 1;
            let line = match raw_line.find('#') {
                Some(i) => &raw_line[..i],
                None => raw_line,
            };
            let mut offset = 0;
            for stmt in line.split(';') {
                self.statement(stmt, line_no, offset)?;
                offset += stmt.len() + 1;
            }
        }
        FinitePresentation::new(self.name, self.gens, self.rels)
    }

    fn statement(&mut self, stmt: &str, line: usize, offset: usize) -> Result<()> {
        let trimmed = stmt.trim_start();
        if trimmed.is_empty() {
            return Ok(());
        }
        let lead = stmt.len() - trimmed.len();
        let (keyword, rest) = match trimmed.find(char::is_whitespace) {
            Some(i) => (&trimmed[..i], &trimmed[i..]),
            None => (trimmed, ""),
        };
        let rest_col = offset + lead + keyword.len();
        match keyword {
            "group" => {
                let n = rest.trim();
                if n.is_empty() {
                    return Err(syntax(line, offset + lead + 1, "group name expected"));
                }
                self.name = Some(n.to_string());
            }
            "gens" => {
                for (at, name) in tokens(rest) {
                    let column = rest_col + at + 1;
                    if !is_identifier(name) {
                        return Err(syntax(line, column, &alloc::format!("invalid generator name {name:?}")));
                    }
                    if self.gens.iter().any(|g| g == name) {
                        return Err(syntax(line, column, &alloc::format!("generator {name} declared twice")));
                    }
                    self.gens.push(name.to_string());
                }
            }
            "rel" => {
                let mut p = WordParser {
                    src: rest.as_bytes(),
                    pos: 0,
                    line,
                    col0: rest_col,
                    gens: &self.gens,
                };
                loop {
                    p.skip_ws();
                    if p.pos >= p.src.len() {
                        return Err(p.err("relator expected"));
                    }
                    let lhs = p.word()?;
                    p.skip_ws();
                    let rel = if p.peek() == Some(b'=') {
                        p.pos += 1;
                        let rhs = p.word()?;
                        lhs.mul(&rhs.inverse())
                    } else {
                        lhs
                    };
                    self.rels.push(rel);
                    p.skip_ws();
                    match p.peek() {
                        None => break,
                        Some(b',') => p.pos += 1,
                        Some(_) => return Err(p.err("expected ',' or end of statement")),
                    }
                }
            }
            other => {
                return Err(syntax(
                    line,
                    offset + lead + 1,
                    &alloc::format!("unknown statement {other:?}"),
                ))
            }
        }
        Ok(())
    }
}

/// Whitespace- or comma-separated tokens with their byte offsets.
fn tokens(s: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices() {
        let sep = c.is_whitespace() || c == ',';
        match (sep, start) {
            (true, Some(b)) => {
                out.push((b, &s[b..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(b) = start {
        out.push((b, &s[b..]));
    }
    out.into_iter()
}

fn syntax(line: usize, column: usize, message: &str) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.to_string(),
    }
}

struct WordParser<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col0: usize,
    gens: &'a [String],
}

impl WordParser<'_> {
    fn err(&self, message: &str) -> Error {
        syntax(self.line, self.col0 + self.pos + 1, message)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn word(&mut self) -> Result<Word> {
        let mut w = self.term()?;
        loop {
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                let t = self.term()?;
                w = w.mul(&t);
            } else {
                return Ok(w);
            }
        }
    }

    fn term(&mut self) -> Result<Word> {
        let base = self.factor()?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let k = self.integer()?;
            if k == 0 {
                self.pos = start;
                return Err(self.err("zero exponent"));
            }
            Ok(base.pow(k))
        } else {
            Ok(base)
        }
    }

    fn integer(&mut self) -> Result<i64> {
        let mut neg = false;
        if self.peek() == Some(b'-') {
            neg = true;
            self.pos += 1;
        } else if self.peek() == Some(b'+') {
            self.pos += 1;
        }
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("integer exponent expected"));
        }
        let digits = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let v: i64 = digits.parse().map_err(|_| self.err("exponent out of range"))?;
        if v > 1_000_000 {
            return Err(self.err("exponent out of range"));
        }
        Ok(if neg { -v } else { v })
    }

    fn factor(&mut self) -> Result<Word> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let w = self.word()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(w)
            }
            Some(b'[') => {
                self.pos += 1;
                let x = self.word()?;
                self.skip_ws();
                if self.peek() != Some(b',') {
                    return Err(self.err("expected ',' in commutator"));
                }
                self.pos += 1;
                let y = self.word()?;
                self.skip_ws();
                if self.peek() != Some(b']') {
                    return Err(self.err("expected ']'"));
                }
                self.pos += 1;
                Ok(Word::commutator(&x, &y))
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Word::identity())
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self
                    .peek()
                    .is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_')
                {
                    self.pos += 1;
                }
                let name = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.gens.iter().position(|g| g == name) {
                    Some(i) => Ok(Word::generator(i as u32)),
                    None => {
                        self.pos = start;
                        Err(self.err(&alloc::format!("undeclared generator {name}")))
                    }
                }
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of word")),
        }
    }
}
