//! Text format for presentations.
//!
//! ```text
//! # comments and blank lines are ignored
//! D=2 N=3
//! 1*121 - 1*211
//! 2/3*212 + -1*221
//! ```
//!
//! One relation per line. A term is `coeff*word`, or a bare word with
//! coefficient 1. Words are digit strings, or dot-separated letters
//! (`10.2.11`) when some letter exceeds 9. No relation lines means the free
//! algebra.

use std::fmt;
use std::fmt::Write as _;

use nhom_core::{Presentation, Scalar, TensorVector, Word};
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek().filter(|c| c.is_whitespace()) {
            self.pos += c.len_utf8();
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.text.len()
    }

    fn error_at(&self, pos: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column: self.text[..pos].chars().count() + 1,
            message: message.into(),
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        self.error_at(self.pos, message)
    }

    /// Longest run of characters accepted by `ok`.
    fn take(&mut self, ok: impl Fn(char) -> bool) -> (usize, &'a str) {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if !ok(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        (start, &self.text[start..self.pos])
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

fn parse_header(cur: &mut Cursor<'_>) -> Result<(usize, usize), ParseError> {
    let mut values = [None, None];
    for (slot, key) in ["D", "N"].iter().enumerate() {
        cur.skip_ws();
        let (start, name) = cur.take(|c| c.is_ascii_alphabetic());
        if name != *key {
            return Err(cur.error_at(start, format!("expected header `D=<int> N=<int>`, found `{name}`")));
        }
        if !cur.eat('=') {
            return Err(cur.error(format!("expected `=` after {key}")));
        }
        cur.skip_ws();
        let (start, digits) = cur.take(|c| c.is_ascii_digit());
        let value: usize = digits
            .parse()
            .map_err(|_| cur.error_at(start, format!("expected an integer for {key}")))?;
        values[slot] = Some(value);
    }
    if !cur.at_end() {
        return Err(cur.error("unexpected text after header"));
    }
    let d = values[0].unwrap_or_default();
    let n = values[1].unwrap_or_default();
    if d == 0 || d > u8::MAX as usize {
        return Err(ParseError { line: cur.line, column: 1, message: format!("D={d} outside 1..=255") });
    }
    if !(2..=Word::MAX_LEN).contains(&n) {
        return Err(ParseError {
            line: cur.line,
            column: 1,
            message: format!("N={n} outside 2..={}", Word::MAX_LEN),
        });
    }
    Ok((d, n))
}

fn parse_word(cur: &mut Cursor<'_>, d: usize, n: usize) -> Result<Word, ParseError> {
    cur.skip_ws();
    let (start, token) = cur.take(|c| c.is_ascii_digit() || c == '.');
    if token.is_empty() {
        return Err(match cur.peek() {
            Some(c) => cur.error(format!("expected a word, found `{c}`")),
            None => cur.error("expected a word"),
        });
    }
    if let Some(c) = cur.peek().filter(|c| !c.is_whitespace() && !matches!(c, '+' | '-')) {
        return Err(cur.error(format!("unexpected `{c}` after word `{token}`")));
    }
    let letters: Vec<u32> = if token.contains('.') {
        token
            .split('.')
            .map(|part| part.parse::<u32>().map_err(|_| cur.error_at(start, format!("malformed word `{token}`"))))
            .collect::<Result<_, _>>()?
    } else {
        token.chars().map(|c| c.to_digit(10).unwrap_or(0)).collect()
    };
    if let Some(bad) = letters.iter().find(|&&l| l == 0 || l as usize > d) {
        return Err(cur.error_at(start, format!("letter {bad} in `{token}` outside 1..={d}")));
    }
    if letters.len() != n {
        return Err(cur.error_at(
            start,
            format!("word `{token}` has degree {}, relations must have degree N={n}", letters.len()),
        ));
    }
    let letters: Vec<u8> = letters.into_iter().map(|l| l as u8).collect();
    Word::new(&letters).map_err(|e| cur.error_at(start, e.to_string()))
}

/// `[sign] coeff*word` or `[sign] word`.
fn parse_term(cur: &mut Cursor<'_>, d: usize, n: usize) -> Result<(Scalar, Word), ParseError> {
    let negative = if cur.eat('-') {
        true
    } else {
        cur.eat('+');
        false
    };
    cur.skip_ws();
    let mark = cur.pos;
    let (start, token) = cur.take(|c| c.is_ascii_digit() || c == '.' || c == '/');
    let coeff = if cur.eat('*') {
        if token.is_empty() {
            return Err(cur.error_at(start, "missing coefficient before `*`"));
        }
        token
            .parse::<Scalar>()
            .map_err(|_| cur.error_at(start, format!("malformed coefficient `{token}`")))?
    } else {
        cur.pos = mark;
        Scalar::one()
    };
    let w = parse_word(cur, d, n)?;
    Ok((if negative { -coeff } else { coeff }, w))
}

fn parse_relation(cur: &mut Cursor<'_>, d: usize, n: usize) -> Result<TensorVector, ParseError> {
    let mut v = TensorVector::zero(n);
    let (c, w) = parse_term(cur, d, n)?;
    v.add_term(w, c);
    while !cur.at_end() {
        let negative = if cur.eat('+') {
            false
        } else if cur.eat('-') {
            true
        } else {
            return Err(cur.error("expected `+` or `-` between terms"));
        };
        let (c, w) = parse_term(cur, d, n)?;
        v.add_term(w, if negative { -c } else { c });
    }
    Ok(v)
}

/// Parses a presentation; errors cite 1-based line and column.
pub fn parse(text: &str) -> Result<Presentation, ParseError> {
    let mut header = None;
    let mut relations = Vec::new();
    let mut last_line = 1;
    for (i, raw) in text.lines().enumerate() {
        last_line = i + 1;
        let content = strip_comment(raw);
        let mut cur = Cursor { text: content, pos: 0, line: i + 1 };
        if cur.at_end() {
            continue;
        }
        cur.pos = 0;
        match header {
            None => header = Some(parse_header(&mut cur)?),
            Some((d, n)) => relations.push(parse_relation(&mut cur, d, n)?),
        }
    }
    let (d, n) = header.ok_or(ParseError {
        line: last_line,
        column: 1,
        message: "missing header `D=<int> N=<int>`".into(),
    })?;
    Presentation::from_vectors(d, n, &relations).map_err(|e| ParseError {
        line: last_line,
        column: 1,
        message: e.to_string(),
    })
}

pub fn read(path: &std::path::Path) -> Result<Presentation, ReadError> {
    let text = std::fs::read_to_string(path).map_err(|e| ReadError::Io(path.display().to_string(), e))?;
    parse(&text).map_err(|e| ReadError::Parse(path.display().to_string(), e))
}

#[derive(Debug)]
pub enum ReadError {
    Io(String, std::io::Error),
    Parse(String, ParseError),
}

impl fmt::Display for ReadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReadError::Io(path, e) => write!(f, "{path}: {e}"),
            ReadError::Parse(path, e) => write!(f, "{path}: {e}"),
        }
    }
}

impl std::error::Error for ReadError {}

/// Writes the reduced basis of `R`, one relation per line, leading word first.
pub fn write(p: &Presentation) -> String {
    let mut out = format!("D={} N={}\n", p.generators(), p.degree());
    for row in p.relations().rows() {
        let mut terms: Vec<(&Word, &Scalar)> = row.iter().collect();
        terms.reverse();
        for (i, (w, c)) in terms.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let _ = write!(out, "{}*{w}", c.abs());
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_only_is_free() {
        let p = parse("D=3 N=2\n").unwrap();
        assert_eq!(p, Presentation::free(3, 2).unwrap());
    }

    #[test]
    fn coefficient_forms() {
        let p = parse("D=2 N=2\n-1/2*12 + 21\n").unwrap();
        let q = parse("D=2 N=2\n12 - 2*21").unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn dotted_words() {
        let p = parse("D=11 N=2\n1*10.11 - 1*11.10").unwrap();
        assert_eq!(p.relations().dim(), 1);
        assert!(write(&p).contains("11.10"));
    }
}
