//! Small hand-rolled cursor shared by the textual formats (Laurent literals,
//! partitions, expressions, diagram S-expressions).

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {pos}: expected {expected}, found {found}")]
pub struct ParseError {
    /// Byte offset into the parsed source.
    pub pos: usize,
    pub expected: String,
    pub found: String,
}

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub fn pos(&self) -> usize {
        self.pos
    }

    pub fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    pub fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    pub fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    pub fn starts_with(&self, s: &str) -> bool {
        self.rest().starts_with(s)
    }

    /// Consume `s` if it is next; no whitespace skipping.
    pub fn eat(&mut self, s: &str) -> bool {
        if self.starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, s: &str) -> Result<(), ParseError> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.error(&format!("'{s}'")))
        }
    }

    pub fn error(&self, expected: &str) -> ParseError {
        let found = match self.peek() {
            None => "end of input".to_string(),
            Some(_) => {
                let snippet: String = self.rest().chars().take(8).collect();
                format!("'{snippet}'")
            }
        };
        ParseError { pos: self.pos, expected: expected.to_string(), found }
    }

    /// Unsigned decimal literal as a string of digits.
    pub fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if self.pos == start {
            None
        } else {
            Some(&self.src[start..self.pos])
        }
    }

    pub fn uint(&mut self) -> Result<u64, ParseError> {
        let start = self.pos;
        match self.digits() {
            Some(d) => d.parse().map_err(|_| ParseError {
                pos: start,
                expected: "integer in range".into(),
                found: format!("'{d}'"),
            }),
            None => Err(self.error("unsigned integer")),
        }
    }

    pub fn int(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        let neg = self.eat("-");
        match self.digits() {
            Some(d) => {
                let v: i64 = d.parse().map_err(|_| ParseError {
                    pos: start,
                    expected: "integer in range".into(),
                    found: format!("'{d}'"),
                })?;
                Ok(if neg { -v } else { v })
            }
            None => Err(self.error("integer")),
        }
    }

    pub fn finish(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("end of input"))
        }
    }
}
