//! Small hand-rolled cursor shared by the literal grammars.
//!
//! Every grammar in the crate (signatures, tableau literals, pair literals,
//! words) is tokenized here so parse errors report a byte offset and the
//! token that was expected at that offset.

use crate::error::{Error, Result};

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    pub(crate) fn pos(&self) -> usize {
        self.pos
    }

    pub(crate) fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub(crate) fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    pub(crate) fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    pub(crate) fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.src.len()
    }

    pub(crate) fn error(&self, expected: impl Into<String>) -> Error {
        let found = match self.peek() {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_string(),
        };
        Error::Parse {
            offset: self.pos,
            expected: expected.into(),
            found,
        }
    }

    /// Skips whitespace, then consumes `c` if it is next.
    pub(crate) fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("'{c}'")))
        }
    }

    pub(crate) fn expect_end(&mut self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("end of input"))
        }
    }

    /// Optionally signed decimal integer.
    pub(crate) fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let negative = match self.peek() {
            Some('-') => {
                self.bump();
                true
            }
            Some('+') => {
                self.bump();
                false
            }
            _ => false,
        };
        let digits_start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if self.pos == digits_start {
            return Err(self.error("integer"));
        }
        let text = &self.src[digits_start..self.pos];
        let magnitude: i64 = text.parse().map_err(|_| Error::Parse {
            offset: start,
            expected: "integer that fits in 64 bits".into(),
            found: format!("'{text}'"),
        })?;
        Ok(if negative { -magnitude } else { magnitude })
    }

    pub(crate) fn uint(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        let v = self.int()?;
        u64::try_from(v).map_err(|_| Error::Parse {
            offset: start,
            expected: "non-negative integer".into(),
            found: v.to_string(),
        })
    }

    /// Comma-separated integer list, possibly empty when `allow_empty`.
    pub(crate) fn int_list(&mut self, terminators: &[char], allow_empty: bool) -> Result<Vec<i64>> {
        let mut out = Vec::new();
        self.skip_ws();
        if allow_empty && matches!(self.peek(), Some(c) if terminators.contains(&c)) {
            return Ok(out);
        }
        loop {
            out.push(self.int()?);
            if !self.eat(',') {
                break;
            }
        }
        Ok(out)
    }
}

/// Parses `(k; s1,...,sn)`, the literal shared by wreath pairs and elements of
/// the semidirect group.
pub(crate) fn parse_pair_literal(src: &str) -> Result<(i64, Vec<i64>)> {
    let mut cur = Cursor::new(src);
    cur.expect('(')?;
    let top = cur.int()?;
    cur.expect(';')?;
    let base = cur.int_list(&[')'], true)?;
    cur.expect(')')?;
    cur.expect_end()?;
    Ok((top, base))
}

pub(crate) fn format_pair_literal<T: std::fmt::Display>(top: T, base: &[T]) -> String {
    let body: Vec<String> = base.iter().map(|b| b.to_string()).collect();
    format!("({top}; {})", body.join(","))
}
