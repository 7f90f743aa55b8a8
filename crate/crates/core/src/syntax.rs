//! Small hand-rolled cursor shared by the term parsers.

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

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub(crate) fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    /// Consumes `tok` (after whitespace) if it is next.
    pub(crate) fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, tok: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{tok}`")))
        }
    }

    /// Parses a decimal literal without a sign. Whitespace before the digits is skipped,
    /// but not between them.
    pub(crate) fn nat_str(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let digits = self
            .rest()
            .char_indices()
            .take_while(|(_, c)| c.is_ascii_digit())
            .count();
        if digits == 0 {
            return Err(self.error("expected a natural number"));
        }
        let s = &self.rest()[..digits];
        self.pos += digits;
        Ok(s)
    }

    /// Like [`Cursor::nat_str`] but immediately adjacent to the previous token.
    pub(crate) fn glued_index(&mut self) -> Result<usize> {
        let digits = self
            .rest()
            .chars()
            .take_while(|c| c.is_ascii_digit())
            .count();
        if digits == 0 {
            return Err(self.error("expected an index"));
        }
        let start = self.pos;
        let s = &self.rest()[..digits];
        self.pos += digits;
        s.parse()
            .map_err(|_| Error::parse(start, format!("index `{s}` out of range")))
    }

    pub(crate) fn usize(&mut self) -> Result<usize> {
        let start = self.pos;
        let s = self.nat_str()?;
        s.parse()
            .map_err(|_| Error::parse(start, format!("number `{s}` out of range")))
    }

    /// Returns the text up to the next `stop` outside parentheses, without consuming
    /// `stop`.
    pub(crate) fn take_balanced_until(&mut self, stop: char) -> Result<&'a str> {
        let rest = self.rest();
        let mut depth = 0usize;
        for (k, c) in rest.char_indices() {
            match c {
                '(' => depth += 1,
                ')' if depth == 0 => break,
                ')' => depth -= 1,
                c if c == stop && depth == 0 => {
                    self.pos += k;
                    return Ok(rest[..k].trim_end());
                }
                _ => {}
            }
        }
        Err(self.error(format!("expected `{stop}`")))
    }

    pub(crate) fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    pub(crate) fn error(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.pos, msg)
    }
}
