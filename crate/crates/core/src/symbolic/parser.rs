//! Recursive-descent parser for the term language.
//!
//! ```text
//! expr    := primary ("*" primary)*
//! primary := "(" expr ")"
//!          | "Table" "(" path ")" | "C" "(" int ")" | "M" "(" int "," int ")"
//!          | "OmegaChain" | "NullOmega" | "Prufer" "(" int ")" | "FreeComm" "(" int ")"
//!          | "Sum" "(" "omega" "," expr ")" | "Zero" "(" expr ")" | "One" "(" expr ")"
//! ```
//!
//! Whitespace is ignored between tokens. `path` is everything up to the
//! closing parenthesis, optionally wrapped in double quotes.

use std::path::Path;

use crate::kernel::{io, FiniteSemigroup};

use super::{SymbolicError, SymbolicSemigroup};

/// Parses a term, loading `Table(path)` leaves from disk.
pub fn parse_dsl(text: &str) -> Result<SymbolicSemigroup, SymbolicError> {
    parse_dsl_with(text, |path| {
        io::load_table(Path::new(path)).map_err(|e| e.to_string())
    })
}

/// Parses a term, resolving `Table(path)` leaves with `load`.
pub fn parse_dsl_with<F>(text: &str, load: F) -> Result<SymbolicSemigroup, SymbolicError>
where
    F: Fn(&str) -> Result<FiniteSemigroup, String>,
{
    let mut p = Parser {
        text,
        pos: 0,
        load: &load,
    };
    let expr = p.expr()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(p.syntax("unexpected trailing input"));
    }
    Ok(expr)
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    load: &'a dyn Fn(&str) -> Result<FiniteSemigroup, String>,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn syntax(&self, message: impl Into<String>) -> SymbolicError {
        SymbolicError::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn expect(&mut self, c: char) -> Result<(), SymbolicError> {
        match self.peek() {
            Some(found) if found == c => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(found) => Err(self.syntax(format!("expected '{c}', found '{found}'"))),
            None => Err(self.syntax(format!("expected '{c}', found end of input"))),
        }
    }

    fn ident(&mut self) -> Result<(usize, &str), SymbolicError> {
        self.skip_ws();
        let start = self.pos;
        let len = self
            .rest()
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(self.rest().len());
        if len == 0 || !self.rest().starts_with(|c: char| c.is_ascii_alphabetic()) {
            return Err(self.syntax("expected a constructor name"));
        }
        self.pos += len;
        Ok((start, &self.text[start..start + len]))
    }

    fn int(&mut self) -> Result<(usize, u64), SymbolicError> {
        self.skip_ws();
        let start = self.pos;
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.rest().len());
        if len == 0 {
            return Err(self.syntax("expected an integer"));
        }
        let n = self.text[start..start + len]
            .parse()
            .map_err(|_| self.syntax("integer out of range"))?;
        self.pos += len;
        Ok((start, n))
    }

    fn positive(&mut self, what: &str) -> Result<u64, SymbolicError> {
        let (at, n) = self.int()?;
        if n == 0 {
            return Err(invalid(at, format!("{what} must be at least 1")));
        }
        Ok(n)
    }

    fn expr(&mut self) -> Result<SymbolicSemigroup, SymbolicError> {
        let mut left = self.primary()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            let right = self.primary()?;
            left = SymbolicSemigroup::product(left, right);
        }
        Ok(left)
    }

    fn parenthesised<T>(
        &mut self,
        body: impl FnOnce(&mut Self) -> Result<T, SymbolicError>,
    ) -> Result<T, SymbolicError> {
        self.expect('(')?;
        let v = body(self)?;
        self.expect(')')?;
        Ok(v)
    }

    fn primary(&mut self) -> Result<SymbolicSemigroup, SymbolicError> {
        if self.peek() == Some('(') {
            return self.parenthesised(Self::expr);
        }
        let (start, name) = self.ident()?;
        Ok(match name {
            "OmegaChain" => SymbolicSemigroup::OmegaChain,
            "NullOmega" => SymbolicSemigroup::NullOmega,
            "C" => SymbolicSemigroup::Cyclic(self.parenthesised(|p| p.positive("C order"))?),
            "FreeComm" => {
                SymbolicSemigroup::FreeComm(self.parenthesised(|p| p.positive("FreeComm rank"))?)
            }
            "M" => self.parenthesised(|p| {
                let index = p.positive("M index")?;
                p.expect(',')?;
                let period = p.positive("M period")?;
                Ok(SymbolicSemigroup::Monogenic { index, period })
            })?,
            "Prufer" => {
                let (at, q) = self.parenthesised(Self::int)?;
                let s = SymbolicSemigroup::Prufer(q);
                s.validate().map_err(|m| invalid(at, m))?;
                s
            }
            "Zero" => SymbolicSemigroup::zero(self.parenthesised(Self::expr)?),
            "One" => SymbolicSemigroup::one(self.parenthesised(Self::expr)?),
            "Sum" => self.parenthesised(|p| {
                let (at, kw) = p.ident()?;
                if kw != "omega" {
                    return Err(SymbolicError::Syntax {
                        position: at,
                        message: format!("expected 'omega', found '{kw}'"),
                    });
                }
                p.expect(',')?;
                p.skip_ws();
                let at = p.pos;
                let g = p.expr()?;
                SymbolicSemigroup::sum_omega(g).map_err(|m| invalid(at, m))
            })?,
            "Table" => self.parenthesised(Self::table)?,
            other => {
                return Err(SymbolicError::Syntax {
                    position: start,
                    message: format!("unknown constructor '{other}'"),
                })
            }
        })
    }

    fn table(&mut self) -> Result<SymbolicSemigroup, SymbolicError> {
        self.skip_ws();
        let len = self
            .rest()
            .find(')')
            .ok_or_else(|| self.syntax("unterminated Table(...)"))?;
        let raw = self.text[self.pos..self.pos + len].trim_end();
        let path = raw
            .strip_prefix('"')
            .and_then(|r| r.strip_suffix('"'))
            .unwrap_or(raw);
        if path.is_empty() {
            return Err(self.syntax("Table(...) needs a path"));
        }
        let s = (self.load)(path).map_err(|message| SymbolicError::TableLoad {
            path: path.to_string(),
            message,
        })?;
        self.pos += len;
        Ok(SymbolicSemigroup::table(path, s))
    }
}

fn invalid(position: usize, message: impl Into<String>) -> SymbolicError {
    SymbolicError::InvalidArgument {
        position,
        message: message.into(),
    }
}
