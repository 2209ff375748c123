//! Parser for variety specifications such as `Gr(2,4) x P(2)`.
//!
//! ```text
//! spec   := factor { "x" factor }
//! factor := name "(" ints ")" | "Fl(" ints ";" int ")"
//! ```
//!
//! Whitespace is ignored everywhere. Positions in errors are byte offsets
//! into the original input.

use crate::error::{Error, Result};
use crate::variety_catalog::{self, VarietyDescriptor};

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(c) => Err(self.err(format!("expected '{want}', found '{c}'"))),
            None => Err(self.err(format!("expected '{want}', found end of input"))),
        }
    }

    fn name(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..]
            .find(|c: char| !c.is_ascii_alphabetic())
            .unwrap_or(self.src.len() - start);
        if len == 0 {
            return Err(self.err("expected a factor name (P, Gr, OG, SG, Fl)"));
        }
        self.pos += len;
        Ok(&self.src[start..start + len])
    }

    fn int(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..]
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.src.len() - start);
        if len == 0 {
            return Err(self.err("expected a nonnegative integer"));
        }
        let value = self.src[start..start + len]
            .parse()
            .map_err(|_| self.err("integer out of range"))?;
        self.pos += len;
        Ok(value)
    }

    fn ints(&mut self) -> Result<Vec<u32>> {
        let mut out = vec![self.int()?];
        while self.peek() == Some(',') {
            self.pos += 1;
            out.push(self.int()?);
        }
        Ok(out)
    }

    fn factor(&mut self) -> Result<VarietyDescriptor> {
        let at = {
            self.skip_ws();
            self.pos
        };
        let name = self.name()?;
        self.expect('(')?;
        let args = self.ints()?;
        let flag_n = if name == "Fl" {
            self.expect(';')?;
            Some(self.int()?)
        } else {
            None
        };
        self.expect(')')?;
        let arity = |want: usize| -> Result<()> {
            if args.len() != want {
                return Err(Error::Parse {
                    position: at,
                    message: format!("{name} takes {want} argument(s), got {}", args.len()),
                });
            }
            Ok(())
        };
        match name {
            "P" => {
                arity(1)?;
                variety_catalog::projective(args[0])
            }
            "Gr" => {
                arity(2)?;
                variety_catalog::grassmannian(args[0], args[1])
            }
            "OG" => {
                arity(2)?;
                variety_catalog::orthogonal(args[0], args[1])
            }
            "SG" => {
                arity(2)?;
                variety_catalog::symplectic(args[0], args[1])
            }
            "Fl" => variety_catalog::flag(&args, flag_n.expect("parsed above")),
            other => Err(Error::Parse {
                position: at,
                message: format!("unknown factor '{other}'; expected P, Gr, OG, SG or Fl"),
            }),
        }
    }

    fn spec(&mut self) -> Result<VarietyDescriptor> {
        let mut parts = vec![self.factor()?];
        loop {
            match self.peek() {
                None => break,
                Some('x') => {
                    self.pos += 1;
                    parts.push(self.factor()?);
                }
                Some(c) => return Err(self.err(format!("expected 'x' or end of input, found '{c}'"))),
            }
        }
        if parts.len() == 1 {
            Ok(parts.pop().expect("one factor"))
        } else {
            variety_catalog::product(&parts)
        }
    }
}

/// Parses a variety specification. Syntax errors carry a byte position;
/// semantic errors name the violated constraint.
pub fn parse_variety(spec: &str) -> Result<VarietyDescriptor> {
    Parser { src: spec, pos: 0 }.spec()
}

/// Canonical text form; `parse_variety(&render_variety(v)) == v`.
pub fn render_variety(v: &VarietyDescriptor) -> String {
    v.name().to_string()
}

/// Parses `d1,d2,...` (whitespace allowed).
pub fn parse_list(text: &str) -> Result<Vec<u32>> {
    let mut p = Parser { src: text, pos: 0 };
    let out = p.ints()?;
    if let Some(c) = p.peek() {
        return Err(p.err(format!("unexpected '{c}'")));
    }
    Ok(out)
}

/// Parses an inclusive range `lo..hi`.
pub fn parse_range(text: &str) -> Result<(u32, u32)> {
    let mut p = Parser { src: text, pos: 0 };
    let lo = p.int()?;
    p.expect('.')?;
    p.expect('.')?;
    let hi = p.int()?;
    if let Some(c) = p.peek() {
        return Err(p.err(format!("unexpected '{c}'")));
    }
    if lo > hi {
        return Err(Error::InvalidArgument(format!("empty range {lo}..{hi}")));
    }
    Ok((lo, hi))
}
