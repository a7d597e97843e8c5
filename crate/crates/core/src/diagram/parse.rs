//! The text DSL.
//!
//! ```text
//! term := atom | term ";" term | term "*" term
//! atom := "id(" nat ")" | "swap" | name | "poly(" anf "," nat ")" | "gcx(" nat ")" | "(" term ")"
//! ```
//!
//! A file holds one top-level term, any number of `let name = term`
//! bindings, or both. Bound names may be used as atoms after their
//! definition. `#` starts a comment running to the end of the line.

use crate::boolpoly;
use crate::diagram::{Diagram, Generator};
use crate::error::{ParseError, ParseErrorKind, Result};

use ParseErrorKind::*;

/// A parsed file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Program {
    pub bindings: Vec<(String, Diagram)>,
    pub main: Option<Diagram>,
}

impl Program {
    pub fn get(&self, name: &str) -> Option<&Diagram> {
        self.bindings.iter().find(|(n, _)| n == name).map(|(_, d)| d)
    }

    /// The top-level term if there is one, else the last binding.
    pub fn primary(&self) -> Option<&Diagram> {
        self.main.as_ref().or_else(|| self.bindings.last().map(|(_, d)| d))
    }
}

/// Parses a single diagram: the top-level term of the text, or its last
/// binding when there is no top-level term.
pub fn parse(text: &str) -> Result<Diagram> {
    let prog = parse_program(text)?;
    match prog.primary() {
        Some(d) => Ok(d.clone()),
        None => Err(ParseError::at(Syntax, text, text.len(), "no diagram in input").into()),
    }
}

pub fn parse_program(text: &str) -> Result<Program> {
    Parser { src: text, pos: 0, env: Vec::new() }.program().map_err(Into::into)
}

type PResult<T> = std::result::Result<T, ParseError>;

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    env: Vec<(String, Diagram)>,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, kind: ParseErrorKind, at: usize, msg: impl Into<String>) -> PResult<T> {
        Err(ParseError::at(kind, self.src, at, msg))
    }

    fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    fn ws(&mut self) {
        let b = self.src.as_bytes();
        while self.pos < b.len() {
            if b[self.pos].is_ascii_whitespace() {
                self.pos += 1;
            } else if b[self.pos] == b'#' {
                while self.pos < b.len() && b[self.pos] != b'\n' {
                    self.pos += 1;
                }
            } else {
                break;
            }
        }
    }

    fn expect(&mut self, c: u8) -> PResult<()> {
        self.ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            let found = self.describe_here();
            self.err(Syntax, self.pos, format!("expected `{}`, found {found}", c as char))
        }
    }

    fn describe_here(&self) -> String {
        match self.src[self.pos..].chars().next() {
            None => "end of input".into(),
            Some(c) => format!("`{c}`"),
        }
    }

    fn ident(&mut self) -> Option<&'a str> {
        let b = self.src.as_bytes();
        let start = self.pos;
        if start < b.len() && (b[start].is_ascii_alphabetic() || b[start] == b'_') {
            let mut end = start + 1;
            while end < b.len() && (b[end].is_ascii_alphanumeric() || b[end] == b'_') {
                end += 1;
            }
            self.pos = end;
            Some(&self.src[start..end])
        } else {
            None
        }
    }

    fn at_let(&mut self) -> bool {
        let save = self.pos;
        let is_let = self.ident() == Some("let");
        self.pos = save;
        is_let
    }

    fn nat(&mut self) -> PResult<usize> {
        self.ws();
        let b = self.src.as_bytes();
        let start = self.pos;
        while self.pos < b.len() && b[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            let found = self.describe_here();
            return self.err(Syntax, start, format!("expected a natural number, found {found}"));
        }
        match self.src[start..self.pos].parse() {
            Ok(n) => Ok(n),
            Err(_) => self.err(Syntax, start, "number too large"),
        }
    }

    fn program(mut self) -> PResult<Program> {
        let mut main = None;
        loop {
            self.ws();
            if self.peek().is_none() {
                break;
            }
            if self.at_let() {
                self.ident();
                self.ws();
                let name_at = self.pos;
                let Some(name) = self.ident() else {
                    return self.err(Syntax, name_at, "expected a binding name after `let`");
                };
                if Generator::from_name(name).is_some() || matches!(name, "id" | "swap" | "poly" | "gcx" | "let") {
                    return self.err(Syntax, name_at, format!("`{name}` is reserved"));
                }
                if self.env.iter().any(|(n, _)| n == name) {
                    return self.err(Syntax, name_at, format!("`{name}` is already bound"));
                }
                self.expect(b'=')?;
                let d = self.term()?;
                self.env.push((name.to_string(), d));
            } else {
                let start = self.pos;
                if main.is_some() {
                    return self.err(Syntax, start, "more than one top-level diagram");
                }
                main = Some(self.term()?);
                self.ws();
                if self.peek().is_some() && !self.at_let() {
                    let found = self.describe_here();
                    return self.err(Syntax, self.pos, format!("unexpected {found}"));
                }
            }
        }
        Ok(Program { bindings: self.env, main })
    }

    fn term(&mut self) -> PResult<Diagram> {
        let mut acc = self.tensor_term()?;
        loop {
            self.ws();
            if self.peek() != Some(b';') {
                return Ok(acc);
            }
            let op = self.pos;
            self.pos += 1;
            let rhs = self.tensor_term()?;
            if acc.cod() != rhs.dom() {
                return self.err(
                    Arity,
                    op,
                    format!("left side has codomain {} but right side has domain {}", acc.cod(), rhs.dom()),
                );
            }
            acc = Diagram::seq(&acc, &rhs).expect("checked");
        }
    }

    fn tensor_term(&mut self) -> PResult<Diagram> {
        let mut acc = self.atom()?;
        loop {
            self.ws();
            if self.peek() != Some(b'*') {
                return Ok(acc);
            }
            self.pos += 1;
            let rhs = self.atom()?;
            acc = Diagram::tensor(&acc, &rhs);
        }
    }

    fn atom(&mut self) -> PResult<Diagram> {
        self.ws();
        let start = self.pos;
        if self.peek() == Some(b'(') {
            self.pos += 1;
            let d = self.term()?;
            self.expect(b')')?;
            return Ok(d);
        }
        let Some(name) = self.ident() else {
            let found = self.describe_here();
            return self.err(Syntax, start, format!("expected a diagram, found {found}"));
        };
        match name {
            "id" => {
                self.expect(b'(')?;
                let n = self.nat()?;
                self.expect(b')')?;
                Ok(Diagram::id(n))
            }
            "swap" => Ok(Diagram::swap()),
            "gcx" => {
                self.expect(b'(')?;
                let at = self.pos;
                let k = self.nat()?;
                if k >= boolpoly::MAX_VARS {
                    return self.err(Syntax, at, "too many controls");
                }
                self.expect(b')')?;
                Ok(Diagram::gen(Generator::Gcx(k)))
            }
            "poly" => self.poly(),
            _ => {
                if let Some(g) = Generator::from_name(name) {
                    Ok(Diagram::gen(g))
                } else if let Some((_, d)) = self.env.iter().find(|(n, _)| n == name) {
                    Ok(d.clone())
                } else {
                    self.err(UnknownGenerator, start, format!("unknown generator `{name}`"))
                }
            }
        }
    }

    fn poly(&mut self) -> PResult<Diagram> {
        self.expect(b'(')?;
        let anf_start = self.pos;
        let Some(rel) = self.src[anf_start..].find(',') else {
            return self.err(Polynomial, anf_start, "expected `,` followed by the variable count");
        };
        let comma = anf_start + rel;
        if let Some(bad) = self.src[anf_start..comma].find([')', '(', ';']) {
            return self.err(Polynomial, anf_start + bad, "unexpected delimiter inside polynomial");
        }
        self.pos = comma + 1;
        let n_at = self.pos;
        let n = self.nat()?;
        if n > boolpoly::MAX_VARS {
            return self.err(Polynomial, n_at, "too many variables");
        }
        self.expect(b')')?;
        match boolpoly::parse_anf(&self.src[anf_start..comma], Some(n)) {
            Ok(p) => Ok(Diagram::gen(Generator::Poly(p))),
            Err((off, msg)) => self.err(Polynomial, anf_start + off, msg),
        }
    }
}
