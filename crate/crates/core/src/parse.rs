//! Text and structured input forms for monomial ideals.
//!
//! Text grammar (whitespace is ignored):
//!
//! ```text
//! ideal  := mono ("," mono)*
//! mono   := factor ("*" factor)*
//! factor := var ("^" nat)?
//! ```
//!
//! Variables are either all indexed (`x1`, `x2`, ...) or all single letters.
//! Letters are numbered in order of first appearance.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::ExponentVector;

/// An ideal as given by the user.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IdealSource {
    Text(String),
    Structured {
        vars: usize,
        generators: Vec<Vec<u32>>,
    },
}

/// A parsed ideal together with the names of its variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedIdeal {
    pub ideal: MonomialIdeal,
    pub names: Vec<String>,
}

impl IdealSource {
    /// Parse, with `vars` overriding the number of variables.
    pub fn parse(&self, vars: Option<usize>) -> Result<ParsedIdeal> {
        match self {
            IdealSource::Text(text) => parse_ideal_with(text, vars),
            IdealSource::Structured {
                vars: given,
                generators,
            } => {
                let given = *given;
                let r = match vars {
                    Some(v) if v < given => {
                        return Err(Error::InvalidParameter(format!(
                            "--vars {v} is smaller than the {given} variables given"
                        )))
                    }
                    Some(v) => v,
                    None => given,
                };
                let gens = generators
                    .iter()
                    .map(|g| {
                        if g.len() != given {
                            return Err(Error::Dimension {
                                expected: given,
                                found: g.len(),
                            });
                        }
                        let mut e = g.clone();
                        e.resize(r, 0);
                        Ok(ExponentVector::new(e))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(ParsedIdeal {
                    ideal: MonomialIdeal::new(r, gens)?,
                    names: indexed_names(r),
                })
            }
        }
    }
}

pub fn indexed_names(r: usize) -> Vec<String> {
    (1..=r).map(|i| format!("x{i}")).collect()
}

/// Parse the text form; the variable count is the largest index used.
pub fn parse_ideal(text: &str) -> Result<ParsedIdeal> {
    parse_ideal_with(text, None)
}

/// Parse the text form, optionally fixing the number of variables.
pub fn parse_ideal_with(text: &str, vars: Option<usize>) -> Result<ParsedIdeal> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        style: None,
        letters: Vec::new(),
    };
    let monos = p.ideal()?;

    let needed = match p.style {
        Some(Style::Indexed) => monos
            .iter()
            .flat_map(|m| m.iter().map(|&(v, _)| v + 1))
            .max()
            .unwrap_or(0),
        _ => p.letters.len(),
    };
    let r = match vars {
        Some(v) if v < needed => {
            return Err(Error::InvalidParameter(format!(
                "--vars {v} is smaller than the {needed} variables used"
            )))
        }
        Some(v) => v,
        None => needed,
    };
    let names = match p.style {
        Some(Style::Letters) => {
            let mut names: Vec<String> = p.letters.iter().map(|c| c.to_string()).collect();
            names.extend((names.len() + 1..=r).map(|i| format!("x{i}")));
            names
        }
        _ => indexed_names(r),
    };

    let mut gens = Vec::with_capacity(monos.len());
    for mono in monos {
        let mut e = vec![0u32; r];
        for (v, k) in mono {
            e[v] = e[v].checked_add(k).ok_or(Error::Overflow)?;
        }
        gens.push(ExponentVector::new(e));
    }
    Ok(ParsedIdeal {
        ideal: MonomialIdeal::new(r, gens)?,
        names,
    })
}

/// Text form of a monomial over `names`, e.g. `x1^2*x3`; `1` for the unit.
pub fn render_monomial(u: &ExponentVector, names: &[String]) -> String {
    let parts: Vec<String> = u
        .entries()
        .iter()
        .zip(names)
        .filter(|(&e, _)| e > 0)
        .map(|(&e, name)| {
            if e == 1 {
                name.clone()
            } else {
                format!("{name}^{e}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

/// Text form of the minimal generators, separated by `", "`, highest power
/// of the first variable first.
pub fn render_ideal(ideal: &MonomialIdeal, names: &[String]) -> String {
    ideal
        .generators()
        .iter()
        .rev()
        .map(|g| render_monomial(g, names))
        .collect::<Vec<_>>()
        .join(", ")
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Style {
    Indexed,
    Letters,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    style: Option<Style>,
    letters: Vec<char>,
}

type Mono = Vec<(usize, u32)>;

impl Parser<'_> {
    fn err<T>(&self, at: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: at,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn ideal(&mut self) -> Result<Vec<Mono>> {
        let mut out = vec![self.mono()?];
        loop {
            match self.peek() {
                None => return Ok(out),
                Some(b',') => {
                    self.pos += 1;
                    out.push(self.mono()?);
                }
                Some(c) => {
                    return self.err(
                        self.pos,
                        format!("expected ',' or '*', found '{}'", c as char),
                    )
                }
            }
        }
    }

    fn mono(&mut self) -> Result<Mono> {
        let mut out = vec![self.factor()?];
        while self.peek() == Some(b'*') {
            self.pos += 1;
            out.push(self.factor()?);
        }
        Ok(out)
    }

    fn factor(&mut self) -> Result<(usize, u32)> {
        let var = self.var()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let at = match self.peek() {
                Some(_) => self.pos,
                None => return self.err(self.pos, "expected exponent after '^'"),
            };
            let k = self.nat()?;
            if k == 0 {
                return self.err(at, "zero exponent; omit the factor instead");
            }
            Ok((var, k))
        } else {
            Ok((var, 1))
        }
    }

    fn nat(&mut self) -> Result<u32> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err(start, "expected a number");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        match digits.parse::<u32>() {
            Ok(v) => Ok(v),
            Err(_) => self.err(start, "number too large"),
        }
    }

    fn var(&mut self) -> Result<usize> {
        let start = match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => self.pos,
            Some(c) => {
                return self.err(
                    self.pos,
                    format!("expected a variable, found '{}'", c as char),
                )
            }
            None => return self.err(self.pos, "expected a variable, found end of input"),
        };
        let letter = self.src[start] as char;
        self.pos += 1;
        let indexed = letter == 'x' && self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit());
        if indexed {
            let idx = self.nat()?;
            if idx == 0 {
                return self.err(start, "variables are numbered from x1");
            }
            self.set_style(Style::Indexed, start)?;
            return Ok(idx as usize - 1);
        }
        if self
            .src
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphanumeric())
        {
            return self.err(start, "variable names are x1, x2, ... or single letters");
        }
        self.set_style(Style::Letters, start)?;
        Ok(match self.letters.iter().position(|&c| c == letter) {
            Some(i) => i,
            None => {
                self.letters.push(letter);
                self.letters.len() - 1
            }
        })
    }

    fn set_style(&mut self, style: Style, at: usize) -> Result<()> {
        match self.style {
            None => {
                self.style = Some(style);
                Ok(())
            }
            Some(s) if s == style => Ok(()),
            Some(_) => self.err(at, "indexed variables and single letters cannot be mixed"),
        }
    }
}
