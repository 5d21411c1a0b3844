//! Parsers for element expressions and ideal specifications.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | factor
//! factor := atom ('^' integer)?
//! atom   := integer | 'z' | '(' expr ')'
//!
//! ideal  := part ('*' part)*
//! part   := (prime | '(' expr ')') ('^' integer)?
//! prime  := 'P' '(' integer ',' '['? integer (',' integer)* ']'? ')'
//! ```
//!
//! Whitespace is ignored and both `-` and `\u{2212}` denote minus.

use std::fmt;
use std::sync::Arc;

use arlink_core::cyclotomic::{CycloElement, CycloField};
use arlink_core::ideals::{FactoredIdeal, PrimeIdeal};
use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::CliError;

/// A syntax error at a 1-based character column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub column: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "column {}: expected {}, found {}",
            self.column,
            self.expected.join(" or "),
            self.found
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Z,
    P,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "'{n}'"),
            Tok::Z => write!(f, "'z'"),
            Tok::P => write!(f, "'P'"),
            Tok::Plus => write!(f, "'+'"),
            Tok::Minus => write!(f, "'-'"),
            Tok::Star => write!(f, "'*'"),
            Tok::Caret => write!(f, "'^'"),
            Tok::LParen => write!(f, "'('"),
            Tok::RParen => write!(f, "')'"),
            Tok::LBracket => write!(f, "'['"),
            Tok::RBracket => write!(f, "']'"),
            Tok::Comma => write!(f, "','"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((Tok::Int(digits.parse().expect("ascii digits")), col));
                continue;
            }
            'z' => Tok::Z,
            'P' => Tok::P,
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            other => {
                return Err(ParseError {
                    column: col,
                    expected: vec!["integer", "'z'", "operator", "parenthesis"],
                    found: format!("'{other}'"),
                })
            }
        };
        out.push((tok, col));
        i += 1;
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    field: &'a Arc<CycloField>,
}

impl<'a> Parser<'a> {
    fn new(text: &str, field: &'a Arc<CycloField>) -> Result<Self, ParseError> {
        Ok(Parser {
            toks: lex(text)?,
            pos: 0,
            field,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: Vec<&'static str>) -> ParseError {
        let (tok, column) = &self.toks[self.pos];
        ParseError {
            column: *column,
            expected,
            found: tok.to_string(),
        }
    }

    fn expect(&mut self, tok: Tok, name: &'static str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(vec![name]))
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            Err(self.error(vec!["end of input"]))
        }
    }

    fn signed_int(&mut self) -> Result<BigInt, ParseError> {
        let neg = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(if neg { -n } else { n })
            }
            _ => Err(self.error(vec!["integer"])),
        }
    }

    fn small_int(&mut self) -> Result<i64, ParseError> {
        let column = self.toks[self.pos].1;
        let n = self.signed_int()?;
        n.to_i64().ok_or(ParseError {
            column,
            expected: vec!["integer in 64-bit range"],
            found: format!("'{n}'"),
        })
    }

    fn expr(&mut self) -> Result<CycloElement, CliError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<CycloElement, CliError> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<CycloElement, CliError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(-&self.unary()?);
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<CycloElement, CliError> {
        let base = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let e = self.small_int()?;
            return Ok(base.pow(e)?);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<CycloElement, CliError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(self.field.from_bigint(n))
            }
            Tok::Z => {
                self.bump();
                Ok(self.field.zeta())
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => Err(self.error(vec!["integer", "'z'", "'('"]).into()),
        }
    }

    fn prime(&mut self, seed: u64) -> Result<PrimeIdeal, CliError> {
        self.expect(Tok::P, "'P'")?;
        self.expect(Tok::LParen, "'('")?;
        let column = self.toks[self.pos].1;
        let p = self.signed_int()?;
        let p = p.to_u64().ok_or(ParseError {
            column,
            expected: vec!["positive prime"],
            found: format!("'{p}'"),
        })?;
        self.expect(Tok::Comma, "','")?;
        let bracketed = *self.peek() == Tok::LBracket;
        if bracketed {
            self.bump();
        }
        let mut g = vec![self.small_int()?];
        while *self.peek() == Tok::Comma {
            self.bump();
            g.push(self.small_int()?);
        }
        if bracketed {
            self.expect(Tok::RBracket, "']'")?;
        }
        self.expect(Tok::RParen, "')'")?;
        Ok(PrimeIdeal::from_parts(self.field, p, &g, seed)?)
    }

    fn ideal_part(&mut self, seed: u64) -> Result<FactoredIdeal, CliError> {
        let base = match self.peek() {
            Tok::P => FactoredIdeal::from_prime(&self.prime(seed)?, 1),
            Tok::LParen => {
                self.bump();
                let x = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                FactoredIdeal::principal(&x, seed)?
            }
            _ => return Err(self.error(vec!["'P'", "'('"]).into()),
        };
        if *self.peek() == Tok::Caret {
            self.bump();
            let e = self.small_int()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }
}

/// Parses and evaluates an element expression in `field`.
pub fn parse_element(text: &str, field: &Arc<CycloField>) -> Result<CycloElement, CliError> {
    let mut p = Parser::new(text, field)?;
    let x = p.expr()?;
    p.finish()?;
    Ok(x)
}

/// Parses `P(p, [g])`.
pub fn parse_prime(text: &str, field: &Arc<CycloField>, seed: u64) -> Result<PrimeIdeal, CliError> {
    let mut p = Parser::new(text, field)?;
    let q = p.prime(seed)?;
    p.finish()?;
    Ok(q)
}

/// Parses a product of primes and principal ideals with integer exponents.
pub fn parse_ideal(text: &str, field: &Arc<CycloField>, seed: u64) -> Result<FactoredIdeal, CliError> {
    let mut p = Parser::new(text, field)?;
    let mut acc = p.ideal_part(seed)?;
    while *p.peek() == Tok::Star {
        p.bump();
        acc = acc.mul(&p.ideal_part(seed)?);
    }
    p.finish()?;
    Ok(acc)
}

/// Rows separated by `;`, entries by `,` or whitespace.
pub fn parse_rows(text: &str) -> Result<Vec<Vec<i64>>, String> {
    text.split(';')
        .map(|row| {
            row.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| s.replace('\u{2212}', "-").parse::<i64>().map_err(|e| format!("'{s}': {e}")))
                .collect()
        })
        .collect()
}
