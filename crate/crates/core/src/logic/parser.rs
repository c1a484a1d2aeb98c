//! Recursive-descent parser for the ASCII formula grammar.
//!
//! Precedence, tightest first: `!`, `&`, `|`, `->` (right-associative),
//! `<->` (left-associative).

use super::formula::validate_variables;
use super::{Expr, Formula, LogicError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok<'a> {
    Ident(&'a str),
    Not,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok<'_>)>, LogicError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let rest = &text[i..];
        let (tok, len) = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'!' => (Tok::Not, 1),
            b'&' => (Tok::And, 1),
            b'|' => (Tok::Or, 1),
            b'(' => (Tok::LParen, 1),
            b')' => (Tok::RParen, 1),
            b'-' if rest.starts_with("->") => (Tok::Implies, 2),
            b'<' if rest.starts_with("<->") => (Tok::Iff, 3),
            b'a'..=b'z' => {
                let len = rest
                    .bytes()
                    .take_while(|b| b.is_ascii_lowercase() || b.is_ascii_digit() || *b == b'_')
                    .count();
                (Tok::Ident(&rest[..len]), len)
            }
            _ => {
                let ch = rest.chars().next().unwrap_or('?');
                return Err(syntax(i, format!("unexpected character `{ch}`")));
            }
        };
        out.push((i, tok));
        i += len;
    }
    Ok(out)
}

fn syntax(position: usize, message: impl Into<String>) -> LogicError {
    LogicError::Syntax {
        position,
        message: message.into(),
    }
}

struct Parser<'a, 'v> {
    tokens: Vec<(usize, Tok<'a>)>,
    pos: usize,
    end: usize,
    variables: &'v [String],
}

impl<'a> Parser<'a, '_> {
    fn peek(&self) -> Option<Tok<'a>> {
        self.tokens.get(self.pos).map(|&(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |&(o, _)| o)
    }

    fn eat(&mut self, tok: Tok<'_>) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn iff(&mut self) -> Result<Expr, LogicError> {
        let mut lhs = self.implies()?;
        while self.eat(Tok::Iff) {
            lhs = Expr::iff(lhs, self.implies()?);
        }
        Ok(lhs)
    }

    fn implies(&mut self) -> Result<Expr, LogicError> {
        let lhs = self.or()?;
        if self.eat(Tok::Implies) {
            Ok(Expr::implies(lhs, self.implies()?))
        } else {
            Ok(lhs)
        }
    }

    fn or(&mut self) -> Result<Expr, LogicError> {
        let mut lhs = self.and()?;
        while self.eat(Tok::Or) {
            lhs = Expr::or(lhs, self.and()?);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Expr, LogicError> {
        let mut lhs = self.unary()?;
        while self.eat(Tok::And) {
            lhs = Expr::and(lhs, self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, LogicError> {
        let at = self.offset();
        match self.peek() {
            Some(Tok::Not) => {
                self.pos += 1;
                Ok(Expr::negate(self.unary()?))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.iff()?;
                if !self.eat(Tok::RParen) {
                    return Err(syntax(self.offset(), "expected `)`"));
                }
                Ok(inner)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                self.variables
                    .iter()
                    .position(|v| v == name)
                    .map(Expr::Var)
                    .ok_or_else(|| LogicError::UnknownVariable(name.to_string()))
            }
            Some(_) => Err(syntax(at, "expected variable, `!` or `(`")),
            None => Err(syntax(at, "unexpected end of input")),
        }
    }
}

/// Parses `text` over the ordered variable list `variables`.
pub fn parse_formula<S: AsRef<str>>(text: &str, variables: &[S]) -> Result<Formula, LogicError> {
    let variables: Vec<String> = variables.iter().map(|v| v.as_ref().to_string()).collect();
    validate_variables(&variables)?;
    let mut parser = Parser {
        tokens: tokenize(text)?,
        pos: 0,
        end: text.len(),
        variables: &variables,
    };
    let root = parser.iff()?;
    if parser.pos != parser.tokens.len() {
        return Err(syntax(parser.offset(), "trailing input"));
    }
    Formula::new(variables, root)
}
