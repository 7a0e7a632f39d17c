//! Text form of polynomials.
//!
//! A polynomial prints as a signed sum of terms `coeff * x0^2 x1 ; y0`, the
//! variable groups of different blocks separated by `;`. A coefficient of 1
//! is omitted and the zero polynomial prints as `0`. The parser accepts the
//! printed form and the usual relaxations (missing `*`, missing `;`).

use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{Monomial, MultiPoly, VarBlocks};
use crate::error::{Error, Result};
use crate::qfield::{parse_rational, Rational};

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, sign) {
                (0, "-") => write!(f, "-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            let abs = c.abs();
            let groups = monomial_groups(self.blocks(), m);
            if groups.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", groups.join(" ; "))?;
            } else {
                write!(f, "{abs} * {}", groups.join(" ; "))?;
            }
        }
        Ok(())
    }
}

fn monomial_groups(blocks: &VarBlocks, m: &Monomial) -> Vec<String> {
    let mut groups = Vec::new();
    for b in 0..blocks.len() {
        let o = blocks.offset(b);
        let factors: Vec<String> = (o..o + blocks.var_count(b))
            .filter(|&v| m.exponent(v) > 0)
            .map(|v| match m.exponent(v) {
                1 => blocks.var_name(v),
                e => format!("{}^{e}", blocks.var_name(v)),
            })
            .collect();
        if !factors.is_empty() {
            groups.push(factors.join(" "));
        }
    }
    groups
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(String),
    Var(String),
    Caret,
    Star,
    Plus,
    Minus,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = s.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() || c == ';' => i += 1,
            '^' => {
                tokens.push(Token::Caret);
                i += 1;
            }
            '*' => {
                tokens.push(Token::Star);
                i += 1;
            }
            '+' => {
                tokens.push(Token::Plus);
                i += 1;
            }
            '-' => {
                tokens.push(Token::Minus);
                i += 1;
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
                    i += 1;
                }
                tokens.push(Token::Number(chars[start..i].iter().collect()));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphabetic() || chars[i] == '_') {
                    i += 1;
                }
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                tokens.push(Token::Var(chars[start..i].iter().collect()));
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}` at {i}"))),
        }
    }
    Ok(tokens)
}

impl MultiPoly {
    /// Parses the text form in the given variable blocks.
    pub fn parse(blocks: &VarBlocks, s: &str) -> Result<MultiPoly> {
        let tokens = tokenize(s)?;
        if tokens.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = MultiPoly::zero(blocks);
        let mut pos = 0;
        let mut first = true;
        while pos < tokens.len() {
            let mut coeff = Rational::one();
            match tokens[pos] {
                Token::Plus => pos += 1,
                Token::Minus => {
                    coeff = -coeff;
                    pos += 1;
                }
                _ if first => {}
                _ => return Err(Error::Parse(format!("expected `+` or `-` in `{s}`"))),
            }
            first = false;
            let mut exps = vec![0u32; blocks.total_vars()];
            let mut factors = 0;
            while pos < tokens.len() && !matches!(tokens[pos], Token::Plus | Token::Minus) {
                match &tokens[pos] {
                    Token::Star if factors > 0 => pos += 1,
                    Token::Number(n) => {
                        let v = parse_rational(n)
                            .ok_or_else(|| Error::Parse(format!("bad coefficient `{n}`")))?;
                        coeff *= v;
                        pos += 1;
                        factors += 1;
                    }
                    Token::Var(name) => {
                        let var = blocks
                            .var_index(name)
                            .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
                        pos += 1;
                        let mut e = 1u32;
                        if pos < tokens.len() && tokens[pos] == Token::Caret {
                            e = match tokens.get(pos + 1) {
                                Some(Token::Number(n)) => n
                                    .parse()
                                    .map_err(|_| Error::Parse(format!("bad exponent `{n}`")))?,
                                _ => return Err(Error::Parse("`^` must be followed by an integer".into())),
                            };
                            pos += 2;
                        }
                        exps[var] += e;
                        factors += 1;
                    }
                    t => return Err(Error::Parse(format!("unexpected token {t:?} in `{s}`"))),
                }
            }
            if factors == 0 {
                return Err(Error::Parse(format!("empty term in `{s}`")));
            }
            if !coeff.is_zero() {
                out.add_term(Monomial::new(blocks, exps)?, coeff);
            }
        }
        Ok(out)
    }
}
