//! Text grammar shared by every JSON and CSV output.
//!
//! Integers are `-?[0-9]+`, rationals `<int>/<posint>`, and polynomials are
//! written in descending degree with explicit `*` and `^`, rational
//! coefficients parenthesized: `q^2 - 3*q + 1`, `(-1/32768)*q^8 + q`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{ArithError, PolyQ, Rational};

/// Degrees above this are rejected by the parser.
pub const MAX_PARSE_DEGREE: usize = 4096;

fn err(text: &str, reason: impl Into<String>) -> ArithError {
    ArithError::Parse { text: text.to_string(), reason: reason.into() }
}

pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn is_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

pub(crate) fn parse_integer(text: &str) -> Result<BigInt, ArithError> {
    let t = text.trim();
    let digits = t.strip_prefix('-').unwrap_or(t);
    if !is_digits(digits) {
        return Err(err(text, "expected an integer"));
    }
    t.parse::<BigInt>().map_err(|e| err(text, e.to_string()))
}

pub fn parse_rational(text: &str) -> Result<Rational, ArithError> {
    let t = text.trim();
    match t.split_once('/') {
        None => Ok(Rational::from_integer(parse_integer(t)?)),
        Some((n, d)) => {
            let n = parse_integer(n)?;
            if !is_digits(d.trim()) || d.trim() != d {
                return Err(err(text, "denominator must be a positive integer"));
            }
            let d: BigInt = d.parse().map_err(|_| err(text, "bad denominator"))?;
            if d.is_zero() {
                return Err(err(text, "zero denominator"));
            }
            Ok(Rational::new(n, d))
        }
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.peek() == Some(' ') {
            self.pos += 1;
        }
    }
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }
    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }
    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }
    fn number(&mut self) -> Option<Rational> {
        let n: BigInt = self.digits()?.parse().ok()?;
        if self.eat('/') {
            let d: BigInt = self.digits()?.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        } else {
            Some(Rational::from_integer(n))
        }
    }
    fn q_power(&mut self) -> Result<Option<usize>, String> {
        if !self.eat('q') {
            return Ok(None);
        }
        if self.eat('^') {
            let d = self.digits().ok_or("missing exponent")?;
            let k: usize = d.parse().map_err(|_| "exponent too large".to_string())?;
            if k > MAX_PARSE_DEGREE {
                return Err("exponent too large".into());
            }
            Ok(Some(k))
        } else {
            Ok(Some(1))
        }
    }
}

pub(crate) fn parse_poly(text: &str) -> Result<PolyQ, ArithError> {
    let mut cur = Cursor { src: text, pos: 0 };
    let mut coeffs: Vec<Rational> = Vec::new();
    let mut first = true;
    loop {
        cur.skip_ws();
        let mut negative = false;
        if first {
            negative = cur.eat('-');
        } else if cur.eat('-') {
            negative = true;
        } else if !cur.eat('+') {
            return Err(err(text, "expected '+' or '-' between terms"));
        }
        if !first {
            cur.skip_ws();
        }
        first = false;

        let coeff = if cur.eat('(') {
            cur.skip_ws();
            let neg_inner = cur.eat('-');
            let mut c = cur.number().ok_or_else(|| err(text, "bad coefficient"))?;
            cur.skip_ws();
            if !cur.eat(')') {
                return Err(err(text, "unclosed '('"));
            }
            if neg_inner {
                c = -c;
            }
            Some(c)
        } else {
            cur.number()
        };
        let power = match coeff {
            Some(_) if cur.eat('*') => match cur.q_power().map_err(|e| err(text, e))? {
                Some(k) => k,
                None => return Err(err(text, "expected 'q' after '*'")),
            },
            Some(_) => 0,
            None => match cur.q_power().map_err(|e| err(text, e))? {
                Some(k) => k,
                None => return Err(err(text, "expected a term")),
            },
        };
        let mut c = coeff.unwrap_or_else(Rational::one);
        if negative {
            c = -c;
        }
        if coeffs.len() <= power {
            coeffs.resize(power + 1, Rational::zero());
        }
        coeffs[power] += c;

        cur.skip_ws();
        if cur.pos == text.len() {
            break;
        }
    }
    Ok(PolyQ::new(coeffs))
}

impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (deg, c)) in self.terms_descending().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            let var = match deg {
                0 => String::new(),
                1 => "q".to_string(),
                k => format!("q^{k}"),
            };
            let body = if deg == 0 {
                format_rational(&abs)
            } else if abs.is_one() {
                var.clone()
            } else if abs.is_integer() {
                format!("{}*{var}", abs.numer())
            } else {
                format!("({})*{var}", format_rational(&abs))
            };
            match (i, neg) {
                (0, false) => f.write_str(&body)?,
                (0, true) if deg > 0 && !abs.is_integer() => {
                    write!(f, "({})*{var}", format_rational(c))?
                }
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}
