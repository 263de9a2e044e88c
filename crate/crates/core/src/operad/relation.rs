//! Relations: coefficient vectors over a fixed monomial basis.

use serde::{Deserialize, Serialize};

use super::monomial::{parse_tree, Monomial, RenderOptions, Space};
use super::perm::Perm3;
use crate::arith::{PolyQ, Rational, Scalar};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Relation<S> {
    pub space: Space,
    pub coeffs: Vec<S>,
}

impl<S: Scalar> Relation<S> {
    pub fn new(space: Space, coeffs: Vec<S>) -> Result<Self> {
        if coeffs.len() != space.dim() {
            return Err(Error::Shape(format!(
                "{} coefficients for {space} of dimension {}",
                coeffs.len(),
                space.dim()
            )));
        }
        Ok(Relation { space, coeffs })
    }

    pub fn zero(space: Space) -> Self {
        Relation { space, coeffs: vec![S::zero(); space.dim()] }
    }

    pub fn from_i64(space: Space, coeffs: &[i64]) -> Result<Self> {
        Self::new(space, coeffs.iter().map(|&c| S::from_i64(c)).collect())
    }

    /// Sum of `coeff * monomial` terms.
    pub fn from_terms(space: Space, terms: impl IntoIterator<Item = (S, Monomial)>) -> Result<Self> {
        let mut r = Self::zero(space);
        for (c, m) in terms {
            if m.space != space {
                return Err(Error::WrongSpace { expected: space.to_string(), found: m.space.name() });
            }
            let i = m.index();
            r.coeffs[i] = r.coeffs[i].add_ref(&c);
        }
        Ok(r)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(S::is_zero)
    }

    pub fn scale(&self, c: &S) -> Self {
        Relation { space: self.space, coeffs: self.coeffs.iter().map(|x| x.mul_ref(c)).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_space(other.space)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add_ref(b)).collect();
        Ok(Relation { space: self.space, coeffs })
    }

    pub fn check_space(&self, space: Space) -> Result<()> {
        if self.space != space {
            return Err(Error::WrongSpace { expected: space.to_string(), found: self.space.name() });
        }
        Ok(())
    }

    /// Substitutes the arguments by `sigma`.
    pub fn act(&self, sigma: Perm3) -> Result<Self> {
        let mut out = Self::zero(self.space);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sm = Monomial::from_index(self.space, i).act(sigma)?;
            let j = sm.monomial.index();
            let term = if sm.sign < 0 { c.neg_ref() } else { c.clone() };
            out.coeffs[j] = out.coeffs[j].add_ref(&term);
        }
        Ok(out)
    }

    /// Nonzero `(coefficient, monomial)` pairs in basis order.
    pub fn terms(&self) -> impl Iterator<Item = (&S, Monomial)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (c, Monomial::from_index(self.space, i)))
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Relation<T> {
        Relation { space: self.space, coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn to_poly(&self) -> Relation<PolyQ> {
        self.map(S::to_poly)
    }

    /// Signed sum of monomials; zero renders as `0`.
    pub fn render(&self, opts: RenderOptions) -> String {
        let mut out = String::new();
        for (c, m) in self.terms() {
            let neg = c.is_negative_sign();
            let abs = if neg { c.neg_ref() } else { c.clone() };
            let coef = if abs.is_one() {
                String::new()
            } else {
                let s = abs.to_string();
                if s.contains([' ', '/', '*']) {
                    format!("({s})*")
                } else {
                    format!("{s}*")
                }
            };
            let mono = m.render(opts);
            match (out.is_empty(), neg) {
                (true, false) => out.push_str(&format!("{coef}{mono}")),
                (true, true) => out.push_str(&format!("-{coef}{mono}")),
                (false, false) => out.push_str(&format!(" + {coef}{mono}")),
                (false, true) => out.push_str(&format!(" - {coef}{mono}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Parses the rendered notation back into a relation in `space`. The
    /// polarized space accepts any bracketing and normalizes it.
    pub fn parse(space: Space, text: &str) -> Result<Self> {
        let mut r = Self::zero(space);
        let text = text.trim();
        if text == "0" {
            return Ok(r);
        }
        for (negative, term) in split_terms(text)? {
            let (coef, mono) = match split_last_top_level(term, '*') {
                Some((c, m)) => {
                    let c = c.trim();
                    let c = c.strip_prefix('(').and_then(|x| x.strip_suffix(')')).unwrap_or(c);
                    (S::parse(c)?, m)
                }
                None => (S::one(), term),
            };
            let sm = Monomial::from_tree(space, &parse_tree(mono)?)?;
            let mut c = if sm.sign < 0 { coef.neg_ref() } else { coef };
            if negative {
                c = c.neg_ref();
            }
            let i = sm.monomial.index();
            r.coeffs[i] = r.coeffs[i].add_ref(&c);
        }
        Ok(r)
    }
}

impl Relation<PolyQ> {
    pub fn specialize(&self, q0: &Rational) -> Relation<Rational> {
        self.map(|p| p.eval(q0))
    }
}

/// Stacks relations as the rows of a matrix.
pub fn relations_to_matrix<S: Scalar>(space: Space, rels: &[Relation<S>]) -> Result<Matrix<S>> {
    for r in rels {
        r.check_space(space)?;
    }
    Matrix::from_rows(rels.iter().map(|r| r.coeffs.clone()).collect(), space.dim())
}

pub fn matrix_to_relations<S: Scalar>(space: Space, m: &Matrix<S>) -> Result<Vec<Relation<S>>> {
    m.rows().map(|r| Relation::new(space, r.to_vec())).collect()
}

fn split_last_top_level(s: &str, sep: char) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices().rev() {
        match ch {
            ')' | ']' => depth += 1,
            '(' | '[' => depth -= 1,
            c if c == sep && depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}

/// Splits `t1 - t2 + ...` at top-level signs.
fn split_terms(s: &str) -> Result<Vec<(bool, &str)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut negative = false;
    let mut expecting_term = true;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' | '[' => {
                depth += 1;
                expecting_term = false;
            }
            ')' | ']' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::Format("unbalanced brackets".into()));
                }
            }
            '+' | '-' if depth == 0 => {
                if expecting_term {
                    if ch == '-' {
                        negative = !negative;
                    }
                    start = i + 1;
                    continue;
                }
                out.push((negative, s[start..i].trim()));
                negative = ch == '-';
                start = i + 1;
                expecting_term = true;
            }
            c if c.is_whitespace() => {}
            _ => expecting_term = false,
        }
    }
    if depth != 0 {
        return Err(Error::Format("unbalanced brackets".into()));
    }
    let last = s[start..].trim();
    if last.is_empty() {
        return Err(Error::Format("dangling sign".into()));
    }
    out.push((negative, last));
    Ok(out)
}

/// Interchange form: `{"space":"SO2","coeffs":[...]}`, optionally with the
/// rendered `text`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationDoc {
    pub space: Space,
    pub coeffs: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub text: Option<String>,
}

impl RelationDoc {
    pub fn from_relation<S: Scalar>(r: &Relation<S>, with_text: bool) -> Self {
        RelationDoc {
            space: r.space,
            coeffs: r.coeffs.iter().map(ToString::to_string).collect(),
            text: with_text.then(|| r.render(RenderOptions::default())),
        }
    }

    /// Coefficients are read in ℚ[q], which contains every ring we emit.
    pub fn to_relation(&self) -> Result<Relation<PolyQ>> {
        let coeffs = self.coeffs.iter().map(|s| PolyQ::parse(s)).collect::<Result<Vec<_>, _>>()?;
        Relation::new(self.space, coeffs)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}
