//! Number and momentum-grid parsing.
//!
//! A grid file holds one momentum per line: three fields separated by
//! whitespace or commas, each an integer, a fraction `a/b`, or a decimal.
//! `#` starts a comment. A grid whose fields are all integers or fractions
//! is exact; a single decimal makes the whole grid floating point.

use std::str::FromStr;

use relspin::{Exact, Float, Rational, RealScalar};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("invalid number {0:?}")]
    Number(String),
    #[error("line {line}: {message}")]
    Row { line: usize, message: String },
    #[error("grid has no momenta")]
    Empty,
}

/// A parsed real: exact when written as an integer or fraction.
#[derive(Debug, Clone, PartialEq)]
pub enum Number {
    Exact(Rational),
    Float(f64),
}

impl Number {
    pub fn to_f64(&self) -> f64 {
        match self {
            Number::Exact(r) => r.to_f64(),
            Number::Float(x) => *x,
        }
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            Number::Exact(r) => Some(r),
            Number::Float(_) => None,
        }
    }
}

fn is_integer(s: &str) -> bool {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
}

impl FromStr for Number {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let s = s.trim();
        let bad = || ParseError::Number(s.to_string());
        let exact_form = match s.split_once('/') {
            Some((n, d)) => is_integer(n) && is_integer(d),
            None => is_integer(s),
        };
        if exact_form {
            let r = Rational::from_str(s.strip_prefix('+').unwrap_or(s)).map_err(|_| bad())?;
            return Ok(Number::Exact(r));
        }
        match s.parse::<f64>() {
            Ok(x) if x.is_finite() => Ok(Number::Float(x)),
            _ => Err(bad()),
        }
    }
}

/// A complex number written as `a`, `bi`, or `a+bi` / `a-bi`, where `a` and
/// `b` are [`Number`]s. `i` alone stands for `1i`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexNumber {
    pub re: Number,
    pub im: Number,
}

impl ComplexNumber {
    pub fn to_float(&self) -> Float {
        Float::new(self.re.to_f64(), self.im.to_f64())
    }

    pub fn to_exact(&self) -> Option<Exact> {
        Some(Exact::new(
            self.re.as_exact()?.clone(),
            self.im.as_exact()?.clone(),
        ))
    }
}

impl FromStr for ComplexNumber {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let s = s.trim();
        let zero = Number::Exact(Rational::from_i64(0));
        let Some(body) = s.strip_suffix('i') else {
            return Ok(Self {
                re: s.parse()?,
                im: zero,
            });
        };
        // the split is the last sign that is neither leading nor part of an exponent
        let split = body
            .char_indices()
            .rev()
            .filter(|&(idx, c)| (c == '+' || c == '-') && idx > 0)
            .filter(|&(idx, _)| !matches!(body.as_bytes()[idx - 1], b'e' | b'E'))
            .map(|(idx, _)| idx)
            .next();
        let (re, im) = match split {
            Some(idx) => (body[..idx].parse()?, &body[idx..]),
            None => (zero, body),
        };
        let im = match im {
            "" | "+" => Number::Exact(Rational::from_i64(1)),
            "-" => Number::Exact(Rational::from_i64(-1)),
            other => other
                .parse()
                .map_err(|_| ParseError::Number(s.to_string()))?,
        };
        Ok(Self { re, im })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Grid {
    Exact(Vec<[Rational; 3]>),
    Float(Vec<[f64; 3]>),
}

impl Grid {
    pub fn len(&self) -> usize {
        match self {
            Grid::Exact(g) => g.len(),
            Grid::Float(g) => g.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn to_float(&self) -> Vec<[f64; 3]> {
        match self {
            Grid::Exact(g) => g.iter().map(|p| p.clone().map(|x| x.to_f64())).collect(),
            Grid::Float(g) => g.clone(),
        }
    }
}

pub fn parse_grid(text: &str) -> Result<Grid, ParseError> {
    let mut rows: Vec<[Number; 3]> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|f| !f.is_empty())
            .collect();
        if fields.len() != 3 {
            return Err(ParseError::Row {
                line,
                message: format!(
                    "expected 3 fields, found {} in {:?}",
                    fields.len(),
                    raw.trim()
                ),
            });
        }
        let mut parsed = Vec::with_capacity(3);
        for f in fields {
            parsed.push(f.parse::<Number>().map_err(|e| ParseError::Row {
                line,
                message: e.to_string(),
            })?);
        }
        let [a, b, c]: [Number; 3] = parsed.try_into().expect("three fields");
        rows.push([a, b, c]);
    }
    if rows.is_empty() {
        return Err(ParseError::Empty);
    }
    let exact: Option<Vec<[Rational; 3]>> = rows
        .iter()
        .map(|row| {
            Some([
                row[0].as_exact()?.clone(),
                row[1].as_exact()?.clone(),
                row[2].as_exact()?.clone(),
            ])
        })
        .collect();
    Ok(match exact {
        Some(g) => Grid::Exact(g),
        None => Grid::Float(
            rows.iter()
                .map(|row| [row[0].to_f64(), row[1].to_f64(), row[2].to_f64()])
                .collect(),
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use relspin::scalar::rat;

    #[test]
    fn numbers() {
        assert_eq!("3".parse::<Number>().unwrap(), Number::Exact(rat(3, 1)));
        assert_eq!("-6/4".parse::<Number>().unwrap(), Number::Exact(rat(-3, 2)));
        assert_eq!("+2".parse::<Number>().unwrap(), Number::Exact(rat(2, 1)));
        assert_eq!("0.5".parse::<Number>().unwrap(), Number::Float(0.5));
        assert_eq!("1e3".parse::<Number>().unwrap(), Number::Float(1000.0));
        assert!("1/0".parse::<Number>().is_err());
        assert!("abc".parse::<Number>().is_err());
        assert!("inf".parse::<Number>().is_err());
        assert!("".parse::<Number>().is_err());
    }

    #[test]
    fn complex_numbers() {
        let c = |s: &str| s.parse::<ComplexNumber>().unwrap();
        assert_eq!(c("1").to_exact(), Some(Exact::new(rat(1, 1), rat(0, 1))));
        assert_eq!(
            c("1/2-3i").to_exact(),
            Some(Exact::new(rat(1, 2), rat(-3, 1)))
        );
        assert_eq!(c("-i").to_exact(), Some(Exact::new(rat(0, 1), rat(-1, 1))));
        assert_eq!(c("2+i").to_exact(), Some(Exact::new(rat(2, 1), rat(1, 1))));
        assert_eq!(c("1e-3+2.5i").to_float(), Float::new(1e-3, 2.5));
        assert_eq!(c("0.5").to_exact(), None);
        assert!("1+xi".parse::<ComplexNumber>().is_err());
    }

    #[test]
    fn grid_routes_by_field_kind() {
        let g = parse_grid("# momenta\n0 0 0\n1, 2, 2  # quadruple\n\n1/2 -3 0\n").unwrap();
        assert_eq!(
            g,
            Grid::Exact(vec![
                [rat(0, 1), rat(0, 1), rat(0, 1)],
                [rat(1, 1), rat(2, 1), rat(2, 1)],
                [rat(1, 2), rat(-3, 1), rat(0, 1)],
            ])
        );
        let g = parse_grid("0 0 0\n0.5 0 1\n").unwrap();
        assert_eq!(g, Grid::Float(vec![[0.0, 0.0, 0.0], [0.5, 0.0, 1.0]]));
    }

    #[test]
    fn grid_errors_name_the_line() {
        let err = parse_grid("0 0 0\n# fine\n1 2\n").unwrap_err();
        assert!(matches!(err, ParseError::Row { line: 3, .. }), "{err}");
        let err = parse_grid("0 0 0\n1 x 2\n").unwrap_err();
        assert_eq!(err.to_string(), "line 2: invalid number \"x\"");
        assert_eq!(parse_grid("# nothing\n\n").unwrap_err(), ParseError::Empty);
    }
}
