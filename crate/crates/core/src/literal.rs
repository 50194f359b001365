//! Textual form of quaternions, e.g. `-1+3i+j-2k` or `1/2+1/2i+1/2j+1/2k`.
//!
//! Grammar: an optional sign, then terms separated by `+` or `-`. A term is
//! `[coef][unit]` where `coef` is `n`, `n/2` or `n/1`, and `unit` is one of
//! `i`, `j`, `k` (or absent for the real part). A unit may also be written
//! before the denominator (`i/2`). Whitespace between tokens is ignored.
//! Repeated terms add.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cross::ScaledQuaternion;
use crate::error::{Error, Result};
use crate::gaussian::GaussianInteger;
use crate::quat::HurwitzQuaternion;

const UNITS: [&str; 4] = ["", "i", "j", "k"];

impl fmt::Display for HurwitzQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let half = !self.is_lipschitz();
        let mut first = true;
        for (d, unit) in self.doubled().iter().zip(UNITS) {
            if d.is_zero() {
                continue;
            }
            let magnitude = if half { d.abs() } else { d.abs() >> 1 };
            if d.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            if half {
                write!(f, "{magnitude}/2{unit}")?;
            } else if magnitude.is_one() && !unit.is_empty() {
                f.write_str(unit)?;
            } else {
                write!(f, "{magnitude}{unit}")?;
            }
        }
        Ok(())
    }
}

/// Hurwitz values print as literals; other values as `(numerators)/d`.
impl fmt::Display for ScaledQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_hurwitz() {
            Some(h) => h.fmt(f),
            None => write!(
                f,
                "({})/{}",
                HurwitzQuaternion::from_coords(self.numerators.clone()),
                self.denominator
            ),
        }
    }
}

impl fmt::Display for GaussianInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_quaternion().fmt(f)
    }
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            chars: text.char_indices().collect(),
            pos: 0,
            text,
        }
    }

    fn skip_whitespace(&mut self) {
        while self
            .chars
            .get(self.pos)
            .is_some_and(|&(_, c)| c.is_whitespace())
        {
            self.pos += 1;
        }
    }

    fn offset(&self) -> usize {
        self.chars
            .get(self.pos)
            .map_or(self.text.len(), |&(i, _)| i)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            position: self.offset(),
            message: message.into(),
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_whitespace();
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        self.skip_whitespace();
        let start = self.pos;
        while self
            .chars
            .get(self.pos)
            .is_some_and(|&(_, c)| c.is_ascii_digit())
        {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s: String = self.chars[start..self.pos]
            .iter()
            .map(|&(_, c)| c)
            .collect();
        Some(s.parse().expect("ascii digits"))
    }

    fn unit(&mut self) -> Option<usize> {
        let idx = match self.peek()? {
            'i' => 1,
            'j' => 2,
            'k' => 3,
            _ => return None,
        };
        self.pos += 1;
        Some(idx)
    }

    fn denominator(&mut self) -> Result<bool> {
        if !self.eat('/') {
            return Ok(false);
        }
        match self.digits() {
            Some(d) if d == BigInt::from(2) => Ok(true),
            Some(d) if d.is_one() => Ok(false),
            Some(_) => Err(Error::Parse {
                position: self.chars[self.pos - 1].0,
                message: "denominator must be 1 or 2".into(),
            }),
            None => Err(self.error("expected denominator")),
        }
    }

    /// Returns the component index and the doubled coefficient.
    fn term(&mut self) -> Result<(usize, BigInt)> {
        let coef = self.digits();
        let mut half = self.denominator()?;
        let unit = self.unit();
        if coef.is_none() && unit.is_none() {
            return Err(self.error("expected a coefficient or one of i, j, k"));
        }
        if unit.is_some() && !half {
            half = self.denominator()?;
        }
        let coef = coef.unwrap_or_else(BigInt::one);
        Ok((unit.unwrap_or(0), if half { coef } else { coef << 1 }))
    }

    fn quaternion(&mut self) -> Result<[BigInt; 4]> {
        let mut doubled: [BigInt; 4] = Default::default();
        let mut first = true;
        while first || self.peek().is_some() {
            let negative = if self.eat('-') {
                true
            } else if self.eat('+') || first {
                false
            } else {
                return Err(self.error("expected '+' or '-'"));
            };
            let (idx, value) = self.term()?;
            if negative {
                doubled[idx] -= value;
            } else {
                doubled[idx] += value;
            }
            first = false;
        }
        Ok(doubled)
    }
}

/// Parses the literal grammar described in the module docs.
pub fn parse_quaternion(text: &str) -> Result<HurwitzQuaternion> {
    let mut parser = Parser::new(text);
    if parser.peek().is_none() {
        return Err(parser.error("empty literal"));
    }
    HurwitzQuaternion::from_doubled(parser.quaternion()?)
}

/// Canonical text: terms in `1, i, j, k` order, zero terms omitted.
pub fn format_quaternion(u: &HurwitzQuaternion) -> String {
    u.to_string()
}

/// Parses `a+bi`; `j` and `k` terms and halves are rejected.
pub fn parse_gaussian(text: &str) -> Result<GaussianInteger> {
    let mut parser = Parser::new(text);
    if parser.peek().is_none() {
        return Err(parser.error("empty literal"));
    }
    let doubled = parser.quaternion()?;
    if !doubled[2].is_zero() || !doubled[3].is_zero() {
        return Err(Error::Parse {
            position: 0,
            message: "Gaussian integers have no j or k part".into(),
        });
    }
    if doubled[0].is_odd() || doubled[1].is_odd() {
        return Err(Error::Parse {
            position: 0,
            message: "Gaussian integers have integer parts".into(),
        });
    }
    Ok(GaussianInteger::new(&doubled[0] >> 1, &doubled[1] >> 1))
}

impl FromStr for HurwitzQuaternion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_quaternion(s)
    }
}

impl FromStr for GaussianInteger {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_gaussian(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> HurwitzQuaternion {
        s.parse().unwrap()
    }

    #[test]
    fn parse_examples() {
        let a = q("-1+3i+j-2k");
        assert_eq!(a.doubled(), &[-2, 6, 2, -4].map(BigInt::from));
        assert_eq!(q("1/2+1/2i+1/2j+1/2k"), HurwitzQuaternion::omega());
        assert_eq!(q("i/2+1/2+j/2+k/2"), HurwitzQuaternion::omega());
        assert_eq!(q(" 3 - 4 k "), HurwitzQuaternion::new(3, 0, 0, -4));
        assert_eq!(q("-i"), HurwitzQuaternion::new(0, -1, 0, 0));
        assert_eq!(q("2/1j"), HurwitzQuaternion::new(0, 0, 2, 0));
        assert_eq!(q("i+i"), HurwitzQuaternion::new(0, 2, 0, 0));
        assert_eq!(q("0"), HurwitzQuaternion::zero());
    }

    #[test]
    fn parse_errors() {
        match parse_quaternion("1+i/3") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_quaternion(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_quaternion("1+"), Err(Error::Parse { .. })));
        assert!(matches!(parse_quaternion("1 2"), Err(Error::Parse { .. })));
        assert!(matches!(parse_quaternion("x"), Err(Error::Parse { .. })));
        assert!(matches!(parse_quaternion("ij"), Err(Error::Parse { .. })));
        assert_eq!(parse_quaternion("1/2+i"), Err(Error::MixedParity));
    }

    #[test]
    fn format_examples() {
        assert_eq!(HurwitzQuaternion::omega().to_string(), "1/2+1/2i+1/2j+1/2k");
        assert_eq!(
            HurwitzQuaternion::new(-1, 3, 1, -2).to_string(),
            "-1+3i+j-2k"
        );
        assert_eq!(HurwitzQuaternion::zero().to_string(), "0");
        assert_eq!(HurwitzQuaternion::new(0, 0, -1, 0).to_string(), "-j");
        assert_eq!(
            HurwitzQuaternion::make(-1, 3, 1, -5).unwrap().to_string(),
            "-1/2+3/2i+1/2j-5/2k"
        );
        let a = HurwitzQuaternion::new(1, 1, 0, 0);
        let w = HurwitzQuaternion::omega();
        let c = crate::cross::cross3(&w, &a, &HurwitzQuaternion::j());
        assert_eq!(c.to_string(), "(-1+i)/2");
        let c = crate::cross::cross3(&w, &HurwitzQuaternion::i(), &HurwitzQuaternion::j());
        assert_eq!(c.to_string(), "(-1+k)/2");
        let l = crate::cross::cross3(&a, &HurwitzQuaternion::j(), &HurwitzQuaternion::k());
        assert_eq!(l.to_string(), "-1+i");
    }

    #[test]
    fn gaussian_literals() {
        assert_eq!(parse_gaussian("1+2i").unwrap(), GaussianInteger::new(1, 2));
        assert_eq!(parse_gaussian("1-i").unwrap(), GaussianInteger::new(1, -1));
        assert_eq!(parse_gaussian("-3").unwrap(), GaussianInteger::new(-3, 0));
        assert!(parse_gaussian("1+j").is_err());
        assert!(parse_gaussian("1/2+1/2i").is_err());
        assert_eq!(GaussianInteger::new(2, -1).to_string(), "2-i");
    }
}
