//! Text literals for trees, permutations, fractions and wreath elements.
//!
//! Grammar (whitespace insignificant):
//! ```text
//! tree     := "." label? | "(" tree{k} ")"
//! label    := "{" group-literal "}"
//! forest   := tree+
//! perm     := "[" int ("," int)* "]"
//! element  := (perm "*")? forest "/" forest
//! wreath   := "{" (rational ":" group-literal ("," ...)*)? "}" "|" element
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::forest::{Forest, Shape};
use crate::perm::Perm;

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    pub fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    pub fn eat(&mut self, ch: char) -> bool {
        if self.peek() == Some(ch) {
            self.pos += ch.len_utf8();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, ch: char) -> Result<()> {
        if self.eat(ch) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{ch}'")))
        }
    }

    pub fn error(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.pos, msg)
    }

    pub fn finish(&mut self) -> Result<()> {
        if self.peek().is_some() {
            return Err(self.error("unexpected trailing input"));
        }
        Ok(())
    }

    pub fn usize(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        let digits = self.src[start..].chars().take_while(char::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error("expected a number"));
        }
        self.pos += digits;
        self.src[start..self.pos].parse().map_err(|_| Error::parse(start, "number too large"))
    }

    pub fn perm(&mut self) -> Result<Perm> {
        let start = self.pos;
        self.expect('[')?;
        let mut xs = Vec::new();
        if !self.eat(']') {
            loop {
                xs.push(self.usize()?);
                if self.eat(']') {
                    break;
                }
                self.expect(',')?;
            }
        }
        Perm::from_one_line(&xs).map_err(|e| Error::parse(start, e.to_string()))
    }

    /// A tree shape, discarding labels.
    pub fn shape(&mut self) -> Result<Shape> {
        let mut labels = Vec::new();
        self.labeled_shape(&mut labels)
    }

    /// A tree shape; leaf labels (raw text, `None` when absent) are appended.
    pub fn labeled_shape(&mut self, labels: &mut Vec<Option<String>>) -> Result<Shape> {
        match self.peek() {
            Some('.') => {
                self.pos += 1;
                if self.peek() == Some('{') {
                    self.pos += 1;
                    let text = self.raw_until(&['}'])?;
                    self.expect('}')?;
                    labels.push(Some(text));
                } else {
                    labels.push(None);
                }
                Ok(Shape::Leaf)
            }
            Some('(') => {
                self.pos += 1;
                let mut children = Vec::new();
                while self.peek() != Some(')') {
                    if self.peek().is_none() {
                        return Err(self.error("unclosed '('"));
                    }
                    children.push(self.labeled_shape(labels)?);
                }
                self.pos += 1;
                if children.len() < 2 {
                    return Err(self.error("a node needs at least two children"));
                }
                Ok(Shape::node(children))
            }
            _ => Err(self.error("expected '.' or '('")),
        }
    }

    pub fn forest_shapes(&mut self) -> Result<Vec<Shape>> {
        let mut labels = Vec::new();
        self.labeled_forest_shapes(&mut labels)
    }

    pub fn labeled_forest_shapes(&mut self, labels: &mut Vec<Option<String>>) -> Result<Vec<Shape>> {
        let mut trees = vec![self.labeled_shape(labels)?];
        while matches!(self.peek(), Some('.') | Some('(')) {
            trees.push(self.labeled_shape(labels)?);
        }
        Ok(trees)
    }

    /// Raw text up to (not including) one of `stops` at bracket depth zero.
    pub fn raw_until(&mut self, stops: &[char]) -> Result<String> {
        let start = self.pos;
        let mut depth = 0i32;
        for (i, c) in self.src[start..].char_indices() {
            if depth == 0 && stops.contains(&c) {
                self.pos = start + i;
                return Ok(self.src[start..self.pos].trim().to_string());
            }
            match c {
                '(' | '[' | '{' => depth += 1,
                ')' | ']' | '}' => depth -= 1,
                _ => {}
            }
        }
        Err(Error::parse(start, format!("unterminated token, expected one of {stops:?}")))
    }

    pub fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::parse(0, format!("not a rational: {s:?}"));
    if let Some((a, b)) = s.split_once('/') {
        let a: BigInt = a.trim().parse().map_err(|_| bad())?;
        let b: BigInt = b.trim().parse().map_err(|_| bad())?;
        if b.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(a, b));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let neg = int.starts_with('-');
        let digits = format!("{}{}", int.trim_start_matches('-'), frac);
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let num: BigInt = digits.parse().map_err(|_| bad())?;
        let den = num_traits::pow(BigInt::from(10), frac.len());
        let r = BigRational::new(num, den);
        return Ok(if neg { -r } else { r });
    }
    let a: BigInt = s.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(a))
}

pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Raw pieces of an element literal.
#[derive(Debug, Clone)]
pub(crate) struct RawElement {
    pub perm: Option<Perm>,
    pub num: Vec<Shape>,
    pub labels: Vec<Option<String>>,
    pub den: Vec<Shape>,
}

pub(crate) fn raw_element(c: &mut Cursor<'_>) -> Result<RawElement> {
    let perm = if c.peek() == Some('[') {
        let p = c.perm()?;
        c.expect('*')?;
        Some(p)
    } else {
        None
    };
    let mut labels = Vec::new();
    let num = c.labeled_forest_shapes(&mut labels)?;
    c.expect('/')?;
    let den = c.forest_shapes()?;
    Ok(RawElement { perm, num, labels, den })
}

/// Builds the two forests of an element literal with a common arity.
pub(crate) fn element_forests(raw: &RawElement) -> Result<(Forest, Forest)> {
    let k = raw.num.iter().chain(&raw.den).find_map(Shape::arity).unwrap_or(2);
    Ok((Forest::new(k, raw.num.clone())?, Forest::new(k, raw.den.clone())?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("3/4").unwrap(), BigRational::new(3.into(), 4.into()));
        assert_eq!(parse_rational("0.75").unwrap(), BigRational::new(3.into(), 4.into()));
        assert_eq!(parse_rational("-2").unwrap(), BigRational::from_integer((-2).into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn errors_carry_positions() {
        let mut c = Cursor::new("((..).");
        match c.shape() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn labeled_leaves() {
        let mut c = Cursor::new("((.{x}.).{[2,1]})");
        let mut labels = Vec::new();
        let s = c.labeled_shape(&mut labels).unwrap();
        assert_eq!(s.to_string(), "((..).)");
        assert_eq!(labels, vec![Some("x".into()), None, Some("[2,1]".into())]);
    }
}
