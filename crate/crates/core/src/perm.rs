//! Permutations of `{1..n}` in one-line notation.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::literal::Cursor;

/// A bijection of `{1..n}`. Stored 0-based; `images[i] = σ(i)`.
///
/// Composition follows function composition: `(σ∘τ)(i) = σ(τ(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { images: (0..n).collect() }
    }

    /// Builds from 1-based one-line images.
    pub fn from_one_line(one_line: &[usize]) -> Result<Self> {
        let images: Vec<usize> = one_line
            .iter()
            .map(|&x| {
                if x == 0 {
                    Err(Error::Domain("permutation images are 1-based".into()))
                } else {
                    Ok(x - 1)
                }
            })
            .collect::<Result<_>>()?;
        Self::from_images(images)
    }

    /// Builds from 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::Domain(format!("not a permutation of degree {n}")));
            }
            seen[x] = true;
        }
        Ok(Perm { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Perm { images }
    }

    /// The rotation `i ↦ i + c (mod n)`.
    pub fn rotation(n: usize, c: usize) -> Self {
        Perm { images: (0..n).map(|i| (i + c) % n.max(1)).collect() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { expected: self.degree(), got: other.degree() });
        }
        Ok(Perm { images: other.images.iter().map(|&i| self.images[i]).collect() })
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `Some(c)` if this is the rotation by `c`.
    pub fn rotation_amount(&self) -> Option<usize> {
        let n = self.degree();
        if n == 0 {
            return Some(0);
        }
        let c = self.images[0];
        (self.images.iter().enumerate().all(|(i, &x)| x == (i + c) % n)).then_some(c)
    }

    /// Block sum: `other` acts on the indices after `self`.
    pub fn tensor(&self, other: &Perm) -> Perm {
        let shift = self.degree();
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|x| x + shift));
        Perm { images }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x + 1)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Perm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut c = Cursor::new(s);
        let p = c.perm()?;
        c.finish()?;
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_is_function_composition() {
        let s: Perm = "[2,3,1]".parse().unwrap();
        let t: Perm = "[2,1,3]".parse().unwrap();
        // s(t(1)) = s(2) = 3
        assert_eq!(s.compose(&t).unwrap().one_line(), vec![3, 2, 1]);
        assert!(s.compose(&s.inverse()).unwrap().is_identity());
    }

    #[test]
    fn rotations() {
        assert_eq!(Perm::rotation(3, 1).one_line(), vec![2, 3, 1]);
        assert_eq!("[2,3,1]".parse::<Perm>().unwrap().rotation_amount(), Some(1));
        assert_eq!("[2,1,3]".parse::<Perm>().unwrap().rotation_amount(), None);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!("[1,1]".parse::<Perm>().is_err());
        assert!("[0,1]".parse::<Perm>().is_err());
        assert!("[1,3]".parse::<Perm>().is_err());
    }
}
