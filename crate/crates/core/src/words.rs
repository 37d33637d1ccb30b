//! States on binary trees, their word lists in the free monoid on
//! `a_0, b_0, a_1, b_1, …`, and the derived decompositions.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::forest::{Forest, ForestLayout, Shape, Tree};

/// Largest leaf count accepted by exhaustive state enumeration.
pub const STATE_CAP: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LetterKind {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub kind: LetterKind,
    pub level: u32,
}

/// A word; the empty word is `e`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// `-1` for `e`, else the largest letter level.
    pub fn level(&self) -> i64 {
        self.0.iter().map(|l| l.level as i64).max().unwrap_or(-1)
    }

    /// Length of the longest prefix ending in a `b` letter, or 1 without one.
    pub fn xi_length(&self) -> usize {
        self.0.iter().rposition(|l| l.kind == LetterKind::B).map_or(1, |i| i + 1)
    }

    pub fn push(&mut self, kind: LetterKind, level: u32) {
        self.0.push(Letter { kind, level });
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for l in &self.0 {
            let c = match l.kind {
                LetterKind::A => 'a',
                LetterKind::B => 'b',
            };
            if l.level == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}{}", l.level)?;
            }
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Word> {
        let s = s.trim();
        if s == "e" {
            return Ok(Word::empty());
        }
        let bytes = s.as_bytes();
        let mut w = Word::empty();
        let mut i = 0;
        while i < bytes.len() {
            let kind = match bytes[i] {
                b'a' => LetterKind::A,
                b'b' => LetterKind::B,
                _ => return Err(Error::parse(i, "expected 'a' or 'b'")),
            };
            i += 1;
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let level = if start == i { 0 } else { s[start..i].parse().map_err(|_| Error::parse(start, "bad level"))? };
            w.push(kind, level);
        }
        Ok(w)
    }
}

/// `τ`: internal vertices (preorder) → {0,1}, as a bit mask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct State {
    len: usize,
    bits: u64,
}

impl State {
    pub fn new(len: usize, bits: u64) -> Result<State> {
        if len > 64 || (len < 64 && bits >> len != 0) {
            return Err(Error::Domain(format!("state bits {bits:#b} do not fit {len} vertices")));
        }
        Ok(State { len, bits })
    }

    pub fn from_values(values: &[u8]) -> Result<State> {
        let mut bits = 0u64;
        for (i, &v) in values.iter().enumerate() {
            match v {
                0 => {}
                1 => bits |= 1 << i,
                _ => return Err(Error::Domain("state values are 0 or 1".into())),
            }
        }
        State::new(values.len(), bits)
    }

    pub fn zeros(len: usize) -> State {
        State { len, bits: 0 }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn get(&self, v: usize) -> u8 {
        ((self.bits >> v) & 1) as u8
    }

    pub fn values(&self) -> Vec<u8> {
        (0..self.len).map(|v| self.get(v)).collect()
    }

    pub fn exponents(&self) -> WeightExponents {
        let b = self.bits.count_ones() as usize;
        WeightExponents { a: self.len - b, b }
    }
}

/// `α_τ = α^a β^b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightExponents {
    pub a: usize,
    pub b: usize,
}

fn require_binary(arity: usize) -> Result<()> {
    if arity != 2 {
        return Err(Error::Unsupported(format!("word combinatorics need binary trees, got arity {arity}")));
    }
    Ok(())
}

fn check_state(layout: &ForestLayout, tau: &State) -> Result<()> {
    if tau.len() != layout.vertex_count {
        return Err(Error::DegreeMismatch { expected: layout.vertex_count, got: tau.len() });
    }
    Ok(())
}

/// Word list of a state on a forest layout; each tree is read independently.
pub fn words_on_layout(layout: &ForestLayout, tau: &State) -> Result<Vec<Word>> {
    require_binary(layout.arity)?;
    check_state(layout, tau)?;
    Ok(layout
        .leaf_paths
        .iter()
        .map(|path| {
            let mut w = Word::empty();
            let mut sum = 0u32;
            for e in &path.edges {
                sum += tau.get(e.vertex) as u32;
                if sum > 0 {
                    w.push(if e.child == 0 { LetterKind::A } else { LetterKind::B }, sum - 1);
                }
            }
            w
        })
        .collect())
}

/// `W(t,τ)`.
pub fn words_of_state(t: &Tree, tau: &State) -> Result<Vec<Word>> {
    words_on_layout(&ForestLayout::new(&Forest::from_tree(t)), tau)
}

/// Every state of `t` with its exponents and word list.
pub fn state_expansion(t: &Tree) -> Result<Vec<(State, WeightExponents, Vec<Word>)>> {
    state_expansion_capped(t, STATE_CAP)
}

pub fn state_expansion_capped(t: &Tree, cap: usize) -> Result<Vec<(State, WeightExponents, Vec<Word>)>> {
    require_binary(t.arity())?;
    let n = t.leaves();
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let layout = ForestLayout::new(&Forest::from_tree(t));
    let v = layout.vertex_count;
    (0..1u64 << v)
        .map(|bits| {
            let tau = State { len: v, bits };
            let words = words_on_layout(&layout, &tau)?;
            Ok((tau, tau.exponents(), words))
        })
        .collect()
}

/// Vertices of the maximal all-zero rooted subtree `z_τ`, as a mask.
pub fn zero_subtree_mask(layout: &ForestLayout, tau: &State) -> u128 {
    let mut mask = 0u128;
    for v in 0..layout.vertex_count {
        let parent_in = match layout.parent[v] {
            None => true,
            Some((p, _)) => mask >> p & 1 == 1,
        };
        // preorder: parents are visited first
        if parent_in && tau.get(v) == 0 && v < 128 {
            mask |= 1 << v;
        }
    }
    mask
}

/// `t = f_τ ∘ z_τ`.
pub fn subtree_decomposition(t: &Tree, tau: &State) -> Result<(Tree, Forest)> {
    let layout = ForestLayout::new(&Forest::from_tree(t));
    check_state(&layout, tau)?;
    fn go(s: &Shape, tau: &State, next: &mut usize, tops: &mut Vec<Shape>) -> Shape {
        match s {
            Shape::Leaf => {
                tops.push(Shape::Leaf);
                Shape::Leaf
            }
            Shape::Node(c) => {
                let v = *next;
                if tau.get(v) == 1 {
                    *next += s.internal();
                    tops.push(s.clone());
                    Shape::Leaf
                } else {
                    *next += 1;
                    Shape::node(c.iter().map(|x| go(x, tau, next, tops)).collect())
                }
            }
        }
    }
    let mut tops = Vec::new();
    let z = go(t.shape(), tau, &mut 0, &mut tops);
    Ok((Tree::new(t.arity(), z)?, Forest::new(t.arity(), tops)?))
}

/// `L_j(τ)` from the paths of `f_τ`: the prefix of the path below the first
/// 1-vertex, up to and including its last right edge; 1 if there is none.
pub fn xi_lengths_on_layout(layout: &ForestLayout, tau: &State) -> Vec<usize> {
    layout
        .leaf_paths
        .iter()
        .map(|path| {
            let Some(r) = path.edges.iter().position(|e| tau.get(e.vertex) == 1) else {
                return 1;
            };
            path.edges[r..].iter().rposition(|e| e.child == 1).map_or(1, |i| i + 1)
        })
        .collect()
}

pub fn xi_lengths(t: &Tree, tau: &State) -> Result<Vec<usize>> {
    require_binary(t.arity())?;
    let layout = ForestLayout::new(&Forest::from_tree(t));
    check_state(&layout, tau)?;
    Ok(xi_lengths_on_layout(&layout, tau))
}

/// `L_j(τ)` read off the words.
pub fn xi_lengths_from_words(words: &[Word]) -> Vec<usize> {
    words.iter().map(Word::xi_length).collect()
}

pub fn word_level(x: &Word) -> i64 {
    x.level()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Tree {
        s.parse().unwrap()
    }

    fn ws(words: &[Word]) -> Vec<String> {
        words.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn three_leaf_words() {
        let tree = t("((..).)");
        let tau = State::from_values(&[1, 0]).unwrap();
        assert_eq!(ws(&words_of_state(&tree, &tau).unwrap()), ["aa", "ab", "b"]);
        assert_eq!(tau.exponents(), WeightExponents { a: 1, b: 1 });
        let zero = State::zeros(2);
        assert!(words_of_state(&tree, &zero).unwrap().iter().all(Word::is_empty));
    }

    #[test]
    fn five_leaf_example() {
        let tree = t("(((..)(..)).)");
        let tau = State::from_values(&[0, 1, 0, 1]).unwrap();
        assert_eq!(ws(&words_of_state(&tree, &tau).unwrap()), ["aa", "ab", "ba1", "bb1", "e"]);
        let (z, f) = subtree_decomposition(&tree, &tau).unwrap();
        assert_eq!(z, Tree::caret(2));
        assert_eq!(f.to_string(), "((..)(..)).");
        assert_eq!(xi_lengths(&tree, &tau).unwrap(), vec![1, 2, 1, 2, 1]);
    }

    #[test]
    fn expansion_examples() {
        let leaf = state_expansion(&Tree::leaf(2)).unwrap();
        assert_eq!(leaf.len(), 1);
        assert_eq!(leaf[0].1, WeightExponents { a: 0, b: 0 });
        assert_eq!(ws(&leaf[0].2), ["e"]);
        let y = state_expansion(&Tree::caret(2)).unwrap();
        let got: Vec<_> = y.iter().map(|(_, e, w)| (e.a, e.b, ws(w))).collect();
        assert_eq!(got, vec![(1, 0, vec!["e".to_string(), "e".into()]), (0, 1, vec!["a".into(), "b".into()])]);
        let big = Tree::new(2, crate::fraction::random_binary_shape(&mut rand::rng(), 30)).unwrap();
        assert!(matches!(state_expansion(&big), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn decomposition_extremes() {
        let tree = t("((..)(..))");
        let (z, f) = subtree_decomposition(&tree, &State::zeros(3)).unwrap();
        assert_eq!((z, f.is_trivial()), (tree.clone(), true));
        let (z, f) = subtree_decomposition(&tree, &State::from_values(&[1, 0, 0]).unwrap()).unwrap();
        assert_eq!((z, f), (Tree::leaf(2), Forest::from_tree(&tree)));
    }

    #[test]
    fn xi_length_examples() {
        let tree = t("((..)(..))");
        assert_eq!(xi_lengths(&tree, &State::zeros(3)).unwrap(), vec![1; 4]);
        assert_eq!(xi_lengths(&Tree::caret(2), &State::from_values(&[1]).unwrap()).unwrap(), vec![1, 1]);
    }

    #[test]
    fn levels() {
        assert_eq!(word_level(&Word::empty()), -1);
        assert_eq!(word_level(&"ab".parse().unwrap()), 0);
        assert_eq!(word_level(&"ba1".parse().unwrap()), 1);
        assert_eq!("ba1b2".parse::<Word>().unwrap().to_string(), "ba1b2");
    }
}
