//! Elements of Thompson's groups and Higman–Thompson groupoid morphisms as
//! reduced forest pairs, with the piecewise-linear action used as an
//! independent equality oracle.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::forest::{check_arity, Forest, Shape, SymmetricForest, Tree};
use crate::literal::{self, format_rational, Cursor};
use crate::perm::Perm;

/// `(perm ∘ num) / den`: numerator leaf `j` sits at position `perm(j)`,
/// which is also denominator leaf `perm(j)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ForestPair {
    num: Forest,
    perm: Perm,
    den: Forest,
}

impl ForestPair {
    pub fn new(num: Forest, perm: Perm, den: Forest) -> Result<ForestPair> {
        check_arity(num.arity(), den.arity())?;
        if num.leaf_count() != den.leaf_count() {
            return Err(Error::ShapeMismatch(format!(
                "numerator has {} leaves, denominator {}",
                num.leaf_count(),
                den.leaf_count()
            )));
        }
        if perm.degree() != num.leaf_count() {
            return Err(Error::DegreeMismatch { expected: num.leaf_count(), got: perm.degree() });
        }
        Ok(ForestPair { num, perm, den })
    }

    pub fn identity(arity: usize, r: usize) -> ForestPair {
        ForestPair { num: Forest::trivial(arity, r), perm: Perm::identity(r), den: Forest::trivial(arity, r) }
    }

    pub fn num(&self) -> &Forest {
        &self.num
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    pub fn den(&self) -> &Forest {
        &self.den
    }

    pub fn arity(&self) -> usize {
        self.num.arity()
    }

    pub fn leaf_count(&self) -> usize {
        self.perm.degree()
    }

    /// Roots of the denominator.
    pub fn source(&self) -> usize {
        self.den.root_count()
    }

    /// Roots of the numerator.
    pub fn target(&self) -> usize {
        self.num.root_count()
    }

    pub fn is_identity(&self) -> bool {
        let r = self.reduce();
        r.num.is_trivial() && r.perm.is_identity()
    }

    /// Multiplies numerator and denominator on the left by `f`, whose roots
    /// sit on the common positions.
    pub fn expand(&self, f: &Forest) -> Result<ForestPair> {
        check_arity(self.arity(), f.arity())?;
        let pushed = f.compose_perm(&self.perm)?;
        Ok(ForestPair {
            num: Forest::compose(&pushed.forest, &self.num)?,
            perm: pushed.perm,
            den: Forest::compose(f, &self.den)?,
        })
    }

    /// Cancels common carets until none remain.
    ///
    /// A denominator caret over positions `i..i+k` cancels when the numerator
    /// leaves at those positions are consecutive, in order, and form a caret.
    pub fn reduce(&self) -> ForestPair {
        let k = self.arity();
        let mut cur = self.clone();
        'outer: loop {
            let inv = cur.perm.inverse();
            let num_starts: HashSet<usize> = cur.num.caret_starts().into_iter().collect();
            for i in cur.den.caret_starts() {
                let j = inv.apply(i);
                if !num_starts.contains(&j) || (1..k).any(|c| cur.perm.apply(j + c) != i + c) {
                    continue;
                }
                let n = cur.leaf_count();
                let shrink = |x: usize, at: usize| if x <= at { x } else { x - (k - 1) };
                let images = (0..n)
                    .filter(|&x| x <= j || x >= j + k)
                    .map(|x| shrink(cur.perm.apply(x), i))
                    .collect();
                cur = ForestPair {
                    num: cur.num.prune_caret(j),
                    perm: Perm::from_images_unchecked(images),
                    den: cur.den.prune_caret(i),
                };
                continue 'outer;
            }
            return cur;
        }
    }

    /// `u · v` (apply `v` first in the PL picture); needs `source(u) = target(v)`.
    pub fn multiply(u: &ForestPair, v: &ForestPair) -> Result<ForestPair> {
        check_arity(u.arity(), v.arity())?;
        if u.source() != v.target() {
            return Err(Error::ObjectMismatch { source_object: u.source(), target_object: v.target() });
        }
        // A∘s_u = B∘t_v; take f = A and f' = B∘σ_v⁻¹.
        let (_, a, b) = u.den.join(&v.num)?;
        let left = a.compose_perm(&u.perm)?;
        let right = b.compose_perm(&v.perm.inverse())?;
        let num = Forest::compose(&left.forest, &u.num)?;
        let den = Forest::compose(&right.forest, &v.den)?;
        let perm = right.perm.inverse().compose(&left.perm)?;
        Ok(ForestPair { num, perm, den }.reduce())
    }

    pub fn inverse(&self) -> ForestPair {
        ForestPair { num: self.den.clone(), perm: self.perm.inverse(), den: self.num.clone() }
    }

    /// Structural equality of reduced forms.
    pub fn equals(&self, other: &ForestPair) -> bool {
        self.reduce() == other.reduce()
    }

    pub fn pl_map(&self) -> PLMap {
        let dom = self.den.leaf_intervals();
        let img = self.num.leaf_intervals();
        let inv = self.perm.inverse();
        let pieces = dom
            .into_iter()
            .enumerate()
            .map(|(i, (ds, dl))| {
                let (is, il) = img[inv.apply(i)].clone();
                Piece { dom_start: ds, dom_len: dl, img_start: is, img_len: il }
            })
            .collect();
        PLMap::from_pieces(self.source(), self.target(), pieces)
    }

    fn write_with_labels(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*{}/{}", self.perm, self.num, self.den)
    }
}

impl fmt::Display for ForestPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with_labels(f)
    }
}

impl fmt::Debug for ForestPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with_labels(f)
    }
}

impl FromStr for ForestPair {
    type Err = Error;
    fn from_str(s: &str) -> Result<ForestPair> {
        let mut c = Cursor::new(s);
        let raw = literal::raw_element(&mut c)?;
        c.finish()?;
        if raw.labels.iter().any(Option::is_some) {
            return Err(Error::parse(0, "labels are not allowed in a plain element"));
        }
        let (num, den) = literal::element_forests(&raw)?;
        let perm = raw.perm.unwrap_or_else(|| Perm::identity(num.leaf_count()));
        ForestPair::new(num, perm, den)
    }
}

/// Which of `F ⊂ T ⊂ V` a reduced element lies in (the finest class).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ElementClass {
    F,
    T,
    V,
}

impl fmt::Display for ElementClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ElementClass::F => "F",
            ElementClass::T => "T\\F",
            ElementClass::V => "V\\T",
        })
    }
}

impl FromStr for ElementClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "F" | "f" => Ok(ElementClass::F),
            "T" | "t" => Ok(ElementClass::T),
            "V" | "v" => Ok(ElementClass::V),
            _ => Err(Error::parse(0, format!("unknown class {s:?}, expected F, T or V"))),
        }
    }
}

/// An element of a Thompson-type group: a forest pair on a single root.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FractionV(ForestPair);

impl FractionV {
    pub fn new(num: Tree, perm: Perm, den: Tree) -> Result<FractionV> {
        Ok(FractionV(ForestPair::new(Forest::from_tree(&num), perm, Forest::from_tree(&den))?))
    }

    pub fn from_pair(p: ForestPair) -> Result<FractionV> {
        if p.source() != 1 || p.target() != 1 {
            return Err(Error::ShapeMismatch("a group element needs single-rooted trees".into()));
        }
        Ok(FractionV(p))
    }

    pub fn identity(arity: usize) -> FractionV {
        FractionV(ForestPair::identity(arity, 1))
    }

    pub fn pair(&self) -> &ForestPair {
        &self.0
    }

    pub fn num_tree(&self) -> Tree {
        self.0.num.tree(0)
    }

    pub fn den_tree(&self) -> Tree {
        self.0.den.tree(0)
    }

    pub fn perm(&self) -> &Perm {
        &self.0.perm
    }

    pub fn arity(&self) -> usize {
        self.0.arity()
    }

    pub fn leaves(&self) -> usize {
        self.0.leaf_count()
    }

    pub fn reduce(&self) -> FractionV {
        FractionV(self.0.reduce())
    }

    pub fn is_reduced(&self) -> bool {
        self.reduce().leaves() == self.leaves()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    pub fn expand(&self, f: &Forest) -> Result<FractionV> {
        Ok(FractionV(self.0.expand(f)?))
    }

    pub fn multiply(&self, other: &FractionV) -> Result<FractionV> {
        Ok(FractionV(ForestPair::multiply(&self.0, &other.0)?))
    }

    pub fn invert(&self) -> FractionV {
        FractionV(self.0.inverse())
    }

    pub fn equals(&self, other: &FractionV) -> bool {
        self.0.equals(&other.0)
    }

    pub fn classify(&self) -> ElementClass {
        let r = self.reduce();
        if r.perm().is_identity() {
            ElementClass::F
        } else if r.perm().rotation_amount().is_some() {
            ElementClass::T
        } else {
            ElementClass::V
        }
    }

    pub fn pl_map(&self) -> PLMap {
        self.0.pl_map()
    }

    /// Uniform trees and a class-appropriate permutation, resampled until
    /// the reduced form keeps all `n` leaves. Binary arity.
    pub fn random_reduced(n: usize, class: ElementClass, seed: u64) -> Result<FractionV> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::random_reduced_with(&mut rng, n, class)
    }

    pub fn random_reduced_with<R: Rng + ?Sized>(rng: &mut R, n: usize, class: ElementClass) -> Result<FractionV> {
        const ATTEMPTS: usize = 100_000;
        if n == 0 {
            return Err(Error::Domain("an element needs at least one leaf".into()));
        }
        if n == 1 {
            return Ok(FractionV::identity(2));
        }
        if n == 2 && class == ElementClass::F {
            return Err(Error::Domain("F has no reduced element with 2 leaves".into()));
        }
        for _ in 0..ATTEMPTS {
            let t = random_binary_shape(rng, n);
            let s = random_binary_shape(rng, n);
            let perm = random_perm(rng, n, class);
            let v = FractionV(ForestPair {
                num: Forest::new_unchecked(2, vec![t]),
                perm,
                den: Forest::new_unchecked(2, vec![s]),
            });
            let r = v.reduce();
            if r.leaves() == n {
                return Ok(r);
            }
        }
        Err(Error::Domain(format!("no reduced {class} element with {n} leaves found")))
    }
}

pub(crate) fn random_perm<R: Rng + ?Sized>(rng: &mut R, n: usize, class: ElementClass) -> Perm {
    match class {
        ElementClass::F => Perm::identity(n),
        ElementClass::T => Perm::rotation(n, rng.random_range(0..n)),
        ElementClass::V => {
            let mut images: Vec<usize> = (0..n).collect();
            images.shuffle(rng);
            Perm::from_images_unchecked(images)
        }
    }
}

fn catalan(n: usize) -> u128 {
    let mut c: u128 = 1;
    for i in 0..n as u128 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

/// A uniformly random binary tree with `n` leaves (`n ≤ 64`).
pub fn random_binary_shape<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Shape {
    assert!((1..=64).contains(&n), "uniform sampling supports 1..=64 leaves");
    if n == 1 {
        return Shape::Leaf;
    }
    let total = catalan(n - 1);
    let mut pick = rng.random_range(0..total);
    for left in 1..n {
        let w = catalan(left - 1) * catalan(n - left - 1);
        if pick < w {
            return Shape::node(vec![random_binary_shape(rng, left), random_binary_shape(rng, n - left)]);
        }
        pick -= w;
    }
    unreachable!("catalan weights sum to the total")
}

/// A random `k`-ary tree grown by splitting uniformly chosen leaves.
pub fn random_shape<R: Rng + ?Sized>(rng: &mut R, arity: usize, carets: usize) -> Shape {
    let mut s = Shape::Leaf;
    for c in 0..carets {
        let leaves = 1 + c * (arity - 1);
        s = s.split_leaf(rng.random_range(0..leaves), arity);
    }
    s
}

/// A random forest with `roots` trees and `carets` carets in total.
pub fn random_forest<R: Rng + ?Sized>(rng: &mut R, arity: usize, roots: usize, carets: usize) -> Forest {
    let mut f = Forest::trivial(arity, roots);
    for _ in 0..carets {
        let j = rng.random_range(0..f.leaf_count());
        f = f.split_leaf(j);
    }
    f
}

/// A random (not necessarily reduced) forest pair between objects `source`
/// and `target` with `leaves` leaves; `leaves ≡ source ≡ target (mod k−1)`.
pub fn random_forest_pair<R: Rng + ?Sized>(
    rng: &mut R,
    arity: usize,
    source: usize,
    target: usize,
    leaves: usize,
) -> Result<ForestPair> {
    let step = arity - 1;
    if leaves < source.max(target) || (leaves - source) % step != 0 || (leaves - target) % step != 0 {
        return Err(Error::Domain(format!(
            "{leaves} leaves are not reachable from objects {source} and {target} in arity {arity}"
        )));
    }
    let num = random_forest(rng, arity, target, (leaves - target) / step);
    let den = random_forest(rng, arity, source, (leaves - source) / step);
    let perm = random_perm(rng, leaves, ElementClass::V);
    ForestPair::new(num, perm, den)
}

impl fmt::Display for FractionV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for FractionV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for FractionV {
    type Err = Error;
    fn from_str(s: &str) -> Result<FractionV> {
        FractionV::from_pair(s.parse()?)
    }
}

/// A morphism of the groupoid of fractions of symmetric `k`-ary forests.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupoidMorphism(ForestPair);

impl GroupoidMorphism {
    /// `numerator / denominator` for two symmetric forests with equal leaf counts.
    pub fn new(numerator: &SymmetricForest, denominator: &SymmetricForest) -> Result<GroupoidMorphism> {
        let perm = denominator.perm.inverse().compose(&numerator.perm)?;
        Ok(GroupoidMorphism(ForestPair::new(numerator.forest.clone(), perm, denominator.forest.clone())?))
    }

    pub fn from_pair(p: ForestPair) -> GroupoidMorphism {
        GroupoidMorphism(p)
    }

    pub fn identity(arity: usize, r: usize) -> GroupoidMorphism {
        GroupoidMorphism(ForestPair::identity(arity, r))
    }

    pub fn pair(&self) -> &ForestPair {
        &self.0
    }

    pub fn source(&self) -> usize {
        self.0.source()
    }

    pub fn target(&self) -> usize {
        self.0.target()
    }

    pub fn reduce(&self) -> GroupoidMorphism {
        GroupoidMorphism(self.0.reduce())
    }

    /// `g ∘ h`; needs `source(g) = target(h)`.
    pub fn compose(g: &GroupoidMorphism, h: &GroupoidMorphism) -> Result<GroupoidMorphism> {
        Ok(GroupoidMorphism(ForestPair::multiply(&g.0, &h.0)?))
    }

    pub fn inverse(&self) -> GroupoidMorphism {
        GroupoidMorphism(self.0.inverse())
    }

    pub fn equals(&self, other: &GroupoidMorphism) -> bool {
        self.0.equals(&other.0)
    }

    pub fn pl_map(&self) -> PLMap {
        self.0.pl_map()
    }
}

impl fmt::Display for GroupoidMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// One affine piece `[dom_start, dom_start+dom_len) → [img_start, img_start+img_len)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Piece {
    pub dom_start: BigRational,
    pub dom_len: BigRational,
    pub img_start: BigRational,
    pub img_len: BigRational,
}

impl Piece {
    pub fn slope(&self) -> BigRational {
        &self.img_len / &self.dom_len
    }

    fn dom_end(&self) -> BigRational {
        &self.dom_start + &self.dom_len
    }

    fn img_end(&self) -> BigRational {
        &self.img_start + &self.img_len
    }

    fn apply(&self, q: &BigRational) -> BigRational {
        &self.img_start + (q - &self.dom_start) * self.slope()
    }
}

/// A right-continuous piecewise-linear bijection `[0, source) → [0, target)`
/// in canonical form: adjacent pieces are merged whenever they continue
/// each other affinely.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PLMap {
    source: usize,
    target: usize,
    pieces: Vec<Piece>,
}

impl PLMap {
    fn from_pieces(source: usize, target: usize, mut pieces: Vec<Piece>) -> PLMap {
        pieces.sort_by(|a, b| a.dom_start.cmp(&b.dom_start));
        let mut merged: Vec<Piece> = Vec::with_capacity(pieces.len());
        for p in pieces {
            if let Some(last) = merged.last_mut() {
                if last.dom_end() == p.dom_start && last.img_end() == p.img_start && last.slope() == p.slope() {
                    last.dom_len += &p.dom_len;
                    last.img_len += &p.img_len;
                    continue;
                }
            }
            merged.push(p);
        }
        PLMap { source, target, pieces: merged }
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    /// Domain breakpoints (piece starts) with their slopes.
    pub fn breakpoints(&self) -> Vec<(BigRational, BigRational)> {
        self.pieces.iter().map(|p| (p.dom_start.clone(), p.slope())).collect()
    }

    pub fn apply(&self, q: &BigRational) -> Result<BigRational> {
        if q < &BigRational::zero() || q >= &BigRational::from_integer(BigInt::from(self.source)) {
            return Err(Error::Domain(format!("{} is outside [0,{})", format_rational(q), self.source)));
        }
        let idx = self.pieces.partition_point(|p| &p.dom_start <= q) - 1;
        Ok(self.pieces[idx].apply(q))
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &PLMap) -> Result<PLMap> {
        if other.target != self.source {
            return Err(Error::ObjectMismatch { source_object: self.source, target_object: other.target });
        }
        let mut out = Vec::new();
        for p in &other.pieces {
            let slope = p.slope();
            let mut img_pos = p.img_start.clone();
            let img_end = p.img_end();
            while img_pos < img_end {
                let idx = self.pieces.partition_point(|a| a.dom_start <= img_pos) - 1;
                let a = &self.pieces[idx];
                let stop = std::cmp::min(a.dom_end(), img_end.clone());
                let dom_start = &p.dom_start + (&img_pos - &p.img_start) / &slope;
                let dom_len = (&stop - &img_pos) / &slope;
                out.push(Piece {
                    dom_start,
                    dom_len,
                    img_start: a.apply(&img_pos),
                    img_len: (&stop - &img_pos) * a.slope(),
                });
                img_pos = stop;
            }
        }
        Ok(PLMap::from_pieces(other.source, self.target, out))
    }

    pub fn inverse(&self) -> PLMap {
        let pieces = self
            .pieces
            .iter()
            .map(|p| Piece {
                dom_start: p.img_start.clone(),
                dom_len: p.img_len.clone(),
                img_start: p.dom_start.clone(),
                img_len: p.dom_len.clone(),
            })
            .collect();
        PLMap::from_pieces(self.target, self.source, pieces)
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target
            && self.pieces.len() == 1
            && self.pieces[0].dom_start.is_zero()
            && self.pieces[0].img_start.is_zero()
            && self.pieces[0].slope().is_one()
    }
}

impl fmt::Display for PLMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.pieces.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(
                f,
                "[{},{}) -> [{},{})",
                format_rational(&p.dom_start),
                format_rational(&p.dom_end()),
                format_rational(&p.img_start),
                format_rational(&p.img_end())
            )?;
        }
        Ok(())
    }
}

/// All `k`-adic rationals `m/k^d` in `[0, r)` with `d ≤ depth`.
pub fn kadic_grid(arity: usize, r: usize, depth: u32) -> Vec<BigRational> {
    let den = BigInt::from(arity).pow(depth);
    let total = BigInt::from(r) * &den;
    let mut out = Vec::new();
    let mut m = BigInt::zero();
    while m < total {
        out.push(BigRational::new(m.clone(), den.clone()));
        m += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> FractionV {
        s.parse().unwrap()
    }

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn reduce_examples() {
        let t = v("[1,2,3]*((..).)/((..).)");
        assert_eq!(t.reduce(), FractionV::identity(2));
        let a = v("[1,2,3]*((..).)/(.(..))");
        let big = a.expand(&"(..)..".parse().unwrap()).unwrap();
        assert_eq!(big.leaves(), 4);
        assert_eq!(big.reduce(), a);
        assert!(big.pl_map() == a.pl_map());
        let swap = v("[2,1]*(..)/(..)");
        assert_eq!(swap.reduce(), swap);
    }

    #[test]
    fn multiply_examples() {
        let a = v("[1,2,3]*((..).)/(.(..))");
        assert!(a.multiply(&a.invert()).unwrap().is_identity());
        assert_eq!(FractionV::identity(2).multiply(&a).unwrap(), a.reduce());
        let aa = a.multiply(&a).unwrap();
        let (m, ma) = (aa.pl_map(), a.pl_map());
        for x in kadic_grid(2, 1, 6) {
            assert_eq!(m.apply(&x).unwrap(), ma.apply(&ma.apply(&x).unwrap()).unwrap());
        }
    }

    #[test]
    fn invert_examples() {
        assert_eq!(FractionV::identity(2).invert(), FractionV::identity(2));
        assert_eq!(v("((..).)/(.(..))").invert(), v("(.(..))/((..).)"));
        let s = v("[2,1]*(..)/(..)");
        assert_eq!(s.invert().perm(), &s.perm().inverse());
    }

    #[test]
    fn classify_examples() {
        use ElementClass::*;
        assert_eq!(FractionV::identity(2).classify(), F);
        assert_eq!(v("[2,3,1]*((..).)/((..).)").classify(), T);
        assert_eq!(v("[2,1,3]*((..).)/((..).)").classify(), V);
    }

    #[test]
    fn pl_examples() {
        let id = FractionV::identity(2).pl_map();
        assert!(id.is_identity());
        assert_eq!(id.apply(&q(1, 2)).unwrap(), q(1, 2));
        let a = v("((..).)/(.(..))").pl_map();
        assert_eq!(a.apply(&q(1, 2)).unwrap(), q(1, 4));
        assert_eq!(a.apply(&q(3, 4)).unwrap(), q(1, 2));
        assert_eq!(a.apply(&q(0, 1)).unwrap(), q(0, 1));
        assert_eq!(a.pieces().len(), 3);
        let s = v("[2,1]*(..)/(..)").pl_map();
        assert_eq!(s.apply(&q(0, 1)).unwrap(), q(1, 2));
        assert!(s.apply(&q(1, 1)).is_err());
    }

    #[test]
    fn equals_examples() {
        let a = v("((..).)/(.(..))");
        assert!(a.equals(&a));
        assert!(a.equals(&a.expand(&"..(..)".parse().unwrap()).unwrap()));
        assert!(!a.equals(&a.invert()));
    }

    #[test]
    fn random_reduced_examples() {
        assert_eq!(FractionV::random_reduced(1, ElementClass::V, 3).unwrap(), FractionV::identity(2));
        let x = FractionV::random_reduced(7, ElementClass::V, 42).unwrap();
        assert_eq!(x, FractionV::random_reduced(7, ElementClass::V, 42).unwrap());
        assert_eq!(x.leaves(), 7);
        assert!(FractionV::random_reduced(2, ElementClass::F, 1).is_err());
        let t = FractionV::random_reduced(5, ElementClass::T, 9).unwrap();
        assert!(t.perm().rotation_amount().is_some());
    }

    #[test]
    fn groupoid_examples() {
        let g = GroupoidMorphism::from_pair("[3,1,2]*(..)./(.(..))".parse().unwrap());
        assert_eq!((g.source(), g.target()), (1, 2));
        let id2 = GroupoidMorphism::identity(2, 2);
        assert!(GroupoidMorphism::compose(&id2, &g).unwrap().equals(&g));
        let back = GroupoidMorphism::compose(&g, &g.inverse()).unwrap();
        assert!(back.equals(&id2));
        assert!(GroupoidMorphism::compose(&g, &g).is_err());
    }

    #[test]
    fn catalan_numbers() {
        assert_eq!((0..6).map(catalan).collect::<Vec<_>>(), vec![1, 1, 2, 5, 14, 42]);
    }
}
