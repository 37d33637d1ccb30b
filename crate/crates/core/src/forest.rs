//! Ordered rooted k-ary trees and forests, their composition and tensor
//! product, and permutation-decorated (symmetric) forests.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::literal::Cursor;
use crate::perm::Perm;

/// Recursive tree shape. Arity is carried by the owning [`Tree`] or [`Forest`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shape {
    Leaf,
    Node(Arc<[Shape]>),
}

impl Shape {
    pub fn caret(k: usize) -> Shape {
        Shape::Node(vec![Shape::Leaf; k].into())
    }

    pub fn node(children: Vec<Shape>) -> Shape {
        Shape::Node(children.into())
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Shape::Leaf)
    }

    pub fn children(&self) -> &[Shape] {
        match self {
            Shape::Leaf => &[],
            Shape::Node(c) => c,
        }
    }

    pub fn leaves(&self) -> usize {
        match self {
            Shape::Leaf => 1,
            Shape::Node(c) => c.iter().map(Shape::leaves).sum(),
        }
    }

    pub fn internal(&self) -> usize {
        match self {
            Shape::Leaf => 0,
            Shape::Node(c) => 1 + c.iter().map(Shape::internal).sum::<usize>(),
        }
    }

    /// Every node has exactly `k` children.
    pub fn has_arity(&self, k: usize) -> bool {
        match self {
            Shape::Leaf => true,
            Shape::Node(c) => c.len() == k && c.iter().all(|s| s.has_arity(k)),
        }
    }

    /// Inferred arity, `None` for a bare leaf.
    pub fn arity(&self) -> Option<usize> {
        match self {
            Shape::Leaf => None,
            Shape::Node(c) => Some(c.len()),
        }
    }

    /// Depth of every leaf, left to right.
    pub fn leaf_depths(&self) -> Vec<usize> {
        fn go(s: &Shape, d: usize, out: &mut Vec<usize>) {
            match s {
                Shape::Leaf => out.push(d),
                Shape::Node(c) => c.iter().for_each(|x| go(x, d + 1, out)),
            }
        }
        let mut out = Vec::new();
        go(self, 0, &mut out);
        out
    }

    /// Replaces leaves, left to right, by the given shapes.
    fn graft(&self, tops: &mut std::slice::Iter<'_, Shape>) -> Shape {
        match self {
            Shape::Leaf => tops.next().expect("graft: too few shapes").clone(),
            Shape::Node(c) => Shape::node(c.iter().map(|x| x.graft(tops)).collect()),
        }
    }

    /// Shape union: the smallest shape containing both.
    pub fn join(&self, other: &Shape) -> Shape {
        match (self, other) {
            (Shape::Leaf, x) | (x, Shape::Leaf) => x.clone(),
            (Shape::Node(a), Shape::Node(b)) => {
                Shape::node(a.iter().zip(b.iter()).map(|(x, y)| x.join(y)).collect())
            }
        }
    }

    /// For `self ⊆ upper`, the forest `f` (as shapes) with `f ∘ self = upper`.
    fn cover(&self, upper: &Shape, out: &mut Vec<Shape>) {
        match (self, upper) {
            (Shape::Leaf, u) => out.push(u.clone()),
            (Shape::Node(a), Shape::Node(b)) => {
                a.iter().zip(b.iter()).for_each(|(x, y)| x.cover(y, out))
            }
            (Shape::Node(_), Shape::Leaf) => unreachable!("cover: shape not contained"),
        }
    }

    /// Leaf index (0-based, relative) of every node whose children are all leaves.
    pub(crate) fn caret_starts(&self) -> Vec<usize> {
        fn go(s: &Shape, base: &mut usize, out: &mut Vec<usize>) {
            match s {
                Shape::Leaf => *base += 1,
                Shape::Node(c) => {
                    if c.iter().all(Shape::is_leaf) {
                        out.push(*base);
                        *base += c.len();
                    } else {
                        c.iter().for_each(|x| go(x, base, out));
                    }
                }
            }
        }
        let mut out = Vec::new();
        go(self, &mut 0, &mut out);
        out
    }

    /// Collapses the all-leaf caret starting at relative leaf `start` into a leaf.
    pub(crate) fn prune_caret(&self, start: usize) -> Shape {
        fn go(s: &Shape, base: &mut usize, start: usize) -> Shape {
            match s {
                Shape::Leaf => {
                    *base += 1;
                    Shape::Leaf
                }
                Shape::Node(c) => {
                    if *base == start && c.iter().all(Shape::is_leaf) {
                        *base += c.len();
                        Shape::Leaf
                    } else {
                        Shape::node(c.iter().map(|x| go(x, base, start)).collect())
                    }
                }
            }
        }
        go(self, &mut 0, start)
    }

    /// Splits leaf `j` (0-based) into a `k`-caret.
    pub(crate) fn split_leaf(&self, j: usize, k: usize) -> Shape {
        fn go(s: &Shape, base: &mut usize, j: usize, k: usize) -> Shape {
            match s {
                Shape::Leaf => {
                    let here = *base == j;
                    *base += 1;
                    if here {
                        Shape::caret(k)
                    } else {
                        Shape::Leaf
                    }
                }
                Shape::Node(c) => Shape::node(c.iter().map(|x| go(x, base, j, k)).collect()),
            }
        }
        go(self, &mut 0, j, k)
    }

    fn write(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Leaf => write!(f, "."),
            Shape::Node(c) => {
                write!(f, "(")?;
                for x in c.iter() {
                    x.write(f)?;
                }
                write!(f, ")")
            }
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f)
    }
}

impl fmt::Debug for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f)
    }
}

/// A finite ordered rooted tree of fixed arity `k ≥ 2`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tree {
    arity: usize,
    shape: Shape,
}

impl Tree {
    pub fn new(arity: usize, shape: Shape) -> Result<Tree> {
        if arity < 2 {
            return Err(Error::Domain(format!("arity must be at least 2, got {arity}")));
        }
        if !shape.has_arity(arity) {
            return Err(Error::ShapeMismatch(format!("{shape} is not {arity}-ary")));
        }
        Ok(Tree { arity, shape })
    }

    pub fn leaf(arity: usize) -> Tree {
        Tree { arity, shape: Shape::Leaf }
    }

    /// The single caret `Y_k`.
    pub fn caret(arity: usize) -> Tree {
        Tree { arity, shape: Shape::caret(arity) }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn leaves(&self) -> usize {
        self.shape.leaves()
    }

    pub fn internal(&self) -> usize {
        self.shape.internal()
    }

    /// Path from the root to leaf `j` (1-based).
    pub fn leaf_path(&self, j: usize) -> Result<LeafPath> {
        let n = self.leaves();
        if j == 0 || j > n {
            return Err(Error::IndexOutOfRange { index: j, len: n });
        }
        Ok(ForestLayout::new(&Forest::from_tree(self)).leaf_paths[j - 1].clone())
    }

    /// Minimal common upper bound `u` with forests `f`, `g` such that `f∘t = u = g∘s`.
    pub fn join(t: &Tree, s: &Tree) -> Result<(Tree, Forest, Forest)> {
        check_arity(t.arity, s.arity)?;
        let u = t.shape.join(&s.shape);
        let (mut f, mut g) = (Vec::new(), Vec::new());
        t.shape.cover(&u, &mut f);
        s.shape.cover(&u, &mut g);
        let k = t.arity;
        Ok((Tree { arity: k, shape: u }, Forest { arity: k, trees: f }, Forest { arity: k, trees: g }))
    }

    /// Every rooted subtree `z` of `t`, with its counts `n(z)`, `b(z)`, `m(z)`.
    pub fn rooted_subtrees(&self) -> Vec<RootedSubtree> {
        // (shape, leaves, leaves internal in t, vertex mask)
        fn go(s: &Shape, next: &mut usize) -> Vec<(Shape, usize, usize, u128)> {
            match s {
                Shape::Leaf => vec![(Shape::Leaf, 1, 0, 0)],
                Shape::Node(c) => {
                    let me = *next;
                    *next += 1;
                    let mut acc: Vec<(Vec<Shape>, usize, usize, u128)> = vec![(Vec::new(), 0, 0, 1u128.checked_shl(me as u32).unwrap_or(0))];
                    for child in c.iter() {
                        let options = go(child, next);
                        let mut out = Vec::with_capacity(acc.len() * options.len());
                        for (shapes, n, b, mask) in &acc {
                            for (o, on, ob, omask) in &options {
                                let mut sh = shapes.clone();
                                sh.push(o.clone());
                                out.push((sh, n + on, b + ob, mask | omask));
                            }
                        }
                        acc = out;
                    }
                    let mut res = vec![(Shape::Leaf, 1, 1, 0)];
                    res.extend(acc.into_iter().map(|(sh, n, b, m)| (Shape::node(sh), n, b, m)));
                    res
                }
            }
        }
        let total = self.leaves();
        go(&self.shape, &mut 0)
            .into_iter()
            .map(|(shape, n, b, vertices)| RootedSubtree {
                z: Tree { arity: self.arity, shape },
                n,
                b,
                m: total - n - b,
                vertices,
            })
            .collect()
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.shape.write(f)
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.shape.write(f)
    }
}

impl FromStr for Tree {
    type Err = Error;
    fn from_str(s: &str) -> Result<Tree> {
        let mut c = Cursor::new(s);
        let shape = c.shape()?;
        c.finish()?;
        let k = shape.arity().unwrap_or(2);
        Tree::new(k, shape)
    }
}

/// A rooted subtree `z` of `t`: `n(z)` leaves, `b(z)` of which are internal in `t`,
/// and `m(z) = n(t) − n(z) − b(z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedSubtree {
    pub z: Tree,
    pub n: usize,
    pub b: usize,
    pub m: usize,
    /// Internal vertices of `t` lying in `z`, as a bit mask over preorder indices
    /// (only the first 128 vertices are tracked).
    pub vertices: u128,
}

/// One edge of a root-to-leaf path: the internal vertex it leaves (preorder
/// index within the forest) and the child index taken.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PathEdge {
    pub vertex: usize,
    pub child: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LeafPath {
    pub edges: Vec<PathEdge>,
}

impl LeafPath {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// An ordered list of `k`-ary trees: a morphism from `rootCount` to `leafCount`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Forest {
    arity: usize,
    trees: Vec<Shape>,
}

pub(crate) fn check_arity(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::ArityMismatch { left: a, right: b });
    }
    Ok(())
}

impl Forest {
    pub fn new(arity: usize, trees: Vec<Shape>) -> Result<Forest> {
        if arity < 2 {
            return Err(Error::Domain(format!("arity must be at least 2, got {arity}")));
        }
        if trees.is_empty() {
            return Err(Error::ShapeMismatch("a forest needs at least one root".into()));
        }
        if let Some(bad) = trees.iter().find(|t| !t.has_arity(arity)) {
            return Err(Error::ShapeMismatch(format!("{bad} is not {arity}-ary")));
        }
        Ok(Forest { arity, trees })
    }

    pub(crate) fn new_unchecked(arity: usize, trees: Vec<Shape>) -> Forest {
        Forest { arity, trees }
    }

    pub fn trivial(arity: usize, n: usize) -> Forest {
        Forest { arity, trees: vec![Shape::Leaf; n] }
    }

    /// `f_{i,n}`: `n` roots, a caret on root `i` (1-based).
    pub fn elementary(arity: usize, i: usize, n: usize) -> Result<Forest> {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, len: n });
        }
        let mut trees = vec![Shape::Leaf; n];
        trees[i - 1] = Shape::caret(arity);
        Ok(Forest { arity, trees })
    }

    pub fn from_tree(t: &Tree) -> Forest {
        Forest { arity: t.arity, trees: vec![t.shape.clone()] }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn trees(&self) -> &[Shape] {
        &self.trees
    }

    pub fn tree(&self, i: usize) -> Tree {
        Tree { arity: self.arity, shape: self.trees[i].clone() }
    }

    pub fn root_count(&self) -> usize {
        self.trees.len()
    }

    pub fn leaf_count(&self) -> usize {
        self.trees.iter().map(Shape::leaves).sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.trees.iter().all(Shape::is_leaf)
    }

    /// `p ∘ q`: root `i` of `p` is attached to leaf `i` of `q`.
    pub fn compose(p: &Forest, q: &Forest) -> Result<Forest> {
        check_arity(p.arity, q.arity)?;
        if p.root_count() != q.leaf_count() {
            return Err(Error::ShapeMismatch(format!(
                "cannot stack {} roots on {} leaves",
                p.root_count(),
                q.leaf_count()
            )));
        }
        let mut tops = p.trees.iter();
        let trees = q.trees.iter().map(|s| s.graft(&mut tops)).collect();
        Ok(Forest { arity: p.arity, trees })
    }

    pub fn tensor(&self, other: &Forest) -> Result<Forest> {
        check_arity(self.arity, other.arity)?;
        let mut trees = self.trees.clone();
        trees.extend(other.trees.iter().cloned());
        Ok(Forest { arity: self.arity, trees })
    }

    /// Tree-wise join of two forests with the same number of roots.
    /// Returns `(u, f, g)` with `f∘self = u = g∘other`.
    pub fn join(&self, other: &Forest) -> Result<(Forest, Forest, Forest)> {
        check_arity(self.arity, other.arity)?;
        if self.root_count() != other.root_count() {
            return Err(Error::ShapeMismatch("joined forests need equal root counts".into()));
        }
        let u: Vec<Shape> = self.trees.iter().zip(&other.trees).map(|(a, b)| a.join(b)).collect();
        let (mut f, mut g) = (Vec::new(), Vec::new());
        for ((a, b), x) in self.trees.iter().zip(&other.trees).zip(&u) {
            a.cover(x, &mut f);
            b.cover(x, &mut g);
        }
        let k = self.arity;
        Ok((Forest { arity: k, trees: u }, Forest { arity: k, trees: f }, Forest { arity: k, trees: g }))
    }

    /// Leaf offsets of every tree.
    pub(crate) fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.trees.len() + 1);
        let mut acc = 0;
        off.push(0);
        for t in &self.trees {
            acc += t.leaves();
            off.push(acc);
        }
        off
    }

    /// Global leaf indices (0-based) of every all-leaf caret.
    pub(crate) fn caret_starts(&self) -> Vec<usize> {
        let off = self.offsets();
        self.trees
            .iter()
            .zip(&off)
            .flat_map(|(t, &o)| t.caret_starts().into_iter().map(move |s| s + o))
            .collect()
    }

    /// Root index and relative leaf index of global leaf `j`.
    fn locate(&self, j: usize) -> (usize, usize) {
        let mut acc = 0;
        for (i, t) in self.trees.iter().enumerate() {
            let l = t.leaves();
            if j < acc + l {
                return (i, j - acc);
            }
            acc += l;
        }
        panic!("leaf {j} out of range");
    }

    pub(crate) fn prune_caret(&self, start: usize) -> Forest {
        let (i, rel) = self.locate(start);
        let mut trees = self.trees.clone();
        trees[i] = trees[i].prune_caret(rel);
        Forest { arity: self.arity, trees }
    }

    pub(crate) fn split_leaf(&self, j: usize) -> Forest {
        let (i, rel) = self.locate(j);
        let mut trees = self.trees.clone();
        trees[i] = trees[i].split_leaf(rel, self.arity);
        Forest { arity: self.arity, trees }
    }

    /// `p ∘ τ = S(p,τ) ∘ τ(p)`; returns `τ(p)` as the forest and `S(p,τ)` as the perm.
    ///
    /// The `i`-th tree of `τ(p)` is the `τ(i)`-th tree of `p`.
    pub fn compose_perm(&self, tau: &Perm) -> Result<SymmetricForest> {
        if tau.degree() != self.root_count() {
            return Err(Error::DegreeMismatch { expected: self.root_count(), got: tau.degree() });
        }
        let off = self.offsets();
        let mut trees = Vec::with_capacity(self.trees.len());
        let mut images = Vec::with_capacity(self.leaf_count());
        for i in 0..tau.degree() {
            let src = tau.apply(i);
            trees.push(self.trees[src].clone());
            images.extend(off[src]..off[src + 1]);
        }
        Ok(SymmetricForest {
            forest: Forest { arity: self.arity, trees },
            perm: Perm::from_images_unchecked(images),
        })
    }

    /// Leaf intervals of the standard `k`-adic partition of `[0, r)`.
    pub fn leaf_intervals(&self) -> Vec<(num_rational::BigRational, num_rational::BigRational)> {
        use num_bigint::BigInt;
        use num_rational::BigRational;
        use num_traits::{One, Zero};
        fn go(s: &Shape, k: &BigInt, start: BigRational, len: BigRational, out: &mut Vec<(BigRational, BigRational)>) {
            match s {
                Shape::Leaf => out.push((start, len)),
                Shape::Node(c) => {
                    let step = &len / k;
                    let mut pos = start;
                    for x in c.iter() {
                        go(x, k, pos.clone(), step.clone(), out);
                        pos += &step;
                    }
                }
            }
        }
        let k = BigInt::from(self.arity);
        let mut out = Vec::new();
        let mut root = BigRational::zero();
        for t in &self.trees {
            go(t, &k, root.clone(), BigRational::one(), &mut out);
            root += BigRational::one();
        }
        out
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.trees {
            t.write(f)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Forest {
    type Err = Error;
    fn from_str(s: &str) -> Result<Forest> {
        let mut c = Cursor::new(s);
        let trees = c.forest_shapes()?;
        c.finish()?;
        let k = trees.iter().find_map(Shape::arity).unwrap_or(2);
        Forest::new(k, trees)
    }
}

/// `perm ∘ forest`: the forest followed by a permutation of its leaves.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SymmetricForest {
    pub forest: Forest,
    pub perm: Perm,
}

impl SymmetricForest {
    pub fn new(forest: Forest, perm: Perm) -> Result<Self> {
        if perm.degree() != forest.leaf_count() {
            return Err(Error::DegreeMismatch { expected: forest.leaf_count(), got: perm.degree() });
        }
        Ok(SymmetricForest { forest, perm })
    }

    pub fn plain(forest: Forest) -> Self {
        let n = forest.leaf_count();
        SymmetricForest { forest, perm: Perm::identity(n) }
    }

    /// Horizontal concatenation; `b`'s indices are shifted past `a`.
    pub fn tensor(a: &SymmetricForest, b: &SymmetricForest) -> Result<SymmetricForest> {
        Ok(SymmetricForest { forest: a.forest.tensor(&b.forest)?, perm: a.perm.tensor(&b.perm) })
    }

    /// `a ∘ b`, pushing `a`'s forest through `b`'s permutation.
    pub fn compose(a: &SymmetricForest, b: &SymmetricForest) -> Result<SymmetricForest> {
        // σa∘pa∘σb∘pb = σa∘S(pa,σb)∘σb(pa)∘pb
        let pushed = a.forest.compose_perm(&b.perm)?;
        Ok(SymmetricForest {
            forest: Forest::compose(&pushed.forest, &b.forest)?,
            perm: a.perm.compose(&pushed.perm)?,
        })
    }

    /// Leaf `j` of the forest ends at position `leaf_map()[j]`.
    pub fn leaf_map(&self) -> Vec<usize> {
        self.perm.images().to_vec()
    }
}

/// Preorder indexing of a forest's internal vertices and leaf paths.
///
/// Vertices are numbered tree by tree, each tree in preorder (node before its
/// children, children left to right).
#[derive(Clone, Debug)]
pub struct ForestLayout {
    pub arity: usize,
    pub vertex_count: usize,
    pub leaf_paths: Vec<LeafPath>,
    /// Parent vertex and child index of every vertex; `None` for roots.
    pub parent: Vec<Option<(usize, usize)>>,
    /// Interleaved preorder of vertices and leaves.
    pub events: Vec<LayoutEvent>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LayoutEvent {
    Vertex(usize),
    Leaf(usize),
}

impl ForestLayout {
    pub fn new(f: &Forest) -> ForestLayout {
        struct B {
            next_vertex: usize,
            leaf_paths: Vec<LeafPath>,
            parent: Vec<Option<(usize, usize)>>,
            events: Vec<LayoutEvent>,
        }
        fn go(s: &Shape, path: &mut Vec<PathEdge>, up: Option<(usize, usize)>, b: &mut B) {
            match s {
                Shape::Leaf => {
                    b.events.push(LayoutEvent::Leaf(b.leaf_paths.len()));
                    b.leaf_paths.push(LeafPath { edges: path.clone() });
                }
                Shape::Node(c) => {
                    let v = b.next_vertex;
                    b.next_vertex += 1;
                    b.parent.push(up);
                    b.events.push(LayoutEvent::Vertex(v));
                    for (i, x) in c.iter().enumerate() {
                        path.push(PathEdge { vertex: v, child: i });
                        go(x, path, Some((v, i)), b);
                        path.pop();
                    }
                }
            }
        }
        let mut b = B { next_vertex: 0, leaf_paths: Vec::new(), parent: Vec::new(), events: Vec::new() };
        for t in &f.trees {
            go(t, &mut Vec::new(), None, &mut b);
        }
        ForestLayout {
            arity: f.arity,
            vertex_count: b.next_vertex,
            leaf_paths: b.leaf_paths,
            parent: b.parent,
            events: b.events,
        }
    }

    pub fn leaf_count(&self) -> usize {
        self.leaf_paths.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Tree {
        s.parse().unwrap()
    }

    #[test]
    fn stacking_elementary_forests() {
        let f11 = Forest::elementary(2, 1, 1).unwrap();
        let f12 = Forest::elementary(2, 1, 2).unwrap();
        let f22 = Forest::elementary(2, 2, 2).unwrap();
        assert_eq!(Forest::compose(&f12, &f11).unwrap().to_string(), "((..).)");
        assert_eq!(Forest::compose(&f22, &f11).unwrap().to_string(), "(.(..))");
        let q: Forest = "((..).)(..)".parse().unwrap();
        assert_eq!(Forest::compose(&Forest::trivial(2, 5), &q).unwrap(), q);
        assert!(Forest::compose(&f12, &f12).is_err());
    }

    #[test]
    fn tensor_examples() {
        let i = SymmetricForest::plain(Forest::trivial(2, 1));
        let y = SymmetricForest::plain(Forest::from_tree(&Tree::caret(2)));
        assert_eq!(SymmetricForest::tensor(&i, &i).unwrap().forest, Forest::trivial(2, 2));
        assert_eq!(SymmetricForest::tensor(&y, &i).unwrap().forest, Forest::elementary(2, 1, 2).unwrap());
        let ys = SymmetricForest::new(y.forest.clone(), "[2,1]".parse().unwrap()).unwrap();
        let r = SymmetricForest::tensor(&ys, &i).unwrap();
        assert_eq!(r.perm.one_line(), vec![2, 1, 3]);
        let three = Forest::from_tree(&Tree::caret(3));
        assert!(SymmetricForest::tensor(&y, &SymmetricForest::plain(three)).is_err());
    }

    #[test]
    fn compose_perm_examples() {
        let p: Forest = "(..).".parse().unwrap();
        let r = p.compose_perm(&Perm::identity(2)).unwrap();
        assert_eq!((r.forest, r.perm.is_identity()), (p.clone(), true));
        let r = p.compose_perm(&"[2,1]".parse().unwrap()).unwrap();
        assert_eq!(r.forest.to_string(), ".(..)");
        assert_eq!(r.perm.one_line(), vec![3, 1, 2]);
        let triv = Forest::trivial(2, 3);
        let tau: Perm = "[2,3,1]".parse().unwrap();
        let r = triv.compose_perm(&tau).unwrap();
        assert_eq!((r.forest, r.perm), (triv, tau));
    }

    #[test]
    fn leaf_path_examples() {
        assert!(Tree::leaf(2).leaf_path(1).unwrap().is_empty());
        let x = t("((..).)");
        let kinds = |j| x.leaf_path(j).unwrap().edges.iter().map(|e| e.child).collect::<Vec<_>>();
        assert_eq!(kinds(2), vec![0, 1]);
        assert_eq!(kinds(3), vec![1]);
        assert!(x.leaf_path(4).is_err());
    }

    #[test]
    fn join_examples() {
        let x = t("((..).)");
        let (u, f, g) = Tree::join(&x, &x).unwrap();
        assert_eq!(u, x);
        assert!(f.is_trivial() && g.is_trivial());
        let (u, f, g) = Tree::join(&Tree::caret(2), &Tree::leaf(2)).unwrap();
        assert_eq!(u, Tree::caret(2));
        assert_eq!(f, Forest::trivial(2, 2));
        assert_eq!(g, Forest::from_tree(&Tree::caret(2)));
        let (u, f, g) = Tree::join(&x, &t("(.(..))")).unwrap();
        assert_eq!(u.to_string(), "((..)(..))");
        assert_eq!(f.to_string(), "..(..)");
        assert_eq!(g.to_string(), "(..)..");
        assert_eq!(Forest::compose(&f, &Forest::from_tree(&x)).unwrap(), Forest::from_tree(&u));
    }

    #[test]
    fn rooted_subtree_examples() {
        let leaf = Tree::leaf(2).rooted_subtrees();
        assert_eq!(leaf.len(), 1);
        assert_eq!((leaf[0].n, leaf[0].b, leaf[0].m), (1, 0, 0));
        let y = Tree::caret(2).rooted_subtrees();
        let mut counts: Vec<_> = y.iter().map(|z| (z.z.to_string(), z.n, z.b, z.m)).collect();
        counts.sort();
        assert_eq!(counts, vec![("(..)".into(), 2, 0, 0), (".".into(), 1, 1, 0)]);
        let five = t("(((..)(..)).)");
        let z = five.rooted_subtrees().into_iter().find(|z| z.z == Tree::caret(2)).unwrap();
        assert_eq!((z.n, z.b, z.m), (2, 1, 2));
    }

    #[test]
    fn mixed_arity_is_rejected() {
        assert!("((..).(...))".parse::<Tree>().is_err());
        assert!(Tree::new(3, Shape::caret(2)).is_err());
    }
}
