//! Forests with Γ-labelled leaves, labelled fractions, and the normal form
//! `(map, v)` of elements of `⊕_{Q_k} Γ ⋊ V`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::forest::{Forest, Shape, SymmetricForest, Tree};
use crate::fraction::{ForestPair, FractionV};
use crate::group::Group;
use crate::literal::{self, format_rational, parse_rational, Cursor};
use crate::perm::Perm;

type EndoFn<E> = Arc<dyn Fn(&E) -> E + Send + Sync>;

/// An injective endomorphism `θ` of Γ, optionally with its inverse.
#[derive(Clone)]
pub struct Theta<E> {
    apply: Option<EndoFn<E>>,
    inverse: Option<EndoFn<E>>,
}

impl<E: Clone> Theta<E> {
    pub fn identity() -> Theta<E> {
        Theta { apply: None, inverse: None }
    }

    pub fn new(apply: EndoFn<E>, inverse: Option<EndoFn<E>>) -> Theta<E> {
        Theta { apply: Some(apply), inverse }
    }

    pub fn is_identity(&self) -> bool {
        self.apply.is_none()
    }

    pub fn has_inverse(&self) -> bool {
        self.apply.is_none() || self.inverse.is_some()
    }

    pub fn apply(&self, g: &E) -> E {
        self.apply.as_ref().map_or_else(|| g.clone(), |f| f(g))
    }

    pub fn power(&self, g: &E, d: usize) -> E {
        (0..d).fold(g.clone(), |x, _| self.apply(&x))
    }
}

/// `labels ∘ perm ∘ forest`: one label per leaf position, applied last.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledMorphism<E> {
    pub forest: Forest,
    pub perm: Perm,
    pub labels: Vec<E>,
}

impl<E: Clone + Eq> LabeledMorphism<E> {
    pub fn new(forest: Forest, perm: Perm, labels: Vec<E>) -> Result<Self> {
        let n = forest.leaf_count();
        if perm.degree() != n {
            return Err(Error::DegreeMismatch { expected: n, got: perm.degree() });
        }
        if labels.len() != n {
            return Err(Error::ShapeMismatch(format!("{} labels for {n} leaves", labels.len())));
        }
        Ok(LabeledMorphism { forest, perm, labels })
    }

    pub fn plain<G: Group<Elem = E>>(sf: &SymmetricForest, group: &G) -> Self {
        let n = sf.forest.leaf_count();
        LabeledMorphism { forest: sf.forest.clone(), perm: sf.perm.clone(), labels: vec![group.identity(); n] }
    }

    pub fn source(&self) -> usize {
        self.forest.root_count()
    }

    pub fn target(&self) -> usize {
        self.forest.leaf_count()
    }

    pub fn symmetric_part(&self) -> SymmetricForest {
        SymmetricForest { forest: self.forest.clone(), perm: self.perm.clone() }
    }
}

/// `Ξ(f)(g)`: a label entering a tree moves to its leftmost leaf, twisted by
/// `θ` once per caret passed; every other leaf gets the identity.
pub fn push_labels<G: Group>(f: &Forest, labels: &[G::Elem], group: &G, theta: &Theta<G::Elem>) -> Vec<G::Elem> {
    let mut out = Vec::with_capacity(f.leaf_count());
    for (tree, g) in f.trees().iter().zip(labels) {
        let mut depth = 0;
        let mut s = tree;
        while let Shape::Node(c) = s {
            depth += 1;
            s = &c[0];
        }
        out.push(theta.power(g, depth));
        out.extend(std::iter::repeat_n(group.identity(), tree.leaves() - 1));
    }
    out
}

/// Labels after a permutation: `σ ∘ (g_1..g_n) = (g_{σ⁻¹(1)}..g_{σ⁻¹(n)}) ∘ σ`.
pub fn permute_labels<E: Clone>(sigma: &Perm, labels: &[E]) -> Vec<E> {
    let inv = sigma.inverse();
    (0..labels.len()).map(|i| labels[inv.apply(i)].clone()).collect()
}

/// `a ∘ b` in the labelled category.
pub fn compose_labeled<G: Group>(
    a: &LabeledMorphism<G::Elem>,
    b: &LabeledMorphism<G::Elem>,
    group: &G,
    theta: &Theta<G::Elem>,
) -> Result<LabeledMorphism<G::Elem>> {
    if a.source() != b.target() {
        return Err(Error::ObjectMismatch { source_object: a.source(), target_object: b.target() });
    }
    let pushed = push_labels(&a.forest, &b.labels, group, theta);
    let moved = permute_labels(&a.perm, &pushed);
    let labels = a.labels.iter().zip(&moved).map(|(x, y)| group.op(x, y)).collect();
    let sf = SymmetricForest::compose(&a.symmetric_part(), &b.symmetric_part())?;
    Ok(LabeledMorphism { forest: sf.forest, perm: sf.perm, labels })
}

/// Applies `θ^{d_j}` to the label of leaf `j`, `d_j` its depth in `t`.
pub fn twist_by_theta<E: Clone>(labels: &[E], t: &Tree, theta: &Theta<E>) -> Result<Vec<E>> {
    if !theta.has_inverse() {
        return Err(Error::Unsupported("twisting needs θ with a declared inverse".into()));
    }
    let depths = t.shape().leaf_depths();
    if depths.len() != labels.len() {
        return Err(Error::ShapeMismatch(format!("{} labels for {} leaves", labels.len(), depths.len())));
    }
    Ok(labels.iter().zip(depths).map(|(g, d)| theta.power(g, d)).collect())
}

/// `(perm ∘ labels ∘ num) / den`: label `j` decorates numerator leaf `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledPair<E> {
    num: Forest,
    labels: Vec<E>,
    perm: Perm,
    den: Forest,
}

impl<E: Clone + Eq> LabeledPair<E> {
    pub fn new(num: Forest, labels: Vec<E>, perm: Perm, den: Forest) -> Result<Self> {
        let pair = ForestPair::new(num, perm, den)?;
        if labels.len() != pair.leaf_count() {
            return Err(Error::ShapeMismatch(format!("{} labels for {} leaves", labels.len(), pair.leaf_count())));
        }
        Ok(LabeledPair { num: pair.num().clone(), labels, perm: pair.perm().clone(), den: pair.den().clone() })
    }

    /// `(labels ∘ t) / (σ ∘ s)`.
    pub fn from_spec_form(labels: Vec<E>, t: &Tree, sigma: &Perm, s: &Tree) -> Result<Self> {
        Self::new(Forest::from_tree(t), labels, sigma.inverse(), Forest::from_tree(s))
    }

    pub fn unlabeled<G: Group<Elem = E>>(p: &ForestPair, group: &G) -> Self {
        LabeledPair {
            num: p.num().clone(),
            labels: vec![group.identity(); p.leaf_count()],
            perm: p.perm().clone(),
            den: p.den().clone(),
        }
    }

    /// The pure group element `x` on a single root.
    pub fn pure(x: E, arity: usize) -> Self {
        LabeledPair { num: Forest::trivial(arity, 1), labels: vec![x], perm: Perm::identity(1), den: Forest::trivial(arity, 1) }
    }

    pub fn num(&self) -> &Forest {
        &self.num
    }

    pub fn den(&self) -> &Forest {
        &self.den
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    pub fn labels(&self) -> &[E] {
        &self.labels
    }

    pub fn leaf_count(&self) -> usize {
        self.labels.len()
    }

    pub fn source(&self) -> usize {
        self.den.root_count()
    }

    pub fn target(&self) -> usize {
        self.num.root_count()
    }

    /// The underlying unlabelled pair.
    pub fn shape_pair(&self) -> ForestPair {
        ForestPair::new(self.num.clone(), self.perm.clone(), self.den.clone()).expect("validated")
    }

    /// Left-multiplies both sides by `f` (θ = id).
    pub fn expand<G: Group<Elem = E>>(&self, f: &Forest, group: &G) -> Result<Self> {
        let pushed = f.compose_perm(&self.perm)?;
        let labels = push_labels(&pushed.forest, &self.labels, group, &Theta::identity());
        Ok(LabeledPair {
            num: Forest::compose(&pushed.forest, &self.num)?,
            labels,
            perm: pushed.perm,
            den: Forest::compose(f, &self.den)?,
        })
    }

    /// Product by Ore witnesses (θ = id). The result is not reduced.
    pub fn multiply<G: Group<Elem = E>>(u: &Self, v: &Self, group: &G) -> Result<Self> {
        if u.source() != v.target() {
            return Err(Error::ObjectMismatch { source_object: u.source(), target_object: v.target() });
        }
        let id = Theta::identity();
        // A∘s_u = B∘t_v; numerator A π_u g_u t_u, denominator B g_v⁻¹ π_v⁻¹ s_v.
        let (_, a, b) = u.den.join(&v.num)?;
        let left = a.compose_perm(&u.perm)?;
        let h1 = push_labels(&left.forest, &u.labels, group, &id);
        let t1 = Forest::compose(&left.forest, &u.num)?;
        let inv_labels: Vec<E> = v.labels.iter().map(|g| group.inverse(g)).collect();
        let h2 = push_labels(&b, &inv_labels, group, &id);
        let right = b.compose_perm(&v.perm.inverse())?;
        let t2 = Forest::compose(&right.forest, &v.den)?;
        // (P1 h1 T1) / (h2 P2 T2)  =  (P2⁻¹ P1 ∘ h) T1 / T2,  h_j = h2_{P1(j)}⁻¹ · h1_j
        let p1 = &left.perm;
        let labels = (0..h1.len()).map(|j| group.op(&group.inverse(&h2[p1.apply(j)]), &h1[j])).collect();
        let perm = right.perm.inverse().compose(p1)?;
        Ok(LabeledPair { num: t1, labels, perm, den: t2 })
    }

    /// Normal form `(map, v)`; requires single roots.
    pub fn to_wreath<G: Group<Elem = E>>(&self, group: &G) -> Result<WreathElement<E>> {
        let vpart = FractionV::from_pair(self.shape_pair())?.reduce();
        let mut map = BTreeMap::new();
        for ((start, _), g) in self.num.leaf_intervals().into_iter().zip(&self.labels) {
            if !group.is_identity(g) {
                map.insert(start, g.clone());
            }
        }
        Ok(WreathElement { vpart, map })
    }

    /// `perm*labelled-forest/forest`, labels as `{g}` after leaves.
    pub fn parse<G: Group<Elem = E>>(s: &str, group: &G) -> Result<Self> {
        let mut c = Cursor::new(s);
        let raw = literal::raw_element(&mut c)?;
        c.finish()?;
        let (num, den) = literal::element_forests(&raw)?;
        let labels = raw
            .labels
            .iter()
            .map(|l| l.as_deref().map_or_else(|| Ok(group.identity()), |t| group.parse(t)))
            .collect::<Result<Vec<_>>>()?;
        let perm = raw.perm.unwrap_or_else(|| Perm::identity(num.leaf_count()));
        Self::new(num, labels, perm, den)
    }

    pub fn format<G: Group<Elem = E>>(&self, group: &G) -> String {
        fn go<G: Group>(s: &Shape, labels: &mut std::slice::Iter<'_, G::Elem>, group: &G, out: &mut String) {
            match s {
                Shape::Leaf => {
                    out.push('.');
                    let g = labels.next().expect("one label per leaf");
                    if !group.is_identity(g) {
                        out.push('{');
                        out.push_str(&group.format(g));
                        out.push('}');
                    }
                }
                Shape::Node(c) => {
                    out.push('(');
                    c.iter().for_each(|x| go(x, labels, group, out));
                    out.push(')');
                }
            }
        }
        let mut out = format!("{}*", self.perm);
        let mut it = self.labels.iter();
        for t in self.num.trees() {
            go(t, &mut it, group, &mut out);
        }
        out.push('/');
        out.push_str(&self.den.to_string());
        out
    }
}

/// An element `m·v` of `⊕_{Q_k} Γ ⋊ V`: a finitely supported map on the
/// `k`-adic rationals of `[0,1)` and a reduced element of `V`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WreathElement<E> {
    vpart: FractionV,
    map: BTreeMap<BigRational, E>,
}

fn is_kadic(q: &BigRational, k: usize) -> bool {
    let mut d = q.denom().clone();
    let kk = BigInt::from(k);
    while !d.is_one() {
        // strip every prime factor of k
        let g = num_integer::Integer::gcd(&d, &kk);
        if g.is_one() {
            return false;
        }
        d /= g;
    }
    true
}

impl<E: Clone + Eq> WreathElement<E> {
    pub fn identity(arity: usize) -> Self {
        WreathElement { vpart: FractionV::identity(arity), map: BTreeMap::new() }
    }

    pub fn new<G: Group<Elem = E>>(map: BTreeMap<BigRational, E>, vpart: FractionV, group: &G) -> Result<Self> {
        let k = vpart.arity();
        for q in map.keys() {
            if q < &BigRational::zero() || q >= &BigRational::one() || !is_kadic(q, k) {
                return Err(Error::Domain(format!("{} is not a {k}-adic point of [0,1)", format_rational(q))));
            }
        }
        let map = map.into_iter().filter(|(_, g)| !group.is_identity(g)).collect();
        Ok(WreathElement { vpart: vpart.reduce(), map })
    }

    pub fn vpart(&self) -> &FractionV {
        &self.vpart
    }

    pub fn map(&self) -> &BTreeMap<BigRational, E> {
        &self.map
    }

    /// Same `vpart`, every map value inverted.
    pub fn pointwise_inverse<G: Group<Elem = E>>(&self, group: &G) -> Self {
        WreathElement { vpart: self.vpart.clone(), map: self.map.iter().map(|(d, g)| (d.clone(), group.inverse(g))).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_empty() && self.vpart.is_identity()
    }

    /// `(v·m)(d) = m(v⁻¹ d)`.
    pub fn shift<G: Group<Elem = E>>(v: &FractionV, map: &BTreeMap<BigRational, E>, _group: &G) -> BTreeMap<BigRational, E> {
        let pl = v.pl_map();
        map.iter().map(|(d, g)| (pl.apply(d).expect("support lies in [0,1)"), g.clone())).collect()
    }

    /// `(m_u, v_u)(m_w, v_w) = (m_u · (v_u·m_w), v_u v_w)`.
    pub fn multiply<G: Group<Elem = E>>(u: &Self, w: &Self, group: &G) -> Result<Self> {
        let shifted = Self::shift(&u.vpart, &w.map, group);
        let mut map = u.map.clone();
        for (d, g) in shifted {
            let value = match map.get(&d) {
                Some(h) => group.op(h, &g),
                None => g,
            };
            if group.is_identity(&value) {
                map.remove(&d);
            } else {
                map.insert(d, value);
            }
        }
        Ok(WreathElement { vpart: u.vpart.multiply(&w.vpart)?, map })
    }

    /// `(m, v)⁻¹ = (v⁻¹·m⁻¹, v⁻¹)`.
    pub fn invert<G: Group<Elem = E>>(&self, group: &G) -> Self {
        let vinv = self.vpart.invert().reduce();
        let inv: BTreeMap<BigRational, E> = self.map.iter().map(|(d, g)| (d.clone(), group.inverse(g))).collect();
        WreathElement { map: Self::shift(&vinv, &inv, group), vpart: vinv }
    }

    /// A labelled fraction for this element, on the smallest refinement of
    /// the numerator tree that has every support point as a left endpoint.
    pub fn to_labeled_pair<G: Group<Elem = E>>(&self, group: &G) -> LabeledPair<E> {
        let k = self.vpart.arity();
        let mut pair = self.vpart.pair().clone();
        loop {
            let intervals = pair.num().leaf_intervals();
            let split = self.map.keys().find_map(|d| {
                let j = intervals.partition_point(|(s, _)| s <= d) - 1;
                (&intervals[j].0 != d).then_some(j)
            });
            match split {
                Some(j) => {
                    let pos = pair.perm().apply(j);
                    let f = Forest::elementary(k, pos + 1, pair.leaf_count()).expect("position in range");
                    pair = pair.expand(&f).expect("compatible caret");
                }
                None => break,
            }
        }
        let labels = pair
            .num()
            .leaf_intervals()
            .into_iter()
            .map(|(s, _)| self.map.get(&s).cloned().unwrap_or_else(|| group.identity()))
            .collect();
        LabeledPair { num: pair.num().clone(), labels, perm: pair.perm().clone(), den: pair.den().clone() }
    }

    /// `{d:g,...}|perm*t/s`.
    pub fn format<G: Group<Elem = E>>(&self, group: &G) -> String {
        let entries: Vec<String> =
            self.map.iter().map(|(d, g)| format!("{}:{}", format_rational(d), group.format(g))).collect();
        format!("{{{}}}|{}", entries.join(","), self.vpart)
    }

    pub fn parse<G: Group<Elem = E>>(s: &str, group: &G) -> Result<Self> {
        let mut c = Cursor::new(s);
        c.expect('{')?;
        let mut map = BTreeMap::new();
        if !c.eat('}') {
            loop {
                let key = c.raw_until(&[':'])?;
                let q = parse_rational(&key).map_err(|_| c.error(format!("bad support point {key:?}")))?;
                c.expect(':')?;
                let val = c.raw_until(&[',', '}'])?;
                let g = group.parse(&val)?;
                if map.insert(q, g).is_some() {
                    return Err(c.error(format!("support point {key} repeated")));
                }
                if c.eat('}') {
                    break;
                }
                c.expect(',')?;
            }
        }
        c.expect('|')?;
        let vpart: FractionV = c.rest().parse()?;
        Self::new(map, vpart, group)
    }

    pub fn to_json<G: Group<Elem = E>>(&self, group: &G) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .map
            .iter()
            .map(|(d, g)| (format_rational(d), serde_json::Value::String(group.format(g))))
            .collect();
        serde_json::json!({ "map": map, "vpart": self.vpart.to_string() })
    }

    pub fn from_json<G: Group<Elem = E>>(v: &serde_json::Value, group: &G) -> Result<Self> {
        let bad = |m: &str| Error::parse(0, m.to_string());
        let vpart: FractionV = v.get("vpart").and_then(|x| x.as_str()).ok_or_else(|| bad("missing vpart"))?.parse()?;
        let mut map = BTreeMap::new();
        if let Some(m) = v.get("map") {
            let m = m.as_object().ok_or_else(|| bad("map must be an object"))?;
            for (k, g) in m {
                let g = g.as_str().ok_or_else(|| bad("map values must be strings"))?;
                map.insert(parse_rational(k)?, group.parse(g)?);
            }
        }
        Self::new(map, vpart, group)
    }
}

/// `(labels ∘ t) / (σ ∘ s)` to normal form.
pub fn wreath_from_fraction<G: Group>(
    num: &LabeledMorphism<G::Elem>,
    den: &SymmetricForest,
    group: &G,
) -> Result<WreathElement<G::Elem>> {
    if !num.perm.is_identity() || num.forest.root_count() != 1 || den.forest.root_count() != 1 {
        return Err(Error::ShapeMismatch("expected labels over a tree, over a symmetric tree".into()));
    }
    let pair = LabeledPair::new(num.forest.clone(), num.labels.clone(), den.perm.inverse(), den.forest.clone())?;
    pair.to_wreath(group)
}

/// Inverse of [`wreath_from_fraction`]: labels over a tree, and `σ ∘ s`.
pub fn fraction_from_wreath<G: Group>(
    w: &WreathElement<G::Elem>,
    group: &G,
) -> (LabeledMorphism<G::Elem>, SymmetricForest) {
    let p = w.to_labeled_pair(group);
    let n = p.leaf_count();
    (
        LabeledMorphism { forest: p.num.clone(), perm: Perm::identity(n), labels: p.labels.clone() },
        SymmetricForest { forest: p.den.clone(), perm: p.perm.inverse() },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Builtin, GroupElem};

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    fn z(n: i64) -> GroupElem {
        GroupElem::Int(n)
    }

    #[test]
    fn compose_examples() {
        let g = Builtin::Integers;
        let id = Theta::identity();
        let y = LabeledMorphism::new(Forest::from_tree(&Tree::caret(2)), Perm::identity(2), vec![z(0), z(0)]).unwrap();
        let x = LabeledMorphism::new(Forest::trivial(2, 1), Perm::identity(1), vec![z(5)]).unwrap();
        let r = compose_labeled(&y, &x, &g, &id).unwrap();
        assert_eq!(r.labels, vec![z(5), z(0)]);
        assert_eq!(r.forest, y.forest);
        let sigma = LabeledMorphism::new(Forest::trivial(2, 2), "[2,1]".parse().unwrap(), vec![z(0), z(0)]).unwrap();
        let xy = LabeledMorphism::new(Forest::trivial(2, 2), Perm::identity(2), vec![z(1), z(2)]).unwrap();
        let r = compose_labeled(&sigma, &xy, &g, &id).unwrap();
        assert_eq!(r.labels, vec![z(2), z(1)]);
        assert_eq!(r.perm.one_line(), vec![2, 1]);
        let neg = Theta::new(Arc::new(|g: &GroupElem| match g {
            GroupElem::Int(n) => GroupElem::Int(-n),
            other => other.clone(),
        }), None);
        let r = compose_labeled(&y, &x, &g, &neg).unwrap();
        assert_eq!(r.labels, vec![z(-5), z(0)]);
    }

    #[test]
    fn twist_examples() {
        let t: Tree = "((..).)".parse().unwrap();
        let labels = vec![z(1), z(2), z(3)];
        assert_eq!(twist_by_theta(&labels, &t, &Theta::identity()).unwrap(), labels);
        assert_eq!(twist_by_theta(&[z(4)], &Tree::leaf(2), &Theta::identity()).unwrap(), vec![z(4)]);
        let neg: EndoFn<GroupElem> = Arc::new(|g: &GroupElem| match g {
            GroupElem::Int(n) => GroupElem::Int(-n),
            other => other.clone(),
        });
        let theta = Theta::new(neg.clone(), Some(neg.clone()));
        assert_eq!(twist_by_theta(&labels, &t, &theta).unwrap(), vec![z(1), z(2), z(-3)]);
        assert!(twist_by_theta(&labels, &t, &Theta::new(neg, None)).is_err());
    }

    #[test]
    fn wreath_from_fraction_examples() {
        let g = Builtin::Integers;
        let y = Tree::caret(2);
        let den = SymmetricForest::plain(Forest::from_tree(&y));
        let num = |a, b| LabeledMorphism::new(Forest::from_tree(&y), Perm::identity(2), vec![z(a), z(b)]).unwrap();
        let w = wreath_from_fraction(&num(0, 0), &den, &g).unwrap();
        assert!(w.is_identity());
        let w = wreath_from_fraction(&num(7, 0), &den, &g).unwrap();
        assert!(w.vpart().is_identity());
        assert_eq!(w.map().iter().collect::<Vec<_>>(), vec![(&q(0, 1), &z(7))]);
        let w = wreath_from_fraction(&num(0, 7), &den, &g).unwrap();
        assert_eq!(w.map().iter().collect::<Vec<_>>(), vec![(&q(1, 2), &z(7))]);
    }

    #[test]
    fn fraction_from_wreath_examples() {
        let g = Builtin::Integers;
        let (num, den) = fraction_from_wreath(&WreathElement::identity(2), &g);
        assert_eq!((num.forest, den.forest), (Forest::trivial(2, 1), Forest::trivial(2, 1)));
        let w = WreathElement::new([(q(0, 1), z(3))].into(), FractionV::identity(2), &g).unwrap();
        let (num, _) = fraction_from_wreath(&w, &g);
        assert_eq!((num.forest.to_string(), num.labels), (".".to_string(), vec![z(3)]));
        let w = WreathElement::new([(q(3, 4), z(3))].into(), FractionV::identity(2), &g).unwrap();
        let (num, den) = fraction_from_wreath(&w, &g);
        assert_eq!(num.forest.to_string(), "(.(..))");
        assert_eq!(num.labels, vec![z(0), z(0), z(3)]);
        assert_eq!(wreath_from_fraction(&num, &den, &g).unwrap(), w);
    }

    #[test]
    fn multiply_examples() {
        let g = Builtin::Integers;
        let a: FractionV = "((..).)/(.(..))".parse().unwrap();
        let av = WreathElement::new(BTreeMap::new(), a.clone(), &g).unwrap();
        let x0 = WreathElement::new([(q(0, 1), z(2))].into(), FractionV::identity(2), &g).unwrap();
        let prod = WreathElement::multiply(&av, &x0, &g).unwrap();
        assert_eq!(prod, WreathElement::new([(q(0, 1), z(2))].into(), a.clone(), &g).unwrap());
        let inv = prod.invert(&g);
        assert_eq!(inv, WreathElement::new([(q(0, 1), z(-2))].into(), a.invert(), &g).unwrap());
        assert!(WreathElement::multiply(&prod, &inv, &g).unwrap().is_identity());
        let y = WreathElement::new([(q(1, 4), z(1)), (q(0, 1), z(1))].into(), FractionV::identity(2), &g).unwrap();
        let xy = WreathElement::multiply(&x0, &y, &g).unwrap();
        assert_eq!(xy.map().get(&q(0, 1)), Some(&z(3)));
        assert_eq!(xy.map().get(&q(1, 4)), Some(&z(1)));
    }

    #[test]
    fn literals_round_trip() {
        let g = Builtin::Integers;
        let w = WreathElement::parse("{0:2, 3/4:-1}|[2,1]*(..)/(..)", &g).unwrap();
        let text = w.format(&g);
        assert_eq!(text, "{0:2,3/4:-1}|[2,1]*(..)/(..)");
        assert_eq!(WreathElement::parse(&text, &g).unwrap(), w);
        assert_eq!(WreathElement::from_json(&w.to_json(&g), &g).unwrap(), w);
        assert!(WreathElement::parse("{1/3:1}|[1]*./.", &g).is_err());
        let p = LabeledPair::parse("[2,1,3]*((.{x}.).{2})/(.(..))", &Builtin::Integers);
        assert!(p.is_err());
        let p = LabeledPair::parse("[2,1,3]*((.{4}.).{2})/(.(..))", &g).unwrap();
        assert_eq!(p.format(&g), "[2,1,3]*((.{4}.).{2})/(.(..))");
    }
}
