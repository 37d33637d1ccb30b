//! Brute-force evaluation on formal vectors of `(ξ-blocks ⊗ word)` basis
//! elements. Slow but direct; the reference for every structured evaluator.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::forest::{Forest, Shape, Tree};
use crate::fraction::{ForestPair, FractionV};
use crate::group::{Group, PdFunction};
use crate::labeled::LabeledPair;
use crate::perm::Perm;
use crate::scalar::AlphaBeta;
use crate::words::{LetterKind, Word};

pub use crate::linalg::gram_min_eigenvalue;

/// Leaf cap for dense expansion.
pub const ORACLE_CAP: usize = 10;

/// One tensor factor: `(κ(g₁)ξ)^{⊗p₁} ⊗ ⋯ ⊗ δ_word`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot<E> {
    pub blocks: Vec<(usize, E)>,
    pub word: Word,
}

impl<E: Clone + Eq> Slot<E> {
    pub fn xi_len(&self) -> usize {
        self.blocks.iter().map(|b| b.0).sum()
    }

    fn push_block(&mut self, power: usize, g: E) {
        if power == 0 {
            return;
        }
        match self.blocks.last_mut() {
            Some(last) if last.1 == g => last.0 += power,
            _ => self.blocks.push((power, g)),
        }
    }

    /// Merges adjacent blocks with equal decorations and drops empty ones.
    pub fn normalized(&self) -> Self {
        let mut out = Slot { blocks: Vec::new(), word: self.word.clone() };
        for (p, g) in &self.blocks {
            out.push_block(*p, g.clone());
        }
        out
    }

    fn flat(&self) -> impl Iterator<Item = &E> {
        self.blocks.iter().flat_map(|(p, g)| std::iter::repeat_n(g, *p))
    }
}

pub type Basis<E> = Vec<Slot<E>>;

/// A finitely supported vector with coefficients in `Q[α, β]`.
#[derive(Clone, Debug, PartialEq)]
pub struct FormalVector<E: Ord> {
    slots: usize,
    terms: BTreeMap<Basis<E>, AlphaBeta>,
}

impl<E: Clone + Ord + std::hash::Hash> FormalVector<E> {
    /// `ξ^{⊗xi} ⊗ δ_e` in each of `slots` factors.
    pub fn vacuum(slots: usize, xi: usize, identity: &E) -> Self {
        let mut slot = Slot { blocks: Vec::new(), word: Word::empty() };
        slot.push_block(xi, identity.clone());
        Self::basis(vec![slot; slots])
    }

    pub fn basis(b: Basis<E>) -> Self {
        let b: Basis<E> = b.iter().map(Slot::normalized).collect();
        let slots = b.len();
        FormalVector { slots, terms: BTreeMap::from([(b, AlphaBeta::one())]) }
    }

    pub fn slots(&self) -> usize {
        self.slots
    }

    pub fn terms(&self) -> &BTreeMap<Basis<E>, AlphaBeta> {
        &self.terms
    }

    pub fn add_term(&mut self, b: Basis<E>, c: AlphaBeta) -> Result<()> {
        if b.len() != self.slots {
            return Err(Error::ArityMismatch { left: self.slots, right: b.len() });
        }
        let b: Basis<E> = b.iter().map(Slot::normalized).collect();
        let entry = self.terms.entry(b).or_insert_with(AlphaBeta::zero);
        *entry = &*entry + &c;
        self.terms.retain(|_, c| !c.is_zero());
        Ok(())
    }

    fn check_slot(&self, slot: usize) -> Result<()> {
        if slot >= self.slots {
            return Err(Error::IndexOutOfRange { index: slot, len: self.slots });
        }
        Ok(())
    }

    /// Applies `R` at `slot`, splitting it in two. With `xi` false the
    /// `ξ`-bookkeeping is skipped and only `R_α` acts on the word.
    pub fn apply_r(&self, slot: usize, identity: &E, xi: bool) -> Result<Self> {
        self.check_slot(slot)?;
        let mut out = BTreeMap::new();
        for (b, c) in &self.terms {
            let x = &b[slot];
            let level = x.word.level();
            for (shift, exps) in [(0i64, (1usize, 0usize)), (1, (0, 1))] {
                let lv = level + shift;
                let mut left = x.clone();
                let mut right = Slot { blocks: Vec::new(), word: x.word.clone() };
                if xi {
                    right.push_block(x.word.len() + 1, identity.clone());
                }
                if lv >= 0 {
                    left.word.push(LetterKind::A, lv as u32);
                    right.word.push(LetterKind::B, lv as u32);
                }
                let mut nb = Vec::with_capacity(b.len() + 1);
                nb.extend_from_slice(&b[..slot]);
                nb.push(left);
                nb.push(right);
                nb.extend_from_slice(&b[slot + 1..]);
                let term = c.mul_monomial(exps.0, exps.1);
                let entry = out.entry(nb).or_insert_with(AlphaBeta::zero);
                *entry = &*entry + &term;
            }
        }
        out.retain(|_, c: &mut AlphaBeta| !c.is_zero());
        Ok(FormalVector { slots: self.slots + 1, terms: out })
    }

    /// `ρ(g)` at `slot`: left-multiplies every block decoration.
    pub fn apply_rho<G: Group<Elem = E>>(&self, slot: usize, g: &E, group: &G) -> Result<Self> {
        self.check_slot(slot)?;
        if group.is_identity(g) {
            return Ok(self.clone());
        }
        let mut out = FormalVector { slots: self.slots, terms: BTreeMap::new() };
        for (b, c) in &self.terms {
            let mut nb = b.clone();
            let mut s = Slot { blocks: Vec::new(), word: nb[slot].word.clone() };
            for (p, d) in &b[slot].blocks {
                s.push_block(*p, group.op(g, d));
            }
            nb[slot] = s;
            out.add_term(nb, c.clone())?;
        }
        Ok(out)
    }

    /// `Tens(σ)`: factor `j` moves to position `σ(j)`.
    pub fn apply_perm(&self, sigma: &Perm) -> Result<Self> {
        if sigma.degree() != self.slots {
            return Err(Error::DegreeMismatch { expected: self.slots, got: sigma.degree() });
        }
        let mut out = FormalVector { slots: self.slots, terms: BTreeMap::new() };
        for (b, c) in &self.terms {
            let mut nb = b.clone();
            for (j, s) in b.iter().enumerate() {
                nb[sigma.apply(j)] = s.clone();
            }
            out.terms.insert(nb, c.clone());
        }
        Ok(out)
    }

    /// Expands each slot by the corresponding tree of `f`.
    pub fn apply_forest(&self, f: &Forest, identity: &E, xi: bool) -> Result<Self> {
        if f.trees().len() != self.slots {
            return Err(Error::ArityMismatch { left: self.slots, right: f.trees().len() });
        }
        if f.arity() != 2 {
            return Err(Error::Unsupported(format!("the oracle needs arity 2, got {}", f.arity())));
        }
        let mut v = self.clone();
        for (i, t) in f.trees().iter().enumerate().rev() {
            v = expand_shape(v, i, t, identity, xi)?;
        }
        Ok(v)
    }

    fn pairs<S>(&self, other: &Self, mut each: impl FnMut(&AlphaBeta, &AlphaBeta, &[(E, E)]) -> Result<S>) -> Result<Vec<S>> {
        if self.slots != other.slots {
            return Err(Error::ArityMismatch { left: self.slots, right: other.slots });
        }
        let key = |b: &Basis<E>| -> (Vec<Word>, Vec<usize>) { (b.iter().map(|s| s.word.clone()).collect(), b.iter().map(Slot::xi_len).collect()) };
        let mut index: HashMap<(Vec<Word>, Vec<usize>), Vec<(&Basis<E>, &AlphaBeta)>> = HashMap::new();
        for (b, c) in &self.terms {
            index.entry(key(b)).or_default().push((b, c));
        }
        let mut out = Vec::new();
        for (rb, rc) in &other.terms {
            let Some(lefts) = index.get(&key(rb)) else { continue };
            for (lb, lc) in lefts {
                let factors: Vec<(E, E)> =
                    lb.iter().zip(rb.iter()).flat_map(|(ls, rs)| ls.flat().cloned().zip(rs.flat().cloned()).collect::<Vec<_>>()).collect();
                out.push(each(lc, rc, &factors)?);
            }
        }
        Ok(out)
    }

    /// `⟨self, other⟩`, linear in `other`; `⟨κ(g)ξ, κ(h)ξ⟩ = φ_Γ(g⁻¹h)`.
    pub fn inner<G: Group<Elem = E>>(&self, other: &Self, group: &G, pd: Option<&PdFunction<E>>, alpha: f64) -> Result<Complex64>
    where
        E: Send + Sync + 'static,
    {
        let parts = self.pairs(other, |lc, rc, factors| {
            let mut v = Complex64::new(lc.eval(alpha) * rc.eval(alpha), 0.0);
            if let Some(pd) = pd {
                for (g, h) in factors {
                    v *= pd.eval(&group.op(&group.inverse(g), h));
                }
            }
            Ok(v)
        })?;
        Ok(parts.into_iter().sum())
    }

    /// Exact `⟨self, other⟩` for a rational-valued pd.
    pub fn inner_exact<G: Group<Elem = E>>(&self, other: &Self, group: &G, pd: Option<&PdFunction<E>>) -> Result<AlphaBeta>
    where
        E: Send + Sync + 'static,
    {
        if let Some(pd) = pd {
            if !pd.is_exact() {
                return Err(Error::Unsupported(format!("{} has no exact values", pd.name())));
            }
        }
        let parts = self.pairs(other, |lc, rc, factors| {
            let mut c = BigRational::one();
            if let Some(pd) = pd {
                for (g, h) in factors {
                    c *= pd.eval_exact(&group.op(&group.inverse(g), h)).expect("exact pd");
                }
            }
            Ok((lc * rc).scale(&c))
        })?;
        Ok(parts.iter().fold(AlphaBeta::zero(), |acc, p| &acc + p))
    }

    /// One line per term: `coef * [ξ^a{g}·ξ^b{h} ⊗ word] ⊗ …`.
    pub fn dump<G: Group<Elem = E>>(&self, group: &G) -> String {
        let mut out = String::new();
        for (b, c) in &self.terms {
            let slots: Vec<String> = b
                .iter()
                .map(|s| {
                    let blocks: Vec<String> = s.blocks.iter().map(|(p, g)| format!("ξ^{p}{{{}}}", group.format(g))).collect();
                    if blocks.is_empty() {
                        format!("[{}]", s.word)
                    } else {
                        format!("[{} ⊗ {}]", blocks.join("·"), s.word)
                    }
                })
                .collect();
            let _ = writeln!(out, "({c}) * {}", slots.join(" ⊗ "));
        }
        out
    }
}

fn expand_shape<E: Clone + Ord + std::hash::Hash>(v: FormalVector<E>, slot: usize, s: &Shape, identity: &E, xi: bool) -> Result<FormalVector<E>> {
    fn go<E: Clone + Ord + std::hash::Hash>(v: FormalVector<E>, slot: usize, s: &Shape, identity: &E, xi: bool) -> Result<FormalVector<E>> {
        match s {
            Shape::Leaf => Ok(v),
            Shape::Node(ch) => {
                let v = v.apply_r(slot, identity, xi)?;
                let v = go(v, slot + 1, &ch[1], identity, xi)?;
                go(v, slot, &ch[0], identity, xi)
            }
        }
    }
    go(v, slot, s, identity, xi)
}

/// `Ψ(t)(ξ ⊗ δ_e)`, or `Φ(t)δ_e` when `xi` is false.
pub fn tree_expansion<E: Clone + Ord + std::hash::Hash>(t: &Tree, identity: &E, xi: bool) -> Result<FormalVector<E>> {
    FormalVector::vacuum(1, usize::from(xi), identity).apply_forest(&Forest::from_tree(t), identity, xi)
}

fn check_cap(n: usize) -> Result<()> {
    if n > ORACLE_CAP {
        return Err(Error::CapExceeded { n, cap: ORACLE_CAP });
    }
    Ok(())
}

/// The two sides `Φ(s)δ` and `Tens(σ)ρ(g)Φ(t)δ` of a labelled forest pair.
fn sides<G: Group>(lp: &LabeledPair<G::Elem>, group: &G, xi: bool) -> Result<(FormalVector<G::Elem>, FormalVector<G::Elem>)>
where
    G::Elem: 'static,
{
    check_cap(lp.leaf_count())?;
    let e = group.identity();
    let x = usize::from(xi);
    let left = FormalVector::vacuum(lp.den().trees().len(), x, &e).apply_forest(lp.den(), &e, xi)?;
    let mut right = FormalVector::vacuum(lp.num().trees().len(), x, &e).apply_forest(lp.num(), &e, xi)?;
    if xi {
        for (j, g) in lp.labels().iter().enumerate() {
            right = right.apply_rho(j, g, group)?;
        }
    }
    Ok((left, right.apply_perm(lp.perm())?))
}

/// `⟨Φ(s)δ_e, Tens(σ)Φ(t)δ_e⟩` for a binary forest pair, exactly.
pub fn oracle_pair(pair: &ForestPair) -> Result<AlphaBeta> {
    check_cap(pair.num().leaf_count())?;
    let unit = crate::group::Builtin::Integers;
    let lp = LabeledPair::unlabeled(pair, &unit);
    let (l, r) = sides(&lp, &unit, false)?;
    l.inner_exact(&r, &unit, None)
}

/// `φ_α(v)` by dense expansion.
pub fn oracle_phi(v: &FractionV) -> Result<AlphaBeta> {
    oracle_pair(v.pair())
}

/// The labelled coefficient by dense expansion, in floating point.
pub fn oracle_labeled<G: Group>(lp: &LabeledPair<G::Elem>, group: &G, pd: &PdFunction<G::Elem>, alpha: f64) -> Result<Complex64>
where
    G::Elem: 'static,
{
    let (l, r) = sides(lp, group, true)?;
    l.inner(&r, group, Some(pd), alpha)
}

/// The labelled coefficient by dense expansion, exactly.
pub fn oracle_labeled_exact<G: Group>(lp: &LabeledPair<G::Elem>, group: &G, pd: &PdFunction<G::Elem>) -> Result<AlphaBeta>
where
    G::Elem: 'static,
{
    let (l, r) = sides(lp, group, true)?;
    l.inner_exact(&r, group, Some(pd))
}

/// `⟨η_N, π(m)η_N⟩` by dense expansion of the diagonal block.
pub fn oracle_groupoid_exact<G: Group>(lp: &LabeledPair<G::Elem>, group: &G, pd: Option<&PdFunction<G::Elem>>, big_n: usize) -> Result<AlphaBeta>
where
    G::Elem: 'static,
{
    if big_n == 0 {
        return Err(Error::Domain("N must be positive".into()));
    }
    if lp.source() > big_n || lp.target() > big_n {
        return Ok(AlphaBeta::zero());
    }
    let (l, r) = sides(lp, group, pd.is_some())?;
    Ok(l.inner_exact(&r, group, pd)?.scale(&BigRational::new(1.into(), big_n.into())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{pd_geometric_integers, Builtin, GroupElem};

    fn e() -> GroupElem {
        Builtin::Integers.identity()
    }

    #[test]
    fn r_on_vacuum() {
        let v = FormalVector::vacuum(1, 1, &e()).apply_r(0, &e(), true).unwrap();
        let dump = v.dump(&Builtin::Integers);
        assert_eq!(dump, "(α) * [ξ^1{0} ⊗ e] ⊗ [ξ^1{0} ⊗ e]\n(β) * [ξ^1{0} ⊗ a] ⊗ [ξ^1{0} ⊗ b]\n");
        let z = Builtin::Integers;
        assert_eq!(v.inner_exact(&v, &z, None).unwrap(), AlphaBeta::one());
    }

    #[test]
    fn r_levels() {
        let w: Word = "ab".parse().unwrap();
        let v = FormalVector::basis(vec![Slot { blocks: vec![], word: w }]);
        let r = v.apply_r(0, &e(), false).unwrap();
        let words: Vec<String> = r.terms().keys().map(|b| format!("{},{}", b[0].word, b[1].word)).collect();
        assert_eq!(words, ["aba,abb", "aba1,abb1"]);
    }

    #[test]
    fn rho_and_perm() {
        let z = Builtin::Integers;
        let v = FormalVector::vacuum(2, 1, &e());
        assert_eq!(v.apply_rho(0, &e(), &z).unwrap(), v);
        let a = v.apply_rho(0, &GroupElem::Int(2), &z).unwrap().apply_rho(0, &GroupElem::Int(3), &z).unwrap();
        assert_eq!(a, v.apply_rho(0, &GroupElem::Int(5), &z).unwrap());
        let s: Perm = "[2,1]".parse().unwrap();
        let p = a.apply_perm(&s).unwrap();
        assert_eq!(p.terms().keys().next().unwrap()[1].blocks, vec![(1, GroupElem::Int(5))]);
        assert_eq!(p.apply_perm(&s.inverse()).unwrap(), a);
        assert!(a.apply_perm(&Perm::identity(3)).is_err());
    }

    #[test]
    fn inner_pd() {
        let z = Builtin::Integers;
        let pd = pd_geometric_integers(BigRational::new(1.into(), 3.into())).unwrap();
        let v = FormalVector::vacuum(1, 1, &e());
        let x = v.apply_rho(0, &GroupElem::Int(2), &z).unwrap();
        assert_eq!(v.inner_exact(&x, &z, Some(&pd)).unwrap(), AlphaBeta::constant(BigRational::new(1.into(), 9.into())));
        let w = FormalVector::vacuum(1, 2, &e());
        assert!(v.inner_exact(&w, &z, Some(&pd)).unwrap().is_zero());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(oracle_phi(&FractionV::identity(2)).unwrap(), AlphaBeta::one());
        let a: FractionV = "((..).)/(.(..))".parse().unwrap();
        assert_eq!(oracle_phi(&a).unwrap(), AlphaBeta::monomial(BigRational::one(), 4, 0));
        let s: FractionV = "[2,1]*(..)/(..)".parse().unwrap();
        assert_eq!(oracle_phi(&s).unwrap(), AlphaBeta::monomial(BigRational::one(), 2, 0));
    }

    #[test]
    fn five_leaf_expansion_term() {
        let t: Tree = "(((..)(..)).)".parse().unwrap();
        let v = tree_expansion(&t, &e(), true).unwrap();
        let want: Vec<Word> = ["aa", "ab", "ba1", "bb1", "e"].iter().map(|w| w.parse().unwrap()).collect();
        let (b, c) = v.terms().iter().find(|(b, _)| b.iter().map(|s| &s.word).eq(want.iter())).unwrap();
        assert_eq!(*c, AlphaBeta::monomial(BigRational::one(), 2, 2));
        assert_eq!(b.iter().map(|s| s.xi_len()).collect::<Vec<_>>(), [1, 2, 1, 2, 1]);
    }
}
