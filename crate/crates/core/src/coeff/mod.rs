//! Exact and floating evaluation of the positive definite coefficients on
//! `V`, on the wreath products, and on the Higman–Thompson groupoid, plus
//! the checks of their structural properties and decay bounds.

pub mod classes;
pub mod matching;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::forest::{Forest, ForestLayout};
use crate::fraction::{ForestPair, FractionV};
use crate::group::PdFunction;
use crate::labeled::LabeledPair;
use crate::scalar::AlphaBeta;
use crate::words::{xi_lengths_on_layout, zero_subtree_mask, STATE_CAP};

pub use classes::{vertex_classes, VertexClasses};
pub use matching::{collect_matches, fold_matches, Match, MatchStrategy};

/// Relative slack for floating comparisons against the analytic bounds.
pub const BOUND_REL_TOL: f64 = 1e-12;
/// Absolute slack for floating comparisons against the analytic bounds.
pub const BOUND_ABS_TOL: f64 = 1e-15;

fn le(a: f64, b: f64) -> bool {
    a <= b * (1.0 + BOUND_REL_TOL) + BOUND_ABS_TOL
}

fn binom(n: usize, k: usize) -> BigInt {
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    c
}

/// An integer polynomial in `x = α²`. Equality compares power-basis
/// coefficients; evaluation uses the Bernstein form when known.
#[derive(Clone)]
pub struct CoeffPoly {
    power: Vec<BigInt>,
    bernstein: Option<(usize, Vec<u64>)>,
}

impl CoeffPoly {
    pub fn from_power(mut power: Vec<BigInt>) -> CoeffPoly {
        while power.last().is_some_and(Zero::is_zero) {
            power.pop();
        }
        CoeffPoly { power, bernstein: None }
    }

    /// `Σ_a c_a x^a (1−x)^{d−a}`.
    pub fn from_bernstein(degree: usize, counts: Vec<u64>) -> CoeffPoly {
        assert_eq!(counts.len(), degree + 1);
        let mut power = vec![BigInt::zero(); degree + 1];
        for (a, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let c = BigInt::from(c);
            for i in 0..=degree - a {
                let term = &c * binom(degree - a, i);
                if i % 2 == 0 {
                    power[a + i] += term;
                } else {
                    power[a + i] -= term;
                }
            }
        }
        let mut p = CoeffPoly::from_power(power);
        p.bernstein = Some((degree, counts));
        p
    }

    /// `x^k`.
    pub fn x_power(k: usize) -> CoeffPoly {
        let mut power = vec![BigInt::zero(); k + 1];
        power[k] = BigInt::one();
        CoeffPoly::from_power(power)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.power
    }

    pub fn bernstein(&self) -> Option<(usize, &[u64])> {
        self.bernstein.as_ref().map(|(d, c)| (*d, c.as_slice()))
    }

    pub fn degree(&self) -> Option<usize> {
        self.power.len().checked_sub(1)
    }

    pub fn eval(&self, x: f64) -> f64 {
        match &self.bernstein {
            Some((d, counts)) => counts
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(a, &c)| c as f64 * x.powi(a as i32) * (1.0 - x).powi((d - a) as i32))
                .sum(),
            None => self.power.iter().rev().fold(0.0, |acc, c| acc * x + bigint_f64(c)),
        }
    }

    pub fn eval_exact(&self, x: &BigRational) -> BigRational {
        self.power
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    pub fn to_alpha_beta(&self) -> AlphaBeta {
        AlphaBeta::from_x_poly(&self.power)
    }
}

fn bigint_f64(c: &BigInt) -> f64 {
    num_traits::ToPrimitive::to_f64(c).unwrap_or(f64::NAN)
}

impl PartialEq for CoeffPoly {
    fn eq(&self, other: &Self) -> bool {
        self.power == other.power
    }
}

impl Eq for CoeffPoly {}

impl fmt::Display for CoeffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(usize, &BigInt)> = self.power.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in terms.iter().enumerate() {
            let neg = c.sign() == num_bigint::Sign::Minus;
            let mag = if neg { -(*c).clone() } else { (*c).clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let coef = if mag.is_one() && *k > 0 { String::new() } else { mag.to_string() };
            match k {
                0 => write!(f, "{coef}")?,
                1 => write!(f, "{coef}x")?,
                _ => write!(f, "{coef}x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CoeffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn layouts(pair: &ForestPair) -> (ForestLayout, ForestLayout) {
    (ForestLayout::new(pair.num()), ForestLayout::new(pair.den()))
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    Ok(())
}

/// Number of matched pairs by total exponents `(A+A', B+B')`.
pub fn pair_tally(pair: &ForestPair, strategy: MatchStrategy) -> Result<BTreeMap<(usize, usize), u64>> {
    let (nl, dl) = layouts(pair);
    let add = |acc: &mut BTreeMap<(usize, usize), u64>, m: &Match| {
        let (e, f) = (m.tau.exponents(), m.tau_prime.exponents());
        *acc.entry((e.a + f.a, e.b + f.b)).or_insert(0) += 1;
    };
    match strategy {
        MatchStrategy::Backtrack => fold_matches(&nl, pair.perm(), &dl, BTreeMap::new, add, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        }),
        MatchStrategy::HashJoin => {
            let mut acc = BTreeMap::new();
            for m in collect_matches(&nl, pair.perm(), &dl, strategy)? {
                add(&mut acc, &m);
            }
            Ok(acc)
        }
    }
}

/// `⟨Φ(den)δ, Tens(perm)Φ(num)δ⟩` for any binary forest pair, exactly.
pub fn pair_coefficient_exact(pair: &ForestPair) -> Result<AlphaBeta> {
    let tally = pair_tally(pair, MatchStrategy::Backtrack)?;
    Ok(tally.iter().fold(AlphaBeta::zero(), |acc, (&(a, b), &c)| {
        &acc + &AlphaBeta::monomial(BigRational::from_integer(c.into()), a, b)
    }))
}

/// `φ_α(v)` as a polynomial in `x = α²`.
pub fn phi_alpha(v: &FractionV) -> Result<CoeffPoly> {
    phi_alpha_with(v, MatchStrategy::Backtrack, STATE_CAP)
}

pub fn phi_alpha_with(v: &FractionV, strategy: MatchStrategy, cap: usize) -> Result<CoeffPoly> {
    check_cap(v.leaves(), cap)?;
    let degree = v.leaves() - 1;
    let tally = pair_tally(v.pair(), strategy)?;
    let mut counts = vec![0u64; degree + 1];
    for (&(a, b), &c) in &tally {
        if a % 2 == 1 || b % 2 == 1 || a / 2 + b / 2 != degree {
            return Err(Error::Domain(format!("matched term α^{a}β^{b} is not a polynomial in α²")));
        }
        counts[a / 2] += c;
    }
    Ok(CoeffPoly::from_bernstein(degree, counts))
}

pub fn phi_alpha_value(v: &FractionV, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    Ok(phi_alpha(v)?.eval(alpha * alpha))
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::Domain(format!("α = {alpha} is outside (0,1)")));
    }
    Ok(())
}

/// Violations of the matched-state structure; empty when everything holds.
#[derive(Clone, Debug, Default)]
pub struct MatchedStateReport {
    pub matched: usize,
    pub violations: Vec<String>,
}

impl MatchedStateReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// For every matched `τ`: constant on `∼`-classes, every vertex of `f_τ` has a
/// distinct class-mate inside `f_τ`, a unique partner `τ'`, and `α_τ = α_τ'`.
pub fn check_matched_state_structure(v: &FractionV) -> Result<MatchedStateReport> {
    let pair = v.pair();
    let (nl, dl) = layouts(pair);
    let classes = VertexClasses::on_layouts(&nl, pair.perm(), &dl)?;
    let matches = collect_matches(&nl, pair.perm(), &dl, MatchStrategy::Backtrack)?;
    let reduced = v.is_reduced();
    let mut report = MatchedStateReport { matched: matches.len(), violations: Vec::new() };
    for w in matches.windows(2) {
        if w[0].tau == w[1].tau {
            report.violations.push(format!("state {:?} has two partners", w[0].tau.values()));
        }
    }
    for m in &matches {
        let tau = m.tau;
        for class in classes.classes() {
            if class.iter().any(|&x| tau.get(x) != tau.get(class[0])) {
                report.violations.push(format!("state {:?} is not constant on class {class:?}", tau.values()));
            }
        }
        if reduced {
            let z = zero_subtree_mask(&nl, &tau);
            let in_f = |x: usize| z >> x & 1 == 0;
            for x in (0..nl.vertex_count).filter(|&x| in_f(x)) {
                let class = &classes.classes()[classes.class_of(x)];
                if !class.iter().any(|&y| y != x && in_f(y)) {
                    report.violations.push(format!("vertex {x} of f_τ has no class-mate in f_τ for {:?}", tau.values()));
                }
            }
        }
        if tau.exponents() != m.tau_prime.exponents() {
            report.violations.push(format!("weights differ for {:?}", tau.values()));
        }
    }
    Ok(report)
}

/// `h(n) = ½ log₂(n/2)`.
pub fn h_threshold(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::Domain(format!("h(n) needs n ≥ 2, got {n}")));
    }
    Ok(0.5 * (n as f64 / 2.0).log2())
}

/// `(α⁴+β⁴)^{h(n)/2} + α^{2h(n)}`.
pub fn decay_bound(alpha: f64, n: usize) -> Result<f64> {
    check_alpha(alpha)?;
    let h = h_threshold(n)?;
    let a2 = alpha * alpha;
    let b2 = 1.0 - a2;
    Ok((a2 * a2 + b2 * b2).powf(h / 2.0) + alpha.powf(2.0 * h))
}

#[derive(Clone, Debug)]
pub struct SubtreeBound {
    pub n_z: usize,
    pub b_z: usize,
    pub m_z: usize,
    pub lhs: f64,
    pub rhs: f64,
}

/// The subtree decomposition of `φ_α(v)` and every inequality of the decay chain.
#[derive(Clone, Debug)]
pub struct BoundsReport {
    pub n: usize,
    pub alpha: f64,
    pub h: f64,
    pub phi: CoeffPoly,
    pub recomputed: CoeffPoly,
    /// One entry per subtree `z` with matched states.
    pub per_subtree: Vec<SubtreeBound>,
    /// `Σ_{m(z) ≤ h} x^{n(z)−1}(1−x)^{b(z)}` against `α^{2h}`.
    pub small_m_sum: f64,
    pub small_m_bound: f64,
    /// Contribution of subtrees with `m(z) > h` against `(α⁴+β⁴)^{h/2}`.
    pub large_m_part: f64,
    pub large_m_bound: f64,
    pub value: f64,
    pub decay_bound: f64,
}

impl BoundsReport {
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.phi != self.recomputed {
            out.push(format!("subtree recomputation {} differs from {}", self.recomputed, self.phi));
        }
        for s in &self.per_subtree {
            if !le(s.lhs, s.rhs) {
                out.push(format!("subtree (n={}, b={}, m={}): {} > {}", s.n_z, s.b_z, s.m_z, s.lhs, s.rhs));
            }
        }
        if !le(self.small_m_sum, self.small_m_bound) {
            out.push(format!("small-m sum {} > {}", self.small_m_sum, self.small_m_bound));
        }
        if !le(self.large_m_part, self.large_m_bound) {
            out.push(format!("large-m part {} > {}", self.large_m_part, self.large_m_bound));
        }
        if !le(self.value, self.decay_bound) {
            out.push(format!("|φ| = {} > decay bound {}", self.value, self.decay_bound));
        }
        out
    }

    pub fn passed(&self) -> bool {
        self.violations().is_empty()
    }
}

/// Recomputes `φ_α(v)` through the rooted subtrees of the numerator and
/// evaluates each inequality of the decay chain at `α`.
pub fn intermediate_bounds_check(v: &FractionV, alpha: f64) -> Result<BoundsReport> {
    check_alpha(alpha)?;
    let v = v.reduce();
    let n = v.leaves();
    check_cap(n, STATE_CAP)?;
    let phi = phi_alpha(&v)?;
    let value = phi.eval(alpha * alpha).abs();
    if n < 2 {
        let one = CoeffPoly::x_power(0);
        return Ok(BoundsReport {
            n,
            alpha,
            h: 0.0,
            recomputed: one,
            phi,
            per_subtree: Vec::new(),
            small_m_sum: 1.0,
            small_m_bound: 1.0,
            large_m_part: 0.0,
            large_m_bound: 1.0,
            value,
            decay_bound: 1.0,
        });
    }
    let h = h_threshold(n)?;
    let x = alpha * alpha;
    let t = v.num_tree();
    let nl = ForestLayout::new(&Forest::from_tree(&t));
    let dl = ForestLayout::new(v.pair().den());
    let matches = collect_matches(&nl, v.perm(), &dl, MatchStrategy::Backtrack)?;
    let mut by_z: HashMap<u128, Vec<(usize, usize)>> = HashMap::new();
    for m in &matches {
        let e = m.tau.exponents();
        by_z.entry(zero_subtree_mask(&nl, &m.tau)).or_default().push((e.a, e.b));
    }
    let subtrees = t.rooted_subtrees();
    let mut counts = vec![0u64; n];
    let mut assigned = 0usize;
    let mut per_subtree = Vec::new();
    let (mut small_m_sum, mut large_m_part) = (0.0, 0.0);
    let a4b4 = x * x + (1.0 - x) * (1.0 - x);
    for z in &subtrees {
        let outer = x.powi(z.n as i32 - 1) * (1.0 - x).powi(z.b as i32);
        if (z.m as f64) <= h {
            small_m_sum += outer;
        }
        let Some(states) = by_z.get(&z.vertices) else { continue };
        let mut lhs = 0.0;
        for &(a, b) in states {
            // z's vertices are 0, its internal boundary leaves are 1
            let (a1, b1) = (a - (z.n - 1), b - z.b);
            counts[z.n - 1 + a1] += 1;
            lhs += x.powi(a1 as i32) * (1.0 - x).powi(b1 as i32);
            assigned += 1;
        }
        if (z.m as f64) > h {
            large_m_part += outer * lhs;
        }
        per_subtree.push(SubtreeBound { n_z: z.n, b_z: z.b, m_z: z.m, lhs, rhs: a4b4.powf(z.m as f64 / 2.0) });
    }
    if assigned != matches.len() {
        return Err(Error::Domain("some matched states have no rooted subtree".into()));
    }
    Ok(BoundsReport {
        n,
        alpha,
        h,
        recomputed: CoeffPoly::from_bernstein(n - 1, counts),
        phi,
        per_subtree,
        small_m_sum,
        small_m_bound: alpha.powf(2.0 * h),
        large_m_part,
        large_m_bound: a4b4.powf(h / 2.0),
        value,
        decay_bound: decay_bound(alpha, n)?,
    })
}

/// Matched pairs of a labelled pair grouped by `(A+A', B+B')` and the
/// `(leaf, L_j(τ))` list of its non-identity labels.
type LabeledTally = BTreeMap<(usize, usize, Vec<(usize, usize)>), u64>;

fn labeled_tally<E: Clone + Eq>(lp: &LabeledPair<E>, identity: &E, use_labels: bool) -> Result<LabeledTally> {
    let pair = lp.shape_pair();
    let (nl, dl) = layouts(&pair);
    let labelled: Vec<usize> = if use_labels {
        (0..lp.leaf_count()).filter(|&j| lp.labels()[j] != *identity).collect()
    } else {
        Vec::new()
    };
    fold_matches(
        &nl,
        pair.perm(),
        &dl,
        LabeledTally::new,
        |acc, m| {
            let (e, f) = (m.tau.exponents(), m.tau_prime.exponents());
            let lens = if labelled.is_empty() { Vec::new() } else { xi_lengths_on_layout(&nl, &m.tau) };
            let key = (e.a + f.a, e.b + f.b, labelled.iter().map(|&j| (j, lens[j])).collect());
            *acc.entry(key).or_insert(0) += 1;
        },
        |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        },
    )
}

fn require_binary<E: Clone + Eq>(lp: &LabeledPair<E>) -> Result<()> {
    if lp.num().arity() != 2 {
        return Err(Error::Unsupported(format!("coefficients need arity 2, got {}", lp.num().arity())));
    }
    Ok(())
}

/// `φ_{φ_Γ,α}` of a labelled fraction `(π∘g∘t)/s`, in floating point.
pub fn wreath_coefficient<E>(lp: &LabeledPair<E>, pd: &PdFunction<E>, alpha: f64) -> Result<Complex64>
where
    E: Clone + Eq + Send + Sync + 'static,
{
    check_alpha(alpha)?;
    require_binary(lp)?;
    check_cap(lp.leaf_count(), STATE_CAP)?;
    let tally = labeled_tally(lp, pd.identity(), true)?;
    Ok(eval_tally(&tally, lp, pd, alpha))
}

fn eval_tally<E>(tally: &LabeledTally, lp: &LabeledPair<E>, pd: &PdFunction<E>, alpha: f64) -> Complex64
where
    E: Clone + Eq + Send + Sync + 'static,
{
    let beta = (1.0 - alpha * alpha).sqrt();
    let mut sum = Complex64::new(0.0, 0.0);
    for ((a, b, lens), &c) in tally {
        let mut term = Complex64::new(c as f64 * alpha.powi(*a as i32) * beta.powi(*b as i32), 0.0);
        for &(j, l) in lens {
            term *= pd.eval(&lp.labels()[j]).powu(l as u32);
        }
        sum += term;
    }
    sum
}

/// Exact symbolic `φ_{φ_Γ,α}` in `α`, for a rational-valued `φ_Γ`.
pub fn wreath_coefficient_exact<E>(lp: &LabeledPair<E>, pd: &PdFunction<E>) -> Result<AlphaBeta>
where
    E: Clone + Eq + Send + Sync + 'static,
{
    require_binary(lp)?;
    check_cap(lp.leaf_count(), STATE_CAP)?;
    if !pd.is_exact() {
        return Err(Error::Unsupported(format!("{} has no exact values", pd.name())));
    }
    let tally = labeled_tally(lp, pd.identity(), true)?;
    let mut sum = AlphaBeta::zero();
    for ((a, b, lens), &c) in &tally {
        let mut coef = BigRational::from_integer(c.into());
        for &(j, l) in lens {
            coef *= num_traits::pow(pd.eval_exact(&lp.labels()[j]).expect("exact pd"), l);
        }
        sum = &sum + &AlphaBeta::monomial(coef, *a, *b);
    }
    Ok(sum)
}

/// `⟨η_N, π(m) η_N⟩` with `η_N = N^{-1/2} ⊕_{r ≤ N} (ξ⊗δ_e)^{⊗r}`.
/// Without a pd the labels are ignored.
pub fn groupoid_coefficient<E>(lp: &LabeledPair<E>, pd: Option<&PdFunction<E>>, alpha: f64, big_n: usize) -> Result<Complex64>
where
    E: Clone + Eq + Send + Sync + 'static,
{
    check_alpha(alpha)?;
    require_binary(lp)?;
    if big_n == 0 {
        return Err(Error::Domain("N must be positive".into()));
    }
    if lp.source() > big_n || lp.target() > big_n {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let value = match pd {
        Some(pd) => eval_tally(&labeled_tally(lp, pd.identity(), true)?, lp, pd, alpha),
        None => {
            let tally = labeled_tally(lp, &lp.labels()[0], false)?;
            let beta = (1.0 - alpha * alpha).sqrt();
            let s: f64 = tally.iter().map(|((a, b, _), &c)| c as f64 * alpha.powi(*a as i32) * beta.powi(*b as i32)).sum();
            Complex64::new(s, 0.0)
        }
    };
    Ok(value / big_n as f64)
}

/// Exact groupoid coefficient; labels are used only when `pd` is given.
pub fn groupoid_coefficient_exact<E>(lp: &LabeledPair<E>, pd: Option<&PdFunction<E>>, big_n: usize) -> Result<AlphaBeta>
where
    E: Clone + Eq + Send + Sync + 'static,
{
    require_binary(lp)?;
    if big_n == 0 {
        return Err(Error::Domain("N must be positive".into()));
    }
    if lp.source() > big_n || lp.target() > big_n {
        return Ok(AlphaBeta::zero());
    }
    let inv_n = BigRational::new(BigInt::one(), BigInt::from(big_n));
    let inner = match pd {
        Some(pd) => wreath_coefficient_exact(lp, pd)?,
        None => pair_coefficient_exact(&lp.shape_pair())?,
    };
    Ok(inner.scale(&inv_n))
}

/// `|P_j^R|`: length of the numerator path to leaf `j` up to its last right edge.
pub fn right_prefix_lengths(t: &Forest) -> Vec<usize> {
    ForestLayout::new(t)
        .leaf_paths
        .iter()
        .map(|p| p.edges.iter().rposition(|e| e.child == 1).map_or(0, |i| i + 1))
        .collect()
}

#[derive(Clone, Debug)]
pub struct PathBound {
    pub leaf: usize,
    pub right_prefix: usize,
    pub bound: f64,
}

#[derive(Clone, Debug)]
pub struct PathBoundReport {
    pub value: f64,
    pub bounds: Vec<PathBound>,
}

impl PathBoundReport {
    pub fn violations(&self) -> Vec<String> {
        self.bounds
            .iter()
            .filter(|b| !le(self.value, b.bound))
            .map(|b| format!("leaf {}: |φ| = {} > {} (|P^R| = {})", b.leaf + 1, self.value, b.bound, b.right_prefix))
            .collect()
    }

    pub fn passed(&self) -> bool {
        self.violations().is_empty()
    }
}

/// `|φ(v_g)| ≤ (|P_j^R|+1)·max(α², |φ_Γ(g_j)|)^{|P_j^R|}` for each labelled leaf.
pub fn path_bound_check<E>(lp: &LabeledPair<E>, pd: &PdFunction<E>, alpha: f64) -> Result<PathBoundReport>
where
    E: Clone + Eq + Send + Sync + 'static,
{
    let value = wreath_coefficient(lp, pd, alpha)?.norm();
    let prefixes = right_prefix_lengths(lp.num());
    let bounds = (0..lp.leaf_count())
        .filter(|&j| lp.labels()[j] != *pd.identity())
        .map(|j| {
            let q = prefixes[j];
            let base = (alpha * alpha).max(pd.eval(&lp.labels()[j]).norm());
            PathBound { leaf: j, right_prefix: q, bound: (q as f64 + 1.0) * base.powi(q as i32) }
        })
        .collect();
    Ok(PathBoundReport { value, bounds })
}

#[derive(Clone, Debug)]
pub struct LowerBoundReport {
    pub value: f64,
    pub bound: f64,
}

impl LowerBoundReport {
    pub fn passed(&self) -> bool {
        le(self.bound, self.value)
    }
}

/// `|φ(v_g)| ≥ α^{2n−2} Π_j |φ_Γ(g_j)|^n` on the given `n`-leaf representative.
pub fn lower_bound_check<E>(lp: &LabeledPair<E>, pd: &PdFunction<E>, alpha: f64) -> Result<LowerBoundReport>
where
    E: Clone + Eq + Send + Sync + 'static,
{
    if !pd.is_nonnegative() {
        return Err(Error::Unsupported(format!("{} is not certified nonnegative", pd.name())));
    }
    let value = wreath_coefficient(lp, pd, alpha)?.norm();
    let n = lp.leaf_count();
    let prod: f64 = lp.labels().iter().map(|g| pd.eval(g).norm().powi(n as i32)).product();
    Ok(LowerBoundReport { value, bound: alpha.powi(2 * n as i32 - 2) * prod })
}

#[derive(Clone, Debug)]
pub struct DominationReport {
    pub value: f64,
    pub label_product: f64,
    pub vpart_value: f64,
}

impl DominationReport {
    pub fn passed(&self) -> bool {
        le(self.value, self.label_product) && le(self.value, self.vpart_value)
    }
}

/// `|φ(v_g)| ≤ Π_j |φ_Γ(g_j)|` and `|φ(v_g)| ≤ |φ_α(v)|`.
pub fn domination_check<E>(lp: &LabeledPair<E>, pd: &PdFunction<E>, alpha: f64) -> Result<DominationReport>
where
    E: Clone + Eq + Send + Sync + 'static,
{
    let value = wreath_coefficient(lp, pd, alpha)?.norm();
    let label_product = lp.labels().iter().map(|g| pd.eval(g).norm()).product();
    let vpart = FractionV::from_pair(lp.shape_pair())?;
    let vpart_value = phi_alpha(&vpart.reduce())?.eval(alpha * alpha).abs();
    Ok(DominationReport { value, label_product, vpart_value })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{pd_geometric_integers, Builtin, GroupElem};

    fn v(s: &str) -> FractionV {
        s.parse().unwrap()
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi_alpha(&FractionV::identity(2)).unwrap(), CoeffPoly::x_power(0));
        assert_eq!(phi_alpha(&v("((..).)/(.(..))")).unwrap(), CoeffPoly::x_power(2));
        assert_eq!(phi_alpha(&v("[2,1]*(..)/(..)")).unwrap(), CoeffPoly::x_power(1));
    }

    #[test]
    fn poly_forms_agree() {
        let p = CoeffPoly::from_bernstein(3, vec![0, 2, 1, 1]);
        // 2x(1-x)^2 + x^2(1-x) + x^3 = 2x - 3x^2 + 2x^3
        let q = CoeffPoly::from_power(vec![0.into(), 2.into(), (-3).into(), 2.into()]);
        assert_eq!(p, q);
        assert!((p.eval(0.3) - q.eval(0.3)).abs() < 1e-15);
        assert_eq!(p.to_string(), "2x - 3x^2 + 2x^3");
    }

    #[test]
    fn vertex_class_examples() {
        let y: crate::Tree = "(..)".parse().unwrap();
        let c = vertex_classes(&y, &y, &crate::Perm::identity(2)).unwrap();
        assert_eq!(c.classes(), &[vec![0]]);
        let t: crate::Tree = "((..).)".parse().unwrap();
        let c = vertex_classes(&t, &t, &crate::Perm::identity(3)).unwrap();
        assert_eq!(c.classes(), &[vec![0], vec![1]]);
        let c = vertex_classes(&y, &y, &"[2,1]".parse().unwrap()).unwrap();
        assert_eq!(c.classes(), &[vec![0]]);
        let u: crate::Tree = "(.(..))".parse().unwrap();
        let c = vertex_classes(&t, &u, &crate::Perm::identity(3)).unwrap();
        assert!(c.equivalent(0, 1));
    }

    #[test]
    fn matched_structure_examples() {
        let r = check_matched_state_structure(&FractionV::identity(2)).unwrap();
        assert!(r.passed());
        let r = check_matched_state_structure(&v("((..).)/(.(..))")).unwrap();
        assert_eq!(r.matched, 1);
        assert!(r.passed());
    }

    #[test]
    fn threshold_examples() {
        assert_eq!(h_threshold(2).unwrap(), 0.0);
        assert_eq!(h_threshold(8).unwrap(), 1.0);
        assert!(h_threshold(1).is_err());
        assert!(decay_bound(1.0, 4).is_err());
        let b: Vec<f64> = (2..30).map(|n| decay_bound(0.6, n).unwrap()).collect();
        assert!(b.windows(2).all(|w| w[1] < w[0]));
    }

    #[test]
    fn bounds_examples() {
        let r = intermediate_bounds_check(&FractionV::identity(2), 0.7).unwrap();
        assert!(r.passed());
        let r = intermediate_bounds_check(&v("((..).)/(.(..))"), 0.7).unwrap();
        assert_eq!(r.recomputed, CoeffPoly::x_power(2));
        assert!(r.passed(), "{:?}", r.violations());
    }

    #[test]
    fn wreath_examples() {
        let g = Builtin::Integers;
        let pd = pd_geometric_integers(BigRational::new(1.into(), 2.into())).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        let x = LabeledPair::pure(GroupElem::Int(3), 2);
        assert_eq!(wreath_coefficient_exact(&x, &pd).unwrap(), AlphaBeta::constant(num_traits::pow(half.clone(), 3)));
        let plain = LabeledPair::unlabeled(v("((..).)/(.(..))").pair(), &g);
        assert_eq!(wreath_coefficient_exact(&plain, &pd).unwrap(), AlphaBeta::monomial(BigRational::one(), 4, 0));
        let xe = LabeledPair::parse("(.{1}.)/(..)", &g).unwrap();
        assert_eq!(wreath_coefficient_exact(&xe, &pd).unwrap(), AlphaBeta::constant(half));
        let ee = LabeledPair::unlabeled(v("(..)/(..)").pair(), &g);
        assert!(path_bound_check(&ee, &pd, 0.5).unwrap().bounds.is_empty());
        let left = LabeledPair::parse("(.{2}.)/(..)", &g).unwrap();
        let r = path_bound_check(&left, &pd, 0.5).unwrap();
        assert_eq!((r.bounds[0].right_prefix, r.bounds[0].bound), (0, 1.0));
        assert!(lower_bound_check(&x, &pd, 0.5).unwrap().passed());
    }

    #[test]
    fn groupoid_examples() {
        let g = Builtin::Integers;
        let id = LabeledPair::unlabeled(&ForestPair::identity(2, 1), &g);
        assert_eq!(groupoid_coefficient(&id, None, 0.5, 1).unwrap().re, 1.0);
        let a = v("((..).)/(.(..))");
        let lp = LabeledPair::unlabeled(a.pair(), &g);
        let val = groupoid_coefficient(&lp, None, 0.5, 3).unwrap().re;
        assert!((val - 0.5f64.powi(4) / 3.0).abs() < 1e-15);
        let wide = LabeledPair::unlabeled(&"(..)./(..).".parse().unwrap(), &g);
        assert_eq!(groupoid_coefficient(&wide, None, 0.5, 1).unwrap().re, 0.0);
    }
}
