//! Base groups Γ and positive definite functions on them.

use std::f64::consts::PI;
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, RngCore};

use crate::error::{Error, Result};
use crate::linalg::gram_min_eigenvalue;
use crate::literal::{format_rational, parse_rational, Cursor};
use crate::perm::Perm;

/// A discrete group given by its operations. Implementations must be pure.
pub trait Group: Send + Sync {
    type Elem: Clone + Eq + Hash + Ord + Debug + Send + Sync;

    fn identity(&self) -> Self::Elem;
    fn op(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inverse(&self, a: &Self::Elem) -> Self::Elem;
    fn format(&self, a: &Self::Elem) -> String;
    fn parse(&self, s: &str) -> Result<Self::Elem>;

    fn is_identity(&self, a: &Self::Elem) -> bool {
        *a == self.identity()
    }

    /// Every element, when the group is finite.
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }

    /// A random element from a small fixed neighbourhood of the identity.
    fn sample(&self, rng: &mut dyn RngCore) -> Self::Elem;
}

/// The built-in groups.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    Integers,
    Cyclic(u64),
    Symmetric(usize),
    Product(Vec<Builtin>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElem {
    Int(i64),
    Residue(u64),
    Perm(Perm),
    Tuple(Vec<GroupElem>),
}

/// Radius of [`Builtin::Integers`] sampling.
const INTEGER_SAMPLE_RADIUS: i64 = 3;

impl Builtin {
    pub fn cyclic(n: u64) -> Result<Builtin> {
        if n == 0 {
            return Err(Error::Domain("cyclic group order must be positive".into()));
        }
        Ok(Builtin::Cyclic(n))
    }

    pub fn symmetric(m: usize) -> Result<Builtin> {
        if m == 0 {
            return Err(Error::Domain("symmetric group degree must be positive".into()));
        }
        Ok(Builtin::Symmetric(m))
    }

    pub fn product(factors: Vec<Builtin>) -> Result<Builtin> {
        if factors.is_empty() {
            return Err(Error::Domain("empty direct product".into()));
        }
        Ok(Builtin::Product(factors))
    }

    /// `Z`, `Z/n`, `S<m>`, or factors joined by `x`.
    pub fn from_spec(spec: &str) -> Result<Builtin> {
        let parts: Vec<&str> = spec.split('x').map(str::trim).collect();
        if parts.len() > 1 {
            return Builtin::product(parts.into_iter().map(Builtin::from_spec).collect::<Result<_>>()?);
        }
        let s = parts[0];
        let bad = || Error::parse(0, format!("unknown group {s:?}; expected Z, Z/n, S<m> or a product"));
        if s == "Z" {
            Ok(Builtin::Integers)
        } else if let Some(n) = s.strip_prefix("Z/") {
            Builtin::cyclic(n.parse().map_err(|_| bad())?)
        } else if let Some(m) = s.strip_prefix('S') {
            Builtin::symmetric(m.parse().map_err(|_| bad())?)
        } else {
            Err(bad())
        }
    }

    pub fn spec(&self) -> String {
        match self {
            Builtin::Integers => "Z".into(),
            Builtin::Cyclic(n) => format!("Z/{n}"),
            Builtin::Symmetric(m) => format!("S{m}"),
            Builtin::Product(fs) => fs.iter().map(Builtin::spec).collect::<Vec<_>>().join("x"),
        }
    }
}

impl Group for Builtin {
    type Elem = GroupElem;

    fn identity(&self) -> GroupElem {
        match self {
            Builtin::Integers => GroupElem::Int(0),
            Builtin::Cyclic(_) => GroupElem::Residue(0),
            Builtin::Symmetric(m) => GroupElem::Perm(Perm::identity(*m)),
            Builtin::Product(fs) => GroupElem::Tuple(fs.iter().map(Group::identity).collect()),
        }
    }

    fn op(&self, a: &GroupElem, b: &GroupElem) -> GroupElem {
        match (self, a, b) {
            (Builtin::Integers, GroupElem::Int(x), GroupElem::Int(y)) => GroupElem::Int(x + y),
            (Builtin::Cyclic(n), GroupElem::Residue(x), GroupElem::Residue(y)) => GroupElem::Residue((x + y) % n),
            (Builtin::Symmetric(_), GroupElem::Perm(x), GroupElem::Perm(y)) => {
                GroupElem::Perm(x.compose(y).expect("same degree"))
            }
            (Builtin::Product(fs), GroupElem::Tuple(x), GroupElem::Tuple(y)) => {
                GroupElem::Tuple(fs.iter().zip(x).zip(y).map(|((f, a), b)| f.op(a, b)).collect())
            }
            _ => panic!("element {a:?} or {b:?} does not belong to {}", self.spec()),
        }
    }

    fn inverse(&self, a: &GroupElem) -> GroupElem {
        match (self, a) {
            (Builtin::Integers, GroupElem::Int(x)) => GroupElem::Int(-x),
            (Builtin::Cyclic(n), GroupElem::Residue(x)) => GroupElem::Residue((n - x) % n),
            (Builtin::Symmetric(_), GroupElem::Perm(x)) => GroupElem::Perm(x.inverse()),
            (Builtin::Product(fs), GroupElem::Tuple(x)) => {
                GroupElem::Tuple(fs.iter().zip(x).map(|(f, a)| f.inverse(a)).collect())
            }
            _ => panic!("element {a:?} does not belong to {}", self.spec()),
        }
    }

    fn format(&self, a: &GroupElem) -> String {
        match (self, a) {
            (Builtin::Product(fs), GroupElem::Tuple(x)) => {
                let parts: Vec<String> = fs.iter().zip(x).map(|(f, a)| f.format(a)).collect();
                format!("({})", parts.join(","))
            }
            (_, GroupElem::Int(x)) => x.to_string(),
            (_, GroupElem::Residue(x)) => x.to_string(),
            (_, GroupElem::Perm(p)) => p.to_string(),
            (_, GroupElem::Tuple(_)) => panic!("tuple outside a product group"),
        }
    }

    fn parse(&self, s: &str) -> Result<GroupElem> {
        let s = s.trim();
        let bad = |msg: String| Error::parse(0, msg);
        match self {
            Builtin::Integers => s.parse().map(GroupElem::Int).map_err(|_| bad(format!("not an integer: {s:?}"))),
            Builtin::Cyclic(n) => {
                let x: i128 = s.parse().map_err(|_| bad(format!("not a residue: {s:?}")))?;
                Ok(GroupElem::Residue(x.rem_euclid(*n as i128) as u64))
            }
            Builtin::Symmetric(m) => {
                let p: Perm = s.parse()?;
                if p.degree() != *m {
                    return Err(bad(format!("expected a permutation of degree {m}")));
                }
                Ok(GroupElem::Perm(p))
            }
            Builtin::Product(fs) => {
                let mut c = Cursor::new(s);
                c.expect('(')?;
                let mut parts = Vec::with_capacity(fs.len());
                for (i, f) in fs.iter().enumerate() {
                    let raw = c.raw_until(&[',', ')'])?;
                    parts.push(f.parse(&raw)?);
                    c.expect(if i + 1 == fs.len() { ')' } else { ',' })?;
                }
                c.finish()?;
                Ok(GroupElem::Tuple(parts))
            }
        }
    }

    fn elements(&self) -> Option<Vec<GroupElem>> {
        match self {
            Builtin::Integers => None,
            Builtin::Cyclic(n) => Some((0..*n).map(GroupElem::Residue).collect()),
            Builtin::Symmetric(m) => Some(all_perms(*m).into_iter().map(GroupElem::Perm).collect()),
            Builtin::Product(fs) => {
                let mut acc: Vec<Vec<GroupElem>> = vec![Vec::new()];
                for f in fs {
                    let els = f.elements()?;
                    acc = acc
                        .into_iter()
                        .flat_map(|prefix| {
                            els.iter().map(move |e| {
                                let mut p = prefix.clone();
                                p.push(e.clone());
                                p
                            })
                        })
                        .collect();
                }
                Some(acc.into_iter().map(GroupElem::Tuple).collect())
            }
        }
    }

    fn sample(&self, rng: &mut dyn RngCore) -> GroupElem {
        match self {
            Builtin::Integers => GroupElem::Int(rng.random_range(-INTEGER_SAMPLE_RADIUS..=INTEGER_SAMPLE_RADIUS)),
            Builtin::Cyclic(n) => GroupElem::Residue(rng.random_range(0..*n)),
            Builtin::Symmetric(m) => {
                let mut images: Vec<usize> = (0..*m).collect();
                images.shuffle(rng);
                GroupElem::Perm(Perm::from_images_unchecked(images))
            }
            Builtin::Product(fs) => GroupElem::Tuple(fs.iter().map(|f| f.sample(rng)).collect()),
        }
    }
}

fn all_perms(m: usize) -> Vec<Perm> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
        let m = used.len();
        if prefix.len() == m {
            out.push(Perm::from_images_unchecked(prefix.clone()));
            return;
        }
        for x in 0..m {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                go(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; m], &mut out);
    out
}

type ExactFn<E> = Arc<dyn Fn(&E) -> BigRational + Send + Sync>;
type FloatFn<E> = Arc<dyn Fn(&E) -> Complex64 + Send + Sync>;
type SublevelFn<E> = Arc<dyn Fn(f64) -> Vec<E> + Send + Sync>;

/// A normalized positive definite function `φ: Γ → ℂ`, `φ(e) = 1`.
///
/// `exact` is present when every value is rational. `bound` is a certified
/// `c` with `|φ(g)| ≤ c` off the identity. `sublevel(ε)` lists every `g`
/// with `|φ(g)| ≥ ε` (a finite set, witnessing vanishing at infinity).
#[derive(Clone)]
pub struct PdFunction<E> {
    name: String,
    identity: E,
    exact: Option<ExactFn<E>>,
    float: FloatFn<E>,
    bound: Option<f64>,
    sublevel: Option<SublevelFn<E>>,
    nonnegative: bool,
}

impl<E: Clone + PartialEq + Send + Sync + 'static> PdFunction<E> {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn identity(&self) -> &E {
        &self.identity
    }

    pub fn eval(&self, g: &E) -> Complex64 {
        if *g == self.identity {
            return Complex64::new(1.0, 0.0);
        }
        (self.float)(g)
    }

    pub fn eval_exact(&self, g: &E) -> Option<BigRational> {
        if *g == self.identity {
            return Some(BigRational::one());
        }
        self.exact.as_ref().map(|f| f(g))
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    pub fn bound(&self) -> Option<f64> {
        self.bound
    }

    pub fn is_nonnegative(&self) -> bool {
        self.nonnegative
    }

    pub fn sublevel(&self, eps: f64) -> Option<Vec<E>> {
        self.sublevel.as_ref().map(|f| f(eps))
    }

    /// `[φ(g_i⁻¹ g_j)]`.
    pub fn gram<G: Group<Elem = E>>(&self, group: &G, elems: &[E]) -> Vec<Vec<Complex64>> {
        elems
            .iter()
            .map(|a| {
                let ai = group.inverse(a);
                elems.iter().map(|b| self.eval(&group.op(&ai, b))).collect()
            })
            .collect()
    }

    /// `ψ(g) = c·φ(g)` off the identity, `ψ(e) = 1`, for an exact `c ∈ [0,1]`.
    pub fn deform_exact(&self, c: BigRational) -> Result<PdFunction<E>> {
        if c.is_negative() || c > BigRational::one() {
            return Err(Error::Domain(format!("deformation factor {} is outside [0,1]", format_rational(&c))));
        }
        let cf = c.to_f64().expect("finite");
        let mut out = self.deform_float(cf, format!("deform[{}]:{}", format_rational(&c), self.name));
        out.exact = self.exact.clone().map(|f| Arc::new(move |g: &E| f(g) * &c) as ExactFn<E>);
        Ok(out)
    }

    fn deform_float(&self, c: f64, name: String) -> PdFunction<E> {
        let f = self.float.clone();
        let inner = self.sublevel.clone();
        let id = self.identity.clone();
        PdFunction {
            name,
            identity: self.identity.clone(),
            exact: None,
            float: Arc::new(move |g| f(g) * c),
            bound: Some(c * self.bound.unwrap_or(1.0)),
            sublevel: inner.map(|s| {
                Arc::new(move |eps: f64| {
                    let mut v = if c == 0.0 { Vec::new() } else { s(eps / c) };
                    if !v.contains(&id) {
                        v.push(id.clone());
                    }
                    v
                }) as SublevelFn<E>
            }),
            nonnegative: self.nonnegative,
        }
    }
}

/// The constant function 1.
pub fn pd_trivial<E: Clone + PartialEq + Send + Sync + 'static>(identity: E) -> PdFunction<E> {
    PdFunction {
        name: "trivial".into(),
        identity,
        exact: Some(Arc::new(|_| BigRational::one())),
        float: Arc::new(|_| Complex64::new(1.0, 0.0)),
        bound: None,
        sublevel: None,
        nonnegative: true,
    }
}

/// `δ_e`, the coefficient of the left regular representation.
pub fn pd_regular<E: Clone + PartialEq + Send + Sync + 'static>(identity: E) -> PdFunction<E> {
    let id = identity.clone();
    PdFunction {
        name: "regular".into(),
        identity,
        exact: Some(Arc::new(|_| BigRational::zero())),
        float: Arc::new(|_| Complex64::new(0.0, 0.0)),
        bound: Some(0.0),
        sublevel: Some(Arc::new(move |_| vec![id.clone()])),
        nonnegative: true,
    }
}

/// `φ(n) = s^|n|` on the integers.
pub fn pd_geometric_integers(s: BigRational) -> Result<PdFunction<GroupElem>> {
    if !s.is_positive() || s >= BigRational::one() {
        return Err(Error::Domain(format!("geometric parameter {} is outside (0,1)", format_rational(&s))));
    }
    let sf = s.to_f64().expect("finite");
    let se = s.clone();
    let name = format!("zgeom:{}", format_rational(&s));
    Ok(PdFunction {
        name,
        identity: GroupElem::Int(0),
        exact: Some(Arc::new(move |g| match g {
            GroupElem::Int(n) => num_traits::pow(se.clone(), n.unsigned_abs() as usize),
            _ => BigRational::zero(),
        })),
        float: Arc::new(move |g| match g {
            GroupElem::Int(n) => Complex64::new(sf.powf(n.unsigned_abs() as f64), 0.0),
            _ => Complex64::new(0.0, 0.0),
        }),
        bound: Some(sf),
        sublevel: Some(Arc::new(move |eps| {
            let r = if eps >= 1.0 { 0 } else if eps <= 0.0 { i64::MAX } else { (eps.ln() / sf.ln()).floor() as i64 };
            let r = r.min(1 << 20);
            (-r..=r).map(GroupElem::Int).collect()
        })),
        nonnegative: true,
    })
}

/// `ψ_θ = cos²θ·φ` off the identity, `1` at the identity.
pub fn pd_deform<E: Clone + PartialEq + Send + Sync + 'static>(pd: &PdFunction<E>, theta: f64) -> PdFunction<E> {
    let c = theta.cos().powi(2);
    pd.deform_float(c, format!("deform:{theta}:{}", pd.name))
}

/// Exact `cos(2π q)` for the rationals where it is rational.
fn exact_cos_turns(q: &BigRational) -> Option<BigRational> {
    let frac = q - q.floor();
    let den = frac.denom().to_u64()?;
    let num = frac.numer().to_u64()?;
    let twelfths = match den {
        1 | 2 | 3 | 4 | 6 => num * (12 / den),
        _ => return None,
    };
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    Some(match twelfths {
        0 => BigRational::one(),
        2 | 10 => half,
        3 | 9 => BigRational::zero(),
        4 | 8 => -half,
        6 => -BigRational::one(),
        _ => unreachable!(),
    })
}

/// Real part of the character `n ↦ e^{2πi·q·n}` of the integers.
pub fn pd_integer_character(q: BigRational) -> PdFunction<GroupElem> {
    let qf = q.to_f64().expect("finite");
    let exact_ok = exact_cos_turns(&q).is_some();
    let qe = q.clone();
    PdFunction {
        name: format!("zchar:{}", format_rational(&q)),
        identity: GroupElem::Int(0),
        exact: exact_ok.then(|| {
            Arc::new(move |g: &GroupElem| match g {
                GroupElem::Int(n) => exact_cos_turns(&(&qe * BigInt::from(*n))).expect("rational cosine"),
                _ => BigRational::zero(),
            }) as ExactFn<GroupElem>
        }),
        float: Arc::new(move |g| match g {
            GroupElem::Int(n) => Complex64::new((2.0 * PI * qf * (*n as f64)).cos(), 0.0),
            _ => Complex64::new(0.0, 0.0),
        }),
        bound: None,
        sublevel: None,
        nonnegative: false,
    }
}

/// The character `g ↦ e^{2πi·k·g/n}` of `Z/n`, or its real part.
pub fn pd_cyclic_character(n: u64, k: u64, real: bool) -> Result<PdFunction<GroupElem>> {
    if n == 0 {
        return Err(Error::Domain("cyclic group order must be positive".into()));
    }
    let turns = move |g: u64| BigRational::new(BigInt::from(k * g % n), BigInt::from(n));
    let exact_ok = (0..n).all(|g| {
        let t = turns(g);
        exact_cos_turns(&t).is_some() && (real || exact_cos_turns(&(t + BigRational::new(3.into(), 4.into()))) == Some(BigRational::zero()))
    });
    let name = format!("{}:{k}", if real { "rchar" } else { "char" });
    let all: Vec<GroupElem> = (0..n).map(GroupElem::Residue).collect();
    Ok(PdFunction {
        name,
        identity: GroupElem::Residue(0),
        exact: exact_ok.then(|| {
            Arc::new(move |g: &GroupElem| match g {
                GroupElem::Residue(x) => exact_cos_turns(&turns(*x)).expect("rational cosine"),
                _ => BigRational::zero(),
            }) as ExactFn<GroupElem>
        }),
        float: Arc::new(move |g| match g {
            GroupElem::Residue(x) => {
                let a = 2.0 * PI * ((k * x % n) as f64) / n as f64;
                if real {
                    Complex64::new(a.cos(), 0.0)
                } else {
                    Complex64::new(a.cos(), a.sin())
                }
            }
            _ => Complex64::new(0.0, 0.0),
        }),
        bound: None,
        sublevel: Some(Arc::new(move |_| all.clone())),
        nonnegative: false,
    })
}

/// A table value: exact rational or complex float.
#[derive(Clone, Debug, PartialEq)]
pub enum TableValue {
    Exact(BigRational),
    Complex(Complex64),
}

impl TableValue {
    fn to_complex(&self) -> Complex64 {
        match self {
            TableValue::Exact(q) => Complex64::new(q.to_f64().expect("finite"), 0.0),
            TableValue::Complex(z) => *z,
        }
    }
}

/// PSD tolerance applied when validating tables.
pub const TABLE_PSD_TOL: f64 = 1e-9;

/// A lookup-table pd on a finite group, validated on the full Gram matrix.
pub fn pd_table<G>(group: &G, table: Vec<(G::Elem, TableValue)>) -> Result<PdFunction<G::Elem>>
where
    G: Group,
    G::Elem: 'static,
{
    let elements = group
        .elements()
        .ok_or_else(|| Error::PositiveDefinite("table functions need a finite group".into()))?;
    let lookup = |g: &G::Elem| table.iter().find(|(h, _)| h == g).map(|(_, v)| v.clone());
    for g in &elements {
        if lookup(g).is_none() {
            return Err(Error::PositiveDefinite(format!("table misses {}", group.format(g))));
        }
    }
    let id = group.identity();
    if lookup(&id).map(|v| v.to_complex()) != Some(Complex64::new(1.0, 0.0)) {
        return Err(Error::PositiveDefinite("table value at the identity must be 1".into()));
    }
    let all_exact = table.iter().all(|(_, v)| matches!(v, TableValue::Exact(_)));
    let nonnegative = table.iter().all(|(_, v)| match v {
        TableValue::Exact(q) => !q.is_negative(),
        TableValue::Complex(z) => z.im == 0.0 && z.re >= 0.0,
    });
    let bound = elements
        .iter()
        .filter(|g| **g != id)
        .map(|g| lookup(g).expect("covered").to_complex().norm())
        .fold(0.0f64, f64::max);
    let entries: Arc<Vec<(G::Elem, TableValue)>> = Arc::new(table);
    let e1 = entries.clone();
    let e2 = entries.clone();
    let find = move |es: &Vec<(G::Elem, TableValue)>, g: &G::Elem| {
        es.iter().find(|(h, _)| h == g).map(|(_, v)| v.clone()).expect("table covers the group")
    };
    let all = elements.clone();
    let pd = PdFunction {
        name: "table".into(),
        identity: id,
        exact: all_exact.then(|| {
            Arc::new(move |g: &G::Elem| match find(&e1, g) {
                TableValue::Exact(q) => q,
                TableValue::Complex(_) => unreachable!(),
            }) as ExactFn<G::Elem>
        }),
        float: Arc::new(move |g| find(&e2, g).to_complex()),
        bound: (bound < 1.0).then_some(bound),
        sublevel: Some(Arc::new(move |_| all.clone())),
        nonnegative,
    };
    let min = gram_min_eigenvalue(&pd.gram(group, &elements))
        .map_err(|e| Error::PositiveDefinite(e.to_string()))?;
    if min < -TABLE_PSD_TOL {
        return Err(Error::PositiveDefinite(format!("Gram matrix has eigenvalue {min:.3e}")));
    }
    Ok(pd)
}

/// Reads `element value` lines (`#` comments allowed). Values are rationals,
/// decimals, or `re,im` complex pairs.
pub fn parse_table<G: Group>(group: &G, text: &str) -> Result<Vec<(G::Elem, TableValue)>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (g, v) = line
            .rsplit_once(char::is_whitespace)
            .ok_or_else(|| Error::parse(lineno + 1, "expected `element value`"))?;
        let value = match v.split_once(',') {
            Some((re, im)) => {
                let re: f64 = re.parse().map_err(|_| Error::parse(lineno + 1, "bad real part"))?;
                let im: f64 = im.parse().map_err(|_| Error::parse(lineno + 1, "bad imaginary part"))?;
                TableValue::Complex(Complex64::new(re, im))
            }
            None => TableValue::Exact(parse_rational(v).map_err(|_| Error::parse(lineno + 1, "bad value"))?),
        };
        out.push((group.parse(g)?, value));
    }
    Ok(out)
}

/// Parses a pd spec: `trivial`, `regular`, `zgeom:s`, `zchar:q`, `char:k`,
/// `rchar:k`, `deform:θ:<spec>`, `deformq:c:<spec>`, `table:<file>`.
pub fn parse_pd(spec: &str, group: &Builtin) -> Result<PdFunction<GroupElem>> {
    let spec = spec.trim();
    let (head, rest) = spec.split_once(':').unwrap_or((spec, ""));
    let need = |g: bool, what: &str| {
        if g {
            Ok(())
        } else {
            Err(Error::Domain(format!("{what} is not defined on {}", group.spec())))
        }
    };
    match head {
        "trivial" => Ok(pd_trivial(group.identity())),
        "regular" => Ok(pd_regular(group.identity())),
        "zgeom" => {
            need(*group == Builtin::Integers, "zgeom")?;
            pd_geometric_integers(parse_rational(rest)?)
        }
        "zchar" => {
            need(*group == Builtin::Integers, "zchar")?;
            Ok(pd_integer_character(parse_rational(rest)?))
        }
        "char" | "rchar" => match group {
            Builtin::Cyclic(n) => {
                let k: u64 = rest.parse().map_err(|_| Error::parse(0, "character index must be an integer"))?;
                pd_cyclic_character(*n, k, head == "rchar")
            }
            _ => Err(Error::Domain(format!("{head} needs a cyclic group"))),
        },
        "deform" | "deformq" => {
            let (param, inner) = rest
                .split_once(':')
                .ok_or_else(|| Error::parse(0, "expected deform:<parameter>:<spec>"))?;
            let base = parse_pd(inner, group)?;
            if head == "deform" {
                let theta: f64 = param.parse().map_err(|_| Error::parse(0, "bad angle"))?;
                Ok(pd_deform(&base, theta))
            } else {
                base.deform_exact(parse_rational(param)?)
            }
        }
        "table" => {
            let text = std::fs::read_to_string(rest)
                .map_err(|e| Error::Domain(format!("cannot read {rest}: {e}")))?;
            pd_table(group, parse_table(group, &text)?)
        }
        _ => Err(Error::parse(0, format!("unknown pd spec {spec:?}"))),
    }
}
