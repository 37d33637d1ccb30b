//! Randomized verification suites. Each check runs a fixed number of seeded
//! cases and records every violation.

use std::fmt;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeff::{
    check_matched_state_structure, domination_check, groupoid_coefficient_exact, intermediate_bounds_check, lower_bound_check,
    pair_coefficient_exact, path_bound_check, phi_alpha, wreath_coefficient, wreath_coefficient_exact, CoeffPoly,
};
use crate::error::{Error, Result};
use crate::forest::Forest;
use crate::fraction::{random_forest, random_forest_pair, ElementClass, FractionV, GroupoidMorphism};
use crate::group::{parse_pd, Builtin, Group, PdFunction};
use crate::labeled::{LabeledPair, WreathElement};
use crate::linalg::gram_min_eigenvalue;
use crate::oracle::{oracle_groupoid_exact, oracle_labeled, oracle_labeled_exact, oracle_pair, oracle_phi};

/// Lowest accepted Gram eigenvalue.
pub const PSD_TOL: f64 = 1e-9;
/// Agreement tolerance for floating-only comparisons.
pub const FLOAT_TOL: f64 = 1e-12;
/// Failure messages kept per check.
const KEEP: usize = 10;

pub const SUITES: &[&str] = &["group-laws", "oracle", "farley", "phi", "bounds", "psd", "wreath", "all"];

#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub statement: &'static str,
    pub cases: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

impl Check {
    pub fn new(name: &'static str, statement: &'static str) -> Check {
        Check { name, statement, cases: 0, failed: 0, failures: Vec::new() }
    }

    pub fn record(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.fail(msg());
        }
    }

    fn fail(&mut self, msg: String) {
        self.failed += 1;
        if self.failures.len() < KEEP {
            self.failures.push(msg);
        }
    }

    /// Records an error from a case as a failure.
    pub fn attempt(&mut self, f: impl FnOnce(&mut Check) -> Result<()>) {
        let before = self.cases;
        if let Err(e) = f(self) {
            if self.cases == before {
                self.cases += 1;
            }
            self.fail(format!("error: {e}"));
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0 && self.cases > 0
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{tag} {} ({} cases, {} failed): {}", self.name, self.cases, self.failed, self.statement)?;
        for m in &self.failures {
            write!(f, "\n    {m}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let n = self.checks.iter().filter(|c| c.passed()).count();
        write!(f, "suite {}: {n}/{} checks passed", self.suite, self.checks.len())
    }
}

/// A uniformly chosen leaf count in `lo..=hi`, then a reduced element.
pub fn random_element<R: Rng + ?Sized>(rng: &mut R, lo: usize, hi: usize, class: ElementClass) -> Result<FractionV> {
    loop {
        let n = rng.random_range(lo..=hi);
        match FractionV::random_reduced_with(rng, n, class) {
            Err(Error::Domain(_)) if class == ElementClass::F && n == 2 && lo < hi => continue,
            r => return r,
        }
    }
}

/// A reduced V element with `n` leaves, each leaf labelled by a sampled
/// element with probability `p`, else by the identity.
pub fn random_labeled<G: Group, R: Rng>(rng: &mut R, n: usize, group: &G, p: f64) -> Result<LabeledPair<G::Elem>> {
    let v = FractionV::random_reduced_with(rng, n, ElementClass::V)?;
    let labels = (0..n).map(|_| if rng.random_bool(p) { group.sample(rng) } else { group.identity() }).collect();
    LabeledPair::new(v.pair().num().clone(), labels, v.perm().clone(), v.pair().den().clone())
}

pub fn random_wreath<G: Group, R: Rng>(rng: &mut R, lo: usize, hi: usize, group: &G) -> Result<WreathElement<G::Elem>> {
    let n = rng.random_range(lo..=hi);
    random_labeled(rng, n, group, 0.5)?.to_wreath(group)
}

/// Expands by a random forest with `carets` carets.
pub fn random_expansion<R: Rng>(rng: &mut R, leaves: usize, carets: usize) -> Forest {
    random_forest(rng, 2, leaves, carets)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Associativity, identity, inverses and the PL picture for `V`.
pub fn check_v_group_laws(seed: u64, cases: usize) -> Check {
    let mut c = Check::new("v-group-laws", "V is a group and v ↦ PL(v) is a faithful homomorphism");
    let mut r = rng(seed);
    for _ in 0..cases {
        c.attempt(|c| {
            let u = random_element(&mut r, 1, 7, ElementClass::V)?;
            let v = random_element(&mut r, 1, 7, ElementClass::V)?;
            let w = random_element(&mut r, 1, 7, ElementClass::V)?;
            let left = u.multiply(&v)?.multiply(&w)?;
            let right = u.multiply(&v.multiply(&w)?)?;
            let id = FractionV::identity(2);
            let ok = left.equals(&right)
                && id.multiply(&u)?.equals(&u)
                && u.multiply(&id)?.equals(&u)
                && u.multiply(&u.invert())?.is_identity()
                && u.multiply(&v)?.pl_map() == u.pl_map().compose(&v.pl_map())?
                && u.equals(&v) == (u.pl_map() == v.pl_map());
            let big = u.expand(&random_expansion(&mut r, u.leaves(), 3))?;
            let ok = ok && big.equals(&u) && big.pl_map() == u.pl_map();
            c.record(ok, || format!("u={u} v={v} w={w}"));
            Ok(())
        });
    }
    c
}

/// Every expansion of a reduced element reduces back to it.
pub fn check_reduce_confluence(seed: u64, cases: usize) -> Check {
    let mut c = Check::new("reduce-confluence", "reduction is confluent and idempotent");
    let mut r = rng(seed);
    for _ in 0..cases {
        c.attempt(|c| {
            let v = random_element(&mut r, 1, 8, ElementClass::V)?;
            let k1 = r.random_range(0..5);
            let k2 = r.random_range(0..5);
            let a = v.expand(&random_expansion(&mut r, v.leaves(), k1))?;
            let b = v.expand(&random_expansion(&mut r, v.leaves(), k2))?;
            let (ra, rb) = (a.reduce(), b.reduce());
            c.record(ra == rb && ra == v && ra.reduce() == ra, || format!("v={v} a={a} b={b}"));
            Ok(())
        });
    }
    c
}

fn wreath_groups() -> Vec<Builtin> {
    vec![Builtin::Integers, Builtin::Cyclic(3), Builtin::Symmetric(3)]
}

/// The semidirect product law agrees with multiplication of labelled
/// fractions. Fractions compose labels in the opposite order, so for
/// non-abelian Γ the agreement holds after inverting every map value.
pub fn check_wreath_agreement(seed: u64, cases: usize) -> Check {
    let mut c = Check::new("wreath-agreement", "semidirect product multiplication agrees with fraction multiplication");
    let mut r = rng(seed);
    let groups = wreath_groups();
    for i in 0..cases {
        let g = &groups[i % groups.len()];
        let abelian = !matches!(g, Builtin::Symmetric(_));
        c.attempt(|c| {
            let u = random_wreath(&mut r, 1, 5, g)?;
            let w = random_wreath(&mut r, 1, 5, g)?;
            let x = random_wreath(&mut r, 1, 5, g)?;
            let frac = LabeledPair::multiply(&u.to_labeled_pair(g), &w.to_labeled_pair(g), g)?.to_wreath(g)?;
            let agree = if abelian {
                frac == WreathElement::multiply(&u, &w, g)?
            } else {
                let semi = WreathElement::multiply(&u.pointwise_inverse(g), &w.pointwise_inverse(g), g)?;
                frac.pointwise_inverse(g) == semi
            };
            let uw = WreathElement::multiply(&u, &w, g)?;
            let assoc = WreathElement::multiply(&uw, &x, g)? == WreathElement::multiply(&u, &WreathElement::multiply(&w, &x, g)?, g)?;
            let inv = WreathElement::multiply(&u, &u.invert(g), g)?.is_identity();
            let round = u.to_labeled_pair(g).to_wreath(g)? == u;
            c.record(agree && assoc && inv && round, || format!("{}: u={} w={}", g.spec(), u.format(g), w.format(g)));
            Ok(())
        });
    }
    c
}

/// Composition laws in the groupoid of fractions of `k`-ary forests.
pub fn check_groupoid_laws(seed: u64, cases: usize) -> Check {
    let mut c = Check::new("groupoid-laws", "forest-pair composition is associative with identities and inverses");
    let mut r = rng(seed);
    for i in 0..cases {
        let k = if i % 2 == 0 { 2 } else { 3 };
        c.attempt(|c| {
            let step = k - 1;
            let obj = |r: &mut ChaCha8Rng| 1 + step * r.random_range(0..3usize);
            let (a, b, cc, d) = (obj(&mut r), obj(&mut r), obj(&mut r), obj(&mut r));
            let morph = |s: usize, t: usize, r: &mut ChaCha8Rng| {
                let leaves = s.max(t) + step * r.random_range(0..3usize);
                random_forest_pair(r, k, s, t, leaves).map(GroupoidMorphism::from_pair)
            };
            let h = morph(a, b, &mut r)?;
            let g = morph(b, cc, &mut r)?;
            let f = morph(cc, d, &mut r)?;
            let fg_h = GroupoidMorphism::compose(&GroupoidMorphism::compose(&f, &g)?, &h)?;
            let f_gh = GroupoidMorphism::compose(&f, &GroupoidMorphism::compose(&g, &h)?)?;
            let ida = GroupoidMorphism::identity(k, a);
            let idb = GroupoidMorphism::identity(k, b);
            let ok = fg_h.equals(&f_gh)
                && GroupoidMorphism::compose(&h, &ida)?.equals(&h)
                && GroupoidMorphism::compose(&idb, &h)?.equals(&h)
                && GroupoidMorphism::compose(&h, &h.inverse())?.equals(&idb)
                && GroupoidMorphism::compose(&g, &h)?.pl_map() == g.pl_map().compose(&h.pl_map())?;
            c.record(ok, || format!("k={k} f={} g={} h={}", f.pair(), g.pair(), h.pair()));
            Ok(())
        });
    }
    c
}

/// `φ_α` from matched states equals the dense expansion.
pub fn check_oracle_v(seed: u64, cases: usize) -> Check {
    let mut c = Check::new("oracle-v", "structured φ_α equals the dense expansion exactly (n ≤ 6)");
    let mut r = rng(seed);
    for _ in 0..cases {
        c.attempt(|c| {
            let v = random_element(&mut r, 1, 6, ElementClass::V)?;
            let extra = r.random_range(0..=6 - v.leaves());
            let big = v.expand(&random_expansion(&mut r, v.leaves(), extra))?;
            let want = oracle_phi(&big)?;
            let ok = phi_alpha(&big)?.to_alpha_beta() == want && pair_coefficient_exact(big.pair())? == want;
            c.record(ok, || format!("v={big}: oracle {want}"));
            Ok(())
        });
    }
    c
}

/// Exact-valued pd configurations used for oracle comparison.
pub fn exact_pd_configs() -> Vec<(Builtin, &'static str)> {
    vec![
        (Builtin::Integers, "zgeom:1/2"),
        (Builtin::Integers, "zchar:1/3"),
        (Builtin::Integers, "zchar:1/4"),
        (Builtin::Cyclic(3), "rchar:1"),
        (Builtin::Cyclic(3), "trivial"),
        (Builtin::Cyclic(3), "regular"),
    ]
}

/// Wreath coefficients from matched states equal the dense expansion.
pub fn check_oracle_wreath(seed: u64, cases: usize) -> Check {
    let mut c = Check::new("oracle-wreath", "structured wreath coefficient equals the dense expansion exactly (n ≤ 6)");
    let mut r = rng(seed);
    let configs = exact_pd_configs();
    for i in 0..cases {
        let (g, spec) = &configs[i % configs.len()];
        c.attempt(|c| {
            let pd = parse_pd(spec, g)?;
            let n = r.random_range(1..=6);
            let lp = random_labeled(&mut r, n, g, 0.6)?;
            let want = oracle_labeled_exact(&lp, g, &pd)?;
            let got = wreath_coefficient_exact(&lp, &pd)?;
            c.record(got == want, || format!("{} {spec}: {} gives {got}, oracle {want}", g.spec(), lp.format(g)));
            Ok(())
        });
    }
    // complex characters have no exact form; compare in floating point
    let g = Builtin::Cyclic(3);
    for _ in 0..cases / 5 {
        c.attempt(|c| {
            let pd = parse_pd("char:1", &g)?;
            let n = r.random_range(1..=6);
            let lp = random_labeled(&mut r, n, &g, 0.6)?;
            let alpha = r.random_range(0.05..0.95);
            let want = oracle_labeled(&lp, &g, &pd, alpha)?;
            let got = wreath_coefficient(&lp, &pd, alpha)?;
            c.record((got - want).norm() <= FLOAT_TOL, || format!("Z/3 char:1 α={alpha}: {} gives {got}, oracle {want}", lp.format(&g)));
            Ok(())
        });
    }
    c
}

/// Forest-pair coefficients from matched states equal the dense expansion.
pub fn check_oracle_groupoid(seed: u64, cases: usize) -> Check {
    let mut c = Check::new("oracle-groupoid", "groupoid coefficients equal the dense expansion exactly");
    let mut r = rng(seed);
    let g = Builtin::Integers;
    for _ in 0..cases {
        c.attempt(|c| {
            let pd = parse_pd("zgeom:1/3", &g)?;
            let (s, t) = (r.random_range(1..=3), r.random_range(1..=3));
            let leaves = r.random_range(s.max(t)..=6);
            let pair = random_forest_pair(&mut r, 2, s, t, leaves)?;
            let ok_plain = pair_coefficient_exact(&pair)? == oracle_pair(&pair)?;
            let labels = (0..leaves).map(|_| if r.random_bool(0.5) { g.sample(&mut r) } else { g.identity() }).collect();
            let lp = LabeledPair::new(pair.num().clone(), labels, pair.perm().clone(), pair.den().clone())?;
            let big_n = r.random_range(1..=4);
            let with_pd = groupoid_coefficient_exact(&lp, Some(&pd), big_n)? == oracle_groupoid_exact(&lp, &g, Some(&pd), big_n)?;
            let without = groupoid_coefficient_exact(&lp, None, big_n)? == oracle_groupoid_exact(&lp, &g, None, big_n)?;
            c.record(ok_plain && with_pd && without, || format!("{} N={big_n}", lp.format(&g)));
            Ok(())
        });
    }
    c
}

/// `φ_α(v) = x^{n−1}` on reduced elements of `T`.
pub fn check_farley(seed: u64, cases: usize, max_n: usize) -> Check {
    let mut c = Check::new("farley", "φ_α(v) = α^{2n−2} for reduced v ∈ T with n leaves");
    let mut r = rng(seed);
    for _ in 0..cases {
        c.attempt(|c| {
            let v = random_element(&mut r, 1, max_n, ElementClass::T)?;
            let p = phi_alpha(&v)?;
            c.record(p == CoeffPoly::x_power(v.leaves() - 1), || format!("v={v}: {p}"));
            Ok(())
        });
    }
    c
}

/// `φ_α(v)` vanishes at `x = 0` and equals 1 at `x = 1` for `v ≠ e`.
pub fn check_endpoints(seed: u64, cases: usize) -> Check {
    let mut c = Check::new("endpoints", "φ_0 is the regular coefficient and φ_1 is trivial");
    let mut r = rng(seed);
    let (zero, one) = (BigRational::zero(), BigRational::one());
    for _ in 0..cases {
        c.attempt(|c| {
            let v = random_element(&mut r, 2, 9, ElementClass::V)?;
            let p = phi_alpha(&v)?;
            c.record(p.eval_exact(&zero).is_zero() && p.eval_exact(&one).is_one(), || format!("v={v}: {p}"));
            Ok(())
        });
    }
    c
}

/// `φ(v⁻¹) = conj φ(v)` for `φ_α` and for wreath coefficients.
pub fn check_hermitian(seed: u64, cases: usize) -> Check {
    let mut c = Check::new("hermitian", "φ(v⁻¹) is the conjugate of φ(v)");
    let mut r = rng(seed);
    let g = Builtin::Cyclic(5);
    for _ in 0..cases {
        c.attempt(|c| {
            let v = random_element(&mut r, 1, 9, ElementClass::V)?;
            let pd = parse_pd("char:2", &g)?;
            let w = random_wreath(&mut r, 1, 7, &g)?;
            let alpha = r.random_range(0.05..0.95);
            let a = wreath_coefficient(&w.to_labeled_pair(&g), &pd, alpha)?;
            let b = wreath_coefficient(&w.invert(&g).to_labeled_pair(&g), &pd, alpha)?;
            let ok = phi_alpha(&v)? == phi_alpha(&v.invert())? && (a - b.conj()).norm() <= FLOAT_TOL;
            c.record(ok, || format!("v={v} w={} ({a} vs {b})", w.format(&g)));
            Ok(())
        });
    }
    c
}

/// Coefficients do not depend on the chosen representative.
pub fn check_representative_independence(seed: u64, cases: usize) -> Check {
    let mut c = Check::new("representative-independence", "coefficients are invariant under common expansion");
    let mut r = rng(seed);
    let g = Builtin::Integers;
    for _ in 0..cases {
        c.attempt(|c| {
            let pd = parse_pd("zgeom:2/3", &g)?;
            let v = random_element(&mut r, 1, 8, ElementClass::V)?;
            let k = r.random_range(1..=4);
            let big = v.expand(&random_expansion(&mut r, v.leaves(), k))?;
            let n = r.random_range(1..=7);
            let lp = random_labeled(&mut r, n, &g, 0.5)?;
            let k = r.random_range(1..=4);
            let lbig = lp.expand(&random_expansion(&mut r, n, k), &g)?;
            let ok = phi_alpha(&v)? == phi_alpha(&big)? && wreath_coefficient_exact(&lp, &pd)? == wreath_coefficient_exact(&lbig, &pd)?;
            c.record(ok, || format!("v={v} big={big} lp={}", lp.format(&g)));
            Ok(())
        });
    }
    c
}

/// Matched states are constant on vertex classes and pair off vertices of `f_τ`.
pub fn check_matched_structure(seed: u64, cases: usize) -> Check {
    let mut c = Check::new("matched-structure", "matched states respect the vertex equivalence");
    let mut r = rng(seed);
    for _ in 0..cases {
        c.attempt(|c| {
            let v = random_element(&mut r, 1, 10, ElementClass::V)?;
            let rep = check_matched_state_structure(&v)?;
            c.record(rep.passed(), || format!("v={v}: {:?}", rep.violations));
            Ok(())
        });
    }
    c
}

/// The decay chain: subtree recomputation, both per-subtree inequalities, final bound.
pub fn check_decay_chain(seed: u64, per_n: usize, leaves: std::ops::RangeInclusive<usize>, alphas: &[f64]) -> Check {
    let mut c = Check::new("decay-chain", "subtree decomposition, per-subtree and small-m inequalities, and |φ_α| ≤ decay bound");
    let mut r = rng(seed);
    for n in leaves {
        for _ in 0..per_n {
            c.attempt(|c| {
                let v = FractionV::random_reduced_with(&mut r, n, ElementClass::V)?;
                for &alpha in alphas {
                    let rep = intermediate_bounds_check(&v, alpha)?;
                    c.record(rep.passed(), || format!("v={v} α={alpha}: {:?}", rep.violations()));
                }
                Ok(())
            });
        }
    }
    c
}

/// Gram matrices of `φ_α` and of wreath coefficients are PSD.
pub fn check_psd(seed: u64, matrices: usize, max_m: usize) -> Check {
    let mut c = Check::new("psd", "Gram matrices [φ(v_i⁻¹v_j)] are positive semidefinite");
    let mut r = rng(seed);
    let g = Builtin::Integers;
    for i in 0..matrices {
        c.attempt(|c| {
            let m = r.random_range(2..=max_m);
            let alpha = if i % 4 < 2 { 0.5 } else { 0.8 };
            let gram: Vec<Vec<Complex64>> = if i % 2 == 0 {
                let vs: Vec<FractionV> = (0..m).map(|_| random_element(&mut r, 1, 5, ElementClass::V)).collect::<Result<_>>()?;
                let inv: Vec<FractionV> = vs.iter().map(FractionV::invert).collect();
                let mut rows = Vec::with_capacity(m);
                for a in &inv {
                    let row = vs
                        .iter()
                        .map(|b| Ok(Complex64::new(phi_alpha(&a.multiply(b)?)?.eval(alpha * alpha), 0.0)))
                        .collect::<Result<Vec<_>>>()?;
                    rows.push(row);
                }
                rows
            } else {
                let pd = parse_pd("zgeom:1/2", &g)?;
                let ws: Vec<WreathElement<_>> = (0..m).map(|_| random_wreath(&mut r, 1, 4, &g)).collect::<Result<_>>()?;
                let mut rows = Vec::with_capacity(m);
                for a in &ws {
                    let ai = a.invert(&g);
                    let row = ws
                        .iter()
                        .map(|b| wreath_coefficient(&WreathElement::multiply(&ai, b, &g)?.to_labeled_pair(&g), &pd, alpha))
                        .collect::<Result<Vec<_>>>()?;
                    rows.push(row);
                }
                rows
            };
            let min = gram_min_eigenvalue(&gram)?;
            c.record(min >= -PSD_TOL, || format!("matrix {i} (m={m}, α={alpha}): min eigenvalue {min}"));
            Ok(())
        });
    }
    c
}

fn nonnegative_pds() -> Vec<(Builtin, &'static str)> {
    vec![(Builtin::Integers, "zgeom:1/2"), (Builtin::Integers, "zgeom:4/5"), (Builtin::Cyclic(4), "regular")]
}

/// Domination, the path bound and the lower bound for wreath coefficients.
pub fn check_wreath_bounds(seed: u64, cases: usize, max_n: usize) -> Check {
    let mut c = Check::new("wreath-bounds", "|φ(v_g)| lies between α^{2n−2}Π|φ_Γ(g_j)|ⁿ and min(Π|φ_Γ(g_j)|, |φ_α(v)|, path bounds)");
    let mut r = rng(seed);
    let configs = nonnegative_pds();
    for i in 0..cases {
        let (g, spec) = &configs[i % configs.len()];
        c.attempt(|c| {
            let pd: PdFunction<_> = parse_pd(spec, g)?;
            let n = r.random_range(1..=max_n);
            let lp = random_labeled(&mut r, n, g, 0.4)?;
            let alpha = if i % 2 == 0 { 0.5 } else { 0.8 };
            let dom = domination_check(&lp, &pd, alpha)?;
            let path = path_bound_check(&lp, &pd, alpha)?;
            let low = lower_bound_check(&lp, &pd, alpha)?;
            c.record(dom.passed() && path.passed() && low.passed(), || {
                format!("{} {spec} α={alpha} {}: {dom:?} {:?} {low:?}", g.spec(), lp.format(g), path.violations())
            });
            Ok(())
        });
    }
    c
}

/// Runs a named suite with its default sizes.
pub fn run_suite(name: &str, seed: u64) -> Result<SuiteReport> {
    let checks = match name {
        "group-laws" => vec![
            check_v_group_laws(seed, 500),
            check_reduce_confluence(seed + 1, 500),
            check_wreath_agreement(seed + 2, 500),
            check_groupoid_laws(seed + 3, 500),
        ],
        "oracle" => vec![check_oracle_v(seed, 500), check_oracle_wreath(seed + 1, 500), check_oracle_groupoid(seed + 2, 200)],
        "farley" => vec![check_farley(seed, 200, 8)],
        "phi" => vec![
            check_farley(seed, 200, 8),
            check_endpoints(seed + 1, 200),
            check_hermitian(seed + 2, 200),
            check_representative_independence(seed + 3, 200),
            check_matched_structure(seed + 4, 200),
        ],
        "bounds" => vec![check_decay_chain(seed, 20, 2..=20, &[0.5, 0.8])],
        "psd" => vec![check_psd(seed, 50, 12)],
        "wreath" => vec![check_wreath_bounds(seed, 200, 10), check_wreath_agreement(seed + 1, 200)],
        "all" => {
            let mut all = Vec::new();
            for s in ["group-laws", "oracle", "phi", "bounds", "psd", "wreath"] {
                all.extend(run_suite(s, seed)?.checks);
            }
            all
        }
        other => return Err(Error::Unsupported(format!("unknown suite '{other}'; expected one of {}", SUITES.join(", ")))),
    };
    Ok(SuiteReport { suite: name.to_string(), checks })
}
