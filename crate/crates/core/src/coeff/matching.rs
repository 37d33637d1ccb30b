//! Enumeration of matched state pairs `(τ, τ')` with `σ·W(t,τ) = W(s,τ')`.
//!
//! The default engine walks the numerator in preorder, assigning `τ` and
//! checking each leaf as soon as its path is decided. A numerator word is the
//! suffix of its leaf path starting at the first 1-vertex, so a match forces
//! the denominator path to end in a suffix with the same edge directions and
//! the same `τ`-values, and to be all-zero above it. Those forced values
//! propagate into `τ'` and conflicts prune the search.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::forest::{ForestLayout, LayoutEvent};
use crate::perm::Perm;
use crate::words::{words_on_layout, State, Word};

/// Vertex decisions below this depth are split into independent subproblems.
const SPLIT_DEPTH: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Match {
    pub tau: State,
    pub tau_prime: State,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MatchStrategy {
    #[default]
    Backtrack,
    HashJoin,
}

pub(crate) fn check_problem(num: &ForestLayout, perm: &Perm, den: &ForestLayout) -> Result<()> {
    if num.arity != 2 || den.arity != 2 {
        return Err(Error::Unsupported("matched states need binary forests".into()));
    }
    if perm.degree() != num.leaf_count() || perm.degree() != den.leaf_count() {
        return Err(Error::DegreeMismatch { expected: num.leaf_count(), got: perm.degree() });
    }
    if num.vertex_count > 64 || den.vertex_count > 64 {
        return Err(Error::CapExceeded { n: num.leaf_count(), cap: 65 });
    }
    Ok(())
}

#[derive(Clone)]
struct Search<'a> {
    num: &'a ForestLayout,
    den: &'a ForestLayout,
    perm: &'a [usize],
    tau: u64,
    tau_prime: Vec<i8>,
    trail: Vec<usize>,
}

impl Search<'_> {
    fn assign(&mut self, v: usize, val: i8) -> bool {
        match self.tau_prime[v] {
            -1 => {
                self.tau_prime[v] = val;
                self.trail.push(v);
                true
            }
            x => x == val,
        }
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let v = self.trail.pop().expect("non-empty trail");
            self.tau_prime[v] = -1;
        }
    }

    fn check_leaf(&mut self, j: usize) -> bool {
        let p1 = &self.num.leaf_paths[j].edges;
        let p2 = &self.den.leaf_paths[self.perm[j]].edges;
        let r1 = p1.iter().position(|e| self.tau >> e.vertex & 1 == 1).unwrap_or(p1.len());
        let len = p1.len() - r1;
        if len > p2.len() {
            return false;
        }
        let r2 = p2.len() - len;
        for e in &p2[..r2] {
            if !self.assign(e.vertex, 0) {
                return false;
            }
        }
        for (a, b) in p1[r1..].iter().zip(&p2[r2..]) {
            if a.child != b.child || !self.assign(b.vertex, (self.tau >> a.vertex & 1) as i8) {
                return false;
            }
        }
        true
    }

    fn emit(&self) -> Match {
        let mut bits = 0u64;
        for (v, &x) in self.tau_prime.iter().enumerate() {
            debug_assert!(x >= 0, "denominator vertex {v} left undecided");
            if x == 1 {
                bits |= 1 << v;
            }
        }
        Match {
            tau: State::new(self.num.vertex_count, self.tau).expect("fits"),
            tau_prime: State::new(self.den.vertex_count, bits).expect("fits"),
        }
    }

    fn run<T, I, F, R>(&mut self, idx: usize, depth: usize, acc: &mut T, ops: &Ops<I, F, R>)
    where
        T: Send,
        I: Fn() -> T + Sync,
        F: Fn(&mut T, &Match) + Sync,
        R: Fn(T, T) -> T + Sync,
    {
        let Some(&event) = self.num.events.get(idx) else {
            (ops.fold)(acc, &self.emit());
            return;
        };
        match event {
            LayoutEvent::Leaf(j) => {
                let mark = self.trail.len();
                if self.check_leaf(j) {
                    self.run(idx + 1, depth, acc, ops);
                }
                self.undo(mark);
            }
            LayoutEvent::Vertex(v) if depth < SPLIT_DEPTH => {
                let mut zero = self.clone();
                let mut one = self.clone();
                one.tau |= 1 << v;
                let run_one = |s: &mut Search<'_>| {
                    let mut a = (ops.identity)();
                    s.run(idx + 1, depth + 1, &mut a, ops);
                    a
                };
                let (a, b) = if ops.parallel {
                    rayon::join(|| run_one(&mut zero), || run_one(&mut one))
                } else {
                    (run_one(&mut zero), run_one(&mut one))
                };
                let prev = std::mem::replace(acc, (ops.identity)());
                *acc = (ops.reduce)((ops.reduce)(prev, a), b);
            }
            LayoutEvent::Vertex(v) => {
                self.run(idx + 1, depth + 1, acc, ops);
                self.tau |= 1 << v;
                self.run(idx + 1, depth + 1, acc, ops);
                self.tau &= !(1 << v);
            }
        }
    }
}

struct Ops<I, F, R> {
    identity: I,
    fold: F,
    reduce: R,
    parallel: bool,
}

/// Folds over all matched pairs. The combination tree is fixed, so results
/// do not depend on the number of worker threads.
pub fn fold_matches<T, I, F, R>(
    num: &ForestLayout,
    perm: &Perm,
    den: &ForestLayout,
    identity: I,
    fold: F,
    reduce: R,
) -> Result<T>
where
    T: Send,
    I: Fn() -> T + Sync,
    F: Fn(&mut T, &Match) + Sync,
    R: Fn(T, T) -> T + Sync,
{
    check_problem(num, perm, den)?;
    let ops = Ops { identity, fold, reduce, parallel: rayon::current_num_threads() > 1 };
    let mut search = Search {
        num,
        den,
        perm: perm.images(),
        tau: 0,
        tau_prime: vec![-1; den.vertex_count],
        trail: Vec::new(),
    };
    let mut acc = (ops.identity)();
    search.run(0, 0, &mut acc, &ops);
    Ok(acc)
}

/// All matched pairs, sorted.
pub fn collect_matches(num: &ForestLayout, perm: &Perm, den: &ForestLayout, strategy: MatchStrategy) -> Result<Vec<Match>> {
    let mut out = match strategy {
        MatchStrategy::Backtrack => fold_matches(
            num,
            perm,
            den,
            Vec::new,
            |acc: &mut Vec<Match>, m| acc.push(*m),
            |mut a, b| {
                a.extend(b);
                a
            },
        )?,
        MatchStrategy::HashJoin => hash_join(num, perm, den)?,
    };
    out.sort();
    Ok(out)
}

/// Indexes every denominator word list, then probes with permuted numerator lists.
fn hash_join(num: &ForestLayout, perm: &Perm, den: &ForestLayout) -> Result<Vec<Match>> {
    check_problem(num, perm, den)?;
    let mut index: HashMap<Vec<Word>, u64> = HashMap::new();
    for bits in 0..1u64 << den.vertex_count {
        let s = State::new(den.vertex_count, bits)?;
        index.insert(words_on_layout(den, &s)?, bits);
    }
    let mut out = Vec::new();
    for bits in 0..1u64 << num.vertex_count {
        let s = State::new(num.vertex_count, bits)?;
        let words = words_on_layout(num, &s)?;
        let mut target = vec![Word::empty(); words.len()];
        for (j, w) in words.into_iter().enumerate() {
            target[perm.apply(j)] = w;
        }
        if let Some(&b) = index.get(&target) {
            out.push(Match { tau: s, tau_prime: State::new(den.vertex_count, b)? });
        }
    }
    Ok(out)
}
