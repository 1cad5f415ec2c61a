//! Bounded exhaustive verification suites.
//!
//! Every suite walks a finite family of inputs, counts the checks it makes
//! and keeps the smallest failing input, ordered by size and then by its
//! printed form. Reports do not depend on the execution strategy.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exec::Exec;
use crate::insertion::{enumerate_hook_set, mixed_insert_word, relation_instances, relation_neighbors, Word};
use crate::mixed_jdt::{audit_rectification, check_rect_equals_insertion, mixed_rectify_traced, staircase};
use crate::sagan_worley::{
    pow2, rectification_counts, skew_plactic_schur_p, sw_rectify_with, CornerOrder, Dyadic,
};
use crate::shapes::{SkewShape, StrictPartition};
use crate::symfunc::{b_coeffs, commutative_image, schur_p_poly, schur_q_poly};
use crate::tableau::{enumerate_tableaux, print_tableau, Mode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    MixedJdt,
    PlacticRelations,
    PlacticCompleteness,
    SwMarker,
    SwCount,
    Cho,
    QpIdentity,
    FreeSchur,
    Invariants,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown suite {0:?}")]
pub struct UnknownSuite(pub String);

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::MixedJdt,
        Suite::PlacticRelations,
        Suite::PlacticCompleteness,
        Suite::SwMarker,
        Suite::SwCount,
        Suite::Cho,
        Suite::QpIdentity,
        Suite::FreeSchur,
        Suite::Invariants,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::MixedJdt => "mixed-jdt",
            Suite::PlacticRelations => "plactic-relations",
            Suite::PlacticCompleteness => "plactic-completeness",
            Suite::SwMarker => "sw-marker",
            Suite::SwCount => "sw-count",
            Suite::Cho => "cho",
            Suite::QpIdentity => "qp-identity",
            Suite::FreeSchur => "free-schur",
            Suite::Invariants => "invariants",
        }
    }

    fn default_n(self) -> u32 {
        match self {
            Suite::PlacticRelations => 5,
            _ => 3,
        }
    }

    fn default_len(self) -> usize {
        match self {
            Suite::PlacticCompleteness => 5,
            _ => 6,
        }
    }

    fn default_max_size(self) -> u32 {
        match self {
            Suite::FreeSchur => 5,
            _ => 6,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

/// Bounds for a suite run; `None` picks the suite's default.
///
/// `n` is the largest letter or value, `len` the longest word and `max_size`
/// the largest shape size.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerifyConfig {
    pub n: Option<u32>,
    pub len: Option<usize>,
    pub max_size: Option<u32>,
    pub exec: Exec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub tested: u64,
    pub failed: u64,
    /// The smallest failing input, printed so that it can be replayed.
    pub counterexample: Option<String>,
    pub detail: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: tested {}, failed {}", self.suite, self.tested, self.failed)?;
        if let Some(c) = &self.counterexample {
            writeln!(f, "counterexample:\n{}", c.trim_end())?;
        }
        if let Some(d) = &self.detail {
            writeln!(f, "detail: {d}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Failure {
    size: usize,
    input: String,
    detail: String,
}

impl Failure {
    fn new(size: usize, input: impl Into<String>, detail: impl Into<String>) -> Self {
        Failure {
            size,
            input: input.into(),
            detail: detail.into(),
        }
    }
}

/// Result of checking one work item, which may bundle several checks.
#[derive(Debug, Default)]
struct Outcome {
    tested: u64,
    failed: u64,
    worst: Option<Failure>,
}

impl Outcome {
    fn pass() -> Self {
        Outcome {
            tested: 1,
            ..Outcome::default()
        }
    }

    fn fail(f: Failure) -> Self {
        Outcome {
            tested: 1,
            failed: 1,
            worst: Some(f),
        }
    }

    fn check(ok: bool, f: impl FnOnce() -> Failure) -> Self {
        if ok {
            Outcome::pass()
        } else {
            Outcome::fail(f())
        }
    }

    fn merge(mut self, other: Outcome) -> Self {
        self.tested += other.tested;
        self.failed += other.failed;
        self.worst = match (self.worst, other.worst) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self
    }
}

fn sweep<T, F>(suite: Suite, exec: Exec, items: &[T], check: F) -> SuiteReport
where
    T: Sync,
    F: Fn(&T) -> Outcome + Sync + Send,
{
    let total = exec
        .map(items, check)
        .into_iter()
        .fold(Outcome::default(), Outcome::merge);
    SuiteReport {
        suite,
        tested: total.tested,
        failed: total.failed,
        counterexample: total.worst.as_ref().map(|f| f.input.clone()),
        detail: total.worst.map(|f| f.detail),
    }
}

pub fn run_suite(suite: Suite, config: &VerifyConfig) -> SuiteReport {
    let n = config.n.unwrap_or(suite.default_n());
    let len = config.len.unwrap_or(suite.default_len());
    let max_size = config.max_size.unwrap_or(suite.default_max_size());
    let exec = config.exec;
    match suite {
        Suite::MixedJdt => mixed_jdt(exec, n, len),
        Suite::Invariants => invariants(exec, n, len),
        Suite::PlacticRelations => plactic_relations(exec, n),
        Suite::PlacticCompleteness => plactic_completeness(exec, n, len),
        Suite::SwMarker => sw_marker(exec, n, max_size),
        Suite::SwCount => sw_count(exec, n, max_size),
        Suite::Cho => cho(exec, n, max_size),
        Suite::QpIdentity => qp_identity(exec, n, max_size),
        Suite::FreeSchur => free_schur(exec, n, max_size),
    }
}

fn words(n: u32, len: usize) -> Vec<Word> {
    Word::all_up_to(n, len).collect()
}

fn mixed_jdt(exec: Exec, n: u32, len: usize) -> SuiteReport {
    sweep(Suite::MixedJdt, exec, &words(n, len), |w| match check_rect_equals_insertion(&w.0) {
        Ok(ok) => Outcome::check(ok, || Failure::new(w.len(), w.to_string(), "rectification differs from insertion")),
        Err(e) => Outcome::fail(Failure::new(w.len(), w.to_string(), e.to_string())),
    })
}

fn invariants(exec: Exec, n: u32, len: usize) -> SuiteReport {
    sweep(Suite::Invariants, exec, &words(n, len), |w| {
        let result = mixed_rectify_traced(&staircase(&w.0))
            .map_err(|e| e.to_string())
            .and_then(|rec| audit_rectification(&rec).map_err(|e| e.to_string()));
        match result {
            Ok(()) => Outcome::pass(),
            Err(e) => Outcome::fail(Failure::new(w.len(), w.to_string(), e)),
        }
    })
}

/// Each relation instance over `1..=n`, padded by at most one letter from
/// `1..=4` on either side.
fn plactic_relations(exec: Exec, n: u32) -> SuiteReport {
    let contexts: Vec<Vec<u32>> = std::iter::once(vec![]).chain((1..=4).map(|a| vec![a])).collect();
    let mut items = Vec::new();
    for (name, l, r) in relation_instances(n) {
        for left in &contexts {
            for right in &contexts {
                let pad = |w: &Word| Word([left.as_slice(), &w.0, right.as_slice()].concat());
                items.push((name, pad(&l), pad(&r)));
            }
        }
    }
    sweep(Suite::PlacticRelations, exec, &items, |(name, u, v)| {
        Outcome::check(mixed_insert_word(&u.0) == mixed_insert_word(&v.0), || {
            Failure::new(u.len(), format!("{u} ~ {v}"), format!("family {name}"))
        })
    })
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut i: usize) -> usize {
        while self.0[i] != i {
            self.0[i] = self.0[self.0[i]];
            i = self.0[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

/// Insertion classes and relation components coincide on each length.
///
/// `tested` counts ordered word pairs of equal length: the two partitions
/// agree exactly when every pair is judged the same way by both.
fn plactic_completeness(exec: Exec, n: u32, len: usize) -> SuiteReport {
    let mut total = Outcome::default();
    for k in 1..=len {
        let ws: Vec<Word> = Word::all(n, k).collect();
        let index: HashMap<&Word, usize> = ws.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let tableaux = exec.map(&ws, |w| mixed_insert_word(&w.0));
        let neighbours = exec.map(&ws, |w| relation_neighbors(&w.0));
        let mut uf = UnionFind((0..ws.len()).collect());
        for (i, ns) in neighbours.iter().enumerate() {
            for v in ns {
                uf.union(i, index[v]);
            }
        }
        let mut class_of = HashMap::new();
        let mut class_rep = Vec::with_capacity(ws.len());
        for (i, t) in tableaux.iter().enumerate() {
            class_rep.push(*class_of.entry(t).or_insert(i));
        }
        let component: Vec<usize> = (0..ws.len()).map(|i| uf.find(i)).collect();
        // both representatives are the least index of their block
        let pairs = (ws.len() as u64).pow(2);
        let bad: Vec<usize> = (0..ws.len()).filter(|&i| class_rep[i] != component[i]).collect();
        let mut outcome = Outcome {
            tested: pairs,
            ..Outcome::default()
        };
        if let Some(&i) = bad.first() {
            let j = if class_rep[i] < i { class_rep[i] } else { component[i] };
            let (u, v) = (&ws[j], &ws[i]);
            let detail = if tableaux[i] == tableaux[j] {
                "equal insertion tableaux but not connected by relations"
            } else {
                "connected by relations but insertion tableaux differ"
            };
            let failed_pairs = (0..ws.len())
                .flat_map(|a| (0..ws.len()).map(move |b| (a, b)))
                .filter(|&(a, b)| (class_rep[a] == class_rep[b]) != (component[a] == component[b]))
                .count() as u64;
            outcome.failed = failed_pairs;
            outcome.worst = Some(Failure::new(k, format!("{u} | {v}"), detail));
        }
        total = total.merge(outcome);
    }
    SuiteReport {
        suite: Suite::PlacticCompleteness,
        tested: total.tested,
        failed: total.failed,
        counterexample: total.worst.as_ref().map(|f| f.input.clone()),
        detail: total.worst.map(|f| f.detail),
    }
}

/// Every skew shape `ν/μ` with `|ν| ≤ max_size` and `μ ⊊ ν`.
pub fn skew_shapes(max_size: u32) -> Vec<SkewShape> {
    let mut out = Vec::new();
    for size in 1..=max_size {
        for nu in StrictPartition::all_of_size(size) {
            for mu in nu.subpartitions() {
                if mu != nu {
                    out.push(SkewShape::new(nu.clone(), mu).expect("subpartition"));
                }
            }
        }
    }
    out
}

fn shape_jobs(n: u32, max_size: u32) -> Vec<(SkewShape, u32)> {
    skew_shapes(max_size)
        .into_iter()
        .flat_map(|s| (1..=n).map(move |k| (s.clone(), k)))
        .collect()
}

fn render(t: &crate::tableau::ShiftedTableau) -> String {
    print_tableau(t)
}

/// Marker conservation on every slide, plus agreement of two corner orders.
fn sw_marker(exec: Exec, n: u32, max_size: u32) -> SuiteReport {
    sweep(Suite::SwMarker, exec, &shape_jobs(n, max_size), |(shape, k)| {
        enumerate_tableaux(shape, *k, Mode::QTableau)
            .map(|t| {
                let fail = |detail: String| Failure::new(t.len(), render(&t), detail);
                match sw_rectify_with(&t, CornerOrder::LowestFirst, true) {
                    Err(e) => Outcome::fail(fail(e.to_string())),
                    Ok(r) => {
                        let other = sw_rectify_with(&t, CornerOrder::HighestFirst, true);
                        match other {
                            Ok(s) if s == r => Outcome::pass(),
                            Ok(_) => Outcome::fail(fail("corner orders disagree".into())),
                            Err(e) => Outcome::fail(fail(e.to_string())),
                        }
                    }
                }
            })
            .fold(Outcome::default(), Outcome::merge)
    })
}

fn b_lookup(shape: &SkewShape) -> BTreeMap<StrictPartition, BigInt> {
    b_coeffs(shape.outer(), shape.inner()).expect("b coefficients of a valid shape")
}

fn shapes_of_size(size: usize) -> Vec<StrictPartition> {
    StrictPartition::all_of_size(size as u32)
}

/// Preimage counts under rectification against the b coefficients, for every
/// straight Q-tableau of the right size.
fn sw_count(exec: Exec, n: u32, max_size: u32) -> SuiteReport {
    sweep(Suite::SwCount, exec, &shape_jobs(n, max_size), |(shape, k)| {
        let counts = rectification_counts(shape, *k, Exec::Sequential);
        let b = b_lookup(shape);
        let mut out = Outcome::default();
        for lambda in shapes_of_size(shape.size()) {
            let want = b.get(&lambda).cloned().unwrap_or_default();
            for t in enumerate_tableaux(&SkewShape::straight(lambda.clone()), *k, Mode::QTableau) {
                let got = BigInt::from(counts.get(&t).copied().unwrap_or(0));
                out = out.merge(Outcome::check(got == want, || {
                    Failure::new(
                        shape.size(),
                        format!("{shape} -n {k}\n{}", render(&t)),
                        format!("{got} preimages, b = {want}"),
                    )
                }));
            }
        }
        out
    })
}

/// Coefficients of the skew plactic P-function against
/// `2^{ℓ(λ)} b / 2^{diag}`.
fn cho(exec: Exec, n: u32, max_size: u32) -> SuiteReport {
    sweep(Suite::Cho, exec, &shape_jobs(n, max_size), |(shape, k)| {
        let p = skew_plactic_schur_p(shape, *k, Exec::Sequential);
        let b = b_lookup(shape);
        let diag = shape.diag() as u32;
        let mut out = Outcome::default();
        let mut seen = 0;
        for lambda in shapes_of_size(shape.size()) {
            let bl = b.get(&lambda).cloned().unwrap_or_default();
            let want = Dyadic::new(bl * pow2(lambda.len() as u32), diag);
            for t in enumerate_tableaux(&SkewShape::straight(lambda.clone()), *k, Mode::Semistandard) {
                let got = p.coefficient(&t);
                if !got.is_zero() {
                    seen += 1;
                }
                out = out.merge(Outcome::check(got == want, || {
                    Failure::new(
                        shape.size(),
                        format!("{shape} -n {k}\n{}", render(&t)),
                        format!("coefficient {got}, expected {want}"),
                    )
                }));
            }
        }
        // no class outside the enumerated straight shapes
        out.merge(Outcome::check(seen == p.len(), || {
            Failure::new(shape.size(), format!("{shape} -n {k}"), "unexpected classes in the sum")
        }))
    })
}

fn qp_identity(exec: Exec, n: u32, max_size: u32) -> SuiteReport {
    let mut jobs = shape_jobs(n, max_size);
    jobs.retain(|(s, _)| !s.inner().is_empty());
    for size in 1..=max_size {
        for lambda in StrictPartition::all_of_size(size) {
            jobs.extend((1..=n).map(|k| (SkewShape::straight(lambda.clone()), k)));
        }
    }
    sweep(Suite::QpIdentity, exec, &jobs, |(shape, k)| {
        Outcome::check(schur_q_poly(shape, *k as usize).is_ok(), || {
            Failure::new(shape.size(), format!("{shape} -n {k}"), "Q-tableau count differs from 2^diag P")
        })
    })
}

fn free_schur(exec: Exec, n: u32, max_size: u32) -> SuiteReport {
    let mut jobs = Vec::new();
    for size in 1..=max_size {
        for lambda in StrictPartition::all_of_size(size) {
            jobs.extend((1..=n).map(|k| (lambda.clone(), k)));
        }
    }
    sweep(Suite::FreeSchur, exec, &jobs, |(lambda, k)| {
        let image = commutative_image(&enumerate_hook_set(lambda, *k), *k as usize);
        let p = schur_p_poly(&SkewShape::straight(lambda.clone()), *k as usize);
        Outcome::check(image == p, || {
            Failure::new(lambda.size() as usize, format!("{lambda} -n {k}"), "hook words differ from P")
        })
    })
}
