//! Machine checks for the degree identities, the upper bounds, the
//! tightness results and the one-vertex extension, plus exhaustive and
//! sampled sweeps.
//!
//! Every check is an exact integer comparison. A [`SuiteReport`] keeps, per
//! named check, how often it was evaluated and failed together with the
//! first failing instance (label plus the full `.trn` text for replay).
//! Reports merge associatively, and sweeps merge them in instance order, so
//! results do not depend on the worker count.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::constructions::{
    dr_pair_profile_check, dr_to_skew_hadamard, is_doubly_regular, lakhlifi_extend,
    lemma_lakhlifi_cases, near_regular_partition, check_c1_c2, paley_tournament,
    random_tournament, skew_hadamard_to_dr,
};
use crate::error::{Error, Result};
use crate::format::{parse_matrix_text, to_matrix_text, to_trn};
use crate::modsimp::{
    arrow_simplicity_with, direct_oracle, is_module, is_simple, SearchOptions, SimplicityReport,
    ORACLE_MAX_N,
};
use crate::tournament::{Regularity, Tournament, VertexSet};
use crate::constructions::SkewHadamard;

/// Largest order enumerated exhaustively (`2^15` labelled tournaments).
pub const EXHAUSTIVE_MAX_N: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub instance: String,
    pub detail: String,
    /// The offending tournament in `.trn` form.
    pub tournament: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub evaluated: u64,
    pub failed: u64,
    pub first_failure: Option<Failure>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub instances: u64,
    pub checks: Vec<CheckOutcome>,
    /// Histogram of exact arrow-simplicity values, when computed.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub s_distribution: BTreeMap<usize, u64>,
}

impl SuiteReport {
    /// An empty report with `checks` declared up front, which fixes their
    /// order regardless of which ones get evaluated first.
    pub fn new(suite: &str, checks: &[&str]) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            instances: 0,
            checks: checks
                .iter()
                .map(|name| CheckOutcome {
                    name: name.to_string(),
                    evaluated: 0,
                    failed: 0,
                    first_failure: None,
                })
                .collect(),
            s_distribution: BTreeMap::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn check_named(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// The first failing check, in declaration order.
    pub fn first_failure(&self) -> Option<(&str, &Failure)> {
        self.checks
            .iter()
            .find_map(|c| c.first_failure.as_ref().map(|f| (c.name.as_str(), f)))
    }

    fn outcome_mut(&mut self, name: &str) -> &mut CheckOutcome {
        let pos = match self.checks.iter().position(|c| c.name == name) {
            Some(pos) => pos,
            None => {
                self.checks.push(CheckOutcome {
                    name: name.to_string(),
                    evaluated: 0,
                    failed: 0,
                    first_failure: None,
                });
                self.checks.len() - 1
            }
        };
        &mut self.checks[pos]
    }

    pub fn record(
        &mut self,
        name: &str,
        instance: &str,
        t: &Tournament,
        ok: bool,
        detail: impl FnOnce() -> String,
    ) {
        let outcome = self.outcome_mut(name);
        outcome.evaluated += 1;
        if !ok {
            outcome.failed += 1;
            if outcome.first_failure.is_none() {
                outcome.first_failure = Some(Failure {
                    instance: instance.to_string(),
                    detail: detail(),
                    tournament: to_trn(t),
                });
            }
        }
    }

    /// Folds `other` into `self`; `self` is taken to come first.
    pub fn merge(&mut self, other: SuiteReport) {
        self.instances += other.instances;
        for c in other.checks {
            let mine = self.outcome_mut(&c.name);
            mine.evaluated += c.evaluated;
            mine.failed += c.failed;
            if mine.first_failure.is_none() {
                mine.first_failure = c.first_failure;
            }
        }
        for (s, count) in other.s_distribution {
            *self.s_distribution.entry(s).or_default() += count;
        }
    }

    /// Merges check counters from a sub-suite without counting its
    /// instances again.
    fn absorb(&mut self, mut other: SuiteReport) {
        other.instances = 0;
        self.merge(other);
    }
}

pub const IDENTITY_CHECKS: [&str; 7] = [
    "degree_sum",
    "separator_partition",
    "in_out_difference",
    "separator_double_count",
    "in_pair_double_count",
    "out_pair_double_count",
    "regular_pair_balance",
];

/// Degree sum, the four-way split of each pair, the in/out pair difference
/// and the three double-counting identities.
pub fn identity_suite(t: &Tournament, label: &str) -> Result<SuiteReport> {
    let n = t.n();
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    let mut r = SuiteReport::new("identities", &IDENTITY_CHECKS);
    r.instances = 1;
    let out: Vec<i64> = (0..n).map(|x| t.out_degree(x) as i64).collect();
    let inn: Vec<i64> = (0..n).map(|x| t.in_degree(x) as i64).collect();
    let half = (n * (n - 1) / 2) as i64;
    let (sum_out, sum_in) = (out.iter().sum::<i64>(), inn.iter().sum::<i64>());
    r.record("degree_sum", label, t, sum_out == half && sum_in == half, || {
        format!("out-degree sum {sum_out}, in-degree sum {sum_in}, expected {half}")
    });

    let bad_split = t.pairs().find(|&(x, y)| {
        let s = t.pair_stats_unchecked(x, y);
        s.separators + s.in_pair + s.out_pair != n - 2
            || s.out_pair + s.in_pair + s.out_in + s.in_out != n - 2
    });
    r.record("separator_partition", label, t, bad_split.is_none(), || {
        format!("pair {bad_split:?} does not split the other {} vertices", n - 2)
    });

    let bad_difference = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .find(|&(x, y)| {
            let s = t.pair_stats_unchecked(x, y);
            s.in_pair as i64 - s.out_pair as i64 != inn[x] - out[y]
        });
    r.record("in_out_difference", label, t, bad_difference.is_none(), || {
        format!("ordered pair {bad_difference:?} breaks d-(x,y) - d+(x,y) = d-(x) - d+(y)")
    });

    let (mut sep, mut in_pairs, mut out_pairs) = (0i64, 0i64, 0i64);
    for (x, y) in t.pairs() {
        let s = t.pair_stats_unchecked(x, y);
        sep += s.separators as i64;
        in_pairs += s.in_pair as i64;
        out_pairs += s.out_pair as i64;
    }
    let choose2 = |d: i64| d * (d - 1) / 2;
    let sep_rhs: i64 = (0..n).map(|z| out[z] * inn[z]).sum();
    let in_rhs: i64 = out.iter().map(|&d| choose2(d)).sum();
    let out_rhs: i64 = inn.iter().map(|&d| choose2(d)).sum();
    r.record("separator_double_count", label, t, sep == sep_rhs, || {
        format!("sum of separators {sep} != sum d+ d- {sep_rhs}")
    });
    r.record("in_pair_double_count", label, t, in_pairs == in_rhs, || {
        format!("sum |f(x)∩f(y)| {in_pairs} != sum C(d+,2) {in_rhs}")
    });
    r.record("out_pair_double_count", label, t, out_pairs == out_rhs, || {
        format!("sum |v(x)∩v(y)| {out_pairs} != sum C(d-,2) {out_rhs}")
    });

    if t.regularity_class()? == Regularity::Regular {
        let unbalanced = t.pairs().find(|&(x, y)| {
            let s = t.pair_stats_unchecked(x, y);
            s.in_pair != s.out_pair
        });
        r.record("regular_pair_balance", label, t, unbalanced.is_none(), || {
            format!("regular tournament with unbalanced pair {unbalanced:?}")
        });
    }
    Ok(r)
}

pub const BOUND_CHECKS: [&str; 8] = [
    "min_degree_bound",
    "separator_bound",
    "s_le_min_degree",
    "s_le_min_separators",
    "s_le_theorem_bound",
    "maximum_iff_doubly_regular",
    "witness_valid",
    "report_consistent",
];

/// Checks an exact [`SimplicityReport`] against the upper bounds. The
/// degree minima are recomputed from `t`.
pub fn bound_suite(t: &Tournament, report: &SimplicityReport, label: &str) -> Result<SuiteReport> {
    let n = t.n();
    let profile = t.global_minima()?;
    let mut r = SuiteReport::new("bounds", &BOUND_CHECKS);
    r.instances = 1;
    *r.s_distribution.entry(report.s).or_default() += 1;
    let half = (n - 1) / 2;
    let (delta, sep) = (profile.min_degree, profile.min_separators);
    let s = report.s;
    r.record("report_consistent", label, t, report.n == n
        && report.min_degree == delta
        && report.min_separators == sep, || {
        format!("report says n={}, min degree {}, min separators {}", report.n, report.min_degree, report.min_separators)
    });
    r.record("min_degree_bound", label, t, delta <= half, || {
        format!("min degree {delta} > {half}")
    });
    r.record("separator_bound", label, t, sep <= half, || {
        format!("min separators {sep} > {half}")
    });
    r.record("s_le_min_degree", label, t, s <= delta, || format!("s = {s} > {delta}"));
    r.record("s_le_min_separators", label, t, s <= sep, || format!("s = {s} > {sep}"));
    let bound = crate::modsimp::theorem_bound(n);
    r.record("s_le_theorem_bound", label, t, s <= bound, || {
        format!("s = {s} exceeds the bound {bound} for n = {n}")
    });
    if n % 4 == 3 {
        let dr = is_doubly_regular(t)?.is_some();
        r.record("maximum_iff_doubly_regular", label, t, (s == half) == dr, || {
            format!("s = {s}, (n-1)/2 = {half}, doubly regular = {dr}")
        });
    }
    let witness_ok = report.witness_arcs.len() == s
        && t.reverse_arcs(&report.witness_arcs)
            .map(|inv| is_module(&inv, report.witness_module))
            .unwrap_or(false)
        && (2..n).contains(&report.witness_module.len());
    r.record("witness_valid", label, t, witness_ok, || {
        format!(
            "module {} with {} reversed arcs does not certify s = {s}",
            report.witness_module,
            report.witness_arcs.len()
        )
    });
    Ok(r)
}

/// `Σ Δ(x,y) = 8k²(2k-1)` for a near-regular `4k`-tournament.
pub fn near_regular_4k_sum(t: &Tournament, label: &str) -> Result<SuiteReport> {
    let n = t.n();
    if n % 4 != 0 || n == 0 {
        return Err(Error::WrongShape(format!("order {n} is not a multiple of 4")));
    }
    if !matches!(t.regularity_class()?, Regularity::NearRegular { .. }) {
        return Err(Error::WrongShape("tournament is not near-regular".into()));
    }
    let k = (n / 4) as i64;
    let sum: i64 = t.pairs().map(|(x, y)| t.separators(x, y) as i64).sum();
    let want = 8 * k * k * (2 * k - 1);
    let mut r = SuiteReport::new("near_regular_4k_sum", &["separator_sum"]);
    r.instances = 1;
    r.record("separator_sum", label, t, sum == want, || {
        format!("separator sum {sum} != 8k^2(2k-1) = {want}")
    });
    Ok(r)
}

pub const CHARACTERIZE_CHECKS: [&str; 3] =
    ["s_le_2k", "maximum_implies_extension", "extension_implies_maximum"];

/// Both directions of: `s(T) = 2k` iff `T` is a doubly regular tournament
/// minus a vertex, witnessed by the one-vertex extension.
pub fn characterize_4k2(t: &Tournament, label: &str, opts: &SearchOptions) -> Result<SuiteReport> {
    let n = t.n();
    if n % 4 != 2 || n < 6 {
        return Err(Error::WrongShape(format!("order {n} is not 4k+2 with k >= 1")));
    }
    let k = (n - 2) / 4;
    let report = arrow_simplicity_with(t, opts)?;
    let s = report.s;
    let extension = near_regular_partition(t).and_then(|p| lakhlifi_extend(t, &p));
    let extends = extension.is_ok();
    let mut r = SuiteReport::new("characterize", &CHARACTERIZE_CHECKS);
    r.instances = 1;
    *r.s_distribution.entry(s).or_default() += 1;
    r.record("s_le_2k", label, t, s <= 2 * k, || format!("s = {s} > 2k = {}", 2 * k));
    if s == 2 * k {
        r.record("maximum_implies_extension", label, t, extends, || {
            format!("s = 2k = {s} but extension failed: {}", extension.as_ref().unwrap_err())
        });
    }
    if extends {
        r.record("extension_implies_maximum", label, t, s == 2 * k, || {
            format!("extension succeeded but s = {s} != 2k = {}", 2 * k)
        });
    }
    Ok(r)
}

/// Arrow-simplicity of a doubly regular `(4k+3)`-tournament minus two
/// vertices (`2k-1`) and minus three vertices (`2k-2`), over every choice
/// of deleted vertices of the Paley tournament of order `q`.
pub fn theorem9_suite(q: u64, opts: &SearchOptions) -> Result<SuiteReport> {
    let t = paley_tournament(q)?;
    let n = t.n();
    let k = (n - 3) / 4;
    if k < 2 {
        return Err(Error::WrongShape(format!("needs k >= 2, Paley-{q} has k = {k}")));
    }
    let mut deletions: Vec<VertexSet> = Vec::new();
    for size in [2usize, 3] {
        deletions.extend(
            (0..1u64 << n)
                .map(VertexSet::from_mask)
                .filter(|d| d.len() == size),
        );
    }
    deletions.sort();
    let checks = ["two_deletions", "three_deletions"];
    let inner = SearchOptions { workers: 1, ..opts.clone() };
    let mut report = run_indexed(deletions.len(), opts.workers, "theorem9", &checks, |i| {
        let deleted = deletions[i];
        let sub = t.delete_vertices(deleted)?;
        let label = format!("paley:q={q}:minus={deleted}");
        let rep = arrow_simplicity_with(&sub, &inner)?;
        let mut r = SuiteReport::new("theorem9", &checks);
        r.instances = 1;
        *r.s_distribution.entry(rep.s).or_default() += 1;
        let (name, want) = if deleted.len() == 2 {
            (checks[0], 2 * k - 1)
        } else {
            (checks[1], 2 * k - 2)
        };
        r.record(name, &label, &sub, rep.s == want, || {
            format!("s = {} but expected {want}", rep.s)
        });
        Ok(r)
    })?;
    report.suite = "theorem9".into();
    Ok(report)
}

pub const LAKHLIFI_CHECKS: [&str; 6] = [
    "near_regular",
    "separator_conditions",
    "lemma_cases",
    "extension_doubly_regular",
    "extension_separators",
    "extension_restores_deleted_vertex",
];

/// Deletes each vertex of the Paley tournament of order `q` and runs the
/// near-regular split, the separator conditions, the arc cases and the
/// extension back to a doubly regular tournament.
pub fn lakhlifi_suite(q: u64) -> Result<SuiteReport> {
    let t = paley_tournament(q)?;
    let n = t.n();
    let k = (n - 3) / 4;
    let mut r = SuiteReport::new("lakhlifi", &LAKHLIFI_CHECKS);
    for v in 0..n {
        let sub = t.delete_vertices(VertexSet::singleton(v))?;
        let label = format!("paley:q={q}:minus={{{v}}}");
        r.instances += 1;
        let partition = near_regular_partition(&sub);
        r.record("near_regular", &label, &sub, partition.is_ok(), || {
            format!("{:?}", partition.as_ref().unwrap_err())
        });
        let Ok(p) = partition else { continue };
        let conditions = check_c1_c2(&sub, &p)?;
        r.record("separator_conditions", &label, &sub, conditions, || {
            "(C1)/(C2) separator counts violated".into()
        });
        if !conditions {
            continue;
        }
        let cases = lemma_lakhlifi_cases(&sub, &p)?;
        r.record("lemma_cases", &label, &sub, cases, || "arc case values differ".into());
        let ext = lakhlifi_extend(&sub, &p);
        r.record("extension_doubly_regular", &label, &sub, ext.is_ok(), || {
            format!("{:?}", ext.as_ref().unwrap_err())
        });
        let Ok(ext) = ext else { continue };
        let omega = sub.n();
        let bad = (0..omega).find(|&z| ext.separators(omega, z) != 2 * k + 1);
        r.record("extension_separators", &label, &sub, bad.is_none(), || {
            format!("new vertex and {bad:?} do not have 2k+1 separators")
        });
        // moving v to the last label must give back exactly the extension
        let order: Vec<usize> = (0..n).filter(|&x| x != v).chain([v]).collect();
        let restored = Tournament::from_fn(n, |i, j| t.dominates(order[i], order[j]));
        r.record("extension_restores_deleted_vertex", &label, &sub, restored == ext, || {
            "extension differs from the original with the deleted vertex relabelled last".into()
        });
    }
    Ok(r)
}

pub const PALEY_CHECKS: [&str; 5] =
    ["regular", "doubly_regular", "pair_profile", "simple", "hadamard_bridge"];

/// Regularity, double regularity with `k = (q-3)/4`, the arc profile,
/// simplicity and the skew-Hadamard round trip for one Paley tournament.
pub fn paley_suite(q: u64) -> Result<SuiteReport> {
    let t = paley_tournament(q)?;
    let n = t.n();
    let label = format!("paley:q={q}");
    let mut r = SuiteReport::new("paley", &PALEY_CHECKS);
    r.instances = 1;
    r.record("regular", &label, &t, t.regularity_class()? == Regularity::Regular, || {
        "not regular".into()
    });
    let k = is_doubly_regular(&t)?;
    r.record("doubly_regular", &label, &t, k == Some((n - 3) / 4), || format!("k = {k:?}"));
    let profile = dr_pair_profile_check(&t).unwrap_or(false);
    r.record("pair_profile", &label, &t, profile, || "arc profile is not (k,k,k,k+1)".into());
    if n >= 7 {
        let simple = is_simple(&t)?;
        r.record("simple", &label, &t, simple, || "has a nontrivial module".into());
    }
    let bridge = hadamard_round_trip(&t);
    r.record("hadamard_bridge", &label, &t, bridge.is_ok(), || {
        format!("{}", bridge.as_ref().unwrap_err())
    });
    Ok(r)
}

/// Tournament -> matrix -> text -> matrix -> tournament, comparing the
/// `.trn` texts byte for byte.
pub fn hadamard_round_trip(t: &Tournament) -> Result<SkewHadamard> {
    let h = dr_to_skew_hadamard(t)?;
    let text = to_matrix_text(&h);
    let parsed = parse_matrix_text(&text)
        .map_err(|e| Error::InvariantViolation(e.to_string()))?;
    let reread = SkewHadamard::new(parsed)?;
    let back = skew_hadamard_to_dr(&reread)?;
    if to_trn(&back) != to_trn(t) {
        return Err(Error::InvariantViolation("round trip changed the tournament".into()));
    }
    Ok(h)
}

/// Which tournaments a sweep visits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum Population {
    /// Every labelled tournament on `n` vertices.
    Exhaustive { n: usize },
    /// `count` random tournaments; instance `i` has
    /// `n = n_min + i mod (n_max - n_min + 1)` and seed `seed + i`.
    Sample { n_min: usize, n_max: usize, count: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub population: Population,
    pub identities: bool,
    pub bounds: bool,
    /// Compare against [`direct_oracle`] where `n` allows.
    pub oracle: bool,
}

impl SweepConfig {
    pub fn new(population: Population) -> Self {
        SweepConfig { population, identities: true, bounds: true, oracle: true }
    }

    fn len(&self) -> usize {
        match self.population {
            Population::Exhaustive { n } => 1usize << (n * (n - 1) / 2),
            Population::Sample { count, .. } => count,
        }
    }

    /// The `i`-th instance and its replay label.
    pub fn instance(&self, i: usize) -> Result<(Tournament, String)> {
        match self.population {
            Population::Exhaustive { n } => Ok((
                Tournament::from_pair_bits(n, i as u64),
                format!("labeled:n={n}:index={i}"),
            )),
            Population::Sample { n_min, n_max, seed, .. } => {
                let n = n_min + i % (n_max - n_min + 1);
                let seed = seed.wrapping_add(i as u64);
                Ok((random_tournament(n, seed)?, format!("random:n={n}:seed={seed}")))
            }
        }
    }
}

/// Runs the configured suites over a population.
pub fn sweep(config: &SweepConfig, opts: &SearchOptions) -> Result<SuiteReport> {
    match config.population {
        Population::Exhaustive { n } => {
            if n > EXHAUSTIVE_MAX_N {
                return Err(Error::TooLargeForExhaustive { n, max: EXHAUSTIVE_MAX_N });
            }
            if n < 3 {
                return Err(Error::TooSmall { n, min: 3 });
            }
        }
        Population::Sample { n_min, n_max, .. } => {
            if n_min < 3 {
                return Err(Error::TooSmall { n: n_min, min: 3 });
            }
            if n_max < n_min {
                return Err(Error::WrongShape(format!("empty range {n_min}..={n_max}")));
            }
        }
    }
    let mut checks: Vec<&str> = Vec::new();
    if config.identities {
        checks.extend(IDENTITY_CHECKS);
    }
    if config.bounds {
        checks.extend(BOUND_CHECKS);
    }
    if config.oracle {
        checks.push("oracle_agrees");
    }
    let inner = SearchOptions { workers: 1, ..opts.clone() };
    run_indexed(config.len(), opts.workers, "sweep", &checks, |i| {
        let (t, label) = config.instance(i)?;
        let mut r = SuiteReport::new("sweep", &checks);
        r.instances = 1;
        if config.identities {
            r.absorb(identity_suite(&t, &label)?);
        }
        if config.bounds || config.oracle {
            let rep = arrow_simplicity_with(&t, &inner)?;
            if config.bounds {
                r.absorb(bound_suite(&t, &rep, &label)?);
            } else {
                *r.s_distribution.entry(rep.s).or_default() += 1;
            }
            if config.oracle && t.n() <= ORACLE_MAX_N {
                let oracle = direct_oracle(&t)?;
                r.record("oracle_agrees", &label, &t, oracle == rep.s, || {
                    format!("solver s = {}, oracle s = {oracle}", rep.s)
                });
            }
        }
        Ok(r)
    })
}

/// Evaluates `f` on `0..count` in contiguous chunks and merges the results
/// in index order.
fn run_indexed<F>(count: usize, workers: usize, suite: &str, checks: &[&str], f: F) -> Result<SuiteReport>
where
    F: Fn(usize) -> Result<SuiteReport> + Sync,
{
    let chunk_len = 64;
    let chunks = count.div_ceil(chunk_len);
    let run_chunk = |c: usize| -> Result<SuiteReport> {
        let mut acc = SuiteReport::new(suite, checks);
        for i in c * chunk_len..((c + 1) * chunk_len).min(count) {
            acc.merge(f(i)?);
        }
        Ok(acc)
    };
    let parts: Vec<Result<SuiteReport>> = map_chunks(chunks, workers, run_chunk);
    let mut total = SuiteReport::new(suite, checks);
    for part in parts {
        total.merge(part?);
    }
    Ok(total)
}

#[cfg(feature = "parallel")]
fn map_chunks<T: Send>(chunks: usize, workers: usize, f: impl Fn(usize) -> T + Sync) -> Vec<T> {
    use rayon::prelude::*;
    if workers <= 1 {
        return (0..chunks).map(f).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool");
    pool.install(|| (0..chunks).into_par_iter().map(&f).collect())
}

#[cfg(not(feature = "parallel"))]
fn map_chunks<T: Send>(chunks: usize, _workers: usize, f: impl Fn(usize) -> T + Sync) -> Vec<T> {
    (0..chunks).map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modsimp::arrow_simplicity;

    #[test]
    fn identities_on_small_fixtures() {
        let c3 = paley_tournament(3).unwrap();
        let r = identity_suite(&c3, "c3").unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.check_named("regular_pair_balance").unwrap().evaluated, 1);
        let r = identity_suite(&paley_tournament(7).unwrap(), "p7").unwrap();
        assert!(r.passed());
        let t = Tournament::transitive(6);
        let r = identity_suite(&t, "t6").unwrap();
        assert!(r.passed());
        assert_eq!(r.check_named("regular_pair_balance").unwrap().evaluated, 0);
    }

    #[test]
    fn failure_keeps_replayable_instance() {
        let t = paley_tournament(7).unwrap();
        let mut fake = arrow_simplicity(&t).unwrap();
        fake.s = 4;
        let r = bound_suite(&t, &fake, "p7-tampered").unwrap();
        assert!(!r.passed());
        let (name, failure) = r.first_failure().unwrap();
        assert_eq!(name, "s_le_min_degree");
        assert_eq!(failure.instance, "p7-tampered");
        assert_eq!(crate::format::parse_trn(&failure.tournament).unwrap(), t);
    }

    #[test]
    fn near_regular_sum_shapes() {
        assert!(matches!(
            near_regular_4k_sum(&paley_tournament(7).unwrap(), "p7"),
            Err(Error::WrongShape(_))
        ));
        // 0->1->2->3->0 with 0->2, 1->3: out-degrees 2,2,1,1
        let t = Tournament::from_fn(4, |i, j| !(i == 0 && j == 3));
        assert!(near_regular_4k_sum(&t, "nr4").unwrap().passed());
    }

    #[test]
    fn merge_is_order_preserving() {
        let t = Tournament::transitive(3);
        let mut a = SuiteReport::new("x", &["c"]);
        a.record("c", "first", &t, false, || "a".into());
        let mut b = SuiteReport::new("x", &["c"]);
        b.record("c", "second", &t, false, || "b".into());
        a.merge(b);
        let c = a.check_named("c").unwrap();
        assert_eq!((c.evaluated, c.failed), (2, 2));
        assert_eq!(c.first_failure.as_ref().unwrap().instance, "first");
    }

    #[test]
    fn exhaustive_cap() {
        let cfg = SweepConfig::new(Population::Exhaustive { n: 7 });
        assert_eq!(
            sweep(&cfg, &SearchOptions::default()),
            Err(Error::TooLargeForExhaustive { n: 7, max: 6 })
        );
    }
}
