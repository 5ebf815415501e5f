//! Modules, simplicity and the exact arrow-simplicity solver.
//!
//! The solver relies on the fact that, for a candidate module `C`, the
//! cheapest set of reversals making `C` a module only touches pairs between
//! `C` and its complement, and each outside vertex `x` contributes
//! `min(|f(x) ∩ C|, |v(x) ∩ C|)`. The arrow-simplicity is then the minimum
//! of that cost over all `C` with `2 <= |C| <= n - 1`.
//!
//! [`direct_oracle`] computes the same quantity from the definition alone
//! (enumerating arc subsets) and is used to cross-check the reduction.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tournament::{ArcSet, DegreeProfile, Tournament, VertexSet};

/// Default vertex cap for exact search.
pub const DEFAULT_EXACT_CAP: usize = 24;

/// Largest order accepted by [`direct_oracle`].
pub const ORACLE_MAX_N: usize = 5;

/// True iff every vertex outside `c` dominates all of `c` or is dominated
/// by all of `c`. Sets that are not contained in the vertex set are never
/// modules.
pub fn is_module(t: &Tournament, c: VertexSet) -> bool {
    let all = t.vertices();
    if !c.is_subset(all) {
        return false;
    }
    if c.len() <= 1 || c == all {
        return true;
    }
    let m = c.mask();
    all.difference(c).iter().all(|x| {
        let dominating = t.in_set(x).mask() & m;
        dominating == 0 || dominating == m
    })
}

/// The smallest module containing `x` and `y`.
pub fn minimal_module_closure(t: &Tournament, x: usize, y: usize) -> Result<VertexSet> {
    t.check_vertex(x)?;
    t.check_vertex(y)?;
    if x == y {
        return Err(Error::SameVertex(x));
    }
    Ok(closure(t, VertexSet::from_mask(1 << x | 1 << y)))
}

fn closure(t: &Tournament, seed: VertexSet) -> VertexSet {
    let all = t.vertices();
    let mut m = seed.mask();
    loop {
        // every separator of m belongs to any module containing m
        let separators: u64 = all
            .difference(VertexSet::from_mask(m))
            .iter()
            .filter(|&z| t.in_set(z).mask() & m != 0 && t.out_set(z).mask() & m != 0)
            .fold(0, |acc, z| acc | 1 << z);
        if separators == 0 {
            return VertexSet::from_mask(m);
        }
        m |= separators;
    }
}

/// The first nontrivial module in witness order (smallest size, then
/// lexicographic), found among the pair closures. `None` iff `t` is simple.
///
/// Every nontrivial module contains the closure of each of its pairs, so a
/// smallest nontrivial module is itself a pair closure.
pub fn nontrivial_module(t: &Tournament) -> Option<VertexSet> {
    let all = t.vertices();
    t.pairs()
        .map(|(x, y)| closure(t, VertexSet::from_mask(1 << x | 1 << y)))
        .filter(|&m| m != all)
        .min()
}

pub fn is_simple(t: &Tournament) -> Result<bool> {
    if t.n() < 3 {
        return Err(Error::TooSmall { n: t.n(), min: 3 });
    }
    Ok(nontrivial_module(t).is_none())
}

/// Brute-force counterpart of [`nontrivial_module`]: scans every subset.
/// Exponential; meant as a test oracle for small `n`.
pub fn nontrivial_module_scan(t: &Tournament) -> Option<VertexSet> {
    let n = t.n();
    assert!(n <= 20, "exhaustive module scan is limited to 20 vertices");
    (0..1u64 << n)
        .map(VertexSet::from_mask)
        .filter(|c| c.len() >= 2 && c.len() < n && is_module(t, *c))
        .min()
}

/// Which neighbourhood of an outside vertex gets its arcs reversed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// Edges go to `f(x) ∩ C`; after reversal `x` dominates `C`.
    In,
    /// Edges go to `v(x) ∩ C`; after reversal `C` dominates `x`.
    Out,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Attachment {
    pub vertex: usize,
    pub side: Side,
    pub neighbors: VertexSet,
}

/// A minimum decomposability graph for a candidate module: bipartite
/// between `module` and its complement, one attachment per outside vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposabilityGraph {
    pub module: VertexSet,
    pub attachments: Vec<Attachment>,
}

impl DecomposabilityGraph {
    pub fn edge_count(&self) -> usize {
        self.attachments.iter().map(|a| a.neighbors.len()).sum()
    }

    /// Unordered edges `{x, c}` as `(outside, inside)` pairs.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.attachments
            .iter()
            .flat_map(|a| a.neighbors.iter().map(move |c| (a.vertex, c)))
    }

    /// The arcs of the tournament that must be reversed, oriented as they
    /// are before reversal.
    pub fn reversal_arcs(&self) -> ArcSet {
        self.attachments
            .iter()
            .flat_map(|a| {
                a.neighbors.iter().map(move |c| match a.side {
                    Side::In => (c, a.vertex),
                    Side::Out => (a.vertex, c),
                })
            })
            .collect()
    }
}

fn check_candidate(t: &Tournament, size: usize) -> Result<()> {
    let max = t.n().saturating_sub(1);
    if size < 2 || size > max {
        return Err(Error::BadSize { size, max });
    }
    Ok(())
}

/// `s_C(T)` together with a decomposability graph realising it.
pub fn module_cost(t: &Tournament, c: VertexSet) -> Result<(usize, DecomposabilityGraph)> {
    t.check_set(c)?;
    check_candidate(t, c.len())?;
    let attachments: Vec<Attachment> = t
        .vertices()
        .difference(c)
        .iter()
        .map(|x| {
            let ins = t.in_set(x).intersection(c);
            let outs = t.out_set(x).intersection(c);
            if ins.len() <= outs.len() {
                Attachment { vertex: x, side: Side::In, neighbors: ins }
            } else {
                Attachment { vertex: x, side: Side::Out, neighbors: outs }
            }
        })
        .collect();
    let graph = DecomposabilityGraph { module: c, attachments };
    let cost = graph.edge_count();
    debug_assert!(is_module(&t.reverse_arcs(&graph.reversal_arcs()).unwrap(), c));
    Ok((cost, graph))
}

/// Best lower bound on `s_C(T)` over candidates of size `size`:
/// the minimum degree once `n - min_degree <= size`, the separator minimum
/// once `size <= min_separators`, otherwise zero.
pub fn sc_lower_bound(profile: &DegreeProfile, size: usize) -> Result<usize> {
    let n = profile.n();
    let max = n.saturating_sub(1);
    if size < 2 || size > max {
        return Err(Error::BadSize { size, max });
    }
    let mut bound = 0;
    if n - profile.min_degree <= size {
        bound = bound.max(profile.min_degree);
    }
    if size <= profile.min_separators {
        bound = bound.max(profile.min_separators);
    }
    Ok(bound)
}

/// Upper bound on `s(T)` by the residue of `n` mod 4:
/// `2k` for `4k+2`, `2k-1` for `4k+1`, `2k-2` for `4k` and `(n-1)/2` for `4k+3`.
pub fn theorem_bound(n: usize) -> usize {
    let k = n / 4;
    match n % 4 {
        0 => (2 * k).saturating_sub(2),
        1 => (2 * k).saturating_sub(1),
        2 => 2 * k,
        _ => (n - 1) / 2,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Use lower bounds and the incumbent to skip work.
    pub prune: bool,
    /// Worker threads; `1` runs on the calling thread.
    pub workers: usize,
    /// Largest `n` accepted by exact search.
    pub cap: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { prune: true, workers: 1, cap: DEFAULT_EXACT_CAP }
    }
}

/// Exact arrow-simplicity with a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicityReport {
    pub n: usize,
    pub s: usize,
    pub simple: bool,
    pub witness_module: VertexSet,
    pub witness_arcs: ArcSet,
    pub min_degree: usize,
    pub min_separators: usize,
    pub theorem_bound: usize,
    pub subsets_examined: u64,
    pub subsets_pruned: u64,
}

pub fn arrow_simplicity(t: &Tournament) -> Result<SimplicityReport> {
    arrow_simplicity_with(t, &SearchOptions::default())
}

/// Minimum of [`module_cost`] over all candidates, scanning sizes upward
/// and each size in lexicographic order. The witness is the first
/// candidate in that order attaining the minimum, so the result does not
/// depend on `opts.workers`.
pub fn arrow_simplicity_with(t: &Tournament, opts: &SearchOptions) -> Result<SimplicityReport> {
    let n = t.n();
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    if n > opts.cap {
        return Err(Error::TooLarge { n, cap: opts.cap });
    }
    let profile = t.global_minima()?;
    let mut report = SimplicityReport {
        n,
        s: 0,
        simple: false,
        witness_module: VertexSet::EMPTY,
        witness_arcs: ArcSet::default(),
        min_degree: profile.min_degree,
        min_separators: profile.min_separators,
        theorem_bound: theorem_bound(n),
        subsets_examined: 0,
        subsets_pruned: 0,
    };
    if let Some(module) = nontrivial_module(t) {
        report.witness_module = module;
        return Ok(report);
    }
    report.simple = true;

    let mut incumbent = if opts.prune {
        profile.min_degree.min(profile.min_separators) + 1
    } else {
        usize::MAX
    };
    let mut best: Option<(usize, u64)> = None;
    for size in 2..n {
        if opts.prune && sc_lower_bound(&profile, size)? >= incumbent {
            report.subsets_pruned += binomial(n, size);
            continue;
        }
        let prefixes = prefixes(n, size);
        let chunks = run_chunks(t, size, &prefixes, incumbent, opts);
        for chunk in chunks {
            report.subsets_examined += chunk.examined;
            report.subsets_pruned += chunk.abandoned;
            if let Some((cost, mask)) = chunk.best {
                if best.is_none_or(|(b, _)| cost < b) {
                    best = Some((cost, mask));
                }
            }
        }
        if opts.prune {
            if let Some((cost, _)) = best {
                incumbent = incumbent.min(cost);
            }
        }
    }

    let (s, mask) = best.expect("V minus a vertex is always a candidate");
    let (cost, graph) = module_cost(t, VertexSet::from_mask(mask))?;
    debug_assert_eq!(cost, s);
    report.s = s;
    report.witness_module = graph.module;
    report.witness_arcs = graph.reversal_arcs();
    Ok(report)
}

/// A block of candidates sharing their two smallest members (or the whole
/// set when `size == 2`).
#[derive(Clone, Copy, Debug)]
struct Prefix {
    mask: u64,
    next: usize,
}

fn prefixes(n: usize, size: usize) -> Vec<Prefix> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if n - b - 1 >= size - 2 {
                out.push(Prefix { mask: 1 << a | 1 << b, next: b + 1 });
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, Default)]
struct ChunkResult {
    best: Option<(usize, u64)>,
    examined: u64,
    abandoned: u64,
}

#[cfg(feature = "parallel")]
fn run_chunks(
    t: &Tournament,
    size: usize,
    prefixes: &[Prefix],
    incumbent: usize,
    opts: &SearchOptions,
) -> Vec<ChunkResult> {
    use rayon::prelude::*;
    if opts.workers <= 1 {
        return prefixes.iter().map(|p| search_chunk(t, size, *p, incumbent, opts.prune)).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers)
        .build()
        .expect("thread pool");
    pool.install(|| {
        prefixes
            .par_iter()
            .map(|p| search_chunk(t, size, *p, incumbent, opts.prune))
            .collect()
    })
}

#[cfg(not(feature = "parallel"))]
fn run_chunks(
    t: &Tournament,
    size: usize,
    prefixes: &[Prefix],
    incumbent: usize,
    opts: &SearchOptions,
) -> Vec<ChunkResult> {
    prefixes.iter().map(|p| search_chunk(t, size, *p, incumbent, opts.prune)).collect()
}

/// Scans the candidates extending `prefix` in lexicographic order. The
/// cutoff only depends on `incumbent` (frozen for the size class) and on
/// this chunk's own progress.
fn search_chunk(t: &Tournament, size: usize, prefix: Prefix, incumbent: usize, prune: bool) -> ChunkResult {
    let n = t.n();
    let full = VertexSet::full(n).mask();
    let rest = size - 2;
    let mut result = ChunkResult::default();
    let mut limit = incumbent;
    // idx holds the remaining members in increasing order
    let mut idx: Vec<usize> = (prefix.next..prefix.next + rest).collect();
    loop {
        let c = idx.iter().fold(prefix.mask, |m, &v| m | 1 << v);
        result.examined += 1;
        match candidate_cost(t, c, full & !c, size, limit) {
            Some(cost) => {
                if result.best.is_none_or(|(b, _)| cost < b) {
                    result.best = Some((cost, c));
                    if prune {
                        limit = cost;
                    }
                }
            }
            None => result.abandoned += 1,
        }
        // next combination of `rest` elements from prefix.next..n
        let mut i = rest;
        loop {
            if i == 0 {
                return result;
            }
            i -= 1;
            if idx[i] < n - rest + i {
                idx[i] += 1;
                for j in i + 1..rest {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// `s_C` for the mask `c`, or `None` once the partial sum reaches `limit`.
#[inline]
fn candidate_cost(t: &Tournament, c: u64, mut outside: u64, size: usize, limit: usize) -> Option<usize> {
    let mut sum = 0;
    while outside != 0 {
        let x = outside.trailing_zeros() as usize;
        outside &= outside - 1;
        let dominating = (t.in_set(x).mask() & c).count_ones() as usize;
        sum += dominating.min(size - dominating);
        if sum >= limit {
            return None;
        }
    }
    Some(sum)
}

fn binomial(n: usize, k: usize) -> u64 {
    let k = k.min(n - k) as u64;
    (0..k).fold(1u64, |acc, i| acc * (n as u64 - i) / (i + 1))
}

/// Constructive certificates for `s <= min_degree` and `s <= min_separators`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheapWitnesses {
    pub vertex: usize,
    /// `V \ {vertex}`
    pub vertex_module: VertexSet,
    pub vertex_arcs: ArcSet,
    pub pair: (usize, usize),
    pub pair_module: VertexSet,
    pub pair_arcs: ArcSet,
}

pub fn cheap_witnesses(t: &Tournament) -> Result<CheapWitnesses> {
    let n = t.n();
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    let vertex = (0..n)
        .min_by_key(|&x| t.out_degree(x).min(t.in_degree(x)))
        .unwrap();
    let vertex_arcs: ArcSet = if t.out_degree(vertex) <= t.in_degree(vertex) {
        t.out_set(vertex).iter().map(|y| (vertex, y)).collect()
    } else {
        t.in_set(vertex).iter().map(|y| (y, vertex)).collect()
    };
    let (x, y) = t.pairs().min_by_key(|&(x, y)| t.separators(x, y)).unwrap();
    let pair_arcs: ArcSet = t
        .out_set(x)
        .intersection(t.in_set(y))
        .iter()
        .map(|z| (x, z))
        .chain(t.in_set(x).intersection(t.out_set(y)).iter().map(|z| (z, x)))
        .collect();
    let mut vertex_module = t.vertices();
    vertex_module.remove(vertex);
    let w = CheapWitnesses {
        vertex,
        vertex_module,
        vertex_arcs,
        pair: (x, y),
        pair_module: VertexSet::from_mask(1 << x | 1 << y),
        pair_arcs,
    };
    debug_assert!(is_module(&t.reverse_arcs(&w.vertex_arcs).unwrap(), w.vertex_module));
    debug_assert!(is_module(&t.reverse_arcs(&w.pair_arcs).unwrap(), w.pair_module));
    Ok(w)
}

/// `s(T)` straight from the definition: the fewest arcs whose reversal
/// leaves a nontrivial module, found by enumerating arc subsets by size and
/// scanning every vertex subset for modules.
pub fn direct_oracle(t: &Tournament) -> Result<usize> {
    let n = t.n();
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    if n > ORACLE_MAX_N {
        return Err(Error::TooLarge { n, cap: ORACLE_MAX_N });
    }
    let arcs: Vec<(usize, usize)> = t.arcs().collect();
    let m = arcs.len() as u32;
    for size in 0..=m {
        for subset in (0..1u64 << m).filter(|b| b.count_ones() == size) {
            let chosen: ArcSet = (0..arcs.len())
                .filter(|i| subset >> i & 1 == 1)
                .map(|i| arcs[i])
                .collect();
            let flipped = t.reverse_arcs(&chosen)?;
            if nontrivial_module_scan(&flipped).is_some() {
                return Ok(size as usize);
            }
        }
    }
    unreachable!("reversing arcs can always reach a transitive tournament")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn c3() -> Tournament {
        Tournament::from_fn(3, |i, j| !(i == 0 && j == 2))
    }

    fn paley7() -> Tournament {
        Tournament::from_fn(7, |i, j| [1, 2, 4].contains(&((j + 7 - i) % 7)))
    }

    #[test]
    fn is_module_examples() {
        assert!(is_module(&Tournament::transitive(3), set(&[0, 1])));
        assert!(!is_module(&c3(), set(&[0, 1])));
        assert!(!is_module(&paley7(), set(&[0, 1])));
        assert!(is_module(&c3(), set(&[2])));
        assert!(is_module(&c3(), set(&[0, 1, 2])));
        assert!(!is_module(&c3(), set(&[0, 5])));
    }

    #[test]
    fn closure_examples() {
        assert_eq!(minimal_module_closure(&Tournament::transitive(3), 0, 1).unwrap(), set(&[0, 1]));
        assert_eq!(minimal_module_closure(&c3(), 0, 1).unwrap(), set(&[0, 1, 2]));
        let p = paley7();
        for (x, y) in p.pairs() {
            assert_eq!(minimal_module_closure(&p, x, y).unwrap(), p.vertices());
        }
        assert_eq!(minimal_module_closure(&c3(), 1, 1), Err(Error::SameVertex(1)));
    }

    #[test]
    fn is_simple_examples() {
        assert!(is_simple(&c3()).unwrap());
        assert!(is_simple(&paley7()).unwrap());
        for n in 3..8 {
            assert!(!is_simple(&Tournament::transitive(n)).unwrap());
        }
        for bits in 0..64 {
            assert!(!is_simple(&Tournament::from_pair_bits(4, bits)).unwrap());
        }
        assert!(is_simple(&Tournament::transitive(2)).is_err());
    }

    #[test]
    fn module_cost_examples() {
        let (cost, g) = module_cost(&c3(), set(&[0, 1])).unwrap();
        assert_eq!(cost, 1);
        assert_eq!(g.attachments.len(), 1);
        assert_eq!(module_cost(&Tournament::transitive(3), set(&[0, 1])).unwrap().0, 0);
        assert_eq!(module_cost(&c3(), set(&[0])), Err(Error::BadSize { size: 1, max: 2 }));
        assert_eq!(module_cost(&c3(), set(&[0, 1, 2])), Err(Error::BadSize { size: 3, max: 2 }));
    }

    #[test]
    fn tie_prefers_in_side() {
        // outside vertex 2 of C3 has one in- and one out-neighbour in {0,1}
        let (_, g) = module_cost(&c3(), set(&[0, 1])).unwrap();
        assert_eq!(g.attachments[0].side, Side::In);
        assert_eq!(g.reversal_arcs(), ArcSet::new([(1, 2)]));
    }

    #[test]
    fn lower_bound_examples() {
        let profile = paley7().global_minima().unwrap();
        assert_eq!(sc_lower_bound(&profile, 5).unwrap(), 3);
        assert_eq!(sc_lower_bound(&profile, 3).unwrap(), 3);
        // n - min_degree = 4 <= 4, so the degree bound still applies
        assert_eq!(sc_lower_bound(&profile, 4).unwrap(), 3);
        assert!(sc_lower_bound(&profile, 7).is_err());
        let profile = Tournament::transitive(5).global_minima().unwrap();
        assert_eq!(sc_lower_bound(&profile, 3).unwrap(), 0);
    }

    #[test]
    fn theorem_bound_by_residue() {
        let expected = [(3, 1), (4, 0), (5, 1), (6, 2), (7, 3), (8, 2), (9, 3), (10, 4), (11, 5)];
        for (n, b) in expected {
            assert_eq!(theorem_bound(n), b, "n = {n}");
        }
    }

    #[test]
    fn arrow_simplicity_small() {
        let r = arrow_simplicity(&Tournament::transitive(5)).unwrap();
        assert_eq!(r.s, 0);
        assert!(!r.simple);
        assert!(is_module(&Tournament::transitive(5), r.witness_module));
        let r = arrow_simplicity(&paley7()).unwrap();
        assert_eq!(r.s, 3);
        assert_eq!(r.witness_arcs.len(), 3);
        let r = arrow_simplicity(&c3()).unwrap();
        assert_eq!(r.s, 1);
        assert_eq!(r.witness_module, set(&[0, 1]));
        assert_eq!(
            arrow_simplicity_with(&paley7(), &SearchOptions { cap: 6, ..Default::default() }),
            Err(Error::TooLarge { n: 7, cap: 6 })
        );
    }

    #[test]
    fn cheap_witness_examples() {
        let w = cheap_witnesses(&c3()).unwrap();
        assert_eq!((w.vertex_arcs.len(), w.pair_arcs.len()), (1, 1));
        let w = cheap_witnesses(&paley7()).unwrap();
        assert_eq!((w.vertex_arcs.len(), w.pair_arcs.len()), (3, 3));
        let w = cheap_witnesses(&Tournament::transitive(4)).unwrap();
        assert_eq!(w.vertex_arcs.len(), 0);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(direct_oracle(&c3()).unwrap(), 1);
        assert_eq!(direct_oracle(&Tournament::transitive(4)).unwrap(), 0);
        assert_eq!(direct_oracle(&paley7()), Err(Error::TooLarge { n: 7, cap: 5 }));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(24, 12), 2_704_156);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!((2..10).map(|k| binomial(10, k)).sum::<u64>(), 1024 - 1 - 10 - 1);
    }
}
