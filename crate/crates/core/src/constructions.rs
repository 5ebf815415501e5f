//! Generators and recognisers for the extremal tournaments.
//!
//! * Paley tournaments on `Z/q` for primes `q ≡ 3 (mod 4)`, with
//!   `x -> y` iff `y - x` is a nonzero quadratic residue;
//! * seeded random tournaments (ChaCha8, one draw per pair);
//! * doubly regular recognition and the pair profile of an arc;
//! * the near-regular split of a `(4k+2)`-tournament, the separator
//!   conditions on it and the one-vertex extension back to a doubly regular
//!   tournament;
//! * the bridge between doubly regular tournaments and skew-Hadamard
//!   matrices.

use rand_chacha::ChaCha8Rng;
use rand_core::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tournament::{Regularity, Tournament, VertexSet, MAX_VERTICES};

fn is_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| q % d != 0)
}

/// The Paley tournament of order `q`.
pub fn paley_tournament(q: u64) -> Result<Tournament> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if q % 4 != 3 {
        return Err(Error::WrongResidueClass(q));
    }
    if q > MAX_VERTICES as u64 {
        return Err(Error::TooManyVertices { n: q as usize, max: MAX_VERTICES });
    }
    let q = q as usize;
    let mut residue = vec![false; q];
    for a in 1..q {
        residue[a * a % q] = true;
    }
    Ok(Tournament::from_fn(q, |i, j| residue[(j + q - i) % q]))
}

/// A uniformly random labelled tournament. Pairs `(i, j)`, `i < j`, are
/// visited in lexicographic order; each takes one `u64` from
/// `ChaCha8Rng::seed_from_u64(seed)` and is oriented `i -> j` iff its top
/// bit is set.
pub fn random_tournament(n: usize, seed: u64) -> Result<Tournament> {
    if n == 0 {
        return Err(Error::Empty);
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(Tournament::from_fn(n, |_, _| rng.next_u64() >> 63 == 1))
}

/// `Some(k)` iff every pair dominates exactly `k` common vertices.
pub fn is_doubly_regular(t: &Tournament) -> Result<Option<usize>> {
    let n = t.n();
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    let k = (t.out_set(0).intersection(t.out_set(1))).len();
    let uniform = t
        .pairs()
        .all(|(x, y)| t.out_set(x).intersection(t.out_set(y)).len() == k);
    if !uniform {
        return Ok(None);
    }
    assert_eq!(n, 4 * k + 3, "a doubly regular tournament has order 4k+3");
    Ok(Some(k))
}

/// Checks regularity and, for every arc `x -> y`, the profile
/// `(|v∩v|, |f∩f|, |v(x)∩f(y)|, |f(x)∩v(y)|) = (k, k, k, k+1)`.
pub fn dr_pair_profile_check(t: &Tournament) -> Result<bool> {
    let k = is_doubly_regular(t)?.ok_or(Error::NotDoublyRegular)?;
    if t.regularity_class()? != Regularity::Regular {
        return Ok(false);
    }
    Ok(t.arcs().all(|(x, y)| {
        let s = t.pair_stats_unchecked(x, y);
        (s.out_pair, s.in_pair, s.out_in, s.in_out) == (k, k, k, k + 1)
    }))
}

/// Out-degree classes of a near-regular `(4k+2)`-tournament.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NearRegularPartition {
    /// Vertices of out-degree `2k`.
    pub lower: VertexSet,
    /// Vertices of out-degree `2k+1`.
    pub higher: VertexSet,
    pub k: usize,
}

pub fn near_regular_partition(t: &Tournament) -> Result<NearRegularPartition> {
    let n = t.n();
    if n % 4 != 2 {
        return Err(Error::WrongOrder(n));
    }
    match t.regularity_class()? {
        Regularity::NearRegular { lower, higher } => Ok(NearRegularPartition {
            lower,
            higher,
            k: (n - 2) / 4,
        }),
        _ => Err(Error::NotNearRegular),
    }
}

fn validate_partition(t: &Tournament, p: &NearRegularPartition) -> Result<()> {
    let n = t.n();
    if n != 4 * p.k + 2 {
        return Err(Error::PartitionMismatch);
    }
    let lower = (0..n).filter(|&x| t.out_degree(x) == 2 * p.k).collect::<VertexSet>();
    let higher = (0..n).filter(|&x| t.out_degree(x) == 2 * p.k + 1).collect::<VertexSet>();
    if lower != p.lower || higher != p.higher || lower.len() + higher.len() != n {
        return Err(Error::PartitionMismatch);
    }
    Ok(())
}

/// Separator conditions: `2k+1` separators for pairs within a class and
/// `2k` for pairs across the classes.
pub fn check_c1_c2(t: &Tournament, p: &NearRegularPartition) -> Result<bool> {
    validate_partition(t, p)?;
    Ok(t.pairs().all(|(x, y)| {
        let same = p.lower.contains(x) == p.lower.contains(y);
        let want = if same { 2 * p.k + 1 } else { 2 * p.k };
        t.separators(x, y) == want
    }))
}

/// Adds a vertex `ω` (label `n`) dominating the higher class and dominated
/// by the lower class. Refuses inputs violating the separator conditions
/// and verifies that the result is doubly regular with the same `k`.
pub fn lakhlifi_extend(t: &Tournament, p: &NearRegularPartition) -> Result<Tournament> {
    if !check_c1_c2(t, p)? {
        return Err(Error::ConditionsViolated);
    }
    let n = t.n();
    if n + 1 > MAX_VERTICES {
        return Err(Error::TooManyVertices { n: n + 1, max: MAX_VERTICES });
    }
    let extended = Tournament::from_fn(n + 1, |i, j| {
        if j == n {
            p.lower.contains(i)
        } else {
            t.dominates(i, j)
        }
    });
    let k = p.k;
    if let Some(z) = (0..n).find(|&z| extended.separators(n, z) != 2 * k + 1) {
        return Err(Error::ExtensionFailed(format!(
            "new vertex and {z} have {} separators, expected {}",
            extended.separators(n, z),
            2 * k + 1
        )));
    }
    match is_doubly_regular(&extended)? {
        Some(found) if found == k => Ok(extended),
        other => Err(Error::ExtensionFailed(format!("expected k = {k}, found {other:?}"))),
    }
}

/// For every arc `x -> y` checks the pair `(|f(x)∩v(y)|, |v(x)∩f(y)|)`
/// against the class-dependent values
/// (higher, higher) -> (k+1, k), (lower, lower) -> (k+1, k),
/// (higher, lower) -> (k, k), (lower, higher) -> (k+1, k-1).
pub fn lemma_lakhlifi_cases(t: &Tournament, p: &NearRegularPartition) -> Result<bool> {
    if !check_c1_c2(t, p)? {
        return Err(Error::ConditionsViolated);
    }
    let k = p.k as i64;
    Ok(t.arcs().all(|(x, y)| {
        let s = t.pair_stats_unchecked(x, y);
        let want = match (p.higher.contains(x), p.higher.contains(y)) {
            (true, true) | (false, false) => (k + 1, k),
            (true, false) => (k, k),
            (false, true) => (k + 1, k - 1),
        };
        (s.in_out as i64, s.out_in as i64) == want
    }))
}

/// A square `±1` matrix with `H + Hᵀ = 2I` and `H Hᵀ = m I`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewHadamard {
    entries: Vec<Vec<i8>>,
}

impl SkewHadamard {
    /// Validates both invariants.
    pub fn new(entries: Vec<Vec<i8>>) -> Result<Self> {
        let m = entries.len();
        if m == 0 {
            return Err(Error::InvariantViolation("empty matrix".into()));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != m {
                return Err(Error::InvariantViolation(format!("row {i} has {} entries", row.len())));
            }
            if let Some(j) = row.iter().position(|&e| e != 1 && e != -1) {
                return Err(Error::InvariantViolation(format!("entry ({i}, {j}) is not ±1")));
            }
        }
        for i in 0..m {
            for j in 0..m {
                let sum = entries[i][j] + entries[j][i];
                let want = if i == j { 2 } else { 0 };
                if sum != want {
                    return Err(Error::InvariantViolation(format!(
                        "H + Hᵀ has {sum} at ({i}, {j})"
                    )));
                }
            }
        }
        for i in 0..m {
            for j in i..m {
                let dot: i64 = (0..m).map(|l| (entries[i][l] * entries[j][l]) as i64).sum();
                let want = if i == j { m as i64 } else { 0 };
                if dot != want {
                    return Err(Error::InvariantViolation(format!(
                        "H Hᵀ has {dot} at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(SkewHadamard { entries })
    }

    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i8>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i][j]
    }
}

/// Borders a doubly regular tournament into a skew-Hadamard matrix of order
/// `n + 1`. Index 0 is the border: row 0 is `+1`, column 0 is `-1` off the
/// diagonal; the core entry `(i+1, j+1)` is `+1` iff `i -> j` or `i == j`.
pub fn dr_to_skew_hadamard(t: &Tournament) -> Result<SkewHadamard> {
    if t.n() < 3 || is_doubly_regular(t)?.is_none() {
        return Err(Error::NotDoublyRegular);
    }
    let m = t.n() + 1;
    let entries = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| match (i, j) {
                    _ if i == j => 1,
                    (0, _) => 1,
                    (_, 0) => -1,
                    _ if t.dominates(i - 1, j - 1) => 1,
                    _ => -1,
                })
                .collect()
        })
        .collect();
    SkewHadamard::new(entries)
}

/// Inverse of [`dr_to_skew_hadamard`].
pub fn skew_hadamard_to_dr(h: &SkewHadamard) -> Result<Tournament> {
    let m = h.order();
    if m < 4 || m % 4 != 0 {
        return Err(Error::InvariantViolation(format!("order {m} is not 4k+4")));
    }
    if let Some(j) = (1..m).find(|&j| h.get(0, j) != 1) {
        return Err(Error::NotNormalized(format!("border row entry (0, {j}) is -1")));
    }
    if m - 1 > MAX_VERTICES {
        return Err(Error::TooManyVertices { n: m - 1, max: MAX_VERTICES });
    }
    let t = Tournament::from_fn(m - 1, |i, j| h.get(i + 1, j + 1) == 1);
    let k = (m - 4) / 4;
    match is_doubly_regular(&t)? {
        Some(found) if found == k => Ok(t),
        _ => Err(Error::InvariantViolation("core block is not doubly regular".into())),
    }
}
