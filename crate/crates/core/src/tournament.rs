//! Dense bit-packed tournaments.
//!
//! Every vertex keeps two 64-bit rows: its out-neighbourhood `v(x)` and its
//! in-neighbourhood `f(x)`. Set intersections used by the degree and
//! separator statistics are a single AND plus popcount.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported vertex count (one machine word per row).
pub const MAX_VERTICES: usize = 64;

/// A subset of the vertex labels `0..n`, stored as a bit mask.
///
/// Iteration is always in ascending label order. The [`Ord`] impl is the
/// canonical witness order: smaller sets first, then lexicographic on the
/// ascending member lists.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        VertexSet(full_mask(n))
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub const fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            assert!(v < MAX_VERTICES, "vertex {v} exceeds {MAX_VERTICES}");
            set.insert(v);
        }
        set
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & diff & diff.wrapping_neg() != 0 {
                // equal sizes: whoever holds the lowest differing label comes first
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&v) = members.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
        }
        Ok(members.into_iter().collect())
    }
}

/// A set of ordered pairs `(x, y)`, kept sorted and free of duplicates.
///
/// Whether each pair is an arc of some tournament is checked where the set
/// is used (see [`Tournament::reverse_arcs`]).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ArcSet(Vec<(usize, usize)>);

impl ArcSet {
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(arcs: I) -> Self {
        let mut arcs: Vec<_> = arcs.into_iter().collect();
        arcs.sort_unstable();
        arcs.dedup();
        ArcSet(arcs)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[(usize, usize)] {
        &self.0
    }

    /// Every pair flipped, i.e. the arcs of `Inv(B, T)` that came from `B`.
    pub fn flipped(&self) -> ArcSet {
        ArcSet::new(self.iter().map(|(x, y)| (y, x)))
    }
}

impl FromIterator<(usize, usize)> for ArcSet {
    fn from_iter<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        ArcSet::new(iter)
    }
}

/// Intersection sizes of the neighbourhoods of a vertex pair `(x, y)`.
///
/// The four intersections partition `V \ {x, y}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PairStats {
    /// `|v(x) ∩ v(y)|`, the vertices dominated by both.
    pub out_pair: usize,
    /// `|f(x) ∩ f(y)|`, the vertices dominating both.
    pub in_pair: usize,
    /// `|v(x) ∩ f(y)|`
    pub out_in: usize,
    /// `|f(x) ∩ v(y)|`
    pub in_out: usize,
    /// Number of separators, `out_in + in_out`.
    pub separators: usize,
}

/// Degrees and global minima of a tournament.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub out_degrees: Vec<usize>,
    pub in_degrees: Vec<usize>,
    pub min_out: usize,
    pub min_in: usize,
    /// `min(min_out, min_in)`
    pub min_degree: usize,
    /// Smallest separator count over all pairs.
    pub min_separators: usize,
}

impl DegreeProfile {
    pub fn n(&self) -> usize {
        self.out_degrees.len()
    }
}

/// Regular / near-regular dichotomy by out-degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum Regularity {
    Regular,
    /// `lower` holds the `n/2` vertices of out-degree `(n-2)/2`, `higher`
    /// the `n/2` vertices of out-degree `n/2`.
    NearRegular { lower: VertexSet, higher: VertexSet },
    Neither,
}

/// A tournament on the vertices `0..n`.
///
/// Construction validates the tournament axioms; values are immutable
/// afterwards.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::Empty)
    } else if n > MAX_VERTICES {
        Err(Error::TooManyVertices { n, max: MAX_VERTICES })
    } else {
        Ok(())
    }
}

impl Tournament {
    /// Builds a tournament from a boolean dominance matrix: `rows[i][j]`
    /// is true iff `i -> j`.
    pub fn from_matrix<R: AsRef<[bool]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        check_order(n)?;
        for (i, row) in rows.iter().enumerate() {
            let len = row.as_ref().len();
            if len != n {
                return Err(Error::NotSquare { row: i, len, expected: n });
            }
        }
        for (i, row) in rows.iter().enumerate() {
            if row.as_ref()[i] {
                return Err(Error::DiagonalSet(i));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if rows[i].as_ref()[j] == rows[j].as_ref()[i] {
                    return Err(Error::NotAntisymmetric(i, j));
                }
            }
        }
        Ok(Self::from_fn(n, |i, j| rows[i].as_ref()[j]))
    }

    /// Builds a tournament by orienting each pair `i < j`: `i -> j` iff
    /// `dominates(i, j)`.
    ///
    /// Panics if `n` is zero or exceeds [`MAX_VERTICES`].
    pub fn from_fn(n: usize, mut dominates: impl FnMut(usize, usize) -> bool) -> Self {
        check_order(n).expect("invalid tournament order");
        let mut out = vec![0u64; n];
        let mut inn = vec![0u64; n];
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = if dominates(i, j) { (i, j) } else { (j, i) };
                out[a] |= 1 << b;
                inn[b] |= 1 << a;
            }
        }
        Tournament { n, out, inn }
    }

    /// Builds the tournament whose pair `(i, j)`, `i < j`, is oriented
    /// `i -> j` iff bit `p` of `bits` is set, where `p` numbers the pairs in
    /// lexicographic order. Used to enumerate labelled tournaments.
    pub fn from_pair_bits(n: usize, bits: u64) -> Self {
        let mut p = 0;
        Self::from_fn(n, |_, _| {
            let b = bits >> p & 1 == 1;
            p += 1;
            b
        })
    }

    /// The transitive tournament with `i -> j` for all `i < j`.
    pub fn transitive(n: usize) -> Self {
        Self::from_fn(n, |_, _| true)
    }

    pub(crate) fn from_out_rows(out: Vec<u64>) -> Self {
        let n = out.len();
        let mut inn = vec![0u64; n];
        for (x, &row) in out.iter().enumerate() {
            for y in VertexSet(row) {
                inn[y] |= 1 << x;
            }
        }
        Tournament { n, out, inn }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// True iff `x -> y`.
    pub fn dominates(&self, x: usize, y: usize) -> bool {
        self.out[x] >> y & 1 == 1
    }

    /// `v(x)`, unchecked.
    pub fn out_set(&self, x: usize) -> VertexSet {
        VertexSet(self.out[x])
    }

    /// `f(x)`, unchecked.
    pub fn in_set(&self, x: usize) -> VertexSet {
        VertexSet(self.inn[x])
    }

    pub fn out_degree(&self, x: usize) -> usize {
        self.out[x].count_ones() as usize
    }

    pub fn in_degree(&self, x: usize) -> usize {
        self.inn[x].count_ones() as usize
    }

    pub fn to_matrix(&self) -> Vec<Vec<bool>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.dominates(i, j)).collect())
            .collect()
    }

    /// All arcs `(x, y)` with `x -> y`, in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |x| self.out_set(x).iter().map(move |y| (x, y)))
    }

    pub(crate) fn check_vertex(&self, x: usize) -> Result<()> {
        if x < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: x, n: self.n })
        }
    }

    pub(crate) fn check_set(&self, set: VertexSet) -> Result<()> {
        match set.difference(self.vertices()).first() {
            Some(v) => Err(Error::VertexOutOfRange { vertex: v, n: self.n }),
            None => Ok(()),
        }
    }

    /// `(v(x), f(x))`.
    pub fn neighborhoods(&self, x: usize) -> Result<(VertexSet, VertexSet)> {
        self.check_vertex(x)?;
        Ok((self.out_set(x), self.in_set(x)))
    }

    /// Pair statistics without range checks; `x != y` is assumed.
    pub fn pair_stats_unchecked(&self, x: usize, y: usize) -> PairStats {
        let pop = |a: u64, b: u64| (a & b).count_ones() as usize;
        let out_in = pop(self.out[x], self.inn[y]);
        let in_out = pop(self.inn[x], self.out[y]);
        PairStats {
            out_pair: pop(self.out[x], self.out[y]),
            in_pair: pop(self.inn[x], self.inn[y]),
            out_in,
            in_out,
            separators: out_in + in_out,
        }
    }

    pub fn pair_stats(&self, x: usize, y: usize) -> Result<PairStats> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        if x == y {
            return Err(Error::SameVertex(x));
        }
        Ok(self.pair_stats_unchecked(x, y))
    }

    /// Number of separators of `{x, y}`.
    pub fn separators(&self, x: usize, y: usize) -> usize {
        ((self.out[x] & self.inn[y]) | (self.inn[x] & self.out[y])).count_ones() as usize
    }

    /// Degree lists and global minima. Needs `n >= 3`.
    pub fn global_minima(&self) -> Result<DegreeProfile> {
        if self.n < 3 {
            return Err(Error::TooSmall { n: self.n, min: 3 });
        }
        let out_degrees: Vec<usize> = (0..self.n).map(|x| self.out_degree(x)).collect();
        let in_degrees: Vec<usize> = (0..self.n).map(|x| self.in_degree(x)).collect();
        let min_out = *out_degrees.iter().min().unwrap();
        let min_in = *in_degrees.iter().min().unwrap();
        let min_separators = self
            .pairs()
            .map(|(x, y)| self.separators(x, y))
            .min()
            .unwrap();
        Ok(DegreeProfile {
            out_degrees,
            in_degrees,
            min_out,
            min_in,
            min_degree: min_out.min(min_in),
            min_separators,
        })
    }

    /// Unordered pairs `(x, y)` with `x < y`, lexicographically.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |x| (x + 1..n).map(move |y| (x, y)))
    }

    /// `Inv(B, T)`: the tournament with every arc of `arcs` reversed.
    pub fn reverse_arcs(&self, arcs: &ArcSet) -> Result<Tournament> {
        let mut out = self.out.clone();
        for (x, y) in arcs.iter() {
            self.check_vertex(x)?;
            self.check_vertex(y)?;
            if !self.dominates(x, y) {
                return Err(Error::ArcAbsent(x, y));
            }
            out[x] &= !(1 << y);
            out[y] |= 1 << x;
        }
        Ok(Tournament::from_out_rows(out))
    }

    /// The subtournament on the surviving vertices, relabelled `0..` in
    /// ascending order of their old labels.
    pub fn delete_vertices(&self, deleted: VertexSet) -> Result<Tournament> {
        self.check_set(deleted)?;
        if deleted.len() >= self.n {
            return Err(Error::DeletesEverything);
        }
        let keep: Vec<usize> = self.vertices().difference(deleted).to_vec();
        Ok(Tournament::from_fn(keep.len(), |i, j| self.dominates(keep[i], keep[j])))
    }

    pub fn regularity_class(&self) -> Result<Regularity> {
        let n = self.n;
        if n < 2 {
            return Err(Error::TooSmall { n, min: 2 });
        }
        if n % 2 == 1 {
            let d = (n - 1) / 2;
            return Ok(if (0..n).all(|x| self.out_degree(x) == d) {
                Regularity::Regular
            } else {
                Regularity::Neither
            });
        }
        let mut lower = VertexSet::EMPTY;
        let mut higher = VertexSet::EMPTY;
        for x in 0..n {
            match self.out_degree(x) {
                d if d == n / 2 => higher.insert(x),
                d if d == (n - 2) / 2 => lower.insert(x),
                _ => return Ok(Regularity::Neither),
            }
        }
        // the degree sum forces |lower| = |higher| once every degree is one of the two
        debug_assert_eq!(lower.len(), higher.len());
        Ok(Regularity::NearRegular { lower, higher })
    }
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Tournament(n={})", self.n)?;
        for x in 0..self.n {
            let row: String = (0..self.n)
                .map(|y| if self.dominates(x, y) { '1' } else { '0' })
                .collect();
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const F: bool = false;
    const T: bool = true;

    fn c3() -> Tournament {
        Tournament::from_matrix(&[[F, T, F], [F, F, T], [T, F, F]]).unwrap()
    }

    fn paley7() -> Tournament {
        Tournament::from_fn(7, |i, j| [1, 2, 4].contains(&((j + 7 - i) % 7)))
    }

    #[test]
    fn from_matrix_accepts_and_rejects() {
        let t = Tournament::from_matrix(&[[F, T], [F, F]]).unwrap();
        assert!(t.dominates(0, 1));
        assert_eq!(
            Tournament::from_matrix(&[[F, T], [T, F]]),
            Err(Error::NotAntisymmetric(0, 1))
        );
        assert_eq!(
            Tournament::from_matrix(&[[F, F], [F, F]]),
            Err(Error::NotAntisymmetric(0, 1))
        );
        assert_eq!(Tournament::from_matrix(&[[T]]), Err(Error::DiagonalSet(0)));
        assert_eq!(
            Tournament::from_matrix(&[vec![F, T], vec![F]]),
            Err(Error::NotSquare { row: 1, len: 1, expected: 2 })
        );
        let c = c3();
        assert!(c.dominates(0, 1) && c.dominates(1, 2) && c.dominates(2, 0));
    }

    #[test]
    fn neighborhoods_small() {
        let (out, inn) = c3().neighborhoods(0).unwrap();
        assert_eq!(out.to_vec(), vec![1]);
        assert_eq!(inn.to_vec(), vec![2]);
        let (out, inn) = Tournament::transitive(3).neighborhoods(0).unwrap();
        assert_eq!(out.to_vec(), vec![1, 2]);
        assert!(inn.is_empty());
        assert_eq!(paley7().neighborhoods(0).unwrap().0.to_vec(), vec![1, 2, 4]);
        assert_eq!(
            c3().neighborhoods(3),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn pair_stats_examples() {
        let s = c3().pair_stats(0, 1).unwrap();
        assert_eq!((s.out_pair, s.in_pair, s.separators), (0, 0, 1));
        let s = Tournament::transitive(3).pair_stats(0, 2).unwrap();
        assert_eq!((s.out_pair, s.in_pair, s.separators), (0, 0, 1));
        let p = paley7();
        for (x, y) in p.arcs() {
            let s = p.pair_stats(x, y).unwrap();
            assert_eq!((s.out_pair, s.in_pair, s.out_in, s.in_out, s.separators), (1, 1, 1, 2, 3));
        }
        assert_eq!(p.pair_stats(2, 2), Err(Error::SameVertex(2)));
    }

    #[test]
    fn global_minima_examples() {
        let m = c3().global_minima().unwrap();
        assert_eq!((m.min_out, m.min_in, m.min_degree, m.min_separators), (1, 1, 1, 1));
        let m = paley7().global_minima().unwrap();
        assert_eq!((m.min_degree, m.min_separators), (3, 3));
        assert_eq!(Tournament::transitive(5).global_minima().unwrap().min_degree, 0);
        assert_eq!(
            Tournament::transitive(2).global_minima(),
            Err(Error::TooSmall { n: 2, min: 3 })
        );
    }

    #[test]
    fn reverse_arcs_examples() {
        assert_eq!(c3().reverse_arcs(&ArcSet::default()).unwrap(), c3());
        let r = c3().reverse_arcs(&ArcSet::new([(0, 1)])).unwrap();
        assert!(r.dominates(1, 0) && r.dominates(1, 2) && r.dominates(2, 0));
        let p = paley7();
        let b: ArcSet = p.out_set(0).iter().map(|y| (0, y)).collect();
        assert_eq!(p.reverse_arcs(&b).unwrap().out_degree(0), 0);
        assert_eq!(c3().reverse_arcs(&ArcSet::new([(1, 0)])), Err(Error::ArcAbsent(1, 0)));
    }

    #[test]
    fn delete_vertices_examples() {
        let t = c3().delete_vertices(VertexSet::singleton(2)).unwrap();
        assert_eq!(t.n(), 2);
        assert!(t.dominates(0, 1));
        assert_eq!(c3().delete_vertices(VertexSet::EMPTY).unwrap(), c3());
        assert_eq!(c3().delete_vertices(VertexSet::full(3)), Err(Error::DeletesEverything));
        let d = paley7().delete_vertices(VertexSet::singleton(0)).unwrap();
        assert!(matches!(d.regularity_class().unwrap(), Regularity::NearRegular { .. }));
    }

    #[test]
    fn regularity_examples() {
        assert_eq!(paley7().regularity_class().unwrap(), Regularity::Regular);
        match paley7().delete_vertices(VertexSet::singleton(0)).unwrap().regularity_class() {
            Ok(Regularity::NearRegular { lower, higher }) => {
                assert_eq!((lower.len(), higher.len()), (3, 3));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(Tournament::transitive(4).regularity_class().unwrap(), Regularity::Neither);
        assert!(Tournament::transitive(1).regularity_class().is_err());
    }

    #[test]
    fn vertex_set_order_is_size_then_lex() {
        let s = |v: &[usize]| v.iter().copied().collect::<VertexSet>();
        assert!(s(&[5]) < s(&[0, 1]));
        assert!(s(&[0, 1]) < s(&[0, 2]));
        assert!(s(&[0, 3]) < s(&[1, 2]));
        assert!(s(&[0, 2, 5]) < s(&[0, 3, 4]));
        assert_eq!(s(&[1, 2]).cmp(&s(&[1, 2])), Ordering::Equal);
        assert_eq!(s(&[3, 1, 1]).to_string(), "{1,3}");
    }
}
