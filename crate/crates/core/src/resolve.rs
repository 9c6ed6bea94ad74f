//! Resolving sets, the resolving number, metric dimension and upper dimension.
//!
//! A vertex `u` resolves a pair `{x, y}` when `d(u, x) != d(u, y)`. The set of
//! vertices that do *not* resolve a pair is a non-resolving set, and the
//! resolving number is one more than the largest such set over all pairs.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph, Vertex};

/// Order cap for the exhaustive resolving-number oracle and upper dimension.
pub const ORACLE_CAP: usize = 12;
/// Order cap for the exhaustive metric dimension search.
pub const DIMENSION_CAP: usize = 16;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ResolvingReport {
    pub res: usize,
    /// Lexicographically smallest pair with the largest non-resolving set.
    /// `None` only for the single-vertex graph.
    pub witness_pair: Option<(Vertex, Vertex)>,
    pub witness_nonresolving_set: Vec<Vertex>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DimensionReport {
    pub dim: usize,
    pub updim: usize,
    pub witness_min_set: Vec<Vertex>,
    pub witness_max_minimal_set: Vec<Vertex>,
}

/// Vertices that fail to resolve `{x, y}`. Never contains `x` or `y`.
pub fn non_resolvers(dm: &DistanceMatrix, x: Vertex, y: Vertex) -> Result<Vec<Vertex>> {
    if x == y {
        return Err(Error::DegeneratePair(x));
    }
    let (rx, ry) = (dm.row(x), dm.row(y));
    Ok((0..dm.order()).filter(|&u| rx[u] == ry[u]).collect())
}

fn count_equal(a: &[u32], b: &[u32]) -> usize {
    a.iter().zip(b).filter(|(p, q)| p == q).count()
}

pub fn resolving_number(g: &Graph) -> Result<ResolvingReport> {
    let dm = DistanceMatrix::new(g)?;
    Ok(resolving_number_from(&dm))
}

/// Scans every pair, comparing two distance rows per pair: `O(n^3)` total.
pub fn resolving_number_from(dm: &DistanceMatrix) -> ResolvingReport {
    let n = dm.order();
    let mut best: Option<(usize, Vertex, Vertex)> = None;
    for x in 0..n {
        let rx = dm.row(x);
        for y in x + 1..n {
            let c = count_equal(rx, dm.row(y));
            if best.is_none_or(|(b, _, _)| c > b) {
                best = Some((c, x, y));
            }
        }
    }
    match best {
        None => ResolvingReport {
            res: 1,
            witness_pair: None,
            witness_nonresolving_set: Vec::new(),
        },
        Some((c, x, y)) => ResolvingReport {
            res: c + 1,
            witness_pair: Some((x, y)),
            witness_nonresolving_set: non_resolvers(dm, x, y).expect("x < y"),
        },
    }
}

/// The lexicographically first pair that no vertex of `set` resolves.
pub fn first_unresolved_pair(dm: &DistanceMatrix, set: &[Vertex]) -> Option<(Vertex, Vertex)> {
    let n = dm.order();
    (0..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .find(|&(x, y)| set.iter().all(|&u| dm.get(u, x) == dm.get(u, y)))
}

pub fn is_resolving_set(dm: &DistanceMatrix, set: &[Vertex]) -> bool {
    first_unresolved_pair(dm, set).is_none()
}

fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::TooLarge { what, n, cap });
    }
    Ok(())
}

/// For each pair, the bitmask of vertices that resolve it.
fn resolver_masks(dm: &DistanceMatrix) -> Vec<u32> {
    let n = dm.order();
    let mut masks = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for x in 0..n {
        for y in x + 1..n {
            masks.push(
                (0..n)
                    .filter(|&u| dm.get(u, x) != dm.get(u, y))
                    .fold(0u32, |m, u| m | 1 << u),
            );
        }
    }
    masks
}

fn resolves(masks: &[u32], set: u32) -> bool {
    masks.iter().all(|&r| r & set != 0)
}

fn to_mask(set: &[Vertex]) -> u32 {
    set.iter().fold(0, |m, &v| m | 1 << v)
}

/// Smallest `k` such that every `k`-subset is resolving, by direct subset
/// scan in increasing cardinality.
pub fn resolving_number_oracle(g: &Graph) -> Result<usize> {
    let n = g.order();
    check_cap("resolving number oracle", n, ORACLE_CAP)?;
    let dm = DistanceMatrix::new(g)?;
    if n == 1 {
        return Ok(1);
    }
    let masks = resolver_masks(&dm);
    for k in 1..=n {
        if k_subsets(n, k).all(|s| resolves(&masks, to_mask(&s))) {
            return Ok(k);
        }
    }
    unreachable!("the full vertex set resolves every pair")
}

/// Minimum resolving set size and the lexicographically first witness.
pub fn metric_dimension(g: &Graph) -> Result<(usize, Vec<Vertex>)> {
    let n = g.order();
    check_cap("metric dimension", n, DIMENSION_CAP)?;
    let dm = DistanceMatrix::new(g)?;
    if n == 1 {
        // The empty set resolves the single vertex; one landmark by convention.
        return Ok((1, vec![0]));
    }
    let masks = resolver_masks(&dm);
    for k in 1..=n {
        if let Some(s) = k_subsets(n, k).find(|s| resolves(&masks, to_mask(s))) {
            return Ok((k, s));
        }
    }
    unreachable!("the full vertex set resolves every pair")
}

/// Largest minimal resolving set and the lexicographically first witness.
pub fn upper_dimension(g: &Graph) -> Result<(usize, Vec<Vertex>)> {
    let n = g.order();
    check_cap("upper dimension", n, ORACLE_CAP)?;
    let dm = DistanceMatrix::new(g)?;
    if n == 1 {
        return Ok((1, vec![0]));
    }
    let masks = resolver_masks(&dm);
    let resolving: Vec<bool> = (0..1u32 << n).map(|s| resolves(&masks, s)).collect();
    // Supersets of resolving sets resolve, so minimality needs only single removals.
    let minimal = |s: u32| {
        resolving[s as usize] && (0..n).all(|v| s >> v & 1 == 0 || !resolving[(s & !(1 << v)) as usize])
    };
    for k in (1..=n).rev() {
        if let Some(s) = k_subsets(n, k).find(|s| minimal(to_mask(s))) {
            return Ok((k, s));
        }
    }
    unreachable!("some minimal resolving set exists")
}

/// Metric dimension and upper dimension together, checked against the chain
/// `1 <= dim <= updim <= res <= n - 1`.
pub fn dimension_report(g: &Graph) -> Result<DimensionReport> {
    let (dim, witness_min_set) = metric_dimension(g)?;
    let (updim, witness_max_minimal_set) = upper_dimension(g)?;
    let res = resolving_number(g)?.res;
    let n = g.order();
    if !(1 <= dim && dim <= updim && updim <= res && (n == 1 || res < n)) {
        return Err(Error::TheoremViolation(format!(
            "dimension chain broken: dim={dim} updim={updim} res={res} n={n}"
        )));
    }
    Ok(DimensionReport {
        dim,
        updim,
        witness_min_set,
        witness_max_minimal_set,
    })
}

pub(crate) fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<Vertex>> {
    (0..n).combinations(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, edges.iter().copied()).unwrap()
    }
    fn path(n: usize) -> Graph {
        Graph::from_edge_list(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }
    fn cycle(n: usize) -> Graph {
        Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }
    fn complete(n: usize) -> Graph {
        Graph::from_edge_list(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }
    fn star(a: usize) -> Graph {
        Graph::from_edge_list(a + 1, (1..=a).map(|i| (0, i))).unwrap()
    }

    #[test]
    fn combinations_are_lexicographic() {
        let all: Vec<_> = k_subsets(4, 2).collect();
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(k_subsets(3, 0).count(), 1);
        assert_eq!(k_subsets(2, 3).count(), 0);
    }

    #[test]
    fn non_resolver_sets() {
        let dm = DistanceMatrix::new(&path(3)).unwrap();
        assert_eq!(non_resolvers(&dm, 0, 2).unwrap(), vec![1]);
        let dm = DistanceMatrix::new(&cycle(4)).unwrap();
        assert_eq!(non_resolvers(&dm, 0, 2).unwrap(), vec![1, 3]);
        let dm = DistanceMatrix::new(&complete(4)).unwrap();
        assert_eq!(non_resolvers(&dm, 0, 1).unwrap(), vec![2, 3]);
        assert_eq!(non_resolvers(&dm, 2, 2), Err(Error::DegeneratePair(2)));
    }

    #[test]
    fn resolving_numbers() {
        for n in 3..10 {
            assert_eq!(resolving_number(&path(n)).unwrap().res, 2);
        }
        let c4 = resolving_number(&cycle(4)).unwrap();
        assert_eq!(c4.res, 3);
        assert_eq!(c4.witness_pair, Some((0, 2)));
        assert_eq!(c4.witness_nonresolving_set, vec![1, 3]);
        assert_eq!(resolving_number(&star(5)).unwrap().res, 5);
        // G_{5,3}: K5 plus a vertex on three of its vertices.
        let mut edges: Vec<_> = complete(5).edges().collect();
        edges.extend([(0, 5), (1, 5), (2, 5)]);
        assert_eq!(resolving_number(&graph(6, &edges)).unwrap().res, 5);
        assert_eq!(resolving_number(&path(1)).unwrap().res, 1);
        assert_eq!(resolving_number(&path(2)).unwrap().res, 1);
        assert_eq!(resolving_number(&Graph::empty(3).unwrap()), Err(Error::Disconnected));
    }

    #[test]
    fn resolving_set_checks() {
        let dm = DistanceMatrix::new(&path(4)).unwrap();
        assert!(is_resolving_set(&dm, &[0]));
        let dm = DistanceMatrix::new(&cycle(4)).unwrap();
        assert_eq!(first_unresolved_pair(&dm, &[1, 3]), Some((0, 2)));
        assert!(is_resolving_set(&dm, &[0, 1, 2, 3]));
    }

    #[test]
    fn oracle_values() {
        assert_eq!(resolving_number_oracle(&cycle(5)).unwrap(), 2);
        assert_eq!(resolving_number_oracle(&complete(4)).unwrap(), 3);
        assert_eq!(resolving_number_oracle(&star(3)).unwrap(), 3);
        assert!(matches!(resolving_number_oracle(&path(13)), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn dimensions() {
        assert_eq!(metric_dimension(&path(6)).unwrap(), (1, vec![0]));
        assert_eq!(metric_dimension(&cycle(6)).unwrap().0, 2);
        assert_eq!(metric_dimension(&complete(5)).unwrap().0, 4);
        assert!(matches!(metric_dimension(&path(17)), Err(Error::TooLarge { .. })));
        assert_eq!(upper_dimension(&path(5)).unwrap().0, 2);
        assert_eq!(upper_dimension(&cycle(7)).unwrap().0, 2);
        assert_eq!(upper_dimension(&complete(4)).unwrap().0, 3);
        let report = dimension_report(&cycle(6)).unwrap();
        assert!(report.dim <= report.updim && report.updim <= 3);
    }
}
