//! Immutable simple undirected graphs and hop-distance matrices.

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Sentinel for "no path" in the internal all-pairs routine.
pub(crate) const UNREACHABLE: u32 = u32::MAX;

/// A finite simple undirected graph on vertices `0..n`.
///
/// Adjacency is held twice: as bit rows (`ceil(n / 64)` words per vertex) for
/// set operations, and as sorted neighbour lists for traversal. Graphs of
/// order up to 64 use a single word per row.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    nbrs: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate and reversed pairs collapse.
    pub fn from_edge_list<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let words = n.div_ceil(64);
        let mut rows = vec![0u64; n * words];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::IndexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::InvalidEdge(u));
            }
            rows[u * words + v / 64] |= 1 << (v % 64);
            rows[v * words + u / 64] |= 1 << (u % 64);
        }
        let nbrs: Vec<Vec<Vertex>> = (0..n)
            .map(|u| iter_bits(&rows[u * words..(u + 1) * words]).collect())
            .collect();
        let m = nbrs.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Graph {
            n,
            words,
            rows,
            nbrs,
            m,
        })
    }

    /// Edgeless graph of order `n`.
    pub fn empty(n: usize) -> Result<Self> {
        Self::from_edge_list(n, std::iter::empty())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Open neighbourhood `N(u)`, ascending.
    pub fn neighbors(&self, u: Vertex) -> &[Vertex] {
        &self.nbrs[u]
    }

    /// Open neighbourhood of `u` as a bit row.
    pub fn row(&self, u: Vertex) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    /// Open neighbourhood as a single word. Only meaningful for `n <= 64`.
    pub(crate) fn row_word(&self, u: Vertex) -> u64 {
        debug_assert!(self.n <= 64);
        self.rows[u * self.words]
    }

    pub fn degree(&self, u: Vertex) -> usize {
        self.nbrs[u].len()
    }

    pub fn max_degree(&self) -> usize {
        self.nbrs.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = self.nbrs.iter().map(Vec::len).collect();
        seq.sort_unstable();
        seq
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.nbrs[u]
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// True iff one breadth-first search from vertex 0 reaches every vertex.
    pub fn is_connected(&self) -> bool {
        bfs(self, 0, None).iter().all(|&d| d != UNREACHABLE)
    }

    /// Relabels vertex `i` as `perm[i]`.
    pub fn permute(&self, perm: &[Vertex]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidPermutation(self.n));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(Error::InvalidPermutation(self.n));
            }
            seen[p] = true;
        }
        Graph::from_edge_list(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Disjoint union of `self` and `other`, plus every edge between them.
    pub fn join(&self, other: &Graph) -> Graph {
        let off = self.n;
        let cross = (0..self.n).flat_map(|u| (0..other.n).map(move |v| (u, off + v)));
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + off, v + off)))
            .chain(cross);
        Graph::from_edge_list(self.n + other.n, edges).expect("join of valid graphs")
    }

    /// The graph with an extra vertex `n` adjacent to `attach`.
    pub(crate) fn with_vertex(&self, attach: &[Vertex]) -> Graph {
        let v = self.n;
        let edges = self.edges().chain(attach.iter().map(|&u| (u, v)));
        Graph::from_edge_list(self.n + 1, edges).expect("attachment within range")
    }
}

pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(w, &word)| {
        let mut rest = word;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(w * 64 + b)
        })
    })
}

/// Hop distances from `src`; `skip` removes one edge from consideration.
pub(crate) fn bfs(g: &Graph, src: Vertex, skip: Option<(Vertex, Vertex)>) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; g.order()];
    let mut queue = VecDeque::new();
    dist[src] = 0;
    queue.push_back(src);
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if let Some((a, b)) = skip {
                if (u, v) == (a, b) || (u, v) == (b, a) {
                    continue;
                }
            }
            if dist[v] == UNREACHABLE {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Row-major all-pairs hop counts, `UNREACHABLE` across components.
pub(crate) fn all_pairs_hops(g: &Graph) -> Vec<u32> {
    (0..g.order()).flat_map(|s| bfs(g, s, None)).collect()
}

/// Hop distances between every pair of vertices of a connected graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    /// One breadth-first search per source. Fails on disconnected input.
    pub fn new(g: &Graph) -> Result<Self> {
        let d = all_pairs_hops(g);
        if d.contains(&UNREACHABLE) {
            return Err(Error::Disconnected);
        }
        Ok(DistanceMatrix { n: g.order(), d })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: Vertex, v: Vertex) -> u32 {
        self.d[u * self.n + v]
    }

    /// Distances from `u` to every vertex.
    pub fn row(&self, u: Vertex) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }
}

pub fn distance_matrix(g: &Graph) -> Result<DistanceMatrix> {
    DistanceMatrix::new(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edge_list(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn construction() {
        let p3 = Graph::from_edge_list(3, [(0, 1), (1, 2), (2, 1)]).unwrap();
        assert_eq!(p3.size(), 2);
        assert_eq!(p3.neighbors(1), &[0, 2]);

        let k4 = Graph::from_edge_list(4, (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))))
            .unwrap();
        assert_eq!(k4.size(), 6);
        assert_eq!(k4.degree_sequence(), vec![3; 4]);

        assert_eq!(Graph::from_edge_list(1, [(0, 0)]), Err(Error::InvalidEdge(0)));
        assert_eq!(
            Graph::from_edge_list(3, [(0, 3)]),
            Err(Error::IndexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::empty(0), Err(Error::EmptyGraph));
    }

    #[test]
    fn distances() {
        assert_eq!(DistanceMatrix::new(&path(3)).unwrap().get(0, 2), 2);
        let c4 = DistanceMatrix::new(&cycle(4)).unwrap();
        assert_eq!((c4.get(0, 2), c4.get(1, 3)), (2, 2));
        assert_eq!(DistanceMatrix::new(&Graph::empty(2).unwrap()), Err(Error::Disconnected));
    }

    #[test]
    fn connectivity() {
        assert!(path(5).is_connected());
        assert!(!Graph::empty(2).unwrap().is_connected());
        assert!(!Graph::from_edge_list(4, [(0, 1), (1, 2), (0, 2)]).unwrap().is_connected());
    }

    #[test]
    fn wide_graphs_use_multiword_rows() {
        let g = cycle(150);
        assert!(g.has_edge(149, 0) && g.has_edge(70, 71) && !g.has_edge(0, 75));
        assert_eq!(DistanceMatrix::new(&g).unwrap().diameter(), 75);
    }

    #[test]
    fn permutation_checks() {
        let p3 = path(3);
        assert_eq!(p3.permute(&[0, 1, 2]).unwrap(), p3);
        assert_eq!(p3.permute(&[2, 1, 0]).unwrap(), p3);
        assert_eq!(p3.permute(&[0, 0, 1]), Err(Error::InvalidPermutation(3)));
        assert_eq!(p3.permute(&[0, 1]), Err(Error::InvalidPermutation(3)));
        let c5 = cycle(5).permute(&[2, 3, 4, 0, 1]).unwrap();
        assert_eq!(c5.size(), 5);
        assert_eq!(c5, cycle(5));
    }
}
