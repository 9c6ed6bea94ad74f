//! Classical invariants: diameter, girth, clique number, degree shape tags.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{bfs, DistanceMatrix, Graph, Vertex, UNREACHABLE};

/// Length of a shortest cycle; `Infinite` for acyclic graphs.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvariantSummary {
    pub n: usize,
    pub m: usize,
    pub diameter: u32,
    pub girth: Girth,
    pub omega: usize,
    pub max_degree: usize,
    pub is_tree: bool,
    pub is_path: bool,
    pub is_cycle: bool,
    pub is_star: bool,
    /// Sorted leg lengths when the graph is a three-legged spider.
    pub spider: Option<(usize, usize, usize)>,
}

impl InvariantSummary {
    pub fn is_complete(&self) -> bool {
        self.m == self.n * (self.n - 1) / 2
    }
}

pub fn invariant_summary(g: &Graph, dm: &DistanceMatrix) -> Result<InvariantSummary> {
    if dm.order() != g.order() || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let (n, m) = (g.order(), g.size());
    let is_tree = m + 1 == n;
    let leaves = (0..n).filter(|&u| g.degree(u) == 1).count();
    let max_degree = g.max_degree();
    let is_path = n <= 2 || (is_tree && leaves == 2 && max_degree == 2);
    Ok(InvariantSummary {
        n,
        m,
        diameter: dm.diameter(),
        girth: girth(g),
        omega: clique_number(g),
        max_degree,
        is_tree,
        is_path,
        is_cycle: n >= 3 && (0..n).all(|u| g.degree(u) == 2),
        is_star: n >= 2 && is_tree && max_degree == n - 1,
        spider: spider_signature(g),
    })
}

/// Minimum over edges `{u, v}` of one plus the `u`-`v` distance with the
/// edge removed.
pub fn girth(g: &Graph) -> Girth {
    g.edges()
        .filter_map(|(u, v)| {
            let d = bfs(g, u, Some((u, v)))[v];
            (d != UNREACHABLE).then_some(d as usize + 1)
        })
        .min()
        .map_or(Girth::Infinite, Girth::Finite)
}

/// Leg lengths `(a, b, c)`, ascending, of a tree with exactly one vertex of
/// degree three and every other degree at most two.
pub fn spider_signature(g: &Graph) -> Option<(usize, usize, usize)> {
    let n = g.order();
    if g.size() + 1 != n || !g.is_connected() {
        return None;
    }
    let mut centers = (0..n).filter(|&u| g.degree(u) >= 3);
    let center = centers.next()?;
    if g.degree(center) != 3 || centers.next().is_some() {
        return None;
    }
    let mut legs: Vec<usize> = g
        .neighbors(center)
        .iter()
        .map(|&start| {
            let (mut prev, mut cur, mut len) = (center, start, 1);
            while let Some(&next) = g.neighbors(cur).iter().find(|&&w| w != prev) {
                (prev, cur, len) = (cur, next, len + 1);
            }
            len
        })
        .collect();
    legs.sort_unstable();
    Some((legs[0], legs[1], legs[2]))
}

/// `d(u, A)` and whether every `d(u, v)`, `v` in `A`, lies in
/// `[d(u, A), d(u, A) + d(A)]`.
pub fn distance_window(dm: &DistanceMatrix, u: Vertex, set: &[Vertex]) -> Result<(u32, bool)> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    let near = set.iter().map(|&v| dm.get(u, v)).min().unwrap();
    let spread = set
        .iter()
        .flat_map(|&a| set.iter().map(move |&b| (a, b)))
        .map(|(a, b)| dm.get(a, b))
        .max()
        .unwrap();
    let ok = set
        .iter()
        .all(|&v| (near..=near + spread).contains(&dm.get(u, v)));
    Ok((near, ok))
}

/// Vertex bit set sized for any order.
#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn and(&self, other: &[u64]) -> Bits {
        Bits(self.0.iter().zip(other).map(|(a, b)| a & b).collect())
    }
    fn remove(&mut self, v: Vertex) {
        self.0[v / 64] &= !(1 << (v % 64));
    }
    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
    fn first(&self) -> Option<Vertex> {
        crate::graph::iter_bits(&self.0).next()
    }
}

/// Exact clique number by branch and bound with a greedy colouring bound.
pub fn clique_number(g: &Graph) -> usize {
    let n = g.order();
    let words = n.div_ceil(64);
    let mut all = Bits(vec![0; words]);
    for v in 0..n {
        all.0[v / 64] |= 1 << (v % 64);
    }
    let mut best = 0;
    expand(g, 0, all, &mut best);
    best
}

fn expand(g: &Graph, size: usize, cand: Bits, best: &mut usize) {
    if cand.is_empty() {
        *best = (*best).max(size);
        return;
    }
    // Colour classes bound the clique size within each suffix of the order.
    let order = colour_order(g, &cand);
    let mut cand = cand;
    for &(v, colour) in order.iter().rev() {
        if size + colour <= *best {
            return;
        }
        let next = cand.and(g.row(v));
        expand(g, size + 1, next, best);
        cand.remove(v);
    }
}

/// Greedy sequential colouring; returns `(vertex, colour)` with colours
/// non-decreasing.
fn colour_order(g: &Graph, cand: &Bits) -> Vec<(Vertex, usize)> {
    let mut uncoloured = cand.clone();
    let mut out = Vec::with_capacity(cand.count());
    let mut colour = 0;
    while !uncoloured.is_empty() {
        colour += 1;
        let mut avail = uncoloured.clone();
        while let Some(v) = avail.first() {
            avail.remove(v);
            for (w, r) in avail.0.iter_mut().zip(g.row(v)) {
                *w &= !r;
            }
            uncoloured.remove(v);
            out.push((v, colour));
        }
    }
    out
}
