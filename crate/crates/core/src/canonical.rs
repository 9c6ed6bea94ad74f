//! Canonical forms for graphs of order at most 16.
//!
//! The search is a small individualization-refinement scheme: an ordered
//! partition is refined to equitability, a vertex of the first smallest
//! non-singleton cell is individualized, and the process recurses until the
//! partition is discrete. Each discrete partition is a labeling; the canonical
//! form is the smallest adjacency string over all leaves. Automorphisms found
//! at equal leaves prune sibling subtrees, so highly symmetric graphs (stars,
//! cliques) stay polynomial.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub const CANONICAL_CAP: usize = 16;

/// Upper-triangle adjacency bits of a graph under its canonical labeling.
///
/// Pairs are ordered column-wise, `(0,1), (0,2), (1,2), (0,3), ...`, with the
/// first pair in the most significant of the `n(n-1)/2` low bits, so numeric
/// order of `bits` is lexicographic order of the bit string.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalForm {
    pub n: usize,
    pub bits: u128,
}

impl CanonicalForm {
    /// The graph whose labeling is the canonical one.
    pub fn to_graph(&self) -> Graph {
        let total = pair_count(self.n);
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.bits >> (total - 1 - k) & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::from_edge_list(self.n, edges).expect("canonical form of a valid graph")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{:0width$b}", self.n, self.bits, width = pair_count(self.n))
    }
}

pub(crate) fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Packs the adjacency string of `g` under `lab`, where `lab[p]` is the
/// vertex placed at position `p`.
pub(crate) fn labeled_bits(g: &Graph, lab: &[Vertex]) -> u128 {
    let mut bits = 0u128;
    for j in 1..lab.len() {
        for i in 0..j {
            bits = bits << 1 | g.has_edge(lab[i], lab[j]) as u128;
        }
    }
    bits
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let lab = canonical_labeling(g)?;
    Ok(CanonicalForm {
        n: g.order(),
        bits: labeled_bits(g, &lab),
    })
}

/// The canonical labeling as `lab[position] = vertex`.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<Vertex>> {
    let n = g.order();
    if n > CANONICAL_CAP {
        return Err(Error::TooLarge {
            what: "canonical form",
            n,
            cap: CANONICAL_CAP,
        });
    }
    let rows: Vec<u64> = (0..n).map(|u| g.row_word(u)).collect();
    let mut search = Search {
        g,
        rows: &rows,
        best: None,
        autos: Vec::new(),
    };
    let root = refine(&rows, vec![(1u64 << n) - 1]);
    search.descend(root, &mut Vec::new());
    Ok(search.best.expect("search reaches at least one leaf").lab)
}

/// Ordered partition: each cell is a vertex bitmask.
type Partition = Vec<u64>;

/// Splits cells by neighbour counts into splitter cells until stable.
/// Sub-cells are ordered by ascending count, which keeps the result
/// equivariant under relabeling.
fn refine(rows: &[u64], mut cells: Partition) -> Partition {
    'outer: loop {
        for ci in 0..cells.len() {
            let cell = cells[ci];
            if cell.count_ones() == 1 {
                continue;
            }
            for &splitter in cells.iter() {
                let mut counts: Vec<(u32, usize)> = bits_of(cell)
                    .map(|v| ((rows[v] & splitter).count_ones(), v))
                    .collect();
                if counts.iter().all(|&(c, _)| c == counts[0].0) {
                    continue;
                }
                counts.sort_unstable();
                let mut parts: Vec<u64> = Vec::new();
                let mut last = None;
                for (c, v) in counts {
                    if last != Some(c) {
                        parts.push(0);
                        last = Some(c);
                    }
                    *parts.last_mut().unwrap() |= 1 << v;
                }
                cells.splice(ci..=ci, parts);
                continue 'outer;
            }
        }
        return cells;
    }
}

fn bits_of(mask: u64) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let b = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        Some(b)
    })
}

struct Leaf {
    bits: u128,
    lab: Vec<Vertex>,
    path: Vec<Vertex>,
}

struct Search<'a> {
    g: &'a Graph,
    rows: &'a [u64],
    best: Option<Leaf>,
    /// Automorphisms as vertex maps.
    autos: Vec<Vec<Vertex>>,
}

impl Search<'_> {
    /// Explores the subtree below `cells`. Returns `Some(depth)` when an
    /// automorphism shows every remaining sibling at `depth` is redundant.
    fn descend(&mut self, cells: Partition, path: &mut Vec<Vertex>) -> Option<usize> {
        let depth = path.len();
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .map(|(i, _)| i);
        let Some(ti) = target else {
            return self.leaf(&cells, path);
        };

        let mut explored: Vec<Vertex> = Vec::new();
        for v in bits_of(cells[ti]) {
            if !explored.is_empty() && self.same_orbit(path, &explored, v) {
                continue;
            }
            explored.push(v);
            let mut child = cells.clone();
            child.splice(ti..=ti, [1u64 << v, cells[ti] & !(1u64 << v)]);
            let child = refine(self.rows, child);
            path.push(v);
            let jump = self.descend(child, path);
            path.pop();
            match jump {
                Some(k) if k < depth => return Some(k),
                _ => {}
            }
        }
        None
    }

    fn leaf(&mut self, cells: &Partition, path: &[Vertex]) -> Option<usize> {
        let lab: Vec<Vertex> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let bits = labeled_bits(self.g, &lab);
        match &self.best {
            Some(best) if bits == best.bits => {
                let mut auto = vec![0; lab.len()];
                for (p, &v) in best.lab.iter().enumerate() {
                    auto[v] = lab[p];
                }
                let common = best.path.iter().zip(path).take_while(|(a, b)| a == b).count();
                self.autos.push(auto);
                Some(common)
            }
            Some(best) if bits > best.bits => None,
            _ => {
                self.best = Some(Leaf {
                    bits,
                    lab,
                    path: path.to_vec(),
                });
                None
            }
        }
    }

    /// Whether `v` shares an orbit with an explored vertex under the group
    /// generated by known automorphisms that fix `path` pointwise.
    fn same_orbit(&self, path: &[Vertex], explored: &[Vertex], v: Vertex) -> bool {
        let n = self.rows.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for auto in &self.autos {
            if path.iter().any(|&p| auto[p] != p) {
                continue;
            }
            for (x, &y) in auto.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                parent[a] = b;
            }
        }
        let root = find(&mut parent, v);
        explored.iter().any(|&e| find(&mut parent, e) == root)
    }
}
