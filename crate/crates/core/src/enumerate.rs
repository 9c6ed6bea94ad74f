//! Isomorph-free generation of small graphs.
//!
//! Classes at order `n` are grown from classes at order `n - 1` by adding one
//! vertex with every admissible neighbourhood, then deduplicated by canonical
//! form. Connectivity, a degree cap, a girth floor and treeness are all
//! preserved by deleting a non-cut vertex, so the level-by-level closure
//! reaches every class.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;

use crate::canonical::{canonical_form, labeled_bits, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{all_pairs_hops, Graph, UNREACHABLE};
use crate::invariants::{girth, Girth};

pub const EXHAUSTIVE_CAP: usize = 7;
pub const TREE_CAP: usize = 12;
pub const CONSTRAINED_CAP: usize = 10;
pub const NAIVE_CAP: usize = 6;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct EnumConstraints {
    pub n: usize,
    pub max_degree: Option<usize>,
    /// `Girth::Infinite` restricts the output to trees.
    pub min_girth: Option<Girth>,
    pub connected_only: bool,
    pub trees_only: bool,
}

impl EnumConstraints {
    pub fn connected(n: usize) -> Self {
        EnumConstraints {
            n,
            max_degree: None,
            min_girth: None,
            connected_only: true,
            trees_only: false,
        }
    }

    pub fn trees(n: usize) -> Self {
        EnumConstraints {
            trees_only: true,
            ..Self::connected(n)
        }
    }

    pub fn with_max_degree(mut self, d: usize) -> Self {
        self.max_degree = Some(d);
        self
    }

    pub fn with_min_girth(mut self, g: usize) -> Self {
        self.min_girth = Some(Girth::Finite(g));
        self
    }

    fn wants_trees(&self) -> bool {
        self.trees_only || self.min_girth == Some(Girth::Infinite)
    }

    /// Caps: any class to order 7; trees to 12; subcubic graphs of girth at
    /// least 4 to order 8 and of girth at least 5 to order 10.
    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        let subcubic = self.max_degree.is_some_and(|d| d <= 3);
        let girth_at_least = |g| self.min_girth.is_some_and(|m| m >= Girth::Finite(g));
        let ok = if self.wants_trees() {
            n <= TREE_CAP
        } else {
            n <= EXHAUSTIVE_CAP
                || (n <= 8 && subcubic && girth_at_least(4))
                || (n <= CONSTRAINED_CAP && subcubic && girth_at_least(5))
        };
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if !ok {
            let cap = if self.wants_trees() {
                TREE_CAP
            } else if subcubic && girth_at_least(4) {
                if girth_at_least(5) { CONSTRAINED_CAP } else { 8 }
            } else {
                EXHAUSTIVE_CAP
            };
            return Err(Error::TooLarge {
                what: "enumeration",
                n,
                cap,
            });
        }
        Ok(())
    }

    /// Post-hoc check of every constraint on a finished graph.
    pub fn admits(&self, g: &Graph) -> bool {
        let connected = g.is_connected();
        let acyclic = girth(g) == Girth::Infinite;
        g.order() == self.n
            && (!self.connected_only || connected)
            && (!self.wants_trees() || (connected && acyclic))
            && self.max_degree.is_none_or(|d| g.max_degree() <= d)
            && self.min_girth.is_none_or(|m| girth(g) >= m)
    }
}

/// Traversal order over parents and neighbourhoods. Output is identical for
/// both; the reverse order exists to test that claim.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Exploration {
    #[default]
    Forward,
    Reverse,
}

/// One graph per isomorphism class, in canonical labeling, sorted by
/// canonical form.
pub fn enumerate_graphs(c: &EnumConstraints) -> Result<std::vec::IntoIter<Graph>> {
    enumerate_graphs_ordered(c, Exploration::Forward)
}

pub fn enumerate_graphs_ordered(
    c: &EnumConstraints,
    order: Exploration,
) -> Result<std::vec::IntoIter<Graph>> {
    c.validate()?;
    let mut level: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    let k1 = Graph::empty(1)?;
    level.insert(canonical_form(&k1)?, k1);
    for _ in 1..c.n {
        level = grow(&level, c, order)?;
    }
    Ok(level.into_values().collect::<Vec<_>>().into_iter())
}

fn grow(
    level: &BTreeMap<CanonicalForm, Graph>,
    c: &EnumConstraints,
    order: Exploration,
) -> Result<BTreeMap<CanonicalForm, Graph>> {
    let trees = c.wants_trees();
    let connected = c.connected_only || trees;
    let min_cycle = match c.min_girth {
        Some(Girth::Finite(g)) => g,
        _ => 0,
    };
    let mut next = BTreeMap::new();
    let mut parents: Vec<&Graph> = level.values().collect();
    if order == Exploration::Reverse {
        parents.reverse();
    }
    for parent in parents {
        let n = parent.order();
        let hops = all_pairs_hops(parent);
        let open: Vec<usize> = (0..n)
            .filter(|&u| c.max_degree.is_none_or(|d| parent.degree(u) < d))
            .collect();
        let lo = usize::from(connected);
        let hi = if trees { 1 } else { c.max_degree.unwrap_or(n).min(open.len()) };
        let mut sets: Vec<Vec<usize>> = (lo..=hi)
            .flat_map(|k| open.iter().copied().combinations(k))
            .collect();
        if order == Exploration::Reverse {
            sets.reverse();
        }
        for set in sets {
            // A new vertex on a and b closes a cycle of length d(a, b) + 2.
            let short = set.iter().tuple_combinations().any(|(&a, &b)| {
                let d = hops[a * n + b];
                d != UNREACHABLE && (d as usize) + 2 < min_cycle
            });
            if short {
                continue;
            }
            let child = parent.with_vertex(&set);
            let form = canonical_form(&child)?;
            next.entry(form).or_insert_with(|| form.to_graph());
        }
    }
    Ok(next)
}

/// Minimum adjacency string over all `n!` labelings: an isomorphism
/// invariant that shares nothing with the refinement search.
pub fn brute_force_form(g: &Graph) -> CanonicalForm {
    let n = g.order();
    let bits = (0..n)
        .permutations(n)
        .map(|lab| labeled_bits(g, &lab))
        .min()
        .unwrap_or(0);
    CanonicalForm { n, bits }
}

/// Connected classes of order `n <= 6` from every edge subset of `K_n`,
/// deduplicated by [`brute_force_form`].
pub fn naive_enumeration_oracle(n: usize) -> Result<BTreeSet<CanonicalForm>> {
    if n > NAIVE_CAP {
        return Err(Error::TooLarge {
            what: "naive enumeration",
            n,
            cap: NAIVE_CAP,
        });
    }
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let mut classes = BTreeSet::new();
    for subset in 0u32..1 << pairs.len() {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| subset >> i & 1 == 1)
            .map(|(_, &e)| e);
        let g = Graph::from_edge_list(n, edges)?;
        if !g.is_connected() {
            continue;
        }
        let bits = perms.iter().map(|lab| labeled_bits(&g, lab)).min().unwrap();
        classes.insert(CanonicalForm { n, bits });
    }
    Ok(classes)
}
