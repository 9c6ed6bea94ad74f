//! Verdicts for the bounds relating the resolving number to diameter, girth,
//! clique number, order and maximum degree, and the pair-counting inequality.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph, Vertex};
use crate::invariants::{Girth, InvariantSummary};
use crate::resolve::{metric_dimension, upper_dimension, ORACLE_CAP};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub enum PropId {
    DiamTree,
    Girth,
    CliqueUB,
    OrderBounds,
    OrderTree,
    MaxDeg,
    MaxDegTree,
    Chain,
}

impl PropId {
    pub const ALL: [PropId; 8] = [
        PropId::DiamTree,
        PropId::Girth,
        PropId::CliqueUB,
        PropId::OrderBounds,
        PropId::OrderTree,
        PropId::MaxDeg,
        PropId::MaxDegTree,
        PropId::Chain,
    ];

    pub fn parse(s: &str) -> Option<PropId> {
        PropId::ALL.into_iter().find(|p| format!("{p:?}").eq_ignore_ascii_case(s))
    }
}

/// One bound evaluated on one graph. `holds` is exactly `lhs <= rhs`;
/// when the bound is not applicable every numeric field is `None`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct BoundVerdict {
    pub prop_id: PropId,
    pub applicable: bool,
    pub reason: String,
    pub lhs: Option<i64>,
    pub rhs: Option<i64>,
    pub holds: Option<bool>,
    pub equality: Option<bool>,
    /// Whether equality occurs exactly when the graph lies in the
    /// characterized extremal family; `None` where none is characterized.
    pub extremal_match: Option<bool>,
}

impl BoundVerdict {
    fn skip(prop_id: PropId, reason: impl Into<String>) -> Self {
        BoundVerdict {
            prop_id,
            applicable: false,
            reason: reason.into(),
            lhs: None,
            rhs: None,
            holds: None,
            equality: None,
            extremal_match: None,
        }
    }

    fn check(prop_id: PropId, reason: impl Into<String>, lhs: i64, rhs: i64, family: Option<bool>) -> Self {
        let equality = lhs == rhs;
        BoundVerdict {
            prop_id,
            applicable: true,
            reason: reason.into(),
            lhs: Some(lhs),
            rhs: Some(rhs),
            holds: Some(lhs <= rhs),
            equality: Some(equality),
            extremal_match: family.map(|member| member == equality),
        }
    }

    /// Applicable and violated.
    pub fn is_violation(&self) -> bool {
        self.holds == Some(false)
    }
}

/// Several inequalities folded into one verdict: reports the first failing
/// link, or `primary` when all hold.
fn fold_links(
    prop_id: PropId,
    reason: String,
    links: &[(&str, i64, i64)],
    primary: usize,
    family: Option<bool>,
) -> BoundVerdict {
    let (label, lhs, rhs) = links
        .iter()
        .find(|(_, l, r)| l > r)
        .copied()
        .unwrap_or(links[primary]);
    BoundVerdict::check(prop_id, format!("{reason}; {label}"), lhs, rhs, family)
}

pub fn verify_bounds(g: &Graph, inv: &InvariantSummary, res: usize) -> Vec<BoundVerdict> {
    PropId::ALL.iter().map(|&p| verify_bound(g, inv, res, p)).collect()
}

pub fn verify_bound(g: &Graph, inv: &InvariantSummary, res: usize, prop: PropId) -> BoundVerdict {
    let r = res as i64;
    let n = inv.n as i64;
    let non_path_tree = inv.is_tree && !inv.is_path;
    let plain = !inv.is_path && !inv.is_cycle;
    match prop {
        PropId::DiamTree if !non_path_tree => BoundVerdict::skip(prop, "not a tree other than a path"),
        PropId::DiamTree => {
            let b = res.checked_sub(2);
            let member = matches!(inv.spider, Some((a, x, y)) if x == y && Some(y) == b && a <= y);
            BoundVerdict::check(prop, "d(T) <= 2res - 4", inv.diameter as i64, 2 * r - 4, Some(member))
        }
        PropId::Girth => match inv.girth {
            _ if inv.is_tree || inv.is_cycle => BoundVerdict::skip(prop, "tree or cycle"),
            Girth::Finite(gi) => BoundVerdict::check(prop, "g <= 2res - 1", gi as i64, 2 * r - 1, None),
            Girth::Infinite => BoundVerdict::skip(prop, "acyclic"),
        },
        PropId::CliqueUB => {
            BoundVerdict::check(prop, "omega <= res + 1", inv.omega as i64, r + 1, Some(inv.is_complete()))
        }
        PropId::OrderBounds if !plain => BoundVerdict::skip(prop, "path or cycle"),
        PropId::OrderBounds => {
            let (case, upper) = match inv.girth {
                Girth::Finite(3) => ("g = 3: n <= 3res - 3", 3 * r - 3),
                Girth::Finite(4) => ("g = 4: n <= 4res - 4", 4 * r - 4),
                Girth::Finite(5) => ("g = 5: n <= 5res - 5", 5 * r - 5),
                _ if inv.max_degree > 3 => ("g > 5, Δ > 3: n <= 5res - 9", 5 * r - 9),
                _ => ("g > 5, Δ = 3: n <= 6res - 8", 6 * r - 8),
            };
            fold_links(
                prop,
                case.to_string(),
                &[("upper", n, upper), ("lower res + 1 <= n", r + 1, n)],
                0,
                None,
            )
        }
        PropId::OrderTree if !non_path_tree => BoundVerdict::skip(prop, "not a tree other than a path"),
        PropId::OrderTree => {
            let a = res.checked_sub(2);
            let member = matches!(inv.spider, Some((x, y, z)) if x == y && y == z && Some(z) == a);
            BoundVerdict::check(prop, "n <= 3res - 5", n, 3 * r - 5, Some(member))
        }
        PropId::MaxDeg if !plain => BoundVerdict::skip(prop, "path or cycle"),
        PropId::MaxDeg => {
            let (case, rhs) = if inv.girth == Girth::Finite(3) {
                ("g = 3: Δ <= 3res - 4", 3 * r - 4)
            } else {
                ("g > 3: Δ <= res", r)
            };
            BoundVerdict::check(prop, case, inv.max_degree as i64, rhs, None)
        }
        PropId::MaxDegTree if !non_path_tree => BoundVerdict::skip(prop, "not a tree other than a path"),
        PropId::MaxDegTree => {
            BoundVerdict::check(prop, "Δ(T) <= res", inv.max_degree as i64, r, Some(inv.is_star))
        }
        PropId::Chain if inv.n > ORACLE_CAP => {
            BoundVerdict::skip(prop, format!("order above the exhaustive cap {ORACLE_CAP}"))
        }
        PropId::Chain => {
            let (Ok((dim, _)), Ok((updim, _))) = (metric_dimension(g), upper_dimension(g)) else {
                return BoundVerdict::skip(prop, "dimension search failed");
            };
            let (dim, updim) = (dim as i64, updim as i64);
            let top = if inv.n == 1 { r } else { n - 1 };
            fold_links(
                prop,
                format!("dim = {dim}, updim = {updim}, res = {res}"),
                &[
                    ("1 <= dim", 1, dim),
                    ("dim <= updim", dim, updim),
                    ("updim <= res", updim, r),
                    ("res <= n - 1", r, top),
                ],
                2,
                None,
            )
        }
    }
}

/// `P_2(A)`: all unordered pairs of `set`.
pub fn pairs_of(set: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    let mut pairs = Vec::new();
    for (i, &a) in set.iter().enumerate() {
        for &b in &set[i + 1..] {
            pairs.push((a.min(b), a.max(b)));
        }
    }
    pairs
}

/// Checks the pair-counting inequality: if every vertex of part `i` fails
/// to resolve at least `k[i]` pairs of `pairs`, then
/// `sum |V_i| k_i <= |pairs| (res - 1)`.
///
/// Returns `(hypothesis_ok, inequality_ok)`.
pub fn counting_lemma_check(
    dm: &DistanceMatrix,
    res: usize,
    pairs: &[(Vertex, Vertex)],
    partition: &[Vec<Vertex>],
    k: &[usize],
) -> Result<(bool, bool)> {
    let n = dm.order();
    if partition.len() != k.len() {
        return Err(Error::InvalidPartition(format!(
            "{} parts but {} thresholds",
            partition.len(),
            k.len()
        )));
    }
    let mut seen = BTreeSet::new();
    for &v in partition.iter().flatten() {
        if v >= n || !seen.insert(v) {
            return Err(Error::InvalidPartition(format!("vertex {v} repeated or out of range")));
        }
    }
    if seen.len() != n {
        return Err(Error::InvalidPartition(format!("covers {} of {n} vertices", seen.len())));
    }
    if let Some(&(x, y)) = pairs.iter().find(|&&(x, y)| x == y || x >= n || y >= n) {
        return Err(Error::InvalidPartition(format!("bad pair ({x}, {y})")));
    }
    let unresolved = |u: Vertex| pairs.iter().filter(|&&(x, y)| dm.get(u, x) == dm.get(u, y)).count();
    let hypothesis_ok = partition
        .iter()
        .zip(k)
        .all(|(part, &ki)| part.iter().all(|&u| unresolved(u) >= ki));
    let lhs: usize = partition.iter().zip(k).map(|(part, &ki)| part.len() * ki).sum();
    let inequality_ok = lhs <= pairs.len() * res.saturating_sub(1);
    Ok((hypothesis_ok, inequality_ok))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};
    use crate::invariants::invariant_summary;
    use crate::resolve::resolving_number;

    fn verdicts(spec: FamilySpec) -> Vec<BoundVerdict> {
        let g = generate(&spec).unwrap();
        let dm = DistanceMatrix::new(&g).unwrap();
        let inv = invariant_summary(&g, &dm).unwrap();
        let res = resolving_number(&g).unwrap().res;
        verify_bounds(&g, &inv, res)
    }

    fn pick(v: &[BoundVerdict], p: PropId) -> &BoundVerdict {
        v.iter().find(|b| b.prop_id == p).unwrap()
    }

    #[test]
    fn complete_graph_meets_clique_bound() {
        let v = verdicts(FamilySpec::Complete(6));
        let c = pick(&v, PropId::CliqueUB);
        assert_eq!((c.lhs, c.rhs, c.equality, c.extremal_match), (Some(6), Some(6), Some(true), Some(true)));
    }

    #[test]
    fn spider_meets_tree_order_bound() {
        let v = verdicts(FamilySpec::Spider(2, 2, 2));
        let c = pick(&v, PropId::OrderTree);
        assert_eq!((c.lhs, c.rhs, c.equality, c.extremal_match), (Some(7), Some(7), Some(true), Some(true)));
    }

    #[test]
    fn pendant_cycle_meets_girth_bound() {
        let v = verdicts(FamilySpec::PendantCycle(3));
        let c = pick(&v, PropId::Girth);
        assert_eq!((c.lhs, c.rhs, c.equality), (Some(7), Some(7), Some(true)));
    }

    #[test]
    fn wheel_meets_degree_bound() {
        let v = verdicts(FamilySpec::Wheel(5));
        let c = pick(&v, PropId::MaxDeg);
        assert_eq!((c.lhs, c.rhs, c.equality), (Some(5), Some(5), Some(true)));
    }

    #[test]
    fn applicability() {
        let v = verdicts(FamilySpec::Path(6));
        for p in [PropId::DiamTree, PropId::OrderTree, PropId::OrderBounds, PropId::MaxDeg, PropId::Girth] {
            let b = pick(&v, p);
            assert!(!b.applicable && b.holds.is_none() && b.lhs.is_none(), "{p:?}");
        }
        let v = verdicts(FamilySpec::Cycle(20));
        assert!(!pick(&v, PropId::Chain).applicable);
        assert!(v.iter().all(|b| !b.is_violation()));
    }

    #[test]
    fn counting_lemma_examples() {
        let g = generate(&FamilySpec::Cycle(4)).unwrap();
        let dm = DistanceMatrix::new(&g).unwrap();
        let all: Vec<Vertex> = (0..4).collect();
        assert_eq!(
            counting_lemma_check(&dm, 3, &[(0, 2), (1, 3)], &[all.clone()], &[1]).unwrap(),
            (true, true)
        );
        assert_eq!(counting_lemma_check(&dm, 3, &pairs_of(&all), &[all.clone()], &[0]).unwrap(), (true, true));

        let w = generate(&FamilySpec::Wheel(5)).unwrap();
        let dm = DistanceMatrix::new(&w).unwrap();
        let all: Vec<Vertex> = (0..6).collect();
        assert_eq!(counting_lemma_check(&dm, 3, &pairs_of(&[0, 1, 2]), &[all], &[1]).unwrap(), (true, true));

        assert!(matches!(
            counting_lemma_check(&dm, 3, &[], &[vec![0, 1]], &[0]),
            Err(Error::InvalidPartition(_))
        ));
        assert!(matches!(
            counting_lemma_check(&dm, 3, &[], &[vec![0, 1, 2], vec![2, 3, 4, 5]], &[0, 0]),
            Err(Error::InvalidPartition(_))
        ));
    }

    #[test]
    fn prop_ids_parse() {
        assert_eq!(PropId::parse("maxdegtree"), Some(PropId::MaxDegTree));
        assert_eq!(PropId::parse("nope"), None);
    }
}
