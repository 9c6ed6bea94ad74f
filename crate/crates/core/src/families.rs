//! Named graph families, the `res <= 3` classifier, and the catalog of
//! graphs with resolving number three.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::canonical::{canonical_form, CanonicalForm, CANONICAL_CAP};
use crate::enumerate::{enumerate_graphs, EnumConstraints};
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph, Vertex};
use crate::invariants::{clique_number, girth, invariant_summary, Girth};
use crate::io::{parse_graph6, write_graph6};
use crate::resolve::resolving_number;

/// The four small graphs with clique number and resolving number four that
/// are not of the form `G_{4,b}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Witness {
    G1,
    G2,
    G3,
    G4,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// Edgeless graph; useful only as a join operand.
    Empty(usize),
    /// `K_{1,a}`.
    Star(usize),
    /// Three legs of the given lengths glued at a centre.
    Spider(usize, usize, usize),
    /// `K_a` plus one vertex adjacent to `b` of its vertices.
    Gab(usize, usize),
    /// Hub joined to every vertex of `C_m`.
    Wheel(usize),
    /// `C_{2a+1}` with a pendant edge.
    PendantCycle(usize),
    /// Triangle with a path of length `r - 2` hanging from each vertex.
    TriangleTripod(usize),
    ProofWitness(Witness),
    Join(Box<FamilySpec>, Box<FamilySpec>),
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidFamilyParam(msg.into())
}

fn path_edges(vertices: &[Vertex]) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
    vertices.windows(2).map(|w| (w[0], w[1]))
}

fn clique_edges(k: usize) -> impl Iterator<Item = (Vertex, Vertex)> {
    (0..k).flat_map(move |u| (u + 1..k).map(move |v| (u, v)))
}

impl FamilySpec {
    /// Parses a CLI family name and comma-separated parameters.
    pub fn from_name(name: &str, params: &[usize]) -> Result<Self> {
        let arity = |k: usize| {
            if params.len() == k {
                Ok(())
            } else {
                Err(invalid(format!("{name} takes {k} parameter(s), got {}", params.len())))
            }
        };
        let spec = match name {
            "path" => arity(1).map(|_| FamilySpec::Path(params[0])),
            "cycle" => arity(1).map(|_| FamilySpec::Cycle(params[0])),
            "complete" => arity(1).map(|_| FamilySpec::Complete(params[0])),
            "empty" => arity(1).map(|_| FamilySpec::Empty(params[0])),
            "star" => arity(1).map(|_| FamilySpec::Star(params[0])),
            "spider" => arity(3).map(|_| FamilySpec::Spider(params[0], params[1], params[2])),
            "gab" => arity(2).map(|_| FamilySpec::Gab(params[0], params[1])),
            "wheel" => arity(1).map(|_| FamilySpec::Wheel(params[0])),
            "pendant-cycle" => arity(1).map(|_| FamilySpec::PendantCycle(params[0])),
            "triangle-tripod" => arity(1).map(|_| FamilySpec::TriangleTripod(params[0])),
            "witness" => arity(1).and_then(|_| {
                let w = match params[0] {
                    1 => Witness::G1,
                    2 => Witness::G2,
                    3 => Witness::G3,
                    4 => Witness::G4,
                    k => return Err(invalid(format!("witness index {k} not in 1..=4"))),
                };
                Ok(FamilySpec::ProofWitness(w))
            }),
            _ => Err(invalid(format!("unknown family `{name}`"))),
        }?;
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "P{n}"),
            FamilySpec::Cycle(n) => write!(f, "C{n}"),
            FamilySpec::Complete(n) => write!(f, "K{n}"),
            FamilySpec::Empty(n) => write!(f, "E{n}"),
            FamilySpec::Star(a) => write!(f, "K1,{a}"),
            FamilySpec::Spider(a, b, c) => write!(f, "S{a},{b},{c}"),
            FamilySpec::Gab(a, b) => write!(f, "G{a},{b}"),
            FamilySpec::Wheel(m) => write!(f, "W1,{m}"),
            FamilySpec::PendantCycle(a) => write!(f, "C{}+pendant", 2 * a + 1),
            FamilySpec::TriangleTripod(r) => write!(f, "tripod{r}"),
            FamilySpec::ProofWitness(w) => write!(f, "{w:?}"),
            FamilySpec::Join(a, b) => write!(f, "({a})+({b})"),
        }
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    use FamilySpec::*;
    match *spec {
        Path(n) | Complete(n) | Empty(n) if n == 0 => Err(invalid(format!("{spec}: order must be >= 1"))),
        Path(n) => Graph::from_edge_list(n, (1..n).map(|i| (i - 1, i))),
        Cycle(n) if n < 3 => Err(invalid(format!("cycle order {n} < 3"))),
        Cycle(n) => Graph::from_edge_list(n, (0..n).map(|i| (i, (i + 1) % n))),
        Complete(n) => Graph::from_edge_list(n, clique_edges(n)),
        Empty(n) => Graph::empty(n),
        Star(0) => Err(invalid("star needs a >= 1")),
        Star(a) => Graph::from_edge_list(a + 1, (1..=a).map(|i| (0, i))),
        Spider(a, b, c) if a.min(b).min(c) == 0 => Err(invalid("spider legs must be >= 1")),
        Spider(a, b, c) => {
            let mut edges = Vec::new();
            let mut next = 1;
            for len in [a, b, c] {
                let leg: Vec<Vertex> = std::iter::once(0).chain(next..next + len).collect();
                edges.extend(path_edges(&leg));
                next += len;
            }
            Graph::from_edge_list(next, edges)
        }
        Gab(a, b) if b == 0 || b >= a => Err(invalid(format!("G_(a,b) needs 1 <= b < a, got ({a},{b})"))),
        Gab(a, b) => Graph::from_edge_list(a + 1, clique_edges(a).chain((0..b).map(|i| (i, a)))),
        Wheel(m) if m < 3 => Err(invalid(format!("wheel rim {m} < 3"))),
        Wheel(m) => Graph::from_edge_list(
            m + 1,
            (1..=m).map(|i| (0, i)).chain((0..m).map(|i| (1 + i, 1 + (i + 1) % m))),
        ),
        PendantCycle(a) if a < 3 => Err(invalid(format!("pendant cycle needs a >= 3, got {a}"))),
        PendantCycle(a) => {
            let c = 2 * a + 1;
            Graph::from_edge_list(c + 1, (0..c).map(|i| (i, (i + 1) % c)).chain([(0, c)]))
        }
        TriangleTripod(r) if r < 3 => Err(invalid(format!("triangle tripod needs r >= 3, got {r}"))),
        TriangleTripod(r) => {
            let tail = r - 2;
            let mut edges = vec![(0, 1), (1, 2), (0, 2)];
            for t in 0..3 {
                let start = 3 + t * tail;
                let leg: Vec<Vertex> = std::iter::once(t).chain(start..start + tail).collect();
                edges.extend(path_edges(&leg));
            }
            Graph::from_edge_list(3 + 3 * tail, edges)
        }
        ProofWitness(w) => proof_witness(w),
        Join(ref a, ref b) => Ok(generate(a)?.join(&generate(b)?)),
    }
}

/// Clique `K = {u1..u4}` on vertices 0..3, `u` = 4 on `{u1, u2}`, `v` = 5 on
/// `{u2, u3}`; G1 adds the edge `uv`, G2 does not. G3 and G4 add `w` = 6 on
/// `{u2, u4}` with no edges, respectively all edges, among `u, v, w`.
fn proof_witness(w: Witness) -> Result<Graph> {
    let mut edges: Vec<(Vertex, Vertex)> = clique_edges(4).collect();
    edges.extend([(0, 4), (1, 4), (1, 5), (2, 5)]);
    let n = match w {
        Witness::G1 => {
            edges.push((4, 5));
            6
        }
        Witness::G2 => 6,
        Witness::G3 => {
            edges.extend([(1, 6), (3, 6)]);
            7
        }
        Witness::G4 => {
            edges.extend([(1, 6), (3, 6), (4, 5), (5, 6), (4, 6)]);
            7
        }
    };
    let g = Graph::from_edge_list(n, edges)?;
    let (omega, res) = (clique_number(&g), resolving_number(&g)?.res);
    if omega != 4 || res != 4 {
        return Err(Error::TheoremViolation(format!(
            "{w:?} built with omega = {omega}, res = {res}; expected 4 and 4"
        )));
    }
    Ok(g)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum CategoryTag {
    TrivialPath,
    Path,
    OddCycle,
    EvenCycle,
    Star3,
    CatalogGirth3,
    CatalogGirth5,
    ResAtLeast4,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Category {
    pub tag: CategoryTag,
    pub res: usize,
}

/// Classifies a connected graph by its resolving number and structure.
///
/// Any disagreement between the two (a non-path, non-odd-cycle with
/// `res <= 2`, or a `res = 3` graph outside the catalog) is reported as
/// [`Error::TheoremViolation`].
pub fn classify_res(g: &Graph, catalog: Option<&Res3Catalog>) -> Result<Category> {
    let dm = DistanceMatrix::new(g)?;
    let res = crate::resolve::resolving_number_from(&dm).res;
    let inv = invariant_summary(g, &dm)?;
    let violation = |what: &str| {
        Err(Error::TheoremViolation(format!(
            "{what} but res = {res} (n = {}, m = {})",
            inv.n, inv.m
        )))
    };
    use CategoryTag::*;
    let tag = if inv.n <= 2 {
        TrivialPath
    } else if inv.is_path {
        Path
    } else if inv.is_cycle && inv.n % 2 == 1 {
        OddCycle
    } else if inv.is_cycle {
        EvenCycle
    } else if inv.is_star && inv.n == 4 {
        Star3
    } else if res <= 2 {
        return violation("neither a path nor an odd cycle");
    } else if res >= 4 {
        ResAtLeast4
    } else {
        let catalog = catalog.ok_or(Error::CatalogMissing)?;
        match catalog.find(g) {
            Some(m) if m.girth == Girth::Finite(3) => CatalogGirth3,
            Some(m) if m.girth == Girth::Finite(5) => CatalogGirth5,
            Some(_) => return violation("catalog member of girth other than 3 or 5"),
            None => return violation("graph outside the catalog"),
        }
    };
    let expected = match tag {
        TrivialPath => res == 1,
        Path | OddCycle => res == 2,
        EvenCycle | Star3 | CatalogGirth3 | CatalogGirth5 => res == 3,
        ResAtLeast4 => res >= 4,
    };
    if !expected {
        return violation(&format!("structural class {tag:?}"));
    }
    Ok(Category { tag, res })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CatalogMember {
    /// Graph in canonical labeling.
    pub graph: Graph,
    pub form: CanonicalForm,
    pub graph6: String,
    pub n: usize,
    pub girth: Girth,
    pub omega: usize,
    pub degree_sequence: Vec<usize>,
}

impl CatalogMember {
    fn new(g: &Graph) -> Result<Self> {
        let form = canonical_form(g)?;
        let graph = form.to_graph();
        Ok(CatalogMember {
            graph6: write_graph6(&graph)?,
            n: graph.order(),
            girth: girth(&graph),
            omega: clique_number(&graph),
            degree_sequence: graph.degree_sequence(),
            form,
            graph,
        })
    }
}

/// Connected graphs with resolving number three other than even cycles and
/// `K_{1,3}`, sorted by graph6 string.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Res3Catalog {
    members: Vec<CatalogMember>,
}

/// Embedded copy of `data/res3_catalog.g6`.
const FIXTURE: &str = include_str!("../data/res3_catalog.g6");

/// Enumeration slices that must contain every `res = 3` graph.
///
/// Order is at most `3res - 3 = 6` at girth 3, `4res - 4 = 8` at girth 4 and
/// `6res - 8 = 10` beyond, with `Δ <= res = 3` whenever girth exceeds 3; so
/// every connected graph to order 7 plus subcubic triangle-free graphs at
/// order 8 and subcubic girth-5 graphs at orders 9 and 10 suffice.
pub fn res3_search_space() -> Vec<EnumConstraints> {
    let mut slices: Vec<EnumConstraints> = (1..=7).map(EnumConstraints::connected).collect();
    slices.push(EnumConstraints::connected(8).with_max_degree(3).with_min_girth(4));
    for n in 9..=10 {
        slices.push(EnumConstraints::connected(n).with_max_degree(3).with_min_girth(5));
    }
    slices
}

impl Res3Catalog {
    /// Derives the catalog by exhaustive enumeration of [`res3_search_space`].
    pub fn build() -> Result<Self> {
        let mut graphs = Vec::new();
        for c in res3_search_space() {
            graphs.extend(enumerate_graphs(&c)?);
        }
        Self::from_graphs(graphs)
    }

    /// Keeps the `res = 3` graphs of a stream that are neither cycles nor
    /// `K_{1,3}`, deduplicated by canonical form.
    pub fn from_graphs<I: IntoIterator<Item = Graph>>(graphs: I) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut members = Vec::new();
        for g in graphs {
            if !g.is_connected() || resolving_number(&g)?.res != 3 {
                continue;
            }
            let degrees = g.degree_sequence();
            let is_cycle = degrees.iter().all(|&d| d == 2);
            let is_claw = degrees == [1, 1, 1, 3];
            if is_cycle || is_claw {
                continue;
            }
            let member = CatalogMember::new(&g)?;
            if seen.insert(member.form) {
                members.push(member);
            }
        }
        members.sort_by(|a, b| a.graph6.cmp(&b.graph6));
        Ok(Res3Catalog { members })
    }

    pub fn from_fixture(text: &str) -> Result<Self> {
        let graphs = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| parse_graph6(l.trim()))
            .collect::<Result<Vec<_>>>()?;
        let members = graphs.iter().map(CatalogMember::new).collect::<Result<Vec<_>>>()?;
        let mut catalog = Res3Catalog { members };
        catalog.members.sort_by(|a, b| a.graph6.cmp(&b.graph6));
        Ok(catalog)
    }

    /// The checked-in catalog shipped with the crate.
    pub fn embedded() -> Result<Self> {
        Self::from_fixture(FIXTURE)
    }

    /// One graph6 line per member, sorted, newline-terminated.
    pub fn to_fixture(&self) -> String {
        self.members.iter().map(|m| format!("{}\n", m.graph6)).collect()
    }

    pub fn members(&self) -> &[CatalogMember] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn find(&self, g: &Graph) -> Option<&CatalogMember> {
        if g.order() > CANONICAL_CAP {
            return None;
        }
        let form = canonical_form(g).ok()?;
        self.members.iter().find(|m| m.form == form)
    }

    pub fn contains(&self, g: &Graph) -> bool {
        self.find(g).is_some()
    }

    pub fn with_girth(&self, g: Girth) -> impl Iterator<Item = &CatalogMember> {
        self.members.iter().filter(move |m| m.girth == g)
    }
}

/// Which statement of the `ω = res` characterization a graph instantiates.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum CliqueStatement {
    /// `K_1`.
    I,
    /// Paths of order at least 3 and odd cycles of order at least 5.
    II,
    /// `ω = res = 3`: girth-3 catalog members.
    III,
    /// `ω = res = 4`: G1..G4 or `G_{4,b}`.
    IV,
    /// `ω = res >= 5`: `G_{a,b}` with `a = res`.
    V,
}

/// `Some(b)` when `g` is `K_a` plus one vertex of degree `b < a`.
pub fn gab_shape(g: &Graph) -> Option<(usize, usize)> {
    let n = g.order();
    if n < 3 {
        return None;
    }
    let a = n - 1;
    let outsiders: Vec<Vertex> = (0..n).filter(|&u| g.degree(u) < a).collect();
    let x = match outsiders[..] {
        [x] => x,
        // b = a - 1 leaves exactly a - 1 clique vertices of full degree.
        _ => *outsiders.iter().min_by_key(|&&u| g.degree(u))?,
    };
    let b = g.degree(x);
    let clique_ok = (0..n)
        .filter(|&u| u != x)
        .all(|u| (0..n).filter(|&v| v != x && v != u).all(|v| g.has_edge(u, v)));
    (clique_ok && b >= 1 && b < a).then_some((a, b))
}

pub fn clique_res_category(g: &Graph, catalog: Option<&Res3Catalog>) -> Result<CliqueStatement> {
    let dm = DistanceMatrix::new(g)?;
    let res = crate::resolve::resolving_number_from(&dm).res;
    let inv = invariant_summary(g, &dm)?;
    if inv.omega != res {
        return Err(Error::NotApplicable(format!("omega = {} but res = {res}", inv.omega)));
    }
    let mismatch = |stmt: &str| {
        Err(Error::TheoremViolation(format!(
            "omega = res = {res} but the structure of statement {stmt} is absent"
        )))
    };
    match res {
        1 if inv.n == 1 => Ok(CliqueStatement::I),
        1 => mismatch("(i)"),
        2 if (inv.is_path && inv.n >= 3) || (inv.is_cycle && inv.n % 2 == 1 && inv.n >= 5) => {
            Ok(CliqueStatement::II)
        }
        2 => mismatch("(ii)"),
        3 => {
            let catalog = catalog.ok_or(Error::CatalogMissing)?;
            match catalog.find(g) {
                Some(m) if m.girth == Girth::Finite(3) => Ok(CliqueStatement::III),
                _ => mismatch("(iii)"),
            }
        }
        4 => {
            let is_witness = inv.n <= 7 && {
                let form = canonical_form(g)?;
                [Witness::G1, Witness::G2, Witness::G3, Witness::G4]
                    .into_iter()
                    .map(|w| canonical_form(&proof_witness(w)?))
                    .collect::<Result<Vec<_>>>()?
                    .contains(&form)
            };
            if is_witness || gab_shape(g).is_some_and(|(a, _)| a == 4) {
                Ok(CliqueStatement::IV)
            } else {
                mismatch("(iv)")
            }
        }
        _ => match gab_shape(g) {
            Some((a, _)) if a == res => Ok(CliqueStatement::V),
            _ => mismatch("(v)"),
        },
    }
}
