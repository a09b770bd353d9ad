//! Finite semigroupoids as validated partial multiplication tables.
//!
//! The product `s·t` is defined exactly on the composable pairs
//! `D(S) = {(s,t) : src(s) = dst(t)}` and satisfies `src(st) = src(t)`,
//! `dst(st) = dst(s)`. A semigroup is a semigroupoid with at most one vertex.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{CongruenceViolation, Error, Result};
use crate::graph::{
    self, check_morphism, fresh_name, Edge, EdgeSpec, Graph, GraphEquivalence, GraphMorphism,
    GraphSpec, MorphismDiagnostic, Vertex,
};

/// Largest edge count for which the exact associativity scan is attempted.
pub const ASSOCIATIVITY_SCAN_CAP: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteSemigroupoid {
    graph: Graph,
    /// Position of each edge among the edges sharing its range.
    rank: Vec<u32>,
    /// Edges grouped by range vertex: the right factors available to `s` are
    /// `incoming[src(s)]`.
    incoming: Vec<Vec<Edge>>,
    /// Edges grouped by source vertex.
    outgoing: Vec<Vec<Edge>>,
    /// `table[s][rank[t]] = s·t`.
    table: Vec<Vec<Edge>>,
    /// Edges introduced by the last [`adjoin_identities`] call.
    adjoined: Vec<bool>,
}

/// Unvalidated semigroupoid description keyed by identifiers.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SemigroupoidSpec {
    pub graph: GraphSpec,
    pub mul: BTreeMap<(String, String), String>,
    pub identities: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SgpdDiagnostic {
    Graph(graph::GraphDiagnostic),
    MissingProduct { s: String, t: String },
    UnknownEdge(String),
    NotComposable { s: String, t: String },
    Typing { s: String, t: String, st: String },
    NotAssociative { s: String, t: String, r: String },
    NotAnIdentity(String),
    TooLarge(usize),
}

impl fmt::Display for SgpdDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SgpdDiagnostic::Graph(d) => write!(f, "{d}"),
            SgpdDiagnostic::MissingProduct { s, t } => write!(f, "missing product {s}·{t}"),
            SgpdDiagnostic::UnknownEdge(e) => write!(f, "unknown edge `{e}`"),
            SgpdDiagnostic::NotComposable { s, t } => {
                write!(f, "product given for non-composable pair {s}·{t}")
            }
            SgpdDiagnostic::Typing { s, t, st } => write!(f, "typing law fails: {s}·{t} = {st}"),
            SgpdDiagnostic::NotAssociative { s, t, r } => {
                write!(f, "associativity fails on ({s}, {t}, {r})")
            }
            SgpdDiagnostic::NotAnIdentity(e) => write!(f, "`{e}` is not a local identity"),
            SgpdDiagnostic::TooLarge(n) => {
                write!(f, "{n} edges exceed the associativity scan cap {ASSOCIATIVITY_SCAN_CAP}")
            }
        }
    }
}

type Diagnostics = core::result::Result<(), Vec<SgpdDiagnostic>>;

/// Checks totality, typing and associativity of a table given by identifiers.
pub fn validate_semigroupoid(spec: &SemigroupoidSpec) -> Diagnostics {
    FiniteSemigroupoid::from_spec(spec).map(|_| ()).map_err(|e| match e {
        Error::InvalidSemigroupoid(d) => d,
        Error::InvalidGraph(d) => d.into_iter().map(SgpdDiagnostic::Graph).collect(),
        other => vec![SgpdDiagnostic::UnknownEdge(other.to_string())],
    })
}

impl FiniteSemigroupoid {
    fn layout(graph: &Graph) -> (Vec<u32>, Vec<Vec<Edge>>, Vec<Vec<Edge>>) {
        let mut incoming = vec![Vec::new(); graph.vertex_count()];
        let mut outgoing = vec![Vec::new(); graph.vertex_count()];
        let mut rank = vec![0; graph.edge_count()];
        for e in graph.edges() {
            let list = &mut incoming[graph.dst(e).index()];
            rank[e.index()] = list.len() as u32;
            list.push(e);
            outgoing[graph.src(e).index()].push(e);
        }
        (rank, incoming, outgoing)
    }

    /// Builds the table from `f` on composable pairs without the
    /// associativity scan. Typing is still enforced.
    pub(crate) fn from_fn_unvalidated(
        graph: Graph,
        mut f: impl FnMut(Edge, Edge) -> Edge,
    ) -> Result<FiniteSemigroupoid> {
        let (rank, incoming, outgoing) = Self::layout(&graph);
        let mut table = Vec::with_capacity(graph.edge_count());
        let mut diags = Vec::new();
        for s in graph.edges() {
            let row: Vec<Edge> = incoming[graph.src(s).index()]
                .iter()
                .map(|&t| {
                    let st = f(s, t);
                    if st.index() >= graph.edge_count() {
                        diags.push(SgpdDiagnostic::UnknownEdge(alloc::format!("#{}", st.0)));
                        return t;
                    }
                    if graph.src(st) != graph.src(t) || graph.dst(st) != graph.dst(s) {
                        diags.push(SgpdDiagnostic::Typing {
                            s: graph.edge_id(s).to_string(),
                            t: graph.edge_id(t).to_string(),
                            st: graph.edge_id(st).to_string(),
                        });
                    }
                    st
                })
                .collect();
            table.push(row);
        }
        if !diags.is_empty() {
            return Err(Error::InvalidSemigroupoid(diags));
        }
        let adjoined = vec![false; graph.edge_count()];
        Ok(FiniteSemigroupoid {
            graph,
            rank,
            incoming,
            outgoing,
            table,
            adjoined,
        })
    }

    /// Builds and fully validates a semigroupoid whose product on composable
    /// pairs is given by `f`.
    pub fn from_fn(graph: Graph, f: impl FnMut(Edge, Edge) -> Edge) -> Result<FiniteSemigroupoid> {
        let s = Self::from_fn_unvalidated(graph, f)?;
        s.validate().map_err(Error::InvalidSemigroupoid)?;
        Ok(s)
    }

    /// One-vertex semigroup on the named elements, with `mul` acting on
    /// positions in `names`.
    pub fn semigroup_from_elements(
        names: Vec<String>,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<FiniteSemigroupoid> {
        let (graph, to_pos, from_pos) = Self::one_vertex_layout(&names)?;
        Self::from_fn(graph, |s, t| from_pos[mul(to_pos[s.index()], to_pos[t.index()])])
    }

    pub(crate) fn semigroup_from_elements_unvalidated(
        names: Vec<String>,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<FiniteSemigroupoid> {
        let (graph, to_pos, from_pos) = Self::one_vertex_layout(&names)?;
        Self::from_fn_unvalidated(graph, |s, t| from_pos[mul(to_pos[s.index()], to_pos[t.index()])])
    }

    fn one_vertex_layout(names: &[String]) -> Result<(Graph, Vec<usize>, Vec<Edge>)> {
        let graph = if names.is_empty() {
            Graph::new(GraphSpec::default())?
        } else {
            Graph::one_vertex(names.iter().cloned())?
        };
        let from_pos: Vec<Edge> = names.iter().map(|n| graph.edge(n).unwrap()).collect();
        let mut to_pos = vec![0; names.len()];
        for (i, e) in from_pos.iter().enumerate() {
            to_pos[e.index()] = i;
        }
        Ok((graph, to_pos, from_pos))
    }

    pub fn from_spec(spec: &SemigroupoidSpec) -> Result<FiniteSemigroupoid> {
        let graph = Graph::new(spec.graph.clone())?;
        let mut diags = Vec::new();
        let mut given: BTreeMap<(Edge, Edge), Edge> = BTreeMap::new();
        for ((s, t), st) in &spec.mul {
            let (Some(se), Some(te), Some(ste)) = (graph.edge(s), graph.edge(t), graph.edge(st)) else {
                for id in [s, t, st] {
                    if graph.edge(id).is_none() {
                        diags.push(SgpdDiagnostic::UnknownEdge(id.clone()));
                    }
                }
                continue;
            };
            if graph.src(se) != graph.dst(te) {
                diags.push(SgpdDiagnostic::NotComposable {
                    s: s.clone(),
                    t: t.clone(),
                });
                continue;
            }
            given.insert((se, te), ste);
        }
        for s in graph.edges() {
            for t in graph.edges().filter(|&t| graph.dst(t) == graph.src(s)) {
                if !given.contains_key(&(s, t)) {
                    diags.push(SgpdDiagnostic::MissingProduct {
                        s: graph.edge_id(s).to_string(),
                        t: graph.edge_id(t).to_string(),
                    });
                }
            }
        }
        if !diags.is_empty() {
            return Err(Error::InvalidSemigroupoid(diags));
        }
        let mut sg = Self::from_fn(graph, |s, t| given[&(s, t)])?;
        for id in &spec.identities {
            let Some(e) = sg.graph.edge(id) else {
                return Err(Error::InvalidSemigroupoid(vec![SgpdDiagnostic::UnknownEdge(id.clone())]));
            };
            if !sg.is_local_identity(e) {
                return Err(Error::InvalidSemigroupoid(vec![SgpdDiagnostic::NotAnIdentity(id.clone())]));
            }
            sg.adjoined[e.index()] = true;
        }
        Ok(sg)
    }

    pub fn to_spec(&self) -> SemigroupoidSpec {
        let mut mul = BTreeMap::new();
        for s in self.edges() {
            for &t in self.right_factors(s) {
                mul.insert(
                    (self.name(s).to_string(), self.name(t).to_string()),
                    self.name(self.mul(s, t).unwrap()).to_string(),
                );
            }
        }
        SemigroupoidSpec {
            graph: self.graph.to_spec(),
            mul,
            identities: self
                .edges()
                .filter(|&e| self.is_adjoined(e))
                .map(|e| self.name(e).to_string())
                .collect(),
        }
    }

    /// Totality and typing hold by construction; this runs the exact
    /// associativity scan and reports the first failing triple.
    pub fn validate(&self) -> Diagnostics {
        let n = self.edge_count();
        if n > ASSOCIATIVITY_SCAN_CAP {
            return Err(vec![SgpdDiagnostic::TooLarge(n)]);
        }
        for s in self.edges() {
            for &t in self.right_factors(s) {
                let st = self.mul_composable(s, t);
                for &r in self.right_factors(t) {
                    if self.mul_composable(st, r) != self.mul_composable(s, self.mul_composable(t, r)) {
                        return Err(vec![SgpdDiagnostic::NotAssociative {
                            s: self.name(s).to_string(),
                            t: self.name(t).to_string(),
                            r: self.name(r).to_string(),
                        }]);
                    }
                }
            }
        }
        Ok(())
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn edges(&self) -> impl DoubleEndedIterator<Item = Edge> + ExactSizeIterator + Clone {
        self.graph.edges()
    }

    pub fn name(&self, e: Edge) -> &str {
        self.graph.edge_id(e)
    }

    pub fn element(&self, id: &str) -> Result<Edge> {
        self.graph.require_edge(id)
    }

    /// At most one vertex.
    pub fn is_semigroup(&self) -> bool {
        self.graph.vertex_count() <= 1
    }

    pub fn require_semigroup(&self) -> Result<()> {
        if self.is_semigroup() {
            Ok(())
        } else {
            Err(Error::NotASemigroup(self.graph.vertex_count()))
        }
    }

    #[inline]
    pub fn composable(&self, s: Edge, t: Edge) -> bool {
        self.graph.src(s) == self.graph.dst(t)
    }

    #[inline]
    pub fn mul(&self, s: Edge, t: Edge) -> Option<Edge> {
        self.composable(s, t).then(|| self.mul_composable(s, t))
    }

    /// Product of a pair known to be composable.
    #[inline]
    pub fn mul_composable(&self, s: Edge, t: Edge) -> Edge {
        debug_assert!(self.composable(s, t));
        self.table[s.index()][self.rank[t.index()] as usize]
    }

    /// Edges `t` with `s·t` defined.
    pub fn right_factors(&self, s: Edge) -> &[Edge] {
        &self.incoming[self.graph.src(s).index()]
    }

    /// Edges `s` with `s·t` defined.
    pub fn left_factors(&self, t: Edge) -> &[Edge] {
        &self.outgoing[self.graph.dst(t).index()]
    }

    pub fn is_idempotent(&self, e: Edge) -> bool {
        self.mul(e, e) == Some(e)
    }

    /// True iff `e` is a loop acting as identity on both sides.
    pub fn is_local_identity(&self, e: Edge) -> bool {
        self.graph.is_loop(e)
            && self.right_factors(e).iter().all(|&t| self.mul_composable(e, t) == t)
            && self.left_factors(e).iter().all(|&s| self.mul_composable(s, e) == s)
    }

    /// Whether `e` was introduced by [`adjoin_identities`].
    pub fn is_adjoined(&self, e: Edge) -> bool {
        self.adjoined[e.index()]
    }

    /// The adjoined identity at `v`, if identities have been adjoined.
    pub fn adjoined_identity(&self, v: Vertex) -> Option<Edge> {
        self.graph
            .loops_at(v)
            .find(|&e| self.adjoined[e.index()])
    }

    /// Folds the images of `word` under `label` from the left.
    pub fn evaluate(&self, label: &GraphMorphism, word: &[Edge]) -> Result<Edge> {
        let (&first, rest) = word.split_first().ok_or(Error::EmptyPath)?;
        let mut acc = label.edge(first);
        for &a in rest {
            let img = label.edge(a);
            acc = self.mul(acc, img).ok_or_else(|| Error::NotComposable {
                src: self.graph.vertex_id(self.graph.src(acc)).to_string(),
                dst: self.graph.vertex_id(self.graph.dst(img)).to_string(),
            })?;
        }
        Ok(acc)
    }

    /// Product of a nonempty sequence of elements.
    pub fn product(&self, elems: &[Edge]) -> Option<Edge> {
        let (&first, rest) = elems.split_first()?;
        rest.iter().try_fold(first, |acc, &x| self.mul(acc, x))
    }

    /// Checks that `subset` is closed under the defined products; on failure
    /// names a product escaping it.
    pub fn check_closed(&self, subset: &[Edge]) -> Result<()> {
        let mut member = vec![false; self.edge_count()];
        for &e in subset {
            member[e.index()] = true;
        }
        for &s in subset {
            for &t in subset {
                if let Some(st) = self.mul(s, t) {
                    if !member[st.index()] {
                        return Err(Error::NotClosed(alloc::format!(
                            "{}·{} = {}",
                            self.name(s),
                            self.name(t),
                            self.name(st)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The subsemigroupoid on a closed edge subset, over the vertices those
    /// edges touch. Returns it with the map from its edges to `self`'s.
    pub fn restrict(&self, subset: &[Edge]) -> Result<(FiniteSemigroupoid, Vec<Edge>)> {
        self.restrict_inner(subset, false)
    }

    fn restrict_inner(&self, subset: &[Edge], all_vertices: bool) -> Result<(FiniteSemigroupoid, Vec<Edge>)> {
        self.check_closed(subset)?;
        let mut vertices = BTreeSet::new();
        if all_vertices {
            vertices.extend(self.graph.vertices());
        }
        for &e in subset {
            vertices.insert(self.graph.src(e));
            vertices.insert(self.graph.dst(e));
        }
        let edges: BTreeSet<Edge> = subset.iter().copied().collect();
        let graph = Graph::new(GraphSpec {
            vertices: vertices
                .iter()
                .map(|&v| self.graph.vertex_id(v).to_string())
                .collect(),
            edges: edges
                .iter()
                .map(|&e| {
                    EdgeSpec::new(
                        self.name(e),
                        self.graph.vertex_id(self.graph.src(e)),
                        self.graph.vertex_id(self.graph.dst(e)),
                    )
                })
                .collect(),
        })?;
        // lexicographic order is preserved, so new index i is the i-th edge of the subset
        let back: Vec<Edge> = edges.into_iter().collect();
        let mut fwd = vec![Edge(u32::MAX); self.edge_count()];
        for (i, &e) in back.iter().enumerate() {
            fwd[e.index()] = Edge(i as u32);
        }
        let mut sub = Self::from_fn_unvalidated(graph, |s, t| {
            fwd[self.mul_composable(back[s.index()], back[t.index()]).index()]
        })?;
        for (i, &e) in back.iter().enumerate() {
            sub.adjoined[i] = self.adjoined[e.index()];
        }
        Ok((sub, back))
    }

    /// The local semigroup `S(v)` of loops at `v` (possibly empty).
    pub fn local_semigroup(&self, v: Vertex) -> FiniteSemigroupoid {
        let loops: Vec<Edge> = self.graph.loops_at(v).collect();
        self.restrict(&loops).expect("loops at a vertex are closed").0
    }

    /// Drops the edges flagged as adjoined identities, keeping every vertex.
    pub fn without_adjoined(&self) -> FiniteSemigroupoid {
        let keep: Vec<Edge> = self.edges().filter(|&e| !self.is_adjoined(e)).collect();
        self.restrict_inner(&keep, true)
            .expect("S is closed in S^I")
            .0
    }
}

/// `S^I`: one fresh local identity per vertex, flagged as adjoined.
///
/// Only the identities added by this call are flagged; adjoining twice yields
/// a second, distinct identity at each vertex.
pub fn adjoin_identities(s: &FiniteSemigroupoid) -> FiniteSemigroupoid {
    let g = &s.graph;
    let taken = |n: &str| g.edge(n).is_some() || g.vertex(n).is_some();
    let mut spec = g.to_spec();
    let mut ids: Vec<String> = Vec::with_capacity(g.vertex_count());
    for v in g.vertices() {
        let base = if g.vertex_count() == 1 {
            String::from("1")
        } else {
            alloc::format!("1_{}", g.vertex_id(v))
        };
        let name = fresh_name(&base, |n| taken(n) || ids.iter().any(|i| i == n));
        spec.edges
            .push(EdgeSpec::new(name.clone(), g.vertex_id(v), g.vertex_id(v)));
        ids.push(name);
    }
    let graph = Graph::new(spec).expect("fresh names keep the graph valid");
    let old: Vec<Option<Edge>> = graph.edges().map(|e| g.edge(graph.edge_id(e))).collect();
    let new_of: Vec<Edge> = g.edges().map(|x| graph.edge(g.edge_id(x)).unwrap()).collect();
    let mut out = FiniteSemigroupoid::from_fn_unvalidated(graph, |a, b| match (old[a.index()], old[b.index()]) {
        (Some(x), Some(y)) => new_of[s.mul_composable(x, y).index()],
        (None, _) => b,
        (_, None) => a,
    })
    .expect("S^I is well typed");
    for (flag, o) in out.adjoined.iter_mut().zip(&old) {
        *flag = o.is_none();
    }
    out
}

/// Result of [`check_homomorphism`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomomorphismReport {
    pub graph: Vec<MorphismDiagnostic>,
    /// Composable pairs `(s,t)` with `h(st) ≠ h(s)h(t)`.
    pub non_multiplicative: Vec<(String, String)>,
    pub faithful: bool,
    pub quotient: bool,
}

impl HomomorphismReport {
    pub fn is_ok(&self) -> bool {
        self.graph.is_empty() && self.non_multiplicative.is_empty()
    }
}

/// Checks `h(s·t) = h(s)·h(t)` on every composable pair and classifies `h`
/// as faithful (injective on hom-sets) and/or quotient (bijective on
/// vertices, onto on hom-sets).
pub fn check_homomorphism(
    dom: &FiniteSemigroupoid,
    cod: &FiniteSemigroupoid,
    h: &GraphMorphism,
) -> HomomorphismReport {
    if let Err(graph) = check_morphism(dom.graph(), cod.graph(), h) {
        return HomomorphismReport {
            graph,
            non_multiplicative: Vec::new(),
            faithful: false,
            quotient: false,
        };
    }
    let mut bad = Vec::new();
    for s in dom.edges() {
        for &t in dom.right_factors(s) {
            let lhs = h.edge(dom.mul_composable(s, t));
            let rhs = cod.mul_composable(h.edge(s), h.edge(t));
            if lhs != rhs {
                bad.push((dom.name(s).to_string(), dom.name(t).to_string()));
            }
        }
    }
    HomomorphismReport {
        graph: Vec::new(),
        non_multiplicative: bad,
        faithful: graph::is_faithful(dom.graph(), h),
        quotient: graph::is_quotient_morphism(dom.graph(), cod.graph(), h),
    }
}

/// Least multiplication-closed edge set containing `gens`, sorted.
pub fn generate_subsemigroupoid(s: &FiniteSemigroupoid, gens: &[Edge]) -> Result<Vec<Edge>> {
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    let mut member = vec![false; s.edge_count()];
    let mut members = Vec::new();
    let mut queue = VecDeque::new();
    for &g in gens {
        if !member[g.index()] {
            member[g.index()] = true;
            members.push(g);
            queue.push_back(g);
        }
    }
    while let Some(x) = queue.pop_front() {
        let mut fresh = Vec::new();
        for &y in &members {
            for p in [s.mul(x, y), s.mul(y, x)].into_iter().flatten() {
                if !member[p.index()] {
                    member[p.index()] = true;
                    fresh.push(p);
                }
            }
        }
        for p in fresh {
            members.push(p);
            queue.push_back(p);
        }
    }
    members.sort();
    Ok(members)
}

/// Componentwise product `S × T`; vertices and edges are named `(x,y)`.
pub fn direct_product(s: &FiniteSemigroupoid, t: &FiniteSemigroupoid) -> FiniteSemigroupoid {
    let (gs, gt) = (s.graph(), t.graph());
    let pair = |a: &str, b: &str| alloc::format!("({a},{b})");
    let mut spec = GraphSpec::default();
    for v in gs.vertices() {
        for w in gt.vertices() {
            spec.vertices.push(pair(gs.vertex_id(v), gt.vertex_id(w)));
        }
    }
    for e in gs.edges() {
        for f in gt.edges() {
            spec.edges.push(EdgeSpec::new(
                pair(gs.edge_id(e), gt.edge_id(f)),
                pair(gs.vertex_id(gs.src(e)), gt.vertex_id(gt.src(f))),
                pair(gs.vertex_id(gs.dst(e)), gt.vertex_id(gt.dst(f))),
            ));
        }
    }
    let graph = Graph::new(spec).expect("pair names are distinct");
    let mut comps = vec![(Edge(0), Edge(0)); graph.edge_count()];
    let mut index = BTreeMap::new();
    for e in gs.edges() {
        for f in gt.edges() {
            let id = graph.edge(&pair(gs.edge_id(e), gt.edge_id(f))).unwrap();
            comps[id.index()] = (e, f);
            index.insert((e, f), id);
        }
    }
    FiniteSemigroupoid::from_fn_unvalidated(graph, |a, b| {
        let ((e1, f1), (e2, f2)) = (comps[a.index()], comps[b.index()]);
        index[&(s.mul_composable(e1, e2), t.mul_composable(f1, f2))]
    })
    .expect("componentwise product is well typed")
}

/// A graph equivalence on the underlying graph, meant to be compatible with
/// multiplication.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Congruence {
    pub classes: GraphEquivalence,
}

/// Quotient `S/~` with its natural projection. Classes are named after their
/// least member.
pub fn quotient_semigroupoid(
    s: &FiniteSemigroupoid,
    c: &Congruence,
) -> Result<(FiniteSemigroupoid, GraphMorphism)> {
    let rep = c.classes.edge_representatives(s.graph())?;
    quotient_by_representatives(s, &rep)
}

pub(crate) fn quotient_by_representatives(
    s: &FiniteSemigroupoid,
    rep: &[Edge],
) -> Result<(FiniteSemigroupoid, GraphMorphism)> {
    let r = |e: Edge| rep[e.index()];
    // st ~ r(s)t and st ~ s·r(t) for all pairs suffices by transitivity
    for a in s.edges() {
        for &b in s.right_factors(a) {
            let ab = s.mul_composable(a, b);
            for (a2, b2) in [(r(a), b), (a, r(b))] {
                let ab2 = s.mul_composable(a2, b2);
                if r(ab) != r(ab2) {
                    return Err(Error::NotACongruence(Box::new(CongruenceViolation {
                        s: s.name(a).to_string(),
                        s2: s.name(a2).to_string(),
                        t: s.name(b).to_string(),
                        t2: s.name(b2).to_string(),
                        st: s.name(ab).to_string(),
                        s2t2: s.name(ab2).to_string(),
                    })));
                }
            }
        }
    }
    let (qg, proj) = graph::quotient_by_representatives(s.graph(), rep)?;
    let mut lift = vec![Edge(0); qg.edge_count()];
    for e in s.edges() {
        lift[proj.edge(e).index()] = r(e);
    }
    let q = FiniteSemigroupoid::from_fn_unvalidated(qg, |x, y| {
        proj.edge(s.mul_composable(lift[x.index()], lift[y.index()]))
    })?;
    Ok((q, proj))
}
