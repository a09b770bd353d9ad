//! Finite-vertex directed multigraphs, graph morphisms, quotients by graph
//! equivalences and bounded retract search.
//!
//! Vertex and edge identifiers are opaque strings. A [`Graph`] stores them in
//! lexicographic order, so indices ([`Vertex`], [`Edge`]) are canonical and
//! every traversal is deterministic.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Index of a vertex in a [`Graph`].
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(pub u32);

/// Index of an edge in a [`Graph`].
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(pub u32);

impl Vertex {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl Edge {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Unvalidated graph description, as read from a file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphSpec {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeSpec {
    pub id: String,
    pub src: String,
    pub dst: String,
}

impl EdgeSpec {
    pub fn new(id: impl Into<String>, src: impl Into<String>, dst: impl Into<String>) -> Self {
        EdgeSpec {
            id: id.into(),
            src: src.into(),
            dst: dst.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphDiagnostic {
    DuplicateVertex(String),
    DuplicateEdge(String),
    /// An identifier used both as a vertex and as an edge.
    IdClash(String),
    DanglingSrc { edge: String, vertex: String },
    DanglingDst { edge: String, vertex: String },
}

impl fmt::Display for GraphDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphDiagnostic::DuplicateVertex(v) => write!(f, "duplicate vertex `{v}`"),
            GraphDiagnostic::DuplicateEdge(e) => write!(f, "duplicate edge `{e}`"),
            GraphDiagnostic::IdClash(id) => write!(f, "`{id}` is both a vertex and an edge"),
            GraphDiagnostic::DanglingSrc { edge, vertex } => {
                write!(f, "dangling src: edge `{edge}` has unknown source `{vertex}`")
            }
            GraphDiagnostic::DanglingDst { edge, vertex } => {
                write!(f, "dangling dst: edge `{edge}` has unknown range `{vertex}`")
            }
        }
    }
}

/// Checks every graph invariant and reports all violations.
pub fn validate_graph(spec: &GraphSpec) -> core::result::Result<(), Vec<GraphDiagnostic>> {
    let mut diags = Vec::new();
    let mut vertices = BTreeMap::new();
    for v in &spec.vertices {
        if vertices.insert(v.as_str(), ()).is_some() {
            diags.push(GraphDiagnostic::DuplicateVertex(v.clone()));
        }
    }
    let mut edges = BTreeMap::new();
    for e in &spec.edges {
        if edges.insert(e.id.as_str(), ()).is_some() {
            diags.push(GraphDiagnostic::DuplicateEdge(e.id.clone()));
        }
        if vertices.contains_key(e.id.as_str()) {
            diags.push(GraphDiagnostic::IdClash(e.id.clone()));
        }
        if !vertices.contains_key(e.src.as_str()) {
            diags.push(GraphDiagnostic::DanglingSrc {
                edge: e.id.clone(),
                vertex: e.src.clone(),
            });
        }
        if !vertices.contains_key(e.dst.as_str()) {
            diags.push(GraphDiagnostic::DanglingDst {
                edge: e.id.clone(),
                vertex: e.dst.clone(),
            });
        }
    }
    if diags.is_empty() {
        Ok(())
    } else {
        Err(diags)
    }
}

/// A validated finite directed multigraph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_ids: Vec<String>,
    edge_ids: Vec<String>,
    src: Vec<Vertex>,
    dst: Vec<Vertex>,
}

impl Graph {
    pub fn new(spec: GraphSpec) -> Result<Graph> {
        validate_graph(&spec).map_err(Error::InvalidGraph)?;
        let mut vertex_ids = spec.vertices;
        vertex_ids.sort();
        let mut edges = spec.edges;
        edges.sort_by(|a, b| a.id.cmp(&b.id));
        let lookup = |id: &str| Vertex(vertex_ids.binary_search_by(|v| v.as_str().cmp(id)).unwrap() as u32);
        let src = edges.iter().map(|e| lookup(&e.src)).collect();
        let dst = edges.iter().map(|e| lookup(&e.dst)).collect();
        let edge_ids = edges.into_iter().map(|e| e.id).collect();
        Ok(Graph {
            vertex_ids,
            edge_ids,
            src,
            dst,
        })
    }

    /// A graph with a single vertex and one loop per given edge identifier.
    ///
    /// The vertex is named `*`, or `*0`, `*1`, ... if that name is taken.
    pub fn one_vertex<I, S>(edge_ids: I) -> Result<Graph>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let ids: Vec<String> = edge_ids.into_iter().map(Into::into).collect();
        let vertex = fresh_name("*", |n| ids.iter().any(|e| e == n));
        let edges = ids
            .into_iter()
            .map(|id| EdgeSpec::new(id, vertex.clone(), vertex.clone()))
            .collect();
        Graph::new(GraphSpec {
            vertices: vec![vertex],
            edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn vertices(&self) -> impl DoubleEndedIterator<Item = Vertex> + ExactSizeIterator + Clone {
        (0..self.vertex_ids.len() as u32).map(Vertex)
    }

    pub fn edges(&self) -> impl DoubleEndedIterator<Item = Edge> + ExactSizeIterator + Clone {
        (0..self.edge_ids.len() as u32).map(Edge)
    }

    #[inline]
    pub fn src(&self, e: Edge) -> Vertex {
        self.src[e.index()]
    }

    #[inline]
    pub fn dst(&self, e: Edge) -> Vertex {
        self.dst[e.index()]
    }

    #[inline]
    pub fn is_loop(&self, e: Edge) -> bool {
        self.src(e) == self.dst(e)
    }

    pub fn vertex_id(&self, v: Vertex) -> &str {
        &self.vertex_ids[v.index()]
    }

    pub fn edge_id(&self, e: Edge) -> &str {
        &self.edge_ids[e.index()]
    }

    pub fn vertex(&self, id: &str) -> Option<Vertex> {
        self.vertex_ids
            .binary_search_by(|v| v.as_str().cmp(id))
            .ok()
            .map(|i| Vertex(i as u32))
    }

    pub fn edge(&self, id: &str) -> Option<Edge> {
        self.edge_ids
            .binary_search_by(|e| e.as_str().cmp(id))
            .ok()
            .map(|i| Edge(i as u32))
    }

    pub fn require_vertex(&self, id: &str) -> Result<Vertex> {
        self.vertex(id).ok_or_else(|| Error::UnknownId {
            kind: "vertex",
            id: id.to_string(),
        })
    }

    pub fn require_edge(&self, id: &str) -> Result<Edge> {
        self.edge(id).ok_or_else(|| Error::UnknownId {
            kind: "edge",
            id: id.to_string(),
        })
    }

    /// Hom-set `G(x, y)`: edges with source `x` and range `y`.
    pub fn hom(&self, x: Vertex, y: Vertex) -> impl Iterator<Item = Edge> + '_ {
        self.edges()
            .filter(move |&e| self.src(e) == x && self.dst(e) == y)
    }

    /// Local set `G(x)`: loops at `x`.
    pub fn loops_at(&self, x: Vertex) -> impl Iterator<Item = Edge> + '_ {
        self.hom(x, x)
    }

    pub fn to_spec(&self) -> GraphSpec {
        GraphSpec {
            vertices: self.vertex_ids.clone(),
            edges: self
                .edges()
                .map(|e| {
                    EdgeSpec::new(
                        self.edge_id(e),
                        self.vertex_id(self.src(e)),
                        self.vertex_id(self.dst(e)),
                    )
                })
                .collect(),
        }
    }

    /// Subgraph spanned by the given vertex and edge identifiers, together
    /// with the inclusion morphism.
    pub fn subgraph(&self, sub: &SubgraphSpec) -> Result<(Graph, GraphMorphism)> {
        for v in &sub.vertices {
            if self.vertex(v).is_none() {
                return Err(Error::NotASubgraph(alloc::format!("unknown vertex `{v}`")));
            }
        }
        let mut edges = Vec::new();
        for id in &sub.edges {
            let e = self
                .edge(id)
                .ok_or_else(|| Error::NotASubgraph(alloc::format!("unknown edge `{id}`")))?;
            let (s, d) = (self.vertex_id(self.src(e)), self.vertex_id(self.dst(e)));
            if !sub.vertices.iter().any(|v| v == s) || !sub.vertices.iter().any(|v| v == d) {
                return Err(Error::NotASubgraph(alloc::format!(
                    "edge `{id}` has an endpoint outside the vertex subset"
                )));
            }
            edges.push(EdgeSpec::new(id.clone(), s, d));
        }
        let b = Graph::new(GraphSpec {
            vertices: sub.vertices.clone(),
            edges,
        })
        .map_err(|e| Error::NotASubgraph(e.to_string()))?;
        let inclusion = GraphMorphism {
            vmap: b
                .vertices()
                .map(|v| self.vertex(b.vertex_id(v)).unwrap())
                .collect(),
            emap: b.edges().map(|e| self.edge(b.edge_id(e)).unwrap()).collect(),
        };
        Ok((b, inclusion))
    }
}

/// Returns `base`, or `base` followed by the smallest number making it unused.
pub(crate) fn fresh_name(base: &str, taken: impl Fn(&str) -> bool) -> String {
    if !taken(base) {
        return base.to_string();
    }
    (0..)
        .map(|i| alloc::format!("{base}{i}"))
        .find(|n| !taken(n))
        .unwrap()
}

/// A graph morphism given by its vertex and edge maps (indexed by the
/// domain's vertices and edges).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GraphMorphism {
    pub vmap: Vec<Vertex>,
    pub emap: Vec<Edge>,
}

impl GraphMorphism {
    pub fn identity(g: &Graph) -> GraphMorphism {
        GraphMorphism {
            vmap: g.vertices().collect(),
            emap: g.edges().collect(),
        }
    }

    #[inline]
    pub fn vertex(&self, v: Vertex) -> Vertex {
        self.vmap[v.index()]
    }

    #[inline]
    pub fn edge(&self, e: Edge) -> Edge {
        self.emap[e.index()]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GraphMorphism) -> GraphMorphism {
        GraphMorphism {
            vmap: self.vmap.iter().map(|&v| other.vertex(v)).collect(),
            emap: self.emap.iter().map(|&e| other.edge(e)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MorphismDiagnostic {
    WrongArity {
        vertices: usize,
        edges: usize,
    },
    VertexOutOfRange(String),
    EdgeOutOfRange(String),
    AdjacencyViolated {
        edge: String,
        image: String,
    },
}

impl fmt::Display for MorphismDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MorphismDiagnostic::WrongArity { vertices, edges } => {
                write!(f, "map defined on {vertices} vertices and {edges} edges")
            }
            MorphismDiagnostic::VertexOutOfRange(v) => write!(f, "image of vertex `{v}` out of range"),
            MorphismDiagnostic::EdgeOutOfRange(e) => write!(f, "image of edge `{e}` out of range"),
            MorphismDiagnostic::AdjacencyViolated { edge, image } => {
                write!(f, "adjacency violated: `{edge}` maps to `{image}`")
            }
        }
    }
}

/// Checks `m(G(x,y)) ⊆ H(m(x), m(y))` for every edge of `dom`.
pub fn check_morphism(
    dom: &Graph,
    cod: &Graph,
    m: &GraphMorphism,
) -> core::result::Result<(), Vec<MorphismDiagnostic>> {
    if m.vmap.len() != dom.vertex_count() || m.emap.len() != dom.edge_count() {
        return Err(vec![MorphismDiagnostic::WrongArity {
            vertices: m.vmap.len(),
            edges: m.emap.len(),
        }]);
    }
    let mut diags = Vec::new();
    for v in dom.vertices() {
        if m.vertex(v).index() >= cod.vertex_count() {
            diags.push(MorphismDiagnostic::VertexOutOfRange(dom.vertex_id(v).to_string()));
        }
    }
    for e in dom.edges() {
        let img = m.edge(e);
        if img.index() >= cod.edge_count() {
            diags.push(MorphismDiagnostic::EdgeOutOfRange(dom.edge_id(e).to_string()));
            continue;
        }
        let (vs, vd) = (m.vertex(dom.src(e)), m.vertex(dom.dst(e)));
        if vs.index() >= cod.vertex_count() || vd.index() >= cod.vertex_count() {
            continue;
        }
        if cod.src(img) != vs || cod.dst(img) != vd {
            diags.push(MorphismDiagnostic::AdjacencyViolated {
                edge: dom.edge_id(e).to_string(),
                image: cod.edge_id(img).to_string(),
            });
        }
    }
    if diags.is_empty() {
        Ok(())
    } else {
        Err(diags)
    }
}

/// Injective on each hom-set. Assumes `m` passed [`check_morphism`].
pub fn is_faithful(dom: &Graph, m: &GraphMorphism) -> bool {
    let mut seen = BTreeMap::new();
    dom.edges().all(|e| {
        seen.insert((dom.src(e), dom.dst(e), m.edge(e)), ())
            .is_none()
    })
}

/// Bijective on vertices and onto on every hom-set `H(m(x), m(y))`.
pub fn is_quotient_morphism(dom: &Graph, cod: &Graph, m: &GraphMorphism) -> bool {
    if dom.vertex_count() != cod.vertex_count() {
        return false;
    }
    let mut hit = vec![false; cod.vertex_count()];
    for v in dom.vertices() {
        let w = m.vertex(v).index();
        if hit[w] {
            return false;
        }
        hit[w] = true;
    }
    let mut covered = vec![false; cod.edge_count()];
    for e in dom.edges() {
        covered[m.edge(e).index()] = true;
    }
    covered.into_iter().all(|c| c)
}

/// A partition of vertices and edges; identifiers not mentioned form
/// singleton classes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphEquivalence {
    pub classes: Vec<Vec<String>>,
}

impl GraphEquivalence {
    pub fn discrete() -> Self {
        GraphEquivalence::default()
    }

    /// Resolves the equivalence on `g` to a class representative for each
    /// edge (the lexicographically least member of its class).
    pub fn edge_representatives(&self, g: &Graph) -> Result<Vec<Edge>> {
        let mut rep: Vec<Edge> = g.edges().collect();
        let mut assigned = vec![false; g.edge_count()];
        for class in &self.classes {
            let mut edges = Vec::new();
            let mut vertices = Vec::new();
            for id in class {
                if let Some(e) = g.edge(id) {
                    edges.push(e);
                } else if let Some(v) = g.vertex(id) {
                    vertices.push(v);
                } else {
                    return Err(Error::InvalidEquivalence(alloc::format!("unknown identifier `{id}`")));
                }
            }
            if vertices.len() > 1 {
                return Err(Error::InvalidEquivalence(alloc::format!(
                    "class identifies distinct vertices `{}` and `{}`",
                    g.vertex_id(vertices[0]),
                    g.vertex_id(vertices[1])
                )));
            }
            if !vertices.is_empty() && !edges.is_empty() {
                return Err(Error::InvalidEquivalence(alloc::format!(
                    "class mixes vertex `{}` with edges",
                    g.vertex_id(vertices[0])
                )));
            }
            let Some(&least) = edges.iter().min() else {
                continue;
            };
            for &e in &edges {
                if g.src(e) != g.src(least) || g.dst(e) != g.dst(least) {
                    return Err(Error::InvalidEquivalence(alloc::format!(
                        "edges `{}` and `{}` are not coterminal",
                        g.edge_id(least),
                        g.edge_id(e)
                    )));
                }
                if assigned[e.index()] {
                    return Err(Error::InvalidEquivalence(alloc::format!(
                        "edge `{}` appears in two classes",
                        g.edge_id(e)
                    )));
                }
                assigned[e.index()] = true;
                rep[e.index()] = least;
            }
        }
        Ok(rep)
    }
}

/// Quotient graph `g/θ` with its natural projection.
///
/// Each edge class is named after its least member.
pub fn quotient(g: &Graph, eq: &GraphEquivalence) -> Result<(Graph, GraphMorphism)> {
    let rep = eq.edge_representatives(g)?;
    quotient_by_representatives(g, &rep)
}

pub(crate) fn quotient_by_representatives(g: &Graph, rep: &[Edge]) -> Result<(Graph, GraphMorphism)> {
    let mut edges = Vec::new();
    for e in g.edges() {
        if rep[e.index()] == e {
            edges.push(EdgeSpec::new(
                g.edge_id(e),
                g.vertex_id(g.src(e)),
                g.vertex_id(g.dst(e)),
            ));
        }
    }
    let q = Graph::new(GraphSpec {
        vertices: g.to_spec().vertices,
        edges,
    })?;
    let projection = GraphMorphism {
        vmap: g.vertices().collect(),
        emap: g
            .edges()
            .map(|e| q.edge(g.edge_id(rep[e.index()])).unwrap())
            .collect(),
    };
    Ok((q, projection))
}

/// Vertex and edge identifiers selecting a subgraph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SubgraphSpec {
    pub vertices: Vec<String>,
    pub edges: Vec<String>,
}

pub const RETRACT_MAX_VERTICES: usize = 12;
pub const RETRACT_MAX_EDGES: usize = 64;

/// Searches for a retraction `r: g → b` with `r ∘ i = id_b`.
///
/// Returns the subgraph `b` and the retraction, or `None` if no retraction
/// exists. The search is exhaustive over vertex assignments for vertices
/// outside `b`; edges then map to the least admissible edge of `b`.
pub fn is_retract_subgraph(g: &Graph, sub: &SubgraphSpec) -> Result<Option<(Graph, GraphMorphism)>> {
    if g.vertex_count() > RETRACT_MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "retract search (vertices)",
            size: g.vertex_count() as u128,
            cap: RETRACT_MAX_VERTICES as u128,
        });
    }
    if g.edge_count() > RETRACT_MAX_EDGES {
        return Err(Error::TooLarge {
            what: "retract search (edges)",
            size: g.edge_count() as u128,
            cap: RETRACT_MAX_EDGES as u128,
        });
    }
    let (b, inclusion) = g.subgraph(sub)?;
    if b.vertex_count() == 0 {
        return Ok(if g.vertex_count() == 0 {
            Some((b, GraphMorphism { vmap: vec![], emap: vec![] }))
        } else {
            None
        });
    }
    let mut vmap: Vec<Option<Vertex>> = vec![None; g.vertex_count()];
    for v in b.vertices() {
        vmap[inclusion.vertex(v).index()] = Some(v);
    }
    let mut fixed_edge: Vec<Option<Edge>> = vec![None; g.edge_count()];
    for e in b.edges() {
        fixed_edge[inclusion.edge(e).index()] = Some(e);
    }
    let free: Vec<Vertex> = g.vertices().filter(|v| vmap[v.index()].is_none()).collect();

    // every hom-set of b, indexed by (src, dst)
    let nb = b.vertex_count();
    let mut hom_b: Vec<Option<Edge>> = vec![None; nb * nb];
    for e in b.edges().rev() {
        hom_b[b.src(e).index() * nb + b.dst(e).index()] = Some(e);
    }
    let admissible = |vmap: &[Option<Vertex>], e: Edge| -> bool {
        if fixed_edge[e.index()].is_some() {
            return true;
        }
        match (vmap[g.src(e).index()], vmap[g.dst(e).index()]) {
            (Some(s), Some(d)) => hom_b[s.index() * nb + d.index()].is_some(),
            _ => true,
        }
    };

    fn search(
        k: usize,
        free: &[Vertex],
        vmap: &mut Vec<Option<Vertex>>,
        nb: usize,
        g: &Graph,
        admissible: &dyn Fn(&[Option<Vertex>], Edge) -> bool,
    ) -> bool {
        if k == free.len() {
            return true;
        }
        let v = free[k];
        for t in 0..nb as u32 {
            vmap[v.index()] = Some(Vertex(t));
            let ok = g
                .edges()
                .filter(|&e| g.src(e) == v || g.dst(e) == v)
                .all(|e| admissible(vmap, e));
            if ok && search(k + 1, free, vmap, nb, g, admissible) {
                return true;
            }
        }
        vmap[v.index()] = None;
        false
    }

    if !g.edges().all(|e| admissible(&vmap, e)) {
        return Ok(None);
    }
    if !search(0, &free, &mut vmap, nb, g, &admissible) {
        return Ok(None);
    }
    let vmap: Vec<Vertex> = vmap.into_iter().map(Option::unwrap).collect();
    let emap = g
        .edges()
        .map(|e| {
            fixed_edge[e.index()].unwrap_or_else(|| {
                hom_b[vmap[g.src(e).index()].index() * nb + vmap[g.dst(e).index()].index()].unwrap()
            })
        })
        .collect();
    Ok(Some((b, GraphMorphism { vmap, emap })))
}
