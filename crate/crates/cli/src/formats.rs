//! JSON file formats and their conversion to core values.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::Path as FsPath;

use finsgpd_core::automata::{DfaSpec, TransitionSpec};
use finsgpd_core::graph::{EdgeSpec, GraphSpec};
use finsgpd_core::languages::PathLanguage;
use finsgpd_core::path::parse_word;
use finsgpd_core::semigroupoid::SemigroupoidSpec;
use finsgpd_core::{FiniteSemigroupoid, Graph, GraphMorphism, Vertex};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::Failure;

/// Composition header: `st` is defined when `src(s) = dst(t)`.
pub const CONVENTION: &str = "category";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeJson {
    pub id: String,
    pub src: String,
    pub dst: String,
}

impl GraphJson {
    pub fn to_spec(&self) -> GraphSpec {
        GraphSpec {
            vertices: self.vertices.clone(),
            edges: self.edges.iter().map(|e| EdgeSpec::new(&e.id, &e.src, &e.dst)).collect(),
        }
    }

    pub fn from_graph(g: &Graph) -> GraphJson {
        let spec = g.to_spec();
        GraphJson {
            vertices: spec.vertices,
            edges: spec
                .edges
                .into_iter()
                .map(|e| EdgeJson {
                    id: e.id,
                    src: e.src,
                    dst: e.dst,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemigroupoidJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub convention: Option<String>,
    pub graph: GraphJson,
    /// Keys are `"s,t"`.
    pub mul: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub identities: Vec<String>,
}

/// Splits `key` at the one comma where both halves are accepted.
fn split_pair(key: &str, left: impl Fn(&str) -> bool, right: impl Fn(&str) -> bool) -> Result<(String, String), String> {
    let splits: Vec<(&str, &str)> = key
        .match_indices(',')
        .map(|(i, _)| (&key[..i], &key[i + 1..]))
        .filter(|(l, r)| left(l) && right(r))
        .collect();
    match splits.as_slice() {
        [(l, r)] => Ok((l.to_string(), r.to_string())),
        [] => Err(format!("key `{key}` does not split into two known identifiers")),
        _ => Err(format!("key `{key}` splits ambiguously")),
    }
}

impl SemigroupoidJson {
    pub fn to_spec(&self) -> Result<SemigroupoidSpec, Failure> {
        if let Some(c) = &self.convention {
            if c != CONVENTION {
                return Err(Failure::invalid(format!("unsupported convention `{c}`, expected `{CONVENTION}`")));
            }
        }
        let edges: BTreeSet<&str> = self.graph.edges.iter().map(|e| e.id.as_str()).collect();
        let mut mul = BTreeMap::new();
        let mut errors = Vec::new();
        for (key, st) in &self.mul {
            match split_pair(key, |l| edges.contains(l), |r| edges.contains(r)) {
                Ok(pair) => {
                    mul.insert(pair, st.clone());
                }
                Err(e) => errors.push(e),
            }
        }
        if !errors.is_empty() {
            return Err(Failure::Invalid(errors));
        }
        Ok(SemigroupoidSpec {
            graph: self.graph.to_spec(),
            mul,
            identities: self.identities.clone(),
        })
    }

    pub fn from_semigroupoid(s: &FiniteSemigroupoid) -> SemigroupoidJson {
        let spec = s.to_spec();
        let graph = GraphJson::from_graph(s.graph());
        SemigroupoidJson {
            convention: Some(CONVENTION.into()),
            graph,
            mul: spec.mul.into_iter().map(|((a, b), c)| (format!("{a},{b}"), c)).collect(),
            identities: spec.identities,
        }
    }
}

/// A DFA over the edges of `graph`, or over a one-vertex graph whose loops
/// are the alphabet when `graph` is absent. Letters of the graph missing from
/// the alphabet, and missing transitions, go to a sink.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DfaJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphJson>,
    pub states: Vec<String>,
    pub alphabet: Vec<String>,
    /// Keys are `"state,letter"`.
    pub delta: BTreeMap<String, String>,
    pub init: String,
    pub accept: Vec<String>,
}

/// A finite language listed word by word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WordsJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alphabet: Option<Vec<String>>,
    pub words: Vec<String>,
}

/// Edge and vertex assignment for a labeling `base → target`. Vertex images
/// not listed are read off the edge images.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelJson {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub vertices: BTreeMap<String, String>,
    pub edges: BTreeMap<String, String>,
}

fn one_vertex(alphabet: &[String]) -> Result<Graph, Failure> {
    Ok(Graph::one_vertex(alphabet.iter().cloned())?)
}

impl DfaJson {
    pub fn base(&self) -> Result<Graph, Failure> {
        match &self.graph {
            Some(g) => {
                let g = Graph::new(g.to_spec())?;
                for a in &self.alphabet {
                    if g.edge(a).is_none() {
                        return Err(Failure::invalid(format!("letter `{a}` is not an edge of the graph")));
                    }
                }
                Ok(g)
            }
            None => one_vertex(&self.alphabet),
        }
    }

    pub fn to_spec(&self) -> Result<DfaSpec, Failure> {
        let states: BTreeSet<&str> = self.states.iter().map(String::as_str).collect();
        let letters: BTreeSet<&str> = self.alphabet.iter().map(String::as_str).collect();
        let mut transitions = Vec::new();
        let mut errors = Vec::new();
        for (key, to) in &self.delta {
            match split_pair(key, |q| states.contains(q), |a| letters.contains(a)) {
                Ok((from, letter)) => transitions.push(TransitionSpec::new(from, letter, to.clone())),
                Err(e) => errors.push(e),
            }
        }
        if !errors.is_empty() {
            return Err(Failure::Invalid(errors));
        }
        Ok(DfaSpec {
            states: self.states.clone(),
            start: self.init.clone(),
            accepting: self.accept.clone(),
            transitions,
        })
    }

    pub fn language(&self) -> Result<PathLanguage, Failure> {
        Ok(PathLanguage::from_spec(self.base()?, &self.to_spec()?)?)
    }

    /// The minimal recognizer of `l`, with the graph written out.
    pub fn from_language(l: &PathLanguage) -> DfaJson {
        let g = l.base();
        let spec = l.recognizer().to_spec(g);
        DfaJson {
            graph: Some(GraphJson::from_graph(g)),
            states: spec.states,
            alphabet: g.edges().map(|e| g.edge_id(e).to_string()).collect(),
            delta: spec
                .transitions
                .into_iter()
                .map(|t| (format!("{},{}", t.from, t.letter), t.to))
                .collect(),
            init: spec.start,
            accept: spec.accepting,
        }
    }
}

impl WordsJson {
    pub fn language(&self) -> Result<PathLanguage, Failure> {
        let g = match (&self.graph, &self.alphabet) {
            (Some(g), _) => Graph::new(g.to_spec())?,
            (None, Some(a)) => one_vertex(a)?,
            (None, None) => {
                let letters: BTreeSet<String> = self.words.iter().flat_map(|w| w.chars()).map(String::from).collect();
                one_vertex(&letters.into_iter().collect::<Vec<_>>())?
            }
        };
        let mut words = Vec::new();
        for w in &self.words {
            if w.is_empty() {
                return Err(Failure::invalid("the empty word is not a path"));
            }
            words.push(parse_word(&g, w)?);
        }
        Ok(PathLanguage::from_words(g, &words)?)
    }
}

impl LabelJson {
    pub fn morphism(&self, base: &Graph, target: &FiniteSemigroupoid) -> Result<GraphMorphism, Failure> {
        let tg = target.graph();
        let mut emap = Vec::new();
        for e in base.edges() {
            let id = base.edge_id(e);
            let Some(image) = self.edges.get(id) else {
                return Err(Failure::invalid(format!("no image for edge `{id}`")));
            };
            emap.push(target.element(image)?);
        }
        for id in self.edges.keys() {
            base.require_edge(id)?;
        }
        let mut vmap = Vec::new();
        for v in base.vertices() {
            let id = base.vertex_id(v);
            let image = match self.vertices.get(id) {
                Some(x) => tg.require_vertex(x)?,
                None => {
                    let from_edge = base.edges().zip(&emap).find_map(|(e, &img)| {
                        if base.src(e) == v {
                            Some(tg.src(img))
                        } else if base.dst(e) == v {
                            Some(tg.dst(img))
                        } else {
                            None
                        }
                    });
                    match from_edge {
                        Some(x) => x,
                        None if tg.vertex_count() == 1 => Vertex(0),
                        None => return Err(Failure::invalid(format!("no image for vertex `{id}`"))),
                    }
                }
            };
            vmap.push(image);
        }
        Ok(GraphMorphism { vmap, emap })
    }
}

/// What a JSON input file holds, judged by its top-level keys.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Graph,
    Semigroupoid,
    Dfa,
    Words,
    Label,
}

impl Kind {
    pub fn detect(v: &Value) -> Result<Kind, Failure> {
        let has = |k: &str| v.get(k).is_some();
        if has("mul") {
            Ok(Kind::Semigroupoid)
        } else if has("delta") {
            Ok(Kind::Dfa)
        } else if has("words") {
            Ok(Kind::Words)
        } else if has("vertices") && has("edges") && v["edges"].is_array() {
            Ok(Kind::Graph)
        } else if has("edges") {
            Ok(Kind::Label)
        } else {
            Err(Failure::invalid("cannot tell what kind of file this is"))
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::Graph => "graph",
            Kind::Semigroupoid => "semigroupoid",
            Kind::Dfa => "dfa",
            Kind::Words => "words",
            Kind::Label => "label",
        }
    }
}

pub fn read_value(path: &FsPath) -> Result<Value, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Internal(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))
}

pub fn from_value<T: for<'de> Deserialize<'de>>(v: Value, path: &FsPath) -> Result<T, Failure> {
    serde_json::from_value(v).map_err(|e| Failure::invalid(format!("{}: {e}", path.display())))
}

pub fn load_semigroupoid(path: &FsPath) -> Result<FiniteSemigroupoid, Failure> {
    let j: SemigroupoidJson = from_value(read_value(path)?, path)?;
    Ok(FiniteSemigroupoid::from_spec(&j.to_spec()?)?)
}

pub fn load_graph(path: &FsPath) -> Result<Graph, Failure> {
    let j: GraphJson = from_value(read_value(path)?, path)?;
    Ok(Graph::new(j.to_spec())?)
}

/// Reads a DFA file or a word list.
pub fn load_language(path: &FsPath) -> Result<PathLanguage, Failure> {
    let v = read_value(path)?;
    if v.get("words").is_some() {
        from_value::<WordsJson>(v, path)?.language()
    } else {
        from_value::<DfaJson>(v, path)?.language()
    }
}

pub fn load_label(path: &FsPath) -> Result<LabelJson, Failure> {
    from_value(read_value(path)?, path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use finsgpd_core::constructions::{brandt, catalog};

    #[test]
    fn split_keys() {
        let edges = ["(1,1)", "(1,2)", "0"];
        let known = |s: &str| edges.contains(&s);
        assert_eq!(split_pair("(1,2),(1,1)", known, known).unwrap(), ("(1,2)".into(), "(1,1)".into()));
        assert_eq!(split_pair("0,0", known, known).unwrap(), ("0".into(), "0".into()));
        assert!(split_pair("0,1", known, known).is_err());
        let amb = |s: &str| ["a", "a,b", "b", "b,b"].contains(&s);
        assert!(split_pair("a,b,b", amb, amb).unwrap_err().contains("ambiguously"));
    }

    #[test]
    fn semigroupoid_round_trip() {
        for entry in catalog() {
            let s = entry.semigroupoid;
            let j = SemigroupoidJson::from_semigroupoid(&s);
            let text = serde_json::to_string(&j).unwrap();
            let back: SemigroupoidJson = serde_json::from_str(&text).unwrap();
            assert_eq!(back, j);
            let t = FiniteSemigroupoid::from_spec(&back.to_spec().unwrap()).unwrap();
            assert_eq!(t.to_spec(), s.to_spec(), "{}", entry.name);
        }
    }

    #[test]
    fn convention_header_is_checked() {
        let mut j = SemigroupoidJson::from_semigroupoid(&brandt(2));
        j.convention = Some("diagrammatic".into());
        assert!(matches!(j.to_spec(), Err(Failure::Invalid(_))));
        j.convention = None;
        assert!(j.to_spec().is_ok());
    }

    #[test]
    fn graph_round_trip_is_exact() {
        let text = r#"{"vertices":["x","y"],"edges":[{"id":"a","src":"x","dst":"y"},{"id":"b","src":"x","dst":"y"},{"id":"c","src":"y","dst":"y"}]}"#;
        let j: GraphJson = serde_json::from_str(text).unwrap();
        let g = Graph::new(j.to_spec()).unwrap();
        assert_eq!(serde_json::to_string(&GraphJson::from_graph(&g)).unwrap(), text);
    }

    #[test]
    fn dfa_round_trip_preserves_language() {
        let text = r#"{"states":["s","a","b"],"alphabet":["x","y"],"delta":{"s,x":"a","a,x":"a","a,y":"b","b,y":"b"},"init":"s","accept":["b"]}"#;
        let j: DfaJson = serde_json::from_str(text).unwrap();
        let l = j.language().unwrap();
        let back = DfaJson::from_language(&l);
        let again: DfaJson = serde_json::from_str(&serde_json::to_string(&back).unwrap()).unwrap();
        assert!(again.language().unwrap().same_language(&l));
    }

    #[test]
    fn kind_detection() {
        let v: Value = serde_json::from_str(r#"{"words":["ab"]}"#).unwrap();
        assert_eq!(Kind::detect(&v).unwrap(), Kind::Words);
        let v: Value = serde_json::from_str(r#"{"edges":{"a":"x"}}"#).unwrap();
        assert_eq!(Kind::detect(&v).unwrap(), Kind::Label);
        let v: Value = serde_json::from_str(r#"{"vertices":[],"edges":[]}"#).unwrap();
        assert_eq!(Kind::detect(&v).unwrap(), Kind::Graph);
    }
}
