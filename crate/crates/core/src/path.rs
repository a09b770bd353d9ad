//! Paths of the free semigroupoid `A⁺` and eventually periodic right-infinite
//! paths `p·q^ω`.
//!
//! Composition follows the category convention: `a₀a₁` is defined when
//! `src(a₀) = dst(a₁)`, and a path `a₀…a_{n−1}` runs from `src(a_{n−1})` to
//! `dst(a₀)`.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};

/// True iff `word` is a nonempty composable edge sequence.
pub fn is_path(g: &Graph, word: &[Edge]) -> bool {
    !word.is_empty() && word.windows(2).all(|w| g.src(w[0]) == g.dst(w[1]))
}

/// Renders an edge sequence: identifiers are juxtaposed when all of them are
/// single characters, and dot-separated otherwise.
pub fn format_word(g: &Graph, word: &[Edge]) -> String {
    let single = word.iter().all(|&e| g.edge_id(e).chars().count() == 1);
    let mut out = String::new();
    for (i, &e) in word.iter().enumerate() {
        if i > 0 && !single {
            out.push('.');
        }
        out.push_str(g.edge_id(e));
    }
    out
}

/// Parses a word written as by [`format_word`]: dot-separated identifiers,
/// or a run of single-character identifiers.
pub fn parse_word(g: &Graph, text: &str) -> Result<Vec<Edge>> {
    if text.contains('.') {
        text.split('.').map(|id| g.require_edge(id)).collect()
    } else if let Some(e) = g.edge(text) {
        Ok(alloc::vec![e])
    } else {
        text.chars()
            .map(|c| {
                let mut buf = [0u8; 4];
                g.require_edge(c.encode_utf8(&mut buf))
            })
            .collect()
    }
}

/// A nonempty composable sequence of edges.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path(Vec<Edge>);

impl Path {
    pub fn new(g: &Graph, edges: Vec<Edge>) -> Result<Path> {
        if edges.is_empty() {
            return Err(Error::EmptyPath);
        }
        for w in edges.windows(2) {
            if g.src(w[0]) != g.dst(w[1]) {
                return Err(Error::NotComposable {
                    src: g.vertex_id(g.src(w[0])).to_string(),
                    dst: g.vertex_id(g.dst(w[1])).to_string(),
                });
            }
        }
        Ok(Path(edges))
    }

    pub fn parse(g: &Graph, text: &str) -> Result<Path> {
        Path::new(g, parse_word(g, text)?)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.0
    }

    pub fn into_edges(self) -> Vec<Edge> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Range of the path: `dst(a₀)`.
    pub fn dst(&self, g: &Graph) -> Vertex {
        g.dst(self.0[0])
    }

    /// Source of the path: `src(a_{n−1})`.
    pub fn src(&self, g: &Graph) -> Vertex {
        g.src(*self.0.last().unwrap())
    }

    pub fn display(&self, g: &Graph) -> String {
        format_word(g, &self.0)
    }

    /// `self · other`, defined when `src(self) = dst(other)`.
    pub fn concat(&self, g: &Graph, other: &Path) -> Result<Path> {
        if self.src(g) != other.dst(g) {
            return Err(Error::NotComposable {
                src: g.vertex_id(self.src(g)).to_string(),
                dst: g.vertex_id(other.dst(g)).to_string(),
            });
        }
        let mut edges = self.0.clone();
        edges.extend_from_slice(&other.0);
        Ok(Path(edges))
    }

    /// The length-`n` prefix `w[0,n)`.
    pub fn prefix(&self, n: usize) -> Result<Path> {
        if n == 0 || n > self.len() {
            return Err(Error::LengthOutOfRange {
                len: n,
                max: self.len(),
            });
        }
        Ok(Path(self.0[..n].to_vec()))
    }

    /// The suffix left after removing the first `n` edges, if nonempty.
    pub fn suffix_after(&self, n: usize) -> Option<Path> {
        (n < self.len()).then(|| Path(self.0[n..].to_vec()))
    }

    /// All factors of length at most `maxlen`.
    pub fn factors(&self, maxlen: usize) -> BTreeSet<Path> {
        let mut out = BTreeSet::new();
        for i in 0..self.len() {
            for j in i + 1..=(i + maxlen).min(self.len()) {
                out.insert(Path(self.0[i..j].to_vec()));
            }
        }
        out
    }
}

/// The right-infinite path `p·q·q·q·…`, kept in normal form: `q` is
/// primitive and `p` is the shortest possible preperiod.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PeriodicWord {
    p: Vec<Edge>,
    q: Vec<Edge>,
}

impl PeriodicWord {
    pub fn new(g: &Graph, p: Vec<Edge>, q: Vec<Edge>) -> Result<PeriodicWord> {
        if q.is_empty() {
            return Err(Error::EmptyPath);
        }
        // every window p·q^k is a path iff p·q·q is one
        let mut window = p.clone();
        window.extend_from_slice(&q);
        window.extend_from_slice(&q);
        Path::new(g, window)?;
        Ok(PeriodicWord::normalized(p, q))
    }

    fn normalized(mut p: Vec<Edge>, mut q: Vec<Edge>) -> PeriodicWord {
        let n = q.len();
        if let Some(d) = (1..n).find(|&d| n.is_multiple_of(d) && (d..n).all(|i| q[i] == q[i - d])) {
            q.truncate(d);
        }
        while let (Some(&a), Some(&b)) = (p.last(), q.last()) {
            if a != b {
                break;
            }
            p.pop();
            q.rotate_right(1);
        }
        PeriodicWord { p, q }
    }

    pub fn preperiod(&self) -> &[Edge] {
        &self.p
    }

    pub fn period(&self) -> &[Edge] {
        &self.q
    }

    /// The letter `w[i]`.
    #[inline]
    pub fn at(&self, i: usize) -> Edge {
        if i < self.p.len() {
            self.p[i]
        } else {
            self.q[(i - self.p.len()) % self.q.len()]
        }
    }

    /// The first `n` letters (possibly empty).
    pub fn window(&self, n: usize) -> Vec<Edge> {
        (0..n).map(|i| self.at(i)).collect()
    }

    pub fn prefix(&self, n: usize) -> Result<Path> {
        if n == 0 {
            return Err(Error::LengthOutOfRange { len: 0, max: usize::MAX });
        }
        Ok(Path(self.window(n)))
    }

    /// `w[k,∞)`.
    pub fn cut_prefix(&self, k: usize) -> PeriodicWord {
        if k <= self.p.len() {
            PeriodicWord::normalized(self.p[k..].to_vec(), self.q.clone())
        } else {
            let mut q = self.q.clone();
            q.rotate_left((k - self.p.len()) % self.q.len());
            PeriodicWord::normalized(Vec::new(), q)
        }
    }

    pub fn display(&self, g: &Graph) -> String {
        let mut s = format_word(g, &self.p);
        s.push('(');
        s.push_str(&format_word(g, &self.q));
        s.push_str(")^ω");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{EdgeSpec, GraphSpec};
    use alloc::vec;

    fn ab() -> Graph {
        Graph::one_vertex(["a", "b"]).unwrap()
    }

    fn two_cycle() -> Graph {
        Graph::new(GraphSpec {
            vertices: vec!["1".into(), "2".into()],
            edges: vec![EdgeSpec::new("e", "1", "2"), EdgeSpec::new("f", "2", "1")],
        })
        .unwrap()
    }

    fn w(g: &Graph, s: &str) -> Vec<Edge> {
        parse_word(g, s).unwrap()
    }

    #[test]
    fn concat_examples() {
        let g = ab();
        let u = Path::parse(&g, "ab").unwrap();
        let v = Path::parse(&g, "ba").unwrap();
        assert_eq!(u.concat(&g, &v).unwrap().display(&g), "abba");

        let h = two_cycle();
        let e = Path::parse(&h, "e").unwrap();
        let f = Path::parse(&h, "f").unwrap();
        assert_eq!(e.concat(&h, &f).unwrap().display(&h), "ef");
        assert!(matches!(e.concat(&h, &e), Err(Error::NotComposable { .. })));
        assert_eq!(e.src(&h), h.vertex("1").unwrap());
        assert_eq!(e.dst(&h), h.vertex("2").unwrap());
    }

    #[test]
    fn prefix_examples() {
        let g = ab();
        let abba = Path::parse(&g, "abba").unwrap();
        assert_eq!(abba.prefix(2).unwrap().display(&g), "ab");
        assert_eq!(abba.prefix(4).unwrap(), abba);
        assert!(matches!(abba.prefix(0), Err(Error::LengthOutOfRange { .. })));
        assert!(matches!(abba.prefix(5), Err(Error::LengthOutOfRange { .. })));
        let pw = PeriodicWord::new(&g, w(&g, "b"), w(&g, "a")).unwrap();
        assert_eq!(pw.prefix(3).unwrap().display(&g), "baa");
        assert!(pw.prefix(0).is_err());
    }

    #[test]
    fn cut_prefix_examples() {
        let g = ab();
        let pw = PeriodicWord::new(&g, w(&g, "b"), w(&g, "a")).unwrap();
        let cut = pw.cut_prefix(1);
        assert!(cut.preperiod().is_empty());
        assert_eq!(cut.period(), &w(&g, "a")[..]);

        let ab_w = PeriodicWord::new(&g, vec![], w(&g, "ab")).unwrap();
        assert_eq!(ab_w.cut_prefix(1).period(), &w(&g, "ba")[..]);

        let x = PeriodicWord::new(&g, w(&g, "ab"), w(&g, "ba")).unwrap();
        assert_eq!(x.cut_prefix(0), x);
    }

    #[test]
    fn normalization() {
        let g = ab();
        // a·(ba)^ω = (ab)^ω
        let x = PeriodicWord::new(&g, w(&g, "a"), w(&g, "ba")).unwrap();
        assert!(x.preperiod().is_empty());
        assert_eq!(x.period(), &w(&g, "ab")[..]);
        // (abab)^ω = (ab)^ω
        let y = PeriodicWord::new(&g, vec![], w(&g, "abab")).unwrap();
        assert_eq!(x, y);
        // ab(ba)^ω stays as is: position 1 differs from position 3
        let z = PeriodicWord::new(&g, w(&g, "ab"), w(&g, "ba")).unwrap();
        assert_eq!(z.preperiod(), &w(&g, "ab")[..]);
    }

    #[test]
    fn periodic_word_typing() {
        let h = two_cycle();
        assert!(PeriodicWord::new(&h, vec![], w(&h, "ef")).is_ok());
        assert!(PeriodicWord::new(&h, vec![], w(&h, "e")).is_err());
        assert!(PeriodicWord::new(&h, w(&h, "e"), w(&h, "fe")).is_ok());
        assert!(PeriodicWord::new(&h, w(&h, "e"), w(&h, "ef")).is_err());
    }

    #[test]
    fn factors_examples() {
        let g = ab();
        let f1: Vec<String> = Path::parse(&g, "aba")
            .unwrap()
            .factors(1)
            .iter()
            .map(|p| p.display(&g))
            .collect();
        assert_eq!(f1, ["a", "b"]);
        let f2: Vec<String> = Path::parse(&g, "ab")
            .unwrap()
            .factors(2)
            .iter()
            .map(|p| p.display(&g))
            .collect();
        assert_eq!(f2, ["a", "ab", "b"]);
        let u = Path::parse(&g, "abbab").unwrap();
        assert!(u.factors(u.len()).len() <= u.len() * (u.len() + 1) / 2);
    }
}
