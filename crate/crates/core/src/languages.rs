//! Path languages over finite graphs and their syntactic semigroups.
//!
//! A path language over `A` is a set of nonempty paths, handled as a word
//! language over the letters `E(A)` whose recognizer only accepts paths.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::automata::{
    transition_semigroup, word_closure, Dfa, DfaSpec, Nfa, TransitionSemigroup, SUBSET_STATE_CAP,
    TRANSITION_SEMIGROUP_CAP,
};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::path::{format_word, is_path, Path};
use crate::pseudovar::Pseudovariety;
use crate::semigroupoid::FiniteSemigroupoid;

/// Word length up to which constructions are checked against brute force.
pub const BRUTE_FORCE_BOUND: usize = 8;

/// Accepts exactly the paths of `g`.
///
/// State 0 is the start, state `1 + v` means the last edge read has source
/// `v`, and the final state is the dead state.
pub fn path_automaton(g: &Graph) -> Dfa {
    let k = g.edge_count();
    let nv = g.vertex_count();
    let dead = (nv + 1) as u32;
    let mut delta = Vec::with_capacity((nv + 2) * k);
    for a in g.edges() {
        delta.push(1 + g.src(a).0);
    }
    for v in g.vertices() {
        for a in g.edges() {
            delta.push(if g.dst(a) == v { 1 + g.src(a).0 } else { dead });
        }
    }
    delta.extend(core::iter::repeat_n(dead, k));
    let mut accepting = vec![true; nv + 2];
    accepting[0] = false;
    accepting[nv + 1] = false;
    Dfa::new(k, 0, accepting, delta).expect("well-formed")
}

/// All paths of length at most `max_len`, shortest first, each length in
/// lexicographic order of edge indices.
pub fn paths_up_to(g: &Graph, max_len: usize) -> Vec<Vec<Edge>> {
    let mut out: Vec<Vec<Edge>> = Vec::new();
    let mut layer: Vec<Vec<Edge>> = if max_len == 0 {
        Vec::new()
    } else {
        g.edges().map(|e| vec![e]).collect()
    };
    for _ in 1..max_len {
        let mut next = Vec::new();
        for w in &layer {
            let v = g.src(*w.last().unwrap());
            for b in g.edges().filter(|&b| g.dst(b) == v) {
                let mut x = w.clone();
                x.push(b);
                next.push(x);
            }
        }
        out.append(&mut layer);
        layer = next;
    }
    out.append(&mut layer);
    out
}

#[derive(Clone, Debug)]
pub struct PathLanguage {
    base: Graph,
    dfa: Dfa,
}

impl PathLanguage {
    /// Wraps a recognizer that must accept paths only; the shortest accepted
    /// non-path is reported otherwise.
    pub fn new(base: Graph, recognizer: Dfa) -> Result<PathLanguage> {
        let bad = recognizer.product(&path_automaton(&base), |a, p| a && !p)?;
        if let Some(w) = bad.shortest_accepted() {
            return Err(Error::NotAPathLanguage(if w.is_empty() {
                "the empty word".into()
            } else {
                format_word(&base, &w)
            }));
        }
        let dfa = recognizer.minimize();
        Ok(PathLanguage { base, dfa })
    }

    /// The paths accepted by `recognizer`.
    pub fn restricted_to_paths(base: Graph, recognizer: &Dfa) -> Result<PathLanguage> {
        let dfa = recognizer.product(&path_automaton(&base), |a, p| a && p)?.minimize();
        Ok(PathLanguage { base, dfa })
    }

    /// Reads a possibly partial automaton and keeps the paths it accepts.
    pub fn from_spec(base: Graph, spec: &DfaSpec) -> Result<PathLanguage> {
        let d = Dfa::from_spec(spec, &base, true)?;
        PathLanguage::restricted_to_paths(base, &d)
    }

    /// A finite language; every word must be a path.
    pub fn from_words(base: Graph, words: &[Vec<Edge>]) -> Result<PathLanguage> {
        let k = base.edge_count();
        // trie with a shared dead state 0
        let mut delta = vec![0u32; 2 * k];
        let mut accepting = vec![false, false];
        for w in words {
            if !is_path(&base, w) {
                return Err(Error::NotAPathLanguage(format_word(&base, w)));
            }
            let mut q = 1usize;
            for &a in w {
                let slot = q * k + a.index();
                if delta[slot] == 0 {
                    delta[slot] = accepting.len() as u32;
                    accepting.push(false);
                    delta.extend(core::iter::repeat_n(0, k));
                }
                q = delta[slot] as usize;
            }
            accepting[q] = true;
        }
        let d = Dfa::new(k, 1, accepting, delta)?;
        PathLanguage::new(base, d)
    }

    /// `E(A⁺)`.
    pub fn all_paths(base: Graph) -> PathLanguage {
        let dfa = path_automaton(&base).minimize();
        PathLanguage { base, dfa }
    }

    /// Paths using none of `avoid`.
    pub fn avoiding(base: Graph, avoid: &[Edge]) -> Result<PathLanguage> {
        let k = base.edge_count();
        let mut delta = vec![0u32; 2 * k];
        for a in base.edges() {
            delta[a.index()] = if avoid.contains(&a) { 1 } else { 0 };
            delta[k + a.index()] = 1;
        }
        let d = Dfa::new(k, 0, vec![true, false], delta)?;
        PathLanguage::restricted_to_paths(base, &d)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    /// The minimal complete recognizer.
    pub fn recognizer(&self) -> &Dfa {
        &self.dfa
    }

    pub fn accepts(&self, word: &[Edge]) -> bool {
        self.dfa.accepts(word)
    }

    pub fn accepted_up_to(&self, max_len: usize) -> Vec<Vec<Edge>> {
        paths_up_to(&self.base, max_len)
            .into_iter()
            .filter(|w| self.accepts(w))
            .collect()
    }

    pub fn same_language(&self, other: &PathLanguage) -> bool {
        self.base == other.base && self.dfa == other.dfa
    }
}

/// The syntactic semigroup of a path language as a word language.
#[derive(Clone, Debug)]
pub struct SyntacticResult {
    pub transition: TransitionSemigroup,
    /// Images of accepted words.
    pub accepting: Vec<Edge>,
}

impl SyntacticResult {
    pub fn semigroup(&self) -> &FiniteSemigroupoid {
        &self.transition.semigroup
    }

    pub fn evaluate(&self, word: &[Edge]) -> Option<Edge> {
        self.transition.evaluate(word)
    }

    pub fn is_accepting(&self, e: Edge) -> bool {
        self.accepting.binary_search(&e).is_ok()
    }
}

pub fn syntactic_semigroup(l: &PathLanguage) -> Result<SyntacticResult> {
    syntactic_semigroup_capped(l, TRANSITION_SEMIGROUP_CAP)
}

/// [`syntactic_semigroup`] with an explicit size cap.
pub fn syntactic_semigroup_capped(l: &PathLanguage, cap: usize) -> Result<SyntacticResult> {
    let d = l.recognizer();
    let transition = transition_semigroup(d, l.base(), cap)?;
    let accepting = transition
        .semigroup
        .edges()
        .filter(|e| d.is_accepting(transition.transformations[e.index()][d.start() as usize]))
        .collect();
    Ok(SyntacticResult {
        transition,
        accepting,
    })
}

/// `{uv : u ∈ l, v ∈ k}` restricted to paths.
pub fn concat_languages(l: &PathLanguage, k: &PathLanguage) -> Result<PathLanguage> {
    if l.base != k.base {
        return Err(Error::BaseMismatch);
    }
    let (dl, dk) = (l.recognizer(), k.recognizer());
    let nl = dl.state_count() as u32;
    let letters = dl.letter_count();
    // L-states, then K-states; reaching an accepting L-state may also jump
    // into K's start, so both factors are nonempty
    let mut n = Nfa::new(letters, (nl as usize) + dk.state_count());
    n.add_start(dl.start());
    for q in 0..nl {
        for a in 0..letters {
            let a = Edge(a as u32);
            n.add_transition(q, a, dl.step(q, a));
            if dl.is_accepting(q) && q != dl.start() {
                n.add_transition(q, a, nl + dk.step(dk.start(), a));
            }
        }
    }
    // a start state that is accepting would mean ε ∈ L; path languages exclude it
    debug_assert!(!dl.is_accepting(dl.start()));
    for q in 0..dk.state_count() as u32 {
        if dk.is_accepting(q) {
            n.set_accepting(nl + q);
        }
        for a in 0..letters {
            let a = Edge(a as u32);
            n.add_transition(nl + q, a, nl + dk.step(q, a));
        }
    }
    let d = n.determinize(SUBSET_STATE_CAP)?;
    PathLanguage::restricted_to_paths(l.base.clone(), &d)
}

/// Outcome of [`is_factorial`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factoriality {
    /// No violation among accepted words up to the bound.
    Factorial,
    /// `factor` is a factor of the accepted `word` but is not accepted.
    Violation { word: Vec<Edge>, factor: Vec<Edge> },
}

impl Factoriality {
    pub fn holds(&self) -> bool {
        matches!(self, Factoriality::Factorial)
    }
}

/// Checks factor closure on every accepted word of length at most `bound`.
///
/// Words are scanned shortest first; within a word, suffix-side factors
/// are tried before prefix-side ones.
pub fn is_factorial(l: &PathLanguage, bound: usize) -> Result<Factoriality> {
    if bound == 0 {
        return Err(Error::LengthOutOfRange { len: 0, max: usize::MAX });
    }
    for w in l.accepted_up_to(bound) {
        for i in (0..w.len()).rev() {
            for j in (i + 1..=w.len()).rev() {
                if (i, j) != (0, w.len()) && !l.accepts(&w[i..j]) {
                    return Ok(Factoriality::Violation {
                        factor: w[i..j].to_vec(),
                        word: w,
                    });
                }
            }
        }
    }
    Ok(Factoriality::Factorial)
}

/// Whether the syntactic semigroup of `l` lies in `v`.
pub fn is_v_recognizable(l: &PathLanguage, v: Pseudovariety) -> Result<bool> {
    v.contains(syntactic_semigroup(l)?.semigroup())
}

/// Paths that start with `u` and contain an occurrence of `v` beginning at
/// or after position `|u|`: the language `u·E(A*)·v·E(A*)`.
pub fn clopen_double_occurrence(base: &Graph, u: &Path, v: &Path) -> Result<PathLanguage> {
    let (u, v) = (u.edges(), v.edges());
    let k = base.edge_count();
    let mid = u.len() as u32;
    let last = mid + v.len() as u32;
    let mut n = Nfa::new(k, last as usize + 1);
    n.add_start(0);
    for (i, &a) in u.iter().enumerate() {
        n.add_transition(i as u32, a, i as u32 + 1);
    }
    for (i, &a) in v.iter().enumerate() {
        n.add_transition(mid + i as u32, a, mid + i as u32 + 1);
    }
    for a in base.edges() {
        n.add_transition(mid, a, mid);
        n.add_transition(last, a, last);
    }
    n.set_accepting(last);
    let d = n.determinize(SUBSET_STATE_CAP)?;
    PathLanguage::restricted_to_paths(base.clone(), &d)
}

/// The typed syntactic semigroupoid: paths from `x` to `y` are identified
/// when they act alike on the minimal recognizer.
#[derive(Clone, Debug)]
pub struct TypedSyntactic {
    /// Vertices of the base graph; edges named by their shortlex-least path.
    pub semigroupoid: FiniteSemigroupoid,
    pub letter_images: Vec<Edge>,
    pub accepting: Vec<Edge>,
    /// State map of each edge.
    pub transformations: Vec<Vec<u32>>,
}

impl TypedSyntactic {
    pub fn evaluate(&self, word: &[Edge]) -> Option<Edge> {
        let (&first, rest) = word.split_first()?;
        rest.iter().try_fold(self.letter_images[first.index()], |acc, &a| {
            self.semigroupoid.mul(acc, self.letter_images[a.index()])
        })
    }
}

pub fn syntactic_semigroupoid(l: &PathLanguage) -> Result<TypedSyntactic> {
    let g = l.base();
    let d = l.recognizer();
    let n = d.state_count() as u32;
    let tau = |a: Edge| (0..n).map(|q| d.step(q, a)).collect::<Vec<u32>>();
    let closure = word_closure(
        g.edge_count(),
        |a| Some((g.dst(a), g.src(a), tau(a))),
        |(y, x, t), a| {
            (*x == g.dst(a)).then(|| (*y, g.src(a), t.iter().map(|&q| d.step(q, a)).collect::<Vec<u32>>()))
        },
        TRANSITION_SEMIGROUP_CAP,
        "typed syntactic semigroupoid",
    )?;
    let spec = crate::graph::GraphSpec {
        vertices: g.vertices().map(|v| g.vertex_id(v).to_string()).collect(),
        edges: closure
            .keys
            .iter()
            .zip(&closure.words)
            .map(|((y, x, _), w)| {
                crate::graph::EdgeSpec::new(format_word(g, w), g.vertex_id(*x), g.vertex_id(*y))
            })
            .collect(),
    };
    let graph = Graph::new(spec)?;
    let names: Vec<String> = closure.words.iter().map(|w| format_word(g, w)).collect();
    let pos_of: Vec<Edge> = names.iter().map(|nm| graph.edge(nm).unwrap()).collect();
    let mut to_pos = vec![0u32; names.len()];
    for (i, e) in pos_of.iter().enumerate() {
        to_pos[e.index()] = i as u32;
    }
    let semigroupoid = FiniteSemigroupoid::from_fn_unvalidated(graph, |s, t| {
        let p = closure
            .product(to_pos[s.index()], to_pos[t.index()])
            .expect("composable paths concatenate");
        pos_of[p as usize]
    })?;
    let mut transformations = vec![Vec::new(); names.len()];
    for (i, e) in pos_of.iter().enumerate() {
        transformations[e.index()] = closure.keys[i].2.clone();
    }
    let letter_images = g
        .edges()
        .map(|a| {
            let key = (g.dst(a), g.src(a), tau(a));
            pos_of[closure.keys.iter().position(|k| *k == key).expect("letters are seeds")]
        })
        .collect();
    let accepting = semigroupoid
        .edges()
        .filter(|e| d.is_accepting(transformations[e.index()][d.start() as usize]))
        .collect();
    Ok(TypedSyntactic {
        semigroupoid,
        letter_images,
        accepting,
        transformations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::TransitionSpec;
    use crate::constructions::composability_hom;
    use crate::divisor::{is_divisor, Divisibility};
    use crate::graph::{EdgeSpec, GraphMorphism, GraphSpec};
    use crate::path::parse_word;
    use crate::pseudovar::{is_lsl, is_n};
    use crate::semigroupoid::check_homomorphism;

    fn xy() -> Graph {
        Graph::one_vertex(["x", "y"]).unwrap()
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

    /// x⁺ or y⁺ over {x, y}.
    fn plus(g: &Graph, letter: &str) -> PathLanguage {
        let t = TransitionSpec::new;
        PathLanguage::from_spec(
            g.clone(),
            &DfaSpec {
                states: vec!["s".into(), "a".into()],
                start: "s".into(),
                accepting: vec!["a".into()],
                transitions: vec![t("s", letter, "a"), t("a", letter, "a")],
            },
        )
        .unwrap()
    }

    fn xpyp(g: &Graph) -> PathLanguage {
        concat_languages(&plus(g, "x"), &plus(g, "y")).unwrap()
    }

    #[test]
    fn path_automaton_matches_composability() {
        let g = two_cycle();
        let p = path_automaton(&g);
        let (b, label) = composability_hom(&g);
        for word in all_words(&g, 6) {
            let by_hom = b.evaluate(&label, &word).map(|e| b.name(e) != "0").unwrap_or(false);
            assert_eq!(p.accepts(&word), is_path(&g, &word));
            assert_eq!(p.accepts(&word), by_hom, "{}", format_word(&g, &word));
        }
    }

    pub(crate) fn all_words(g: &Graph, max_len: usize) -> Vec<Vec<Edge>> {
        let mut out = Vec::new();
        let mut layer = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for x in &layer {
                for a in g.edges() {
                    let mut y: Vec<Edge> = x.clone();
                    y.push(a);
                    next.push(y);
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    #[test]
    fn paths_up_to_counts() {
        let g = xy();
        assert_eq!(paths_up_to(&g, 3).len(), 2 + 4 + 8);
        let h = two_cycle();
        assert_eq!(paths_up_to(&h, 4).len(), 8);
        assert!(paths_up_to(&h, 4).iter().all(|p| is_path(&h, p)));
    }

    #[test]
    fn minimal_dfa_of_xpyp() {
        let g = xy();
        let l = xpyp(&g);
        assert_eq!(l.recognizer().state_count(), 4);
        assert!(l.accepts(&w(&g, "xxy")));
        assert!(!l.accepts(&w(&g, "xyx")));
    }

    #[test]
    fn promise_is_checked() {
        let h = two_cycle();
        let mut delta = vec![0u32; 4];
        // accept everything of length ≥ 1
        delta[0] = 1;
        delta[1] = 1;
        delta[2] = 1;
        delta[3] = 1;
        let d = Dfa::new(2, 0, vec![false, true], delta).unwrap();
        assert!(matches!(
            PathLanguage::new(h.clone(), d.clone()),
            Err(Error::NotAPathLanguage(s)) if s == "ee"
        ));
        let l = PathLanguage::restricted_to_paths(h.clone(), &d).unwrap();
        assert!(l.same_language(&PathLanguage::all_paths(h)));
    }

    #[test]
    fn syntactic_examples() {
        let a = Graph::one_vertex(["a"]).unwrap();
        let full = PathLanguage::all_paths(a);
        assert_eq!(syntactic_semigroup(&full).unwrap().semigroup().edge_count(), 1);

        let g = xy();
        let l = xpyp(&g);
        let syn = syntactic_semigroup(&l).unwrap();
        assert!(is_lsl(syn.semigroup()).unwrap());
        let ll = concat_languages(&l, &l).unwrap();
        let syn2 = syntactic_semigroup(&ll).unwrap();
        assert!(!is_lsl(syn2.semigroup()).unwrap());
        assert!(is_v_recognizable(&l, Pseudovariety::LSl).unwrap());
        assert!(!is_v_recognizable(&ll, Pseudovariety::LSl).unwrap());
    }

    #[test]
    fn syntactic_recognizes_exactly() {
        let g = xy();
        let h = two_cycle();
        let langs = [
            xpyp(&g),
            concat_languages(&xpyp(&g), &xpyp(&g)).unwrap(),
            PathLanguage::from_words(h.clone(), &[w(&h, "ef"), w(&h, "e")]).unwrap(),
            PathLanguage::all_paths(h.clone()),
        ];
        for l in &langs {
            let syn = syntactic_semigroup(l).unwrap();
            for word in all_words(l.base(), BRUTE_FORCE_BOUND) {
                let e = syn.evaluate(&word).unwrap();
                assert_eq!(syn.is_accepting(e), l.accepts(&word));
            }
            // divides the transition semigroup of the given recognizer
            let ts = transition_semigroup(l.recognizer(), l.base(), TRANSITION_SEMIGROUP_CAP).unwrap();
            assert_eq!(
                is_divisor(syn.semigroup(), &ts.semigroup, 1_000_000).unwrap(),
                Divisibility::Divides
            );
        }
    }

    #[test]
    fn concat_examples() {
        let g = xy();
        let l = xpyp(&g);
        assert!(l.accepts(&w(&g, "xy")));
        let ll = concat_languages(&l, &l).unwrap();
        assert!(ll.accepts(&w(&g, "xyxy")));
        assert!(ll.accepts(&w(&g, "xxyyyxy")));
        assert!(!ll.accepts(&w(&g, "xy")));
        assert!(!ll.accepts(&w(&g, "xyxyxy")));

        let h = two_cycle();
        let e = PathLanguage::from_words(h.clone(), &[w(&h, "e")]).unwrap();
        let f = PathLanguage::from_words(h.clone(), &[w(&h, "f")]).unwrap();
        let ef = concat_languages(&e, &f).unwrap();
        assert_eq!(ef.accepted_up_to(BRUTE_FORCE_BOUND), vec![w(&h, "ef")]);
        let ee = concat_languages(&e, &e).unwrap();
        assert!(ee.recognizer().is_empty_language());
        assert!(matches!(concat_languages(&e, &l), Err(Error::BaseMismatch)));
    }

    #[test]
    fn concat_agrees_with_brute_force() {
        let g = xy();
        let h = two_cycle();
        let pairs = [
            (plus(&g, "x"), plus(&g, "y")),
            (xpyp(&g), xpyp(&g)),
            (xpyp(&g), plus(&g, "x")),
            (
                PathLanguage::from_words(h.clone(), &[w(&h, "e"), w(&h, "fe")]).unwrap(),
                PathLanguage::all_paths(h.clone()),
            ),
        ];
        for (l, k) in &pairs {
            let c = concat_languages(l, k).unwrap();
            for word in all_words(l.base(), BRUTE_FORCE_BOUND) {
                let brute = is_path(l.base(), &word)
                    && (1..word.len()).any(|i| l.accepts(&word[..i]) && k.accepts(&word[i..]));
                assert_eq!(c.accepts(&word), brute, "{}", format_word(l.base(), &word));
            }
        }
    }

    #[test]
    fn factorial_examples() {
        let g = Graph::one_vertex(["a", "b", "c"]).unwrap();
        let c = g.edge("c").unwrap();
        let avoid = PathLanguage::avoiding(g.clone(), &[c]).unwrap();
        assert!(is_factorial(&avoid, BRUTE_FORCE_BOUND).unwrap().holds());
        assert!(is_factorial(&PathLanguage::all_paths(two_cycle()), BRUTE_FORCE_BOUND).unwrap().holds());

        let h = xy();
        let r = is_factorial(&xpyp(&h), BRUTE_FORCE_BOUND).unwrap();
        assert_eq!(
            r,
            Factoriality::Violation {
                word: w(&h, "xy"),
                factor: w(&h, "y")
            }
        );
        assert!(is_factorial(&xpyp(&h), 0).is_err());
    }

    #[test]
    fn factorial_semantics() {
        // if L is factorial and uv ∈ L then u, v ∈ L
        let g = Graph::one_vertex(["a", "b", "c"]).unwrap();
        let l = PathLanguage::avoiding(g.clone(), &[g.edge("b").unwrap()]).unwrap();
        for word in l.accepted_up_to(6) {
            for i in 1..word.len() {
                assert!(l.accepts(&word[..i]) && l.accepts(&word[i..]));
            }
        }
    }

    #[test]
    fn finite_languages_are_nilpotent() {
        let g = xy();
        let h = two_cycle();
        let fin = [
            PathLanguage::from_words(g.clone(), &[w(&g, "xy"), w(&g, "yyx"), w(&g, "x")]).unwrap(),
            PathLanguage::from_words(h.clone(), &[w(&h, "efe")]).unwrap(),
            PathLanguage::from_words(g.clone(), &[]).unwrap(),
        ];
        for l in &fin {
            assert!(is_n(syntactic_semigroup(l).unwrap().semigroup()).unwrap());
            assert!(is_v_recognizable(l, Pseudovariety::N).unwrap());
        }
    }

    #[test]
    fn double_occurrence_examples() {
        let g = Graph::one_vertex(["a", "b"]).unwrap();
        let b = Path::parse(&g, "b").unwrap();
        let l = clopen_double_occurrence(&g, &b, &b).unwrap();
        assert!(l.accepts(&w(&g, "bab")));
        assert!(l.accepts(&w(&g, "bb")));
        assert!(!l.accepts(&w(&g, "baa")));
        assert!(!l.accepts(&w(&g, "abb")));
        assert!(is_v_recognizable(&l, Pseudovariety::LSl).unwrap());

        for (u, v) in [("ab", "b"), ("a", "ba"), ("aba", "ab")] {
            let l = clopen_double_occurrence(
                &g,
                &Path::parse(&g, u).unwrap(),
                &Path::parse(&g, v).unwrap(),
            )
            .unwrap();
            assert!(is_v_recognizable(&l, Pseudovariety::LSl).unwrap(), "{u} {v}");
            let (u, v) = (w(&g, u), w(&g, v));
            for word in all_words(&g, BRUTE_FORCE_BOUND) {
                let brute = word.starts_with(&u)
                    && (u.len()..word.len()).any(|m| word[m..].starts_with(&v));
                assert_eq!(l.accepts(&word), brute);
            }
        }
    }

    #[test]
    fn double_occurrence_over_a_graph() {
        let h = two_cycle();
        let e = Path::parse(&h, "e").unwrap();
        let l = clopen_double_occurrence(&h, &e, &e).unwrap();
        assert!(l.accepts(&w(&h, "efe")));
        assert!(!l.accepts(&w(&h, "ef")));
        assert!(!l.accepts(&w(&h, "ee")));
    }

    #[test]
    fn typed_semigroupoid_cross_check() {
        let g = xy();
        let h = two_cycle();
        let langs = [
            xpyp(&g),
            PathLanguage::from_words(h.clone(), &[w(&h, "ef"), w(&h, "fef")]).unwrap(),
            PathLanguage::all_paths(h.clone()),
            clopen_double_occurrence(&h, &Path::parse(&h, "e").unwrap(), &Path::parse(&h, "fe").unwrap()).unwrap(),
        ];
        for l in &langs {
            let typed = syntactic_semigroupoid(l).unwrap();
            let s = &typed.semigroupoid;
            assert!(s.validate().is_ok());
            let word_level = syntactic_semigroup(l).unwrap();
            // the forgetful map to the word-level semigroup is a homomorphism
            let sg = word_level.semigroup();
            let star = crate::graph::Vertex(0);
            let mut emap = Vec::new();
            for e in s.edges() {
                let img = sg
                    .edges()
                    .find(|&t| word_level.transition.transformations[t.index()] == typed.transformations[e.index()])
                    .unwrap();
                emap.push(img);
            }
            let h_map = GraphMorphism {
                vmap: vec![star; s.graph().vertex_count()],
                emap,
            };
            assert!(check_homomorphism(s, sg, &h_map).is_ok());
            // coterminal typed edges are distinguished by their word-level images
            for a in s.edges() {
                for b in s.edges() {
                    let coterminal = s.graph().src(a) == s.graph().src(b) && s.graph().dst(a) == s.graph().dst(b);
                    if a != b && coterminal {
                        assert_ne!(h_map.edge(a), h_map.edge(b));
                    }
                }
            }
            // recognition on paths
            for p in paths_up_to(l.base(), BRUTE_FORCE_BOUND) {
                let e = typed.evaluate(&p).unwrap();
                assert_eq!(typed.accepting.contains(&e), l.accepts(&p));
            }
        }
    }
}
