//! Complete deterministic automata over the edge alphabet of a graph,
//! subset construction, minimization and transition semigroups.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::path::format_word;
use crate::semigroupoid::FiniteSemigroupoid;

/// Largest subset construction attempted.
pub const SUBSET_STATE_CAP: usize = 1 << 16;

/// Largest transition semigroup built by default.
pub const TRANSITION_SEMIGROUP_CAP: usize = 4096;

/// Serializable description of an automaton; letters are edge ids.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DfaSpec {
    pub states: Vec<String>,
    pub start: String,
    pub accepting: Vec<String>,
    pub transitions: Vec<TransitionSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionSpec {
    pub from: String,
    pub letter: String,
    pub to: String,
}

impl TransitionSpec {
    pub fn new(from: impl Into<String>, letter: impl Into<String>, to: impl Into<String>) -> Self {
        TransitionSpec {
            from: from.into(),
            letter: letter.into(),
            to: to.into(),
        }
    }
}

/// A complete DFA whose letters are the edges `0..letters` of some graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    letters: usize,
    start: u32,
    accepting: Vec<bool>,
    delta: Vec<u32>,
}

impl Dfa {
    /// `delta[q * letters + a]` is the successor of `q` on letter `a`.
    pub fn new(letters: usize, start: u32, accepting: Vec<bool>, delta: Vec<u32>) -> Result<Dfa> {
        let n = accepting.len();
        if n == 0 {
            return Err(Error::InvalidDfa("no states".into()));
        }
        if start as usize >= n {
            return Err(Error::InvalidDfa(format!("start state {start} out of range")));
        }
        if delta.len() != n * letters {
            return Err(Error::InvalidDfa(format!(
                "transition table has {} entries, expected {}",
                delta.len(),
                n * letters
            )));
        }
        if let Some(&q) = delta.iter().find(|&&q| q as usize >= n) {
            return Err(Error::InvalidDfa(format!("target state {q} out of range")));
        }
        Ok(Dfa {
            letters,
            start,
            accepting,
            delta,
        })
    }

    /// Reads a spec over `alphabet`. Missing transitions are an error unless
    /// `complete` is set, in which case they lead to a fresh rejecting sink.
    pub fn from_spec(spec: &DfaSpec, alphabet: &Graph, complete: bool) -> Result<Dfa> {
        let mut index: BTreeMap<&str, u32> = BTreeMap::new();
        for (i, q) in spec.states.iter().enumerate() {
            if index.insert(q.as_str(), i as u32).is_some() {
                return Err(Error::InvalidDfa(format!("duplicate state `{q}`")));
            }
        }
        let state = |q: &str| {
            index.get(q).copied().ok_or_else(|| Error::UnknownId {
                kind: "state",
                id: q.to_string(),
            })
        };
        let n = spec.states.len();
        let k = alphabet.edge_count();
        let start = state(&spec.start)?;
        let mut accepting = vec![false; n];
        for q in &spec.accepting {
            accepting[state(q)? as usize] = true;
        }
        let mut delta = vec![u32::MAX; n * k];
        for t in &spec.transitions {
            let from = state(&t.from)? as usize;
            let a = alphabet.require_edge(&t.letter)?.index();
            let to = state(&t.to)?;
            let slot = &mut delta[from * k + a];
            if *slot != u32::MAX && *slot != to {
                return Err(Error::InvalidDfa(format!(
                    "two transitions from `{}` on `{}`",
                    t.from, t.letter
                )));
            }
            *slot = to;
        }
        if let Some(pos) = delta.iter().position(|&q| q == u32::MAX) {
            if !complete {
                return Err(Error::IncompleteDfa {
                    state: spec.states[pos / k].clone(),
                    letter: alphabet.edge_id(Edge((pos % k) as u32)).to_string(),
                });
            }
            let sink = n as u32;
            for q in delta.iter_mut().filter(|q| **q == u32::MAX) {
                *q = sink;
            }
            delta.extend(core::iter::repeat_n(sink, k));
            accepting.push(false);
        }
        Dfa::new(k, start, accepting, delta)
    }

    /// States are named by their indices.
    pub fn to_spec(&self, alphabet: &Graph) -> DfaSpec {
        let name = |q: u32| q.to_string();
        DfaSpec {
            states: (0..self.state_count() as u32).map(name).collect(),
            start: name(self.start),
            accepting: (0..self.state_count() as u32)
                .filter(|&q| self.is_accepting(q))
                .map(name)
                .collect(),
            transitions: (0..self.state_count() as u32)
                .flat_map(|q| {
                    alphabet
                        .edges()
                        .map(move |a| TransitionSpec::new(name(q), alphabet.edge_id(a), name(self.step(q, a))))
                })
                .collect(),
        }
    }

    pub fn state_count(&self) -> usize {
        self.accepting.len()
    }

    pub fn letter_count(&self) -> usize {
        self.letters
    }

    pub fn start(&self) -> u32 {
        self.start
    }

    pub fn is_accepting(&self, q: u32) -> bool {
        self.accepting[q as usize]
    }

    #[inline]
    pub fn step(&self, q: u32, a: Edge) -> u32 {
        self.delta[q as usize * self.letters + a.index()]
    }

    pub fn run(&self, q: u32, word: &[Edge]) -> u32 {
        word.iter().fold(q, |q, &a| self.step(q, a))
    }

    pub fn accepts(&self, word: &[Edge]) -> bool {
        self.is_accepting(self.run(self.start, word))
    }

    fn reachable(&self) -> Vec<u32> {
        // BFS from the start, letters in order: this is the canonical numbering
        let mut order = vec![self.start];
        let mut seen = vec![false; self.state_count()];
        seen[self.start as usize] = true;
        let mut head = 0;
        while head < order.len() {
            let q = order[head];
            head += 1;
            for a in 0..self.letters {
                let r = self.step(q, Edge(a as u32));
                if !seen[r as usize] {
                    seen[r as usize] = true;
                    order.push(r);
                }
            }
        }
        order
    }

    /// The minimal complete DFA, states numbered in BFS order from the start.
    pub fn minimize(&self) -> Dfa {
        let order = self.reachable();
        let mut class: Vec<u32> = vec![0; self.state_count()];
        for &q in &order {
            class[q as usize] = self.is_accepting(q) as u32;
        }
        let mut classes = order.iter().map(|&q| class[q as usize]).collect::<BTreeSet<_>>().len();
        // Moore refinement
        loop {
            let mut sigs: BTreeMap<Vec<u32>, u32> = BTreeMap::new();
            let mut next = class.clone();
            for &q in &order {
                let mut sig = Vec::with_capacity(self.letters + 1);
                sig.push(class[q as usize]);
                for a in 0..self.letters {
                    sig.push(class[self.step(q, Edge(a as u32)) as usize]);
                }
                let fresh = sigs.len() as u32;
                next[q as usize] = *sigs.entry(sig).or_insert(fresh);
            }
            class = next;
            if sigs.len() == classes {
                break;
            }
            classes = sigs.len();
        }
        // quotient, then renumber canonically
        let mut rep: Vec<u32> = vec![u32::MAX; classes];
        for &q in &order {
            if rep[class[q as usize] as usize] == u32::MAX {
                rep[class[q as usize] as usize] = q;
            }
        }
        let class = &class;
        let quotient = Dfa {
            letters: self.letters,
            start: class[self.start as usize],
            accepting: rep.iter().map(|&q| self.is_accepting(q)).collect(),
            delta: rep
                .iter()
                .flat_map(|&q| (0..self.letters).map(move |a| class[self.step(q, Edge(a as u32)) as usize]))
                .collect(),
        };
        quotient.renumbered()
    }

    fn renumbered(&self) -> Dfa {
        let order = self.reachable();
        let mut new = vec![u32::MAX; self.state_count()];
        for (i, &q) in order.iter().enumerate() {
            new[q as usize] = i as u32;
        }
        Dfa {
            letters: self.letters,
            start: 0,
            accepting: order.iter().map(|&q| self.is_accepting(q)).collect(),
            delta: order
                .iter()
                .flat_map(|&q| (0..self.letters).map(move |a| (q, a)))
                .map(|(q, a)| new[self.step(q, Edge(a as u32)) as usize])
                .collect(),
        }
    }

    /// Reachable part of the synchronous product, accepting where `op` says.
    pub fn product(&self, other: &Dfa, op: impl Fn(bool, bool) -> bool) -> Result<Dfa> {
        if self.letters != other.letters {
            return Err(Error::BaseMismatch);
        }
        let mut ids: BTreeMap<(u32, u32), u32> = BTreeMap::new();
        let mut pairs = vec![(self.start, other.start)];
        ids.insert((self.start, other.start), 0);
        let mut delta = Vec::new();
        let mut head = 0;
        while head < pairs.len() {
            let (p, q) = pairs[head];
            head += 1;
            for a in 0..self.letters {
                let a = Edge(a as u32);
                let next = (self.step(p, a), other.step(q, a));
                let fresh = pairs.len() as u32;
                let id = *ids.entry(next).or_insert_with(|| {
                    pairs.push(next);
                    fresh
                });
                delta.push(id);
            }
        }
        let accepting = pairs
            .iter()
            .map(|&(p, q)| op(self.is_accepting(p), other.is_accepting(q)))
            .collect();
        Dfa::new(self.letters, 0, accepting, delta)
    }

    /// A shortest accepted word, shortlex-least among those.
    pub fn shortest_accepted(&self) -> Option<Vec<Edge>> {
        let mut parent: Vec<Option<(u32, Edge)>> = vec![None; self.state_count()];
        let mut seen = vec![false; self.state_count()];
        let mut queue = vec![self.start];
        seen[self.start as usize] = true;
        let mut head = 0;
        while head < queue.len() {
            let q = queue[head];
            head += 1;
            if self.is_accepting(q) {
                let mut word = Vec::new();
                let mut cur = q;
                while let Some((p, a)) = parent[cur as usize] {
                    word.push(a);
                    cur = p;
                }
                word.reverse();
                return Some(word);
            }
            for a in 0..self.letters {
                let a = Edge(a as u32);
                let r = self.step(q, a);
                if !seen[r as usize] {
                    seen[r as usize] = true;
                    parent[r as usize] = Some((q, a));
                    queue.push(r);
                }
            }
        }
        None
    }

    pub fn is_empty_language(&self) -> bool {
        self.shortest_accepted().is_none()
    }

    pub fn same_language(&self, other: &Dfa) -> bool {
        self.letters == other.letters && self.minimize() == other.minimize()
    }
}

/// A nondeterministic automaton without ε-moves.
#[derive(Clone, Debug)]
pub struct Nfa {
    letters: usize,
    start: Vec<u32>,
    accepting: Vec<bool>,
    delta: Vec<Vec<u32>>,
}

impl Nfa {
    pub fn new(letters: usize, states: usize) -> Nfa {
        Nfa {
            letters,
            start: Vec::new(),
            accepting: vec![false; states],
            delta: vec![Vec::new(); states * letters],
        }
    }

    pub fn add_start(&mut self, q: u32) {
        self.start.push(q);
    }

    pub fn set_accepting(&mut self, q: u32) {
        self.accepting[q as usize] = true;
    }

    pub fn add_transition(&mut self, from: u32, a: Edge, to: u32) {
        self.delta[from as usize * self.letters + a.index()].push(to);
    }

    /// Subset construction over reachable subsets, refusing beyond `cap`.
    pub fn determinize(&self, cap: usize) -> Result<Dfa> {
        let norm = |mut v: Vec<u32>| {
            v.sort_unstable();
            v.dedup();
            v
        };
        let first = norm(self.start.clone());
        let mut ids: BTreeMap<Vec<u32>, u32> = BTreeMap::new();
        ids.insert(first.clone(), 0);
        let mut subsets = vec![first];
        let mut delta = Vec::new();
        let mut head = 0;
        while head < subsets.len() {
            for a in 0..self.letters {
                let next = norm(
                    subsets[head]
                        .iter()
                        .flat_map(|&q| self.delta[q as usize * self.letters + a].iter().copied())
                        .collect(),
                );
                let id = match ids.get(&next) {
                    Some(&id) => id,
                    None => {
                        if subsets.len() >= cap {
                            return Err(Error::TooLarge {
                                what: "subset construction",
                                size: subsets.len() as u128 + 1,
                                cap: cap as u128,
                            });
                        }
                        let id = subsets.len() as u32;
                        ids.insert(next.clone(), id);
                        subsets.push(next);
                        id
                    }
                };
                delta.push(id);
            }
            head += 1;
        }
        let accepting = subsets
            .iter()
            .map(|set| set.iter().any(|&q| self.accepting[q as usize]))
            .collect();
        Dfa::new(self.letters, 0, accepting, delta)
    }
}

/// Elements reachable from letters by right extension, in shortlex order of
/// their least words.
pub(crate) struct WordClosure<K> {
    pub keys: Vec<K>,
    pub words: Vec<Vec<Edge>>,
    /// `right[i][a]`: the element of `words[i]·a`, when defined.
    pub right: Vec<Vec<Option<u32>>>,
}

pub(crate) fn word_closure<K: Ord + Clone>(
    letters: usize,
    seed: impl Fn(Edge) -> Option<K>,
    extend: impl Fn(&K, Edge) -> Option<K>,
    cap: usize,
    what: &'static str,
) -> Result<WordClosure<K>> {
    let mut ids: BTreeMap<K, u32> = BTreeMap::new();
    let mut out = WordClosure {
        keys: Vec::new(),
        words: Vec::new(),
        right: Vec::new(),
    };
    let mut intern = |out: &mut WordClosure<K>, key: K, word: Vec<Edge>| -> Result<u32> {
        if let Some(&id) = ids.get(&key) {
            return Ok(id);
        }
        if out.keys.len() >= cap {
            return Err(Error::TooLarge {
                what,
                size: out.keys.len() as u128 + 1,
                cap: cap as u128,
            });
        }
        let id = out.keys.len() as u32;
        ids.insert(key.clone(), id);
        out.keys.push(key);
        out.words.push(word);
        Ok(id)
    };
    for a in 0..letters {
        let a = Edge(a as u32);
        if let Some(k) = seed(a) {
            intern(&mut out, k, vec![a])?;
        }
    }
    let mut head = 0;
    while head < out.keys.len() {
        let mut row = vec![None; letters];
        for (a, slot) in row.iter_mut().enumerate() {
            let a = Edge(a as u32);
            if let Some(k) = extend(&out.keys[head], a) {
                let mut w = out.words[head].clone();
                w.push(a);
                *slot = Some(intern(&mut out, k, w)?);
            }
        }
        out.right.push(row);
        head += 1;
    }
    Ok(out)
}

impl<K> WordClosure<K> {
    /// The element of `words[i]·words[j]`, if that word was reachable.
    pub fn product(&self, i: u32, j: u32) -> Option<u32> {
        self.words[j as usize]
            .iter()
            .try_fold(i, |cur, &a| self.right[cur as usize][a.index()])
    }
}

/// The semigroup of transformations induced by nonempty words.
#[derive(Clone, Debug)]
pub struct TransitionSemigroup {
    /// One-vertex semigroup; elements are named by their shortlex-least words.
    pub semigroup: FiniteSemigroupoid,
    /// Image of each letter.
    pub letter_images: Vec<Edge>,
    /// State map of each element, indexed like `semigroup`'s edges.
    pub transformations: Vec<Vec<u32>>,
    /// Shortlex-least word of each element.
    pub words: Vec<Vec<Edge>>,
}

impl TransitionSemigroup {
    pub fn evaluate(&self, word: &[Edge]) -> Option<Edge> {
        let (&first, rest) = word.split_first()?;
        Some(rest.iter().fold(self.letter_images[first.index()], |acc, &a| {
            self.semigroup.mul_composable(acc, self.letter_images[a.index()])
        }))
    }
}

pub fn transition_semigroup(d: &Dfa, alphabet: &Graph, cap: usize) -> Result<TransitionSemigroup> {
    if d.letter_count() != alphabet.edge_count() {
        return Err(Error::BaseMismatch);
    }
    let n = d.state_count() as u32;
    let closure = word_closure(
        d.letter_count(),
        |a| Some((0..n).map(|q| d.step(q, a)).collect::<Vec<u32>>()),
        |tau, a| Some(tau.iter().map(|&q| d.step(q, a)).collect::<Vec<u32>>()),
        cap,
        "transition semigroup",
    )?;
    let names: Vec<String> = closure.words.iter().map(|w| format_word(alphabet, w)).collect();
    let semigroup = FiniteSemigroupoid::semigroup_from_elements_unvalidated(names.clone(), |i, j| {
        closure.product(i as u32, j as u32).expect("total") as usize
    })?;
    let pos_of: Vec<Edge> = names.iter().map(|nm| semigroup.element(nm).unwrap()).collect();
    let mut transformations = vec![Vec::new(); names.len()];
    let mut words = vec![Vec::new(); names.len()];
    for (i, e) in pos_of.iter().enumerate() {
        transformations[e.index()] = closure.keys[i].clone();
        words[e.index()] = closure.words[i].clone();
    }
    let letter_images = alphabet
        .edges()
        .map(|a| {
            let tau: Vec<u32> = (0..n).map(|q| d.step(q, a)).collect();
            let i = closure.keys.iter().position(|k| *k == tau).unwrap();
            pos_of[i]
        })
        .collect();
    Ok(TransitionSemigroup {
        semigroup,
        letter_images,
        transformations,
        words,
    })
}
