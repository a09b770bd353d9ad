//! Recurrence of eventually periodic right-infinite paths, and the images of
//! their prefixes in finite semigroupoids.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::automata::Dfa;
use crate::error::{Error, Result};
use crate::graph::{check_morphism, Edge, Graph, GraphMorphism};
use crate::path::PeriodicWord;
use crate::semigroupoid::FiniteSemigroupoid;

/// Longest prefix examined by the recurrence tests: `|p| + 2|q|`.
pub fn decision_bound(w: &PeriodicWord) -> usize {
    w.preperiod().len() + 2 * w.period().len()
}

/// Number of leading letters searched for reoccurrences:
/// `|p| + 4·bound + 4|q|`.
pub fn decision_window(w: &PeriodicWord) -> usize {
    w.preperiod().len() + 4 * decision_bound(w) + 4 * w.period().len()
}

/// Outcome of [`is_recurrent`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recurrence {
    /// `(n, m)`: the length-`n` prefix reoccurs at position `m ≥ 1`, for
    /// every `n` up to the decision bound.
    Recurrent { occurrences: Vec<(usize, usize)> },
    /// The shortest prefix that occurs only at position 0.
    NotRecurrent { prefix: Vec<Edge> },
}

impl Recurrence {
    pub fn holds(&self) -> bool {
        matches!(self, Recurrence::Recurrent { .. })
    }
}

/// First position `m ≥ from` with `text[m, m+n) = text[0, n)`.
fn find_occurrence(text: &[Edge], n: usize, from: usize) -> Option<usize> {
    (from..=text.len().saturating_sub(n)).find(|&m| text[m..m + n] == text[..n])
}

/// Decides whether every finite prefix of `w` reoccurs at a positive
/// position.
///
/// For `w = p·q^ω` in normal form, a prefix that reoccurs at all reoccurs
/// before position `|p| + |q|`: occurrences inside `q^ω` can be shifted back
/// by multiples of `|q|`. And when `p` is nonempty the prefix of length
/// `|p| + |q|` never reoccurs, since `q` is primitive and `p` does not end
/// with the last letter of `q`. So the bounded search below is exact.
pub fn is_recurrent(w: &PeriodicWord) -> Recurrence {
    let text = w.window(decision_window(w));
    let mut occurrences = Vec::new();
    for n in 1..=decision_bound(w) {
        match find_occurrence(&text, n, 1) {
            Some(m) => occurrences.push((n, m)),
            None => {
                return Recurrence::NotRecurrent {
                    prefix: text[..n].to_vec(),
                }
            }
        }
    }
    Recurrence::Recurrent { occurrences }
}

/// Whether every prefix `u` up to the decision bound starts a longer prefix
/// of the form `u·x·u·y`, that is, reoccurs at a position `m ≥ |u|`.
pub fn is_recurrent_uxuy(w: &PeriodicWord) -> bool {
    let text = w.window(decision_window(w));
    (1..=decision_bound(w)).all(|n| find_occurrence(&text, n, n).is_some())
}

/// Values attained infinitely often by the running fold `v_1 = first(w[0])`,
/// `v_{n+1} = step(v_n, w[n])`, sorted.
///
/// Beyond `|p|` the next letter depends only on the phase `(n − |p|) mod |q|`,
/// so the first repeated `(phase, value)` pair closes the eventual cycle.
fn cycle_values<V: Ord + Clone>(
    w: &PeriodicWord,
    first: impl Fn(Edge) -> V,
    step: impl Fn(&V, Edge) -> V,
) -> (Vec<V>, usize, usize) {
    let p = w.preperiod().len();
    let q = w.period().len();
    let mut n = 1;
    let mut v = first(w.at(0));
    while n < p {
        v = step(&v, w.at(n));
        n += 1;
    }
    let mut seen: BTreeMap<(usize, V), usize> = BTreeMap::new();
    let mut trail: Vec<V> = Vec::new();
    loop {
        let key = ((n - p) % q, v.clone());
        if let Some(&start) = seen.get(&key) {
            let first_index = start;
            let mut cyc: Vec<V> = trail[first_index..].to_vec();
            cyc.sort();
            cyc.dedup();
            let base = n - trail.len();
            return (cyc, base + first_index, trail.len() - first_index);
        }
        seen.insert(key, trail.len());
        trail.push(v.clone());
        v = step(&v, w.at(n));
        n += 1;
    }
}

/// The prefix images that recur infinitely often.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurringImages {
    /// Sorted.
    pub images: Vec<Edge>,
    /// The prefix lengths `n ≥ cycle_start` repeat with period `cycle_len`.
    pub cycle_start: usize,
    pub cycle_len: usize,
}

/// Images of the prefixes `w[0, n)` under `labeling: base → target`, keeping
/// those attained for infinitely many `n`.
pub fn recurring_images(
    w: &PeriodicWord,
    base: &Graph,
    target: &FiniteSemigroupoid,
    labeling: &GraphMorphism,
) -> Result<RecurringImages> {
    check_morphism(base, target.graph(), labeling).map_err(|d| {
        let msgs: Vec<String> = d.iter().map(|x| x.to_string()).collect();
        Error::InvalidMorphism(msgs.join("; "))
    })?;
    let (images, cycle_start, cycle_len) = cycle_values(
        w,
        |a| labeling.edge(a),
        |&v, a| target.mul(v, labeling.edge(a)).expect("labeled paths compose"),
    );
    Ok(RecurringImages {
        images,
        cycle_start,
        cycle_len,
    })
}

/// Whether some recurring prefix image is idempotent.
pub fn has_recurring_idempotent(
    w: &PeriodicWord,
    base: &Graph,
    target: &FiniteSemigroupoid,
    labeling: &GraphMorphism,
) -> Result<bool> {
    let r = recurring_images(w, base, target, labeling)?;
    Ok(r.images.iter().any(|&e| target.is_idempotent(e)))
}

/// Recurring prefix images in the transition semigroup of `d`, as state
/// maps. The transition semigroup is never tabulated, so this scales to
/// automata whose semigroups are too large to build.
pub fn recurring_transformations(w: &PeriodicWord, d: &Dfa) -> Vec<Vec<u32>> {
    let n = d.state_count() as u32;
    cycle_values(
        w,
        |a| (0..n).map(|q| d.step(q, a)).collect::<Vec<u32>>(),
        |t, a| t.iter().map(|&q| d.step(q, a)).collect(),
    )
    .0
}

/// [`has_recurring_idempotent`] for the transition semigroup of `d`.
pub fn has_recurring_idempotent_transformation(w: &PeriodicWord, d: &Dfa) -> bool {
    recurring_transformations(w, d)
        .iter()
        .any(|t| t.iter().all(|&q| t[q as usize] == q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cyclic_group, truncation};
    use crate::languages::{clopen_double_occurrence, syntactic_semigroup};
    use crate::path::{parse_word, Path};
    use crate::semigroupoid::FiniteSemigroupoid;
    use alloc::vec;
    use proptest::prelude::*;

    fn ab() -> Graph {
        Graph::one_vertex(["a", "b"]).unwrap()
    }

    fn pw(g: &Graph, p: &str, q: &str) -> PeriodicWord {
        let p = if p.is_empty() { Vec::new() } else { parse_word(g, p).unwrap() };
        PeriodicWord::new(g, p, parse_word(g, q).unwrap()).unwrap()
    }

    /// Identity labeling between one-vertex graphs with matching edge names.
    fn by_name(g: &Graph, s: &FiniteSemigroupoid) -> GraphMorphism {
        GraphMorphism {
            vmap: vec![crate::graph::Vertex(0)],
            emap: g.edges().map(|e| s.element(g.edge_id(e)).unwrap()).collect(),
        }
    }

    #[test]
    fn recurrence_examples() {
        let g = ab();
        assert!(is_recurrent(&pw(&g, "", "ab")).holds());
        assert_eq!(
            is_recurrent(&pw(&g, "b", "a")),
            Recurrence::NotRecurrent { prefix: parse_word(&g, "b").unwrap() }
        );
        assert_eq!(
            is_recurrent(&pw(&g, "ab", "ba")),
            Recurrence::NotRecurrent { prefix: parse_word(&g, "abb").unwrap() }
        );
        assert!(is_recurrent_uxuy(&pw(&g, "", "ab")));
        assert!(!is_recurrent_uxuy(&pw(&g, "b", "a")));
        assert!(!is_recurrent_uxuy(&pw(&g, "ab", "ba")));
    }

    #[test]
    fn recurring_image_examples() {
        let g = ab();
        let k = truncation(&["a", "b"], 2);
        let lab = by_name(&g, &k);
        let r = recurring_images(&pw(&g, "", "ab"), &g, &k, &lab).unwrap();
        assert_eq!(r.images, vec![k.element("ab").unwrap()]);
        assert!(has_recurring_idempotent(&pw(&g, "", "ab"), &g, &k, &lab).unwrap());
        let r = recurring_images(&pw(&g, "b", "a"), &g, &k, &lab).unwrap();
        assert_eq!(r.images, vec![k.element("ba").unwrap()]);

        let a = Graph::one_vertex(["a"]).unwrap();
        let z2 = cyclic_group(2);
        let lab = GraphMorphism {
            vmap: vec![crate::graph::Vertex(0)],
            emap: vec![z2.element("1").unwrap()],
        };
        let w = PeriodicWord::new(&a, vec![], parse_word(&a, "a").unwrap()).unwrap();
        let r = recurring_images(&w, &a, &z2, &lab).unwrap();
        assert_eq!(r.images, vec![z2.element("0").unwrap(), z2.element("1").unwrap()]);
        assert_eq!(r.cycle_len, 2);
        assert!(has_recurring_idempotent(&w, &a, &z2, &lab).unwrap());
    }

    #[test]
    fn double_occurrence_certifies_non_recurrence() {
        let g = ab();
        let w = pw(&g, "b", "a");
        let b = Path::parse(&g, "b").unwrap();
        let l = clopen_double_occurrence(&g, &b, &b).unwrap();
        let syn = syntactic_semigroup(&l).unwrap();
        let lab = GraphMorphism {
            vmap: vec![crate::graph::Vertex(0)],
            emap: syn.transition.letter_images.clone(),
        };
        let r = recurring_images(&w, &g, syn.semigroup(), &lab).unwrap();
        assert_eq!(r.images.len(), 1);
        let s = r.images[0];
        assert!(!syn.semigroup().is_idempotent(s));
        assert!(!has_recurring_idempotent(&w, &g, syn.semigroup(), &lab).unwrap());
        assert!(!has_recurring_idempotent_transformation(&w, l.recognizer()));
    }

    #[test]
    fn transformation_route_matches_table_route() {
        let g = Graph::one_vertex(["a", "b", "c"]).unwrap();
        let words = [("", "ab"), ("c", "ab"), ("ab", "cab"), ("", "abc"), ("bc", "a"), ("a", "bc")];
        for (u, v) in [("a", "a"), ("ab", "ab"), ("c", "b"), ("ca", "ca")] {
            let l = clopen_double_occurrence(&g, &Path::parse(&g, u).unwrap(), &Path::parse(&g, v).unwrap()).unwrap();
            let syn = syntactic_semigroup(&l).unwrap();
            let lab = GraphMorphism {
                vmap: vec![crate::graph::Vertex(0)],
                emap: syn.transition.letter_images.clone(),
            };
            for (p, q) in words {
                let w = pw(&g, p, q);
                let table: Vec<Vec<u32>> = recurring_images(&w, &g, syn.semigroup(), &lab)
                    .unwrap()
                    .images
                    .iter()
                    .map(|e| syn.transition.transformations[e.index()].clone())
                    .collect();
                let mut table = table;
                table.sort();
                assert_eq!(table, recurring_transformations(&w, l.recognizer()));
                assert_eq!(
                    has_recurring_idempotent(&w, &g, syn.semigroup(), &lab).unwrap(),
                    has_recurring_idempotent_transformation(&w, l.recognizer())
                );
            }
        }
    }

    fn arb_word() -> impl Strategy<Value = (Vec<u32>, Vec<u32>)> {
        (
            proptest::collection::vec(0u32..3, 0..=6),
            proptest::collection::vec(0u32..3, 1..=6),
        )
    }

    /// Reoccurrence search over a window fifty times longer, for lengths up
    /// to the same bound.
    fn brute_recurrent(w: &PeriodicWord) -> bool {
        let text = w.window(50 * decision_window(w));
        (1..=decision_bound(w)).all(|n| (1..=text.len() - n).any(|m| text[m..m + n] == text[..n]))
    }

    proptest! {
        #[test]
        fn recurrence_deciders_agree((p, q) in arb_word()) {
            let g = Graph::one_vertex(["a", "b", "c"]).unwrap();
            let w = PeriodicWord::new(&g, p.into_iter().map(Edge).collect(), q.into_iter().map(Edge).collect()).unwrap();
            let r = is_recurrent(&w);
            prop_assert_eq!(r.holds(), is_recurrent_uxuy(&w));
            prop_assert_eq!(r.holds(), brute_recurrent(&w));
            prop_assert_eq!(r.holds(), w.preperiod().is_empty());
            if let Recurrence::NotRecurrent { prefix } = r {
                let text = w.window(50 * decision_window(&w));
                let n = prefix.len();
                prop_assert!((1..=text.len() - n).all(|m| text[m..m + n] != text[..n]));
                // every shorter prefix does reoccur
                for k in 1..n {
                    prop_assert!((1..=text.len() - k).any(|m| text[m..m + k] == text[..k]));
                }
            }
        }

        #[test]
        fn cycle_is_exact((p, q) in arb_word()) {
            let g = Graph::one_vertex(["a", "b", "c"]).unwrap();
            let w = PeriodicWord::new(&g, p.into_iter().map(Edge).collect(), q.into_iter().map(Edge).collect()).unwrap();
            let k = truncation(&["a", "b", "c"], 3);
            let lab = by_name(&g, &k);
            let r = recurring_images(&w, &g, &k, &lab).unwrap();
            // images over a long stretch past the cycle start
            let mut seen: Vec<Edge> = Vec::new();
            let mut v = lab.edge(w.at(0));
            for n in 1..r.cycle_start + 10 * r.cycle_len + 40 {
                if n >= r.cycle_start + 5 * r.cycle_len + 20 {
                    seen.push(v);
                }
                v = k.mul(v, lab.edge(w.at(n))).unwrap();
            }
            seen.sort();
            seen.dedup();
            prop_assert_eq!(seen, r.images);
        }
    }
}
