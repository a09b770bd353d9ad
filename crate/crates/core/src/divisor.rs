//! Division of finite semigroups: `T` divides `S` when `T` is a homomorphic
//! image of a subsemigroup of `S`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Result;
use crate::graph::Edge;
use crate::semigroupoid::{generate_subsemigroupoid, FiniteSemigroupoid};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Divisibility {
    Divides,
    DoesNotDivide,
    /// The search budget ran out.
    Inconclusive,
}

/// A small generating set: greedy, then pruned of redundant members.
fn generating_set(t: &FiniteSemigroupoid) -> Vec<Edge> {
    let mut gens: Vec<Edge> = Vec::new();
    let mut covered = vec![false; t.edge_count()];
    // elements with few factorizations first: they are usually required
    let mut order: Vec<Edge> = t.edges().collect();
    let mut hits = vec![0usize; t.edge_count()];
    for x in t.edges() {
        for y in t.edges() {
            hits[t.mul_composable(x, y).index()] += 1;
        }
    }
    order.sort_by_key(|e| (hits[e.index()], e.index()));
    for e in order {
        if !covered[e.index()] {
            gens.push(e);
            for g in generate_subsemigroupoid(t, &gens).expect("nonempty") {
                covered[g.index()] = true;
            }
        }
    }
    let mut i = 0;
    while i < gens.len() {
        let mut rest = gens.clone();
        rest.remove(i);
        if !rest.is_empty() && generate_subsemigroupoid(t, &rest).expect("nonempty").len() == t.edge_count() {
            gens = rest;
        } else {
            i += 1;
        }
    }
    gens
}

struct Search<'a> {
    t: &'a FiniteSemigroupoid,
    s: &'a FiniteSemigroupoid,
    gens: Vec<Edge>,
    budget: u64,
    spent: u64,
}

impl Search<'_> {
    /// Whether sending `gens[i] ↦ images[i]` extends to a homomorphism from
    /// `⟨images⟩` onto `⟨gens⟩`. `None` when the budget is exhausted.
    fn consistent(&mut self, images: &[Edge]) -> Option<bool> {
        let k = images.len();
        let mut psi: Vec<Option<Edge>> = vec![None; self.s.edge_count()];
        let mut queue = Vec::new();
        for i in 0..k {
            match psi[images[i].index()] {
                Some(g) if g != self.gens[i] => return Some(false),
                Some(_) => {}
                None => {
                    psi[images[i].index()] = Some(self.gens[i]);
                    queue.push(images[i]);
                }
            }
        }
        let mut head = 0;
        while head < queue.len() {
            let a = queue[head];
            head += 1;
            let pa = psi[a.index()].unwrap();
            for i in 0..k {
                self.spent += 1;
                if self.spent > self.budget {
                    return None;
                }
                let b = self.s.mul_composable(a, images[i]);
                let pb = self.t.mul_composable(pa, self.gens[i]);
                match psi[b.index()] {
                    Some(x) if x != pb => return Some(false),
                    Some(_) => {}
                    None => {
                        psi[b.index()] = Some(pb);
                        queue.push(b);
                    }
                }
            }
        }
        Some(true)
    }

    fn run(&mut self, images: &mut Vec<Edge>) -> Option<bool> {
        if images.len() == self.gens.len() {
            return Some(true);
        }
        for c in self.s.edges() {
            images.push(c);
            let ok = self.consistent(images)?;
            if ok && self.run(images)? {
                return Some(true);
            }
            images.pop();
        }
        Some(false)
    }
}

/// Decides whether the semigroup `t` divides the semigroup `s` by searching
/// for preimages of a generating set of `t` whose generated subsemigroup maps
/// homomorphically onto `t`.
///
/// `budget` bounds the number of products evaluated.
pub fn is_divisor(t: &FiniteSemigroupoid, s: &FiniteSemigroupoid, budget: u64) -> Result<Divisibility> {
    t.require_semigroup()?;
    s.require_semigroup()?;
    if t.edge_count() == 0 {
        return Ok(Divisibility::Divides);
    }
    if s.edge_count() == 0 {
        return Ok(Divisibility::DoesNotDivide);
    }
    let mut search = Search {
        t,
        s,
        gens: generating_set(t),
        budget,
        spent: 0,
    };
    Ok(match search.run(&mut Vec::new()) {
        Some(true) => Divisibility::Divides,
        Some(false) => Divisibility::DoesNotDivide,
        None => Divisibility::Inconclusive,
    })
}
