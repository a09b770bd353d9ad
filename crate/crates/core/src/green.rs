//! Green's relations, idempotents, ω-powers and kernels.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::bitset::BitMatrix;
use crate::error::{Error, Result};
use crate::graph::Edge;
use crate::semigroupoid::FiniteSemigroupoid;

/// Green's preorders and the R-, L-, J- and H-partitions of `E(S)`.
///
/// `x ≤_R y` iff `x ∈ y·S^I`; since `yS·S ⊆ yS` this needs one step of right
/// multiplication. J-classes are strongly connected components of the graph
/// joining `x` to every `x·t` and `s·x`.
#[derive(Clone, Debug)]
pub struct GreenStructure {
    r_le: BitMatrix,
    l_le: BitMatrix,
    r_of: Vec<usize>,
    l_of: Vec<usize>,
    j_of: Vec<usize>,
    h_of: Vec<usize>,
    r_classes: Vec<Vec<Edge>>,
    l_classes: Vec<Vec<Edge>>,
    j_classes: Vec<Vec<Edge>>,
    h_classes: Vec<Vec<Edge>>,
    idempotent: Vec<bool>,
}

fn classes_from_keys<K: Ord>(n: usize, key: impl Fn(usize) -> K) -> (Vec<usize>, Vec<Vec<Edge>>) {
    // classes ordered by their least member
    let mut first: BTreeMap<K, usize> = BTreeMap::new();
    let mut of = vec![0; n];
    let mut classes: Vec<Vec<Edge>> = Vec::new();
    for x in 0..n {
        let id = *first.entry(key(x)).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        of[x] = id;
        classes[id].push(Edge(x as u32));
    }
    (of, classes)
}

fn symmetric_classes(le: &BitMatrix) -> (Vec<usize>, Vec<Vec<Edge>>) {
    let n = le.len();
    let mut rep = vec![usize::MAX; n];
    for x in 0..n {
        if rep[x] != usize::MAX {
            continue;
        }
        for y in x..n {
            if le.get(x, y) && le.get(y, x) {
                rep[y] = x;
            }
        }
    }
    classes_from_keys(n, |x| rep[x])
}

/// Iterative Tarjan over the two-sided Cayley graph; returns a component
/// representative per element.
fn two_sided_components(s: &FiniteSemigroupoid) -> Vec<usize> {
    let n = s.edge_count();
    let neighbor = |x: Edge, k: usize| -> Option<Edge> {
        let r = s.right_factors(x);
        if k < r.len() {
            return Some(s.mul_composable(x, r[k]));
        }
        let l = s.left_factors(x);
        l.get(k - r.len()).map(|&y| s.mul_composable(y, x))
    };
    const UNVISITED: usize = usize::MAX;
    let mut index = vec![UNVISITED; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comp = vec![UNVISITED; n];
    let mut counter = 0;
    for root in 0..n {
        if index[root] != UNVISITED {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut k)) = call.last_mut() {
            if let Some(w) = neighbor(Edge(v as u32), *k) {
                *k += 1;
                let w = w.index();
                if index[w] == UNVISITED {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut members = Vec::new();
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        members.push(w);
                        if w == v {
                            break;
                        }
                    }
                    let rep = *members.iter().min().unwrap();
                    for w in members {
                        comp[w] = rep;
                    }
                }
            }
        }
    }
    comp
}

pub fn green_structure(s: &FiniteSemigroupoid) -> GreenStructure {
    let n = s.edge_count();
    let mut r_le = BitMatrix::new(n);
    let mut l_le = BitMatrix::new(n);
    for y in s.edges() {
        r_le.set(y.index(), y.index());
        l_le.set(y.index(), y.index());
        for &t in s.right_factors(y) {
            r_le.set(s.mul_composable(y, t).index(), y.index());
        }
        for &t in s.left_factors(y) {
            l_le.set(s.mul_composable(t, y).index(), y.index());
        }
    }
    let (r_of, r_classes) = symmetric_classes(&r_le);
    let (l_of, l_classes) = symmetric_classes(&l_le);
    let comp = two_sided_components(s);
    let (j_of, j_classes) = classes_from_keys(n, |x| comp[x]);
    let (h_of, h_classes) = classes_from_keys(n, |x| (r_of[x], l_of[x]));
    let idempotent = s.edges().map(|e| s.is_idempotent(e)).collect();
    GreenStructure {
        r_le,
        l_le,
        r_of,
        l_of,
        j_of,
        h_of,
        r_classes,
        l_classes,
        j_classes,
        h_classes,
        idempotent,
    }
}

impl GreenStructure {
    /// `x ≤_R y`.
    pub fn r_le(&self, x: Edge, y: Edge) -> bool {
        self.r_le.get(x.index(), y.index())
    }

    /// `x ≤_L y`.
    pub fn l_le(&self, x: Edge, y: Edge) -> bool {
        self.l_le.get(x.index(), y.index())
    }

    pub fn r_classes(&self) -> &[Vec<Edge>] {
        &self.r_classes
    }

    pub fn l_classes(&self) -> &[Vec<Edge>] {
        &self.l_classes
    }

    pub fn j_classes(&self) -> &[Vec<Edge>] {
        &self.j_classes
    }

    pub fn h_classes(&self) -> &[Vec<Edge>] {
        &self.h_classes
    }

    pub fn r_class_of(&self, x: Edge) -> usize {
        self.r_of[x.index()]
    }

    pub fn l_class_of(&self, x: Edge) -> usize {
        self.l_of[x.index()]
    }

    pub fn j_class_of(&self, x: Edge) -> usize {
        self.j_of[x.index()]
    }

    pub fn h_class_of(&self, x: Edge) -> usize {
        self.h_of[x.index()]
    }

    pub fn is_idempotent(&self, x: Edge) -> bool {
        self.idempotent[x.index()]
    }

    /// A J-class is regular iff it contains an idempotent.
    pub fn is_regular_class(&self, j: usize) -> bool {
        self.j_classes[j].iter().any(|&x| self.is_idempotent(x))
    }
}

/// Text eggbox diagram: one box per J-class, R-classes as rows, L-classes
/// as columns, idempotents starred.
pub fn render_eggbox(s: &FiniteSemigroupoid, gs: &GreenStructure) -> String {
    let mut out = String::new();
    for (j, class) in gs.j_classes().iter().enumerate() {
        let mut rows: Vec<usize> = class.iter().map(|&x| gs.r_class_of(x)).collect();
        rows.sort();
        rows.dedup();
        let mut cols: Vec<usize> = class.iter().map(|&x| gs.l_class_of(x)).collect();
        cols.sort();
        cols.dedup();
        let cell = |r: usize, c: usize| -> String {
            let mut items = Vec::new();
            for &x in class {
                if gs.r_class_of(x) == r && gs.l_class_of(x) == c {
                    let mut name = s.name(x).to_string();
                    if gs.is_idempotent(x) {
                        name.push('*');
                    }
                    items.push(name);
                }
            }
            items.join(" ")
        };
        let cells: Vec<Vec<String>> = rows
            .iter()
            .map(|&r| cols.iter().map(|&c| cell(r, c)).collect())
            .collect();
        let widths: Vec<usize> = (0..cols.len())
            .map(|c| cells.iter().map(|row| row[c].chars().count()).max().unwrap_or(0))
            .collect();
        let _ = writeln!(
            out,
            "J-class {} ({} element{}, {})",
            j + 1,
            class.len(),
            if class.len() == 1 { "" } else { "s" },
            if gs.is_regular_class(j) { "regular" } else { "null" }
        );
        for row in &cells {
            out.push_str("  |");
            for (c, text) in row.iter().enumerate() {
                let pad = widths[c] - text.chars().count();
                let _ = write!(out, " {text}{} |", " ".repeat(pad));
            }
            out.push('\n');
        }
    }
    out
}

pub fn idempotents(s: &FiniteSemigroupoid) -> Vec<Edge> {
    s.edges().filter(|&e| s.is_idempotent(e)).collect()
}

/// The idempotent power of a loop `x`.
///
/// Powers `x, x², …` are generated until the first repeat `x^k = x^m`
/// (`m < k`); the idempotent is `x^i` for the multiple `i` of `k − m` in
/// `[m, k)`.
pub fn omega_power(s: &FiniteSemigroupoid, x: Edge) -> Result<Edge> {
    if !s.graph().is_loop(x) {
        return Err(Error::NotALoop(s.name(x).to_string()));
    }
    let mut seen = vec![0usize; s.edge_count()];
    let mut powers = vec![x];
    seen[x.index()] = 1;
    loop {
        let next = s.mul_composable(*powers.last().unwrap(), x);
        let k = powers.len() + 1;
        if seen[next.index()] != 0 {
            let m = seen[next.index()];
            let period = k - m;
            let i = m.div_ceil(period) * period;
            return Ok(powers[i - 1]);
        }
        seen[next.index()] = k;
        powers.push(next);
    }
}

/// Minimum ideal of a nonempty finite semigroup.
///
/// The product `m` of all elements lies in the minimum ideal, which is then
/// the principal ideal `S^I m S^I`.
pub fn kernel(s: &FiniteSemigroupoid) -> Result<Option<Vec<Edge>>> {
    s.require_semigroup()?;
    let elems: Vec<Edge> = s.edges().collect();
    let Some(m) = s.product(&elems) else {
        return Ok(None);
    };
    let mut member = vec![false; s.edge_count()];
    member[m.index()] = true;
    for t in s.edges() {
        member[s.mul_composable(m, t).index()] = true;
    }
    let right: Vec<Edge> = s.edges().filter(|e| member[e.index()]).collect();
    for u in s.edges() {
        for &r in &right {
            member[s.mul_composable(u, r).index()] = true;
        }
    }
    Ok(Some(s.edges().filter(|e| member[e.index()]).collect()))
}

/// True iff every `x, y` in `subset` compose with `x·y = x`.
pub fn is_left_zero_semigroup(s: &FiniteSemigroupoid, subset: &[Edge]) -> Result<bool> {
    s.check_closed(subset)?;
    Ok(subset
        .iter()
        .all(|&x| subset.iter().all(|&y| s.mul(x, y) == Some(x))))
}

/// True iff `x = x·t·x` for some `t` in `subset`.
pub fn is_regular_in(s: &FiniteSemigroupoid, subset: &[Edge], x: Edge) -> Result<bool> {
    s.check_closed(subset)?;
    if !subset.contains(&x) {
        return Err(Error::NotClosed(alloc::format!("`{}` is not in the subset", s.name(x))));
    }
    Ok(subset
        .iter()
        .any(|&t| s.mul(x, t).and_then(|xt| s.mul(xt, x)) == Some(x)))
}
