//! Named finite semigroups and semigroupoids: Brandt semigroups, truncation
//! semigroups, the composability homomorphism into `B_Q`, and a catalog of
//! small test structures.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Edge, EdgeSpec, Graph, GraphMorphism, GraphSpec, Vertex};
use crate::semigroupoid::{direct_product, FiniteSemigroupoid};

fn build(names: Vec<String>, mul: impl Fn(usize, usize) -> usize) -> FiniteSemigroupoid {
    FiniteSemigroupoid::semigroup_from_elements(names, mul).expect("catalog constructions are valid")
}

/// Aperiodic Brandt semigroup `B_Q` over the given index set: elements
/// `(p,q)` and `0`, with `(p,r)(r,q) = (p,q)` and every other product `0`.
pub fn brandt_on<S: AsRef<str>>(q: &[S]) -> FiniteSemigroupoid {
    let n = q.len();
    let mut names = Vec::with_capacity(n * n + 1);
    for p in q {
        for r in q {
            names.push(alloc::format!("({},{})", p.as_ref(), r.as_ref()));
        }
    }
    names.push("0".to_string());
    let zero = n * n;
    build(names, |x, y| {
        if x == zero || y == zero {
            return zero;
        }
        let (p, r) = (x / n, x % n);
        let (s, q) = (y / n, y % n);
        if r == s {
            p * n + q
        } else {
            zero
        }
    })
}

/// `B_n` over `Q = {1, …, n}`.
pub fn brandt(n: usize) -> FiniteSemigroupoid {
    let q: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    brandt_on(&q)
}

fn join_letters<S: AsRef<str>>(alphabet: &[S], word: &[usize]) -> String {
    let single = alphabet.iter().all(|a| a.as_ref().chars().count() == 1);
    let mut s = String::new();
    for (i, &l) in word.iter().enumerate() {
        if i > 0 && !single {
            s.push('.');
        }
        s.push_str(alphabet[l].as_ref());
    }
    s
}

fn words_up_to(k: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(layer.len() * k);
        for w in &layer {
            for a in 0..k {
                let mut v = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn truncated<S: AsRef<str>>(alphabet: &[S], n: usize, keep_prefix: bool) -> FiniteSemigroupoid {
    assert!(!alphabet.is_empty() && n >= 1);
    let words = words_up_to(alphabet.len(), n);
    let index = |w: &[usize]| words.iter().position(|v| v == w).unwrap();
    let names = words.iter().map(|w| join_letters(alphabet, w)).collect();
    let mut table = vec![0; words.len() * words.len()];
    for (i, u) in words.iter().enumerate() {
        for (j, v) in words.iter().enumerate() {
            let mut uv = u.clone();
            uv.extend_from_slice(v);
            let cut = if uv.len() <= n {
                &uv[..]
            } else if keep_prefix {
                &uv[..n]
            } else {
                &uv[uv.len() - n..]
            };
            table[i * words.len() + j] = index(cut);
        }
    }
    let m = words.len();
    build(names, |x, y| table[x * m + y])
}

/// Truncation semigroup `Ω_C K_n`: nonempty words of length at most `n`,
/// multiplied by concatenating and keeping the length-`n` prefix.
pub fn truncation<S: AsRef<str>>(alphabet: &[S], n: usize) -> FiniteSemigroupoid {
    truncated(alphabet, n, true)
}

/// Dual of [`truncation`]: keeps the length-`n` suffix.
pub fn cotruncation<S: AsRef<str>>(alphabet: &[S], n: usize) -> FiniteSemigroupoid {
    truncated(alphabet, n, false)
}

fn numbered(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| alloc::format!("{prefix}{i}")).collect()
}

/// Left-zero semigroup: `xy = x`.
pub fn left_zero(n: usize) -> FiniteSemigroupoid {
    build(numbered("l", n), |x, _| x)
}

/// Right-zero semigroup: `xy = y`.
pub fn right_zero(n: usize) -> FiniteSemigroupoid {
    build(numbered("r", n), |_, y| y)
}

/// Null semigroup of size `n`: all products are `0`.
pub fn null_semigroup(n: usize) -> FiniteSemigroupoid {
    let mut names = vec!["0".to_string()];
    names.extend(numbered("z", n - 1));
    build(names, |_, _| 0)
}

/// Cyclic group `Z/n`, elements named by residue.
pub fn cyclic_group(n: usize) -> FiniteSemigroupoid {
    build((0..n).map(|i| i.to_string()).collect(), |x, y| (x + y) % n)
}

/// Klein four-group `Z/2 × Z/2`.
pub fn klein_group() -> FiniteSemigroupoid {
    build(
        ["00", "01", "10", "11"].iter().map(|s| s.to_string()).collect(),
        |x, y| x ^ y,
    )
}

/// Symmetric group on three points; elements in one-line notation, the
/// product `στ` applies `σ` first.
pub fn symmetric_group_3() -> FiniteSemigroupoid {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let names = perms
        .iter()
        .map(|p| p.iter().map(|&i| char::from(b'1' + i as u8)).collect())
        .collect();
    build(names, |x, y| {
        let c: [usize; 3] = core::array::from_fn(|i| perms[y][perms[x][i]]);
        perms.iter().position(|p| *p == c).unwrap()
    })
}

/// Rectangular band `I × J` with `(i,j)(k,l) = (i,l)`.
pub fn rectangular_band(rows: usize, cols: usize) -> FiniteSemigroupoid {
    let mut names = Vec::new();
    for i in 1..=rows {
        for j in 1..=cols {
            names.push(alloc::format!("({i},{j})"));
        }
    }
    build(names, |x, y| (x / cols) * cols + y % cols)
}

/// Two-element semilattice `U₁ = {0, 1}`.
pub fn u1() -> FiniteSemigroupoid {
    build(vec!["0".to_string(), "1".to_string()], |x, y| x.min(y))
}

/// `S` with a fresh zero `0` adjoined (the name gets primes if `0` is taken).
pub fn with_zero(s: &FiniteSemigroupoid) -> FiniteSemigroupoid {
    assert!(s.is_semigroup());
    let zero = crate::graph::fresh_name("0", |n| s.graph().edge(n).is_some());
    let mut names: Vec<String> = s.edges().map(|e| s.name(e).to_string()).collect();
    names.push(zero);
    let z = names.len() - 1;
    build(names, |x, y| {
        if x == z || y == z {
            z
        } else {
            s.mul_composable(Edge(x as u32), Edge(y as u32)).index()
        }
    })
}

/// Category on `n` vertices with exactly one edge `(y,x)` from every `x` to
/// every `y` (so every loop is a local identity).
pub fn indiscrete(n: usize) -> FiniteSemigroupoid {
    let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let mut edges = Vec::new();
    for y in &vertices {
        for x in &vertices {
            edges.push(EdgeSpec::new(alloc::format!("({y},{x})"), x.clone(), y.clone()));
        }
    }
    let g = Graph::new(GraphSpec { vertices, edges }).unwrap();
    let gg = g.clone();
    FiniteSemigroupoid::from_fn(g, move |s, t| {
        gg.hom(gg.src(t), gg.dst(s)).next().unwrap()
    })
    .expect("indiscrete category is valid")
}

/// `B_Q` for `Q = V(a)` together with the labeling `φ(e) = (dst(e), src(e))`.
///
/// A word over `E(a)` evaluates to a nonzero element exactly when it is a
/// composable path.
pub fn composability_hom(a: &Graph) -> (FiniteSemigroupoid, GraphMorphism) {
    let q: Vec<&str> = a.vertices().map(|v| a.vertex_id(v)).collect();
    let b = brandt_on(&q);
    let emap = a
        .edges()
        .map(|e| {
            b.element(&alloc::format!(
                "({},{})",
                a.vertex_id(a.dst(e)),
                a.vertex_id(a.src(e))
            ))
            .unwrap()
        })
        .collect();
    let label = GraphMorphism {
        vmap: vec![Vertex(0); a.vertex_count()],
        emap,
    };
    (b, label)
}

/// A named catalog member.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub semigroupoid: FiniteSemigroupoid,
}

/// The standard catalog of small semigroups and semigroupoids used by the
/// property suites. Order is fixed.
pub fn catalog() -> Vec<CatalogEntry> {
    let ab = ["a", "b"];
    let mut entries: Vec<(String, FiniteSemigroupoid)> = vec![
        ("trivial".into(), cyclic_group(1)),
        ("U1".into(), u1()),
        ("L2".into(), left_zero(2)),
        ("L3".into(), left_zero(3)),
        ("R2".into(), right_zero(2)),
        ("R3".into(), right_zero(3)),
        ("N2".into(), null_semigroup(2)),
        ("N3".into(), null_semigroup(3)),
        ("Z2".into(), cyclic_group(2)),
        ("Z3".into(), cyclic_group(3)),
        ("Z4".into(), cyclic_group(4)),
        ("Z2xZ2".into(), klein_group()),
        ("S3".into(), symmetric_group_3()),
        ("RB2x2".into(), rectangular_band(2, 2)),
        ("RB2x3".into(), rectangular_band(2, 3)),
        ("RB3x2".into(), rectangular_band(3, 2)),
        ("B2".into(), brandt(2)),
        ("B3".into(), brandt(3)),
        ("K2{a}".into(), truncation(&["a"], 2)),
        ("K3{a}".into(), truncation(&["a"], 3)),
        ("K2{a,b}".into(), truncation(&ab, 2)),
        ("D2{a}".into(), cotruncation(&["a"], 2)),
        ("D2{a,b}".into(), cotruncation(&ab, 2)),
        ("Z2^0".into(), with_zero(&cyclic_group(2))),
        ("R2^0".into(), with_zero(&right_zero(2))),
        ("U1xZ2".into(), direct_product(&u1(), &cyclic_group(2))),
        ("I2".into(), indiscrete(2)),
        ("I3".into(), indiscrete(3)),
    ];
    entries
        .drain(..)
        .map(|(name, semigroupoid)| CatalogEntry { name, semigroupoid })
        .collect()
}
