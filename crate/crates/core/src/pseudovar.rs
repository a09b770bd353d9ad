//! Membership tests for finite semigroups in named pseudovarieties, and the
//! equidivisibility decision for finite semigroupoids.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Edge;
use crate::green::{green_structure, omega_power};
use crate::semigroupoid::{adjoin_identities, FiniteSemigroupoid};

/// Largest semigroupoid accepted by [`is_equidivisible`].
pub const EQUIDIVISIBILITY_CAP: usize = 200;

/// Pseudovarieties of finite semigroups with a decidable membership test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pseudovariety {
    /// Semilattices.
    Sl,
    /// Nilpotent semigroups.
    N,
    /// Idempotents are left zeros.
    K,
    /// Idempotents are right zeros.
    D,
    /// Products of `n` factors are left zeros.
    Kn(usize),
    /// Locally trivial: `eSe = {e}`.
    LI,
    /// Local monoids `eSe` are semilattices.
    LSl,
    /// Aperiodic semigroups.
    A,
    /// Completely simple semigroups.
    CS,
}

impl Pseudovariety {
    /// The fixed-name pseudovarieties, in display order.
    pub const ALL: [Pseudovariety; 8] = [
        Pseudovariety::Sl,
        Pseudovariety::N,
        Pseudovariety::K,
        Pseudovariety::D,
        Pseudovariety::LI,
        Pseudovariety::LSl,
        Pseudovariety::A,
        Pseudovariety::CS,
    ];

    /// Membership of a one-vertex semigroupoid.
    pub fn contains(self, s: &FiniteSemigroupoid) -> Result<bool> {
        match self {
            Pseudovariety::Sl => is_sl(s),
            Pseudovariety::N => is_n(s),
            Pseudovariety::K => is_k(s),
            Pseudovariety::D => is_d(s),
            Pseudovariety::Kn(n) => is_kn(s, n),
            Pseudovariety::LI => is_li(s),
            Pseudovariety::LSl => is_lsl(s),
            Pseudovariety::A => is_a(s),
            Pseudovariety::CS => is_cs(s),
        }
    }
}

impl fmt::Display for Pseudovariety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pseudovariety::Sl => f.write_str("Sl"),
            Pseudovariety::N => f.write_str("N"),
            Pseudovariety::K => f.write_str("K"),
            Pseudovariety::D => f.write_str("D"),
            Pseudovariety::Kn(n) => write!(f, "K{n}"),
            Pseudovariety::LI => f.write_str("LI"),
            Pseudovariety::LSl => f.write_str("LSl"),
            Pseudovariety::A => f.write_str("A"),
            Pseudovariety::CS => f.write_str("CS"),
        }
    }
}

/// Error from parsing a pseudovariety name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownPseudovariety(pub String);

impl fmt::Display for UnknownPseudovariety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown pseudovariety `{}` (expected Sl, N, K, D, K<n>, LI, LSl, A or CS)",
            self.0
        )
    }
}

impl FromStr for Pseudovariety {
    type Err = UnknownPseudovariety;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        Ok(match s {
            "Sl" => Pseudovariety::Sl,
            "N" => Pseudovariety::N,
            "K" => Pseudovariety::K,
            "D" => Pseudovariety::D,
            "LI" => Pseudovariety::LI,
            "LSl" => Pseudovariety::LSl,
            "A" => Pseudovariety::A,
            "CS" => Pseudovariety::CS,
            _ => match s.strip_prefix('K').map(str::parse::<usize>) {
                Some(Ok(n)) if n > 0 => Pseudovariety::Kn(n),
                _ => return Err(UnknownPseudovariety(s.to_string())),
            },
        })
    }
}

fn all_pairs(s: &FiniteSemigroupoid, mut f: impl FnMut(Edge, Edge) -> bool) -> bool {
    s.edges().all(|x| s.edges().all(|y| f(x, y)))
}

pub fn is_sl(s: &FiniteSemigroupoid) -> Result<bool> {
    s.require_semigroup()?;
    Ok(s.edges().all(|x| s.is_idempotent(x))
        && all_pairs(s, |x, y| s.mul_composable(x, y) == s.mul_composable(y, x)))
}

/// `S^k` as a set, for `k = 1, 2, …` until it stabilizes.
fn power_sets(s: &FiniteSemigroupoid, k: usize) -> Vec<Edge> {
    let mut cur: Vec<Edge> = s.edges().collect();
    for _ in 1..k {
        let mut next = vec![false; s.edge_count()];
        for &x in &cur {
            for y in s.edges() {
                next[s.mul_composable(x, y).index()] = true;
            }
        }
        let next: Vec<Edge> = s.edges().filter(|e| next[e.index()]).collect();
        if next == cur {
            break;
        }
        cur = next;
    }
    cur
}

/// Nilpotent: `S^{|S|}` is a single zero.
pub fn is_n(s: &FiniteSemigroupoid) -> Result<bool> {
    s.require_semigroup()?;
    if s.edge_count() == 0 {
        return Ok(true);
    }
    let top = power_sets(s, s.edge_count());
    Ok(top.len() == 1 && s.edges().all(|y| s.mul_composable(top[0], y) == top[0] && s.mul_composable(y, top[0]) == top[0]))
}

pub fn is_kn(s: &FiniteSemigroupoid, n: usize) -> Result<bool> {
    s.require_semigroup()?;
    let prods = power_sets(s, n.max(1));
    Ok(prods.iter().all(|&x| s.edges().all(|y| s.mul_composable(x, y) == x)))
}

pub fn is_k(s: &FiniteSemigroupoid) -> Result<bool> {
    s.require_semigroup()?;
    Ok(s.edges()
        .filter(|&e| s.is_idempotent(e))
        .all(|e| s.edges().all(|y| s.mul_composable(e, y) == e)))
}

pub fn is_d(s: &FiniteSemigroupoid) -> Result<bool> {
    s.require_semigroup()?;
    Ok(s.edges()
        .filter(|&e| s.is_idempotent(e))
        .all(|e| s.edges().all(|y| s.mul_composable(y, e) == e)))
}

/// The local monoid `eSe` of an idempotent.
fn local_monoid(s: &FiniteSemigroupoid, e: Edge) -> Vec<Edge> {
    let set: BTreeSet<Edge> = s
        .edges()
        .map(|y| s.mul_composable(s.mul_composable(e, y), e))
        .collect();
    set.into_iter().collect()
}

pub fn is_li(s: &FiniteSemigroupoid) -> Result<bool> {
    s.require_semigroup()?;
    Ok(s.edges()
        .filter(|&e| s.is_idempotent(e))
        .all(|e| local_monoid(s, e) == [e]))
}

pub fn is_lsl(s: &FiniteSemigroupoid) -> Result<bool> {
    s.require_semigroup()?;
    for e in s.edges().filter(|&e| s.is_idempotent(e)) {
        let (m, _) = s.restrict(&local_monoid(s, e))?;
        if !is_sl(&m)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Aperiodic: `x^ω = x^ω·x` for every `x`.
pub fn is_a(s: &FiniteSemigroupoid) -> Result<bool> {
    s.require_semigroup()?;
    for x in s.edges() {
        let e = omega_power(s, x)?;
        if s.mul_composable(e, x) != e {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Completely simple: a single J-class, which is regular.
pub fn is_cs(s: &FiniteSemigroupoid) -> Result<bool> {
    s.require_semigroup()?;
    if s.edge_count() == 0 {
        return Err(Error::EmptySemigroup);
    }
    let gs = green_structure(s);
    Ok(gs.j_classes().len() == 1 && gs.is_regular_class(0))
}

/// True iff every nonempty local semigroup `S(v)` passes `pred`.
pub fn is_local(
    s: &FiniteSemigroupoid,
    mut pred: impl FnMut(&FiniteSemigroupoid) -> Result<bool>,
) -> Result<bool> {
    for v in s.graph().vertices() {
        let local = s.local_semigroup(v);
        if local.edge_count() > 0 && !pred(&local)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Outcome of [`is_equidivisible`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Equidivisibility {
    Equidivisible,
    /// `u·v = x·y` and no `t ∈ S^I` has `ut = x, v = ty` or `xt = u, y = tv`.
    Fails { u: Edge, v: Edge, x: Edge, y: Edge },
}

impl Equidivisibility {
    pub fn holds(&self) -> bool {
        matches!(self, Equidivisibility::Equidivisible)
    }
}

/// Decides equidivisibility by scanning all pairs of factorizations.
///
/// The reported counterexample is the lexicographically least quadruple
/// `(u, v, x, y)` of edge indices.
pub fn is_equidivisible(s: &FiniteSemigroupoid) -> Result<Equidivisibility> {
    let n = s.edge_count();
    if n > EQUIDIVISIBILITY_CAP {
        return Err(Error::TooLarge {
            what: "semigroupoid for the equidivisibility scan",
            size: n as u128,
            cap: EQUIDIVISIBILITY_CAP as u128,
        });
    }
    let si = adjoin_identities(s);
    // S is a prefix of S^I: same names, and adjoined identities sort apart
    let lift: Vec<Edge> = s.edges().map(|e| si.element(s.name(e)).unwrap()).collect();
    let down = {
        let mut d = vec![None; si.edge_count()];
        for (i, &e) in lift.iter().enumerate() {
            d[e.index()] = Some(Edge(i as u32));
        }
        d
    };
    // ut = x, with t ranging over S^I
    let mut solutions: Vec<Vec<Edge>> = vec![Vec::new(); n * n];
    for u in s.edges() {
        let ui = lift[u.index()];
        for &t in si.right_factors(ui) {
            if let Some(x) = down[si.mul_composable(ui, t).index()] {
                solutions[u.index() * n + x.index()].push(t);
            }
        }
    }
    let mut by_product: Vec<Vec<(Edge, Edge)>> = vec![Vec::new(); n];
    for x in s.edges() {
        for &y in s.right_factors(x) {
            by_product[s.mul_composable(x, y).index()].push((x, y));
        }
    }
    let witnessed = |u: Edge, v: Edge, x: Edge, y: Edge| {
        solutions[u.index() * n + x.index()]
            .iter()
            .any(|&t| si.mul(t, lift[y.index()]) == Some(lift[v.index()]))
    };
    for u in s.edges() {
        for &v in s.right_factors(u) {
            for &(x, y) in &by_product[s.mul_composable(u, v).index()] {
                if !witnessed(u, v, x, y) && !witnessed(x, y, u, v) {
                    return Ok(Equidivisibility::Fails { u, v, x, y });
                }
            }
        }
    }
    Ok(Equidivisibility::Equidivisible)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;
    use crate::divisor::{is_divisor, Divisibility};
    use crate::green::kernel;
    use crate::graph::{EdgeSpec, GraphSpec};
    use crate::semigroupoid::SemigroupoidSpec;
    use alloc::collections::BTreeMap;

    fn syntactic_xpyp() -> FiniteSemigroupoid {
        // x⁺y⁺ over {x, y}: classes x, y, xy, 0 (yx and beyond)
        let names = ["0", "x", "xy", "y"];
        FiniteSemigroupoid::semigroup_from_elements(
            names.iter().map(|s| s.to_string()).collect(),
            |a, b| match (names[a], names[b]) {
                ("x", "x") => 1,
                ("x", "y") | ("x", "xy") => 2,
                ("xy", "y") => 2,
                ("y", "y") => 3,
                _ => 0,
            },
        )
        .unwrap()
    }

    #[test]
    fn parse_names() {
        for p in Pseudovariety::ALL {
            assert_eq!(p.to_string().parse::<Pseudovariety>().unwrap(), p);
        }
        assert_eq!("K3".parse::<Pseudovariety>().unwrap(), Pseudovariety::Kn(3));
        assert!("K0".parse::<Pseudovariety>().is_err());
        assert!("G".parse::<Pseudovariety>().is_err());
    }

    #[test]
    fn sl_examples() {
        assert!(is_sl(&u1()).unwrap());
        assert!(!is_sl(&brandt(2)).unwrap());
        assert!(!is_sl(&left_zero(2)).unwrap());
        assert!(matches!(is_sl(&indiscrete(2)), Err(Error::NotASemigroup(_))));
    }

    #[test]
    fn n_examples() {
        assert!(is_n(&null_semigroup(3)).unwrap());
        assert!(!is_n(&truncation(&["a", "b"], 2)).unwrap());
        assert!(is_n(&cyclic_group(1)).unwrap());
        assert!(!is_n(&brandt(2)).unwrap());
    }

    #[test]
    fn k_d_examples() {
        let k2 = truncation(&["a", "b"], 2);
        assert!(is_kn(&k2, 2).unwrap());
        assert!(!is_kn(&k2, 1).unwrap());
        assert!(is_k(&k2).unwrap());
        assert!(!is_k(&brandt(2)).unwrap());
        assert!(is_d(&cotruncation(&["a"], 2)).unwrap());
        assert!(is_d(&cotruncation(&["a", "b"], 2)).unwrap());
        assert!(!is_k(&cotruncation(&["a", "b"], 2)).unwrap());
    }

    #[test]
    fn li_lsl_examples() {
        assert!(is_li(&null_semigroup(3)).unwrap());
        assert!(!is_li(&brandt(2)).unwrap());
        assert!(is_lsl(&syntactic_xpyp()).unwrap());
        assert!(!is_li(&syntactic_xpyp()).unwrap());
        assert!(!is_lsl(&cyclic_group(2)).unwrap());
    }

    #[test]
    fn a_cs_examples() {
        assert!(is_a(&brandt(2)).unwrap());
        assert!(!is_a(&cyclic_group(2)).unwrap());
        assert!(is_a(&left_zero(3)).unwrap());
        assert!(is_a(&rectangular_band(2, 3)).unwrap());
        assert!(is_cs(&rectangular_band(2, 3)).unwrap());
        assert!(is_cs(&symmetric_group_3()).unwrap());
        assert!(!is_cs(&brandt(2)).unwrap());
        let empty = FiniteSemigroupoid::semigroup_from_elements(Vec::new(), |_, _| 0).unwrap();
        assert!(matches!(is_cs(&empty), Err(Error::EmptySemigroup)));
    }

    #[test]
    fn local_examples() {
        let b2 = brandt(2);
        assert_eq!(is_local(&b2, is_a).unwrap(), is_a(&b2).unwrap());
        assert_eq!(is_local(&b2, is_sl).unwrap(), is_sl(&b2).unwrap());
        let free = FiniteSemigroupoid::from_fn(
            crate::graph::Graph::new(GraphSpec {
                vertices: vec!["1".into(), "2".into()],
                edges: vec![EdgeSpec::new("e", "1", "2")],
            })
            .unwrap(),
            |_, _| unreachable!(),
        )
        .unwrap();
        assert!(is_local(&free, is_cs).unwrap());

        // two copies of U1, one per vertex, joined by an edge absorbing the loops
        let mut mul = BTreeMap::new();
        for (a, b, c) in [
            ("1", "1", "1"), ("1", "0", "0"), ("0", "1", "0"), ("0", "0", "0"),
            ("1'", "1'", "1'"), ("1'", "0'", "0'"), ("0'", "1'", "0'"), ("0'", "0'", "0'"),
            ("e", "1", "e"), ("e", "0", "e"), ("1'", "e", "e"), ("0'", "e", "e"),
        ] {
            mul.insert((a.to_string(), b.to_string()), c.to_string());
        }
        let spec = SemigroupoidSpec {
            graph: GraphSpec {
                vertices: vec!["p".into(), "q".into()],
                edges: vec![
                    EdgeSpec::new("0", "p", "p"),
                    EdgeSpec::new("1", "p", "p"),
                    EdgeSpec::new("0'", "q", "q"),
                    EdgeSpec::new("1'", "q", "q"),
                    EdgeSpec::new("e", "p", "q"),
                ],
            },
            mul,
            identities: Vec::new(),
        };
        let s = FiniteSemigroupoid::from_spec(&spec).unwrap();
        assert!(is_local(&s, is_sl).unwrap());
    }

    #[test]
    fn equidivisibility_examples() {
        for g in [cyclic_group(3), klein_group(), symmetric_group_3()] {
            assert!(is_equidivisible(&g).unwrap().holds());
        }
        for entry in catalog() {
            let s = &entry.semigroupoid;
            if s.is_semigroup() && s.edge_count() > 0 && is_cs(s).unwrap() {
                assert!(is_equidivisible(s).unwrap().holds(), "{}", entry.name);
            }
        }
        let b2 = brandt(2);
        let Equidivisibility::Fails { u, v, x, y } = is_equidivisible(&b2).unwrap() else {
            panic!("B2 is not equidivisible");
        };
        assert_eq!(b2.mul(u, v), b2.mul(x, y));
        let names = [u, v, x, y].map(|e| b2.name(e).to_string());
        assert_eq!(names, ["(1,1)", "(2,1)", "(1,1)", "(2,2)"]);
        assert!(!is_equidivisible(&with_zero(&right_zero(2))).unwrap().holds());
        // a·a = aa·b, and no t gives a·t = aa with a = t·b
        assert!(!is_equidivisible(&truncation(&["a", "b"], 2)).unwrap().holds());
    }

    #[test]
    fn equidivisibility_refuses_large_inputs() {
        let big = cyclic_group(EQUIDIVISIBILITY_CAP + 1);
        assert!(matches!(is_equidivisible(&big), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn catalog_containments() {
        for entry in catalog() {
            let s = &entry.semigroupoid;
            if !s.is_semigroup() {
                continue;
            }
            let n = is_n(s).unwrap();
            let k = is_k(s).unwrap();
            let a = is_a(s).unwrap();
            assert!(!n || k, "N ⊆ K fails on {}", entry.name);
            assert!(!k || a, "K ⊆ A fails on {}", entry.name);
            if is_li(s).unwrap() {
                for e in s.edges().filter(|&e| s.is_idempotent(e)) {
                    for y in s.edges() {
                        assert_eq!(s.product(&[e, y, e]), Some(e));
                    }
                }
            }
            for m in 1..=4 {
                if is_kn(s, m).unwrap() {
                    assert!(k, "K{m} ⊆ K fails on {}", entry.name);
                }
            }
        }
    }

    #[test]
    fn aperiodic_iff_h_trivial() {
        for entry in catalog().into_iter().filter(|e| e.semigroupoid.is_semigroup()) {
            let s = &entry.semigroupoid;
            let gs = green_structure(s);
            let h_trivial = gs.h_classes().iter().all(|h| h.len() == 1);
            assert_eq!(is_a(s).unwrap(), h_trivial, "{}", entry.name);
        }
    }

    #[test]
    fn cs_iff_kernel_is_everything() {
        for entry in catalog().into_iter().filter(|e| e.semigroupoid.is_semigroup()) {
            let s = &entry.semigroupoid;
            let k = kernel(s).unwrap().unwrap();
            assert_eq!(is_cs(s).unwrap(), k.len() == s.edge_count(), "{}", entry.name);
        }
    }

    #[test]
    fn divisor_closure_sampled() {
        let preds: [Pseudovariety; 9] = [
            Pseudovariety::Sl,
            Pseudovariety::N,
            Pseudovariety::K,
            Pseudovariety::D,
            Pseudovariety::Kn(2),
            Pseudovariety::LI,
            Pseudovariety::LSl,
            Pseudovariety::A,
            Pseudovariety::CS,
        ];
        let sgps: Vec<_> = catalog()
            .into_iter()
            .filter(|e| e.semigroupoid.is_semigroup() && e.semigroupoid.edge_count() <= 10)
            .collect();
        let mut verified = 0;
        for big in &sgps {
            for small in &sgps {
                if small.semigroupoid.edge_count() > big.semigroupoid.edge_count() {
                    continue;
                }
                if is_divisor(&small.semigroupoid, &big.semigroupoid, 200_000).unwrap()
                    != Divisibility::Divides
                {
                    continue;
                }
                verified += 1;
                for p in preds {
                    if p.contains(&big.semigroupoid).unwrap() {
                        assert!(
                            p.contains(&small.semigroupoid).unwrap(),
                            "{p} not closed: {} divides {}",
                            small.name,
                            big.name
                        );
                    }
                }
            }
        }
        assert!(verified > 30);
    }
}
