//! ω-terms and pseudoidentities checked on finite semigroupoids.
//!
//! Surface syntax: single letters are variables, juxtaposition is product,
//! a postfix `^w` (or `^ω`) is the ω-power, parentheses group.
//!
//! ```text
//! identity := term '=' term
//! term     := factor factor*
//! factor   := atom ('^w' | '^ω')*
//! atom     := letter | '(' term ')'
//! ```

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::constructions::catalog;
use crate::error::{Error, Result};
use crate::graph::Edge;
use crate::green::omega_power;
use crate::pseudovar::Pseudovariety;
use crate::semigroupoid::FiniteSemigroupoid;

/// Largest number of assignments enumerated by [`check_pseudoidentity`].
pub const ASSIGNMENT_CAP: u128 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OmegaTerm {
    Var(char),
    /// At least two factors, none of them a product.
    Product(Vec<OmegaTerm>),
    Omega(Box<OmegaTerm>),
}

impl OmegaTerm {
    pub fn var(c: char) -> OmegaTerm {
        OmegaTerm::Var(c)
    }

    pub fn omega(t: OmegaTerm) -> OmegaTerm {
        OmegaTerm::Omega(Box::new(t))
    }

    /// Flattening product.
    pub fn product(factors: impl IntoIterator<Item = OmegaTerm>) -> OmegaTerm {
        let mut out = Vec::new();
        for f in factors {
            match f {
                OmegaTerm::Product(inner) => out.extend(inner),
                other => out.push(other),
            }
        }
        if out.len() == 1 {
            out.pop().unwrap()
        } else {
            OmegaTerm::Product(out)
        }
    }

    /// Sorted, without repetition.
    pub fn variables(&self) -> Vec<char> {
        let mut set = BTreeSet::new();
        self.collect_vars(&mut set);
        set.into_iter().collect()
    }

    fn collect_vars(&self, set: &mut BTreeSet<char>) {
        match self {
            OmegaTerm::Var(c) => {
                set.insert(*c);
            }
            OmegaTerm::Product(fs) => fs.iter().for_each(|f| f.collect_vars(set)),
            OmegaTerm::Omega(t) => t.collect_vars(set),
        }
    }
}

impl fmt::Display for OmegaTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OmegaTerm::Var(c) => write!(f, "{c}"),
            OmegaTerm::Product(fs) => fs.iter().try_for_each(|t| write!(f, "{t}")),
            OmegaTerm::Omega(t) => match **t {
                OmegaTerm::Product(_) => write!(f, "({t})^w"),
                _ => write!(f, "{t}^w"),
            },
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn err(&self, msg: &'static str) -> Error {
        Error::TermSyntax { pos: self.pos, msg }
    }

    fn term(&mut self) -> Result<OmegaTerm> {
        let mut factors = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c == '(' || c.is_alphabetic() => factors.push(self.factor()?),
                _ => break,
            }
        }
        if factors.is_empty() {
            return Err(self.err("expected a variable or `(`"));
        }
        Ok(OmegaTerm::product(factors))
    }

    fn factor(&mut self) -> Result<OmegaTerm> {
        let mut t = self.atom()?;
        loop {
            self.skip_ws();
            if self.peek() != Some('^') {
                return Ok(t);
            }
            self.pos += 1;
            self.skip_ws();
            match self.peek() {
                Some(c @ ('w' | 'ω')) => {
                    self.pos += c.len_utf8();
                    t = OmegaTerm::omega(t);
                }
                _ => return Err(self.err("expected `w` after `^`")),
            }
        }
    }

    fn atom(&mut self) -> Result<OmegaTerm> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let t = self.term()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(t)
            }
            Some(c) if c.is_alphabetic() => {
                self.pos += c.len_utf8();
                Ok(OmegaTerm::Var(c))
            }
            _ => Err(self.err("expected a variable or `(`")),
        }
    }
}

pub fn parse_term(src: &str) -> Result<OmegaTerm> {
    let mut p = Parser { src, pos: 0 };
    let t = p.term()?;
    p.skip_ws();
    if p.pos != src.len() {
        return Err(p.err("unexpected character"));
    }
    Ok(t)
}

/// Parses `lhs = rhs`.
pub fn parse_identity(src: &str) -> Result<(OmegaTerm, OmegaTerm)> {
    let mut p = Parser { src, pos: 0 };
    let lhs = p.term()?;
    p.skip_ws();
    if p.peek() != Some('=') {
        return Err(p.err("expected `=`"));
    }
    p.pos += 1;
    let rhs = p.term()?;
    p.skip_ws();
    if p.pos != src.len() {
        return Err(p.err("unexpected character"));
    }
    Ok((lhs, rhs))
}

/// Evaluates `t` bottom-up, reading ω as the idempotent power.
pub fn eval_term(t: &OmegaTerm, s: &FiniteSemigroupoid, assignment: &BTreeMap<char, Edge>) -> Result<Edge> {
    match t {
        OmegaTerm::Var(c) => assignment.get(c).copied().ok_or(Error::UnassignedVariable(*c)),
        OmegaTerm::Product(fs) => {
            let mut acc = eval_term(&fs[0], s, assignment)?;
            for f in &fs[1..] {
                let v = eval_term(f, s, assignment)?;
                acc = s.mul(acc, v).ok_or_else(|| {
                    let g = s.graph();
                    Error::NotComposable {
                        src: g.vertex_id(g.src(acc)).into(),
                        dst: g.vertex_id(g.dst(v)).into(),
                    }
                })?;
            }
            Ok(acc)
        }
        OmegaTerm::Omega(inner) => {
            let v = eval_term(inner, s, assignment)?;
            omega_power(s, v).map_err(|_| Error::OmegaOnNonLoop(String::from(s.name(v))))
        }
    }
}

/// Outcome of [`check_pseudoidentity`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PseudoidentityCheck {
    /// Every assignment agreed; `checked` counts those where both sides
    /// were defined.
    Holds { checked: u64 },
    /// The first disagreeing assignment; `None` marks an undefined side.
    Fails {
        assignment: Vec<(char, Edge)>,
        lhs: Option<Edge>,
        rhs: Option<Edge>,
    },
}

impl PseudoidentityCheck {
    pub fn holds(&self) -> bool {
        matches!(self, PseudoidentityCheck::Holds { .. })
    }
}

/// Checks `lhs = rhs` under every assignment of edges to variables, in
/// lexicographic order. Assignments undefined on both sides are skipped; an
/// assignment defined on one side only is a failure.
pub fn check_pseudoidentity(lhs: &OmegaTerm, rhs: &OmegaTerm, s: &FiniteSemigroupoid) -> Result<PseudoidentityCheck> {
    let mut vars = lhs.variables();
    vars.extend(rhs.variables());
    vars.sort();
    vars.dedup();
    let n = s.edge_count();
    let total = (n as u128).checked_pow(vars.len() as u32).unwrap_or(u128::MAX);
    if total > ASSIGNMENT_CAP {
        return Err(Error::TooLarge {
            what: "pseudoidentity assignments",
            size: total,
            cap: ASSIGNMENT_CAP,
        });
    }
    if n == 0 {
        return Ok(PseudoidentityCheck::Holds { checked: 0 });
    }
    let mut digits = alloc::vec![0usize; vars.len()];
    let mut checked = 0;
    loop {
        let assignment: BTreeMap<char, Edge> = vars
            .iter()
            .zip(&digits)
            .map(|(&c, &d)| (c, Edge(d as u32)))
            .collect();
        let l = eval_term(lhs, s, &assignment).ok();
        let r = eval_term(rhs, s, &assignment).ok();
        match (l, r) {
            (None, None) => {}
            (Some(a), Some(b)) if a == b => checked += 1,
            _ => {
                return Ok(PseudoidentityCheck::Fails {
                    assignment: assignment.into_iter().collect(),
                    lhs: l,
                    rhs: r,
                })
            }
        }
        // odometer, last variable fastest
        let mut i = vars.len();
        loop {
            if i == 0 {
                return Ok(PseudoidentityCheck::Holds { checked });
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < n {
                break;
            }
            digits[i] = 0;
        }
    }
}

/// One catalog member's result in [`check_over_catalog`].
#[derive(Clone, Debug)]
pub struct CatalogCheck {
    pub name: String,
    pub semigroupoid: FiniteSemigroupoid,
    pub result: PseudoidentityCheck,
}

/// Membership used to filter catalog members. Only nonempty semigroups can
/// pass a filter; members with several vertices are excluded.
pub fn catalog_member_in(v: Pseudovariety, s: &FiniteSemigroupoid) -> Result<bool> {
    if !s.is_semigroup() || s.edge_count() == 0 {
        return Ok(false);
    }
    v.contains(s)
}

/// Runs [`check_pseudoidentity`] on every catalog member passing `filter`.
pub fn check_over_catalog(lhs: &OmegaTerm, rhs: &OmegaTerm, filter: Option<Pseudovariety>) -> Result<Vec<CatalogCheck>> {
    let mut out = Vec::new();
    for entry in catalog() {
        if let Some(v) = filter {
            if !catalog_member_in(v, &entry.semigroupoid)? {
                continue;
            }
        }
        let result = check_pseudoidentity(lhs, rhs, &entry.semigroupoid)?;
        out.push(CatalogCheck {
            name: entry.name,
            semigroupoid: entry.semigroupoid,
            result,
        });
    }
    Ok(out)
}
