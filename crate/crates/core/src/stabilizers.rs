//! Right stabilizers `Stab(x) = {y ∈ S^I : xy = x}`.

use alloc::vec::Vec;

use crate::error::Result;
use crate::graph::Edge;
use crate::green::{is_left_zero_semigroup, kernel};
use crate::semigroupoid::{adjoin_identities, FiniteSemigroupoid};

/// The stabilizer monoid of an edge, living inside `S^I`.
#[derive(Clone, Debug)]
pub struct Stabilizer {
    base: FiniteSemigroupoid,
    anchor: Edge,
    elements: Vec<Edge>,
}

pub fn stabilizer(s: &FiniteSemigroupoid, x: Edge) -> Stabilizer {
    let base = adjoin_identities(s);
    let anchor = base.element(s.name(x)).expect("S^I keeps the names of S");
    let elements = base
        .right_factors(anchor)
        .iter()
        .copied()
        .filter(|&y| base.mul_composable(anchor, y) == anchor)
        .collect();
    Stabilizer {
        base,
        anchor,
        elements,
    }
}

impl Stabilizer {
    /// `S^I`; element handles of the stabilizer refer to it.
    pub fn base(&self) -> &FiniteSemigroupoid {
        &self.base
    }

    pub fn anchor(&self) -> Edge {
        self.anchor
    }

    /// Sorted members.
    pub fn elements(&self) -> &[Edge] {
        &self.elements
    }

    pub fn contains(&self, y: Edge) -> bool {
        self.elements.binary_search(&y).is_ok()
    }

    /// The stabilizer as a one-vertex semigroup, with the map back to `S^I`.
    pub fn as_semigroup(&self) -> (FiniteSemigroupoid, Vec<Edge>) {
        self.base
            .restrict(&self.elements)
            .expect("stabilizers are closed")
    }

    /// `a ≤_L b` inside the stabilizer: `a ∈ T·b`.
    pub fn l_le(&self, a: Edge, b: Edge) -> bool {
        self.elements
            .iter()
            .any(|&t| self.base.mul_composable(t, b) == a)
    }

    /// The first pair of members that are not `≤_L`-comparable, if any.
    pub fn l_chain_violation(&self) -> Option<(Edge, Edge)> {
        for (i, &a) in self.elements.iter().enumerate() {
            for &b in &self.elements[i + 1..] {
                if !self.l_le(a, b) && !self.l_le(b, a) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_internal_l_chain(&self) -> bool {
        self.l_chain_violation().is_none()
    }

    /// Members `y` with `y = yzy` for some member `z`.
    pub fn internally_regular(&self) -> Vec<Edge> {
        let b = &self.base;
        self.elements
            .iter()
            .copied()
            .filter(|&y| {
                self.elements
                    .iter()
                    .any(|&z| b.mul_composable(b.mul_composable(y, z), y) == y)
            })
            .collect()
    }

    /// Minimum ideal of the stabilizer monoid.
    pub fn kernel(&self) -> Vec<Edge> {
        let (t, back) = self.as_semigroup();
        kernel(&t)
            .expect("one-vertex")
            .expect("contains the identity")
            .into_iter()
            .map(|e| back[e.index()])
            .collect()
    }
}

/// Facts about `Stab(x)`; element handles refer to `S^I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerReport {
    pub elements: Vec<Edge>,
    pub l_chain_violation: Option<(Edge, Edge)>,
    pub kernel: Vec<Edge>,
    pub kernel_is_left_zero: bool,
    pub internally_regular: Vec<Edge>,
    pub regulars_are_idempotent: bool,
}

pub fn stabilizer_kernel_check(s: &FiniteSemigroupoid, x: Edge) -> Result<StabilizerReport> {
    let stab = stabilizer(s, x);
    let kernel = stab.kernel();
    let kernel_is_left_zero = is_left_zero_semigroup(stab.base(), &kernel)?;
    let internally_regular = stab.internally_regular();
    let regulars_are_idempotent = internally_regular
        .iter()
        .all(|&y| stab.base().is_idempotent(y));
    Ok(StabilizerReport {
        elements: stab.elements().to_vec(),
        l_chain_violation: stab.l_chain_violation(),
        kernel,
        kernel_is_left_zero,
        internally_regular,
        regulars_are_idempotent,
    })
}
