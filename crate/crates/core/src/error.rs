use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::GraphDiagnostic;
use crate::semigroupoid::SgpdDiagnostic;

/// Errors raised by the operations of this crate.
///
/// Validation failures that are part of an operation's normal result (for
/// example [`crate::graph::validate_graph`]) are returned as diagnostics
/// instead; they only surface here when a constructor refuses its input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid graph: {}", join(.0))]
    InvalidGraph(Vec<GraphDiagnostic>),
    #[error("invalid semigroupoid: {}", join(.0))]
    InvalidSemigroupoid(Vec<SgpdDiagnostic>),
    #[error("unknown {kind} `{id}`")]
    UnknownId { kind: &'static str, id: String },
    #[error("not composable: source {src} of the left factor differs from range {dst} of the right factor")]
    NotComposable { src: String, dst: String },
    #[error("empty edge sequence is not a path")]
    EmptyPath,
    #[error("length {len} out of range 1..={max}")]
    LengthOutOfRange { len: usize, max: usize },
    #[error("invalid equivalence: {0}")]
    InvalidEquivalence(String),
    #[error("not a subgraph: {0}")]
    NotASubgraph(String),
    #[error("empty generating set")]
    EmptyGenerators,
    #[error(
        "not a congruence: {} ~ {} and {} ~ {} but {} !~ {}",
        .0.s, .0.s2, .0.t, .0.t2, .0.st, .0.s2t2
    )]
    NotACongruence(Box<CongruenceViolation>),
    #[error("edge `{0}` is not a loop")]
    NotALoop(String),
    #[error("empty semigroup")]
    EmptySemigroup,
    #[error("subset is not closed under multiplication: {0}")]
    NotClosed(String),
    #[error("not a semigroup: {0} vertices")]
    NotASemigroup(usize),
    #[error("incomplete automaton: no transition from state `{state}` on `{letter}`")]
    IncompleteDfa { state: String, letter: String },
    #[error("invalid automaton: {0}")]
    InvalidDfa(String),
    #[error("languages are over different graphs")]
    BaseMismatch,
    #[error("ω-power applied to a value that is not a loop: {0}")]
    OmegaOnNonLoop(String),
    #[error("unassigned variable `{0}`")]
    UnassignedVariable(char),
    #[error("term syntax error at byte {pos}: {msg}")]
    TermSyntax { pos: usize, msg: &'static str },
    #[error("input too large for {what}: {size} exceeds cap {cap}")]
    TooLarge {
        what: &'static str,
        size: u128,
        cap: u128,
    },
    #[error("accepted word is not a path: {0}")]
    NotAPathLanguage(String),
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
}

/// Related pairs `s ~ s2`, `t ~ t2` whose products `st`, `s2t2` are not
/// related.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceViolation {
    pub s: String,
    pub s2: String,
    pub t: String,
    pub t2: String,
    pub st: String,
    pub s2t2: String,
}

fn join<T: core::fmt::Display>(items: &[T]) -> String {
    use core::fmt::Write;
    let mut out = String::new();
    for (i, it) in items.iter().enumerate() {
        if i > 0 {
            out.push_str("; ");
        }
        let _ = write!(out, "{it}");
    }
    out
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
