//! Finite semigroupoids and algebraic automata theory.
//!
//! The crate works with finite-vertex graphs, the free semigroupoid of paths
//! over them, and finite semigroupoids given by multiplication tables. On
//! top of these it provides Green's relations, membership tests for common
//! pseudovarieties, equidivisibility, right stabilizers, syntactic
//! semigroups of path languages, ω-term identities, and recurrence of
//! eventually periodic right-infinite paths.
//!
//! Everything is `no_std` with `alloc`; file formats and the command-line
//! front end live in the companion `finsgpd` crate.

#![no_std]

extern crate alloc;

pub mod automata;
mod bitset;
pub mod constructions;
pub mod divisor;
pub mod error;
pub mod graph;
pub mod green;
pub mod languages;
pub mod omega;
pub mod path;
pub mod pseudovar;
pub mod recurrence;
pub mod semigroupoid;
pub mod stabilizers;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, GraphMorphism, Vertex};
pub use path::{Path, PeriodicWord};
pub use semigroupoid::FiniteSemigroupoid;
