//! Command-line front end for `finsgpd-core`: JSON file formats, report
//! types and the verb dispatcher behind the `finsgpd` binary.

use std::fmt;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use finsgpd_core::languages::BRUTE_FORCE_BOUND;
use finsgpd_core::pseudovar::Pseudovariety;

mod commands;
pub mod formats;
pub mod report;

/// Exit status 2 for inputs that fail to parse or validate, 1 for anything
/// else that stops a command.
#[derive(Debug, PartialEq, Eq)]
pub enum Failure {
    Invalid(Vec<String>),
    Internal(String),
}

impl Failure {
    pub fn invalid(msg: impl Into<String>) -> Failure {
        Failure::Invalid(vec![msg.into()])
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Invalid(_) => 2,
            Failure::Internal(_) => 1,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Invalid(diags) => {
                for (i, d) in diags.iter().enumerate() {
                    if i > 0 {
                        writeln!(f)?;
                    }
                    write!(f, "invalid input: {d}")?;
                }
                Ok(())
            }
            Failure::Internal(msg) => write!(f, "error: {msg}"),
        }
    }
}

impl From<finsgpd_core::Error> for Failure {
    fn from(e: finsgpd_core::Error) -> Failure {
        use finsgpd_core::Error;
        match e {
            Error::InvalidGraph(d) => Failure::Invalid(d.iter().map(ToString::to_string).collect()),
            Error::InvalidSemigroupoid(d) => Failure::Invalid(d.iter().map(ToString::to_string).collect()),
            Error::TooLarge { .. } => Failure::Internal(e.to_string()),
            other => Failure::invalid(other.to_string()),
        }
    }
}

fn parse_pseudovariety(s: &str) -> Result<Pseudovariety, String> {
    s.parse().map_err(|e: finsgpd_core::pseudovar::UnknownPseudovariety| e.to_string())
}

#[derive(Debug, Parser)]
#[command(name = "finsgpd", version, about = "Finite semigroupoids, Green's relations, syntactic semigroups and recurrence")]
pub struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a graph, semigroupoid, DFA, word list or label file.
    Validate {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = KindArg::Auto)]
        kind: KindArg,
    },
    /// Green's relations and idempotents.
    Green { file: PathBuf },
    /// Eggbox diagrams of the J-classes.
    Eggbox { file: PathBuf },
    /// Right stabilizer of an edge and its structure checks.
    Stab {
        file: PathBuf,
        #[arg(long)]
        edge: String,
    },
    /// Equidivisibility, with a witness on failure.
    Equidiv { file: PathBuf },
    /// Pseudovariety membership.
    Pseudovar {
        file: PathBuf,
        #[arg(long, value_parser = parse_pseudovariety, required_unless_present = "all", conflicts_with = "all")]
        pred: Option<Pseudovariety>,
        /// Test every pseudovariety.
        #[arg(long)]
        all: bool,
    },
    /// Syntactic semigroup of a language.
    Synt { lang: PathBuf },
    /// Concatenation of two languages over the same graph.
    Concat { left: PathBuf, right: PathBuf },
    /// Whether the syntactic semigroup lies in a pseudovariety.
    Recog {
        lang: PathBuf,
        #[arg(long, value_parser = parse_pseudovariety)]
        pred: Pseudovariety,
    },
    /// Factorial closure, checked on words up to a length bound.
    Factorial {
        lang: PathBuf,
        #[arg(long, default_value_t = BRUTE_FORCE_BOUND)]
        bound: usize,
    },
    /// Recurrence of p·q^ω, and its recurring images under a labeling.
    Recur {
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        p: String,
        #[arg(long)]
        q: String,
        /// Graph the words run over; default is one vertex with the letters
        /// of p and q as loops.
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long, requires = "label")]
        target: Option<PathBuf>,
        #[arg(long, requires = "target")]
        label: Option<PathBuf>,
    },
    /// Check a pseudoidentity `lhs = rhs` on a file or on the catalog.
    Pseudoid {
        identity: String,
        file: Option<PathBuf>,
        /// Restrict the catalog sweep to members of a pseudovariety.
        #[arg(long, value_parser = parse_pseudovariety, conflicts_with = "file")]
        filter: Option<Pseudovariety>,
    },
    /// List the built-in catalog, or print one member as JSON.
    Catalog {
        #[arg(long)]
        show: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum KindArg {
    Auto,
    Graph,
    Semigroupoid,
    Dfa,
    Words,
    Label,
}

/// A finished command: exit status and what goes to stdout.
#[derive(Debug)]
pub struct Output {
    pub code: u8,
    pub stdout: String,
}

pub fn run(cli: &Cli) -> Result<Output, Failure> {
    commands::run(cli)
}
