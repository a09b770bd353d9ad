//! JSON report types, one per verb. Elements are written by name.

use serde::{Deserialize, Serialize};

use crate::formats::{DfaJson, Kind, SemigroupoidJson};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ValidateReport {
    pub kind: Kind,
    pub valid: bool,
    pub diagnostics: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GreenReport {
    pub r_classes: Vec<Vec<String>>,
    pub l_classes: Vec<Vec<String>>,
    pub h_classes: Vec<Vec<String>>,
    pub j_classes: Vec<Vec<String>>,
    pub regular_j_classes: Vec<bool>,
    pub idempotents: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EggboxReport {
    pub j_classes: Vec<EggboxClass>,
}

/// Rows are R-classes, columns L-classes, cells H-classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EggboxClass {
    pub regular: bool,
    pub rows: Vec<Vec<Vec<String>>>,
    pub idempotents: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StabReport {
    pub edge: String,
    pub elements: Vec<String>,
    /// `table[i][j]` is `elements[i]·elements[j]`.
    pub table: Vec<Vec<String>>,
    pub l_chain: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l_chain_violation: Option<[String; 2]>,
    pub kernel: Vec<String>,
    pub kernel_is_left_zero: bool,
    pub internally_regular: Vec<String>,
    pub regulars_are_idempotent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EquidivReport {
    pub equidivisible: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Witness {
    pub u: String,
    pub v: String,
    pub x: String,
    pub y: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PseudovarReport {
    pub results: Vec<Membership>,
}

/// `local` marks membership of every local semigroup, used for inputs with
/// several vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Membership {
    pub pseudovariety: String,
    pub local: bool,
    pub member: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SyntReport {
    pub semigroup: SemigroupoidJson,
    /// Letter id to element name.
    pub letter_images: Vec<[String; 2]>,
    pub accepting: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConcatReport {
    pub dfa: DfaJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RecogReport {
    pub pseudovariety: String,
    pub recognizable: bool,
    pub syntactic_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorialReport {
    pub factorial: bool,
    pub bound: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factor: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RecurReport {
    /// Normalized `p(q)^ω`.
    pub word: String,
    pub recurrent: bool,
    /// `(n, m)`: the length-`n` prefix reoccurs at `m`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub occurrences: Vec<[usize; 2]>,
    /// Shortest prefix that never reoccurs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prefix: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub images: Option<RecurringImagesReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RecurringImagesReport {
    pub recurring: Vec<String>,
    pub cycle_start: usize,
    pub cycle_len: usize,
    pub recurring_idempotent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PseudoidReport {
    pub identity: String,
    pub results: Vec<PseudoidResult>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PseudoidResult {
    pub name: String,
    pub holds: bool,
    /// Assignments with both sides defined, when the identity holds.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checked: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure: Option<PseudoidFailure>,
}

/// First failing assignment. A side is `null` when undefined.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PseudoidFailure {
    /// Variable to element name.
    pub assignment: Vec<[String; 2]>,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogReport {
    pub entries: Vec<CatalogRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogRow {
    pub name: String,
    pub vertices: usize,
    pub elements: usize,
}
