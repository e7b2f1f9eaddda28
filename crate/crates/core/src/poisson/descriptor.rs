use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub a: String,
    pub b: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferentialRule {
    pub relation: usize,
    pub cofactor: String,
}

/// JSON presentation of a Poisson algebra. Generator order fixes the term
/// order (earlier generators are larger).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDescriptor {
    pub name: String,
    pub generators: Vec<String>,
    pub brackets: Vec<BracketEntry>,
    #[serde(default)]
    pub relations: Vec<String>,
    /// Cofactors `f` such that `f·dR` (reduced) orients a rewrite rule on
    /// formal differentials. Defaults to `f = 1` for every relation.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub differential_rules: Vec<DifferentialRule>,
}

pub const SEMICONE_JSON: &str = include_str!("../../descriptors/semicone.json");
pub const ADJOINT_QUOTIENT_JSON: &str = include_str!("../../descriptors/adjoint_quotient.json");
