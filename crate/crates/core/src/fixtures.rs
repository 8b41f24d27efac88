//! Reference data shipped with the crate: the 79 models with their
//! tabulated sequences and orbits, and the fixed points used to certify
//! infinite groups.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::stepset::StepSet;

/// A tabulated integer sequence with its encyclopedia identifier, if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sequence {
    pub oeis: Option<String>,
    pub terms: Vec<u64>,
}

/// One of the 79 models as listed in the reference tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelEntry {
    /// 1 to 3 for finite groups of order 4, 6, 8; 4 for infinite groups.
    pub table: u8,
    pub row: u32,
    /// The step set as drawn in the table (possibly the mirror of the
    /// canonical representative).
    pub listed: StepSet,
    pub group_order: Option<u32>,
    /// Orbit of `(x, y)` as pairs of rational expressions.
    #[serde(default)]
    pub orbit: Option<Vec<[String; 2]>>,
    /// Total number of walks of each length.
    #[serde(default)]
    pub totals: Option<Sequence>,
    /// Number of walks of each length returning to the origin.
    #[serde(default)]
    pub origin: Option<Sequence>,
}

impl ModelEntry {
    pub fn canonical(&self) -> StepSet {
        self.listed.canonical()
    }

    /// Short identifier such as `T2#3`.
    pub fn id(&self) -> String {
        format!("T{}#{}", self.table, self.row)
    }
}

#[derive(Debug, Deserialize)]
struct ModelFile {
    schema_version: u32,
    models: Vec<ModelEntry>,
}

/// Which coordinate of the fixed point is the algebraic generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Coordinate {
    #[serde(rename = "a")]
    X,
    #[serde(rename = "b")]
    Y,
}

/// `num / den` as coefficient lists, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntFraction {
    pub num: Vec<i64>,
    pub den: Vec<i64>,
}

/// A fixed point of `Θ` given by a condition on one coordinate and the
/// other coordinate as a rational function of it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPointRow {
    #[serde(default)]
    pub row: Option<u32>,
    pub mask: StepSet,
    pub variable: Coordinate,
    pub partner: IntFraction,
    pub condition: Vec<i64>,
    /// Eliminated characteristic polynomial, when tabulated.
    #[serde(default)]
    pub chi_bar: Option<Vec<i64>>,
    #[serde(default)]
    pub note: Option<String>,
}

#[derive(Debug, Deserialize)]
pub struct FixedPointTable {
    pub schema_version: u32,
    /// Points whose Jacobian has no root of unity among its eigenvalues.
    pub rows: Vec<FixedPointRow>,
    /// Points where some power of the Jacobian is the identity.
    pub degenerate: Vec<FixedPointRow>,
}

static MODELS: OnceLock<Vec<ModelEntry>> = OnceLock::new();
static FIXED_POINTS: OnceLock<FixedPointTable> = OnceLock::new();

pub const MODELS_JSON: &str = include_str!("../fixtures/models.json");
pub const FIXED_POINTS_JSON: &str = include_str!("../fixtures/fixed_points.json");

/// All 79 tabulated models, tables 1 to 4 in order.
pub fn models() -> &'static [ModelEntry] {
    MODELS.get_or_init(|| {
        let file: ModelFile = serde_json::from_str(MODELS_JSON).expect("models fixture is valid");
        assert_eq!(file.schema_version, 1, "unsupported models fixture version");
        file.models
    })
}

/// The tabulated entry whose listed set or canonical form is `s` or its
/// mirror.
pub fn model_for(s: StepSet) -> Option<&'static ModelEntry> {
    let c = s.canonical();
    models().iter().find(|m| m.canonical() == c)
}

/// The 23 models with a finite group.
pub fn finite_models() -> impl Iterator<Item = &'static ModelEntry> {
    models().iter().filter(|m| m.group_order.is_some())
}

pub fn fixed_points() -> &'static FixedPointTable {
    FIXED_POINTS.get_or_init(|| {
        let t: FixedPointTable =
            serde_json::from_str(FIXED_POINTS_JSON).expect("fixed-point fixture is valid");
        assert_eq!(
            t.schema_version, 1,
            "unsupported fixed-point fixture version"
        );
        t
    })
}

/// Kreweras, reverse Kreweras and double Kreweras.
pub fn xy_symmetric_models() -> [StepSet; 3] {
    [
        StepSet::from_steps([(-1, 0), (0, -1), (1, 1)]),
        StepSet::from_steps([(1, 0), (0, 1), (-1, -1)]),
        StepSet::from_steps([(-1, 0), (0, -1), (1, 1), (1, 0), (0, 1), (-1, -1)]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_shapes() {
        assert_eq!(models().len(), 79);
        assert_eq!(finite_models().count(), 23);
        assert_eq!(fixed_points().rows.len(), 14);
        let counts: Vec<usize> = (1..=4)
            .map(|t| models().iter().filter(|m| m.table == t).count())
            .collect();
        assert_eq!(counts, [16, 5, 2, 56]);
    }
}
