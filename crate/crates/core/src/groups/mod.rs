//! Integer generator tables for the Platonic, Apollonian, stabilizer and dual groups.
//!
//! All matrices act on F-matrices from the left. A [`GroupElement`] carries the word that
//! produced it, and its matrix is always the ordered product of that word.

mod tables;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::config::{q_f, FMatrix};
use crate::IntMat;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("unknown generator table {0:?}")]
    UnknownTable(String),
    #[error("no generator {label:?} in table {table}")]
    UnknownGenerator { table: TableName, label: String },
    #[error("cannot combine elements of {0} and {1}")]
    TableMismatch(TableName, TableName),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TableName {
    Platonic,
    PlatonicOriented,
    Apollonian,
    ApollonianOriented,
    Stabilizer1,
    Stabilizer1Oriented,
    DualApollonian,
}

impl TableName {
    pub const ALL: [TableName; 7] = [
        Self::Platonic,
        Self::PlatonicOriented,
        Self::Apollonian,
        Self::ApollonianOriented,
        Self::Stabilizer1,
        Self::Stabilizer1Oriented,
        Self::DualApollonian,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Platonic => "Platonic",
            Self::PlatonicOriented => "PlatonicOriented",
            Self::Apollonian => "Apollonian",
            Self::ApollonianOriented => "ApollonianOriented",
            Self::Stabilizer1 => "Stabilizer1",
            Self::Stabilizer1Oriented => "Stabilizer1Oriented",
            Self::DualApollonian => "DualApollonian",
        }
    }
}

impl fmt::Display for TableName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TableName {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| GroupError::UnknownTable(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub label: String,
    pub matrix: IntMat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorTable {
    pub name: TableName,
    pub generators: Vec<Generator>,
}

impl GeneratorTable {
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn get(&self, label: &str) -> Option<&IntMat> {
        self.generators
            .iter()
            .find(|g| g.label == label)
            .map(|g| &g.matrix)
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.generators.iter().map(|g| g.label.as_str())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let gens: Vec<_> = self
            .generators
            .iter()
            .map(|g| {
                let rows: Vec<Vec<serde_json::Value>> = g
                    .matrix
                    .to_rows()
                    .iter()
                    .map(|r| {
                        r.iter()
                            .map(|x| {
                                serde_json::Value::from(x.to_string().parse::<i64>().unwrap_or(0))
                            })
                            .collect()
                    })
                    .collect();
                serde_json::json!({ "label": g.label, "matrix": rows })
            })
            .collect();
        serde_json::json!({ "table": self.name.as_str(), "generators": gens })
    }
}

fn literal(raw: &[(&str, tables::Raw)]) -> Vec<Generator> {
    raw.iter()
        .map(|(label, m)| Generator {
            label: label.to_string(),
            matrix: IntMat::from_i64(m),
        })
        .collect()
}

fn build(name: TableName) -> GeneratorTable {
    let generators = match name {
        TableName::Platonic => literal(&tables::PLATONIC),
        TableName::Apollonian => literal(&tables::APOLLONIAN),
        TableName::DualApollonian => literal(&tables::DUAL),
        TableName::Stabilizer1 => literal(&tables::APOLLONIAN)
            .into_iter()
            .filter(|g| g.label.starts_with("S1"))
            .collect(),
        TableName::Stabilizer1Oriented => literal(&tables::STABILIZER1_ORIENTED),
        TableName::PlatonicOriented => {
            let p = literal(&tables::PLATONIC);
            p[1..]
                .iter()
                .map(|g| Generator {
                    label: format!("R1{}", g.label),
                    matrix: &p[0].matrix * &g.matrix,
                })
                .collect()
        }
        TableName::ApollonianOriented => {
            let a = literal(&tables::APOLLONIAN);
            a[1..]
                .iter()
                .map(|g| Generator {
                    label: format!("S1234{}", g.label),
                    matrix: &a[0].matrix * &g.matrix,
                })
                .collect()
        }
    };
    GeneratorTable { name, generators }
}

/// The generator table for `name`, built once per process.
pub fn generators(name: TableName) -> &'static GeneratorTable {
    static CACHE: [OnceLock<GeneratorTable>; 7] = [const { OnceLock::new() }; 7];
    let idx = TableName::ALL
        .iter()
        .position(|&t| t == name)
        .expect("listed table");
    CACHE[idx].get_or_init(|| build(name))
}

pub fn oriented_generators(name: TableName) -> &'static GeneratorTable {
    generators(match name {
        TableName::Platonic => TableName::PlatonicOriented,
        TableName::Apollonian => TableName::ApollonianOriented,
        TableName::Stabilizer1 => TableName::Stabilizer1Oriented,
        other => other,
    })
}

/// A matrix together with the word over one generator table that produced it.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupElement {
    table: TableName,
    word: Vec<String>,
    matrix: IntMat,
}

impl GroupElement {
    pub fn identity(table: TableName) -> Self {
        Self {
            table,
            word: Vec::new(),
            matrix: IntMat::identity(5),
        }
    }

    pub fn generator(table: TableName, label: &str) -> Result<Self, GroupError> {
        Self::from_word(table, &[label])
    }

    /// The product `g₁·g₂·…·gₙ` of the labelled generators, in word order.
    pub fn from_word<S: AsRef<str>>(table: TableName, word: &[S]) -> Result<Self, GroupError> {
        let t = generators(table);
        let mut matrix = IntMat::identity(5);
        for label in word {
            let g = t
                .get(label.as_ref())
                .ok_or_else(|| GroupError::UnknownGenerator {
                    table,
                    label: label.as_ref().to_string(),
                })?;
            matrix = &matrix * g;
        }
        Ok(Self {
            table,
            word: word.iter().map(|s| s.as_ref().to_string()).collect(),
            matrix,
        })
    }

    pub fn table(&self) -> TableName {
        self.table
    }

    pub fn word(&self) -> &[String] {
        &self.word
    }

    pub fn matrix(&self) -> &IntMat {
        &self.matrix
    }

    pub fn compose(&self, other: &Self) -> Result<Self, GroupError> {
        if self.table != other.table {
            return Err(GroupError::TableMismatch(self.table, other.table));
        }
        let mut word = self.word.clone();
        word.extend(other.word.iter().cloned());
        Ok(Self {
            table: self.table,
            word,
            matrix: &self.matrix * &other.matrix,
        })
    }

    /// Recomputes the product of the word and compares it with the stored matrix.
    pub fn provenance_holds(&self) -> bool {
        Self::from_word(self.table, &self.word)
            .map(|g| g.matrix == self.matrix)
            .unwrap_or(false)
    }

    pub fn det(&self) -> BigInt {
        self.matrix.det_expansion().expect("square")
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}] {}", self.table, self.word.join("·"), self.matrix)
    }
}

pub fn apply(g: &GroupElement, f: &FMatrix) -> FMatrix {
    f.left_mul(g.matrix())
}

/// `gᵀ·Q_F·g = Q_F` and `det g = ±1`.
pub fn verify_orthogonality(g: &GroupElement) -> bool {
    is_orthogonal(g.matrix())
}

pub fn is_orthogonal(m: &IntMat) -> bool {
    let qf = q_f::<BigInt>();
    &(&m.transpose() * &qf) * m == qf
        && m.det_expansion().map(|d| d.abs().is_one()).unwrap_or(false)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub table: TableName,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

fn power_is_identity(table: TableName, word: &[&str], power: u32) -> bool {
    GroupElement::from_word(table, word)
        .expect("known labels")
        .matrix
        .pow(power)
        .is_identity()
}

/// The four involutions and six Coxeter relations of the Platonic group.
pub fn verify_platonic_relations() -> RelationReport {
    let t = TableName::Platonic;
    let mut checks = Vec::new();
    for r in ["R1", "R2", "R3", "R4"] {
        checks.push(RelationCheck {
            relation: format!("{r}^2"),
            holds: power_is_identity(t, &[r], 2),
        });
    }
    for (a, b, n) in [
        ("R1", "R2", 3),
        ("R2", "R3", 3),
        ("R3", "R4", 4),
        ("R1", "R3", 2),
        ("R1", "R4", 2),
        ("R2", "R4", 2),
    ] {
        checks.push(RelationCheck {
            relation: format!("({a}{b})^{n}"),
            holds: power_is_identity(t, &[a, b], n),
        });
    }
    RelationReport { table: t, checks }
}

/// Labels that differ in exactly one position.
pub fn share_three_labels(a: &str, b: &str) -> bool {
    a.len() == b.len() && a.chars().zip(b.chars()).filter(|(x, y)| x != y).count() == 1
}

/// The 16 involutions and the 32 order-two products of generators sharing three labels.
pub fn verify_apollonian_relations() -> RelationReport {
    let t = TableName::Apollonian;
    let labels: Vec<&str> = generators(t).labels().collect();
    let mut checks = Vec::new();
    for s in &labels {
        checks.push(RelationCheck {
            relation: format!("{s}^2"),
            holds: power_is_identity(t, &[s], 2),
        });
    }
    for (i, a) in labels.iter().enumerate() {
        for b in &labels[i + 1..] {
            if share_three_labels(&a[1..], &b[1..]) {
                checks.push(RelationCheck {
                    relation: format!("({a}{b})^2"),
                    holds: power_is_identity(t, &[a, b], 2),
                });
            }
        }
    }
    RelationReport { table: t, checks }
}

pub fn verify_dual_involutions() -> RelationReport {
    let t = TableName::DualApollonian;
    let checks = generators(t)
        .labels()
        .map(|s| RelationCheck {
            relation: format!("{s}^2"),
            holds: power_is_identity(t, &[s], 2),
        })
        .collect();
    RelationReport { table: t, checks }
}

/// The Platonic element moving sphere `k` (in `1..=8`) into the first row.
pub fn bring_to_front(k: usize) -> GroupElement {
    assert!((1..=8).contains(&k), "sphere index {k} out of range 1..=8");
    let pos = if k > 4 { k - 4 } else { k };
    let mut word: Vec<String> = Vec::new();
    if k > 4 {
        // Reflection of the first sphere into its complement.
        word.extend(["R1", "R2", "R3", "R4", "R3", "R2", "R1"].map(String::from));
    }
    word.extend((1..pos).map(|i| format!("R{i}")));
    GroupElement::from_word(TableName::Platonic, &word).expect("Platonic labels")
}
