//! Serializable output records. Field names are camelCase in JSON; every
//! record round-trips through `serde_json`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use hecke_rgroup::rgroup::{ComponentLabel, RootSystemFactor};
use hecke_rgroup::splitting::{ResidualDiagnostics, SplitResult};
use hecke_rgroup::{Bipartition, Partition, Rational};

/// Bumped whenever a field changes meaning or disappears.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DatumEcho {
    pub n: usize,
    pub m: Rational,
    pub kappa: Partition,
    pub mu: Partition,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PoleOrder {
    /// Coefficients in the basis `E_1..E_r`, one per part of κ (largest first).
    pub root: Vec<i64>,
    pub label: String,
    pub order: i64,
    pub in_restricted_system: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GeneratorEcho {
    pub length: usize,
    pub one_line: String,
    /// Simple reflections `s_1..s_n`, `s_n` the sign change of the last coordinate.
    pub word: Vec<usize>,
    pub images: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SymbolEcho {
    pub bipartition: Bipartition,
    pub top: Vec<u64>,
    pub bottom: Vec<u64>,
    pub a_value: i64,
    pub intervals: Vec<(u64, u64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SpringerClass {
    pub variant: String,
    pub members: Vec<SymbolEcho>,
    /// Size of the class of the B-factor before induction.
    pub seed_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct OracleSummary {
    pub bound: usize,
    pub w_xi_xi_order: u64,
    pub r_group_order: usize,
    pub r_group: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub schema_version: u32,
    pub datum: DatumEcho,
    pub central_character: Vec<Rational>,
    /// Absent when μ is empty.
    pub residual_diagnostics: Option<ResidualDiagnostics>,
    pub split_result: SplitResult,
    pub pole_orders: Vec<PoleOrder>,
    pub root_system_factors: Vec<RootSystemFactor>,
    pub weyl_group_order: String,
    pub d: usize,
    pub gluable_lengths: Vec<usize>,
    pub component_count: u64,
    pub generators: Vec<GeneratorEcho>,
    pub component_labels: Vec<ComponentLabel>,
    /// Absent when m is not a multiple of 1/2.
    pub springer_class: Option<SpringerClass>,
    pub oracle: Option<OracleSummary>,
    pub notes: Vec<String>,
    pub checks: BTreeMap<String, bool>,
}

impl Report {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.values().all(|&ok| ok)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ResidualEntry {
    pub lambda: Partition,
    pub split: Bipartition,
    pub symbol: Option<SymbolEcho>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ResidualListing {
    pub schema_version: u32,
    pub l: usize,
    pub m: Rational,
    pub points: Vec<ResidualEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SplitReport {
    pub schema_version: u32,
    pub lambda: Partition,
    pub m: Rational,
    /// Rows of `T_m(λ)`, longest first.
    pub tableau: Vec<Vec<Rational>>,
    pub diagnostics: ResidualDiagnostics,
    pub split_result: Option<SplitResult>,
    pub symbol: Option<SymbolEcho>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SymbolsReport {
    pub schema_version: u32,
    pub bipartition: Bipartition,
    pub m: Rational,
    /// One entry per variant; two for `m = 0`.
    pub variants: Vec<VariantSymbols>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VariantSymbols {
    pub variant: String,
    pub symbol: SymbolEcho,
    pub class: Vec<SymbolEcho>,
}

/// One row of the classification table. CSV columns follow field order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TableRow {
    pub n: usize,
    pub m: Rational,
    pub kappa: Partition,
    pub mu: Partition,
    pub d: usize,
    pub component_count: u64,
    pub gluable_lengths: Vec<usize>,
    pub class_size: Option<usize>,
    pub cardinality: Option<bool>,
    pub intervals: Option<bool>,
    pub gluing: bool,
}

impl TableRow {
    pub fn passed(&self) -> bool {
        self.gluing && self.cardinality != Some(false) && self.intervals != Some(false)
    }
}

/// Flat CSV form of [`TableRow`]: partitions and lists become single fields.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableCsvRow {
    pub n: usize,
    pub m: String,
    pub kappa: String,
    pub mu: String,
    pub d: usize,
    pub components: u64,
    pub gluable_lengths: String,
    pub class_size: String,
    pub cardinality: String,
    pub intervals: String,
    pub gluing: bool,
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn optional<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map(ToString::to_string).unwrap_or_default()
}

impl From<&TableRow> for TableCsvRow {
    fn from(row: &TableRow) -> Self {
        TableCsvRow {
            n: row.n,
            m: row.m.to_string(),
            kappa: join(row.kappa.increasing()),
            mu: join(row.mu.increasing()),
            d: row.d,
            components: row.component_count,
            gluable_lengths: join(&row.gluable_lengths),
            class_size: optional(&row.class_size),
            cardinality: optional(&row.cardinality),
            intervals: optional(&row.intervals),
            gluing: row.gluing,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Table {
    pub schema_version: u32,
    pub n: usize,
    pub ms: Vec<Rational>,
    pub rows: Vec<TableRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ConvertReport {
    pub schema_version: u32,
    pub k1: Rational,
    pub k2: Rational,
    pub m: Rational,
}
