//! The published code tables and their reconstruction.
//!
//! CSV columns: `id, construction, r_bits, type, gamma, beta, alpha,
//! aut_order`, plus an optional `printed_construction` holding the label as
//! originally printed when `construction` corrects it. `r_bits` is the
//! concatenation of its `;`-separated groups, read as `a_1 .. a_36`.

use std::fs::File;
use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};

use sdforge_core::analysis::{self, CodeReport, EnumeratorParams, ExtractOptions};
use sdforge_core::{groupring, CandidateVector, EnumeratorFamily};

use crate::catalog::{csv_error, csv_message};
use crate::Error;

const SHIPPED_TABLES: &str = include_str!("../data/paper_tables.csv");

/// One published code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub id: String,
    pub construction: String,
    pub candidate: CandidateVector,
    pub expected: EnumeratorParams,
    pub aut_order: Option<u64>,
    pub printed_construction: Option<String>,
}

impl TableRow {
    /// The construction label as printed in the source table.
    pub fn printed_label(&self) -> &str {
        self.printed_construction.as_deref().unwrap_or(&self.construction)
    }
}

#[derive(Deserialize)]
struct RawRow {
    id: String,
    construction: String,
    r_bits: String,
    #[serde(rename = "type")]
    kind: String,
    gamma: Option<i64>,
    beta: Option<i64>,
    alpha: Option<i64>,
    aut_order: Option<u64>,
    #[serde(default)]
    printed_construction: Option<String>,
}

impl RawRow {
    fn into_row(self) -> Result<TableRow, String> {
        let construction = groupring::lookup(&self.construction).map_err(|e| e.to_string())?.id.to_string();
        if let Some(p) = self.printed_construction.as_deref() {
            groupring::lookup(p).map_err(|e| e.to_string())?;
        }
        let candidate = CandidateVector::from_bit_string(&self.r_bits).map_err(|e| e.to_string())?;
        let family = match self.kind.trim() {
            "I" => Some(EnumeratorFamily::W72_1),
            other => EnumeratorFamily::parse(other),
        }
        .ok_or_else(|| format!("unknown type `{}`", self.kind))?;
        let expected = match (family, self.gamma, self.beta, self.alpha) {
            (EnumeratorFamily::TypeII, None, None, Some(alpha)) => EnumeratorParams::TypeII { alpha },
            (EnumeratorFamily::TypeII, ..) => return Err("type II rows need alpha only".into()),
            (family, Some(gamma), Some(beta), None) => EnumeratorParams::TypeI { family, gamma, beta },
            _ => return Err("type I rows need gamma and beta only".into()),
        };
        Ok(TableRow {
            id: self.id,
            construction,
            candidate,
            expected,
            aut_order: self.aut_order,
            printed_construction: self.printed_construction.filter(|s| !s.is_empty()),
        })
    }
}

/// The 58 shipped rows.
pub fn shipped_tables() -> Vec<TableRow> {
    parse_tables(SHIPPED_TABLES.as_bytes()).expect("shipped tables parse")
}

pub fn load_paper_tables(path: &Path) -> Result<Vec<TableRow>, Error> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    parse_tables(file).map_err(|e| match e {
        Error::Io { source, .. } => Error::io(path, source),
        e => e.at(path),
    })
}

/// Parses table CSV text; an empty input gives no rows.
pub fn parse_tables(reader: impl Read) -> Result<Vec<TableRow>, Error> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).flexible(true).from_reader(reader);
    let headers = rdr.headers().map_err(csv_error)?.clone();
    let mut rows = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(csv_error)?;
        let line = rec.position().map_or(0, |p| p.line());
        let raw: RawRow = rec.deserialize(Some(&headers)).map_err(|e| Error::parse(line, csv_message(&e)))?;
        rows.push(raw.into_row().map_err(|m| Error::parse(line, m))?);
    }
    Ok(rows)
}

/// Which construction label to reconstruct a row with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Labels {
    /// The `construction` column.
    #[default]
    Corrected,
    /// `printed_construction` where present.
    Printed,
}

/// Result of reconstructing one row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowVerdict {
    pub id: String,
    pub construction: String,
    pub report: CodeReport,
    /// Empty iff the row reproduces.
    pub failures: Vec<String>,
}

impl RowVerdict {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Rebuilds `[I | tau_3(v)]` for a row and checks self-duality, `d = 12`,
/// the Type and the enumerator parameters.
pub fn verify_row(row: &TableRow, labels: Labels) -> RowVerdict {
    let id = match labels {
        Labels::Corrected => row.construction.as_str(),
        Labels::Printed => row.printed_label(),
    };
    let k = groupring::lookup(id).expect("labels are validated on load");
    let g = k.generator(row.candidate);
    let mut report = match analysis::analyze(&g, 0, ExtractOptions::default()) {
        Ok(r) => r,
        Err(e) => {
            return RowVerdict {
                id: row.id.clone(),
                construction: k.id.to_string(),
                report: empty_report(),
                failures: vec![e.to_string()],
            }
        }
    };
    report.construction = Some(k.id.to_string());
    report.candidate = Some(row.candidate);
    let failures = check(&report, &row.expected);
    RowVerdict { id: row.id.clone(), construction: k.id.to_string(), report, failures }
}

fn check(report: &CodeReport, expected: &EnumeratorParams) -> Vec<String> {
    let mut failures = Vec::new();
    if !report.self_dual {
        failures.push("not self-dual".to_string());
        return failures;
    }
    if report.min_distance != Some(12) {
        failures.push(format!("minimum distance {}, expected 12", report.min_distance.unwrap_or(0)));
    }
    let type_name = |ii: bool| if ii { "II" } else { "I" };
    let want_ii = expected.family() == EnumeratorFamily::TypeII;
    let is_ii = report.doubly_even == Some(true);
    if is_ii != want_ii {
        failures.push(format!("Type {}, expected Type {}", type_name(is_ii), type_name(want_ii)));
    }
    match report.params() {
        Some(p) if p == *expected => {}
        Some(p) => failures.push(format!("parameters {}, expected {}", describe(&p), describe(expected))),
        None if failures.is_empty() => failures.push("counts fit no enumerator family".to_string()),
        None => {}
    }
    failures
}

/// `W72_1 gamma=0 beta=129` or `TYPE_II alpha=-2238`.
pub fn describe(p: &EnumeratorParams) -> String {
    match *p {
        EnumeratorParams::TypeI { family, gamma, beta } => format!("{} gamma={gamma} beta={beta}", family.name()),
        EnumeratorParams::TypeII { alpha } => format!("TYPE_II alpha={alpha}"),
    }
}

fn empty_report() -> CodeReport {
    CodeReport {
        construction: None,
        candidate: None,
        length: 0,
        dimension: 0,
        self_dual: false,
        min_distance: None,
        doubly_even: None,
        counts: Default::default(),
        family: None,
        gamma: None,
        beta: None,
        alpha: None,
    }
}
