//! Hit logs and the ledger of known enumerator parameters.

use std::collections::BTreeSet;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Read, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use sdforge_core::analysis::EnumeratorParams;
use sdforge_core::search::{Algorithm, Hit};
use sdforge_core::{CandidateVector, EnumeratorFamily};

use crate::Error;

/// One persisted discovery; serialised as a single JSON line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HitRecord {
    pub construction: String,
    /// 9 hex digits, `a_1` in the most significant bit.
    pub candidate: CandidateVector,
    pub family: Option<EnumeratorFamily>,
    pub gamma: Option<i64>,
    pub beta: Option<i64>,
    pub alpha: Option<i64>,
    pub d: Option<u32>,
    pub a12: u64,
    pub a14: u64,
    pub seed: u64,
    pub algorithm: Algorithm,
    pub iteration: u32,
    /// RFC 3339, or `null` when timestamps are suppressed.
    pub timestamp: Option<String>,
    /// External metadata; never computed here.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub aut_order: Option<u64>,
}

impl HitRecord {
    pub fn from_hit(construction: &str, hit: &Hit, seed: u64, algorithm: Algorithm, timestamp: Option<String>) -> Self {
        let r = &hit.report;
        Self {
            construction: construction.to_string(),
            candidate: hit.candidate,
            family: r.family,
            gamma: r.gamma,
            beta: r.beta,
            alpha: r.alpha,
            d: r.min_distance,
            a12: r.count(12),
            a14: r.count(14),
            seed,
            algorithm,
            iteration: hit.iteration,
            timestamp,
            aut_order: None,
        }
    }

    /// The enumerator parameters, if the family and its fields agree.
    pub fn params(&self) -> Option<EnumeratorParams> {
        match (self.family?, self.gamma, self.beta, self.alpha) {
            (EnumeratorFamily::TypeII, None, None, Some(alpha)) => Some(EnumeratorParams::TypeII { alpha }),
            (family @ (EnumeratorFamily::W72_1 | EnumeratorFamily::W72_2), Some(gamma), Some(beta), None) => {
                Some(EnumeratorParams::TypeI { family, gamma, beta })
            }
            _ => None,
        }
    }

    /// Family/parameter consistency and `A_12`/`A_14` agreement with them.
    pub fn is_consistent(&self) -> bool {
        if self.family.is_none() {
            return self.gamma.is_none() && self.beta.is_none() && self.alpha.is_none();
        }
        match self.params() {
            Some(EnumeratorParams::TypeII { alpha }) => {
                self.a12 as i64 == EnumeratorFamily::type_ii_coefficients(alpha).0 && self.a14 == 0
            }
            Some(EnumeratorParams::TypeI { family, gamma, beta }) => family
                .type_i_coefficients(gamma, beta)
                .is_some_and(|(a12, a14, _)| a12 == self.a12 as i64 && a14 == self.a14 as i64),
            None => false,
        }
    }
}

/// Appends one record as one line. The line is written with a single
/// `write` call on a file opened in append mode.
pub fn append_hit(h: &HitRecord, path: &Path) -> Result<(), Error> {
    HitWriter::open(path)?.append(h)
}

/// The single writer of a hit log.
#[derive(Debug)]
pub struct HitWriter {
    path: PathBuf,
    file: File,
}

impl HitWriter {
    pub fn open(path: &Path) -> Result<Self, Error> {
        let file = OpenOptions::new().create(true).append(true).open(path).map_err(|e| Error::io(path, e))?;
        Ok(Self { path: path.to_path_buf(), file })
    }

    pub fn append(&mut self, h: &HitRecord) -> Result<(), Error> {
        let mut line = serde_json::to_vec(h).expect("hit records always serialise");
        line.push(b'\n');
        self.file.write_all(&line).map_err(|e| Error::io(&self.path, e))
    }
}

/// Reads a JSON-Lines hit log; blank lines are skipped.
pub fn load_hits(path: &Path) -> Result<Vec<HitRecord>, Error> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    read_hits(BufReader::new(file)).map_err(|e| match e {
        Error::Io { source, .. } => Error::io(path, source),
        e => e.at(path),
    })
}

pub fn read_hits(reader: impl BufRead) -> Result<Vec<HitRecord>, Error> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::io(Path::new("<hit log>"), e))?;
        if line.trim().is_empty() {
            continue;
        }
        let rec: HitRecord = serde_json::from_str(&line).map_err(|e| Error::parse(i as u64 + 1, e.to_string()))?;
        out.push(rec);
    }
    Ok(out)
}

/// Enumerator parameters already known; anything else counts as new.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct KnownParameterSet {
    pub type_i: BTreeSet<(EnumeratorFamily, i64, i64)>,
    pub type_ii: BTreeSet<i64>,
}

#[derive(Deserialize)]
struct KnownRow {
    kind: String,
    family: Option<String>,
    gamma: Option<i64>,
    beta: Option<i64>,
    alpha: Option<i64>,
}

const SHIPPED_KNOWN: &str = include_str!("../data/known_params.csv");

impl KnownParameterSet {
    /// The parameter sets of the 58 published codes.
    pub fn shipped() -> Self {
        Self::from_reader(SHIPPED_KNOWN.as_bytes()).expect("shipped ledger parses")
    }

    pub fn load(path: &Path) -> Result<Self, Error> {
        let file = File::open(path).map_err(|e| Error::io(path, e))?;
        Self::from_reader(file).map_err(|e| e.at(path))
    }

    /// CSV with header `kind,family,gamma,beta,alpha`.
    pub fn from_reader(reader: impl Read) -> Result<Self, Error> {
        let mut set = Self::default();
        let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
        let headers = rdr.headers().map_err(csv_error)?.clone();
        for rec in rdr.records() {
            let rec = rec.map_err(csv_error)?;
            let line = rec.position().map_or(0, |p| p.line());
            let row: KnownRow = rec.deserialize(Some(&headers)).map_err(|e| Error::parse(line, csv_message(&e)))?;
            set.insert_row(row, line)?;
        }
        Ok(set)
    }

    fn insert_row(&mut self, row: KnownRow, line: u64) -> Result<(), Error> {
        let bad = |m: String| Error::parse(line, m);
        match row.kind.as_str() {
            "I" => {
                let family = row.family.as_deref().and_then(EnumeratorFamily::parse);
                match (family, row.gamma, row.beta) {
                    (Some(f @ (EnumeratorFamily::W72_1 | EnumeratorFamily::W72_2)), Some(g), Some(b)) => {
                        self.type_i.insert((f, g, b));
                        Ok(())
                    }
                    _ => Err(bad("type I rows need family W72_1/W72_2, gamma and beta".into())),
                }
            }
            "II" => {
                let alpha = row.alpha.ok_or_else(|| bad("type II rows need alpha".into()))?;
                self.type_ii.insert(alpha);
                Ok(())
            }
            other => Err(bad(format!("unknown kind `{other}`"))),
        }
    }

    pub fn contains(&self, params: &EnumeratorParams) -> bool {
        match *params {
            EnumeratorParams::TypeI { family, gamma, beta } => self.type_i.contains(&(family, gamma, beta)),
            EnumeratorParams::TypeII { alpha } => self.type_ii.contains(&alpha),
        }
    }

    pub fn extend(&mut self, other: &Self) {
        self.type_i.extend(other.type_i.iter().copied());
        self.type_ii.extend(other.type_ii.iter().copied());
    }

    pub fn len(&self) -> usize {
        self.type_i.len() + self.type_ii.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// True iff `params` is absent from `known`.
pub fn is_new(params: &EnumeratorParams, known: &KnownParameterSet) -> bool {
    !known.contains(params)
}

/// Maps a csv error to a parse error carrying the 1-based line.
pub(crate) fn csv_error(e: csv::Error) -> Error {
    let line = e.position().map_or(0, |p| p.line());
    let message = csv_message(&e);
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::io(Path::new("<csv>"), io),
        _ => Error::parse(line, message),
    }
}

/// The message of a csv error without its position prefix.
pub(crate) fn csv_message(e: &csv::Error) -> String {
    match e.kind() {
        csv::ErrorKind::Deserialize { err, .. } => err.to_string(),
        csv::ErrorKind::UnequalLengths { expected_len, len, .. } => {
            format!("expected {expected_len} fields, found {len}")
        }
        _ => e.to_string(),
    }
}
