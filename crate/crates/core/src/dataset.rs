//! Project datasets: loading, validation, summary statistics, and the
//! built-in 24-project IVR dataset.

use std::collections::HashSet;
use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One software project: its size and the effort it actually took.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProjectRecord {
    pub id: u32,
    /// Thousands of delivered lines of code.
    pub size_kloc: f64,
    /// Person-months.
    pub actual_effort_pm: f64,
}

/// A named, ordered collection of projects with pairwise distinct ids.
///
/// Construct through [`Dataset::new`], [`load_dataset`] or
/// [`builtin_ivr_dataset`]; all of them validate the record invariants.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Dataset {
    name: String,
    records: Vec<ProjectRecord>,
}

impl Dataset {
    pub fn new(name: impl Into<String>, records: Vec<ProjectRecord>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(records.len());
        for (i, r) in records.iter().enumerate() {
            let row = i + 1;
            if r.id == 0 {
                return Err(Error::InvalidValue {
                    row,
                    field: "project id",
                    value: "0".into(),
                    reason: "must be a positive integer",
                });
            }
            check_positive(row, "size", r.size_kloc)?;
            check_positive(row, "effort", r.actual_effort_pm)?;
            if !seen.insert(r.id) {
                return Err(Error::DuplicateId { id: r.id, row });
            }
        }
        Ok(Self {
            name: name.into(),
            records,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn records(&self) -> &[ProjectRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn get(&self, id: u32) -> Option<&ProjectRecord> {
        self.records.iter().find(|r| r.id == id)
    }

    pub fn sizes(&self) -> Vec<f64> {
        self.records.iter().map(|r| r.size_kloc).collect()
    }

    pub fn efforts(&self) -> Vec<f64> {
        self.records.iter().map(|r| r.actual_effort_pm).collect()
    }
}

fn check_positive(row: usize, field: &'static str, value: f64) -> Result<()> {
    if !value.is_finite() || value <= 0.0 {
        return Err(Error::InvalidValue {
            row,
            field,
            value: value.to_string(),
            reason: "must be finite and > 0",
        });
    }
    Ok(())
}

/// Header names for the three required CSV columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CsvSchema {
    pub id: String,
    pub size: String,
    pub effort: String,
}

impl Default for CsvSchema {
    fn default() -> Self {
        Self {
            id: "project_id".into(),
            size: "kloc".into(),
            effort: "actual_effort".into(),
        }
    }
}

/// Load a CSV dataset from disk. The dataset is named after the file stem.
pub fn load_dataset(path: impl AsRef<Path>, schema: &CsvSchema) -> Result<Dataset> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => Error::FileNotFound(path.to_path_buf()),
        _ => Error::Io {
            path: path.to_path_buf(),
            source: e,
        },
    })?;
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "dataset".into());
    read_dataset(file, name, schema)
}

/// Parse CSV from any reader. Rows are numbered from 1, excluding the header.
pub fn read_dataset<R: Read>(reader: R, name: impl Into<String>, schema: &CsvSchema) -> Result<Dataset> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(reader);

    let headers = rdr.headers().map_err(|e| Error::MalformedRow {
        row: 0,
        message: e.to_string(),
    })?;
    let column = |wanted: &str| {
        headers
            .iter()
            .position(|h| h == wanted)
            .ok_or_else(|| Error::MissingColumn(wanted.to_string()))
    };
    let (id_col, size_col, effort_col) = (column(&schema.id)?, column(&schema.size)?, column(&schema.effort)?);

    let mut records = Vec::new();
    for (i, rec) in rdr.records().enumerate() {
        let row = i + 1;
        let rec = rec.map_err(|e| Error::MalformedRow {
            row,
            message: match e.kind() {
                csv::ErrorKind::UnequalLengths { expected_len, len, .. } => {
                    format!("expected {expected_len} fields, found {len}")
                }
                _ => e.to_string(),
            },
        })?;
        let field = |idx: usize| rec.get(idx).unwrap_or("");

        let raw_id = field(id_col);
        let id = raw_id
            .parse::<u32>()
            .ok()
            .filter(|&v| v > 0)
            .ok_or_else(|| Error::InvalidValue {
                row,
                field: "project id",
                value: raw_id.to_string(),
                reason: "must be a positive integer",
            })?;
        let size_kloc = parse_positive(row, "size", field(size_col))?;
        let actual_effort_pm = parse_positive(row, "effort", field(effort_col))?;
        records.push(ProjectRecord {
            id,
            size_kloc,
            actual_effort_pm,
        });
    }
    Dataset::new(name, records)
}

fn parse_positive(row: usize, field: &'static str, raw: &str) -> Result<f64> {
    let value = raw.parse::<f64>().map_err(|_| Error::InvalidValue {
        row,
        field,
        value: raw.to_string(),
        reason: "not a number",
    })?;
    if !value.is_finite() || value <= 0.0 {
        return Err(Error::InvalidValue {
            row,
            field,
            value: raw.to_string(),
            reason: "must be finite and > 0",
        });
    }
    Ok(value)
}

/// Write a dataset as CSV using the given header names. Values are written
/// in shortest round-trip form, so [`read_dataset`] recovers them exactly.
pub fn write_dataset<W: Write>(dataset: &Dataset, writer: W, schema: &CsvSchema) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(writer);
    let write = |wtr: &mut csv::Writer<W>, fields: [&str; 3]| {
        wtr.write_record(fields).map_err(|e| match e.into_kind() {
            csv::ErrorKind::Io(io) => Error::Output(io),
            other => Error::Usage(format!("{other:?}")),
        })
    };
    write(&mut wtr, [&schema.id, &schema.size, &schema.effort])?;
    for r in dataset.records() {
        write(
            &mut wtr,
            [
                &r.id.to_string(),
                &r.size_kloc.to_string(),
                &r.actual_effort_pm.to_string(),
            ],
        )?;
    }
    wtr.flush()?;
    Ok(())
}

/// (project number, size in KLOC, actual effort in person-months)
const IVR_PROJECTS: [(u32, f64, f64); 24] = [
    (1, 16.2, 86.1),
    (2, 5.34, 24.02),
    (3, 7.6, 36.05),
    (4, 4.7, 20.74),
    (5, 3.1, 12.85),
    (6, 5.2, 23.3),
    (7, 6.8, 31.72),
    (8, 6.4, 29.59),
    (9, 7.2, 33.88),
    (10, 5.4, 24.34),
    (11, 8.5, 41.01),
    (12, 7.8, 37.15),
    (13, 12.5, 63.9),
    (14, 10.4, 51.71),
    (15, 9.5, 46.6),
    (16, 3.4, 14.29),
    (17, 6.8, 31.73),
    (18, 5.8, 26.42),
    (19, 7.4, 34.96),
    (20, 7.2, 33.88),
    (21, 8.6, 41.56),
    (22, 6.4, 29.59),
    (23, 10.6, 52.86),
    (24, 6.3, 29.06),
];

/// The 24 interactive-voice-response projects, in their published order.
pub fn builtin_ivr_dataset() -> Dataset {
    Dataset {
        name: "ivr".into(),
        records: IVR_PROJECTS
            .iter()
            .map(|&(id, size_kloc, actual_effort_pm)| ProjectRecord {
                id,
                size_kloc,
                actual_effort_pm,
            })
            .collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Column {
    Size,
    Effort,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ColumnStats {
    pub min: f64,
    pub max: f64,
    pub mean: f64,
    pub count: usize,
}

pub fn column_stats(dataset: &Dataset, column: Column) -> Result<ColumnStats> {
    let values = match column {
        Column::Size => dataset.sizes(),
        Column::Effort => dataset.efforts(),
    };
    if values.is_empty() {
        return Err(Error::EmptyDataset);
    }
    let (min, max, sum) = values
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY, 0.0), |(lo, hi, s), &v| {
            (lo.min(v), hi.max(v), s + v)
        });
    let count = values.len();
    // Rounding in the sum can push the mean a hair outside [min, max] for
    // near-constant columns.
    let mean = (sum / count as f64).clamp(min, max);
    Ok(ColumnStats { min, max, mean, count })
}
