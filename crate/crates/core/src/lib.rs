//! Software effort estimation with data preprocessing.
//!
//! A project's size (KLOC) is passed through one of three preprocessors
//! (identity, padded min-max scaling, or logarithm) and then through the
//! basic COCOMO equation `E = a * KLOC^b`. The crate also provides the
//! usual accuracy metrics (MRE, MMRE, PRED) and a log-space least-squares
//! calibrator for `(a, b)`.
//!
//! ```
//! use effort_prep::{builtin_ivr_dataset, compare_techniques, round_to, CocomoModel, TransformSpec};
//!
//! let data = builtin_ivr_dataset();
//! let table = compare_techniques(&data, &TransformSpec::table3_defaults(), &CocomoModel::organic())?;
//! let first: Vec<f64> = table.columns.iter().map(|c| round_to(c.rows[0].estimated_effort, 4)).collect();
//! assert_eq!(first, [44.6891, 2.2334, 7.0353]);
//! # Ok::<(), effort_prep::Error>(())
//! ```
//!
//! The `book/` directory next to this crate explains the concepts in more
//! depth; its code samples are compiled and run as doc-tests of this crate.

// `!(x > 0.0)` style checks are deliberate: NaN must fail them.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod chart;
pub mod cli;
pub mod dataset;
mod error;
pub mod evaluation;
pub mod model;
pub mod pipeline;
pub mod preprocess;

pub use dataset::{
    builtin_ivr_dataset, column_stats, load_dataset, read_dataset, write_dataset, Column, ColumnStats, CsvSchema,
    Dataset, ProjectRecord,
};
pub use error::{Error, Result};
pub use evaluation::{evaluate, evaluate_column, mre, EvaluationReport, DEFAULT_THRESHOLD};
pub use model::{calibrate, Calibration, CocomoMode, CocomoModel};
pub use pipeline::{compare_techniques, run_technique, ComparisonTable, EstimationRow, TechniqueColumn};
pub use preprocess::{fit, FittedTransform, LogBase, TransformSpec};

/// Version stamped into every JSON document the crate emits.
pub const SCHEMA_VERSION: u32 = 1;

/// Round half away from zero to `decimals` places.
pub fn round_to(value: f64, decimals: usize) -> f64 {
    let scale = 10f64.powi(decimals as i32);
    (value * scale).round() / scale
}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/dataset.md")]
    mod dataset {}
    #[doc = include_str!("../../../book/src/preprocessing.md")]
    mod preprocessing {}
    #[doc = include_str!("../../../book/src/cocomo.md")]
    mod cocomo {}
    #[doc = include_str!("../../../book/src/calibration.md")]
    mod calibration {}
    #[doc = include_str!("../../../book/src/evaluation.md")]
    mod evaluation {}
    #[doc = include_str!("../../../book/src/reproduction.md")]
    mod reproduction {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/formats.md")]
    mod formats {}
}
