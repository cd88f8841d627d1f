//! Accuracy metrics: magnitude of relative error (MRE), its mean (MMRE),
//! and PRED(p), the share of projects estimated within `p` of actual.
//!
//! ```text
//! MRE_i   = |actual_i - estimated_i| / actual_i
//! MMRE    = mean(MRE_i)
//! PRED(p) = #{ i : MRE_i <= p } / n
//! ```
//!
//! An estimate is conventionally called accurate when its MRE is at most
//! 25%. Ties at the threshold count as accurate.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::pipeline::{EstimationRow, TechniqueColumn};
use crate::{round_to, SCHEMA_VERSION};

pub const DEFAULT_THRESHOLD: f64 = 0.25;

pub fn mre(actual: f64, estimated: f64) -> Result<f64> {
    if !(actual > 0.0) || !actual.is_finite() {
        return Err(Error::InvalidActual(actual));
    }
    if !(estimated >= 0.0) || !estimated.is_finite() {
        return Err(Error::InvalidEstimate(estimated));
    }
    Ok((actual - estimated).abs() / actual)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ErrorPair {
    pub project_id: u32,
    pub actual: f64,
    pub estimated: f64,
    pub mre: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvaluationReport {
    /// Technique token, when the report was built from a technique column.
    pub technique: Option<String>,
    pub pairs: Vec<ErrorPair>,
    pub mmre: f64,
    pub threshold: f64,
    /// PRED(threshold), a fraction in `[0, 1]`.
    pub pred: f64,
    pub accurate_count: usize,
    /// Set when estimates are in transformed units but are compared
    /// against raw person-month actuals.
    pub unit_mismatch: bool,
}

pub fn evaluate(rows: &[EstimationRow], threshold: f64) -> Result<EvaluationReport> {
    if !(threshold > 0.0 && threshold < 1.0) {
        return Err(Error::InvalidThreshold(threshold));
    }
    if rows.is_empty() {
        return Err(Error::EmptyInput);
    }
    let pairs = rows
        .iter()
        .map(|r| {
            Ok(ErrorPair {
                project_id: r.project_id,
                actual: r.actual_effort_pm,
                estimated: r.estimated_effort,
                mre: mre(r.actual_effort_pm, r.estimated_effort)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let n = pairs.len();
    let mmre = pairs.iter().map(|p| p.mre).sum::<f64>() / n as f64;
    let accurate_count = pairs.iter().filter(|p| p.mre <= threshold).count();
    Ok(EvaluationReport {
        technique: None,
        pairs,
        mmre,
        threshold,
        pred: accurate_count as f64 / n as f64,
        accurate_count,
        unit_mismatch: false,
    })
}

/// Evaluate one technique column, flagging a unit mismatch for any
/// technique other than the identity.
pub fn evaluate_column(column: &TechniqueColumn, threshold: f64) -> Result<EvaluationReport> {
    let mut report = evaluate(&column.rows, threshold)?;
    report.technique = Some(column.spec().to_string());
    report.unit_mismatch = !column.spec().is_identity();
    Ok(report)
}

impl EvaluationReport {
    pub fn warning(&self) -> Option<String> {
        self.unit_mismatch.then(|| {
            format!(
                "technique `{}` produces estimates in transformed units; MRE against person-month actuals is not dimensionally meaningful",
                self.technique.as_deref().unwrap_or("?")
            )
        })
    }

    pub fn to_json(&self, decimals: usize) -> serde_json::Value {
        json!({
            "technique": self.technique,
            "pairs": self.pairs.iter().map(|p| json!({
                "project_id": p.project_id,
                "actual": p.actual,
                "estimated": round_to(p.estimated, decimals),
                "mre": round_to(p.mre, decimals),
            })).collect::<Vec<_>>(),
            "mmre": round_to(self.mmre, decimals),
            "threshold": self.threshold,
            "pred": round_to(self.pred, decimals),
            "accurate_count": self.accurate_count,
            "count": self.pairs.len(),
            "unit_mismatch": self.unit_mismatch,
        })
    }

    /// Aligned plain-text rendering for terminals.
    pub fn to_text(&self, decimals: usize) -> String {
        let mut out = String::new();
        if let Some(t) = &self.technique {
            let _ = writeln!(out, "technique: {t}");
        }
        let _ = writeln!(
            out,
            "{:>8}  {:>12}  {:>12}  {:>10}",
            "project", "actual", "estimated", "mre"
        );
        for p in &self.pairs {
            let _ = writeln!(
                out,
                "{:>8}  {:>12.*}  {:>12.*}  {:>10.*}",
                p.project_id,
                decimals,
                round_to(p.actual, decimals),
                decimals,
                round_to(p.estimated, decimals),
                decimals,
                round_to(p.mre, decimals),
            );
        }
        let pct = (self.threshold * 100.0).round();
        let _ = writeln!(out, "MMRE: {:.*}", decimals, round_to(self.mmre, decimals));
        let _ = writeln!(
            out,
            "PRED({pct}): {:.*} ({}/{} accurate)",
            decimals,
            round_to(self.pred, decimals),
            self.accurate_count,
            self.pairs.len()
        );
        out
    }
}

pub fn reports_to_json(reports: &[EvaluationReport], decimals: usize) -> serde_json::Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "kind": "metrics",
        "decimals": decimals,
        "reports": reports.iter().map(|r| r.to_json(decimals)).collect::<Vec<_>>(),
    })
}
