//! Preprocess-then-estimate over a whole dataset, one column per technique.

use serde::Serialize;
use serde_json::json;

use crate::dataset::Dataset;
use crate::error::{Error, Result};
use crate::model::CocomoModel;
use crate::preprocess::{fit, FittedTransform, TransformSpec};
use crate::{round_to, SCHEMA_VERSION};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EstimationRow {
    pub project_id: u32,
    pub raw_size: f64,
    pub transformed_size: f64,
    /// Person-months for the identity technique, transformed units otherwise.
    pub estimated_effort: f64,
    pub actual_effort_pm: f64,
}

/// Every project estimated under one technique.
#[derive(Debug, Clone, PartialEq)]
pub struct TechniqueColumn {
    pub fitted: FittedTransform,
    pub rows: Vec<EstimationRow>,
}

impl TechniqueColumn {
    pub fn spec(&self) -> TransformSpec {
        self.fitted.spec()
    }

    /// Units of `estimated_effort` in this column.
    pub fn effort_units(&self) -> &'static str {
        if self.spec().is_identity() {
            "person-months"
        } else {
            "transformed"
        }
    }

    pub fn estimates(&self) -> Vec<f64> {
        self.rows.iter().map(|r| r.estimated_effort).collect()
    }
}

/// Fit `spec` once on the full size column, then estimate each project.
pub fn run_technique(dataset: &Dataset, spec: TransformSpec, model: &CocomoModel) -> Result<Vec<EstimationRow>> {
    run_column(dataset, spec, model).map(|c| c.rows)
}

pub fn run_column(dataset: &Dataset, spec: TransformSpec, model: &CocomoModel) -> Result<TechniqueColumn> {
    if dataset.is_empty() {
        return Err(Error::EmptyDataset);
    }
    let fitted = fit(spec, &dataset.sizes())?;
    let rows = dataset
        .records()
        .iter()
        .map(|r| {
            let transformed_size = fitted.apply(r.size_kloc)?;
            Ok(EstimationRow {
                project_id: r.id,
                raw_size: r.size_kloc,
                transformed_size,
                estimated_effort: model.estimate(transformed_size)?,
                actual_effort_pm: r.actual_effort_pm,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TechniqueColumn { fitted, rows })
}

/// Side-by-side estimates for several techniques, row-aligned by project.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonTable {
    pub dataset: String,
    pub model: CocomoModel,
    pub columns: Vec<TechniqueColumn>,
}

pub fn compare_techniques(dataset: &Dataset, specs: &[TransformSpec], model: &CocomoModel) -> Result<ComparisonTable> {
    if specs.is_empty() {
        return Err(Error::NoTechniques);
    }
    let columns = specs
        .iter()
        .map(|&spec| {
            run_column(dataset, spec, model).map_err(|e| Error::Technique {
                technique: spec.to_string(),
                source: Box::new(e),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ComparisonTable {
        dataset: dataset.name().to_string(),
        model: model.clone(),
        columns,
    })
}

impl ComparisonTable {
    pub fn project_ids(&self) -> Vec<u32> {
        self.columns[0].rows.iter().map(|r| r.project_id).collect()
    }

    pub fn column(&self, spec: TransformSpec) -> Option<&TechniqueColumn> {
        self.columns.iter().find(|c| c.spec() == spec)
    }

    /// CSV with `project_id,raw_kloc,est_<technique>...`, values rounded to
    /// `decimals` places.
    pub fn to_csv(&self, decimals: usize) -> String {
        let mut out = String::from("project_id,raw_kloc");
        for c in &self.columns {
            out.push_str(",est_");
            out.push_str(&c.spec().to_string());
        }
        out.push('\n');
        for (i, first) in self.columns[0].rows.iter().enumerate() {
            out.push_str(&format!("{},{}", first.project_id, first.raw_size));
            for c in &self.columns {
                out.push_str(&format!(
                    ",{:.*}",
                    decimals,
                    round_to(c.rows[i].estimated_effort, decimals)
                ));
            }
            out.push('\n');
        }
        out
    }

    /// The versioned JSON document; see the book's output-format chapter.
    pub fn to_json(&self, decimals: usize) -> serde_json::Value {
        let columns: Vec<_> = self
            .columns
            .iter()
            .map(|c| {
                json!({
                    "technique": c.spec(),
                    "units": c.effort_units(),
                    "rows": c.rows.iter().map(|r| json!({
                        "project_id": r.project_id,
                        "raw_size": r.raw_size,
                        "transformed_size": round_to(r.transformed_size, decimals),
                        "estimated_effort": round_to(r.estimated_effort, decimals),
                        "actual_effort_pm": r.actual_effort_pm,
                    })).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({
            "schema_version": SCHEMA_VERSION,
            "kind": "comparison",
            "dataset": self.dataset,
            "model": self.model,
            "decimals": decimals,
            "columns": columns,
        })
    }
}
