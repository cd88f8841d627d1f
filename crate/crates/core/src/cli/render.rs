use std::fmt::Write as _;

use serde_json::json;

use super::Format;
use crate::dataset::{column_stats, Column, ColumnStats, Dataset};
use crate::error::Result;
use crate::evaluation::{reports_to_json, EvaluationReport};
use crate::model::{Calibration, CocomoModel};
use crate::pipeline::ComparisonTable;
use crate::{round_to, SCHEMA_VERSION};

pub const RED: &str = "31";
pub const YELLOW: &str = "33";
const BOLD: &str = "1";

pub fn paint(text: &str, code: &str, color: bool) -> String {
    if color {
        format!("\x1b[{code}m{text}\x1b[0m")
    } else {
        text.to_string()
    }
}

fn num(v: f64, decimals: usize) -> String {
    format!("{:.*}", decimals, round_to(v, decimals))
}

fn json_text(value: serde_json::Value) -> Result<String> {
    let mut s = serde_json::to_string_pretty(&value)?;
    s.push('\n');
    Ok(s)
}

pub fn dataset_info(data: &Dataset, fmt: Format, decimals: usize, color: bool) -> Result<String> {
    let stats: Option<(ColumnStats, ColumnStats)> = if data.is_empty() {
        None
    } else {
        Some((column_stats(data, Column::Size)?, column_stats(data, Column::Effort)?))
    };
    let mut out = String::new();
    match fmt {
        Format::Json => {
            let stats = stats.map(|(s, e)| json!({ "size": s, "effort": e }));
            return json_text(json!({
                "schema_version": SCHEMA_VERSION,
                "kind": "dataset_info",
                "dataset": data.name(),
                "count": data.len(),
                "stats": stats,
            }));
        }
        Format::Csv => {
            out.push_str("column,count,min,max,mean\n");
            if let Some((s, e)) = stats {
                for (name, st) in [("size", s), ("effort", e)] {
                    let _ = writeln!(
                        out,
                        "{name},{},{},{},{}",
                        st.count,
                        num(st.min, decimals),
                        num(st.max, decimals),
                        num(st.mean, decimals)
                    );
                }
            }
        }
        Format::Table => {
            let _ = writeln!(out, "dataset: {}", data.name());
            let _ = writeln!(out, "records: {}", data.len());
            match stats {
                None => out.push_str("stats: (suppressed, dataset is empty)\n"),
                Some((s, e)) => {
                    let header = format!("{:<8}  {:>12}  {:>12}  {:>12}", "column", "min", "max", "mean");
                    let _ = writeln!(out, "{}", paint(&header, BOLD, color));
                    for (name, st) in [("size", s), ("effort", e)] {
                        let _ = writeln!(
                            out,
                            "{name:<8}  {:>12}  {:>12}  {:>12}",
                            num(st.min, decimals),
                            num(st.max, decimals),
                            num(st.mean, decimals)
                        );
                    }
                }
            }
        }
    }
    Ok(out)
}

pub fn estimate(model: &CocomoModel, size: f64, effort: f64, fmt: Format, decimals: usize) -> Result<String> {
    Ok(match fmt {
        Format::Table => format!("{}\n", num(effort, decimals)),
        Format::Csv => format!("size_kloc,estimated_effort\n{size},{}\n", num(effort, decimals)),
        Format::Json => json_text(json!({
            "schema_version": SCHEMA_VERSION,
            "kind": "estimate",
            "model": model,
            "size_kloc": size,
            "estimated_effort": round_to(effort, decimals),
        }))?,
    })
}

pub fn comparison(table: &ComparisonTable, fmt: Format, decimals: usize, color: bool) -> Result<String> {
    match fmt {
        Format::Csv => Ok(table.to_csv(decimals)),
        Format::Json => json_text(table.to_json(decimals)),
        Format::Table => {
            let mut out = String::new();
            let _ = writeln!(out, "dataset: {}", table.dataset);
            let _ = writeln!(out, "model: {}", table.model);
            let names: Vec<String> = table.columns.iter().map(|c| c.spec().to_string()).collect();
            let width = names
                .iter()
                .map(String::len)
                .max()
                .unwrap_or(0)
                .max(decimals + 6)
                .max(10);
            let mut header = format!("{:>8}  {:>10}", "project", "kloc");
            for n in &names {
                let _ = write!(header, "  {n:>width$}");
            }
            let _ = writeln!(out, "{}", paint(&header, BOLD, color));
            for (i, id) in table.project_ids().iter().enumerate() {
                let _ = write!(out, "{id:>8}  {:>10}", table.columns[0].rows[i].raw_size);
                for c in &table.columns {
                    let _ = write!(out, "  {:>width$}", num(c.rows[i].estimated_effort, decimals));
                }
                out.push('\n');
            }
            Ok(out)
        }
    }
}

pub fn metrics(reports: &[EvaluationReport], fmt: Format, decimals: usize) -> Result<String> {
    match fmt {
        Format::Json => json_text(reports_to_json(reports, decimals)),
        Format::Csv => {
            let mut out = String::from("technique,project_id,actual,estimated,mre\n");
            for r in reports {
                let t = r.technique.as_deref().unwrap_or("");
                for p in &r.pairs {
                    let _ = writeln!(
                        out,
                        "{t},{},{},{},{}",
                        p.project_id,
                        p.actual,
                        num(p.estimated, decimals),
                        num(p.mre, decimals)
                    );
                }
            }
            Ok(out)
        }
        Format::Table => Ok(reports
            .iter()
            .map(|r| r.to_text(decimals))
            .collect::<Vec<_>>()
            .join("\n")),
    }
}

pub fn calibration(cal: &Calibration, fmt: Format, decimals: usize) -> Result<String> {
    let (a, b) = (cal.model.a(), cal.model.b());
    Ok(match fmt {
        Format::Table => format!(
            "a: {}\nb: {}\nr_squared (log space): {}\nrss (log space): {}\nn: {}\n",
            num(a, decimals),
            num(b, decimals),
            num(cal.r_squared, decimals),
            num(cal.rss, decimals),
            cal.n
        ),
        Format::Csv => format!(
            "a,b,r_squared,rss,n\n{},{},{},{},{}\n",
            num(a, decimals),
            num(b, decimals),
            num(cal.r_squared, decimals),
            num(cal.rss, decimals),
            cal.n
        ),
        Format::Json => json_text(json!({
            "schema_version": SCHEMA_VERSION,
            "kind": "calibration",
            "a": a,
            "b": b,
            "r_squared": cal.r_squared,
            "rss": cal.rss,
            "n": cal.n,
        }))?,
    })
}
