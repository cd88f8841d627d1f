//! The `effort-prep` command-line front end.
//!
//! [`run`] takes the argument list and output sinks explicitly so the whole
//! command surface can be driven in-process by tests. Exit status: 0 on
//! success, 2 for usage or validation errors, 1 for everything else.

mod render;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::chart::LineChart;
use crate::dataset::{builtin_ivr_dataset, load_dataset, write_dataset, CsvSchema, Dataset};
use crate::error::{Error, Result};
use crate::evaluation::{evaluate_column, DEFAULT_THRESHOLD};
use crate::model::{calibrate, CocomoModel};
use crate::pipeline::compare_techniques;
use crate::preprocess::TransformSpec;
use crate::round_to;

pub const NO_COLOR_ENV: &str = "EFFORT_PREP_NO_COLOR";

#[derive(Debug, Parser)]
#[command(
    name = "effort-prep",
    version,
    about = "Preprocess project sizes and estimate effort with basic COCOMO"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Use the built-in 24-project IVR dataset (the default source).
    #[arg(long, global = true)]
    pub builtin: bool,
    /// Read projects from a CSV file.
    #[arg(long, global = true, value_name = "PATH")]
    pub input: Option<PathBuf>,
    /// CSV header names for id, size and effort.
    #[arg(long, global = true, value_name = "ID,SIZE,EFFORT")]
    pub columns: Option<String>,
    /// Comma-separated preprocessors: none, norm[:pad=<real>], log[:base=<e|2|10>].
    #[arg(long, global = true, value_delimiter = ',', value_parser = parse_technique)]
    pub techniques: Vec<TransformSpec>,
    /// organic, semi, embedded or custom:a=<real>,b=<real>.
    #[arg(long, global = true, default_value = "organic", value_parser = parse_mode)]
    pub mode: CocomoModel,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[arg(long, global = true, default_value_t = 4, value_parser = clap::value_parser!(u8).range(0..=12))]
    pub decimals: u8,
    /// Output file (directory for `plot`).
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Inspect or export a dataset.
    Dataset {
        #[command(subcommand)]
        action: DatasetAction,
    },
    /// Estimate effort for a single size in KLOC.
    Estimate {
        #[arg(allow_negative_numbers = true)]
        size: f64,
    },
    /// Estimate every project under each technique, side by side.
    Compare,
    /// MRE, MMRE and PRED for each technique against actual effort.
    Metrics {
        #[arg(long, default_value_t = DEFAULT_THRESHOLD)]
        threshold: f64,
    },
    /// Fit (a, b) by least squares in log-log space.
    Calibrate,
    /// Write one SVG chart and companion CSV per technique.
    Plot,
}

#[derive(Debug, Subcommand)]
pub enum DatasetAction {
    /// Record count and per-column statistics.
    Info { path: Option<PathBuf> },
    /// Write the dataset as CSV.
    Export { path: Option<PathBuf> },
}

fn parse_technique(s: &str) -> std::result::Result<TransformSpec, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_mode(s: &str) -> std::result::Result<CocomoModel, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Whether terminal styling should be used for a stream.
pub fn color_enabled(is_terminal: bool) -> bool {
    is_terminal && std::env::var_os(NO_COLOR_ENV).is_none()
}

/// Parse `args` (including the program name) and execute, returning the
/// process exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write, color: bool) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, stdout, stderr, color) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "{}: {e}", render::paint("error", render::RED, color));
            if e.is_usage() {
                2
            } else {
                1
            }
        }
    }
}

struct Ctx<'a> {
    g: &'a GlobalArgs,
    decimals: usize,
    color: bool,
}

impl Ctx<'_> {
    fn techniques(&self) -> Vec<TransformSpec> {
        if self.g.techniques.is_empty() {
            TransformSpec::table3_defaults()
        } else {
            self.g.techniques.clone()
        }
    }

    fn schema(&self) -> Result<CsvSchema> {
        let Some(spec) = &self.g.columns else {
            return Ok(CsvSchema::default());
        };
        let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
        match parts.as_slice() {
            [id, size, effort] if !id.is_empty() && !size.is_empty() && !effort.is_empty() => Ok(CsvSchema {
                id: id.to_string(),
                size: size.to_string(),
                effort: effort.to_string(),
            }),
            _ => Err(Error::Usage(format!("--columns expects ID,SIZE,EFFORT, got `{spec}`"))),
        }
    }

    fn dataset(&self, positional: Option<&Path>) -> Result<Dataset> {
        let path = positional.or(self.g.input.as_deref());
        match path {
            Some(_) if self.g.builtin => Err(Error::Usage("--builtin conflicts with an input path".into())),
            Some(p) => load_dataset(p, &self.schema()?),
            None => Ok(builtin_ivr_dataset()),
        }
    }
}

fn execute(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write, color: bool) -> Result<()> {
    let ctx = Ctx {
        g: &cli.global,
        decimals: cli.global.decimals as usize,
        color,
    };
    let fmt = cli.global.format;

    let output = match &cli.command {
        Command::Dataset { action } => match action {
            DatasetAction::Info { path } => {
                let data = ctx.dataset(path.as_deref())?;
                render::dataset_info(&data, fmt, ctx.decimals, ctx.color)?
            }
            DatasetAction::Export { path } => {
                let data = ctx.dataset(path.as_deref())?;
                let mut buf = Vec::new();
                write_dataset(&data, &mut buf, &ctx.schema()?)?;
                String::from_utf8(buf).expect("csv writer emits UTF-8")
            }
        },
        Command::Estimate { size } => {
            let size = *size;
            if !(size >= 0.0) || !size.is_finite() {
                return Err(Error::Usage(format!(
                    "size must be a non-negative number of KLOC, got {size}"
                )));
            }
            let effort = cli.global.mode.estimate(size)?;
            render::estimate(&cli.global.mode, size, effort, fmt, ctx.decimals)?
        }
        Command::Compare => {
            let data = ctx.dataset(None)?;
            let table = compare_techniques(&data, &ctx.techniques(), &cli.global.mode)?;
            render::comparison(&table, fmt, ctx.decimals, ctx.color)?
        }
        Command::Metrics { threshold } => {
            let data = ctx.dataset(None)?;
            let table = compare_techniques(&data, &ctx.techniques(), &cli.global.mode)?;
            let reports = table
                .columns
                .iter()
                .map(|c| evaluate_column(c, *threshold))
                .collect::<Result<Vec<_>>>()?;
            for w in reports.iter().filter_map(|r| r.warning()) {
                writeln!(stderr, "{}: {w}", render::paint("warning", render::YELLOW, color))?;
            }
            render::metrics(&reports, fmt, ctx.decimals)?
        }
        Command::Calibrate => {
            let data = ctx.dataset(None)?;
            let cal = calibrate(&data)?;
            render::calibration(&cal, fmt, ctx.decimals)?
        }
        Command::Plot => {
            let data = ctx.dataset(None)?;
            let table = compare_techniques(&data, &ctx.techniques(), &cli.global.mode)?;
            let dir = cli.global.out.clone().unwrap_or_else(|| PathBuf::from("."));
            let written = plot(&table, &dir, ctx.decimals)?;
            let mut listing = String::new();
            for p in written {
                listing.push_str(&p.display().to_string());
                listing.push('\n');
            }
            stdout.write_all(listing.as_bytes())?;
            return Ok(());
        }
    };

    match &cli.global.out {
        Some(path) => fs::write(path, output)?,
        None => stdout.write_all(output.as_bytes())?,
    }
    Ok(())
}

fn title_case(kind: &str) -> String {
    let mut c = kind.chars();
    c.next()
        .map(|f| f.to_ascii_uppercase().to_string() + c.as_str())
        .unwrap_or_default()
}

/// Write `effort_<slug>.svg` and `effort_<slug>.csv` per technique into
/// `dir`, returning the paths in technique order.
pub fn plot(table: &crate::pipeline::ComparisonTable, dir: &Path, decimals: usize) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    for column in &table.columns {
        let spec = column.spec();
        let points: Vec<(u32, f64)> = column.rows.iter().map(|r| (r.project_id, r.estimated_effort)).collect();
        let title = format!(
            "Estimated effort using {} technique ({spec})",
            title_case(spec.kind_name())
        );
        let y_label = if spec.is_identity() {
            "estimated effort (person-months)"
        } else {
            "estimated effort (transformed units)"
        };
        let svg = LineChart {
            title: &title,
            x_label: "project",
            y_label,
            points: &points,
            decimals,
        }
        .render();

        let mut csv = String::from("project_id,estimated_effort\n");
        for (id, v) in &points {
            csv.push_str(&format!("{id},{:.*}\n", decimals, round_to(*v, decimals)));
        }

        let stem = format!("effort_{}", spec.slug());
        let svg_path = dir.join(format!("{stem}.svg"));
        let csv_path = dir.join(format!("{stem}.csv"));
        fs::write(&svg_path, svg)?;
        fs::write(&csv_path, csv)?;
        written.push(svg_path);
        written.push(csv_path);
    }
    Ok(written)
}
