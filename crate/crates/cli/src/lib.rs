//! Config-driven front end over `glauber-core`: reads an experiment, runs
//! the requested task and writes a CSV plus a `.meta.json` sidecar.

pub mod config;
pub mod task;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use glauber_core::su2::pair_solver;
use serde_json::json;
use thiserror::Error;

pub use config::{Diagnostic, ExperimentConfig, TaskKind};
pub use task::{task_for, Table, Task};

/// Overrides the directory of `output_path`.
pub const OUTPUT_DIR_ENV: &str = "GLAUBER_OUTPUT_DIR";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),
    #[error("invalid config:\n{}", format_diagnostics(.0))]
    Invalid(Vec<Diagnostic>),
    #[error("solver error: {0}")]
    Solver(#[from] glauber_core::Error),
    #[error("I/O error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Invalid(_) => 2,
            CliError::Solver(_) => 3,
            CliError::Io { .. } => 4,
        }
    }
}

pub fn format_diagnostics(diags: &[Diagnostic]) -> String {
    diags.iter().map(|d| format!("  {d}")).collect::<Vec<_>>().join("\n")
}

/// Files written by one run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub csv: PathBuf,
    pub meta: PathBuf,
    pub rows: usize,
    pub max_norm_defect: f64,
}

/// Where the CSV goes: `output_path`, or its file name inside `dir`.
pub fn resolve_output(output_path: &str, dir: Option<&Path>) -> PathBuf {
    let p = Path::new(output_path);
    match dir {
        Some(d) => d.join(p.file_name().unwrap_or(p.as_os_str())),
        None => p.to_path_buf(),
    }
}

/// Fixed formatting with 17 significant digits.
pub fn format_value(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn render_csv(table: &Table) -> String {
    let mut out = table.header.join(",");
    out.push('\n');
    for row in &table.rows {
        for (i, v) in row.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "{}", format_value(*v));
        }
        out.push('\n');
    }
    out
}

/// Runs a validated task without touching the file system.
pub fn compute(cfg: &ExperimentConfig) -> Result<Table, CliError> {
    let diags = cfg.validate();
    if !diags.is_empty() {
        return Err(CliError::Invalid(diags));
    }
    let solver = pair_solver(&cfg.solver)?;
    Ok(task_for(cfg.task).execute(cfg, solver.as_ref())?)
}

pub fn run(cfg: &ExperimentConfig, out_dir: Option<&Path>) -> Result<RunReport, CliError> {
    let table = compute(cfg)?;
    let csv = resolve_output(&cfg.output_path, out_dir);
    let mut meta_name = csv.file_name().unwrap_or_default().to_os_string();
    meta_name.push(".meta.json");
    let meta = csv.with_file_name(meta_name);
    let io = |path: &Path| {
        let path = path.to_path_buf();
        move |source| CliError::Io { path, source }
    };
    if let Some(parent) = csv.parent().filter(|p| !p.as_os_str().is_empty()) {
        std::fs::create_dir_all(parent).map_err(io(parent))?;
    }
    std::fs::write(&csv, render_csv(&table)).map_err(io(&csv))?;
    let sidecar = json!({
        "tool": env!("CARGO_PKG_NAME"),
        "version": env!("CARGO_PKG_VERSION"),
        "config": cfg,
        "solver": cfg.solver,
        "tolerance": {"rtol": cfg.tolerance, "atol": cfg.tolerance},
        "columns": table.header,
        "rows": table.rows.len(),
        "max_norm_defect": table.max_norm_defect,
    });
    let mut text = serde_json::to_string_pretty(&sidecar).expect("sidecar serializes");
    text.push('\n');
    std::fs::write(&meta, text).map_err(io(&meta))?;
    Ok(RunReport {
        csv,
        meta,
        rows: table.rows.len(),
        max_norm_defect: table.max_norm_defect,
    })
}
