//! Experiment configuration and its validation.

use std::fmt;
use std::path::Path;

use glauber_core::observables::NoonSpec;
use glauber_core::oscillator::{ModelKind, MAX_KERNEL_N};
use glauber_core::scenario::Scenario;
use glauber_core::su2::pair_solver_names;
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const DEFAULT_TOLERANCE: f64 = 1e-12;
pub const TOLERANCE_RANGE: (f64, f64) = (1e-13, 1e-4);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TaskKind {
    Propagator,
    Energy,
    Transition,
    Kernel,
    Compare,
}

impl TaskKind {
    pub fn name(self) -> &'static str {
        match self {
            TaskKind::Propagator => "propagator",
            TaskKind::Energy => "energy",
            TaskKind::Transition => "transition",
            TaskKind::Kernel => "kernel",
            TaskKind::Compare => "compare",
        }
    }
}

/// What the `compare` task puts side by side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CompareQuantity {
    #[default]
    Energy,
    Transition,
}

/// Uniform grid `t_start, …, t_end` with `n_points` samples.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Grid {
    pub t_start: f64,
    pub t_end: f64,
    pub n_points: usize,
}

impl Grid {
    pub fn points(&self) -> Vec<f64> {
        linspace(self.t_start, self.t_end, self.n_points)
    }
}

/// Uniform axis `start, …, end`; a single point sits at `start`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Axis {
    pub start: f64,
    pub end: f64,
    pub n_points: usize,
}

impl Axis {
    pub fn points(&self) -> Vec<f64> {
        linspace(self.start, self.end, self.n_points)
    }
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..n)
            .map(|k| {
                if k == n - 1 {
                    hi
                } else {
                    lo + (hi - lo) * k as f64 / (n - 1) as f64
                }
            })
            .collect(),
    }
}

/// Coordinate kernel `⟨x₁, x₂|V(t)|source⟩` on a grid of final positions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KernelSpec {
    pub source: (f64, f64),
    pub x1: Axis,
    pub x2: Axis,
    #[serde(default = "unit_scales")]
    pub scales: (f64, f64),
}

fn unit_scales() -> (f64, f64) {
    (1.0, 1.0)
}

fn default_tolerance() -> f64 {
    DEFAULT_TOLERANCE
}

fn default_solver() -> String {
    "analytic".to_string()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub model: ModelKind,
    pub scenario: Scenario,
    pub task: TaskKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub noon: Option<NoonSpec>,
    /// Excitation number for the transition and kernel tasks.
    #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
    pub n_excitations: Option<u32>,
    pub grid: Grid,
    pub output_path: String,
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
    #[serde(default = "default_solver")]
    pub solver: String,
    /// Energy task only: repeat the trace for every `θ` of this axis.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta_sweep: Option<Axis>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kernel: Option<KernelSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub compare: Option<CompareQuantity>,
}

/// One violated invariant with the dotted path of the offending field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub path: String,
    pub message: String,
}

impl Diagnostic {
    fn new(path: impl Into<String>, message: impl Into<String>) -> Self {
        Diagnostic {
            path: path.into(),
            message: message.into(),
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.path, self.message)
    }
}

pub const PRESETS: [(&str, &str); 7] = [
    ("fig1", include_str!("../presets/fig1.json")),
    ("fig2a", include_str!("../presets/fig2a.json")),
    ("fig2b", include_str!("../presets/fig2b.json")),
    ("fig2c", include_str!("../presets/fig2c.json")),
    ("fig2d", include_str!("../presets/fig2d.json")),
    ("fig3a", include_str!("../presets/fig3a.json")),
    ("fig3b", include_str!("../presets/fig3b.json")),
];

pub fn preset_names() -> Vec<&'static str> {
    PRESETS.iter().map(|p| p.0).collect()
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_json(&text).map_err(|e| match e {
            CliError::Config(msg) => CliError::Config(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    pub fn preset(name: &str) -> Result<Self, CliError> {
        let text = PRESETS
            .iter()
            .find(|p| p.0 == name)
            .map(|p| p.1)
            .ok_or_else(|| {
                CliError::Config(format!("unknown preset `{name}` (known: {})", preset_names().join(", ")))
            })?;
        Self::from_json(text)
    }

    /// Every violated precondition of [`crate::run`]; empty iff the run can start.
    pub fn validate(&self) -> Vec<Diagnostic> {
        let mut out = Vec::new();
        let g = &self.grid;
        let mut grid_ok = true;
        if !(g.t_start.is_finite() && g.t_end.is_finite()) {
            out.push(Diagnostic::new("grid", "t_start and t_end must be finite"));
            grid_ok = false;
        } else if !(g.t_start < g.t_end) {
            out.push(Diagnostic::new("grid.t_start", "must be < grid.t_end"));
            grid_ok = false;
        }
        if g.n_points < 2 {
            out.push(Diagnostic::new("grid.n_points", "must be >= 2"));
        }

        let violations = self.scenario.violations();
        for v in &violations {
            out.push(Diagnostic::new(format!("scenario.{}", v.field), v.message.clone()));
        }
        if violations.is_empty() && grid_ok {
            let start = self.scenario.start_time();
            if g.t_start < start {
                out.push(Diagnostic::new(
                    "grid.t_start",
                    format!("must be >= {start}, where the {} scenario starts", self.scenario.variant_name()),
                ));
            }
            if let Some(end) = self.scenario.end_time() {
                if g.t_end > end {
                    out.push(Diagnostic::new(
                        "grid.t_end",
                        format!("must be <= {end}, where the {} scenario ends", self.scenario.variant_name()),
                    ));
                }
            }
        }

        let (lo, hi) = TOLERANCE_RANGE;
        if !(self.tolerance >= lo && self.tolerance <= hi) {
            out.push(Diagnostic::new("tolerance", format!("must lie in [{lo:e}, {hi:e}]")));
        }
        if !pair_solver_names().contains(&self.solver.as_str()) {
            out.push(Diagnostic::new(
                "solver",
                format!("unknown solver `{}` (known: {})", self.solver, pair_solver_names().join(", ")),
            ));
        }
        if self.output_path.trim().is_empty() {
            out.push(Diagnostic::new("output_path", "must not be empty"));
        }

        let needs_noon = match self.task {
            TaskKind::Energy => true,
            TaskKind::Compare => self.compare.unwrap_or_default() == CompareQuantity::Energy,
            _ => false,
        };
        let needs_n = match self.task {
            TaskKind::Transition | TaskKind::Kernel => true,
            TaskKind::Compare => self.compare.unwrap_or_default() == CompareQuantity::Transition,
            _ => false,
        };
        if needs_noon {
            match self.noon {
                None => out.push(Diagnostic::new("noon", format!("required by the {} task", self.task.name()))),
                Some(spec) => {
                    if spec.n == 0 {
                        out.push(Diagnostic::new("noon.N", "must be >= 1"));
                    }
                    if !spec.theta.is_finite() {
                        out.push(Diagnostic::new("noon.theta", "must be finite"));
                    }
                    if !spec.phi.is_finite() {
                        out.push(Diagnostic::new("noon.phi", "must be finite"));
                    }
                }
            }
        }
        if needs_n {
            match self.n_excitations {
                None => out.push(Diagnostic::new("N", format!("required by the {} task", self.task.name()))),
                Some(0) => out.push(Diagnostic::new("N", "must be >= 1")),
                Some(n) if self.task == TaskKind::Kernel && n > MAX_KERNEL_N => {
                    out.push(Diagnostic::new("N", format!("must be <= {MAX_KERNEL_N} for the kernel task")))
                }
                Some(_) => {}
            }
        }

        if let Some(sweep) = &self.theta_sweep {
            if self.task != TaskKind::Energy {
                out.push(Diagnostic::new("theta_sweep", "only allowed with the energy task"));
            }
            check_axis(&mut out, "theta_sweep", sweep);
        }
        if self.compare.is_some() && self.task != TaskKind::Compare {
            out.push(Diagnostic::new("compare", "only allowed with the compare task"));
        }
        match (&self.kernel, self.task) {
            (None, TaskKind::Kernel) => out.push(Diagnostic::new("kernel", "required by the kernel task")),
            (Some(_), t) if t != TaskKind::Kernel => {
                out.push(Diagnostic::new("kernel", "only allowed with the kernel task"))
            }
            (Some(k), _) => {
                check_axis(&mut out, "kernel.x1", &k.x1);
                check_axis(&mut out, "kernel.x2", &k.x2);
                if !(k.source.0.is_finite() && k.source.1.is_finite()) {
                    out.push(Diagnostic::new("kernel.source", "must be finite"));
                }
                if !(k.scales.0 > 0.0 && k.scales.1 > 0.0 && k.scales.0.is_finite() && k.scales.1.is_finite()) {
                    out.push(Diagnostic::new("kernel.scales", "must be positive"));
                }
            }
            (None, _) => {}
        }
        out
    }
}

fn check_axis(out: &mut Vec<Diagnostic>, path: &str, axis: &Axis) {
    if axis.n_points == 0 {
        out.push(Diagnostic::new(format!("{path}.n_points"), "must be >= 1"));
    }
    if !(axis.start.is_finite() && axis.end.is_finite()) {
        out.push(Diagnostic::new(path, "start and end must be finite"));
    } else if axis.n_points > 1 && !(axis.start < axis.end) {
        out.push(Diagnostic::new(format!("{path}.start"), "must be < end"));
    }
}
