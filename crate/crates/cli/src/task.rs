//! The computations behind each `task` value, looked up by name.

use glauber_core::observables::{expectation_in_block, noon_state, transition_in_block, NoonSpec, Observable};
use glauber_core::oscillator::{block_from_pair, coordinate_kernel, KernelPoint, ModelKind};
use glauber_core::su2::{AmplitudePair, PairSolver};
use glauber_core::Result;

use crate::config::{CompareQuantity, ExperimentConfig, TaskKind};

/// Rows of one output file.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
    /// Largest `||a|² + |b|² - 1|` among the pairs used.
    pub max_norm_defect: f64,
}

pub trait Task: Send + Sync {
    fn kind(&self) -> TaskKind;
    /// Assumes `cfg.validate()` came back empty.
    fn execute(&self, cfg: &ExperimentConfig, solver: &dyn PairSolver) -> Result<Table>;
}

static REGISTRY: [&dyn Task; 5] = [&Propagator, &Energy, &Transition, &Kernel, &Compare];

pub fn task_for(kind: TaskKind) -> &'static dyn Task {
    *REGISTRY
        .iter()
        .find(|t| t.kind() == kind)
        .expect("every task kind is registered")
}

fn pairs(kind: ModelKind, cfg: &ExperimentConfig, solver: &dyn PairSolver, times: &[f64]) -> Result<(Vec<AmplitudePair>, f64)> {
    let pairs = solver.solve(kind.field(&cfg.scenario), times, cfg.tolerance)?;
    let defect = pairs.iter().map(|p| p.norm_defect().abs()).fold(0.0, f64::max);
    Ok((pairs, defect))
}

fn energies(kind: ModelKind, cfg: &ExperimentConfig, spec: NoonSpec, pairs: &[AmplitudePair]) -> Result<Vec<f64>> {
    let state = noon_state(spec)?;
    pairs
        .iter()
        .map(|p| {
            let block = block_from_pair(kind, &cfg.scenario, spec.n, *p)?;
            Ok(expectation_in_block(kind, &cfg.scenario, &state, Observable::Energy, &block)?.re)
        })
        .collect()
}

fn transitions(kind: ModelKind, cfg: &ExperimentConfig, n: u32, pairs: &[AmplitudePair]) -> Result<Vec<f64>> {
    pairs
        .iter()
        .map(|p| Ok(transition_in_block(&block_from_pair(kind, &cfg.scenario, n, *p)?)))
        .collect()
}

fn required_n(cfg: &ExperimentConfig) -> u32 {
    cfg.n_excitations.expect("validated config has N")
}

fn required_noon(cfg: &ExperimentConfig) -> NoonSpec {
    cfg.noon.expect("validated config has noon")
}

struct Propagator;

impl Task for Propagator {
    fn kind(&self) -> TaskKind {
        TaskKind::Propagator
    }

    fn execute(&self, cfg: &ExperimentConfig, solver: &dyn PairSolver) -> Result<Table> {
        let times = cfg.grid.points();
        let (pairs, defect) = pairs(cfg.model, cfg, solver, &times)?;
        let rows = times
            .iter()
            .zip(&pairs)
            .map(|(&t, p)| vec![t, p.a.re, p.a.im, p.b.re, p.b.im, p.norm_defect()])
            .collect();
        Ok(Table {
            header: vec!["t", "re_a", "im_a", "re_b", "im_b", "norm_defect"],
            rows,
            max_norm_defect: defect,
        })
    }
}

struct Energy;

impl Task for Energy {
    fn kind(&self) -> TaskKind {
        TaskKind::Energy
    }

    fn execute(&self, cfg: &ExperimentConfig, solver: &dyn PairSolver) -> Result<Table> {
        let times = cfg.grid.points();
        let (pairs, defect) = pairs(cfg.model, cfg, solver, &times)?;
        let spec = required_noon(cfg);
        let (header, rows) = match &cfg.theta_sweep {
            None => {
                let e = energies(cfg.model, cfg, spec, &pairs)?;
                (vec!["t", "E"], times.iter().zip(e).map(|(&t, e)| vec![t, e]).collect())
            }
            Some(axis) => {
                let mut rows = Vec::new();
                for theta in axis.points() {
                    let e = energies(cfg.model, cfg, NoonSpec { theta, ..spec }, &pairs)?;
                    rows.extend(times.iter().zip(e).map(|(&t, e)| vec![theta, t, e]));
                }
                (vec!["theta", "t", "E"], rows)
            }
        };
        Ok(Table {
            header,
            rows,
            max_norm_defect: defect,
        })
    }
}

struct Transition;

impl Task for Transition {
    fn kind(&self) -> TaskKind {
        TaskKind::Transition
    }

    fn execute(&self, cfg: &ExperimentConfig, solver: &dyn PairSolver) -> Result<Table> {
        let times = cfg.grid.points();
        let (pairs, defect) = pairs(cfg.model, cfg, solver, &times)?;
        let p = transitions(cfg.model, cfg, required_n(cfg), &pairs)?;
        Ok(Table {
            header: vec!["t", "P"],
            rows: times.iter().zip(p).map(|(&t, p)| vec![t, p]).collect(),
            max_norm_defect: defect,
        })
    }
}

struct Kernel;

impl Task for Kernel {
    fn kind(&self) -> TaskKind {
        TaskKind::Kernel
    }

    fn execute(&self, cfg: &ExperimentConfig, solver: &dyn PairSolver) -> Result<Table> {
        let spec = cfg.kernel.expect("validated config has kernel");
        let n = required_n(cfg);
        let times = cfg.grid.points();
        let (pairs, defect) = pairs(cfg.model, cfg, solver, &times)?;
        let (xs1, xs2) = (spec.x1.points(), spec.x2.points());
        let mut rows = Vec::with_capacity(times.len() * xs1.len() * xs2.len());
        for (&t, p) in times.iter().zip(&pairs) {
            let block = block_from_pair(cfg.model, &cfg.scenario, n, *p)?;
            for &x1 in &xs1 {
                for &x2 in &xs2 {
                    let point = KernelPoint {
                        primed: (x1, x2),
                        unprimed: spec.source,
                    };
                    let k = coordinate_kernel(&block, point, spec.scales)?;
                    rows.push(vec![t, x1, x2, k.re, k.im]);
                }
            }
        }
        Ok(Table {
            header: vec!["t", "x1", "x2", "re", "im"],
            rows,
            max_norm_defect: defect,
        })
    }
}

struct Compare;

impl Task for Compare {
    fn kind(&self) -> TaskKind {
        TaskKind::Compare
    }

    fn execute(&self, cfg: &ExperimentConfig, solver: &dyn PairSolver) -> Result<Table> {
        let times = cfg.grid.points();
        let (amp_pairs, d1) = pairs(ModelKind::Amplifier, cfg, solver, &times)?;
        let (std_pairs, d2) = pairs(ModelKind::Standard, cfg, solver, &times)?;
        let quantity = cfg.compare.unwrap_or_default();
        let (header, amp, std) = match quantity {
            CompareQuantity::Energy => {
                let spec = required_noon(cfg);
                (
                    vec!["t", "E_amplifier", "E_standard"],
                    energies(ModelKind::Amplifier, cfg, spec, &amp_pairs)?,
                    energies(ModelKind::Standard, cfg, spec, &std_pairs)?,
                )
            }
            CompareQuantity::Transition => {
                let n = required_n(cfg);
                (
                    vec!["t", "P_amplifier", "P_standard"],
                    transitions(ModelKind::Amplifier, cfg, n, &amp_pairs)?,
                    transitions(ModelKind::Standard, cfg, n, &std_pairs)?,
                )
            }
        };
        let rows = (0..times.len()).map(|i| vec![times[i], amp[i], std[i]]).collect();
        Ok(Table {
            header,
            rows,
            max_norm_defect: d1.max(d2),
        })
    }
}
