//! Named strategies for producing `(a, b)` on a time grid.

use super::{
    solve_constant, solve_lmsz, solve_numeric, solve_rabi_detuned, AmplitudePair, TwoLevelField,
};
use crate::scenario::Scenario;
use crate::{Error, Result};

/// Produces the pair, referenced to the scenario's start time, at each
/// requested time (all `>=` the start time).
pub trait PairSolver: Send + Sync {
    fn name(&self) -> &'static str;
    fn solve(&self, field: TwoLevelField<'_>, times: &[f64], tol: f64) -> Result<Vec<AmplitudePair>>;
}

/// Closed forms; tabulated fields fall back to the integrator.
#[derive(Debug, Default, Clone, Copy)]
pub struct AnalyticSolver;

/// Adaptive Runge-Kutta integration for every field.
#[derive(Debug, Default, Clone, Copy)]
pub struct NumericSolver;

fn check_times(scenario: &Scenario, times: &[f64]) -> Result<f64> {
    let start = scenario.start_time();
    let hi = scenario.end_time().unwrap_or(f64::INFINITY);
    for &t in times {
        if !(t >= start && t <= hi) {
            return Err(Error::Range { t, lo: start, hi });
        }
    }
    Ok(start)
}

impl PairSolver for NumericSolver {
    fn name(&self) -> &'static str {
        "numeric"
    }

    fn solve(&self, field: TwoLevelField<'_>, times: &[f64], tol: f64) -> Result<Vec<AmplitudePair>> {
        let start = check_times(field.scenario, times)?;
        let last = times.iter().copied().fold(start, f64::max);
        if last == start {
            return Ok(times.iter().map(|&t| AmplitudePair::identity(t)).collect());
        }
        let sol = solve_numeric(field, start, last, tol)?;
        times.iter().map(|&t| sol.at(t)).collect()
    }
}

impl PairSolver for AnalyticSolver {
    fn name(&self) -> &'static str {
        "analytic"
    }

    fn solve(&self, field: TwoLevelField<'_>, times: &[f64], tol: f64) -> Result<Vec<AmplitudePair>> {
        let start = check_times(field.scenario, times)?;
        let on = if field.with_splitting { 1.0 } else { 0.0 };
        match *field.scenario {
            Scenario::Constant { splitting, coupling } => Ok(times
                .iter()
                .map(|&t| solve_constant(on * splitting, coupling, t))
                .collect()),
            Scenario::Rabi {
                splitting,
                coupling,
                drive_freq,
            } => Ok(times
                .iter()
                .map(|&t| solve_rabi_detuned(on * splitting, coupling, drive_freq, t))
                .collect()),
            Scenario::Lmsz {
                sweep_rate,
                coupling,
                tau_i,
                ..
            } => {
                if field.with_splitting {
                    let root = sweep_rate.sqrt();
                    times
                        .iter()
                        .map(|&t| solve_lmsz(sweep_rate, coupling, tau_i, root * t))
                        .collect()
                } else {
                    // constant coupling alone: the constant-field pair, shifted
                    Ok(times
                        .iter()
                        .map(|&t| AmplitudePair {
                            t,
                            ..solve_constant(0.0, coupling, t - start)
                        })
                        .collect())
                }
            }
            Scenario::Tabulated { .. } => NumericSolver.solve(field, times, tol),
        }
    }
}

type Factory = fn() -> Box<dyn PairSolver>;

const REGISTRY: &[(&str, Factory)] = &[
    ("analytic", || Box::new(AnalyticSolver)),
    ("numeric", || Box::new(NumericSolver)),
];

/// Solver registered under `name`.
pub fn pair_solver(name: &str) -> Result<Box<dyn PairSolver>> {
    REGISTRY
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, make)| make())
        .ok_or_else(|| Error::Unknown {
            kind: "solver",
            name: name.to_string(),
        })
}

pub fn pair_solver_names() -> Vec<&'static str> {
    REGISTRY.iter().map(|(n, _)| *n).collect()
}
