//! Expectation values for NOON-type initial states.
//!
//! Every value is computed by the matrix route: operators are assembled on
//! the `N` block from ladder actions, the state is evolved with the block
//! propagator and the result is contracted directly.

use std::f64::consts::FRAC_PI_4;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::fock::{self, Terms};
use crate::oscillator::{
    block_evolution, block_evolutions, BlockEvolution, ModelKind, SubspaceState,
};
use crate::scenario::Scenario;
use crate::su2::PairSolver;
use crate::{CMatrix, CVector, Complex64, Error, Result};

/// `cos θ |N,0⟩ + e^{iφ} sin θ |0,N⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NoonSpec {
    #[serde(rename = "N")]
    pub n: u32,
    pub theta: f64,
    #[serde(default)]
    pub phi: f64,
}

impl NoonSpec {
    pub fn new(n: u32, theta: f64, phi: f64) -> Self {
        NoonSpec { n, theta, phi }
    }

    /// The balanced state `θ = π/4`.
    pub fn balanced(n: u32, phi: f64) -> Self {
        NoonSpec::new(n, FRAC_PI_4, phi)
    }
}

pub fn noon_state(spec: NoonSpec) -> Result<SubspaceState> {
    if spec.n == 0 {
        return Err(Error::param("N", "must be at least 1"));
    }
    if !spec.theta.is_finite() || !spec.phi.is_finite() {
        return Err(Error::param("theta/phi", "must be finite"));
    }
    let n = spec.n as usize;
    let mut amps = CVector::zeros(n + 1);
    amps[0] = Complex64::new(spec.theta.cos(), 0.0);
    amps[n] += Complex64::from_polar(spec.theta.sin(), spec.phi);
    SubspaceState::new(spec.n, amps)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Observable {
    /// `(α†α - β†β)/2`
    Sz,
    /// `αβ†`
    ABdag,
    /// `α†β`
    AdagB,
    /// `S_z²`
    Sz2,
    /// `(αβ†)²`
    ABdag2,
    /// `(α†β)²`
    AdagB2,
    /// Instantaneous Hamiltonian of the model.
    Energy,
}

impl Observable {
    pub const ALL: [Observable; 7] = [
        Observable::Sz,
        Observable::ABdag,
        Observable::AdagB,
        Observable::Sz2,
        Observable::ABdag2,
        Observable::AdagB2,
        Observable::Energy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Observable::Sz => "sz",
            Observable::ABdag => "a_bdag",
            Observable::AdagB => "adag_b",
            Observable::Sz2 => "sz2",
            Observable::ABdag2 => "a_bdag2",
            Observable::AdagB2 => "adag_b2",
            Observable::Energy => "energy",
        }
    }

    /// Ladder-word form; `(Ω, ω)` only matter for the energy.
    pub fn terms(self, kind: ModelKind, splitting: f64, coupling: Complex64) -> Terms {
        let one = Complex64::new(1.0, 0.0);
        let q = Complex64::new(0.25, 0.0);
        match self {
            Observable::Sz => vec![(0.5 * one, fock::word("a+ a")), (-0.5 * one, fock::word("b+ b"))],
            Observable::ABdag => vec![(one, fock::word("a b+"))],
            Observable::AdagB => vec![(one, fock::word("a+ b"))],
            Observable::Sz2 => vec![
                (q, fock::word("a+ a a+ a")),
                (-2.0 * q, fock::word("a+ a b+ b")),
                (q, fock::word("b+ b b+ b")),
            ],
            Observable::ABdag2 => vec![(one, fock::word("a b+ a b+"))],
            Observable::AdagB2 => vec![(one, fock::word("a+ b a+ b"))],
            Observable::Energy => kind.hamiltonian_terms(splitting, coupling),
        }
    }

    /// The operator on the `N` block, with `H` evaluated at `t`.
    pub fn block(self, kind: ModelKind, scenario: &Scenario, n_total: u32, t: f64) -> Result<CMatrix> {
        let (splitting, coupling) = match self {
            Observable::Energy => scenario.evaluate(t)?,
            _ => (0.0, Complex64::new(0.0, 0.0)),
        };
        Ok(fock::block_matrix(n_total, &self.terms(kind, splitting, coupling)))
    }
}

impl fmt::Display for Observable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Observable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Observable::ALL
            .into_iter()
            .find(|o| o.name() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "observable",
                name: s.to_string(),
            })
    }
}

/// A labelled sequence of `(t, value)` with strictly increasing `t`.
#[derive(Debug, Clone, PartialEq)]
pub struct ObservableTrace {
    pub label: String,
    pub samples: Vec<(f64, Complex64)>,
}

impl ObservableTrace {
    pub fn new(label: impl Into<String>, samples: Vec<(f64, Complex64)>) -> Result<Self> {
        if samples.windows(2).any(|w| !(w[1].0 > w[0].0)) {
            return Err(Error::param("grid", "times must be strictly increasing"));
        }
        Ok(ObservableTrace {
            label: label.into(),
            samples,
        })
    }

    pub fn times(&self) -> Vec<f64> {
        self.samples.iter().map(|s| s.0).collect()
    }

    pub fn real(&self) -> Vec<f64> {
        self.samples.iter().map(|s| s.1.re).collect()
    }
}

/// `⟨ψ|O|ψ⟩`.
pub fn contract(op: &CMatrix, psi: &CVector) -> Complex64 {
    psi.dotc(&(op * psi))
}

/// `⟨Ψ(t)|O(t)|Ψ(t)⟩` for an evolved block.
pub fn expectation_in_block(
    kind: ModelKind,
    scenario: &Scenario,
    state0: &SubspaceState,
    obs: Observable,
    block: &BlockEvolution,
) -> Result<Complex64> {
    let psi = block.apply(state0);
    let op = obs.block(kind, scenario, state0.n_total, block.pair.t)?;
    Ok(contract(&op, &psi))
}

/// `⟨Ψ(t)|O|Ψ(t)⟩` at one time, closed-form pairs where available.
pub fn expectation(
    kind: ModelKind,
    scenario: &Scenario,
    state0: &SubspaceState,
    obs: Observable,
    t: f64,
) -> Result<Complex64> {
    let block = block_evolution(kind, scenario, state0.n_total, t)?;
    expectation_in_block(kind, scenario, state0, obs, &block)
}

/// The same expectation on a grid.
pub fn expectation_trace(
    kind: ModelKind,
    scenario: &Scenario,
    state0: &SubspaceState,
    obs: Observable,
    times: &[f64],
    solver: &dyn PairSolver,
    tol: f64,
) -> Result<ObservableTrace> {
    if times.is_empty() {
        return Err(Error::param("grid", "must not be empty"));
    }
    let blocks = block_evolutions(kind, scenario, state0.n_total, times, solver, tol)?;
    let values = blocks
        .par_iter()
        .map(|b| expectation_in_block(kind, scenario, state0, obs, b))
        .collect::<Result<Vec<_>>>()?;
    ObservableTrace::new(
        format!("{}:{}", kind, obs),
        times.iter().copied().zip(values).collect(),
    )
}

/// `⟨H(t)⟩` for the NOON state `spec`.
pub fn energy_trace(
    kind: ModelKind,
    scenario: &Scenario,
    spec: NoonSpec,
    times: &[f64],
    solver: &dyn PairSolver,
    tol: f64,
) -> Result<ObservableTrace> {
    let state = noon_state(spec)?;
    expectation_trace(kind, scenario, &state, Observable::Energy, times, solver, tol)
}

/// `|⟨0,N|V_N|N,0⟩|²` from an evolved block.
pub fn transition_in_block(block: &BlockEvolution) -> f64 {
    let n = block.n_total as usize;
    (block.phase * block.v[(n, 0)]).norm_sqr()
}

/// `|⟨0,N|V_N(t)|N,0⟩|²`.
pub fn transition_probability(kind: ModelKind, scenario: &Scenario, n_total: u32, t: f64) -> Result<f64> {
    if n_total == 0 {
        return Err(Error::param("N", "must be at least 1"));
    }
    Ok(transition_in_block(&block_evolution(kind, scenario, n_total, t)?))
}

/// Transition probability on a grid.
pub fn transition_trace(
    kind: ModelKind,
    scenario: &Scenario,
    n_total: u32,
    times: &[f64],
    solver: &dyn PairSolver,
    tol: f64,
) -> Result<ObservableTrace> {
    if n_total == 0 {
        return Err(Error::param("N", "must be at least 1"));
    }
    let blocks = block_evolutions(kind, scenario, n_total, times, solver, tol)?;
    ObservableTrace::new(
        format!("{kind}:P"),
        blocks
            .iter()
            .map(|b| (b.pair.t, Complex64::new(transition_in_block(b), 0.0)))
            .collect(),
    )
}
