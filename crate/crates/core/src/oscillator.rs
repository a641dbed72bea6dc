//! The two bosonic models as block-diagonal evolutions over fixed `N`.
//!
//! * Amplifier: `H = (Ω/2)(α†α - β†β) + ω α†β + ω* β†α`; the block is the
//!   spin-`N/2` propagator for `(Ω, ω)`.
//! * Standard: `H = (Ω/2)(α†α + β†β) + ω α†β + ω* β†α`; `Ω` only enters the
//!   scalar phase `exp(-i (N/2) ∫Ω)`, and the block is the spin-`N/2`
//!   propagator for `(0, ω)`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::fock::{self, Terms};
use crate::scenario::Scenario;
use crate::su2::{
    pair_solver, solve_constant, solve_rabi_detuned, spin_propagator, AmplitudePair, PairSolver,
    TwoLevelField,
};
use crate::{CMatrix, CVector, Complex64, Error, Result};

/// Largest block for which the coordinate kernel is evaluated.
pub const MAX_KERNEL_N: u32 = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelKind {
    Amplifier,
    Standard,
}

impl ModelKind {
    pub const ALL: [ModelKind; 2] = [ModelKind::Amplifier, ModelKind::Standard];

    pub fn name(self) -> &'static str {
        match self {
            ModelKind::Amplifier => "amplifier",
            ModelKind::Standard => "standard",
        }
    }

    /// Two-mode Hamiltonian at fixed `(Ω, ω)` as ladder words.
    pub fn hamiltonian_terms(self, splitting: f64, coupling: Complex64) -> Terms {
        let half = Complex64::new(0.5 * splitting, 0.0);
        let second = match self {
            ModelKind::Amplifier => -half,
            ModelKind::Standard => half,
        };
        vec![
            (half, fock::word("a+ a")),
            (second, fock::word("b+ b")),
            (coupling, fock::word("a+ b")),
            (coupling.conj(), fock::word("b+ a")),
        ]
    }

    /// The pair field this model's blocks are driven by.
    pub fn field(self, scenario: &Scenario) -> TwoLevelField<'_> {
        match self {
            ModelKind::Amplifier => TwoLevelField::full(scenario),
            ModelKind::Standard => TwoLevelField::transverse_only(scenario),
        }
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "amplifier" => Ok(ModelKind::Amplifier),
            "standard" => Ok(ModelKind::Standard),
            other => Err(Error::Unknown {
                kind: "model",
                name: other.to_string(),
            }),
        }
    }
}

/// Parameters of the spin problem inside a block.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinParams {
    /// Longitudinal field felt by the spin.
    pub splitting: f64,
    pub coupling: Complex64,
    /// Scalar energy per excitation; the block carries `N` times this.
    pub scalar_per_excitation: f64,
}

pub fn spin_hamiltonian_params(kind: ModelKind, splitting: f64, coupling: Complex64) -> SpinParams {
    match kind {
        ModelKind::Amplifier => SpinParams {
            splitting,
            coupling,
            scalar_per_excitation: 0.0,
        },
        ModelKind::Standard => SpinParams {
            splitting: 0.0,
            coupling,
            scalar_per_excitation: 0.5 * splitting,
        },
    }
}

/// Instantaneous Hamiltonian restricted to the `N` block.
pub fn block_hamiltonian(kind: ModelKind, splitting: f64, coupling: Complex64, n_total: u32) -> CMatrix {
    fock::block_matrix(n_total, &kind.hamiltonian_terms(splitting, coupling))
}

/// A normalized state of the `N` block in the basis `|n, N-n⟩`, `n` descending.
#[derive(Debug, Clone, PartialEq)]
pub struct SubspaceState {
    pub n_total: u32,
    pub amplitudes: CVector,
}

impl SubspaceState {
    pub fn new(n_total: u32, amplitudes: CVector) -> Result<Self> {
        if amplitudes.len() != n_total as usize + 1 {
            return Err(Error::param(
                "amplitudes",
                format!("length {} for N = {n_total}", amplitudes.len()),
            ));
        }
        let norm = amplitudes.norm();
        if (norm - 1.0).abs() > 1e-10 {
            return Err(Error::param("amplitudes", format!("norm {norm} is not 1")));
        }
        Ok(SubspaceState {
            n_total,
            amplitudes,
        })
    }

    /// Index of `|n, N-n⟩`.
    pub fn index_of(n_total: u32, n: u32) -> usize {
        (n_total - n) as usize
    }

    /// Spin projection `m = n - N/2` of basis index `i`.
    pub fn m_of_index(n_total: u32, i: usize) -> f64 {
        0.5 * n_total as f64 - i as f64
    }
}

/// `V_N(t)` with its scalar phase kept apart.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockEvolution {
    pub n_total: u32,
    pub pair: AmplitudePair,
    pub v: CMatrix,
    pub phase: Complex64,
}

impl BlockEvolution {
    /// `phase · V_N`.
    pub fn full(&self) -> CMatrix {
        &self.v * self.phase
    }

    pub fn apply(&self, state: &SubspaceState) -> CVector {
        (&self.v * &state.amplitudes) * self.phase
    }
}

/// Scalar phase `exp(-i (N/2) ∫_{t_start}^t Ω)` of the standard model; 1 for
/// the amplifier.
pub fn scalar_phase(kind: ModelKind, scenario: &Scenario, n_total: u32, t: f64) -> Result<Complex64> {
    match kind {
        ModelKind::Amplifier => Ok(Complex64::new(1.0, 0.0)),
        ModelKind::Standard => {
            let integral = scenario.splitting_integral(scenario.start_time(), t)?;
            Ok(Complex64::from_polar(1.0, -0.5 * n_total as f64 * integral))
        }
    }
}

/// Blocks at every time of `times`, pairs produced by `solver`.
pub fn block_evolutions(
    kind: ModelKind,
    scenario: &Scenario,
    n_total: u32,
    times: &[f64],
    solver: &dyn PairSolver,
    tol: f64,
) -> Result<Vec<BlockEvolution>> {
    let pairs = solver.solve(kind.field(scenario), times, tol)?;
    pairs
        .into_iter()
        .map(|pair| block_from_pair(kind, scenario, n_total, pair))
        .collect()
}

/// Assembles the block for an already computed pair.
pub fn block_from_pair(
    kind: ModelKind,
    scenario: &Scenario,
    n_total: u32,
    pair: AmplitudePair,
) -> Result<BlockEvolution> {
    Ok(BlockEvolution {
        n_total,
        v: spin_propagator(n_total, &pair).matrix,
        phase: scalar_phase(kind, scenario, n_total, pair.t)?,
        pair,
    })
}

/// Default tolerance for integrator fallbacks.
pub const DEFAULT_TOL: f64 = 1e-12;

/// `V_N(t)` using the closed forms where available.
pub fn block_evolution(kind: ModelKind, scenario: &Scenario, n_total: u32, t: f64) -> Result<BlockEvolution> {
    let solver = pair_solver("analytic")?;
    let mut out = block_evolutions(kind, scenario, n_total, &[t], solver.as_ref(), DEFAULT_TOL)?;
    Ok(out.remove(0))
}

/// Closed-form pair of the standard model, which only feels `ω(t)`.
pub fn standard_scenario_pair(scenario: &Scenario, t: f64) -> Result<AmplitudePair> {
    match *scenario {
        Scenario::Constant { coupling, .. } => Ok(solve_constant(0.0, coupling, t)),
        Scenario::Rabi {
            coupling,
            drive_freq,
            ..
        } => Ok(solve_rabi_detuned(0.0, coupling, drive_freq, t)),
        Scenario::Lmsz { coupling, .. } => Ok(AmplitudePair {
            t,
            ..solve_constant(0.0, coupling, t - scenario.start_time())
        }),
        Scenario::Tabulated { .. } => Err(Error::UnsupportedVariant {
            op: "standard_scenario_pair",
            variant: "tabulated",
        }),
    }
}

/// `⟨n₁,n₂|V(t)|m₁,m₂⟩`; zero by construction across different `N`.
pub fn matrix_element(
    kind: ModelKind,
    scenario: &Scenario,
    t: f64,
    bra: (u32, u32),
    ket: (u32, u32),
) -> Result<Complex64> {
    let n_total = bra.0 + bra.1;
    if ket.0 + ket.1 != n_total {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let block = block_evolution(kind, scenario, n_total, t)?;
    let row = SubspaceState::index_of(n_total, bra.0);
    let col = SubspaceState::index_of(n_total, ket.0);
    Ok(block.phase * block.v[(row, col)])
}

/// `ψ_0 … ψ_{n_max}` at `x` for length scale `x0`, by the normalized
/// three-term recurrence.
pub fn hermite_functions(n_max: u32, x: f64, x0: f64) -> Vec<f64> {
    let xi = x / x0;
    let mut out = Vec::with_capacity(n_max as usize + 1);
    let scale = 1.0 / x0.sqrt();
    let mut prev = 0.0;
    let mut cur = PI.powf(-0.25) * (-0.5 * xi * xi).exp();
    out.push(cur * scale);
    for n in 0..n_max {
        let nf = n as f64;
        let next = (2.0 / (nf + 1.0)).sqrt() * xi * cur - (nf / (nf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
        out.push(cur * scale);
    }
    out
}

/// Positions and length scales of the coordinate kernel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelPoint {
    /// `(x₁', x₂')`, the final positions.
    pub primed: (f64, f64),
    /// `(x₁, x₂)`, the initial positions.
    pub unprimed: (f64, f64),
}

/// Block-`N` part of `⟨x₁', x₂'|V(t)|x₁, x₂⟩`.
pub fn coordinate_kernel(block: &BlockEvolution, point: KernelPoint, scales: (f64, f64)) -> Result<Complex64> {
    let n_total = block.n_total;
    if n_total > MAX_KERNEL_N {
        return Err(Error::param("N", format!("{n_total} exceeds {MAX_KERNEL_N}")));
    }
    if !(scales.0 > 0.0 && scales.1 > 0.0) {
        return Err(Error::param("x0", "length scales must be positive"));
    }
    let n = n_total as usize;
    let h1p = hermite_functions(n_total, point.primed.0, scales.0);
    let h2p = hermite_functions(n_total, point.primed.1, scales.1);
    let h1 = hermite_functions(n_total, point.unprimed.0, scales.0);
    let h2 = hermite_functions(n_total, point.unprimed.1, scales.1);
    // basis index i ↔ |N-i, i⟩
    let left: Vec<f64> = (0..=n).map(|i| h1p[n - i] * h2p[i]).collect();
    let right: Vec<f64> = (0..=n).map(|j| h1[n - j] * h2[j]).collect();
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..=n {
        for j in 0..=n {
            acc += left[i] * block.v[(i, j)] * right[j];
        }
    }
    Ok(acc * block.phase)
}
