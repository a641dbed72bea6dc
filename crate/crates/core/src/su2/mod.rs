//! Spin-1/2 dynamics `i U̇ = H U` for `H = Ω S_z + ω S₊ + ω* S₋` and its lift
//! to arbitrary spin.
//!
//! The 2×2 propagator is `[[a, b], [-b*, a*]]` in the basis `m = +1/2, -1/2`,
//! so the pair `(a, b)` obeys
//! `ȧ = -i(Ω/2) a + i ω b*`, `ḃ = -i ω a* - i(Ω/2) b` with `(a, b) = (1, 0)`
//! at the reference time.

mod analytic;
mod numeric;
mod propagator;
mod solver;

pub use analytic::{solve_constant, solve_lmsz, solve_rabi, solve_rabi_detuned};
pub use numeric::{solve_numeric, NumericSolution};
pub use propagator::{spin_matrices, spin_propagator, SpinPropagator};
pub use solver::{pair_solver, pair_solver_names, AnalyticSolver, NumericSolver, PairSolver};

use crate::scenario::Scenario;
use crate::{CMatrix, Complex64, Result};

/// Cayley-Klein parameters of the spin-1/2 propagator at time `t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AmplitudePair {
    pub a: Complex64,
    pub b: Complex64,
    pub t: f64,
}

impl AmplitudePair {
    pub fn identity(t: f64) -> Self {
        AmplitudePair {
            a: Complex64::new(1.0, 0.0),
            b: Complex64::new(0.0, 0.0),
            t,
        }
    }

    /// `|a|² + |b|² - 1`.
    pub fn norm_defect(&self) -> f64 {
        self.a.norm_sqr() + self.b.norm_sqr() - 1.0
    }

    /// `[[a, b], [-b*, a*]]`.
    pub fn matrix2(&self) -> CMatrix {
        CMatrix::from_row_slice(2, 2, &[self.a, self.b, -self.b.conj(), self.a.conj()])
    }

    /// Pair of the inverse (adjoint) matrix.
    pub fn inverse(&self) -> AmplitudePair {
        AmplitudePair {
            a: self.a.conj(),
            b: -self.b,
            t: self.t,
        }
    }

    /// Pair of the product `self · other` of the two 2×2 forms.
    pub fn compose(&self, other: &AmplitudePair) -> AmplitudePair {
        AmplitudePair {
            a: self.a * other.a - self.b * other.b.conj(),
            b: self.a * other.b + self.b * other.a.conj(),
            t: self.t,
        }
    }
}

/// The field seen by the spin-1/2 problem: a scenario, optionally with the
/// longitudinal term switched off.
///
/// The two-oscillator model only feels `Ω` through a scalar phase, so its
/// pair solves the same equations with `Ω ≡ 0`.
#[derive(Debug, Clone, Copy)]
pub struct TwoLevelField<'a> {
    pub scenario: &'a Scenario,
    pub with_splitting: bool,
}

impl<'a> TwoLevelField<'a> {
    pub fn full(scenario: &'a Scenario) -> Self {
        TwoLevelField {
            scenario,
            with_splitting: true,
        }
    }

    pub fn transverse_only(scenario: &'a Scenario) -> Self {
        TwoLevelField {
            scenario,
            with_splitting: false,
        }
    }

    /// `(Ω_eff(t), ω(t))`.
    pub fn params(&self, t: f64) -> Result<(f64, Complex64)> {
        let (omega_l, omega_t) = self.scenario.evaluate(t)?;
        Ok((if self.with_splitting { omega_l } else { 0.0 }, omega_t))
    }
}

impl<'a> From<&'a Scenario> for TwoLevelField<'a> {
    fn from(s: &'a Scenario) -> Self {
        TwoLevelField::full(s)
    }
}
