use super::{AmplitudePair, TwoLevelField};
use crate::ode::{self, DenseSolution, Tolerance};
use crate::{Complex64, Error, Result};

pub const MIN_TOL: f64 = 1e-13;
pub const MAX_TOL: f64 = 1e-4;

/// Dense-output numeric solution of the pair equations.
#[derive(Debug, Clone)]
pub struct NumericSolution {
    dense: DenseSolution<4>,
}

impl NumericSolution {
    pub fn t_start(&self) -> f64 {
        self.dense.t_start()
    }

    pub fn t_end(&self) -> f64 {
        self.dense.t_end()
    }

    pub fn steps(&self) -> (usize, usize) {
        (self.dense.steps_accepted(), self.dense.steps_rejected())
    }

    pub fn at(&self, t: f64) -> Result<AmplitudePair> {
        let y = self.dense.at(t)?;
        Ok(AmplitudePair {
            a: Complex64::new(y[0], y[1]),
            b: Complex64::new(y[2], y[3]),
            t,
        })
    }
}

/// Integrates the pair equations from `(1, 0)` at `t_start` to `t_end`.
pub fn solve_numeric<'a>(
    field: impl Into<TwoLevelField<'a>>,
    t_start: f64,
    t_end: f64,
    tol: f64,
) -> Result<NumericSolution> {
    let field = field.into();
    if !(t_end > t_start) {
        return Err(Error::param("t_end", format!("must exceed t_start = {t_start}")));
    }
    if !(MIN_TOL..=MAX_TOL).contains(&tol) {
        return Err(Error::param("tol", format!("{tol} outside [{MIN_TOL}, {MAX_TOL}]")));
    }
    let rhs = |t: f64, y: &[f64; 4]| -> Result<[f64; 4]> {
        let (omega_l, w) = field.params(t)?;
        let a = Complex64::new(y[0], y[1]);
        let b = Complex64::new(y[2], y[3]);
        let i = crate::I;
        let da = -i * (0.5 * omega_l) * a + i * w * b.conj();
        let db = -i * w * a.conj() - i * (0.5 * omega_l) * b;
        Ok([da.re, da.im, db.re, db.im])
    };
    let dense = ode::integrate(
        rhs,
        t_start,
        t_end,
        [1.0, 0.0, 0.0, 0.0],
        Tolerance::uniform(tol),
        &field.scenario.breakpoints(),
    )?;
    Ok(NumericSolution { dense })
}
