//! Closed-form pairs for the constant, rotating and linear-sweep fields.

use std::f64::consts::PI;

use super::AmplitudePair;
use crate::specfun::{pcf_d_with_derivative, rgamma};
use crate::{Complex64, Error, Result, I};

/// `sin(x t) / x` without the division, `t` at `x = 0`.
fn sin_over(x: f64, t: f64) -> f64 {
    let xt = x * t;
    if xt.abs() < 1e-4 {
        t * (1.0 - xt * xt / 6.0 + xt.powi(4) / 120.0)
    } else {
        xt.sin() / x
    }
}

/// Constant `Ω₀`, `ω₀` from `t = 0`:
/// `a = cos νt - i(Ω₀/2ν) sin νt`, `b = -i(ω₀/ν) sin νt`, `ν = √(Ω₀²/4 + ω₀²)`.
pub fn solve_constant(splitting: f64, coupling: f64, t: f64) -> AmplitudePair {
    let nu = (0.25 * splitting * splitting + coupling * coupling).sqrt();
    let s = sin_over(nu, t);
    AmplitudePair {
        a: Complex64::new((nu * t).cos(), -0.5 * splitting * s),
        b: Complex64::new(0.0, -coupling * s),
        t,
    }
}

/// Rotating coupling `ω₀ e^{-iν₀t}` at constant `Ω₀`, any detuning
/// `δ = Ω₀ - ν₀`. With `λ = √(δ²/4 + ω₀²)`:
/// `a = e^{-iν₀t/2} (cos λt - i(δ/2λ) sin λt)`,
/// `b = -i (ω₀/λ) sin λt · e^{-iν₀t/2}`.
pub fn solve_rabi_detuned(splitting: f64, coupling: f64, drive_freq: f64, t: f64) -> AmplitudePair {
    let delta = splitting - drive_freq;
    let lambda = (0.25 * delta * delta + coupling * coupling).sqrt();
    let s = sin_over(lambda, t);
    let frame = Complex64::from_polar(1.0, -0.5 * drive_freq * t);
    AmplitudePair {
        a: frame * Complex64::new((lambda * t).cos(), -0.5 * delta * s),
        b: frame * Complex64::new(0.0, -coupling * s),
        t,
    }
}

/// Resonant drive `ν₀ = Ω₀`: with `τ' = ν₀t` and `k = ω₀/Ω₀`,
/// `a = cos(kτ') e^{-iτ'/2}`, `b = -i sin(kτ') e^{-iτ'/2}`.
pub fn solve_rabi(splitting: f64, coupling: f64, t: f64) -> Result<AmplitudePair> {
    if !(splitting > 0.0) {
        return Err(Error::param("Omega0", "must be positive for the resonant drive"));
    }
    let tau = splitting * t;
    let k = coupling / splitting;
    let frame = Complex64::from_polar(1.0, -0.5 * tau);
    Ok(AmplitudePair {
        a: frame * (k * tau).cos(),
        b: frame * Complex64::new(0.0, -(k * tau).sin()),
        t,
    })
}

/// Linear sweep `Ω = γt`, constant coupling `ω₀`, started with `(1, 0)` at
/// `τ_i`; returns the pair at `τ` (both in units `τ = √γ t`).
///
/// In `τ` the pair obeys `a' = -i(τ/2)a + i g b*` with `g = ω₀/√γ`, so `a`
/// solves `a'' + (τ²/4 + i/2 + g²) a = 0`. Its solutions are
/// `D_ν(±ζτ)` with `ν = -1 + i g²` and `ζ = e^{-iπ/4}`, whose Wronskian is
/// `ζ √(2π) / Γ(1 - i g²)`; `b` follows from `b* = (τ a/2 - i a')/g`.
pub fn solve_lmsz(sweep_rate: f64, coupling: f64, tau_i: f64, tau: f64) -> Result<AmplitudePair> {
    if !(sweep_rate > 0.0) {
        return Err(Error::param("gamma", "must be positive"));
    }
    if !tau_i.is_finite() || !tau.is_finite() {
        return Err(Error::param("tau", "must be finite"));
    }
    let t = tau / sweep_rate.sqrt();
    let g = coupling / sweep_rate.sqrt();
    if g == 0.0 {
        return Ok(AmplitudePair {
            a: Complex64::from_polar(1.0, -0.25 * (tau * tau - tau_i * tau_i)),
            b: Complex64::new(0.0, 0.0),
            t,
        });
    }
    let g2 = g * g;
    let nu = Complex64::new(-1.0, g2);
    let zeta = Complex64::from_polar(1.0, -PI / 4.0);
    let basis = |x: f64| -> Result<[Complex64; 4]> {
        let (d1, dd1) = pcf_d_with_derivative(nu, zeta * x)?;
        let (d2, dd2) = pcf_d_with_derivative(nu, -zeta * x)?;
        Ok([d1, zeta * dd1, d2, -zeta * dd2])
    };
    let wronskian = zeta * (2.0 * PI).sqrt() * rgamma(Complex64::new(1.0, -g2));
    let [f1, df1, f2, df2] = basis(tau_i)?;
    let p = Complex64::new(0.0, -0.5 * tau_i);
    let ca = (df2 - p * f2) / wronskian;
    let cb = (p * f1 - df1) / wronskian;
    let [f1, df1, f2, df2] = basis(tau)?;
    let u = ca * f1 + cb * f2;
    let du = ca * df1 + cb * df2;
    let v = (I * du - 0.5 * tau * u) / g;
    Ok(AmplitudePair {
        a: u,
        b: -v.conj(),
        t,
    })
}
