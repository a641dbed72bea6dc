//! Closed-form expressions exactly as they are usually quoted, kept for
//! cross-checks against the matrix route.
//!
//! Several of these are known not to agree with the exact dynamics (wrong
//! drive frequency, missing normalization, a dropped square). They are
//! evaluated as written and compared, never used to produce results.

use std::f64::consts::{FRAC_PI_4, PI};

use crate::specfun::{gamma_complex, pcf_d};
use crate::{Complex64, Result, I};

fn delta_1n(n: u32) -> f64 {
    if n == 1 {
        1.0
    } else {
        0.0
    }
}

/// `⟨S_z⟩ = (N/2)(|a|²-|b|²) cos 2θ + Re[a b* e^{-iφ}] sin 2θ δ_{1N}`.
pub fn noon_sz(a: Complex64, b: Complex64, n: u32, theta: f64, phi: f64) -> f64 {
    0.5 * n as f64 * (a.norm_sqr() - b.norm_sqr()) * (2.0 * theta).cos()
        + (a * b.conj() * Complex64::from_polar(1.0, -phi)).re * (2.0 * theta).sin() * delta_1n(n)
}

/// `⟨αβ†⟩ = -N a b cos 2θ + ((a² e^{-iφ} - b² e^{iφ})/2) sin 2θ δ_{1N}`.
pub fn noon_a_bdag(a: Complex64, b: Complex64, n: u32, theta: f64, phi: f64) -> Complex64 {
    -(n as f64) * a * b * (2.0 * theta).cos()
        + 0.5
            * (a * a * Complex64::from_polar(1.0, -phi) - b * b * Complex64::from_polar(1.0, phi))
            * (2.0 * theta).sin()
            * delta_1n(n)
}

/// Energy of the balanced `N = 1` state:
/// `Ω Re[a b* e^{-iφ}] + Re[ω* (a² e^{-iφ} - b² e^{iφ})]`.
pub fn noon1_energy(splitting: f64, coupling: Complex64, a: Complex64, b: Complex64, phi: f64) -> f64 {
    let e = Complex64::from_polar(1.0, -phi);
    splitting * (a * b.conj() * e).re + (coupling.conj() * (a * a * e - b * b * e.conj())).re
}

/// `⟨S_z²⟩` on `N = 2`, as quoted: `|a|⁴ + |b|⁴ + 2 Re[(a b*)² e^{-iφ}] sin 2θ`.
pub fn noon2_sz2(a: Complex64, b: Complex64, theta: f64, phi: f64) -> f64 {
    a.norm_sqr().powi(2)
        + b.norm_sqr().powi(2)
        + 2.0 * ((a * b.conj()).powi(2) * Complex64::from_polar(1.0, -phi)).re * (2.0 * theta).sin()
}

/// `⟨(αβ†)²⟩` on `N = 2`, as quoted:
/// `((a⁴ e^{-iφ} + b⁴ e^{iφ}) cos θ sin θ + a² b²) / 2`.
pub fn noon2_a_bdag2(a: Complex64, b: Complex64, theta: f64, phi: f64) -> Complex64 {
    0.5 * ((a.powi(4) * Complex64::from_polar(1.0, -phi) + b.powi(4) * Complex64::from_polar(1.0, phi))
        * theta.cos()
        * theta.sin()
        + a * a * b * b)
}

/// Resonant pair as quoted, with `ν₀ = Ω₀/2`, `τ' = ν₀ t`, `k = ω₀/Ω₀`:
/// `a = cos(kτ') e^{-iτ'}`, `b = -i sin(kτ') e^{-iτ'}`.
pub fn rabi_pair_quoted(splitting: f64, coupling: f64, t: f64) -> (Complex64, Complex64) {
    let tau = 0.5 * splitting * t;
    let k = coupling / splitting;
    let frame = Complex64::from_polar(1.0, -tau);
    (frame * (k * tau).cos(), frame * Complex64::new(0.0, -(k * tau).sin()))
}

/// `ω₀ cos(kτ')`.
pub fn rabi_energy_quoted(coupling: f64, k: f64, tau_prime: f64) -> f64 {
    coupling * (k * tau_prime).cos()
}

/// Finite-window sweep pair as quoted, with `χ = 2ω₀²/γ`.
pub fn lmsz_pair_quoted(sweep_rate: f64, coupling: f64, tau_i: f64, tau: f64) -> Result<(Complex64, Complex64)> {
    let chi = 2.0 * coupling * coupling / sweep_rate;
    let nu = Complex64::new(0.0, chi);
    let nu1 = Complex64::new(-1.0, chi);
    let r = 2.0f64.sqrt();
    let e_m = Complex64::from_polar(r, -FRAC_PI_4);
    let e_p = Complex64::from_polar(r, 3.0 * FRAC_PI_4);
    let g = gamma_complex(Complex64::new(1.0, -chi))?;
    let p1 = pcf_d(nu, e_m * tau)? * pcf_d(nu1, e_p * tau_i)?;
    let p2 = pcf_d(nu, e_p * tau)? * pcf_d(nu1, e_m * tau_i)?;
    let a = g / (2.0 * PI).sqrt() * (p1 + p2);
    let b = g / (2.0 * PI * chi).sqrt() * Complex64::from_polar(1.0, FRAC_PI_4) * (p2 - p1);
    Ok((a, b))
}

/// Two-oscillator rotating-drive pair as quoted:
/// `a = cos(ν_R t)`, `b = -i (ω₀/ν_R) sin(ν_R t)`, `ν_R = √(ν₀² + ω₀²)`.
pub fn standard_rabi_pair_quoted(coupling: f64, drive_freq: f64, t: f64) -> (Complex64, Complex64) {
    let nu_r = (drive_freq * drive_freq + coupling * coupling).sqrt();
    (
        Complex64::new((nu_r * t).cos(), 0.0),
        Complex64::new(0.0, -coupling / nu_r * (nu_r * t).sin()),
    )
}

/// `Ω₀/2 + ω₀ cos(ν₀t) [cos²(ν_R t) + (ω₀²/ν_R²) sin(ν_R t)]`.
pub fn standard_rabi_energy_quoted(splitting: f64, coupling: f64, drive_freq: f64, t: f64) -> f64 {
    let nu_r = (drive_freq * drive_freq + coupling * coupling).sqrt();
    0.5 * splitting
        + coupling
            * (drive_freq * t).cos()
            * ((nu_r * t).cos().powi(2) + coupling * coupling / (nu_r * nu_r) * (nu_r * t).sin())
}

/// `√γ τ + ω₀`.
pub fn standard_lmsz_energy_quoted(sweep_rate: f64, coupling: f64, tau: f64) -> f64 {
    sweep_rate.sqrt() * tau + coupling
}

/// `a = cos(√(χ/2) τ)`, `b = -i sin(√(χ/2) τ)`.
pub fn standard_lmsz_pair_quoted(sweep_rate: f64, coupling: f64, tau: f64) -> (Complex64, Complex64) {
    let x = coupling / sweep_rate.sqrt() * tau;
    (Complex64::new(x.cos(), 0.0), -I * x.sin())
}

/// `(ω₀/ν)^{2N} sin^{2N}(νt)`, `ν = √(Ω₀²/4 + ω₀²)`.
pub fn constant_amplifier_transition(splitting: f64, coupling: f64, n: u32, t: f64) -> f64 {
    let nu = (0.25 * splitting * splitting + coupling * coupling).sqrt();
    (coupling / nu * (nu * t).sin()).powi(2 * n as i32)
}

/// `sin^{2N}(ω₀t)`.
pub fn constant_standard_transition(coupling: f64, n: u32, t: f64) -> f64 {
    (coupling * t).sin().powi(2 * n as i32)
}

/// `sin^{2N}(kτ')`.
pub fn rabi_amplifier_transition(k: f64, tau_prime: f64, n: u32) -> f64 {
    (k * tau_prime).sin().powi(2 * n as i32)
}

/// `(ω₀/ν_R)^{2N} sin^{2N}(ν_R t)`.
pub fn rabi_standard_transition(coupling: f64, drive_freq: f64, n: u32, t: f64) -> f64 {
    let nu_r = (drive_freq * drive_freq + coupling * coupling).sqrt();
    (coupling / nu_r * (nu_r * t).sin()).powi(2 * n as i32)
}

/// `sin^{2N}(√(χ/2) τ)`.
pub fn lmsz_standard_transition(sweep_rate: f64, coupling: f64, tau: f64, n: u32) -> f64 {
    (coupling / sweep_rate.sqrt() * tau).sin().powi(2 * n as i32)
}

/// Infinite-window transfer `1 - exp(-π χ)` of the linear sweep,
/// `χ = 2ω₀²/γ`.
pub fn lmsz_asymptotic_transition(sweep_rate: f64, coupling: f64) -> f64 {
    1.0 - (-2.0 * PI * coupling * coupling / sweep_rate).exp()
}
