//! Time dependence of the Hamiltonian parameters.
//!
//! Every scenario provides the longitudinal field `Ω(t)` (real) and the
//! transverse coupling `ω(t)` (complex). The two-mode Hamiltonians and the
//! effective spin Hamiltonian are built from these two functions only.

use serde::{Deserialize, Serialize};

use crate::{Complex64, Error, Result};

/// One sample of a tabulated scenario: `(t, Ω, Re ω, Im ω)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 4]", into = "[f64; 4]")]
pub struct Sample {
    pub t: f64,
    pub splitting: f64,
    pub coupling: Complex64,
}

impl From<[f64; 4]> for Sample {
    fn from(v: [f64; 4]) -> Self {
        Sample {
            t: v[0],
            splitting: v[1],
            coupling: Complex64::new(v[2], v[3]),
        }
    }
}

impl From<Sample> for [f64; 4] {
    fn from(s: Sample) -> Self {
        [s.t, s.splitting, s.coupling.re, s.coupling.im]
    }
}

/// Field layout of the scenario config: a `type` tag plus per-variant keys.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum Scenario {
    /// Time-independent `Ω = Ω₀`, `ω = ω₀`.
    Constant {
        #[serde(rename = "Omega0")]
        splitting: f64,
        #[serde(rename = "omega0")]
        coupling: f64,
    },
    /// Constant `Ω = Ω₀` and a rotating coupling `ω(t) = ω₀ e^{-i ν₀ t}`.
    Rabi {
        #[serde(rename = "Omega0")]
        splitting: f64,
        #[serde(rename = "omega0")]
        coupling: f64,
        #[serde(rename = "nu0")]
        drive_freq: f64,
    },
    /// Linear sweep `Ω(t) = γ t` with constant coupling `ω₀`, observed over
    /// the dimensionless window `τ = √γ t ∈ [τ_i, τ_f]`.
    Lmsz {
        #[serde(rename = "gamma")]
        sweep_rate: f64,
        #[serde(rename = "omega0")]
        coupling: f64,
        #[serde(default = "default_tau_i")]
        tau_i: f64,
        #[serde(default = "default_tau_f")]
        tau_f: f64,
    },
    /// Piecewise-linear interpolation of sampled `(Ω, ω)`.
    Tabulated { samples: Vec<Sample> },
}

fn default_tau_i() -> f64 {
    -20.0
}

fn default_tau_f() -> f64 {
    20.0
}

/// A violated scenario invariant, reported with the offending field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub field: String,
    pub message: String,
}

impl Violation {
    pub fn new(field: impl Into<String>, message: impl Into<String>) -> Self {
        Violation {
            field: field.into(),
            message: message.into(),
        }
    }
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.field, self.message)
    }
}

impl Scenario {
    pub fn constant(splitting: f64, coupling: f64) -> Result<Self> {
        Scenario::Constant {
            splitting,
            coupling,
        }
        .checked()
    }

    pub fn rabi(splitting: f64, coupling: f64, drive_freq: f64) -> Result<Self> {
        Scenario::Rabi {
            splitting,
            coupling,
            drive_freq,
        }
        .checked()
    }

    /// Rabi scenario driven on resonance with the level splitting (`ν₀ = Ω₀`).
    pub fn resonant_rabi(splitting: f64, coupling: f64) -> Result<Self> {
        Self::rabi(splitting, coupling, splitting)
    }

    pub fn lmsz(sweep_rate: f64, coupling: f64, tau_i: f64, tau_f: f64) -> Result<Self> {
        Scenario::Lmsz {
            sweep_rate,
            coupling,
            tau_i,
            tau_f,
        }
        .checked()
    }

    pub fn tabulated(samples: Vec<Sample>) -> Result<Self> {
        Scenario::Tabulated { samples }.checked()
    }

    fn checked(self) -> Result<Self> {
        match self.violations().into_iter().next() {
            None => Ok(self),
            Some(v) => Err(Error::Scenario(v.to_string())),
        }
    }

    pub fn variant_name(&self) -> &'static str {
        match self {
            Scenario::Constant { .. } => "constant",
            Scenario::Rabi { .. } => "rabi",
            Scenario::Lmsz { .. } => "lmsz",
            Scenario::Tabulated { .. } => "tabulated",
        }
    }

    /// All invariant violations, with field names relative to the scenario.
    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let finite = |out: &mut Vec<Violation>, name: &str, v: f64| {
            if !v.is_finite() {
                out.push(Violation::new(name, "must be finite"));
            }
        };
        match *self {
            Scenario::Constant {
                splitting,
                coupling,
            } => {
                finite(&mut out, "Omega0", splitting);
                finite(&mut out, "omega0", coupling);
                if coupling < 0.0 {
                    out.push(Violation::new("omega0", "must be >= 0"));
                }
            }
            Scenario::Rabi {
                splitting,
                coupling,
                drive_freq,
            } => {
                finite(&mut out, "Omega0", splitting);
                finite(&mut out, "omega0", coupling);
                finite(&mut out, "nu0", drive_freq);
                if coupling < 0.0 {
                    out.push(Violation::new("omega0", "must be >= 0"));
                }
            }
            Scenario::Lmsz {
                sweep_rate,
                coupling,
                tau_i,
                tau_f,
            } => {
                finite(&mut out, "gamma", sweep_rate);
                finite(&mut out, "omega0", coupling);
                finite(&mut out, "tau_i", tau_i);
                finite(&mut out, "tau_f", tau_f);
                if !(sweep_rate > 0.0) {
                    out.push(Violation::new("gamma", "must be > 0"));
                }
                if coupling < 0.0 {
                    out.push(Violation::new("omega0", "must be >= 0"));
                }
                if !(tau_i < tau_f) {
                    out.push(Violation::new("tau_i", "must be < tau_f"));
                }
            }
            Scenario::Tabulated { ref samples } => {
                if samples.len() < 2 {
                    out.push(Violation::new("samples", "need at least 2 samples"));
                }
                for (i, s) in samples.iter().enumerate() {
                    let vals = [s.t, s.splitting, s.coupling.re, s.coupling.im];
                    if vals.iter().any(|v| !v.is_finite()) {
                        out.push(Violation::new(format!("samples[{i}]"), "must be finite"));
                    }
                }
                if samples.windows(2).any(|w| !(w[1].t > w[0].t)) {
                    out.push(Violation::new("samples", "times must be strictly increasing"));
                }
            }
        }
        out
    }

    /// `(Ω(t), ω(t))` at time `t`.
    pub fn evaluate(&self, t: f64) -> Result<(f64, Complex64)> {
        match *self {
            Scenario::Constant {
                splitting,
                coupling,
            } => Ok((splitting, Complex64::new(coupling, 0.0))),
            Scenario::Rabi {
                splitting,
                coupling,
                drive_freq,
            } => Ok((splitting, Complex64::from_polar(coupling, -drive_freq * t))),
            Scenario::Lmsz {
                sweep_rate,
                coupling,
                ..
            } => Ok((sweep_rate * t, Complex64::new(coupling, 0.0))),
            Scenario::Tabulated { ref samples } => {
                let (i, w) = locate(samples, t)?;
                let (s0, s1) = (&samples[i], &samples[i + 1]);
                let splitting = s0.splitting + w * (s1.splitting - s0.splitting);
                let coupling = s0.coupling + (s1.coupling - s0.coupling) * w;
                Ok((splitting, coupling))
            }
        }
    }

    /// Dimensionless time: `ν₀ t` for Rabi, `√γ t` for LMSZ.
    pub fn dimensionless_time(&self, t: f64) -> Result<f64> {
        match *self {
            Scenario::Rabi { drive_freq, .. } => Ok(drive_freq * t),
            Scenario::Lmsz { sweep_rate, .. } => Ok(sweep_rate.sqrt() * t),
            _ => Err(Error::UnsupportedVariant {
                op: "dimensionless_time",
                variant: self.variant_name(),
            }),
        }
    }

    /// Inverse of [`Scenario::dimensionless_time`].
    pub fn physical_time(&self, tau: f64) -> Result<f64> {
        match *self {
            Scenario::Rabi { drive_freq, .. } if drive_freq != 0.0 => Ok(tau / drive_freq),
            Scenario::Lmsz { sweep_rate, .. } => Ok(tau / sweep_rate.sqrt()),
            _ => Err(Error::UnsupportedVariant {
                op: "physical_time",
                variant: self.variant_name(),
            }),
        }
    }

    /// Instant at which the propagator is the identity (`a = 1`, `b = 0`).
    pub fn start_time(&self) -> f64 {
        match *self {
            Scenario::Constant { .. } | Scenario::Rabi { .. } => 0.0,
            Scenario::Lmsz {
                sweep_rate, tau_i, ..
            } => tau_i / sweep_rate.sqrt(),
            Scenario::Tabulated { ref samples } => samples[0].t,
        }
    }

    /// Last instant at which the scenario is defined, if bounded.
    pub fn end_time(&self) -> Option<f64> {
        match *self {
            Scenario::Lmsz {
                sweep_rate, tau_f, ..
            } => Some(tau_f / sweep_rate.sqrt()),
            Scenario::Tabulated { ref samples } => samples.last().map(|s| s.t),
            _ => None,
        }
    }

    /// Kinks of the parameter functions, where an integrator should restart.
    pub fn breakpoints(&self) -> Vec<f64> {
        match self {
            Scenario::Tabulated { samples } => samples.iter().map(|s| s.t).collect(),
            _ => Vec::new(),
        }
    }

    /// `∫_{t0}^{t1} Ω(t') dt'`.
    pub fn splitting_integral(&self, t0: f64, t1: f64) -> Result<f64> {
        match *self {
            Scenario::Constant { splitting, .. } | Scenario::Rabi { splitting, .. } => {
                Ok(splitting * (t1 - t0))
            }
            Scenario::Lmsz { sweep_rate, .. } => Ok(0.5 * sweep_rate * (t1 * t1 - t0 * t0)),
            Scenario::Tabulated { ref samples } => {
                let (lo, hi, sign) = if t0 <= t1 { (t0, t1, 1.0) } else { (t1, t0, -1.0) };
                let splitting = |t: f64| self.evaluate(t).map(|p| p.0);
                // Composite Simpson over the pieces between consecutive nodes.
                let mut nodes = vec![lo];
                nodes.extend(samples.iter().map(|s| s.t).filter(|&t| t > lo && t < hi));
                nodes.push(hi);
                let mut total = 0.0;
                for w in nodes.windows(2) {
                    let (a, b) = (w[0], w[1]);
                    let m = 0.5 * (a + b);
                    total += (b - a) / 6.0 * (splitting(a)? + 4.0 * splitting(m)? + splitting(b)?);
                }
                Ok(sign * total)
            }
        }
    }
}

/// Index of the interval containing `t` and the linear weight inside it.
fn locate(samples: &[Sample], t: f64) -> Result<(usize, f64)> {
    let (lo, hi) = (samples[0].t, samples[samples.len() - 1].t);
    if !(t >= lo && t <= hi) {
        return Err(Error::Range { t, lo, hi });
    }
    let i = samples
        .partition_point(|s| s.t <= t)
        .clamp(1, samples.len() - 1)
        - 1;
    let (t0, t1) = (samples[i].t, samples[i + 1].t);
    Ok((i, (t - t0) / (t1 - t0)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> Scenario {
        Scenario::tabulated(vec![
            [0.0, 1.0, 0.0, 0.0].into(),
            [1.0, 3.0, 1.0, -1.0].into(),
            [3.0, -1.0, 0.0, 2.0].into(),
        ])
        .unwrap()
    }

    #[test]
    fn constant_is_constant() {
        let s = Scenario::constant(1.0, 0.1).unwrap();
        assert_eq!(s.evaluate(7.0).unwrap(), (1.0, Complex64::new(0.1, 0.0)));
    }

    #[test]
    fn rabi_at_zero_and_modulus() {
        let s = Scenario::rabi(1.0, 0.1, 0.5).unwrap();
        assert_eq!(s.evaluate(0.0).unwrap(), (1.0, Complex64::new(0.1, 0.0)));
        for k in 0..50 {
            let t = 0.37 * k as f64;
            let (_, w) = s.evaluate(t).unwrap();
            assert!((w.norm() - 0.1).abs() < 1e-15);
        }
    }

    #[test]
    fn lmsz_ramp_is_odd() {
        let s = Scenario::lmsz(1.0, 1.0, -20.0, 20.0).unwrap();
        assert_eq!(s.evaluate(-3.0).unwrap(), (-3.0, Complex64::new(1.0, 0.0)));
        let s = Scenario::lmsz(2.5, 1.0, -20.0, 20.0).unwrap();
        for t in [0.1, 1.3, 7.0] {
            assert_eq!(s.evaluate(-t).unwrap().0, -s.evaluate(t).unwrap().0);
        }
    }

    #[test]
    fn dimensionless_time_variants() {
        let r = Scenario::rabi(1.0, 0.1, 0.5).unwrap();
        assert_eq!(r.dimensionless_time(4.0).unwrap(), 2.0);
        let l = Scenario::lmsz(4.0, 1.0, -20.0, 20.0).unwrap();
        assert_eq!(l.dimensionless_time(3.0).unwrap(), 6.0);
        let l = Scenario::lmsz(1.0, 1.0, -20.0, 20.0).unwrap();
        assert_eq!(l.dimensionless_time(0.0).unwrap(), 0.0);
        let c = Scenario::constant(1.0, 0.1).unwrap();
        assert!(matches!(
            c.dimensionless_time(1.0),
            Err(Error::UnsupportedVariant { .. })
        ));
        assert!(table().dimensionless_time(1.0).is_err());
    }

    #[test]
    fn tabulated_interpolates_linearly() {
        let s = table();
        let (o, w) = s.evaluate(0.5).unwrap();
        assert!((o - 2.0).abs() < 1e-15);
        assert!((w - Complex64::new(0.5, -0.5)).norm() < 1e-15);
        let (o, w) = s.evaluate(2.0).unwrap();
        assert!((o - 1.0).abs() < 1e-15);
        assert!((w - Complex64::new(0.5, 0.5)).norm() < 1e-15);
        assert_eq!(s.evaluate(3.0).unwrap().0, -1.0);
        assert!(matches!(s.evaluate(3.5), Err(Error::Range { .. })));
        assert!(matches!(s.evaluate(-0.1), Err(Error::Range { .. })));
    }

    #[test]
    fn invariants_are_enforced() {
        assert!(Scenario::constant(1.0, -0.1).is_err());
        assert!(Scenario::lmsz(-1.0, 1.0, -1.0, 1.0).is_err());
        assert!(Scenario::lmsz(1.0, 1.0, 1.0, 1.0).is_err());
        assert!(Scenario::tabulated(vec![[0.0, 1.0, 0.0, 0.0].into()]).is_err());
        assert!(Scenario::tabulated(vec![
            [0.0, 1.0, 0.0, 0.0].into(),
            [0.0, 1.0, 0.0, 0.0].into()
        ])
        .is_err());
        let v = Scenario::Lmsz {
            sweep_rate: -1.0,
            coupling: 1.0,
            tau_i: -1.0,
            tau_f: 1.0,
        }
        .violations();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].field, "gamma");
    }

    #[test]
    fn splitting_integrals() {
        let l = Scenario::lmsz(2.0, 1.0, -20.0, 20.0).unwrap();
        assert!((l.splitting_integral(-1.0, 3.0).unwrap() - 8.0).abs() < 1e-14);
        let c = Scenario::constant(1.5, 0.0).unwrap();
        assert_eq!(c.splitting_integral(0.0, 2.0).unwrap(), 3.0);
        // Piecewise-linear: exact area of the trapezoids.
        let s = table();
        let area = 0.5 * (1.0 + 3.0) + 0.5 * (3.0 - 1.0) * 2.0;
        assert!((s.splitting_integral(0.0, 3.0).unwrap() - area).abs() < 1e-14);
        assert!((s.splitting_integral(0.5, 0.0).unwrap() + 0.5 * (1.0 + 2.0) * 0.5).abs() < 1e-14);
    }

    #[test]
    fn config_layout_round_trips() {
        let s: Scenario =
            serde_json::from_str(r#"{"type":"lmsz","gamma":1.0,"omega0":1.0,"tau_i":-10,"tau_f":10}"#)
                .unwrap();
        assert_eq!(s, Scenario::lmsz(1.0, 1.0, -10.0, 10.0).unwrap());
        let s: Scenario = serde_json::from_str(r#"{"type":"rabi","Omega0":1,"omega0":0.1,"nu0":1}"#).unwrap();
        assert_eq!(s, Scenario::rabi(1.0, 0.1, 1.0).unwrap());
        let s: Scenario = serde_json::from_str(
            r#"{"type":"tabulated","samples":[[0,1,0,0],[1,3,1,-1],[3,-1,0,2]]}"#,
        )
        .unwrap();
        assert_eq!(s, table());
    }
}
