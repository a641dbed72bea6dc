//! Weber parabolic cylinder functions `D_ν(z)` for complex order and argument.
//!
//! `D_ν` solves `w'' = (z²/4 - ν - 1/2) w` with
//! `D_ν(0) = 2^{ν/2} √π / Γ((1-ν)/2)` and `D_ν'(0) = -2^{(ν+1)/2} √π / Γ(-ν/2)`.
//!
//! Three evaluation routes:
//!
//! * small `|z|`: the Maclaurin series generated by the differential equation;
//! * large `|z|`: the asymptotic expansion `z^ν e^{-z²/4} Σ ...`, used directly
//!   for `|arg z| <= π/2` and through the connection formula to `D_ν(-z)` and
//!   `D_{-ν-1}(∓iz)` in the left half-plane;
//! * in between: analytic continuation of the Maclaurin data by local Taylor
//!   series of the same equation, in steps of at most [`STEP`] along the
//!   segment from the origin.
//!
//! Accuracy is ~1e-12 relative on the rays `arg z = ±π/4, ±3π/4` for
//! `|ν| <= 10`, `|z| <= 40`, the region exercised by the linear-sweep solver.

use std::f64::consts::{FRAC_PI_2, PI};

use super::gamma::rgamma;
use crate::{Complex64, Error, Result, I};

/// Radius inside which the Maclaurin series is summed in one piece.
const SERIES_RADIUS: f64 = 1.5;
/// Radius beyond which the asymptotic expansion is attempted.
const ASYMPTOTIC_RADIUS: f64 = 6.0;
/// Longest Taylor step of the continuation.
const STEP: f64 = 0.5;
/// Relative error the asymptotic series must reach to be accepted.
const ASYMPTOTIC_TOL: f64 = 1e-14;
const MAX_TERMS: usize = 600;

/// `D_ν(z)`.
pub fn pcf_d(nu: Complex64, z: Complex64) -> Result<Complex64> {
    check_finite(nu, z)?;
    let r = z.norm();
    if r >= ASYMPTOTIC_RADIUS {
        if let Some((value, _)) = asymptotic_any_sector(nu, z) {
            return Ok(value);
        }
    }
    continuation(nu, z).map(|(w, _)| w)
}

/// `(D_ν(z), D_ν'(z))`.
pub fn pcf_d_with_derivative(nu: Complex64, z: Complex64) -> Result<(Complex64, Complex64)> {
    check_finite(nu, z)?;
    if z.norm() >= ASYMPTOTIC_RADIUS {
        // D_ν'(z) = (z/2) D_ν(z) - D_{ν+1}(z)
        if let (Some((w, _)), Some((w1, _))) = (
            asymptotic_any_sector(nu, z),
            asymptotic_any_sector(nu + 1.0, z),
        ) {
            return Ok((w, 0.5 * z * w - w1));
        }
    }
    continuation(nu, z)
}

fn check_finite(nu: Complex64, z: Complex64) -> Result<()> {
    if [nu.re, nu.im, z.re, z.im].iter().all(|v| v.is_finite()) {
        Ok(())
    } else {
        Err(Error::param("nu/z", "must be finite"))
    }
}

/// Value and derivative at the origin.
fn origin_data(nu: Complex64) -> (Complex64, Complex64) {
    let sqrt_pi = PI.sqrt();
    let two = Complex64::new(2.0, 0.0);
    let w0 = two.powc(0.5 * nu) * sqrt_pi * rgamma((1.0 - nu) * 0.5);
    let dw0 = -two.powc(0.5 * (nu + 1.0)) * sqrt_pi * rgamma(-0.5 * nu);
    (w0, dw0)
}

/// Integrates the Weber equation from the origin to `z` by Taylor steps.
fn continuation(nu: Complex64, z: Complex64) -> Result<(Complex64, Complex64)> {
    let (mut w, mut dw) = origin_data(nu);
    let r = z.norm();
    if r == 0.0 {
        return Ok((w, dw));
    }
    let steps = if r <= SERIES_RADIUS {
        1
    } else {
        (r / STEP).ceil() as usize
    };
    let h = z / steps as f64;
    let mut z0 = Complex64::new(0.0, 0.0);
    for _ in 0..steps {
        (w, dw) = taylor_step(nu, z0, w, dw, h)?;
        z0 += h;
    }
    Ok((w, dw))
}

/// One step `z0 -> z0 + h` using the local power series
/// `w(z0 + h) = Σ c_k h^k`, where
/// `(k+2)(k+1) c_{k+2} = q0 c_k + q1 c_{k-1} + q2 c_{k-2}` and
/// `q(z0 + h) = q0 + q1 h + q2 h²` is the equation's coefficient.
fn taylor_step(
    nu: Complex64,
    z0: Complex64,
    w: Complex64,
    dw: Complex64,
    h: Complex64,
) -> Result<(Complex64, Complex64)> {
    let q0 = 0.25 * z0 * z0 - nu - 0.5;
    let q1 = 0.5 * z0;
    let q2 = Complex64::new(0.25, 0.0);
    taylor_step_impl(q0, q1, q2, w, dw, h)
}

fn taylor_step_impl(
    q0: Complex64,
    q1: Complex64,
    q2: Complex64,
    w: Complex64,
    dw: Complex64,
    h: Complex64,
) -> Result<(Complex64, Complex64)> {
    // d[k] = c_k h^k, kept in a small ring of the last four terms.
    let h2 = h * h;
    let zero = Complex64::new(0.0, 0.0);
    let mut ring = [zero; 4];
    ring[0] = w;
    ring[1] = dw * h;
    let mut value = ring[0] + ring[1];
    let mut slope = ring[1]; // Σ k d_k, divided by h at the end
    let mut small = 0;
    for k in 0..MAX_TERMS {
        let dk = ring[k % 4];
        let dkm1 = if k >= 1 { ring[(k + 3) % 4] } else { zero };
        let dkm2 = if k >= 2 { ring[(k + 2) % 4] } else { zero };
        let kk = k as f64;
        let next = (q0 * dk + q1 * dkm1 * h + q2 * dkm2 * h2) * h2 / ((kk + 2.0) * (kk + 1.0));
        ring[(k + 2) % 4] = next;
        value += next;
        slope += next * (kk + 2.0);
        let scale = value.norm() + slope.norm() + f64::MIN_POSITIVE;
        if next.norm() * (kk + 3.0) <= 1e-17 * scale {
            small += 1;
            if small >= 3 {
                return Ok((value, slope / h));
            }
        } else {
            small = 0;
        }
    }
    Err(Error::Accuracy {
        estimate: ring[(MAX_TERMS + 1) % 4].norm() / value.norm().max(f64::MIN_POSITIVE),
    })
}

/// Asymptotic value with relative error estimate, valid for `|arg z| <= π/2`.
fn asymptotic_right(nu: Complex64, z: Complex64) -> Option<(Complex64, f64)> {
    let inv_2z2 = (2.0 * z * z).inv();
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut last = f64::INFINITY;
    for s in 0..MAX_TERMS {
        let sf = s as f64;
        let next = -term * (nu - 2.0 * sf) * (nu - 2.0 * sf - 1.0) * inv_2z2 / (sf + 1.0);
        let mag = next.norm();
        if mag > last && mag > 0.0 {
            // series started diverging; the smallest term bounds the error
            let est = last / sum.norm();
            return (est <= ASYMPTOTIC_TOL).then(|| (prefactor(nu, z) * sum, est));
        }
        sum += next;
        term = next;
        last = mag;
        if mag <= 1e-17 * sum.norm() {
            return Some((prefactor(nu, z) * sum, mag / sum.norm()));
        }
    }
    None
}

fn prefactor(nu: Complex64, z: Complex64) -> Complex64 {
    (nu * z.ln() - 0.25 * z * z).exp()
}

/// Asymptotic route anywhere off the origin, using the connection formulas
/// `D_ν(z) = e^{±iπν} D_ν(-z) + √(2π)/Γ(-ν) e^{±iπ(ν+1)/2} D_{-ν-1}(∓iz)`
/// with the upper sign for `arg z > π/2` and the lower for `arg z < -π/2`.
fn asymptotic_any_sector(nu: Complex64, z: Complex64) -> Option<(Complex64, f64)> {
    let arg = z.arg();
    if arg.abs() <= FRAC_PI_2 {
        return asymptotic_right(nu, z);
    }
    let sign = if arg > 0.0 { 1.0 } else { -1.0 };
    let (d_neg, e1) = asymptotic_right(nu, -z)?;
    let (d_rot, e2) = asymptotic_right(-nu - 1.0, -sign * I * z)?;
    let c1 = (sign * I * PI * nu).exp();
    let c2 = (2.0 * PI).sqrt() * rgamma(-nu) * (sign * I * PI * (nu + 1.0) * 0.5).exp();
    let (t1, t2) = (c1 * d_neg, c2 * d_rot);
    let value = t1 + t2;
    let est = (e1 * t1.norm() + e2 * t2.norm()) / value.norm().max(f64::MIN_POSITIVE);
    (est <= 1e3 * ASYMPTOTIC_TOL).then_some((value, est))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn order_zero_is_gaussian() {
        for z in [c(0.3, 0.0), c(2.0, 1.0), c(-4.0, 3.0), c(7.0, -7.0), c(0.0, 12.0)] {
            let got = pcf_d(c(0.0, 0.0), z).unwrap();
            let want = (-0.25 * z * z).exp();
            assert!((got - want).norm() <= 1e-12 * want.norm().max(1.0), "z = {z}");
        }
    }

    #[test]
    fn order_one() {
        let got = pcf_d(c(1.0, 0.0), c(2.0, 0.0)).unwrap();
        assert!((got - c(2.0 * (-1.0f64).exp(), 0.0)).norm() < 1e-13);
    }

    #[test]
    fn routes_agree_at_the_switch() {
        // Same point through the continuation and through the asymptotic
        // expansion, on the rays used by the sweep solver.
        let nu = c(-1.0, 1.0);
        for arg in [-PI / 4.0, 3.0 * PI / 4.0, PI / 4.0, -3.0 * PI / 4.0] {
            let z = Complex64::from_polar(9.0, arg);
            let (a, _) = continuation(nu, z).unwrap();
            let (b, _) = asymptotic_any_sector(nu, z).unwrap();
            assert!((a - b).norm() <= 1e-11 * a.norm(), "arg {arg}: {a} vs {b}");
        }
    }

    #[test]
    fn derivative_matches_recurrence() {
        let nu = c(0.5, 2.0);
        for z in [c(0.7, -0.7), c(3.0, -3.0), c(-6.0, 6.0)] {
            let (w, dw) = pcf_d_with_derivative(nu, z).unwrap();
            let wm1 = pcf_d(nu - 1.0, z).unwrap();
            let resid = dw + 0.5 * z * w - nu * wm1;
            assert!(resid.norm() < 1e-9 * (1.0 + dw.norm()), "z = {z}");
        }
    }

    #[test]
    fn nonfinite_input_is_rejected() {
        assert!(pcf_d(c(f64::NAN, 0.0), c(1.0, 0.0)).is_err());
    }
}
