use std::f64::consts::PI;

use crate::{Complex64, Error, Result};

const LANCZOS_G: f64 = 607.0 / 128.0;

const LANCZOS: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_923_517,
    -59.597_960_355_475_491_248,
    14.136_097_974_741_747_174,
    -0.491_913_816_097_620_199_78,
    0.339_946_499_848_118_886_99e-4,
    0.465_236_289_270_485_756_65e-4,
    -0.983_744_753_048_795_646_77e-4,
    0.158_088_703_224_912_488_84e-3,
    -0.210_264_441_724_104_883_19e-3,
    0.217_439_618_115_212_643_20e-3,
    -0.164_318_106_536_763_890_22e-3,
    0.844_182_239_838_527_432_93e-4,
    -0.261_908_384_015_814_086_70e-4,
    0.368_991_826_595_316_227_04e-5,
];

const POLE_TOL: f64 = 1e-14;

fn is_pole(z: Complex64) -> bool {
    z.im.abs() < POLE_TOL && z.re < POLE_TOL && (z.re - z.re.round()).abs() < POLE_TOL
}

/// `Γ(z)` for complex `z`, via a 15-term Lanczos sum and the reflection
/// formula for `Re z < 1/2`.
pub fn gamma_complex(z: Complex64) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::param("z", "must be finite"));
    }
    if is_pole(z) {
        return Err(Error::Pole { re: z.re, im: z.im });
    }
    Ok(gamma_unchecked(z))
}

/// `1/Γ(z)`, which is entire: returns exactly zero on the poles of `Γ`.
pub fn rgamma(z: Complex64) -> Complex64 {
    if is_pole(z) {
        Complex64::new(0.0, 0.0)
    } else {
        gamma_unchecked(z).inv()
    }
}

fn gamma_unchecked(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // Γ(z) Γ(1 - z) = π / sin(π z)
        Complex64::new(PI, 0.0) / (sin_pi(z) * lanczos(Complex64::new(1.0, 0.0) - z))
    } else {
        lanczos(z)
    }
}

fn lanczos(z: Complex64) -> Complex64 {
    let zm1 = z - 1.0;
    let mut sum = Complex64::new(LANCZOS[0], 0.0);
    for (k, c) in LANCZOS.iter().enumerate().skip(1) {
        sum += *c / (zm1 + k as f64);
    }
    let t = zm1 + LANCZOS_G + 0.5;
    let log = (zm1 + 0.5) * t.ln() - t + sum.ln() + 0.5 * (2.0 * PI).ln();
    log.exp()
}

/// `sin(π z)` with the real part reduced first, so integers stay exact.
fn sin_pi(z: Complex64) -> Complex64 {
    let (s, c) = sincos_pi(z.re);
    let y = PI * z.im;
    Complex64::new(s * y.cosh(), c * y.sinh())
}

fn sincos_pi(x: f64) -> (f64, f64) {
    let r = x - 2.0 * (x / 2.0).round(); // r in [-1, 1]
    let (s, c) = (PI * r).sin_cos();
    if r == r.round() {
        // exact zeros of sin at integers
        (0.0, c.round())
    } else {
        (s, c)
    }
}
