#![allow(dead_code)]

use glauber_core::scenario::{Sample, Scenario};
use glauber_core::{CMatrix, Complex64};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Piecewise-linear drive on `[0, t_end]` with random knots.
pub fn random_tabulated(rng: &mut StdRng, knots: usize, t_end: f64) -> Scenario {
    let samples = (0..knots)
        .map(|k| Sample {
            t: t_end * k as f64 / (knots - 1) as f64,
            splitting: rng.gen_range(-2.0..2.0),
            coupling: Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
        })
        .collect();
    Scenario::tabulated(samples).unwrap()
}

pub fn random_unit_pair(rng: &mut StdRng) -> (Complex64, Complex64) {
    let v: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
    let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    (Complex64::new(v[0] / n, v[1] / n), Complex64::new(v[2] / n, v[3] / n))
}

pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|k| lo + (hi - lo) * k as f64 / (n - 1) as f64).collect()
}

pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `S_z`, `S_+` for spin `two_s/2` in the basis `m = s, …, -s`, from the
/// angular-momentum formulas.
pub fn spin_matrices(two_s: u32) -> (CMatrix, CMatrix) {
    let s = 0.5 * two_s as f64;
    let dim = two_s as usize + 1;
    let m_of = |i: usize| s - i as f64;
    let sz = CMatrix::from_fn(dim, dim, |i, j| {
        if i == j {
            Complex64::new(m_of(i), 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    // S+|m⟩ = √(s(s+1) - m(m+1)) |m+1⟩, and |m+1⟩ sits one row up
    let sp = CMatrix::from_fn(dim, dim, |i, j| {
        if i + 1 == j {
            let m = m_of(j);
            Complex64::new((s * (s + 1.0) - m * (m + 1.0)).sqrt(), 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    (sz, sp)
}

/// `exp(-i t (Ω S_z + ω S_+ + ω* S_-))`.
pub fn spin_expm(two_s: u32, splitting: f64, coupling: Complex64, t: f64) -> CMatrix {
    let (sz, sp) = spin_matrices(two_s);
    let sm = sp.adjoint();
    let h = sz * Complex64::new(splitting, 0.0) + sp * coupling + sm * coupling.conj();
    (h * Complex64::new(0.0, -t)).exp()
}
