//! Spin-`s` propagator as a polynomial in `(a, a*, b, b*)`.
//!
//! With basis index `i = s - m` (row) and `j = s - m'` (column), the entry is
//! `Σ_μ (-1)^μ C(2s-j, μ) C(j, i-μ) √(C(2s, j)/C(2s, i))
//!   a^{2s-j-μ} a*^{i-μ} b^{j-i+μ} b*^μ`
//! for `max(0, i-j) <= μ <= min(2s-j, i)`, which is the usual Wigner-type sum
//! with the factorials regrouped into binomials.
//!
//! The alternating sum cancels badly as `s` grows (terms of size
//! `C(2s, s)² |ab|^{2s}` against a result of order one), so above
//! [`EXACT_TWO_S`] the same group element is built from its axis-angle form:
//! `[[a, b], [-b*, a*]] = exp(-2iφ n·S)` with `cos φ = Re a` and
//! `n sin φ = -(Im b, Re b, Im a)`, and `exp(-2iφ n·S)` in spin `s` comes
//! from the eigendecomposition of the Hermitian `n·S`.

use super::AmplitudePair;
use crate::{CMatrix, Complex64};

/// Largest `2s` evaluated with exact integer binomials.
const EXACT_TWO_S: u32 = 20;

#[derive(Debug, Clone, PartialEq)]
pub struct SpinPropagator {
    /// `2s`.
    pub two_s: u32,
    /// `(2s+1)×(2s+1)` matrix, rows and columns ordered `m = s, s-1, …, -s`.
    pub matrix: CMatrix,
}

impl SpinPropagator {
    pub fn spin(&self) -> f64 {
        0.5 * self.two_s as f64
    }

    pub fn dim(&self) -> usize {
        self.two_s as usize + 1
    }

    /// `max |(U†U - I)_{ij}|`.
    pub fn unitarity_defect(&self) -> f64 {
        let prod = self.matrix.adjoint() * &self.matrix;
        let n = self.dim();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((prod[(i, j)] - target).norm());
            }
        }
        worst
    }
}

fn binomial_u64(n: u32, k: u32) -> u64 {
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = 1u64;
    for r in 1..=k {
        acc = acc * (n - k + r) / r;
    }
    acc
}

/// `U_s(a, b)` with `two_s = 2s`.
pub fn spin_propagator(two_s: u32, pair: &AmplitudePair) -> SpinPropagator {
    let n = two_s as usize;
    let matrix = if two_s <= EXACT_TWO_S {
        exact_path(two_s, pair)
    } else {
        axis_angle_path(two_s, pair)
    };
    debug_assert_eq!(matrix.nrows(), n + 1);
    SpinPropagator { two_s, matrix }
}

fn powers(z: Complex64, n: usize) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(n + 1);
    let mut acc = Complex64::new(1.0, 0.0);
    for _ in 0..=n {
        out.push(acc);
        acc *= z;
    }
    out
}

fn exact_path(two_s: u32, pair: &AmplitudePair) -> CMatrix {
    let n = two_s as usize;
    let pa = powers(pair.a, n);
    let pac = powers(pair.a.conj(), n);
    let pb = powers(pair.b, n);
    let pbc = powers(pair.b.conj(), n);
    let binom_2s: Vec<f64> = (0..=two_s).map(|k| binomial_u64(two_s, k) as f64).collect();
    CMatrix::from_fn(n + 1, n + 1, |i, j| {
        let norm = (binom_2s[j] / binom_2s[i]).sqrt();
        let mut acc = Complex64::new(0.0, 0.0);
        for mu in i.saturating_sub(j)..=(n - j).min(i) {
            let c = binomial_u64((n - j) as u32, mu as u32) * binomial_u64(j as u32, (i - mu) as u32);
            let sign = if mu % 2 == 0 { 1.0 } else { -1.0 };
            acc += sign * c as f64 * pa[n - j - mu] * pac[i - mu] * pb[j + mu - i] * pbc[mu];
        }
        acc * norm
    })
}

/// `(S_z, S_+)` in the basis `m = s, …, -s`.
pub fn spin_matrices(two_s: u32) -> (CMatrix, CMatrix) {
    let n = two_s as usize;
    let s = 0.5 * two_s as f64;
    let m_of = |i: usize| s - i as f64;
    let zero = Complex64::new(0.0, 0.0);
    let sz = CMatrix::from_fn(n + 1, n + 1, |i, j| {
        if i == j {
            Complex64::new(m_of(i), 0.0)
        } else {
            zero
        }
    });
    let sp = CMatrix::from_fn(n + 1, n + 1, |i, j| {
        if i + 1 == j {
            let m = m_of(j);
            Complex64::new((s * (s + 1.0) - m * (m + 1.0)).sqrt(), 0.0)
        } else {
            zero
        }
    });
    (sz, sp)
}

fn axis_angle_path(two_s: u32, pair: &AmplitudePair) -> CMatrix {
    let n = two_s as usize;
    let w = [-pair.b.im, -pair.b.re, -pair.a.im];
    let sin_phi = (w[0] * w[0] + w[1] * w[1] + w[2] * w[2]).sqrt();
    let phi = sin_phi.atan2(pair.a.re);
    let (sz, sp) = spin_matrices(two_s);
    if sin_phi == 0.0 {
        return CMatrix::from_diagonal(&sz.diagonal().map(|m| Complex64::from_polar(1.0, -2.0 * phi * m.re)));
    }
    let sm = sp.adjoint();
    let half = Complex64::new(0.5, 0.0);
    let sx = (&sp + &sm) * half;
    let sy = (&sp - &sm) * Complex64::new(0.0, -0.5);
    let gen = sx * Complex64::new(w[0] / sin_phi, 0.0)
        + sy * Complex64::new(w[1] / sin_phi, 0.0)
        + sz * Complex64::new(w[2] / sin_phi, 0.0);
    let eig = gen.symmetric_eigen();
    let phases = eig.eigenvalues.map(|m| Complex64::from_polar(1.0, -2.0 * phi * m));
    let v = &eig.eigenvectors;
    debug_assert_eq!(v.nrows(), n + 1);
    v * CMatrix::from_diagonal(&phases) * v.adjoint()
}
