//! Dormand-Prince 5(4) integrator with step-size control and the classical
//! fourth-order continuous extension.
//!
//! The state is a fixed-size real vector; complex systems are integrated on
//! their real and imaginary parts. A run may be split at breakpoints (kinks
//! of the right-hand side), where the integrator restarts without stepping
//! across the kink.

use crate::{Error, Result};

const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;

const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const A71: f64 = 35.0 / 384.0;
const A73: f64 = 500.0 / 1113.0;
const A74: f64 = 125.0 / 192.0;
const A75: f64 = -2187.0 / 6784.0;
const A76: f64 = 11.0 / 84.0;

const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

const D1: f64 = -12715105075.0 / 11282082432.0;
const D3: f64 = 87487479700.0 / 32700410799.0;
const D4: f64 = -10690763975.0 / 1880347072.0;
const D5: f64 = 701980252875.0 / 199316789632.0;
const D6: f64 = -1453857185.0 / 822651844.0;
const D7: f64 = 69997945.0 / 29380423.0;

const SAFETY: f64 = 0.9;
const MIN_FACTOR: f64 = 0.2;
const MAX_FACTOR: f64 = 10.0;
const MAX_STEPS: usize = 5_000_000;

/// Error-control settings.
#[derive(Debug, Clone, Copy)]
pub struct Tolerance {
    pub rtol: f64,
    pub atol: f64,
}

impl Tolerance {
    pub fn uniform(tol: f64) -> Self {
        Tolerance {
            rtol: tol,
            atol: tol,
        }
    }
}

/// One accepted step with its interpolation coefficients.
#[derive(Debug, Clone)]
struct Segment<const D: usize> {
    t0: f64,
    h: f64,
    rcont: [[f64; D]; 5],
}

impl<const D: usize> Segment<D> {
    fn eval(&self, t: f64) -> [f64; D] {
        let theta = (t - self.t0) / self.h;
        let theta1 = 1.0 - theta;
        let r = &self.rcont;
        std::array::from_fn(|i| {
            r[0][i] + theta * (r[1][i] + theta1 * (r[2][i] + theta * (r[3][i] + theta1 * r[4][i])))
        })
    }
}

/// Dense solution over `[t_start, t_end]` (either direction).
#[derive(Debug, Clone)]
pub struct DenseSolution<const D: usize> {
    t_start: f64,
    t_end: f64,
    y_start: [f64; D],
    segments: Vec<Segment<D>>,
    steps_rejected: usize,
}

impl<const D: usize> DenseSolution<D> {
    pub fn t_start(&self) -> f64 {
        self.t_start
    }

    pub fn t_end(&self) -> f64 {
        self.t_end
    }

    pub fn steps_accepted(&self) -> usize {
        self.segments.len()
    }

    pub fn steps_rejected(&self) -> usize {
        self.steps_rejected
    }

    /// Interpolated state at `t`.
    pub fn at(&self, t: f64) -> Result<[f64; D]> {
        let (lo, hi) = if self.t_start <= self.t_end {
            (self.t_start, self.t_end)
        } else {
            (self.t_end, self.t_start)
        };
        if !(t >= lo && t <= hi) {
            return Err(Error::Range { t, lo, hi });
        }
        if t == self.t_start || self.segments.is_empty() {
            return Ok(self.y_start);
        }
        let forward = self.t_end > self.t_start;
        // segments are ordered in the direction of integration
        let idx = self.segments.partition_point(|s| {
            if forward {
                s.t0 + s.h < t
            } else {
                s.t0 + s.h > t
            }
        });
        let seg = &self.segments[idx.min(self.segments.len() - 1)];
        Ok(seg.eval(t))
    }

    /// State at the end of the run.
    pub fn final_state(&self) -> [f64; D] {
        self.segments
            .last()
            .map(|s| s.eval(s.t0 + s.h))
            .unwrap_or(self.y_start)
    }
}

/// Integrates `y' = f(t, y)` from `t_start` to `t_end`, restarting at every
/// breakpoint strictly inside the interval.
pub fn integrate<const D: usize, F>(
    mut f: F,
    t_start: f64,
    t_end: f64,
    y0: [f64; D],
    tol: Tolerance,
    breakpoints: &[f64],
) -> Result<DenseSolution<D>>
where
    F: FnMut(f64, &[f64; D]) -> Result<[f64; D]>,
{
    let dir = if t_end >= t_start { 1.0 } else { -1.0 };
    let mut stops: Vec<f64> = breakpoints
        .iter()
        .copied()
        .filter(|&b| (b - t_start) * dir > 0.0 && (t_end - b) * dir > 0.0)
        .collect();
    stops.sort_by(|a, b| (a * dir).total_cmp(&(b * dir)));
    stops.push(t_end);

    let mut sol = DenseSolution {
        t_start,
        t_end,
        y_start: y0,
        segments: Vec::new(),
        steps_rejected: 0,
    };
    let mut t = t_start;
    let mut y = y0;
    let mut h_guess = None;
    for stop in stops {
        let (ty, h_last) = integrate_piece(&mut f, t, stop, y, tol, h_guess, &mut sol)?;
        t = stop;
        y = ty;
        h_guess = Some(h_last);
    }
    Ok(sol)
}

fn norm_err<const D: usize>(err: &[f64; D], y0: &[f64; D], y1: &[f64; D], tol: Tolerance) -> f64 {
    let mut acc = 0.0;
    for i in 0..D {
        let sc = tol.atol + tol.rtol * y0[i].abs().max(y1[i].abs());
        acc += (err[i] / sc).powi(2);
    }
    (acc / D as f64).sqrt()
}

fn axpy<const D: usize>(y: &[f64; D], h: f64, terms: &[(f64, &[f64; D])]) -> [f64; D] {
    std::array::from_fn(|i| y[i] + h * terms.iter().map(|(c, k)| c * k[i]).sum::<f64>())
}

fn integrate_piece<const D: usize, F>(
    f: &mut F,
    t0: f64,
    t1: f64,
    y0: [f64; D],
    tol: Tolerance,
    h_guess: Option<f64>,
    sol: &mut DenseSolution<D>,
) -> Result<([f64; D], f64)>
where
    F: FnMut(f64, &[f64; D]) -> Result<[f64; D]>,
{
    let span = t1 - t0;
    if span == 0.0 {
        return Ok((y0, 0.0));
    }
    let dir = span.signum();
    let mut t = t0;
    let mut y = y0;
    let mut k1 = f(t, &y)?;
    let mut h = match h_guess {
        Some(g) if g != 0.0 => g.abs().min(span.abs()) * dir,
        _ => initial_step(f, t, &y, &k1, tol, span)?,
    };
    let mut last_h = h;
    let mut steps = 0usize;
    loop {
        let remaining = t1 - t;
        if remaining * dir <= 0.0 {
            return Ok((y, last_h));
        }
        let last = (h * dir) >= remaining * dir;
        if last {
            h = remaining;
        }
        steps += 1;
        if steps > MAX_STEPS {
            return Err(Error::Stiffness { t, h });
        }
        if h.abs() <= 1e-14 * t.abs().max(1.0) {
            return Err(Error::Stiffness { t, h });
        }

        let k2 = f(t + C2 * h, &axpy(&y, h, &[(A21, &k1)]))?;
        let k3 = f(t + C3 * h, &axpy(&y, h, &[(A31, &k1), (A32, &k2)]))?;
        let k4 = f(t + C4 * h, &axpy(&y, h, &[(A41, &k1), (A42, &k2), (A43, &k3)]))?;
        let k5 = f(
            t + C5 * h,
            &axpy(&y, h, &[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)]),
        )?;
        let k6 = f(
            t + h,
            &axpy(&y, h, &[(A61, &k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)]),
        )?;
        let y_new = axpy(&y, h, &[(A71, &k1), (A73, &k3), (A74, &k4), (A75, &k5), (A76, &k6)]);
        let t_new = if last { t1 } else { t + h };
        let k7 = f(t_new, &y_new)?;
        let err: [f64; D] = std::array::from_fn(|i| {
            h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i])
        });
        let e = norm_err(&err, &y, &y_new, tol);

        if e <= 1.0 {
            let ydiff: [f64; D] = std::array::from_fn(|i| y_new[i] - y[i]);
            let bspl: [f64; D] = std::array::from_fn(|i| h * k1[i] - ydiff[i]);
            let rcont = [
                y,
                ydiff,
                bspl,
                std::array::from_fn(|i| ydiff[i] - h * k7[i] - bspl[i]),
                std::array::from_fn(|i| {
                    h * (D1 * k1[i] + D3 * k3[i] + D4 * k4[i] + D5 * k5[i] + D6 * k6[i] + D7 * k7[i])
                }),
            ];
            sol.segments.push(Segment { t0: t, h, rcont });
            last_h = h;
            t = t_new;
            y = y_new;
            k1 = k7;
            if last {
                return Ok((y, last_h));
            }
            let fac = if e == 0.0 {
                MAX_FACTOR
            } else {
                (SAFETY * e.powf(-0.2)).clamp(MIN_FACTOR, MAX_FACTOR)
            };
            h *= fac;
        } else {
            sol.steps_rejected += 1;
            h *= (SAFETY * e.powf(-0.2)).clamp(MIN_FACTOR, 1.0);
        }
    }
}

/// Starting step from the usual two-derivative estimate.
fn initial_step<const D: usize, F>(
    f: &mut F,
    t: f64,
    y: &[f64; D],
    k1: &[f64; D],
    tol: Tolerance,
    span: f64,
) -> Result<f64>
where
    F: FnMut(f64, &[f64; D]) -> Result<[f64; D]>,
{
    let dir = span.signum();
    let scale: [f64; D] = std::array::from_fn(|i| tol.atol + tol.rtol * y[i].abs());
    let rms = |v: &[f64; D]| {
        (v.iter().zip(&scale).map(|(x, s)| (x / s).powi(2)).sum::<f64>() / D as f64).sqrt()
    };
    let (d0, d1) = (rms(y), rms(k1));
    let h0 = if d0 < 1e-5 || d1 < 1e-5 { 1e-6 } else { 0.01 * d0 / d1 };
    let h0 = h0.min(span.abs());
    let y1 = axpy(y, h0 * dir, &[(1.0, k1)]);
    let k2 = f(t + h0 * dir, &y1)?;
    let diff: [f64; D] = std::array::from_fn(|i| k2[i] - k1[i]);
    let d2 = rms(&diff) / h0;
    let h1 = if d1.max(d2) <= 1e-15 {
        (h0 * 1e-3).max(1e-6)
    } else {
        (0.01 / d1.max(d2)).powf(0.2)
    };
    Ok((100.0 * h0).min(h1).min(span.abs()) * dir)
}
