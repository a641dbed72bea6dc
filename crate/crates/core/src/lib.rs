//! Exact time evolution of a quantum harmonic oscillator bilinearly coupled to
//! a Glauber amplifier (an inverted oscillator), and of two coupled standard
//! oscillators for comparison.
//!
//! Both Hamiltonians conserve the total excitation number, so the dynamics
//! splits into finite blocks of dimension `N + 1`. Inside each block the
//! Jordan-Schwinger map turns the two-mode problem into a spin `N/2` driven by
//! the same time-dependent field, and the spin-`s` propagator is an explicit
//! polynomial in the two Cayley-Klein amplitudes `(a, b)` of the spin-1/2
//! problem. Everything in this crate is built on that reduction:
//!
//! * [`scenario`] describes the time dependence of the longitudinal field
//!   `Ω(t)` and the transverse coupling `ω(t)`.
//! * [`specfun`] provides the complex gamma function and Weber parabolic
//!   cylinder functions needed by the exact linear-sweep solution.
//! * [`su2`] solves the spin-1/2 problem (closed forms and an adaptive
//!   integrator) and lifts `(a, b)` to any spin.
//! * [`oscillator`] maps spin propagators back onto the two-mode Fock blocks.
//! * [`observables`] evaluates expectation values, energy traces and
//!   transition probabilities for NOON-type initial states.
//!
//! Units: `ħ = 1`; energies and angular frequencies share units.

pub mod closed_form;
pub mod error;
pub mod fock;
pub mod observables;
pub mod ode;
pub mod oscillator;
pub mod scenario;
pub mod specfun;
pub mod su2;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// Dense complex matrix used for propagators and subspace operators.
pub type CMatrix = nalgebra::DMatrix<Complex64>;
/// Dense complex column vector.
pub type CVector = nalgebra::DVector<Complex64>;

pub(crate) const I: Complex64 = Complex64::new(0.0, 1.0);
