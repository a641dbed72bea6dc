//! Complex special functions for the exact linear-sweep propagator.

mod gamma;
mod pcf;

pub use gamma::{gamma_complex, rgamma};
pub use pcf::{pcf_d, pcf_d_with_derivative};
