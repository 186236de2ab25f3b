//! Exact arithmetic in cyclotomic fields ℚ(ζ_N), together with the special
//! values needed for character sums at odd p-adic places: quadratic Gauss
//! sums, exact positive √p, values ψ(y) of the fixed additive character,
//! and recognition of eighth roots of unity.

pub mod cyc;
pub mod error;
pub mod special;

pub use cyc::{CycNum, MAX_LEVEL};
pub use error::{CycError, Result};
pub use special::{as_mu8, e_p_frac, gauss_sum, mu8_cyc, psi_value, sqrt_p, sqrt_p_pow};
